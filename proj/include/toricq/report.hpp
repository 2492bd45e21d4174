#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toricq/css.hpp"

namespace toricq {

enum class ClaimId { Dim, Dist, Dual, Nest, CssK, CssDz, CssDx, Purity };

const char* claim_name(ClaimId id);

enum class ClaimStatus { Agree, Disagree, Unverified };

const char* status_name(ClaimStatus s);

/// AGREE and DISAGREE are only ever derived from exact measurements;
/// a bound-only measurement yields UNVERIFIED regardless of its value.
ClaimStatus claim_status(long long predicted, long long measured, bool exact);

/// Verification target: a code instance (q, r, b1) or a CSS family
/// instance (q, r, b1, b2). Code instances order before CSS instances.
struct Instance {
  bool css = false;
  int q = 0;
  int r = 0;
  int b1 = 0;
  int b2 = 0;

  friend auto operator<=>(const Instance&, const Instance&) = default;
};

struct ClaimRow {
  ClaimId id = ClaimId::Dim;
  Instance inst;
  bool boolean_claim = false;  // render predicted/measured as true/false
  long long predicted = 0;
  long long measured = 0;
  bool exact = true;
  ClaimStatus status = ClaimStatus::Agree;
  std::string detail;  // witness dimensions, enumeration counts
};

struct SuiteConfig {
  std::vector<Instance> instances;
  unsigned long long budget = 100'000'000ULL;
  std::uint64_t seed = 0xA5C3;
  int workers = 1;
};

struct FieldProvenance {
  int q = 0, p = 0, m = 0;
  std::string modulus;  // comma-separated, low degree first
  int generator = 0;
};

struct VerificationReport {
  std::string version;
  unsigned long long budget = 0;
  std::uint64_t seed = 0;
  std::vector<FieldProvenance> fields;
  std::vector<ClaimRow> rows;
};

/// DIM, DIST and DUAL rows for one code instance.
std::vector<ClaimRow> verify_code_claims(int q, int r, int b,
                                         const ScanOptions& opt = {});

/// NEST row, plus CSS-K, CSS-DZ, CSS-DX and PURITY when nesting holds.
std::vector<ClaimRow> verify_css_claims(int q, int r, int b1, int b2,
                                        const ScanOptions& opt = {});

/// Runs every instance (sorted, deduplicated) and assembles the report.
/// A pure function of the config: identical bytes for any worker count.
VerificationReport run_suite(const SuiteConfig& config);

void write_csv(std::ostream& os, const VerificationReport& report);
void write_json(std::ostream& os, const VerificationReport& report);
void write_table(std::ostream& os, const VerificationReport& report);

/// Line-oriented instance list: `q r b` or `q r b1 b2`, `#` comments.
SuiteConfig parse_config(std::istream& is);

/// Every valid (q, r, b) and family (q, r, b1, b2) for q in {3, 4, 5}.
std::vector<Instance> default_instances();

}  // namespace toricq
