#include "toricq/report.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "toricq/errors.hpp"
#include "toricq/version.hpp"

namespace toricq {

const char* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::Dim: return "DIM";
    case ClaimId::Dist: return "DIST";
    case ClaimId::Dual: return "DUAL";
    case ClaimId::Nest: return "NEST";
    case ClaimId::CssK: return "CSS-K";
    case ClaimId::CssDz: return "CSS-DZ";
    case ClaimId::CssDx: return "CSS-DX";
    case ClaimId::Purity: return "PURITY";
  }
  return "?";
}

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Agree: return "AGREE";
    case ClaimStatus::Disagree: return "DISAGREE";
    case ClaimStatus::Unverified: return "UNVERIFIED(budget)";
  }
  return "?";
}

ClaimStatus claim_status(long long predicted, long long measured, bool exact) {
  if (!exact) return ClaimStatus::Unverified;
  return predicted == measured ? ClaimStatus::Agree : ClaimStatus::Disagree;
}

namespace {

std::string scan_detail(const DistanceResult& d) {
  std::string out = "enumerated=" + std::to_string(d.enumerated);
  if (!d.exact) out += " bound-only";
  return out;
}

ClaimRow make_row(ClaimId id, Instance inst, bool boolean_claim,
                  long long predicted, long long measured, bool exact,
                  std::string detail = {}) {
  ClaimRow row;
  row.id = id;
  row.inst = inst;
  row.boolean_claim = boolean_claim;
  row.predicted = predicted;
  row.measured = measured;
  row.exact = exact;
  row.status = claim_status(predicted, measured, exact);
  row.detail = std::move(detail);
  return row;
}

}  // namespace

std::vector<ClaimRow> verify_code_claims(int q, int r, int b,
                                         const ScanOptions& opt) {
  Instance inst{false, q, r, b, 0};
  std::vector<ClaimRow> rows;

  PredictedParams pred = predicted_params(q, r, b);
  LinearCode code = code_from_polytope(q, r, b);
  rows.push_back(make_row(ClaimId::Dim, inst, false, pred.k, code.k(), true,
                          "lattice_points=" +
                              std::to_string(code.source()->size())));

  DistanceResult d = min_weight(code, opt);
  rows.push_back(
      make_row(ClaimId::Dist, inst, false, pred.d, d.value, d.exact,
               scan_detail(d)));

  DualRuleCheck dual = check_dual_polytope_rule(q, r, b);
  rows.push_back(make_row(
      ClaimId::Dual, inst, true, 1, dual.agrees ? 1 : 0, true,
      "claimed_dim=" + std::to_string(dual.claimed.size()) +
          " exact_dim=" + std::to_string(dual.exact_dual.k())));
  return rows;
}

std::vector<ClaimRow> verify_css_claims(int q, int r, int b1, int b2,
                                        const ScanOptions& opt) {
  Instance inst{true, q, r, b1, b2};
  std::vector<ClaimRow> rows;
  FamilyBuild fb = build_family_code(q, r, b1, b2, opt);

  if (fb.failure) {
    const NestingFailure& f = *fb.failure;
    std::ostringstream detail;
    detail << "dual1_dim=" << f.dim_dual1 << " c2_dim=" << f.dim_c2
           << " stacked_rank=" << f.rank_c2_with_dual1
           << "; dual2_dim=" << f.dim_dual2 << " c1_dim=" << f.dim_c1
           << " stacked_rank=" << f.rank_c1_with_dual2;
    rows.push_back(
        make_row(ClaimId::Nest, inst, true, 1, 0, true, detail.str()));
    return rows;
  }

  const AsymmetricCssCode& code = *fb.code;
  const FamilyParams& pred = fb.predicted;
  rows.push_back(make_row(ClaimId::Nest, inst, true, 1, 1, true));
  rows.push_back(make_row(ClaimId::CssK, inst, false, pred.predicted_k,
                          code.k, true));
  rows.push_back(make_row(ClaimId::CssDz, inst, false, pred.predicted_dz,
                          code.dz.value, code.dz.exact,
                          scan_detail(code.dz)));
  rows.push_back(make_row(ClaimId::CssDx, inst, false, pred.predicted_dx,
                          code.dx.value, code.dx.exact,
                          scan_detail(code.dx)));
  rows.push_back(make_row(ClaimId::Purity, inst, true,
                          pred.purity_predicted ? 1 : 0,
                          (code.pure_x && code.pure_z) ? 1 : 0,
                          code.purity_exact));
  return rows;
}

VerificationReport run_suite(const SuiteConfig& config) {
  std::vector<Instance> instances = config.instances;
  std::sort(instances.begin(), instances.end());
  instances.erase(std::unique(instances.begin(), instances.end()),
                  instances.end());

  VerificationReport report;
  report.version = kVersion;
  report.budget = config.budget;
  report.seed = config.seed;

  std::set<int> orders;
  for (const Instance& inst : instances) orders.insert(inst.q);
  for (int q : orders) {
    GfPtr f = field_for_order(q);
    std::string mod;
    for (std::size_t i = 0; i < f->modulus().size(); ++i)
      mod += (i ? "," : "") + std::to_string(f->modulus()[i]);
    report.fields.push_back(
        {f->q(), f->p(), f->m(), mod, f->generator()});
  }

  ScanOptions opt;
  opt.budget = config.budget;
  opt.seed = config.seed;
  opt.workers = config.workers;

  // Instances run independently; rows are gathered in instance order, so
  // the report never depends on completion order.
  std::vector<std::future<std::vector<ClaimRow>>> slots;
  slots.reserve(instances.size());
  bool parallel = config.workers != 1 && instances.size() > 1;
  for (const Instance& inst : instances) {
    auto task = [inst, opt] {
      return inst.css
                 ? verify_css_claims(inst.q, inst.r, inst.b1, inst.b2, opt)
                 : verify_code_claims(inst.q, inst.r, inst.b1, opt);
    };
    slots.push_back(std::async(
        parallel ? std::launch::async : std::launch::deferred, task));
  }
  for (auto& slot : slots) {
    std::vector<ClaimRow> rows = slot.get();
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

namespace {

const char* kClaimCatalog[] = {
    "DIM: predicted dimension ((q-2)/r+1)*q/2 + b*(q-1) vs measured "
    "generator rank",
    "DIST: predicted distance (q-1-a)*(q-1) with a = b+(q-2)/r vs measured "
    "minimum weight",
    "DUAL: dual of the code at shift b claimed to be the code at shift "
    "(r-1)(q-2)/r - b vs the exact nullspace dual",
    "NEST: dual of each family code claimed to lie inside the partner code",
    "CSS-K: predicted quantum dimension ((q-2)/r+1)*q/2 + (b1+b2)*(q-1) vs "
    "measured k1+k2-n",
    "CSS-DZ: predicted (q-1-min(b1,b2))*(q-1) vs larger measured relative "
    "weight",
    "CSS-DX: predicted (q-1-max(b1,b2))*(q-1) vs smaller measured relative "
    "weight",
    "PURITY: predicted purity (b1+b2 != (r-1)(q-2)/r) vs both measured "
    "purity flags",
};

std::string value_text(const ClaimRow& row, long long v) {
  if (row.boolean_claim) return v ? "true" : "false";
  return std::to_string(v);
}

void write_header_comments(std::ostream& os,
                           const VerificationReport& report) {
  os << "# toric code verification report\n";
  os << "# version: " << report.version << "\n";
  os << "# budget: " << report.budget << "\n";
  os << "# seed: " << report.seed << "\n";
  for (const FieldProvenance& f : report.fields)
    os << "# field q=" << f.q << " p=" << f.p << " m=" << f.m
       << " modulus=" << f.modulus << " generator=" << f.generator << "\n";
  for (const char* line : kClaimCatalog) os << "# claim " << line << "\n";
}

}  // namespace

void write_csv(std::ostream& os, const VerificationReport& report) {
  write_header_comments(os, report);
  os << "claim,q,r,b1,b2,predicted,measured,exact,status,detail\n";
  for (const ClaimRow& row : report.rows) {
    os << claim_name(row.id) << "," << row.inst.q << "," << row.inst.r << ","
       << row.inst.b1 << ",";
    if (row.inst.css) os << row.inst.b2;
    os << "," << value_text(row, row.predicted) << ","
       << value_text(row, row.measured) << ","
       << (row.exact ? "true" : "false") << "," << status_name(row.status)
       << "," << row.detail << "\n";
  }
}

void write_json(std::ostream& os, const VerificationReport& report) {
  nlohmann::json j;
  j["version"] = report.version;
  j["budget"] = report.budget;
  j["seed"] = report.seed;
  j["fields"] = nlohmann::json::array();
  for (const FieldProvenance& f : report.fields)
    j["fields"].push_back({{"q", f.q},
                           {"p", f.p},
                           {"m", f.m},
                           {"modulus", f.modulus},
                           {"generator", f.generator}});
  j["claims"] = nlohmann::json::array();
  for (const char* line : kClaimCatalog) j["claims"].push_back(line);
  j["rows"] = nlohmann::json::array();
  for (const ClaimRow& row : report.rows) {
    nlohmann::json o;
    o["claim"] = claim_name(row.id);
    o["q"] = row.inst.q;
    o["r"] = row.inst.r;
    o["b1"] = row.inst.b1;
    if (row.inst.css) o["b2"] = row.inst.b2;
    if (row.boolean_claim) {
      o["predicted"] = row.predicted != 0;
      o["measured"] = row.measured != 0;
    } else {
      o["predicted"] = row.predicted;
      o["measured"] = row.measured;
    }
    o["exact"] = row.exact;
    o["status"] = status_name(row.status);
    o["detail"] = row.detail;
    j["rows"].push_back(o);
  }
  os << j.dump(2) << "\n";
}

void write_table(std::ostream& os, const VerificationReport& report) {
  os << std::left << std::setw(8) << "claim" << std::setw(16) << "instance"
     << std::setw(12) << "predicted" << std::setw(12) << "measured"
     << std::setw(7) << "exact" << "status\n";
  for (const ClaimRow& row : report.rows) {
    std::ostringstream inst;
    inst << row.inst.q << "," << row.inst.r << "," << row.inst.b1;
    if (row.inst.css) inst << "," << row.inst.b2;
    os << std::left << std::setw(8) << claim_name(row.id) << std::setw(16)
       << inst.str() << std::setw(12) << value_text(row, row.predicted)
       << std::setw(12) << value_text(row, row.measured) << std::setw(7)
       << (row.exact ? "yes" : "no") << status_name(row.status) << "\n";
  }
}

SuiteConfig parse_config(std::istream& is) {
  SuiteConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<long long> nums;
    long long v;
    while (ss >> v) nums.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": unexpected token '" + rest + "'");
    if (nums.empty()) continue;
    Instance inst;
    if (nums.size() == 3) {
      inst = {false, static_cast<int>(nums[0]), static_cast<int>(nums[1]),
              static_cast<int>(nums[2]), 0};
    } else if (nums.size() == 4) {
      inst = {true, static_cast<int>(nums[0]), static_cast<int>(nums[1]),
              static_cast<int>(nums[2]), static_cast<int>(nums[3])};
    } else {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 3 or 4 integers");
    }
    config.instances.push_back(inst);
  }
  return config;
}

std::vector<Instance> default_instances() {
  std::vector<Instance> out;
  for (int q : {3, 4, 5}) {
    for (int r = 1; r <= q - 2; ++r) {
      if ((q - 2) % r != 0) continue;
      int s = (q - 2) / r;
      for (int b = 0; b + s <= q - 2; ++b)
        out.push_back({false, q, r, b, 0});
      int bound = (r - 1) * (q - 2) / r;
      for (int b1 = 0; b1 <= bound; ++b1)
        for (int b2 = 0; b2 <= bound; ++b2)
          if (b1 + b2 >= bound) out.push_back({true, q, r, b1, b2});
    }
  }
  return out;
}

}  // namespace toricq
