#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace toricq {

/// Canonical integer encoding of a field element: a = sum a_i alpha^i
/// encodes as sum a_i p^i, so 0 is the additive and 1 the multiplicative
/// identity and prime-subfield elements occupy [0, p).
using Elem = std::uint16_t;

/// Arithmetic context for GF(p^m) with q = p^m <= 2^16.
///
/// The defining polynomial is the first irreducible monic polynomial of
/// degree m over F_p when the non-leading coefficients are scanned in
/// increasing encoded order; the unit-group generator is the least encoding
/// of full multiplicative order. Both are deterministic, so encodings and
/// file formats are reproducible across runs.
///
/// Multiplication and inversion go through log/antilog tables over the
/// generator. Instances are immutable and safe to share across threads.
class Gf {
 public:
  /// Returns the (cached) context for GF(p^m).
  /// Throws FieldError for non-prime p, m < 1, or p^m > 2^16.
  static std::shared_ptr<const Gf> make(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  /// Coefficients of the defining polynomial, low degree first (length m+1).
  const std::vector<int>& modulus() const { return modulus_; }

  /// Least encoding that generates the unit group.
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws FieldError on 0
  Elem pow(Elem base, long long e) const;

  /// tr(a) = a + a^p + ... + a^(p^(m-1)); the result encodes an element of
  /// the prime subfield, i.e. lies in [0, p).
  Elem trace(Elem a) const { return trace_[a]; }

  /// Discrete log base generator(); throws FieldError on 0.
  int log_of(Elem a) const;
  /// generator() raised to the i-th power (i may be any integer).
  Elem antilog(long long i) const;

  bool same_field(const Gf& other) const {
    return p_ == other.p_ && m_ == other.m_;
  }

 private:
  Gf() = default;
  void init(int p, int m);

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  Elem gen_ = 0;
  bool xor_add_ = false;          // characteristic 2: addition is XOR
  std::vector<Elem> antilog_;     // size q-1
  std::vector<int> log_;          // size q, log_[0] = -1
  std::vector<Elem> neg_;         // size q
  std::vector<Elem> trace_;       // size q
  std::vector<Elem> add_table_;   // q*q, only built for small odd q
};

using GfPtr = std::shared_ptr<const Gf>;

/// Context for the field of order q; throws FieldError if q is not a
/// prime power within the guard.
GfPtr field_for_order(int q);

}  // namespace toricq
