#include "toricq/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

constexpr int kMaxQ = 1 << 16;
constexpr int kAddTableMaxQ = 256;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, low degree first, no
// trailing zeros (the zero polynomial is the empty vector).

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    // b is monic, so the quotient digit is just the leading coefficient.
    int c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      int v = a[shift + i] - c * b[i];
      a[shift + i] = ((v % p) + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), mod, p);
}

Poly poly_from_encoding(long long enc, int p) {
  Poly out;
  while (enc > 0) {
    out.push_back(static_cast<int>(enc % p));
    enc /= p;
  }
  return out;
}

Elem encoding_of(const Poly& a, int p) {
  long long enc = 0;
  long long scale = 1;
  for (int c : a) {
    enc += c * scale;
    scale *= p;
  }
  return static_cast<Elem>(enc);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long tail = 0; tail < count; ++tail) {
      Poly g = poly_from_encoding(tail, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

void Gf::init(int p, int m) {
  p_ = p;
  m_ = m;
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  q_ = static_cast<int>(q);
  xor_add_ = (p == 2);

  // First irreducible monic polynomial of degree m, scanning the
  // non-leading coefficients in increasing encoded order.
  for (long long tail = 0; tail < q; ++tail) {
    Poly f = poly_from_encoding(tail, p);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    Poly pa = poly_from_encoding(a, p);
    for (int& c : pa) c = (p - c) % p;
    neg_[a] = encoding_of(pa, p);
  }

  if (!xor_add_ && q_ <= kAddTableMaxQ) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a) {
      Poly pa = poly_from_encoding(a, p);
      pa.resize(m, 0);
      for (int b = 0; b < q_; ++b) {
        Poly pb = poly_from_encoding(b, p);
        pb.resize(m, 0);
        Poly s(m, 0);
        for (int i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % p;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = encoding_of(s, p);
      }
    }
  }

  auto slow_mul = [&](Elem a, Elem b) {
    return encoding_of(
        poly_mulmod(poly_from_encoding(a, p), poly_from_encoding(b, p),
                    modulus_, p),
        p);
  };

  // Least encoding of full multiplicative order.
  for (int cand = 1; cand < q_; ++cand) {
    Elem acc = static_cast<Elem>(cand);
    int order = 1;
    while (acc != 1) {
      acc = slow_mul(acc, static_cast<Elem>(cand));
      ++order;
    }
    if (order == q_ - 1) {
      gen_ = static_cast<Elem>(cand);
      break;
    }
  }

  antilog_.resize(q_ - 1);
  log_.assign(q_, -1);
  Elem acc = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    antilog_[i] = acc;
    log_[acc] = i;
    acc = slow_mul(acc, gen_);
  }

  trace_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    Elem frob = static_cast<Elem>(a);
    Poly sum(m, 0);
    for (int i = 0; i < m; ++i) {
      Poly digits = poly_from_encoding(frob, p);
      digits.resize(m, 0);
      for (int j = 0; j < m; ++j) sum[j] = (sum[j] + digits[j]) % p;
      // next Frobenius iterate
      Elem next = frob;
      for (int e = 1; e < p; ++e) next = slow_mul(next, frob);
      frob = next;
    }
    trace_[a] = encoding_of(sum, p);
  }
}

std::shared_ptr<const Gf> Gf::make(int p, int m) {
  if (!is_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw FieldError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw FieldError("field order exceeds the 2^16 guard");
  }

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Gf>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;

  auto field = std::shared_ptr<Gf>(new Gf());
  field->init(p, m);
  cache[{p, m}] = field;
  return field;
}

Elem Gf::add(Elem a, Elem b) const {
  if (xor_add_) return a ^ b;
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  int pa = a, pb = b, scale = 1, out = 0;
  for (int i = 0; i < m_; ++i) {
    out += ((pa % p_) + (pb % p_)) % p_ * scale;
    pa /= p_;
    pb /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Gf::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  int s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return antilog_[s];
}

Elem Gf::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Gf::pow(Elem base, long long e) const {
  if (base == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw FieldError("zero to a negative power");
  }
  long long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return antilog_[static_cast<std::size_t>(
      (static_cast<long long>(log_[base]) * r) % (q_ - 1))];
}

int Gf::log_of(Elem a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

Elem Gf::antilog(long long i) const {
  long long r = i % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return antilog_[static_cast<std::size_t>(r)];
}

GfPtr field_for_order(int q) {
  if (q < 2) throw FieldError("field order must be >= 2");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw FieldError("not a prime power: " + std::to_string(q));
  }
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw FieldError("not a prime power: " + std::to_string(q));
  return Gf::make(p, m);
}

}  // namespace toricq
