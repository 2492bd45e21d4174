#include "toricq/distance.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <string>
#include <thread>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Rng {
  std::uint64_t state;
  std::uint64_t next() { return splitmix64(state); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// q^k, clamped to cap+1 on overflow.
unsigned long long pow_clamped(unsigned long long q, int k,
                               unsigned long long cap) {
  unsigned long long v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

// Walks message vectors in linear-index order (last coordinate fastest),
// keeping the codeword current via one scaled row addition per digit move.
class MessageScanner {
 public:
  MessageScanner(const Mat& basis, unsigned long long start)
      : b_(basis), f_(basis.field()), q_(f_.q()), k_(basis.rows()),
        n_(basis.cols()), digits_(k_, 0), cw_(n_, 0) {
    unsigned long long idx = start;
    for (int j = k_ - 1; j >= 0; --j) {
      digits_[j] = static_cast<int>(idx % q_);
      idx /= q_;
    }
    for (int j = 0; j < k_; ++j)
      if (digits_[j] != 0) add_scaled(static_cast<Elem>(digits_[j]), j);
    deltas_.resize(q_ - 1);
    for (int e = 0; e + 1 < q_; ++e)
      deltas_[e] = f_.sub(static_cast<Elem>(e + 1), static_cast<Elem>(e));
    wrap_ = f_.neg(static_cast<Elem>(q_ - 1));
  }

  void step() {
    int j = k_ - 1;
    while (digits_[j] == q_ - 1) {
      add_scaled(wrap_, j);
      digits_[j] = 0;
      --j;
    }
    add_scaled(deltas_[digits_[j]], j);
    ++digits_[j];
  }

  const std::vector<Elem>& codeword() const { return cw_; }

  int weight() const {
    int w = 0;
    for (Elem e : cw_) w += (e != 0);
    return w;
  }

 private:
  void add_scaled(Elem s, int row) {
    auto r = b_.row(row);
    for (int i = 0; i < n_; ++i) cw_[i] = f_.add(cw_[i], f_.mul(s, r[i]));
  }

  const Mat& b_;
  const Gf& f_;
  int q_, k_, n_;
  std::vector<int> digits_;
  std::vector<Elem> cw_;
  std::vector<Elem> deltas_;  // deltas_[e] = elem(e+1) - elem(e)
  Elem wrap_ = 0;             // elem(0) - elem(q-1)
};

struct MinPart {
  int best = INT_MAX;
  unsigned long long visited = 0;
};

MinPart scan_min_range(const Mat& basis, unsigned long long lo,
                       unsigned long long hi, const RrefResult* skip,
                       int floor) {
  MinPart part;
  if (lo >= hi) return part;
  MessageScanner sc(basis, lo);
  for (unsigned long long i = lo; i < hi; ++i) {
    if (i != lo) sc.step();
    if (i == 0) continue;  // zero message
    ++part.visited;
    int w = sc.weight();
    if (w < part.best) {
      if (skip == nullptr || !in_rowspace(*skip, sc.codeword())) {
        part.best = w;
        if (floor > 0 && part.best <= floor) break;
      }
    }
  }
  return part;
}

template <typename Fn>
void run_partitioned(unsigned long long total, int workers, Fn&& body) {
  int w = std::max(1, workers);
  if (total < static_cast<unsigned long long>(w))
    w = static_cast<int>(std::max(1ULL, total));
  unsigned long long base = total / w;
  unsigned long long rem = total % w;
  std::vector<std::thread> threads;
  unsigned long long lo = 0;
  for (int i = 0; i < w; ++i) {
    unsigned long long hi = lo + base + (static_cast<unsigned long long>(i) < rem ? 1 : 0);
    if (i + 1 == w) {
      body(i, lo, hi);
    } else {
      threads.emplace_back([&body, i, lo, hi] { body(i, lo, hi); });
    }
    lo = hi;
  }
  for (auto& t : threads) t.join();
}

DistanceResult exhaustive_min(const Mat& basis, const RrefResult* skip,
                              unsigned long long total,
                              const ScanOptions& opt) {
  int workers = resolve_workers(opt.workers);
  long long nparts = std::min<long long>(
      workers, static_cast<long long>(std::min(total, 1ULL << 20)));
  std::vector<MinPart> parts(static_cast<std::size_t>(std::max(1LL, nparts)));
  run_partitioned(total, static_cast<int>(parts.size()),
                  [&](int i, unsigned long long lo, unsigned long long hi) {
                    parts[i] = scan_min_range(basis, lo, hi, skip, opt.floor);
                  });
  DistanceResult out;
  out.value = INT_MAX;
  for (const MinPart& p : parts) {
    out.value = std::min(out.value, p.best);
    out.enumerated += p.visited;
  }
  // The floor can only stop the scan early once the true minimum is pinned.
  out.exact = (opt.floor <= 1 || out.enumerated == total - 1);
  out.budget_hit = false;
  return out;
}

int row_echelon(Mat& a) {
  const Gf& f = a.field();
  int pr = 0;
  for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
    int pivot = -1;
    for (int r = pr; r < a.rows(); ++r)
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != pr)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(pr, j));
    for (int r = pr + 1; r < a.rows(); ++r) {
      Elem factor = a.at(r, c);
      if (factor == 0) continue;
      Elem scale = f.mul(factor, f.inv(a.at(pr, c)));
      for (int j = 0; j < a.cols(); ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(scale, a.at(pr, j)));
    }
    ++pr;
  }
  return pr;
}

constexpr unsigned long long kMaxPairCandidates = 20'000;

// One information-set re-encoding: permute columns, reduce to echelon form,
// examine the rows and a deterministic prefix of two-row combinations.
struct StochScratch {
  std::vector<int> perm;
  std::vector<Elem> combo;
  std::vector<Elem> orig;
};

void stochastic_iteration(const Mat& basis, const RrefResult* skip,
                          std::uint64_t seed, unsigned long long iter,
                          MinPart& part, StochScratch& s) {
  const Gf& f = basis.field();
  int k = basis.rows();
  int n = basis.cols();
  int q = f.q();

  Rng rng{seed ^ (0x9E3779B97F4A7C15ULL * (iter + 1))};
  s.perm.resize(n);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(s.perm[i], s.perm[j]);
  }

  Mat m(basis.field_ptr(), k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = basis.at(r, s.perm[c]);
  row_echelon(m);

  auto consider = [&](std::span<const Elem> cand) {
    ++part.visited;
    int w = 0;
    for (Elem e : cand) w += (e != 0);
    if (w >= part.best) return;
    if (skip != nullptr) {
      s.orig.assign(n, 0);
      for (int c = 0; c < n; ++c) s.orig[s.perm[c]] = cand[c];
      if (in_rowspace(*skip, s.orig)) return;
    }
    part.best = w;
  };

  for (int r = 0; r < k; ++r) consider(m.row(r));

  unsigned long long emitted = 0;
  s.combo.resize(n);
  for (int i = 0; i < k && emitted < kMaxPairCandidates; ++i) {
    for (int j = i + 1; j < k && emitted < kMaxPairCandidates; ++j) {
      for (int c = 1; c < q && emitted < kMaxPairCandidates; ++c) {
        auto ri = m.row(i);
        auto rj = m.row(j);
        for (int t = 0; t < n; ++t)
          s.combo[t] = f.add(rj[t], f.mul(static_cast<Elem>(c), ri[t]));
        consider(s.combo);
        ++emitted;
      }
    }
  }
}

unsigned long long per_iteration_candidates(int k, int q) {
  unsigned long long pairs = 0;
  if (k >= 2)
    pairs = std::min<unsigned long long>(
        static_cast<unsigned long long>(k) * (k - 1) / 2 * (q - 1),
        kMaxPairCandidates);
  return static_cast<unsigned long long>(k) + pairs;
}

DistanceResult stochastic_min(const Mat& basis, const RrefResult* skip,
                              const ScanOptions& opt) {
  int k = basis.rows();
  int q = basis.field().q();
  unsigned long long per_iter = per_iteration_candidates(k, q);
  unsigned long long iters = std::max(1ULL, opt.budget / per_iter);
  int workers = resolve_workers(opt.workers);

  long long nparts = std::min<long long>(
      workers, static_cast<long long>(std::min(iters, 1ULL << 20)));
  std::vector<MinPart> parts(static_cast<std::size_t>(std::max(1LL, nparts)));
  run_partitioned(iters, static_cast<int>(parts.size()),
                  [&](int i, unsigned long long lo, unsigned long long hi) {
                    StochScratch scratch;
                    for (unsigned long long it = lo; it < hi; ++it)
                      stochastic_iteration(basis, skip, opt.seed, it, parts[i],
                                           scratch);
                  });
  DistanceResult out;
  out.value = basis.cols();  // a codeword weight never exceeds n
  for (const MinPart& p : parts) {
    if (p.best != INT_MAX) out.value = std::min(out.value, p.best);
    out.enumerated += p.visited;
  }
  out.exact = false;
  out.budget_hit = true;
  return out;
}

DistanceResult scan_code(const Mat& basis, const RrefResult* skip,
                         const ScanOptions& opt) {
  unsigned long long total =
      pow_clamped(basis.field().q(), basis.rows(), opt.budget);
  if (total <= opt.budget) return exhaustive_min(basis, skip, total, opt);
  return stochastic_min(basis, skip, opt);
}

}  // namespace

DistanceResult min_weight(const LinearCode& c, const ScanOptions& opt) {
  if (c.k() < 1) throw DimensionError("minimum weight needs dimension >= 1");
  return scan_code(c.reduced().reduced, nullptr, opt);
}

DistanceResult relative_min_weight(const LinearCode& c, const LinearCode& d,
                                   const ScanOptions& opt) {
  if (c.n() != d.n() || !c.field().same_field(d.field()))
    throw DimensionError("relative weight: mismatched codes");
  if (!is_subspace(d.generator(), c.generator()))
    throw DimensionError("relative weight: subcode not inside the code");
  if (d.k() >= c.k())
    throw DimensionError("relative weight: empty difference");
  if (d.k() == 0) return scan_code(c.reduced().reduced, nullptr, opt);
  return scan_code(c.reduced().reduced, &d.reduced(), opt);
}

std::vector<unsigned long long> weight_distribution(const LinearCode& c,
                                                    unsigned long long budget,
                                                    int workers) {
  unsigned long long total = pow_clamped(c.field().q(), c.k(), budget);
  if (total > budget)
    throw BudgetError("weight distribution of q^" + std::to_string(c.k()) +
                      " codewords exceeds the budget");
  const Mat& basis = c.reduced().reduced;
  int w = resolve_workers(workers);
  long long nparts =
      std::min<long long>(w, static_cast<long long>(std::max(1ULL, total)));
  std::vector<std::vector<unsigned long long>> parts(
      static_cast<std::size_t>(std::max(1LL, nparts)),
      std::vector<unsigned long long>(c.n() + 1, 0));
  run_partitioned(total, static_cast<int>(parts.size()),
                  [&](int i, unsigned long long lo, unsigned long long hi) {
                    if (lo >= hi) return;
                    MessageScanner sc(basis, lo);
                    for (unsigned long long idx = lo; idx < hi; ++idx) {
                      if (idx != lo) sc.step();
                      ++parts[i][sc.weight()];
                    }
                  });
  std::vector<unsigned long long> counts(c.n() + 1, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
  return counts;
}

long long zero_count_bound(int q, int r, int a, int strata) {
  if (strata < 0 || strata > a)
    throw RangeError("stratum count outside [0, a]");
  long long per_stratum = std::max(0LL, static_cast<long long>(q - 2) -
                                            static_cast<long long>(strata) * r);
  return static_cast<long long>(strata) * (q - 1) +
         (q - 1 - strata) * per_stratum;
}

std::vector<unsigned long long> macwilliams_transform(
    const std::vector<unsigned long long>& dist, int q, int k) {
  if (dist.empty()) throw RangeError("empty distribution");
  int n = static_cast<int>(dist.size()) - 1;

  // Pascal triangle up to n.
  std::vector<std::vector<__int128>> ch(n + 1, std::vector<__int128>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    ch[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
  }
  __int128 qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;

  std::vector<unsigned long long> out(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (dist[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)
      __int128 kr = 0;
      for (int s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        __int128 term = ch[i][s] * ch[n - i][j - s];
        for (int e = 0; e < j - s; ++e) term *= (q - 1);
        kr += (s % 2 == 0) ? term : -term;
      }
      acc += static_cast<__int128>(dist[i]) * kr;
    }
    if (acc % qk != 0 || acc < 0)
      throw Error("MacWilliams transform is not integral");
    out[j] = static_cast<unsigned long long>(acc / qk);
  }
  return out;
}

}  // namespace toricq
