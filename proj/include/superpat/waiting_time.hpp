#pragma once

// Distribution of the first time tau at which an i.i.d. uniform word over
// {1..d} becomes a k-superpattern: exact PMFs for d = k = 2 and d = k = 3,
// an exhaustive oracle, an online detector, and a seeded simulator.

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "superpat/coverage.hpp"
#include "superpat/error.hpp"
#include "superpat/exact_series.hpp"
#include "superpat/superpatterns.hpp"
#include "superpat/word.hpp"

namespace superpat {

/// P(tau = n) for d = k = 2: (n-2)/2^(n-1) for n >= 3.
inline BigRational binary_pmf(std::size_t n) {
  if (n < 3) return 0;
  return make_rational(BigInt(n - 2), BigInt(1) << (n - 1));
}

/// P(tau = n) for d = k = 3: 6/3^n * sum_{m=7..n} ((m-4)^2 - 2) C(n-2, m-2).
inline BigRational ternary_pmf(std::size_t n) {
  if (n < 7) return 0;
  return make_rational(count_formulas(n).strict_total, boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)));
}

/// Fraction of the d^n words whose superpattern time is exactly n.
inline BigRational brute_force_pmf(unsigned d, unsigned k, std::size_t n, const SearchBudget& budget = {}) {
  const std::uint64_t strict = enumerate_strict_superpatterns(d, k, n, budget);
  return make_rational(BigInt(strict), boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n)));
}

/// G_2(t) = t^3 / (2 - t)^2.
inline RationalFunction binary_generating_function() {
  return {Polynomial::monomial(1, 3), pow(Polynomial{2, -1}, 2)};
}

/// G_3(t) = 2 t^7 (16 t^2 - 63 t + 63) / ((3 - t)^5 (3 - 2t)^3).
inline RationalFunction ternary_generating_function() {
  return {Polynomial::monomial(2, 7) * Polynomial{63, -63, 16}, pow(Polynomial{3, -1}, 5) * pow(Polynomial{3, -2}, 3)};
}

inline RationalFunction generating_function(unsigned d) {
  if (d == 2) return binary_generating_function();
  if (d == 3) return ternary_generating_function();
  throw DomainError("closed-form distribution known only for d = 2 and d = 3");
}

inline BigRational closed_form_pmf(unsigned d, std::size_t n) {
  if (d == 2) return binary_pmf(n);
  if (d == 3) return ternary_pmf(n);
  throw DomainError("closed-form distribution known only for d = 2 and d = 3");
}

/// Feeds letters one at a time and reports the first time the prefix read so
/// far is a superpattern. Only patterns still missing can change state.
class TauDetector {
 public:
  TauDetector(unsigned d, unsigned k) : state_(d, k) {}

  /// Returns the stopping time once reached; later letters are ignored.
  std::optional<std::size_t> push(Letter c) {
    if (!tau_) {
      state_.push(c);
      if (state_.complete()) tau_ = state_.length();
    }
    return tau_;
  }
  std::optional<std::size_t> tau() const { return tau_; }
  std::vector<Pattern> missing() const { return state_.missing(); }
  void reset() {
    state_.reset();
    tau_.reset();
  }

 private:
  CoverageState state_;
  std::optional<std::size_t> tau_;
};

/// Consumes from `next()` until the prefix is a superpattern. The caller is
/// responsible for the stream eventually containing every pattern.
template <class Next>
  requires std::invocable<Next&>
std::size_t tau_online(Next&& next, unsigned d, unsigned k) {
  TauDetector detector(d, k);
  for (;;)
    if (auto t = detector.push(next())) return *t;
}

/// Finite stream; nullopt if the stream ends first.
inline std::optional<std::size_t> tau_online(std::span<const Letter> letters, unsigned d, unsigned k) {
  TauDetector detector(d, k);
  for (Letter c : letters)
    if (auto t = detector.push(c)) return t;
  return std::nullopt;
}

/// Uniform letter in {1..d} from 64-bit draws by rejection (no modulo bias).
template <class Engine>
Letter uniform_letter(Engine& engine, unsigned d) {
  static_assert(Engine::min() == 0 && Engine::max() == ~std::uint64_t{0});
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % d + 1) % d;
  for (;;) {
    const std::uint64_t x = engine();
    if (x <= limit) return static_cast<Letter>(x % d) + 1;
  }
}

struct SimSummary {
  unsigned d = 0;
  unsigned k = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  std::map<std::size_t, std::uint64_t> histogram;

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// Trials are split into fixed blocks; block b draws from mt19937_64 seeded
/// with seed_seq{seed, b}, so the result does not depend on thread count.
inline SimSummary simulate_tau(unsigned d, unsigned k, std::uint64_t trials, std::uint64_t seed,
                               unsigned threads = 0) {
  if (trials == 0) throw DomainError("trials must be positive");
  if (d == 0) throw DomainError("alphabet size must be positive");
  constexpr std::uint64_t kBlock = 1 << 14;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  PatternCatalog::get(d, k);  // build the shared catalog before workers start
  std::atomic<std::uint64_t> next_block{0};
  std::vector<std::map<std::size_t, std::uint64_t>> partial(threads);
  auto worker = [&](unsigned id) {
    TauDetector detector(d, k);
    auto& hist = partial[id];
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
      std::mt19937_64 engine(seq);
      const std::uint64_t count = std::min(kBlock, trials - b * kBlock);
      for (std::uint64_t t = 0; t < count; ++t) {
        detector.reset();
        std::optional<std::size_t> tau;
        while (!tau) tau = detector.push(uniform_letter(engine, d));
        ++hist[*tau];
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker, i);
    worker(0);
  }

  SimSummary s;
  s.d = d;
  s.k = k;
  s.trials = trials;
  s.seed = seed;
  for (const auto& h : partial)
    for (const auto& [n, c] : h) s.histogram[n] += c;
  // Integer sums first so the moments are independent of merge order.
  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (const auto& [n, c] : s.histogram) {
    sum += BigInt(n) * c;
    sum_sq += BigInt(n) * n * c;
  }
  const BigRational mean = make_rational(sum, BigInt(trials));
  s.mean = static_cast<double>(mean);
  if (trials > 1) {
    const BigRational var = (BigRational(sum_sq) - BigRational(sum) * mean) / BigRational(trials - 1);
    s.variance = static_cast<double>(var);
  }
  return s;
}

struct PmfRow {
  std::size_t n = 0;
  BigRational probability;
  BigRational cumulative;
};

struct PmfTable {
  unsigned d = 0;
  unsigned k = 0;
  std::size_t n_max = 0;
  std::vector<PmfRow> rows;  // n = 1..n_max

  /// 1 - P(tau <= n_max), kept exact rather than renormalized.
  BigRational tail() const { return rows.empty() ? BigRational(1) : 1 - rows.back().cumulative; }
};

inline std::size_t closed_form_min_length(unsigned d) { return d == 2 ? 3 : 7; }

inline PmfTable pmf_table(unsigned d, std::size_t n_max) {
  if (d != 2 && d != 3) throw DomainError("closed-form distribution known only for d = 2 and d = 3");
  if (n_max < closed_form_min_length(d))
    throw DomainError("n_max below the minimum superpattern length " + std::to_string(closed_form_min_length(d)));
  PmfTable t;
  t.d = d;
  t.k = d;
  t.n_max = n_max;
  BigRational cumulative = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigRational p = closed_form_pmf(d, n);
    cumulative += p;
    t.rows.push_back({n, std::move(p), cumulative});
  }
  return t;
}

struct CouponExpectations {
  BigRational single;     // one full collection of d coupons: sum_{j=1..d} d/j
  BigRational all_words;  // k disjoint collections
};

inline CouponExpectations coupon_expectations(unsigned d, unsigned k) {
  if (d == 0) throw DomainError("alphabet size must be positive");
  CouponExpectations e;
  for (unsigned j = 1; j <= d; ++j) e.single += make_rational(d, j);
  e.all_words = e.single * k;
  return e;
}

}  // namespace superpat
