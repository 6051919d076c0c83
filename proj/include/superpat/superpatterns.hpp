#pragma once

// Superpattern classification, exhaustive enumeration over all d-ary words
// and over alternating ternary words, closed-form counts for the ternary
// case, and structural checks on strict superpatterns.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superpat/coverage.hpp"
#include "superpat/error.hpp"
#include "superpat/exact_series.hpp"
#include "superpat/patterns.hpp"
#include "superpat/word.hpp"

namespace superpat {

/// Cap on the number of words an exhaustive search may visit.
struct SearchBudget {
  /// 0 selects the default for the alphabet: 2^24 for d <= 2, 3^14 otherwise.
  std::uint64_t max_words = 0;

  std::uint64_t cap_for(unsigned d) const {
    if (max_words != 0) return max_words;
    return d <= 2 ? (std::uint64_t{1} << 24) : std::uint64_t{4782969};
  }

  /// Throws BudgetExceeded unless base^exponent fits in the cap.
  void require(unsigned base, std::size_t exponent, unsigned alphabet, const std::string& what) const {
    const std::uint64_t cap = cap_for(alphabet);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      if (base != 0 && total > cap / base) total = cap + 1;
      else total *= base;
      if (total > cap) break;
    }
    if (total > cap)
      throw BudgetExceeded(what + ": " + std::to_string(base) + "^" + std::to_string(exponent) +
                           " words exceeds budget of " + std::to_string(cap));
  }
};

struct ClassFlags {
  bool superpattern = false;
  bool minimal = false;
  bool strict = false;
  bool minimum = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

/// Closed-form counts for d = k = 3 at length n. CSV column names in comments.
struct CountReport {
  std::size_t n = 0;
  BigInt minimal_upto_iso;         // gamma_total
  BigInt strict_minimal_upto_iso;  // s_mu
  BigInt strict_upto_iso;          // s_a
  BigInt strict_total;             // s_total
  BigInt failing_type_a;           // beta_a
  BigInt failing_type_b;           // beta_b
  BigInt failing_total;            // beta_total
};

/// Multiplicities of the letters 1, 2, 3, sorted non-increasing.
struct LetterCounts {
  std::array<std::size_t, 3> parts{};
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

/// Alternating words beginning 1,2 that are not superpatterns, split by the
/// third letter: 1 (type A) or 3 (type B).
struct FailingCounts {
  std::uint64_t type_a = 0;
  std::uint64_t type_b = 0;
  friend bool operator==(const FailingCounts&, const FailingCounts&) = default;
};

/// Patterns of length k that a word over {1..d} must contain.
inline std::vector<Pattern> required_patterns(unsigned d, unsigned k) {
  std::vector<Pattern> out;
  for (auto& p : enumerate_preferential_arrangements(k))
    if (p.distinct() <= d) out.push_back(std::move(p));
  return out;
}

inline std::vector<Pattern> missing_patterns(const Word& w, unsigned k) {
  std::vector<Pattern> out;
  for (auto& p : required_patterns(w.alphabet(), k))
    if (!contains_pattern(w, p)) out.push_back(std::move(p));
  return out;
}

/// Contains every length-k preferential arrangement realizable over the
/// word's alphabet (all of them when d >= k).
inline bool is_superpattern(const Word& w, unsigned k) {
  for (const auto& p : required_patterns(w.alphabet(), k))
    if (!contains_pattern(w, p)) return false;
  return true;
}

namespace detail {

inline bool covers_all(std::span<const Letter> letters, unsigned d, unsigned k) {
  CoverageState state(d, k);
  for (Letter c : letters) {
    state.push(c);
    if (state.complete()) return true;
  }
  return state.complete();
}

inline bool has_adjacent_repeat(const Word& w) {
  return std::adjacent_find(w.begin(), w.end()) != w.end();
}

// Depth-first walk over words of length n extending `seed`. With
// `alternating`, consecutive letters differ. With `stop_at_complete`,
// children of superpattern prefixes shorter than n are skipped, so every
// complete leaf is a strict superpattern. `visit(letters, state)` runs at
// each leaf and returns false to stop the walk.
template <class Visit>
void walk_words(unsigned d, unsigned k, std::size_t n, std::span<const Letter> seed, bool alternating,
                bool stop_at_complete, Visit&& visit) {
  if (seed.size() > n) return;
  std::vector<CoverageState> states(n + 1, CoverageState(d, k));
  std::vector<Letter> letters(seed.begin(), seed.end());
  letters.resize(n);
  for (std::size_t i = 0; i < seed.size(); ++i) {
    states[i + 1] = states[i];
    states[i + 1].push(seed[i]);
    if (stop_at_complete && states[i + 1].complete() && i + 1 < n) return;
  }
  bool stopped = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (!visit(std::span<const Letter>(letters), states[depth])) stopped = true;
      return;
    }
    for (Letter c = 1; c <= d && !stopped; ++c) {
      if (alternating && depth > 0 && letters[depth - 1] == c) continue;
      letters[depth] = c;
      states[depth + 1] = states[depth];
      states[depth + 1].push(c);
      if (stop_at_complete && depth + 1 < n && states[depth + 1].complete()) continue;
      self(self, depth + 1);
    }
  };
  rec(rec, seed.size());
}

inline constexpr std::array<Letter, 2> kAlternatingSeed{1, 2};

}  // namespace detail

/// Least n <= n_max such that some word of length n over {1..d} contains all
/// length-k arrangements. Results are cached per (k, d).
inline std::size_t min_superpattern_length(unsigned k, unsigned d, std::size_t n_max = 64,
                                           const SearchBudget& budget = {}) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::size_t> known;
  {
    std::lock_guard lock(mutex);
    if (auto it = known.find({k, d}); it != known.end()) {
      if (it->second > n_max)
        throw NotFound("no superpattern of length <= " + std::to_string(n_max));
      return it->second;
    }
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    budget.require(d, n, d, "minimum superpattern search");
    bool found = false;
    detail::walk_words(d, k, n, {}, false, false, [&](std::span<const Letter>, const CoverageState& s) {
      found = s.complete();
      return !found;
    });
    if (found) {
      std::lock_guard lock(mutex);
      known[{k, d}] = n;
      return n;
    }
  }
  throw NotFound("no superpattern of length <= " + std::to_string(n_max));
}

/// Flags with a caller-supplied minimum superpattern length.
inline ClassFlags classify(const Word& w, unsigned k, std::size_t min_length) {
  ClassFlags f;
  f.superpattern = is_superpattern(w, k);
  if (!f.superpattern) return f;
  f.minimal = !detail::has_adjacent_repeat(w);
  f.strict = !is_superpattern(w.without_last(), k);
  f.minimum = f.minimal && w.size() == min_length;
  return f;
}

/// Deciding `minimum` for a minimal superpattern searches for the least
/// superpattern length, which may throw BudgetExceeded for large alphabets.
inline ClassFlags classify(const Word& w, unsigned k, const SearchBudget& budget = {}) {
  ClassFlags f = classify(w, k, std::size_t{0});
  if (f.minimal) f.minimum = w.size() == min_superpattern_length(k, w.alphabet(), w.size(), budget);
  return f;
}

/// Number of words of length n over {1..d} whose length-(n-1) prefix is not
/// a superpattern but which are. `visit` receives each such word.
inline std::uint64_t enumerate_strict_superpatterns(unsigned d, unsigned k, std::size_t n,
                                                    const SearchBudget& budget = {},
                                                    const std::function<void(const Word&)>& visit = {}) {
  budget.require(d, n, d, "strict superpattern enumeration");
  if (n == 0) return 0;
  std::uint64_t count = 0;
  detail::walk_words(d, k, n, {}, false, true, [&](std::span<const Letter> letters, const CoverageState& s) {
    if (s.complete()) {
      ++count;
      if (visit) visit(Word({letters.begin(), letters.end()}, d));
    }
    return true;
  });
  return count;
}

/// Superpatterns for k = 3 among alternating ternary words of length n that
/// begin 1,2 (one representative per letter-permutation class pair).
inline std::vector<Word> enumerate_minimal_upto_iso(std::size_t n, const SearchBudget& budget = {}) {
  if (n < 3) throw DomainError("alternating enumeration needs n >= 3");
  budget.require(2, n - 2, 2, "alternating word enumeration");
  std::vector<Word> out;
  detail::walk_words(3, 3, n, detail::kAlternatingSeed, true, false,
                     [&](std::span<const Letter> letters, const CoverageState& s) {
                       if (s.complete()) out.emplace_back(std::vector<Letter>(letters.begin(), letters.end()), 3);
                       return true;
                     });
  return out;
}

inline std::vector<Word> enumerate_strict_minimal_upto_iso(std::size_t n, const SearchBudget& budget = {}) {
  if (n < 3) throw DomainError("alternating enumeration needs n >= 3");
  budget.require(2, n - 2, 2, "alternating word enumeration");
  std::vector<Word> out;
  detail::walk_words(3, 3, n, detail::kAlternatingSeed, true, true,
                     [&](std::span<const Letter> letters, const CoverageState& s) {
                       if (s.complete()) out.emplace_back(std::vector<Letter>(letters.begin(), letters.end()), 3);
                       return true;
                     });
  return out;
}

inline FailingCounts count_failing_alternating(std::size_t n, const SearchBudget& budget = {}) {
  if (n < 3) throw DomainError("alternating enumeration needs n >= 3");
  budget.require(2, n - 2, 2, "alternating word enumeration");
  FailingCounts out;
  detail::walk_words(3, 3, n, detail::kAlternatingSeed, true, true,
                     [&](std::span<const Letter> letters, const CoverageState& s) {
                       if (!s.complete()) ++(letters[2] == 1 ? out.type_a : out.type_b);
                       return true;
                     });
  return out;
}

enum class WordFilter { superpattern, minimal, strict, strict_minimal };

/// Superpatterns of length n over {1..d} passing `filter`, in lexicographic
/// order. With `upto_iso`, only words whose letters first appear in the
/// order 1, 2, 3, ... are kept (one per letter-permutation class).
inline std::vector<Word> list_superpatterns(unsigned d, unsigned k, std::size_t n, WordFilter filter, bool upto_iso,
                                            const SearchBudget& budget = {}) {
  budget.require(d, n, d, "superpattern listing");
  const bool minimal = filter == WordFilter::minimal || filter == WordFilter::strict_minimal;
  const bool strict = filter == WordFilter::strict || filter == WordFilter::strict_minimal;
  std::vector<Word> out;
  detail::walk_words(d, k, n, {}, minimal, strict, [&](std::span<const Letter> letters, const CoverageState& s) {
    if (!s.complete()) return true;
    Word w({letters.begin(), letters.end()}, d);
    if (!upto_iso || relabel_canonical(w) == w) out.push_back(std::move(w));
    return true;
  });
  return out;
}

/// Closed forms for d = k = 3, valid for n >= 7.
inline CountReport count_formulas(std::size_t n) {
  if (n < 7) throw DomainError("closed-form counts hold for n >= 7");
  const auto strict_minimal = [](std::int64_t m) { return BigInt((m - 4) * (m - 4) - 2); };
  const auto len = static_cast<std::int64_t>(n);
  CountReport r;
  r.n = n;
  r.minimal_upto_iso = (BigInt(1) << (n - 2)) - BigInt((len - 2) * (len - 2));
  r.strict_minimal_upto_iso = strict_minimal(len);
  for (std::int64_t m = 7; m <= len; ++m) r.strict_upto_iso += strict_minimal(m) * binomial(len - 2, m - 2);
  r.strict_total = 6 * r.strict_upto_iso;
  r.failing_type_a = len * len - 7 * len + 14;
  r.failing_type_b = 3 * len - 10;
  r.failing_total = (len - 2) * (len - 2);
  return r;
}

inline LetterCounts letter_counts(const Word& w) {
  LetterCounts out;
  for (Letter c : w) {
    if (c > 3) throw DomainError("letter counts are defined for words over {1,2,3}");
    ++out.parts[c - 1];
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

/// A letter i and an ordered pair (first, second) of the other two letters
/// such that no occurrence of i has the pair on the given side.
struct FlankingViolation {
  Letter centre;
  Letter first;
  Letter second;
  bool before;
};

/// Checks, for every ordering (i, j, k) of {1,2,3}, that some i is preceded
/// by a subsequence jk and some i is followed by one, and likewise for kj.
/// Each of the four conditions may use a different occurrence of i.
inline std::optional<FlankingViolation> find_flanking_violation(const Word& w) {
  for (Letter c : w)
    if (c > 3) throw DomainError("flanking check is defined for words over {1,2,3}");
  const auto letters = w.letters();
  const auto has_pair = [](std::span<const Letter> s, Letter a, Letter b) {
    auto it = std::find(s.begin(), s.end(), a);
    return it != s.end() && std::find(it + 1, s.end(), b) != s.end();
  };
  std::array<Letter, 3> perm{1, 2, 3};
  do {
    const auto [i, j, k] = perm;
    for (const auto& [a, b] : {std::pair{j, k}, std::pair{k, j}}) {
      bool before = false;
      bool after = false;
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p] != i) continue;
        before = before || has_pair(letters.first(p), a, b);
        after = after || has_pair(letters.subspan(p + 1), a, b);
      }
      if (!before) return FlankingViolation{i, a, b, true};
      if (!after) return FlankingViolation{i, a, b, false};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool has_flanking_pairs(const Word& w) { return !find_flanking_violation(w).has_value(); }

/// Positions of a length-7 subsequence that ends at the last letter and
/// relabels to one of the minimum superpatterns for d = k = 3. Requires a
/// strict minimal superpattern over {1,2,3} of length >= 7.
inline std::optional<std::vector<std::size_t>> find_minimum_ending_at_last(const Word& w) {
  if (w.alphabet() != 3 || w.size() < 7 || detail::has_adjacent_repeat(w) || !is_superpattern(w, 3) ||
      is_superpattern(w.without_last(), 3))
    throw DomainError("expected a strict minimal superpattern over {1,2,3} of length >= 7");
  std::set<Word> minimum;
  for (auto& m : enumerate_strict_minimal_upto_iso(7)) minimum.insert(relabel_canonical(m));
  const std::size_t n = w.size();
  std::vector<std::size_t> pick(7);
  pick[6] = n - 1;
  std::vector<Letter> sub(7);
  // combinations of 6 positions from [0, n-1)
  std::vector<bool> mask(n - 1, false);
  std::fill(mask.begin(), mask.begin() + 6, true);
  do {
    for (std::size_t i = 0, j = 0; i < n - 1; ++i)
      if (mask[i]) pick[j++] = i;
    for (std::size_t j = 0; j < 7; ++j) sub[j] = w[pick[j]];
    if (minimum.count(relabel_canonical(Word(sub, 3)))) return pick;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return std::nullopt;
}

inline bool ends_on_embedded_minimum(const Word& w) { return find_minimum_ending_at_last(w).has_value(); }

/// Outcome of checking that a strict superpattern embeds no minimum one.
struct EmbeddedMinimumReport {
  bool strict = false;
  std::size_t candidates = 0;          // subsequences of the minimum length examined
  std::size_t minimum_candidates = 0;  // of those, superpatterns with every letter necessary
  bool contains_all_distinct = false;  // contains 12...k

  bool holds() const { return strict && minimum_candidates == 0; }
};

/// Examines every subsequence of `w` of length `minimum_length` and counts
/// those that are superpatterns in which deleting any one letter breaks the
/// property.
inline EmbeddedMinimumReport check_no_embedded_minimum(const Word& w, unsigned k, std::size_t minimum_length) {
  const unsigned d = w.alphabet();
  EmbeddedMinimumReport r;
  r.strict = detail::covers_all(w.letters(), d, k) && !detail::covers_all(w.without_last().letters(), d, k);
  std::vector<Letter> increasing(k);
  for (unsigned i = 0; i < k; ++i) increasing[i] = i + 1;
  r.contains_all_distinct = contains_pattern(w, Pattern(increasing));
  const std::size_t n = w.size();
  if (minimum_length > n) return r;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(minimum_length), true);
  std::vector<Letter> sub(minimum_length);
  std::vector<Letter> shorter(minimum_length - (minimum_length > 0));
  do {
    ++r.candidates;
    for (std::size_t i = 0, j = 0; i < n; ++i)
      if (mask[i]) sub[j++] = w[i];
    if (!detail::covers_all(sub, d, k)) continue;
    bool every_letter_needed = true;
    for (std::size_t drop = 0; drop < sub.size() && every_letter_needed; ++drop) {
      for (std::size_t i = 0, j = 0; i < sub.size(); ++i)
        if (i != drop) shorter[j++] = sub[i];
      every_letter_needed = !detail::covers_all(shorter, d, k);
    }
    r.minimum_candidates += every_letter_needed;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return r;
}

/// Two copies of 1213121 joined by a 4: strict for k = d = 4, yet no
/// length-12 subsequence is a minimum superpattern.
inline constexpr const char* kSeparatedCopiesWord = "121312141213121";
inline constexpr std::size_t kFourLetterMinimumLength = 12;

inline EmbeddedMinimumReport separated_copies_report() {
  return check_no_embedded_minimum(Word::parse(kSeparatedCopiesWord, 4), 4, kFourLetterMinimumLength);
}

inline bool verify_separated_copies_example() { return separated_copies_report().holds(); }

}  // namespace superpat
