#pragma once

// Order-isomorphism semantics on words: dense ranking, pattern containment
// with witness extraction, and enumeration of preferential arrangements.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/exact_series.hpp"
#include "superpat/word.hpp"

namespace superpat {

/// Equal letters share a rank; the next larger value takes the next rank.
inline Pattern dense_rank(std::span<const Letter> letters) {
  std::vector<Letter> values(letters.begin(), letters.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Letter> ranked;
  ranked.reserve(letters.size());
  for (Letter c : letters)
    ranked.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), c) - values.begin()) + 1);
  return Pattern(Pattern::trusted_t{}, std::move(ranked), static_cast<unsigned>(values.size()));
}

inline Pattern dense_rank(const Word& w) { return dense_rank(w.letters()); }

namespace detail {

// Backtracking over pattern positions. value_of[r] is the letter currently
// assigned to rank r (0 = unassigned); assigned letters must increase with rank.
class EmbeddingSearch {
 public:
  EmbeddingSearch(std::span<const Letter> word, const Pattern& pattern)
      : word_(word), pattern_(pattern), value_of_(pattern.distinct() + 1, 0) {}

  bool run() {
    indices_.clear();
    return extend(0, 0);
  }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  bool consistent(Letter rank, Letter value) const {
    for (Letter r = 1; r < rank; ++r)
      if (value_of_[r] != 0 && value_of_[r] >= value) return false;
    for (Letter r = rank + 1; r < value_of_.size(); ++r)
      if (value_of_[r] != 0 && value_of_[r] <= value) return false;
    return true;
  }

  bool extend(std::size_t pos, std::size_t start) {
    const std::size_t k = pattern_.size();
    if (pos == k) return true;
    const std::size_t n = word_.size();
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      const Letter rank = pattern_[pos];
      const Letter value = word_[i];
      const bool fresh = value_of_[rank] == 0;
      if (!fresh && value_of_[rank] != value) continue;
      if (fresh && !consistent(rank, value)) continue;
      if (fresh) value_of_[rank] = value;
      indices_.push_back(i);
      if (extend(pos + 1, i + 1)) return true;
      indices_.pop_back();
      if (fresh) value_of_[rank] = 0;
    }
    return false;
  }

  std::span<const Letter> word_;
  const Pattern& pattern_;
  std::vector<Letter> value_of_;
  std::vector<std::size_t> indices_;
};

}  // namespace detail

/// Some subsequence of `word` is order-isomorphic to `pattern`. The empty
/// pattern is contained in every word.
inline bool contains_pattern(std::span<const Letter> word, const Pattern& pattern) {
  if (pattern.size() > word.size()) return false;
  return detail::EmbeddingSearch(word, pattern).run();
}
inline bool contains_pattern(const Word& w, const Pattern& p) { return contains_pattern(w.letters(), p); }

/// 0-based increasing positions of one embedding, if any.
inline std::optional<std::vector<std::size_t>> find_embedding(const Word& w, const Pattern& p) {
  if (p.size() > w.size()) return std::nullopt;
  detail::EmbeddingSearch search(w.letters(), p);
  if (!search.run()) return std::nullopt;
  return search.indices();
}

inline constexpr unsigned kMaxArrangementLength = 8;

/// Ordered Bell number: a(0) = 1, a(k) = sum_{j=1..k} C(k,j) a(k-j).
inline BigInt fubini(unsigned k) {
  std::vector<BigInt> a(k + 1);
  a[0] = 1;
  for (unsigned m = 1; m <= k; ++m)
    for (unsigned j = 1; j <= m; ++j) a[m] += binomial(m, j) * a[m - j];
  return a[k];
}

/// Every dense-rank canonical word of length k, lexicographically ordered.
inline std::vector<Pattern> enumerate_preferential_arrangements(unsigned k) {
  if (k == 0) throw DomainError("arrangement length must be positive");
  if (k > kMaxArrangementLength)
    throw SizeLimitExceeded("arrangement length " + std::to_string(k) + " exceeds cap " +
                            std::to_string(kMaxArrangementLength));
  std::vector<Pattern> out;
  std::vector<Letter> current(k);
  std::vector<unsigned> uses(k + 2, 0);
  // Letters 1..k; a prefix is viable while the values missing below its
  // maximum still fit in the remaining positions.
  auto rec = [&](auto&& self, std::size_t pos, Letter top) -> void {
    unsigned missing = 0;
    for (Letter v = 1; v <= top; ++v) missing += uses[v] == 0;
    if (missing > k - pos) return;
    if (pos == k) {
      out.emplace_back(current);
      return;
    }
    for (Letter v = 1; v <= k; ++v) {
      current[pos] = v;
      ++uses[v];
      self(self, pos + 1, std::max(top, v));
      --uses[v];
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Renames letters by order of first occurrence (first new letter -> 1, ...).
inline Word relabel_canonical(const Word& w) {
  std::map<Letter, Letter> rename;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter c : w) {
    auto [it, inserted] = rename.try_emplace(c, static_cast<Letter>(rename.size() + 1));
    out.push_back(it->second);
  }
  return Word(std::move(out), w.alphabet());
}

inline Word apply_letter_permutation(const Word& w, const LetterPermutation& sigma) {
  if (sigma.size() != w.alphabet())
    throw DomainError("permutation acts on " + std::to_string(sigma.size()) + " letters, word alphabet has " +
                      std::to_string(w.alphabet()));
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(sigma(c));
  return Word(std::move(out), w.alphabet());
}

}  // namespace superpat
