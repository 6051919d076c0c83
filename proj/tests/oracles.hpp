#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library's containment, coverage or counting code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Letters = std::vector<unsigned>;

inline Letters dense_rank(const Letters& w) {
  std::map<unsigned, unsigned> rank;
  for (unsigned c : w) rank[c] = 0;
  unsigned r = 0;
  for (auto& [value, slot] : rank) slot = ++r;
  Letters out;
  for (unsigned c : w) out.push_back(rank[c]);
  return out;
}

/// Calls f(indices) for every increasing index vector of length k in [0, n).
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Dense ranks of every length-k subsequence.
inline std::set<Letters> subsequence_patterns(const Letters& w, std::size_t k) {
  std::set<Letters> out;
  for_each_combination(w.size(), k, [&](const std::vector<std::size_t>& idx) {
    Letters sub;
    for (auto i : idx) sub.push_back(w[i]);
    out.insert(dense_rank(sub));
  });
  return out;
}

inline bool contains(const Letters& w, const Letters& p) { return subsequence_patterns(w, p.size()).count(p) > 0; }

/// Canonical words of length k: all of {1..k}^k filtered by "letters used are 1..m".
inline std::vector<Letters> arrangements(std::size_t k) {
  std::vector<Letters> out;
  Letters w(k, 1);
  for (;;) {
    if (dense_rank(w) == w) out.push_back(w);
    std::size_t i = k;
    while (i > 0 && w[i - 1] == k) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline std::size_t required_count(unsigned d, std::size_t k) {
  std::size_t c = 0;
  for (const auto& p : arrangements(k))
    if (*std::max_element(p.begin(), p.end()) <= d) ++c;
  return c;
}

inline bool is_superpattern(const Letters& w, unsigned d, std::size_t k) {
  return subsequence_patterns(w, k).size() == required_count(d, k);
}

/// Base-d counter over all words of length n.
template <class F>
void for_each_word(unsigned d, std::size_t n, F&& f) {
  Letters w(n, 1);
  for (;;) {
    f(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == d) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

/// Words of length n whose superpattern time is exactly n, by full scan.
inline std::uint64_t strict_count(unsigned d, std::size_t k, std::size_t n) {
  const std::size_t need = required_count(d, k);
  std::uint64_t count = 0;
  for_each_word(d, n, [&](const Letters& w) {
    if (subsequence_patterns(w, k).size() != need) return;
    Letters prefix(w.begin(), w.end() - 1);
    if (subsequence_patterns(prefix, k).size() != need) ++count;
  });
  return count;
}

}  // namespace oracle
