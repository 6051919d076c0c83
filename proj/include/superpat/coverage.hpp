#pragma once

// Incremental pattern coverage. A CoverageState records, for the word read so
// far, which concrete letter strings of length 1..k occur as subsequences.
// Appending a letter c extends every stored string of length < k by c, so the
// state update is a handful of bit operations and newly reached length-k
// strings are mapped to their dense-rank pattern.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <map>
#include <utility>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/patterns.hpp"
#include "superpat/word.hpp"

namespace superpat {

/// The length-k patterns realizable over {1..d}, plus the map from each
/// concrete length-k string (as a base-d code) to its pattern index.
class PatternCatalog {
 public:
  static constexpr std::uint64_t kMaxCodes = 1u << 20;

  PatternCatalog(unsigned d, unsigned k) : d_(d), k_(k) {
    if (d == 0 || k == 0) throw DomainError("alphabet size and pattern length must be positive");
    for (const auto& p : enumerate_preferential_arrangements(k))
      if (p.distinct() <= d) patterns_.push_back(p);
    std::uint64_t codes = 1;
    level_offset_.push_back(0);
    for (unsigned len = 1; len <= k; ++len) {
      codes *= d;
      if (codes > kMaxCodes) throw SizeLimitExceeded("d^k too large for coverage tracking");
      level_size_.push_back(codes);
      level_offset_.push_back(level_offset_.back() + (codes + 63) / 64);
    }
    std::map<Pattern, std::uint32_t> index;
    for (std::uint32_t i = 0; i < patterns_.size(); ++i) index.emplace(patterns_[i], i);
    pattern_of_code_.resize(level_size_.back());
    std::vector<Letter> letters(k);
    for (std::uint64_t code = 0; code < level_size_.back(); ++code) {
      std::uint64_t rest = code;
      for (unsigned i = k; i-- > 0;) {
        letters[i] = static_cast<Letter>(rest % d) + 1;
        rest /= d;
      }
      pattern_of_code_[code] = index.at(dense_rank(letters));
    }
  }

  /// Shared immutable catalog per (d, k).
  static std::shared_ptr<const PatternCatalog> get(unsigned d, unsigned k) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const PatternCatalog>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{d, k}];
    if (!slot) slot = std::make_shared<const PatternCatalog>(d, k);
    return slot;
  }

  unsigned alphabet() const { return d_; }
  unsigned length() const { return k_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::size_t pattern_count() const { return patterns_.size(); }

 private:
  friend class CoverageState;

  unsigned d_;
  unsigned k_;
  std::vector<Pattern> patterns_;
  std::vector<std::uint64_t> level_size_;    // d^len for len = 1..k
  std::vector<std::size_t> level_offset_;    // word offset of level len (index len-1)
  std::vector<std::uint32_t> pattern_of_code_;
};

class CoverageState {
 public:
  explicit CoverageState(std::shared_ptr<const PatternCatalog> catalog)
      : catalog_(std::move(catalog)),
        seen_(catalog_->level_offset_.back(), 0),
        covered_((catalog_->pattern_count() + 63) / 64, 0) {}
  CoverageState(unsigned d, unsigned k) : CoverageState(PatternCatalog::get(d, k)) {}

  void reset() {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(covered_.begin(), covered_.end(), 0);
    covered_count_ = 0;
    length_ = 0;
  }

  /// Returns true if the letter completed at least one new pattern.
  bool push(Letter c) {
    const auto& cat = *catalog_;
    if (c == 0 || c > cat.d_) throw DomainError("letter outside alphabet");
    const std::uint64_t digit = c - 1;
    const std::size_t before = covered_count_;
    // Longest first so that strings extended in this step are not extended again.
    for (unsigned len = cat.k_; len >= 2; --len) {
      const std::size_t from = cat.level_offset_[len - 2];
      const std::size_t words = cat.level_offset_[len - 1] - from;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = seen_[from + w];
        while (bits) {
          const std::uint64_t code = w * 64 + static_cast<unsigned>(std::countr_zero(bits));
          bits &= bits - 1;
          set(len, code * cat.d_ + digit);
        }
      }
    }
    set(1, digit);
    ++length_;
    return covered_count_ > before;
  }

  bool complete() const { return covered_count_ == catalog_->pattern_count(); }
  std::size_t covered_count() const { return covered_count_; }
  std::size_t length() const { return length_; }
  bool covers(std::size_t pattern_index) const { return (covered_[pattern_index / 64] >> (pattern_index % 64)) & 1u; }

  std::vector<Pattern> missing() const {
    std::vector<Pattern> out;
    for (std::size_t i = 0; i < catalog_->pattern_count(); ++i)
      if (!covers(i)) out.push_back(catalog_->patterns()[i]);
    return out;
  }

  const PatternCatalog& catalog() const { return *catalog_; }

 private:
  void set(unsigned len, std::uint64_t code) {
    const auto& cat = *catalog_;
    std::uint64_t& slot = seen_[cat.level_offset_[len - 1] + code / 64];
    const std::uint64_t mask = std::uint64_t{1} << (code % 64);
    if (slot & mask) return;
    slot |= mask;
    if (len != cat.k_) return;
    const std::uint32_t p = cat.pattern_of_code_[code];
    std::uint64_t& cov = covered_[p / 64];
    const std::uint64_t pmask = std::uint64_t{1} << (p % 64);
    if (!(cov & pmask)) {
      cov |= pmask;
      ++covered_count_;
    }
  }

  std::shared_ptr<const PatternCatalog> catalog_;
  std::vector<std::uint64_t> seen_;
  std::vector<std::uint64_t> covered_;
  std::size_t covered_count_ = 0;
  std::size_t length_ = 0;
};

}  // namespace superpat
