#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superpat/error.hpp"

namespace superpat {

/// Letters are 1-based throughout.
using Letter = unsigned;

namespace detail {

/// Digit string when every letter fits in one digit, otherwise comma-separated.
inline std::string format_letters(std::span<const Letter> letters, bool digits) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

inline std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty()) return out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad letter '" + std::string(1, ch) + "' in \"" + std::string(text) + "\"");
      out.push_back(static_cast<Letter>(ch - '0'));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, next - pos);
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value == 0)
      throw ParseError("bad letter \"" + std::string(field) + "\" in \"" + std::string(text) + "\"");
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

/// A finite word over the alphabet {1..d}.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, unsigned alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ == 0) throw DomainError("alphabet size must be positive");
    for (Letter c : letters_)
      if (c == 0 || c > alphabet_)
        throw DomainError("letter " + std::to_string(c) + " outside alphabet {1.." + std::to_string(alphabet_) + "}");
  }

  /// Parses "1213121" or "10,2,7". Letters above `alphabet` are a parse error.
  static Word parse(std::string_view text, unsigned alphabet) {
    auto letters = detail::parse_letters(text);
    for (Letter c : letters)
      if (c > alphabet)
        throw ParseError("letter " + std::to_string(c) + " exceeds alphabet size " + std::to_string(alphabet));
    return Word(std::move(letters), alphabet);
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  unsigned alphabet() const { return alphabet_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t n) const {
    Word w;
    w.alphabet_ = alphabet_;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, size())));
    return w;
  }
  Word without_last() const { return prefix(empty() ? 0 : size() - 1); }
  Word erased(std::size_t i) const {
    Word w = *this;
    w.letters_.erase(w.letters_.begin() + static_cast<long>(i));
    return w;
  }

  std::string str() const { return detail::format_letters(letters_, alphabet_ <= 9); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_ = 1;
};

inline Word make_word(std::string_view text, unsigned alphabet) { return Word::parse(text, alphabet); }

/// A word in dense-rank canonical form: the letters used are exactly {1..m}.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (!is_canonical(letters_)) throw DomainError("pattern \"" + str() + "\" is not in dense-rank form");
    distinct_ = letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
  }
  static Pattern parse(std::string_view text) { return Pattern(detail::parse_letters(text)); }

  static bool is_canonical(std::span<const Letter> letters) {
    if (letters.empty()) return true;
    const Letter top = *std::max_element(letters.begin(), letters.end());
    if (top > letters.size()) return false;
    std::vector<bool> seen(top + 1, false);
    for (Letter c : letters) {
      if (c == 0) return false;
      seen[c] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Number of distinct letters, i.e. the largest letter.
  unsigned distinct() const { return distinct_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string str() const { return detail::format_letters(letters_, distinct_ <= 9); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.letters_ <=> b.letters_; }

 private:
  struct trusted_t {};
  Pattern(trusted_t, std::vector<Letter> letters, unsigned distinct)
      : letters_(std::move(letters)), distinct_(distinct) {}
  friend Pattern dense_rank(std::span<const Letter> letters);

  std::vector<Letter> letters_;
  unsigned distinct_ = 0;
};

/// A bijection on {1..d}, stored as its image sequence.
class LetterPermutation {
 public:
  explicit LetterPermutation(std::vector<Letter> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size() + 1, false);
    for (Letter c : image_) {
      if (c == 0 || c > image_.size() || hit[c]) throw DomainError("letter map is not a bijection on {1..d}");
      hit[c] = true;
    }
  }
  static LetterPermutation identity(unsigned d) {
    std::vector<Letter> image(d);
    for (unsigned i = 0; i < d; ++i) image[i] = i + 1;
    return LetterPermutation(std::move(image));
  }
  /// Every permutation of {1..d} in lexicographic order of the image.
  static std::vector<LetterPermutation> all(unsigned d) {
    std::vector<LetterPermutation> out;
    auto image = identity(d).image_;
    do out.emplace_back(image);
    while (std::next_permutation(image.begin(), image.end()));
    return out;
  }

  unsigned size() const { return static_cast<unsigned>(image_.size()); }
  Letter operator()(Letter c) const { return image_.at(c - 1); }
  const std::vector<Letter>& image() const { return image_; }

 private:
  std::vector<Letter> image_;
};

}  // namespace superpat
