#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "superpat/patterns.hpp"

using namespace superpat;

namespace {

Word W(const char* s, unsigned d = 9) { return Word::parse(s, d); }
Pattern P(const char* s) { return Pattern::parse(s); }

oracle::Letters letters_of(const Word& w) { return {w.begin(), w.end()}; }

Word random_word(std::mt19937& rng, unsigned d, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<unsigned> letter(1, d);
  std::vector<Letter> v(len(rng));
  for (auto& c : v) c = letter(rng);
  return Word(std::move(v), d);
}

}  // namespace

TEST(DenseRank, Examples) {
  EXPECT_EQ(dense_rank(W("571")), P("231"));
  EXPECT_EQ(dense_rank(W("373")), P("121"));
  EXPECT_EQ(dense_rank(W("111")), P("111"));
  EXPECT_TRUE(dense_rank(Word({}, 3)).empty());
}

TEST(DenseRank, IdempotentAndInvariantUnderIncreasingRelabel) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 6, 12);
    const Pattern p = dense_rank(w);
    EXPECT_EQ(dense_rank(p.letters()), p);
    EXPECT_EQ(p.letters().size(), w.size());
    // strictly increasing injection 1..6 -> 1..9
    std::vector<Letter> shifted;
    for (Letter c : w) shifted.push_back(c + (c > 3 ? 3 : 0));
    EXPECT_EQ(dense_rank(shifted), p);
    EXPECT_EQ(oracle::dense_rank(letters_of(w)), oracle::Letters(p.begin(), p.end()));
  }
}

TEST(Pattern, RejectsNonCanonical) {
  EXPECT_THROW(P("13"), DomainError);
  EXPECT_THROW(P("22"), DomainError);
  EXPECT_NO_THROW(P("2131"));
}

TEST(Containment, Examples) {
  const Word w = W("5371473");
  EXPECT_TRUE(contains_pattern(w, P("231")));
  EXPECT_TRUE(contains_pattern(w, P("121")));
  EXPECT_FALSE(contains_pattern(W("111111"), P("123")));
  EXPECT_TRUE(contains_pattern(W("111"), Pattern{}));
  for (const auto& p : enumerate_preferential_arrangements(4))
    EXPECT_TRUE(contains_pattern(p.letters(), p)) << p.str();
}

TEST(Containment, MatchesExhaustiveSubsequenceOracle) {
  std::mt19937 rng(11);
  const auto pats3 = enumerate_preferential_arrangements(3);
  const auto pats4 = enumerate_preferential_arrangements(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 4, 10);
    const auto found3 = oracle::subsequence_patterns(letters_of(w), 3);
    const auto found4 = oracle::subsequence_patterns(letters_of(w), 4);
    for (const auto& p : pats3) {
      const bool expected = found3.count({p.begin(), p.end()}) > 0;
      ASSERT_EQ(contains_pattern(w, p), expected) << w.str() << " " << p.str();
      const auto emb = find_embedding(w, p);
      ASSERT_EQ(emb.has_value(), expected);
      if (emb) {
        std::vector<Letter> sub;
        for (std::size_t i = 0; i < emb->size(); ++i) {
          if (i) { ASSERT_LT((*emb)[i - 1], (*emb)[i]); }
          sub.push_back(w[(*emb)[i]]);
        }
        ASSERT_EQ(dense_rank(sub), p);
      }
    }
    for (const auto& p : pats4) ASSERT_EQ(contains_pattern(w, p), found4.count({p.begin(), p.end()}) > 0);
  }
}

TEST(Containment, InvariantUnderOrderPreservingRelabel) {
  std::mt19937 rng(3);
  const auto pats = enumerate_preferential_arrangements(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 3, 9);
    std::vector<Letter> spread;
    for (Letter c : w) spread.push_back(2 * c + 1);  // 3, 5, 7
    const Word v(spread, 7);
    for (const auto& p : pats) ASSERT_EQ(contains_pattern(w, p), contains_pattern(v, p));
  }
}

TEST(FindEmbedding, Examples) {
  const auto emb = find_embedding(W("1213121", 3), P("123"));
  ASSERT_TRUE(emb.has_value());
  // first witness in scan order: letters 1,2,3 at positions 1,2,4 (1-based)
  EXPECT_EQ(*emb, (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_FALSE(find_embedding(W("121", 3), P("123")).has_value());
  const auto self = find_embedding(W("2131", 3), P("2131"));
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(*self, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Arrangements, SmallCases) {
  const auto two = enumerate_preferential_arrangements(2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], P("11"));
  EXPECT_EQ(two[1], P("12"));
  EXPECT_EQ(two[2], P("21"));

  std::set<std::string> three;
  for (const auto& p : enumerate_preferential_arrangements(3)) three.insert(p.str());
  const std::set<std::string> listed{"111", "112", "121", "211", "122", "212", "221",
                                     "123", "132", "213", "231", "312", "321"};
  EXPECT_EQ(three, listed);

  EXPECT_EQ(enumerate_preferential_arrangements(1).size(), 1u);
  EXPECT_EQ(enumerate_preferential_arrangements(4).size(), 75u);
}

TEST(Arrangements, LexicographicAndMatchesOracle) {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto pats = enumerate_preferential_arrangements(k);
    EXPECT_TRUE(std::is_sorted(pats.begin(), pats.end()));
    EXPECT_EQ(std::adjacent_find(pats.begin(), pats.end()), pats.end());
    const auto expected = oracle::arrangements(k);
    ASSERT_EQ(pats.size(), expected.size());
    for (std::size_t i = 0; i < pats.size(); ++i) EXPECT_EQ(oracle::Letters(pats[i].begin(), pats[i].end()), expected[i]);
    EXPECT_EQ(BigInt(pats.size()), fubini(k));
  }
}

TEST(Arrangements, CapEnforced) {
  EXPECT_THROW(enumerate_preferential_arrangements(9), SizeLimitExceeded);
  EXPECT_THROW(enumerate_preferential_arrangements(0), DomainError);
}

TEST(Fubini, Values) {
  EXPECT_EQ(fubini(0), 1);
  EXPECT_EQ(fubini(1), 1);
  EXPECT_EQ(fubini(2), 3);
  EXPECT_EQ(fubini(3), 13);
  EXPECT_EQ(fubini(4), 75);
  EXPECT_EQ(fubini(5), BigInt(oracle::arrangements(5).size()));
  EXPECT_EQ(fubini(5), 541);
}

TEST(RelabelCanonical, Examples) {
  EXPECT_EQ(relabel_canonical(W("2123212", 3)), W("1213121", 3));
  EXPECT_EQ(relabel_canonical(W("1213121", 3)), W("1213121", 3));
  EXPECT_EQ(relabel_canonical(W("333", 3)), W("111", 3));
}

TEST(RelabelCanonical, ClassesAreLetterPermutationOrbits) {
  const auto perms = LetterPermutation::all(3);
  std::map<Word, std::set<Word>> classes;
  oracle::for_each_word(3, 5, [&](const oracle::Letters& l) {
    const Word w(std::vector<Letter>(l.begin(), l.end()), 3);
    classes[relabel_canonical(w)].insert(w);
    for (const auto& s : perms) ASSERT_EQ(relabel_canonical(apply_letter_permutation(w, s)), relabel_canonical(w));
  });
  for (const auto& [canon, members] : classes) {
    EXPECT_EQ(6 % members.size(), 0u);
    const std::set<Letter> used(canon.begin(), canon.end());
    if (used.size() == 3) { EXPECT_EQ(members.size(), 6u); }
  }
}

TEST(LetterPermutation, ApplyAndValidate) {
  const LetterPermutation swap12({2, 1});
  EXPECT_EQ(apply_letter_permutation(W("121", 2), swap12), W("212", 2));
  EXPECT_EQ(apply_letter_permutation(W("1213121", 3), LetterPermutation::identity(3)), W("1213121", 3));
  EXPECT_EQ(apply_letter_permutation(W("123", 3), LetterPermutation({3, 1, 2})), W("312", 3));
  EXPECT_THROW(LetterPermutation({1, 1, 2}), DomainError);
  EXPECT_THROW(LetterPermutation({1, 4, 2}), DomainError);
  EXPECT_THROW(apply_letter_permutation(W("12", 3), swap12), DomainError);
  EXPECT_EQ(LetterPermutation::all(3).size(), 6u);
}

TEST(WordFormat, DigitsAndCommas) {
  EXPECT_EQ(W("1213121", 3).str(), "1213121");
  const Word big = Word::parse("10,2,7", 12);
  EXPECT_EQ(big.size(), 3u);
  EXPECT_EQ(big[0], 10u);
  EXPECT_EQ(big.str(), "10,2,7");
  EXPECT_EQ(Word::parse(big.str(), 12), big);
  EXPECT_THROW(Word::parse("12x", 3), ParseError);
  EXPECT_THROW(Word::parse("124", 3), ParseError);
  EXPECT_THROW(Word::parse("10,,2", 12), ParseError);
  EXPECT_THROW(Word::parse("0", 3), ParseError);
  EXPECT_TRUE(Word::parse("", 3).empty());
}
