#include "kumarp/weyl.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kumarp;

namespace {

WeylGroup group(const char* tag) { return WeylGroup(gcm_from_tag(tag)); }

}  // namespace

TEST(Word, ParseAndFormat) {
    EXPECT_EQ(parse_word("1,2,1"), (Word{0, 1, 0}));
    EXPECT_EQ(parse_word(""), Word{});
    EXPECT_EQ(parse_word(" 3, 1 "), (Word{2, 0}));
    EXPECT_EQ(format_word({0, 1, 0}), "1,2,1");
    EXPECT_EQ(format_word({}), "");
    EXPECT_THROW(parse_word("1,,2"), WeylError);
    EXPECT_THROW(parse_word("0"), WeylError);
    EXPECT_THROW(parse_word("1,a"), WeylError);
    EXPECT_THROW(parse_word("1,"), WeylError);
}

TEST(Weyl, ElementFromWord) {
    const auto a2 = group("A2");
    EXPECT_EQ(a2.element_from_word({0, 0}), a2.identity());
    EXPECT_EQ(a2.element_from_word({0, 0}).length(), 0);
    const auto x = a2.element_from_word({0, 1, 0});
    EXPECT_EQ(x.length(), 3);
    EXPECT_EQ(x, a2.element_from_word({1, 0, 1}));
    EXPECT_EQ(group("B2").element_from_word({0, 1, 0, 1}).length(), 4);
    EXPECT_THROW(a2.element_from_word({2}), WeylError);
}

TEST(Weyl, NonReducedWordIsShortened) {
    const auto a2 = group("A2");
    const auto e = a2.element_from_word({0, 1, 0, 1});  // = s2 s1 by the braid relation
    EXPECT_EQ(e.length(), 2);
    EXPECT_EQ(e, a2.element_from_word({1, 0}));
    EXPECT_FALSE(a2.is_reduced({0, 1, 0, 1}));
    EXPECT_TRUE(a2.is_reduced({0, 1, 0}));
}

TEST(Weyl, RightDescents) {
    const auto a2 = group("A2");
    EXPECT_TRUE(a2.right_descents(a2.identity()).empty());
    EXPECT_EQ(a2.right_descents(a2.element_from_word({0})), (std::vector<int>{0}));
    EXPECT_EQ(a2.right_descents(a2.longest_element()), (std::vector<int>{0, 1}));
}

TEST(Weyl, CanonicalReducedWord) {
    const auto a2 = group("A2");
    EXPECT_EQ(a2.canonical_reduced_word(a2.identity()), Word{});
    EXPECT_EQ(a2.canonical_reduced_word(a2.element_from_word({1})), Word{1});
    const auto w0 = a2.element_from_word({1, 0, 1});
    const auto word = a2.canonical_reduced_word(w0);
    EXPECT_EQ(word, (Word{0, 1, 0}));
    EXPECT_EQ(a2.element_from_word(word), w0);
}

TEST(Weyl, CanonicalWordMultipliesBack) {
    for (const char* tag : {"A3", "B3", "G2", "affine-A1"}) {
        const auto g = group(tag);
        for (const auto& e : g.enumerate_ball(6)) {
            const auto word = g.canonical_reduced_word(e);
            EXPECT_EQ(static_cast<int>(word.size()), e.length());
            EXPECT_EQ(g.element_from_word(word), e);
        }
    }
}

TEST(Weyl, AllReducedWords) {
    const auto a2 = group("A2");
    EXPECT_EQ(a2.all_reduced_words(a2.longest_element()).words, (std::vector<Word>{{0, 1, 0}, {1, 0, 1}}));
    EXPECT_EQ(a2.all_reduced_words(a2.element_from_word({0})).words, (std::vector<Word>{{0}}));
    EXPECT_EQ(group("B2").all_reduced_words(group("B2").longest_element()).words.size(), 2u);
    EXPECT_EQ(group("G2").all_reduced_words(group("G2").longest_element()).words.size(), 2u);
    // A3 longest element has 16 reduced words
    const auto a3 = group("A3");
    const auto all = a3.all_reduced_words(a3.longest_element());
    EXPECT_EQ(all.words.size(), 16u);
    EXPECT_FALSE(all.truncated);
    for (const auto& w : all.words) EXPECT_EQ(a3.element_from_word(w), a3.longest_element());
}

TEST(Weyl, AllReducedWordsCap) {
    const auto a3 = group("A3");
    const auto some = a3.all_reduced_words(a3.longest_element(), 5);
    EXPECT_EQ(some.words.size(), 5u);
    EXPECT_TRUE(some.truncated);
    const auto exact = a3.all_reduced_words(a3.longest_element(), 16);
    EXPECT_EQ(exact.words.size(), 16u);
    EXPECT_FALSE(exact.truncated);
    EXPECT_THROW(a3.all_reduced_words(a3.identity(), 0), WeylError);
}

TEST(Weyl, LengthIsInversionCount) {
    for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        const auto g = group(tag);
        for (const auto& e : g.all_elements()) EXPECT_EQ(g.inversion_count(e), e.length()) << tag;
    }
}

TEST(Weyl, GroupOrders) {
    const std::pair<const char*, std::size_t> cases[] = {{"A1", 2}, {"A2", 6},  {"A3", 24}, {"B2", 8},
                                                         {"B3", 48}, {"C3", 48}, {"G2", 12}, {"D4", 192}};
    for (auto [tag, order] : cases) EXPECT_EQ(group(tag).all_elements().size(), order) << tag;
}

TEST(Weyl, BruhatExamples) {
    const auto a2 = group("A2");
    const auto s1 = a2.element_from_word({0});
    const auto s2 = a2.element_from_word({1});
    for (const auto& w : a2.all_elements()) EXPECT_TRUE(a2.bruhat_leq(a2.identity(), w));
    EXPECT_FALSE(a2.bruhat_leq(s1, s2));
    EXPECT_TRUE(a2.bruhat_leq(s1, a2.element_from_word({1, 0})));
}

TEST(Weyl, BruhatMatchesSubwordOracle) {
    for (const char* tag : {"A2", "B2", "A3"}) {
        const auto g = group(tag);
        const auto all = g.all_elements();
        for (const auto& w : all)
            for (const auto& y : all)
                EXPECT_EQ(g.bruhat_leq(y, w), oracle::bruhat_leq_subword(g, y, w))
                    << tag << " y=" << format_word(y.word) << " w=" << format_word(w.word);
    }
}

TEST(Weyl, BruhatMatchesSubwordOracleAffine) {
    const auto g = group("affine-A1");
    const auto ball = g.enumerate_ball(6);
    for (const auto& w : ball)
        for (const auto& y : ball) EXPECT_EQ(g.bruhat_leq(y, w), oracle::bruhat_leq_subword(g, y, w));
}

TEST(Weyl, Intervals) {
    const auto a2 = group("A2");
    const auto s1 = a2.element_from_word({0});
    EXPECT_EQ(a2.bruhat_interval(a2.identity(), s1).size(), 2u);
    EXPECT_EQ(a2.bruhat_interval(a2.identity(), a2.longest_element()).size(), 6u);
    const auto iv = a2.bruhat_interval(s1, a2.longest_element());
    const std::set<WeylElement> got(iv.begin(), iv.end());
    const std::set<WeylElement> want{s1, a2.element_from_word({0, 1}), a2.element_from_word({1, 0}),
                                     a2.longest_element()};
    EXPECT_EQ(got, want);
    EXPECT_THROW(a2.bruhat_interval(s1, a2.element_from_word({1})), WeylError);
}

TEST(Weyl, IntervalsAgreeWithBruteForce) {
    for (const char* tag : {"A3", "B2", "G2"}) {
        const auto g = group(tag);
        const auto all = g.all_elements();
        for (const auto& z : all) {
            for (const auto& x : all) {
                if (!g.bruhat_leq(x, z)) continue;
                const auto iv = g.bruhat_interval(x, z);
                std::set<WeylElement> brute;
                for (const auto& y : all)
                    if (g.bruhat_leq(x, y) && g.bruhat_leq(y, z)) brute.insert(y);
                EXPECT_EQ(std::set<WeylElement>(iv.begin(), iv.end()), brute) << tag;
            }
        }
    }
}

TEST(Weyl, Ball) {
    EXPECT_EQ(group("A2").enumerate_ball(3).size(), 6u);
    EXPECT_EQ(group("affine-A1").enumerate_ball(4).size(), 9u);
    EXPECT_EQ(group("B2").enumerate_ball(4).size(), 8u);
    EXPECT_EQ(group("affine-A1").enumerate_ball(0).size(), 1u);
    EXPECT_THROW(group("A2").enumerate_ball(-1), WeylError);
}

TEST(Weyl, CosetRepresentatives) {
    const auto a3 = group("A3");
    EXPECT_EQ(a3.minimal_coset_reps({0, 1, 2}), std::vector<WeylElement>{a3.identity()});
    EXPECT_EQ(a3.minimal_coset_reps({}).size(), 24u);
    EXPECT_EQ(group("A1").minimal_coset_reps({}).size(), 2u);
    EXPECT_EQ(a3.minimal_coset_reps({1}).size(), 12u);
    EXPECT_EQ(group("C3").minimal_coset_reps({1, 2}).size(), 6u);
    EXPECT_EQ(group("G2").minimal_coset_reps({0}).size(), 6u);
    EXPECT_THROW(group("affine-A1").minimal_coset_reps({}), NonFiniteTypeError);
}

TEST(Weyl, MismatchedGroupRejected) {
    const auto a2 = group("A2");
    const auto a3 = group("A3");
    EXPECT_THROW(a2.bruhat_leq(a3.identity(), a2.identity()), WeylError);
}
