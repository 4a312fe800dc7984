#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tle/coxeter.hpp"

using namespace tle;

namespace {

// all words of length <= max_len over n letters
std::vector<Word> all_words(int n, std::size_t max_len) {
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (int s = 0; s < n; ++s) {
            Word w = out[i];
            w.push_back(s);
            out.push_back(w);
        }
    }
    return out;
}

}  // namespace

TEST(CoxeterGraph, EdgesOfE6) {
    auto g = build_graph(6);
    std::vector<std::pair<int, int>> expected{{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    EXPECT_EQ(g.edges(), expected);
    EXPECT_EQ(g.neighbours(3), (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(g.bond(0, 3), 3);
    EXPECT_EQ(g.bond(0, 1), 2);
    EXPECT_EQ(g.bond(2, 2), 1);
    EXPECT_TRUE(g.commute(0, 5));
    EXPECT_FALSE(g.commute(4, 4));
}

TEST(CoxeterGraph, RejectsSmallRankAndBadGenerators) {
    EXPECT_THROW(build_graph(5), std::invalid_argument);
    auto g = build_graph(7);
    EXPECT_NO_THROW(g.check(6));
    EXPECT_THROW(g.check(7), std::out_of_range);
    EXPECT_THROW(g.check(-1), std::out_of_range);
}

TEST(Words, ParseAndFormat) {
    EXPECT_EQ(parse_word("1 2 4 0 5"), (Word{1, 2, 4, 0, 5}));
    EXPECT_EQ(parse_word(" 1,2  3 "), (Word{1, 2, 3}));
    EXPECT_TRUE(parse_word("").empty());
    EXPECT_TRUE(parse_word("   ").empty());
    EXPECT_THROW(parse_word("1 x"), std::invalid_argument);
    EXPECT_THROW(parse_word("-1"), std::invalid_argument);
    EXPECT_EQ(format_word({3, 0, 2}), "3 0 2");
}

TEST(Words, ClassifyExamples) {
    auto g = build_graph(6);
    EXPECT_EQ(classify_word(g, {1, 1}), WordStatus::NotReduced);
    EXPECT_EQ(classify_word(g, {1, 2, 1}), WordStatus::NotFullyCommutative);
    EXPECT_EQ(classify_word(g, {3, 0, 3}), WordStatus::NotFullyCommutative);
    EXPECT_EQ(classify_word(g, {1, 5, 1}), WordStatus::NotReduced);
    EXPECT_EQ(classify_word(g, {2, 1, 3, 2}), WordStatus::ReducedFC);
    EXPECT_EQ(classify_word(g, {}), WordStatus::ReducedFC);
    EXPECT_THROW(normalize(g, {1, 2, 1}), NotFullyCommutative);
    EXPECT_THROW(normalize(g, {4, 4}), NotReduced);
    EXPECT_THROW(normalize(g, {6}), std::out_of_range);
}

TEST(Words, ClassifyAgreesWithCommutationClassOracle) {
    auto g = build_graph(6);
    for (const auto& w : all_words(6, 5)) {
        const bool fc = oracle::is_reduced_fc(6, w);
        const auto status = classify_word(g, w);
        EXPECT_EQ(status == WordStatus::ReducedFC, fc) << format_word(w);
        // reducedness itself against the group action
        EXPECT_EQ(status != WordStatus::NotReduced, is_reduced(g, w)) << format_word(w);
    }
}

TEST(Words, NormalFormIsConstantOnCommutationClasses) {
    auto g = build_graph(6);
    std::mt19937_64 rng(3);
    auto all = enumerate_fc(g, 9);
    std::map<Word, FCElement> seen;
    for (int k = 0; k < 200; ++k) {
        const auto& x = all[rng() % all.size()];
        for (const auto& u : oracle::commutation_class(6, x.word())) {
            EXPECT_EQ(normalize(g, u), x) << format_word(u);
            auto [it, inserted] = seen.emplace(u, x);
            EXPECT_EQ(it->second, x);
        }
    }
    // distinct normal forms are distinct group elements
    std::set<std::vector<std::int64_t>> coords;
    for (const auto& x : all) coords.insert(GroupElement::from_word(g, x.word()).coords());
    EXPECT_EQ(coords.size(), all.size());
}

TEST(Enumeration, LengthTwoCountAndTotals) {
    auto g = build_graph(6);
    auto upto2 = enumerate_fc(g, 2);
    std::size_t len2 = 0;
    for (const auto& x : upto2) len2 += x.length() == 2 ? 1 : 0;
    EXPECT_EQ(len2, 20u);
    EXPECT_EQ(upto2.size(), 1u + 6u + 20u);
    EXPECT_EQ(enumerate_fc(g).size(), 662u);
    EXPECT_EQ(enumerate_fc(build_graph(7)).size(), 2670u);
}

TEST(Enumeration, StrategiesAgreeAndMatchBruteForce) {
    auto g = build_graph(6);
    auto right = enumerate_fc(g, std::nullopt, EnumerationOrder::RightBFS);
    auto left = enumerate_fc(g, std::nullopt, EnumerationOrder::LeftBFS);
    EXPECT_EQ(right, left);
    // every reduced FC word of length <= 5 normalizes into the enumeration, and conversely
    std::set<Word> from_words;
    for (const auto& w : all_words(6, 5))
        if (oracle::is_reduced_fc(6, w)) from_words.insert(normalize(g, w).word());
    std::set<Word> from_enum;
    for (const auto& x : enumerate_fc(g, 5)) from_enum.insert(x.word());
    EXPECT_EQ(from_words, from_enum);
    EXPECT_THROW(enumerate_fc(build_graph(9)), std::invalid_argument);
    EXPECT_EQ(enumerate_fc(build_graph(9), 1).size(), 10u);
}

TEST(Elements, InverseAndDescents) {
    auto g = build_graph(6);
    auto x = normalize(g, parse_word("1 2 4 0 5"));
    auto xi = inverse(g, x);
    EXPECT_EQ(inverse(g, xi), x);
    EXPECT_EQ(GroupElement::from_word(g, xi.word()), GroupElement::from_word(g, x.word()).inverse(g));
    for (const auto& w : enumerate_fc(g, 7)) {
        auto ge = GroupElement::from_word(g, w.word());
        std::vector<int> left;
        for (int s = 0; s < 6; ++s)
            if (ge.has_left_descent(s)) left.push_back(s);
        EXPECT_EQ(descents(g, w, Side::Left), left) << w.to_string();
        auto wi = GroupElement::from_word(g, inverse(g, w).word());
        std::vector<int> right;
        for (int s = 0; s < 6; ++s)
            if (wi.has_left_descent(s)) right.push_back(s);
        EXPECT_EQ(descents(g, w, Side::Right), right) << w.to_string();
        EXPECT_EQ(ge.length(g), w.length());
    }
}

TEST(Elements, OneSidedMultiplication) {
    auto g = build_graph(6);
    for (const auto& x : enumerate_fc(g, 6))
        for (int s = 0; s < 6; ++s) {
            Word ws = x.word();
            ws.push_back(s);
            auto r = right_multiply_fc(g, x, s);
            EXPECT_EQ(r.has_value(), oracle::is_reduced_fc(6, ws));
            if (r) EXPECT_EQ(*r, normalize(g, ws));
            Word sw{s};
            sw.insert(sw.end(), x.word().begin(), x.word().end());
            auto l = left_multiply_fc(g, s, x);
            EXPECT_EQ(l.has_value(), oracle::is_reduced_fc(6, sw));
            if (l) EXPECT_EQ(*l, normalize(g, sw));
        }
}

TEST(Elements, HeapOrder) {
    auto g = build_graph(6);
    auto x = normalize(g, parse_word("2 1 3 2"));
    Heap h(g, x);
    ASSERT_EQ(h.size(), 4u);
    EXPECT_EQ(h.minimal().size(), 1u);
    EXPECT_EQ(h.maximal().size(), 1u);
    EXPECT_FALSE(h.comparable(1, 2));  // the 1 and the 3
    EXPECT_TRUE(h.less(0, 3));
}

TEST(Bruhat, AgreesWithSubwordOracle) {
    auto g = build_graph(6);
    auto elts = enumerate_fc(g, 5);
    for (const auto& w : elts)
        for (const auto& x : elts) {
            if (x.length() > w.length()) continue;
            EXPECT_EQ(bruhat_leq(g, x, w), oracle::bruhat_leq(g, x.word(), w.word()))
                << x.to_string() << " <= " << w.to_string();
        }
}
