#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tle/tl_algebra.hpp"

using namespace tle;

namespace {

FCElement fc(const CoxeterGraph& g, const char* w) { return normalize(g, parse_word(w)); }

}  // namespace

TEST(Product, DefiningRelations) {
    auto g = build_graph(6);
    auto s = fc(g, "2"), t = fc(g, "3"), u = fc(g, "5");
    EXPECT_EQ(product(g, s, s), (ScaledMonomial{1, s}));
    EXPECT_EQ(product_word(g, {2, 3}, {0, s}), (ScaledMonomial{0, s}));
    EXPECT_EQ(product(g, s, u), product(g, u, s));
    EXPECT_EQ(product(g, s, t).elt, fc(g, "2 3"));
    EXPECT_EQ(product(g, fc(g, "0"), fc(g, "3 0")), (ScaledMonomial{0, fc(g, "0")}));
    EXPECT_EQ(product(g, identity_element(), t), (ScaledMonomial{0, t}));
}

TEST(Product, AgreesWithRewritingOracle) {
    auto g = build_graph(6);
    auto elts = enumerate_fc(g, 5);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 3000; ++k) {
        const auto& x = elts[rng() % elts.size()];
        const auto& y = elts[rng() % elts.size()];
        Word xy = x.word();
        xy.insert(xy.end(), y.word().begin(), y.word().end());
        auto [d, z] = oracle::tl_reduce(6, xy);
        auto p = product(g, x, y);
        EXPECT_EQ(p.exp, d) << x.to_string() << " * " << y.to_string();
        EXPECT_EQ(p.elt, normalize(g, z)) << x.to_string() << " * " << y.to_string();
    }
}

TEST(Product, Associativity) {
    auto g = build_graph(7);
    auto elts = enumerate_fc(g, 8);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 2000; ++k) {
        const auto& x = elts[rng() % elts.size()];
        const auto& y = elts[rng() % elts.size()];
        const auto& z = elts[rng() % elts.size()];
        auto xy = product(g, x, y), yz = product(g, y, z);
        auto left = product(g, xy.elt, z), right = product(g, x, yz.elt);
        EXPECT_EQ(left.exp + xy.exp, right.exp + yz.exp);
        EXPECT_EQ(left.elt, right.elt);
    }
}

TEST(AValue, AgreesWithReducedWordOracle) {
    auto g = build_graph(6);
    for (const auto& w : enumerate_fc(g, 7)) EXPECT_EQ(a_value(g, w), oracle::a_value(6, w.word())) << w.to_string();
    auto g7 = build_graph(7);
    std::mt19937_64 rng(2);
    auto elts = enumerate_fc(g7, 9);
    for (int k = 0; k < 300; ++k) {
        const auto& w = elts[rng() % elts.size()];
        EXPECT_EQ(a_value(g7, w), oracle::a_value(7, w.word())) << w.to_string();
    }
}

TEST(AValue, DecompositionIsReducedFactorization) {
    auto g = build_graph(6);
    for (const auto& w : enumerate_fc(g)) {
        auto dec = max_antichain_decomposition(g, w);
        EXPECT_EQ(dec.a.size(), a_value(g, w));
        Word all = dec.x.word();
        all.insert(all.end(), dec.a.vertices().begin(), dec.a.vertices().end());
        all.insert(all.end(), dec.y.word().begin(), dec.y.word().end());
        ASSERT_EQ(classify_word(g, all), WordStatus::ReducedFC) << w.to_string();
        EXPECT_EQ(normalize(g, all), w);
        EXPECT_EQ(top_maximum_antichain(Heap(g, w)).size(), dec.a.size());
    }
}

TEST(AValue, KnownValues) {
    auto g = build_graph(6);
    EXPECT_EQ(a_value(g, identity_element()), 0u);
    EXPECT_EQ(a_value(g, fc(g, "1 3 5")), 3u);
    EXPECT_EQ(a_value(g, fc(g, "1 2 3 4 5")), 1u);
    EXPECT_EQ(a_value(g, fc(g, "2 1 3 2")), 2u);
}

TEST(CommutingSets, CountMatchesIndependentSets) {
    for (int n : {6, 7, 8, 9}) {
        auto g = build_graph(n);
        auto sets = commuting_sets(g);
        EXPECT_EQ(sets.size(), oracle::independent_sets(n)) << "n = " << n;
        EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
        EXPECT_TRUE(sets.front().empty());
    }
    auto g = build_graph(6);
    EXPECT_THROW(CommutingSet(g, {2, 3}), std::invalid_argument);
    EXPECT_EQ(CommutingSet(g, {5, 1, 3}).to_string(), "{1,3,5}");
}

TEST(CommutingSets, Neighbours) {
    auto g = build_graph(7);
    CommutingSet a(g, {0, 2, 4, 6}), b(g, {0, 1, 4, 6}), c(g, {1, 3, 5});
    EXPECT_TRUE(are_neighbours(g, a, b));
    EXPECT_TRUE(are_neighbours(g, b, a));
    EXPECT_FALSE(are_neighbours(g, a, a));
    EXPECT_FALSE(are_neighbours(g, a, c));
    EXPECT_FALSE(are_neighbours(g, CommutingSet(g, {0, 5}), CommutingSet(g, {1, 5})));
}

TEST(PClasses, RepresentativesE6E7) {
    auto g6 = build_graph(6);
    auto p6 = p_prime(g6);
    std::vector<CommutingSet> want6{CommutingSet(g6, {5}), CommutingSet(g6, {3, 5}), CommutingSet(g6, {1, 3, 5}),
                                    CommutingSet()};
    EXPECT_EQ(p6, want6);
    auto g7 = build_graph(7);
    auto p7 = p_prime(g7);
    EXPECT_EQ(p7.size(), 6u);
    EXPECT_NE(std::find(p7.begin(), p7.end(), CommutingSet(g7, {0, 4, 6})), p7.end());
    EXPECT_NE(std::find(p7.begin(), p7.end(), CommutingSet(g7, {0, 2, 4, 6})), p7.end());
}

TEST(PClasses, PartitionIsClosedUnderNeighbours) {
    for (int n : {6, 7, 8}) {
        auto g = build_graph(n);
        auto part = p_classes(g);
        std::size_t total = 0;
        for (const auto& cls : part.classes) total += cls.size();
        EXPECT_EQ(total, commuting_sets(g).size());
        auto sets = commuting_sets(g);
        for (const auto& a : sets)
            for (const auto& b : sets)
                if (are_neighbours(g, a, b)) EXPECT_EQ(part.class_of(a), part.class_of(b));
        auto reps = p_prime(g);
        for (const auto& cls : part.classes) {
            std::size_t hits = 0;
            for (const auto& r : reps) hits += std::binary_search(cls.begin(), cls.end(), r) ? 1 : 0;
            EXPECT_EQ(hits, 1u) << "n = " << n << ", class of " << cls.front().to_string();
        }
    }
    EXPECT_EQ(p_classes(build_graph(6)).classes.size(), 4u);
    EXPECT_EQ(p_classes(build_graph(7)).classes.size(), 6u);
}

TEST(PClasses, E7ClassOf0246) {
    auto g = build_graph(7);
    auto part = p_classes(g);
    CommutingSet a(g, {0, 2, 4, 6}), b(g, {0, 1, 4, 6});
    const auto& cls = part.classes[part.class_of(a)];
    EXPECT_EQ(cls, (std::vector<CommutingSet>{b, a}));
    EXPECT_EQ(part.representatives[part.class_of(a)], a);
}

TEST(Purity, ExponentBoundedByAValues) {
    auto g = build_graph(6);
    auto elts = enumerate_fc(g, 6);
    for (const auto& x : elts)
        for (const auto& y : elts) {
            if (x.length() + y.length() > 8) continue;
            auto p = product(g, x, y);
            EXPECT_GE(p.exp, 0);
            EXPECT_LE(static_cast<std::size_t>(p.exp), std::min(a_value(g, x), a_value(g, y)));
        }
}
