#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrange/digraph.hpp"

using namespace arrange;

TEST_CASE("weight intervals") {
    WeightInterval w(-2, 1);
    CHECK(w.size() == 4);
    CHECK(w.contains(0));
    CHECK_FALSE(w.contains(2));
    CHECK(WeightInterval::empty().size() == 0);
    CHECK(w.contains(WeightInterval::empty()));
    CHECK_FALSE(WeightInterval::empty().contains(w));
    CHECK(w.shifted(3) == WeightInterval(1, 4));
    CHECK(w.negated() == WeightInterval(-1, 2));
    CHECK(w.intersect(WeightInterval(0, 5)) == WeightInterval(0, 1));
    CHECK(w.intersect(WeightInterval(2, 5)).is_empty());
    CHECK_THROWS_AS(WeightInterval(1, 0), std::invalid_argument);
}

TEST_CASE("kings and cokings") {
    CHECK(transitive_tournament(4).kings() == std::set<int>{1});
    CHECK(transitive_tournament(4).cokings() == std::set<int>{4});
    CHECK(complete_digraph(3).kings() == std::set<int>{1, 2, 3});
    CHECK(complete_digraph(3).cokings() == std::set<int>{1, 2, 3});
    CHECK(edgeless_digraph(3).kings().empty());
    CHECK(edgeless_digraph(3).cokings().empty());
    // single vertex is vacuously both
    CHECK(edgeless_digraph(1).kings() == std::set<int>{1});
}

TEST_CASE("ceo on transitive tournament") {
    auto g = transitive_tournament(4, WeightInterval(-1, 0));
    auto g2 = ceo(g, 4);
    VertexWeightedDigraph::ArcSet expect{{1, 2}, {1, 3}, {2, 3}};
    CHECK(g2.arcs() == expect);
    for (int i = 1; i <= 3; ++i) CHECK(g2.weight(i) == WeightInterval(-2, 0));
    CHECK(g2.weight(4) == WeightInterval(-1, 0));

    CHECK_THROWS_AS(ceo(g, 1), NotACoking);
    CHECK_THROWS_AS(ceo(transitive_tournament(3), 3), EmptyWeight);
}

TEST_CASE("ceo on single vertex is a no-op") {
    auto g = edgeless_digraph(1, WeightInterval(0, 0));
    CHECK(ceo(g, 1) == g);
    CHECK(keo(g, 1) == g);
}

TEST_CASE("ceo_within walks the shi-ish restriction") {
    // (T_5^2 restricted to [4], psi_5^2) --ceo at 4--> (T_5^3[4], psi_5^3|)
    auto g = induced(shi_ish_digraph(5, 2), {1, 2, 3, 4});
    auto h = ceo(g, 4);
    auto expect = induced(shi_ish_digraph(5, 3), {1, 2, 3, 4});
    CHECK(h == expect);
}

TEST_CASE("keo: catalan figure panel") {
    auto d = catalan_d_digraph(3, 1);
    VertexWeightedDigraph::ArcSet expect_arcs{{1, 2}, {1, 3}, {2, 3}, {3, 2}};
    CHECK(d.arcs() == expect_arcs);
    CHECK(d.weight(1) == WeightInterval(-1, 1));
    CHECK(d.weight(2) == WeightInterval(-2, 1));
    CHECK(d.weight(3) == WeightInterval(-2, 1));

    auto c2 = keo(d, 1);
    CHECK(c2 == catalan_c_digraph(3, 2));
    CHECK_THROWS_AS(keo(d, 2), NotAKing);
}

TEST_CASE("keo on converse equals converse of ceo") {
    auto g = transitive_tournament(3, WeightInterval(-1, 0));
    int v = 3; // coking of T_3
    CHECK(keo(converse(g), v) == converse(ceo(g, v)));
}

TEST_CASE("conditions C, K, Z") {
    auto g = transitive_tournament(4, WeightInterval(-1, 0));
    CHECK(condition_c(g, 4));
    CHECK(condition_z(g, 4) == std::set<long long>{0});

    // C fails: [-2,-1] not inside [0,0]
    std::vector<WeightInterval> psi{WeightInterval(-2, 0), WeightInterval(-2, 0),
                                    WeightInterval(0, 0)};
    VertexWeightedDigraph h(3, {}, psi);
    CHECK_FALSE(condition_c(h, 3));

    CHECK_FALSE(condition_c(transitive_tournament(3), 3));
    CHECK_FALSE(condition_k(transitive_tournament(3), 1));

    // K mirrors C on the converse
    CHECK(condition_k(converse(g), 4));
}

TEST_CASE("condition Z is invariant under relabeling") {
    auto g = catalan_d_digraph(4, 1);
    // relabel by the permutation (2 3 4 1)
    std::vector<int> perm{2, 3, 4, 1};
    VertexWeightedDigraph::ArcSet arcs;
    for (auto [i, j] : g.arcs()) arcs.insert({perm[i - 1], perm[j - 1]});
    std::vector<WeightInterval> psi(5, WeightInterval::empty());
    for (int i = 1; i <= 4; ++i) psi[perm[i - 1]] = g.weight(i);
    VertexWeightedDigraph h(4, arcs, psi);
    for (int v = 1; v <= 4; ++v) CHECK(condition_z(g, v) == condition_z(h, perm[v - 1]));
}

TEST_CASE("converse and induced") {
    auto t3c = converse(transitive_tournament(3));
    VertexWeightedDigraph::ArcSet expect{{2, 1}, {3, 1}, {3, 2}};
    CHECK(t3c.arcs() == expect);
    CHECK(converse(converse(catalan_d_digraph(3, 1))) == catalan_d_digraph(3, 1));
    CHECK(transitive_tournament(5).cokings() == converse(transitive_tournament(5)).kings());

    auto g = induced(shi_ish_digraph(5, 2), {1, 2, 3, 4});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(g.has_arc(i, j));
    CHECK(g.vertex_count() == 4);
}

TEST_CASE("isolated_min_weight") {
    auto g = shi_ish_digraph(4, 4); // edgeless, nested weights
    CHECK(isolated_min_weight(g, 4));
    CHECK_FALSE(isolated_min_weight(g, 1)); // weight not minimal
    CHECK_FALSE(isolated_min_weight(shi_ish_digraph(4, 1), 4)); // not isolated
}

TEST_CASE("families") {
    auto s1 = shi_ish_digraph(4, 1);
    CHECK(s1 == transitive_tournament(4, WeightInterval(-1, 0)));

    auto s4 = shi_ish_digraph(4, 4);
    CHECK(s4.arcs().empty());
    CHECK(s4.weight(1) == WeightInterval(-4, 0));
    CHECK(s4.weight(2) == WeightInterval(-3, 0));
    CHECK(s4.weight(3) == WeightInterval(-2, 0));
    CHECK(s4.weight(4) == WeightInterval(-1, 0));

    CHECK(catalan_c_digraph(3, 1) == complete_digraph(3, WeightInterval(-1, 1)));
    CHECK_THROWS_AS(shi_ish_digraph(3, 4), ParamOutOfRange);
    CHECK_THROWS_AS(catalan_c_digraph(0, 1), ParamOutOfRange);
}

TEST_CASE("digraph isomorphism") {
    auto t3 = transitive_tournament(3);
    VertexWeightedDigraph relabeled(3, {{2, 3}, {2, 1}, {3, 1}}, // 1->2->3 under (2 3 1)
                                    std::vector<WeightInterval>(4, WeightInterval::empty()));
    CHECK(digraph_isomorphic(t3, relabeled));

    VertexWeightedDigraph cycle(3, {{1, 2}, {2, 3}, {3, 1}},
                                std::vector<WeightInterval>(4, WeightInterval::empty()));
    CHECK_FALSE(digraph_isomorphic(cycle, t3));
    CHECK(digraph_isomorphic(edgeless_digraph(3), edgeless_digraph(3)));
    CHECK_THROWS_AS(digraph_isomorphic(edgeless_digraph(9), edgeless_digraph(9)), TooLarge);
}

TEST_CASE("shi-ish CEO chain, l <= 6") {
    for (int l = 2; l <= 6; ++l) {
        for (int k = 1; k < l; ++k) {
            int v = l - k + 1;
            std::vector<int> w;
            for (int i = 1; i <= v; ++i) w.push_back(i);
            auto next = ceo_within(shi_ish_digraph(l, k), w, v);
            CHECK(next == shi_ish_digraph(l, k + 1));
        }
    }
}

TEST_CASE("catalan CEO/KEO chain, l <= 4") {
    for (int l = 1; l <= 4; ++l) {
        for (int k = 1; k <= l; ++k) {
            std::vector<int> w;
            for (int i = k; i <= l; ++i) w.push_back(i);
            auto d = ceo_within(catalan_c_digraph(l, k), w, k);
            CHECK(d == catalan_d_digraph(l, k));
            auto c = keo_within(d, w, k);
            CHECK(c == catalan_c_digraph(l, std::min(k + 1, l)));
        }
    }
}

TEST_CASE("elimination strictly removes in-arcs and extends weights") {
    auto g = catalan_c_digraph(4, 2);
    std::vector<int> w{2, 3, 4};
    auto g2 = ceo_within(g, w, 2);
    int indeg = 0;
    for (auto [i, j] : g.arcs())
        if (j == 2) ++indeg;
    CHECK(g.arcs().size() - g2.arcs().size() == (size_t)indeg);
    for (int i : w) {
        if (i == 2) continue;
        CHECK(g2.weight(i).lower() == g.weight(i).lower() - 1);
        CHECK(g2.weight(i).upper() == g.weight(i).upper());
    }
}
