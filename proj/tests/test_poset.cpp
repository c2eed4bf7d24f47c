#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrange/freeness.hpp"
#include "arrange/multiarrangement.hpp"
#include "arrange/poset.hpp"

using namespace arrange;

namespace {

Flat xv_flat(const VertexWeightedDigraph& g, int v) {
    // z = 0, x_i - x_j = 0 and arcs among the others, weights of the others
    auto da = cone_digraph(g);
    std::vector<size_t> idx;
    for (size_t h = 0; h < da.arr.size(); ++h) {
        const auto& o = da.origins[h];
        bool in = false;
        switch (o.kind) {
            case HyperplaneOrigin::Kind::Infinity: in = true; break;
            case HyperplaneOrigin::Kind::Braid:
            case HyperplaneOrigin::Kind::Arc: in = o.i != v && o.j != v; break;
            case HyperplaneOrigin::Kind::Weight: in = o.i != v; break;
        }
        if (in) idx.push_back(h);
    }
    return flat_of(da.arr, idx);
}

} // namespace

TEST_CASE("ziegler restriction examples") {
    // cone of A(T_2, [-1,0]) onto infinity: three lines, multiplicity 2 each
    auto da = cone_digraph(transitive_tournament(2, WeightInterval(-1, 0)));
    auto m = ziegler_restriction(da.arr, *da.arr.infinity_index());
    CHECK(m.arr.size() == 3);
    CHECK(m.mult == std::vector<long long>(3, 2));
    CHECK(m.total_multiplicity() == (long long)da.arr.size() - 1);

    // cone of Cat(2): one line with multiplicity 3
    auto ccat2 = cone(catalan_arrangement(2));
    auto m2 = ziegler_restriction(ccat2, *ccat2.infinity_index());
    CHECK(m2.arr.size() == 1);
    CHECK(m2.mult == std::vector<long long>{3});

    // cone of A(K*_2, [-1,1]): three lines, multiplicity 3 each
    auto da3 = cone_digraph(complete_digraph(2, WeightInterval(-1, 1)));
    auto m3 = ziegler_restriction(da3.arr, *da3.arr.infinity_index());
    CHECK(m3.arr.size() == 3);
    CHECK(m3.mult == std::vector<long long>(3, 3));
}

TEST_CASE("ziegler multiplicities match the digraph pattern") {
    for (auto g : {shi_ish_digraph(3, 2), catalan_c_digraph(3, 1), catalan_d_digraph(3, 2)}) {
        auto da = cone_digraph(g);
        auto m = ziegler_restriction(da.arr, *da.arr.infinity_index());
        CHECK(m.total_multiplicity() == (long long)da.arr.size() - 1);
        // braid line x_i - x_j carries 1 + #arcs(i,j); the line x_i = 0
        // carries |psi(i)|
        for (size_t t = 0; t < m.arr.size(); ++t) {
            const auto& c = m.arr[t].coeffs();
            int nz = 0;
            for (auto v : c) nz += v != 0;
            if (nz == 1) {
                int i = 0;
                while (c[i] == 0) ++i;
                CHECK(m.mult[t] == g.weight(i + 1).size());
            } else {
                int i = 0, j = 0;
                for (int t2 = 0; t2 < (int)c.size(); ++t2) {
                    if (c[t2] == 1) i = t2 + 1;
                    if (c[t2] == -1) j = t2 + 1;
                }
                long long expect = 1 + (g.has_arc(i, j) ? 1 : 0) + (g.has_arc(j, i) ? 1 : 0);
                CHECK(m.mult[t] == expect);
            }
        }
    }
}

TEST_CASE("modular coatoms") {
    auto cox3 = braid_arrangement(3);
    auto x = flat_of(cox3, {*cox3.find(Hyperplane({1, -1, 0}, 0))});
    CHECK(is_modular_coatom(cox3, x)); // rank-1 coatom of a rank-2 arrangement

    // X_v in cShi(3) is never modular: the supersolvability failure
    auto g = transitive_tournament(3);
    for (int v = 1; v <= 3; ++v) {
        auto da = cone_digraph(g);
        CHECK_FALSE(is_modular_coatom(da.arr, xv_flat(g, v)));
    }

    auto top = flat_of(cox3, {0, 1, 2});
    CHECK_THROWS_AS(is_modular_coatom(cox3, top), NotACoatom);
    CHECK_THROWS_AS(is_modular_coatom(shi_arrangement(2), x), NotCentral);
}

TEST_CASE("X_v is modular exactly at simplicial vertices of Ish-like digraphs") {
    // in (T_l^l, psi_l^l) the last vertex is isolated with minimal weight
    auto g = shi_ish_digraph(3, 3);
    auto da = cone_digraph(g);
    CHECK(is_modular_coatom(da.arr, xv_flat(g, 3)));
}

TEST_CASE("supersolvable verdicts") {
    CHECK(supersolvable(cone(ish_arrangement(3))).supersolvable);
    CHECK_FALSE(supersolvable(cone(shi_arrangement(3))).supersolvable);
    CHECK_FALSE(supersolvable(cone(shi_ish_arrangement(4, 3))).supersolvable);
    CHECK(supersolvable(cone(ish_arrangement(4))).supersolvable);
    CHECK_THROWS_AS(supersolvable(shi_arrangement(3)), NotCentral);
}

TEST_CASE("supersolvable exponents match chi") {
    for (auto a : {cone(ish_arrangement(3)), cone(ish_arrangement(4)),
                   cone(catalan_arrangement(2))}) {
        auto ss = supersolvable(a);
        REQUIRE(ss.supersolvable);
        auto exps = exponents_from_chi(a);
        REQUIRE(exps.has_value());
        CHECK(ss.exponents == *exps);
    }
}

TEST_CASE("localizations of a supersolvable arrangement are supersolvable") {
    auto a = cone(ish_arrangement(3));
    IntersectionPoset poset(a);
    int checked = 0;
    for (const auto& f : poset.flats()) {
        if (f.rank == 0 || f.rank > 2) continue;
        CHECK(supersolvable(localization(a, f)).supersolvable);
        ++checked;
    }
    CHECK(checked > 3);
}

TEST_CASE("exponents_from_chi") {
    auto cshi4 = cone(shi_arrangement(4));
    auto e = exponents_from_chi(cshi4);
    REQUIRE(e.has_value());
    CHECK(*e == std::vector<long long>{0, 1, 4, 4, 4});

    auto ccat3 = cone(catalan_arrangement(3));
    auto e2 = exponents_from_chi(ccat3);
    REQUIRE(e2.has_value());
    CHECK(*e2 == std::vector<long long>{0, 1, 4, 5});

    // chi of a generic-slope arrangement does not split
    Arrangement generic(2, {Hyperplane({1, 0}, 0), Hyperplane({0, 1}, 0),
                            Hyperplane({1, 1}, 1)});
    CHECK_FALSE(exponents_from_chi(generic).has_value());
}
