#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrange/arrangement.hpp"
#include "arrange/poset.hpp"

using namespace arrange;

namespace {

Hyperplane h(std::vector<long long> c, long long d) { return Hyperplane(std::move(c), d); }

} // namespace

TEST_CASE("hyperplane canonical form") {
    CHECK(h({2, -2}, 4) == h({1, -1}, 2));
    CHECK(h({-1, 1}, 0) == h({1, -1}, 0));
    CHECK(h({-2, 4}, -6) == h({1, -2}, 3));
    CHECK_THROWS_AS(h({0, 0}, 1), std::invalid_argument);
    CHECK(h({1, -1}, 1) != h({1, -1}, -1));
}

TEST_CASE("from_digraph basic shapes") {
    // (T_2, {}) -> Shi(2)
    auto shi2 = arrangement_of(transitive_tournament(2));
    CHECK(shi2 == Arrangement(2, {h({1, -1}, 0), h({1, -1}, 1)}));

    // (K*_2, {}) -> Cat(2): both arcs give distinct hyperplanes
    auto cat2 = arrangement_of(complete_digraph(2));
    CHECK(cat2 == Arrangement(2, {h({1, -1}, -1), h({1, -1}, 0), h({1, -1}, 1)}));

    // mixed weights, one empty
    std::vector<WeightInterval> psi{WeightInterval(0, 0), WeightInterval::empty()};
    auto a = arrangement_of(VertexWeightedDigraph(2, {}, psi));
    CHECK(a == Arrangement(2, {h({1, -1}, 0), h({1, 0}, 0)}));
}

TEST_CASE("from_digraph keeps provenance aligned") {
    auto da = cone_digraph(transitive_tournament(2, WeightInterval(-1, 0)));
    REQUIRE(da.arr.size() == da.origins.size());
    REQUIRE(da.arr.infinity_index().has_value());
    CHECK(da.origins[*da.arr.infinity_index()].kind == HyperplaneOrigin::Kind::Infinity);
    for (size_t i = 0; i < da.arr.size(); ++i) {
        const auto& o = da.origins[i];
        const auto& hp = da.arr[i];
        if (o.kind == HyperplaneOrigin::Kind::Weight) {
            CHECK(hp.coeffs()[o.i - 1] == 1);
            CHECK(hp.coeffs().back() == -o.c);
        }
    }
}

TEST_CASE("cone structure") {
    auto cshi2 = cone(arrangement_of(transitive_tournament(2)));
    CHECK(cshi2 ==
          Arrangement(3, {h({0, 0, 1}, 0), h({1, -1, -1}, 0), h({1, -1, 0}, 0)}));
    CHECK(cshi2.central());
    REQUIRE(cshi2.infinity_index().has_value());
    CHECK(cshi2[*cshi2.infinity_index()] == h({0, 0, 1}, 0));
}

TEST_CASE("classical families") {
    CHECK(shi_arrangement(3).size() == 6);
    CHECK(ish_arrangement(3).size() == 6);
    CHECK(catalan_arrangement(3).size() == 9);
    CHECK(braid_arrangement(4).size() == 6);
    // A_l^1 = A_l^2 = Shi(l)
    CHECK(shi_ish_arrangement(4, 1) == shi_arrangement(4));
    CHECK(shi_ish_arrangement(4, 2) == shi_arrangement(4));
    CHECK(shi_ish_arrangement(4, 4) == ish_arrangement(4));
}

TEST_CASE("char_poly classics") {
    auto t = IntegerPolynomial::variable();
    CHECK(char_poly(braid_arrangement(3)) == IntegerPolynomial::from_roots({0, 1, 2}));
    CHECK(char_poly(ish_arrangement(3)) == IntegerPolynomial::from_roots({0, 3, 3}));
    CHECK(char_poly(shi_ish_arrangement(4, 3)) == IntegerPolynomial::from_roots({0, 4, 4, 4}));
    CHECK(char_poly(empty_arrangement(2)) == t * t);
}

TEST_CASE("cone and product identities on chi") {
    auto tm1 = IntegerPolynomial::from_roots({1});
    auto ish3 = ish_arrangement(3);
    CHECK(char_poly(cone(ish3)) == tm1 * char_poly(ish3));

    auto a = arrangement_of(transitive_tournament(2, WeightInterval(-1, 0)));
    auto prod = product(empty_arrangement(1), a);
    CHECK(prod.dim() == a.dim() + 1);
    CHECK(char_poly(prod) == IntegerPolynomial::variable() * char_poly(a));

    auto cat2 = catalan_arrangement(2);
    CHECK(char_poly(product(a, cat2)) == char_poly(a) * char_poly(cat2));
}

TEST_CASE("localization and restriction on Cox(3)") {
    auto cox3 = braid_arrangement(3);
    auto x = flat_of(cox3, {*cox3.find(h({1, -1, 0}, 0))});
    auto loc = localization(cox3, x);
    CHECK(loc == Arrangement(3, {h({1, -1, 0}, 0)}));

    auto res = restriction(cox3, x);
    CHECK(res.size() == 1); // x1-x3 and x2-x3 collapse on x1=x2
    CHECK(res.dim() == 2);
}

TEST_CASE("deletion-restriction identity on cShi(3)") {
    auto a = cone(shi_arrangement(3));
    auto chi = char_poly(a);
    for (size_t i = 0; i < a.size(); ++i) {
        auto del = deletion(a, i);
        auto x = flat_of(a, {i});
        auto res = restriction(a, x);
        CHECK(chi == char_poly(del) - char_poly(res));
    }
}

TEST_CASE("moebius sanity") {
    IntersectionPoset poset(cone(shi_arrangement(2)));
    const auto& mu = poset.mobius();
    CHECK(mu[0] == 1);
    const auto& flats = poset.flats();
    for (size_t i = 1; i < flats.size(); ++i) {
        Int total = 0;
        for (size_t j = 0; j < flats.size(); ++j) {
            if ((flats[j].members & flats[i].members) == flats[j].members &&
                flats[j].rank <= flats[i].rank)
                total += mu[j];
        }
        CHECK(total == 0);
    }
}

TEST_CASE("codim3 flats along the infinite hyperplane") {
    auto cshi2 = cone(arrangement_of(transitive_tournament(2)));
    CHECK(codim3_flats_along(cshi2, *cshi2.infinity_index()).empty()); // rank 2

    auto ct3 = cone_digraph(transitive_tournament(3));
    auto flats = codim3_flats_along(ct3.arr, *ct3.arr.infinity_index());
    CHECK(flats.size() == 1); // only z=0, x1=x2=x3

    // hand enumeration: cone of (edgeless_3, psi = [0,0]) has 3 + 1 + 3 = 7
    auto ce = cone_digraph(edgeless_digraph(3, WeightInterval(0, 0)));
    CHECK(codim3_flats_along(ce.arr, *ce.arr.infinity_index()).size() == 7);
}

TEST_CASE("flat errors") {
    auto cox3 = braid_arrangement(3);
    LinearSystem sys(3);
    sys.add_equation({Rat(1), Rat(0), Rat(0)}, Rat(0)); // x1 = 0 is not a flat of Cox(3)
    CHECK_THROWS_AS(resolve_flat(cox3, sys), FlatNotInPoset);
}

TEST_CASE("essentialization") {
    auto a = cone(shi_arrangement(2)); // dim 3, rank 2
    auto [ess, r] = essentialize(a);
    CHECK(r == 2);
    CHECK(ess.dim() == 2);
    CHECK(ess.size() == a.size());
    auto chi_e = char_poly(ess);
    CHECK(char_poly(a) == IntegerPolynomial::variable() * chi_e);
    CHECK_THROWS_AS(essentialize(shi_arrangement(2)), NotCentral);
}

TEST_CASE("rank computation") {
    CHECK(arrangement_rank(braid_arrangement(4)) == 3);
    CHECK(arrangement_rank(cone(shi_arrangement(3))) == 3);
    CHECK(arrangement_rank(empty_arrangement(3)) == 0);
}
