#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrange/finite_field.hpp"
#include "arrange/poset.hpp"

using namespace arrange;

TEST_CASE("small direct counts") {
    CHECK(count_complement(shi_arrangement(2), 5) == 15); // 5 * 3
    CHECK(count_complement(shi_arrangement(3), 7) == 112); // 7 * 4^2
    CHECK_THROWS_AS(count_complement(shi_arrangement(2), 6), ParamOutOfRange);
}

TEST_CASE("thread count does not change the sum") {
    auto a = shi_arrangement(3);
    long long one = count_complement(a, 13, 1);
    CHECK(count_complement(a, 13, 4) == one);
    CHECK(count_complement(a, 13, 13) == one);
}

TEST_CASE("admissibility bound and primes") {
    auto a = shi_arrangement(3); // worst row weight 3 -> bound 12
    CHECK(admissible_prime_bound(a) == 12);
    auto ps = admissible_primes(a, 3);
    CHECK(ps == std::vector<long long>{13, 17, 19});
}

TEST_CASE("char_poly_ff equals the poset method") {
    auto ish4 = ish_arrangement(4);
    auto expect = IntegerPolynomial::from_roots({0, 4, 4, 4});
    CHECK(char_poly_ff(ish4) == expect);
    CHECK(char_poly(ish4) == expect);

    auto cat2 = catalan_arrangement(2);
    CHECK(char_poly_ff(cat2) == char_poly(cat2));
}

TEST_CASE("whitney evaluation on a small corpus") {
    std::vector<Arrangement> corpus{
        braid_arrangement(3),
        shi_arrangement(3),
        catalan_arrangement(2),
        arrangement_of(transitive_tournament(3, WeightInterval(-1, 0))),
        cone(shi_arrangement(2)),
    };
    for (const auto& a : corpus) {
        auto chi = char_poly(a);
        for (long long p = admissible_prime_bound(a) + 1; p <= 31; ++p) {
            if (!is_prime(p)) continue;
            CHECK(chi.eval(int_of(p)) == int_of(count_complement(a, p)));
        }
    }
}

TEST_CASE("chi is stable under CEO when Condition (C) holds") {
    std::vector<std::pair<VertexWeightedDigraph, int>> cases{
        {transitive_tournament(3, WeightInterval(-1, 0)), 3},
        {transitive_tournament(4, WeightInterval(-1, 0)), 4},
        {complete_digraph(3, WeightInterval(-1, 1)), 1},
        {catalan_c_digraph(3, 1), 1},
    };
    for (const auto& [g, v] : cases) {
        REQUIRE(g.is_coking(v));
        REQUIRE(condition_c(g, v));
        CHECK(char_poly(arrangement_of(g)) == char_poly(arrangement_of(ceo(g, v))));
    }
}

TEST_CASE("ceo bijection") {
    CHECK(verify_ceo_bijection(transitive_tournament(2, WeightInterval(-1, 0)), 2, 11));
    CHECK(verify_ceo_bijection(transitive_tournament(4, WeightInterval(-1, 0)), 4, 13));

    CHECK_THROWS_AS(verify_ceo_bijection(transitive_tournament(3, WeightInterval(-1, 0)), 1, 13),
                    NotACoking);
    // Condition (C) violated: psi(v) too small to hold [a_i, b_i - 1]
    std::vector<WeightInterval> psi{WeightInterval(-2, 1), WeightInterval(0, 0)};
    VertexWeightedDigraph g(2, {{1, 2}}, psi);
    CHECK_THROWS_AS(verify_ceo_bijection(g, 2, 31), ConditionCViolated);
    CHECK_THROWS_AS(verify_ceo_bijection(transitive_tournament(2, WeightInterval(-1, 0)), 2, 7),
                    PrimeTooSmall);
}

TEST_CASE("set difference sizes match before any bijection work") {
    auto g = transitive_tournament(3, WeightInterval(-1, 0));
    auto g2 = ceo(g, 3);
    long long p = 17;
    auto m = complement_points(arrangement_of(g), p);
    auto m2 = complement_points(arrangement_of(g2), p);
    CHECK(int_of((long long)m.size()) == char_poly(arrangement_of(g)).eval(int_of(p)));
    std::set<std::vector<int>> ms(m.begin(), m.end()), m2s(m2.begin(), m2.end());
    size_t only_m = 0, only_m2 = 0;
    for (const auto& pt : m)
        if (!m2s.count(pt)) ++only_m;
    for (const auto& pt : m2)
        if (!ms.count(pt)) ++only_m2;
    CHECK(only_m == only_m2);
}
