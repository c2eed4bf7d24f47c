#include "arrange/verify.hpp"

#include <algorithm>

#include "arrange/finite_field.hpp"
#include "arrange/freeness.hpp"
#include "arrange/oracle.hpp"
#include "arrange/poset.hpp"

namespace arrange {

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

std::vector<long long> shi_ish_cone_exponents(int ell) {
    std::vector<long long> e{0, 1};
    for (int i = 0; i < ell - 1; ++i) e.push_back(ell);
    return e;
}

} // namespace

std::vector<CheckResult> verify_shi_ish_equality(int ell, int threads) {
    std::vector<CheckResult> out;
    std::vector<long long> roots{0};
    for (int i = 0; i < ell - 1; ++i) roots.push_back(ell);
    IntegerPolynomial target = IntegerPolynomial::from_roots(roots);

    auto shi = shi_arrangement(ell);
    auto ish = ish_arrangement(ell);
    add(out, "chi_poset(Shi(" + std::to_string(ell) + ")) = t(t-l)^{l-1}",
        char_poly(shi) == target);
    add(out, "chi_poset(Ish(" + std::to_string(ell) + ")) = t(t-l)^{l-1}",
        char_poly(ish) == target);
    add(out, "chi_ff(Shi(" + std::to_string(ell) + ")) matches",
        char_poly_ff(shi, threads) == target);
    add(out, "chi_ff(Ish(" + std::to_string(ell) + ")) matches",
        char_poly_ff(ish, threads) == target);
    return out;
}

std::vector<CheckResult> verify_shi_ish_chain(int ell) {
    std::vector<CheckResult> out;
    bool ok = true;
    std::string detail;
    for (int k = 1; k < ell; ++k) {
        int v = ell - k + 1;
        std::vector<int> w;
        for (int i = 1; i <= v; ++i) w.push_back(i);
        auto stepped = ceo_within(shi_ish_digraph(ell, k), w, v);
        if (!(stepped == shi_ish_digraph(ell, k + 1))) {
            ok = false;
            detail = "mismatch at k=" + std::to_string(k);
            break;
        }
    }
    add(out, "CEO chain reproduces (T_" + std::to_string(ell) + "^k, psi) for all k", ok, detail);
    return out;
}

std::vector<CheckResult> verify_shi_ish(int ell, int ss_max) {
    std::vector<CheckResult> out;
    std::vector<long long> roots{0};
    for (int i = 0; i < ell - 1; ++i) roots.push_back(ell);
    IntegerPolynomial target = IntegerPolynomial::from_roots(roots);

    for (int k = 2; k <= ell; ++k) {
        std::string tag = "A_" + std::to_string(ell) + "^" + std::to_string(k);
        Arrangement a = shi_ish_arrangement(ell, k);
        add(out, "chi(" + tag + ") = t(t-l)^{l-1}", char_poly(a) == target);

        FreenessVerdict v = decide_freeness(shi_ish_digraph(ell - 1, k - 1));
        std::vector<long long> cone_exp{1};
        for (int i = 0; i < ell - 1; ++i) cone_exp.push_back(ell);
        bool free_ok = v.status == FreeStatus::Free && v.exponents &&
                       *v.exponents == cone_exp;
        add(out, "decide_freeness(digraph of " + tag + ") = Free, exponents {1, l^{l-1}}",
            free_ok, to_string(v.status));

        auto exps = exponents_from_chi(cone(a));
        add(out, "exponents of c" + tag + " = {0, 1, l^{l-1}}",
            exps && *exps == shi_ish_cone_exponents(ell));

        if (ell <= ss_max) {
            SupersolvableResult ss = supersolvable(cone(a));
            add(out, "c" + tag + " supersolvable iff k = l", ss.supersolvable == (k == ell));
        }
    }
    return out;
}

std::vector<CheckResult> verify_catalan(int ell) {
    std::vector<CheckResult> out;

    for (int k = 1; k <= ell; ++k) {
        std::vector<int> w;
        for (int i = k; i <= ell; ++i) w.push_back(i);
        auto c = catalan_c_digraph(ell, k);
        auto d = ceo_within(c, w, k);
        add(out, "CEO at " + std::to_string(k) + " on C -> D (l=" + std::to_string(ell) + ")",
            d == catalan_d_digraph(ell, k));
        auto c_next = keo_within(d, w, k);
        add(out, "KEO at " + std::to_string(k) + " on D -> C'",
            c_next == catalan_c_digraph(ell, std::min(k + 1, ell)));
    }

    IntegerPolynomial chi0 = char_poly(arrangement_of(catalan_c_digraph(ell, 1)));
    bool chi_stable = true, free_stable = true;
    for (int k = 1; k <= ell; ++k) {
        for (auto g : {catalan_c_digraph(ell, k), catalan_d_digraph(ell, k)}) {
            if (!(char_poly(arrangement_of(g)) == chi0)) chi_stable = false;
            if (decide_freeness(g).status != FreeStatus::Free) free_stable = false;
        }
    }
    add(out, "chi constant along the chain (l=" + std::to_string(ell) + ")", chi_stable);
    add(out, "Free verdict constant along the chain", free_stable);

    SupersolvableResult tail = supersolvable(cone(arrangement_of(catalan_c_digraph(ell, ell))));
    add(out, "edgeless tail has supersolvable cone", tail.supersolvable);

    if (ell <= 3) {
        // literal cone of Cat(l+1): exponents {0, 1, l+2, ..., 2l+1}
        Arrangement cat = catalan_arrangement(ell + 1);
        auto exps = exponents_from_chi(cone(cat));
        std::vector<long long> expect{0, 1};
        for (int e = ell + 2; e <= 2 * ell + 1; ++e) expect.push_back(e);
        add(out, "exponents of cCat(" + std::to_string(ell + 1) + ")", exps && *exps == expect);
        FreenessVerdict v = decide_freeness(catalan_c_digraph(ell, 1));
        add(out, "cCat(" + std::to_string(ell + 1) + ") free via the chain member",
            v.status == FreeStatus::Free);
    }
    return out;
}

std::vector<CheckResult> verify_l2_catalogue() {
    std::vector<CheckResult> out;
    std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
    std::vector<WeightInterval> none(4, WeightInterval::empty());

    int mismatches = 0, inconclusive = 0, free_count = 0;
    std::vector<VertexWeightedDigraph> all;
    for (int mask = 0; mask < 64; ++mask) {
        VertexWeightedDigraph::ArcSet arcs;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) arcs.insert(pairs[b]);
        VertexWeightedDigraph g(3, arcs, none);
        all.push_back(g);
        bool cat = l2_free(g);
        FreenessVerdict o = oracle_freeness(cone(arrangement_of(g)));
        if (o.status == FreeStatus::Inconclusive) ++inconclusive;
        if (cat != (o.status == FreeStatus::Free)) ++mismatches;
        if (cat) ++free_count;
    }
    add(out, "catalogue matches the oracle on all 64 labeled digraphs", mismatches == 0,
        std::to_string(mismatches) + " mismatches");
    add(out, "zero Inconclusive oracle verdicts", inconclusive == 0);

    // isomorphism classes: 16 in total, 13 free
    std::vector<VertexWeightedDigraph> reps;
    int free_classes = 0;
    for (const auto& g : all) {
        bool seen = false;
        for (const auto& r : reps)
            if (digraph_isomorphic(g, r)) {
                seen = true;
                break;
            }
        if (!seen) {
            reps.push_back(g);
            if (l2_free(g)) ++free_classes;
        }
    }
    add(out, "16 isomorphism classes, 13 in the catalogue",
        reps.size() == 16 && free_classes == 13,
        std::to_string(reps.size()) + " classes, " + std::to_string(free_classes) + " free");

    // the catalogue is closed under isomorphism and lists 13 classes
    int catalogue_classes = 0;
    std::vector<WeightInterval> none3(4, WeightInterval::empty());
    std::vector<VertexWeightedDigraph> cat_members;
    for (const auto& arcs : l2_catalogue()) cat_members.push_back({3, arcs, none3});
    for (size_t i = 0; i < cat_members.size(); ++i) {
        bool dup = false;
        for (size_t j = 0; j < i; ++j)
            if (digraph_isomorphic(cat_members[i], cat_members[j])) dup = true;
        if (!dup) ++catalogue_classes;
    }
    add(out, "catalogue holds 13 pairwise non-isomorphic digraphs", catalogue_classes == 13);
    return out;
}

std::vector<CheckResult> verify_wakamiko(long long max_mult) {
    std::vector<CheckResult> out;
    Arrangement lines(2, {Hyperplane({1, 0}, 0), Hyperplane({0, 1}, 0), Hyperplane({1, -1}, 0)});
    size_t ix = *lines.find(Hyperplane({1, 0}, 0));
    size_t iy = *lines.find(Hyperplane({0, 1}, 0));
    size_t id = *lines.find(Hyperplane({1, -1}, 0));

    long long cases = 0, failures = 0;
    for (long long k1 = 0; k1 <= max_mult; ++k1)
        for (long long k2 = 0; k2 <= max_mult; ++k2)
            for (long long k3 = 0; k3 <= max_mult; ++k3) {
                ++cases;
                std::vector<long long> mult(3, 0);
                mult[ix] = k1;
                mult[iy] = k2;
                mult[id] = k3;
                auto computed = rank2_multi_exponents(Multiarrangement(lines, mult));
                if (computed != wakamiko_exponents(k1, k2, k3)) ++failures;
            }
    add(out, "rank-2 exponent formula on all triples <= " + std::to_string(max_mult),
        failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures");
    return out;
}

std::vector<CheckResult> verify_bijection(int ell_min, int ell_max, int primes_per_case) {
    std::vector<CheckResult> out;
    for (int ell = ell_min; ell <= ell_max; ++ell) {
        auto g = transitive_tournament(ell, WeightInterval(-1, 0));
        auto g2 = ceo(g, ell);
        long long bound = std::max(admissible_prime_bound(arrangement_of(g)),
                                   admissible_prime_bound(arrangement_of(g2)));
        long long p = bound + 1;
        bool ok = true;
        for (int i = 0; i < primes_per_case; ++i) {
            while (!is_prime(p)) ++p;
            if (!verify_ceo_bijection(g, ell, p)) ok = false;
            ++p;
        }
        add(out, "bijection for (T_" + std::to_string(ell) + ", [-1,0]) at " +
                     std::to_string(primes_per_case) + " smallest admissible primes",
            ok);
    }
    return out;
}

} // namespace arrange
