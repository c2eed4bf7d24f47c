#include "arrange/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "arrange/poset.hpp"
#include "arrange/polynomial.hpp"

namespace arrange {

namespace {

Multiarrangement simple(const Arrangement& a) {
    return Multiarrangement(a, std::vector<long long>(a.size(), 1));
}

// staircase basis with normalized leading entries, for membership tests
struct Echelon {
    std::vector<RatRow> rows;
    std::vector<int> pivots;

    void reduce(RatRow& v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            Rat f = v[pivots[i]];
            if (f == 0) continue;
            for (size_t j = pivots[i]; j < v.size(); ++j) v[j] -= f * rows[i][j];
        }
    }

    // returns true when v was independent (and absorbed)
    bool insert(RatRow v) {
        reduce(v);
        int p = -1;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) {
                p = (int)j;
                break;
            }
        }
        if (p < 0) return false;
        Rat inv = 1 / v[p];
        for (size_t j = p; j < v.size(); ++j) v[j] *= inv;
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        size_t idx = (size_t)(it - pivots.begin());
        pivots.insert(it, p);
        rows.insert(rows.begin() + idx, std::move(v));
        return true;
    }
};

struct MonomialTable {
    std::vector<Monomial> list;
    std::map<Monomial, int> index;

    explicit MonomialTable(int nvars, int degree) {
        list = monomials_of_degree(nvars, degree);
        for (size_t i = 0; i < list.size(); ++i) index.emplace(list[i], (int)i);
    }
    int size() const { return (int)list.size(); }
};

// constraint rows for D(M)_d: unknowns are (coordinate k, monomial mu)
RatMatrix constraint_matrix(const Multiarrangement& m, int d, const MonomialTable& monos) {
    int dim = m.arr.dim();
    int cols = dim * monos.size();
    RatMatrix rows;

    for (size_t h = 0; h < m.arr.size(); ++h) {
        long long mh = m.mult[h];
        if (mh == 0) continue;
        const auto& coeffs = m.arr[h].coeffs();
        int p = 0;
        while (coeffs[p] == 0) ++p;
        Rat ap = rat_of(coeffs[p]);

        // beta = alpha - a_p x_p, a polynomial in the other variables
        std::vector<long long> beta_coeffs = coeffs;
        beta_coeffs[p] = 0;
        MPoly beta = MPoly::linear_form(beta_coeffs);
        std::vector<MPoly> beta_pow{MPoly::constant(dim, Rat(1))};
        for (int j = 1; j <= d; ++j) beta_pow.push_back(beta_pow.back() * beta);

        int smax = (int)std::min<long long>(mh - 1, d);
        // row index per (s, nu) with nu_p = 0, deg nu = d - s
        std::vector<std::map<Monomial, int>> row_of(smax + 1);
        int base = (int)rows.size();
        int local = 0;
        for (int s = 0; s <= smax; ++s)
            for (const auto& nu : monomials_of_degree(dim, d - s))
                if (nu[p] == 0) row_of[s].emplace(nu, local++);
        rows.resize(base + local, RatRow(cols, Rat(0)));

        // binomials up to d
        std::vector<std::vector<Rat>> binom(d + 1, std::vector<Rat>(d + 1, Rat(0)));
        for (int i = 0; i <= d; ++i) {
            binom[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Rat(0));
        }

        for (int mi = 0; mi < monos.size(); ++mi) {
            const Monomial& mu = monos.list[mi];
            int e = mu[p];
            Monomial mu_rest = mu;
            mu_rest[p] = 0;
            // x^mu = ap^{-e} sum_s C(e,s) alpha^s (-beta)^{e-s} x^{mu_rest}
            Rat ap_pow(1);
            for (int i = 0; i < e; ++i) ap_pow *= ap;
            Rat scale = 1 / ap_pow;
            for (int s = 0; s <= std::min(e, smax); ++s) {
                Rat sign = ((e - s) % 2 == 0) ? Rat(1) : Rat(-1);
                Rat factor = binom[e][s] * sign * scale;
                for (const auto& [bm, bc] : beta_pow[e - s].terms()) {
                    Monomial nu(dim);
                    for (int i = 0; i < dim; ++i) nu[i] = bm[i] + mu_rest[i];
                    auto it = row_of[s].find(nu);
                    if (it == row_of[s].end())
                        throw std::logic_error("derivation constraint: missing row");
                    int r = base + it->second;
                    Rat val = factor * bc;
                    for (int k = 0; k < dim; ++k) {
                        if (coeffs[k] == 0) continue;
                        rows[r][k * monos.size() + mi] += rat_of(coeffs[k]) * val;
                    }
                }
            }
        }
    }
    return rows;
}

// incremental degree-by-degree analysis of D(M)
struct Scan {
    const Multiarrangement& m;
    int dim;
    long long degree = -1;
    std::vector<RatRow> basis; // nullspace basis at `degree`
    MonomialTable monos;
    std::vector<std::pair<long long, RatRow>> gens; // (degree, representative)

    explicit Scan(const Multiarrangement& mm) : m(mm), dim(mm.arr.dim()), monos(dim, 0) {}

    long long dim_at_current() const { return (long long)basis.size(); }

    void advance() {
        long long d = degree + 1;
        MonomialTable next(dim, (int)d);
        RatMatrix cons = constraint_matrix(m, (int)d, next);

        // the identity derivation survives every simple central arrangement
        if (d == 1 && m.arr.size() > 0 &&
            std::all_of(m.mult.begin(), m.mult.end(), [](long long v) { return v == 1; })) {
            RatRow euler(dim * next.size(), Rat(0));
            for (int k = 0; k < dim; ++k) {
                Monomial mk(dim, 0);
                mk[k] = 1;
                euler[k * next.size() + next.index.at(mk)] = 1;
            }
            for (const auto& row : cons) {
                Rat dot(0);
                for (size_t j = 0; j < row.size(); ++j)
                    if (row[j] != 0) dot += row[j] * euler[j];
                if (dot != 0) throw std::logic_error("Euler derivation violates a constraint");
            }
        }

        std::vector<RatRow> next_basis = nullspace(cons, dim * next.size());

        // span of x_v * (previous basis) inside degree d
        Echelon ech;
        for (const auto& theta : basis) {
            for (int v = 0; v < dim; ++v) {
                RatRow lifted(dim * next.size(), Rat(0));
                for (int k = 0; k < dim; ++k) {
                    for (int mi = 0; mi < monos.size(); ++mi) {
                        const Rat& c = theta[k * monos.size() + mi];
                        if (c == 0) continue;
                        Monomial mu = monos.list[mi];
                        mu[v] += 1;
                        lifted[k * next.size() + next.index.at(mu)] = c;
                    }
                }
                ech.insert(std::move(lifted));
            }
        }
        for (const auto& theta : next_basis) {
            RatRow w = theta;
            ech.reduce(w);
            bool zero = std::all_of(w.begin(), w.end(), [](const Rat& q) { return q == 0; });
            if (zero) continue;
            ech.insert(w);
            gens.push_back({d, std::move(w)});
        }

        degree = d;
        basis = std::move(next_basis);
        monos = std::move(next);
    }

    std::vector<MPoly> to_polys(long long gdeg, const RatRow& vec) const {
        MonomialTable t(dim, (int)gdeg);
        std::vector<MPoly> out(dim, MPoly(dim));
        for (int k = 0; k < dim; ++k)
            for (int mi = 0; mi < t.size(); ++mi)
                if (vec[k * t.size() + mi] != 0)
                    out[k].add_term(t.list[mi], vec[k * t.size() + mi]);
        return out;
    }
};

MPoly defining_polynomial(const Multiarrangement& m) {
    MPoly q = MPoly::constant(m.arr.dim(), Rat(1));
    for (size_t h = 0; h < m.arr.size(); ++h) {
        MPoly alpha = MPoly::linear_form(m.arr[h].coeffs());
        q = q * alpha.pow((int)m.mult[h]);
    }
    return q;
}

MPoly symbolic_det(const std::vector<std::vector<MPoly>>& cols, int dim) {
    // permutation expansion; dim <= 5 keeps this small
    std::vector<int> perm(dim);
    for (int i = 0; i < dim; ++i) perm[i] = i;
    MPoly det(dim);
    do {
        int inv = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (perm[i] > perm[j]) ++inv;
        MPoly term = MPoly::constant(dim, inv % 2 ? Rat(-1) : Rat(1));
        for (int c = 0; c < dim; ++c) term = term * cols[c][perm[c]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Rat numeric_det(std::vector<std::vector<Rat>> m) {
    int n = (int)m.size();
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

bool det_matches_Q(const Multiarrangement& m,
                   const std::vector<std::vector<MPoly>>& chosen, std::uint64_t seed) {
    int dim = m.arr.dim();
    MPoly q = defining_polynomial(m);
    auto symbolic_compare = [&]() {
        MPoly det = symbolic_det(chosen, dim);
        if (det.is_zero()) return false;
        if (q.is_zero()) return false;
        Rat c = det.leading().second / q.leading().second;
        if (c == 0) return false;
        return det == q.scaled(c);
    };
    if (dim <= 4) return symbolic_compare();

    // dim 5: random rational evaluations first, symbolic confirmation once
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-19, 19);
    std::uniform_int_distribution<int> den(1, 7);
    Rat ratio(0);
    int hits = 0, attempts = 0;
    while (hits < 3 && attempts < 64) {
        ++attempts;
        std::vector<Rat> pt(dim);
        for (auto& x : pt) x = Rat(num(rng), den(rng));
        Rat qv = q.eval(pt);
        if (qv == 0) continue;
        std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim));
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r) mat[r][c] = chosen[c][r].eval(pt);
        Rat dv = numeric_det(mat);
        if (dv == 0) return false;
        Rat r = dv / qv;
        if (hits == 0)
            ratio = r;
        else if (r != ratio)
            return false;
        ++hits;
    }
    if (hits < 3) return false;
    return symbolic_compare();
}

} // namespace

GradedDerivationBasis derivation_space(const Multiarrangement& m, long long degree) {
    if (degree < 0) throw ParamOutOfRange("degree must be >= 0");
    MonomialTable monos(m.arr.dim(), (int)degree);
    RatMatrix cons = constraint_matrix(m, (int)degree, monos);
    std::vector<RatRow> basis = nullspace(cons, m.arr.dim() * monos.size());
    GradedDerivationBasis out;
    out.degree = degree;
    for (const auto& vec : basis) {
        std::vector<MPoly> polys(m.arr.dim(), MPoly(m.arr.dim()));
        for (int k = 0; k < m.arr.dim(); ++k)
            for (int mi = 0; mi < monos.size(); ++mi)
                if (vec[k * monos.size() + mi] != 0)
                    polys[k].add_term(monos.list[mi], vec[k * monos.size() + mi]);
        out.basis.push_back(std::move(polys));
    }
    return out;
}

GradedDerivationBasis derivation_space(const Arrangement& a, long long degree) {
    return derivation_space(simple(a), degree);
}

std::vector<long long> minimal_generator_degrees(const Multiarrangement& m, long long dmax) {
    if (dmax < 0) throw ParamOutOfRange("dmax must be >= 0");
    Scan scan(m);
    while (scan.degree < dmax) scan.advance();
    std::vector<long long> out;
    for (const auto& [d, vec] : scan.gens) out.push_back(d);
    return out;
}

std::vector<long long> minimal_generator_degrees(const Arrangement& a, long long dmax) {
    return minimal_generator_degrees(simple(a), dmax);
}

bool saito_check(const Multiarrangement& m, const std::vector<long long>& cand,
                 std::uint64_t seed) {
    long long total = 0;
    for (long long c : cand) {
        if (c < 0) throw DegreeSumMismatch("negative candidate degree");
        total += c;
    }
    if (total != m.total_multiplicity())
        throw DegreeSumMismatch("candidate degrees must sum to the multiplicity count");
    if ((int)cand.size() != m.arr.dim())
        throw DegreeSumMismatch("need exactly dim candidate degrees");

    std::map<long long, int> want;
    for (long long c : cand) want[c]++;
    long long dmax = cand.empty() ? 0 : *std::max_element(cand.begin(), cand.end());

    Scan scan(m);
    while (scan.degree < dmax) scan.advance();
    std::map<long long, std::vector<RatRow>> reps;
    for (const auto& [d, vec] : scan.gens)
        if (want.count(d)) reps[d].push_back(vec);
    for (const auto& [d, k] : want)
        if ((int)reps[d].size() < k) return false;

    // iterate selections: per degree a k-combination of the reps
    std::vector<long long> degrees;
    for (const auto& [d, k] : want) degrees.push_back(d);

    std::vector<std::vector<std::vector<int>>> combos;
    for (long long d : degrees) {
        int n = (int)reps[d].size(), k = want[d];
        std::vector<std::vector<int>> cs;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            cs.push_back(idx);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        combos.push_back(std::move(cs));
    }

    std::vector<int> pick(degrees.size(), 0);
    while (true) {
        std::vector<std::vector<MPoly>> chosen;
        for (size_t gi = 0; gi < degrees.size(); ++gi)
            for (int ri : combos[gi][pick[gi]])
                chosen.push_back(scan.to_polys(degrees[gi], reps[degrees[gi]][ri]));
        if (det_matches_Q(m, chosen, seed)) return true;
        // next selection
        size_t gi = 0;
        while (gi < pick.size()) {
            if (++pick[gi] < (int)combos[gi].size()) break;
            pick[gi] = 0;
            ++gi;
        }
        if (gi == pick.size()) break;
    }
    return false;
}

bool saito_check(const Arrangement& a, const std::vector<long long>& cand, std::uint64_t seed) {
    return saito_check(simple(a), cand, seed);
}

FreenessVerdict oracle_freeness(const Arrangement& a, size_t max_hyperplanes,
                                std::uint64_t seed) {
    if (!a.central()) throw NotCentral("oracle_freeness needs a central arrangement");
    if (a.size() > max_hyperplanes)
        throw TooLarge("oracle guard: " + std::to_string(a.size()) + " hyperplanes > " +
                       std::to_string(max_hyperplanes));
    if (a.dim() > 5) throw TooLarge("oracle guard: dim > 5");

    FreenessVerdict verdict;
    IntegerPolynomial chi = char_poly(a);
    auto [roots, residual] = chi.integer_roots(0, (long long)a.size());
    if (residual.degree() > 0) {
        verdict.status = FreeStatus::NotFree;
        verdict.evidence.push_back("chi does not split over Z in [0,|A|]");
        return verdict;
    }
    verdict.evidence.push_back("chi splits: " + chi.factored_str());

    auto [ess, r] = essentialize(a);
    int zeros_expected = a.dim() - r;
    std::vector<long long> ess_cands = roots;
    for (int i = 0; i < zeros_expected; ++i) {
        auto it = std::find(ess_cands.begin(), ess_cands.end(), 0);
        if (it == ess_cands.end()) {
            verdict.status = FreeStatus::Inconclusive;
            verdict.evidence.push_back("chi roots lack the rank-deficit zeros");
            return verdict;
        }
        ess_cands.erase(it);
    }

    if (r == 0) {
        verdict.status = FreeStatus::Free;
        verdict.exponents = roots;
        verdict.evidence.push_back("empty essentialization");
        return verdict;
    }

    std::map<long long, int> want;
    for (long long c : ess_cands) want[c]++;

    Multiarrangement em = simple(ess);
    Scan scan(em);
    long long dmax = (long long)a.size();
    while (scan.degree < dmax) {
        scan.advance();
        if ((long long)scan.gens.size() > r) {
            verdict.status = FreeStatus::NotFree;
            verdict.evidence.push_back("more than dim minimal generators by degree " +
                                       std::to_string(scan.degree));
            return verdict;
        }
        std::map<long long, int> have;
        for (const auto& [d, vec] : scan.gens) have[d]++;
        if (have == want) {
            std::vector<std::vector<MPoly>> chosen;
            for (const auto& [d, vec] : scan.gens) chosen.push_back(scan.to_polys(d, vec));
            if (det_matches_Q(em, chosen, seed)) {
                verdict.status = FreeStatus::Free;
                verdict.exponents = roots;
                verdict.evidence.push_back("Saito determinant equals c*Q");
                return verdict;
            }
            verdict.evidence.push_back("Saito determinant test failed at the chi degrees");
        }
    }
    verdict.status = FreeStatus::Inconclusive;
    std::string got = "generator degrees up to |A|:";
    for (const auto& [d, vec] : scan.gens) got += " " + std::to_string(d);
    verdict.evidence.push_back(got);
    return verdict;
}

std::pair<long long, long long> rank2_multi_exponents(const Multiarrangement& m) {
    if (m.arr.dim() != 2) throw ParamOutOfRange("rank2_multi_exponents needs dim 2");
    Scan scan(m);
    long long limit = m.total_multiplicity();
    while (scan.degree < limit && scan.gens.size() < 2) scan.advance();
    if (scan.gens.size() != 2)
        throw std::logic_error("rank-2 multiarrangement must have two generators");
    long long e1 = scan.gens[0].first, e2 = scan.gens[1].first;
    if (e1 + e2 != limit) throw std::logic_error("rank-2 exponents must sum to |m|");
    return {std::min(e1, e2), std::max(e1, e2)};
}

} // namespace arrange
