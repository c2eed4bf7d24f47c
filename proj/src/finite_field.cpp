#include "arrange/finite_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>

#include "arrange/linalg.hpp"

namespace arrange {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long admissible_prime_bound(const Arrangement& a) {
    long long worst = 0;
    for (const auto& h : a.hyperplanes()) {
        long long s = std::llabs(h.constant());
        for (long long c : h.coeffs()) s += std::llabs(c);
        worst = std::max(worst, s);
    }
    return (long long)a.dim() * (1 + worst);
}

std::vector<long long> admissible_primes(const Arrangement& a, int count) {
    std::vector<long long> out;
    long long p = admissible_prime_bound(a) + 1;
    if (p < 2) p = 2;
    while ((int)out.size() < count) {
        while (!is_prime(p)) ++p;
        out.push_back(p++);
    }
    return out;
}

namespace {

// a hyperplane becomes fully determined once its last variable is set
struct Check {
    std::vector<std::pair<int, long long>> prefix; // (var index, coeff mod p)
    long long coeff;                               // coefficient of the last variable
    long long inv_coeff;                           // its inverse mod p (0 if degenerate)
    long long constant;                            // constant mod p
};

struct CountingPlan {
    int dim;
    long long p;
    std::vector<std::vector<Check>> by_depth;
};

long long mod_inverse(long long a, long long p) {
    long long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

CountingPlan make_plan(const Arrangement& a, long long p) {
    CountingPlan plan{a.dim(), p, {}};
    plan.by_depth.resize(a.dim());
    for (const auto& h : a.hyperplanes()) {
        int last = -1;
        for (int i = 0; i < a.dim(); ++i)
            if (h.coeffs()[i] != 0) last = i;
        Check chk;
        chk.coeff = ((h.coeffs()[last] % p) + p) % p;
        chk.inv_coeff = chk.coeff ? mod_inverse(chk.coeff, p) : 0;
        chk.constant = ((h.constant() % p) + p) % p;
        for (int i = 0; i < last; ++i) {
            if (h.coeffs()[i] == 0) continue;
            chk.prefix.push_back({i, ((h.coeffs()[i] % p) + p) % p});
        }
        plan.by_depth[last].push_back(std::move(chk));
    }
    return plan;
}

struct Counter {
    const CountingPlan& plan;
    std::vector<long long> x;
    std::vector<char> forbidden; // scratch of size p
    long long count = 0;
    std::vector<std::vector<int>>* collect = nullptr;

    explicit Counter(const CountingPlan& pl) : plan(pl), x(pl.dim, 0), forbidden(pl.p, 0) {}

    // assigns coordinates depth..dim-1; first coordinate restricted to [lo, hi)
    void run(int depth, long long lo, long long hi) {
        const long long p = plan.p;
        std::vector<long long> bad;
        bad.reserve(plan.by_depth[depth].size());
        for (const auto& chk : plan.by_depth[depth]) {
            long long pre = 0;
            for (auto [var, coeff] : chk.prefix) pre = (pre + coeff * x[var]) % p;
            if (chk.coeff == 0) {
                // the leading coefficient vanished mod p; the equation only
                // involves the prefix
                if (pre == chk.constant) return; // entire subtree on the hyperplane
                continue;
            }
            long long v = (chk.constant - pre) % p;
            if (v < 0) v += p;
            bad.push_back(v * chk.inv_coeff % p);
        }
        bool leaf = depth + 1 == plan.dim;
        if (leaf && !collect) {
            long long distinct = 0;
            for (long long v : bad) {
                if (lo <= v && v < hi && !forbidden[v]) {
                    ++distinct;
                    forbidden[v] = 1;
                }
            }
            for (long long v : bad)
                if (lo <= v && v < hi) forbidden[v] = 0;
            count += (hi - lo) - distinct;
            return;
        }
        for (long long v : bad) forbidden[v] = 1;
        for (long long v = lo; v < hi; ++v) {
            if (forbidden[v]) continue;
            x[depth] = v;
            if (leaf) {
                ++count;
                collect->push_back(std::vector<int>(x.begin(), x.end()));
            } else {
                run(depth + 1, 0, p);
            }
        }
        for (long long v : bad) forbidden[v] = 0;
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("ARRANGE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

} // namespace

long long count_complement(const Arrangement& a, long long p, int threads) {
    if (!is_prime(p)) throw ParamOutOfRange("count_complement needs a prime");
    CountingPlan plan = make_plan(a, p);

    long long t = std::min<long long>(resolve_threads(threads), p);
    if (t <= 1 || a.dim() < 2) {
        Counter c(plan);
        c.run(0, 0, p);
        return c.count;
    }
    std::vector<std::future<long long>> parts;
    for (long long i = 0; i < t; ++i) {
        long long lo = p * i / t, hi = p * (i + 1) / t;
        parts.push_back(std::async(std::launch::async, [&plan, lo, hi]() {
            Counter c(plan);
            c.run(0, lo, hi);
            return c.count;
        }));
    }
    long long total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

std::vector<std::vector<int>> complement_points(const Arrangement& a, long long p) {
    if (!is_prime(p)) throw ParamOutOfRange("complement_points needs a prime");
    CountingPlan plan = make_plan(a, p);
    Counter c(plan);
    std::vector<std::vector<int>> out;
    c.collect = &out;
    c.run(0, 0, p);
    return out;
}

IntegerPolynomial char_poly_ff(const Arrangement& a, int threads) {
    int n = a.dim() + 1;
    std::vector<long long> primes = admissible_primes(a, n + 2);

    // exact Lagrange interpolation through the first n evaluations
    std::vector<Rat> coeffs(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        long long cnt = count_complement(a, primes[i], threads);
        std::vector<Rat> basis{Rat(1)}; // prod_{j != i} (t - p_j)
        Rat denom(1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (int k = (int)basis.size() - 1; k >= 1; --k)
                basis[k] = basis[k - 1] - rat_of(primes[j]) * basis[k];
            basis[0] = -rat_of(primes[j]) * basis[0];
            denom *= rat_of(primes[i]) - rat_of(primes[j]);
        }
        Rat scale = rat_of(cnt) / denom;
        for (int k = 0; k < (int)basis.size(); ++k) coeffs[k] += basis[k] * scale;
    }

    std::vector<Int> zc(n);
    for (int k = 0; k < n; ++k) {
        coeffs[k].canonicalize();
        if (coeffs[k].get_den() != 1)
            throw InconsistentInterpolation("non-integer interpolated coefficient");
        zc[k] = coeffs[k].get_num();
    }
    IntegerPolynomial chi{std::move(zc)};

    for (int i = n; i < n + 2; ++i) {
        long long cnt = count_complement(a, primes[i], threads);
        if (chi.eval(int_of(primes[i])) != int_of(cnt))
            throw InconsistentInterpolation(
                "validation prime disagrees; admissibility bound insufficient");
    }
    return chi;
}

bool verify_ceo_bijection(const VertexWeightedDigraph& g, int v, long long p) {
    if (!g.is_coking(v)) throw NotACoking("bijection check needs a coking");
    if (!condition_c(g, v)) throw ConditionCViolated("Condition (C) fails at v");
    VertexWeightedDigraph g2 = ceo(g, v);
    Arrangement a = arrangement_of(g);
    Arrangement a2 = arrangement_of(g2);
    long long bound = std::max(admissible_prime_bound(a), admissible_prime_bound(a2));
    if (!is_prime(p)) throw ParamOutOfRange("p must be prime");
    if (p <= bound) throw PrimeTooSmall("p <= admissibility bound " + std::to_string(bound));

    int n = g.vertex_count();
    auto encode = [n](const std::vector<int>& pt) {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i) k = k * 131 + (std::uint64_t)pt[i];
        return k;
    };

    std::vector<std::vector<int>> m_pts = complement_points(a, p);
    std::vector<std::vector<int>> m2_pts = complement_points(a2, p);
    std::set<std::uint64_t> m_set, m2_set;
    for (const auto& pt : m_pts) m_set.insert(encode(pt));
    for (const auto& pt : m2_pts) m2_set.insert(encode(pt));

    std::vector<std::vector<int>> m_minus, m2_minus;
    for (const auto& pt : m_pts)
        if (!m2_set.count(encode(pt))) m_minus.push_back(pt);
    for (const auto& pt : m2_pts)
        if (!m_set.count(encode(pt))) m2_minus.push_back(pt);

    // cardinality equality, independent of the maps below
    if (m_minus.size() != m2_minus.size()) return false;

    int vi = v - 1;
    auto shift_down = [&](const std::vector<int>& x) {
        // f: slide everything above x_v down so the minimum lands at x_v + 1
        long long best = -1;
        for (int i = 0; i < n; ++i)
            if (x[i] > x[vi] && (best < 0 || x[i] < best)) best = x[i];
        if (best < 0) return std::vector<int>();
        long long d = best - x[vi];
        std::vector<int> y(x);
        for (int i = 0; i < n; ++i)
            if (x[i] > x[vi]) y[i] = (int)(x[i] - d + 1);
        return y;
    };
    auto shift_up = [&](const std::vector<int>& y) {
        // g: slide back up by c = min{a_k - y_k mod p over y_k above y_v}
        long long c = -1;
        for (int k = 0; k < n; ++k) {
            if (!(y[k] > y[vi])) continue;
            long long ak = g.weight(k + 1).lower();
            long long ck = ((ak - y[k]) % p + p) % p;
            if (c < 0 || ck < c) c = ck;
        }
        if (c < 0) return std::vector<int>();
        std::vector<int> x(y);
        for (int k = 0; k < n; ++k)
            if (y[k] > y[vi]) x[k] = (int)(y[k] + c - 1);
        return x;
    };

    std::set<std::uint64_t> m_minus_keys, m2_minus_keys;
    for (const auto& pt : m_minus) m_minus_keys.insert(encode(pt));
    for (const auto& pt : m2_minus) m2_minus_keys.insert(encode(pt));

    for (const auto& x : m_minus) {
        std::vector<int> y = shift_down(x);
        if (y.empty() || !m2_minus_keys.count(encode(y))) return false;
        if (shift_up(y) != x) return false; // g o f = id
    }
    for (const auto& y : m2_minus) {
        std::vector<int> x = shift_up(y);
        if (x.empty() || !m_minus_keys.count(encode(x))) return false;
        if (shift_down(x) != y) return false; // f o g = id
    }
    return true;
}

} // namespace arrange
