#include "arrange/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace arrange {

VertexWeightedDigraph::VertexWeightedDigraph(int n) : n_(n) {
    if (n < 1) throw ParamOutOfRange("digraph needs at least one vertex");
    psi_.assign(n + 1, WeightInterval::empty());
}

VertexWeightedDigraph::VertexWeightedDigraph(int n, ArcSet arcs,
                                             std::vector<WeightInterval> psi_1based)
    : n_(n), arcs_(std::move(arcs)), psi_(std::move(psi_1based)) {
    if (n < 1) throw ParamOutOfRange("digraph needs at least one vertex");
    if ((int)psi_.size() == n) {
        // accept 0-based input by shifting
        psi_.insert(psi_.begin(), WeightInterval::empty());
    }
    if ((int)psi_.size() != n + 1)
        throw ParamOutOfRange("weight map must cover every vertex");
    psi_[0] = WeightInterval::empty(); // slot 0 unused, keep comparable
    for (auto [i, j] : arcs_) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParamOutOfRange("arc endpoint out of range");
        if (i == j) throw ParamOutOfRange("self-loop");
    }
}

void VertexWeightedDigraph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw ParamOutOfRange("vertex out of range");
}

const WeightInterval& VertexWeightedDigraph::weight(int v) const {
    check_vertex(v);
    return psi_[v];
}

bool VertexWeightedDigraph::is_king(int v) const {
    check_vertex(v);
    for (int u = 1; u <= n_; ++u)
        if (u != v && !has_arc(v, u)) return false;
    return true;
}

bool VertexWeightedDigraph::is_coking(int v) const {
    check_vertex(v);
    for (int u = 1; u <= n_; ++u)
        if (u != v && !has_arc(u, v)) return false;
    return true;
}

bool VertexWeightedDigraph::is_isolated(int v) const {
    check_vertex(v);
    for (int u = 1; u <= n_; ++u)
        if (u != v && (has_arc(u, v) || has_arc(v, u))) return false;
    return true;
}

std::set<int> VertexWeightedDigraph::kings() const {
    std::set<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_king(v)) out.insert(v);
    return out;
}

std::set<int> VertexWeightedDigraph::cokings() const {
    std::set<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_coking(v)) out.insert(v);
    return out;
}

namespace {

void require_nonempty_weights(const VertexWeightedDigraph& g, const std::vector<int>& verts) {
    for (int i : verts)
        if (g.weight(i).is_empty())
            throw EmptyWeight("elimination needs non-Empty weights (vertex " +
                              std::to_string(i) + ")");
}

std::vector<int> all_vertices(const VertexWeightedDigraph& g) {
    std::vector<int> v(g.vertex_count());
    std::iota(v.begin(), v.end(), 1);
    return v;
}

enum class Elim { Coking, King };

VertexWeightedDigraph eliminate(const VertexWeightedDigraph& g, const std::vector<int>& w_in,
                                int v, Elim mode) {
    std::vector<int> w = w_in;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    std::set<int> wset(w.begin(), w.end());
    if (!wset.count(v)) throw ParamOutOfRange("eliminated vertex not in W");
    for (int u : w)
        if (u < 1 || u > g.vertex_count()) throw ParamOutOfRange("W out of range");
    for (auto [i, j] : g.arcs())
        if (!wset.count(i) || !wset.count(j))
            throw ParamOutOfRange("vertices outside W must be isolated");
    require_nonempty_weights(g, w);

    for (int u : w) {
        if (u == v) continue;
        bool ok = mode == Elim::Coking ? g.has_arc(u, v) : g.has_arc(v, u);
        if (!ok) {
            if (mode == Elim::Coking)
                throw NotACoking("vertex " + std::to_string(v) + " is not a coking");
            throw NotAKing("vertex " + std::to_string(v) + " is not a king");
        }
    }

    VertexWeightedDigraph::ArcSet arcs;
    for (auto [i, j] : g.arcs()) {
        if (mode == Elim::Coking && j == v) continue;
        if (mode == Elim::King && i == v) continue;
        arcs.insert({i, j});
    }
    std::vector<WeightInterval> psi(g.vertex_count() + 1, WeightInterval::empty());
    for (int u = 1; u <= g.vertex_count(); ++u) {
        const WeightInterval& p = g.weight(u);
        if (u == v || !wset.count(u)) {
            psi[u] = p;
        } else if (mode == Elim::Coking) {
            psi[u] = WeightInterval(p.lower() - 1, p.upper());
        } else {
            psi[u] = WeightInterval(p.lower(), p.upper() + 1);
        }
    }
    return VertexWeightedDigraph(g.vertex_count(), std::move(arcs), std::move(psi));
}

} // namespace

VertexWeightedDigraph ceo(const VertexWeightedDigraph& g, int v) {
    return eliminate(g, all_vertices(g), v, Elim::Coking);
}

VertexWeightedDigraph keo(const VertexWeightedDigraph& g, int v) {
    return eliminate(g, all_vertices(g), v, Elim::King);
}

VertexWeightedDigraph ceo_within(const VertexWeightedDigraph& g, const std::vector<int>& w, int v) {
    return eliminate(g, w, v, Elim::Coking);
}

VertexWeightedDigraph keo_within(const VertexWeightedDigraph& g, const std::vector<int>& w, int v) {
    return eliminate(g, w, v, Elim::King);
}

namespace {

bool zero_in_all(const VertexWeightedDigraph& g) {
    for (int i = 1; i <= g.vertex_count(); ++i)
        if (!g.weight(i).contains(0)) return false;
    return true;
}

} // namespace

bool condition_c(const VertexWeightedDigraph& g, int v) {
    if (!zero_in_all(g)) return false;
    const WeightInterval& pv = g.weight(v);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (i == v) continue;
        const WeightInterval& p = g.weight(i);
        // [a_i, b_i - 1] may be empty, in which case containment is vacuous
        if (p.upper() - 1 < p.lower()) continue;
        if (!pv.contains(WeightInterval(p.lower(), p.upper() - 1))) return false;
    }
    return true;
}

bool condition_k(const VertexWeightedDigraph& g, int v) {
    if (!zero_in_all(g)) return false;
    const WeightInterval& pv = g.weight(v);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (i == v) continue;
        const WeightInterval& p = g.weight(i);
        if (p.upper() < p.lower() + 1) continue;
        if (!pv.contains(WeightInterval(p.lower() + 1, p.upper()))) return false;
    }
    return true;
}

std::set<long long> condition_z(const VertexWeightedDigraph& g, int v) {
    long long sv = g.weight(v).size();
    // n0+2 <= |psi(v)| <= n0+3
    long long lo = sv - 3, hi = sv - 2;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (i == v) continue;
        long long s = g.weight(i).size();
        lo = std::max(lo, s - 3);
        hi = std::min(hi, s - 1);
    }
    lo = std::max(lo, 0LL);
    std::set<long long> out;
    for (long long n0 = lo; n0 <= hi; ++n0) out.insert(n0);
    return out;
}

VertexWeightedDigraph converse(const VertexWeightedDigraph& g) {
    VertexWeightedDigraph::ArcSet arcs;
    for (auto [i, j] : g.arcs()) arcs.insert({j, i});
    std::vector<WeightInterval> psi(g.vertex_count() + 1, WeightInterval::empty());
    for (int i = 1; i <= g.vertex_count(); ++i) psi[i] = g.weight(i).negated();
    return VertexWeightedDigraph(g.vertex_count(), std::move(arcs), std::move(psi));
}

VertexWeightedDigraph induced(const VertexWeightedDigraph& g, const std::vector<int>& w_in) {
    std::vector<int> w = w_in;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.empty()) throw ParamOutOfRange("induced: empty vertex set");
    std::vector<int> relabel(g.vertex_count() + 1, 0);
    for (size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx] < 1 || w[idx] > g.vertex_count())
            throw ParamOutOfRange("induced: vertex out of range");
        relabel[w[idx]] = (int)idx + 1;
    }
    VertexWeightedDigraph::ArcSet arcs;
    for (auto [i, j] : g.arcs())
        if (relabel[i] && relabel[j]) arcs.insert({relabel[i], relabel[j]});
    std::vector<WeightInterval> psi(w.size() + 1, WeightInterval::empty());
    for (size_t idx = 0; idx < w.size(); ++idx) psi[idx + 1] = g.weight(w[idx]);
    return VertexWeightedDigraph((int)w.size(), std::move(arcs), std::move(psi));
}

bool isolated_min_weight(const VertexWeightedDigraph& g, int v) {
    if (!g.is_isolated(v)) return false;
    for (int i = 1; i <= g.vertex_count(); ++i)
        if (!g.weight(i).contains(g.weight(v))) return false;
    return true;
}

VertexWeightedDigraph transitive_tournament(int l, const WeightInterval& w) {
    if (l < 1) throw ParamOutOfRange("l >= 1 required");
    VertexWeightedDigraph::ArcSet arcs;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) arcs.insert({i, j});
    return VertexWeightedDigraph(l, std::move(arcs), std::vector<WeightInterval>(l + 1, w));
}

VertexWeightedDigraph complete_digraph(int l, const WeightInterval& w) {
    if (l < 1) throw ParamOutOfRange("l >= 1 required");
    VertexWeightedDigraph::ArcSet arcs;
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            if (i != j) arcs.insert({i, j});
    return VertexWeightedDigraph(l, std::move(arcs), std::vector<WeightInterval>(l + 1, w));
}

VertexWeightedDigraph edgeless_digraph(int l, const WeightInterval& w) {
    if (l < 1) throw ParamOutOfRange("l >= 1 required");
    return VertexWeightedDigraph(l, {}, std::vector<WeightInterval>(l + 1, w));
}

VertexWeightedDigraph shi_ish_digraph(int l, int k) {
    if (l < 1 || k < 1 || k > l) throw ParamOutOfRange("need 1 <= k <= l");
    VertexWeightedDigraph::ArcSet arcs;
    for (int i = 1; i <= l - k + 1; ++i)
        for (int j = i + 1; j <= l - k + 1; ++j) arcs.insert({i, j});
    std::vector<WeightInterval> psi(l + 1, WeightInterval::empty());
    for (int i = 1; i <= l; ++i) psi[i] = WeightInterval(-std::min(l - i + 1, k), 0);
    return VertexWeightedDigraph(l, std::move(arcs), std::move(psi));
}

VertexWeightedDigraph catalan_c_digraph(int l, int k) {
    if (l < 1 || k < 1 || k > l) throw ParamOutOfRange("need 1 <= k <= l");
    VertexWeightedDigraph::ArcSet arcs;
    for (int i = k; i <= l; ++i)
        for (int j = k; j <= l; ++j)
            if (i != j) arcs.insert({i, j});
    std::vector<WeightInterval> psi(l + 1, WeightInterval::empty());
    for (int i = 1; i <= l; ++i) {
        int m = std::min(i, k);
        psi[i] = WeightInterval(-m, m);
    }
    return VertexWeightedDigraph(l, std::move(arcs), std::move(psi));
}

VertexWeightedDigraph catalan_d_digraph(int l, int k) {
    if (l < 1 || k < 1 || k > l) throw ParamOutOfRange("need 1 <= k <= l");
    VertexWeightedDigraph::ArcSet arcs;
    for (int i = k + 1; i <= l; ++i) arcs.insert({k, i});
    for (int i = k + 1; i <= l; ++i)
        for (int j = k + 1; j <= l; ++j)
            if (i != j) arcs.insert({i, j});
    std::vector<WeightInterval> psi(l + 1, WeightInterval::empty());
    for (int i = 1; i <= l; ++i) {
        int m = std::min(i, k);
        psi[i] = i <= k ? WeightInterval(-m, m) : WeightInterval(-m - 1, m);
    }
    return VertexWeightedDigraph(l, std::move(arcs), std::move(psi));
}

bool digraph_isomorphic(const VertexWeightedDigraph& g1, const VertexWeightedDigraph& g2) {
    int n = g1.vertex_count();
    if (n > 8 || g2.vertex_count() > 8)
        throw TooLarge("isomorphism search capped at 8 vertices");
    if (n != g2.vertex_count()) return false;
    if (g1.arcs().size() != g2.arcs().size()) return false;

    // degree-pair multiset pre-filter
    auto degrees = [](const VertexWeightedDigraph& g) {
        std::vector<std::pair<int, int>> d(g.vertex_count(), {0, 0});
        for (auto [i, j] : g.arcs()) {
            d[i - 1].first++;
            d[j - 1].second++;
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g1) != degrees(g2)) return false;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (auto [i, j] : g1.arcs()) {
            if (!g2.has_arc(perm[i - 1], perm[j - 1])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace arrange
