#include "arrange/signed_graph.hpp"

#include <algorithm>
#include <set>

#include "arrange/errors.hpp"

namespace arrange {

SignedGraph::SignedGraph(int num_vertices, long long n0) : n_(num_vertices), n0_(n0) {
    if (num_vertices < 1) throw ParamOutOfRange("signed graph needs vertices");
    eps_.assign(n_, std::vector<int>(n_, 0));
}

int SignedGraph::epsilon(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw ParamOutOfRange("epsilon: bad pair");
    return eps_[i][j];
}

void SignedGraph::set_epsilon(int i, int j, int value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw ParamOutOfRange("epsilon: bad pair");
    if (value < -1 || value > 1) throw ParamOutOfRange("epsilon must be in {-1,0,1}");
    eps_[i][j] = eps_[j][i] = value;
}

std::vector<long long> admissible_n0_set(const VertexWeightedDigraph& g) {
    long long lo = 0, hi = -1;
    bool first = true;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        long long s = g.weight(i).size();
        long long l = s - 3, h = s - 1;
        if (first) {
            lo = l;
            hi = h;
            first = false;
        } else {
            lo = std::max(lo, l);
            hi = std::min(hi, h);
        }
    }
    lo = std::max(lo, 0LL);
    std::vector<long long> out;
    for (long long n0 = lo; n0 <= hi; ++n0) out.push_back(n0);
    return out;
}

SignedGraph signed_graph_from(const VertexWeightedDigraph& g, long long n0) {
    if (n0 < 0) throw ParamOutOfRange("n0 must be non-negative");
    int l = g.vertex_count();
    SignedGraph s(l + 1, n0);
    for (int i = 1; i <= l; ++i) {
        long long tau = g.weight(i).size() - 2 - n0;
        if (tau < -1 || tau > 1)
            throw NotRepresentable("|psi(" + std::to_string(i) + ")| - 2 - n0 = " +
                                   std::to_string(tau) + " outside {-1,0,1}");
        s.set_epsilon(0, i, (int)tau);
    }
    for (int i = 1; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            bool ij = g.has_arc(i, j), ji = g.has_arc(j, i);
            s.set_epsilon(i, j, ij && ji ? 1 : (!ij && !ji ? -1 : 0));
        }
    }
    return s;
}

namespace {

// conditions (i) and (ii) for a triple whose last-eliminated vertex is k
bool triple_ok(const SignedGraph& s, int i, int j, int k) {
    for (int sigma : {1, -1}) {
        // (i)
        if (s.epsilon(i, k) == sigma && s.epsilon(j, k) == sigma &&
            s.epsilon(i, j) != sigma)
            return false;
        // (ii), both roles of the two smaller vertices
        if (s.epsilon(k, i) == sigma && s.epsilon(i, j) == -sigma &&
            s.epsilon(k, j) != -sigma)
            return false;
        if (s.epsilon(k, j) == sigma && s.epsilon(j, i) == -sigma &&
            s.epsilon(k, i) != -sigma)
            return false;
    }
    return true;
}

} // namespace

bool signed_eliminable(const SignedGraph& s, const std::vector<int>& ordering) {
    int n = s.vertex_count();
    if ((int)ordering.size() != n) throw ParamOutOfRange("ordering size mismatch");
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = ordering[p];
        if (v < 0 || v >= n || pos[v] >= 0) throw ParamOutOfRange("ordering is not a permutation");
        pos[v] = p;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int k = a, i = b, j = c;
                if (pos[b] > pos[k]) std::swap(k, i);
                if (pos[c] > pos[k]) std::swap(k, j);
                // i, j are now the two earlier vertices
                if (!triple_ok(s, i, j, k)) return false;
            }
    return true;
}

namespace {

bool search_order(const SignedGraph& s, unsigned remaining, std::vector<int>& order,
                  std::set<unsigned>& dead) {
    int cnt = __builtin_popcount(remaining);
    if (cnt <= 2) {
        for (int v = 0; v < s.vertex_count(); ++v)
            if (remaining >> v & 1) order.push_back(v);
        return true;
    }
    if (dead.count(remaining)) return false;
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (!(remaining >> v & 1)) continue;
        // v is eliminated last among `remaining`
        bool ok = true;
        for (int i = 0; i < s.vertex_count() && ok; ++i) {
            if (i == v || !(remaining >> i & 1)) continue;
            for (int j = i + 1; j < s.vertex_count() && ok; ++j) {
                if (j == v || !(remaining >> j & 1)) continue;
                ok = triple_ok(s, i, j, v);
            }
        }
        if (!ok) continue;
        if (search_order(s, remaining & ~(1u << v), order, dead)) {
            order.push_back(v);
            return true;
        }
    }
    dead.insert(remaining);
    return false;
}

} // namespace

std::optional<std::vector<int>> signed_elimination_order(const SignedGraph& s) {
    if (s.vertex_count() > 8) throw TooLarge("elimination search capped at 8 vertices");
    std::vector<int> order;
    std::set<unsigned> dead;
    unsigned all = (1u << s.vertex_count()) - 1;
    if (!search_order(s, all, order, dead)) return std::nullopt;
    return order; // built back-to-front, so already first-to-last
}

bool signed_eliminable_any(const SignedGraph& s) {
    return signed_elimination_order(s).has_value();
}

} // namespace arrange
