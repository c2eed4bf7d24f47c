#include "arrange/arrangement.hpp"

#include <algorithm>
#include <map>

#include "arrange/linalg.hpp"

namespace arrange {

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
    if (dim < 1) throw ParamOutOfRange("dimension must be positive");
    for (const auto& h : hyperplanes) {
        if (h.dim() != dim) throw ParamOutOfRange("hyperplane dimension mismatch");
    }
    std::sort(hyperplanes.begin(), hyperplanes.end());
    hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
    hyperplanes_ = std::move(hyperplanes);
    central_ = std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                           [](const Hyperplane& h) { return h.is_central(); });
}

void Arrangement::set_infinity_index(std::optional<size_t> i) {
    if (i && *i >= hyperplanes_.size()) throw ParamOutOfRange("infinity index out of range");
    infinity_ = i;
}

std::optional<size_t> Arrangement::find(const Hyperplane& h) const {
    auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), h);
    if (it != hyperplanes_.end() && *it == h) return (size_t)(it - hyperplanes_.begin());
    return std::nullopt;
}

Arrangement cone(const Arrangement& a) {
    std::vector<Hyperplane> hs;
    hs.reserve(a.size() + 1);
    for (const auto& h : a.hyperplanes()) {
        std::vector<long long> c = h.coeffs();
        c.push_back(-h.constant());
        hs.emplace_back(std::move(c), 0);
    }
    std::vector<long long> z(a.dim() + 1, 0);
    z.back() = 1;
    Hyperplane inf(std::move(z), 0);
    hs.push_back(inf);
    Arrangement out(a.dim() + 1, std::move(hs));
    out.set_infinity_index(out.find(inf));
    return out;
}

Arrangement product(const Arrangement& a1, const Arrangement& a2) {
    std::vector<Hyperplane> hs;
    for (const auto& h : a1.hyperplanes()) {
        std::vector<long long> c = h.coeffs();
        c.resize(a1.dim() + a2.dim(), 0);
        hs.emplace_back(std::move(c), h.constant());
    }
    for (const auto& h : a2.hyperplanes()) {
        std::vector<long long> c(a1.dim(), 0);
        c.insert(c.end(), h.coeffs().begin(), h.coeffs().end());
        hs.emplace_back(std::move(c), h.constant());
    }
    return Arrangement(a1.dim() + a2.dim(), std::move(hs));
}

Arrangement deletion(const Arrangement& a, size_t h_index) {
    if (h_index >= a.size()) throw ParamOutOfRange("deletion: index out of range");
    std::vector<Hyperplane> hs;
    for (size_t i = 0; i < a.size(); ++i)
        if (i != h_index) hs.push_back(a[i]);
    Arrangement out(a.dim(), std::move(hs));
    if (a.infinity_index() && *a.infinity_index() != h_index)
        out.set_infinity_index(out.find(a[*a.infinity_index()]));
    return out;
}

Arrangement empty_arrangement(int dim) { return Arrangement(dim, {}); }

namespace {

// builds hyperplanes + origins, sorted consistently
DigraphArrangement assemble(int dim, std::vector<std::pair<Hyperplane, HyperplaneOrigin>> items,
                            bool with_infinity) {
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const auto& x, const auto& y) { return x.first == y.first; }),
                items.end());
    std::vector<Hyperplane> hs;
    std::vector<HyperplaneOrigin> origins;
    for (auto& [h, o] : items) {
        hs.push_back(h);
        origins.push_back(o);
    }
    DigraphArrangement out{Arrangement(dim, hs), std::move(origins)};
    if (with_infinity) {
        std::vector<long long> z(dim, 0);
        z.back() = 1;
        out.arr.set_infinity_index(out.arr.find(Hyperplane(std::move(z), 0)));
    }
    return out;
}

} // namespace

DigraphArrangement from_digraph(const VertexWeightedDigraph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<Hyperplane, HyperplaneOrigin>> items;
    auto coeff_diff = [n](int i, int j) {
        std::vector<long long> c(n, 0);
        c[i - 1] = 1;
        c[j - 1] = -1;
        return c;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            items.push_back({Hyperplane(coeff_diff(i, j), 0),
                             {HyperplaneOrigin::Kind::Braid, i, j, 0}});
    for (auto [i, j] : g.arcs())
        items.push_back({Hyperplane(coeff_diff(i, j), 1),
                         {HyperplaneOrigin::Kind::Arc, i, j, 1}});
    for (int i = 1; i <= n; ++i) {
        const WeightInterval& w = g.weight(i);
        if (w.is_empty()) continue;
        for (long long c = w.lower(); c <= w.upper(); ++c) {
            std::vector<long long> v(n, 0);
            v[i - 1] = 1;
            items.push_back({Hyperplane(std::move(v), c),
                             {HyperplaneOrigin::Kind::Weight, i, 0, c}});
        }
    }
    return assemble(n, std::move(items), false);
}

DigraphArrangement cone_digraph(const VertexWeightedDigraph& g) {
    DigraphArrangement flat = from_digraph(g);
    int dim = g.vertex_count() + 1;
    std::vector<std::pair<Hyperplane, HyperplaneOrigin>> items;
    for (size_t i = 0; i < flat.arr.size(); ++i) {
        std::vector<long long> c = flat.arr[i].coeffs();
        c.push_back(-flat.arr[i].constant());
        items.push_back({Hyperplane(std::move(c), 0), flat.origins[i]});
    }
    std::vector<long long> z(dim, 0);
    z.back() = 1;
    items.push_back({Hyperplane(std::move(z), 0), {HyperplaneOrigin::Kind::Infinity, 0, 0, 0}});
    return assemble(dim, std::move(items), true);
}

Arrangement arrangement_of(const VertexWeightedDigraph& g) { return from_digraph(g).arr; }

Arrangement braid_arrangement(int l) { return arrangement_of(edgeless_digraph(l)); }

Arrangement shi_arrangement(int l) { return arrangement_of(transitive_tournament(l)); }

Arrangement catalan_arrangement(int l) { return arrangement_of(complete_digraph(l)); }

Arrangement ish_arrangement(int l) { return shi_ish_arrangement(l, l); }

Arrangement shi_ish_arrangement(int l, int k) {
    if (l < 2 || k < 1 || k > l) throw ParamOutOfRange("need 2 <= l, 1 <= k <= l");
    std::vector<Hyperplane> hs;
    auto diff = [l](int i, int j, long long c) {
        std::vector<long long> v(l, 0);
        v[i - 1] = 1;
        v[j - 1] = -1;
        return Hyperplane(std::move(v), c);
    };
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) hs.push_back(diff(i, j, 0));
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= l; ++j) hs.push_back(diff(1, j, i));
    for (int i = k; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) hs.push_back(diff(i, j, 1));
    return Arrangement(l, std::move(hs));
}

int arrangement_rank(const Arrangement& a) {
    RatMatrix m;
    for (const auto& h : a.hyperplanes()) {
        RatRow row;
        for (long long c : h.coeffs()) row.push_back(rat_of(c));
        m.push_back(std::move(row));
    }
    return rank(std::move(m));
}

std::pair<Arrangement, int> essentialize(const Arrangement& a) {
    if (!a.central()) throw NotCentral("essentialize needs a central arrangement");
    RatMatrix m;
    for (const auto& h : a.hyperplanes()) {
        RatRow row;
        for (long long c : h.coeffs()) row.push_back(rat_of(c));
        m.push_back(std::move(row));
    }
    std::vector<int> pivots = rref(m);
    int r = (int)pivots.size();
    if (r == 0) return {empty_arrangement(std::max(a.dim(), 1)), 0};

    // express each normal in the row-space basis; coordinates come from the
    // pivot columns of the RREF
    std::vector<Hyperplane> hs;
    for (const auto& h : a.hyperplanes()) {
        // solve n = sum_j y_j * m[j]; since m is in RREF, y_j = n[pivot_j]
        // after eliminating previous rows
        RatRow n;
        for (long long c : h.coeffs()) n.push_back(rat_of(c));
        RatRow y(r, 0);
        for (int j = 0; j < r; ++j) {
            Rat f = n[pivots[j]];
            y[j] = f;
            if (f == 0) continue;
            for (int c = 0; c < (int)n.size(); ++c) n[c] -= f * m[j][c];
        }
        // scale to a primitive integer vector
        Int lcm = 1;
        for (const auto& q : y) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
        std::vector<long long> coeffs;
        for (const auto& q : y) {
            Int v = q.get_num() * (lcm / q.get_den());
            coeffs.push_back(v.get_si());
        }
        hs.emplace_back(std::move(coeffs), 0);
    }
    return {Arrangement(r, std::move(hs)), r};
}

} // namespace arrange
