#include "arrange/freeness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "arrange/oracle.hpp"

namespace arrange {

std::pair<long long, long long> wakamiko_exponents(long long k1, long long k2, long long k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0) throw ParamOutOfRange("multiplicities must be >= 0");
    std::vector<long long> k{k1, k2, k3};
    std::sort(k.begin(), k.end());
    if (k[0] + k[1] - 1 <= k[2]) {
        long long lo = std::min(k[2], k[0] + k[1]);
        long long hi = std::max(k[2], k[0] + k[1]);
        return {lo, hi};
    }
    long long s = k[0] + k[1] + k[2];
    return {s / 2, (s + 1) / 2};
}

namespace {

bool subset(const WeightInterval& a, const WeightInterval& b) { return b.contains(a); }

} // namespace

L1Verdict l1_free(const VertexWeightedDigraph& g) {
    if (g.vertex_count() != 2) throw MalformedL1("l1_free needs exactly 2 vertices");
    WeightInterval p1 = g.weight(1), p2 = g.weight(2);
    int arcs = (g.has_arc(1, 2) ? 1 : 0) + (g.has_arc(2, 1) ? 1 : 0);

    L1Verdict v;
    if (arcs == 0) {
        v.free = subset(p1, p2) || subset(p2, p1);
        v.supersolvable = v.free;
        return v;
    }
    if (arcs == 1) {
        if (g.has_arc(2, 1)) std::swap(p1, p2); // orient the arc as (1,2)
        long long m1 = p1.size(), m2 = p2.size();
        if (m1 == m2) {
            v.free = p1 == p2 || p1 == p2.shifted(1);
            v.supersolvable = m1 == 0 ? v.free : (v.free && m1 == 1);
        } else if (m1 < m2) {
            v.free = subset(p1, p2.intersect(p2.shifted(1)));
            v.supersolvable = v.free;
        } else {
            v.free = subset(p2, p1.intersect(p1.shifted(-1)));
            v.supersolvable = v.free;
        }
        return v;
    }
    // two arcs: the digraph is symmetric, sort the weights by size
    if (p1.size() > p2.size()) std::swap(p1, p2);
    long long m1 = p1.size(), m2 = p2.size();
    if (m1 == m2) {
        v.free = p1 == p2 || (m1 == 1 && (p1 == p2.shifted(1) || p1 == p2.shifted(-1)));
        v.supersolvable = m1 == 0 ? v.free : (v.free && m1 >= 1 && m1 <= 2);
    } else if (m1 == m2 - 1) {
        v.free = p1 == p2.intersect(p2.shifted(1)) || p1 == p2.intersect(p2.shifted(-1));
        v.supersolvable = v.free && m1 >= 0 && m1 <= 1;
    } else {
        v.free = subset(p1, p2.shifted(-1).intersect(p2).intersect(p2.shifted(1)));
        v.supersolvable = v.free;
    }
    return v;
}

const std::vector<VertexWeightedDigraph::ArcSet>& l2_catalogue() {
    // the thirteen 3-vertex digraphs with free weightless cone
    static const std::vector<VertexWeightedDigraph::ArcSet> cat{
        {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, // complete
        {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}},         // complete minus one arc
        {{1, 2}, {2, 1}, {1, 3}, {3, 1}},                 // two double arcs at a hub
        {{2, 1}, {2, 3}, {3, 1}, {3, 2}},                 // double pair, both into the third
        {{1, 2}, {1, 3}, {2, 3}, {3, 2}},                 // double pair, both out of the third
        {{1, 2}, {2, 3}, {3, 2}},                         // double pair plus arc in
        {{3, 1}, {2, 3}, {3, 2}},                         // double pair plus arc out
        {{2, 1}, {2, 3}, {3, 1}},                         // transitive tournament
        {{1, 2}, {1, 3}},                                 // out-star
        {{2, 1}, {3, 1}},                                 // in-star
        {{2, 3}, {3, 2}},                                 // one double arc
        {{2, 3}},                                         // one arc
        {},                                               // edgeless
    };
    return cat;
}

bool l2_free(const VertexWeightedDigraph& g) {
    if (g.vertex_count() != 3) throw ParamOutOfRange("l2_free needs exactly 3 vertices");
    std::vector<WeightInterval> none(4, WeightInterval::empty());
    VertexWeightedDigraph bare(3, g.arcs(), none);
    for (const auto& arcs : l2_catalogue()) {
        VertexWeightedDigraph member(3, arcs, none);
        if (digraph_isomorphic(bare, member)) return true;
    }
    return false;
}

int Codim3Report::count(const std::string& type) const {
    int c = 0;
    for (const auto& e : entries)
        if (e.type == type) ++c;
    return c;
}

Codim3Report locally_free_codim3(const VertexWeightedDigraph& g) {
    DigraphArrangement da = cone_digraph(g);
    size_t inf = *da.arr.infinity_index();
    std::vector<Flat> flats = codim3_flats_along(da.arr, inf);

    Codim3Report report;
    for (const Flat& f : flats) {
        // read the flat's shape off the provenance of its members: weight
        // members pin a coordinate to zero, braid members equate a pair,
        // and pinning propagates along equated components
        std::set<int> weight_pinned;
        std::vector<int> parent(g.vertex_count() + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (size_t h = 0; h < da.arr.size(); ++h) {
            if (!(f.members >> h & 1)) continue;
            const HyperplaneOrigin& o = da.origins[h];
            if (o.kind == HyperplaneOrigin::Kind::Weight) weight_pinned.insert(o.i);
            if (o.kind == HyperplaneOrigin::Kind::Braid) parent[find(o.i)] = find(o.j);
        }
        std::set<int> pinned_roots;
        for (int v : weight_pinned) pinned_roots.insert(find(v));
        std::vector<int> pinned;
        std::map<int, std::vector<int>> blocks;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (pinned_roots.count(find(v)))
                pinned.push_back(v);
            else
                blocks[find(v)].push_back(v);
        }
        std::vector<std::vector<int>> nontrivial;
        for (auto& [root, vs] : blocks)
            if (vs.size() >= 2) nontrivial.push_back(vs);

        Codim3Entry entry;
        if (pinned.size() == 2 && nontrivial.empty()) {
            entry.type = "L1";
            entry.vertices = pinned;
            L1Verdict v = l1_free(induced(g, entry.vertices));
            entry.free = v.free;
            entry.note = v.free ? "free 2-vertex cone" : "non-free 2-vertex cone";
        } else if (pinned.empty() && nontrivial.size() == 1 && nontrivial[0].size() == 3) {
            entry.type = "L2";
            entry.vertices = nontrivial[0];
            entry.free = l2_free(induced(g, entry.vertices));
            entry.note = entry.free ? "in the free catalogue" : "outside the free catalogue";
        } else if (pinned.size() == 1 && nontrivial.size() == 1 && nontrivial[0].size() == 2) {
            entry.type = "L3";
            entry.vertices = nontrivial[0];
            entry.vertices.push_back(pinned.front());
            entry.free = true;
            entry.note = "supersolvable, free automatically";
        } else if (pinned.empty() && nontrivial.size() == 2 && nontrivial[0].size() == 2 &&
                   nontrivial[1].size() == 2) {
            entry.type = "L4";
            entry.vertices = nontrivial[0];
            entry.vertices.insert(entry.vertices.end(), nontrivial[1].begin(),
                                  nontrivial[1].end());
            entry.free = true;
            entry.note = "supersolvable, free automatically";
        } else {
            throw UnclassifiableFlat("codim-3 flat matches no L1-L4 pattern");
        }
        report.all_free = report.all_free && entry.free;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

std::string join_verts(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

} // namespace

FreenessVerdict decide_freeness(const VertexWeightedDigraph& g) {
    FreenessVerdict verdict;

    // peel vertices that are isolated with minimal weight; freeness of the
    // cone is unchanged by removing them
    VertexWeightedDigraph h = g;
    std::vector<int> labels(g.vertex_count());
    std::iota(labels.begin(), labels.end(), 1);
    bool peeled = true;
    while (peeled && h.vertex_count() > 1) {
        peeled = false;
        for (int v = 1; v <= h.vertex_count(); ++v) {
            if (!isolated_min_weight(h, v)) continue;
            verdict.evidence.push_back("simplicial vertex removed (original label " +
                                       std::to_string(labels[v - 1]) + ")");
            std::vector<int> keep;
            for (int u = 1; u <= h.vertex_count(); ++u)
                if (u != v) keep.push_back(u);
            labels.erase(labels.begin() + (v - 1));
            h = induced(h, keep);
            peeled = true;
            break;
        }
    }

    if (h.vertex_count() <= 1) {
        verdict.status = FreeStatus::Free;
        verdict.evidence.push_back("reduced to at most one vertex: cone has rank <= 2");
    } else {
        std::vector<long long> n0s = admissible_n0_set(h);
        if (n0s.empty()) {
            verdict.evidence.push_back("no admissible n0 for the signed-graph decomposition; "
                                       "falling back to the Saito oracle");
            try {
                FreenessVerdict o = oracle_freeness(cone(arrangement_of(h)));
                verdict.status = o.status;
                for (const auto& e : o.evidence) verdict.evidence.push_back("oracle: " + e);
            } catch (const TooLarge& e) {
                verdict.status = FreeStatus::Inconclusive;
                verdict.evidence.push_back(std::string("oracle unavailable: ") + e.what());
                return verdict;
            }
        } else {
            std::vector<bool> results;
            std::string n0_list;
            for (long long n0 : n0s) {
                SignedGraph s = signed_graph_from(h, n0);
                results.push_back(signed_eliminable_any(s));
                if (!n0_list.empty()) n0_list += ",";
                n0_list += std::to_string(n0);
            }
            for (bool r : results)
                if (r != results[0])
                    throw std::logic_error("signed-eliminability differs across admissible n0");
            bool se = results[0];
            verdict.evidence.push_back(std::string("signed-eliminable: ") +
                                       (se ? "yes" : "no") + " (n0 in {" + n0_list + "})");
            if (se) {
                auto witness = signed_elimination_order(signed_graph_from(h, n0s[0]));
                std::string w = "elimination order:";
                for (int v : *witness) w += " " + std::to_string(v);
                verdict.evidence.push_back(w);
            }

            Codim3Report codim3 = locally_free_codim3(h);
            verdict.evidence.push_back(
                "codim-3 flats along infinity: L1=" + std::to_string(codim3.count("L1")) +
                " L2=" + std::to_string(codim3.count("L2")) +
                " L3=" + std::to_string(codim3.count("L3")) +
                " L4=" + std::to_string(codim3.count("L4")) +
                (codim3.all_free ? ", all free" : ", non-free flat found"));
            if (!codim3.all_free) {
                for (const auto& e : codim3.entries)
                    if (!e.free)
                        verdict.evidence.push_back("non-free " + e.type + " flat at vertices " +
                                                   join_verts(e.vertices) + ": " + e.note);
            }

            if (se && codim3.all_free)
                verdict.status = FreeStatus::Free;
            else
                verdict.status = FreeStatus::NotFree;
        }
    }

    if (verdict.status == FreeStatus::Free) {
        auto exps = exponents_from_chi(cone(arrangement_of(g)));
        if (!exps) {
            verdict.status = FreeStatus::Inconclusive;
            verdict.evidence.push_back(
                "pipeline says free but chi of the cone does not split over Z");
        } else {
            verdict.exponents = *exps;
        }
    }
    return verdict;
}

bool is_modular_coatom(const Arrangement& a, const Flat& x) {
    if (!a.central()) throw NotCentral("modular coatoms live in central arrangements");
    Flat checked = resolve_flat(a, x.system);
    if (checked.rank != arrangement_rank(a) - 1)
        throw NotACoatom("flat rank must be rank(A) - 1");

    std::vector<size_t> outside;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(checked.members >> i & 1)) outside.push_back(i);

    auto to_row = [&](size_t i) {
        RatRow r;
        for (long long c : a[i].coeffs()) r.push_back(rat_of(c));
        return r;
    };

    for (size_t x1 = 0; x1 < outside.size(); ++x1) {
        for (size_t x2 = x1 + 1; x2 < outside.size(); ++x2) {
            bool covered = false;
            for (size_t i = 0; i < a.size() && !covered; ++i) {
                if (!(checked.members >> i & 1)) continue;
                RatMatrix m{to_row(outside[x1]), to_row(outside[x2]), to_row(i)};
                covered = rank(std::move(m)) == 2;
            }
            if (!covered) return false;
        }
    }
    return true;
}

namespace {

struct SsSearch {
    const Arrangement& a;
    std::map<std::uint64_t, std::optional<std::vector<std::uint64_t>>> memo;

    std::optional<std::vector<std::uint64_t>> chain(std::uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        std::vector<size_t> idx;
        for (size_t i = 0; i < a.size(); ++i)
            if (mask >> i & 1) idx.push_back(i);
        std::vector<Hyperplane> hs;
        for (size_t i : idx) hs.push_back(a[i]);
        Arrangement sub(a.dim(), hs);

        std::optional<std::vector<std::uint64_t>> result;
        int r = arrangement_rank(sub);
        if (r <= 1) {
            result = std::vector<std::uint64_t>{};
            if (mask) result->push_back(mask);
        } else {
            IntersectionPoset poset(sub, r - 1);
            for (const Flat* coatom : poset.level(r - 1)) {
                if (!is_modular_coatom(sub, *coatom)) continue;
                // lift members back to indices of the root arrangement
                std::uint64_t lifted = 0;
                for (size_t i = 0; i < idx.size(); ++i)
                    if (coatom->members >> i & 1) lifted |= 1ULL << idx[i];
                auto rec = chain(lifted);
                if (rec) {
                    result = *rec;
                    result->push_back(mask);
                    break;
                }
            }
        }
        memo.emplace(mask, result);
        return result;
    }
};

} // namespace

SupersolvableResult supersolvable(const Arrangement& a) {
    if (!a.central()) throw NotCentral("supersolvability is for central arrangements");
    if (a.size() > 64) throw TooLarge("supersolvability search capped at 64 hyperplanes");

    SsSearch search{a, {}};
    std::uint64_t full = a.size() == 64 ? ~0ULL : (1ULL << a.size()) - 1;
    auto chain = search.chain(full);
    SupersolvableResult out;
    out.supersolvable = chain.has_value();
    if (!out.supersolvable) return out;

    int r = arrangement_rank(a);
    for (int i = 0; i < a.dim() - r; ++i) out.exponents.push_back(0);
    std::uint64_t prev = 0;
    for (std::uint64_t mask : *chain) {
        out.chain_sizes.push_back((size_t)__builtin_popcountll(mask));
        out.exponents.push_back(__builtin_popcountll(mask) - __builtin_popcountll(prev));
        prev = mask;
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

std::optional<std::vector<long long>> exponents_from_chi(const Arrangement& a) {
    IntegerPolynomial chi = char_poly(a);
    auto [roots, residual] = chi.integer_roots(0, (long long)a.size());
    if (residual.degree() > 0 || residual.is_zero() || residual.coeff(0) != 1)
        return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace arrange
