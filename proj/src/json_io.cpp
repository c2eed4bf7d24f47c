#include "arrange/json_io.hpp"

namespace arrange {

using nlohmann::json;

json to_json(const VertexWeightedDigraph& g) {
    json arcs = json::array();
    for (auto [i, j] : g.arcs()) arcs.push_back(json::array({i, j})); // set order = lexicographic
    json weights = json::object();
    for (int i = 1; i <= g.vertex_count(); ++i) {
        const WeightInterval& w = g.weight(i);
        if (w.is_empty())
            weights[std::to_string(i)] = nullptr;
        else
            weights[std::to_string(i)] = json::array({w.lower(), w.upper()});
    }
    return json{{"n", g.vertex_count()}, {"arcs", arcs}, {"weights", weights}};
}

VertexWeightedDigraph digraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("digraph JSON needs an integer field n");
    int n = j["n"].get<int>();
    if (n < 1) throw ParseError("digraph JSON: n must be >= 1");
    VertexWeightedDigraph::ArcSet arcs;
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) throw ParseError("arcs must be an array of pairs");
        for (const auto& e : j["arcs"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("arc must be a pair of integers");
            arcs.insert({e[0].get<int>(), e[1].get<int>()});
        }
    }
    std::vector<WeightInterval> psi(n + 1, WeightInterval::empty());
    if (j.contains("weights")) {
        if (!j["weights"].is_object()) throw ParseError("weights must be an object");
        for (const auto& [key, val] : j["weights"].items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw ParseError("weight key is not a vertex: " + key);
            }
            if (v < 1 || v > n) throw ParseError("weight key out of range: " + key);
            if (val.is_null()) continue;
            if (!val.is_array() || val.size() != 2 || !val[0].is_number_integer() ||
                !val[1].is_number_integer())
                throw ParseError("weight must be null or an [a, b] interval");
            long long a = val[0].get<long long>(), b = val[1].get<long long>();
            if (a > b) throw ParseError("weight interval has a > b");
            psi[v] = WeightInterval(a, b);
        }
    }
    try {
        return VertexWeightedDigraph(n, std::move(arcs), std::move(psi));
    } catch (const ParamOutOfRange& e) {
        throw ParseError(std::string("digraph JSON: ") + e.what());
    }
}

json to_json(const Arrangement& a) {
    json hs = json::array();
    for (const auto& h : a.hyperplanes())
        hs.push_back(json{{"coeffs", h.coeffs()}, {"constant", h.constant()}});
    json out{{"dim", a.dim()}, {"hyperplanes", hs}};
    if (a.infinity_index()) out["cone_infinity_index"] = *a.infinity_index();
    return out;
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("arrangement JSON needs an integer field dim");
    int dim = j["dim"].get<int>();
    std::vector<Hyperplane> hs;
    if (j.contains("hyperplanes")) {
        for (const auto& e : j["hyperplanes"]) {
            if (!e.is_object() || !e.contains("coeffs") || !e.contains("constant"))
                throw ParseError("hyperplane needs coeffs and constant");
            std::vector<long long> coeffs;
            for (const auto& c : e["coeffs"]) {
                if (!c.is_number_integer()) throw ParseError("coefficients must be integers");
                coeffs.push_back(c.get<long long>());
            }
            if ((int)coeffs.size() != dim) throw ParseError("coefficient length must equal dim");
            if (!e["constant"].is_number_integer())
                throw ParseError("constant must be an integer");
            try {
                hs.emplace_back(std::move(coeffs), e["constant"].get<long long>());
            } catch (const std::invalid_argument& ex) {
                throw ParseError(std::string("hyperplane: ") + ex.what());
            }
        }
    }
    Arrangement out(dim, std::move(hs));
    if (j.contains("cone_infinity_index")) {
        size_t idx = j["cone_infinity_index"].get<size_t>();
        if (idx >= out.size()) throw ParseError("cone_infinity_index out of range");
        out.set_infinity_index(idx);
    }
    return out;
}

json to_json(const IntegerPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

json to_json(const FreenessVerdict& v) {
    json out{{"status", to_string(v.status)}, {"evidence", v.evidence}};
    if (v.exponents) out["exponents"] = *v.exponents;
    return out;
}

std::string canonical_dump(const json& j) { return j.dump(); }

} // namespace arrange
