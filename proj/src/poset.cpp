#include "arrange/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace arrange {

namespace {

RatRow row_of(const Hyperplane& h) {
    RatRow r;
    r.reserve(h.dim());
    for (long long c : h.coeffs()) r.push_back(rat_of(c));
    return r;
}

std::uint64_t members_of(const Arrangement& a, const LinearSystem& sys) {
    std::uint64_t m = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (sys.implies(row_of(a[i]), rat_of(a[i].constant()))) m |= 1ULL << i;
    }
    return m;
}

void check_size(const Arrangement& a) {
    if (a.size() > 64) throw TooLarge("poset machinery capped at 64 hyperplanes");
}

} // namespace

Flat resolve_flat(const Arrangement& a, const LinearSystem& system) {
    check_size(a);
    Flat f(system);
    f.members = members_of(a, system);
    // the flat must be exactly the intersection of its members
    LinearSystem check(a.dim());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(f.members >> i & 1)) continue;
        if (!check.add_equation(row_of(a[i]), rat_of(a[i].constant())))
            throw FlatNotInPoset("members are inconsistent");
    }
    if (!(check == system)) throw FlatNotInPoset("flat is not an intersection from this arrangement");
    return f;
}

Flat flat_of(const Arrangement& a, const std::vector<size_t>& h_indices) {
    LinearSystem sys(a.dim());
    for (size_t i : h_indices) {
        if (i >= a.size()) throw ParamOutOfRange("flat_of: index out of range");
        if (!sys.add_equation(row_of(a[i]), rat_of(a[i].constant())))
            throw FlatNotInPoset("empty intersection");
    }
    return resolve_flat(a, sys);
}

IntersectionPoset::IntersectionPoset(const Arrangement& a, int max_rank) : a_(a) {
    check_size(a_);
    int target = max_rank < 0 ? a_.dim() : max_rank;

    std::vector<RatRow> rows;
    rows.reserve(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) rows.push_back(row_of(a_[i]));

    Flat ambient{LinearSystem(a_.dim())};
    ambient.members = 0;
    flats_.push_back(ambient);
    level_offsets_ = {0, 1};

    std::vector<size_t> current{0};
    int r = 0;
    bool exhausted = false;
    while (r < target && !current.empty()) {
        std::unordered_map<std::string, size_t> seen;
        std::vector<size_t> next;
        for (size_t fi : current) {
            for (size_t h = 0; h < a_.size(); ++h) {
                if (flats_[fi].members >> h & 1) continue;
                LinearSystem sys = flats_[fi].system;
                if (!sys.add_equation(rows[h], rat_of(a_[h].constant()))) continue; // empty
                std::string key = sys.key();
                if (seen.count(key)) continue;
                Flat f(std::move(sys));
                f.members = members_of(a_, f.system);
                seen.emplace(std::move(key), flats_.size());
                next.push_back(flats_.size());
                flats_.push_back(std::move(f));
            }
        }
        level_offsets_.push_back(flats_.size());
        exhausted = next.empty();
        current = std::move(next);
        ++r;
    }
    max_rank_built_ = (int)level_offsets_.size() - 2;
    complete_ = exhausted || target >= a_.dim();
    // drop trailing empty levels
    while (level_offsets_.size() >= 2 &&
           level_offsets_[level_offsets_.size() - 1] == level_offsets_[level_offsets_.size() - 2]) {
        level_offsets_.pop_back();
        --max_rank_built_;
    }
}

std::vector<const Flat*> IntersectionPoset::level(int rank) const {
    std::vector<const Flat*> out;
    if (rank < 0 || rank + 1 >= (int)level_offsets_.size()) return out;
    for (size_t i = level_offsets_[rank]; i < level_offsets_[rank + 1]; ++i)
        out.push_back(&flats_[i]);
    return out;
}

const std::vector<Int>& IntersectionPoset::mobius() const {
    if (!mobius_.empty()) return mobius_;
    if (!complete_) throw std::logic_error("mobius needs the full poset");
    mobius_.assign(flats_.size(), 0);
    mobius_[0] = 1; // ambient
    // level order: every Y strictly containing X (as a set) precedes X
    for (size_t i = 1; i < flats_.size(); ++i) {
        Int acc = 0;
        for (size_t j = 0; j < i; ++j) {
            if (flats_[j].rank >= flats_[i].rank) continue;
            if ((flats_[j].members & flats_[i].members) == flats_[j].members) acc += mobius_[j];
        }
        mobius_[i] = -acc;
    }
    return mobius_;
}

IntegerPolynomial IntersectionPoset::characteristic_polynomial() const {
    const std::vector<Int>& mu = mobius();
    std::vector<Int> coeffs(a_.dim() + 1, 0);
    for (size_t i = 0; i < flats_.size(); ++i) coeffs[a_.dim() - flats_[i].rank] += mu[i];
    return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial char_poly(const Arrangement& a) {
    return IntersectionPoset(a).characteristic_polynomial();
}

Arrangement localization(const Arrangement& a, const Flat& x) {
    Flat checked = resolve_flat(a, x.system);
    std::vector<Hyperplane> hs;
    for (size_t i = 0; i < a.size(); ++i)
        if (checked.members >> i & 1) hs.push_back(a[i]);
    Arrangement out(a.dim(), std::move(hs));
    if (a.infinity_index() && (checked.members >> *a.infinity_index() & 1))
        out.set_infinity_index(out.find(a[*a.infinity_index()]));
    return out;
}

Arrangement restriction(const Arrangement& a, const Flat& x) {
    Flat checked = resolve_flat(a, x.system);
    std::vector<int> free_cols = x.system.free_columns();
    int d = (int)free_cols.size();
    if (d == 0) throw ParamOutOfRange("restriction to a point");
    std::vector<Hyperplane> hs;
    for (size_t i = 0; i < a.size(); ++i) {
        if (checked.members >> i & 1) continue;
        auto [res, rc] = x.system.reduce(row_of(a[i]), rat_of(a[i].constant()));
        bool zero = std::all_of(res.begin(), res.end(), [](const Rat& q) { return q == 0; });
        if (zero) continue; // rc != 0 here: K does not meet X
        // collect the free-variable coordinates and clear denominators
        Int lcm = rc.get_den();
        for (int f : free_cols) lcm = lcm / gcd(lcm, res[f].get_den()) * res[f].get_den();
        std::vector<long long> coeffs;
        coeffs.reserve(d);
        for (int f : free_cols) {
            Int v = res[f].get_num() * (lcm / res[f].get_den());
            coeffs.push_back(v.get_si());
        }
        Int cv = rc.get_num() * (lcm / rc.get_den());
        hs.emplace_back(std::move(coeffs), cv.get_si());
    }
    return Arrangement(d, std::move(hs));
}

std::vector<Flat> codim3_flats_along(const Arrangement& cone_arr, size_t infinity_index) {
    if (!cone_arr.central()) throw NotCentral("codim3_flats_along needs a central cone");
    if (infinity_index >= cone_arr.size()) throw ParamOutOfRange("bad infinity index");
    IntersectionPoset poset(cone_arr, 3);
    std::vector<Flat> out;
    for (const Flat* f : poset.level(3))
        if (f->members >> infinity_index & 1) out.push_back(*f);
    return out;
}

} // namespace arrange
