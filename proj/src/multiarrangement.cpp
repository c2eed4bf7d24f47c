#include "arrange/multiarrangement.hpp"

#include <algorithm>
#include <map>

#include "arrange/poset.hpp"

namespace arrange {

Multiarrangement::Multiarrangement(Arrangement a, std::vector<long long> m)
    : arr(std::move(a)), mult(std::move(m)) {
    if (!arr.central()) throw NotCentral("multiarrangement needs a central arrangement");
    if (mult.size() != arr.size()) throw ParamOutOfRange("multiplicity map size mismatch");
    for (long long v : mult)
        if (v < 0) throw ParamOutOfRange("negative multiplicity");
}

bool Multiarrangement::has_zero_mult() const {
    return std::any_of(mult.begin(), mult.end(), [](long long v) { return v == 0; });
}

long long Multiarrangement::total_multiplicity() const {
    long long s = 0;
    for (long long v : mult) s += v;
    return s;
}

Multiarrangement ziegler_restriction(const Arrangement& cone_arr, size_t h_index) {
    if (!cone_arr.central()) throw NotCentral("Ziegler restriction needs a central cone");
    if (h_index >= cone_arr.size()) throw ParamOutOfRange("bad hyperplane index");

    Flat h_flat = flat_of(cone_arr, {h_index});
    Arrangement restricted = restriction(cone_arr, h_flat);

    // multiplicity per restricted hyperplane: hyperplanes of the cone
    // containing the codim-2 flat K cap H, minus one
    std::vector<long long> mult(restricted.size(), 0);
    for (size_t i = 0; i < cone_arr.size(); ++i) {
        if (i == h_index) continue;
        LinearSystem sys = h_flat.system;
        RatRow row;
        for (long long c : cone_arr[i].coeffs()) row.push_back(rat_of(c));
        if (!sys.add_equation(row, rat_of(cone_arr[i].constant()))) continue;
        if (sys.rank() == h_flat.system.rank()) continue; // i contains H entirely
        // trace of hyperplane i on H, in H's free coordinates
        auto [res, rc] = h_flat.system.reduce(row, rat_of(cone_arr[i].constant()));
        std::vector<int> free_cols = h_flat.system.free_columns();
        Int lcm = rc.get_den();
        for (int fcol : free_cols) lcm = lcm / gcd(lcm, res[fcol].get_den()) * res[fcol].get_den();
        std::vector<long long> coeffs;
        for (int fcol : free_cols) {
            Int v = res[fcol].get_num() * (lcm / res[fcol].get_den());
            coeffs.push_back(v.get_si());
        }
        Int cv = rc.get_num() * (lcm / rc.get_den());
        auto pos = restricted.find(Hyperplane(std::move(coeffs), cv.get_si()));
        if (!pos) throw std::logic_error("ziegler: trace missing from restriction");
        mult[*pos] += 1;
    }
    // m(X) = |A_X| - 1 and H itself contributes one containment, so the
    // per-trace count above is exactly |A_X| - 1
    return Multiarrangement(std::move(restricted), std::move(mult));
}

} // namespace arrange
