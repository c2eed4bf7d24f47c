#include "arrange/linalg.hpp"

#include <algorithm>

namespace arrange {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

int rank(RatMatrix m) { return (int)rref(m).size(); }

std::vector<RatRow> nullspace(const RatMatrix& m_in, int cols) {
    RatMatrix m = m_in;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<RatRow> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatRow v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool LinearSystem::add_equation(const RatRow& coeffs, const Rat& c) {
    auto [res, rc] = reduce(coeffs, c);
    int p = -1;
    for (int j = 0; j < dim_; ++j) {
        if (res[j] != 0) {
            p = j;
            break;
        }
    }
    if (p < 0) return rc == 0; // implied, or inconsistent when rc != 0

    Rat inv = 1 / res[p];
    RatRow row(dim_ + 1);
    for (int j = 0; j < dim_; ++j) row[j] = res[j] * inv;
    row[dim_] = rc * inv;

    // eliminate the new pivot from existing rows, then insert in pivot order
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][p] == 0) continue;
        Rat f = rows_[i][p];
        for (int j = 0; j <= dim_; ++j) rows_[i][j] -= f * row[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = (size_t)(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

std::pair<RatRow, Rat> LinearSystem::reduce(const RatRow& coeffs, const Rat& c) const {
    RatRow res = coeffs;
    Rat rc = c;
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat f = res[pivots_[i]];
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j) res[j] -= f * rows_[i][j];
        rc -= f * rows_[i][dim_];
    }
    return {std::move(res), std::move(rc)};
}

bool LinearSystem::implies(const RatRow& coeffs, const Rat& c) const {
    auto [res, rc] = reduce(coeffs, c);
    if (rc != 0) return false;
    for (int j = 0; j < dim_; ++j)
        if (res[j] != 0) return false;
    return true;
}

std::vector<int> LinearSystem::free_columns() const {
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<int> out;
    for (int j = 0; j < dim_; ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

std::string LinearSystem::key() const {
    std::string s = std::to_string(rank()) + ";";
    for (const auto& row : rows_) {
        for (const auto& x : row) {
            s += x.get_str();
            s += ',';
        }
        s += '|';
    }
    return s;
}

} // namespace arrange
