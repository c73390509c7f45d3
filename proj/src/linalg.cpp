#include "brauercat/linalg.hpp"

#include <algorithm>

#include "brauercat/errors.hpp"

namespace brauercat {

bool RowReducer::add(Vec v) {
    if (v.size() != n_cols_) throw Error("row width mismatch");
    // eliminate against existing pivots
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& coef = v[pivots_[k]];
        if (coef == 0) continue;
        const Rational f = coef;  // pivot rows are normalized to 1
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < n_cols_ && v[p] == 0) ++p;
    if (p == n_cols_) return false;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    // back-substitute into earlier rows so the set stays fully reduced
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = rows_[k][p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (v[j] != 0) rows_[k][j] -= f * v[j];
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
}

Mat RowReducer::nullspace_basis() const {
    Mat basis;
    std::vector<bool> is_pivot(n_cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t free = 0; free < n_cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec x(n_cols_, Rational(0));
        x[free] = 1;
        for (std::size_t k = 0; k < rows_.size(); ++k)
            x[pivots_[k]] = -rows_[k][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rref_in_place(Mat& m) {
    if (m.empty()) return 0;
    const std::size_t n_cols = m[0].size();
    RowReducer red(n_cols);
    for (auto& row : m) red.add(std::move(row));
    m = red.take_rows();
    return m.size();
}

std::size_t rank_of(Mat m) { return rref_in_place(m); }

Mat nullspace(Mat m, std::size_t n_cols) {
    RowReducer red(n_cols);
    for (auto& row : m) red.add(std::move(row));
    return red.nullspace_basis();
}

bool same_row_space(Mat a, Mat b) {
    rref_in_place(a);
    rref_in_place(b);
    return a == b;
}

bool in_row_space(Mat m, const Vec& v) {
    const std::size_t r = rref_in_place(m);
    m.push_back(v);
    return rref_in_place(m) == r;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    Vec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (m[i][j] != 0 && x[j] != 0) out[i] += m[i][j] * x[j];
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    Mat out(a.size(), Vec(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace brauercat
