#pragma once

#include <vector>

#include "brauercat/rational.hpp"

namespace brauercat {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form with first-nonzero pivoting (deterministic).
// Returns the rank; zero rows are moved to the bottom and dropped.
std::size_t rref_in_place(Mat& m);

std::size_t rank_of(Mat m);

// Basis of { x : m x = 0 } for an n_cols-wide matrix, one vector per free
// column in increasing column order (canonical).
Mat nullspace(Mat m, std::size_t n_cols);

// Row spaces compared via their RREFs.
bool same_row_space(Mat a, Mat b);

// True if v lies in the row space of the (already arbitrary) matrix m.
bool in_row_space(Mat m, const Vec& v);

Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);

// Incremental row reduction: feed rows one at a time, keeping only an RREF.
// Used where materializing the full matrix would be wasteful.
class RowReducer {
public:
    explicit RowReducer(std::size_t n_cols) : n_cols_(n_cols) {}
    // Reduces v against the current rows; absorbs it if independent.
    // Returns true when the row added to the rank.
    bool add(Vec v);
    std::size_t rank() const { return rows_.size(); }
    const Mat& rows() const { return rows_; }
    Mat take_rows() { return std::move(rows_); }
    // Nullspace of everything fed so far (same solution set as the RREF).
    Mat nullspace_basis() const;

private:
    std::size_t n_cols_;
    Mat rows_;                  // in echelon order
    std::vector<std::size_t> pivots_;
};

}  // namespace brauercat
