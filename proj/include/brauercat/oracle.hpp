#pragma once

#include "brauercat/linalg.hpp"
#include "brauercat/report.hpp"
#include "brauercat/tensor.hpp"

namespace brauercat {

// One generator action on (Q^m)^(x r), stored sparse: entries (row, col, val).
struct SparseAction {
    long dim = 0;
    std::vector<std::tuple<long, long, int>> entries;

    Mat to_dense() const;
    // accumulate out += val * x[col] per entry, row-indexed
    void apply(const Vec& x, Vec& out) const;
};

// Derivation actions of the standard antisymmetric generators E_ab - E_ba
// (a < b, lexicographic) on the r-fold tensor power.
std::vector<SparseAction> so_action_matrices(int m, int r);

// Joint kernel of all generator actions, split into the +1 / -1 eigenspaces
// of the reflection negating the first coordinate. Bases are rows in RREF.
struct InvariantSpace {
    int m = 0;
    int r = 0;
    Mat basis;        // full joint kernel
    Mat plus_basis;   // fixed by the full isometry group
    Mat minus_basis;  // determinant-twisted part
    std::size_t dim_plus = 0;
    std::size_t dim_minus = 0;
};

InvariantSpace invariant_space(int m, int r);

// d[r] = dimension of the plus part at rank r, r = 0..r_max.
std::vector<long> d_table(int m, int r_max);

// convention: 0 for negative or out-of-range arguments
long d_of(const std::vector<long>& table, int r);

std::string d_table_csv(const std::vector<long>& table);

// The determinant-twisted space equals the symmetrized span of
// (alternating tensor) x (cup powers); the plus/minus split is exact.
Report verify_thm_so_inv(int m, int r);

// For even r the plus part equals the span of all pair-partition
// contraction tensors.
Report verify_fft_span(int m, int r);

}  // namespace brauercat
