#pragma once

#include "brauercat/oracle.hpp"
#include "brauercat/tensor.hpp"

namespace brauercat {

// The canonical spanning set of the s -> t Hom space: every perfect
// matching on s+t points (when s+t is even), then every single-vertex
// diagram (when s+t >= m with matching parity), in lexicographic order.
std::vector<EnhancedDiagram> spanning_set(int m, int s, int t);

// Closed-diagram pairing: rotate both arguments to 0 -> s+t, close
// dual(y) . x and read off the scalar. Sound for the tensor pairing.
Rational pairing(const EnhancedMorphism& x, const EnhancedMorphism& y);

struct GramMatrix {
    int m = 0, s = 0, t = 0;
    std::vector<EnhancedDiagram> basis;
    Mat entries;
};

GramMatrix gram_matrix(int m, int s, int t);

enum class DimRoute { Gram, Functor, Formula };

// Hom-space dimension. Gram: rank of the pairing matrix. Functor: rank of
// the evaluated spanning set. Formula: the closed-form count
// C(r,m) d(r-m) + d(r) with r = s+t (d table supplied by the oracle).
long dim_hom(int m, int s, int t, DimRoute route,
             const std::vector<long>* dtab = nullptr);

// Basis of the Gram nullspace as morphisms; checks that every returned
// combination evaluates to zero and that Gram and functor ranks agree.
std::vector<EnhancedMorphism> sft_kernel(int m, int s, int t);

struct DimensionRow {
    int m = 0, s = 0, t = 0;
    long gram = 0, functor = 0, formula = 0;
    bool agree = false;
};

std::vector<DimensionRow> dimension_report(int m, int r_max);
std::string dimension_report_csv(const std::vector<DimensionRow>& rows);

// wraps an EnhancedDiagram as a single-term morphism
EnhancedMorphism diagram_morphism(int m, const EnhancedDiagram& d);

}  // namespace brauercat
