#pragma once

#include <map>
#include <optional>

#include "brauercat/brauer.hpp"
#include "brauercat/rational.hpp"

namespace brauercat {

// A diagram of the enhanced category: an optional single antisymmetric
// m-valent vertex (its legs are boundary points, stored strictly increasing,
// any reordering sign absorbed into the coefficient) plus a perfect matching
// on the remaining boundary points.
struct EnhancedDiagram {
    int source = 0;
    int target = 0;
    std::vector<int> delta_legs;  // empty, or m strictly increasing points
    std::vector<std::pair<int, int>> pairs;

    bool has_delta() const { return !delta_legs.empty(); }
    bool operator==(const EnhancedDiagram&) const = default;
};

// Canonical term order: pure Brauer terms first, then single-vertex terms;
// within each class lexicographic on (delta_legs, pairs).
struct EnhancedDiagramLess {
    bool operator()(const EnhancedDiagram& a, const EnhancedDiagram& b) const {
        if (a.has_delta() != b.has_delta()) return !a.has_delta();
        if (a.delta_legs != b.delta_legs) return a.delta_legs < b.delta_legs;
        return a.pairs < b.pairs;
    }
};

EnhancedDiagram make_enhanced_diagram(int source, int target, std::vector<int> legs,
                                      std::vector<std::pair<int, int>> pairs);

// A morphism of the enhanced category at a fixed dimension m (the loop
// parameter is specialized to m on construction; there is no generic form).
class EnhancedMorphism {
public:
    EnhancedMorphism(int m, int source, int target);

    int m() const { return m_; }
    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<EnhancedDiagram, Rational, EnhancedDiagramLess>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const EnhancedDiagram& d, const Rational& coeff);

    EnhancedMorphism operator+(const EnhancedMorphism&) const;
    EnhancedMorphism operator-(const EnhancedMorphism&) const;
    EnhancedMorphism scaled(const Rational&) const;
    bool operator==(const EnhancedMorphism&) const = default;

private:
    int m_;
    int source_;
    int target_;
    std::map<EnhancedDiagram, Rational, EnhancedDiagramLess> terms_;
};

// The m-valent generator: the 0->m diagram with legs (0,...,m-1).
EnhancedMorphism delta_generator(int m);

// Specializes the loop parameter to m and reinterprets each diagram.
EnhancedMorphism from_brauer(const BrauerMorphism& f, int m);

EnhancedMorphism compose(const EnhancedMorphism& f, const EnhancedMorphism& g);
EnhancedMorphism tensor(const EnhancedMorphism& f, const EnhancedMorphism& g);
EnhancedMorphism dual(const EnhancedMorphism& f);
EnhancedMorphism rotate_up(const EnhancedMorphism& f, int q = 1);
EnhancedMorphism rotate_down(const EnhancedMorphism& f, int q = 1);

// Re-runs every term through the rewrite pipeline. Canonical forms are
// fixed points, so this is idempotent.
EnhancedMorphism normalize(const EnhancedMorphism& f);

// The coefficient of the empty diagram of a 0->0 morphism.
Rational closed_scalar(const EnhancedMorphism& f);

// Checks the four families of defining relations inside the rewrite engine.
Report verify_defining_relations(int m);

// Sigma_{m+1} = 0 via the tensor image and via Gram pairings against the
// full spanning set; Sigma_m != 0 by the same pairing test.
Report verify_sigma_vanishing(int m);

// The two scalar constraints on the loop parameter and their common root.
Report delta_constraint_check(int m);

}  // namespace brauercat
