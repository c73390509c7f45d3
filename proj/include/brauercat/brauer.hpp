#pragma once

#include <map>

#include "brauercat/config.hpp"
#include "brauercat/delta_poly.hpp"
#include "brauercat/diagram.hpp"
#include "brauercat/report.hpp"

namespace brauercat {

enum class Gen { I, U, A, X };

// A formal linear combination of Brauer diagrams with polynomial
// coefficients in the generic loop parameter. Like terms are collected
// eagerly; equality of morphisms is equality of term maps.
class BrauerMorphism {
public:
    BrauerMorphism(int source, int target) : source_(source), target_(target) {}
    static BrauerMorphism from_diagram(Diagram d,
                                       DeltaPolynomial coeff = DeltaPolynomial(Rational(1)));

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<Diagram, DeltaPolynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Diagram& d, const DeltaPolynomial& coeff);

    BrauerMorphism operator+(const BrauerMorphism&) const;
    BrauerMorphism operator-(const BrauerMorphism&) const;
    BrauerMorphism scaled(const DeltaPolynomial&) const;
    bool operator==(const BrauerMorphism&) const = default;

private:
    int source_;
    int target_;
    std::map<Diagram, DeltaPolynomial> terms_;
};

BrauerMorphism generator(Gen kind);
BrauerMorphism identity_morphism(int r);

// g after f: f: i->j, g: j->k, result i->k. Closed loops formed in the
// concatenation each contribute a factor of the loop parameter.
BrauerMorphism compose(const BrauerMorphism& f, const BrauerMorphism& g);

// Horizontal juxtaposition, f to the left of g.
BrauerMorphism tensor(const BrauerMorphism& f, const BrauerMorphism& g);

// Reflection in a horizontal line; involutive.
BrauerMorphism dual(const BrauerMorphism& f);

// Diagram matching bottom point p to top point images[p]. No sign.
BrauerMorphism permutation_morphism(const std::vector<int>& images);

// Signed sum over all r! permutation diagrams.
BrauerMorphism antisymmetrizer(int r, int cap = kAntisymmetrizerCap);

// Bends the rightmost q bottom (resp. top) points to the other boundary
// using cups/caps only; the two maps are mutually inverse.
BrauerMorphism rotate_up(const BrauerMorphism& f, int q = 1);
BrauerMorphism rotate_down(const BrauerMorphism& f, int q = 1);

// Full closure (categorical trace) of an r->r morphism.
DeltaPolynomial closure(const BrauerMorphism& f);

// Closed-diagram pairing of two 0->r morphisms, as a polynomial in the
// loop parameter: coefficient of the empty diagram in dual(y) . x.
DeltaPolynomial pairing_generic(const BrauerMorphism& x, const BrauerMorphism& y);

// Checks both antisymmetrizer reduction identities at the given rank,
// symbolically over the generic loop parameter.
Report verify_reduction_lemma(int r);

}  // namespace brauercat
