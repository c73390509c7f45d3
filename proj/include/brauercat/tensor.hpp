#pragma once

#include "brauercat/enhanced.hpp"
#include "brauercat/linalg.hpp"

namespace brauercat {

// A dense exact-rational linear map (Q^m)^(x s) -> (Q^m)^(x t). Entries are
// indexed by one multi-index per boundary point, bottoms first, each digit
// in 0..m-1, point 0 most significant.
class Tensor {
public:
    Tensor(int m, int source, int target);  // zero map; guarded

    int m() const { return m_; }
    int source() const { return source_; }
    int target() const { return target_; }
    int points() const { return source_ + target_; }
    std::size_t size() const { return entries_.size(); }

    const Rational& operator[](std::size_t flat) const { return entries_[flat]; }
    Rational& operator[](std::size_t flat) { return entries_[flat]; }
    const Vec& entries() const { return entries_; }

    bool is_zero() const;
    bool operator==(const Tensor&) const = default;

    Tensor operator+(const Tensor&) const;
    Tensor operator-(const Tensor&) const;
    Tensor scaled(const Rational&) const;

private:
    int m_;
    int source_;
    int target_;
    Vec entries_;
};

Tensor eval_generator(Gen kind, int m);

// The normalized top alternating tensor: entry sgn(i)/m! on permutation
// multi-indices, zero elsewhere. Harmonic, and pairs with itself to 1/m!.
Tensor lambda_tensor(int m);

// The image of the m-valent generator under evaluation: m! times
// lambda_tensor, i.e. plain Levi-Civita entries. This is the scaling that
// turns all four vertex relations into exact tensor identities.
Tensor delta_vertex_tensor(int m);

// Linear extension of diagram evaluation: strands contract indices along
// pairs, vertex legs contract the Levi-Civita tensor.
Tensor eval_morphism(const BrauerMorphism& f, int m);
Tensor eval_morphism(const EnhancedMorphism& f);

Tensor compose(const Tensor& f, const Tensor& g);         // g after f
Tensor tensor_product(const Tensor& f, const Tensor& g);
Tensor transpose_tensor(const Tensor& f);                 // adjoint under the dot form
Tensor apply(const Tensor& f, const Tensor& x);           // x: 0 -> source(f)

// Orthonormal-basis pairing of two 0->r tensors.
Rational bilinear_form(const Tensor& x, const Tensor& y);

// True iff every pairwise slot contraction of a 0->r tensor vanishes.
bool is_harmonic(const Tensor& x);

// Orthogonal projection of the first m slots onto the line of the
// alternating tensor, identity on the rest. Idempotent.
Tensor pi_lambda(const Tensor& x);

// Slot permutation action on a 0->r tensor: slot k of the result reads
// slot sigma[k] of the input.
Tensor slot_permute(const Tensor& x, const std::vector<int>& sigma);

// All slot-permutation images of a 0->r seed, duplicates removed,
// first-seen order over lexicographic permutations.
std::vector<Tensor> sym_span(const Tensor& seed);

// The four generator relation families as exact tensor identities.
Report verify_relations_under_eval(int m);

// Products of 3-4-5 style rational rotations; always determinant 1.
Mat rational_rotation(int m, unsigned seed);

Tensor apply_group_element(const Mat& g, const Tensor& x);  // g^(x r) . x

}  // namespace brauercat
