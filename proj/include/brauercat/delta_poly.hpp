#pragma once

#include <vector>

#include "brauercat/rational.hpp"

namespace brauercat {

// Univariate polynomial in the loop parameter delta, with exact rational
// coefficients. Dense ascending-power storage, trailing zeros trimmed;
// the zero polynomial is the empty list.
class DeltaPolynomial {
public:
    DeltaPolynomial() = default;
    explicit DeltaPolynomial(Rational constant);
    explicit DeltaPolynomial(std::vector<Rational> coeffs);  // trims

    static DeltaPolynomial delta();  // the monomial d
    static DeltaPolynomial monomial(int power, Rational coeff = Rational(1));

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational leading() const;
    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const;  // value when is_constant()

    DeltaPolynomial operator+(const DeltaPolynomial&) const;
    DeltaPolynomial operator-(const DeltaPolynomial&) const;
    DeltaPolynomial operator*(const DeltaPolynomial&) const;
    DeltaPolynomial operator-() const;
    DeltaPolynomial& operator+=(const DeltaPolynomial& o) { return *this = *this + o; }
    DeltaPolynomial& operator*=(const DeltaPolynomial& o) { return *this = *this * o; }
    bool operator==(const DeltaPolynomial&) const = default;

    Rational evaluate(const Rational& at) const;  // Horner
    DeltaPolynomial monic() const;

    std::string str() const;  // e.g. "d^2 - d - 2"

private:
    std::vector<Rational> c_;
    void trim();
};

DeltaPolynomial falling_factorial(int k);     // d(d-1)...(d-(k-1)); 1 for k=0
DeltaPolynomial f_m_polynomial(int m);        // (d-(m-1))...(d-1) - (m-1)!, m >= 2
DeltaPolynomial poly_gcd(DeltaPolynomial a, DeltaPolynomial b);  // monic gcd

}  // namespace brauercat
