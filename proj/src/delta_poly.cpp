#include "brauercat/delta_poly.hpp"

#include <sstream>

#include "brauercat/errors.hpp"

namespace brauercat {

DeltaPolynomial::DeltaPolynomial(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

DeltaPolynomial::DeltaPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void DeltaPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

DeltaPolynomial DeltaPolynomial::delta() { return monomial(1); }

DeltaPolynomial DeltaPolynomial::monomial(int power, Rational coeff) {
    if (coeff == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
    c.back() = std::move(coeff);
    return DeltaPolynomial(std::move(c));
}

Rational DeltaPolynomial::leading() const {
    return c_.empty() ? Rational(0) : c_.back();
}

Rational DeltaPolynomial::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return c_.empty() ? Rational(0) : c_.front();
}

DeltaPolynomial DeltaPolynomial::operator+(const DeltaPolynomial& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return DeltaPolynomial(std::move(out));
}

DeltaPolynomial DeltaPolynomial::operator-(const DeltaPolynomial& o) const {
    return *this + (-o);
}

DeltaPolynomial DeltaPolynomial::operator-() const {
    std::vector<Rational> out = c_;
    for (auto& x : out) x = -x;
    return DeltaPolynomial(std::move(out));
}

DeltaPolynomial DeltaPolynomial::operator*(const DeltaPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return DeltaPolynomial(std::move(out));
}

Rational DeltaPolynomial::evaluate(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

DeltaPolynomial DeltaPolynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> out = c_;
    const Rational lead = c_.back();
    for (auto& x : out) x /= lead;
    return DeltaPolynomial(std::move(out));
}

std::string DeltaPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Rational& a = c_[static_cast<std::size_t>(p)];
        if (a == 0) continue;
        const bool neg = a < 0;
        const Rational mag = neg ? Rational(-a) : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || p == 0) os << to_string(mag);
        if (p >= 1) {
            if (mag != 1) os << "*";
            os << "d";
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

DeltaPolynomial falling_factorial(int k) {
    if (k < 0) throw Error("falling_factorial needs k >= 0");
    DeltaPolynomial out{Rational(1)};
    for (int i = 0; i < k; ++i)
        out *= DeltaPolynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    return out;
}

DeltaPolynomial f_m_polynomial(int m) {
    if (m < 2) throw Error("f_m_polynomial needs m >= 2");
    DeltaPolynomial prod{Rational(1)};
    for (int i = 1; i <= m - 1; ++i)
        prod *= DeltaPolynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    return prod - DeltaPolynomial(Rational(factorial(m - 1)));
}

namespace {

// remainder of a by monic b (degree(b) <= degree(a))
DeltaPolynomial poly_mod(DeltaPolynomial a, const DeltaPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        const Rational q = a.leading() / b.leading();
        a = a - DeltaPolynomial::monomial(shift, q) * b;
    }
    return a;
}

}  // namespace

DeltaPolynomial poly_gcd(DeltaPolynomial a, DeltaPolynomial b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        DeltaPolynomial r = poly_mod(a, b).monic();
        a = b;
        b = r;
    }
    return a;
}

}  // namespace brauercat
