#pragma once

#include "linetan/unipoly.hpp"

#include <array>
#include <string>

namespace linetan {

/// Point [first, second] of P^1.
struct P1Point {
    Scalar first;
    Scalar second;

    bool is_valid() const { return !first.is_zero() || !second.is_zero(); }
    bool operator==(const P1Point& o) const { return first * o.second == second * o.first; }
    bool operator!=(const P1Point& o) const { return !(*this == o); }
    /// Rational points become primitive integer pairs; others are divided by the first nonzero entry.
    P1Point normalized() const;
    std::string str() const;
};

/// Invertible 2x2 map acting on column vectors [w, x].
class P1Map {
public:
    P1Map() : m_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)} {}
    P1Map(Scalar m00, Scalar m01, Scalar m10, Scalar m11);

    /// The map with [0,1] -> a1, [1,0] -> a2, [1,1] -> a3.
    static P1Map from_standard(const P1Point& a1, const P1Point& a2, const P1Point& a3);
    /// The map with src[i] -> dst[i], i = 0..2.
    static P1Map through(const std::array<P1Point, 3>& src, const std::array<P1Point, 3>& dst);

    const Scalar& operator()(int i, int j) const { return m_[2 * i + j]; }
    P1Point apply(const P1Point& p) const;
    P1Map inverse() const;
    Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    P1Map operator*(const P1Map& o) const;

private:
    std::array<Scalar, 4> m_;
};

/// Homogeneous binary form of a declared degree. poly.coeff(i) is the coefficient
/// of w^i x^(degree-i), i.e. the form dehomogenized at x = 1.
struct BinaryForm {
    UniPoly poly;
    int degree = 0;

    static BinaryForm from_coeffs(std::vector<Scalar> c);
    /// Linear form vanishing at p.
    static BinaryForm vanishing_at(const P1Point& p);

    bool is_zero() const { return poly.is_zero(); }
    Scalar coeff(int i) const { return poly.coeff(i); }
    Scalar operator()(const P1Point& p) const;
    /// Multiplicity of the root [1,0].
    int infinity_multiplicity() const { return is_zero() ? degree : degree - poly.degree(); }
    /// Number of distinct roots over the algebraic closure.
    int distinct_roots() const;
    BinaryForm substituted(const P1Map& m) const;
    std::string str(const std::string& w = "w", const std::string& x = "x") const;

    BinaryForm operator*(const BinaryForm& o) const { return {poly * o.poly, degree + o.degree}; }
    BinaryForm operator*(const Scalar& s) const { return {poly * s, degree}; }
    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const { return *this + o * Scalar(-1); }
};

/// Homogeneous gcd, monic in the dehomogenized sense; gcd of zero forms is zero of degree 0.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b);
/// Discriminant b^2 - 4ac of a binary quadratic.
Scalar quadratic_discriminant(const BinaryForm& q);

}  // namespace linetan
