#pragma once

#include "linetan/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace linetan {

enum class Var { x, z };

/// Sparse polynomial in two variables x and z; key (i, j) is the monomial x^i z^j.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly constant(const Scalar& c);
    static BiPoly var(Var v);
    /// The polynomial sum_k coeffs[k](other) * v^k.
    static BiPoly from_coefficients(Var v, const std::vector<UniPoly>& coeffs);
    /// Embeds a univariate polynomial in the given variable.
    static BiPoly from_uni(Var v, const UniPoly& p);

    const std::map<Exponent, Scalar>& terms() const { return t_; }
    Scalar coeff(int i, int j) const;
    void add_term(int i, int j, const Scalar& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}); }
    int degree_in(Var v) const;
    int total_degree() const;
    /// Leading monomial in graded-lex order (total degree, then x exponent).
    Exponent leading_exponent() const;
    Scalar leading_coefficient() const;

    Scalar eval(const Scalar& x, const Scalar& z) const;
    /// Substitutes v = value; result is a polynomial in the other variable.
    UniPoly specialize(Var v, const Scalar& value) const;
    /// Coefficient k is the coefficient of v^k, as a polynomial in the other variable.
    std::vector<UniPoly> coefficients_in(Var v) const;
    BiPoly derivative(Var v) const;
    /// Scaled so the graded-lex leading coefficient is 1.
    BiPoly normalized() const;
    std::string str() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Scalar& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Scalar& s) { return a *= s; }
    friend BiPoly operator*(const Scalar& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    std::map<Exponent, Scalar> t_;
};

/// Primitive gcd, normalized to graded-lex leading coefficient 1.
BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g);
/// f / g when g divides f exactly.
std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g);
/// Sylvester resultant eliminating v; a polynomial in the other variable.
UniPoly resultant_wrt(const BiPoly& f, const BiPoly& g, Var v);
/// True when f and g are nonzero multiples of each other.
bool proportional(const BiPoly& f, const BiPoly& g);

}  // namespace linetan
