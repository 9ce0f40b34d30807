#pragma once

#include "linetan/binaryform.hpp"
#include "linetan/bipoly.hpp"

#include <array>
#include <optional>
#include <string>

namespace linetan {

/// Bihomogeneous (2,2)-form: c(i,j) is the coefficient of w^i x^(2-i) y^j z^(2-j).
class BiForm22 {
public:
    using Grid = std::array<std::array<Scalar, 3>, 3>;

    BiForm22() = default;
    explicit BiForm22(const Grid& c) : c_(c) {}
    /// From a polynomial in (x, z) obtained by setting w = y = 1.
    static BiForm22 from_bipoly(const BiPoly& p);

    Scalar& operator()(int i, int j) { return c_[i][j]; }
    const Scalar& operator()(int i, int j) const { return c_[i][j]; }
    const Grid& grid() const { return c_; }

    bool is_zero() const;
    BiPoly dehomogenized() const;
    Scalar eval(const P1Point& u, const P1Point& v) const;
    /// Coefficient of y^j z^(2-j), a binary quadratic in (w, x).
    BinaryForm column(int j) const;
    /// Coefficient of w^i x^(2-i), a binary quadratic in (y, z) indexed by the power of y.
    BinaryForm row(int i) const;
    /// G(u, v) = F(m1 u, m2 v).
    BiForm22 reparameterized(const P1Map& m1, const P1Map& m2) const;
    /// Exchanges the roles of the two P^1 factors.
    BiForm22 transposed() const;
    /// lambda with *this == lambda * o, if it exists and is nonzero.
    std::optional<Scalar> ratio_to(const BiForm22& o) const;
    bool projectively_equal(const BiForm22& o) const { return ratio_to(o).has_value(); }
    std::string str() const;

    BiForm22 operator+(const BiForm22& o) const;
    BiForm22 operator*(const Scalar& s) const;
    bool operator==(const BiForm22& o) const;

private:
    Grid c_{};
};

/// Discriminant in (y, z) of F viewed as a quadratic form: a binary quartic in (w, x).
BinaryForm discriminant_in_yz(const BiForm22& F);

/// s w^2z^2 + (1-s) wxz^2 - 2 wxyz + (1-t) wxy^2 + t x^2y^2.
BiForm22 asymmetric_normal_form(const Scalar& s, const Scalar& t);
/// (x^2 - w^2) y^2 + sign (x^2 - s_squared w^2) z^2.
BiForm22 symmetric_normal_form(const Scalar& s_squared, int sign);

/// Dehomogenizations of a binary form at first = 1, indexed by the power of the second variable.
UniPoly dehomogenize_second(const BinaryForm& f);
BinaryForm homogenize_second(const UniPoly& p, int degree);

/// Bihomogeneous form of bidegree (deg_wx, deg_yz), stored through its
/// dehomogenization at w = y = 1 (variables x and z).
struct BiHomForm {
    BiPoly dehom;
    int deg_wx = 0;
    int deg_yz = 0;

    static BiHomForm from(const BiForm22& F) { return {F.dehomogenized(), 2, 2}; }
    static BiHomForm from_wx(const BinaryForm& f);
    static BiHomForm from_yz(const BinaryForm& f);
    static BiHomForm constant(const Scalar& c) { return {BiPoly::constant(c), 0, 0}; }

    bool is_zero() const { return dehom.is_zero(); }
    bool is_constant() const { return deg_wx == 0 && deg_yz == 0; }
    int w_multiplicity() const { return deg_wx - dehom.degree_in(Var::x); }
    int y_multiplicity() const { return deg_yz - dehom.degree_in(Var::z); }
    Scalar coeff(int wpow, int ypow) const { return dehom.coeff(deg_wx - wpow, deg_yz - ypow); }
    Scalar eval(const P1Point& u, const P1Point& v) const;
    BiForm22 to_biform22() const;
    BiHomForm transposed() const;
    /// Largest factor depending only on (w, x), and on (y, z).
    BinaryForm pure_wx_part() const;
    BinaryForm pure_yz_part() const;
    /// Specialization at a point of the first factor: a binary form in (y, z).
    BinaryForm fiber_at_wx(const P1Point& u) const;
    BinaryForm fiber_at_yz(const P1Point& v) const;
    BiHomForm normalized() const { return {dehom.normalized(), deg_wx, deg_yz}; }
    std::string str() const;

    BiHomForm operator*(const BiHomForm& o) const { return {dehom * o.dehom, deg_wx + o.deg_wx, deg_yz + o.deg_yz}; }
};

BiHomForm gcd(const BiHomForm& a, const BiHomForm& b);
BiHomForm exact_div(const BiHomForm& a, const BiHomForm& b);

}  // namespace linetan
