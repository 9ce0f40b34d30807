#pragma once

#include "linetan/biform.hpp"
#include "linetan/roots.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace linetan {

struct CurveFactor {
    int deg_wx = 0;
    int deg_yz = 0;
    int multiplicity = 1;
    BiHomForm form;
    /// Irreducible components over C this entry stands for: 2 when a conjugate
    /// pair could not be split inside a single quadratic extension.
    int components = 1;
    /// The factor is real up to scale and has a one-dimensional real locus.
    bool real = false;
};

/// One of the nine classes of (2,2)-curves, together with a factorization.
struct CurveClass {
    int tag = 0;
    /// The factor list matches the class description only after exchanging the two P^1 factors.
    bool transposed = false;
    std::vector<CurveFactor> factors;

    std::string description() const;
};

bool is_smooth(const BiForm22& F);
CurveClass classify(const BiForm22& F);

struct RamificationPoint {
    /// Exact coordinates when they lie in Q or in one quadratic extension.
    std::optional<P1Point> point;
    std::optional<P1Point> double_point;
    /// Otherwise: a squarefree factor of the discriminant (in w/x) having this root,
    /// polynomials Y, Z with double point [Y(t), Z(t)], and a numerical value of t.
    UniPoly defining_poly;
    UniPoly double_y, double_z;
    std::optional<RootInterval> real_interval;
    std::complex<double> approx;
    bool at_infinity = false;
};

/// The four ramification points of a smooth curve with their double points,
/// in the canonical order (see normal_form).
std::vector<RamificationPoint> ramification(const BiForm22& F);

/// [det(a1,a4)/det(a1,a3), det(a2,a4)/det(a2,a3)]; its value is second/first.
P1Point cross_ratio(const P1Point& a1, const P1Point& a2, const P1Point& a3, const P1Point& a4);

struct NormalForm {
    enum class Kind { asymmetric, symmetric, unresolved };
    Kind kind = Kind::unresolved;
    Scalar s, t;
    /// Symmetric branch: s^2 and the sign of the z^2 term.
    Scalar s_squared;
    int sign = 0;
    bool s_imaginary = false;
    /// G(u, v) = F(m1 u, m2 v) is proportional to the normal form.
    std::optional<P1Map> m1, m2;
    Scalar gamma1, gamma2;
    /// Distinct (s, t) over all 24 orderings of the ramification points.
    std::vector<std::pair<Scalar, Scalar>> orbit;
    std::string reason;

    BiForm22 form() const;
};

/// Ramification points are ordered with any of [0,1], [1,0], [1,1] first, in that
/// order, then the rest by ascending w/x (rational before irrational).
NormalForm normal_form(const BiForm22& F);
std::pair<Scalar, Scalar> st_from_cross_ratios(const Scalar& gamma1, const Scalar& gamma2);

std::vector<std::complex<double>> approximate_roots(const UniPoly& p);
std::complex<double> to_complex(const Scalar& s);

}  // namespace linetan
