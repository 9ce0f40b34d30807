#pragma once

#include "linetan/envelope.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace linetan {

/// Quadric coordinates in the order a, b, c, d, e, f, g, h, k, l.
using QuadricCoords = std::array<Scalar, 10>;

struct FiberWitness {
    BiForm22 target;
    Quadric quadric;
    /// phi(quadric) == lambda * target.
    Scalar lambda;
};

std::optional<FiberWitness> fiber_membership(const LinePair& pair, const BiForm22& C, const Quadric& q);

/// Name of the first vanishing factor of s t (s-1) (t-1) (s-t), if any.
std::optional<std::string> excluded_factor(const Scalar& s, const Scalar& t);

/// Values of the eleven Groebner basis elements of the reference component at x.
std::vector<Scalar> f2_generator_values(const Scalar& s, const Scalar& t, const QuadricCoords& x);

/// The component after substituting l = -(r+1)k with r = branch * sqrt(s): seven
/// linear equations and e l - g^2, a conic in a plane of P^9.
struct ConicF2 {
    Scalar s, t;
    int branch = 1;
    Scalar root;
    std::vector<QuadricCoords> linear;

    /// Rational parameterization: e = m^2, g = m n, k = -n^2/(r+1), the rest from the linear equations.
    QuadricCoords point(const P1Point& mn) const;
    bool satisfies(const QuadricCoords& x) const;
    /// Coefficients of k and l in the branch equation (r+1) k + l = 0.
    std::pair<Scalar, Scalar> kl_line() const;
};

/// Throws GeometryError "extension required" when s has no square root in its field,
/// and names the violated factor when (s, t) is excluded.
ConicF2 conic_f2_build(const Scalar& s, const Scalar& t, int branch);

/// The explicit point p of the reference component (branch +1).
QuadricCoords explicit_point_p(const Scalar& s, const Scalar& t);
/// -4 s (sqrt s - 1)^2 (sqrt s + 1)^2.
Scalar explicit_p_coefficient(const Scalar& s);

int linear_rank(std::vector<QuadricCoords> rows);

struct ConicVerification {
    int samples = 0;
    int witnesses = 0;
    /// Parameters where phi vanishes (the conic meets E2 or E3 there).
    std::vector<P1Point> degenerate;
    /// Non-degenerate samples whose image is not proportional to C; must stay empty.
    std::vector<P1Point> failures;
    std::vector<Scalar> lambdas;

    bool verified() const { return failures.empty() && witnesses + static_cast<int>(degenerate.size()) == samples; }
};

/// Samples [1,0], [0,1], [1,1], [-1,1], [2,1], ... on the conic and checks each against C
/// for the canonical projective pair.
ConicVerification conic_sample_and_verify(const ConicF2& conic, const BiForm22& C, int n);

struct LinearKL {
    Scalar k, l;
};

struct KLQuadratic {
    /// Coefficients of k^2, kl, l^2.
    std::array<Scalar, 3> coeffs;
    Scalar discriminant;
    /// Positions among the six components (1-based) where this quadratic occurs.
    std::array<int, 2> components;
    /// lead * factors[0] * factors[1] when the square root of the discriminant is available.
    Scalar lead;
    std::vector<LinearKL> factors;
    /// Real parameters with positive discriminant: two real linear factors.
    bool real_factors = false;

    Scalar eval(const Scalar& k, const Scalar& l) const;
    std::string str() const;
};

struct KLTable {
    std::array<KLQuadratic, 3> rows;
    bool excluded = false;
    std::string excluded_reason;
};

KLTable kl_quadratic_table(const Scalar& s, const Scalar& t);

}  // namespace linetan
