#pragma once

#include "linetan/binaryform.hpp"

#include <optional>
#include <vector>

namespace linetan {

/// Either an exact root (lo == hi) or an open interval (lo, hi) containing exactly
/// one root, with neither endpoint a root.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

struct RationalInterval {
    Rational lo;
    Rational hi;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

int sign_at(const UniPoly& q, const Rational& at);
/// Sturm-sequence isolation of the distinct real roots, sorted ascending.
/// Coefficients must be real. Throws std::domain_error on the zero polynomial.
std::vector<RootInterval> real_roots_isolate(const UniPoly& q);
/// Bisects until the width is at most max_width. q must have a simple root in iv.
RootInterval refine_root(const UniPoly& q, RootInterval iv, const Rational& max_width);
Rational simplest_between(Rational lo, Rational hi);
/// Distinct rational roots of a polynomial with rational coefficients, ascending.
std::vector<Rational> rational_roots(const UniPoly& q);
/// Interval enclosure of q over [lo, hi]; q must have rational coefficients.
RationalInterval enclose(const UniPoly& q, const Rational& lo, const Rational& hi);

struct ExactRoot {
    Scalar value;
    int multiplicity;
};

/// All complex roots with multiplicity, provided they lie in Q or one common
/// quadratic extension of it; std::nullopt otherwise.
std::optional<std::vector<ExactRoot>> roots_in_quadratic_field(const UniPoly& q);

struct ExactP1Root {
    P1Point point;
    int multiplicity;
};

/// Roots of a nonzero binary form, including [1,0]; same field restriction as above.
std::optional<std::vector<ExactP1Root>> split_binary_form(const BinaryForm& f);

}  // namespace linetan
