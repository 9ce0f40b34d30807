#pragma once

#include "linetan/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace linetan {

/// Dense univariate polynomial over Scalar; coefficient i belongs to t^i.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}

    static UniPoly constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }
    static UniPoly monomial(const Scalar& c, int degree);
    static UniPoly variable() { return monomial(Scalar(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar(); }
    Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }
    const std::vector<Scalar>& coefficients() const { return c_; }
    bool has_rational_coefficients() const;

    Scalar operator()(const Scalar& at) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// Multiplies through so that rational coefficients become primitive integers.
    UniPoly primitive() const;
    std::string str(const std::string& var = "t") const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);
/// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);
/// Yun's algorithm: p = lc * prod f_k^k with squarefree, pairwise coprime f_k.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned n);
/// Returns r with r*r == q, if such a polynomial exists over the coefficients' field.
std::optional<UniPoly> square_root_of_poly(const UniPoly& q);
/// Determinant of a square matrix of polynomials (fraction-free Bareiss elimination).
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace linetan
