#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace linetan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or "0.125". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact element x + y*sqrt(d) of Q or of a quadratic extension Q(sqrt d).
///
/// Every value carries its own radicand; values from Q(sqrt d1) and Q(sqrt d2)
/// combine only when d1/d2 is a rational square, otherwise std::domain_error.
/// d may be negative (sqrt(-3) etc.); sign() is only defined for real values.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : x_(v) {}
    Scalar(long v) : x_(v) {}
    Scalar(const Rational& v) : x_(v) { x_.canonicalize(); }
    Scalar(const Integer& v) : x_(v) {}
    Scalar(Rational x, Rational y, const Rational& d);

    /// sqrt(q): rational when q is a square, otherwise the generator of Q(sqrt q).
    static Scalar sqrt_of(const Rational& q);
    static Scalar parse(std::string_view text) { return Scalar(parse_rational(text)); }

    const Rational& rational_part() const { return x_; }
    const Rational& radical_part() const { return y_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_real() const { return y_ == 0 || d_ > 0; }
    int sign() const;
    Scalar conjugate() const;
    Rational norm() const;
    Rational to_rational() const;
    /// Square root inside the value's own field, if it exists.
    std::optional<Scalar> sqrt() const;
    double to_double() const;
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

private:
    Scalar rescaled_to(const Integer& d) const;
    void align(Scalar& other);
    void tidy();

    Rational x_;
    Rational y_;
    Integer d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Ordering usable on non-real values: by rational part, then radical coefficient.
bool lex_less(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& s);
Scalar pow(const Scalar& s, unsigned n);

/// Scales a vector of rationals to primitive integers with first nonzero entry positive.
std::vector<Rational> primitive_integer(std::vector<Rational> v);

}  // namespace linetan
