#include "linetan/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace linetan {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer integer_sqrt_exact(const Integer& n, bool& ok)
{
    ok = false;
    if (n < 0) return 0;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    ok = (r * r == n);
    return r;
}

// sqrt(q) = coef * sqrt(d) with d a square-free-ish integer (small square factors removed).
void split_radical(const Rational& q, Rational& coef, Integer& d)
{
    Integer n = q.get_num(), m = q.get_den();
    d = n * m;
    coef = Rational(1, 1) / Rational(m);
    Integer mult = 1;
    for (unsigned long p = 2; p < 2000; ++p) {
        Integer sq = Integer(p) * p;
        if (sq > abs(d)) break;
        while (d % sq == 0) {
            d /= sq;
            mult *= p;
        }
    }
    bool ok = false;
    Integer root = integer_sqrt_exact(abs(d), ok);
    if (ok) {
        mult *= root;
        d = sgn(d);
    }
    coef *= Rational(mult);
    coef.canonicalize();
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (s.empty()) throw bad();
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        Integer d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string(num), 10), d);
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            auto ex = s.substr(e + 1);
            bool eneg = false;
            if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
                eneg = ex.front() == '-';
                ex.remove_prefix(1);
            }
            if (!all_digits(ex) || ex.size() > 6) throw bad();
            exponent = std::stol(std::string(ex));
            if (eneg) exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string digits;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
            if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
                throw bad();
            digits = std::string(ip) + std::string(fp);
            exponent -= static_cast<long>(fp.size());
        } else {
            if (!all_digits(s)) throw bad();
            digits = std::string(s);
        }
        value = Rational(Integer(digits, 10));
        Integer ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
        if (exponent >= 0)
            value *= ten_pow;
        else
            value /= ten_pow;
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::optional<Rational> rational_sqrt(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    if (q < 0) return std::nullopt;
    bool ok1 = false, ok2 = false;
    Integer a = integer_sqrt_exact(q.get_num(), ok1);
    Integer b = integer_sqrt_exact(q.get_den(), ok2);
    if (!ok1 || !ok2) return std::nullopt;
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Scalar::Scalar(Rational x, Rational y, const Rational& d) : x_(std::move(x)), y_(std::move(y))
{
    x_.canonicalize();
    y_.canonicalize();
    if (y_ == 0 || d == 0) {
        y_ = 0;
        return;
    }
    Rational coef;
    split_radical(d, coef, d_);
    y_ *= coef;
    if (d_ == 1) {
        x_ += y_;
        y_ = 0;
    }
    tidy();
}

Scalar Scalar::sqrt_of(const Rational& q)
{
    if (auto r = rational_sqrt(q)) return Scalar(*r);
    return Scalar(Rational(0), Rational(1), q);
}

void Scalar::tidy()
{
    if (y_ == 0) d_ = 0;
}

Scalar Scalar::rescaled_to(const Integer& d) const
{
    if (y_ == 0 || d_ == d) return *this;
    auto k = rational_sqrt(Rational(d_, d));
    if (!k)
        throw std::domain_error("incompatible extensions: sqrt(" + d_.get_str() + ") and sqrt(" + d.get_str() + ")");
    Scalar r = *this;
    r.y_ *= *k;
    r.d_ = d;
    return r;
}

void Scalar::align(Scalar& other)
{
    if (y_ == 0 || other.y_ == 0 || d_ == other.d_) return;
    other = other.rescaled_to(d_);
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.x_ = -r.x_;
    r.y_ = -r.y_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    Scalar b = o;
    align(b);
    x_ += b.x_;
    y_ += b.y_;
    if (d_ == 0) d_ = b.d_;
    tidy();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    Scalar b = o;
    align(b);
    Integer d = d_ != 0 ? d_ : b.d_;
    Rational x = x_ * b.x_;
    if (y_ != 0 && b.y_ != 0) x += Rational(d) * y_ * b.y_;
    Rational y = x_ * b.y_ + y_ * b.x_;
    x_ = x;
    y_ = y;
    d_ = d;
    tidy();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    Rational n = o.norm();
    *this *= o.conjugate();
    x_ /= n;
    y_ /= n;
    tidy();
    return *this;
}

int Scalar::sign() const
{
    if (y_ == 0) return sgn(x_);
    if (d_ < 0) throw std::domain_error("sign of a non-real value " + str());
    int sx = sgn(x_), sy = sgn(y_);
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    Rational lhs = x_ * x_, rhs = Rational(d_) * y_ * y_;
    return lhs > rhs ? sx : sy;
}

Scalar Scalar::conjugate() const
{
    Scalar r = *this;
    r.y_ = -r.y_;
    return r;
}

Rational Scalar::norm() const
{
    return x_ * x_ - Rational(d_) * y_ * y_;
}

Rational Scalar::to_rational() const
{
    if (y_ != 0) throw std::domain_error("value is irrational: " + str());
    return x_;
}

std::optional<Scalar> Scalar::sqrt() const
{
    if (y_ == 0) {
        if (auto r = rational_sqrt(x_)) return Scalar(*r);
        return std::nullopt;
    }
    auto n = rational_sqrt(norm());
    if (!n) return std::nullopt;
    for (const Rational& cand : {Rational((x_ + *n) / 2), Rational((x_ - *n) / 2)}) {
        auto a = rational_sqrt(cand);
        if (!a || *a == 0) continue;
        Scalar r;
        r.x_ = *a;
        r.y_ = y_ / (2 * *a);
        r.d_ = d_;
        r.tidy();
        return r;
    }
    return std::nullopt;
}

double Scalar::to_double() const
{
    if (y_ == 0) return x_.get_d();
    if (d_ < 0) throw std::domain_error("non-real value has no double: " + str());
    return x_.get_d() + y_.get_d() * std::sqrt(d_.get_d());
}

std::string Scalar::str() const
{
    if (y_ == 0) return x_.get_str();
    std::ostringstream os;
    std::string rad = "sqrt(" + d_.get_str() + ")";
    Rational ay = ::abs(y_);
    std::string ys = ay == 1 ? rad : ay.get_str() + "*" + rad;
    if (x_ == 0)
        os << (y_ < 0 ? "-" : "") << ys;
    else
        os << x_.get_str() << (y_ < 0 ? " - " : " + ") << ys;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

bool lex_less(const Scalar& a, const Scalar& b)
{
    if (a.rational_part() != b.rational_part()) return a.rational_part() < b.rational_part();
    Scalar bb = b;
    Scalar diff = a - bb;  // aligns radicands
    return diff.radical_part() < 0;
}

Scalar abs(const Scalar& s)
{
    return s.sign() < 0 ? -s : s;
}

Scalar pow(const Scalar& s, unsigned n)
{
    Scalar r(1), b = s;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::vector<Rational> primitive_integer(std::vector<Rational> v)
{
    Integer l = 1;
    for (auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Integer g = 0;
    for (auto& q : v) {
        q *= l;
        q.canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (g == 0) return v;
    int s = 0;
    for (auto& q : v)
        if (q != 0) {
            s = sgn(q);
            break;
        }
    for (auto& q : v) {
        q /= Rational(g * s);
        q.canonicalize();
    }
    return v;
}

}  // namespace linetan
