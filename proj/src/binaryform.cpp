#include "linetan/binaryform.hpp"

#include <stdexcept>

namespace linetan {

P1Point P1Point::normalized() const
{
    if (!is_valid()) throw std::domain_error("zero vector is not a point of P^1");
    if (first.is_rational() && second.is_rational()) {
        auto v = primitive_integer({first.rational_part(), second.rational_part()});
        return {Scalar(v[0]), Scalar(v[1])};
    }
    Scalar lead = first.is_zero() ? second : first;
    return {first / lead, second / lead};
}

std::string P1Point::str() const
{
    P1Point n = normalized();
    return "[" + n.first.str() + ", " + n.second.str() + "]";
}

P1Map::P1Map(Scalar m00, Scalar m01, Scalar m10, Scalar m11) : m_{m00, m01, m10, m11}
{
    if (det().is_zero()) throw std::domain_error("singular map of P^1");
}

P1Map P1Map::from_standard(const P1Point& a1, const P1Point& a2, const P1Point& a3)
{
    // Solve l2 * a2 + l1 * a1 = a3.
    Scalar d = a2.first * a1.second - a1.first * a2.second;
    if (d.is_zero()) throw std::domain_error("points of P^1 coincide");
    Scalar l2 = (a3.first * a1.second - a1.first * a3.second) / d;
    Scalar l1 = (a2.first * a3.second - a3.first * a2.second) / d;
    if (l1.is_zero() || l2.is_zero()) throw std::domain_error("points of P^1 coincide");
    return P1Map(l2 * a2.first, l1 * a1.first, l2 * a2.second, l1 * a1.second);
}

P1Map P1Map::through(const std::array<P1Point, 3>& src, const std::array<P1Point, 3>& dst)
{
    return from_standard(dst[0], dst[1], dst[2]) * from_standard(src[0], src[1], src[2]).inverse();
}

P1Point P1Map::apply(const P1Point& p) const
{
    return {m_[0] * p.first + m_[1] * p.second, m_[2] * p.first + m_[3] * p.second};
}

P1Map P1Map::inverse() const
{
    Scalar d = det();
    return P1Map(m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d);
}

P1Map P1Map::operator*(const P1Map& o) const
{
    const auto& a = m_;
    return P1Map(a[0] * o.m_[0] + a[1] * o.m_[2], a[0] * o.m_[1] + a[1] * o.m_[3],
                 a[2] * o.m_[0] + a[3] * o.m_[2], a[2] * o.m_[1] + a[3] * o.m_[3]);
}

BinaryForm BinaryForm::from_coeffs(std::vector<Scalar> c)
{
    int d = static_cast<int>(c.size()) - 1;
    return {UniPoly(std::move(c)), d};
}

BinaryForm BinaryForm::vanishing_at(const P1Point& p)
{
    // second * w - first * x
    return from_coeffs({-p.first, p.second});
}

Scalar BinaryForm::operator()(const P1Point& p) const
{
    Scalar r;
    Scalar wpow(1);
    std::vector<Scalar> xpow(static_cast<size_t>(degree) + 1, Scalar(1));
    for (int i = 1; i <= degree; ++i) xpow[i] = xpow[i - 1] * p.second;
    for (int i = 0; i <= degree; ++i) {
        r += poly.coeff(i) * wpow * xpow[degree - i];
        wpow *= p.first;
    }
    return r;
}

int BinaryForm::distinct_roots() const
{
    if (is_zero()) throw std::domain_error("zero form has no finite root set");
    int n = squarefree_part(poly).degree();
    return n + (infinity_multiplicity() > 0 ? 1 : 0);
}

BinaryForm BinaryForm::substituted(const P1Map& m) const
{
    BinaryForm lw = from_coeffs({m(0, 1), m(0, 0)});
    BinaryForm lx = from_coeffs({m(1, 1), m(1, 0)});
    BinaryForm out{UniPoly(), degree};
    for (int i = 0; i <= degree; ++i) {
        if (poly.coeff(i).is_zero()) continue;
        BinaryForm term = from_coeffs({poly.coeff(i)});
        for (int k = 0; k < i; ++k) term = term * lw;
        for (int k = i; k < degree; ++k) term = term * lx;
        out = out + term;
    }
    return out;
}

std::string BinaryForm::str(const std::string& w, const std::string& x) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree; i >= 0; --i) {
        Scalar c = poly.coeff(i);
        if (c.is_zero()) continue;
        std::string mono;
        auto power = [](const std::string& v, int e) { return e == 0 ? "" : (e == 1 ? v : v + "^" + std::to_string(e)); };
        std::string pw = power(w, i), px = power(x, degree - i);
        mono = pw + (!pw.empty() && !px.empty() ? "*" : "") + px;
        std::string cs = c.str();
        bool neg = c.is_rational() && c.rational_part() < 0;
        if (neg) cs = cs.substr(1);
        if (!c.is_rational()) cs = "(" + cs + ")";
        bool unit = c.is_rational() && ::abs(c.rational_part()) == 1 && !mono.empty();
        std::string body = unit ? mono : (mono.empty() ? cs : cs + "*" + mono);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const
{
    if (degree != o.degree && !is_zero() && !o.is_zero())
        throw std::domain_error("adding binary forms of different degree");
    return {poly + o.poly, std::max(degree, o.degree)};
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b)
{
    if (a.is_zero()) return b.is_zero() ? BinaryForm{} : BinaryForm{b.poly.monic(), b.degree};
    if (b.is_zero()) return {a.poly.monic(), a.degree};
    UniPoly g = gcd(a.poly, b.poly);
    int inf = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    return {g, g.degree() + inf};
}

BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b)
{
    if (b.infinity_multiplicity() > a.infinity_multiplicity())
        throw std::domain_error("inexact binary form division");
    return {exact_div(a.poly, b.poly), a.degree - b.degree};
}

Scalar quadratic_discriminant(const BinaryForm& q)
{
    if (q.degree != 2) throw std::domain_error("not a binary quadratic");
    return q.coeff(1) * q.coeff(1) - Scalar(4) * q.coeff(0) * q.coeff(2);
}

}  // namespace linetan
