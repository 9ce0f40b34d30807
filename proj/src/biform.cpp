#include "linetan/biform.hpp"

#include <stdexcept>

namespace linetan {

namespace {

std::string power(const char* v, int e)
{
    if (e == 0) return "";
    return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
}

std::string monomial(int wp, int xp, int yp, int zp)
{
    std::string out;
    for (const auto& piece : {power("w", wp), power("x", xp), power("y", yp), power("z", zp)}) {
        if (piece.empty()) continue;
        if (!out.empty()) out += "*";
        out += piece;
    }
    return out;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono)
{
    if (c.is_zero()) return;
    bool neg = c.is_rational() && c.rational_part() < 0;
    std::string cs = c.str();
    if (neg) cs = cs.substr(1);
    if (!c.is_rational()) cs = "(" + cs + ")";
    bool unit = c.is_rational() && ::abs(c.rational_part()) == 1 && !mono.empty();
    std::string body = unit ? mono : (mono.empty() ? cs : cs + "*" + mono);
    if (out.empty())
        out = (neg ? "-" : "") + body;
    else
        out += (neg ? " - " : " + ") + body;
}

BinaryForm linear_powers(const BinaryForm& a, int i, const BinaryForm& b, int j)
{
    BinaryForm r = BinaryForm::from_coeffs({Scalar(1)});
    for (int k = 0; k < i; ++k) r = r * a;
    for (int k = 0; k < j; ++k) r = r * b;
    return r;
}

BinaryForm power_of_first(int k)
{
    return {UniPoly::monomial(Scalar(1), k), k};
}

}  // namespace

BiForm22 BiForm22::from_bipoly(const BiPoly& p)
{
    BiForm22 f;
    for (const auto& [e, c] : p.terms()) {
        if (e.first > 2 || e.second > 2) throw std::domain_error("polynomial exceeds bidegree (2,2)");
        f.c_[2 - e.first][2 - e.second] = c;
    }
    return f;
}

bool BiForm22::is_zero() const
{
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

BiPoly BiForm22::dehomogenized() const
{
    BiPoly p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p.add_term(2 - i, 2 - j, c_[i][j]);
    return p;
}

Scalar BiForm22::eval(const P1Point& u, const P1Point& v) const
{
    Scalar r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (c_[i][j].is_zero()) continue;
            r += c_[i][j] * pow(u.first, i) * pow(u.second, 2 - i) * pow(v.first, j) * pow(v.second, 2 - j);
        }
    return r;
}

BinaryForm BiForm22::column(int j) const
{
    return BinaryForm::from_coeffs({c_[0][j], c_[1][j], c_[2][j]});
}

BinaryForm BiForm22::row(int i) const
{
    return BinaryForm::from_coeffs({c_[i][0], c_[i][1], c_[i][2]});
}

BiForm22 BiForm22::reparameterized(const P1Map& m1, const P1Map& m2) const
{
    BinaryForm lw = BinaryForm::from_coeffs({m1(0, 1), m1(0, 0)});
    BinaryForm lx = BinaryForm::from_coeffs({m1(1, 1), m1(1, 0)});
    BinaryForm ly = BinaryForm::from_coeffs({m2(0, 1), m2(0, 0)});
    BinaryForm lz = BinaryForm::from_coeffs({m2(1, 1), m2(1, 0)});
    std::array<BinaryForm, 3> a, b;
    for (int i = 0; i < 3; ++i) {
        a[i] = linear_powers(lw, i, lx, 2 - i);
        b[i] = linear_powers(ly, i, lz, 2 - i);
    }
    BiForm22 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (c_[i][j].is_zero()) continue;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) g.c_[k][l] += c_[i][j] * a[i].coeff(k) * b[j].coeff(l);
        }
    return g;
}

BiForm22 BiForm22::transposed() const
{
    BiForm22 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.c_[i][j] = c_[j][i];
    return g;
}

std::optional<Scalar> BiForm22::ratio_to(const BiForm22& o) const
{
    std::optional<Scalar> lambda;
    for (int i = 0; i < 3 && !lambda; ++i)
        for (int j = 0; j < 3 && !lambda; ++j)
            if (!o.c_[i][j].is_zero()) lambda = c_[i][j] / o.c_[i][j];
    if (!lambda || lambda->is_zero()) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c_[i][j] != *lambda * o.c_[i][j]) return std::nullopt;
    return lambda;
}

std::string BiForm22::str() const
{
    std::string out;
    for (int i = 2; i >= 0; --i)
        for (int j = 2; j >= 0; --j) append_term(out, c_[i][j], monomial(i, 2 - i, j, 2 - j));
    return out.empty() ? "0" : out;
}

BiForm22 BiForm22::operator+(const BiForm22& o) const
{
    BiForm22 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.c_[i][j] = c_[i][j] + o.c_[i][j];
    return g;
}

BiForm22 BiForm22::operator*(const Scalar& s) const
{
    BiForm22 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.c_[i][j] = c_[i][j] * s;
    return g;
}

bool BiForm22::operator==(const BiForm22& o) const
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c_[i][j] != o.c_[i][j]) return false;
    return true;
}

BinaryForm discriminant_in_yz(const BiForm22& F)
{
    BinaryForm b = F.column(1);
    return b * b - F.column(0) * F.column(2) * Scalar(4);
}

BiForm22 asymmetric_normal_form(const Scalar& s, const Scalar& t)
{
    BiForm22 f;
    f(2, 0) = s;
    f(1, 0) = Scalar(1) - s;
    f(1, 1) = Scalar(-2);
    f(1, 2) = Scalar(1) - t;
    f(0, 2) = t;
    return f;
}

BiForm22 symmetric_normal_form(const Scalar& s_squared, int sign)
{
    BiForm22 f;
    f(0, 2) = Scalar(1);
    f(2, 2) = Scalar(-1);
    f(0, 0) = Scalar(sign);
    f(2, 0) = Scalar(-sign) * s_squared;
    return f;
}

UniPoly dehomogenize_second(const BinaryForm& f)
{
    std::vector<Scalar> v(static_cast<size_t>(f.degree) + 1);
    for (int i = 0; i <= f.degree; ++i) v[f.degree - i] = f.coeff(i);
    return UniPoly(std::move(v));
}

BinaryForm homogenize_second(const UniPoly& p, int degree)
{
    if (p.degree() > degree) throw std::domain_error("polynomial exceeds declared degree");
    std::vector<Scalar> v(static_cast<size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) v[i] = p.coeff(degree - i);
    return BinaryForm::from_coeffs(std::move(v));
}

BiHomForm BiHomForm::from_wx(const BinaryForm& f)
{
    BiHomForm h{BiPoly(), f.degree, 0};
    for (int i = 0; i <= f.degree; ++i) h.dehom.add_term(f.degree - i, 0, f.coeff(i));
    return h;
}

BiHomForm BiHomForm::from_yz(const BinaryForm& f)
{
    BiHomForm h{BiPoly(), 0, f.degree};
    for (int j = 0; j <= f.degree; ++j) h.dehom.add_term(0, f.degree - j, f.coeff(j));
    return h;
}

Scalar BiHomForm::eval(const P1Point& u, const P1Point& v) const
{
    Scalar r;
    for (const auto& [e, c] : dehom.terms())
        r += c * pow(u.first, deg_wx - e.first) * pow(u.second, e.first) * pow(v.first, deg_yz - e.second) *
             pow(v.second, e.second);
    return r;
}

BiForm22 BiHomForm::to_biform22() const
{
    if (deg_wx != 2 || deg_yz != 2) throw std::domain_error("form is not of bidegree (2,2)");
    return BiForm22::from_bipoly(dehom);
}

BiHomForm BiHomForm::transposed() const
{
    BiHomForm h{BiPoly(), deg_yz, deg_wx};
    for (const auto& [e, c] : dehom.terms()) h.dehom.add_term(e.second, e.first, c);
    return h;
}

BinaryForm BiHomForm::pure_wx_part() const
{
    if (is_zero()) throw std::domain_error("pure part of the zero form");
    UniPoly c;
    for (const auto& k : dehom.coefficients_in(Var::z)) c = gcd(c, k);
    return homogenize_second(c, c.degree()) * power_of_first(w_multiplicity());
}

BinaryForm BiHomForm::pure_yz_part() const
{
    if (is_zero()) throw std::domain_error("pure part of the zero form");
    UniPoly c;
    for (const auto& k : dehom.coefficients_in(Var::x)) c = gcd(c, k);
    return homogenize_second(c, c.degree()) * power_of_first(y_multiplicity());
}

BinaryForm BiHomForm::fiber_at_wx(const P1Point& u) const
{
    std::vector<Scalar> v(static_cast<size_t>(deg_yz) + 1);
    for (const auto& [e, c] : dehom.terms())
        v[deg_yz - e.second] += c * pow(u.first, deg_wx - e.first) * pow(u.second, e.first);
    return BinaryForm::from_coeffs(std::move(v));
}

BinaryForm BiHomForm::fiber_at_yz(const P1Point& p) const
{
    std::vector<Scalar> v(static_cast<size_t>(deg_wx) + 1);
    for (const auto& [e, c] : dehom.terms())
        v[deg_wx - e.first] += c * pow(p.first, deg_yz - e.second) * pow(p.second, e.second);
    return BinaryForm::from_coeffs(std::move(v));
}

std::string BiHomForm::str() const
{
    std::string out;
    std::vector<std::pair<BiPoly::Exponent, Scalar>> terms(dehom.terms().rbegin(), dehom.terms().rend());
    for (const auto& [e, c] : terms)
        append_term(out, c, monomial(deg_wx - e.first, e.first, deg_yz - e.second, e.second));
    return out.empty() ? "0" : out;
}

BiHomForm gcd(const BiHomForm& a, const BiHomForm& b)
{
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    BiPoly g = gcd_bipoly(a.dehom, b.dehom);
    return {g, g.degree_in(Var::x) + std::min(a.w_multiplicity(), b.w_multiplicity()),
            g.degree_in(Var::z) + std::min(a.y_multiplicity(), b.y_multiplicity())};
}

BiHomForm exact_div(const BiHomForm& a, const BiHomForm& b)
{
    auto q = exact_divide(a.dehom, b.dehom);
    BiHomForm r{q ? *q : BiPoly(), a.deg_wx - b.deg_wx, a.deg_yz - b.deg_yz};
    if (!q || r.deg_wx < 0 || r.deg_yz < 0 || q->degree_in(Var::x) > r.deg_wx || q->degree_in(Var::z) > r.deg_yz)
        throw std::domain_error("inexact bihomogeneous division");
    return r;
}

}  // namespace linetan
