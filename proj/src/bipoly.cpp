#include "linetan/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linetan {

namespace {

using Rec = std::vector<UniPoly>;  // coefficients in z, each a polynomial in x

void trim(Rec& r)
{
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

int rdeg(const Rec& r)
{
    return static_cast<int>(r.size()) - 1;
}

UniPoly content(const Rec& r)
{
    UniPoly g;
    for (const auto& c : r) g = gcd(g, c);
    return g;
}

Rec primitive_part(const Rec& r)
{
    UniPoly c = content(r);
    Rec out;
    for (const auto& a : r) out.push_back(exact_div(a, c));
    return out;
}

// Pseudo-remainder of a by b in the main variable.
Rec prem(Rec a, const Rec& b)
{
    int db = rdeg(b);
    const UniPoly& lb = b.back();
    while (rdeg(a) >= db && !a.empty()) {
        int shift = rdeg(a) - db;
        UniPoly la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace

BiPoly BiPoly::constant(const Scalar& c)
{
    BiPoly p;
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::var(Var v)
{
    BiPoly p;
    p.add_term(v == Var::x ? 1 : 0, v == Var::z ? 1 : 0, Scalar(1));
    return p;
}

BiPoly BiPoly::from_coefficients(Var v, const std::vector<UniPoly>& coeffs)
{
    BiPoly p;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        for (int i = 0; i <= coeffs[k].degree(); ++i) {
            if (v == Var::z)
                p.add_term(i, k, coeffs[k].coeff(i));
            else
                p.add_term(k, i, coeffs[k].coeff(i));
        }
    return p;
}

BiPoly BiPoly::from_uni(Var v, const UniPoly& u)
{
    BiPoly p;
    for (int i = 0; i <= u.degree(); ++i) {
        if (v == Var::x)
            p.add_term(i, 0, u.coeff(i));
        else
            p.add_term(0, i, u.coeff(i));
    }
    return p;
}

Scalar BiPoly::coeff(int i, int j) const
{
    auto it = t_.find({i, j});
    return it == t_.end() ? Scalar() : it->second;
}

void BiPoly::add_term(int i, int j, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int BiPoly::degree_in(Var v) const
{
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, v == Var::x ? e.first : e.second);
    return d;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
}

BiPoly::Exponent BiPoly::leading_exponent() const
{
    if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
    Exponent best = t_.begin()->first;
    for (const auto& [e, c] : t_) {
        int te = e.first + e.second, tb = best.first + best.second;
        if (te > tb || (te == tb && e.first > best.first)) best = e;
    }
    return best;
}

Scalar BiPoly::leading_coefficient() const
{
    auto e = leading_exponent();
    return coeff(e.first, e.second);
}

Scalar BiPoly::eval(const Scalar& x, const Scalar& z) const
{
    Scalar r;
    for (const auto& [e, c] : t_) r += c * pow(x, e.first) * pow(z, e.second);
    return r;
}

UniPoly BiPoly::specialize(Var v, const Scalar& value) const
{
    std::vector<Scalar> out;
    for (const auto& [e, c] : t_) {
        int keep = v == Var::x ? e.second : e.first;
        int sub = v == Var::x ? e.first : e.second;
        if (static_cast<int>(out.size()) <= keep) out.resize(keep + 1);
        out[keep] += c * pow(value, sub);
    }
    return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::coefficients_in(Var v) const
{
    int d = degree_in(v);
    std::vector<std::vector<Scalar>> raw(d + 1);
    for (const auto& [e, c] : t_) {
        int k = v == Var::x ? e.first : e.second;
        int i = v == Var::x ? e.second : e.first;
        if (static_cast<int>(raw[k].size()) <= i) raw[k].resize(i + 1);
        raw[k][i] += c;
    }
    std::vector<UniPoly> out;
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

BiPoly BiPoly::derivative(Var v) const
{
    BiPoly p;
    for (const auto& [e, c] : t_) {
        int k = v == Var::x ? e.first : e.second;
        if (k == 0) continue;
        if (v == Var::x)
            p.add_term(e.first - 1, e.second, c * Scalar(k));
        else
            p.add_term(e.first, e.second - 1, c * Scalar(k));
    }
    return p;
}

BiPoly BiPoly::normalized() const
{
    if (is_zero()) return *this;
    return *this * (Scalar(1) / leading_coefficient());
}

std::string BiPoly::str() const
{
    if (is_zero()) return "0";
    // graded-lex descending
    std::vector<std::pair<Exponent, Scalar>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono;
        if (e.first) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
        if (e.second) mono += (mono.empty() ? "" : "*") + std::string(e.second == 1 ? "z" : "z^" + std::to_string(e.second));
        bool neg = c.is_rational() && c.rational_part() < 0;
        std::string cs = c.str();
        if (neg) cs = cs.substr(1);
        if (!c.is_rational()) cs = "(" + cs + ")";
        bool unit = c.is_rational() && ::abs(c.rational_part()) == 1 && !mono.empty();
        std::string body = unit ? mono : (mono.empty() ? cs : cs + "*" + mono);
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g)
{
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    Rec a = f.coefficients_in(Var::z), b = g.coefficients_in(Var::z);
    UniPoly c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (rdeg(a) < rdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (rdeg(b) == 0) {
            a = {UniPoly::constant(Scalar(1))};
            break;
        }
        Rec r = prem(a, b);
        a = std::move(b);
        b = r.empty() ? Rec{} : primitive_part(r);
    }
    for (auto& coef : a) coef *= c;
    return BiPoly::from_coefficients(Var::z, a).normalized();
}

std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g)
{
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Rec a = f.coefficients_in(Var::z), b = g.coefficients_in(Var::z);
    trim(a);
    int db = rdeg(b);
    if (a.empty()) return BiPoly();
    if (rdeg(a) < db) return std::nullopt;
    Rec q(static_cast<size_t>(rdeg(a) - db) + 1);
    while (!a.empty() && rdeg(a) >= db) {
        int shift = rdeg(a) - db;
        auto [quot, rem] = divmod(a.back(), b.back());
        if (!rem.is_zero()) return std::nullopt;
        q[shift] = quot;
        for (int j = 0; j <= db; ++j) a[shift + j] -= quot * b[j];
        trim(a);
    }
    if (!a.empty()) return std::nullopt;
    return BiPoly::from_coefficients(Var::z, q);
}

UniPoly resultant_wrt(const BiPoly& f, const BiPoly& g, Var v)
{
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    int m = f.degree_in(v), n = g.degree_in(v);
    if (m <= 0 || n <= 0) throw std::domain_error("cannot eliminate: degree zero in the variable");
    auto fc = f.coefficients_in(v), gc = g.coefficients_in(v);
    int size = m + n;
    std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) syl[r][r + (m - k)] = fc[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) syl[n + r][r + (n - k)] = gc[k];
    return determinant(std::move(syl));
}

bool proportional(const BiPoly& f, const BiPoly& g)
{
    if (f.is_zero() || g.is_zero()) return false;
    return f.normalized() == g.normalized();
}

}  // namespace linetan
