#include "linetan/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace linetan {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::monomial(const Scalar& c, int degree)
{
    if (c.is_zero()) return {};
    std::vector<Scalar> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::has_rational_coefficients() const
{
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

Scalar UniPoly::operator()(const Scalar& at) const
{
    Scalar r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

UniPoly UniPoly::derivative() const
{
    std::vector<Scalar> v;
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return *this;
    Scalar inv = Scalar(1) / leading();
    return *this * inv;
}

UniPoly UniPoly::primitive() const
{
    if (is_zero() || !has_rational_coefficients()) return *this;
    std::vector<Rational> q;
    for (const auto& c : c_) q.push_back(c.rational_part());
    q = primitive_integer(std::move(q));
    std::vector<Scalar> v(q.begin(), q.end());
    UniPoly r(std::move(v));
    if (r.leading().sign() < 0) r = -r;
    return r;
}

std::string UniPoly::str(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = !c.is_rational();
        bool neg = c.is_rational() && c.rational_part() < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs = cs.substr(1);
        bool unit = c.is_rational() && ::abs(c.rational_part()) == 1;
        if (i == 0 || !unit) os << (compound ? "(" + cs + ")" : cs) << (i ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    return *this += -o;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(v);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s)
{
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> r = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Scalar> q(static_cast<size_t>(a.degree() - db) + 1);
    Scalar inv = Scalar(1) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        Scalar f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(static_cast<size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b)
{
    return divmod(a, b).second;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& b, const UniPoly& a)
{
    return (a % b).is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() <= 0) return p.monic();
    return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p)
{
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    UniPoly dp = p.derivative();
    UniPoly a = gcd(p, dp);
    UniPoly b = exact_div(p, a);
    UniPoly c = exact_div(dp, a);
    UniPoly d = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        UniPoly f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, k);
        b = exact_div(b, f);
        c = exact_div(d, f);
        d = c - b.derivative();
        ++k;
    }
    return out;
}

UniPoly pow(const UniPoly& p, unsigned n)
{
    UniPoly r = UniPoly::constant(Scalar(1)), b = p;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::optional<UniPoly> square_root_of_poly(const UniPoly& q)
{
    if (q.is_zero()) return UniPoly();
    if (q.degree() % 2) return std::nullopt;
    auto lead = q.leading().sqrt();
    if (!lead) return std::nullopt;
    int m = q.degree() / 2;
    std::vector<Scalar> r(static_cast<size_t>(m) + 1);
    r[m] = *lead;
    Scalar two_lead = Scalar(2) * *lead;
    // Match coefficients of t^(m+k) from the top, k = m-1 .. 0.
    for (int k = m - 1; k >= 0; --k) {
        Scalar acc = q.coeff(m + k);
        for (int i = k + 1; i < m; ++i) {
            int j = m + k - i;
            if (j > k && j <= m) acc -= r[i] * r[j];
        }
        r[k] = acc / two_lead;
    }
    UniPoly root(std::move(r));
    if (root * root != q) return std::nullopt;
    return root;
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m)
{
    size_t n = m.size();
    if (n == 0) return UniPoly::constant(Scalar(1));
    int sign = 1;
    UniPoly prev = UniPoly::constant(Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return UniPoly();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace linetan
