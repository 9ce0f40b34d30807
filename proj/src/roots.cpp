#include "linetan/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace linetan {

namespace {

Rational floor_q(const Rational& q)
{
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

// Rational upper bound on |s| for real s.
Rational abs_bound(const Scalar& s)
{
    Rational b = ::abs(s.rational_part());
    if (!s.is_rational()) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), Integer(abs(s.radicand())).get_mpz_t());
        b += ::abs(s.radical_part()) * Rational(r + 1);
    }
    return b;
}

Rational abs_lower_bound(const Scalar& s)
{
    if (s.is_rational()) return ::abs(s.rational_part());
    // |s| >= |norm| / |conjugate|
    return ::abs(s.norm()) / abs_bound(s.conjugate());
}

std::vector<UniPoly> sturm_chain(const UniPoly& p)
{
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = -(chain[chain.size() - 2] % chain.back());
        if (r.is_zero()) break;
        chain.push_back(r);
    }
    return chain;
}

int variations(const std::vector<UniPoly>& chain, const Rational& at)
{
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, at);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

std::vector<Scalar> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c)
{
    Scalar disc = b * b - Scalar(4) * a * c;
    std::optional<Scalar> r = disc.sqrt();
    if (!r && disc.is_rational()) r = Scalar::sqrt_of(disc.rational_part());
    if (!r) return {};
    return {(-b - *r) / (Scalar(2) * a), (-b + *r) / (Scalar(2) * a)};
}

// Splits a monic rational quartic with no rational roots into two rational quadratics.
std::optional<std::pair<UniPoly, UniPoly>> quartic_split(const UniPoly& f)
{
    UniPoly m = f.monic();
    Rational a = m.coeff(3).rational_part(), b = m.coeff(2).rational_part(),
             c = m.coeff(1).rational_part(), e = m.coeff(0).rational_part();
    UniPoly resolvent({Scalar(Rational(-(a * a * e - 4 * b * e + c * c))), Scalar(Rational(a * c - 4 * e)), Scalar(-b),
                       Scalar(1)});
    for (const Rational& theta : rational_roots(resolvent)) {
        std::vector<std::pair<Rational, Rational>> pq;  // (p, q) and (r, u)
        auto disc = rational_sqrt(theta * theta - 4 * e);
        if (!disc) continue;
        Rational q = (theta - *disc) / 2, u = (theta + *disc) / 2;
        std::vector<std::pair<Rational, Rational>> prs;
        if (q != u) {
            Rational p = (c - a * q) / (u - q);
            prs.emplace_back(p, a - p);
        } else {
            auto d2 = rational_sqrt(a * a - 4 * (b - theta));
            if (!d2) continue;
            prs.emplace_back((a - *d2) / 2, (a + *d2) / 2);
        }
        for (auto [p, r] : prs) {
            UniPoly f1({Scalar(q), Scalar(p), Scalar(1)}), f2({Scalar(u), Scalar(r), Scalar(1)});
            if (f1 * f2 == m) return std::make_pair(f1, f2);
        }
    }
    return std::nullopt;
}

bool same_field(const std::vector<ExactRoot>& roots)
{
    Integer d = 0;
    for (const auto& r : roots) {
        if (r.value.is_rational()) continue;
        if (d == 0) {
            d = r.value.radicand();
            continue;
        }
        if (!rational_sqrt(Rational(d, r.value.radicand()))) return false;
    }
    return true;
}

std::optional<std::vector<Scalar>> squarefree_roots_rational(const UniPoly& f)
{
    std::vector<Scalar> out;
    UniPoly rest = f.monic();
    for (const Rational& r : rational_roots(rest)) {
        out.emplace_back(r);
        rest = exact_div(rest, UniPoly({Scalar(Rational(-r)), Scalar(1)}));
    }
    if (rest.degree() <= 0) return out;
    std::vector<UniPoly> quads;
    if (rest.degree() == 2)
        quads.push_back(rest);
    else if (rest.degree() == 4) {
        auto split = quartic_split(rest);
        if (!split) return std::nullopt;
        quads = {split->first, split->second};
    } else {
        return std::nullopt;
    }
    for (const auto& qd : quads) {
        auto rs = quadratic_roots(qd.coeff(2), qd.coeff(1), qd.coeff(0));
        if (rs.empty()) return std::nullopt;
        out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
}

std::optional<std::vector<Scalar>> squarefree_roots_extension(const UniPoly& f)
{
    std::vector<Scalar> out;
    UniPoly rest = f.monic();
    if (rest.degree() == 1) return std::vector<Scalar>{-rest.coeff(0)};
    if (rest.degree() == 2) {
        try {
            auto rs = quadratic_roots(rest.coeff(2), rest.coeff(1), rest.coeff(0));
            if (rs.size() == 2 && rest(rs[0]).is_zero() && rest(rs[1]).is_zero()) return rs;
        } catch (const std::domain_error&) {
        }
        return std::nullopt;
    }
    // Roots of f in K are among the roots of the rational norm f * conj(f).
    std::vector<Scalar> conj;
    for (const auto& c : rest.coefficients()) conj.push_back(c.conjugate());
    UniPoly norm = squarefree_part(rest * UniPoly(conj));
    auto cands = squarefree_roots_rational(norm);
    if (!cands) return std::nullopt;
    for (const auto& r : *cands) {
        try {
            if (rest(r).is_zero()) out.push_back(r);
        } catch (const std::domain_error&) {
        }
    }
    if (static_cast<int>(out.size()) != rest.degree()) return std::nullopt;
    return out;
}

}  // namespace

int sign_at(const UniPoly& q, const Rational& at)
{
    return q(Scalar(at)).sign();
}

std::vector<RootInterval> real_roots_isolate(const UniPoly& q)
{
    if (q.is_zero()) throw std::domain_error("real_roots_isolate: zero polynomial");
    for (const auto& c : q.coefficients())
        if (!c.is_real()) throw std::domain_error("real_roots_isolate: non-real coefficient");
    UniPoly p = squarefree_part(q);
    std::vector<RootInterval> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rational bound = 1;
    Rational lead = abs_lower_bound(p.leading());
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1 + abs_bound(p.coeff(i)) / lead));
    bound += 1;
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = variations(chain, a) - variations(chain, b);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({a, b});
            continue;
        }
        Rational m = (a + b) / 2;
        if (sign_at(p, m) != 0) {
            work.emplace_back(a, m);
            work.emplace_back(m, b);
            continue;
        }
        out.push_back({m, m});
        Rational e = (b - a) / 4;
        while (sign_at(p, m - e) == 0 || sign_at(p, m + e) == 0 ||
               variations(chain, m - e) - variations(chain, m + e) != 1)
            e /= 2;
        work.emplace_back(a, m - e);
        work.emplace_back(m + e, b);
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root(const UniPoly& q, RootInterval iv, const Rational& max_width)
{
    if (iv.exact()) return iv;
    UniPoly p = squarefree_part(q);
    int slo = sign_at(p, iv.lo);
    if (slo == 0) return {iv.lo, iv.lo};
    while (iv.hi - iv.lo > max_width) {
        Rational m = iv.midpoint();
        int s = sign_at(p, m);
        if (s == 0) return {m, m};
        if (s == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

Rational simplest_between(Rational lo, Rational hi)
{
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    Rational fl = floor_q(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    return fl + 1 / inner;
}

std::vector<Rational> rational_roots(const UniPoly& q)
{
    if (!q.has_rational_coefficients()) throw std::domain_error("rational_roots: irrational coefficients");
    std::vector<Rational> out;
    if (q.degree() <= 0) return out;
    UniPoly p = squarefree_part(q).primitive();
    Rational l = ::abs(p.leading().rational_part());
    Rational width = 1 / (2 * l * l);
    for (auto iv : real_roots_isolate(p)) {
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        iv = refine_root(p, iv, width);
        Rational c = iv.exact() ? iv.lo : simplest_between(iv.lo, iv.hi);
        if (p(Scalar(c)).is_zero()) out.push_back(c);
    }
    return out;
}

RationalInterval enclose(const UniPoly& q, const Rational& lo, const Rational& hi)
{
    if (!q.has_rational_coefficients()) throw std::domain_error("enclose: irrational coefficients");
    RationalInterval acc{0, 0};
    const auto& c = q.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        Rational p[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
        Rational mn = *std::min_element(p, p + 4), mx = *std::max_element(p, p + 4);
        acc = {mn + it->rational_part(), mx + it->rational_part()};
    }
    return acc;
}

std::optional<std::vector<ExactRoot>> roots_in_quadratic_field(const UniPoly& q)
{
    if (q.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<ExactRoot> out;
    for (const auto& [f, k] : squarefree_decomposition(q)) {
        auto rs = f.has_rational_coefficients() ? squarefree_roots_rational(f) : squarefree_roots_extension(f);
        if (!rs) return std::nullopt;
        for (const auto& r : *rs) out.push_back({r, k});
    }
    if (!same_field(out)) return std::nullopt;
    return out;
}

std::optional<std::vector<ExactP1Root>> split_binary_form(const BinaryForm& f)
{
    if (f.is_zero()) throw std::domain_error("roots of the zero form");
    std::vector<ExactP1Root> out;
    if (f.poly.degree() > 0) {
        auto rs = roots_in_quadratic_field(f.poly);
        if (!rs) return std::nullopt;
        for (const auto& r : *rs) out.push_back({P1Point{r.value, Scalar(1)}, r.multiplicity});
    }
    if (int m = f.infinity_multiplicity(); m > 0) out.push_back({P1Point{Scalar(1), Scalar(0)}, m});
    return out;
}

}  // namespace linetan
