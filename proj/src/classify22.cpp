#include "linetan/classify22.hpp"

#include "linetan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace linetan {

namespace {

std::optional<Scalar> any_sqrt(const Scalar& v)
{
    if (v.is_rational()) return Scalar::sqrt_of(v.to_rational());
    return v.sqrt();
}

bool real_up_to_scale(const BiPoly& p)
{
    if (p.is_zero()) return true;
    Scalar lc = p.terms().begin()->second;
    for (const auto& [e, c] : p.terms())
        if (!(c / lc).is_real()) return false;
    return true;
}

bool real_point(const P1Point& p)
{
    P1Point n = p.normalized();
    return n.first.is_real() && n.second.is_real();
}

BinaryForm linear_y()
{
    return BinaryForm::from_coeffs({Scalar(0), Scalar(1)});
}

BinaryForm linear_z()
{
    return BinaryForm::from_coeffs({Scalar(1), Scalar(0)});
}

BiHomForm add(const BiHomForm& a, const BiHomForm& b)
{
    return {a.dehom + b.dehom, a.deg_wx, a.deg_yz};
}

/// F or one of its first partials along w = t, x = 1, y = Y(t), z = Z(t).
/// dvar: 0 none, 1 d/dw, 2 d/dx.
UniPoly along(const BiForm22& F, int dvar, const UniPoly& Y, const UniPoly& Z)
{
    UniPoly ypow[3] = {UniPoly::constant(Scalar(1)), Y, Y * Y};
    UniPoly zpow[3] = {UniPoly::constant(Scalar(1)), Z, Z * Z};
    UniPoly out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (F(i, j).is_zero()) continue;
            Scalar c = F(i, j);
            int e = i;
            if (dvar == 1) {
                if (i == 0) continue;
                c *= Scalar(i);
                e = i - 1;
            } else if (dvar == 2) {
                if (i == 2) continue;
                c *= Scalar(2 - i);
            }
            out = out + UniPoly::monomial(c, e) * ypow[j] * zpow[2 - j];
        }
    return out;
}

UniPoly gcd3(const UniPoly& a, const UniPoly& b, const UniPoly& c)
{
    return gcd(gcd(a, b), c);
}

/// The double root of the fiber quadratic of F over u (F must ramify there).
P1Point double_point_over(const BiForm22& F, const P1Point& u)
{
    BinaryForm fiber = BiHomForm::from(F).fiber_at_wx(u);
    // coeff(i) multiplies y^i z^(2-i)
    Scalar a = fiber.coeff(2), b = fiber.coeff(1), c = fiber.coeff(0);
    if (!a.is_zero()) return P1Point{-b, Scalar(2) * a}.normalized();
    if (!c.is_zero() || !b.is_zero()) return P1Point{Scalar(1), Scalar(0)};
    throw GeometryError("fiber vanishes identically");
}

/// c * E^2 with E a binary form, when q has that shape.
std::optional<std::pair<Scalar, BinaryForm>> square_up_to_constant(const BinaryForm& q)
{
    if (q.is_zero() || q.infinity_multiplicity() % 2 != 0) return std::nullopt;
    Scalar lc = q.poly.leading();
    auto r = square_root_of_poly(q.poly.monic());
    if (!r) return std::nullopt;
    return std::make_pair(lc, BinaryForm{*r, q.degree / 2});
}

CurveFactor linear_factor(const P1Point& p, bool wx, int multiplicity)
{
    CurveFactor f;
    BinaryForm l = BinaryForm::vanishing_at(p);
    f.form = wx ? BiHomForm::from_wx(l) : BiHomForm::from_yz(l);
    f.deg_wx = wx ? 1 : 0;
    f.deg_yz = wx ? 0 : 1;
    f.multiplicity = multiplicity;
    f.real = real_point(p);
    return f;
}

/// Splits a pure factor (of degree 1 or 2) into linear pieces when possible.
void add_pure(std::vector<CurveFactor>& out, const BinaryForm& g, bool wx)
{
    if (g.degree == 0) return;
    std::optional<std::vector<ExactP1Root>> roots;
    try {
        roots = split_binary_form(g);
    } catch (const std::domain_error&) {
    }
    if (roots) {
        for (const auto& r : *roots) out.push_back(linear_factor(r.point, wx, r.multiplicity));
        return;
    }
    CurveFactor f;
    f.form = wx ? BiHomForm::from_wx(g) : BiHomForm::from_yz(g);
    f.deg_wx = wx ? 2 : 0;
    f.deg_yz = wx ? 0 : 2;
    f.components = 2;
    f.real = real_up_to_scale(f.form.dehom) && quadratic_discriminant(g).is_real() && quadratic_discriminant(g).sign() > 0;
    out.push_back(f);
}

/// Real points of an irreducible factor: a real form linear in one set of variables always has them;
/// otherwise look for a real fiber with nonnegative discriminant.
bool irreducible_has_real_locus(const BiHomForm& h)
{
    if (!real_up_to_scale(h.dehom)) return false;
    if (h.deg_wx <= 1 || h.deg_yz <= 1) return true;
    BiForm22 F = h.to_biform22();
    BinaryForm disc = discriminant_in_yz(F);
    if (disc.infinity_multiplicity() > 0) return true;
    // normalize to real coefficients
    Scalar lc = disc.poly.leading();
    UniPoly p = disc.poly * (Scalar(1) / lc);
    if (!real_roots_isolate(p).empty()) return true;
    return (lc * p.coeff(0)).sign() > 0;
}

int distinct_count(const std::vector<P1Point>& pts)
{
    std::vector<P1Point> seen;
    for (const auto& p : pts)
        if (std::none_of(seen.begin(), seen.end(), [&](const P1Point& q) { return q == p; })) seen.push_back(p);
    return static_cast<int>(seen.size());
}

int standard_rank(const P1Point& p)
{
    if (p == P1Point{Scalar(0), Scalar(1)}) return 0;
    if (p == P1Point{Scalar(1), Scalar(0)}) return 1;
    if (p == P1Point{Scalar(1), Scalar(1)}) return 2;
    return 3;
}

bool canonical_less(const P1Point& a, const P1Point& b)
{
    int ra = standard_rank(a), rb = standard_rank(b);
    if (ra != rb) return ra < rb;
    if (ra < 3) return false;
    Scalar ta = a.first / a.second, tb = b.first / b.second;
    if (ta.is_rational() != tb.is_rational()) return ta.is_rational();
    if (ta.is_real() && tb.is_real()) return ta < tb;
    return lex_less(ta, tb);
}

Scalar cross_value(const P1Point& a1, const P1Point& a2, const P1Point& a3, const P1Point& a4)
{
    P1Point c = cross_ratio(a1, a2, a3, a4);
    return c.second / c.first;
}

bool symmetric_pattern(const BiForm22& F, Scalar& s_squared, int& sign)
{
    for (int i = 0; i < 3; ++i)
        if (!F(i, 1).is_zero() || !F(1, i).is_zero()) return false;
    const Scalar &p0 = F(0, 2), &p2 = F(2, 2), &r0 = F(0, 0), &r2 = F(2, 0);
    if (p0.is_zero() || r0.is_zero() || p2 != -p0) return false;
    Scalar ratio = r0 / p0;
    if (ratio != Scalar(1) && ratio != Scalar(-1)) return false;
    sign = ratio == Scalar(1) ? 1 : -1;
    s_squared = -r2 / r0;
    return true;
}

}  // namespace

std::string CurveClass::description() const
{
    static const char* const names[] = {"",
                                        "smooth irreducible",
                                        "singular irreducible",
                                        "a (1,0)-curve and an irreducible (1,2)-curve",
                                        "two distinct irreducible (1,1)-curves",
                                        "an irreducible (1,1)-curve of multiplicity two",
                                        "an irreducible (1,1)-curve, a (1,0)-curve and a (0,1)-curve",
                                        "two distinct (1,0)-curves and two distinct (0,1)-curves",
                                        "two distinct (1,0)-curves and a double (0,1)-curve",
                                        "a double (1,0)-curve and a double (0,1)-curve"};
    static const char* const swapped[] = {"", "", "", "a (0,1)-curve and an irreducible (2,1)-curve", "", "", "", "",
                                          "two distinct (0,1)-curves and a double (1,0)-curve", ""};
    if (tag < 1 || tag > 9) return "unclassified";
    if (transposed && swapped[tag][0] != '\0') return swapped[tag];
    return names[tag];
}

bool is_smooth(const BiForm22& F)
{
    if (F.is_zero()) throw GeometryError("zero form");
    // Over [w,x] = [1,0].
    {
        const Scalar &a = F(2, 2), &b = F(2, 1), &c = F(2, 0);
        if (a.is_zero() && b.is_zero() && c.is_zero()) return false;
        if ((b * b - Scalar(4) * a * c).is_zero()) {
            P1Point v = a.is_zero() ? P1Point{Scalar(1), Scalar(0)} : P1Point{-b, Scalar(2) * a};
            Scalar fx;
            for (int j = 0; j < 3; ++j) fx += F(1, j) * pow(v.first, j) * pow(v.second, 2 - j);
            if (fx.is_zero()) return false;
        }
    }
    // Over [t,1]: coefficients of y^2, yz, z^2.
    UniPoly a = F.column(2).poly, b = F.column(1).poly, c = F.column(0).poly;
    if (gcd3(a, b, c).degree() > 0) return false;
    UniPoly disc = b * b - Scalar(4) * a * c;
    if (disc.is_zero()) return false;
    if (disc.degree() <= 0) return true;
    UniPoly ds = squarefree_part(disc);
    UniPoly Y = -b, Z = a * Scalar(2);
    UniPoly g1 = gcd3(ds, along(F, 1, Y, Z), along(F, 2, Y, Z));
    UniPoly gab = gcd(a, b);
    if (g1.degree() > 0) {
        UniPoly shared = gcd(g1, gab);
        if (exact_div(g1, shared).degree() > 0) return false;
    }
    if (gab.degree() > 0) {
        UniPoly Y2 = c * Scalar(2), Z2 = -b;
        if (gcd3(gab, along(F, 1, Y2, Z2), along(F, 2, Y2, Z2)).degree() > 0) return false;
    }
    return true;
}

CurveClass classify(const BiForm22& F)
{
    if (F.is_zero()) throw GeometryError("zero form");
    CurveClass cc;
    BiHomForm H = BiHomForm::from(F);
    BinaryForm g10 = H.pure_wx_part(), g01 = H.pure_yz_part();
    BiHomForm G = exact_div(exact_div(H, BiHomForm::from_wx(g10)), BiHomForm::from_yz(g01));
    int d1 = g10.degree, d2 = g01.degree;

    auto irreducible = [](const BiHomForm& h) {
        CurveFactor f;
        f.form = h.normalized();
        f.deg_wx = h.deg_wx;
        f.deg_yz = h.deg_yz;
        f.real = irreducible_has_real_locus(h);
        return f;
    };

    if (d1 == 0 && d2 == 0) {
        BinaryForm disc = discriminant_in_yz(F);
        if (disc.is_zero()) {
            cc.tag = 5;
            BiPoly h = gcd_bipoly(H.dehom, H.dehom.derivative(Var::z));
            BiHomForm root{h, 1, 1};
            if (h.degree_in(Var::x) > 1 || h.degree_in(Var::z) > 1 || !exact_div(H, root * root).is_constant())
                throw ContractViolation("repeated factor is not a (1,1)-form");
            CurveFactor f = irreducible(root);
            f.multiplicity = 2;
            cc.factors.push_back(f);
        } else if (auto sq = square_up_to_constant(disc)) {
            cc.tag = 4;
            auto root = any_sqrt(sq->first);
            std::optional<BiHomForm> h1;
            if (root) {
                try {
                    BinaryForm alpha = F.column(2), beta = F.column(1);
                    BinaryForm lin = beta - sq->second * *root;
                    BiHomForm L = add(BiHomForm::from_wx(alpha * Scalar(2)) * BiHomForm::from_yz(linear_y()),
                                      BiHomForm::from_wx(lin) * BiHomForm::from_yz(linear_z()));
                    h1 = gcd(H, L);
                } catch (const std::domain_error&) {
                    h1.reset();
                }
            }
            if (h1) {
                if (h1->deg_wx != 1 || h1->deg_yz != 1) throw ContractViolation("square discriminant without a (1,1) factor");
                cc.factors.push_back(irreducible(*h1));
                cc.factors.push_back(irreducible(exact_div(H, *h1)));
            } else {
                CurveFactor f = irreducible(H);
                f.components = 2;
                f.real = false;
                cc.factors.push_back(f);
            }
        } else {
            cc.tag = is_smooth(F) ? 1 : 2;
            cc.factors.push_back(irreducible(H));
        }
        return cc;
    }

    add_pure(cc.factors, g10, true);
    add_pure(cc.factors, g01, false);
    if (d1 == 1 && d2 == 0) {
        cc.tag = 3;
        cc.factors.push_back(irreducible(G));
    } else if (d1 == 0 && d2 == 1) {
        cc.tag = 3;
        cc.transposed = true;
        cc.factors.push_back(irreducible(G));
    } else if (d1 == 1 && d2 == 1) {
        cc.tag = 6;
        cc.factors.push_back(irreducible(G));
    } else if (d1 == 2 && d2 == 2) {
        bool sq10 = quadratic_discriminant(g10).is_zero(), sq01 = quadratic_discriminant(g01).is_zero();
        if (!sq10 && !sq01) {
            cc.tag = 7;
        } else if (sq10 && sq01) {
            cc.tag = 9;
        } else {
            cc.tag = 8;
            cc.transposed = sq10;
        }
    } else {
        throw ContractViolation("impossible pure factor degrees");
    }
    return cc;
}

std::vector<RamificationPoint> ramification(const BiForm22& F)
{
    if (!is_smooth(F)) throw GeometryError("ramification undefined for singular curve");
    BinaryForm disc = discriminant_in_yz(F);
    std::vector<RamificationPoint> out;
    std::optional<std::vector<ExactP1Root>> roots;
    try {
        roots = split_binary_form(disc);
    } catch (const std::domain_error&) {
    }
    if (roots) {
        for (const auto& r : *roots) {
            RamificationPoint rp;
            rp.point = r.point.normalized();
            rp.double_point = double_point_over(F, *rp.point);
            rp.at_infinity = rp.point->second.is_zero();
            rp.approx = rp.at_infinity ? std::complex<double>(INFINITY, 0)
                                       : to_complex(rp.point->first / rp.point->second);
            out.push_back(rp);
        }
        std::sort(out.begin(), out.end(),
                  [](const RamificationPoint& a, const RamificationPoint& b) { return canonical_less(*a.point, *b.point); });
        return out;
    }

    // Inexact: rational roots and [1,0] stay exact, the rest are described by a defining polynomial.
    if (disc.infinity_multiplicity() > 0) {
        RamificationPoint rp;
        rp.point = P1Point{Scalar(1), Scalar(0)};
        rp.double_point = double_point_over(F, *rp.point);
        rp.at_infinity = true;
        rp.approx = {INFINITY, 0};
        out.push_back(rp);
    }
    UniPoly rest = disc.poly.monic();
    if (rest.has_rational_coefficients()) {
        for (const Rational& r : rational_roots(rest)) {
            RamificationPoint rp;
            rp.point = P1Point{Scalar(r), Scalar(1)};
            rp.double_point = double_point_over(F, *rp.point);
            rp.approx = {r.get_d(), 0};
            out.push_back(rp);
            rest = exact_div(rest, UniPoly({Scalar(-r), Scalar(1)}));
        }
    }
    UniPoly a = F.column(2).poly, b = F.column(1).poly, c = F.column(0).poly;
    UniPoly dy = -b, dz = a * Scalar(2);
    if (gcd3(rest, a, b).degree() > 0) {
        dy = c * Scalar(2);
        dz = -b;
    }
    auto approx = approximate_roots(rest);
    std::vector<RootInterval> real;
    bool real_coeffs = true;
    for (int i = 0; i <= rest.degree(); ++i) real_coeffs = real_coeffs && rest.coeff(i).is_real();
    if (real_coeffs) real = real_roots_isolate(rest);
    // The real roots are the approximations closest to the real axis.
    std::sort(approx.begin(), approx.end(), [](auto x, auto y) { return std::abs(x.imag()) < std::abs(y.imag()); });
    std::sort(approx.begin(), approx.begin() + static_cast<long>(real.size()),
              [](auto x, auto y) { return x.real() < y.real(); });
    std::sort(approx.begin() + static_cast<long>(real.size()), approx.end(), [](auto x, auto y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    for (size_t i = 0; i < approx.size(); ++i) {
        RamificationPoint rp;
        rp.defining_poly = rest;
        rp.double_y = dy;
        rp.double_z = dz;
        if (i < real.size()) {
            rp.real_interval = real[i];
            rp.approx = {real[i].midpoint().get_d(), 0};
            if (!real[i].exact()) {
                RootInterval fine = refine_root(rest, real[i], Rational(1, 1000000000));
                rp.approx = {fine.midpoint().get_d(), 0};
            }
        } else {
            rp.approx = approx[i];
        }
        out.push_back(rp);
    }
    return out;
}

P1Point cross_ratio(const P1Point& a1, const P1Point& a2, const P1Point& a3, const P1Point& a4)
{
    auto det = [](const P1Point& p, const P1Point& q) { return p.first * q.second - p.second * q.first; };
    Scalar d13 = det(a1, a3), d23 = det(a2, a3);
    if (d13.is_zero() || d23.is_zero() || a1 == a2) throw GeometryError("cross ratio needs a1, a2, a3 distinct");
    if (a4 == a1 || a4 == a2) throw GeometryError("cross ratio needs a4 distinct from a1 and a2");
    return P1Point{det(a1, a4) / d13, det(a2, a4) / d23}.normalized();
}

std::pair<Scalar, Scalar> st_from_cross_ratios(const Scalar& g1, const Scalar& g2)
{
    Scalar one(1);
    if (g1.is_zero() || g2.is_zero() || g1 == one || g2 == one) throw GeometryError("cross ratios must avoid 0 and 1");
    return {g1 * (g2 - one) / (g2 * (g1 - one)), (g2 - one) / (g1 - one)};
}

BiForm22 NormalForm::form() const
{
    switch (kind) {
    case Kind::asymmetric:
        return asymmetric_normal_form(s, t);
    case Kind::symmetric:
        return symmetric_normal_form(s_squared, sign);
    default:
        throw GeometryError("no normal form: " + reason);
    }
}

NormalForm normal_form(const BiForm22& F)
{
    if (!is_smooth(F)) throw GeometryError("normal form undefined for singular curve");
    NormalForm nf;
    auto ram = ramification(F);
    if (ram.size() != 4) throw ContractViolation("smooth curve without four ramification points");
    if (std::any_of(ram.begin(), ram.end(), [](const RamificationPoint& r) { return !r.point; })) {
        nf.reason = "requires extension of degree > 2";
        return nf;
    }
    std::vector<P1Point> a, b;
    for (const auto& r : ram) {
        a.push_back(*r.point);
        b.push_back(*r.double_point);
    }
    int images = distinct_count(b);

    if (images == 4) {
        nf.kind = NormalForm::Kind::asymmetric;
        nf.gamma1 = cross_value(a[0], a[1], a[2], a[3]);
        nf.gamma2 = cross_value(b[0], b[1], b[2], b[3]);
        std::tie(nf.s, nf.t) = st_from_cross_ratios(nf.gamma1, nf.gamma2);
        nf.m1 = P1Map::from_standard(a[0], a[1], a[2]);
        nf.m2 = P1Map::from_standard(b[0], b[1], b[2]);
        if (!F.reparameterized(*nf.m1, *nf.m2).projectively_equal(nf.form()))
            throw ContractViolation("reparameterized curve is not in normal form");
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            auto st = st_from_cross_ratios(cross_value(a[perm[0]], a[perm[1]], a[perm[2]], a[perm[3]]),
                                           cross_value(b[perm[0]], b[perm[1]], b[perm[2]], b[perm[3]]));
            if (std::none_of(nf.orbit.begin(), nf.orbit.end(), [&](const auto& p) { return p == st; }))
                nf.orbit.push_back(st);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return nf;
    }
    if (images != 2) throw ContractViolation("double points project to " + std::to_string(images) + " points");

    nf.kind = NormalForm::Kind::symmetric;
    if (symmetric_pattern(F, nf.s_squared, nf.sign)) {
        nf.m1 = P1Map();
        nf.m2 = P1Map();
    } else {
        P1Point B1 = b[0], B2;
        std::vector<P1Point> pa, ra;
        for (size_t i = 0; i < 4; ++i) {
            if (b[i] == B1) {
                pa.push_back(a[i]);
            } else {
                B2 = b[i];
                ra.push_back(a[i]);
            }
        }
        if (pa.size() != 2 || ra.size() != 2) throw ContractViolation("unbalanced double points");
        P1Map n2(B1.first, B2.first, B1.second, B2.second);
        BiForm22 G = F.reparameterized(P1Map(), n2);
        for (int i = 0; i < 3; ++i)
            if (!G(i, 1).is_zero()) throw ContractViolation("mixed term survives in symmetric branch");
        BinaryForm P = G.column(2), R = G.column(0);
        // P = p0 x^2 + p1 wx + p2 w^2
        Scalar p0 = P.coeff(0), p1 = P.coeff(1), p2 = P.coeff(2), r0 = R.coeff(0), r1 = R.coeff(1), r2 = R.coeff(2);
        Scalar J = p0 * r2 + p2 * r0 - p1 * r1 / Scalar(2);
        Scalar I = J * J / (quadratic_discriminant(P) * quadratic_discriminant(R));
        std::optional<std::vector<ExactRoot>> sig;
        try {
            sig = roots_in_quadratic_field(UniPoly({Scalar(1), Scalar(2) - Scalar(16) * I, Scalar(1)}));
        } catch (const std::domain_error&) {
        }
        if (!sig) {
            nf.kind = NormalForm::Kind::unresolved;
            nf.reason = "s^2 requires extension of degree > 2";
            return nf;
        }
        Scalar sigma = (*sig)[0].value;
        if (sig->size() > 1) {
            Scalar other = (*sig)[1].value;
            if (sigma.is_real() && other.is_real()) {
                if (abs(other) < abs(sigma)) sigma = other;
            } else if (lex_less(other, sigma)) {
                sigma = other;
            }
        }
        nf.s_squared = sigma;
        nf.sign = 1;
        if (J.is_real() && sigma.is_real() && !(Scalar(1) + sigma).is_zero())
            nf.sign = -J.sign() * (Scalar(1) + sigma).sign();

        // Exact maps: [1,0], [0,1] go to the common harmonic pair (roots of the Jacobian), [1,1] to a root of P.
        try {
            BinaryForm jac = BinaryForm::from_coeffs({p1 * r0 - p0 * r1, Scalar(2) * (p2 * r0 - p0 * r2), p2 * r1 - p1 * r2});
            auto js = split_binary_form(jac);
            if (js && js->size() == 2) {
                for (int order = 0; order < 2 && !nf.m1; ++order) {
                    P1Point ja = (*js)[order].point, jb = (*js)[1 - order].point;
                    P1Map n1 = P1Map::through({P1Point{Scalar(1), Scalar(0)}, P1Point{Scalar(0), Scalar(1)},
                                               P1Point{Scalar(1), Scalar(1)}},
                                              {ja, jb, pa[0]});
                    BiForm22 H = G.reparameterized(n1, P1Map());
                    Scalar lam = H(0, 2), mu = H(0, 0);
                    if (lam.is_zero() || mu.is_zero() || -H(2, 0) / mu != sigma) continue;
                    auto kappa = any_sqrt(Scalar(nf.sign) * lam / mu);
                    if (!kappa) continue;
                    P1Map m2(B1.first, *kappa * B2.first, B1.second, *kappa * B2.second);
                    if (!F.reparameterized(n1, m2).projectively_equal(nf.form())) continue;
                    nf.m1 = n1;
                    nf.m2 = m2;
                }
            }
        } catch (const std::domain_error&) {
            nf.m1.reset();
            nf.m2.reset();
        }
    }
    nf.s_imaginary = nf.s_squared.is_real() && nf.s_squared.sign() < 0;
    if (auto s = any_sqrt(nf.s_squared)) nf.s = *s;
    nf.orbit.push_back({nf.s_squared, Scalar(nf.sign)});
    if (!nf.s_squared.is_zero()) {
        std::pair<Scalar, Scalar> inv{Scalar(1) / nf.s_squared, Scalar(nf.sign)};
        if (inv.first != nf.s_squared) nf.orbit.push_back(inv);
    }
    return nf;
}

std::complex<double> to_complex(const Scalar& s)
{
    double x = s.rational_part().get_d(), y = s.radical_part().get_d(), d = s.radicand().get_d();
    if (s.is_rational()) return {x, 0};
    if (d > 0) return {x + y * std::sqrt(d), 0};
    return {x, y * std::sqrt(-d)};
}

std::vector<std::complex<double>> approximate_roots(const UniPoly& p)
{
    // Durand-Kerner iteration on the monic polynomial; display only.
    int n = p.degree();
    if (n <= 0) return {};
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    std::complex<double> lc = to_complex(p.leading());
    for (int i = 0; i <= n; ++i) c[i] = to_complex(p.coeff(i)) / lc;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> r = 0;
        for (int i = n; i >= 0; --i) r = r * z + c[i];
        return r;
    };
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(c[i]));
    for (int i = 0; i < n; ++i) z[i] = radius * std::pow(seed, i);
    for (int iter = 0; iter < 500; ++iter) {
        double change = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            if (std::abs(den) == 0) den = 1e-300;
            std::complex<double> step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15 * radius) break;
    }
    for (auto& v : z)
        if (std::abs(v.imag()) < 1e-12 * std::max(1.0, std::abs(v))) v = {v.real(), 0};
    return z;
}

}  // namespace linetan
