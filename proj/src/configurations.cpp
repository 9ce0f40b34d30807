#include "linetan/configurations.hpp"

#include "linetan/errors.hpp"
#include "linetan/roots.hpp"

#include <algorithm>
#include <cmath>

namespace linetan {

std::string to_string(Mode m) { return m == Mode::affine ? "affine" : "projective"; }

std::string to_string(Verdict v) { return v == Verdict::finite ? "FINITE" : "INFINITE"; }

std::string to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::none: return "none";
    case CaseTag::affine_tangent_spheres: return "affine: tangent spheres, pencil through the contact point";
    case CaseTag::affine_hyperboloid: return "affine: ruling of a hyperboloid of revolution";
    case CaseTag::projective_tangent_spheres: return "projective: tangent spheres, pencil in the tangent plane";
    case CaseTag::projective_reflection: return "projective: spheres exchanged by the reflection through l1";
    }
    return "?";
}

Configuration Configuration::make(const LinePair& lines, const Sphere& s1, const Sphere& s2)
{
    if (!lines.skew()) throw GeometryError("lines intersect: reduce to planar problem");
    if (s1 == s2) throw GeometryError("spheres must be distinct");
    if (lines.l1().at_infinity() && lines.l2().at_infinity()) throw GeometryError("both lines at infinity");
    if (lines.l1().at_infinity()) return {lines.swapped(), s1, s2, Mode::projective};
    return {lines, s1, s2, lines.l2().at_infinity() ? Mode::projective : Mode::affine};
}

namespace {

using Cplx = std::complex<double>;

Cplx eval_c(const UniPoly& p, Cplx t)
{
    Cplx acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + to_complex(p.coeff(i));
    return acc;
}

std::array<double, 6> approx_line(const LinePair& pair, Cplx u, bool u_inf, Cplx v, bool v_inf)
{
    double P[4], R[4];
    double uw = u_inf ? 1 : u.real(), ux = u_inf ? 0 : 1;
    double vy = v_inf ? 1 : v.real(), vz = v_inf ? 0 : 1;
    for (int i = 0; i < 4; ++i) {
        P[i] = uw * pair.a()[i].to_double() + ux * pair.b()[i].to_double();
        R[i] = vy * pair.c()[i].to_double() + vz * pair.d()[i].to_double();
    }
    static const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::array<double, 6> l{};
    for (int k = 0; k < 6; ++k) l[k] = P[idx[k][0]] * R[idx[k][1]] - P[idx[k][1]] * R[idx[k][0]];
    return l;
}

bool is_real_point(const P1Point& p) { return p.first.is_real() && p.second.is_real(); }

Cplx ratio_approx(const P1Point& p, bool& at_infinity)
{
    at_infinity = p.second.is_zero();
    return at_infinity ? Cplx(0) : to_complex(p.first / p.second);
}

struct Columns {
    BinaryForm a, b, c;
};

Columns columns(const BiForm22& F) { return {F.column(2), F.column(1), F.column(0)}; }

/// Solutions over one exactly known u.
void solve_exact_fiber(const BiForm22& F1, const BiForm22& F2, const P1Point& u, int mult,
                       const std::optional<LinePair>& pair, TangentEnumeration& out)
{
    BinaryForm p = BiHomForm::from(F1).fiber_at_wx(u);
    BinaryForm q = BiHomForm::from(F2).fiber_at_wx(u);
    BinaryForm g = p.is_zero() ? q : q.is_zero() ? p : gcd(p, q);
    if (g.degree == 0 || g.is_zero()) throw ContractViolation("resultant root without a common fiber point");

    CommonTangent base;
    base.u = u;
    base.resultant_multiplicity = mult;
    base.u_approx = ratio_approx(u, base.u_at_infinity);
    base.shares_fiber = g.degree == 2;

    std::optional<std::vector<ExactP1Root>> roots;
    try {
        roots = split_binary_form(g);
    } catch (const std::domain_error&) {
        roots.reset();
    }
    if (!roots) {
        // two common points in a field we cannot represent: keep the fiber
        CommonTangent t = base;
        t.fiber = std::array<UniPoly, 3>{UniPoly::constant(g.coeff(2)), UniPoly::constant(g.coeff(1)),
                                         UniPoly::constant(g.coeff(0))};
        out.solutions.push_back(t);
        return;
    }
    for (const auto& r : *roots) {
        CommonTangent t = base;
        t.v = r.point;
        t.v_approx = ratio_approx(r.point, t.v_at_infinity);
        t.real = is_real_point(u) && is_real_point(r.point);
        if (pair) {
            t.line = transversal_through(*pair, u, r.point);
            if (t.real) t.line_approx = approx_line(*pair, t.u_approx, t.u_at_infinity, t.v_approx, t.v_at_infinity);
        }
        out.solutions.push_back(t);
    }
}

/// Solutions over the roots of a squarefree P with no root in a quadratic field;
/// v = [vy(t), vz(t)] is valid at every root.
void solve_isolated(const UniPoly& P, const UniPoly& vy, const UniPoly& vz, int mult,
                    const std::optional<LinePair>& pair, TangentEnumeration& out)
{
    std::vector<RootInterval> reals;
    if (P.has_rational_coefficients()) reals = real_roots_isolate(P);
    auto approx = approximate_roots(P);
    std::sort(approx.begin(), approx.end(),
              [](Cplx x, Cplx y) { return std::abs(x.imag()) < std::abs(y.imag()); });
    std::vector<Cplx> nonreal(approx.begin() + static_cast<long>(std::min(reals.size(), approx.size())), approx.end());

    auto make = [&](Cplx u) {
        CommonTangent t;
        t.defining_poly = P;
        t.vy = vy;
        t.vz = vz;
        t.resultant_multiplicity = mult;
        t.u_approx = u;
        Cplx y = eval_c(vy, u), z = eval_c(vz, u);
        t.v_at_infinity = std::abs(z) <= 1e-300 || std::abs(z) < 1e-13 * std::abs(y);
        t.v_approx = t.v_at_infinity ? Cplx(0) : y / z;
        return t;
    };
    for (const auto& iv : reals) {
        RootInterval fine = refine_root(P, iv, Rational(mpz_class(1), mpz_class(mpz_class(1) << 60)));
        CommonTangent t = make(Cplx(fine.midpoint().get_d(), 0));
        t.u_interval = fine;
        t.real = true;
        if (vy.has_rational_coefficients() && vz.has_rational_coefficients()) {
            RationalInterval ny = enclose(vy, fine.lo, fine.hi), nz = enclose(vz, fine.lo, fine.hi);
            if (!nz.contains_zero()) {
                Rational c[4] = {ny.lo / nz.lo, ny.lo / nz.hi, ny.hi / nz.lo, ny.hi / nz.hi};
                t.v_box = RationalInterval{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
            }
        }
        if (pair) t.line_approx = approx_line(*pair, t.u_approx, false, t.v_approx, t.v_at_infinity);
        out.solutions.push_back(t);
    }
    for (Cplx u : nonreal) out.solutions.push_back(make(u));
}

UniPoly poly_of(const BinaryForm& f) { return f.poly; }

}  // namespace

TangentEnumeration enumerate_common_tangents(const BiForm22& C1, const BiForm22& C2, const std::optional<LinePair>& pair)
{
    if (C1.is_zero() || C2.is_zero()) throw GeometryError("infinite family; use classify_configuration");
    if (!gcd(BiHomForm::from(C1), BiHomForm::from(C2)).is_constant())
        throw GeometryError("infinite family; use classify_configuration");

    const Columns f = columns(C1), g = columns(C2);
    const BinaryForm ac = f.a * g.c - g.a * f.c;
    const BinaryForm ab = f.a * g.b - g.a * f.b;
    const BinaryForm bc = f.b * g.c - g.b * f.c;
    TangentEnumeration out;
    out.resultant = ac * ac - ab * bc;
    if (out.resultant.is_zero()) throw ContractViolation("resultant vanishes without a common component");

    const int inf = out.resultant.infinity_multiplicity();
    out.total_multiplicity = inf;
    if (inf > 0) solve_exact_fiber(C1, C2, {Scalar(1), Scalar(0)}, inf, pair, out);

    // common root [y, z] = [-(a2 c1 - a1 c2), a2 b1 - a1 b2], else [-(c2 b1 - c1 b2), c2 a1 - c1 a2]
    const UniPoly y1 = poly_of(ac), z1 = -poly_of(ab);
    const UniPoly y2 = poly_of(bc), z2 = -poly_of(ac);

    for (const auto& [P, k] : squarefree_decomposition(out.resultant.poly)) {
        if (P.degree() <= 0) continue;
        out.total_multiplicity += k * P.degree();
        UniPoly rest = P;
        if (P.has_rational_coefficients()) {
            for (const Rational& r : rational_roots(P)) {
                solve_exact_fiber(C1, C2, {Scalar(r), Scalar(1)}, k, pair, out);
                rest = exact_div(rest, UniPoly{Scalar(-r), Scalar(1)});
            }
        }
        if (rest.degree() <= 0) continue;
        if (auto roots = roots_in_quadratic_field(rest)) {
            for (const auto& r : *roots) solve_exact_fiber(C1, C2, {r.value, Scalar(1)}, k, pair, out);
            continue;
        }
        // split off roots where the first (then the second) back-substitution degenerates
        UniPoly bad1 = gcd(rest, gcd(y1, z1));
        UniPoly good1 = bad1.degree() > 0 ? exact_div(rest, bad1) : rest;
        if (good1.degree() > 0) solve_isolated(good1, y1, z1, k, pair, out);
        if (bad1.degree() <= 0) continue;
        UniPoly bad2 = gcd(bad1, gcd(y2, z2));
        UniPoly good2 = bad2.degree() > 0 ? exact_div(bad1, bad2) : bad1;
        if (good2.degree() > 0) solve_isolated(good2, y2, z2, k, pair, out);
        if (bad2.degree() <= 0) continue;
        // proportional fibers: both roots of the fiber of C1 are common
        for (Cplx u : approximate_roots(bad2)) {
            CommonTangent t;
            t.defining_poly = bad2;
            t.resultant_multiplicity = k;
            t.shares_fiber = true;
            t.u_approx = u;
            t.fiber = std::array<UniPoly, 3>{f.a.poly, f.b.poly, f.c.poly};
            out.solutions.push_back(t);
        }
    }

    for (const auto& s : out.solutions) {
        ++out.complex_count;
        if (s.real) ++out.real_count;
    }
    return out;
}

namespace {

UniPoly ipow(const UniPoly& p, int n)
{
    UniPoly r = UniPoly::constant(Scalar(1));
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

bool proportional_mod(const std::array<UniPoly, 3>& a, const std::array<UniPoly, 3>& b, const UniPoly& P)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            UniPoly m = a[i] * b[j] - a[j] * b[i];
            if (P.degree() > 0) m = m % P;
            if (!m.is_zero()) return false;
        }
    return true;
}

}  // namespace

bool satisfies_exactly(const CommonTangent& t, const BiForm22& F)
{
    if (t.u && t.v) return F.eval(*t.u, *t.v).is_zero();
    if (t.fiber) {
        std::array<UniPoly, 3> fib;
        if (t.defining_poly.degree() > 0) {
            const Columns c = columns(F);
            fib = {c.a.poly, c.b.poly, c.c.poly};
        } else {
            if (!t.u && !t.u_at_infinity) return false;
            BinaryForm b = BiHomForm::from(F).fiber_at_wx(t.u ? *t.u : P1Point{Scalar(1), Scalar(0)});
            fib = {UniPoly::constant(b.coeff(2)), UniPoly::constant(b.coeff(1)), UniPoly::constant(b.coeff(0))};
        }
        return proportional_mod(fib, *t.fiber, t.defining_poly);
    }
    if (t.defining_poly.degree() <= 0) return false;
    UniPoly acc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (F(i, j).is_zero()) continue;
            acc += UniPoly::monomial(F(i, j), i) * ipow(t.vy, j) * ipow(t.vz, 2 - j);
        }
    return (acc % t.defining_poly).is_zero();
}

namespace {

std::array<Scalar, 4> times(const Quadric& q, const ProjPoint& p)
{
    std::array<Scalar, 4> r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!q(i, j).is_zero() && !p[j].is_zero()) r[i] += q(i, j) * p[j];
    return r;
}

Scalar apply_plane(const std::array<Scalar, 4>& h, const ProjPoint& p)
{
    Scalar s;
    for (int i = 0; i < 4; ++i) s += h[i] * p[i];
    return s;
}

bool proportional4(const std::array<Scalar, 4>& a, const std::array<Scalar, 4>& b)
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

/// Both spheres touch at p and the other line lies in the common tangent plane there.
void confirm_tangent_spheres(const Configuration& cfg, const ProjPoint& p, const ProjPoint& o1, const ProjPoint& o2)
{
    Quadric q1 = sphere_to_quadric(cfg.s1), q2 = sphere_to_quadric(cfg.s2);
    if (p.at_infinity()) throw ContractViolation("pencil vertex at infinity");
    if (!q1.value(p).is_zero() || !q2.value(p).is_zero()) throw ContractViolation("pencil vertex not on both spheres");
    auto h1 = times(q1, p), h2 = times(q2, p);
    if (!proportional4(h1, h2)) throw ContractViolation("spheres not tangent at the pencil vertex");
    if (!apply_plane(h1, o1).is_zero() || !apply_plane(h1, o2).is_zero())
        throw ContractViolation("other line not in the common tangent plane");
}

void confirm_reflection(const Configuration& cfg)
{
    auto [p, d] = cfg.lines.l1().spanning_points();
    auto [u, v] = cfg.lines.l2().spanning_points();
    Vec3 P = p.affine_part(), D = d.tail();
    if (!dot(D, u.tail()).is_zero() || !dot(D, v.tail()).is_zero())
        throw ContractViolation("transversals not perpendicular to l1");
    Vec3 c1 = cfg.s1.center;
    Vec3 foot = P + (dot(c1 - P, D) / dot(D, D)) * D;
    Vec3 mirrored = Scalar(2) * foot - c1;
    if (!(mirrored == cfg.s2.center) || cfg.s1.r2 != cfg.s2.r2)
        throw ContractViolation("spheres not exchanged by the reflection through l1");
}

bool has_real_point(const CurveClass& c)
{
    for (const auto& f : c.factors)
        if (f.real) return true;
    return false;
}

}  // namespace

ClassificationReport classify_configuration(const Configuration& cfg)
{
    if (!cfg.lines.skew()) throw GeometryError("lines intersect: reduce to planar problem");
    if (cfg.s1 == cfg.s2) throw GeometryError("spheres must be distinct");
    ClassificationReport rep;
    rep.mode = cfg.mode;
    auto F1 = phi(cfg.lines, sphere_to_quadric(cfg.s1));
    auto F2 = phi(cfg.lines, sphere_to_quadric(cfg.s2));
    if (!F1 || !F2) throw ContractViolation("sphere envelope vanished");
    rep.curve1 = *F1;
    rep.curve2 = *F2;
    rep.class1 = classify(*F1);
    rep.class2 = classify(*F2);

    const BiHomForm H1 = BiHomForm::from(*F1), H2 = BiHomForm::from(*F2);
    rep.common = gcd(H1, H2);
    if (rep.common.is_constant()) {
        rep.verdict = Verdict::finite;
        rep.tangents = enumerate_common_tangents(*F1, *F2, cfg.lines);
        return rep;
    }

    if (F1->projectively_equal(*F2)) {
        CommonComponent c;
        c.kind = CommonComponent::Kind::whole_curve;
        c.form = H1;
        c.real = has_real_point(rep.class1);
        rep.components.push_back(c);
    } else {
        const BinaryForm wx = rep.common.pure_wx_part(), yz = rep.common.pure_yz_part();
        const BiHomForm rest = exact_div(rep.common, BiHomForm::from_wx(wx) * BiHomForm::from_yz(yz));
        auto add_pencils = [&](const BinaryForm& f, CommonComponent::Kind kind) {
            if (f.degree == 0) return;
            auto roots = split_binary_form(f);
            if (!roots) throw ContractViolation("pure common factor does not split");
            for (const auto& r : *roots) {
                CommonComponent c;
                c.kind = kind;
                BinaryForm lin = BinaryForm::vanishing_at(r.point);
                c.form = kind == CommonComponent::Kind::pencil_l1 ? BiHomForm::from_wx(lin) : BiHomForm::from_yz(lin);
                c.point = r.point;
                c.real = is_real_point(r.point);
                rep.components.push_back(c);
            }
        };
        add_pencils(wx, CommonComponent::Kind::pencil_l1);
        add_pencils(yz, CommonComponent::Kind::pencil_l2);
        if (!rest.is_constant()) {
            if (rest.deg_wx != 1 || rest.deg_yz != 1) throw ContractViolation("common cubic factor");
            CommonComponent c;
            c.kind = CommonComponent::Kind::correspondence;
            c.form = rest;
            c.real = true;
            rep.components.push_back(c);
        }
    }

    const CommonComponent* first = nullptr;
    for (const auto& c : rep.components)
        if (c.real) {
            first = &c;
            break;
        }
    if (!first) {
        rep.verdict = Verdict::finite;
        rep.note = "common component without real points; it contributes no real tangents";
        return rep;
    }
    rep.verdict = Verdict::infinite;
    const LinePair& L = cfg.lines;
    for (const auto& c : rep.components) {
        if (!c.real) continue;
        switch (c.kind) {
        case CommonComponent::Kind::pencil_l1:
            confirm_tangent_spheres(cfg, L.point_on_l1(*c.point), L.c(), L.d());
            if (rep.tag == CaseTag::none)
                rep.tag = cfg.mode == Mode::affine ? CaseTag::affine_tangent_spheres : CaseTag::projective_tangent_spheres;
            break;
        case CommonComponent::Kind::pencil_l2:
            if (cfg.mode == Mode::projective) throw ContractViolation("pencil through a point at infinity");
            confirm_tangent_spheres(cfg, L.point_on_l2(*c.point), L.a(), L.b());
            if (rep.tag == CaseTag::none) rep.tag = CaseTag::affine_tangent_spheres;
            break;
        case CommonComponent::Kind::correspondence: {
            if (cfg.mode == Mode::projective) throw ContractViolation("ruling of a hyperbolic paraboloid");
            auto h1 = hyperboloid_axis_check(L, c.form, cfg.s1);
            auto h2 = hyperboloid_axis_check(L, c.form, cfg.s2);
            if (!h1.ok || !h2.ok) throw ContractViolation("correspondence fails the hyperboloid test: " + h1.reason + h2.reason);
            if (rep.tag == CaseTag::none) rep.tag = CaseTag::affine_hyperboloid;
            break;
        }
        case CommonComponent::Kind::whole_curve:
            if (cfg.mode == Mode::affine) throw ContractViolation("an affine sphere curve determines its sphere");
            confirm_reflection(cfg);
            if (rep.tag == CaseTag::none) rep.tag = CaseTag::projective_reflection;
            break;
        case CommonComponent::Kind::other: throw ContractViolation("unexpected common component");
        }
    }
    return rep;
}

std::vector<PluckerLine> sample_family(const Configuration& cfg, const CommonComponent& c, int n)
{
    std::vector<PluckerLine> out;
    const LinePair& L = cfg.lines;
    auto param = [](int j) { return P1Point{Scalar(j % 2 == 0 ? j / 2 : -(j + 1) / 2), Scalar(1)}; };
    for (int j = 0; static_cast<int>(out.size()) < n && j < 20 * n + 20; ++j) {
        switch (c.kind) {
        case CommonComponent::Kind::pencil_l1: out.push_back(transversal_through(L, *c.point, param(j))); break;
        case CommonComponent::Kind::pencil_l2: out.push_back(transversal_through(L, param(j), *c.point)); break;
        case CommonComponent::Kind::correspondence: {
            P1Point u = param(j);
            BinaryForm fib = c.form.fiber_at_wx(u);
            if (fib.is_zero()) break;
            P1Point v{-fib.coeff(0), fib.coeff(1)};
            if (cfg.mode == Mode::affine && (L.point_on_l1(u).at_infinity() || L.point_on_l2(v).at_infinity())) break;
            out.push_back(transversal_through(L, u, v));
            break;
        }
        case CommonComponent::Kind::whole_curve: {
            P1Point u = param(j);
            BinaryForm fib = c.form.fiber_at_wx(u);
            if (fib.is_zero() || fib.coeff(2).is_zero()) break;
            Scalar disc = quadratic_discriminant(fib);
            if (!disc.is_rational() || disc.sign() < 0) break;
            Scalar root = Scalar::sqrt_of(disc.to_rational());
            for (int sgn : {1, -1}) {
                if (static_cast<int>(out.size()) >= n) break;
                P1Point v{(-fib.coeff(1) + sgn * root) / (2 * fib.coeff(2)), Scalar(1)};
                out.push_back(transversal_through(L, u, v));
                if (disc.is_zero()) break;
            }
            break;
        }
        case CommonComponent::Kind::other: return out;
        }
    }
    return out;
}

Sphere recover_sphere_affine(const BiPoly& C, const Scalar& delta)
{
    if (delta.is_zero()) throw GeometryError("lines not skew (delta = 0)");
    const Scalar lead = C.coeff(2, 2);
    if (lead.is_zero()) throw GeometryError("not a sphere envelope: no x^2 z^2 term");
    const Scalar d = delta, dd = d * d;
    const BiPoly K = C * (4 * dd / lead);
    const Scalar A = K.coeff(2, 1) / (4 * d);   // b - a delta
    const Scalar B = -K.coeff(1, 2) / (4 * d);  // b + a delta
    const Scalar b = (A + B) / 2, a = (B - A) / (2 * d);
    const Scalar X = (K.coeff(2, 0) - A * A) / (1 + dd);  // (1+c)^2 - r^2
    const Scalar Z = (K.coeff(0, 2) - B * B) / (1 + dd);  // (1-c)^2 - r^2
    const Scalar c = (X - Z) / 4;
    const Scalar r2 = (1 + c) * (1 + c) - X;
    if (!r2.is_real() || r2.sign() <= 0) throw GeometryError("not a sphere envelope: r^2 <= 0");
    Sphere s({a, b, c}, r2);
    if (affine_sphere_curve(delta, s) != K) throw GeometryError("not a sphere envelope");
    return s;
}

BiPoly tangent_sphere_cubic(const Scalar& delta, const Scalar& x0, const Scalar& lambda)
{
    const Scalar d = delta, dd = d * d, l = lambda;
    BiPoly p;
    p.add_term(1, 2, dd);
    p.add_term(1, 1, d * (dd - 1) * l);
    p.add_term(1, 0, 1 + dd * (1 - l * l) + d * l * (1 + dd) * x0);
    p.add_term(0, 2, d * (l * (1 + dd) - d * x0));
    p.add_term(0, 1, d * (dd - 1) * l * x0);
    p.add_term(0, 0, 4 * d * l + (dd * l * l - dd - 1) * x0);
    return p;
}

namespace {

Sphere tangent_sphere(const Scalar& d, const Scalar& x0, const Scalar& l)
{
    Vec3 center{x0 - l * d, d * x0 - l, 1 + l * d * x0};
    return Sphere(center, l * l * (1 + d * d + d * d * x0 * x0));
}

Scalar square_root_or_adjoin(const Scalar& v, const char* what)
{
    if (auto r = v.sqrt()) return *r;
    if (v.is_rational()) return Scalar::sqrt_of(v.to_rational());
    throw GeometryError(std::string(what) + ": square root outside one quadratic extension");
}

}  // namespace

CubicRecovery recover_sphere_from_cubic(const BiPoly& K, const Scalar& delta)
{
    if (delta.is_zero()) throw GeometryError("lines not skew (delta = 0)");
    const Scalar lead = K.coeff(1, 2);
    if (lead.is_zero()) throw GeometryError("not a tangent-sphere cubic: no x z^2 term");
    const Scalar d = delta, dd = d * d;
    const BiPoly N = K * (dd / lead);
    std::vector<std::pair<Scalar, Scalar>> candidates;  // (x0, lambda)
    if (dd != Scalar(1)) {
        const Scalar l = N.coeff(1, 1) / (d * (dd - 1));
        if (l.is_zero()) throw GeometryError("not a tangent-sphere cubic: lambda = 0");
        const Scalar x0 = (N.coeff(1, 0) - 1 - dd * (1 - l * l)) / (d * l * (1 + dd));
        candidates.push_back({x0, l});
    } else {
        // delta = -1 is the delta = 1 system with lambda replaced by -lambda
        const Scalar alpha = N.coeff(0, 2), beta = N.coeff(1, 0), gamma = N.coeff(0, 0);
        const Scalar disc = alpha * alpha + 3 * beta - 6;
        const Scalar root = square_root_or_adjoin(disc, "cubic recovery");
        for (int sgn : {1, -1}) {
            const Scalar lp = (alpha + sgn * root) / 3;
            const Scalar x0 = (-alpha + 2 * sgn * root) / 3;
            if (4 * lp + (lp * lp - 2) * x0 == gamma) candidates.push_back({x0, d * lp});
            if (disc.is_zero()) break;
        }
        if (candidates.size() > 1) throw ContractViolation("two cubic recoveries");
    }
    for (const auto& [x0, l] : candidates) {
        if (l.is_zero()) continue;
        if (tangent_sphere_cubic(d, x0, l) != N) continue;
        return {x0, l, tangent_sphere(d, x0, l)};
    }
    throw GeometryError("not a tangent-sphere cubic");
}

std::vector<Sphere> recover_sphere_projective(const BiPoly& C, const Vec3& u, const Vec3& v)
{
    if (!u[2].is_zero() || !v[1].is_zero()) throw GeometryError("directions must have the form (u1,u2,0), (v1,0,v3)");
    if (u[1].is_zero() || v[2].is_zero()) throw GeometryError("u2 and v3 must be nonzero");
    const Scalar lead = C.coeff(2, 2);
    if (lead.is_zero()) throw GeometryError("not a sphere envelope: no x^2 z^2 term");
    const Scalar &u1 = u[0], &u2 = u[1], &v1 = v[0], &v3 = v[2];
    const BiPoly K = C * (v3 * v3 / lead);
    std::vector<Sphere> out;
    auto accept = [&](const Vec3& center, const Scalar& r2) {
        if (!r2.is_real() || r2.sign() <= 0) throw GeometryError("not a sphere envelope: r^2 <= 0");
        Sphere s(center, r2);
        if (projective_sphere_curve(u, v, s) != K) throw GeometryError("not a sphere envelope");
        out.push_back(s);
    };
    if (!u1.is_zero() || !v1.is_zero()) {
        // linear in (a, b, c) from the x z^2, x z and x coefficients
        const Scalar m[3][3] = {{-2 * v3 * v3, Scalar(0), 2 * v1 * v3},
                                {Scalar(0), 2 * u2 * v1, 2 * u1 * v3},
                                {-2 * u2 * u2, 2 * u1 * u2, Scalar(0)}};
        const Scalar rhs[3] = {K.coeff(1, 2), K.coeff(1, 1), K.coeff(1, 0)};
        auto det3 = [](const Scalar x[3][3]) {
            return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
                   x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
        };
        const Scalar D = det3(m);
        if (D.is_zero()) throw ContractViolation("projective recovery system singular");
        Vec3 abc;
        for (int col = 0; col < 3; ++col) {
            Scalar t[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t[i][j] = j == col ? rhs[i] : m[i][j];
            abc[col] = det3(t) / D;
        }
        const Scalar &a = abc[0], &b = abc[1], &c = abc[2];
        const Scalar r2 = ((b * b + c * c) * u1 * u1 - 2 * a * b * u1 * u2 + (a * a + c * c) * u2 * u2 - K.coeff(0, 0)) /
                          (u1 * u1 + u2 * u2);
        accept(abc, r2);
        return out;
    }
    const Scalar a = -K.coeff(1, 0) / (2 * u2 * u2);
    const Scalar gamma = K.coeff(0, 2) / (v3 * v3) - a * a;      // b^2 - r^2
    const Scalar beta = -K.coeff(0, 1) / (2 * u2 * v3);          // b c
    const Scalar alpha = K.coeff(0, 0) / (u2 * u2) - a * a;      // c^2 - r^2
    const Scalar disc = (alpha - gamma) * (alpha - gamma) + 4 * beta * beta;
    const Scalar r2 = (-alpha - gamma + square_root_or_adjoin(disc, "projective recovery")) / 2;
    const Scalar b2 = gamma + r2, c2 = alpha + r2;
    Scalar b, c;
    if (!b2.is_zero()) {
        b = square_root_or_adjoin(b2, "projective recovery");
        c = beta / b;
    } else {
        c = square_root_or_adjoin(c2, "projective recovery");
    }
    accept({a, b, c}, r2);
    if (!b.is_zero() || !c.is_zero()) accept({a, -b, -c}, r2);
    return out;
}

namespace {

/// Basis of the kernel of a matrix with 10 columns.
std::vector<std::array<Scalar, 10>> kernel10(std::vector<std::array<Scalar, 10>> rows)
{
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < 10 && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        const Scalar inv = Scalar(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            const Scalar f = rows[i][col];
            for (int j = 0; j < 10; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<std::array<Scalar, 10>> basis;
    for (int free = 0; free < 10; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::array<Scalar, 10> v{};
        v[free] = Scalar(1);
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(v);
    }
    return basis;
}

std::array<Scalar, 10> quadric_row(const ProjPoint& X)
{
    static const int idx[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    std::array<Scalar, 10> r;
    for (int k = 0; k < 10; ++k) {
        const int i = idx[k][0], j = idx[k][1];
        r[k] = X[i] * X[j] * (i == j ? 1 : 2);
    }
    return r;
}

}  // namespace

HyperboloidCheck hyperboloid_axis_check(const LinePair& pair, const BiHomForm& corr, const Sphere& s)
{
    HyperboloidCheck out;
    if (corr.deg_wx != 1 || corr.deg_yz != 1) {
        out.reason = "not a (1,1) correspondence";
        return out;
    }
    std::vector<PluckerLine> lines;
    std::vector<std::array<Scalar, 10>> rows;
    for (int j = 0; lines.size() < 3 && j < 12; ++j) {
        P1Point u = j == 0 ? P1Point{Scalar(1), Scalar(0)} : P1Point{Scalar(j - 1), Scalar(1)};
        BinaryForm fib = corr.fiber_at_wx(u);
        if (fib.is_zero()) continue;
        P1Point v{-fib.coeff(0), fib.coeff(1)};
        ProjPoint P = pair.point_on_l1(u), R = pair.point_on_l2(v);
        lines.push_back(PluckerLine::from_points(P, R));
        for (const ProjPoint& X : {P, R, P + R}) rows.push_back(quadric_row(X));
    }
    auto ker = kernel10(rows);
    if (lines.size() < 3 || ker.size() != 1) {
        out.reason = "degenerate ruled surface";
        return out;
    }
    const Quadric H = Quadric::from_entries(ker[0]);
    out.surface = H;

    Scalar M[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = H(i + 1, j + 1);
    const Vec3 q{H(0, 1), H(0, 2), H(0, 3)};
    const Scalar det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det.is_zero()) {
        out.reason = "paraboloid: no center";
        return out;
    }
    const Scalar tr = M[0][0] + M[1][1] + M[2][2];
    const Scalar m2 = M[0][0] * M[1][1] - M[0][1] * M[1][0] + M[0][0] * M[2][2] - M[0][2] * M[2][0] +
                      M[1][1] * M[2][2] - M[1][2] * M[2][1];
    const UniPoly chi{-det, m2, -tr, Scalar(1)};
    const UniPoly rep = gcd(chi, chi.derivative());
    if (rep.degree() == 0) {
        out.reason = "not a surface of revolution";
        return out;
    }
    if (rep.degree() == 2) {
        out.reason = "sphere, not a ruled surface";
        return out;
    }
    const Scalar mu = -rep.coeff(0) / rep.coeff(1);
    for (int i = 0; i < 3; ++i) {
        Vec3 row{M[i][0], M[i][1], M[i][2]};
        row[i] -= mu;
        if (!is_zero(row)) {
            out.axis = row;
            break;
        }
    }
    // center = -M^{-1} q via the adjugate
    Vec3 c0{M[0][0], M[1][0], M[2][0]}, c1{M[0][1], M[1][1], M[2][1]}, c2{M[0][2], M[1][2], M[2][2]};
    Vec3 adj_q{dot(cross(c1, c2), q), dot(cross(c2, c0), q), dot(cross(c0, c1), q)};
    out.center = (Scalar(-1) / det) * adj_q;
    if (!is_zero(cross(s.center - out.center, out.axis))) {
        out.reason = "sphere center off the axis";
        return out;
    }
    const Quadric S = sphere_to_quadric(s);
    for (const auto& l : lines)
        if (!tangency_value(S, l).is_zero()) {
            out.reason = "rulings not tangent to the sphere";
            return out;
        }
    out.ok = true;
    return out;
}

}  // namespace linetan
