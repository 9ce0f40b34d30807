#include "doctest.h"

#include "linetan/configurations.hpp"
#include "linetan/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace linetan;
using namespace testing_support;

namespace {

void check_family_tangent(const Configuration& cfg, const ClassificationReport& rep)
{
    const Quadric q1 = sphere_to_quadric(cfg.s1), q2 = sphere_to_quadric(cfg.s2);
    for (const auto& c : rep.components) {
        if (!c.real) continue;
        auto lines = sample_family(cfg, c, 20);
        CHECK(lines.size() == 20);
        for (const auto& l : lines) {
            CHECK(tangency_value(q1, l).is_zero());
            CHECK(tangency_value(q2, l).is_zero());
        }
    }
}

Scalar small_rational(Rng& rng)
{
    return Scalar(Rational(rng.nonzero(-9, 9), rng.integer(50, 200)));
}

}  // namespace

TEST_CASE("tangent spheres with l2 in the tangent plane")
{
    Configuration cfg = fixture_affine_tangent();
    CHECK(cfg.mode == Mode::affine);
    auto rep = classify_configuration(cfg);
    CHECK(rep.verdict == Verdict::infinite);
    CHECK(rep.tag == CaseTag::affine_tangent_spheres);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].kind == CommonComponent::Kind::pencil_l1);
    // the pencil vertex is the origin
    CHECK(cfg.lines.point_on_l1(*rep.components[0].point) == apt(q(0), q(0), q(0)));
    check_family_tangent(cfg, rep);
}

TEST_CASE("rulings of a hyperboloid of revolution")
{
    Configuration cfg = fixture_affine_hyperboloid();
    auto rep = classify_configuration(cfg);
    CHECK(rep.verdict == Verdict::infinite);
    CHECK(rep.tag == CaseTag::affine_hyperboloid);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].kind == CommonComponent::Kind::correspondence);
    check_family_tangent(cfg, rep);
}

TEST_CASE("reflection pair in projective position")
{
    Configuration cfg = fixture_projective_reflection();
    CHECK(cfg.mode == Mode::projective);
    auto rep = classify_configuration(cfg);
    CHECK(rep.verdict == Verdict::infinite);
    CHECK(rep.tag == CaseTag::projective_reflection);
    check_family_tangent(cfg, rep);
}

TEST_CASE("tangent spheres with l2 at infinity")
{
    Configuration cfg = fixture_projective_tangent();
    CHECK(cfg.mode == Mode::projective);
    auto rep = classify_configuration(cfg);
    CHECK(rep.verdict == Verdict::infinite);
    CHECK(rep.tag == CaseTag::projective_tangent_spheres);
    check_family_tangent(cfg, rep);
}

TEST_CASE("line at infinity given first is moved to second place")
{
    Configuration c = fixture_projective_tangent();
    Configuration flipped = Configuration::make(c.lines.swapped(), c.s1, c.s2);
    CHECK(flipped.mode == Mode::projective);
    CHECK(classify_configuration(flipped).tag == CaseTag::projective_tangent_spheres);
}

TEST_CASE("perturbed fixtures become finite")
{
    Rng rng(81);
    const Configuration fixtures[] = {fixture_affine_tangent(), fixture_affine_hyperboloid(),
                                      fixture_projective_reflection(), fixture_projective_tangent()};
    for (const auto& cfg : fixtures)
        for (int k = 0; k < 3; ++k) {
            Vec3 c = cfg.s2.center;
            c[k % 3] += small_rational(rng);
            auto rep = classify_configuration(with_spheres(cfg, cfg.s1, Sphere(c, cfg.s2.r2)));
            CHECK(rep.verdict == Verdict::finite);
            auto rep2 = classify_configuration(with_spheres(cfg, cfg.s1, Sphere(cfg.s2.center, cfg.s2.r2 + small_rational(rng) * small_rational(rng))));
            CHECK(rep2.verdict == Verdict::finite);
        }
}

TEST_CASE("verdicts are invariant under similarities and sphere exchange")
{
    Rng rng(82);
    const Configuration fixtures[] = {fixture_affine_tangent(), fixture_affine_hyperboloid()};
    for (const auto& cfg : fixtures) {
        auto base = classify_configuration(cfg);
        for (int n = 0; n < 4; ++n) {
            auto moved = transformed(cfg, random_rotation(rng), Scalar(rng.positive_rational(5, 3)), random_vec(rng));
            auto rep = classify_configuration(moved);
            CHECK(rep.verdict == base.verdict);
            CHECK(rep.tag == base.tag);
        }
        auto swapped = classify_configuration(with_spheres(cfg, cfg.s2, cfg.s1));
        CHECK(swapped.verdict == base.verdict);
        CHECK(swapped.tag == base.tag);
    }
    for (const auto& cfg : {fixture_projective_reflection(), fixture_projective_tangent()}) {
        auto base = classify_configuration(cfg);
        auto swapped = classify_configuration(with_spheres(cfg, cfg.s2, cfg.s1));
        CHECK(swapped.verdict == base.verdict);
        CHECK(swapped.tag == base.tag);
    }
    for (int n = 0; n < 4; ++n) {
        Configuration cfg = random_configuration(rng);
        auto a = classify_configuration(cfg);
        auto b = classify_configuration(transformed(cfg, random_rotation(rng), q(2), random_vec(rng)));
        CHECK(a.verdict == Verdict::finite);
        CHECK(b.verdict == Verdict::finite);
        CHECK(a.tangents->real_count == b.tangents->real_count);
    }
}

TEST_CASE("intersecting lines and equal spheres are rejected")
{
    auto meet = LinePair::from_points(apt(q(0), q(0), q(0)), dir(q(1), q(0), q(0)), apt(q(0), q(0), q(0)),
                                      dir(q(0), q(1), q(0)));
    Sphere s({q(0), q(0), q(3)}, q(1)), t({q(1), q(0), q(3)}, q(1));
    CHECK_THROWS_WITH_AS(Configuration::make(meet, s, t), "lines intersect: reduce to planar problem", GeometryError);
    CHECK_THROWS_AS(Configuration::make(fixture_affine_tangent().lines, s, s), GeometryError);
}

TEST_CASE("generic configurations: enumeration against the sign-grid oracle")
{
    Rng rng(83);
    for (int n = 0; n < 12; ++n) {
        Configuration cfg = random_configuration(rng);
        auto rep = classify_configuration(cfg);
        REQUIRE(rep.verdict == Verdict::finite);
        const auto& T = *rep.tangents;
        CHECK(T.resultant.degree == 8);
        CHECK(T.total_multiplicity == 8);
        CHECK(T.complex_count <= 8);
        int mult = 0;
        for (const auto& s : T.solutions) {
            CHECK(satisfies_exactly(s, rep.curve1));
            CHECK(satisfies_exactly(s, rep.curve2));
            if (!s.shares_fiber) mult += s.resultant_multiplicity;
        }
        CHECK(mult <= 8);

        const double L = 40;
        int ours = 0;
        for (const auto& s : T.solutions)
            if (s.real && !s.u_at_infinity && std::fabs(s.u_approx.real()) < L) ++ours;
        auto grid = SignGridOracle(rep.curve1, rep.curve2).intersections(-L, L, 80000);
        CHECK(static_cast<int>(grid.size()) == ours);
        for (double t : grid) {
            bool matched = false;
            for (const auto& s : T.solutions)
                if (s.real && std::fabs(s.u_approx.real() - t) < 1e-6) matched = true;
            CHECK(matched);
        }
    }
}

TEST_CASE("exact enumeration on rational intersections")
{
    // C2 = C1 + (x - 2w) w y^2 shares no component with C1
    Rng rng(84);
    for (int n = 0; n < 10; ++n) {
        BiForm22 C1 = rng.biform();
        BiForm22 shift;
        shift(1, 2) = q(-2);  // w x y^2 with coefficient -2 ... (x - 2w) w = wx - 2 w^2
        shift(2, 2) = q(-2);
        shift(1, 2) = q(1);
        BiForm22 C2 = C1 + shift;
        if (!gcd(BiHomForm::from(C1), BiHomForm::from(C2)).is_constant()) continue;
        auto T = enumerate_common_tangents(C1, C2);
        CHECK(T.total_multiplicity == 8);
        for (const auto& s : T.solutions) {
            CHECK(satisfies_exactly(s, C1));
            CHECK(satisfies_exactly(s, C2));
        }
    }
    // a common component is refused
    BiForm22 F = asymmetric_normal_form(q(4), q(9));
    CHECK_THROWS_AS(enumerate_common_tangents(F, F * q(3)), GeometryError);
}

TEST_CASE("affine sphere recovery")
{
    Rng rng(85);
    for (int n = 0; n < 100; ++n) {
        Sphere s = random_sphere(rng);
        Scalar delta = Scalar(rng.nonzero_rational(5, 3));
        BiPoly C = affine_sphere_curve(delta, s);
        CHECK(recover_sphere_affine(C, delta) == s);
        CHECK(recover_sphere_affine(C * q(7), delta) == s);
    }
    // through phi on the normal pair (an independent expansion)
    Sphere s({q(1), q(2), q(3)}, q(4));
    auto F = phi(affine_normal_pair(q(1)), sphere_to_quadric(s));
    REQUIRE(F);
    CHECK(recover_sphere_affine(F->dehomogenized(), q(1)) == s);
    BiPoly junk = affine_sphere_curve(q(1), s);
    junk.add_term(1, 1, q(1));
    CHECK_THROWS_AS(recover_sphere_affine(junk, q(1)), GeometryError);
}

TEST_CASE("recovery from the residual cubic")
{
    auto residual = [](const Scalar& delta, const Scalar& x0, const Scalar& lambda) {
        const Scalar d = delta;
        Vec3 c{x0 - lambda * d, d * x0 - lambda, 1 + lambda * d * x0};
        Sphere s(c, lambda * lambda * (1 + d * d + d * d * x0 * x0));
        BiPoly C = affine_sphere_curve(delta, s);
        BiPoly lin = BiPoly::var(Var::x) - BiPoly::constant(x0);
        auto K = exact_divide(C, lin);
        REQUIRE(K);
        return std::make_pair(*K, s);
    };
    SUBCASE("delta = 2, x0 = 1, lambda = 3")
    {
        auto [K, s] = residual(q(2), q(1), q(3));
        CHECK(K == tangent_sphere_cubic(q(2), q(1), q(3)) * q(4));
        auto r = recover_sphere_from_cubic(K, q(2));
        CHECK(r.x0 == q(1));
        CHECK(r.lambda == q(3));
        CHECK(r.sphere == s);
    }
    SUBCASE("random, including delta = 1 and delta = -1")
    {
        Rng rng(86);
        for (int n = 0; n < 100; ++n) {
            Scalar delta = n % 3 == 0 ? q(1) : n % 3 == 1 ? q(-1) : Scalar(rng.nonzero_rational(5, 3));
            Scalar x0 = rng.scalar(5, 3), lambda = Scalar(rng.nonzero_rational(5, 3));
            auto [K, s] = residual(delta, x0, lambda);
            auto r = recover_sphere_from_cubic(K, delta);
            CHECK(r.x0 == x0);
            CHECK(r.lambda == lambda);
            CHECK(r.sphere == s);
        }
    }
    SUBCASE("delta = 1 boundary with a single root branch")
    {
        // alpha^2 + 3 beta - 6 = (lambda + x0)^2 vanishes for x0 = -lambda
        for (const Scalar& lambda : {q(2), q(-1, 3), q(5, 2)}) {
            auto [K, s] = residual(q(1), -lambda, lambda);
            Scalar alpha = K.coeff(0, 2) / K.coeff(1, 2), beta = K.coeff(1, 0) / K.coeff(1, 2);
            CHECK((alpha * alpha + 3 * beta - 6).is_zero());
            auto r = recover_sphere_from_cubic(K, q(1));
            CHECK(r.lambda == lambda);
            CHECK(r.sphere == s);
        }
    }
    SUBCASE("delta = 1 with two root branches: gamma decides")
    {
        auto [K, s] = residual(q(1), q(1), q(2));
        Scalar alpha = K.coeff(0, 2) / K.coeff(1, 2), beta = K.coeff(1, 0) / K.coeff(1, 2);
        CHECK((alpha * alpha + 3 * beta - 6).sign() > 0);
        CHECK(recover_sphere_from_cubic(K, q(1)).sphere == s);
    }
}

TEST_CASE("projective sphere recovery")
{
    Rng rng(87);
    SUBCASE("u1 nonzero: unique")
    {
        Vec3 u{q(1), q(1), q(0)}, v{q(0), q(0), q(1)};
        for (int n = 0; n < 50; ++n) {
            Sphere s = random_sphere(rng);
            auto r = recover_sphere_projective(projective_sphere_curve(u, v, s) * q(-3), u, v);
            REQUIRE(r.size() == 1);
            CHECK(r[0] == s);
        }
        Vec3 u2{q(0), q(2), q(0)}, v2{q(3), q(0), q(1)};
        Sphere s = random_sphere(rng);
        auto r = recover_sphere_projective(projective_sphere_curve(u2, v2, s), u2, v2);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == s);
    }
    SUBCASE("perpendicular case: the reflection pair with the larger root")
    {
        Vec3 u{q(0), q(1), q(0)}, v{q(0), q(0), q(1)};
        auto r = recover_sphere_projective(projective_sphere_curve(u, v, Sphere({q(0), q(2), q(1)}, q(1))), u, v);
        REQUIRE(r.size() == 2);
        CHECK(r[0] == Sphere({q(0), q(2), q(1)}, q(1)));
        CHECK(r[1] == Sphere({q(0), q(-2), q(-1)}, q(1)));
        for (int n = 0; n < 30; ++n) {
            Sphere s = random_sphere(rng);
            if (s.center[1].is_zero() && s.center[2].is_zero()) continue;
            auto c = recover_sphere_projective(projective_sphere_curve(u, v, s), u, v);
            REQUIRE(c.size() == 2);
            Sphere mirror({s.center[0], -s.center[1], -s.center[2]}, s.r2);
            CHECK(((c[0] == s && c[1] == mirror) || (c[0] == mirror && c[1] == s)));
            // the other root of (alpha + r^2)(gamma + r^2) = beta^2 is smaller
            const Scalar &b = s.center[1], &cc = s.center[2];
            Scalar alpha = cc * cc - s.r2, gamma = b * b - s.r2, beta = b * cc;
            Scalar other = -alpha - gamma - s.r2;
            CHECK(((alpha + other) * (gamma + other) - beta * beta).is_zero());
            CHECK(other <= s.r2);
        }
    }
    SUBCASE("degenerate beta = 0, alpha = gamma")
    {
        Vec3 u{q(0), q(1), q(0)}, v{q(0), q(0), q(1)};
        auto r = recover_sphere_projective(projective_sphere_curve(u, v, Sphere({q(3), q(0), q(0)}, q(2))), u, v);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == Sphere({q(3), q(0), q(0)}, q(2)));
    }
}

TEST_CASE("hyperboloid axis check")
{
    auto ruled = [](const LinePair& pair, const Quadric& H) {
        // transversals inside H: the polar pairing of their endpoints vanishes
        BiPoly p;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                P1Point u{Scalar(i), Scalar(1 - i)}, v{Scalar(j), Scalar(1 - j)};
                p.add_term(1 - i, 1 - j, H.bilinear(pair.point_on_l1(u), pair.point_on_l2(v)));
            }
        return BiHomForm{p, 1, 1};
    };
    auto hyperboloid = [](const Scalar& A, const Scalar& B) {
        // x^2/A + y^2/B - z^2 = 1
        Mat4 m{};
        m[0][0] = q(-1);
        m[1][1] = Scalar(1) / A;
        m[2][2] = Scalar(1) / B;
        m[3][3] = q(-1);
        return Quadric(m);
    };
    SUBCASE("revolution")
    {
        Configuration cfg = fixture_affine_hyperboloid();
        BiHomForm f = ruled(cfg.lines, hyperboloid(q(1), q(1)));
        auto h = hyperboloid_axis_check(cfg.lines, f, cfg.s1);
        CHECK(h.ok);
        CHECK(is_zero(cross(h.axis, Vec3{q(0), q(0), q(1)})));
        CHECK(is_zero(h.center));
        CHECK(hyperboloid_axis_check(cfg.lines, f, cfg.s2).ok);
        CHECK_FALSE(hyperboloid_axis_check(cfg.lines, f, Sphere({q(1), q(0), q(0)}, q(1))).ok);
        CHECK_FALSE(hyperboloid_axis_check(cfg.lines, f, Sphere({q(0), q(0), q(0)}, q(2))).ok);
    }
    SUBCASE("not a surface of revolution")
    {
        auto pair = LinePair::from_points(apt(q(1), q(0), q(0)), dir(q(0), q(2), q(1)), apt(q(-1), q(0), q(0)),
                                          dir(q(0), q(-2), q(1)));
        auto h = hyperboloid_axis_check(pair, ruled(pair, hyperboloid(q(1), q(4))), Sphere({q(0), q(0), q(0)}, q(1)));
        CHECK_FALSE(h.ok);
        CHECK(h.reason == "not a surface of revolution");
    }
    SUBCASE("hyperbolic paraboloid")
    {
        Configuration cfg = fixture_projective_reflection();
        BiPoly p;
        p.add_term(1, 1, q(1));
        p.add_term(0, 0, q(2));
        p.add_term(1, 0, q(1));
        auto h = hyperboloid_axis_check(cfg.lines, BiHomForm{p, 1, 1}, cfg.s1);
        CHECK_FALSE(h.ok);
        CHECK(h.reason == "paraboloid: no center");
    }
}
