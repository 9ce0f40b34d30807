#include "doctest.h"

#include "linetan/errors.hpp"
#include "linetan/fiberfamilies.hpp"
#include "support.hpp"
#include "oracles.hpp"
#include "printed_component.hpp"

using namespace linetan;
using namespace testing_support;

namespace {

struct Params {
    Scalar s, t;
};

const Params kSampled[] = {{q(4), q(9)}, {q(9), q(25)}, {q(1, 4), q(1, 9)}};

Scalar root_of(const Scalar& s)
{
    auto r = s.sqrt();
    REQUIRE(r);
    return *r;
}

}  // namespace

TEST_CASE("the (k,l) table matches the reference output")
{
    Rng rng(71);
    for (int n = 0; n < 40; ++n) {
        Scalar s = rng.scalar(9, 4), t = rng.scalar(9, 4);
        KLTable tab = kl_quadratic_table(s, t);
        for (int i = 0; i < 3; ++i) {
            const auto& row = tab.rows[i];
            CHECK(row.coeffs[0] == printed_table_value(i, s, t, q(1), q(0)));
            CHECK(row.coeffs[2] == printed_table_value(i, s, t, q(0), q(1)));
            CHECK(row.eval(q(2), q(-3)) == printed_table_value(i, s, t, q(2), q(-3)));
        }
        CHECK(tab.excluded == excluded_factor(s, t).has_value());
    }
}

TEST_CASE("the table rows factor over the extension")
{
    SUBCASE("s = 4 gives (3k + l)(k - l)")
    {
        KLTable tab = kl_quadratic_table(q(4), q(9));
        const auto& row = tab.rows[1];
        REQUIRE(row.factors.size() == 2);
        for (const Scalar& k : {q(1), q(-2), q(3, 7)})
            for (const Scalar& l : {q(1), q(5), q(-1, 3)}) {
                Scalar prod = row.lead;
                for (const auto& f : row.factors) prod *= f.k * k + f.l * l;
                CHECK(prod == (3 * k + l) * (k - l));
            }
        bool has_plus = false, has_minus = false;
        for (const auto& f : row.factors) {
            has_plus = has_plus || f.k == 3 * f.l;
            has_minus = has_minus || f.k == -f.l;
        }
        CHECK(has_plus);
        CHECK(has_minus);
    }
    SUBCASE("printed factorization ((sqrt s + 1)k + l)((sqrt s - 1)k - l)")
    {
        for (const auto& p : kSampled) {
            const Scalar r = root_of(p.s);
            KLTable tab = kl_quadratic_table(p.s, p.t);
            for (const Scalar& k : {q(1), q(-2), q(3, 7)})
                for (const Scalar& l : {q(1), q(5)}) {
                    CHECK(tab.rows[1].eval(k, l) == ((r + 1) * k + l) * ((r - 1) * k - l));
                    for (const auto& row : tab.rows) {
                        REQUIRE(row.factors.size() == 2);
                        Scalar prod = row.lead;
                        for (const auto& f : row.factors) prod *= f.k * k + f.l * l;
                        CHECK(prod == row.eval(k, l));
                    }
                }
        }
    }
    SUBCASE("an irrational discriminant factors in a quadratic extension")
    {
        KLTable tab = kl_quadratic_table(q(2), q(3));
        const auto& row = tab.rows[1];
        REQUIRE(row.factors.size() == 2);
        Scalar prod = row.lead;
        for (const auto& f : row.factors) prod *= f.k * q(2) + f.l * q(1);
        CHECK(prod == row.eval(q(2), q(1)));
    }
}

TEST_CASE("real linear factors follow the discriminant signs")
{
    Rng rng(72);
    for (int n = 0; n < 60; ++n) {
        Scalar s = rng.scalar(9, 4), t = rng.scalar(9, 4);
        if (excluded_factor(s, t)) continue;
        KLTable tab = kl_quadratic_table(s, t);
        // discriminants 4(s-1)^2 st, 4s, 4(s-1)^2 t
        int expected = 2 * ((s * t).sign() > 0) + 2 * (s.sign() > 0) + 2 * (t.sign() > 0);
        int got = 0;
        for (const auto& row : tab.rows) got += row.real_factors ? 2 : 0;
        CHECK(got == expected);
    }
    KLTable pos = kl_quadratic_table(q(4), q(9));
    int got = 0;
    for (const auto& row : pos.rows) got += row.real_factors ? 2 : 0;
    CHECK(got == 6);
}

TEST_CASE("excluded parameters are flagged")
{
    CHECK(kl_quadratic_table(q(4), q(4)).excluded);
    CHECK(kl_quadratic_table(q(4), q(4)).excluded_reason == "s - t = 0");
    CHECK(kl_quadratic_table(q(1), q(9)).excluded_reason == "s - 1 = 0");
    CHECK(*excluded_factor(q(0), q(2)) == "s = 0");
    CHECK(*excluded_factor(q(3), q(1)) == "t - 1 = 0");
    CHECK_FALSE(excluded_factor(q(4), q(9)));
    CHECK_THROWS_WITH_AS(conic_f2_build(q(1), q(9), 1), "excluded parameters: s - 1 = 0", GeometryError);
    CHECK_THROWS_WITH_AS(conic_f2_build(q(4), q(4), 1), "excluded parameters: s - t = 0", GeometryError);
    CHECK_THROWS_AS(conic_f2_build(q(2), q(9), 1), GeometryError);
    try {
        conic_f2_build(q(2), q(9), 1);
    } catch (const GeometryError& e) {
        CHECK(std::string(e.what()).rfind("extension required", 0) == 0);
    }
}

TEST_CASE("the explicit point p")
{
    Rng rng(73);
    std::vector<Params> params(std::begin(kSampled), std::end(kSampled));
    for (int n = 0; n < 20; ++n) {
        Scalar r = rng.nonzero_rational(7, 3), t = rng.scalar(9, 4);
        if (excluded_factor(r * r, t)) continue;
        params.push_back({r * r, t});
    }
    const LinePair pair = canonical_projective_pair();
    for (const auto& p : params) {
        const Scalar r = root_of(p.s);
        QuadricCoords x = explicit_point_p(p.s, p.t);
        CHECK(satisfies_printed_generators(p.s, p.t, x));
        for (const Scalar& v : f2_generator_values(p.s, p.t, x)) CHECK(v.is_zero());
        CHECK(conic_f2_build(p.s, p.t, 1).satisfies(x));

        BiForm22 F = envelope_form(pair, Quadric::from_entries(x));
        // w^2 z^2 is grid entry (2, 0)
        CHECK(F(2, 0) == explicit_p_coefficient(p.s));
        CHECK(F(2, 0) == -4 * p.s * (r - 1) * (r - 1) * (r + 1) * (r + 1));
        CHECK(F.projectively_equal(asymmetric_normal_form(p.s, p.t)));
    }
    BiForm22 F = envelope_form(pair, Quadric::from_entries(explicit_point_p(q(4), q(9))));
    CHECK(F(2, 0) == q(-144));
}

TEST_CASE("branch conics: constraints, parameterization, excluded points")
{
    for (const auto& p : kSampled)
        for (int branch : {1, -1}) {
            ConicF2 c = conic_f2_build(p.s, p.t, branch);
            CHECK(c.linear.size() == 7);
            CHECK(linear_rank(c.linear) == 7);
            for (int i = -3; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    QuadricCoords x = c.point({q(i), q(j)});
                    CHECK(c.satisfies(x));
                    CHECK(satisfies_printed_generators(p.s, p.t, x));
                    const bool e2 = is_E2(Quadric::from_entries(x));
                    CHECK(e2 == (i == 0));
                    CHECK_FALSE(is_E3(Quadric::from_entries(x)));
                }
            QuadricCoords k0 = c.point({q(1), q(0)});
            CHECK(k0[8].is_zero());
            CHECK(is_E3(Quadric::from_entries(k0)));
            QuadricCoords m0 = c.point({q(0), q(1)});
            CHECK(is_E2(Quadric::from_entries(m0)));
        }
}

TEST_CASE("branch conics at fixed parameters are disjoint")
{
    for (const auto& p : kSampled) {
        ConicF2 c1 = conic_f2_build(p.s, p.t, 1), c2 = conic_f2_build(p.s, p.t, -1);
        auto [k1, l1] = c1.kl_line();
        auto [k2, l2] = c2.kl_line();
        CHECK_FALSE((k1 * l2 - k2 * l1).is_zero());
        std::vector<QuadricCoords> both = c1.linear;
        both.insert(both.end(), c2.linear.begin(), c2.linear.end());
        CHECK(linear_rank(both) > 7);
        for (int i = -3; i <= 3; ++i) {
            QuadricCoords x = c1.point({q(i), q(2)});
            CHECK_FALSE(c2.satisfies(x));
        }
    }
}

TEST_CASE("sampled conic points lie in the fiber of the normal form")
{
    for (const auto& p : kSampled)
        for (int branch : {1, -1}) {
            ConicF2 c = conic_f2_build(p.s, p.t, branch);
            ConicVerification rep = conic_sample_and_verify(c, asymmetric_normal_form(p.s, p.t), 25);
            CHECK(rep.samples == 25);
            CHECK(rep.verified());
            CHECK(rep.failures.empty());
            CHECK(rep.degenerate.size() == 2);
            CHECK(rep.witnesses == 23);
        }
    // the wrong curve is rejected
    ConicF2 c = conic_f2_build(q(4), q(9), 1);
    ConicVerification bad = conic_sample_and_verify(c, asymmetric_normal_form(q(9), q(4)), 10);
    CHECK_FALSE(bad.verified());
}

TEST_CASE("fiber membership")
{
    const LinePair pair = canonical_projective_pair();
    SUBCASE("a sphere against its own curve and its reflection")
    {
        for (const Scalar& y0 : {q(2), q(3), q(1, 2)}) {
            Sphere s({q(0), y0, q(0)}, q(1)), refl({q(0), -y0, q(0)}, q(1));
            auto C = phi(pair, sphere_to_quadric(s));
            REQUIRE(C);
            auto w = fiber_membership(pair, *C, sphere_to_quadric(s));
            REQUIRE(w);
            CHECK(w->lambda == q(1));
            CHECK(fiber_membership(pair, *C, sphere_to_quadric(refl)));
            CHECK_FALSE(fiber_membership(pair, *C, sphere_to_quadric(Sphere({q(1), y0, q(0)}, q(1)))));
        }
    }
    SUBCASE("rank one quadrics are never witnesses")
    {
        Rng rng(74);
        BiForm22 C = asymmetric_normal_form(q(4), q(9));
        for (int n = 0; n < 10; ++n) {
            std::array<Scalar, 4> v{rng.scalar(), rng.scalar(), rng.scalar(), Scalar(1)};
            CHECK_FALSE(fiber_membership(pair, C, Quadric::outer(v)));
        }
    }
    SUBCASE("witnesses have the same tangent transversals")
    {
        Rng rng(75);
        ConicF2 c = conic_f2_build(q(9), q(25), -1);
        BiForm22 C = asymmetric_normal_form(q(9), q(25));
        Quadric qd = Quadric::from_entries(c.point({q(3), q(-2)}));
        REQUIRE(fiber_membership(pair, C, qd));
        int checked = 0;
        while (checked < 20) {
            // a point of the curve: choose u, solve the fiber quadratic when it splits over Q
            P1Point u{rng.scalar(), Scalar(1)};
            BinaryForm fib = BiHomForm::from(C).fiber_at_wx(u);
            Scalar a2 = fib.coeff(2), a1 = fib.coeff(1), a0 = fib.coeff(0);
            if (a2.is_zero()) continue;
            auto root = (a1 * a1 - 4 * a2 * a0).sqrt();
            if (!root) {
                // no rational point over u: test a non-point instead
                P1Point v{Scalar(1), Scalar(1)};
                CHECK(C.eval(u, v).is_zero() == tangency_value(qd, transversal_through(pair, u, v)).is_zero());
                ++checked;
                continue;
            }
            P1Point v{(-a1 + *root) / (2 * a2), Scalar(1)};
            REQUIRE(C.eval(u, v).is_zero());
            CHECK(tangency_value(qd, transversal_through(pair, u, v)).is_zero());
            ++checked;
        }
    }
}
