#include "doctest.h"

#include "linetan/errors.hpp"
#include "linetan/quadrics.hpp"
#include "support.hpp"
#include "oracles.hpp"

using namespace linetan;
using namespace testing_support;

namespace {

PluckerLine affine_line(const Vec3& p, const Vec3& dir)
{
    return PluckerLine::from_points(ProjPoint::affine(p), ProjPoint::direction(dir));
}

Vec3 v3(long a, long b, long c)
{
    return {q(a), q(b), q(c)};
}

}  // namespace

TEST_CASE("sphere_to_quadric")
{
    Quadric unit = sphere_to_quadric(Sphere(v3(0, 0, 0), q(1)));
    CHECK(unit(0, 0) == q(-1));
    for (int i = 1; i < 4; ++i) CHECK(unit(i, i) == q(1));
    CHECK(unit(0, 1).is_zero());

    Quadric shifted = sphere_to_quadric(Sphere(v3(0, 3, 0), q(1)));
    CHECK(shifted(0, 0) == q(8));
    CHECK(shifted(0, 2) == q(-3));
    CHECK(shifted(2, 0) == q(-3));

    Rng rng(11);
    for (int n = 0; n < 30; ++n) {
        Sphere s(random_vec(rng), Scalar(rng.positive_rational()));
        CHECK(quadric_rank(sphere_to_quadric(s)) == 4);
    }
    CHECK_THROWS_AS(Sphere(v3(0, 0, 0), q(0)), GeometryError);
    CHECK_THROWS_AS(Sphere(v3(0, 0, 0), q(-1)), GeometryError);
}

TEST_CASE("wedge2 entries")
{
    Quadric rank1 = Quadric::outer({q(1), q(2), q(-3), q(5, 2)});
    CHECK(is_zero(wedge2(rank1)));

    // Sphere tangency matrix: the (01,01) entry is c2^2 + c3^2 - r^2.
    Sphere s(v3(1, 2, 3), q(5));
    auto w = wedge2(sphere_to_quadric(s));
    CHECK(w[0][0] == q(4 + 9 - 5));
    CHECK(w[1][1] == q(1 + 9 - 5));
    CHECK(w[2][2] == q(1 + 4 - 5));
    CHECK(w[3][3] == q(1));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(w[i][j] == w[j][i]);

    Mat4 id{};
    for (int i = 0; i < 4; ++i) id[i][i] = Scalar(1);
    auto wi = wedge2(Quadric(id));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(wi[i][j] == (i == j ? q(1) : q(0)));
}

TEST_CASE("wedge2 vanishes exactly for rank one")
{
    Rng rng(12);
    for (int n = 0; n < 40; ++n) {
        Quadric qd = random_quadric(rng);
        CHECK(is_zero(wedge2(qd)) == (quadric_rank(qd) <= 1));
        std::array<Scalar, 4> v{rng.scalar(), rng.scalar(), rng.scalar(), rng.scalar()};
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero()) v[0] = Scalar(1);
        CHECK(is_zero(wedge2(Quadric::outer(v))));
    }
}

TEST_CASE("quadric_rank")
{
    CHECK(quadric_rank(sphere_to_quadric(Sphere(v3(1, 0, 0), q(2)))) == 4);
    CHECK(quadric_rank(Quadric::outer({q(0), q(1), q(1), q(0)})) == 1);
    CHECK(quadric_rank(Quadric::plane_pair({q(0), q(1), q(0), q(0)}, {q(0), q(0), q(1), q(0)})) == 2);
    CHECK(quadric_rank(Quadric::from_entries({q(1), q(0), q(0), q(0), q(1), q(0), q(0), q(1), q(0), q(0)})) == 3);
}

TEST_CASE("tangency_value examples")
{
    Quadric unit = sphere_to_quadric(Sphere(v3(0, 0, 0), q(1)));
    CHECK(tangency_value(unit, affine_line(v3(0, 1, 0), v3(1, 0, 0))).is_zero());
    CHECK(!tangency_value(unit, affine_line(v3(0, 0, 0), v3(1, 0, 0))).is_zero());

    // Two planes through the line m; every line meeting m is tangent.
    ProjPoint m1 = ProjPoint::affine(v3(1, 2, 0)), m2 = ProjPoint::direction(v3(0, 1, 1));
    Quadric pp = Quadric::plane_pair({q(-1), q(1), q(0), q(0)}, {q(2), q(0), q(-1), q(1)});
    CHECK(pp.value(m1).is_zero());
    CHECK(pp.value(m2).is_zero());
    Rng rng(13);
    for (int n = 0; n < 20; ++n) {
        ProjPoint on_m = m1 * rng.scalar() + m2 * Scalar(rng.nonzero_rational());
        ProjPoint other = random_point(rng);
        if (other == on_m) continue;
        CHECK(tangency_value(pp, PluckerLine::from_points(on_m, other)).is_zero());
    }
}

TEST_CASE("synthetic tangents to a sphere")
{
    Rng rng(14);
    Sphere s(v3(1, -2, 3), q(9));
    // Rational points on the sphere from Pythagorean quadruples.
    const long quads[][4] = {{1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {4, 4, 7, 9}, {2, 6, 9, 11}};
    int tested = 0;
    while (tested < 100) {
        const auto& t = quads[rng.integer(0, 4)];
        Vec3 n{q(t[0] * (rng.integer(0, 1) ? 1 : -1), t[3]), q(t[1] * (rng.integer(0, 1) ? 1 : -1), t[3]),
               q(t[2] * (rng.integer(0, 1) ? 1 : -1), t[3])};
        Vec3 p = s.center + Scalar(3) * n;
        Vec3 dir = cross(n, random_vec(rng));
        if (is_zero(dir)) continue;
        PluckerLine l = affine_line(p, dir);
        CHECK(tangency_value(sphere_to_quadric(s), l).is_zero());
        ++tested;
    }
}

TEST_CASE("tangency is invariant under scaling and congruence")
{
    Rng rng(15);
    for (int n = 0; n < 30; ++n) {
        Quadric qd = random_quadric(rng);
        auto p = random_point(rng), r = random_point(rng);
        if (p == r) continue;
        PluckerLine l = PluckerLine::from_points(p, r);
        Scalar lam(rng.nonzero_rational());
        Mat4 scaled = qd.matrix();
        for (auto& row : scaled)
            for (auto& v : row) v = v * lam;
        CHECK(tangency_value(Quadric(scaled), l) == lam * lam * tangency_value(qd, l));

        Mat4 m{};
        for (auto& row : m)
            for (auto& v : row) v = rng.scalar(4, 2);
        FrameMap M;
        try {
            M = FrameMap(m);
        } catch (const std::exception&) {
            continue;
        }
        Quadric pulled = qd.pulled_back(M.matrix());
        PluckerLine moved = M.inverse().apply(l);
        Scalar before = tangency_value(qd, l), after = tangency_value(pulled, moved);
        CHECK(before.is_zero() == after.is_zero());
        // Same check on a tangent line of the moved quadric.
        Sphere s(random_vec(rng), q(1));
        Quadric sq = sphere_to_quadric(s);
        PluckerLine tangent = affine_line(s.center + v3(1, 0, 0), v3(0, 1, 1));
        CHECK(tangency_value(sq.pulled_back(M.matrix()), M.inverse().apply(tangent)).is_zero());
    }
}
