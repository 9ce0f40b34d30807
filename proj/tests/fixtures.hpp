#pragma once

#include "linetan/configurations.hpp"
#include "support.hpp"

namespace testing_support {

using linetan::Configuration;
using linetan::LinePair;
using linetan::ProjPoint;
using linetan::Sphere;
using linetan::Vec3;

inline ProjPoint apt(const Scalar& x, const Scalar& y, const Scalar& z) { return ProjPoint::affine({x, y, z}); }
inline ProjPoint dir(const Scalar& x, const Scalar& y, const Scalar& z) { return ProjPoint::direction({x, y, z}); }

/// Unit spheres touching at the origin; l1 through the origin, l2 in the plane z = 0.
inline Configuration fixture_affine_tangent()
{
    auto pair = LinePair::from_points(apt(q(0), q(0), q(0)), dir(q(1), q(0), q(1)), apt(q(0), q(1), q(0)),
                                      dir(q(1), q(0), q(0)));
    return Configuration::make(pair, Sphere({q(0), q(0), q(1)}, q(1)), Sphere({q(0), q(0), q(-1)}, q(1)));
}

/// Two rulings of x^2 + y^2 - z^2 = 1 and two spheres on the z-axis tangent to it.
inline Configuration fixture_affine_hyperboloid()
{
    auto pair = LinePair::from_points(apt(q(1), q(0), q(0)), dir(q(0), q(1), q(1)), apt(q(3, 5), q(4, 5), q(0)),
                                      dir(q(-4, 5), q(3, 5), q(1)));
    return Configuration::make(pair, Sphere({q(0), q(0), q(0)}, q(1)), Sphere({q(0), q(0), q(2)}, q(3)));
}

/// The x-axis, the yz-line at infinity, and a sphere with its mirror image through the x-axis.
inline Configuration fixture_projective_reflection()
{
    return Configuration::make(linetan::canonical_projective_pair(), Sphere({q(0), q(2), q(0)}, q(1)),
                               Sphere({q(0), q(-2), q(0)}, q(1)));
}

/// l1 through the origin, l2 the line at infinity of z = 0, spheres touching z = 0 at the origin.
inline Configuration fixture_projective_tangent()
{
    auto pair = LinePair::from_points(apt(q(0), q(0), q(0)), dir(q(1), q(0), q(1)), dir(q(1), q(0), q(0)),
                                      dir(q(0), q(1), q(0)));
    return Configuration::make(pair, Sphere({q(0), q(0), q(1)}, q(1)), Sphere({q(0), q(0), q(-2)}, q(4)));
}

inline Sphere random_sphere(Rng& rng)
{
    return Sphere(random_vec(rng, 4, 2), Scalar(rng.positive_rational(6, 2)));
}

inline Configuration random_configuration(Rng& rng)
{
    while (true) {
        Sphere s1 = random_sphere(rng), s2 = random_sphere(rng);
        if (s1 == s2) continue;
        return Configuration::make(random_affine_pair(rng), s1, s2);
    }
}

/// Image under X -> scale R (X - origin).
inline Configuration transformed(const Configuration& c, const std::array<Vec3, 3>& rows, const Scalar& scale,
                                 const Vec3& origin)
{
    auto f = linetan::FrameMap::similarity(rows, scale, origin);
    const auto& L = c.lines;
    auto pair = LinePair::from_points(f.apply(L.a()), f.apply(L.b()), f.apply(L.c()), f.apply(L.d()));
    auto move = [&](const Sphere& s) {
        return Sphere(f.apply(ProjPoint::affine(s.center)).affine_part(), s.r2 * scale * scale);
    };
    return Configuration::make(pair, move(c.s1), move(c.s2));
}

inline Configuration with_spheres(const Configuration& c, const Sphere& s1, const Sphere& s2)
{
    return Configuration::make(c.lines, s1, s2);
}

}  // namespace testing_support
