#pragma once

#include "linetan/projgeom.hpp"

#include <array>
#include <string>

namespace linetan {

/// Symmetric 4x4 matrix [[a,b,c,d],[b,e,f,g],[c,f,h,k],[d,g,k,l]] up to scale.
class Quadric {
public:
    explicit Quadric(const Mat4& m);
    /// Entries in the order a, b, c, d, e, f, g, h, k, l.
    static Quadric from_entries(const std::array<Scalar, 10>& e);
    /// v v^T, a double plane.
    static Quadric outer(const std::array<Scalar, 4>& v);
    /// (p q^T + q p^T) / 2, the union of two planes.
    static Quadric plane_pair(const std::array<Scalar, 4>& p, const std::array<Scalar, 4>& q);

    const Scalar& operator()(int i, int j) const { return m_[i][j]; }
    const Mat4& matrix() const { return m_; }
    std::array<Scalar, 10> entries() const;
    Scalar value(const ProjPoint& x) const { return bilinear(x, x); }
    Scalar bilinear(const ProjPoint& x, const ProjPoint& y) const;
    /// The quadric M^T Q M, i.e. the pullback under X -> M X.
    Quadric pulled_back(const Mat4& m) const;
    bool projectively_equal(const Quadric& o) const;
    std::string str() const;

private:
    Mat4 m_;
};

struct Sphere {
    Vec3 center;
    Scalar r2;

    Sphere(const Vec3& c, const Scalar& radius_squared);
    bool operator==(const Sphere& o) const { return center == o.center && r2 == o.r2; }
    std::string str() const;
};

Quadric sphere_to_quadric(const Sphere& s);

/// Indexed by the Pluecker pairs (01, 02, 03, 12, 13, 23).
using Wedge2Matrix = std::array<std::array<Scalar, 6>, 6>;

Wedge2Matrix wedge2(const Quadric& q);
bool is_zero(const Wedge2Matrix& w);
/// p^T (wedge2 Q) p; zero iff the line is tangent to Q.
Scalar tangency_value(const Quadric& q, const PluckerLine& l);
Scalar tangency_value(const Wedge2Matrix& w, const std::array<Scalar, 6>& p);
int quadric_rank(const Quadric& q);

}  // namespace linetan
