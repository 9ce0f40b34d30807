#pragma once

#include "linetan/binaryform.hpp"

#include <array>
#include <string>
#include <utility>

namespace linetan {

using Vec3 = std::array<Scalar, 3>;
using Mat4 = std::array<std::array<Scalar, 4>, 4>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Scalar& s, const Vec3& a);
Scalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& a);

/// Point of P^3 with homogeneous coordinates (x0, x1, x2, x3); x0 = 0 is the plane at infinity.
struct ProjPoint {
    std::array<Scalar, 4> x;

    static ProjPoint affine(const Vec3& p) { return {{Scalar(1), p[0], p[1], p[2]}}; }
    static ProjPoint direction(const Vec3& d) { return {{Scalar(0), d[0], d[1], d[2]}}; }

    const Scalar& operator[](int i) const { return x[i]; }
    bool is_valid() const;
    bool at_infinity() const { return x[0].is_zero(); }
    Vec3 affine_part() const;
    Vec3 tail() const { return {x[1], x[2], x[3]}; }
    ProjPoint operator+(const ProjPoint& o) const;
    ProjPoint operator*(const Scalar& s) const;
    bool operator==(const ProjPoint& o) const;
    std::string str() const;
};

/// Line of P^3 in Pluecker coordinates ordered (p01, p02, p03, p12, p13, p23).
class PluckerLine {
public:
    PluckerLine() = default;
    explicit PluckerLine(const std::array<Scalar, 6>& p);

    static PluckerLine from_points(const ProjPoint& p, const ProjPoint& q);

    const Scalar& operator[](int k) const { return p_[k]; }
    const std::array<Scalar, 6>& coords() const { return p_; }
    /// p_ij for any i != j (antisymmetric).
    Scalar entry(int i, int j) const;
    Scalar relation() const;
    bool contains(const ProjPoint& x) const;
    bool at_infinity() const { return p_[0].is_zero() && p_[1].is_zero() && p_[2].is_zero(); }
    /// Two spanning points in reduced row echelon form.
    std::pair<ProjPoint, ProjPoint> spanning_points() const;
    PluckerLine normalized() const;
    bool operator==(const PluckerLine& o) const;
    std::string str() const;

private:
    std::array<Scalar, 6> p_;
};

Scalar incidence_form(const PluckerLine& l1, const PluckerLine& l2);

/// Two lines with fixed parameterizations l1 = {w a + x b}, l2 = {y c + z d}.
class LinePair {
public:
    LinePair(const PluckerLine& l1, const PluckerLine& l2);
    static LinePair from_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

    const PluckerLine& l1() const { return l1_; }
    const PluckerLine& l2() const { return l2_; }
    const ProjPoint& a() const { return a_; }
    const ProjPoint& b() const { return b_; }
    const ProjPoint& c() const { return c_; }
    const ProjPoint& d() const { return d_; }
    bool skew() const { return !incidence_form(l1_, l2_).is_zero(); }
    ProjPoint point_on_l1(const P1Point& u) const { return a_ * u.first + b_ * u.second; }
    ProjPoint point_on_l2(const P1Point& v) const { return c_ * v.first + d_ * v.second; }
    LinePair swapped() const { return from_points(c_, d_, a_, b_); }

private:
    LinePair() = default;
    PluckerLine l1_, l2_;
    ProjPoint a_, b_, c_, d_;
};

/// The line pair through (0,0,1) with direction (1,delta,0) and through (0,0,-1) with direction (1,-delta,0).
LinePair affine_normal_pair(const Scalar& delta);
/// The x-axis and the yz-line at infinity.
LinePair canonical_projective_pair();

PluckerLine transversal_through(const LinePair& pair, const P1Point& u, const P1Point& v);

/// Invertible projective transformation X -> M X.
class FrameMap {
public:
    FrameMap();
    explicit FrameMap(const Mat4& m);
    /// X -> scale * R (X - origin), with R given by rows.
    static FrameMap similarity(const std::array<Vec3, 3>& rows, const Scalar& scale, const Vec3& origin);

    const Mat4& matrix() const { return m_; }
    const Mat4& inverse_matrix() const { return inv_; }
    FrameMap inverse() const;
    FrameMap operator*(const FrameMap& o) const;
    ProjPoint apply(const ProjPoint& p) const;
    PluckerLine apply(const PluckerLine& l) const;
    bool is_identity() const;

private:
    Mat4 m_, inv_;
};

Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
/// Throws std::domain_error for a singular matrix.
Mat4 inverse(const Mat4& a);

/// Maps l1 to {(w,x,0,0)} and l2 to {(0,0,y,z)}.
FrameMap canonical_frame_projective(const LinePair& pair);

struct AffineFrame {
    FrameMap map;
    Scalar delta;
};

/// Similarity putting the pair into the normal position of affine_normal_pair(delta), delta > 0.
AffineFrame canonical_frame_affine(const LinePair& pair);

}  // namespace linetan
