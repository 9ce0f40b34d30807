#pragma once

#include "linetan/biform.hpp"
#include "linetan/quadrics.hpp"

#include <optional>

namespace linetan {

/// The (2,2)-form p^T (wedge2 Q) p over transversals p(w,x,y,z), without the zero check.
BiForm22 envelope_form(const LinePair& pair, const Quadric& q);
BiForm22 envelope_form(const LinePair& pair, const Wedge2Matrix& w);
/// envelope_form, or std::nullopt when it vanishes identically.
std::optional<BiForm22> phi(const LinePair& pair, const Quadric& q);

/// The curve of transversals tangent to s when the lines are in normal position with parameter delta.
BiPoly affine_sphere_curve(const Scalar& delta, const Sphere& s);
/// The curve of transversals tangent to s for l1 the x-axis and l2 at infinity spanned by
/// the directions u = (u1,u2,0) and v = (v1,0,v3).
BiPoly projective_sphere_curve(const Vec3& u, const Vec3& v, const Sphere& s);

/// Rank at most one.
bool is_E1(const Quadric& q);
/// a..g vanish: rank-2 quadrics singular along the x0x1 line.
bool is_E2(const Quadric& q);
/// c, d, f, g, h, k, l vanish: singular along the x2x3 line.
bool is_E3(const Quadric& q);

}  // namespace linetan
