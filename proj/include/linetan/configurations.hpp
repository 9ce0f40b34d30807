#pragma once

#include "linetan/classify22.hpp"
#include "linetan/envelope.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace linetan {

enum class Mode { affine, projective };
enum class Verdict { finite, infinite };
enum class CaseTag { none, affine_tangent_spheres, affine_hyperboloid, projective_tangent_spheres, projective_reflection };

std::string to_string(Mode m);
std::string to_string(Verdict v);
std::string to_string(CaseTag t);

struct Configuration {
    LinePair lines;
    Sphere s1, s2;
    Mode mode = Mode::affine;

    /// Detects the mode; a first line at infinity is moved to second place.
    /// Throws GeometryError for intersecting lines, equal spheres, or two lines at infinity.
    static Configuration make(const LinePair& lines, const Sphere& s1, const Sphere& s2);
};

struct CommonComponent {
    enum class Kind { pencil_l1, pencil_l2, correspondence, whole_curve, other };
    Kind kind = Kind::other;
    BiHomForm form;
    bool real = false;
    /// For pencils: the point of l1 (or l2) the pencil goes through.
    std::optional<P1Point> point;
};

/// A common zero of the two curves. Exact when u lies in Q or one quadratic
/// extension, otherwise a root of defining_poly (in t = w/x) with an isolating
/// interval when real.
struct CommonTangent {
    std::optional<P1Point> u, v;
    UniPoly defining_poly;
    /// v = [vy(t), vz(t)] on the roots of defining_poly.
    UniPoly vy, vz;
    std::optional<RootInterval> u_interval;
    std::optional<RationalInterval> v_box;
    /// Numerical values of w/x and y/z.
    std::complex<double> u_approx, v_approx;
    bool u_at_infinity = false;
    bool v_at_infinity = false;
    /// Shared fibers with v not resolved: the fiber coefficients (of y^2, yz, z^2 order
    /// by power of y) as polynomials in t, constant when u is exact.
    std::optional<std::array<UniPoly, 3>> fiber;
    bool real = false;
    /// Multiplicity of u as a root of the resultant, shared by all solutions over u.
    int resultant_multiplicity = 1;
    bool shares_fiber = false;
    std::optional<PluckerLine> line;
    std::array<double, 6> line_approx{};

    bool exact() const { return u && v; }
};

struct TangentEnumeration {
    /// Resultant of the two curves with respect to (y, z), a binary octic in (w, x).
    BinaryForm resultant;
    std::vector<CommonTangent> solutions;
    int total_multiplicity = 0;
    int complex_count = 0;
    int real_count = 0;
};

/// Common zeros in P^1 x P^1; lines are filled in when a pair is given.
/// Throws GeometryError "infinite family; use classify_configuration" on a common component.
TangentEnumeration enumerate_common_tangents(const BiForm22& C1, const BiForm22& C2,
                                             const std::optional<LinePair>& pair = std::nullopt);
/// Exact check F(u, v) = 0, modulo the defining polynomial for isolated solutions.
bool satisfies_exactly(const CommonTangent& t, const BiForm22& F);

struct ClassificationReport {
    Verdict verdict = Verdict::finite;
    CaseTag tag = CaseTag::none;
    Mode mode = Mode::affine;
    BiForm22 curve1, curve2;
    CurveClass class1, class2;
    BiHomForm common;
    std::vector<CommonComponent> components;
    std::optional<TangentEnumeration> tangents;
    std::string note;
};

ClassificationReport classify_configuration(const Configuration& cfg);

/// Members of a real common component as transversals; for the hyperboloid
/// case the two members parallel to l1 or l2 are skipped.
std::vector<PluckerLine> sample_family(const Configuration& cfg, const CommonComponent& c, int n);

/// Inverts the affine sphere curve. Throws GeometryError "not a sphere envelope".
Sphere recover_sphere_affine(const BiPoly& C, const Scalar& delta);

struct CubicRecovery {
    Scalar x0, lambda;
    Sphere sphere;
};

/// The residual cubic after removing x - x0 from the affine sphere curve, scaled
/// as delta^2 x z^2 + ... (any nonzero multiple is accepted).
BiPoly tangent_sphere_cubic(const Scalar& delta, const Scalar& x0, const Scalar& lambda);
CubicRecovery recover_sphere_from_cubic(const BiPoly& K, const Scalar& delta);

/// One sphere when u1 or v1 is nonzero; otherwise the reflection pair (one entry
/// when it degenerates to b = c = 0).
std::vector<Sphere> recover_sphere_projective(const BiPoly& C, const Vec3& u, const Vec3& v);

struct HyperboloidCheck {
    bool ok = false;
    std::string reason;
    std::optional<Quadric> surface;
    Vec3 center{};
    Vec3 axis{};
};

/// Fits the ruled quadric through the transversals of a (1,1) correspondence and
/// tests for a hyperboloid of revolution with the sphere centered on its axis
/// and tangent to its rulings.
HyperboloidCheck hyperboloid_axis_check(const LinePair& pair, const BiHomForm& correspondence, const Sphere& s);

}  // namespace linetan
