#include "linetan/projgeom.hpp"

#include "linetan/errors.hpp"

#include <stdexcept>

namespace linetan {

namespace {

constexpr int kPair[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_index(int i, int j)
{
    for (int k = 0; k < 6; ++k)
        if (kPair[k][0] == i && kPair[k][1] == j) return k;
    return -1;
}

// Reduced row echelon form of two independent rows.
std::pair<ProjPoint, ProjPoint> rref(ProjPoint r0, ProjPoint r1)
{
    std::array<std::array<Scalar, 4>, 2> m{r0.x, r1.x};
    int row = 0;
    for (int col = 0; col < 4 && row < 2; ++col) {
        int piv = -1;
        for (int r = row; r < 2; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        Scalar inv = Scalar(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (int r = 0; r < 2; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (int c = 0; c < 4; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    if (row < 2) throw GeometryError("points coincide");
    return {ProjPoint{m[0]}, ProjPoint{m[1]}};
}

}  // namespace

Vec3 operator+(const Vec3& a, const Vec3& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(const Scalar& s, const Vec3& a)
{
    return {s * a[0], s * a[1], s * a[2]};
}

Scalar dot(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& a)
{
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

bool ProjPoint::is_valid() const
{
    for (const auto& v : x)
        if (!v.is_zero()) return true;
    return false;
}

Vec3 ProjPoint::affine_part() const
{
    if (at_infinity()) throw GeometryError("point at infinity has no affine coordinates");
    return {x[1] / x[0], x[2] / x[0], x[3] / x[0]};
}

ProjPoint ProjPoint::operator+(const ProjPoint& o) const
{
    return {{x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2], x[3] + o.x[3]}};
}

ProjPoint ProjPoint::operator*(const Scalar& s) const
{
    return {{x[0] * s, x[1] * s, x[2] * s, x[3] * s}};
}

bool ProjPoint::operator==(const ProjPoint& o) const
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (x[i] * o.x[j] != x[j] * o.x[i]) return false;
    return is_valid() == o.is_valid();
}

std::string ProjPoint::str() const
{
    return "(" + x[0].str() + ", " + x[1].str() + ", " + x[2].str() + ", " + x[3].str() + ")";
}

PluckerLine::PluckerLine(const std::array<Scalar, 6>& p) : p_(p)
{
    bool any = false;
    for (const auto& v : p_) any = any || !v.is_zero();
    if (!any) throw GeometryError("zero Pluecker vector");
    if (!relation().is_zero()) throw GeometryError("Pluecker relation violated");
}

PluckerLine PluckerLine::from_points(const ProjPoint& p, const ProjPoint& q)
{
    std::array<Scalar, 6> v;
    for (int k = 0; k < 6; ++k) {
        int i = kPair[k][0], j = kPair[k][1];
        v[k] = p[i] * q[j] - p[j] * q[i];
    }
    bool any = false;
    for (const auto& s : v) any = any || !s.is_zero();
    if (!any) throw GeometryError("points coincide");
    return PluckerLine(v);
}

Scalar PluckerLine::entry(int i, int j) const
{
    if (i == j) return Scalar();
    if (i < j) return p_[pair_index(i, j)];
    return -p_[pair_index(j, i)];
}

Scalar PluckerLine::relation() const
{
    return p_[0] * p_[5] - p_[1] * p_[4] + p_[2] * p_[3];
}

bool PluckerLine::contains(const ProjPoint& x) const
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (!(entry(i, j) * x[k] - entry(i, k) * x[j] + entry(j, k) * x[i]).is_zero()) return false;
    return true;
}

std::pair<ProjPoint, ProjPoint> PluckerLine::spanning_points() const
{
    std::vector<ProjPoint> cols;
    for (int k = 0; k < 4; ++k) {
        ProjPoint v{{entry(0, k), entry(1, k), entry(2, k), entry(3, k)}};
        if (v.is_valid()) cols.push_back(v);
    }
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = i + 1; j < cols.size(); ++j)
            if (!(cols[i] == cols[j])) return rref(cols[i], cols[j]);
    throw ContractViolation("Pluecker vector without two independent points");
}

PluckerLine PluckerLine::normalized() const
{
    bool rational = true;
    for (const auto& v : p_) rational = rational && v.is_rational();
    std::array<Scalar, 6> out;
    if (rational) {
        std::vector<Rational> q;
        for (const auto& v : p_) q.push_back(v.rational_part());
        q = primitive_integer(q);
        for (int k = 0; k < 6; ++k) out[k] = Scalar(q[k]);
    } else {
        Scalar lead;
        for (const auto& v : p_)
            if (!v.is_zero()) {
                lead = v;
                break;
            }
        for (int k = 0; k < 6; ++k) out[k] = p_[k] / lead;
    }
    return PluckerLine(out);
}

bool PluckerLine::operator==(const PluckerLine& o) const
{
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (p_[i] * o.p_[j] != p_[j] * o.p_[i]) return false;
    return true;
}

std::string PluckerLine::str() const
{
    std::string s = "(";
    for (int k = 0; k < 6; ++k) s += (k ? ", " : "") + p_[k].str();
    return s + ")";
}

Scalar incidence_form(const PluckerLine& l, const PluckerLine& m)
{
    return l[0] * m[5] - l[1] * m[4] + l[2] * m[3] + l[3] * m[2] - l[4] * m[1] + l[5] * m[0];
}

LinePair::LinePair(const PluckerLine& l1, const PluckerLine& l2) : l1_(l1), l2_(l2)
{
    if (l1_ == l2_) throw GeometryError("lines coincide");
    std::tie(a_, b_) = l1_.spanning_points();
    std::tie(c_, d_) = l2_.spanning_points();
}

LinePair LinePair::from_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    LinePair p;
    p.l1_ = PluckerLine::from_points(a, b);
    p.l2_ = PluckerLine::from_points(c, d);
    if (p.l1_ == p.l2_) throw GeometryError("lines coincide");
    p.a_ = a;
    p.b_ = b;
    p.c_ = c;
    p.d_ = d;
    return p;
}

LinePair affine_normal_pair(const Scalar& delta)
{
    if (delta.is_zero()) throw GeometryError("lines not skew (delta = 0)");
    return LinePair::from_points(ProjPoint::affine({Scalar(0), Scalar(0), Scalar(1)}),
                                 ProjPoint::direction({Scalar(1), delta, Scalar(0)}),
                                 ProjPoint::affine({Scalar(0), Scalar(0), Scalar(-1)}),
                                 ProjPoint::direction({Scalar(1), -delta, Scalar(0)}));
}

LinePair canonical_projective_pair()
{
    auto e = [](int i) {
        ProjPoint p{};
        p.x[i] = Scalar(1);
        return p;
    };
    return LinePair::from_points(e(0), e(1), e(2), e(3));
}

PluckerLine transversal_through(const LinePair& pair, const P1Point& u, const P1Point& v)
{
    return PluckerLine::from_points(pair.point_on_l1(u), pair.point_on_l2(v));
}

Mat4 mat_mul(const Mat4& a, const Mat4& b)
{
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat4 transpose(const Mat4& a)
{
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}

Mat4 inverse(const Mat4& a)
{
    Mat4 m = a, inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = Scalar(1);
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && m[piv][col].is_zero()) ++piv;
        if (piv == 4) throw GeometryError("singular 4x4 matrix");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        Scalar s = Scalar(1) / m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (int j = 0; j < 4; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

FrameMap::FrameMap() : m_{}, inv_{}
{
    for (int i = 0; i < 4; ++i) m_[i][i] = inv_[i][i] = Scalar(1);
}

FrameMap::FrameMap(const Mat4& m) : m_(m), inv_(linetan::inverse(m)) {}

FrameMap FrameMap::similarity(const std::array<Vec3, 3>& rows, const Scalar& scale, const Vec3& origin)
{
    Mat4 m{};
    m[0][0] = Scalar(1);
    for (int i = 0; i < 3; ++i) {
        m[i + 1][0] = -scale * dot(rows[i], origin);
        for (int j = 0; j < 3; ++j) m[i + 1][j + 1] = scale * rows[i][j];
    }
    return FrameMap(m);
}

FrameMap FrameMap::inverse() const
{
    FrameMap f;
    f.m_ = inv_;
    f.inv_ = m_;
    return f;
}

FrameMap FrameMap::operator*(const FrameMap& o) const
{
    FrameMap f;
    f.m_ = mat_mul(m_, o.m_);
    f.inv_ = mat_mul(o.inv_, inv_);
    return f;
}

ProjPoint FrameMap::apply(const ProjPoint& p) const
{
    ProjPoint r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.x[i] += m_[i][j] * p.x[j];
    return r;
}

PluckerLine FrameMap::apply(const PluckerLine& l) const
{
    auto [p, q] = l.spanning_points();
    return PluckerLine::from_points(apply(p), apply(q));
}

bool FrameMap::is_identity() const
{
    Scalar s = m_[0][0];
    if (s.is_zero()) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m_[i][j] != (i == j ? s : Scalar())) return false;
    return true;
}

FrameMap canonical_frame_projective(const LinePair& pair)
{
    if (!pair.skew()) throw GeometryError("lines not skew");
    Mat4 m{};
    const ProjPoint* cols[4] = {&pair.a(), &pair.b(), &pair.c(), &pair.d()};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m[i][j] = cols[j]->x[i];
    return FrameMap(m).inverse();
}

AffineFrame canonical_frame_affine(const LinePair& pair)
{
    if (!pair.skew()) throw GeometryError("lines not skew");
    if (pair.l1().at_infinity() || pair.l2().at_infinity())
        throw GeometryError("a line lies at infinity; use the projective frame");
    auto [a, b] = pair.l1().spanning_points();
    auto [c, d] = pair.l2().spanning_points();
    Vec3 P1 = a.affine_part(), D1 = b.tail(), P2 = c.affine_part(), D2 = d.tail();
    Vec3 n = cross(D1, D2);
    Scalar nn = dot(n, n);
    Vec3 diff = P2 - P1;
    Scalar s1 = dot(cross(diff, D2), n) / nn;
    Scalar s2 = dot(cross(diff, D1), n) / nn;
    Vec3 Q1 = P1 + s1 * D1, Q2 = P2 + s2 * D2;
    try {
        Scalar ratio = Scalar::sqrt_of((dot(D1, D1) / dot(D2, D2)).to_rational());
        Vec3 bis = D1 + ratio * D2;
        Scalar bb = dot(bis, bis);
        auto len = bb.is_rational() ? std::optional<Scalar>(Scalar::sqrt_of(bb.rational_part())) : bb.sqrt();
        if (!len) throw GeometryError("bisector length leaves the quadratic extension");
        Vec3 perp = Q1 - Q2;
        Scalar h = Scalar::sqrt_of(dot(perp, perp).to_rational());
        Vec3 e1 = (Scalar(1) / *len) * bis;
        Vec3 e3 = (Scalar(1) / h) * perp;
        Vec3 e2 = cross(e3, e1);
        Scalar delta = dot(D1, e2) / dot(D1, e1);
        if (delta.sign() < 0) {
            e2 = Scalar(-1) * e2;
            delta = -delta;
        }
        Vec3 origin = Scalar(Rational(1, 2)) * (Q1 + Q2);
        return {FrameMap::similarity({e1, e2, e3}, Scalar(2) / h, origin), delta};
    } catch (const GeometryError&) {
        throw;
    } catch (const std::domain_error& e) {
        throw GeometryError(std::string("affine normal position is not exact over one quadratic extension: ") +
                            e.what());
    }
}

}  // namespace linetan
