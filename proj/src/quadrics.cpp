#include "linetan/quadrics.hpp"

#include "linetan/errors.hpp"

namespace linetan {

namespace {

constexpr int kPair[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kUpper[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

}  // namespace

Quadric::Quadric(const Mat4& m) : m_(m)
{
    bool any = false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (m_[i][j] != m_[j][i]) throw GeometryError("quadric matrix is not symmetric");
            any = any || !m_[i][j].is_zero();
        }
    if (!any) throw GeometryError("zero quadric");
}

Quadric Quadric::from_entries(const std::array<Scalar, 10>& e)
{
    Mat4 m{};
    for (int k = 0; k < 10; ++k) {
        auto [i, j] = kUpper[k];
        m[i][j] = m[j][i] = e[k];
    }
    return Quadric(m);
}

Quadric Quadric::outer(const std::array<Scalar, 4>& v)
{
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = v[i] * v[j];
    return Quadric(m);
}

Quadric Quadric::plane_pair(const std::array<Scalar, 4>& p, const std::array<Scalar, 4>& q)
{
    Mat4 m{};
    Scalar half(Rational(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = half * (p[i] * q[j] + q[i] * p[j]);
    return Quadric(m);
}

std::array<Scalar, 10> Quadric::entries() const
{
    std::array<Scalar, 10> e;
    for (int k = 0; k < 10; ++k) e[k] = m_[kUpper[k][0]][kUpper[k][1]];
    return e;
}

Scalar Quadric::bilinear(const ProjPoint& x, const ProjPoint& y) const
{
    Scalar r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!m_[i][j].is_zero()) r += x[i] * m_[i][j] * y[j];
    return r;
}

Quadric Quadric::pulled_back(const Mat4& m) const
{
    return Quadric(mat_mul(transpose(m), mat_mul(m_, m)));
}

bool Quadric::projectively_equal(const Quadric& o) const
{
    auto a = entries(), b = o.entries();
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

std::string Quadric::str() const
{
    std::string s = "[";
    auto e = entries();
    for (int k = 0; k < 10; ++k) s += (k ? ", " : "") + e[k].str();
    return s + "]";
}

Sphere::Sphere(const Vec3& c, const Scalar& radius_squared) : center(c), r2(radius_squared)
{
    if (!r2.is_real() || r2.sign() <= 0) throw GeometryError("sphere needs r^2 > 0");
}

std::string Sphere::str() const
{
    return "center (" + center[0].str() + ", " + center[1].str() + ", " + center[2].str() + "), r^2 = " + r2.str();
}

Quadric sphere_to_quadric(const Sphere& s)
{
    Mat4 m{};
    m[0][0] = dot(s.center, s.center) - s.r2;
    for (int i = 0; i < 3; ++i) {
        m[0][i + 1] = m[i + 1][0] = -s.center[i];
        m[i + 1][i + 1] = Scalar(1);
    }
    return Quadric(m);
}

Wedge2Matrix wedge2(const Quadric& q)
{
    Wedge2Matrix w{};
    for (int I = 0; I < 6; ++I)
        for (int J = 0; J < 6; ++J) {
            auto [i1, i2] = kPair[I];
            auto [j1, j2] = kPair[J];
            w[I][J] = q(i1, j1) * q(i2, j2) - q(i1, j2) * q(i2, j1);
        }
    return w;
}

bool is_zero(const Wedge2Matrix& w)
{
    for (const auto& row : w)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

Scalar tangency_value(const Wedge2Matrix& w, const std::array<Scalar, 6>& p)
{
    Scalar r;
    for (int I = 0; I < 6; ++I) {
        if (p[I].is_zero()) continue;
        for (int J = 0; J < 6; ++J)
            if (!w[I][J].is_zero() && !p[J].is_zero()) r += p[I] * w[I][J] * p[J];
    }
    return r;
}

Scalar tangency_value(const Quadric& q, const PluckerLine& l)
{
    return tangency_value(wedge2(q), l.coords());
}

int quadric_rank(const Quadric& q)
{
    // Fraction-free (Bareiss) elimination with row and column pivoting.
    Mat4 m = q.matrix();
    Scalar prev(1);
    int rank = 0;
    for (int k = 0; k < 4; ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < 4 && pr < 0; ++i)
            for (int j = k; j < 4; ++j)
                if (!m[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[k], m[pr]);
        for (auto& row : m) std::swap(row[k], row[pc]);
        for (int i = k + 1; i < 4; ++i)
            for (int j = k + 1; j < 4; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        for (int i = k + 1; i < 4; ++i) m[i][k] = Scalar();
        prev = m[k][k];
        ++rank;
    }
    return rank;
}

}  // namespace linetan
