#include "linetan/envelope.hpp"

#include "linetan/errors.hpp"

namespace linetan {

BiForm22 envelope_form(const LinePair& pair, const Wedge2Matrix& w)
{
    if (!pair.skew()) throw GeometryError("lines not skew");
    // p = w y p(a,c) + w z p(a,d) + x y p(b,c) + x z p(b,d)
    struct Piece {
        std::array<Scalar, 6> p;
        int wpow, ypow;
    };
    const ProjPoint* first[2] = {&pair.a(), &pair.b()};
    const ProjPoint* second[2] = {&pair.c(), &pair.d()};
    std::vector<Piece> pieces;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            const ProjPoint& u = *first[s];
            const ProjPoint& v = *second[t];
            Piece piece;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) piece.p[k++] = u[i] * v[j] - u[j] * v[i];
            piece.wpow = s == 0 ? 1 : 0;
            piece.ypow = t == 0 ? 1 : 0;
            pieces.push_back(piece);
        }
    BiForm22 f;
    for (const auto& A : pieces)
        for (const auto& B : pieces) {
            Scalar v;
            for (int I = 0; I < 6; ++I) {
                if (A.p[I].is_zero()) continue;
                for (int J = 0; J < 6; ++J)
                    if (!w[I][J].is_zero() && !B.p[J].is_zero()) v += A.p[I] * w[I][J] * B.p[J];
            }
            f(A.wpow + B.wpow, A.ypow + B.ypow) += v;
        }
    return f;
}

BiForm22 envelope_form(const LinePair& pair, const Quadric& q)
{
    return envelope_form(pair, wedge2(q));
}

std::optional<BiForm22> phi(const LinePair& pair, const Quadric& q)
{
    BiForm22 f = envelope_form(pair, q);
    if (f.is_zero()) return std::nullopt;
    return f;
}

BiPoly affine_sphere_curve(const Scalar& delta, const Sphere& s)
{
    if (delta.is_zero()) throw GeometryError("lines not skew (delta = 0)");
    const Scalar &a = s.center[0], &b = s.center[1], &c = s.center[2], &r2 = s.r2, &d = delta;
    Scalar one(1), two(2), four(4);
    Scalar dd = d * d;
    BiPoly p;
    p.add_term(2, 2, four * dd);
    p.add_term(2, 1, four * d * (b - a * d));
    p.add_term(2, 0, (b - a * d) * (b - a * d) + (one + dd) * ((one + c) * (one + c) - r2));
    p.add_term(1, 2, -four * d * (b + a * d));
    p.add_term(1, 1, two * ((r2 - c * c) * (one - dd) + (one - b * b) + dd * (a * a - one)));
    p.add_term(1, 0, -four * (one + c) * (a + b * d));
    p.add_term(0, 2, (b + a * d) * (b + a * d) + (one + dd) * ((one - c) * (one - c) - r2));
    p.add_term(0, 1, four * (c - one) * (a - b * d));
    p.add_term(0, 0, four * (a * a + b * b - r2));
    return p;
}

BiPoly projective_sphere_curve(const Vec3& u, const Vec3& v, const Sphere& s)
{
    if (!u[2].is_zero() || !v[1].is_zero()) throw GeometryError("directions must have the form (u1,u2,0), (v1,0,v3)");
    if (u[1].is_zero() || v[2].is_zero()) throw GeometryError("u2 and v3 must be nonzero");
    const Scalar &u1 = u[0], &u2 = u[1], &v1 = v[0], &v3 = v[2];
    const Scalar &a = s.center[0], &b = s.center[1], &c = s.center[2], &r2 = s.r2;
    Scalar two(2);
    Scalar bc = b * b + c * c - r2, ab = a * a + b * b - r2, ac = a * a + c * c - r2;
    BiPoly p;
    p.add_term(2, 2, v3 * v3);
    p.add_term(2, 0, u2 * u2);
    p.add_term(1, 2, two * v3 * (c * v1 - a * v3));
    p.add_term(1, 1, two * (b * u2 * v1 + c * u1 * v3));
    p.add_term(1, 0, two * u2 * (b * u1 - a * u2));
    p.add_term(0, 2, bc * v1 * v1 - two * a * c * v1 * v3 + ab * v3 * v3);
    p.add_term(0, 1, two * (bc * u1 * v1 - a * c * u1 * v3 - b * u2 * (a * v1 + c * v3)));
    p.add_term(0, 0, bc * u1 * u1 - two * a * b * u1 * u2 + ac * u2 * u2);
    return p;
}

bool is_E1(const Quadric& q)
{
    return quadric_rank(q) <= 1;
}

bool is_E2(const Quadric& q)
{
    auto e = q.entries();
    for (int k = 0; k < 7; ++k)
        if (!e[k].is_zero()) return false;
    return true;
}

bool is_E3(const Quadric& q)
{
    auto e = q.entries();
    for (int k : {2, 3, 5, 6, 7, 8, 9})
        if (!e[k].is_zero()) return false;
    return true;
}

}  // namespace linetan
