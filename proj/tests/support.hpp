#pragma once

#include "linetan/biform.hpp"

#include <random>

namespace testing_support {

using linetan::Rational;
using linetan::Scalar;

class Rng {
public:
    explicit Rng(unsigned long seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long lo, long hi)
    {
        long v = 0;
        while (v == 0) v = integer(lo, hi);
        return v;
    }
    Rational rational(long range = 9, long den = 5) { return Rational(integer(-range, range), integer(1, den)); }
    Rational nonzero_rational(long range = 9, long den = 5)
    {
        Rational q = 0;
        while (q == 0) q = rational(range, den);
        return q;
    }
    Rational positive_rational(long range = 9, long den = 5) { return Rational(integer(1, range), integer(1, den)); }
    Scalar scalar(long range = 9, long den = 5) { return Scalar(rational(range, den)); }
    linetan::BiForm22 biform(long range = 6)
    {
        linetan::BiForm22 f;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) f(i, j) = scalar(range, 3);
        return f;
    }
    linetan::UniPoly poly(int degree, long range = 6)
    {
        std::vector<Scalar> c;
        for (int i = 0; i <= degree; ++i) c.push_back(scalar(range, 3));
        if (c.back().is_zero()) c.back() = Scalar(1);
        return linetan::UniPoly(c);
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline Scalar q(long n, long d = 1)
{
    return Scalar(Rational(n, d));
}

inline linetan::P1Point pt(const Scalar& a, const Scalar& b)
{
    return {a, b};
}

}  // namespace testing_support

#include "linetan/projgeom.hpp"

namespace testing_support {

/// Rational rotation matrix (rows) from an integer quaternion.
inline std::array<linetan::Vec3, 3> rotation(long a, long b, long c, long d)
{
    Rational n = a * a + b * b + c * c + d * d;
    auto e = [&](long v) { return Scalar(Rational(v) / n); };
    return {{{e(a * a + b * b - c * c - d * d), e(2 * (b * c - a * d)), e(2 * (b * d + a * c))},
             {e(2 * (b * c + a * d)), e(a * a - b * b + c * c - d * d), e(2 * (c * d - a * b))},
             {e(2 * (b * d - a * c)), e(2 * (c * d + a * b)), e(a * a - b * b - c * c + d * d)}}};
}

inline std::array<linetan::Vec3, 3> random_rotation(Rng& rng)
{
    long a = 0, b = 0, c = 0, d = 0;
    while (a == 0 && b == 0 && c == 0 && d == 0) {
        a = rng.integer(-4, 4);
        b = rng.integer(-4, 4);
        c = rng.integer(-4, 4);
        d = rng.integer(-4, 4);
    }
    return rotation(a, b, c, d);
}

inline linetan::Vec3 random_vec(Rng& rng, long range = 6, long den = 3)
{
    return {rng.scalar(range, den), rng.scalar(range, den), rng.scalar(range, den)};
}

inline linetan::ProjPoint random_point(Rng& rng)
{
    return linetan::ProjPoint::affine(random_vec(rng));
}

/// A random skew pair of affine lines given by point + direction.
inline linetan::LinePair random_affine_pair(Rng& rng)
{
    while (true) {
        auto p = random_point(rng), q = random_point(rng);
        auto u = linetan::ProjPoint::direction(random_vec(rng)), v = linetan::ProjPoint::direction(random_vec(rng));
        if (!u.is_valid() || !v.is_valid()) continue;
        try {
            auto pair = linetan::LinePair::from_points(p, u, q, v);
            if (pair.skew()) return pair;
        } catch (const std::exception&) {
        }
    }
}

}  // namespace testing_support
