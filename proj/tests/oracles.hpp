#pragma once

#include "linetan/biform.hpp"
#include "linetan/quadrics.hpp"
#include "support.hpp"

namespace testing_support {

/// Transcription of the printed expansion of F for a symbolic quadric and the pair x-axis, yz-line at infinity.
inline linetan::BiForm22 printed_expansion(const linetan::Quadric& q)
{
    auto E = q.entries();
    const auto &a = E[0], &b = E[1], &c = E[2], &d = E[3], &e = E[4], &f = E[5], &g = E[6], &h = E[7], &k = E[8],
               &l = E[9];
    Scalar two(2);
    linetan::BiForm22 F;
    F(0, 0) = e * l - g * g;
    F(1, 0) = two * (b * l - d * g);
    F(2, 0) = a * l - d * d;
    F(0, 1) = two * (e * k - g * f);
    F(1, 1) = two * (two * b * k - c * g - d * f);
    F(2, 1) = two * (a * k - d * c);
    F(0, 2) = e * h - f * f;
    F(1, 2) = two * (b * h - c * f);
    F(2, 2) = a * h - c * c;
    return F;
}

/// The printed envelope family (x^2 - w^2) y^2 + sign (x^2 - (1 - y0^2) w^2) z^2.
inline linetan::BiForm22 printed_sphere_family(const Scalar& y0, int sign)
{
    linetan::BiForm22 F;
    F(0, 2) = Scalar(1);
    F(2, 2) = Scalar(-1);
    F(0, 0) = Scalar(sign);
    F(2, 0) = Scalar(-sign) * (Scalar(1) - y0 * y0);
    return F;
}

/// x^2 + (y - y0)^2 + sign z^2 = 1.
inline linetan::Quadric sphere_family_quadric(const Scalar& y0, int sign)
{
    linetan::Mat4 m{};
    m[0][0] = y0 * y0 - Scalar(1);
    m[0][2] = m[2][0] = -y0;
    m[1][1] = m[2][2] = Scalar(1);
    m[3][3] = Scalar(sign);
    return linetan::Quadric(m);
}

inline linetan::Quadric random_quadric(Rng& rng, long range = 7)
{
    while (true) {
        std::array<Scalar, 10> e;
        bool any = false;
        for (auto& v : e) {
            v = rng.scalar(range, 3);
            any = any || !v.is_zero();
        }
        if (any) return linetan::Quadric::from_entries(e);
    }
}

}  // namespace testing_support

namespace testing_support {

/// Plane through three points: the signed 3x3 minors.
inline std::array<Scalar, 4> plane_through(const linetan::ProjPoint& p, const linetan::ProjPoint& q,
                                           const linetan::ProjPoint& r)
{
    std::array<Scalar, 4> n;
    for (int skip = 0; skip < 4; ++skip) {
        int c[3], k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) c[k++] = i;
        Scalar det = p[c[0]] * (q[c[1]] * r[c[2]] - q[c[2]] * r[c[1]]) -
                     p[c[1]] * (q[c[0]] * r[c[2]] - q[c[2]] * r[c[0]]) +
                     p[c[2]] * (q[c[0]] * r[c[1]] - q[c[1]] * r[c[0]]);
        n[skip] = (skip % 2 == 0) ? det : -det;
    }
    return n;
}

/// Coefficients of the (1,1)-form (w,x),(y,z) -> incidence of the transversal with m, as a (2,2)-grid of degree one.
struct Form11 {
    Scalar c[2][2];  // c[i][j]: coefficient of w^i x^(1-i) y^j z^(1-j)
};

inline Form11 meeting_form(const linetan::LinePair& pair, const linetan::PluckerLine& m)
{
    Form11 g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            linetan::P1Point u{Scalar(i), Scalar(1 - i)}, v{Scalar(j), Scalar(1 - j)};
            g.c[i][j] = linetan::incidence_form(linetan::transversal_through(pair, u, v), m);
        }
    return g;
}

inline linetan::BiForm22 square(const Form11& g)
{
    linetan::BiForm22 F;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) F(i + k, j + l) += g.c[i][j] * g.c[k][l];
    return F;
}

}  // namespace testing_support

#include <map>
#include <stdexcept>
#include <string>

namespace testing_support {

/// Evaluates a polynomial written in the computer-algebra output syntax
/// ("(-s^2+2*s-1)*k^2+(2*s-2)*k*l") at given variable values.
class PrintedPoly {
public:
    PrintedPoly(std::string text, std::map<char, Scalar> vars) : s_(std::move(text)), vars_(std::move(vars)) {}

    Scalar value()
    {
        pos_ = 0;
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) throw std::invalid_argument("trailing input in " + s_);
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr()
    {
        Scalar acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        Scalar t = term();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    Scalar term()
    {
        Scalar v = factor();
        while (eat('*')) v *= factor();
        return v;
    }
    Scalar factor()
    {
        skip();
        Scalar base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) throw std::invalid_argument("missing ) in " + s_);
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = 10 * n + (s_[pos_++] - '0');
            base = Scalar(n);
        } else if (pos_ < s_.size() && vars_.count(s_[pos_])) {
            base = vars_.at(s_[pos_++]);
        } else {
            throw std::invalid_argument("unexpected input in " + s_);
        }
        if (eat('^')) {
            skip();
            int e = s_[pos_++] - '0';
            Scalar p(1);
            for (int i = 0; i < e; ++i) p *= base;
            return p;
        }
        return base;
    }

    std::string s_;
    std::map<char, Scalar> vars_;
    std::size_t pos_ = 0;
};

}  // namespace testing_support

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace testing_support {

/// Real common points of two (2,2)-curves with u = [t, 1], lo < t < hi, in double
/// precision: walks the real branches of the first curve (as angles of [y, z]) and
/// bisects sign changes of the second curve along each branch. Tangential
/// intersections are invisible to it.
class SignGridOracle {
public:
    SignGridOracle(const linetan::BiForm22& F1, const linetan::BiForm22& F2)
    {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                c1_[i][j] = F1(i, j).to_double();
                c2_[i][j] = F2(i, j).to_double();
            }
    }

    std::vector<double> intersections(double lo, double hi, int steps) const
    {
        std::vector<double> out;
        const double h = (hi - lo) / steps;
        std::vector<double> prev = branches(lo);
        for (int k = 1; k <= steps; ++k) {
            const double t0 = lo + (k - 1) * h, t1 = lo + k * h;
            std::vector<double> cur = branches(t1);
            walk(t0, prev, t1, cur, 0, out);
            prev = cur;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Follows each branch from t0 to t1, halving the step while the matching of
    // branches is ambiguous (branches close together relative to their motion)
    // or the number of branches changes inside the step.
    void walk(double t0, const std::vector<double>& prev, double t1, const std::vector<double>& cur, int depth,
              std::vector<double>& out) const
    {
        if (prev.size() != cur.size()) {
            if (depth >= 40) return;
            const double tm = (t0 + t1) / 2;
            std::vector<double> mid = branches(tm);
            walk(t0, prev, tm, mid, depth + 1, out);
            walk(tm, mid, t1, cur, depth + 1, out);
            return;
        }
        std::vector<int> match(prev.size());
        double moved = 0, gap = M_PI;
        if (prev.size() == 2) {
            double straight = angle_distance(prev[0], cur[0]) + angle_distance(prev[1], cur[1]);
            double crossed = angle_distance(prev[0], cur[1]) + angle_distance(prev[1], cur[0]);
            match = straight <= crossed ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
            for (int i = 0; i < 2; ++i) moved = std::max(moved, angle_distance(prev[i], cur[match[i]]));
            gap = std::min(angle_distance(prev[0], prev[1]), angle_distance(cur[0], cur[1]));
        } else {
            for (std::size_t i = 0; i < prev.size(); ++i) match[i] = static_cast<int>(i);
        }
        if (moved > 0.25 * gap && depth < 40) {
            const double tm = (t0 + t1) / 2;
            std::vector<double> mid = branches(tm);
            walk(t0, prev, tm, mid, depth + 1, out);
            walk(tm, mid, t1, cur, depth + 1, out);
            return;
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            double th0 = prev[i], th1 = cur[match[i]];
            double s0 = second(t0, th0), s1 = second(t1, th1);
            if (s0 == 0 || (s0 < 0) != (s1 < 0)) out.push_back(bisect(t0, th0, s0, t1, th1));
        }
    }

    static double angle_distance(double a, double b)
    {
        double d = std::fmod(std::fabs(a - b), M_PI);
        return std::min(d, M_PI - d);
    }
    static double nearest(const std::vector<double>& cands, double th)
    {
        double best = cands[0];
        for (double c : cands)
            if (angle_distance(c, th) < angle_distance(best, th)) best = c;
        return best;
    }
    std::array<double, 3> fiber(const double c[3][3], double t) const
    {
        std::array<double, 3> f{};
        for (int j = 0; j < 3; ++j) f[j] = c[0][j] + c[1][j] * t + c[2][j] * t * t;
        return f;  // f[j]: coefficient of y^j z^(2-j)
    }
    std::vector<double> branches(double t) const
    {
        auto f = fiber(c1_, t);
        double A = f[2], B = f[1], C = f[0];
        double D = B * B - 4 * A * C;
        if (D < 0) return {};
        double q = -(B + (B >= 0 ? 1 : -1) * std::sqrt(D)) / 2;
        std::vector<double> r;
        auto push = [&](double y, double z) {
            if (y == 0 && z == 0) return;
            double th = std::atan2(y, z);
            if (th < 0) th += M_PI;
            r.push_back(th);
        };
        push(q, A);
        push(C, q);
        return r;
    }
    double second(double t, double th) const
    {
        auto f = fiber(c2_, t);
        double y = std::sin(th), z = std::cos(th);
        return f[2] * y * y + f[1] * y * z + f[0] * z * z;
    }
    double bisect(double t0, double th0, double s0, double t1, double th1) const
    {
        for (int it = 0; it < 60; ++it) {
            double tm = (t0 + t1) / 2;
            auto b = branches(tm);
            if (b.empty()) break;
            double thm = nearest(b, th0);
            double sm = second(tm, thm);
            if ((sm < 0) == (s0 < 0)) {
                t0 = tm;
                th0 = thm;
                s0 = sm;
            } else {
                t1 = tm;
                th1 = thm;
            }
        }
        return (t0 + t1) / 2;
    }

    double c1_[3][3];
    double c2_[3][3];
};

}  // namespace testing_support
