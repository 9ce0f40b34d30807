#include "linetan/fiberfamilies.hpp"

#include "linetan/errors.hpp"

#include <sstream>

namespace linetan {

namespace {

enum { A, B, C, D, E, F, G, H, K, L };

QuadricCoords row(std::initializer_list<std::pair<int, Scalar>> terms) {
    QuadricCoords r{};
    for (const auto& [i, v] : terms) r[i] = v;
    return r;
}

Scalar dot(const QuadricCoords& r, const QuadricCoords& x) {
    Scalar acc;
    for (int i = 0; i < 10; ++i)
        if (!r[i].is_zero()) acc += r[i] * x[i];
    return acc;
}

}  // namespace

std::optional<FiberWitness> fiber_membership(const LinePair& pair, const BiForm22& C, const Quadric& q) {
    if (C.is_zero()) throw GeometryError("fiber target must be nonzero");
    auto image = phi(pair, q);
    if (!image) return std::nullopt;
    auto lambda = image->ratio_to(C);
    if (!lambda) return std::nullopt;
    return FiberWitness{C, q, *lambda};
}

std::optional<std::string> excluded_factor(const Scalar& s, const Scalar& t) {
    if (s.is_zero()) return "s = 0";
    if (t.is_zero()) return "t = 0";
    if (s == Scalar(1)) return "s - 1 = 0";
    if (t == Scalar(1)) return "t - 1 = 0";
    if (s == t) return "s - t = 0";
    return std::nullopt;
}

std::vector<Scalar> f2_generator_values(const Scalar& s, const Scalar& t, const QuadricCoords& x) {
    const Scalar s1 = s - 1, t1 = t - 1;
    const auto& [a, b, c, d, e, f, g, h, k, l] = x;
    return {
        s1 * k * k - 2 * k * l - l * l,
        s1 * h + 2 * t1 * k + t1 * l,
        f * l - g * k,
        e * l - g * g,
        d + f + g,
        c,
        2 * b + e,
        a,
        s1 * f * k - 2 * g * k - g * l,
        s1 * f * f - 2 * f * g - g * g,
        e * k - f * g,
    };
}

QuadricCoords ConicF2::point(const P1Point& mn) const {
    const Scalar& m = mn.first;
    const Scalar& n = mn.second;
    const Scalar r1 = root + 1;
    QuadricCoords x{};
    x[E] = m * m;
    x[B] = -x[E] / 2;
    x[G] = m * n;
    x[F] = -x[G] / r1;
    x[D] = -x[F] - x[G];
    x[K] = -(n * n) / r1;
    x[L] = -r1 * x[K];
    x[H] = -((2 * t - 2) * x[K] + (t - 1) * x[L]) / (s - 1);
    return x;
}

bool ConicF2::satisfies(const QuadricCoords& x) const {
    for (const auto& r : linear)
        if (!dot(r, x).is_zero()) return false;
    return (x[E] * x[L] - x[G] * x[G]).is_zero();
}

std::pair<Scalar, Scalar> ConicF2::kl_line() const { return {root + 1, Scalar(1)}; }

ConicF2 conic_f2_build(const Scalar& s, const Scalar& t, int branch) {
    if (branch != 1 && branch != -1) throw GeometryError("branch must be +1 or -1");
    auto rs = s.sqrt();
    if (!rs) throw GeometryError("extension required: s = " + s.str() + " is not a square");
    if (auto bad = excluded_factor(s, t)) throw GeometryError("excluded parameters: " + *bad);
    ConicF2 c;
    c.s = s;
    c.t = t;
    c.branch = branch;
    c.root = *rs * branch;
    const Scalar r1 = c.root + 1;
    c.linear = {
        row({{A, 1}}),
        row({{C, 1}}),
        row({{B, 2}, {E, 1}}),
        row({{D, 1}, {F, 1}, {G, 1}}),
        row({{H, s - 1}, {K, 2 * t - 2}, {L, t - 1}}),
        row({{L, 1}, {K, r1}}),
        row({{F, r1}, {G, 1}}),
    };
    return c;
}

QuadricCoords explicit_point_p(const Scalar& s, const Scalar& t) {
    auto rs = s.sqrt();
    if (!rs) throw GeometryError("extension required: s = " + s.str() + " is not a square");
    const Scalar q = *rs;
    const Scalar s1 = s - 1, t1 = t - 1;
    return {Scalar(0),           -(q + 1) * s1, Scalar(0), -2 * q * s1,          2 * (q + 1) * s1,
            -2 * s1,             2 * (q + 1) * s1,  4 * t1 - 2 * t1 * (q + 1), -2 * s1, 2 * (q + 1) * s1};
}

Scalar explicit_p_coefficient(const Scalar& s) {
    auto rs = s.sqrt();
    if (!rs) throw GeometryError("extension required: s = " + s.str() + " is not a square");
    const Scalar m = *rs - 1, p = *rs + 1;
    return -4 * s * m * m * p * p;
}

int linear_rank(std::vector<QuadricCoords> rows) {
    int rank = 0;
    for (int col = 0; col < 10 && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col].is_zero()) continue;
            const Scalar f = rows[i][col] / rows[rank][col];
            for (int j = col; j < 10; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

P1Point sample_parameter(int i) {
    if (i == 0) return {Scalar(1), Scalar(0)};
    if (i == 1) return {Scalar(0), Scalar(1)};
    // 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, ...
    const int j = i - 2;
    const int sign = (j % 2 == 0) ? 1 : -1;
    const int step = j / 2;
    const int num = step / 2 + 1;
    if (step % 2 == 0) return {Scalar(sign * num), Scalar(1)};
    return {Scalar(sign), Scalar(num + 1)};
}

}  // namespace

ConicVerification conic_sample_and_verify(const ConicF2& conic, const BiForm22& C, int n) {
    ConicVerification rep;
    const LinePair pair = canonical_projective_pair();
    for (int i = 0; i < n; ++i) {
        const P1Point mn = sample_parameter(i);
        const QuadricCoords x = conic.point(mn);
        ++rep.samples;
        if (!conic.satisfies(x)) {
            rep.failures.push_back(mn);
            continue;
        }
        const Quadric q = Quadric::from_entries(x);
        if (!phi(pair, q)) {
            rep.degenerate.push_back(mn);
            continue;
        }
        if (auto w = fiber_membership(pair, C, q)) {
            ++rep.witnesses;
            rep.lambdas.push_back(w->lambda);
        } else {
            rep.failures.push_back(mn);
        }
    }
    return rep;
}

Scalar KLQuadratic::eval(const Scalar& k, const Scalar& l) const {
    return coeffs[0] * k * k + coeffs[1] * k * l + coeffs[2] * l * l;
}

std::string KLQuadratic::str() const {
    std::ostringstream out;
    out << "(" << coeffs[0].str() << ")*k^2 + (" << coeffs[1].str() << ")*k*l + (" << coeffs[2].str() << ")*l^2";
    if (factors.size() == 2) {
        out << " = ";
        if (lead != Scalar(1)) out << "(" << lead.str() << ")*";
        for (const auto& f : factors) out << "((" << f.k.str() << ")*k + (" << f.l.str() << ")*l)";
    }
    return out.str();
}

namespace {

KLQuadratic make_kl(std::array<Scalar, 3> c, std::array<int, 2> comps) {
    KLQuadratic q;
    q.coeffs = c;
    q.components = comps;
    q.discriminant = c[1] * c[1] - 4 * c[0] * c[2];
    q.real_factors = q.discriminant.is_real() && c[0].is_real() && c[2].is_real() && q.discriminant.sign() > 0;

    std::optional<Scalar> root = q.discriminant.sqrt();
    if (!root && q.discriminant.is_rational()) root = Scalar::sqrt_of(q.discriminant.to_rational());
    if (!root) return q;
    try {
        if (c[0].is_zero()) {
            // l (c1 k + c2 l)
            q.lead = Scalar(1);
            q.factors = {{Scalar(0), Scalar(1)}, {c[1], c[2]}};
            return q;
        }
        // c0 (k - rho1 l)(k - rho2 l), each factor rescaled to l-coefficient 1 when possible
        q.lead = c[0];
        for (int sgn : {1, -1}) {
            const Scalar rho = (-c[1] + sgn * *root) / (2 * c[0]);
            LinearKL f{Scalar(1), -rho};
            if (!rho.is_zero()) {
                q.lead = q.lead * f.l;
                f = {Scalar(1) / f.l, Scalar(1)};
            }
            q.factors.push_back(f);
        }
    } catch (const std::domain_error&) {
        q.factors.clear();
    }
    return q;
}

}  // namespace

KLTable kl_quadratic_table(const Scalar& s, const Scalar& t) {
    KLTable tab;
    const Scalar s1 = s - 1;
    tab.rows[0] = make_kl({-(s1 * s1), 2 * s1, s * t - 1}, {1, 6});
    tab.rows[1] = make_kl({s1, Scalar(-2), Scalar(-1)}, {2, 5});
    tab.rows[2] = make_kl({s1 * s1, -2 * s1, 1 - t}, {3, 4});
    if (auto bad = excluded_factor(s, t)) {
        tab.excluded = true;
        tab.excluded_reason = *bad;
    }
    return tab;
}

}  // namespace linetan
