// linetan-cli: classification reports, normal forms, fiber checks and plot data.

#include "cli_io.hpp"

#include "linetan/errors.hpp"
#include "linetan/fiberfamilies.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace linetan;
using cli::Json;

namespace {

enum Exit { ok = 0, io_error = 1, parse_error = 2, geometry_error = 3, contract_error = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input, out;
    cli::Format format = cli::Format::json;
    int precision = 12;
    int samples = 0;
    std::string mode;
    std::string s, t;
    double range = 4;
};

// Short machine-readable names for the case tags.
std::string case_key(CaseTag t)
{
    switch (t) {
    case CaseTag::none: return "none";
    case CaseTag::affine_tangent_spheres: return "affine_tangent_spheres";
    case CaseTag::affine_hyperboloid: return "affine_hyperboloid";
    case CaseTag::projective_tangent_spheres: return "projective_tangent_spheres";
    case CaseTag::projective_reflection: return "projective_reflection";
    }
    return "none";
}

std::string kind_name(CommonComponent::Kind k)
{
    switch (k) {
    case CommonComponent::Kind::pencil_l1: return "pencil through a point of l1";
    case CommonComponent::Kind::pencil_l2: return "pencil through a point of l2";
    case CommonComponent::Kind::correspondence: return "(1,1) correspondence";
    case CommonComponent::Kind::whole_curve: return "whole curve";
    case CommonComponent::Kind::other: return "other";
    }
    return "other";
}

Json strings(const std::vector<Scalar>& v)
{
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

Json line_json(const PluckerLine& l)
{
    PluckerLine n = l.normalized();
    return strings({n.coords().begin(), n.coords().end()});
}

Json curve_json(const BiForm22& F, const CurveClass& c)
{
    Json j;
    j["form"] = F.str();
    j["class"] = c.tag;
    j["description"] = c.description();
    Json factors = Json::array();
    for (const auto& f : c.factors) {
        Json e;
        e["bidegree"] = Json::array({f.deg_wx, f.deg_yz});
        e["multiplicity"] = f.multiplicity;
        e["components"] = f.components;
        e["real"] = f.real;
        e["form"] = f.form.str();
        factors.push_back(e);
    }
    j["factors"] = factors;
    return j;
}

Json tangent_json(const CommonTangent& t, int precision)
{
    Json j;
    j["real"] = t.real;
    j["exact"] = t.exact();
    j["multiplicity"] = t.resultant_multiplicity;
    if (t.u) j["u"] = t.u->str();
    if (t.v) j["v"] = t.v->str();
    if (!t.exact()) {
        j["defining_polynomial"] = t.defining_poly.str("t");
        if (t.u_interval)
            j["u_interval"] = Json::array({t.u_interval->lo.get_str(), t.u_interval->hi.get_str()});
    }
    j["u_at_infinity"] = t.u_at_infinity;
    j["v_at_infinity"] = t.v_at_infinity;
    if (!t.u_at_infinity) j["u_approx"] = cli::complex_number(t.u_approx, precision);
    if (!t.v_at_infinity) j["v_approx"] = cli::complex_number(t.v_approx, precision);
    if (t.shares_fiber) j["shares_fiber"] = true;
    if (t.line) j["line"] = line_json(*t.line);
    else if (t.real) {
        Json a = Json::array();
        for (double v : t.line_approx) a.push_back(cli::number(v, precision));
        j["line_approx"] = a;
    }
    return j;
}

Json cmd_classify(const Options& o)
{
    cli::Document doc = cli::read_document(o.input);
    if (doc.surfaces.size() != 2 || !doc.surfaces[0].sphere || !doc.surfaces[1].sphere)
        throw cli::ParseError("classify: the document needs exactly two spheres");
    Configuration cfg = Configuration::make(doc.lines, *doc.surfaces[0].sphere, *doc.surfaces[1].sphere);
    if (!o.mode.empty() && o.mode != to_string(cfg.mode))
        throw GeometryError("configuration is " + to_string(cfg.mode) + ", not " + o.mode);
    ClassificationReport rep = classify_configuration(cfg);

    Json j;
    j["command"] = "classify";
    j["verdict"] = to_string(rep.verdict);
    j["case"] = case_key(rep.tag);
    j["case_description"] = to_string(rep.tag);
    j["mode"] = to_string(rep.mode);
    j["curves"] = Json::array({curve_json(rep.curve1, rep.class1), curve_json(rep.curve2, rep.class2)});
    if (rep.verdict == Verdict::infinite || !rep.components.empty()) {
        Json comp;
        comp["form"] = rep.common.str();
        Json parts = Json::array();
        const int n = o.samples > 0 ? o.samples : 5;
        for (const auto& c : rep.components) {
            Json e;
            e["kind"] = kind_name(c.kind);
            e["real"] = c.real;
            e["form"] = c.form.str();
            if (c.point) e["point"] = c.point->str();
            if (c.real && rep.verdict == Verdict::infinite) {
                Json members = Json::array();
                for (const auto& l : sample_family(cfg, c, n)) members.push_back(line_json(l));
                e["sample_members"] = members;
            }
            parts.push_back(e);
        }
        comp["components"] = parts;
        j["common_component"] = comp;
    }
    if (rep.tangents) {
        const auto& T = *rep.tangents;
        Json t;
        t["resultant"] = T.resultant.str();
        t["total_multiplicity"] = T.total_multiplicity;
        t["complex_count"] = T.complex_count;
        t["real_count"] = T.real_count;
        Json sols = Json::array();
        for (const auto& s : T.solutions) sols.push_back(tangent_json(s, o.precision));
        t["solutions"] = sols;
        j["tangents"] = t;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

Json cmd_normal_form(const Options& o)
{
    cli::Document doc = cli::read_document(o.input);
    if (doc.surfaces.size() != 1) throw cli::ParseError("normal-form: the document needs exactly one sphere or quadric");
    if (!doc.lines.skew()) throw GeometryError("lines intersect: reduce to planar problem");
    const Quadric& Q = doc.surfaces[0].quadric;

    Json j;
    j["command"] = "normal-form";
    j["quadric_rank"] = quadric_rank(Q);
    auto F = phi(doc.lines, Q);
    if (!F) {
        j["status"] = "degenerate";
        j["reason"] = "the envelope form vanishes identically";
        return j;
    }
    CurveClass c = classify(*F);
    j["curve"] = curve_json(*F, c);
    bool square = !c.factors.empty();
    for (const auto& f : c.factors) square = square && f.multiplicity % 2 == 0;
    if (c.tag != 1) {
        j["status"] = "singular";
        j["reason"] = "singular: class " + std::to_string(c.tag) + (square ? ", the envelope form is a perfect square" : "");
        j["perfect_square"] = square;
        return j;
    }
    j["status"] = "smooth";

    Json ram = Json::array();
    for (const auto& r : ramification(*F)) {
        Json e;
        if (r.point) e["point"] = r.point->str();
        else e["defining_polynomial"] = r.defining_poly.str("t");
        if (r.double_point) e["double_point"] = r.double_point->str();
        e["approx"] = cli::complex_number(r.approx, o.precision);
        e["at_infinity"] = r.at_infinity;
        ram.push_back(e);
    }
    j["ramification"] = ram;

    NormalForm nf = normal_form(*F);
    switch (nf.kind) {
    case NormalForm::Kind::asymmetric:
        j["kind"] = "asymmetric";
        j["gamma1"] = nf.gamma1.str();
        j["gamma2"] = nf.gamma2.str();
        j["s"] = nf.s.str();
        j["t"] = nf.t.str();
        break;
    case NormalForm::Kind::symmetric:
        j["kind"] = "symmetric";
        j["gamma1"] = nf.gamma1.str();
        j["gamma2"] = nf.gamma2.str();
        j["s_squared"] = nf.s_squared.str();
        j["sign"] = nf.sign > 0 ? "+" : "-";
        j["s_imaginary"] = nf.s_imaginary;
        break;
    case NormalForm::Kind::unresolved:
        j["kind"] = "unresolved";
        j["reason"] = nf.reason;
        return j;
    }
    j["normal_form"] = nf.form().str();
    Json orbit = Json::array();
    for (const auto& [s, t] : nf.orbit) orbit.push_back(Json::array({s.str(), t.str()}));
    j["orbit"] = orbit;
    return j;
}

std::pair<Scalar, Scalar> fiber_parameters(const Options& o)
{
    if (!o.s.empty() || !o.t.empty()) {
        if (o.s.empty() || o.t.empty()) throw cli::ParseError("fiber-verify: give both --s and --t");
        return {cli::scalar_field(Json(o.s), "--s"), cli::scalar_field(Json(o.t), "--t")};
    }
    if (o.input.empty()) throw cli::ParseError("fiber-verify: give --s and --t or an --input document");
    Json j = cli::read_json(o.input);
    if (!j.is_object() || !j.contains("s") || !j.contains("t"))
        throw cli::ParseError(o.input + ": expected fields 's' and 't'");
    return {cli::scalar_field(j["s"], "s"), cli::scalar_field(j["t"], "t")};
}

Json cmd_fiber_verify(const Options& o)
{
    auto [s, t] = fiber_parameters(o);
    if (auto bad = excluded_factor(s, t)) throw GeometryError("excluded parameters: " + *bad);
    if (!s.is_rational() || !rational_sqrt(s.rational_part()))
        throw GeometryError("extension required: s = " + s.str() +
                            " is not a rational square; choose s = r^2 with r rational, e.g. s = 4");
    const int n = o.samples > 0 ? o.samples : 25;
    const BiForm22 C = asymmetric_normal_form(s, t);
    const LinePair pair = canonical_projective_pair();

    Json j;
    j["command"] = "fiber-verify";
    j["s"] = s.str();
    j["t"] = t.str();
    j["curve"] = C.str();
    bool all = true;
    Json branches = Json::array();
    for (int branch : {1, -1}) {
        ConicF2 conic = conic_f2_build(s, t, branch);
        ConicVerification v = conic_sample_and_verify(conic, C, n);
        all = all && v.verified();
        Json b;
        b["branch"] = branch > 0 ? "+" : "-";
        b["root"] = conic.root.str();
        b["linear_rank"] = linear_rank(conic.linear);
        b["samples"] = v.samples;
        b["witnesses"] = v.witnesses;
        Json deg = Json::array();
        for (const auto& p : v.degenerate) deg.push_back(p.str());
        b["degenerate"] = deg;
        Json fail = Json::array();
        for (const auto& p : v.failures) fail.push_back(p.str());
        b["failures"] = fail;
        b["verified"] = v.verified();
        branches.push_back(b);
    }
    j["branches"] = branches;

    KLTable table = kl_quadratic_table(s, t);
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        Json e;
        e["quadratic"] = r.str();
        e["components"] = Json::array({r.components[0], r.components[1]});
        e["discriminant"] = r.discriminant.str();
        Json fac = Json::array();
        for (const auto& f : r.factors) fac.push_back("(" + f.k.str() + ")*k + (" + f.l.str() + ")*l");
        e["lead"] = r.lead.str();
        e["factors"] = fac;
        e["real_factors"] = r.real_factors;
        rows.push_back(e);
    }
    j["kl_table"] = rows;

    QuadricCoords p = explicit_point_p(s, t);
    bool on_component = true;
    for (const auto& g : f2_generator_values(s, t, p)) on_component = on_component && g.is_zero();
    auto Fp = phi(pair, Quadric::from_entries(p));
    Scalar coefficient = Fp ? (*Fp)(2, 0) : Scalar();
    Scalar expected = explicit_p_coefficient(s);
    Json pj;
    pj["coordinates"] = strings({p.begin(), p.end()});
    pj["satisfies_generators"] = on_component;
    pj["w2z2_coefficient"] = coefficient.str();
    pj["expected"] = expected.str();
    pj["proportional_to_curve"] = Fp && Fp->projectively_equal(C);
    const bool p_ok = on_component && coefficient == expected && Fp && Fp->projectively_equal(C);
    pj["verified"] = p_ok;
    j["point_p"] = pj;
    j["verified"] = all && p_ok;
    return j;
}

// ---- plot data -------------------------------------------------------------

using V4 = std::array<double, 4>;

V4 to_doubles(const ProjPoint& p)
{
    return {p[0].to_double(), p[1].to_double(), p[2].to_double(), p[3].to_double()};
}

struct NumLine {
    std::array<double, 3> point, direction;
};

std::optional<NumLine> numeric_line(const V4& P, const V4& Q)
{
    const double eps = 1e-12;
    auto aff = [](const V4& X) { return std::array<double, 3>{X[1] / X[0], X[2] / X[0], X[3] / X[0]}; };
    auto tail = [](const V4& X) { return std::array<double, 3>{X[1], X[2], X[3]}; };
    if (std::fabs(P[0]) > eps && std::fabs(Q[0]) > eps) {
        auto a = aff(P), b = aff(Q);
        return NumLine{a, {b[0] - a[0], b[1] - a[1], b[2] - a[2]}};
    }
    if (std::fabs(P[0]) > eps) return NumLine{aff(P), tail(Q)};
    if (std::fabs(Q[0]) > eps) return NumLine{aff(Q), tail(P)};
    return std::nullopt;  // the line at infinity
}

/// Where the line touches q: the double root of q restricted to the line.
std::optional<std::array<double, 3>> contact_point(const Quadric& q, const NumLine& l)
{
    double X[4] = {1, l.point[0], l.point[1], l.point[2]}, D[4] = {0, l.direction[0], l.direction[1], l.direction[2]};
    double A = 0, B = 0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            double m = q(i, k).to_double();
            A += D[i] * m * D[k];
            B += X[i] * m * D[k];
        }
    if (std::fabs(A) < 1e-14) return std::nullopt;
    double s = -B / A;
    return std::array<double, 3>{l.point[0] + s * l.direction[0], l.point[1] + s * l.direction[1],
                                 l.point[2] + s * l.direction[2]};
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string() + ": cannot write");
    out << text;
    if (!out) throw IoError(path.string() + ": write failed");
}

Json cmd_plot_data(const Options& o)
{
    if (o.out.empty()) throw cli::ParseError("plot-data: --out <directory> is required");
    cli::Document doc = cli::read_document(o.input);
    if (doc.surfaces.empty()) throw cli::ParseError("plot-data: the document needs at least one sphere or quadric");
    if (!doc.lines.skew()) throw GeometryError("lines intersect: reduce to planar problem");
    const int n = o.samples > 0 ? o.samples : 200;
    const int prec = o.precision;
    auto num = [&](double v) { return cli::approx(v, prec); };

    std::filesystem::path dir(o.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError(dir.string() + ": " + ec.message());

    std::string curve = cli::csv_row({"surface", "x", "z"});
    std::string lines = cli::csv_row({"surface", "x", "z", "px", "py", "pz", "dx", "dy", "dz"});
    std::string locus = cli::csv_row({"surface", "x", "y", "z"});
    std::string ram = cli::csv_row({"surface", "w", "x", "y", "z", "px", "py", "pz", "dx", "dy", "dz"});
    std::string vertical = ram;

    Json summary;
    summary["command"] = "plot-data";
    Json per = Json::array();
    for (std::size_t si = 0; si < doc.surfaces.size(); ++si) {
        const auto& surf = doc.surfaces[si];
        const std::string label = std::to_string(si);
        Json sj;
        sj["surface"] = surf.label;
        auto F = phi(doc.lines, surf.quadric);
        if (!F) {
            sj["status"] = "the envelope form vanishes identically";
            per.push_back(sj);
            continue;
        }
        int points = 0, ramified = 0, verticals = 0;
        auto emit_line = [&](std::string& sink, const std::vector<std::string>& head, const V4& P, const V4& Q,
                             bool with_contact) {
            auto l = numeric_line(P, Q);
            if (!l) return;
            std::vector<std::string> row = head;
            for (double v : l->point) row.push_back(num(v));
            for (double v : l->direction) row.push_back(num(v));
            sink += cli::csv_row(row);
            if (!with_contact) return;
            if (auto c = contact_point(surf.quadric, *l)) locus += cli::csv_row({label, num((*c)[0]), num((*c)[1]), num((*c)[2])});
        };

        // F(1, x; 1, z) = A(x) + B(x) z + C(x) z^2
        for (int i = 0; i < n; ++i) {
            double x = -o.range + 2 * o.range * i / std::max(1, n - 1);
            double c[3];
            for (int jj = 0; jj < 3; ++jj) {
                c[jj] = 0;
                for (int k = 0; k < 3; ++k) c[jj] += (*F)(k, 2 - jj).to_double() * std::pow(x, 2 - k);
            }
            std::vector<double> zs;
            if (std::fabs(c[2]) < 1e-14) {
                if (std::fabs(c[1]) > 1e-14) zs.push_back(-c[0] / c[1]);
            } else {
                double disc = c[1] * c[1] - 4 * c[2] * c[0];
                if (disc >= 0) {
                    double r = std::sqrt(disc);
                    zs.push_back((-c[1] - r) / (2 * c[2]));
                    if (r > 0) zs.push_back((-c[1] + r) / (2 * c[2]));
                }
            }
            for (double z : zs) {
                ++points;
                curve += cli::csv_row({label, num(x), num(z)});
                V4 P = to_doubles(doc.lines.point_on_l1({Scalar(1), Scalar(Rational(x))}));
                V4 Q = to_doubles(doc.lines.point_on_l2({Scalar(1), Scalar(Rational(z))}));
                emit_line(lines, {label, num(x), num(z)}, P, Q, true);
            }
        }

        // Real roots of the discriminant in (y, z) give the ramification tangents.
        BinaryForm disc = discriminant_in_yz(*F);
        std::vector<std::pair<double, double>> roots;  // [w, x]
        if (!disc.is_zero()) {
            if (disc.infinity_multiplicity() > 0) roots.emplace_back(1.0, 0.0);
            for (auto r : approximate_roots(disc.poly))
                if (std::fabs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r))) roots.emplace_back(r.real(), 1.0);
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end(),
                                [](auto a, auto b) { return std::fabs(a.first - b.first) < 1e-9 && a.second == b.second; }),
                    roots.end());
        for (auto [w, x] : roots) {
            double a[3];
            for (int jj = 0; jj < 3; ++jj) {
                a[jj] = 0;
                for (int k = 0; k < 3; ++k) a[jj] += (*F)(k, jj).to_double() * std::pow(w, k) * std::pow(x, 2 - k);
            }
            // a[2] y^2 + a[1] yz + a[0] z^2 has a double root
            double y = 1, z = 0;
            if (std::fabs(a[2]) > 1e-12) {
                y = -a[1];
                z = 2 * a[2];
            } else if (std::fabs(a[0]) > 1e-12) {
                y = 2 * a[0];
                z = -a[1];
            }
            double norm = std::hypot(y, z);
            y /= norm;
            z /= norm;
            if (y < 0 || (y == 0 && z < 0)) y = -y, z = -z;
            ++ramified;
            V4 P{}, Q{};
            const auto &A = doc.lines.a(), &Bp = doc.lines.b(), &Cp = doc.lines.c(), &Dp = doc.lines.d();
            for (int k = 0; k < 4; ++k) {
                P[k] = w * A[k].to_double() + x * Bp[k].to_double();
                Q[k] = y * Cp[k].to_double() + z * Dp[k].to_double();
            }
            std::vector<std::string> head{label, num(w), num(x), num(y), num(z)};
            emit_line(ram, head, P, Q, false);
            if (std::fabs(y) < 1e-9) {
                ++verticals;
                emit_line(vertical, head, P, Q, false);
            }
        }
        sj["curve_points"] = points;
        sj["ramification_tangents"] = ramified;
        sj["vertical_tangents"] = verticals;
        per.push_back(sj);
    }

    write_file(dir / "curve_points.csv", curve);
    write_file(dir / "tangent_lines.csv", lines);
    write_file(dir / "tangency_locus.csv", locus);
    write_file(dir / "ramification_tangents.csv", ram);
    write_file(dir / "vertical_tangents.csv", vertical);
    summary["surfaces"] = per;
    summary["files"] = Json::array({"curve_points.csv", "tangent_lines.csv", "tangency_locus.csv",
                                    "ramification_tangents.csv", "vertical_tangents.csv"});
    return summary;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lines transversal to two lines and tangent to quadrics: exact classification tools"};
    app.require_subcommand(1);
    Options o;

    const std::map<std::string, cli::Format> formats{
        {"json", cli::Format::json}, {"text", cli::Format::text}, {"csv", cli::Format::csv}};
    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", o.input, "configuration document (JSON)");
        if (needs_input) in->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "report format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--precision", o.precision, "significant digits of numeric output")
            ->check(CLI::Range(1, 17));
        sub->add_option("--samples", o.samples, "number of samples");
    };

    auto* classify_cmd = app.add_subcommand("classify", "finite or infinite common tangents of two lines and two spheres");
    common(classify_cmd, true);
    classify_cmd->add_option("--out", o.out, "also write the report to this file");
    classify_cmd->add_option("--mode", o.mode, "expected mode")->check(CLI::IsMember({"affine", "projective"}));

    auto* nf_cmd = app.add_subcommand("normal-form", "class, ramification and normal form of one envelope curve");
    common(nf_cmd, true);
    nf_cmd->add_option("--out", o.out, "also write the report to this file");

    auto* fv_cmd = app.add_subcommand("fiber-verify", "sample the conic components of a fiber of the normal form");
    common(fv_cmd, false);
    fv_cmd->add_option("--s", o.s, "parameter s (a rational square)");
    fv_cmd->add_option("--t", o.t, "parameter t");
    fv_cmd->add_option("--out", o.out, "also write the report to this file");

    auto* plot_cmd = app.add_subcommand("plot-data", "CSV samples of envelope curves, tangent lines and contact loci");
    common(plot_cmd, true);
    plot_cmd->add_option("--out", o.out, "output directory")->required();
    plot_cmd->add_option("--range", o.range, "sample x in [-range, range]")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : parse_error;
    }

    try {
        Json report;
        bool to_file = false;
        if (*classify_cmd) report = cmd_classify(o), to_file = !o.out.empty();
        else if (*nf_cmd) report = cmd_normal_form(o), to_file = !o.out.empty();
        else if (*fv_cmd) report = cmd_fiber_verify(o), to_file = !o.out.empty();
        else report = cmd_plot_data(o);
        std::string text = cli::render(report, o.format);
        std::cout << text;
        if (to_file) write_file(o.out, text);
        return ok;
    } catch (const cli::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return geometry_error;
    } catch (const ContractViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return contract_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return contract_error;
    }
}
