#include "cli_io.hpp"

#include "linetan/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

using namespace linetan;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::vector<Scalar> scalar_array(const Json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || j.size() != n)
        throw ParseError(where + ": expected an array of " + std::to_string(n) + " rational strings");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_field(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ProjPoint point_field(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    if (j.size() == 3) {
        auto v = scalar_array(j, 3, where);
        return ProjPoint::affine({v[0], v[1], v[2]});
    }
    auto v = scalar_array(j, 4, where);
    ProjPoint p{{v[0], v[1], v[2], v[3]}};
    if (!p.is_valid()) throw ParseError(where + ": zero point");
    return p;
}

PluckerLine line_field(const Json& j, const std::string& where)
{
    if (j.contains("plucker")) {
        auto v = scalar_array(j["plucker"], 6, where + ".plucker");
        return PluckerLine({v[0], v[1], v[2], v[3], v[4], v[5]});
    }
    ProjPoint p = point_field(field(j, "point", where), where + ".point");
    ProjPoint q = point_field(field(j, "point2", where), where + ".point2");
    return PluckerLine::from_points(p, q);
}

Surface surface_field(const Json& j, const std::string& where)
{
    if (j.contains("symmetric")) {
        auto v = scalar_array(j["symmetric"], 10, where + ".symmetric");
        std::array<Scalar, 10> e;
        std::copy(v.begin(), v.end(), e.begin());
        return {where, Quadric::from_entries(e), std::nullopt};
    }
    auto c = scalar_array(field(j, "center", where), 3, where + ".center");
    Sphere s({c[0], c[1], c[2]}, scalar_field(field(j, "r2", where), where + ".r2"));
    return {where, sphere_to_quadric(s), s};
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

}  // namespace

Json read_json(const std::string& path)
{
    std::string text = slurp(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, upto = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i + 1 < upto; ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(path + ":" + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
    }
}

Scalar scalar_field(const Json& j, const std::string& where)
{
    if (!j.is_string()) throw ParseError(where + ": expected a rational as a string, e.g. \"3/4\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Document read_document(const std::string& path)
{
    Json j = read_json(path);
    const Json& lines = field(j, "lines", "document");
    if (!lines.is_array() || lines.size() != 2) throw ParseError("lines: expected exactly two lines");
    PluckerLine l1 = line_field(lines[0], "lines[0]");
    PluckerLine l2 = line_field(lines[1], "lines[1]");
    Document doc{LinePair(l1, l2), {}};
    for (const char* key : {"spheres", "quadrics"}) {
        if (!j.contains(key)) continue;
        const Json& arr = j[key];
        if (!arr.is_array()) throw ParseError(std::string(key) + ": expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            doc.surfaces.push_back(surface_field(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return doc;
}

std::string approx(double v, int precision)
{
    if (v == 0) v = 0;  // no negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

Json number(double v, int precision)
{
    if (!std::isfinite(v)) return Json(nullptr);
    return Json(std::strtod(approx(v, precision).c_str(), nullptr));
}

Json complex_number(std::complex<double> z, int precision)
{
    return Json::array({number(z.real(), precision), number(z.imag(), precision)});
}

std::string csv_row(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out += c;
        } else {
            out += '"';
            for (char ch : c) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            out += '"';
        }
    }
    return out + "\n";
}

std::string render(const Json& report, Format f)
{
    if (f == Format::json) return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string out = f == Format::csv ? csv_row({"field", "value"}) : "";
    for (const auto& [k, v] : rows) out += f == Format::csv ? csv_row({k, v}) : k + ": " + v + "\n";
    return out;
}

}  // namespace cli
