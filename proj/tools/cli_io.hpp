#pragma once

#include "linetan/configurations.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;

/// Malformed input; maps to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Surface {
    std::string label;
    linetan::Quadric quadric;
    std::optional<linetan::Sphere> sphere;
};

struct Document {
    linetan::LinePair lines;
    std::vector<Surface> surfaces;
};

/// Reads and validates a configuration document. Geometric problems (lines not
/// skew, r^2 <= 0) surface as GeometryError, everything else as ParseError.
Document read_document(const std::string& path);
Json read_json(const std::string& path);

linetan::Scalar scalar_field(const Json& j, const std::string& where);

std::string approx(double v, int precision);
/// Number rounded to the requested significant digits.
Json number(double v, int precision);
Json complex_number(std::complex<double> z, int precision);

enum class Format { json, text, csv };

/// JSON is pretty-printed; text and csv flatten the document to path/value pairs.
std::string render(const Json& report, Format f);

std::string csv_row(const std::vector<std::string>& cells);

}  // namespace cli
