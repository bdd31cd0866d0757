#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctori/cli.hpp"
#include "ctori/errors.hpp"

namespace ctori::cli {

namespace {

constexpr double kRenormalizeTolerance = 1e-6;

std::string location(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

hopf::SphereCurve parse_sphere_curve(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw Error(ErrorKind::parse, "curve file " + location(text, byte) + ": " + e.what(),
                    "points");
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw Error(ErrorKind::validation, "curve file must be an object with a 'points' array",
                    "points");
    }
    std::vector<hopf::SpherePoint> points;
    const auto& arr = doc["points"];
    points.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& p = arr[k];
        const std::string where = "points[" + std::to_string(k) + "]";
        if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() ||
            !p[2].is_number()) {
            throw Error(ErrorKind::validation, where + " must be an array of three numbers", where);
        }
        const double c1 = p[0].get<double>();
        const double cj = p[1].get<double>();
        const double ck = p[2].get<double>();
        const double norm = std::sqrt(c1 * c1 + cj * cj + ck * ck);
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > kRenormalizeTolerance) {
            throw Error(ErrorKind::validation, where + " is not a unit vector", where);
        }
        points.push_back({c1 / norm, cj / norm, ck / norm});
    }
    return hopf::SphereCurve(std::move(points));
}

hopf::SphereCurve load_sphere_curve(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open curve file '" + path.string() + "'", "path");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sphere_curve(buffer.str());
}

void save_sphere_curve(const hopf::SphereCurve& curve, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::io, "cannot write curve file '" + path.string() + "'", "path");
    }
    out << "{\"points\": [\n";
    char buf[128];
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const auto& p = curve[k];
        std::snprintf(buf, sizeof(buf), "  [%.17g, %.17g, %.17g]%s\n", p.c1, p.cj, p.ck,
                      k + 1 < curve.size() ? "," : "");
        out << buf;
    }
    out << "]}\n";
    if (!out) {
        throw Error(ErrorKind::io, "failed writing curve file '" + path.string() + "'", "path");
    }
}

}  // namespace ctori::cli
