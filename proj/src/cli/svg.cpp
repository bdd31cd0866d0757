#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "ctori/cli.hpp"
#include "ctori/errors.hpp"
#include "ctori/numerics.hpp"

namespace ctori::cli {

namespace {

// Viewport [-0.6, 0.6] x [0, 3] at 200 px per unit.
constexpr double kScale = 200.0;
constexpr double kReMin = -0.6;
constexpr double kReMax = 0.6;
constexpr double kImMax = 3.0;
constexpr double kMargin = 20.0;

double px(double re) { return kMargin + (re - kReMin) * kScale; }
double py(double im) { return kMargin + (kImMax - im) * kScale; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(std::span<const modular::Tau> points) {
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (!modular::in_fundamental_domain(points[k], 1e-9)) {
            throw Error(ErrorKind::validation,
                        "plot point " + std::to_string(k) + " is not in the fundamental domain",
                        "points");
        }
    }
    const double width = 2 * kMargin + (kReMax - kReMin) * kScale;
    const double height = 2 * kMargin + kImMax * kScale;
    const double corner = std::sqrt(3.0) / 2.0;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"white\"/>\n";
    // Real axis and the imaginary axis.
    s += "<line class=\"axis\" x1=\"" + num(px(kReMin)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
         num(px(kReMax)) + "\" y2=\"" + num(py(0)) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    s += "<line class=\"axis\" x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
         num(px(0)) + "\" y2=\"" + num(py(kImMax)) +
         "\" stroke=\"#ccc\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
    // Boundary: verticals re = +-1/2 above the corners and the unit arc between them.
    s += "<path class=\"boundary\" d=\"M " + num(px(-0.5)) + " " + num(py(kImMax)) + " L " +
         num(px(-0.5)) + " " + num(py(corner)) + " A " + num(kScale) + " " + num(kScale) +
         " 0 0 1 " + num(px(0.5)) + " " + num(py(corner)) + " L " + num(px(0.5)) + " " +
         num(py(kImMax)) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const modular::Tau& t = points[k];
        const double x = px(t.re);
        if (t.im > kImMax) {
            // Above the viewport: pin to the top edge and flag.
            const double y = py(kImMax);
            s += "<path class=\"marker clamped\" data-index=\"" + std::to_string(k) +
                 "\" data-im=\"" + num(t.im) + "\" d=\"M " + num(x - 5) + " " + num(y + 8) + " L " +
                 num(x + 5) + " " + num(y + 8) + " L " + num(x) + " " + num(y) +
                 " Z\" fill=\"#d62728\"/>\n";
        } else {
            s += "<circle class=\"marker\" data-index=\"" + std::to_string(k) + "\" cx=\"" +
                 num(x) + "\" cy=\"" + num(py(t.im)) + "\" r=\"3\" fill=\"#1f77b4\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

void emit_svg(std::span<const modular::Tau> points, const std::filesystem::path& path) {
    const std::string svg = render_svg(points);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot write plot '" + path.string() + "'", "plot");
    out << svg;
    if (!out) throw Error(ErrorKind::io, "failed writing plot '" + path.string() + "'", "plot");
}

}  // namespace ctori::cli
