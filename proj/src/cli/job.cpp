#include <charconv>
#include <cmath>
#include <future>
#include <string>
#include <thread>

#include "ctori/cli.hpp"
#include "ctori/errors.hpp"
#include "ctori/product_torus.hpp"
#include "ctori/standard_torus.hpp"

namespace ctori::cli {

std::string_view to_string(JobKind kind) noexcept {
    switch (kind) {
        case JobKind::standard: return "standard";
        case JobKind::product: return "product";
        case JobKind::hopf_circle: return "hopf-circle";
        case JobKind::hopf_curve: return "hopf-curve";
        case JobKind::reduce: return "reduce";
        case JobKind::equiv: return "equiv";
        case JobKind::sweep: return "sweep";
    }
    return "unknown";
}

JobKind parse_job_kind(std::string_view name) {
    for (JobKind k : {JobKind::standard, JobKind::product, JobKind::hopf_circle,
                      JobKind::hopf_curve, JobKind::reduce, JobKind::equiv, JobKind::sweep}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorKind::validation, "unknown job kind '" + std::string(name) + "'", "kind");
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "svg") return OutputFormat::svg;
    throw Error(ErrorKind::validation, "unknown output format '" + std::string(name) + "'",
                "format");
}

namespace {

using Params = std::map<std::string, std::string>;

const std::string& require(const Params& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw Error(ErrorKind::validation, "missing required parameter '" + key + "'", key);
    }
    return it->second;
}

double to_double(const std::string& text, const std::string& field) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    while (first < last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw Error(ErrorKind::validation, "parameter '" + field + "' is not a finite number: '" +
                                               text + "'", field);
    }
    return value;
}

double require_double(const Params& params, const std::string& key) {
    return to_double(require(params, key), key);
}

std::size_t to_count(const std::string& text, const std::string& field) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::validation, "parameter '" + field + "' is not a count: '" + text + "'",
                    field);
    }
    return value;
}

std::size_t optional_count(const Params& params, const std::string& key, std::size_t fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : to_count(it->second, key);
}

double optional_double(const Params& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : to_double(it->second, key);
}

modular::Tau parse_tau_pair(const std::string& text, const std::string& field) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error(ErrorKind::validation, "parameter '" + field + "' must be 're,im'", field);
    }
    const double re = to_double(text.substr(0, comma), field);
    const double im = to_double(text.substr(comma + 1), field);
    if (!(im > 0.0)) {
        throw Error(ErrorKind::validation, "parameter '" + field + "' must have im > 0", field);
    }
    return modular::make_tau(re, im);
}

// Re-tag domain errors from the geometry layer as validation of a named field.
template <typename F>
auto validated(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::domain) {
            throw Error(ErrorKind::validation, e.what(), e.field());
        }
        throw;
    }
}

ClassReport sweep_sample(const std::string& kind, double x, std::size_t n) {
    if (kind == "standard") return standard_report(x, 1.0);
    if (kind == "product") return product_report(x, 1.0);
    return hopf_circle_report(x, n);
}

}  // namespace

ClassReport report_for_tau(std::string kind, NamedValues inputs, const modular::Tau& tau,
                           NamedValues diagnostics) {
    const modular::ReducedTau reduced = modular::reduce_to_fundamental(tau);
    return {std::move(kind),       std::move(inputs),        tau, reduced.tau,
            reduced.witness,       modular::j_invariant(tau), std::move(diagnostics)};
}

ClassReport standard_report(double R, double r) {
    const standard::StandardTorus torus(R, r);
    const double a = torus.ratio();
    return report_for_tau(
        "standard", {{"R", R}, {"r", r}}, standard::tau_standard(torus),
        {{"omega", standard::omega(a)},
         {"conformality_residual", standard::max_conformality_residual(torus, 8)}});
}

ClassReport product_report(double a, double b) {
    const product::ProductMetric metric = product::make_product_metric(b, a);
    return report_for_tau("product", {{"a", a}, {"b", b}}, product::tau_product(metric));
}

ClassReport hopf_curve_report(const hopf::SphereCurve& curve, NamedValues inputs) {
    const double L = hopf::curve_length(curve);
    const double A = hopf::signed_area(curve);
    const hopf::LiftResult lift = hopf::horizontal_lift(curve);
    return report_for_tau("hopf", std::move(inputs), hopf::tau_hopf(L, A),
                          {{"length", L},
                           {"area", A},
                           {"holonomy_delta", lift.holonomy_delta},
                           {"holonomy_gap", hopf::holonomy_gap(lift.holonomy_delta, A)},
                           {"lift_length", lift.lift_length},
                           {"lift_length_gap", std::abs(lift.lift_length - 0.5 * L)},
                           {"isoperimetric_defect", hopf::isoperimetric_defect(L, A)}});
}

ClassReport hopf_circle_report(double t, std::size_t n) {
    ClassReport report = hopf_curve_report(hopf::circle_curve(t, n),
                                           {{"t", t}, {"n", static_cast<double>(n)}});
    report.kind = "hopf-circle";
    return report;
}

RunResult run(const JobSpec& job) {
    const Params& p = job.parameters;
    RunResult result;
    result.kind = job.kind;
    const double tol = optional_double(p, "tol", modular::kDefaultEquivalenceTol);
    if (!(tol > 0.0)) throw Error(ErrorKind::validation, "tol must be positive", "tol");

    switch (job.kind) {
        case JobKind::standard: {
            const double R = require_double(p, "R");
            const double r = require_double(p, "r");
            result.reports.push_back(validated([&] { return standard_report(R, r); }));
            break;
        }
        case JobKind::product: {
            const double a = require_double(p, "a");
            const double b = require_double(p, "b");
            result.reports.push_back(validated([&] { return product_report(a, b); }));
            break;
        }
        case JobKind::hopf_circle: {
            const double t = require_double(p, "t");
            const std::size_t n = optional_count(p, "n", kDefaultCircleSamples);
            result.reports.push_back(validated([&] { return hopf_circle_report(t, n); }));
            if (auto it = p.find("save_curve"); it != p.end()) {
                save_sphere_curve(hopf::circle_curve(t, n), it->second);
            }
            break;
        }
        case JobKind::hopf_curve: {
            const hopf::SphereCurve curve = load_sphere_curve(require(p, "path"));
            result.reports.push_back(validated([&] {
                return hopf_curve_report(curve, {{"samples", static_cast<double>(curve.size())}});
            }));
            break;
        }
        case JobKind::reduce: {
            const double re = require_double(p, "re");
            const double im = require_double(p, "im");
            result.reports.push_back(validated(
                [&] { return report_for_tau("reduce", {{"re", re}, {"im", im}}, modular::make_tau(re, im)); }));
            break;
        }
        case JobKind::equiv: {
            const modular::Tau t1 = parse_tau_pair(require(p, "tau1"), "tau1");
            const modular::Tau t2 = parse_tau_pair(require(p, "tau2"), "tau2");
            result.reports.push_back(report_for_tau("tau", {{"re", t1.re}, {"im", t1.im}}, t1));
            result.reports.push_back(report_for_tau("tau", {{"re", t2.re}, {"im", t2.im}}, t2));
            const modular::Equivalence eq = modular::is_equivalent(t1, t2, tol);
            result.certificate = EquivalenceCertificate{eq.equivalent, eq.witness, tol};
            break;
        }
        case JobKind::sweep: {
            const std::string& kind = require(p, "kind");
            if (kind != "standard" && kind != "product" && kind != "hopf-circle") {
                throw Error(ErrorKind::validation,
                            "sweep kind must be standard, product or hopf-circle", "kind");
            }
            const double from = require_double(p, "from");
            const double to = require_double(p, "to");
            const std::size_t steps = to_count(require(p, "steps"), "steps");
            const std::size_t n = optional_count(p, "n", kDefaultCircleSamples);
            std::vector<double> xs;
            for (std::size_t k = 0; k <= steps; ++k) {
                xs.push_back(steps == 0 ? from
                                        : from + (to - from) * static_cast<double>(k) /
                                                     static_cast<double>(steps));
            }
            // Samples are independent; evaluate in parallel, assemble in order.
            const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::future<ClassReport>> pending;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                if (pending.size() >= workers) {
                    result.reports.push_back(pending.front().get());
                    pending.erase(pending.begin());
                }
                pending.push_back(std::async(std::launch::async, [&kind, x = xs[k], n] {
                    return validated([&] { return sweep_sample(kind, x, n); });
                }));
            }
            for (auto& f : pending) result.reports.push_back(f.get());

            if (auto it = p.find("curve_dir"); it != p.end() && kind == "hopf-circle") {
                std::error_code ec;
                std::filesystem::create_directories(it->second, ec);
                if (ec) {
                    throw Error(ErrorKind::io, "cannot create curve directory '" + it->second +
                                                   "': " + ec.message(), "curve_dir");
                }
                for (std::size_t k = 0; k < xs.size(); ++k) {
                    save_sphere_curve(hopf::circle_curve(xs[k], n),
                                      std::filesystem::path(it->second) /
                                          ("curve_" + std::to_string(k) + ".json"));
                }
            }
            break;
        }
    }
    return result;
}

}  // namespace ctori::cli
