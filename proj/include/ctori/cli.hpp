#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ctori/hopf.hpp"
#include "ctori/modular.hpp"

namespace ctori::cli {

enum class JobKind { standard, product, hopf_circle, hopf_curve, reduce, equiv, sweep };
enum class OutputFormat { json, csv, svg };

std::string_view to_string(JobKind kind) noexcept;
/// Throws ErrorKind::validation for an unknown name.
JobKind parse_job_kind(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

/// A job request. Parameters are kept as text and validated by run().
///
/// Required keys per kind:
///   standard: R, r            product: a, b
///   hopf-circle: t [, n]      hopf-curve: path
///   reduce: re, im            equiv: tau1, tau2 ("re,im")
///   sweep: kind, from, to, steps [, n, curve_dir]
/// Optional for every kind: tol (equivalence tolerance).
struct JobSpec {
    JobKind kind = JobKind::standard;
    std::map<std::string, std::string> parameters;
    OutputFormat output_format = OutputFormat::json;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

struct ClassReport {
    std::string kind;
    NamedValues inputs_echo;
    modular::Tau tau;
    modular::Tau tau_reduced;
    modular::Unimodular witness;
    std::complex<double> j;
    NamedValues diagnostics;

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct EquivalenceCertificate {
    bool equivalent = false;
    std::optional<modular::Unimodular> witness;
    double tol = modular::kDefaultEquivalenceTol;
};

struct RunResult {
    JobKind kind = JobKind::standard;
    std::vector<ClassReport> reports;
    std::optional<EquivalenceCertificate> certificate;
};

/// Throws ctori::Error (validation for bad parameters, numerical kinds
/// propagated from the pipelines, io for file problems).
RunResult run(const JobSpec& job);

/// Default sample count for hopf-circle jobs.
inline constexpr std::size_t kDefaultCircleSamples = 16384;

// Reports built directly from parameters.
ClassReport report_for_tau(std::string kind, NamedValues inputs, const modular::Tau& tau,
                           NamedValues diagnostics = {});
ClassReport standard_report(double R, double r);
ClassReport product_report(double a, double b);
ClassReport hopf_curve_report(const hopf::SphereCurve& curve, NamedValues inputs);
ClassReport hopf_circle_report(double t, std::size_t n);

// Serialization. Numbers are written with 17 significant digits and object
// keys in a fixed order, so identical jobs give identical bytes.
nlohmann::ordered_json to_json(const ClassReport& report);
ClassReport report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const RunResult& result);
std::string dump_deterministic(const nlohmann::ordered_json& j);
std::string render_json(const RunResult& result);
std::string render_csv(const RunResult& result);
std::string error_json(const std::string& kind, const std::string& message,
                       const std::string& field = {});

/// {"points": [[c1, cj, ck], ...]}; points within 1e-6 of unit length are
/// renormalized, others rejected.
hopf::SphereCurve parse_sphere_curve(const std::string& text);
hopf::SphereCurve load_sphere_curve(const std::filesystem::path& path);
void save_sphere_curve(const hopf::SphereCurve& curve, const std::filesystem::path& path);

/// Fundamental-domain plot over the viewport [-0.6, 0.6] x [0, 3].
std::string render_svg(std::span<const modular::Tau> points);
void emit_svg(std::span<const modular::Tau> points, const std::filesystem::path& path);

}  // namespace ctori::cli
