#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "ctori/cli.hpp"
#include "ctori/errors.hpp"

namespace ctori::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json tau_json(const modular::Tau& t) {
    ordered_json j;
    j["re"] = t.re;
    j["im"] = t.im;
    return j;
}

ordered_json named_json(const NamedValues& values) {
    ordered_json j = ordered_json::object();
    for (const auto& [key, value] : values) j[key] = value;
    return j;
}

ordered_json witness_json(const modular::Unimodular& m) {
    return ordered_json::array({m.a(), m.b(), m.c(), m.d()});
}

double number_or_inf(const ordered_json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

NamedValues named_from_json(const ordered_json& j) {
    NamedValues out;
    for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), number_or_inf(it.value()));
    return out;
}

void dump_into(std::string& out, const ordered_json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + ordered_json(it.key()).dump() + ": ";
                dump_into(out, it.value(), depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            // Arrays here are short numeric tuples; keep them on one line.
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ", ";
                dump_into(out, j[k], depth + 1);
            }
            out += "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

ordered_json to_json(const ClassReport& r) {
    ordered_json j;
    j["kind"] = r.kind;
    j["inputs"] = named_json(r.inputs_echo);
    j["tau"] = tau_json(r.tau);
    j["tau_reduced"] = tau_json(r.tau_reduced);
    j["witness"] = witness_json(r.witness);
    ordered_json jj;
    jj["re"] = r.j.real();
    jj["im"] = r.j.imag();
    j["j"] = jj;
    j["diagnostics"] = named_json(r.diagnostics);
    return j;
}

ClassReport report_from_json(const ordered_json& j) {
    try {
        ClassReport r;
        r.kind = j.at("kind").get<std::string>();
        r.inputs_echo = named_from_json(j.at("inputs"));
        r.tau = {j.at("tau").at("re").get<double>(), j.at("tau").at("im").get<double>()};
        r.tau_reduced = {j.at("tau_reduced").at("re").get<double>(),
                         j.at("tau_reduced").at("im").get<double>()};
        const auto& w = j.at("witness");
        r.witness = modular::Unimodular(w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>(),
                                        w.at(2).get<std::int64_t>(), w.at(3).get<std::int64_t>());
        r.j = {number_or_inf(j.at("j").at("re")), number_or_inf(j.at("j").at("im"))};
        r.diagnostics = named_from_json(j.at("diagnostics"));
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::parse, std::string("malformed report: ") + e.what());
    }
}

ordered_json to_json(const RunResult& result) {
    if (result.kind == JobKind::equiv && result.certificate) {
        ordered_json j;
        j["kind"] = "equiv";
        j["equivalent"] = result.certificate->equivalent;
        j["witness"] = result.certificate->witness ? witness_json(*result.certificate->witness)
                                                   : ordered_json(nullptr);
        j["tol"] = result.certificate->tol;
        j["reports"] = ordered_json::array();
        for (const auto& r : result.reports) j["reports"].push_back(to_json(r));
        return j;
    }
    if (result.kind == JobKind::sweep) {
        ordered_json j;
        j["kind"] = "sweep";
        j["reports"] = ordered_json::array();
        for (const auto& r : result.reports) j["reports"].push_back(to_json(r));
        return j;
    }
    return to_json(result.reports.at(0));
}

std::string dump_deterministic(const ordered_json& j) {
    std::string out;
    dump_into(out, j, 0);
    out += "\n";
    return out;
}

std::string render_json(const RunResult& result) { return dump_deterministic(to_json(result)); }

namespace {

double defect_column(const ClassReport& r) {
    for (const char* key : {"isoperimetric_defect", "conformality_residual"}) {
        for (const auto& [name, value] : r.diagnostics) {
            if (name == key) return value;
        }
    }
    return 0.0;
}

}  // namespace

std::string render_csv(const RunResult& result) {
    std::ostringstream out;
    std::vector<std::string> params;
    std::set<std::string> seen;
    for (const auto& r : result.reports) {
        for (const auto& [name, value] : r.inputs_echo) {
            if (seen.insert(name).second) params.push_back(name);
        }
    }
    out << "kind";
    for (const auto& name : params) out << ',' << name;
    out << ",tau_re,tau_im,red_re,red_im,j_re,j_im,defect\n";
    for (const auto& r : result.reports) {
        out << r.kind;
        for (const auto& name : params) {
            out << ',';
            for (const auto& [key, value] : r.inputs_echo) {
                if (key == name) out << format_number(value);
            }
        }
        for (double v : {r.tau.re, r.tau.im, r.tau_reduced.re, r.tau_reduced.im, r.j.real(),
                         r.j.imag(), defect_column(r)}) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
    return out.str();
}

std::string error_json(const std::string& kind, const std::string& message,
                       const std::string& field) {
    ordered_json e;
    e["kind"] = kind;
    e["message"] = message;
    if (!field.empty()) e["field"] = field;
    ordered_json j;
    j["error"] = e;
    return dump_deterministic(j);
}

}  // namespace ctori::cli
