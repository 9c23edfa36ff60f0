#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "turbex/errors.hpp"
#include "turbex/kernels.hpp"

#ifndef TURBEX_DATA_DIR
#define TURBEX_DATA_DIR "data"
#endif

namespace turbex::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kKelvin = 273.15;
constexpr double kMpaPerBar = 0.1;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fixed-point text that never shows "-0.00".
std::string fixed(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    double r = std::round(v * scale) / scale;
    if (r == 0.0) r = 0.0;
    return fmt::format("{:.{}f}", r, decimals);
}

std::string mw(double v) { return fixed(v, 2); }
std::string pct(double fraction) { return fixed(100.0 * fraction, 2); }

std::string_view source_name(PressureSource s) {
    return s == PressureSource::Tabulated ? "tabulated" : "reconciled";
}

PressureSource parse_source(const std::string& s) {
    if (s == "tabulated") return PressureSource::Tabulated;
    if (s == "reconciled") return PressureSource::Reconciled;
    throw SchemaError("pressure_source", 0, fmt::format("unknown pressure source '{}'", s));
}

std::string ambient_line(const AmbientState& a) {
    return fmt::format("T0 = {} degC, p0 = {} bar", fixed(a.T0 - kKelvin, 2), fixed(a.p0 / kMpaPerBar, 3));
}

// ---------------------------------------------------------------------------
// JSON

ordered_json ambient_json(const AmbientState& a) {
    return {{"T0_K", a.T0}, {"p0_MPa", a.p0}, {"h0_kJ_kg", a.h0}, {"s0_kJ_kgK", a.s0}};
}

AmbientState ambient_from(const ordered_json& j) {
    return {j.at("T0_K").get<double>(), j.at("p0_MPa").get<double>(), j.at("h0_kJ_kg").get<double>(),
            j.at("s0_kJ_kgK").get<double>()};
}

ComponentId component_from(const ordered_json& j) {
    const auto name = j.get<std::string>();
    const auto id = parse_component(name);
    if (!id) throw SchemaError("component", 0, fmt::format("unknown component '{}'", name));
    return *id;
}

ordered_json report_json(const AnalysisReport& r) {
    ordered_json components = ordered_json::array();
    for (const ComponentResult& c : r.results) {
        components.push_back({{"component", to_string(c.component)},
                              {"power_MW", c.power},
                              {"destruction_MW", c.destruction},
                              {"efficiency", c.efficiency}});
    }
    ordered_json residuals = ordered_json::array();
    for (const BalanceResidual& b : r.balance.residuals) {
        residuals.push_back({{"name", b.name},
                             {"equation", b.equation},
                             {"residual_kg_s", b.residual},
                             {"within_tolerance", b.within_tolerance}});
    }
    return {{"regime", r.regime},
            {"ambient", ambient_json(r.ambient)},
            {"components", components},
            {"en1_MW", r.en1},
            {"balance", {{"tolerance_kg_s", r.balance.tolerance}, {"residuals", residuals}}}};
}

AnalysisReport report_from(const ordered_json& j) {
    AnalysisReport r{j.at("regime").get<std::string>(), ambient_from(j.at("ambient")), {}, j.at("en1_MW").get<double>(),
                     {}};
    const auto& components = j.at("components");
    if (components.size() != kComponentCount) {
        throw SchemaError("components", 0, fmt::format("expected {} components, got {}", kComponentCount,
                                                       components.size()));
    }
    std::array<bool, kComponentCount> seen{};
    for (const auto& c : components) {
        const ComponentId id = component_from(c.at("component"));
        if (seen[index_of(id)]) throw SchemaError("components", 0, fmt::format("duplicate {}", to_string(id)));
        seen[index_of(id)] = true;
        r.results[index_of(id)] = {id, c.at("power_MW").get<double>(), c.at("destruction_MW").get<double>(),
                                   c.at("efficiency").get<double>()};
    }
    const auto& balance = j.at("balance");
    r.balance.tolerance = balance.at("tolerance_kg_s").get<double>();
    for (const auto& b : balance.at("residuals")) {
        r.balance.residuals.push_back({b.at("name").get<std::string>(), b.at("equation").get<std::string>(),
                                       b.at("residual_kg_s").get<double>(), b.at("within_tolerance").get<bool>()});
    }
    return r;
}

ordered_json path_json(const ExpansionPath& p) {
    ordered_json points = ordered_json::array();
    for (const PathPoint& pt : p.points) {
        points.push_back({{"point_id", pt.point_id}, {"s_kJ_kgK", pt.s}, {"h_kJ_kg", pt.h}});
    }
    return {{"part", to_string(p.part)}, {"points", points}};
}

ExpansionPath path_from(const ordered_json& j) {
    ExpansionPath p{component_from(j.at("part")), {}};
    for (const auto& pt : j.at("points")) {
        p.points.push_back({pt.at("point_id").get<int>(), pt.at("s_kJ_kgK").get<double>(),
                            pt.at("h_kJ_kg").get<double>()});
    }
    return p;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Text blocks

std::string component_table(const AnalysisReport& r) {
    std::string out = fmt::format("{:<10}{:>10}{:>12}{:>13}\n", "Component", "P [MW]", "Ex_d [MW]", "eta_ex [%]");
    for (const ComponentResult& c : r.results) {
        out += fmt::format("{:<10}{:>10}{:>12}{:>13}\n", to_string(c.component), mw(c.power), mw(c.destruction),
                           pct(c.efficiency));
    }
    return out;
}

std::string balance_line(const BalanceReport& b) {
    const auto over = std::count_if(b.residuals.begin(), b.residuals.end(),
                                    [](const BalanceResidual& r) { return !r.within_tolerance; });
    const std::string status = over == 0 ? std::string("ok") : fmt::format("{} residual(s) above tolerance", over);
    return fmt::format("Mass balance: {} (max |residual| {} kg/s, tolerance {} kg/s)\n", status,
                       fixed(b.max_abs_residual(), 2), fixed(b.tolerance, 2));
}

std::string decreasing_steps(const ExpansionPath& p) {
    std::string out;
    for (std::size_t i : p.entropy_decreasing_steps()) {
        if (!out.empty()) out += ", ";
        out += fmt::format("{}->{}", p.points[i].point_id, p.points[i + 1].point_id);
    }
    return out;
}

// Best values are compared unrounded; ties share the marker.
enum class Metric { Power, Destruction, Efficiency };

double metric_of(const ComponentResult& c, Metric m) {
    switch (m) {
        case Metric::Power: return c.power;
        case Metric::Destruction: return c.destruction;
        case Metric::Efficiency: return c.efficiency;
    }
    return 0.0;
}

bool better(double a, double b, Metric m) { return m == Metric::Destruction ? a < b : a > b; }

double best_value(const ComparisonDoc& doc, ComponentId id, Metric m) {
    double best = metric_of(doc.reports.front().at(id), m);
    for (const AnalysisReport& r : doc.reports) {
        const double v = metric_of(r.at(id), m);
        if (better(v, best, m)) best = v;
    }
    return best;
}

std::string metric_text(double v, Metric m) { return m == Metric::Efficiency ? pct(v) : mw(v); }

std::string metric_delta(double v, double base, Metric m) {
    return m == Metric::Efficiency ? fixed(100.0 * (v - base), 2) : fixed(v - base, 2);
}

std::string_view metric_unit(Metric m) { return m == Metric::Efficiency ? "pp" : "MW"; }

// ---------------------------------------------------------------------------
// Argument handling

OperatingRegime load_selected(const std::string& selector) {
    if (selector.empty()) throw UsageError("no regime given");
    return resolve_regime(selector);
}

std::string pick_selector(const std::string& positional, const std::string& option) {
    if (!positional.empty() && !option.empty() && positional != option) {
        throw UsageError(fmt::format("conflicting regime selectors '{}' and '{}'", positional, option));
    }
    return option.empty() ? positional : option;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot write '{}'", out_path));
    file << text;
    if (!file) throw UsageError(fmt::format("cannot write '{}'", out_path));
}

AmbientState ambient_from_flags(double t0_C, double p0_bar) { return AmbientState::at(t0_C + kKelvin, p0_bar * kMpaPerBar); }

template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
    try {
        return fn();
    } catch (const SchemaError& e) {
        err << "error: schema: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "error: validation: " << e.what() << "\n";
        return kValidation;
    } catch (const AnalysisError& e) {
        err << "error: analysis: " << e.what() << "\n";
        return kValidation;
    } catch (const NonPhysicalDestructionError& e) {
        err << "error: analysis: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

const std::map<std::string, Format> kFormats = {{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, PressureSource> kSources = {{"reconciled", PressureSource::Reconciled},
                                                        {"tabulated", PressureSource::Tabulated}};

struct CommonFlags {
    Format format = Format::Table;
    PressureSource source = PressureSource::Reconciled;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "table, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    cmd->add_option("--pressure-source", flags.source, "wet-stream pressure: reconciled or tabulated")
        ->transform(CLI::CheckedTransformer(kSources, CLI::ignore_case));
    cmd->add_option("--out", flags.out_path, "write the document to this file instead of stdout");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const std::string& selector, std::ostream& out) {
    const OperatingRegime regime = load_selected(selector);
    const BalanceReport balance = validate_mass_balance(regime);
    const auto warnings = check_pt_consistency(regime);

    out << fmt::format("Regime: {}\n", regime.name());
    out << fmt::format("Mass balance (tolerance {} kg/s):\n", fixed(balance.tolerance, 2));
    for (const BalanceResidual& r : balance.residuals) {
        out << fmt::format("  {:<18} {:<34} {:>8} kg/s  {}\n", r.name, r.equation, fixed(r.residual, 2),
                           r.within_tolerance ? "ok" : "VIOLATION");
    }
    out << fmt::format("p-T consistency (threshold {} K): ", fixed(kTemperatureWarningThreshold, 1));
    if (warnings.empty()) {
        out << "no warnings\n";
    } else {
        out << warnings.size() << " warning(s)\n";
        for (const ConsistencyWarning& w : warnings) out << "  " << w.message << "\n";
    }
    const bool ok = balance.ok() && warnings.empty();
    out << (ok ? "OK\n" : "FAILED\n");
    return ok ? kOk : kValidation;
}

int cmd_props(double p, const std::optional<double>& h, const std::optional<double>& T, std::ostream& out) {
    if (h.has_value() == T.has_value()) throw UsageError("props needs --p with exactly one of --h or --t");
    const steam::ThermoState s = h ? steam::state_from_ph(p, *h) : steam::props_pt(p, *T);
    out << fmt::format("region  {}\n", steam::to_string(s.region));
    out << fmt::format("p       {:.6g} MPa\n", s.p);
    out << fmt::format("T       {:.6f} K ({:.4f} degC)\n", s.T, s.T - kKelvin);
    out << fmt::format("h       {:.6f} kJ/kg\n", s.h);
    out << fmt::format("s       {:.8f} kJ/(kg K)\n", s.s);
    if (s.x) out << fmt::format("x       {:.6f}\n", *s.x);
    return kOk;
}

std::vector<double> grid_from_flags(double from_C, double to_C, double step_C) {
    if (!(step_C > 0.0) || !std::isfinite(from_C) || !std::isfinite(to_C)) {
        throw UsageError("sweep needs a positive --t0-step and finite bounds");
    }
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double t = from_C + k * step_C;
        if (t > to_C + 1e-9 * std::max(1.0, std::abs(to_C))) break;
        grid.push_back(t + kKelvin);
    }
    if (grid.size() < 2) {
        throw UsageError(fmt::format("sweep grid from {} to {} degC in steps of {} has fewer than 2 points", from_C,
                                     to_C, step_C));
    }
    return grid;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string data_directory() {
    if (const char* env = std::getenv("TURBEX_DATA_DIR"); env && *env) return env;
    return TURBEX_DATA_DIR;
}

OperatingRegime resolve_regime(const std::string& selector) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(selector, ec)) return load_regime_file(selector);

    std::string lower = selector;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower.find('/') == std::string::npos) {
        for (const char* ext : {".csv", ".regime"}) {
            const fs::path candidate = fs::path(data_directory()) / (lower + ext);
            if (fs::is_regular_file(candidate, ec)) return load_regime_file(candidate.string());
        }
    }
    if (auto builtin = builtin_regime(selector)) return *builtin;
    throw UsageError(fmt::format("unknown regime '{}': not a file, not in {}, not a built-in", selector,
                                 data_directory()));
}

std::string render(const AnalysisDoc& doc, Format format) {
    const AnalysisReport& r = doc.report;
    if (format == Format::Json) {
        ordered_json j = report_json(r);
        j["pressure_source"] = source_name(doc.pressure_source);
        if (!doc.paths.empty()) {
            ordered_json paths = ordered_json::array();
            for (const ExpansionPath& p : doc.paths) paths.push_back(path_json(p));
            j["expansion_paths"] = paths;
        }
        return dump(j);
    }
    std::string out;
    if (format == Format::Csv) {
        out += fmt::format("# regime: {}; {}; pressure source: {}; en1 = {} MW\n", r.regime, ambient_line(r.ambient),
                           source_name(doc.pressure_source), mw(r.en1));
        out += "component,power_MW,destruction_MW,efficiency_pct\n";
        for (const ComponentResult& c : r.results) {
            out += fmt::format("{},{},{},{}\n", to_string(c.component), mw(c.power), mw(c.destruction),
                               pct(c.efficiency));
        }
        if (!doc.paths.empty()) {
            out += "\npart,point_id,s_kJ_kgK,h_kJ_kg\n";
            for (const ExpansionPath& p : doc.paths) {
                for (const PathPoint& pt : p.points) {
                    out += fmt::format("{},{},{},{}\n", to_string(p.part), pt.point_id, fixed(pt.s, 4), fixed(pt.h, 1));
                }
            }
        }
        return out;
    }
    out += fmt::format("Regime    {}\nAmbient   {}\nPressure  {}\n\n", r.regime, ambient_line(r.ambient),
                       source_name(doc.pressure_source));
    out += component_table(r);
    out += fmt::format("\nHPC inlet energy flow En1 = {} MW\n", mw(r.en1));
    out += balance_line(r.balance);
    if (!doc.paths.empty()) {
        out += "\nExpansion paths\n";
        out += fmt::format("{:<8}{:>6}{:>12}{:>10}\n", "part", "point", "s [kJ/kgK]", "h [kJ/kg]");
        for (const ExpansionPath& p : doc.paths) {
            for (const PathPoint& pt : p.points) {
                out += fmt::format("{:<8}{:>6}{:>12}{:>10}\n", to_string(p.part), pt.point_id, fixed(pt.s, 4),
                                   fixed(pt.h, 1));
            }
            if (const std::string steps = decreasing_steps(p); !steps.empty()) {
                out += fmt::format("{:<8}entropy decreases on {}\n", "", steps);
            }
        }
    }
    return out;
}

std::string render(const SweepDoc& doc, Format format) {
    const SweepResult& s = doc.sweep;
    if (format == Format::Json) {
        ordered_json samples = ordered_json::array();
        for (const SweepSample& sample : s.samples) {
            samples.push_back({{"T0_K", sample.T0}, {"report", report_json(sample.report)}});
        }
        ordered_json averages = ordered_json::array();
        for (ComponentId id : kAllComponents) {
            const std::size_t k = index_of(id);
            averages.push_back({{"component", to_string(id)},
                                {"abs_destruction_change_MW", s.avg_abs_destruction_change[k]},
                                {"abs_efficiency_change_pp", s.avg_abs_efficiency_change[k]},
                                {"signed_destruction_change_MW", s.avg_signed_destruction_change[k]},
                                {"signed_efficiency_change_pp", s.avg_signed_efficiency_change[k]}});
        }
        return dump({{"regime", s.regime},
                     {"p0_MPa", s.p0},
                     {"pressure_source", source_name(doc.pressure_source)},
                     {"samples", samples},
                     {"averages", averages}});
    }
    std::string out;
    if (format == Format::Csv) {
        out += fmt::format("# regime: {}; p0 = {} bar; pressure source: {}\n", s.regime, fixed(s.p0 / kMpaPerBar, 3),
                           source_name(doc.pressure_source));
        out += "T0_C,component,power_MW,destruction_MW,efficiency_pct\n";
        for (const SweepSample& sample : s.samples) {
            for (const ComponentResult& c : sample.report.results) {
                out += fmt::format("{},{},{},{},{}\n", fixed(sample.T0 - kKelvin, 2), to_string(c.component),
                                   mw(c.power), mw(c.destruction), pct(c.efficiency));
            }
        }
        out += "\ncomponent,avg_abs_destruction_change_MW,avg_abs_efficiency_change_pp,"
               "avg_signed_destruction_change_MW,avg_signed_efficiency_change_pp\n";
        for (ComponentId id : kAllComponents) {
            const std::size_t k = index_of(id);
            out += fmt::format("{},{},{},{},{}\n", to_string(id), mw(s.avg_abs_destruction_change[k]),
                               fixed(s.avg_abs_efficiency_change[k], 2), mw(s.avg_signed_destruction_change[k]),
                               fixed(s.avg_signed_efficiency_change[k], 2));
        }
        return out;
    }
    out += fmt::format("Regime    {}\nAmbient   p0 = {} bar, {} grid points\nPressure  {}\n", s.regime,
                       fixed(s.p0 / kMpaPerBar, 3), s.samples.size(), source_name(doc.pressure_source));
    for (const SweepSample& sample : s.samples) {
        out += fmt::format("\nT0 = {} degC\n", fixed(sample.T0 - kKelvin, 2));
        out += component_table(sample.report);
    }
    out += "\nMean change per grid step\n";
    out += fmt::format("{:<10}{:>14}{:>16}{:>14}{:>16}\n", "Component", "|dEx_d| [MW]", "|deta_ex| [pp]",
                       "dEx_d [MW]", "deta_ex [pp]");
    for (ComponentId id : kAllComponents) {
        const std::size_t k = index_of(id);
        out += fmt::format("{:<10}{:>14}{:>16}{:>14}{:>16}\n", to_string(id), mw(s.avg_abs_destruction_change[k]),
                           fixed(s.avg_abs_efficiency_change[k], 2), mw(s.avg_signed_destruction_change[k]),
                           fixed(s.avg_signed_efficiency_change[k], 2));
    }
    return out;
}

std::string render(const ComparisonDoc& doc, Format format) {
    constexpr std::array<Metric, 3> kMetrics = {Metric::Power, Metric::Destruction, Metric::Efficiency};
    const AnalysisReport& base = doc.reports.front();
    if (format == Format::Json) {
        ordered_json reports = ordered_json::array();
        for (const AnalysisReport& r : doc.reports) reports.push_back(report_json(r));
        ordered_json rows = ordered_json::array();
        for (ComponentId id : kAllComponents) {
            ordered_json best = ordered_json::object();
            for (Metric m : kMetrics) {
                const double target = best_value(doc, id, m);
                ordered_json names = ordered_json::array();
                for (const AnalysisReport& r : doc.reports) {
                    if (metric_of(r.at(id), m) == target) names.push_back(r.regime);
                }
                best[m == Metric::Power ? "power" : m == Metric::Destruction ? "destruction" : "efficiency"] = names;
            }
            ordered_json deltas = ordered_json::array();
            for (std::size_t i = 1; i < doc.reports.size(); ++i) {
                const ComponentResult& c = doc.reports[i].at(id);
                deltas.push_back({{"regime", doc.reports[i].regime},
                                  {"power_MW", c.power - base.at(id).power},
                                  {"destruction_MW", c.destruction - base.at(id).destruction},
                                  {"efficiency_pp", 100.0 * (c.efficiency - base.at(id).efficiency)}});
            }
            rows.push_back({{"component", to_string(id)}, {"best", best}, {"deltas_vs_first", deltas}});
        }
        return dump({{"ambient", ambient_json(doc.ambient)},
                     {"pressure_source", source_name(doc.pressure_source)},
                     {"reports", reports},
                     {"rows", rows}});
    }
    std::string out;
    if (format == Format::Csv) {
        out += fmt::format("# {}; pressure source: {}; deltas vs {}\n", ambient_line(doc.ambient),
                           source_name(doc.pressure_source), base.regime);
        out += "component,regime,power_MW,destruction_MW,efficiency_pct,delta_power_MW,delta_destruction_MW,"
               "delta_efficiency_pp,best\n";
        for (ComponentId id : kAllComponents) {
            for (const AnalysisReport& r : doc.reports) {
                const ComponentResult& c = r.at(id);
                std::string best;
                for (Metric m : kMetrics) {
                    if (metric_of(c, m) != best_value(doc, id, m)) continue;
                    if (!best.empty()) best += ";";
                    best += m == Metric::Power ? "power" : m == Metric::Destruction ? "destruction" : "efficiency";
                }
                out += fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(id), r.regime, mw(c.power),
                                   mw(c.destruction), pct(c.efficiency), metric_delta(c.power, base.at(id).power, Metric::Power),
                                   metric_delta(c.destruction, base.at(id).destruction, Metric::Destruction),
                                   metric_delta(c.efficiency, base.at(id).efficiency, Metric::Efficiency), best);
            }
        }
        return out;
    }
    std::size_t width = 10;
    for (const AnalysisReport& r : doc.reports) width = std::max(width, r.regime.size() + 4);
    out += fmt::format("Ambient   {}\nPressure  {}\nBaseline  {}\n", ambient_line(doc.ambient),
                       source_name(doc.pressure_source), base.regime);
    for (Metric m : kMetrics) {
        const char* title = m == Metric::Power         ? "Power P [MW], * = highest"
                            : m == Metric::Destruction ? "Exergy destruction Ex_d [MW], * = lowest"
                                                       : "Exergy efficiency eta_ex [%], * = highest";
        out += fmt::format("\n{}\n{:<10}", title, "Component");
        for (const AnalysisReport& r : doc.reports) out += fmt::format("{:>{}}", r.regime + " ", width);
        std::vector<std::size_t> delta_width;
        for (std::size_t i = 1; i < doc.reports.size(); ++i) {
            const std::string header = fmt::format("d {} [{}]", doc.reports[i].regime, metric_unit(m));
            delta_width.push_back(std::max(width, header.size() + 2));
            out += fmt::format("{:>{}}", header, delta_width.back());
        }
        out += "\n";
        for (ComponentId id : kAllComponents) {
            const double target = best_value(doc, id, m);
            out += fmt::format("{:<10}", to_string(id));
            for (const AnalysisReport& r : doc.reports) {
                const double v = metric_of(r.at(id), m);
                out += fmt::format("{:>{}}", metric_text(v, m) + (v == target ? "*" : " "), width);
            }
            for (std::size_t i = 1; i < doc.reports.size(); ++i) {
                out += fmt::format("{:>{}}", metric_delta(metric_of(doc.reports[i].at(id), m),
                                                           metric_of(base.at(id), m), m),
                                   delta_width[i - 1]);
            }
            out += "\n";
        }
    }
    return out;
}

AnalysisDoc analysis_from_json(const ordered_json& j) {
    AnalysisDoc doc{report_from(j), parse_source(j.at("pressure_source").get<std::string>()), {}};
    if (j.contains("expansion_paths")) {
        for (const auto& p : j.at("expansion_paths")) doc.paths.push_back(path_from(p));
    }
    return doc;
}

SweepDoc sweep_from_json(const ordered_json& j) {
    SweepDoc doc{{j.at("regime").get<std::string>(), j.at("p0_MPa").get<double>(), {}, {}, {}, {}, {}},
                 parse_source(j.at("pressure_source").get<std::string>())};
    for (const auto& sample : j.at("samples")) {
        doc.sweep.samples.push_back({sample.at("T0_K").get<double>(), report_from(sample.at("report"))});
    }
    for (const auto& a : j.at("averages")) {
        const std::size_t k = index_of(component_from(a.at("component")));
        doc.sweep.avg_abs_destruction_change[k] = a.at("abs_destruction_change_MW").get<double>();
        doc.sweep.avg_abs_efficiency_change[k] = a.at("abs_efficiency_change_pp").get<double>();
        doc.sweep.avg_signed_destruction_change[k] = a.at("signed_destruction_change_MW").get<double>();
        doc.sweep.avg_signed_efficiency_change[k] = a.at("signed_efficiency_change_pp").get<double>();
    }
    return doc;
}

ComparisonDoc comparison_from_json(const ordered_json& j) {
    ComparisonDoc doc{ambient_from(j.at("ambient")), {}, parse_source(j.at("pressure_source").get<std::string>())};
    for (const auto& r : j.at("reports")) doc.reports.push_back(report_from(r));
    if (doc.reports.empty()) throw SchemaError("reports", 0, "comparison without reports");
    return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exergy analysis of a four-cylinder nuclear steam turbine", "turbex"};
    app.require_subcommand(1);

    std::string validate_pos, validate_opt;
    CLI::App* validate = app.add_subcommand("validate", "check mass balances and p-T-h consistency of a regime");
    validate->add_option("selector", validate_pos, "regime file or built-in name");
    validate->add_option("--regime,-r", validate_opt, "regime file or built-in name");

    double props_p = 0.0;
    std::optional<double> props_h, props_T;
    CLI::App* props = app.add_subcommand("props", "steam properties at one state");
    props->set_help_flag("--help", "print this help message and exit");  // -h would shadow --h
    props->add_option("--p", props_p, "pressure [MPa]")->required();
    props->add_option("--h", props_h, "specific enthalpy [kJ/kg]");
    props->add_option("--t", props_T, "temperature [K]");

    std::string analyze_pos, analyze_opt;
    double t0_C = 25.0, p0_bar = 1.0;
    bool with_paths = false;
    CommonFlags analyze_flags;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "power, destruction and efficiency of all components");
    analyze_cmd->add_option("selector", analyze_pos, "regime file or built-in name");
    analyze_cmd->add_option("--regime,-r", analyze_opt, "regime file or built-in name");
    analyze_cmd->add_option("--t0", t0_C, "ambient temperature [degC]");
    analyze_cmd->add_option("--p0", p0_bar, "ambient pressure [bar]");
    analyze_cmd->add_flag("--expansion-paths", with_paths, "append h-s expansion paths of every cylinder part");
    add_common(analyze_cmd, analyze_flags);

    std::string sweep_pos, sweep_opt;
    double from_C = 5.0, to_C = 45.0, step_C = 10.0, sweep_p0_bar = 1.0;
    CommonFlags sweep_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "analysis over a grid of ambient temperatures");
    sweep_cmd->add_option("selector", sweep_pos, "regime file or built-in name");
    sweep_cmd->add_option("--regime,-r", sweep_opt, "regime file or built-in name");
    sweep_cmd->add_option("--t0-from", from_C, "first ambient temperature [degC]");
    sweep_cmd->add_option("--t0-to", to_C, "last ambient temperature [degC]");
    sweep_cmd->add_option("--t0-step", step_C, "grid step [degC]");
    sweep_cmd->add_option("--p0", sweep_p0_bar, "ambient pressure [bar]");
    add_common(sweep_cmd, sweep_flags);

    std::vector<std::string> compare_selectors;
    double compare_t0_C = 25.0, compare_p0_bar = 1.0;
    CommonFlags compare_flags;
    CLI::App* compare_cmd = app.add_subcommand("compare", "side-by-side results of several regimes");
    compare_cmd->add_option("regimes", compare_selectors, "two or more regime files or built-in names");
    compare_cmd->add_option("--t0", compare_t0_C, "ambient temperature [degC]");
    compare_cmd->add_option("--p0", compare_p0_bar, "ambient pressure [bar]");
    add_common(compare_cmd, compare_flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (validate->parsed()) {
        return guarded(err, [&] { return cmd_validate(pick_selector(validate_pos, validate_opt), out); });
    }
    if (props->parsed()) {
        return guarded(err, [&] { return cmd_props(props_p, props_h, props_T, out); });
    }
    if (analyze_cmd->parsed()) {
        return guarded(err, [&] {
            const OperatingRegime regime = load_selected(pick_selector(analyze_pos, analyze_opt));
            const AnalysisOptions options{analyze_flags.source};
            AnalysisDoc doc{analyze(regime, ambient_from_flags(t0_C, p0_bar), options), analyze_flags.source, {}};
            if (with_paths) {
                for (const PartPath& path : plant_topology()) doc.paths.push_back(expansion_path(regime, path.part, options));
            }
            emit(render(doc, analyze_flags.format), analyze_flags.out_path, out);
            return kOk;
        });
    }
    if (sweep_cmd->parsed()) {
        return guarded(err, [&] {
            const OperatingRegime regime = load_selected(pick_selector(sweep_pos, sweep_opt));
            const std::vector<double> grid = grid_from_flags(from_C, to_C, step_C);
            SweepDoc doc{ambient_sweep(regime, grid, sweep_p0_bar * kMpaPerBar, {sweep_flags.source}),
                         sweep_flags.source};
            emit(render(doc, sweep_flags.format), sweep_flags.out_path, out);
            return kOk;
        });
    }
    if (compare_cmd->parsed()) {
        return guarded(err, [&] {
            if (compare_selectors.size() < 2) throw UsageError("compare needs at least 2 regimes");
            std::vector<OperatingRegime> regimes;
            for (const std::string& sel : compare_selectors) {
                OperatingRegime r = resolve_regime(sel);
                for (const OperatingRegime& other : regimes) {
                    if (other.name() == r.name() && !(other == r)) {
                        throw UsageError(fmt::format("two different regimes are named '{}'", r.name()));
                    }
                }
                regimes.push_back(std::move(r));
            }
            const AmbientState ambient = ambient_from_flags(compare_t0_C, compare_p0_bar);
            ComparisonDoc doc{ambient, kernels::analyze_regimes(regimes, ambient, {compare_flags.source}),
                              compare_flags.source};
            emit(render(doc, compare_flags.format), compare_flags.out_path, out);
            return kOk;
        });
    }
    return kUsage;
}

}  // namespace turbex::cli
