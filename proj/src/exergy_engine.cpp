#include "turbex/exergy_engine.hpp"

#include <cmath>

#include <fmt/format.h>

#include "turbex/errors.hpp"
#include "turbex/kernels.hpp"

namespace turbex {

namespace {

constexpr double kKelvin = 273.15;
constexpr double kKwPerMw = 1000.0;

using StreamExergies = std::array<double, kPointCount + 1>;  // indexed by point id

StreamExergies stream_exergies(const OperatingRegime& regime, const AmbientState& ambient,
                               PressureSource source) {
    StreamExergies e{};
    for (const StreamState& s : regime.streams()) {
        e[static_cast<std::size_t>(s.point_id)] = specific_exergy(s, ambient, source);
    }
    return e;
}

struct PartTerms {
    double power_kw = 0.0;
    double inflow_kw = 0.0;
    double outflow_kw = 0.0;
};

// Stage-by-stage expansion: each segment carries the flow left after the
// preceding draws. With exergies supplied, also accumulates the balance terms.
PartTerms part_terms(const OperatingRegime& regime, const PartPath& path, const StreamExergies* e) {
    PartTerms t;
    const auto eps = [&](int id) { return (*e)[static_cast<std::size_t>(id)]; };
    const double inlet = regime.m(path.inlet_point) / path.inlet_divisor;
    double flow = inlet;
    double h_prev = regime.h(path.inlet_point);
    if (e) t.inflow_kw = inlet * eps(path.inlet_point);
    for (const Stage& stage : path.stages) {
        const double h_stage = regime.h(stage.point_id);
        t.power_kw += flow * (h_prev - h_stage);
        for (const Draw& draw : stage.draws) {
            const double drawn = regime.m(draw.point_id) / draw.divisor;
            flow -= drawn;
            if (e) t.outflow_kw += drawn * eps(draw.point_id);
        }
        h_prev = h_stage;
    }
    t.power_kw += flow * (h_prev - regime.h(path.exhaust_point));
    if (e) t.outflow_kw += flow * eps(path.exhaust_point);
    return t;
}

struct Totals {
    std::array<double, kComponentCount> power{};
    std::array<double, kComponentCount> destruction{};
};

// Resolves parts defined as copies of another part.
ComponentId source_part(ComponentId part) {
    const PartPath* path = &part_path(part);
    while (path->same_as) path = &part_path(*path->same_as);
    return path->part;
}

void aggregate(std::array<double, kComponentCount>& v) {
    for (ComponentId cylinder : kCylinders) {
        const auto [left, right] = parts_of(cylinder);
        v[index_of(cylinder)] = v[index_of(left)] + v[index_of(right)];
    }
    v[index_of(ComponentId::Wt)] = v[index_of(ComponentId::HpcEc)] + v[index_of(ComponentId::Lpc1Ec)] +
                                   v[index_of(ComponentId::Lpc2Ec)] + v[index_of(ComponentId::Lpc3Ec)];
}

Totals compute_totals(const OperatingRegime& regime, const StreamExergies* e) {
    Totals totals;
    for (const PartPath& path : plant_topology()) {
        if (path.same_as) continue;
        const PartTerms t = part_terms(regime, path, e);
        totals.power[index_of(path.part)] = t.power_kw / kKwPerMw;
        totals.destruction[index_of(path.part)] = (t.inflow_kw - t.outflow_kw - t.power_kw) / kKwPerMw;
    }
    for (const PartPath& path : plant_topology()) {
        if (!path.same_as) continue;
        const ComponentId source = source_part(path.part);
        totals.power[index_of(path.part)] = totals.power[index_of(source)];
        totals.destruction[index_of(path.part)] = totals.destruction[index_of(source)];
    }
    aggregate(totals.power);
    aggregate(totals.destruction);
    return totals;
}

void require_physical(const Totals& totals, const AmbientState& ambient) {
    for (ComponentId id : kAllComponents) {
        if (totals.destruction[index_of(id)] < 0.0) {
            throw NonPhysicalDestructionError(fmt::format(
                "non-physical destruction {:.6g} MW for {} at T0 = {} K, p0 = {} MPa",
                totals.destruction[index_of(id)], to_string(id), ambient.T0, ambient.p0));
        }
    }
}

std::string components_using(int point_id) {
    std::string names;
    for (const PartPath& path : plant_topology()) {
        bool uses = path.inlet_point == point_id || path.exhaust_point == point_id;
        for (const Stage& stage : path.stages) {
            for (const Draw& d : stage.draws) uses = uses || d.point_id == point_id || stage.point_id == point_id;
        }
        if (uses) {
            if (!names.empty()) names += ",";
            names += to_string(path.part);
        }
    }
    return names.empty() ? std::string("none") : names;
}

Totals checked_totals(const OperatingRegime& regime, const AmbientState& ambient, const AnalysisOptions& options) {
    StreamExergies e;
    try {
        e = stream_exergies(regime, ambient, options.pressure_source);
    } catch (const StreamError& err) {
        throw AnalysisError(components_using(err.point_id()),
                            fmt::format("{} ({}): {}", regime.name(), components_using(err.point_id()), err.what()));
    }
    Totals totals = compute_totals(regime, &e);
    require_physical(totals, ambient);
    return totals;
}

}  // namespace

AmbientState AmbientState::at(double T0_K, double p0_MPa) {
    const steam::DeadState dead = steam::dead_state(p0_MPa, T0_K);
    return {T0_K, p0_MPa, dead.h0, dead.s0};
}

AmbientState AmbientState::base() { return at(298.15, 0.1); }

std::vector<std::size_t> ExpansionPath::entropy_decreasing_steps() const {
    std::vector<std::size_t> steps;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i + 1].s > points[i].s)) steps.push_back(i);
    }
    return steps;
}

double effective_pressure(const StreamState& stream, PressureSource source) {
    if (source == PressureSource::Tabulated) return stream.p;
    const double T = stream.T_C + kKelvin;
    const double sigma_p = stream.p_resolution();
    if (sigma_p == 0.0 || !(T >= steam::kMinTemperature && T <= steam::kRegion13Temperature)) return stream.p;
    try {
        if (steam::state_from_ph(stream.p, stream.h).region != steam::Region::TwoPhase) return stream.p;
        const double p_sat = steam::saturation_pressure(T);
        double candidate = p_sat;
        if (const double sigma_T = stream.T_resolution(); sigma_T > 0.0) {
            constexpr double dT = 1e-3;
            const double lo = std::max(T - dT, steam::kMinTemperature);
            const double hi = std::min(T + dT, steam::kRegion13Temperature);
            const double slope = (steam::saturation_pressure(hi) - steam::saturation_pressure(lo)) / (hi - lo);
            const double var_p = sigma_p * sigma_p;
            const double var_T = (slope * sigma_T) * (slope * sigma_T);
            candidate = (stream.p * var_T + p_sat * var_p) / (var_p + var_T);
        }
        if (steam::state_from_ph(candidate, stream.h).region != steam::Region::TwoPhase) return stream.p;
        return candidate;
    } catch (const std::exception&) {
        // resolve_stream reports the failure with the point id
        return stream.p;
    }
}

steam::ThermoState resolve_stream(const StreamState& stream, PressureSource source) {
    const double p = effective_pressure(stream, source);
    try {
        return steam::state_from_ph(p, stream.h);
    } catch (const std::exception& e) {
        throw StreamError(stream.point_id, fmt::format("point {}: {}", stream.point_id, e.what()));
    }
}

double specific_exergy(const StreamState& stream, const AmbientState& ambient, PressureSource source) {
    const steam::ThermoState state = resolve_stream(stream, source);
    return (stream.h - ambient.h0) - ambient.T0 * (state.s - ambient.s0);
}

double exergy_flow(double m_dot, double epsilon) { return m_dot * epsilon / kKwPerMw; }

double component_power(const OperatingRegime& regime, ComponentId component) {
    return compute_totals(regime, nullptr).power[index_of(component)];
}

double component_destruction(const OperatingRegime& regime, ComponentId component, const AmbientState& ambient,
                             const AnalysisOptions& options) {
    return checked_totals(regime, ambient, options).destruction[index_of(component)];
}

double component_efficiency(double power, double destruction) {
    if (!(power > 0.0)) throw DomainError(fmt::format("efficiency needs positive power, got {} MW", power));
    if (!(destruction >= 0.0)) {
        throw DomainError(fmt::format("efficiency needs non-negative destruction, got {} MW", destruction));
    }
    return power / (destruction + power);
}

double hpc_inlet_energy_flow(const OperatingRegime& regime) { return regime.m(1) * regime.h(1) / kKwPerMw; }

AnalysisReport analyze(const OperatingRegime& regime, const AmbientState& ambient, const AnalysisOptions& options) {
    const Totals totals = checked_totals(regime, ambient, options);
    AnalysisReport report{regime.name(), ambient, {}, hpc_inlet_energy_flow(regime), validate_mass_balance(regime)};
    for (ComponentId id : kAllComponents) {
        const double P = totals.power[index_of(id)];
        const double D = totals.destruction[index_of(id)];
        try {
            report.results[index_of(id)] = {id, P, D, component_efficiency(P, D)};
        } catch (const DomainError& e) {
            throw AnalysisError(std::string(to_string(id)), fmt::format("{}: {}", to_string(id), e.what()));
        }
    }
    return report;
}

std::vector<double> default_sweep_grid() { return {278.15, 288.15, 298.15, 308.15, 318.15}; }

SweepResult ambient_sweep(const OperatingRegime& regime, const std::vector<double>& grid_K, double p0_MPa,
                          const AnalysisOptions& options, Execution execution) {
    if (grid_K.size() < 2) {
        throw DomainError(fmt::format("ambient sweep needs at least 2 grid points, got {}", grid_K.size()));
    }
    for (std::size_t i = 0; i < grid_K.size(); ++i) {
        if (!std::isfinite(grid_K[i]) || (i > 0 && !(grid_K[i] > grid_K[i - 1]))) {
            throw DomainError("ambient sweep grid must be finite and strictly increasing");
        }
    }
    std::vector<AmbientState> ambients;
    ambients.reserve(grid_K.size());
    for (double T0 : grid_K) ambients.push_back(AmbientState::at(T0, p0_MPa));

    std::vector<AnalysisReport> reports = kernels::analyze_ambients(regime, ambients, options, execution);

    SweepResult result{regime.name(), p0_MPa, {}, {}, {}, {}, {}};
    for (std::size_t i = 0; i < reports.size(); ++i) result.samples.push_back({grid_K[i], std::move(reports[i])});

    const auto steps = static_cast<double>(result.samples.size() - 1);
    for (ComponentId id : kAllComponents) {
        const std::size_t k = index_of(id);
        double abs_d = 0.0, abs_e = 0.0, sig_d = 0.0, sig_e = 0.0;
        for (std::size_t i = 1; i < result.samples.size(); ++i) {
            const ComponentResult& a = result.samples[i - 1].report.results[k];
            const ComponentResult& b = result.samples[i].report.results[k];
            const double dd = b.destruction - a.destruction;
            const double de = 100.0 * (b.efficiency - a.efficiency);
            abs_d += std::abs(dd);
            abs_e += std::abs(de);
            sig_d += dd;
            sig_e += de;
        }
        result.avg_abs_destruction_change[k] = abs_d / steps;
        result.avg_abs_efficiency_change[k] = abs_e / steps;
        result.avg_signed_destruction_change[k] = sig_d / steps;
        result.avg_signed_efficiency_change[k] = sig_e / steps;
    }
    return result;
}

ExpansionPath expansion_path(const OperatingRegime& regime, ComponentId part, const AnalysisOptions& options) {
    if (!is_part(part)) {
        throw DomainError(fmt::format("expansion paths exist only for cylinder parts, not {}", to_string(part)));
    }
    const PartPath& path = part_path(part);
    ExpansionPath out{part, {}};
    auto add = [&](int id) {
        const StreamState& s = regime.point(id);
        out.points.push_back({id, resolve_stream(s, options.pressure_source).s, s.h});
    };
    add(path.inlet_point);
    for (const Stage& stage : path.stages) add(stage.point_id);
    add(path.exhaust_point);
    return out;
}

PartBalance part_balance(const OperatingRegime& regime, ComponentId part, const AmbientState& ambient,
                         const AnalysisOptions& options) {
    if (!is_part(part)) throw DomainError(fmt::format("{} is not a cylinder part", to_string(part)));
    const StreamExergies e = stream_exergies(regime, ambient, options.pressure_source);
    const PartTerms t = part_terms(regime, part_path(source_part(part)), &e);
    return {t.inflow_kw / kKwPerMw, t.outflow_kw / kKwPerMw, t.power_kw / kKwPerMw,
            (t.inflow_kw - t.outflow_kw - t.power_kw) / kKwPerMw};
}

}  // namespace turbex
