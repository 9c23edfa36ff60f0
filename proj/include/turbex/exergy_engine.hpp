// Exergy analysis of the turbine: stream exergies, mechanical power and
// exergy destruction per cylinder part, cylinder and whole turbine, exergy
// efficiency, HPC inlet energy flow and ambient-temperature sweeps.
//
// Power in MW, specific exergy in kJ/kg, efficiencies as fractions unless a
// name says percentage points (pp).

#pragma once

#include <array>
#include <vector>

#include "turbex/plant_model.hpp"
#include "turbex/steam_props.hpp"

namespace turbex {

/// Dead-state definition; h0, s0 are derived on construction.
struct AmbientState {
    double T0;  // K
    double p0;  // MPa
    double h0;  // kJ/kg
    double s0;  // kJ/(kg K)

    static AmbientState at(double T0_K, double p0_MPa);
    /// 25 degC, 1 bar.
    static AmbientState base();

    bool operator==(const AmbientState&) const = default;
};

/// How the pressure of a wet stream is taken from the tabulated data.
enum class PressureSource {
    /// The tabulated pressure as given.
    Tabulated,
    /// Inverse-variance combination of the tabulated pressure and p_sat of the
    /// tabulated temperature, each weighted by its declared rounding step.
    /// Superheated and subcooled streams keep the tabulated pressure.
    Reconciled,
};

enum class Execution { Parallel, Serial };

struct AnalysisOptions {
    PressureSource pressure_source = PressureSource::Reconciled;
};

struct ComponentResult {
    ComponentId component;
    double power;        // MW
    double destruction;  // MW
    double efficiency;   // fraction

    bool operator==(const ComponentResult&) const = default;
};

struct AnalysisReport {
    std::string regime;
    AmbientState ambient;
    std::array<ComponentResult, kComponentCount> results;
    double en1;  // MW
    BalanceReport balance;

    const ComponentResult& at(ComponentId id) const { return results[index_of(id)]; }
};

struct SweepSample {
    double T0;  // K
    AnalysisReport report;
};

struct SweepResult {
    std::string regime;
    double p0;  // MPa
    std::vector<SweepSample> samples;
    // Means over the n-1 successive grid steps, per component.
    std::array<double, kComponentCount> avg_abs_destruction_change;  // MW per step
    std::array<double, kComponentCount> avg_abs_efficiency_change;   // pp per step
    std::array<double, kComponentCount> avg_signed_destruction_change;
    std::array<double, kComponentCount> avg_signed_efficiency_change;
};

struct PathPoint {
    int point_id;
    double s;  // kJ/(kg K)
    double h;  // kJ/kg
};

struct ExpansionPath {
    ComponentId part;
    std::vector<PathPoint> points;

    /// Indices i where s[i+1] <= s[i].
    std::vector<std::size_t> entropy_decreasing_steps() const;
};

// ---------------------------------------------------------------------------

/// Pressure used to resolve the stream's state for the chosen source.
double effective_pressure(const StreamState& stream, PressureSource source = PressureSource::Reconciled);

/// State of a stream; property errors are re-thrown as StreamError with the point id.
steam::ThermoState resolve_stream(const StreamState& stream, PressureSource source = PressureSource::Reconciled);

/// (h - h0) - T0 (s - s0).
double specific_exergy(const StreamState& stream, const AmbientState& ambient,
                       PressureSource source = PressureSource::Reconciled);

/// m_dot * epsilon in MW.
double exergy_flow(double m_dot, double epsilon);

double component_power(const OperatingRegime& regime, ComponentId component);

/// Throws NonPhysicalDestructionError when the balance residual is negative.
double component_destruction(const OperatingRegime& regime, ComponentId component, const AmbientState& ambient,
                             const AnalysisOptions& options = {});

/// P / (P + Ex_d).
double component_efficiency(double power, double destruction);

/// m1 h1 in MW.
double hpc_inlet_energy_flow(const OperatingRegime& regime);

AnalysisReport analyze(const OperatingRegime& regime, const AmbientState& ambient,
                       const AnalysisOptions& options = {});

/// {5, 15, 25, 35, 45} degC in K.
std::vector<double> default_sweep_grid();

/// Grid must be strictly increasing with at least two points.
SweepResult ambient_sweep(const OperatingRegime& regime, const std::vector<double>& grid_K, double p0_MPa = 0.1,
                          const AnalysisOptions& options = {}, Execution execution = Execution::Parallel);

ExpansionPath expansion_path(const OperatingRegime& regime, ComponentId part, const AnalysisOptions& options = {});

/// Per-part exergy balance terms; inflow = power + outflow + destruction.
struct PartBalance {
    double inflow;       // MW
    double outflow;      // MW, extractions plus exhaust
    double power;        // MW
    double destruction;  // MW
};

PartBalance part_balance(const OperatingRegime& regime, ComponentId part, const AmbientState& ambient,
                         const AnalysisOptions& options = {});

}  // namespace turbex
