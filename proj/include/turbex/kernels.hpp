// Data-parallel kernels. Each has an OpenMP path and a serial reference path;
// both produce identical results in identical order.

#pragma once

#include <exception>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turbex/exergy_engine.hpp"

namespace turbex::kernels {

struct PhQuery {
    double p;  // MPa
    double h;  // kJ/kg
};

struct PhOutcome {
    std::optional<steam::ThermoState> state;
    std::string error;  // set when state is empty
};

/// state_from_ph over a batch; failures are reported per element.
std::vector<PhOutcome> resolve_batch(std::span<const PhQuery> queries, Execution execution = Execution::Parallel);

/// One report per ambient state. The first failing element (by index) is re-thrown.
std::vector<AnalysisReport> analyze_ambients(const OperatingRegime& regime, std::span<const AmbientState> ambients,
                                             const AnalysisOptions& options = {},
                                             Execution execution = Execution::Parallel);

/// One report per regime, same ambient.
std::vector<AnalysisReport> analyze_regimes(std::span<const OperatingRegime> regimes, const AmbientState& ambient,
                                            const AnalysisOptions& options = {},
                                            Execution execution = Execution::Parallel);

/// Worker count the parallel path would use.
int max_threads();

}  // namespace turbex::kernels
