#include "turbex/kernels.hpp"

#include <omp.h>

#include <cstddef>

namespace turbex::kernels {

namespace {

// Runs body(i) for i in [0, n); exceptions are captured per index so the
// parallel and serial paths surface the same (lowest-index) failure.
template <typename Body>
void for_each_index(std::ptrdiff_t n, Execution execution, Body body) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    auto guarded = [&](std::ptrdiff_t i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) guarded(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) guarded(i);
    }
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<PhOutcome> resolve_batch(std::span<const PhQuery> queries, Execution execution) {
    std::vector<PhOutcome> out(queries.size());
    const auto n = static_cast<std::ptrdiff_t>(queries.size());
    auto body = [&](std::ptrdiff_t i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k].state = steam::state_from_ph(queries[k].p, queries[k].h);
        } catch (const std::exception& e) {
            out[k].error = e.what();
        }
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    }
    return out;
}

std::vector<AnalysisReport> analyze_ambients(const OperatingRegime& regime, std::span<const AmbientState> ambients,
                                             const AnalysisOptions& options, Execution execution) {
    std::vector<std::optional<AnalysisReport>> slots(ambients.size());
    for_each_index(static_cast<std::ptrdiff_t>(ambients.size()), execution,
                   [&](std::size_t i) { slots[i] = analyze(regime, ambients[i], options); });
    std::vector<AnalysisReport> reports;
    reports.reserve(slots.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

std::vector<AnalysisReport> analyze_regimes(std::span<const OperatingRegime> regimes, const AmbientState& ambient,
                                            const AnalysisOptions& options, Execution execution) {
    std::vector<std::optional<AnalysisReport>> slots(regimes.size());
    for_each_index(static_cast<std::ptrdiff_t>(regimes.size()), execution,
                   [&](std::size_t i) { slots[i] = analyze(regimes[i], ambient, options); });
    std::vector<AnalysisReport> reports;
    reports.reserve(slots.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace turbex::kernels
