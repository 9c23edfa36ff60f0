#include "turbex/plant_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "turbex/errors.hpp"
#include "turbex/steam_props.hpp"

namespace turbex {

double resolution(int decimals) {
    if (decimals < 0) return 0.0;
    return std::pow(10.0, -decimals);
}

OperatingRegime::OperatingRegime(std::string name, std::vector<StreamState> streams,
                                 std::string provenance, std::string ambient_note)
    : name_(std::move(name)),
      provenance_(std::move(provenance)),
      ambient_note_(std::move(ambient_note)),
      streams_(std::move(streams)) {
    std::set<int> seen;
    for (const StreamState& s : streams_) {
        if (s.point_id < 1 || s.point_id > kPointCount) {
            throw SchemaError("point_id", 0,
                              fmt::format("operating point id {} outside 1..{}", s.point_id, kPointCount));
        }
        if (!seen.insert(s.point_id).second) {
            throw SchemaError("point_id", 0, fmt::format("duplicate operating point {}", s.point_id));
        }
    }
    for (int id = 1; id <= kPointCount; ++id) {
        if (!seen.count(id)) throw SchemaError("point_id", 0, fmt::format("missing operating point {}", id));
    }
    std::sort(streams_.begin(), streams_.end(),
              [](const StreamState& a, const StreamState& b) { return a.point_id < b.point_id; });

    for (const StreamState& s : streams_) {
        if (!std::isfinite(s.m_dot) || !std::isfinite(s.p) || !std::isfinite(s.h) || !std::isfinite(s.T_C)) {
            throw ValidationError(fmt::format("non-finite value at point {}", s.point_id));
        }
        if (s.m_dot < 0.0) throw ValidationError(fmt::format("negative mass flow at point {}", s.point_id));
        if (s.p <= 0.0) throw ValidationError(fmt::format("non-positive pressure at point {}", s.point_id));
        if (s.h <= 0.0) throw ValidationError(fmt::format("non-positive enthalpy at point {}", s.point_id));
    }
}

const StreamState& OperatingRegime::point(int point_id) const {
    if (point_id < 1 || point_id > kPointCount) {
        throw DomainError(fmt::format("operating point id {} outside 1..{}", point_id, kPointCount));
    }
    return streams_[static_cast<std::size_t>(point_id - 1)];
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, kComponentCount> kComponentNames = {
    "HPC-L",  "HPC-R",  "HPC-EC",  "LPC1-L", "LPC1-R", "LPC1-EC", "LPC2-L",
    "LPC2-R", "LPC2-EC", "LPC3-L", "LPC3-R", "LPC3-EC", "WT",
};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

std::string_view to_string(ComponentId id) { return kComponentNames[index_of(id)]; }

std::optional<ComponentId> parse_component(std::string_view name) {
    for (ComponentId id : kAllComponents) {
        if (iequals(name, to_string(id))) return id;
    }
    return std::nullopt;
}

bool is_part(ComponentId id) { return !is_cylinder(id) && id != ComponentId::Wt; }

bool is_cylinder(ComponentId id) {
    return id == ComponentId::HpcEc || id == ComponentId::Lpc1Ec || id == ComponentId::Lpc2Ec ||
           id == ComponentId::Lpc3Ec;
}

std::array<ComponentId, 2> parts_of(ComponentId cylinder) {
    switch (cylinder) {
        case ComponentId::HpcEc: return {ComponentId::HpcL, ComponentId::HpcR};
        case ComponentId::Lpc1Ec: return {ComponentId::Lpc1L, ComponentId::Lpc1R};
        case ComponentId::Lpc2Ec: return {ComponentId::Lpc2L, ComponentId::Lpc2R};
        case ComponentId::Lpc3Ec: return {ComponentId::Lpc3L, ComponentId::Lpc3R};
        default: break;
    }
    throw DomainError(fmt::format("{} is not a cylinder", to_string(cylinder)));
}

// Steam enters each HPC part with half of point 1 and each of the six LPC parts
// with a sixth of point 10. Point 12 feeds four parts (LPC1, LPC3), point 11 the
// two LPC2 parts, points 13 and 14 all six.
const std::vector<PartPath>& plant_topology() {
    static const std::vector<PartPath> topology = [] {
        const std::vector<Stage> lpc1_stages = {{12, {{12, 4.0}}}, {13, {{13, 6.0}}}, {14, {{14, 6.0}}}};
        const std::vector<Stage> lpc2_stages = {{11, {{11, 2.0}}}, {13, {{13, 6.0}}}, {14, {{14, 6.0}}}};
        return std::vector<PartPath>{
            {ComponentId::HpcL, 1, 2.0, {{4, {{4, 1.0}}}}, 5, std::nullopt},
            {ComponentId::HpcR, 1, 2.0, {{2, {{2, 1.0}, {3, 1.0}}}}, 5, std::nullopt},
            {ComponentId::Lpc1L, 10, 6.0, lpc1_stages, 15, std::nullopt},
            {ComponentId::Lpc1R, 10, 6.0, lpc1_stages, 15, ComponentId::Lpc1L},
            {ComponentId::Lpc2L, 10, 6.0, lpc2_stages, 15, std::nullopt},
            {ComponentId::Lpc2R, 10, 6.0, lpc2_stages, 15, ComponentId::Lpc2L},
            {ComponentId::Lpc3L, 10, 6.0, lpc1_stages, 15, ComponentId::Lpc1L},
            {ComponentId::Lpc3R, 10, 6.0, lpc1_stages, 15, ComponentId::Lpc1R},
        };
    }();
    return topology;
}

const PartPath& part_path(ComponentId part) {
    for (const PartPath& path : plant_topology()) {
        if (path.part == part) return path;
    }
    throw DomainError(fmt::format("{} is not a cylinder part", to_string(part)));
}

// ---------------------------------------------------------------------------

namespace {

struct Column {
    std::array<double, kPointCount> m_dot;
    std::array<double, kPointCount> h;
    std::array<double, kPointCount> p;
    std::array<double, kPointCount> T;
};

OperatingRegime make_builtin(std::string name, const Column& c) {
    std::vector<StreamState> streams;
    for (int i = 0; i < kPointCount; ++i) {
        const auto k = static_cast<std::size_t>(i);
        streams.push_back({i + 1, c.m_dot[k], c.p[k], c.T[k], c.h[k], FieldDecimals{2, 3, 1, 1}});
    }
    return OperatingRegime(std::move(name), std::move(streams),
                           "published operating-point tables of the nuclear-plant turbine "
                           "(mass flow/enthalpy and pressure/temperature), transcribed verbatim",
                           "base ambient 25 degC, 1 bar");
}

}  // namespace

std::vector<OperatingRegime> builtin_regimes() {
    static const Column original{
        {1532.70, 72.01, 76.48, 111.02, 64.70, 1208.50, 165.80, 1042.70, 31.10, 1011.60, 41.42, 40.24,
         48.36, 52.23, 829.35},
        {2768.9, 2652.4, 2652.4, 2597.9, 2476.3, 2476.3, 714.2, 2984.5, 2984.5, 2984.5, 2823.6, 2712.1,
         2617.0, 2483.2, 2350.4},
        {6.110, 2.760, 2.760, 1.910, 0.783, 0.783, 0.771, 0.747, 0.740, 0.740, 0.386, 0.202, 0.096, 0.036,
         0.008},
        {276.7, 229.2, 229.2, 210.0, 169.5, 169.5, 168.9, 265.1, 265.0, 265.0, 181.9, 123.0, 98.5, 73.3,
         40.3},
    };
    static const Column igsa{
        {1587.40, 86.41, 77.02, 133.22, 51.99, 1239.00, 181.50, 1057.40, 31.10, 1026.30, 33.14, 48.25,
         58.03, 62.67, 824.20},
        {2757.5, 2632.9, 2632.9, 2579.5, 2467.0, 2467.0, 735.4, 2979.5, 2979.5, 2979.5, 2814.0, 2703.1,
         2609.1, 2476.7, 2334.5},
        {6.910, 2.960, 2.960, 2.050, 0.879, 0.879, 0.865, 0.838, 0.830, 0.830, 0.423, 0.220, 0.105, 0.040,
         0.008},
        {285.0, 233.0, 233.0, 213.5, 174.3, 174.3, 173.7, 264.1, 264.0, 264.0, 178.5, 123.3, 101.1, 75.7,
         40.8},
    };
    static const Column ga{
        {1579.70, 83.07, 72.12, 133.17, 59.54, 1231.80, 180.30, 1051.50, 31.10, 1020.40, 34.84, 46.50,
         53.87, 59.27, 825.90},
        {2758.1, 2633.8, 2633.8, 2580.2, 2466.6, 2466.6, 733.3, 2978.8, 2978.8, 2978.8, 2813.9, 2703.1,
         2608.9, 2476.4, 2334.2},
        {6.870, 2.940, 2.940, 2.040, 0.869, 0.869, 0.855, 0.829, 0.821, 0.821, 0.419, 0.218, 0.104, 0.039,
         0.008},
        {284.6, 232.8, 232.8, 213.3, 173.9, 173.9, 173.2, 263.6, 263.5, 263.5, 178.3, 123.0, 100.8, 75.4,
         40.6},
    };
    static const Column sa{
        {1571.80, 77.51, 78.77, 124.79, 56.76, 1234.00, 179.70, 1054.30, 31.10, 1023.20, 35.95, 46.18,
         55.68, 58.48, 826.90},
        {2759.4, 2635.8, 2635.8, 2582.1, 2467.4, 2467.4, 730.8, 2976.5, 2976.5, 2976.5, 2813.6, 2702.0,
         2607.9, 2475.4, 2335.0},
        {6.790, 2.920, 2.920, 2.020, 0.857, 0.857, 0.844, 0.818, 0.810, 0.810, 0.414, 0.216, 0.103, 0.039,
         0.008},
        {283.7, 232.4, 232.4, 212.9, 173.3, 173.3, 172.6, 262.4, 262.3, 262.3, 177.6, 122.7, 100.5, 75.1,
         40.6},
    };
    return {make_builtin("Original", original), make_builtin("IGSA", igsa), make_builtin("GA", ga),
            make_builtin("SA", sa)};
}

std::optional<OperatingRegime> builtin_regime(std::string_view name) {
    for (OperatingRegime& regime : builtin_regimes()) {
        if (iequals(regime.name(), name)) return std::move(regime);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

bool BalanceReport::ok() const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const BalanceResidual& r) { return r.within_tolerance; });
}

double BalanceReport::max_abs_residual() const {
    double worst = 0.0;
    for (const BalanceResidual& r : residuals) worst = std::max(worst, std::abs(r.residual));
    return worst;
}

BalanceReport validate_mass_balance(const OperatingRegime& regime, double tolerance) {
    const auto m = [&](int id) { return regime.m(id); };
    BalanceReport report;
    report.tolerance = tolerance;
    auto add = [&](std::string name, std::string equation, double residual) {
        report.residuals.push_back(
            {std::move(name), std::move(equation), residual, std::abs(residual) <= tolerance});
    };
    add("hpc_exhaust", "m1 - m2 - m3 - m4 - m5 - m6", m(1) - m(2) - m(3) - m(4) - m(5) - m(6));
    add("reheat_train", "m8 - m9 - m10", m(8) - m(9) - m(10));
    add("lpc_condensation", "m10 - m11 - m12 - m13 - m14 - m15",
        m(10) - m(11) - m(12) - m(13) - m(14) - m(15));
    return report;
}

std::vector<ConsistencyWarning> check_pt_consistency(const OperatingRegime& regime, double threshold) {
    constexpr double kKelvin = 273.15;
    std::vector<ConsistencyWarning> warnings;
    for (const StreamState& s : regime.streams()) {
        try {
            const steam::ThermoState center = steam::state_from_ph(s.p, s.h);
            const double dp = 0.5 * s.p_resolution();
            const double dh = 0.5 * resolution(s.decimals.h);
            // T(p, h) is nondecreasing in both p and h, so the corners bound the interval.
            double lo = center.T;
            double hi = center.T;
            try {
                lo = std::min(lo, steam::state_from_ph(std::max(s.p - dp, 0.5 * s.p), s.h - dh).T);
            } catch (const std::exception&) {
            }
            try {
                hi = std::max(hi, steam::state_from_ph(s.p + dp, s.h + dh).T);
            } catch (const std::exception&) {
            }
            const double tabulated = s.T_C + kKelvin;
            const double gap = tabulated < lo ? lo - tabulated : (tabulated > hi ? tabulated - hi : 0.0);
            if (gap > threshold) {
                warnings.push_back({s.point_id, s.T_C, center.T - kKelvin,
                                    fmt::format("point {} ({}): tabulated T = {:.1f} degC, resolved T = "
                                                "{:.2f} degC",
                                                s.point_id, steam::to_string(center.region), s.T_C,
                                                center.T - kKelvin)});
            }
        } catch (const std::exception& e) {
            warnings.push_back({s.point_id, s.T_C, std::nullopt,
                                fmt::format("point {}: property evaluation failed: {}", s.point_id, e.what())});
        }
    }
    return warnings;
}

}  // namespace turbex
