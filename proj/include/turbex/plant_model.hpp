// Operating regimes of the four-cylinder turbine (15 numbered streams),
// the flow-split topology of its cylinder parts, and dataset validation.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turbex {

inline constexpr int kPointCount = 15;

/// Declared decimal places of each tabulated field in canonical units
/// (kg/s, MPa, degC, kJ/kg). -1 means the value is exact.
struct FieldDecimals {
    int m_dot = -1;
    int p = -1;
    int T = -1;
    int h = -1;

    bool operator==(const FieldDecimals&) const = default;
};

/// Rounding step implied by a decimal count; 0 for exact values.
double resolution(int decimals);

struct StreamState {
    int point_id = 0;
    double m_dot = 0.0;  // kg/s
    double p = 0.0;      // MPa
    double T_C = 0.0;    // degC, informational
    double h = 0.0;      // kJ/kg
    FieldDecimals decimals{};

    double p_resolution() const { return resolution(decimals.p); }
    double T_resolution() const { return resolution(decimals.T); }

    bool operator==(const StreamState&) const = default;
};

class OperatingRegime {
public:
    /// Throws SchemaError for missing/duplicate/out-of-range point ids and
    /// ValidationError for negative flows or non-positive p, h.
    OperatingRegime(std::string name, std::vector<StreamState> streams,
                    std::string provenance = {}, std::string ambient_note = {});

    const std::string& name() const { return name_; }
    const std::string& provenance() const { return provenance_; }
    const std::string& ambient_note() const { return ambient_note_; }

    /// Streams ordered by point id 1..15.
    std::span<const StreamState> streams() const { return streams_; }
    const StreamState& point(int point_id) const;
    double m(int point_id) const { return point(point_id).m_dot; }
    double h(int point_id) const { return point(point_id).h; }

    bool operator==(const OperatingRegime&) const = default;

private:
    std::string name_;
    std::string provenance_;
    std::string ambient_note_;
    std::vector<StreamState> streams_;
};

// ---------------------------------------------------------------------------
// Components

enum class ComponentId {
    HpcL,
    HpcR,
    HpcEc,
    Lpc1L,
    Lpc1R,
    Lpc1Ec,
    Lpc2L,
    Lpc2R,
    Lpc2Ec,
    Lpc3L,
    Lpc3R,
    Lpc3Ec,
    Wt,
};

inline constexpr std::size_t kComponentCount = 13;

inline constexpr std::array<ComponentId, kComponentCount> kAllComponents = {
    ComponentId::HpcL,  ComponentId::HpcR,  ComponentId::HpcEc, ComponentId::Lpc1L, ComponentId::Lpc1R,
    ComponentId::Lpc1Ec, ComponentId::Lpc2L, ComponentId::Lpc2R, ComponentId::Lpc2Ec, ComponentId::Lpc3L,
    ComponentId::Lpc3R, ComponentId::Lpc3Ec, ComponentId::Wt,
};

inline constexpr std::array<ComponentId, 4> kCylinders = {ComponentId::HpcEc, ComponentId::Lpc1Ec,
                                                          ComponentId::Lpc2Ec, ComponentId::Lpc3Ec};

std::string_view to_string(ComponentId id);
/// Accepts the display names ("HPC-L", "lpc2-ec", ...), case-insensitive.
std::optional<ComponentId> parse_component(std::string_view name);

constexpr std::size_t index_of(ComponentId id) { return static_cast<std::size_t>(id); }
bool is_part(ComponentId id);
bool is_cylinder(ComponentId id);
/// The two parts of a cylinder (EC) component.
std::array<ComponentId, 2> parts_of(ComponentId cylinder);

// ---------------------------------------------------------------------------
// Topology

/// A stream bled from the expansion; its flow is m_dot(point) / divisor.
struct Draw {
    int point_id;
    double divisor;
};

/// The expansion reaches the enthalpy of `point_id`, then `draws` leave.
struct Stage {
    int point_id;
    std::vector<Draw> draws;
};

struct PartPath {
    ComponentId part;
    int inlet_point;
    double inlet_divisor;
    std::vector<Stage> stages;
    int exhaust_point;
    /// Parts whose results are copied from another part (symmetry, identical cylinder).
    std::optional<ComponentId> same_as;
};

/// Flow-split paths for the eight cylinder parts.
const std::vector<PartPath>& plant_topology();
const PartPath& part_path(ComponentId part);

// ---------------------------------------------------------------------------
// Data

/// Original, IGSA, GA and SA regimes, bundled verbatim.
std::vector<OperatingRegime> builtin_regimes();
/// Case-insensitive lookup among builtin_regimes().
std::optional<OperatingRegime> builtin_regime(std::string_view name);

enum class RegimeFormat { KeyValue, Csv };

/// Parses either encoding. Without an explicit format, a document whose first
/// content line contains '=' is key/value, otherwise comma-separated.
OperatingRegime load_regime(std::string_view document, std::optional<RegimeFormat> format = std::nullopt);
OperatingRegime load_regime_file(const std::string& path);
std::string serialize_regime(const OperatingRegime& regime, RegimeFormat format);

// ---------------------------------------------------------------------------
// Validation

inline constexpr double kMassBalanceTolerance = 0.05;  // kg/s
inline constexpr double kTemperatureWarningThreshold = 0.5;  // K

struct BalanceResidual {
    std::string name;
    std::string equation;
    double residual;  // inflow minus outflow, kg/s
    bool within_tolerance;
};

struct BalanceReport {
    std::vector<BalanceResidual> residuals;
    double tolerance = kMassBalanceTolerance;

    bool ok() const;
    double max_abs_residual() const;
};

BalanceReport validate_mass_balance(const OperatingRegime& regime, double tolerance = kMassBalanceTolerance);

struct ConsistencyWarning {
    int point_id;
    double T_tabulated_C;
    std::optional<double> T_resolved_C;
    std::string message;
};

/// Compares each tabulated T with the temperature resolved from (p, h),
/// allowing for the declared rounding of p and h.
std::vector<ConsistencyWarning> check_pt_consistency(const OperatingRegime& regime,
                                                     double threshold = kTemperatureWarningThreshold);

}  // namespace turbex
