// Water/steam properties from IAPWS-IF97, regions 1, 2 and 4.
//
// Units: p in MPa, T in K, h in kJ/kg, s in kJ/(kg K). Every function is pure
// and reentrant.

#pragma once

#include <optional>
#include <string_view>

namespace turbex::steam {

inline constexpr double kGasConstant = 0.461526;       // kJ/(kg K)
inline constexpr double kCriticalTemperature = 647.096;  // K
inline constexpr double kCriticalPressure = 22.064;      // MPa
inline constexpr double kMinTemperature = 273.15;        // K
inline constexpr double kMaxTemperature = 1073.15;       // K, upper bound of region 2
inline constexpr double kMaxPressure = 100.0;            // MPa
inline constexpr double kRegion13Temperature = 623.15;   // K
inline constexpr double kRegion23MaxTemperature = 863.15;  // K, B23 at 100 MPa
/// p_sat(273.15 K), the lower end of the saturation line.
inline constexpr double kMinSaturationPressure = 611.212677e-6;
/// p_sat(623.15 K); saturated states above it belong to region 3.
inline constexpr double kRegion13SaturationPressure = 16.529164252605;

enum class Region { CompressedLiquid, SuperheatedVapor, TwoPhase };

std::string_view to_string(Region region);

struct ThermoState {
    Region region;
    double p;
    double T;
    double h;
    double s;
    std::optional<double> x;  // only for TwoPhase
};

struct SaturationPoint {
    double p;
    double T;
    double h_f;
    double h_g;
    double s_f;
    double s_g;
};

struct DeadState {
    double h0;
    double s0;
};

double saturation_pressure(double T);
double saturation_temperature(double p);

/// Single-phase state at (p, T). Throws SaturationAmbiguousError on the saturation line.
ThermoState props_pt(double p, double T);

SaturationPoint saturation_line(double p);

/// State at (p, h). Inside the dome the result is a wet mixture with quality x;
/// outside, T is solved from the forward formulation by safeguarded Newton.
ThermoState state_from_ph(double p, double h);

/// Liquid-water reference state for exergy. Rejects ambient states that are not liquid.
DeadState dead_state(double p0, double T0);

/// Region-level formulation, exposed for verification and for the solvers.
namespace if97 {

struct Properties {
    double h;
    double s;
    double cp;
};

Properties region1(double p, double T);
Properties region2(double p, double T);

/// B23 boundary between regions 2 and 3.
double b23_pressure(double T);
double b23_temperature(double p);

/// IF97 backward equations T(p, h); used as Newton starting points.
double backward_t_ph_region1(double p, double h);
double backward_t_ph_region2(double p, double h);

/// B2bc boundary pressure between subregions 2b and 2c.
double b2bc_pressure(double h);

/// 1 or 2 for a single-phase (p, T); throws for regions 3/5 or outside the envelope.
int region_of(double p, double T);

}  // namespace if97

}  // namespace turbex::steam
