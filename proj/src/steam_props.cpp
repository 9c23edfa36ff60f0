#include "turbex/steam_props.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "if97_coefficients.hpp"
#include "turbex/errors.hpp"

namespace turbex::steam {

namespace {

// Integer power; the IF97 polynomials only use integer exponents.
double ipow(double x, int n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

void require_finite(double a, double b, const char* what) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError(fmt::format("{}: non-finite input ({}, {})", what, a, b));
    }
}

// Region 4 saturation-line coefficients n1..n10.
constexpr double kSat[] = {0.0,
                           0.11670521452767e4,
                           -0.72421316703206e6,
                           -0.17073846940092e2,
                           0.12020824702470e5,
                           -0.32325550322333e7,
                           0.14915108613530e2,
                           -0.48232657361591e4,
                           0.40511340542057e6,
                           -0.23855557567849,
                           0.65017534844798e3};

double psat_raw(double T) {
    const double theta = T + kSat[9] / (T - kSat[10]);
    const double A = theta * theta + kSat[1] * theta + kSat[2];
    const double B = kSat[3] * theta * theta + kSat[4] * theta + kSat[5];
    const double C = kSat[6] * theta * theta + kSat[7] * theta + kSat[8];
    return ipow(2.0 * C / (-B + std::sqrt(B * B - 4.0 * A * C)), 4);
}

double tsat_raw(double p) {
    const double beta = std::pow(p, 0.25);
    const double E = beta * beta + kSat[3] * beta + kSat[6];
    const double F = kSat[1] * beta * beta + kSat[4] * beta + kSat[7];
    const double G = kSat[2] * beta * beta + kSat[5] * beta + kSat[8];
    const double D = 2.0 * G / (-F - std::sqrt(F * F - 4.0 * E * G));
    const double sum = kSat[10] + D;
    return 0.5 * (sum - std::sqrt(sum * sum - 4.0 * (kSat[9] + kSat[10] * D)));
}

struct Solution {
    double T;
    double residual;
};

// Safeguarded Newton on h(p, T) = h_target over [lo, hi]; f(lo) <= 0 <= f(hi).
template <typename Forward>
Solution solve_temperature(Forward forward, double h_target, double lo, double hi, double guess) {
    constexpr int kMaxIterations = 50;
    constexpr double kTightTolerance = 1e-9;  // kJ/kg

    double T = std::clamp(guess, lo, hi);
    double residual = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        const if97::Properties props = forward(T);
        residual = props.h - h_target;
        if (std::abs(residual) <= kTightTolerance) break;
        if (residual > 0.0)
            hi = T;
        else
            lo = T;
        double next = T - residual / props.cp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo < 1e-12) {
            T = next;
            residual = forward(T).h - h_target;
            break;
        }
        T = next;
    }
    return {T, residual};
}

ThermoState single_phase(Region region, double p, double T, const if97::Properties& props) {
    return ThermoState{region, p, T, props.h, props.s, std::nullopt};
}

}  // namespace

std::string_view to_string(Region region) {
    switch (region) {
        case Region::CompressedLiquid: return "CompressedLiquid";
        case Region::SuperheatedVapor: return "SuperheatedVapor";
        case Region::TwoPhase: return "TwoPhase";
    }
    return "Unknown";
}

namespace if97 {

Properties region1(double p, double T) {
    const double pi = p / 16.53;
    const double tau = 1386.0 / T;
    const double a = 7.1 - pi;
    const double b = tau - 1.222;
    double g = 0.0;
    double g_tau = 0.0;
    double g_tautau = 0.0;
    for (const Term& t : kRegion1) {
        const double ai = ipow(a, t.I);
        g += t.n * ai * ipow(b, t.J);
        if (t.J != 0) {
            g_tau += t.n * ai * t.J * ipow(b, t.J - 1);
            if (t.J != 1) g_tautau += t.n * ai * t.J * (t.J - 1) * ipow(b, t.J - 2);
        }
    }
    return {kGasConstant * T * tau * g_tau, kGasConstant * (tau * g_tau - g),
            -kGasConstant * tau * tau * g_tautau};
}

Properties region2(double p, double T) {
    const double pi = p;
    const double tau = 540.0 / T;
    double g0 = std::log(pi);
    double g0_tau = 0.0;
    double g0_tautau = 0.0;
    for (const IdealTerm& t : kRegion2Ideal) {
        g0 += t.n * ipow(tau, t.J);
        g0_tau += t.n * t.J * ipow(tau, t.J - 1);
        g0_tautau += t.n * t.J * (t.J - 1) * ipow(tau, t.J - 2);
    }
    const double b = tau - 0.5;
    double gr = 0.0;
    double gr_tau = 0.0;
    double gr_tautau = 0.0;
    for (const Term& t : kRegion2Residual) {
        const double pi_i = ipow(pi, t.I);
        gr += t.n * pi_i * ipow(b, t.J);
        gr_tau += t.n * pi_i * t.J * ipow(b, t.J - 1);
        gr_tautau += t.n * pi_i * t.J * (t.J - 1) * ipow(b, t.J - 2);
    }
    const double g_tau = g0_tau + gr_tau;
    return {kGasConstant * T * tau * g_tau, kGasConstant * (tau * g_tau - (g0 + gr)),
            -kGasConstant * tau * tau * (g0_tautau + gr_tautau)};
}

double b23_pressure(double T) {
    return 0.34805185628969e3 - 0.11671859879975e1 * T + 0.10192970039326e-2 * T * T;
}

double b23_temperature(double p) {
    return 0.57254459862746e3 + std::sqrt((p - 0.13918839778870e2) / 0.10192970039326e-2);
}

double b2bc_pressure(double h) {
    return 0.90584278514723e3 - 0.67955786399241 * h + 0.12809002730136e-3 * h * h;
}

double backward_t_ph_region1(double p, double h) {
    const double eta = h / 2500.0 + 1.0;
    double T = 0.0;
    for (const Term& t : kBackward1Tph) T += t.n * ipow(p, t.I) * ipow(eta, t.J);
    return T;
}

double backward_t_ph_region2(double p, double h) {
    const double eta = h / 2000.0;
    double T = 0.0;
    if (p <= 4.0) {
        for (const Term& t : kBackward2aTph) T += t.n * ipow(p, t.I) * ipow(eta - 2.1, t.J);
    } else if (p <= b2bc_pressure(h)) {
        for (const Term& t : kBackward2bTph) T += t.n * ipow(p - 2.0, t.I) * ipow(eta - 2.6, t.J);
    } else {
        for (const Term& t : kBackward2cTph) T += t.n * ipow(p + 25.0, t.I) * ipow(eta - 1.8, t.J);
    }
    return T;
}

int region_of(double p, double T) {
    require_finite(p, T, "props_pt");
    if (T > kMaxTemperature) {
        throw UnimplementedRegionError(
            5, fmt::format("T = {} K lies in IF97 region 5, which is not implemented", T));
    }
    if (T < kMinTemperature || p <= 0.0 || p > kMaxPressure) {
        throw DomainError(fmt::format(
            "(p = {} MPa, T = {} K) is outside the validity envelope "
            "273.15 K <= T <= 1073.15 K, 0 < p <= 100 MPa",
            p, T));
    }
    if (T <= kRegion13Temperature) {
        const double ps = psat_raw(T);
        if (std::abs(p - ps) <= 1e-9 * ps) {
            throw SaturationAmbiguousError(fmt::format(
                "saturation-ambiguous input: (p = {} MPa, T = {} K) lies on the saturation line; "
                "use state_from_ph",
                p, T));
        }
        return p > ps ? 1 : 2;
    }
    if (T <= kRegion23MaxTemperature && p > b23_pressure(T)) {
        throw UnimplementedRegionError(
            3, fmt::format("(p = {} MPa, T = {} K) lies in IF97 region 3, which is not implemented",
                           p, T));
    }
    return 2;
}

}  // namespace if97

double saturation_pressure(double T) {
    if (!std::isfinite(T) || T < kMinTemperature || T > kCriticalTemperature) {
        throw DomainError(fmt::format(
            "saturation_pressure: T = {} K outside [273.15, 647.096] K", T));
    }
    return psat_raw(T);
}

double saturation_temperature(double p) {
    if (!std::isfinite(p) || p < kMinSaturationPressure || p > kCriticalPressure) {
        throw DomainError(fmt::format(
            "saturation_temperature: p = {} MPa outside [611.212677e-6, 22.064] MPa", p));
    }
    return tsat_raw(p);
}

ThermoState props_pt(double p, double T) {
    const int region = if97::region_of(p, T);
    if (region == 1) return single_phase(Region::CompressedLiquid, p, T, if97::region1(p, T));
    return single_phase(Region::SuperheatedVapor, p, T, if97::region2(p, T));
}

SaturationPoint saturation_line(double p) {
    const double T = saturation_temperature(p);
    if (p > kRegion13SaturationPressure) {
        throw UnimplementedRegionError(
            3, fmt::format("saturated states at p = {} MPa lie in IF97 region 3, "
                           "which is not implemented",
                           p));
    }
    const if97::Properties liquid = if97::region1(p, T);
    const if97::Properties vapor = if97::region2(p, T);
    return {p, T, liquid.h, vapor.h, liquid.s, vapor.s};
}

ThermoState state_from_ph(double p, double h) {
    require_finite(p, h, "state_from_ph");
    if (p <= 0.0 || p > kMaxPressure) {
        throw DomainError(fmt::format("state_from_ph: p = {} MPa outside (0, 100] MPa", p));
    }

    auto liquid = [p](double T) { return if97::region1(p, T); };
    auto vapor = [p](double T) { return if97::region2(p, T); };
    auto unresolvable = [p, h](const std::string& why) {
        return UnresolvableStateError(
            p, h, fmt::format("unresolvable state (p = {} MPa, h = {} kJ/kg): {}", p, h, why));
    };

    double liquid_hi = kRegion13Temperature;
    double vapor_lo = kMinTemperature;
    bool has_liquid = true;

    if (p < kMinSaturationPressure) {
        has_liquid = false;
    } else if (p <= kRegion13SaturationPressure) {
        const SaturationPoint sat = saturation_line(p);
        const double lo = sat.h_f - 1e-6 * std::abs(sat.h_f);
        const double hi = sat.h_g + 1e-6 * std::abs(sat.h_g);
        if (h >= lo && h <= hi) {
            const double x = std::clamp((h - sat.h_f) / (sat.h_g - sat.h_f), 0.0, 1.0);
            return ThermoState{Region::TwoPhase, p, sat.T, h, sat.s_f + x * (sat.s_g - sat.s_f), x};
        }
        liquid_hi = sat.T;
        vapor_lo = sat.T;
    } else {
        vapor_lo = if97::b23_temperature(p);
    }

    constexpr double kAcceptTolerance = 1e-3;  // kJ/kg

    if (has_liquid && h <= liquid(liquid_hi).h) {
        if (h < liquid(kMinTemperature).h) throw unresolvable("below the 273.15 K liquid limit");
        const Solution sol = solve_temperature(liquid, h, kMinTemperature, liquid_hi,
                                               if97::backward_t_ph_region1(p, h));
        if (std::abs(sol.residual) > kAcceptTolerance) throw unresolvable("region-1 solve did not converge");
        return single_phase(Region::CompressedLiquid, p, sol.T, liquid(sol.T));
    }
    if (h >= vapor(vapor_lo).h) {
        if (h > vapor(kMaxTemperature).h) throw unresolvable("above the 1073.15 K vapor limit");
        const Solution sol = solve_temperature(vapor, h, vapor_lo, kMaxTemperature,
                                               if97::backward_t_ph_region2(p, h));
        if (std::abs(sol.residual) > kAcceptTolerance) throw unresolvable("region-2 solve did not converge");
        return single_phase(Region::SuperheatedVapor, p, sol.T, vapor(sol.T));
    }
    if (!has_liquid) throw unresolvable("below the 273.15 K vapor limit");
    throw UnimplementedRegionError(
        3, fmt::format("(p = {} MPa, h = {} kJ/kg) lies in IF97 region 3, which is not implemented",
                       p, h));
}

DeadState dead_state(double p0, double T0) {
    ThermoState state;
    try {
        state = props_pt(p0, T0);
    } catch (const SaturationAmbiguousError&) {
        throw DomainError(fmt::format(
            "dead state (p0 = {} MPa, T0 = {} K) is saturated; the ambient must be liquid water", p0, T0));
    }
    if (state.region != Region::CompressedLiquid) {
        throw DomainError(fmt::format(
            "dead state (p0 = {} MPa, T0 = {} K) is steam; the ambient must be liquid water", p0, T0));
    }
    return {state.h, state.s};
}

}  // namespace turbex::steam
