#include <gtest/gtest.h>

#include <cmath>

#include "golden_values.hpp"
#include "turbex/errors.hpp"
#include "turbex/exergy_engine.hpp"

using namespace turbex;

namespace {

const std::vector<OperatingRegime>& regimes() {
    static const std::vector<OperatingRegime> all = builtin_regimes();
    return all;
}

const OperatingRegime& regime(std::string_view name) {
    for (const auto& r : regimes()) {
        if (r.name() == name) return r;
    }
    throw std::out_of_range("no regime");
}

OperatingRegime with_stream(const OperatingRegime& r, int point_id, auto mutate) {
    std::vector<StreamState> streams(r.streams().begin(), r.streams().end());
    mutate(streams[static_cast<std::size_t>(point_id - 1)]);
    return OperatingRegime(r.name(), streams);
}

// Second route: the per-part balances written out longhand over point numbers.
struct Longhand {
    double p_hl, p_hr, p_l1, p_l2;
    double d_hl, d_hr, d_l1, d_l2;
};

Longhand longhand(const OperatingRegime& r, const AmbientState& a) {
    std::array<double, 16> m{}, h{}, e{};
    for (int i = 1; i <= 15; ++i) {
        m[i] = r.m(i);
        h[i] = r.h(i);
        e[i] = specific_exergy(r.point(i), a);
    }
    const double half = m[1] / 2;
    Longhand o{};
    o.p_hl = half * (h[1] - h[4]) + (half - m[4]) * (h[4] - h[5]);
    o.p_hr = half * (h[1] - h[2]) + (half - m[2] - m[3]) * (h[2] - h[5]);
    o.d_hl = half * e[1] - m[4] * e[4] - (half - m[4]) * e[5] - o.p_hl;
    o.d_hr = half * e[1] - m[2] * e[2] - m[3] * e[3] - (half - m[2] - m[3]) * e[5] - o.p_hr;
    const double a6 = m[10] / 6, b1 = m[12] / 4, c = m[13] / 6, d = m[14] / 6, b2 = m[11] / 2;
    o.p_l1 = a6 * (h[10] - h[12]) + (a6 - b1) * (h[12] - h[13]) + (a6 - b1 - c) * (h[13] - h[14]) +
             (a6 - b1 - c - d) * (h[14] - h[15]);
    o.p_l2 = a6 * (h[10] - h[11]) + (a6 - b2) * (h[11] - h[13]) + (a6 - b2 - c) * (h[13] - h[14]) +
             (a6 - b2 - c - d) * (h[14] - h[15]);
    o.d_l1 = a6 * e[10] - b1 * e[12] - c * e[13] - d * e[14] - (a6 - b1 - c - d) * e[15] - o.p_l1;
    o.d_l2 = a6 * e[10] - b2 * e[11] - c * e[13] - d * e[14] - (a6 - b2 - c - d) * e[15] - o.p_l2;
    for (double* v : {&o.p_hl, &o.p_hr, &o.p_l1, &o.p_l2, &o.d_hl, &o.d_hr, &o.d_l1, &o.d_l2}) *v /= 1000.0;
    return o;
}

void expect_rel(double actual, double expected, double rel, const std::string& what) {
    EXPECT_LE(std::abs(actual - expected), rel * std::abs(expected)) << what << ": " << actual << " vs " << expected;
}

}  // namespace

TEST(AmbientState, Base) {
    const auto a = AmbientState::base();
    EXPECT_EQ(a.T0, 298.15);
    EXPECT_EQ(a.p0, 0.1);
    const auto d = steam::dead_state(0.1, 298.15);
    EXPECT_EQ(a.h0, d.h0);
    EXPECT_EQ(a.s0, d.s0);
    EXPECT_THROW(AmbientState::at(400.0, 0.1), DomainError);
}

TEST(SpecificExergy, DeadStateIsZero) {
    const auto a = AmbientState::at(298.15, 0.1);
    StreamState dead{1, 1.0, 0.1, 25.0, a.h0, {}};
    EXPECT_NEAR(specific_exergy(dead, a), 0.0, 1e-9);
}

TEST(SpecificExergy, HpcInlet) {
    EXPECT_NEAR(specific_exergy(regime("Original").point(1), AmbientState::base()), 1027.75, 0.01);
}

TEST(SpecificExergy, DecreasesWithAmbientWhenAboveDeadEntropy) {
    const auto& r = regime("Original");
    for (const auto& s : r.streams()) {
        const double s_stream = resolve_stream(s).s;
        const auto a = AmbientState::at(298.15, 0.1);
        const auto b = AmbientState::at(299.15, 0.1);
        if (s_stream > a.s0) {
            EXPECT_LT(specific_exergy(s, b), specific_exergy(s, a)) << s.point_id;
        }
    }
}

TEST(SpecificExergy, AmbientDerivative) {
    // d(eps)/dT0 = -(s - s0) at fixed dead-state pressure, since dh0/dT0 = T0 ds0/dT0.
    // Over the +1 K step s0 moves by cp/T0, so the derivative is taken at the step's mean s0.
    for (const auto& r : regimes()) {
        for (const auto& s : r.streams()) {
            const auto a = AmbientState::at(298.15, 0.1);
            const auto b = AmbientState::at(299.15, 0.1);
            const double analytic = -(resolve_stream(s).s - 0.5 * (a.s0 + b.s0)) * 1.0;
            const double fd = specific_exergy(s, b) - specific_exergy(s, a);
            EXPECT_LE(std::abs(fd - analytic), 1e-3 * std::abs(analytic)) << r.name() << " point " << s.point_id;
        }
    }
}

TEST(SpecificExergy, StreamErrorCarriesPoint) {
    StreamState bad{7, 1.0, 1.0, 0.0, 9000.0, {}};
    try {
        specific_exergy(bad, AmbientState::base());
        FAIL();
    } catch (const StreamError& e) {
        EXPECT_EQ(e.point_id(), 7);
    }
}

TEST(ExergyFlow, Arithmetic) {
    EXPECT_EQ(exergy_flow(0.0, 500.0), 0.0);
    EXPECT_DOUBLE_EQ(exergy_flow(1532.70, 1000.0), 1532.70);
    EXPECT_DOUBLE_EQ(exergy_flow(3.0 + 4.0, 17.5), exergy_flow(3.0, 17.5) + exergy_flow(4.0, 17.5));
}

TEST(EffectivePressure, Policy) {
    const auto& r = regime("Original");
    // superheated and subcooled streams keep the tabulated pressure
    EXPECT_EQ(effective_pressure(r.point(10)), 0.740);
    EXPECT_EQ(effective_pressure(r.point(7)), 0.771);
    EXPECT_EQ(effective_pressure(r.point(15), PressureSource::Tabulated), 0.008);
    // wet condenser stream: between p_sat(T) and the tabulated value, close to p_sat
    const double p15 = effective_pressure(r.point(15));
    const double ps = steam::saturation_pressure(40.3 + 273.15);
    EXPECT_GT(p15, ps);
    EXPECT_LT(p15, 0.008);
    EXPECT_LT(std::abs(p15 - ps), std::abs(0.008 - ps));
    // well-resolved wet stream: tabulated p dominates
    EXPECT_NEAR(effective_pressure(r.point(1)), 6.110, 0.0005);

    StreamState exact_p = r.point(15);
    exact_p.decimals.p = -1;
    EXPECT_EQ(effective_pressure(exact_p), 0.008);
    StreamState exact_T = r.point(15);
    exact_T.decimals.T = -1;
    EXPECT_EQ(effective_pressure(exact_T), ps);
}

TEST(ComponentPower, OriginalValues) {
    const auto& r = regime("Original");
    EXPECT_NEAR(component_power(r, ComponentId::HpcEc), 408.82, 0.005);
    EXPECT_NEAR(component_power(r, ComponentId::HpcL), 210.73, 0.005);
    EXPECT_NEAR(component_power(r, ComponentId::HpcR), 198.08, 0.005);
    EXPECT_NEAR(component_power(r, ComponentId::Wt), 996.29, 0.005);
}

TEST(ComponentPower, MatchesLonghand) {
    for (const auto& r : regimes()) {
        const auto o = longhand(r, AmbientState::base());
        expect_rel(component_power(r, ComponentId::HpcL), o.p_hl, 1e-12, r.name() + " HPC-L");
        expect_rel(component_power(r, ComponentId::HpcR), o.p_hr, 1e-12, r.name() + " HPC-R");
        expect_rel(component_power(r, ComponentId::Lpc1L), o.p_l1, 1e-12, r.name() + " LPC1-L");
        expect_rel(component_power(r, ComponentId::Lpc2L), o.p_l2, 1e-12, r.name() + " LPC2-L");
        expect_rel(component_power(r, ComponentId::Wt), o.p_hl + o.p_hr + 4 * o.p_l1 + 2 * o.p_l2, 1e-12,
                   r.name() + " WT");
    }
}

TEST(ComponentDestruction, MatchesLonghand) {
    for (double T0 : {278.15, 298.15, 318.15}) {
        const auto a = AmbientState::at(T0, 0.1);
        for (const auto& r : regimes()) {
            const auto o = longhand(r, a);
            expect_rel(component_destruction(r, ComponentId::HpcL, a), o.d_hl, 1e-9, r.name() + " HPC-L");
            expect_rel(component_destruction(r, ComponentId::HpcR, a), o.d_hr, 1e-9, r.name() + " HPC-R");
            expect_rel(component_destruction(r, ComponentId::Lpc1R, a), o.d_l1, 1e-9, r.name() + " LPC1-R");
            expect_rel(component_destruction(r, ComponentId::Lpc2R, a), o.d_l2, 1e-9, r.name() + " LPC2-R");
            expect_rel(component_destruction(r, ComponentId::Lpc3Ec, a), 2 * o.d_l1, 1e-9, r.name() + " LPC3-EC");
        }
    }
}

TEST(ComponentDestruction, NonPhysicalIsRejected) {
    // A wet exhaust far below the inlet entropy implies negative entropy generation.
    const auto broken = with_stream(regime("Original"), 5, [](StreamState& s) { s.h = 2000.0; });
    EXPECT_THROW(component_destruction(broken, ComponentId::HpcL, AmbientState::base()),
                 NonPhysicalDestructionError);
}

TEST(ComponentEfficiency, Definition) {
    EXPECT_EQ(component_efficiency(1.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(component_efficiency(3.0, 1.0), 0.75);
    EXPECT_THROW(component_efficiency(0.0, 1.0), DomainError);
    EXPECT_THROW(component_efficiency(-1.0, 1.0), DomainError);
}

TEST(HpcInletEnergy, Values) {
    EXPECT_NEAR(hpc_inlet_energy_flow(regime("Original")), 4243.9, 0.05);
    EXPECT_NEAR(hpc_inlet_energy_flow(regime("IGSA")), 4377.3, 0.05);
}

TEST(Analyze, StructuralIdentities) {
    for (const auto& r : regimes()) {
        const auto rep = analyze(r, AmbientState::base());
        for (ComponentId cyl : kCylinders) {
            const auto [L, R] = parts_of(cyl);
            EXPECT_EQ(rep.at(cyl).power, rep.at(L).power + rep.at(R).power);
            EXPECT_EQ(rep.at(cyl).destruction, rep.at(L).destruction + rep.at(R).destruction);
        }
        double p = 0.0, d = 0.0;
        for (ComponentId cyl : kCylinders) {
            p += rep.at(cyl).power;
            d += rep.at(cyl).destruction;
        }
        EXPECT_EQ(rep.at(ComponentId::Wt).power, p);
        EXPECT_EQ(rep.at(ComponentId::Wt).destruction, d);
        EXPECT_EQ(rep.at(ComponentId::Lpc1L), (ComponentResult{ComponentId::Lpc1L, rep.at(ComponentId::Lpc1R).power,
                                                                rep.at(ComponentId::Lpc1R).destruction,
                                                                rep.at(ComponentId::Lpc1R).efficiency}));
        EXPECT_EQ(rep.at(ComponentId::Lpc2L).power, rep.at(ComponentId::Lpc2R).power);
        EXPECT_EQ(rep.at(ComponentId::Lpc2L).destruction, rep.at(ComponentId::Lpc2R).destruction);
        EXPECT_EQ(rep.at(ComponentId::Lpc3Ec).power, rep.at(ComponentId::Lpc1Ec).power);
        EXPECT_EQ(rep.at(ComponentId::Lpc3Ec).destruction, rep.at(ComponentId::Lpc1Ec).destruction);
        for (const auto& c : rep.results) {
            EXPECT_GT(c.power, 0.0);
            EXPECT_GT(c.destruction, 0.0);
            EXPECT_GT(c.efficiency, 0.0);
            EXPECT_LT(c.efficiency, 1.0);
            EXPECT_DOUBLE_EQ(c.efficiency, c.power / (c.power + c.destruction));
        }
    }
}

TEST(Analyze, BalanceClosure) {
    for (const auto& r : regimes()) {
        for (ComponentId id : kAllComponents) {
            if (!is_part(id)) continue;
            const auto b = part_balance(r, id, AmbientState::base());
            EXPECT_NEAR(b.inflow, b.power + b.outflow + b.destruction, 1e-12 * b.inflow) << to_string(id);
            EXPECT_DOUBLE_EQ(b.destruction, component_destruction(r, id, AmbientState::base()));
            EXPECT_DOUBLE_EQ(b.power, component_power(r, id));
        }
    }
    EXPECT_THROW(part_balance(regime("GA"), ComponentId::Wt, AmbientState::base()), DomainError);
}

TEST(Analyze, DefaultIdentity) {
    const auto& r = regime("Original");
    const auto a = analyze(r, AmbientState::base());
    const auto b = analyze(r, AmbientState::at(25.0 + 273.15, 1.0 * 0.1));
    for (std::size_t i = 0; i < kComponentCount; ++i) EXPECT_EQ(a.results[i], b.results[i]);
}

TEST(Analyze, ContextOnStreamFailure) {
    const auto broken = with_stream(regime("Original"), 12, [](StreamState& s) { s.h = 9000.0; });
    try {
        analyze(broken, AmbientState::base());
        FAIL();
    } catch (const AnalysisError& e) {
        EXPECT_NE(e.component().find("LPC1-L"), std::string::npos) << e.component();
        EXPECT_NE(std::string(e.what()).find("point 12"), std::string::npos) << e.what();
    }
}

TEST(Analyze, TabulatedPressureSourceDiffers) {
    const auto& r = regime("Original");
    const auto rec = analyze(r, AmbientState::base());
    const auto tab = analyze(r, AmbientState::base(), {PressureSource::Tabulated});
    EXPECT_EQ(rec.at(ComponentId::Wt).power, tab.at(ComponentId::Wt).power);
    EXPECT_LT(tab.at(ComponentId::Wt).destruction, rec.at(ComponentId::Wt).destruction - 5.0);
}

TEST(Golden, IndependentOracle) {
    for (const auto& g : golden::kRegimes) {
        const auto& r = regime(g.regime);
        const auto rep = analyze(r, AmbientState::base());
        for (int i = 1; i <= 15; ++i) {
            const auto k = static_cast<std::size_t>(i - 1);
            EXPECT_NEAR(specific_exergy(r.point(i), AmbientState::base()), g.epsilon[k], 2e-3)
                << g.regime << " point " << i;
            EXPECT_NEAR(resolve_stream(r.point(i)).s, g.entropy[k], 5e-6) << g.regime << " point " << i;
        }
        for (const auto& c : g.components) {
            const std::string what = std::string(g.regime) + " " + std::string(to_string(c.component));
            EXPECT_NEAR(rep.at(c.component).power, c.power, 1e-6) << what;
            EXPECT_NEAR(rep.at(c.component).destruction, c.destruction, 2e-3) << what;
            EXPECT_NEAR(rep.at(c.component).efficiency, c.efficiency, 1e-5) << what;
        }
        EXPECT_NEAR(rep.en1, g.en1, 1e-6);
        const auto sweep = ambient_sweep(r, default_sweep_grid());
        EXPECT_NEAR(sweep.avg_abs_efficiency_change[index_of(ComponentId::Wt)], g.wt_avg_abs_efficiency_change_pp,
                    1e-4);
    }
}

TEST(Sweep, GridAndInvariants) {
    const auto grid = default_sweep_grid();
    ASSERT_EQ(grid, (std::vector<double>{278.15, 288.15, 298.15, 308.15, 318.15}));
    for (const auto& r : regimes()) {
        const auto s = ambient_sweep(r, grid);
        ASSERT_EQ(s.samples.size(), 5u);
        EXPECT_EQ(s.p0, 0.1);
        for (std::size_t i = 0; i < s.samples.size(); ++i) {
            EXPECT_EQ(s.samples[i].T0, grid[i]);
            for (ComponentId id : kAllComponents) {
                EXPECT_EQ(s.samples[i].report.at(id).power, s.samples[0].report.at(id).power);
                EXPECT_GT(s.samples[i].report.at(id).destruction, 0.0);
            }
        }
        for (ComponentId id : kAllComponents) {
            const std::size_t k = index_of(id);
            double abs_sum = 0.0, signed_sum = 0.0;
            for (std::size_t i = 1; i < 5; ++i) {
                const double de = 100.0 * (s.samples[i].report.at(id).efficiency -
                                           s.samples[i - 1].report.at(id).efficiency);
                abs_sum += std::abs(de);
                signed_sum += de;
            }
            EXPECT_DOUBLE_EQ(s.avg_abs_efficiency_change[k], abs_sum / 4);
            EXPECT_DOUBLE_EQ(s.avg_signed_efficiency_change[k], signed_sum / 4);
            EXPECT_LT(s.avg_abs_efficiency_change[k], 0.5);
            EXPECT_GE(s.avg_abs_destruction_change[k], std::abs(s.avg_signed_destruction_change[k]));
        }
    }
}

TEST(Sweep, Errors) {
    const auto& r = regime("SA");
    EXPECT_THROW(ambient_sweep(r, {298.15}), DomainError);
    EXPECT_THROW(ambient_sweep(r, {}), DomainError);
    EXPECT_THROW(ambient_sweep(r, {298.15, 288.15}), DomainError);
    EXPECT_THROW(ambient_sweep(r, {298.15, 298.15}), DomainError);
    EXPECT_THROW(ambient_sweep(r, {298.15, NAN}), DomainError);
    EXPECT_NO_THROW(ambient_sweep(r, {298.15, 299.15}));
}

TEST(Sweep, SerialMatchesParallel) {
    for (const auto& r : regimes()) {
        const auto a = ambient_sweep(r, default_sweep_grid(), 0.1, {}, Execution::Parallel);
        const auto b = ambient_sweep(r, default_sweep_grid(), 0.1, {}, Execution::Serial);
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            EXPECT_EQ(a.samples[i].report.results, b.samples[i].report.results);
        }
        EXPECT_EQ(a.avg_abs_efficiency_change, b.avg_abs_efficiency_change);
        EXPECT_EQ(a.avg_abs_destruction_change, b.avg_abs_destruction_change);
    }
}

TEST(ExpansionPath, PointsAndOrder) {
    const auto& r = regime("Original");
    const auto hpc_r = expansion_path(r, ComponentId::HpcR);
    ASSERT_EQ(hpc_r.points.size(), 3u);
    EXPECT_EQ(hpc_r.points[0].point_id, 1);
    EXPECT_EQ(hpc_r.points[1].point_id, 2);
    EXPECT_EQ(hpc_r.points[2].point_id, 5);
    EXPECT_EQ(hpc_r.points[0].h, 2768.9);
    EXPECT_EQ(hpc_r.points[1].h, 2652.4);
    EXPECT_EQ(hpc_r.points[2].h, 2476.3);
    EXPECT_TRUE(hpc_r.entropy_decreasing_steps().empty());

    const auto lpc1 = expansion_path(r, ComponentId::Lpc1L);
    const std::vector<int> ids = {10, 12, 13, 14, 15};
    const std::vector<double> hs = {2984.5, 2712.1, 2617.0, 2483.2, 2350.4};
    ASSERT_EQ(lpc1.points.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(lpc1.points[i].point_id, ids[i]);
        EXPECT_EQ(lpc1.points[i].h, hs[i]);
    }
    // The tabulated 10 -> 12 segment loses entropy (see the README's data notes).
    EXPECT_EQ(lpc1.entropy_decreasing_steps(), (std::vector<std::size_t>{0}));
    EXPECT_THROW(expansion_path(r, ComponentId::HpcEc), DomainError);
    EXPECT_THROW(expansion_path(r, ComponentId::Wt), DomainError);
}

TEST(Orderings, HpcCylinderMostEfficient) {
    for (const auto& r : regimes()) {
        const auto rep = analyze(r, AmbientState::base());
        for (ComponentId lpc : {ComponentId::Lpc1Ec, ComponentId::Lpc2Ec, ComponentId::Lpc3Ec}) {
            EXPECT_GT(rep.at(ComponentId::HpcEc).efficiency, rep.at(lpc).efficiency) << r.name();
        }
    }
}

TEST(Orderings, GaHpcPowerAboveIgsa) {
    EXPECT_GT(component_power(regime("GA"), ComponentId::HpcEc), component_power(regime("IGSA"), ComponentId::HpcEc));
}

TEST(Orderings, SaHasHighestDestructionAmongAlgorithms) {
    const auto a = AmbientState::base();
    const double sa = component_destruction(regime("SA"), ComponentId::Wt, a);
    EXPECT_GT(sa, component_destruction(regime("GA"), ComponentId::Wt, a));
    EXPECT_GT(sa, component_destruction(regime("IGSA"), ComponentId::Wt, a));
}
