// acceptance.cpp - runs the project's acceptance criteria end to end and
// prints one PASS/FAIL line per criterion. With an argument it runs a single
// criterion (1..9); the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tfl/diagnostics.hpp"
#include "tfl/scenarios.hpp"
#include "tfl/verify.hpp"

using namespace tfl;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += msg;
        }
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. accelerated STFT equals the O(L^3) direct summation
Criterion criterion_1() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::uint64_t seed = 1;
    for (long L : {8L, 16L}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Signal f = oracle::random_signal(L, seed++);
            const Signal g = oracle::random_signal(L, seed++);
            const CoefficientTable fast = stft(f, g);
            const CoefficientTable slow = oracle::brute_stft(f, g);
            for (std::size_t i = 0; i < fast.v.size(); ++i)
                worst = std::max(worst, std::abs(fast.v[i] - slow.v[i]));
        }
    }
    const double dt = seconds_since(t0);
    c.require(worst <= 1e-12, "stft/oracle mismatch " + fmt(worst));
    c.require(dt < 5.0, "runtime " + fmt(dt) + " s >= 5 s");
    c.note("max err " + fmt(worst) + ", " + fmt(dt) + " s");
    return c;
}

// 2. frame round trip at the pinned instance L=16, alpha=beta=4, Gaussian
Criterion criterion_2() {
    Criterion c;
    const long L = 16;
    const LatticeSpec lat{4, 4, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    try {
        const Signal gamma = canonical_dual(g, lat);
        const Signal f = oracle::random_unit(L, 77);
        const Signal rec = reconstruct(gabor_coeffs(f, g, lat), gamma, lat);
        c.require(oracle::max_err(rec, f) <= 1e-10,
                  "round-trip error " + fmt(oracle::max_err(rec, f)));
        const Signal h = tight_window(g, lat);
        double energy = 0.0;
        for (const cxd& z : gabor_coeffs(f, h, lat).v) energy += std::norm(z);
        c.require(std::abs(energy - 1.0) <= 1e-10, "Parseval defect " + fmt(std::abs(energy - 1.0)));
    } catch (const NotAFrameError& e) {
        c.require(false, std::string("NotAFrame at the pinned instance: ") + e.what());
        const auto [lo, hi] = frame_bounds(frame_operator(g, lat));
        c.note("frame operator min/max eigenvalue " + fmt(lo) + " / " + fmt(hi) +
               " (centered Gaussian at critical density is exactly singular)");
    }
    return c;
}

// 3. localization identity and adjoint identity
Criterion criterion_3() {
    Criterion c;
    double worst_id = 0.0;
    for (long L : {6L, 33L, 63L}) {
        const Signal phi = make_window("gaussian", L, 0.0, true);
        const Operator op = localization_build(SymbolGrid::constant(L, cxd(1.0, 0.0)), phi, phi);
        worst_id = std::max(worst_id,
                            (op.m - CMatrix::identity(static_cast<std::size_t>(L))).max_abs());
    }
    c.require(worst_id <= 1e-10, "identity defect " + fmt(worst_id));

    double worst_adj = 0.0;
    for (long L : {6L, 33L}) {
        SymbolGrid a = SymbolGrid::zeros(L);
        a.v = oracle::random_signal(L * L, 300 + static_cast<std::uint64_t>(L));
        const Signal p1 = oracle::random_unit(L, 301);
        const Signal p2 = oracle::random_unit(L, 302);
        SymbolGrid abar = a;
        for (cxd& z : abar.v) z = std::conj(z);
        const CMatrix lhs = localization_build(a, p1, p2).m.adjoint();
        const CMatrix rhs = localization_build(abar, p2, p1).m;
        worst_adj = std::max(worst_adj, (lhs - rhs).max_abs());
    }
    c.require(worst_adj <= 1e-12, "adjoint defect " + fmt(worst_adj));
    c.note("identity defect " + fmt(worst_id) + ", adjoint defect " + fmt(worst_adj));
    return c;
}

// 4. Weyl correspondence and the kernel-magnitude identity
Criterion criterion_4() {
    Criterion c;
    double worst_fit = 0.0;
    for (long L : {3L, 5L, 7L}) {
        SymbolGrid a = SymbolGrid::zeros(L);
        a.v = oracle::random_signal(L * L, 400 + static_cast<std::uint64_t>(L));
        const Signal p1 = make_window("gaussian", L, 0.0, true);
        const Signal p2 = make_window("gaussian", L, 0.8 * std::sqrt(static_cast<double>(L)), true);
        const Operator loc = localization_build(a, p1, p2);
        SymbolGrid conv = localization_weyl_symbol(a, p1, p2);
        for (cxd& z : conv.v) z *= static_cast<double>(L);
        const Operator w1 = weyl_build(conv);
        cxd num(0.0, 0.0);
        double den = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j) {
                num += std::conj(w1.m(i, j)) * loc.m(i, j);
                den += std::norm(w1.m(i, j));
            }
        worst_fit = std::max(worst_fit, std::abs(num / den * static_cast<double>(L) - cxd(1.0, 0.0)));
    }
    c.require(worst_fit <= 1e-12, "c_L oracle deviation from 1/L: " + fmt(worst_fit));

    double worst_match = 0.0;
    for (long L : {3L, 5L, 7L, 33L}) {
        SymbolGrid a = SymbolGrid::zeros(L);
        a.v = oracle::random_signal(L * L, 410 + static_cast<std::uint64_t>(L));
        const Signal p1 = make_window("gaussian", L, 0.0, true);
        const Signal p2 = make_window("gaussian", L, 0.8 * std::sqrt(static_cast<double>(L)), true);
        const Operator loc = localization_build(a, p1, p2);
        const Operator w = weyl_build(localization_weyl_symbol(a, p1, p2));
        worst_match = std::max(worst_match, (loc.m - w.m).max_abs());
    }
    c.require(worst_match <= 1e-9, "operator mismatch " + fmt(worst_match));

    const long L = 5;
    SymbolGrid sigma = SymbolGrid::zeros(L);
    sigma.v = oracle::random_signal(25, 420);
    const Signal g = make_window("gaussian", L, 0.0, true);
    std::mt19937_64 rng(421);
    double worst_lemma = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const TFPoint z{static_cast<long>(rng() % L), static_cast<long>(rng() % L)};
        const TFPoint w{static_cast<long>(rng() % L), static_cast<long>(rng() % L)};
        const auto [lhs, rhs] = stft_mag_of_operator_kernel(sigma, g, z, w);
        worst_lemma = std::max(worst_lemma, std::abs(lhs - rhs));
    }
    c.require(worst_lemma <= 1e-9, "kernel-magnitude identity defect " + fmt(worst_lemma));
    c.note("c_L defect " + fmt(worst_fit) + ", operator " + fmt(worst_match) + ", kernel " +
           fmt(worst_lemma));
    return c;
}

// 5. sequence inequalities: Young, Hoelder, Stechkin
Criterion criterion_5() {
    Criterion c;
    std::mt19937_64 rng(500);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto nonneg = [&](std::size_t n) {
        Sequence a;
        a.v.resize(n);
        for (cxd& z : a.v) z = cxd(unif(rng), 0.0);
        return a;
    };
    double young_big = 0.0, young_small = 0.0, holder_worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Sequence a = nonneg(6);
        const Sequence b = nonneg(7);
        young_big = std::max(young_big,
                             young_check(a, b, 1.0, 1.0, 1.0, Weight::one(), Weight::one()).ratio);
        young_small = std::max(
            young_small, young_check(a, b, 0.5, 0.5, 0.5, Weight::one(), Weight::one()).ratio);
        holder_worst =
            std::max(holder_worst, holder_check(a, b, 2.0, 2.0, 1.0, Weight::one()).ratio);
    }
    c.require(young_big <= 1.0 + 1e-12, "Young r=1 ratio " + fmt(young_big));
    c.require(young_small <= 1.0 + 1e-12, "Young r=1/2 ratio " + fmt(young_small));
    c.require(holder_worst <= 1.0 + 1e-12, "Hoelder ratio " + fmt(holder_worst));

    SortedMagnitudes geo, power;
    for (int m = 0; m < 20; ++m) geo.v.push_back(std::pow(2.0, -m));
    for (int m = 1; m <= 1000; ++m) power.v.push_back(1.0 / (static_cast<double>(m) * m));
    for (double p : {0.5, 1.0, 1.5}) {
        const double rg = stechkin_ratio(geo, p).ratio;
        const double rp = stechkin_ratio(power, p).ratio;
        c.require(rg >= 0.1 && rg <= 10.0, "Stechkin geometric p=" + fmt(p) + ": " + fmt(rg));
        c.require(rp >= 0.1 && rp <= 10.0, "Stechkin power p=" + fmt(p) + ": " + fmt(rp));
    }
    c.note("young " + fmt(young_big) + "/" + fmt(young_small) + ", hoelder " + fmt(holder_worst));
    return c;
}

// 6. decay separation on antiwick-gauss-63
Criterion criterion_6() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const BuiltScenario b = build_scenario(preset("antiwick-gauss-63"));
    const EigenDecayStudy study =
        eigen_decay_study(b.op, b.phi1, b.lat, 10000, 1e-8, b.spec.seed);
    c.require(!study.reports.empty(), "no retained eigenfunctions");
    double min_rhat = 1e300, worst_tail = 0.0;
    for (const DecayReport& r : study.reports) {
        min_rhat = std::min(min_rhat, r.rhat);
        worst_tail = std::max(worst_tail, r.sigma[64] / r.sigma0());
    }
    const double base_tail = study.baseline.sigma[64] / study.baseline.sigma0();
    c.require(min_rhat >= 2.0, "min retained rhat " + fmt(min_rhat) + " < 2");
    c.require(worst_tail <= 1e-4, "max retained sigma64/sigma0 " + fmt(worst_tail) + " > 1e-4");
    c.require(study.baseline.rhat <= 0.8, "baseline rhat " + fmt(study.baseline.rhat));
    c.require(base_tail >= 0.3, "baseline sigma64/sigma0 " + fmt(base_tail));
    const double dt = seconds_since(t0);
    c.require(dt < 60.0, "runtime " + fmt(dt) + " s");
    c.note(std::to_string(study.retained.size()) + " retained, top rhat " +
           fmt(study.reports.empty() ? 0.0 : study.reports[0].rhat) + ", top tail " +
           fmt(study.reports.empty() ? 0.0 : study.reports[0].sigma[64] / study.reports[0].sigma0()) +
           ", baseline rhat " + fmt(study.baseline.rhat) + ", " + fmt(dt) + " s");
    return c;
}

// 7. weighted decay on antiwick-gauss-63
Criterion criterion_7() {
    Criterion c;
    const BuiltScenario b = build_scenario(preset("antiwick-gauss-63"));
    const WeightedDecayStudy study =
        weighted_decay_study(b.op, b.phi1, b.lat, {1.0, 2.0}, 1.0, 1e-8, b.spec.seed);
    c.require(!study.ratio.empty(), "no retained eigenfunctions");
    double worst = 0.0;
    for (const auto& row : study.vs_baseline)
        for (double v : row) worst = std::max(worst, v);
    c.require(worst <= 0.2, "max eigenfunction/baseline weighted ratio " + fmt(worst) + " > 0.2");
    c.note(std::to_string(study.ratio.size()) + " retained, top s=1 rel " +
           fmt(study.vs_baseline.empty() ? 0.0 : study.vs_baseline[0][0]) + ", top s=2 rel " +
           fmt(study.vs_baseline.empty() ? 0.0 : study.vs_baseline[0][1]) + ", worst " + fmt(worst));
    return c;
}

// 8. convolution-relation boundedness at L=32
Criterion criterion_8() {
    Criterion c;
    const long L = 32;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const ConvExponents regimes[2] = {{1.0, 2.0, 1.0, 2.0, 1.0, 1.0},
                                      {0.5, 2.0, 0.5, 2.0, 0.5, 1.0}};
    std::uint64_t seed = 800;
    for (const ConvExponents& e : regimes) {
        std::vector<double> ratios;
        for (int trial = 0; trial < 100; ++trial) {
            const Signal f = oracle::random_unit(L, seed++);
            const Signal h = oracle::random_unit(L, seed++);
            ratios.push_back(convolution_relation_check(f, h, g, lat, e, AxisWeight::one()).ratio);
        }
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        const double median = 0.5 * (sorted[49] + sorted[50]);
        const double mx = sorted.back();
        c.require(mx <= 100.0 * median,
                  "regime r=" + fmt(e.r) + ": max " + fmt(mx) + " > 100 x median " + fmt(median));
        c.note("r=" + fmt(e.r) + ": median " + fmt(median) + ", max " + fmt(mx));
    }
    // fixture byte-stability across reruns
    const Signal f = oracle::random_unit(L, 900);
    const Signal h = oracle::random_unit(L, 901);
    const std::string a =
        format_sig17(convolution_relation_check(f, h, g, lat, regimes[0], AxisWeight::one()).ratio);
    const std::string b =
        format_sig17(convolution_relation_check(f, h, g, lat, regimes[0], AxisWeight::one()).ratio);
    c.require(a == b, "fixture not byte-stable");
    return c;
}

// 9. spectral correctness across all presets
Criterion criterion_9() {
    Criterion c;
    for (const PresetEntry& entry : list_presets()) {
        const BuiltScenario b = build_scenario(preset(entry.name));
        const EigenSystem e = eig(b.op);
        const double tol = eig_residual_tolerance(b.op);
        double worst_res = 0.0;
        for (double r : e.residuals) worst_res = std::max(worst_res, r);
        c.require(worst_res <= tol,
                  entry.name + ": residual " + fmt(worst_res) + " > " + fmt(tol));
        double sum = 0.0;
        for (double s : singular_values(b.op)) sum += s * s;
        const double fro2 = b.op.m.frobenius() * b.op.m.frobenius();
        c.require(std::abs(sum - fro2) <= 1e-10 * std::max(1.0, fro2),
                  entry.name + ": sum s^2 vs Frobenius^2 defect");
        if (b.op.hermitian) {
            double im = 0.0;
            for (const cxd& v : e.values) im = std::max(im, std::abs(v.imag()));
            c.require(im <= 1e-10, entry.name + ": imaginary part " + fmt(im));
        }
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    using Fn = Criterion (*)();
    const std::vector<std::pair<const char*, Fn>> criteria = {
        {"stft oracle equivalence", criterion_1},
        {"frame round trip (L=16, alpha=beta=4, Gaussian)", criterion_2},
        {"localization identities", criterion_3},
        {"Weyl correspondence", criterion_4},
        {"sequence inequalities", criterion_5},
        {"decay separation (antiwick-gauss-63)", criterion_6},
        {"weighted decay (antiwick-gauss-63)", criterion_7},
        {"convolution-relation boundedness", criterion_8},
        {"spectral correctness on presets", criterion_9},
    };
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int nr = static_cast<int>(i) + 1;
        if (only != 0 && nr != only) continue;
        Criterion c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("CRITERION %d %s — %s%s%s\n", nr, c.ok ? "PASS" : "FAIL", criteria[i].first,
                    c.detail.empty() ? "" : ": ", c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures;
}
