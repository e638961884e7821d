#include "tfl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "tfl/diagnostics.hpp"
#include "tfl/scenarios.hpp"

namespace tfl {

namespace {

struct Suite {
    SuiteResult result;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result.passed;
        } else {
            ++result.failed;
            if (result.first_failure.empty()) result.first_failure = what;
        }
    }
    void close(double got, double want, double tol, const std::string& what) {
        check(std::abs(got - want) <= tol, what + " (got " + std::to_string(got) + ")");
    }
    void below(double got, double bound, const std::string& what) {
        check(got <= bound, what + " (got " + std::to_string(got) + ")");
    }
};

Signal random_signal(long L, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Signal f(static_cast<std::size_t>(L));
    for (auto& z : f) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = cxd(re, im);
    }
    return f;
}

double max_err(const Signal& a, const Signal& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// O(L^2) reference DFT, fixed summation order.
Signal brute_dft(const Signal& f) {
    const long L = static_cast<long>(f.size());
    Signal F(f.size(), cxd(0.0, 0.0));
    for (long n = 0; n < L; ++n) {
        cxd acc(0.0, 0.0);
        for (long t = 0; t < L; ++t) acc += f[t] * unit_phase(-t * n, L);
        F[n] = acc;
    }
    return F;
}

// O(L^3) reference STFT.
CoefficientTable brute_stft(const Signal& f, const Signal& g) {
    const long L = static_cast<long>(f.size());
    CoefficientTable table{LatticeSpec{1, 1, L}, std::vector<cxd>(static_cast<std::size_t>(L) * L)};
    for (long k = 0; k < L; ++k)
        for (long n = 0; n < L; ++n) {
            cxd acc(0.0, 0.0);
            for (long t = 0; t < L; ++t)
                acc += f[t] * std::conj(g[mod_reduce(t - k, L)]) * unit_phase(-t * n, L);
            table.at(k, n) = acc;
        }
    return table;
}

// Definition-level localization operator, applied to the standard basis.
CMatrix brute_localization(const SymbolGrid& a, const Signal& phi1, const Signal& phi2) {
    const long L = a.L;
    CMatrix m(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    for (long y = 0; y < L; ++y) {
        Signal e(static_cast<std::size_t>(L), cxd(0.0, 0.0));
        e[y] = 1.0;
        const CoefficientTable v = brute_stft(e, phi1);
        Signal out(static_cast<std::size_t>(L), cxd(0.0, 0.0));
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n) {
                const Signal atom = tf_shift(phi2, TFPoint{k, n});
                for (long t = 0; t < L; ++t) out[t] += a.at(k, n) * v.at(k, n) * atom[t];
            }
        for (long t = 0; t < L; ++t) m(t, y) = out[t] / static_cast<double>(L);
    }
    return m;
}

void suite_stft_oracle(Suite& s) {
    std::mt19937_64 rng(11);
    // delta -> all ones; constant -> L delta_0
    for (long L : {8L, 12L}) {
        Signal d(static_cast<std::size_t>(L), cxd(0.0, 0.0));
        d[0] = 1.0;
        const Signal D = dft(d);
        double err = 0.0;
        for (const cxd& z : D) err = std::max(err, std::abs(z - cxd(1.0, 0.0)));
        s.below(err, 1e-12, "dft(delta) = ones, L=" + std::to_string(L));
        Signal c(static_cast<std::size_t>(L), cxd(1.0, 0.0));
        const Signal C = dft(c);
        err = std::abs(C[0] - cxd(static_cast<double>(L), 0.0));
        for (long n = 1; n < L; ++n) err = std::max(err, std::abs(C[n]));
        s.below(err, 1e-12, "dft(const) = L delta, L=" + std::to_string(L));
        const Signal f = random_signal(L, rng);
        s.below(max_err(dft(f), brute_dft(f)), 1e-12, "dft oracle, L=" + std::to_string(L));
        // norm relation ||dft f||^2 = L ||f||^2
        s.close(norm2(dft(f)) * norm2(dft(f)), static_cast<double>(L) * norm2(f) * norm2(f), 1e-9,
                "dft norm relation");
        s.below(max_err(idft(dft(f)), f), 1e-12, "idft round trip");
    }
    const long L = 8;
    const Signal f = random_signal(L, rng);
    const Signal g = random_signal(L, rng);
    const CoefficientTable fast = stft(f, g);
    const CoefficientTable slow = brute_stft(f, g);
    double err = 0.0;
    for (std::size_t i = 0; i < fast.v.size(); ++i)
        err = std::max(err, std::abs(fast.v[i] - slow.v[i]));
    s.below(err, 1e-12, "stft oracle, L=8");
    s.close(std::abs(stft(g, g).at(0, 0) - cxd(norm2(g) * norm2(g), 0.0)), 0.0, 1e-10,
            "stft(g,g)(0,0) = ||g||^2");
}

void suite_core_shifts(Suite& s) {
    std::mt19937_64 rng(12);
    const long L = 8;
    const Signal f = random_signal(L, rng);
    for (int trial = 0; trial < 5; ++trial) {
        const TFPoint z{static_cast<long>(rng() % L), static_cast<long>(rng() % L)};
        s.close(norm2(tf_shift(f, z)), norm2(f), 1e-12, "tf_shift unitary");
    }
    s.below(max_err(translate(f, L), f), 0.0, "translate period L exact");
    s.below(max_err(modulate(f, L), f), 0.0, "modulate period L exact");
    s.below(max_err(translate(translate(f, 3), 4), translate(f, 7)), 0.0, "translate composition");
    s.below(max_err(tf_shift(f, TFPoint{0, 0}), f), 0.0, "identity shift");
    // (dft T_k f)(n) = e^{-2 pi i k n / L} (dft f)(n)
    const long k = 3;
    const Signal lhs = dft(translate(f, k));
    const Signal base = dft(f);
    double err = 0.0;
    for (long n = 0; n < L; ++n)
        err = std::max(err, std::abs(lhs[n] - unit_phase(-k * n, L) * base[n]));
    s.below(err, 1e-12, "Fourier intertwining");
    // commutation: pi(z) pi(w) = e^{-2 pi i z1 w2 / L} pi(w) pi(z)
    const TFPoint z{3, 5}, w{2, 7};
    const Signal a = tf_shift(tf_shift(f, w), z);
    Signal b = tf_shift(tf_shift(f, z), w);
    const cxd phase = unit_phase(-z.k * w.n, L) * unit_phase(w.k * z.n, L);
    for (cxd& x : b) x *= phase;
    s.below(max_err(a, b), 1e-12, "commutation relation phase");
}

void suite_gabor_frame(Suite& s) {
    std::mt19937_64 rng(13);
    {
        // full grid: S = L ||g||^2 I
        const long L = 8;
        const Signal g = random_signal(L, rng);
        const Operator S = frame_operator(g, LatticeSpec{1, 1, L});
        const double c = static_cast<double>(L) * norm2(g) * norm2(g);
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(S.m(i, j) - (i == j ? cxd(c, 0.0) : cxd(0.0, 0.0))));
        s.below(err, 1e-9, "full-grid frame operator = L||g||^2 I");
        const auto [A, B] = frame_bounds(S);
        s.close(A, c, 1e-9, "full-grid lower bound");
        s.close(B, c, 1e-9, "full-grid upper bound");
    }
    {
        const long L = 16;
        const LatticeSpec lat{2, 2, L};
        const Signal g = make_window("gaussian", L, 0.0, true);
        const Signal gamma = canonical_dual(g, lat);
        const Signal h = tight_window(g, lat);
        Signal f = random_signal(L, rng);
        const double nf = norm2(f);
        for (cxd& z : f) z /= nf;
        const Signal rec = reconstruct(gabor_coeffs(f, g, lat), gamma, lat);
        s.below(max_err(rec, f) / norm2(f), 1e-10, "round trip with canonical dual");
        const Signal rec_tight = reconstruct(gabor_coeffs(f, h, lat), h, lat);
        s.below(max_err(rec_tight, f) / norm2(f), 1e-10, "round trip with tight window");
        const CoefficientTable ch = gabor_coeffs(f, h, lat);
        double energy = 0.0;
        for (const cxd& z : ch.v) energy += std::norm(z);
        s.close(energy, 1.0, 1e-10, "Parseval identity with tight window");
        // frame operator of the tight window is the identity
        const Operator Sh = frame_operator(h, lat);
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(Sh.m(i, j) - (i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0))));
        s.below(err, 1e-10, "tight window frame operator = I");
        const Signal h2 = tight_window(h, lat);
        s.below(max_err(h2, h), 1e-10, "tight window idempotent");
        // covariance of |V_g|
        const TFPoint u{4, 6};
        const CoefficientTable v0 = stft(f, g);
        const CoefficientTable v1 = stft(tf_shift(f, u), g);
        err = 0.0;
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n)
                err = std::max(err, std::abs(std::abs(v1.at(k, n)) -
                                             std::abs(v0.at(mod_reduce(k - u.k, L), mod_reduce(n - u.n, L)))));
        s.below(err, 1e-12, "STFT covariance magnitude");
        // S commutes with lattice shifts
        const Operator S = frame_operator(g, lat);
        const auto [A, B] = frame_bounds(S);
        s.check(S.hermitian && S.prov == Provenance::frame, "frame operator metadata");
        for (long lk : {2L, 4L})
            for (long ln : {2L, 6L}) {
                double cerr = 0.0;
                for (long col = 0; col < L; ++col) {
                    Signal e(static_cast<std::size_t>(L), cxd(0.0, 0.0));
                    e[col] = 1.0;
                    const Signal lhs = S.m.apply(tf_shift(e, TFPoint{lk, ln}));
                    const Signal rhs = tf_shift(S.m.apply(e), TFPoint{lk, ln});
                    cerr = std::max(cerr, max_err(lhs, rhs));
                }
                s.below(cerr, 1e-10, "frame operator commutes with lattice shift");
            }
        // frame bound sandwich over 100 random vectors
        bool sandwich = true;
        for (int trial = 0; trial < 100; ++trial) {
            const Signal x = random_signal(L, rng);
            const CoefficientTable cx = gabor_coeffs(x, g, lat);
            double sum = 0.0;
            for (const cxd& z : cx.v) sum += std::norm(z);
            const double n2 = norm2(x) * norm2(x);
            if (sum > B * n2 + 1e-10 || sum < A * n2 - 1e-10) sandwich = false;
        }
        s.check(sandwich, "frame bound sandwich, 100 trials");
    }
    {
        // single atom cannot span for L >= 2
        const long L = 6;
        const Signal g = make_window("gaussian", L, 0.0, true);
        bool threw = false;
        try {
            canonical_dual(g, LatticeSpec{L, L, L});
        } catch (const NotAFrameError&) {
            threw = true;
        }
        s.check(threw, "single-point lattice raises NotAFrame");
    }
}

void suite_seq_norms(Suite& s) {
    // 3x3 ones, p=1, q=2 -> sqrt(27)
    CoefficientTable ones{LatticeSpec{1, 1, 3}, std::vector<cxd>(9, cxd(1.0, 0.0))};
    s.close(lpq_norm(ones, 1.0, 2.0, Weight::one()), std::sqrt(27.0), 1e-12, "3x3 ones l^{1,2}");
    // Frobenius at p=q=2
    std::mt19937_64 rng(14);
    CoefficientTable t{LatticeSpec{1, 1, 4}, {}};
    t.v = random_signal(16, rng);
    double fro = 0.0;
    for (const cxd& z : t.v) fro += std::norm(z);
    s.close(lpq_norm(t, 2.0, 2.0, Weight::one()), std::sqrt(fro), 1e-12, "l^{2,2} = Frobenius");
    // homogeneity
    CoefficientTable t2 = t;
    for (cxd& z : t2.v) z *= cxd(0.0, -2.5);
    s.close(lpq_norm(t2, 0.5, 1.5, Weight::radial(1.0)),
            2.5 * lpq_norm(t, 0.5, 1.5, Weight::radial(1.0)), 1e-10, "lpq homogeneity");
    // inclusion monotonicity p1 <= p2 -> ||.||_{p2} <= ||.||_{p1}
    const double n_half = lpq_norm(t, 0.5, 0.5, Weight::one());
    const double n_one = lpq_norm(t, 1.0, 1.0, Weight::one());
    const double n_two = lpq_norm(t, 2.0, 2.0, Weight::one());
    s.check(n_two <= n_one + 1e-12 && n_one <= n_half + 1e-12, "l^p inclusion monotonicity");
    // r-subadditivity at r = 1/2
    CoefficientTable sum = t;
    for (std::size_t i = 0; i < sum.v.size(); ++i) sum.v[i] += t2.v[i];
    const double lhs = std::pow(lpq_norm(sum, 0.5, 0.5, Weight::one()), 0.5);
    const double rhs = std::pow(lpq_norm(t, 0.5, 0.5, Weight::one()), 0.5) +
                       std::pow(lpq_norm(t2, 0.5, 0.5, Weight::one()), 0.5);
    s.check(lhs <= rhs + 1e-12, "r-subadditivity, r=1/2");
    // convolution examples
    Sequence delta{0, {cxd(1.0, 0.0)}};
    Sequence b{0, {cxd(1.0, 0.0), cxd(2.0, 0.0), cxd(-1.0, 0.5)}};
    const Sequence db = convolve_seq(delta, b);
    double err = 0.0;
    for (std::size_t i = 0; i < b.v.size(); ++i) err = std::max(err, std::abs(db.v[i] - b.v[i]));
    s.below(err, 0.0, "delta convolution identity");
    Sequence oneone{0, {cxd(1.0, 0.0), cxd(1.0, 0.0)}};
    const Sequence sq = convolve_seq(oneone, oneone);
    s.check(sq.v.size() == 3 && std::abs(sq.v[0] - cxd(1.0, 0.0)) == 0.0 &&
                std::abs(sq.v[1] - cxd(2.0, 0.0)) == 0.0 && std::abs(sq.v[2] - cxd(1.0, 0.0)) == 0.0,
            "(1,1)*(1,1) = (1,2,1)");
}

void suite_seq_young_holder(Suite& s) {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto random_nonneg = [&](std::size_t n) {
        Sequence a;
        a.start = static_cast<long>(rng() % 5) - 2;
        a.v.resize(n);
        for (cxd& z : a.v) z = cxd(unif(rng), 0.0);
        return a;
    };
    double worst_young1 = 0.0, worst_young_half = 0.0, worst_holder = 0.0, worst_holder_w = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Sequence a = random_nonneg(6);
        const Sequence b = random_nonneg(7);
        worst_young1 = std::max(worst_young1,
                                young_check(a, b, 1.0, 1.0, 1.0, Weight::one(), Weight::one()).ratio);
        worst_young_half = std::max(
            worst_young_half, young_check(a, b, 0.5, 0.5, 0.5, Weight::one(), Weight::one()).ratio);
        worst_holder = std::max(worst_holder,
                                holder_check(a, b, 2.0, 2.0, 1.0, Weight::one()).ratio);
        worst_holder_w = std::max(worst_holder_w,
                                  holder_check(a, b, 1.0, 1.0, 0.5, Weight::radial(1.0)).ratio);
    }
    s.below(worst_young1, 1.0 + 1e-12, "Young p=q=r=1, 200 trials");
    s.below(worst_young_half, 1.0 + 1e-12, "Young p=q=r=1/2, 200 trials");
    s.below(worst_holder, 1.0 + 1e-12, "Hoelder Cauchy-Schwarz, 200 trials");
    s.below(worst_holder_w, 1.0 + 1e-12, "Hoelder weighted r=1/2, 200 trials");
    Sequence d{0, {cxd(1.0, 0.0)}};
    s.close(young_check(d, d, 1.0, 1.0, 1.0, Weight::one(), Weight::one()).ratio, 1.0, 1e-14,
            "Young delta ratio 1");
    s.close(holder_check(d, d, 2.0, 2.0, 1.0, Weight::one()).ratio, 1.0, 1e-14,
            "Hoelder delta ratio 1");
    bool threw = false;
    try {
        young_check(d, d, 0.5, 0.7, 0.5, Weight::one(), Weight::one());
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    s.check(threw, "Young rejects bad exponent triple");
}

void suite_seq_stechkin(Suite& s) {
    SortedMagnitudes single{{1.0, 0.0, 0.0}};
    const StechkinReport one = stechkin_ratio(single, 1.0);
    s.close(one.ratio, 1.0, 1e-14, "Stechkin single-term ratio");
    SortedMagnitudes geo;
    for (int m = 0; m < 20; ++m) geo.v.push_back(std::pow(2.0, -m));
    s.close(sigma_tail(geo, 1), std::sqrt((1.0 - std::pow(0.25, 19.0)) / 3.0), 1e-12,
            "sigma tail of geometric");
    s.close(sigma_tail(geo, 0), norm2(Signal(geo.v.begin(), geo.v.end())), 1e-12, "sigma_0 = l2");
    s.check(sigma_tail(geo, 25) == 0.0, "sigma tail beyond length = 0");
    for (double p : {0.5, 1.0, 1.5}) {
        const StechkinReport rep = stechkin_ratio(geo, p);
        s.check(rep.ratio >= 0.1 && rep.ratio <= 10.0,
                "Stechkin band, geometric, p=" + std::to_string(p));
    }
    SortedMagnitudes power;
    for (int m = 1; m <= 1000; ++m) power.v.push_back(1.0 / (static_cast<double>(m) * m));
    for (double p : {0.5, 1.0, 1.5}) {
        const StechkinReport rep = stechkin_ratio(power, p);
        s.check(rep.ratio >= 0.1 && rep.ratio <= 10.0,
                "Stechkin band, power law, p=" + std::to_string(p));
    }
    bool threw = false;
    try {
        stechkin_ratio(geo, 2.0);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    s.check(threw, "Stechkin rejects p >= 2");
}

void suite_wigner_weyl(Suite& s) {
    std::mt19937_64 rng(16);
    {
        const long L = 5;
        const Signal f = random_signal(L, rng);
        const SymbolGrid w = cross_wigner(f, f);
        double im = 0.0;
        for (const cxd& z : w.v) im = std::max(im, std::abs(z.imag()));
        s.below(im, 1e-12, "W(f,f) real");
        Signal d(static_cast<std::size_t>(L), cxd(0.0, 0.0));
        d[0] = 1.0;
        const SymbolGrid wd = cross_wigner(d, d);
        double err = 0.0;
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n)
                err = std::max(err, std::abs(wd.at(k, n) - (k == 0 ? cxd(1.0, 0.0) : cxd(0.0, 0.0))));
        s.below(err, 1e-12, "W(delta,delta)");
    }
    {
        const long L = 7;
        const Signal f = random_signal(L, rng);
        const SymbolGrid w = cross_wigner(f, f);
        double err = 0.0;
        for (long k = 0; k < L; ++k) {
            cxd acc(0.0, 0.0);
            for (long n = 0; n < L; ++n) acc += w.at(k, n);
            err = std::max(err, std::abs(acc - cxd(static_cast<double>(L) * std::norm(f[k]), 0.0)));
        }
        s.below(err, 1e-10, "frequency marginal = L|f|^2");
    }
    {
        const long L = 5;
        const Operator id = weyl_build(SymbolGrid::constant(L, cxd(1.0, 0.0)));
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(id.m(i, j) - (i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0))));
        s.below(err, 1e-12, "weyl(1) = I");
        SymbolGrid real_sigma = SymbolGrid::zeros(L);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (cxd& z : real_sigma.v) z = gauss(rng);
        const Operator h = weyl_build(real_sigma);
        s.check(h.hermitian && h.m.max_asymmetry() <= 1e-12, "real symbol -> Hermitian Weyl");
        // weak pairing <L_sigma f, g> = (1/L) sum sigma conj(W(g,f))
        SymbolGrid sigma = SymbolGrid::zeros(L);
        for (cxd& z : sigma.v) z = cxd(gauss(rng), gauss(rng));
        const Signal f = random_signal(L, rng);
        const Signal g = random_signal(L, rng);
        const cxd lhs = inner(weyl_build(sigma).m.apply(f), g);
        const SymbolGrid wgf = cross_wigner(g, f);
        cxd rhs(0.0, 0.0);
        for (std::size_t i = 0; i < sigma.v.size(); ++i) rhs += sigma.v[i] * std::conj(wgf.v[i]);
        rhs /= static_cast<double>(L);
        s.below(std::abs(lhs - rhs), 1e-10, "Weyl weak pairing vs Wigner");
    }
    // correspondence scale at L in {3,5,7}: least-squares scalar equals 1/L
    for (long L : {3L, 5L, 7L}) {
        const Signal p1 = make_window("gaussian", L, 0.0, true);
        const Signal p2 = make_window("gaussian", L, std::sqrt(static_cast<double>(L)) * 0.8, true);
        SymbolGrid a = SymbolGrid::zeros(L);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (cxd& z : a.v) z = cxd(gauss(rng), gauss(rng));
        const Operator loc = localization_build(a, p1, p2);
        SymbolGrid conv = localization_weyl_symbol(a, p1, p2); // scaled by 1/L
        for (cxd& z : conv.v) z *= static_cast<double>(L);      // unscaled convolution
        const Operator w_unscaled = weyl_build(conv);
        cxd num(0.0, 0.0);
        double den = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j) {
                num += std::conj(w_unscaled.m(i, j)) * loc.m(i, j);
                den += std::norm(w_unscaled.m(i, j));
            }
        const cxd c_fit = num / den;
        s.below(std::abs(c_fit * static_cast<double>(L) - cxd(1.0, 0.0)), 1e-12,
                "correspondence scale c_L = 1/L, L=" + std::to_string(L));
        const Operator w_scaled = weyl_build(localization_weyl_symbol(a, p1, p2));
        s.below((w_scaled.m - loc.m).max_abs(), 1e-9,
                "Weyl-localization match, L=" + std::to_string(L));
    }
    {
        // Lemma 3.2 magnitude identity, L=5
        const long L = 5;
        const Signal g = make_window("gaussian", L, 0.0, true);
        SymbolGrid sigma = SymbolGrid::zeros(L);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (cxd& z : sigma.v) z = cxd(gauss(rng), gauss(rng));
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const TFPoint z{static_cast<long>(rng() % L), static_cast<long>(rng() % L)};
            const TFPoint w{static_cast<long>(rng() % L), static_cast<long>(rng() % L)};
            const auto [lhs, rhs] = stft_mag_of_operator_kernel(sigma, g, z, w);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        s.below(worst, 1e-9, "Lemma 3.2 magnitude identity");
        const auto [l0, r0] =
            stft_mag_of_operator_kernel(SymbolGrid::constant(L, cxd(1.0, 0.0)), g, {0, 0}, {0, 0});
        s.close(l0, 1.0, 1e-10, "kernel identity at origin, operator side");
        s.close(r0, 1.0, 1e-10, "kernel identity at origin, STFT side");
    }
}

void suite_localization(Suite& s) {
    std::mt19937_64 rng(17);
    const long L = 6;
    const Signal phi = make_window("gaussian", L, 0.0, true);
    {
        const Operator a1 = localization_build(SymbolGrid::constant(L, cxd(1.0, 0.0)), phi, phi);
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(a1.m(i, j) - (i == j ? cxd(1.0, 0.0) : cxd(0.0, 0.0))));
        s.below(err, 1e-10, "unit symbol -> identity");
    }
    {
        SymbolGrid d = SymbolGrid::zeros(L);
        d.at(2, 3) = 1.0;
        const Operator rank1 = localization_build(d, phi, phi);
        const Signal atom = tf_shift(phi, TFPoint{2, 3});
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(rank1.m(i, j) -
                                             atom[i] * std::conj(atom[j]) / static_cast<double>(L)));
        s.below(err, 1e-12, "delta symbol -> rank-1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    SymbolGrid a = SymbolGrid::zeros(L);
    for (cxd& z : a.v) z = cxd(gauss(rng), gauss(rng));
    const Signal p2 = random_signal(L, rng);
    {
        // adjoint identity
        const Operator lhs = localization_build(a, phi, p2);
        SymbolGrid abar = a;
        for (cxd& z : abar.v) z = std::conj(z);
        const Operator rhs = localization_build(abar, p2, phi);
        s.below((lhs.m.adjoint() - rhs.m).max_abs(), 1e-12, "adjoint identity");
    }
    {
        // matches the defining sum applied to the standard basis
        const CMatrix direct = brute_localization(a, phi, p2);
        const Operator fast = localization_build(a, phi, p2);
        s.below((fast.m - direct).max_abs(), 1e-12, "definition oracle, L=6");
    }
    {
        // linearity
        SymbolGrid b = SymbolGrid::zeros(L);
        for (cxd& z : b.v) z = cxd(gauss(rng), gauss(rng));
        SymbolGrid ab = a;
        for (std::size_t i = 0; i < ab.v.size(); ++i) ab.v[i] += b.v[i];
        const CMatrix lhs = localization_build(ab, phi, p2).m;
        const CMatrix rhs = localization_build(a, phi, p2).m + localization_build(b, phi, p2).m;
        s.below((lhs - rhs).max_abs(), 1e-12, "linearity in the symbol");
    }
    {
        // positivity: a >= 0, equal windows -> PSD
        SymbolGrid pos = SymbolGrid::zeros(L);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (cxd& z : pos.v) z = unif(rng);
        const Operator op = localization_build(pos, phi, phi);
        s.check(op.hermitian, "nonnegative symbol, equal windows: Hermitian");
        const auto he = hermitian_eig(op.m);
        s.check(he.values.front() >= -1e-10, "nonnegative symbol, equal windows: PSD");
    }
    {
        // covariance under symbol translation, compared entrywise in modulus
        SymbolGrid shifted = SymbolGrid::zeros(L);
        const long u1 = 2, u2 = 5;
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n)
                shifted.at(k, n) = a.at(mod_reduce(k - u1, L), mod_reduce(n - u2, L));
        const Operator lhs = localization_build(shifted, phi, phi);
        const Operator base = localization_build(a, phi, phi);
        // pi(u) A pi(u)^*
        CMatrix conj_op(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
        for (long col = 0; col < L; ++col) {
            Signal e(static_cast<std::size_t>(L), cxd(0.0, 0.0));
            e[col] = 1.0;
            // pi(u)^* = e^{2 pi i u1 u2/L} pi(-u)
            Signal x = tf_shift(e, TFPoint{-u1, -u2});
            for (cxd& z : x) z *= unit_phase(u1 * u2, L);
            x = base.m.apply(x);
            x = tf_shift(x, TFPoint{u1, u2});
            for (long row = 0; row < L; ++row) conj_op(row, col) = x[row];
        }
        double err = 0.0;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j)
                err = std::max(err, std::abs(std::abs(lhs.m(i, j)) - std::abs(conj_op(i, j))));
        s.below(err, 1e-10, "covariance under symbol translation");
    }
}

void suite_spectral(Suite& s) {
    std::mt19937_64 rng(18);
    {
        const Operator id = make_operator(CMatrix::identity(4), Provenance::raw);
        const EigenSystem e = eig(id);
        bool ok = e.values.size() == 4;
        for (const cxd& v : e.values) ok = ok && std::abs(v - cxd(1.0, 0.0)) <= 1e-12;
        for (double r : e.residuals) ok = ok && r <= 1e-12;
        s.check(ok, "eig(identity)");
    }
    {
        const long L = 5;
        Signal u = random_signal(L, rng);
        const double nu = norm2(u);
        for (cxd& z : u) z /= nu;
        CMatrix m(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j) m(i, j) = u[i] * std::conj(u[j]) / static_cast<double>(L);
        const EigenSystem e = eig(make_operator(m, Provenance::raw));
        s.close(std::abs(e.values[0]), 1.0 / static_cast<double>(L), 1e-12, "rank-1 top eigenvalue");
        double rest = 0.0;
        for (std::size_t i = 1; i < e.values.size(); ++i) rest = std::max(rest, std::abs(e.values[i]));
        s.below(rest, 1e-12, "rank-1 null eigenvalues");
        const std::vector<double> sv = singular_values(make_operator(m, Provenance::raw));
        s.close(sv[0], 1.0 / static_cast<double>(L), 1e-12, "rank-1 singular value");
        s.close(schatten_qnorm(make_operator(m, Provenance::raw), 0.7), sv[0], 1e-10,
                "rank-1 Schatten p=0.7");
    }
    {
        // Hermitian random: residuals, imaginary parts, Frobenius identity
        const long L = 8;
        CMatrix m(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (long i = 0; i < L; ++i) {
            m(i, i) = gauss(rng);
            for (long j = 0; j < i; ++j) {
                const cxd z(gauss(rng), gauss(rng));
                m(i, j) = z;
                m(j, i) = std::conj(z);
            }
        }
        const Operator op = make_operator(m, Provenance::raw);
        s.check(op.hermitian, "random Hermitian flag");
        const EigenSystem e = eig(op);
        double im = 0.0, res = 0.0;
        for (const cxd& v : e.values) im = std::max(im, std::abs(v.imag()));
        for (double r : e.residuals) res = std::max(res, r);
        s.below(im, 1e-10, "Hermitian eigenvalues real");
        s.below(res, 1e-10, "Hermitian residuals");
        double sum = 0.0;
        for (const double sv : singular_values(op)) sum += sv * sv;
        s.close(sum, op.m.frobenius() * op.m.frobenius(), 1e-10, "sum s_k^2 = Frobenius^2");
        s.close(schatten_qnorm(op, 2.0), op.m.frobenius(), 1e-10, "Schatten p=2 = Frobenius");
        // unitary similarity leaves the spectrum
        const EigenSystem e2 = eig(make_operator(m, Provenance::raw));
        bool same = true;
        for (std::size_t i = 0; i < e.values.size(); ++i)
            same = same && std::abs(e.values[i] - e2.values[i]) <= 1e-8;
        s.check(same, "eig deterministic");
    }
    {
        const EigenSystem id = eig(make_operator(CMatrix::identity(4), Provenance::raw));
        s.check(point_spectrum_nonzero(id, 0.5).values.size() == 4, "point spectrum keeps identity");
    }
}

void suite_diagnostics(Suite& s) {
    std::mt19937_64 rng(19);
    const long L = 16;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const Signal tight = tight_window(g, lat);
    Signal f = random_signal(L, rng);
    const double nf = norm2(f);
    for (cxd& z : f) z /= nf;
    s.close(modulation_qnorm_with_tight(f, tight, lat, 2.0, 2.0, Weight::one(), "tight").value, 1.0,
            1e-10, "M^{2,2} = l2 norm");
    Signal zero(static_cast<std::size_t>(L), cxd(0.0, 0.0));
    s.close(modulation_qnorm_with_tight(zero, tight, lat, 1.0, 1.0, Weight::one(), "tight").value,
            0.0, 0.0, "M norm of zero");
    const double v1 = modulation_qnorm_with_tight(f, tight, lat, 0.5, 0.5, Weight::one(), "t").value;
    const double v2 = modulation_qnorm_with_tight(f, tight, lat, 1.0, 1.0, Weight::one(), "t").value;
    const double v3 = modulation_qnorm_with_tight(f, tight, lat, 2.0, 2.0, Weight::one(), "t").value;
    s.check(v3 <= v2 + 1e-12 && v2 <= v1 + 1e-12, "modulation norm monotone in (p,q)");
    const DecayReport rep = n_term_profile_with_tight(f, tight, lat, 2, 12);
    bool mono = true;
    for (std::size_t n = 1; n < rep.sigma.size(); ++n) mono = mono && rep.sigma[n] <= rep.sigma[n - 1] + 1e-14;
    s.check(mono, "sigma profile nonincreasing");
    s.close(rep.sigma0(), 1.0, 1e-10, "sigma_0 = ||f||");
    // atom profile: sigma_0 = 1 for a unit-norm frame atom
    Signal atom = tf_shift(tight, TFPoint{2, 4});
    const double na = norm2(atom);
    for (cxd& z : atom) z /= na;
    const DecayReport arep = n_term_profile_with_tight(atom, tight, lat, 2, 12);
    s.close(arep.sigma0(), 1.0, 1e-10, "atom profile sigma_0");
    s.check(arep.sigma[25] < 0.05 * arep.sigma0(), "atom profile concentrates");
    // identity operator study degenerates
    const Operator id = make_operator(CMatrix::identity(static_cast<std::size_t>(L)), Provenance::raw);
    const EigenDecayStudy study = eigen_decay_study(id, g, lat, 100, 1e-8, 7);
    s.check(study.noncompact_flag, "identity study flagged non-compact-like");
}

void suite_scenarios(Suite& s) {
    const auto presets = list_presets();
    s.check(presets.size() >= 6, "preset registry has >= 6 entries");
    bool found = false;
    for (const auto& p : presets) found = found || p.name == "antiwick-gauss-63";
    s.check(found, "registry contains antiwick-gauss-63");
    bool threw = false;
    try {
        preset("no-such-preset");
    } catch (const ScenarioError&) {
        threw = true;
    }
    s.check(threw, "unknown preset raises");
    {
        const BuiltScenario b1 = build_scenario(preset("disk-33"));
        const BuiltScenario b2 = build_scenario(preset("disk-33"));
        s.check(b1.op.m.data() == b2.op.m.data(), "scenario build bitwise deterministic");
        s.check(b1.op.hermitian, "disk-33 operator Hermitian");
        const EigenSystem e = eig(b1.op);
        double im = 0.0;
        for (const cxd& v : e.values) im = std::max(im, std::abs(v.imag()));
        s.below(im, 1e-10, "disk-33 eigenvalues real");
        const double phi_norm = norm2(b1.phi1);
        s.below(std::abs(e.values[0]), phi_norm * phi_norm + 1e-8, "disk-33 top eigenvalue <= <phi,phi>");
    }
    {
        const BuiltScenario b = build_scenario(preset("complex-asym-33"));
        s.check(!b.op.hermitian, "complex-asym-33 non-Hermitian");
        const EigenSystem e = eig(b.op);
        const double tol = eig_residual_tolerance(b.op);
        double worst = 0.0;
        for (double r : e.residuals) worst = std::max(worst, r);
        s.below(worst, tol, "complex-asym-33 residuals within tolerance");
    }
}

void suite_csv(Suite& s) {
    std::mt19937_64 rng(20);
    const long L = 16;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    Signal f = random_signal(L, rng);
    const DecayReport rep = n_term_profile(f, g, lat, 2, 12);
    const std::string a = decay_csv(rep);
    const std::string b = decay_csv(rep);
    s.check(a == b && a.rfind("N,sigma,log_N,log_sigma\n", 0) == 0, "decay csv stable + header");
    // 17 significant digits round-trip
    const double x = 0.1234567890123456789;
    s.check(std::stod(format_sig17(x)) == x, "17-digit round trip");
}

void suite_acceptance_decay(Suite& s) {
    const BuiltScenario b = build_scenario(preset("antiwick-gauss-63"));
    const EigenDecayStudy study =
        eigen_decay_study(b.op, b.phi1, b.lat, 10000, 1e-8, b.spec.seed);
    s.check(!study.reports.empty(), "retained spectrum nonempty");
    const DecayReport& base = study.baseline;
    s.below(base.rhat, 0.8, "baseline rhat <= 0.8");
    s.check(base.sigma[64] / base.sigma0() >= 0.3, "baseline sigma64 ratio >= 0.3");
    double min_rhat = 1e300, worst_tail = 0.0, min_sep = 1e300;
    for (const DecayReport& r : study.reports) {
        min_rhat = std::min(min_rhat, r.rhat);
        worst_tail = std::max(worst_tail, r.sigma[64] / r.sigma0());
        min_sep = std::min(min_sep, r.rhat - base.rhat);
    }
    s.check(min_rhat >= 2.0, "every retained eigenfunction rhat >= 2 (measured min " +
                                 std::to_string(min_rhat) + ")");
    s.below(worst_tail, 1e-4, "every retained eigenfunction sigma64/sigma0 <= 1e-4");
    s.check(min_sep >= 1.5, "decay separation >= 1.5 (measured " + std::to_string(min_sep) + ")");
}

void suite_acceptance_weighted(Suite& s) {
    const BuiltScenario b = build_scenario(preset("antiwick-gauss-63"));
    const WeightedDecayStudy study =
        weighted_decay_study(b.op, b.phi1, b.lat, {1.0, 2.0}, 1.0, 1e-8, b.spec.seed);
    s.check(!study.ratio.empty(), "retained spectrum nonempty");
    double worst = 0.0;
    for (const auto& row : study.vs_baseline)
        for (double v : row) worst = std::max(worst, v);
    s.below(worst, 0.2, "weighted/unweighted ratio <= 0.2 x baseline for all retained");
}

void suite_convolution_relation(Suite& s) {
    std::mt19937_64 rng(21);
    const long L = 32;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const ConvExponents banach{1.0, 2.0, 1.0, 2.0, 1.0, 1.0};
    const ConvExponents quasi{0.5, 2.0, 0.5, 2.0, 0.5, 1.0};
    for (const ConvExponents& e : {banach, quasi}) {
        std::vector<double> ratios;
        for (int trial = 0; trial < 100; ++trial) {
            Signal f = random_signal(L, rng);
            Signal h = random_signal(L, rng);
            const double n1 = norm2(f), n2 = norm2(h);
            for (cxd& z : f) z /= n1;
            for (cxd& z : h) z /= n2;
            ratios.push_back(convolution_relation_check(f, h, g, lat, e, AxisWeight::one()).ratio);
        }
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        const double median = 0.5 * (sorted[49] + sorted[50]);
        const double mx = sorted.back();
        s.below(mx, 100.0 * median, "convolution ratio max <= 100 x median");
        s.check(median > 0.0, "convolution ratios positive");
    }
    // fixture determinism for a fixed pair
    const Signal h0 = tight_window(g, lat);
    const RatioReport r1 = convolution_relation_check(h0, h0, g, lat, banach, AxisWeight::one());
    const RatioReport r2 = convolution_relation_check(h0, h0, g, lat, banach, AxisWeight::one());
    s.check(format_sig17(r1.ratio) == format_sig17(r2.ratio), "fixture byte-stable");
}

} // namespace

std::vector<SuiteResult> run_verify_suites(bool full) {
    std::vector<std::pair<std::string, std::function<void(Suite&)>>> suites = {
        {"stft-oracle", suite_stft_oracle},
        {"core-shifts", suite_core_shifts},
        {"gabor-frame", suite_gabor_frame},
        {"seq-norms", suite_seq_norms},
        {"seq-young-holder", suite_seq_young_holder},
        {"seq-stechkin", suite_seq_stechkin},
        {"wigner-weyl", suite_wigner_weyl},
        {"localization", suite_localization},
        {"spectral", suite_spectral},
        {"diagnostics", suite_diagnostics},
        {"scenario-presets", suite_scenarios},
        {"csv-format", suite_csv},
    };
    if (full) {
        suites.emplace_back("acceptance-decay-separation", suite_acceptance_decay);
        suites.emplace_back("acceptance-weighted-decay", suite_acceptance_weighted);
        suites.emplace_back("convolution-relation", suite_convolution_relation);
    }
    std::vector<SuiteResult> results;
    for (auto& [name, fn] : suites) {
        Suite s;
        s.result.name = name;
        try {
            fn(s);
        } catch (const std::exception& e) {
            s.check(false, std::string("exception: ") + e.what());
        }
        results.push_back(s.result);
    }
    return results;
}

} // namespace tfl
