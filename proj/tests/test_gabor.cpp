#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tfl/gabor.hpp"

using namespace tfl;

namespace {

double table_max_err(const CoefficientTable& a, const CoefficientTable& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

double energy(const CoefficientTable& c) {
    double s = 0.0;
    for (const cxd& z : c.v) s += std::norm(z);
    return s;
}

} // namespace

TEST_CASE("stft trivial examples") {
    const long L = 8;
    const Signal g = oracle::random_signal(L, 21);
    const CoefficientTable vg = stft(g, g);
    CHECK(std::abs(vg.at(0, 0) - cxd(norm2(g) * norm2(g), 0.0)) <= 1e-10);

    Signal d(static_cast<std::size_t>(L), cxd(0.0, 0.0));
    d[0] = 1.0;
    const CoefficientTable vd = stft(d, d);
    for (long k = 0; k < L; ++k)
        for (long n = 0; n < L; ++n)
            CHECK(std::abs(vd.at(k, n) - (k == 0 ? cxd(1.0, 0.0) : cxd(0.0, 0.0))) <= 1e-12);
}

TEST_CASE("stft matches the brute-force triple loop") {
    const long L = 8;
    const Signal f = oracle::random_signal(L, 22);
    const Signal g = oracle::random_signal(L, 23);
    CHECK(table_max_err(stft(f, g), oracle::brute_stft(f, g)) <= 1e-12);
}

TEST_CASE("stft rejects the zero window") {
    const Signal f = oracle::random_signal(8, 24);
    const Signal zero(8, cxd(0.0, 0.0));
    CHECK_THROWS_AS(stft(f, zero), std::invalid_argument);
}

TEST_CASE("gabor_coeffs restricts the full grid") {
    const long L = 12;
    const LatticeSpec lat{3, 2, L};
    const Signal f = oracle::random_signal(L, 25);
    const Signal g = oracle::random_signal(L, 26);
    const CoefficientTable full = stft(f, g);
    const CoefficientTable sub = gabor_coeffs(f, g, lat);
    for (long i = 0; i < lat.n_time(); ++i)
        for (long j = 0; j < lat.n_freq(); ++j)
            CHECK(std::abs(sub.at(i, j) - full.at(3 * i, 2 * j)) == 0.0);

    const CoefficientTable same = gabor_coeffs(f, g, LatticeSpec{1, 1, L});
    CHECK(table_max_err(same, full) == 0.0);

    const Signal zero(static_cast<std::size_t>(L), cxd(0.0, 0.0));
    const CoefficientTable zt = gabor_coeffs(zero, g, lat);
    for (const cxd& z : zt.v) CHECK(std::abs(z) == 0.0);

    CHECK_THROWS_AS(gabor_coeffs(oracle::random_signal(8, 1), g, lat), std::invalid_argument);
}

TEST_CASE("full-grid frame operator collapses to L ||g||^2 identity") {
    const long L = 8;
    const Signal g = oracle::random_signal(L, 27);
    const Operator s = frame_operator(g, LatticeSpec{1, 1, L});
    CHECK(s.hermitian);
    CHECK(s.prov == Provenance::frame);
    const double c = static_cast<double>(L) * norm2(g) * norm2(g);
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j)
            CHECK(std::abs(s.m(i, j) - (i == j ? cxd(c, 0.0) : cxd(0.0, 0.0))) <= 1e-9);
    const auto [a, b] = frame_bounds(s);
    CHECK(a == doctest::Approx(c).epsilon(1e-10));
    CHECK(b == doctest::Approx(c).epsilon(1e-10));
}

TEST_CASE("single-atom lattice is not a frame for L >= 2") {
    const long L = 6;
    const Signal g = make_window("gaussian", L, 0.0, true);
    const Operator s = frame_operator(g, LatticeSpec{L, L, L});
    const auto [a, b] = frame_bounds(s);
    CHECK(a <= 1e-12);
    CHECK(b == doctest::Approx(1.0).epsilon(1e-10)); // rank-1 projector of a unit vector
    CHECK_THROWS_AS(canonical_dual(g, LatticeSpec{L, L, L}), NotAFrameError);
}

TEST_CASE("frame_bounds matches the characteristic polynomial roots") {
    // Hermitian PSD: S = M M^* from a random M
    CMatrix m(8, 8);
    const Signal entries = oracle::random_signal(64, 28);
    for (std::size_t i = 0; i < 64; ++i) m(i / 8, i % 8) = entries[i];
    const CMatrix s = m * m.adjoint();
    const auto [lo, hi] = frame_bounds(s);
    const std::vector<cxd> roots = oracle::poly_roots(oracle::char_poly(s));
    double rmin = 1e300, rmax = -1e300;
    for (const cxd& r : roots) {
        rmin = std::min(rmin, r.real());
        rmax = std::max(rmax, r.real());
    }
    const double scale = s.max_abs();
    CHECK(std::abs(lo - rmin) <= 1e-8 * scale);
    CHECK(std::abs(hi - rmax) <= 1e-8 * scale);
}

TEST_CASE("frame_bounds of the identity and rejection of non-Hermitian input") {
    const auto [a, b] = frame_bounds(CMatrix::identity(4));
    CHECK(a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b == doctest::Approx(1.0).epsilon(1e-14));

    CMatrix m(3, 3);
    m(0, 1) = cxd(1.0, 0.0);
    CHECK_THROWS_AS(frame_bounds(m), std::invalid_argument);
}

TEST_CASE("canonical dual on the full grid is g / (L ||g||^2)") {
    const long L = 8;
    Signal g = make_window("gaussian", L, 0.0, true); // unit norm
    const Signal gamma = canonical_dual(g, LatticeSpec{1, 1, L});
    for (long t = 0; t < L; ++t)
        CHECK(std::abs(gamma[t] - g[t] / static_cast<double>(L)) <= 1e-12);
}

TEST_CASE("round trip and Parseval at L=16, lattice 2x2") {
    const long L = 16;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const Signal gamma = canonical_dual(g, lat);
    const Signal h = tight_window(g, lat);
    const Signal f = oracle::random_unit(L, 29);

    const Signal rec = reconstruct(gabor_coeffs(f, g, lat), gamma, lat);
    CHECK(oracle::max_err(rec, f) <= 1e-10);

    const Signal rec_tight = reconstruct(gabor_coeffs(f, h, lat), h, lat);
    CHECK(oracle::max_err(rec_tight, f) <= 1e-10);

    CHECK(energy(gabor_coeffs(f, h, lat)) == doctest::Approx(1.0).epsilon(1e-10));

    // scalar tight case: S = c I on the full grid, h = g / sqrt(c)
    const Signal h_full = tight_window(g, LatticeSpec{1, 1, L});
    for (long t = 0; t < L; ++t)
        CHECK(std::abs(h_full[t] - g[t] / std::sqrt(static_cast<double>(L))) <= 1e-12);

    // reproducing formula residual of the dual pair
    const Operator s = frame_operator(g, lat);
    const auto [a, b] = frame_bounds(s);
    CHECK(a > 0.0);
    CHECK(b >= a);
}

TEST_CASE("Gaussian at critical density L=16 alpha=beta=4 is singular") {
    // the centered Gaussian hits an exact zero of the finite Zak transform at
    // critical sampling, for every width: the system is not a frame
    const long L = 16;
    const LatticeSpec lat{4, 4, L};
    for (double s : {2.0, 4.0, 6.5}) {
        const Signal g = make_window("gaussian", L, s, true);
        const Operator S = frame_operator(g, lat);
        const auto [lo, hi] = frame_bounds(S);
        CHECK(lo <= kFrameTolerance * hi);
        CHECK_THROWS_AS(canonical_dual(g, lat), NotAFrameError);
        CHECK_THROWS_AS(tight_window(g, lat), NotAFrameError);
    }
}

TEST_CASE("reconstruct of the zero table is the zero signal") {
    const long L = 12;
    const LatticeSpec lat{3, 3, L};
    CoefficientTable c{lat, std::vector<cxd>(static_cast<std::size_t>(lat.size()), cxd(0.0, 0.0))};
    const Signal out = reconstruct(c, make_window("gaussian", L, 0.0, true), lat);
    for (const cxd& z : out) CHECK(std::abs(z) == 0.0);

    CoefficientTable wrong{LatticeSpec{2, 2, L}, std::vector<cxd>(36, cxd(0.0, 0.0))};
    CHECK_THROWS_AS(reconstruct(wrong, make_window("gaussian", L, 0.0, true), lat),
                    std::invalid_argument);
}

TEST_CASE("STFT covariance under time-frequency shifts") {
    const long L = 12;
    const Signal f = oracle::random_signal(L, 30);
    const Signal g = oracle::random_signal(L, 31);
    const CoefficientTable v0 = stft(f, g);
    for (const TFPoint u : {TFPoint{5, 2}, TFPoint{1, 11}}) {
        const CoefficientTable v1 = stft(tf_shift(f, u), g);
        for (long k = 0; k < L; ++k)
            for (long n = 0; n < L; ++n)
                CHECK(std::abs(std::abs(v1.at(k, n)) -
                               std::abs(v0.at(mod_reduce(k - u.k, L), mod_reduce(n - u.n, L)))) <=
                      1e-12);
    }
}

TEST_CASE("frame operator commutes with lattice shifts") {
    const long L = 12;
    const LatticeSpec lat{3, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const Operator s = frame_operator(g, lat);
    for (const TFPoint lambda : {TFPoint{3, 2}, TFPoint{6, 10}, TFPoint{9, 4}}) {
        for (long col = 0; col < L; ++col) {
            Signal e(static_cast<std::size_t>(L), cxd(0.0, 0.0));
            e[col] = 1.0;
            const Signal lhs = s.m.apply(tf_shift(e, lambda));
            const Signal rhs = tf_shift(s.m.apply(e), lambda);
            CHECK(oracle::max_err(lhs, rhs) <= 1e-10);
        }
    }
}

TEST_CASE("frame_info bundles bounds, dual and tight window") {
    const long L = 16;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const FrameInfo info = frame_info(g, lat);
    CHECK(info.lower_bound > 0.0);
    CHECK(info.lower_bound <= info.upper_bound);
    CHECK(oracle::max_err(info.dual_window, canonical_dual(g, lat)) == 0.0);
    CHECK(oracle::max_err(info.tight_window, tight_window(g, lat)) == 0.0);
    // S gamma = g
    const Operator s = frame_operator(g, lat);
    CHECK(oracle::max_err(s.m.apply(info.dual_window), g) <= 1e-10);
}

TEST_CASE("tight window is idempotent") {
    const long L = 16;
    const LatticeSpec lat{2, 4, L};
    const Signal g = make_window("gaussian", L, 0.0, true);
    const Signal h = tight_window(g, lat);
    const Signal h2 = tight_window(h, lat);
    CHECK(oracle::max_err(h2, h) <= 1e-10);
}

TEST_CASE("frame-bound sandwich holds for 100 random vectors") {
    const long L = 16;
    const LatticeSpec lat{2, 2, L};
    const Signal g = make_window("hann", L, 0.0, true);
    const auto [a, b] = frame_bounds(frame_operator(g, lat));
    for (int trial = 0; trial < 100; ++trial) {
        const Signal f = oracle::random_signal(L, 1000 + static_cast<std::uint64_t>(trial));
        double sum = 0.0;
        for (const cxd& z : gabor_coeffs(f, g, lat).v) sum += std::norm(z);
        const double n2 = norm2(f) * norm2(f);
        CHECK(sum <= b * n2 + 1e-10);
        CHECK(sum >= a * n2 - 1e-10);
    }
}

TEST_CASE("window generators") {
    const long L = 16;
    const Signal g = make_window("gaussian", L, 0.0, true);
    CHECK(norm2(g) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g[8].real() > g[0].real()); // centered at L/2

    const Signal hann = make_window("hann", L, 0.0, false);
    CHECK(std::abs(hann[0]) <= 1e-15);

    const Signal d = make_window("delta", L, 0.0, true);
    CHECK(std::abs(d[0] - cxd(1.0, 0.0)) == 0.0);

    CHECK_THROWS_AS(make_window("boxcar", L, 0.0, true), ScenarioError);
    const LatticeSpec bad{5, 2, 12};
    CHECK_THROWS_AS(bad.validate(), ScenarioError);
}
