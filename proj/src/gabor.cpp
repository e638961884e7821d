#include "tfl/gabor.hpp"

#include <cmath>

#include "tfl/fft.hpp"
#include "tfl/runtime.hpp"

namespace tfl {

void LatticeSpec::validate() const {
    if (L < 2) throw std::invalid_argument("LatticeSpec: L must be >= 2");
    if (alpha < 1 || beta < 1) throw std::invalid_argument("LatticeSpec: alpha, beta must be positive");
    if (L % alpha != 0) throw ScenarioError("LatticeSpec: alpha does not divide L");
    if (L % beta != 0) throw ScenarioError("LatticeSpec: beta does not divide L");
}

namespace {

void check_pair(const Signal& f, const Signal& g) {
    if (f.size() != g.size()) throw std::invalid_argument("stft: signal/window length mismatch");
    if (f.empty()) throw std::invalid_argument("stft: empty signal");
    if (norm2(g) == 0.0) throw std::invalid_argument("stft: zero window");
}

} // namespace

CoefficientTable stft(const Signal& f, const Signal& g) {
    check_pair(f, g);
    const long L = static_cast<long>(f.size());
    CoefficientTable table{LatticeSpec{1, 1, L}, std::vector<cxd>(static_cast<std::size_t>(L) * L)};
    Fft plan(f.size());
    std::vector<cxd> row(f.size());
    for (long k = 0; k < L; ++k) {
        for (long t = 0; t < L; ++t)
            row[t] = f[t] * std::conj(g[mod_reduce(t - k, L)]);
        plan.forward(row);
        for (long n = 0; n < L; ++n) table.at(k, n) = row[n];
    }
    return table;
}

CoefficientTable gabor_coeffs(const Signal& f, const Signal& g, const LatticeSpec& lat) {
    lat.validate();
    if (static_cast<long>(f.size()) != lat.L)
        throw std::invalid_argument("gabor_coeffs: lattice/signal length mismatch");
    check_pair(f, g);
    const long L = lat.L;
    CoefficientTable table{lat, std::vector<cxd>(static_cast<std::size_t>(lat.size()))};
    Fft plan(f.size());
    std::vector<cxd> row(f.size());
    for (long i = 0; i < lat.n_time(); ++i) {
        const long k = lat.alpha * i;
        for (long t = 0; t < L; ++t)
            row[t] = f[t] * std::conj(g[mod_reduce(t - k, L)]);
        plan.forward(row);
        for (long j = 0; j < lat.n_freq(); ++j) table.at(i, j) = row[lat.beta * j];
    }
    return table;
}

Operator frame_operator(const Signal& g, const LatticeSpec& lat) {
    lat.validate();
    if (static_cast<long>(g.size()) != lat.L)
        throw std::invalid_argument("frame_operator: lattice/window length mismatch");
    if (norm2(g) == 0.0) throw std::invalid_argument("frame_operator: zero window");
    const long L = lat.L;
    const std::size_t npts = static_cast<std::size_t>(lat.size());

    // Per-chunk partial sums, reduced in fixed chunk order, so the result is
    // identical for every thread count.
    const std::size_t chunk = 16;
    const std::size_t nchunks = (npts + chunk - 1) / chunk;
    std::vector<CMatrix> partial(nchunks);
    parallel_chunks(npts, chunk, [&](std::size_t begin, std::size_t end) {
        CMatrix acc(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
        for (std::size_t idx = begin; idx < end; ++idx) {
            const long i = static_cast<long>(idx) / lat.n_freq();
            const long j = static_cast<long>(idx) % lat.n_freq();
            const Signal atom = tf_shift(g, TFPoint{lat.alpha * i, lat.beta * j});
            for (long r = 0; r < L; ++r) {
                const cxd ar = atom[r];
                for (long c = 0; c < L; ++c)
                    acc(r, c) += ar * std::conj(atom[c]);
            }
        }
        partial[begin / chunk] = std::move(acc);
    });
    CMatrix s(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    for (const CMatrix& p : partial) s = s + p;
    return make_operator(std::move(s), Provenance::frame);
}

std::pair<double, double> frame_bounds(const CMatrix& s) {
    if (s.rows() != s.cols()) throw std::invalid_argument("frame_bounds: not square");
    if (s.max_asymmetry() > 1e-10)
        throw std::invalid_argument("frame_bounds: matrix is not Hermitian");
    const HermitianEig e = hermitian_eig(s);
    return {e.values.front(), e.values.back()};
}

std::pair<double, double> frame_bounds(const Operator& s) { return frame_bounds(s.m); }

namespace {

// S^p applied to g through the eigendecomposition; throws when (g, lat) is
// not a frame.
Signal frame_power_apply(const Signal& g, const LatticeSpec& lat, double power) {
    const Operator s = frame_operator(g, lat);
    const HermitianEig e = hermitian_eig(s.m);
    const double lam_max = e.values.back();
    const double lam_min = e.values.front();
    if (lam_min <= kFrameTolerance * lam_max)
        throw NotAFrameError("gabor system is not a frame: min eigenvalue " +
                             std::to_string(lam_min) + " vs max " + std::to_string(lam_max));
    const std::size_t L = g.size();
    // coeffs = V^* g
    std::vector<cxd> coeff(L, cxd(0.0, 0.0));
    for (std::size_t j = 0; j < L; ++j) {
        cxd acc(0.0, 0.0);
        for (std::size_t t = 0; t < L; ++t) acc += std::conj(e.vectors(t, j)) * g[t];
        coeff[j] = acc * std::pow(e.values[j], power);
    }
    Signal out(L, cxd(0.0, 0.0));
    for (std::size_t t = 0; t < L; ++t) {
        cxd acc(0.0, 0.0);
        for (std::size_t j = 0; j < L; ++j) acc += e.vectors(t, j) * coeff[j];
        out[t] = acc;
    }
    return out;
}

} // namespace

Signal canonical_dual(const Signal& g, const LatticeSpec& lat) {
    return frame_power_apply(g, lat, -1.0);
}

Signal tight_window(const Signal& g, const LatticeSpec& lat) {
    return frame_power_apply(g, lat, -0.5);
}

Signal reconstruct(const CoefficientTable& c, const Signal& gamma, const LatticeSpec& lat) {
    lat.validate();
    if (!(c.lat == lat)) throw std::invalid_argument("reconstruct: lattice mismatch");
    if (static_cast<long>(gamma.size()) != lat.L)
        throw std::invalid_argument("reconstruct: window length mismatch");
    const long L = lat.L;
    Signal out(static_cast<std::size_t>(L), cxd(0.0, 0.0));
    for (long i = 0; i < lat.n_time(); ++i) {
        const long k = lat.alpha * i;
        for (long j = 0; j < lat.n_freq(); ++j) {
            const cxd w = c.at(i, j);
            if (w == cxd(0.0, 0.0)) continue;
            const long n = lat.beta * j;
            for (long t = 0; t < L; ++t)
                out[t] += w * unit_phase(n * t, L) * gamma[mod_reduce(t - k, L)];
        }
    }
    return out;
}

FrameInfo frame_info(const Signal& g, const LatticeSpec& lat) {
    FrameInfo info;
    const Operator s = frame_operator(g, lat);
    const auto [a, b] = frame_bounds(s);
    info.lower_bound = a;
    info.upper_bound = b;
    info.dual_window = canonical_dual(g, lat);
    info.tight_window = tight_window(g, lat);
    return info;
}

Signal make_window(const std::string& kind, long L, double param, bool normalize) {
    if (L < 2) throw ScenarioError("make_window: L must be >= 2");
    Signal g(static_cast<std::size_t>(L), cxd(0.0, 0.0));
    if (kind == "gaussian") {
        const double s = param > 0.0 ? param : std::sqrt(static_cast<double>(L));
        const double c = static_cast<double>(L) / 2.0;
        for (long t = 0; t < L; ++t) {
            const double d = static_cast<double>(t) - c;
            g[t] = std::exp(-M_PI * d * d / (s * s));
        }
    } else if (kind == "hann") {
        for (long t = 0; t < L; ++t)
            g[t] = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(t) / static_cast<double>(L));
    } else if (kind == "delta") {
        g[0] = cxd(1.0, 0.0);
    } else {
        throw ScenarioError("make_window: unknown window kind '" + kind + "'");
    }
    if (normalize) {
        const double n = norm2(g);
        if (n == 0.0) throw ScenarioError("make_window: zero window");
        for (cxd& z : g) z /= n;
    }
    return g;
}

} // namespace tfl
