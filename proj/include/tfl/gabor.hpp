// gabor.hpp - STFT, Gabor lattices, frame operator, canonical dual and tight
// windows, analysis/synthesis.

#pragma once

#include <string>
#include <vector>

#include "tfl/matrix.hpp"
#include "tfl/signal.hpp"

namespace tfl {

// Separable lattice Lambda = alpha*Z x beta*Z inside Z_L x Z_L.
struct LatticeSpec {
    long alpha = 1;
    long beta = 1;
    long L = 0;

    void validate() const;
    long n_time() const { return L / alpha; }
    long n_freq() const { return L / beta; }
    long size() const { return n_time() * n_freq(); }
    bool full_grid() const { return alpha == 1 && beta == 1; }
    bool operator==(const LatticeSpec& o) const {
        return alpha == o.alpha && beta == o.beta && L == o.L;
    }
};

// Complex values indexed by lattice points (alpha*i, beta*j); the full STFT
// grid is the alpha = beta = 1 case. Row-major over the time index.
struct CoefficientTable {
    LatticeSpec lat;
    std::vector<cxd> v;

    cxd& at(long i, long j) { return v[i * lat.n_freq() + j]; }
    const cxd& at(long i, long j) const { return v[i * lat.n_freq() + j]; }
};

struct FrameInfo {
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    Signal dual_window;
    Signal tight_window;
};

// Relative threshold below which the system is declared not a frame:
// min eigenvalue <= kFrameTolerance * max eigenvalue.
inline constexpr double kFrameTolerance = 1e-10;

// V_g f over the full grid: V(k,n) = sum_t f(t) conj(g(t-k)) e^{-2 pi i t n/L},
// one DFT per time shift k.
CoefficientTable stft(const Signal& f, const Signal& g);

// Restriction of the STFT to the lattice.
CoefficientTable gabor_coeffs(const Signal& f, const Signal& g, const LatticeSpec& lat);

// S = sum_{lambda} |pi(lambda) g><pi(lambda) g| as a dense Hermitian matrix.
Operator frame_operator(const Signal& g, const LatticeSpec& lat);

// (A, B) = extreme eigenvalues of a Hermitian PSD frame operator.
std::pair<double, double> frame_bounds(const Operator& s);
std::pair<double, double> frame_bounds(const CMatrix& s);

// gamma = S^{-1} g; throws NotAFrameError below the frame threshold.
Signal canonical_dual(const Signal& g, const LatticeSpec& lat);

// h = S^{-1/2} g via the Hermitian eigendecomposition of S.
Signal tight_window(const Signal& g, const LatticeSpec& lat);

// sum_lambda c(lambda) pi(lambda) gamma
Signal reconstruct(const CoefficientTable& c, const Signal& gamma, const LatticeSpec& lat);

FrameInfo frame_info(const Signal& g, const LatticeSpec& lat);

// Window generators exposed to the CLI: "gaussian" (parameter s, default
// sqrt(L)), "hann", "delta". param <= 0 selects the generator default.
Signal make_window(const std::string& kind, long L, double param, bool normalize);

} // namespace tfl
