// quantize.hpp - discrete cross-Wigner distribution, Weyl operators,
// localization operators and the exact finite-dimensional correspondence
// between the two calculi. Wigner/Weyl paths need odd L (2 invertible mod L);
// localization operators work for any L >= 2.

#pragma once

#include <string>
#include <utility>

#include "tfl/matrix.hpp"
#include "tfl/signal.hpp"

namespace tfl {

// Complex L x L phase-space array indexed by (time k, frequency n).
struct SymbolGrid {
    long L = 0;
    std::vector<cxd> v;

    static SymbolGrid constant(long L, cxd value);
    static SymbolGrid zeros(long L) { return constant(L, cxd(0.0, 0.0)); }

    cxd& at(long k, long n) { return v[k * L + n]; }
    const cxd& at(long k, long n) const { return v[k * L + n]; }
};

// 2^{-1} mod L; throws for even L.
long inv2_mod(long L);

// W(f,g)(k,n) = sum_t f(k + h t) conj(g(k - h t)) e^{-2 pi i t n / L},
// h = 2^{-1} mod L.
SymbolGrid cross_wigner(const Signal& f, const Signal& g);

// (L_sigma f)(x) = (1/L) sum_{y,n} sigma(h(x+y), n) e^{2 pi i (x-y) n / L} f(y).
Operator weyl_build(const SymbolGrid& sigma);

// A_a f = (1/L) sum_{k,n} a(k,n) V_{phi1} f(k,n) pi(k,n) phi2.
Operator localization_build(const SymbolGrid& a, const Signal& phi1, const Signal& phi2);

// Scale c_L in sigma = c_L * (a conv W(phi2, phi1)); equals 1/L, confirmed
// against the brute-force operator comparison at small odd sizes.
double weyl_correspondence_scale(long L);

// Weyl symbol of the localization operator: c_L * cyclic 2D convolution of
// a with W(phi2, phi1); weyl_build of the result reproduces
// localization_build(a, phi1, phi2).
SymbolGrid localization_weyl_symbol(const SymbolGrid& a, const Signal& phi1, const Signal& phi2);

// 2D STFT sample of sigma against window grid Phi at time shift u and
// frequency v (both phase-space points), plain double sum, no prefactor.
cxd stft2_point(const SymbolGrid& sigma, const SymbolGrid& phi, TFPoint u, TFPoint v);

// Returns (|<L_sigma pi(z) g, pi(w) g>|, (1/L)|V_Phi sigma(h(z+w), j(w-z))|)
// with Phi = W(g,g) and j(z1,z2) = (z2,-z1); the finite model carries the
// 1/L on the STFT side and the two values agree.
std::pair<double, double> stft_mag_of_operator_kernel(const SymbolGrid& sigma, const Signal& g,
                                                      TFPoint z, TFPoint w);

} // namespace tfl
