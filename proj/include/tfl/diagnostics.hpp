// diagnostics.hpp - modulation quasi-norms via Gabor coefficients, N-term
// approximation profiles with fitted decay exponents, weighted decay studies
// and the convolution-relation ratio check. CSV emission lives here too.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tfl/seq_spaces.hpp"
#include "tfl/spectral.hpp"

namespace tfl {

// Default fit window for the exponent of sigma~_N and the relative floor
// below which profile points are excluded from the fit.
inline constexpr std::size_t kFitLoDefault = 4;
inline constexpr std::size_t kFitHiDefault = 40;
inline constexpr double kProfileFloor = 1e-14;

struct DecayReport {
    SortedMagnitudes sorted;
    std::vector<double> sigma; // sigma~_N for N = 0..M
    double rhat = 0.0;
    bool rhat_ok = false;      // >= 3 usable fit points
    std::size_t fit_lo = 0;
    std::size_t fit_hi = 0;
    std::size_t floor_hits = 0;

    double sigma0() const { return sigma.empty() ? 0.0 : sigma.front(); }
};

struct ModNormReport {
    double p = 2.0;
    double q = 2.0;
    Weight weight;
    double value = 0.0;
    LatticeSpec lat;
    std::string window_id;
};

// ||f||_{M^{p,q}_m} surrogate: lpq norm of the Gabor coefficients of f
// against the tight window of (g, lat). NotAFrame propagates.
ModNormReport modulation_qnorm(const Signal& f, const Signal& g, const LatticeSpec& lat,
                               double p, double q, const Weight& m);

// Same, with a precomputed tight window (studies reuse one).
ModNormReport modulation_qnorm_with_tight(const Signal& f, const Signal& tight,
                                          const LatticeSpec& lat, double p, double q,
                                          const Weight& m, const std::string& window_id);

// Rearranged tight-frame coefficients of f, tail profile and log-log fitted
// exponent over [fit_lo, fit_hi]. sigma~_N is the l2 tail of the rearranged
// coefficients: an upper-bound proxy for the best-N-term error (exact search
// over a redundant dictionary is combinatorial), with constant 1 for a
// Parseval frame.
DecayReport n_term_profile(const Signal& f, const Signal& g, const LatticeSpec& lat,
                           std::size_t fit_lo = kFitLoDefault, std::size_t fit_hi = kFitHiDefault);

DecayReport n_term_profile_with_tight(const Signal& f, const Signal& tight, const LatticeSpec& lat,
                                      std::size_t fit_lo = kFitLoDefault,
                                      std::size_t fit_hi = kFitHiDefault);

// Deterministic unit-norm complex baseline vector.
Signal random_unit_signal(long L, std::uint64_t seed);

// Modulation quasi-norm exponents reported per eigenfunction, the finite
// shadow of membership in every M^gamma.
inline constexpr std::array<double, 3> kStudyExponents{1.0, 0.5, 0.25};

struct EigenDecayStudy {
    EigenSystem spectrum;               // full, sorted
    std::vector<std::size_t> retained;  // indices into spectrum
    std::vector<DecayReport> reports;   // one per retained eigenfunction
    std::vector<std::array<double, 3>> modnorms; // at kStudyExponents, m == 1
    DecayReport baseline;
    std::array<double, 3> baseline_modnorms{};
    std::uint64_t seed = 0;
    bool noncompact_flag = false;       // retained count == L
    Signal tight;
};

EigenDecayStudy eigen_decay_study(const Operator& a, const Signal& g, const LatticeSpec& lat,
                                  std::size_t top_k, double floor, std::uint64_t seed);

struct WeightedDecayStudy {
    std::vector<double> s_list;
    double p = 1.0;
    std::vector<std::size_t> retained;
    // ratio[i][j] = weighted/unweighted modulation norm of eigenfunction i at
    // s_list[j]; vs_baseline[i][j] = ratio[i][j] / baseline_ratio[j].
    std::vector<std::vector<double>> ratio;
    std::vector<double> baseline_ratio;
    std::vector<std::vector<double>> vs_baseline;
};

WeightedDecayStudy weighted_decay_study(const Operator& a, const Signal& g, const LatticeSpec& lat,
                                        const std::vector<double>& s_list, double p,
                                        double floor, std::uint64_t seed);

struct ConvExponents {
    double p = 1.0, u = 2.0, q = 1.0, t = 2.0, r = 1.0, gamma = 1.0;
};

// ||f conv h||_{M^{r,gamma}} / (||f||_{M^{p,u}_{1xnu}} ||h||_{M^{q,t}_{1x1/nu}})
// with cyclic convolution on Z_L and modulation norms against the tight
// window of (g, lat).
RatioReport convolution_relation_check(const Signal& f, const Signal& h, const Signal& g,
                                       const LatticeSpec& lat, const ConvExponents& e,
                                       const AxisWeight& nu);

// --- CSV emission (fixed headers, 17 significant digits) ---

std::string format_sig17(double x);
std::string decay_csv(const DecayReport& r);          // N,sigma,log_N,log_sigma
std::string spectrum_csv(const EigenSystem& e);       // index,re,im,modulus,residual

struct NormRow {
    double p, q, s, value;
};
std::string norms_csv(const std::vector<NormRow>& rows); // p,q,s,value

// Writes via temp file + rename.
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace tfl
