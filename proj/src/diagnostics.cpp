#include "tfl/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>

#include "tfl/fft.hpp"

namespace tfl {

ModNormReport modulation_qnorm_with_tight(const Signal& f, const Signal& tight,
                                          const LatticeSpec& lat, double p, double q,
                                          const Weight& m, const std::string& window_id) {
    ModNormReport rep;
    rep.p = p;
    rep.q = q;
    rep.weight = m;
    rep.lat = lat;
    rep.window_id = window_id;
    rep.value = lpq_norm(gabor_coeffs(f, tight, lat), p, q, m);
    return rep;
}

ModNormReport modulation_qnorm(const Signal& f, const Signal& g, const LatticeSpec& lat,
                               double p, double q, const Weight& m) {
    return modulation_qnorm_with_tight(f, tight_window(g, lat), lat, p, q, m, "tight");
}

namespace {

void fit_exponent(DecayReport& rep) {
    // OLS of log sigma~_N on log N over the fit window, excluding points
    // under the relative floor.
    const double floor = kProfileFloor * rep.sigma0();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t npts = 0;
    for (std::size_t N = std::max<std::size_t>(rep.fit_lo, 1);
         N <= rep.fit_hi && N < rep.sigma.size(); ++N) {
        const double s = rep.sigma[N];
        if (!(s >= floor) || s <= 0.0) continue;
        const double x = std::log(static_cast<double>(N));
        const double y = std::log(s);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++npts;
    }
    rep.rhat_ok = npts >= 3;
    if (rep.rhat_ok) {
        const double n = static_cast<double>(npts);
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.rhat = -slope;
    } else {
        rep.rhat = 0.0;
    }
}

DecayReport profile_from_table(const CoefficientTable& c, std::size_t fit_lo, std::size_t fit_hi) {
    DecayReport rep;
    rep.sorted = rearrange_desc(c);
    const std::size_t M = rep.sorted.v.size();
    rep.sigma.assign(M + 1, 0.0);
    double acc = 0.0;
    for (std::size_t m = M; m > 0; --m) {
        acc += rep.sorted.v[m - 1] * rep.sorted.v[m - 1];
        rep.sigma[m - 1] = std::sqrt(acc);
    }
    rep.fit_lo = fit_lo;
    rep.fit_hi = fit_hi;
    fit_exponent(rep);
    const double floor = kProfileFloor * rep.sigma0();
    for (double s : rep.sigma)
        if (s < floor) ++rep.floor_hits;
    return rep;
}

} // namespace

DecayReport n_term_profile_with_tight(const Signal& f, const Signal& tight, const LatticeSpec& lat,
                                      std::size_t fit_lo, std::size_t fit_hi) {
    return profile_from_table(gabor_coeffs(f, tight, lat), fit_lo, fit_hi);
}

DecayReport n_term_profile(const Signal& f, const Signal& g, const LatticeSpec& lat,
                           std::size_t fit_lo, std::size_t fit_hi) {
    return n_term_profile_with_tight(f, tight_window(g, lat), lat, fit_lo, fit_hi);
}

Signal random_unit_signal(long L, std::uint64_t seed) {
    GaussianRng rng(seed);
    Signal f(static_cast<std::size_t>(L));
    for (long t = 0; t < L; ++t) {
        const double re = rng.next();
        const double im = rng.next();
        f[t] = cxd(re, im);
    }
    const double n = norm2(f);
    for (cxd& z : f) z /= n;
    return f;
}

namespace {

std::array<double, 3> study_modnorms(const Signal& f, const Signal& tight, const LatticeSpec& lat) {
    std::array<double, 3> out{};
    const CoefficientTable c = gabor_coeffs(f, tight, lat);
    for (std::size_t i = 0; i < kStudyExponents.size(); ++i)
        out[i] = lpq_norm(c, kStudyExponents[i], kStudyExponents[i], Weight::one());
    return out;
}

} // namespace

EigenDecayStudy eigen_decay_study(const Operator& a, const Signal& g, const LatticeSpec& lat,
                                  std::size_t top_k, double floor, std::uint64_t seed) {
    if (a.dim() != lat.L || static_cast<long>(g.size()) != lat.L)
        throw std::invalid_argument("eigen_decay_study: dimension mismatch");
    EigenDecayStudy study;
    study.seed = seed;
    study.tight = tight_window(g, lat);
    study.spectrum = eig(a);
    const EigenSystem kept = point_spectrum_nonzero(study.spectrum, floor);
    const std::size_t n_keep = std::min(top_k, kept.values.size());
    study.noncompact_flag = kept.values.size() == static_cast<std::size_t>(lat.L);
    for (std::size_t i = 0; i < n_keep; ++i) {
        study.retained.push_back(i);
        study.reports.push_back(n_term_profile_with_tight(kept.vectors[i], study.tight, lat));
        study.modnorms.push_back(study_modnorms(kept.vectors[i], study.tight, lat));
    }
    const Signal base = random_unit_signal(lat.L, seed);
    study.baseline = n_term_profile_with_tight(base, study.tight, lat);
    study.baseline_modnorms = study_modnorms(base, study.tight, lat);
    return study;
}

WeightedDecayStudy weighted_decay_study(const Operator& a, const Signal& g, const LatticeSpec& lat,
                                        const std::vector<double>& s_list, double p,
                                        double floor, std::uint64_t seed) {
    if (a.dim() != lat.L || static_cast<long>(g.size()) != lat.L)
        throw std::invalid_argument("weighted_decay_study: dimension mismatch");
    for (double s : s_list)
        if (s < 0.0) throw std::invalid_argument("weighted_decay_study: s must be nonnegative");
    WeightedDecayStudy study;
    study.s_list = s_list;
    study.p = p;
    const Signal tight = tight_window(g, lat);
    const EigenSystem spec = eig(a);
    const EigenSystem kept = point_spectrum_nonzero(spec, floor);

    auto ratios_for = [&](const Signal& f) {
        const CoefficientTable c = gabor_coeffs(f, tight, lat);
        const double unweighted = lpq_norm(c, p, p, Weight::one());
        std::vector<double> out;
        out.reserve(s_list.size());
        for (double s : s_list)
            out.push_back(unweighted > 0.0 ? lpq_norm(c, p, p, Weight::product(s, s)) / unweighted
                                           : 0.0);
        return out;
    };

    const Signal base = random_unit_signal(lat.L, seed);
    study.baseline_ratio = ratios_for(base);
    for (std::size_t i = 0; i < kept.values.size(); ++i) {
        study.retained.push_back(i);
        study.ratio.push_back(ratios_for(kept.vectors[i]));
        std::vector<double> rel(s_list.size());
        for (std::size_t j = 0; j < s_list.size(); ++j)
            rel[j] = study.baseline_ratio[j] > 0.0 ? study.ratio.back()[j] / study.baseline_ratio[j]
                                                   : 0.0;
        study.vs_baseline.push_back(std::move(rel));
    }
    return study;
}

RatioReport convolution_relation_check(const Signal& f, const Signal& h, const Signal& g,
                                       const LatticeSpec& lat, const ConvExponents& e,
                                       const AxisWeight& nu) {
    auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
    if (std::abs(inv(e.u) + inv(e.t) - inv(e.gamma)) > 1e-12)
        throw std::invalid_argument("convolution_relation_check: 1/u + 1/t must equal 1/gamma");
    const bool banach = e.r >= 1.0 && std::abs(inv(e.p) + inv(e.q) - 1.0 - inv(e.r)) <= 1e-12;
    const bool quasi = e.r < 1.0 && e.p == e.q && e.q == e.r;
    if (!banach && !quasi)
        throw std::invalid_argument("convolution_relation_check: (p,q,r) outside both Young regimes");
    if (f.size() != h.size() || static_cast<long>(f.size()) != lat.L)
        throw std::invalid_argument("convolution_relation_check: length mismatch");

    // cyclic convolution on Z_L
    Signal ff = dft(f);
    const Signal fh = dft(h);
    for (std::size_t i = 0; i < ff.size(); ++i) ff[i] *= fh[i];
    const Signal conv = idft(ff);

    const Signal tight = tight_window(g, lat);
    const Weight w_nu = Weight::axes(AxisWeight::one(), nu);

    RatioReport rep;
    rep.numerator = lpq_norm(gabor_coeffs(conv, tight, lat), e.r, e.gamma, Weight::one());
    rep.denominator = lpq_norm(gabor_coeffs(f, tight, lat), e.p, e.u, w_nu) *
                      lpq_norm(gabor_coeffs(h, tight, lat), e.q, e.t, w_nu.inverse());
    rep.ratio = rep.denominator > 0.0 ? rep.numerator / rep.denominator : 0.0;
    return rep;
}

std::string format_sig17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

std::string decay_csv(const DecayReport& r) {
    std::string out = "N,sigma,log_N,log_sigma\n";
    for (std::size_t N = 0; N < r.sigma.size(); ++N) {
        const double s = r.sigma[N];
        const double logn = N > 0 ? std::log(static_cast<double>(N))
                                  : std::numeric_limits<double>::quiet_NaN();
        const double logs = s > 0.0 ? std::log(s) : std::numeric_limits<double>::quiet_NaN();
        out += std::to_string(N);
        out += ',';
        out += format_sig17(s);
        out += ',';
        out += format_sig17(logn);
        out += ',';
        out += format_sig17(logs);
        out += '\n';
    }
    return out;
}

std::string spectrum_csv(const EigenSystem& e) {
    std::string out = "index,re,im,modulus,residual\n";
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_sig17(e.values[i].real());
        out += ',';
        out += format_sig17(e.values[i].imag());
        out += ',';
        out += format_sig17(std::abs(e.values[i]));
        out += ',';
        out += format_sig17(i < e.residuals.size() ? e.residuals[i] : 0.0);
        out += '\n';
    }
    return out;
}

std::string norms_csv(const std::vector<NormRow>& rows) {
    std::string out = "p,q,s,value\n";
    for (const NormRow& r : rows) {
        out += format_sig17(r.p);
        out += ',';
        out += format_sig17(r.q);
        out += ',';
        out += format_sig17(r.s);
        out += ',';
        out += format_sig17(r.value);
        out += '\n';
    }
    return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for write: " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

} // namespace tfl
