#include "tfl/quantize.hpp"

#include <cmath>

#include "tfl/fft.hpp"
#include "tfl/runtime.hpp"

namespace tfl {

SymbolGrid SymbolGrid::constant(long L, cxd value) {
    SymbolGrid g;
    g.L = L;
    g.v.assign(static_cast<std::size_t>(L) * static_cast<std::size_t>(L), value);
    return g;
}

long inv2_mod(long L) {
    if (L < 2 || L % 2 == 0)
        throw std::invalid_argument("inv2_mod: L must be odd and >= 3 for Wigner/Weyl paths");
    return (L + 1) / 2; // 2 * (L+1)/2 = L + 1 = 1 mod L
}

namespace {

void check_grid(const SymbolGrid& a) {
    if (a.L < 2 || a.v.size() != static_cast<std::size_t>(a.L) * static_cast<std::size_t>(a.L))
        throw std::invalid_argument("SymbolGrid: bad dimensions");
    if (!all_finite(a.v)) throw std::invalid_argument("SymbolGrid: non-finite entries");
}

// r[k][d] = sum_n grid(k,n) e^{2 pi i d n / L}, one inverse transform per row.
std::vector<std::vector<cxd>> row_phase_sums(const SymbolGrid& grid) {
    const long L = grid.L;
    Fft plan(static_cast<std::size_t>(L));
    std::vector<std::vector<cxd>> r(static_cast<std::size_t>(L));
    for (long k = 0; k < L; ++k) {
        std::vector<cxd> row(grid.v.begin() + k * L, grid.v.begin() + (k + 1) * L);
        plan.inverse(row); // carries 1/L
        for (cxd& z : row) z *= static_cast<double>(L);
        r[static_cast<std::size_t>(k)] = std::move(row);
    }
    return r;
}

} // namespace

SymbolGrid cross_wigner(const Signal& f, const Signal& g) {
    if (f.size() != g.size()) throw std::invalid_argument("cross_wigner: length mismatch");
    const long L = static_cast<long>(f.size());
    const long h = inv2_mod(L);
    SymbolGrid w = SymbolGrid::zeros(L);
    Fft plan(f.size());
    std::vector<cxd> row(f.size());
    for (long k = 0; k < L; ++k) {
        for (long t = 0; t < L; ++t)
            row[t] = f[mod_reduce(k + h * t, L)] * std::conj(g[mod_reduce(k - h * t, L)]);
        plan.forward(row);
        for (long n = 0; n < L; ++n) w.at(k, n) = row[n];
    }
    return w;
}

Operator weyl_build(const SymbolGrid& sigma) {
    check_grid(sigma);
    const long L = sigma.L;
    const long h = inv2_mod(L);
    const auto r = row_phase_sums(sigma);
    CMatrix m(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    const double inv_L = 1.0 / static_cast<double>(L);
    for (long x = 0; x < L; ++x)
        for (long y = 0; y < L; ++y)
            m(x, y) = inv_L * r[mod_reduce(h * (x + y), L)][mod_reduce(x - y, L)];
    return make_operator(std::move(m), Provenance::weyl);
}

Operator localization_build(const SymbolGrid& a, const Signal& phi1, const Signal& phi2) {
    check_grid(a);
    const long L = a.L;
    if (static_cast<long>(phi1.size()) != L || static_cast<long>(phi2.size()) != L)
        throw std::invalid_argument("localization_build: window length mismatch");
    if (norm2(phi1) == 0.0 || norm2(phi2) == 0.0)
        throw std::invalid_argument("localization_build: zero window");

    // A(x,y) = (1/L) sum_k phi2(x-k) conj(phi1(y-k)) r[k][x-y], the grouped
    // form of applying the defining sum to the standard basis.
    const auto r = row_phase_sums(a);
    CMatrix m(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    const double inv_L = 1.0 / static_cast<double>(L);
    parallel_chunks(static_cast<std::size_t>(L), 8, [&](std::size_t begin, std::size_t end) {
        for (std::size_t xs = begin; xs < end; ++xs) {
            const long x = static_cast<long>(xs);
            for (long y = 0; y < L; ++y) {
                cxd acc(0.0, 0.0);
                const long d = mod_reduce(x - y, L);
                for (long k = 0; k < L; ++k)
                    acc += phi2[mod_reduce(x - k, L)] * std::conj(phi1[mod_reduce(y - k, L)]) *
                           r[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
                m(xs, static_cast<std::size_t>(y)) = acc * inv_L;
            }
        }
    });
    return make_operator(std::move(m), Provenance::localization);
}

double weyl_correspondence_scale(long L) {
    inv2_mod(L);
    return 1.0 / static_cast<double>(L);
}

SymbolGrid localization_weyl_symbol(const SymbolGrid& a, const Signal& phi1, const Signal& phi2) {
    check_grid(a);
    const long L = a.L;
    if (static_cast<long>(phi1.size()) != L || static_cast<long>(phi2.size()) != L)
        throw std::invalid_argument("localization_weyl_symbol: window length mismatch");
    const SymbolGrid w = cross_wigner(phi2, phi1);

    // cyclic 2D convolution through the 2D transform
    Fft plan(static_cast<std::size_t>(L));
    auto fft2 = [&](const SymbolGrid& g, bool forward) {
        SymbolGrid out = g;
        std::vector<cxd> buf(static_cast<std::size_t>(L));
        for (long k = 0; k < L; ++k) { // rows
            for (long n = 0; n < L; ++n) buf[n] = out.at(k, n);
            forward ? plan.forward(buf) : plan.inverse(buf);
            for (long n = 0; n < L; ++n) out.at(k, n) = buf[n];
        }
        for (long n = 0; n < L; ++n) { // columns
            for (long k = 0; k < L; ++k) buf[k] = out.at(k, n);
            forward ? plan.forward(buf) : plan.inverse(buf);
            for (long k = 0; k < L; ++k) out.at(k, n) = buf[k];
        }
        return out;
    };
    SymbolGrid fa = fft2(a, true);
    const SymbolGrid fw = fft2(w, true);
    for (std::size_t i = 0; i < fa.v.size(); ++i) fa.v[i] *= fw.v[i];
    SymbolGrid sigma = fft2(fa, false);
    const double scale = weyl_correspondence_scale(L);
    for (cxd& z : sigma.v) z *= scale;
    return sigma;
}

cxd stft2_point(const SymbolGrid& sigma, const SymbolGrid& phi, TFPoint u, TFPoint v) {
    check_grid(sigma);
    if (phi.L != sigma.L) throw std::invalid_argument("stft2_point: grid size mismatch");
    const long L = sigma.L;
    cxd acc(0.0, 0.0);
    for (long x = 0; x < L; ++x)
        for (long w = 0; w < L; ++w)
            acc += sigma.at(x, w) *
                   std::conj(phi.at(mod_reduce(x - u.k, L), mod_reduce(w - u.n, L))) *
                   unit_phase(-(x * v.k + w * v.n), L);
    return acc;
}

std::pair<double, double> stft_mag_of_operator_kernel(const SymbolGrid& sigma, const Signal& g,
                                                      TFPoint z, TFPoint w) {
    const long L = sigma.L;
    const long h = inv2_mod(L);
    if (static_cast<long>(g.size()) != L)
        throw std::invalid_argument("stft_mag_of_operator_kernel: window length mismatch");

    const Operator op = weyl_build(sigma);
    const Signal zg = tf_shift(g, z);
    const Signal wg = tf_shift(g, w);
    const double lhs = std::abs(inner(op.m.apply(zg), wg));

    const SymbolGrid phi = cross_wigner(g, g);
    const TFPoint u{mod_reduce(h * (z.k + w.k), L), mod_reduce(h * (z.n + w.n), L)};
    const TFPoint jv{mod_reduce(w.n - z.n, L), mod_reduce(-(w.k - z.k), L)};
    const double rhs = std::abs(stft2_point(sigma, phi, u, jv)) / static_cast<double>(L);
    return {lhs, rhs};
}

} // namespace tfl
