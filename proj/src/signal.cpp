#include "tfl/signal.hpp"

#include <cmath>

#include "tfl/fft.hpp"

namespace tfl {

double norm2(const Signal& f) {
    double s = 0.0;
    for (const cxd& z : f) s += std::norm(z);
    return std::sqrt(s);
}

cxd inner(const Signal& f, const Signal& g) {
    if (f.size() != g.size()) throw std::invalid_argument("inner: length mismatch");
    cxd s(0.0, 0.0);
    for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(g[t]);
    return s;
}

Signal dft(const Signal& f) { return dft_vec(f); }

Signal idft(const Signal& F) { return idft_vec(F); }

Signal translate(const Signal& f, long k) {
    const long L = static_cast<long>(f.size());
    Signal g(f.size());
    for (long t = 0; t < L; ++t) g[t] = f[mod_reduce(t - k, L)];
    return g;
}

Signal modulate(const Signal& f, long n) {
    const long L = static_cast<long>(f.size());
    Signal g(f.size());
    for (long t = 0; t < L; ++t) g[t] = unit_phase(n * t, L) * f[t];
    return g;
}

Signal tf_shift(const Signal& f, TFPoint z) {
    return modulate(translate(f, z.k), z.n);
}

} // namespace tfl
