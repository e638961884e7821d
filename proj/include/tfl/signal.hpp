// signal.hpp - signals on Z_L and the elementary time-frequency operations.

#pragma once

#include <vector>

#include "tfl/common.hpp"

namespace tfl {

// A signal is a complex vector indexed by t = 0..L-1.
using Signal = std::vector<cxd>;

// Phase-space point z = (k, n): time shift k, frequency shift n, both mod L.
struct TFPoint {
    long k = 0;
    long n = 0;
};

double norm2(const Signal& f);

// <f, g> = sum_t f(t) conj(g(t))
cxd inner(const Signal& f, const Signal& g);

// Forward DFT, no prefactor: (dft f)(n) = sum_t f(t) exp(-2*pi*i*t*n/L).
Signal dft(const Signal& f);

// Inverse with the 1/L.
Signal idft(const Signal& F);

// (T_k f)(t) = f(t - k mod L)
Signal translate(const Signal& f, long k);

// (M_n f)(t) = exp(2*pi*i*n*t/L) f(t)
Signal modulate(const Signal& f, long n);

// pi(z) = M_n T_k
Signal tf_shift(const Signal& f, TFPoint z);

} // namespace tfl
