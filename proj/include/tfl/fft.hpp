// fft.hpp - complex FFT plan for arbitrary lengths (radix-2 + Bluestein).

#pragma once

#include <cstddef>
#include <vector>

#include "tfl/common.hpp"

namespace tfl {

// One plan per transform length. forward() computes the plain DFT sum
// X(n) = sum_t x(t) exp(-2*pi*i*t*n/L) with no prefactor; inverse() carries
// the 1/L. Power-of-two lengths use an iterative radix-2 kernel, everything
// else goes through Bluestein's chirp-z reduction to a padded radix-2 size.
class Fft {
public:
    explicit Fft(std::size_t n);

    void forward(std::vector<cxd>& x) const;
    void inverse(std::vector<cxd>& x) const;

    std::size_t size() const { return n_; }

private:
    void radix2(std::vector<cxd>& x, const std::vector<cxd>& twiddle) const;

    std::size_t n_ = 0;
    bool pow2_ = false;
    std::vector<cxd> tw_;       // radix-2 twiddles for n_ (pow2) or m_ (Bluestein)
    // Bluestein state
    std::size_t m_ = 0;         // padded power-of-two length >= 2n-1
    std::vector<cxd> chirp_;    // exp(-i*pi*k^2/n), k = 0..n-1
    std::vector<cxd> kernel_ft_; // forward transform of the padded conjugate chirp
};

// Convenience one-shot transforms.
std::vector<cxd> dft_vec(const std::vector<cxd>& x);
std::vector<cxd> idft_vec(const std::vector<cxd>& x);

} // namespace tfl
