#include "tfl/fft.hpp"

#include <cstdio>

namespace tfl {

std::string to_hex(std::uint64_t value) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Forward twiddles exp(-2*pi*i*k/n) for k < n/2.
std::vector<cxd> make_twiddles(std::size_t n) {
    std::vector<cxd> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        tw[k] = std::polar(1.0, -kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    return tw;
}

} // namespace

Fft::Fft(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Fft: zero length");
    pow2_ = is_pow2(n);
    if (pow2_) {
        tw_ = make_twiddles(n);
        return;
    }
    m_ = next_pow2(2 * n - 1);
    tw_ = make_twiddles(m_);
    chirp_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        // exp(-i*pi*k^2/n); k^2 reduced mod 2n keeps the argument small
        std::size_t e = (k * k) % (2 * n);
        chirp_[k] = std::polar(1.0, -kTwoPi * 0.5 * static_cast<double>(e) / static_cast<double>(n));
    }
    std::vector<cxd> kernel(m_, cxd(0.0, 0.0));
    kernel[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n; ++k) {
        kernel[k] = std::conj(chirp_[k]);
        kernel[m_ - k] = std::conj(chirp_[k]);
    }
    radix2(kernel, tw_);
    kernel_ft_ = std::move(kernel);
}

void Fft::radix2(std::vector<cxd>& x, const std::vector<cxd>& twiddle) const {
    const std::size_t n = x.size();
    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cxd w = twiddle[k * step];
                const cxd u = x[i + k];
                const cxd t = x[i + k + len / 2] * w;
                x[i + k] = u + t;
                x[i + k + len / 2] = u - t;
            }
        }
    }
}

void Fft::forward(std::vector<cxd>& x) const {
    if (x.size() != n_) throw std::invalid_argument("Fft: length mismatch");
    if (n_ == 1) return;
    if (pow2_) {
        radix2(x, tw_);
        return;
    }
    // Bluestein: X_k = chirp_k * ((x .* chirp) conv kernel)_k
    std::vector<cxd> a(m_, cxd(0.0, 0.0));
    for (std::size_t k = 0; k < n_; ++k) a[k] = x[k] * chirp_[k];
    radix2(a, tw_);
    for (std::size_t k = 0; k < m_; ++k) a[k] *= kernel_ft_[k];
    for (cxd& z : a) z = std::conj(z);
    radix2(a, tw_);
    const double inv_m = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k)
        x[k] = chirp_[k] * std::conj(a[k]) * inv_m;
}

void Fft::inverse(std::vector<cxd>& x) const {
    if (x.size() != n_) throw std::invalid_argument("Fft: length mismatch");
    for (cxd& z : x) z = std::conj(z);
    forward(x);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (cxd& z : x) z = std::conj(z) * inv_n;
}

std::vector<cxd> dft_vec(const std::vector<cxd>& x) {
    std::vector<cxd> y = x;
    Fft(x.size()).forward(y);
    return y;
}

std::vector<cxd> idft_vec(const std::vector<cxd>& x) {
    std::vector<cxd> y = x;
    Fft(x.size()).inverse(y);
    return y;
}

} // namespace tfl
