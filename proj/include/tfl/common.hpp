// common.hpp - shared scalar type, index arithmetic and error taxonomy.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfl {

using cxd = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Raised when a Gabor system fails the frame test (min eigenvalue of the
// frame operator at or below the scale-invariant threshold).
struct NotAFrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a dense eigensolver does not converge; the message carries a
// hash of the offending matrix.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario/schema validation failures (bad generator name, divisibility, ...).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduce an index into {0, ..., L-1}; negative inputs accepted.
inline long mod_reduce(long x, long L) {
    long r = x % L;
    return r < 0 ? r + L : r;
}

// Map a cyclic index to its signed representative: k if k <= L/2, else k - L.
inline double centered_coord(long k, long L) {
    long r = mod_reduce(k, L);
    return static_cast<double>(r <= L / 2 ? r : r - L);
}

inline cxd unit_phase(long num, long L) {
    // exp(2*pi*i*num/L) with the exponent reduced first to keep angles small
    return std::polar(1.0, kTwoPi * static_cast<double>(mod_reduce(num, L)) / static_cast<double>(L));
}

inline bool all_finite(const std::vector<cxd>& v) {
    for (const cxd& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

// Standard-normal generator with a fully pinned sequence: mt19937_64 is
// specified bit-exactly by the standard, and the Box-Muller step below only
// depends on libm. std::normal_distribution would vary across library
// implementations, which would break cross-platform reproducibility of
// emitted baselines and random symbols.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53; // (0,1]
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1p-53;         // [0,1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        has_spare_ = true;
        return r * std::cos(kTwoPi * u2);
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline std::uint64_t fnv1a(const void* data, std::size_t nbytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < nbytes; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

} // namespace tfl
