// seq_spaces.hpp - weighted l^{p,q}_m quasi-norms, sequence convolution,
// Young/Hoelder ratio checks, nonincreasing rearrangement, tail errors and
// the Stechkin two-sided estimate.

#pragma once

#include <vector>

#include "tfl/gabor.hpp"

namespace tfl {

// Weight along one axis: constant 1, polynomial <x>^s, or a tabulated set of
// strictly positive values on consecutive integers.
struct AxisWeight {
    enum class Kind { one, poly, tab };
    Kind kind = Kind::one;
    double s = 0.0;
    std::vector<double> table;
    long table_start = 0;

    static AxisWeight one() { return {}; }
    static AxisWeight poly(double exponent);
    static AxisWeight tabulated(std::vector<double> values, long start);

    double eval(double x) const;
    AxisWeight inverse() const;
};

// Weight on the phase-space grid: either a radial polynomial <z>^s or a
// separable product wx(x) * wy(y) (covers v_s (x) v_t, 1 (x) nu, ...).
struct Weight {
    enum class Kind { separable, radial };
    Kind kind = Kind::separable;
    AxisWeight wx;
    AxisWeight wy;
    double s = 0.0;

    static Weight one() { return {}; }
    static Weight radial(double s);
    static Weight product(double s_time, double s_freq);
    static Weight axes(AxisWeight x, AxisWeight y);

    double eval2(double x, double y) const;
    double eval1(double x) const;
    Weight inverse() const;
    bool is_one() const;
};

// ( sum_n ( sum_k |c(k,n)|^p m(k,n)^p )^{q/p} )^{1/q}, inner sum over the
// time index, sup-modifications at p or q = infinity. Weights are evaluated
// at the centered lattice coordinates (alpha*k~, beta*n~).
double lpq_norm(const CoefficientTable& c, double p, double q, const Weight& m);

// Finitely supported sequence on Z: values v[0..] at indices start, start+1, ...
struct Sequence {
    long start = 0;
    std::vector<cxd> v;
};

// Full linear convolution.
Sequence convolve_seq(const Sequence& a, const Sequence& b);

// Weighted l^p quasi-norm of a sequence (p = inf -> weighted sup).
double seq_lp_norm(const Sequence& a, double p, const Weight& m);

struct RatioReport {
    double numerator = 0.0;
    double denominator = 0.0;
    double ratio = 0.0;
};

// ||a*b||_{l^r_m} / (||a||_{l^p_m} ||b||_{l^q_v}); requires 1/p+1/q = 1+1/r
// with r >= 1, or p = q = r < 1.
RatioReport young_check(const Sequence& a, const Sequence& b, double p, double q, double r,
                        const Weight& m, const Weight& v);

// ||a.b||_{l^r} / (||a||_{l^p_m} ||b||_{l^q_{1/m}}); requires 1/p+1/q = 1/r.
RatioReport holder_check(const Sequence& a, const Sequence& b, double p, double q, double r,
                         const Weight& m);

// Magnitudes sorted nonincreasing; ties broken by (n, k) lexicographic index.
struct SortedMagnitudes {
    std::vector<double> v;
};

SortedMagnitudes rearrange_desc(const CoefficientTable& c);

// sqrt(sum_{m > N} s_m^2), 1-based m; N >= length gives 0.
double sigma_tail(const SortedMagnitudes& s, std::size_t N);

struct StechkinReport {
    double middle = 0.0;
    double lp = 0.0;
    double ratio = 0.0;
};

// middle = ( sum_{N=1..len} (N^gamma sigma_{N-1}(s))^p / N )^{1/p} with
// gamma = 1/p - 1/2; finite data makes the tail sums exact and the middle
// sum a lower bound of the infinite expression.
StechkinReport stechkin_ratio(const SortedMagnitudes& s, double p);

} // namespace tfl
