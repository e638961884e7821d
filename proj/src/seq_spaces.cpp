#include "tfl/seq_spaces.hpp"

#include <algorithm>
#include <cmath>

namespace tfl {

AxisWeight AxisWeight::poly(double exponent) {
    AxisWeight w;
    w.kind = Kind::poly;
    w.s = exponent;
    return w;
}

AxisWeight AxisWeight::tabulated(std::vector<double> values, long start) {
    if (values.empty()) throw std::invalid_argument("AxisWeight: empty table");
    for (double x : values)
        if (!(x > 0.0)) throw std::invalid_argument("AxisWeight: weights must be positive");
    AxisWeight w;
    w.kind = Kind::tab;
    w.table = std::move(values);
    w.table_start = start;
    return w;
}

double AxisWeight::eval(double x) const {
    switch (kind) {
        case Kind::one:
            return 1.0;
        case Kind::poly:
            return std::pow(1.0 + x * x, 0.5 * s);
        case Kind::tab: {
            long i = std::lround(x) - table_start;
            if (i < 0) i = 0;
            if (i >= static_cast<long>(table.size())) i = static_cast<long>(table.size()) - 1;
            return table[static_cast<std::size_t>(i)];
        }
    }
    return 1.0;
}

AxisWeight AxisWeight::inverse() const {
    AxisWeight w = *this;
    if (kind == Kind::poly) w.s = -s;
    if (kind == Kind::tab)
        for (double& x : w.table) x = 1.0 / x;
    return w;
}

Weight Weight::radial(double s) {
    Weight w;
    w.kind = Kind::radial;
    w.s = s;
    return w;
}

Weight Weight::product(double s_time, double s_freq) {
    return axes(AxisWeight::poly(s_time), AxisWeight::poly(s_freq));
}

Weight Weight::axes(AxisWeight x, AxisWeight y) {
    Weight w;
    w.kind = Kind::separable;
    w.wx = std::move(x);
    w.wy = std::move(y);
    return w;
}

double Weight::eval2(double x, double y) const {
    if (kind == Kind::radial) return std::pow(1.0 + x * x + y * y, 0.5 * s);
    return wx.eval(x) * wy.eval(y);
}

double Weight::eval1(double x) const {
    if (kind == Kind::radial) return std::pow(1.0 + x * x, 0.5 * s);
    return wx.eval(x);
}

Weight Weight::inverse() const {
    Weight w = *this;
    if (kind == Kind::radial) {
        w.s = -s;
    } else {
        w.wx = wx.inverse();
        w.wy = wy.inverse();
    }
    return w;
}

bool Weight::is_one() const {
    return kind == Kind::separable && wx.kind == AxisWeight::Kind::one &&
           wy.kind == AxisWeight::Kind::one;
}

namespace {

void check_exponent(double p, const char* name) {
    if (std::isnan(p) || p <= 0.0)
        throw std::invalid_argument(std::string(name) + " must be positive");
}

double inv_or_zero(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

} // namespace

double lpq_norm(const CoefficientTable& c, double p, double q, const Weight& m) {
    check_exponent(p, "lpq_norm: p");
    check_exponent(q, "lpq_norm: q");
    const LatticeSpec& lat = c.lat;
    const bool p_inf = std::isinf(p);
    const bool q_inf = std::isinf(q);
    double outer = 0.0;
    for (long j = 0; j < lat.n_freq(); ++j) {
        const double y = centered_coord(lat.beta * j, lat.L);
        double inner = 0.0;
        for (long i = 0; i < lat.n_time(); ++i) {
            const double x = centered_coord(lat.alpha * i, lat.L);
            const double a = std::abs(c.at(i, j)) * m.eval2(x, y);
            if (p_inf)
                inner = std::max(inner, a);
            else
                inner += std::pow(a, p);
        }
        const double col = p_inf ? inner : std::pow(inner, 1.0 / p);
        if (q_inf)
            outer = std::max(outer, col);
        else
            outer += std::pow(col, q);
    }
    return q_inf ? outer : std::pow(outer, 1.0 / q);
}

Sequence convolve_seq(const Sequence& a, const Sequence& b) {
    if (a.v.empty() || b.v.empty()) return Sequence{a.start + b.start, {}};
    Sequence out;
    out.start = a.start + b.start;
    out.v.assign(a.v.size() + b.v.size() - 1, cxd(0.0, 0.0));
    for (std::size_t i = 0; i < a.v.size(); ++i)
        for (std::size_t j = 0; j < b.v.size(); ++j)
            out.v[i + j] += a.v[i] * b.v[j];
    return out;
}

double seq_lp_norm(const Sequence& a, double p, const Weight& m) {
    check_exponent(p, "seq_lp_norm: p");
    if (std::isinf(p)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < a.v.size(); ++i)
            mx = std::max(mx, std::abs(a.v[i]) * m.eval1(static_cast<double>(a.start + static_cast<long>(i))));
        return mx;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        const double x = std::abs(a.v[i]) * m.eval1(static_cast<double>(a.start + static_cast<long>(i)));
        s += std::pow(x, p);
    }
    return std::pow(s, 1.0 / p);
}

RatioReport young_check(const Sequence& a, const Sequence& b, double p, double q, double r,
                        const Weight& m, const Weight& v) {
    check_exponent(p, "young_check: p");
    check_exponent(q, "young_check: q");
    check_exponent(r, "young_check: r");
    const bool banach = r >= 1.0 && std::abs(inv_or_zero(p) + inv_or_zero(q) - 1.0 - inv_or_zero(r)) <= 1e-12;
    const bool quasi = r < 1.0 && p == q && q == r;
    if (!banach && !quasi)
        throw std::invalid_argument("young_check: exponents satisfy neither 1/p+1/q=1+1/r (r>=1) nor p=q=r<1");
    RatioReport rep;
    rep.numerator = seq_lp_norm(convolve_seq(a, b), r, m);
    rep.denominator = seq_lp_norm(a, p, m) * seq_lp_norm(b, q, v);
    rep.ratio = rep.denominator > 0.0 ? rep.numerator / rep.denominator : 0.0;
    return rep;
}

RatioReport holder_check(const Sequence& a, const Sequence& b, double p, double q, double r,
                         const Weight& m) {
    check_exponent(p, "holder_check: p");
    check_exponent(q, "holder_check: q");
    check_exponent(r, "holder_check: r");
    if (std::abs(inv_or_zero(p) + inv_or_zero(q) - inv_or_zero(r)) > 1e-12)
        throw std::invalid_argument("holder_check: exponents do not satisfy 1/p+1/q=1/r");
    // pointwise product over the overlap of the supports
    const long lo = std::max(a.start, b.start);
    const long hi = std::min(a.start + static_cast<long>(a.v.size()),
                             b.start + static_cast<long>(b.v.size()));
    Sequence prod;
    prod.start = lo;
    for (long t = lo; t < hi; ++t)
        prod.v.push_back(a.v[static_cast<std::size_t>(t - a.start)] *
                         b.v[static_cast<std::size_t>(t - b.start)]);
    RatioReport rep;
    rep.numerator = seq_lp_norm(prod, r, Weight::one());
    rep.denominator = seq_lp_norm(a, p, m) * seq_lp_norm(b, q, m.inverse());
    rep.ratio = rep.denominator > 0.0 ? rep.numerator / rep.denominator : 0.0;
    return rep;
}

SortedMagnitudes rearrange_desc(const CoefficientTable& c) {
    struct Entry {
        double mag;
        long j;
        long i;
    };
    std::vector<Entry> entries;
    entries.reserve(c.v.size());
    for (long i = 0; i < c.lat.n_time(); ++i)
        for (long j = 0; j < c.lat.n_freq(); ++j)
            entries.push_back({std::abs(c.at(i, j)), j, i});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.mag != b.mag) return a.mag > b.mag;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });
    SortedMagnitudes out;
    out.v.reserve(entries.size());
    for (const Entry& e : entries) out.v.push_back(e.mag);
    return out;
}

double sigma_tail(const SortedMagnitudes& s, std::size_t N) {
    if (N >= s.v.size()) return 0.0;
    // smallest terms first for a stable sum
    double acc = 0.0;
    for (std::size_t m = s.v.size(); m > N; --m) acc += s.v[m - 1] * s.v[m - 1];
    return std::sqrt(acc);
}

StechkinReport stechkin_ratio(const SortedMagnitudes& s, double p) {
    if (!(p > 0.0) || !(p < 2.0))
        throw std::invalid_argument("stechkin_ratio: p must lie in (0,2)");
    StechkinReport rep;
    const std::size_t len = s.v.size();
    if (len == 0) return rep;
    const double gamma = 1.0 / p - 0.5;
    // suffix sums of squares: tail[N] = sum_{m > N} s_m^2 (1-based m)
    std::vector<double> tail(len + 1, 0.0);
    for (std::size_t m = len; m > 0; --m) tail[m - 1] = tail[m] + s.v[m - 1] * s.v[m - 1];
    double mid = 0.0;
    double lp = 0.0;
    for (std::size_t N = 1; N <= len; ++N) {
        const double sigma_prev = std::sqrt(tail[N - 1]);
        const double nd = static_cast<double>(N);
        mid += std::pow(std::pow(nd, gamma) * sigma_prev, p) / nd;
        lp += std::pow(s.v[N - 1], p);
    }
    rep.middle = std::pow(mid, 1.0 / p);
    rep.lp = std::pow(lp, 1.0 / p);
    rep.ratio = rep.lp > 0.0 ? rep.middle / rep.lp : 0.0;
    return rep;
}

} // namespace tfl
