#include "tfl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tfl {

double eig_residual_tolerance(const Operator& a) {
    return 1e-8 * a.m.max_abs() * static_cast<double>(a.dim());
}

namespace {

std::vector<double> pair_residuals(const CMatrix& m, const std::vector<cxd>& values,
                                   const std::vector<Signal>& vectors) {
    std::vector<double> res(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::vector<cxd> av = m.apply(vectors[i]);
        double s = 0.0;
        for (std::size_t t = 0; t < av.size(); ++t) s += std::norm(av[t] - values[i] * vectors[i][t]);
        res[i] = std::sqrt(s);
    }
    return res;
}

std::vector<std::size_t> sort_order(const std::vector<cxd>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::abs(values[a]);
        const double mb = std::abs(values[b]);
        if (ma != mb) return ma > mb;
        if (values[a].real() != values[b].real()) return values[a].real() > values[b].real();
        return values[a].imag() > values[b].imag();
    });
    return order;
}

} // namespace

EigenSystem eig(const Operator& a) {
    if (a.m.rows() != a.m.cols()) throw std::invalid_argument("eig: not square");
    if (!all_finite(a.m.data())) throw std::invalid_argument("eig: non-finite entries");
    const std::size_t n = a.m.rows();

    std::vector<cxd> values(n);
    std::vector<Signal> vectors(n);
    if (a.hermitian) {
        const HermitianEig he = hermitian_eig(a.m);
        for (std::size_t j = 0; j < n; ++j) {
            values[j] = cxd(he.values[j], 0.0);
            Signal v(n);
            for (std::size_t t = 0; t < n; ++t) v[t] = he.vectors(t, j);
            vectors[j] = std::move(v);
        }
    } else {
        const GeneralEig ge = general_eig(a.m);
        for (std::size_t j = 0; j < n; ++j) {
            values[j] = ge.values[j];
            Signal v(n);
            for (std::size_t t = 0; t < n; ++t) v[t] = ge.vectors(t, j);
            vectors[j] = std::move(v);
        }
    }
    for (Signal& v : vectors) {
        const double nv = norm2(v);
        if (nv > 0.0)
            for (cxd& z : v) z /= nv;
    }

    const std::vector<std::size_t> order = sort_order(values);
    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(values[idx]);
        out.vectors.push_back(std::move(vectors[idx]));
    }
    out.residuals = pair_residuals(a.m, out.values, out.vectors);

    const double tol = eig_residual_tolerance(a);
    for (double r : out.residuals)
        if (!(r <= tol))
            throw SolverError("eig: residual " + std::to_string(r) + " above tolerance, matrix " +
                              to_hex(a.m.content_hash()));
    return out;
}

std::vector<double> singular_values(const Operator& a) {
    std::vector<double> s = svd_values(a.m);
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

double schatten_qnorm(const Operator& a, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten_qnorm: p must be positive");
    const std::vector<double> s = singular_values(a);
    double acc = 0.0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) acc += std::pow(*it, p);
    return std::pow(acc, 1.0 / p);
}

EigenSystem point_spectrum_nonzero(const EigenSystem& e, double floor) {
    if (!(floor > 0.0)) throw std::invalid_argument("point_spectrum_nonzero: floor must be positive");
    EigenSystem out;
    if (e.values.empty()) return out;
    const double cut = floor * std::abs(e.values.front());
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        if (std::abs(e.values[i]) > cut) {
            out.values.push_back(e.values[i]);
            out.vectors.push_back(e.vectors[i]);
            out.residuals.push_back(e.residuals[i]);
        }
    }
    return out;
}

} // namespace tfl
