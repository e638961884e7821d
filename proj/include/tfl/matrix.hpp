// matrix.hpp - small dense complex matrix plus the decompositions the
// toolkit needs (Hermitian eigensolve, general eigensolve, singular values,
// linear solve). Storage is row-major; the heavy lifting is delegated to
// Eigen behind this interface.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tfl/common.hpp"

namespace tfl {

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cxd(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cxd>& data() const { return a_; }
    std::vector<cxd>& data() { return a_; }

    CMatrix adjoint() const;
    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const CMatrix& other) const;
    CMatrix& operator*=(cxd scale);

    std::vector<cxd> apply(const std::vector<cxd>& x) const;

    double max_abs() const;
    double frobenius() const;
    // max_ij |A - A*|
    double max_asymmetry() const;

    std::uint64_t content_hash() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> a_;
};

enum class Provenance { localization, weyl, frame, raw };

const char* provenance_name(Provenance p);

// Dense operator with construction provenance; the hermitian flag is
// measured at construction (max asymmetry <= 1e-10).
struct Operator {
    CMatrix m;
    Provenance prov = Provenance::raw;
    bool hermitian = false;

    long dim() const { return static_cast<long>(m.rows()); }
};

Operator make_operator(CMatrix m, Provenance prov);

// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and an
// orthonormal column basis. Input asymmetry is the caller's business.
struct HermitianEig {
    std::vector<double> values;
    CMatrix vectors;
};
HermitianEig hermitian_eig(const CMatrix& m);

// Full eigendecomposition of a general square complex matrix. Column j of
// `vectors` is a unit eigenvector for values[j]; no particular order.
struct GeneralEig {
    std::vector<cxd> values;
    CMatrix vectors;
};
GeneralEig general_eig(const CMatrix& m);

// Singular values, descending.
std::vector<double> svd_values(const CMatrix& m);

// Solve A x = b by partially pivoted LU.
std::vector<cxd> lu_solve(const CMatrix& a, const std::vector<cxd>& b);

} // namespace tfl
