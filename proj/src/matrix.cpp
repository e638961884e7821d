#include "tfl/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace tfl {

namespace {

using EigenRowMat =
    Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMat> as_eigen(const CMatrix& m) {
    return Eigen::Map<const EigenRowMat>(m.data().data(),
                                         static_cast<Eigen::Index>(m.rows()),
                                         static_cast<Eigen::Index>(m.cols()));
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
    CMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}

} // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + other.a_[i];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - other.a_[i];
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("CMatrix: shape mismatch");
    CMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cxd aik = (*this)(i, k);
            if (aik == cxd(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m(i, j) += aik * other(k, j);
        }
    }
    return m;
}

CMatrix& CMatrix::operator*=(cxd scale) {
    for (cxd& z : a_) z *= scale;
    return *this;
}

std::vector<cxd> CMatrix::apply(const std::vector<cxd>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("CMatrix: apply length mismatch");
    std::vector<cxd> y(rows_, cxd(0.0, 0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
        cxd s(0.0, 0.0);
        const cxd* row = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cxd& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const cxd& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::max_asymmetry() const {
    if (rows_ != cols_) return max_abs();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

std::uint64_t CMatrix::content_hash() const {
    return fnv1a(a_.data(), a_.size() * sizeof(cxd));
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::localization: return "localization";
        case Provenance::weyl: return "weyl";
        case Provenance::frame: return "frame";
        case Provenance::raw: return "raw";
    }
    return "raw";
}

Operator make_operator(CMatrix m, Provenance prov) {
    Operator op;
    op.hermitian = m.rows() == m.cols() && m.max_asymmetry() <= 1e-10;
    op.m = std::move(m);
    op.prov = prov;
    return op;
}

HermitianEig hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: not square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(as_eigen(m));
    if (solver.info() != Eigen::Success)
        throw SolverError("hermitian eigensolver failed, matrix " + to_hex(m.content_hash()));
    HermitianEig out;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

GeneralEig general_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("general_eig: not square");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(as_eigen(m), /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw SolverError("complex eigensolver failed, matrix " + to_hex(m.content_hash()));
    GeneralEig out;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

std::vector<double> svd_values(const CMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(as_eigen(m));
    std::vector<double> s(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
    return s;
}

std::vector<cxd> lu_solve(const CMatrix& a, const std::vector<cxd>& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("lu_solve: shape mismatch");
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
    Eigen::VectorXcd x = Eigen::MatrixXcd(as_eigen(a)).partialPivLu().solve(rhs);
    return std::vector<cxd>(x.data(), x.data() + x.size());
}

} // namespace tfl
