#include "stringyk/matrix.hpp"

#include <stdexcept>

namespace stringyk {

CycMatrix CycMatrix::identity(long n) {
    CycMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Cyclotomic& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

CycMatrix CycMatrix::scale(const Cyclotomic& s) const {
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycMatrix CycMatrix::pow(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix pow: not square");
    if (e < 0) throw std::invalid_argument("matrix pow: negative exponent");
    CycMatrix r = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
    CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (long k = 0; k < o.rows_; ++k)
                for (long l = 0; l < o.cols_; ++l)
                    if (!o.at(k, l).is_zero())
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

Cyclotomic CycMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: not square");
    Cyclotomic t;
    for (long i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool CycMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<long> row_reduce(CycMatrix& m) {
    std::vector<long> pivots;
    long rank = 0;
    for (long c = 0; c < m.cols() && rank < m.rows(); ++c) {
        long pr = -1;
        for (long r = rank; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(rank, j));
        Cyclotomic inv = m.at(rank, c).inverse();
        for (long j = c; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c).is_zero()) continue;
            Cyclotomic f = m.at(r, c);
            for (long j = c; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(rank, j);
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

} // namespace

long CycMatrix::rank() const {
    CycMatrix m = *this;
    return (long)row_reduce(m).size();
}

CycMatrix CycMatrix::column_space_basis() const {
    CycMatrix m = *this;
    std::vector<long> pivots = row_reduce(m);
    CycMatrix basis(rows_, (long)pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (long i = 0; i < rows_; ++i) basis.at(i, (long)k) = at(i, pivots[k]);
    return basis;
}

CycMatrix CycMatrix::kernel_basis() const {
    CycMatrix m = *this;
    std::vector<long> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycMatrix ker(cols_, (long)free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        long fc = free_cols[k];
        ker.at(fc, (long)k) = Cyclotomic(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            ker.at(pivots[r], (long)k) = -m.at((long)r, fc);
    }
    return ker;
}

CycMatrix CycMatrix::solve(const CycMatrix& B) const {
    if (B.rows() != rows_) throw std::invalid_argument("solve: shape mismatch");
    CycMatrix aug(rows_, cols_ + B.cols());
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (long j = 0; j < B.cols(); ++j) aug.at(i, cols_ + j) = B.at(i, j);
    }
    std::vector<long> pivots = row_reduce(aug);
    for (long p : pivots)
        if (p >= cols_) throw std::invalid_argument("solve: inconsistent system");
    CycMatrix X(cols_, B.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (long j = 0; j < B.cols(); ++j)
            X.at(pivots[r], j) = aug.at((long)r, cols_ + j);
    return X;
}

CycMatrix CycMatrix::left_inverse() const {
    CycMatrix ah = conj_transpose();
    CycMatrix gram = ah * *this;
    // Hermitian Gram matrix of a full-column-rank matrix is invertible.
    return gram.solve(ah);
}

} // namespace stringyk
