#pragma once

#include <vector>

#include "stringyk/cyclotomic.hpp"

namespace stringyk {

// Dense matrix over a cyclotomic field, row-major.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CycMatrix identity(long n);
    static CycMatrix zero(long rows, long cols) { return CycMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Cyclotomic& at(long r, long c) { return a_[r * cols_ + c]; }
    const Cyclotomic& at(long r, long c) const { return a_[r * cols_ + c]; }

    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix scale(const Cyclotomic& s) const;
    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix conj_transpose() const;
    CycMatrix pow(long e) const;
    CycMatrix kron(const CycMatrix& o) const;
    Cyclotomic trace() const;
    bool is_zero() const;

    long rank() const;
    // Columns spanning the column space (a basis of the image).
    CycMatrix column_space_basis() const;
    // Basis of the right kernel, as columns.
    CycMatrix kernel_basis() const;
    // Solve (*this) X = B; throws if inconsistent.
    CycMatrix solve(const CycMatrix& B) const;
    // Left inverse for full column rank: (A^H A)^{-1} A^H.
    CycMatrix left_inverse() const;

private:
    long rows_, cols_;
    std::vector<Cyclotomic> a_;
};

} // namespace stringyk
