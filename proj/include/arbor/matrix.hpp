#pragma once

#include <cstddef>
#include <vector>

#include "arbor/numeric.hpp"

namespace arbor {

// Dense matrix of big integers. Row-major. Entries are unbounded; all
// operations are exact. Zero-dimensional matrices are permitted so that
// reduced minors of 1x1 Laplacians work out (det of the empty matrix is 1).
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix all_ones(int n) {
        IntMatrix m(n, n);
        for (auto& x : m.e_) x = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
        return t;
    }

    // Submatrix with row i and column j removed.
    IntMatrix without_row_col(int i, int j) const {
        IntMatrix s(rows_ - 1, cols_ - 1);
        for (int r = 0, sr = 0; r < rows_; r++) {
            if (r == i) continue;
            for (int c = 0, sc = 0; c < cols_; c++) {
                if (c == j) continue;
                s.at(sr, sc) = at(r, c);
                sc++;
            }
            sr++;
        }
        return s;
    }

    // Principal submatrix M_{S,S}; idx must be strictly increasing.
    IntMatrix principal_submatrix(const std::vector<int>& idx) const {
        int k = static_cast<int>(idx.size());
        IntMatrix s(k, k);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) s.at(i, j) = at(idx[i], idx[j]);
        return s;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); i++) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); i++) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend IntMatrix operator*(const BigInt& c, const IntMatrix& a) {
        IntMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.e_.size(); i++) r.e_[i] = c * a.e_[i];
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; i++)
            for (int k = 0; k < a.cols_; k++) {
                const BigInt& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; j++) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> e_;
};

}  // namespace arbor
