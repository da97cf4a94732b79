#pragma once

#include <vector>

#include "semican/rat.hpp"

namespace semican {

// Dense matrix over exact rationals. Row-major; shape may be 0 x k or k x 0.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat& operator+=(const Mat& o);
    Mat transpose() const;

    // Row reduction with full pivoting. Returns rank; the matrix is destroyed.
    int rank_destructive();
    int rank() const {
        Mat c(*this);
        return c.rank_destructive();
    }

    // Basis of the right kernel {v : M v = 0}, one column vector per basis element.
    std::vector<std::vector<Rat>> kernel_basis() const;

    // Inverse; throws on singular input.
    Mat inverse() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace semican
