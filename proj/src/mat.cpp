#include "semican/mat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace semican {

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+=: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Pivot score for full pivoting on exact rationals: prefer short entries.
size_t entry_size(const Rat& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

int Mat::rank_destructive() {
    int rank = 0;
    std::vector<bool> col_done(cols_, false);
    while (rank < rows_) {
        // full pivoting: search the remaining block for the shortest nonzero entry
        int pi = -1, pj = -1;
        size_t best = 0;
        for (int i = rank; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (col_done[j] || at(i, j) == 0) continue;
                size_t s = entry_size(at(i, j));
                if (pi < 0 || s < best) {
                    pi = i;
                    pj = j;
                    best = s;
                }
            }
        if (pi < 0) break;
        if (pi != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(pi, j), at(rank, j));
        Rat inv = 1 / at(rank, pj);
        for (int j = 0; j < cols_; ++j) at(rank, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == rank || at(i, pj) == 0) continue;
            Rat f = at(i, pj);
            for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(rank, j);
        }
        col_done[pj] = true;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> Mat::kernel_basis() const {
    Mat m(*this);
    // standard column-order elimination so free columns are well-defined
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        size_t best = 0;
        for (int i = r; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            size_t s = entry_size(m.at(i, c));
            if (p < 0 || s < best) {
                p = i;
                best = s;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = 0; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_);
        v[f] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (aug.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("Mat::inverse: singular");
        if (p != r)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(r, j));
        Rat inv = 1 / aug.at(r, c);
        for (int j = 0; j < 2 * n; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

}  // namespace semican
