#include "wildram/fp_linalg.hpp"
#include "wildram/errors.hpp"
#include "wildram/numeric.hpp"

#include <algorithm>

namespace wildram {

FpMat::FpMat(long rows, long cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {}

FpMat FpMat::eye(long n, std::int64_t p) {
    FpMat m(n, n, p);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::operator+(const FpMat& o) const {
    FpMat r(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
    FpMat r(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ((a_[i] - o.a_[i]) % p_ + p_) % p_;
    return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix shape mismatch");
    FpMat r(rows_, o.cols_, p_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            std::int64_t aik = at(i, k);
            if (aik == 0) continue;
            const std::int64_t* src = &o.a_[k * o.cols_];
            std::int64_t* dst = &r.a_[i * o.cols_];
            for (long j = 0; j < o.cols_; ++j) dst[j] = (dst[j] + aik * src[j]) % p_;
        }
    return r;
}

FpMat FpMat::pow(long e) const {
    FpMat r = eye(rows_, p_);
    FpMat b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool FpMat::operator==(const FpMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool FpMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::int64_t> FpMat::apply(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> r(rows_, 0);
    for (long i = 0; i < rows_; ++i) {
        std::int64_t acc = 0;
        for (long j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[j]) % p_;
        r[i] = acc;
    }
    return r;
}

long FpMat::rank() const {
    auto a = a_;
    long rank = 0, row = 0;
    for (long col = 0; col < cols_ && row < rows_; ++col) {
        long piv = -1;
        for (long i = row; i < rows_; ++i)
            if (a[i * cols_ + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (long j = col; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[row * cols_ + j]);
        std::int64_t inv = inv_mod(a[row * cols_ + col], p_);
        for (long i = row + 1; i < rows_; ++i) {
            std::int64_t f = a[i * cols_ + col] * inv % p_;
            if (f == 0) continue;
            for (long j = col; j < cols_; ++j)
                a[i * cols_ + j] = ((a[i * cols_ + j] - f * a[row * cols_ + j]) % p_ + p_) % p_;
        }
        ++row;
        ++rank;
    }
    return rank;
}

FpMat FpMat::kernel_basis() const {
    // Solve A x = 0 by row-reducing A and reading free columns.
    auto a = a_;
    std::vector<long> pivot_col_of_row;
    long rank = 0;
    long row = 0;
    std::vector<long> pivot_cols;
    for (long col = 0; col < cols_ && row < rows_; ++col) {
        long piv = -1;
        for (long i = row; i < rows_; ++i)
            if (a[i * cols_ + col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (long j = 0; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[row * cols_ + j]);
        std::int64_t inv = inv_mod(a[row * cols_ + col], p_);
        for (long j = 0; j < cols_; ++j) a[row * cols_ + j] = a[row * cols_ + j] * inv % p_;
        for (long i = 0; i < rows_; ++i) {
            if (i == row) continue;
            std::int64_t f = a[i * cols_ + col];
            if (f == 0) continue;
            for (long j = 0; j < cols_; ++j)
                a[i * cols_ + j] = ((a[i * cols_ + j] - f * a[row * cols_ + j]) % p_ + p_) % p_;
        }
        pivot_cols.push_back(col);
        ++row;
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (long c : pivot_cols) is_pivot[c] = true;
    FpMat ker(cols_, cols_ - rank, p_);
    long kcol = 0;
    for (long free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        ker.at(free, kcol) = 1;
        for (long r2 = 0; r2 < rank; ++r2) {
            std::int64_t v = a[r2 * cols_ + free];
            if (v != 0) ker.at(pivot_cols[r2], kcol) = (p_ - v) % p_;
        }
        ++kcol;
    }
    return ker;
}

FpMat FpMat::augment_cols(const FpMat& o) const {
    if (rows_ != o.rows_) throw internal_error("augment shape mismatch");
    FpMat r(rows_, cols_ + o.cols_, p_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

FpMat FpMat::from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::int64_t p) {
    if (cols.empty()) return FpMat(0, 0, p);
    FpMat r(static_cast<long>(cols[0].size()), static_cast<long>(cols.size()), p);
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i)
            r.at(static_cast<long>(i), static_cast<long>(j)) = ((cols[j][i] % p) + p) % p;
    return r;
}

long rank_increase(const FpMat& base_cols, const FpMat& extra_cols) {
    long base_rank = base_cols.cols() == 0 ? 0 : base_cols.rank();
    return base_cols.augment_cols(extra_cols).rank() - base_rank;
}

} // namespace wildram
