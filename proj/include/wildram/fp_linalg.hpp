#pragma once

#include <cstdint>
#include <vector>

namespace wildram {

/// Dense matrix over F_p, row-major. Sized for the cohomology windows
/// (a few hundred rows); entries are canonical residues.
class FpMat {
public:
    FpMat() = default;
    FpMat(long rows, long cols, std::int64_t p);
    static FpMat eye(long n, std::int64_t p);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    std::int64_t modulus() const { return p_; }

    std::int64_t& at(long i, long j) { return a_[i * cols_ + j]; }
    std::int64_t at(long i, long j) const { return a_[i * cols_ + j]; }

    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat operator*(const FpMat& o) const;
    FpMat pow(long e) const;
    bool operator==(const FpMat& o) const;
    bool is_zero() const;

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    long rank() const;
    /// Basis of the right kernel, as columns stacked into a matrix (cols = nullity).
    FpMat kernel_basis() const;
    /// Columns of this matrix joined with columns of o.
    FpMat augment_cols(const FpMat& o) const;
    static FpMat from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::int64_t p);

private:
    long rows_ = 0, cols_ = 0;
    std::int64_t p_ = 0;
    std::vector<std::int64_t> a_;
};

/// rank(span(base_cols) + span(extra_cols)) - rank(span(base_cols)):
/// how many of the extra columns are independent modulo the base span.
long rank_increase(const FpMat& base_cols, const FpMat& extra_cols);

} // namespace wildram
