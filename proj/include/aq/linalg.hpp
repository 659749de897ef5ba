#pragma once

#include "aq/fp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aq {

/* Dense matrix over F_p, row-major. All later modules block their operators
 * by (level, weight), so these matrices stay at desk scale. */
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(uint32_t p, size_t rows, size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
    }

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, int64_t v) { at(r, c) = Fp(p_).reduce(v); }

    static FpMatrix identity(uint32_t p, size_t n)
    {
        FpMatrix m(p, n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static FpMatrix from_rows(uint32_t p, const std::vector<std::vector<uint32_t>>& rows, size_t cols)
    {
        FpMatrix m(p, rows.size(), cols);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < cols; ++c)
                m.at(r, c) = rows[r][c] % p;
        return m;
    }

    bool operator==(const FpMatrix& o) const
    {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(uint32_t c) const;
    bool is_zero() const;

    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

    /* Submatrix picking the given rows/cols, in the given order. */
    FpMatrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

/* Reduced row echelon form. Pivoting is deterministic: columns are scanned
 * left to right and the first row with a nonzero entry is used, so every
 * basis and report downstream is reproducible bit for bit. */
struct Rref {
    FpMatrix mat;
    std::vector<size_t> pivot_cols; /* pivot_cols[i] = column of pivot in row i */
};

Rref rref(const FpMatrix& m);

size_t rank(const FpMatrix& m);

/* Basis of {v : Mv = 0}; one vector per free column, free var set to 1. */
std::vector<std::vector<uint32_t>> kernel_basis(const FpMatrix& m);

/* Solve Mx = b; pivot variables from elimination, free variables 0.
 * Empty optional when b is not in the image. */
std::optional<std::vector<uint32_t>> solve(const FpMatrix& m, const std::vector<uint32_t>& b);

/* Quotient of F_p^ambient by span(sub): a surjective projection whose kernel
 * is exactly the span, plus the indices of the ambient basis vectors that
 * descend to a basis of the quotient (the non-pivot coordinates). */
struct QuotientBasis {
    FpMatrix projection;             /* (ambient - rank) x ambient */
    std::vector<size_t> basis_index; /* ambient indices representing the quotient basis */
};

QuotientBasis quotient_basis(const std::vector<std::vector<uint32_t>>& sub, size_t ambient_dim,
                             uint32_t p);

/* Incremental row-space: add rows one at a time, reporting whether the rank
 * grew. Used for deterministic "extend a basis" choices. */
class RowSpan {
public:
    RowSpan(uint32_t p, size_t cols) : fp_(p), cols_(cols) {}
    size_t rank() const { return rows_.size(); }
    /* true if v was independent of the current span */
    bool add(std::vector<uint32_t> v);
    /* residue of v modulo the span (v unchanged if independent) */
    std::vector<uint32_t> residue(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;

private:
    void reduce(std::vector<uint32_t>& v) const;
    Fp fp_;
    size_t cols_;
    std::vector<std::vector<uint32_t>> rows_; /* echelonized, leading entry 1 */
    std::vector<size_t> leads_;
};

} // namespace aq
