#include "aq/linalg.hpp"

#include <algorithm>

namespace aq {

FpMatrix FpMatrix::operator*(const FpMatrix& o) const
{
    if (cols_ != o.rows_ || p_ != o.p_)
        invariant_error("matrix product shape/modulus mismatch");
    FpMatrix r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (!v)
                continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint64_t acc = r.at(i, j) + uint64_t(v) * o.at(k, j);
                r.at(i, j) = static_cast<uint32_t>(acc % p_);
            }
        }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        invariant_error("matrix sum shape mismatch");
    FpMatrix r(p_, rows_, cols_);
    Fp fp(p_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = fp.add(a_[i], o.a_[i]);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        invariant_error("matrix difference shape mismatch");
    FpMatrix r(p_, rows_, cols_);
    Fp fp(p_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = fp.sub(a_[i], o.a_[i]);
    return r;
}

FpMatrix FpMatrix::scaled(uint32_t c) const
{
    FpMatrix r(p_, rows_, cols_);
    Fp fp(p_);
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = fp.mul(a_[i], c % p_);
    return r;
}

bool FpMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

std::vector<uint32_t> FpMatrix::apply(const std::vector<uint32_t>& v) const
{
    if (v.size() != cols_)
        invariant_error("matrix apply dimension mismatch");
    std::vector<uint32_t> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < cols_; ++j)
            acc += uint64_t(at(i, j)) * v[j];
        r[i] = static_cast<uint32_t>(acc % p_);
    }
    return r;
}

FpMatrix FpMatrix::select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const
{
    FpMatrix r(p_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

Rref rref(const FpMatrix& m)
{
    Rref out{m, {}};
    FpMatrix& a = out.mat;
    Fp fp(m.p());
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && a.at(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        uint32_t iv = fp.inv(a.at(r, c));
        if (iv != 1)
            for (size_t j = c; j < m.cols(); ++j)
                a.at(r, j) = fp.mul(a.at(r, j), iv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            uint32_t f = a.at(i, c);
            if (!f)
                continue;
            for (size_t j = c; j < m.cols(); ++j)
                a.at(i, j) = fp.sub(a.at(i, j), fp.mul(f, a.at(r, j)));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

size_t rank(const FpMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return rref(m).pivot_cols.size();
}

std::vector<std::vector<uint32_t>> kernel_basis(const FpMatrix& m)
{
    std::vector<std::vector<uint32_t>> basis;
    if (m.cols() == 0)
        return basis;
    Rref e = rref(m);
    Fp fp(m.p());
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivot_cols)
        is_pivot[c] = true;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        std::vector<uint32_t> v(m.cols(), 0);
        v[c] = 1;
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = fp.neg(e.mat.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<uint32_t>> solve(const FpMatrix& m, const std::vector<uint32_t>& b)
{
    if (b.size() != m.rows())
        invariant_error("solve: rhs length mismatch");
    FpMatrix aug(m.p(), m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i] % m.p();
    }
    Rref e = rref(aug);
    std::vector<uint32_t> x(m.cols(), 0);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == m.cols())
            return std::nullopt; /* pivot in the rhs column: inconsistent */
        x[e.pivot_cols[i]] = e.mat.at(i, m.cols());
    }
    return x;
}

QuotientBasis quotient_basis(const std::vector<std::vector<uint32_t>>& sub, size_t ambient_dim,
                             uint32_t p)
{
    for (const auto& v : sub)
        if (v.size() != ambient_dim)
            invariant_error("quotient_basis: vector length != ambient_dim");
    FpMatrix m = FpMatrix::from_rows(p, sub, ambient_dim);
    Rref e = rref(m);
    Fp fp(p);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (size_t c : e.pivot_cols)
        is_pivot[c] = true;

    QuotientBasis q;
    for (size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c])
            q.basis_index.push_back(c);

    /* projection of e_c: free c maps to its own coordinate; pivot c maps to
     * minus the free part of its echelon row */
    q.projection = FpMatrix(p, q.basis_index.size(), ambient_dim);
    for (size_t qi = 0; qi < q.basis_index.size(); ++qi)
        q.projection.at(qi, q.basis_index[qi]) = 1;
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        size_t c = e.pivot_cols[i];
        for (size_t qi = 0; qi < q.basis_index.size(); ++qi)
            q.projection.at(qi, c) = fp.neg(e.mat.at(i, q.basis_index[qi]));
    }
    return q;
}

void RowSpan::reduce(std::vector<uint32_t>& v) const
{
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = v[leads_[i]];
        if (!f)
            continue;
        for (size_t j = leads_[i]; j < cols_; ++j)
            v[j] = fp_.sub(v[j], fp_.mul(f, rows_[i][j]));
    }
}

bool RowSpan::add(std::vector<uint32_t> v)
{
    if (v.size() != cols_)
        invariant_error("RowSpan: vector length mismatch");
    reduce(v);
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (v[j]) {
            lead = j;
            break;
        }
    if (lead == cols_)
        return false;
    uint32_t iv = fp_.inv(v[lead]);
    if (iv != 1)
        for (size_t j = lead; j < cols_; ++j)
            v[j] = fp_.mul(v[j], iv);
    /* keep previous rows reduced against the new one */
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = rows_[i][lead];
        if (!f)
            continue;
        for (size_t j = lead; j < cols_; ++j)
            rows_[i][j] = fp_.sub(rows_[i][j], fp_.mul(f, v[j]));
    }
    size_t pos = 0;
    while (pos < leads_.size() && leads_[pos] < lead)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    leads_.insert(leads_.begin() + pos, lead);
    return true;
}

std::vector<uint32_t> RowSpan::residue(std::vector<uint32_t> v) const
{
    reduce(v);
    return v;
}

bool RowSpan::contains(const std::vector<uint32_t>& v) const
{
    auto r = residue(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

} // namespace aq
