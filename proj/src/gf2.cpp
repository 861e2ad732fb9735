#include "tmat/gf2.hpp"

#include <bit>

#include "tmat/errors.hpp"

namespace tmat::gf2 {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw input_error("BitMatrix: negative dimension");
    stride_ = (cols + 63) / 64;
    if (stride_ == 0) stride_ = 1;
    words_.assign(static_cast<std::size_t>(rows) * stride_, 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::check_indices(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw input_error("BitMatrix: index out of range");
}

bool BitMatrix::get(int r, int c) const {
    check_indices(r, c);
    return (words_[static_cast<std::size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(int r, int c, bool value) {
    check_indices(r, c);
    std::uint64_t& w = words_[static_cast<std::size_t>(r) * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

void BitMatrix::flip(int r, int c) { set(r, c, !get(r, c)); }

void BitMatrix::xor_rows(int dst, int src) {
    check_indices(dst, 0);
    check_indices(src, 0);
    std::uint64_t* d = &words_[static_cast<std::size_t>(dst) * stride_];
    const std::uint64_t* s = &words_[static_cast<std::size_t>(src) * stride_];
    for (int w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    check_indices(a, 0);
    check_indices(b, 0);
    std::uint64_t* pa = &words_[static_cast<std::size_t>(a) * stride_];
    std::uint64_t* pb = &words_[static_cast<std::size_t>(b) * stride_];
    for (int w = 0; w < stride_; ++w) std::swap(pa[w], pb[w]);
}

bool BitMatrix::row_is_zero(int r) const {
    check_indices(r, 0);
    const std::uint64_t* p = &words_[static_cast<std::size_t>(r) * stride_];
    for (int w = 0; w < stride_; ++w)
        if (p[w]) return false;
    return true;
}

bool BitMatrix::operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
}

RowReduceResult row_reduce(const BitMatrix& m) {
    RowReduceResult result{m, {}};
    BitMatrix& a = result.reduced;
    int pivot_row = 0;
    for (int c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        int r = pivot_row;
        while (r < a.rows() && !a.get(r, c)) ++r;
        if (r == a.rows()) continue;
        a.swap_rows(pivot_row, r);
        for (int i = 0; i < a.rows(); ++i)
            if (i != pivot_row && a.get(i, c)) a.xor_rows(i, pivot_row);
        result.pivots.push_back(c);
        ++pivot_row;
    }
    return result;
}

int rank_of_columns(const BitMatrix& m, std::span<const int> subset) {
    for (int c : subset)
        if (c < 0 || c >= m.cols()) throw input_error("rank_of_columns: column index out of range");
    // Each selected column becomes a word of row-bits; eliminate by leading bit.
    // Requires rows <= 64, which holds everywhere at desk scale; fall back to
    // full row reduction otherwise.
    if (m.rows() <= 64) {
        std::vector<std::uint64_t> basis(static_cast<std::size_t>(m.rows()), 0);
        int r = 0;
        for (int c : subset) {
            std::uint64_t v = 0;
            for (int i = 0; i < m.rows(); ++i)
                if (m.get(i, c)) v |= std::uint64_t{1} << i;
            while (v) {
                const int lead = std::countr_zero(v);
                if (basis[lead] == 0) {
                    basis[lead] = v;
                    ++r;
                    break;
                }
                v ^= basis[lead];
            }
        }
        return r;
    }
    BitMatrix sub(m.rows(), static_cast<int>(subset.size()));
    for (int j = 0; j < static_cast<int>(subset.size()); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m.get(i, subset[j])) sub.set(i, j, true);
    return static_cast<int>(row_reduce(sub).pivots.size());
}

int rank_of_columns(const BitMatrix& m, std::uint64_t mask) {
    std::vector<int> subset;
    while (mask) {
        subset.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return rank_of_columns(m, subset);
}

int rank(const BitMatrix& m) {
    std::vector<int> all(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) all[static_cast<std::size_t>(c)] = c;
    return rank_of_columns(m, all);
}

int rank_of_principal_submatrix(const BitMatrix& m, std::uint64_t mask) {
    if (m.rows() != m.cols()) throw input_error("rank_of_principal_submatrix: matrix not square");
    if (m.rows() > 64) throw input_error("rank_of_principal_submatrix: more than 64 rows");
    std::vector<std::uint64_t> basis(static_cast<std::size_t>(m.rows()), 0);
    int r = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
        const int c = std::countr_zero(bits);
        std::uint64_t v = 0;
        for (std::uint64_t rows = mask; rows; rows &= rows - 1) {
            const int i = std::countr_zero(rows);
            if (m.get(i, c)) v |= std::uint64_t{1} << i;
        }
        while (v) {
            const int lead = std::countr_zero(v);
            if (basis[lead] == 0) {
                basis[lead] = v;
                ++r;
                break;
            }
            v ^= basis[lead];
        }
    }
    return r;
}

} // namespace tmat::gf2
