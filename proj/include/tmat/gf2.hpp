#ifndef TMAT_GF2_HPP
#define TMAT_GF2_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tmat::gf2 {

/// Dense GF(2) matrix, rows packed into 64-bit words.
/// Bits past `cols()` in the last word of each row stay zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void flip(int r, int c);

    // row[dst] ^= row[src]
    void xor_rows(int dst, int src);
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;

    bool operator==(const BitMatrix& other) const;

    // Optional opaque column identifiers; empty when unused.
    std::vector<std::string> col_labels;

private:
    int rows_ = 0;
    int cols_ = 0;
    int stride_ = 0; // words per row
    std::vector<std::uint64_t> words_;

    void check_indices(int r, int c) const;
};

struct RowReduceResult {
    BitMatrix reduced;       // reduced row-echelon form
    std::vector<int> pivots; // strictly increasing pivot columns
};

/// Reduced row-echelon form over GF(2); does not mutate the input.
RowReduceResult row_reduce(const BitMatrix& m);

/// Dimension of the GF(2) span of the selected columns.
/// Extracts the columns into a fresh matrix and eliminates; throws
/// input_error on an out-of-range index.
int rank_of_columns(const BitMatrix& m, std::span<const int> subset);

/// Same, with the subset given as a bitmask over the first 64 columns.
int rank_of_columns(const BitMatrix& m, std::uint64_t mask);

/// Rank of the whole matrix.
int rank(const BitMatrix& m);

/// Rank of the principal submatrix on rows/cols selected by `mask`
/// (m must be square). Used by induced-subgraph nullity sums.
int rank_of_principal_submatrix(const BitMatrix& m, std::uint64_t mask);

} // namespace tmat::gf2

#endif
