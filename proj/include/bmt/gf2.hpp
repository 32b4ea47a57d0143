#ifndef BMT_GF2_HPP
#define BMT_GF2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bmt::gf2 {

using Word = std::uint64_t;

// Dense bit-packed matrix over GF(2). One word per row; column j lives in
// bit j. Hard limit of 64 rows/columns keeps every subset of the ground
// set representable as a single-word mask.
struct Gf2Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Word> bits;  // bits[i] = row i

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t r, std::size_t c);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix zero(std::size_t r, std::size_t c);
    // rows given as 0/1 strings, one per row, all of length `cols`.
    static Gf2Matrix from_strings(const std::vector<std::string>& row_strings);

    bool get(std::size_t r, std::size_t c) const { return (bits[r] >> c) & 1u; }
    void set(std::size_t r, std::size_t c, bool v);

    Word col_mask() const { return cols == 64 ? ~Word(0) : ((Word(1) << cols) - 1); }

    // Column c gathered into a word (bit i = entry in row i).
    Word column(std::size_t c) const;

    Gf2Matrix transposed() const;

    bool operator==(const Gf2Matrix&) const = default;
};

std::size_t rank(const Gf2Matrix& a);

// Rank of the submatrix formed by the columns selected by `cols_mask`.
std::size_t column_space_rank(const Gf2Matrix& a, Word cols_mask);
std::size_t column_space_rank(const Gf2Matrix& a, const std::vector<std::size_t>& cols);

// Reduced row echelon form; pivots are the lowest-index nonzero columns.
// Returns the reduced matrix (zero rows dropped) and the pivot columns in
// increasing order.
struct Rref {
    Gf2Matrix mat;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(const Gf2Matrix& a);

// The unique subset of `basis_cols` whose GF(2) sum equals column
// `target_col`, or nullopt if the target is outside the span.
// `basis_cols` must be independent.
std::optional<std::vector<std::size_t>> solve_membership(const Gf2Matrix& a,
                                                         const std::vector<std::size_t>& basis_cols,
                                                         std::size_t target_col);

}  // namespace bmt::gf2

#endif
