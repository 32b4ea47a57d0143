#include "bmt/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bmt::gf2 {

Gf2Matrix::Gf2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r, 0) {
    if (r > 64 || c > 64) throw std::invalid_argument("Gf2Matrix: at most 64 rows and columns");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.bits[i] = Word(1) << i;
    return m;
}

Gf2Matrix Gf2Matrix::zero(std::size_t r, std::size_t c) { return Gf2Matrix(r, c); }

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& row_strings) {
    std::size_t r = row_strings.size();
    std::size_t c = r == 0 ? 0 : row_strings[0].size();
    Gf2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (row_strings[i].size() != c)
            throw std::invalid_argument("Gf2Matrix::from_strings: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            char ch = row_strings[i][j];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("Gf2Matrix::from_strings: entries must be 0/1");
            if (ch == '1') m.bits[i] |= Word(1) << j;
        }
    }
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    if (v)
        bits[r] |= Word(1) << c;
    else
        bits[r] &= ~(Word(1) << c);
}

Word Gf2Matrix::column(std::size_t c) const {
    Word out = 0;
    for (std::size_t i = 0; i < rows; ++i) out |= Word(get(i, c)) << i;
    return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (get(i, j)) t.bits[j] |= Word(1) << i;
    return t;
}

std::size_t rank(const Gf2Matrix& a) {
    std::vector<Word> basis;  // rows with distinct leading bits, kept reduced
    basis.reserve(a.rows);
    for (Word row : a.bits) {
        for (Word b : basis) {
            Word lead = b & -b;
            if (row & lead) row ^= b;
        }
        if (row) basis.push_back(row);
    }
    return basis.size();
}

std::size_t column_space_rank(const Gf2Matrix& a, Word cols_mask) {
    cols_mask &= a.col_mask();
    std::vector<Word> basis;
    for (Word row : a.bits) {
        Word r = row & cols_mask;
        for (Word b : basis) {
            Word lead = b & -b;
            if (r & lead) r ^= b;
        }
        if (r) basis.push_back(r);
    }
    return basis.size();
}

std::size_t column_space_rank(const Gf2Matrix& a, const std::vector<std::size_t>& cols) {
    Word mask = 0;
    for (std::size_t c : cols) {
        if (c >= a.cols) throw std::out_of_range("column_space_rank: column index out of range");
        mask |= Word(1) << c;
    }
    return column_space_rank(a, mask);
}

Rref rref(const Gf2Matrix& a) {
    std::vector<Word> rows(a.bits);
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols && next < rows.size(); ++c) {
        Word bit = Word(1) << c;
        std::size_t p = next;
        while (p < rows.size() && !(rows[p] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[next], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && (rows[i] & bit)) rows[i] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    Gf2Matrix out(pivots.size(), a.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.bits[i] = rows[i];
    return {std::move(out), std::move(pivots)};
}

std::optional<std::vector<std::size_t>> solve_membership(const Gf2Matrix& a,
                                                         const std::vector<std::size_t>& basis_cols,
                                                         std::size_t target_col) {
    if (target_col >= a.cols) throw std::out_of_range("solve_membership: target column out of range");
    for (std::size_t c : basis_cols)
        if (c >= a.cols) throw std::out_of_range("solve_membership: basis column out of range");
    if (column_space_rank(a, basis_cols) != basis_cols.size())
        throw std::invalid_argument("solve_membership: basis columns are dependent");

    // Reduce the target against the basis columns, tracking which basis
    // columns were used. Columns live in "row space" words: bit i = row i.
    std::vector<Word> cols;
    cols.reserve(basis_cols.size());
    for (std::size_t c : basis_cols) cols.push_back(a.column(c));

    struct Entry {
        Word vec;
        Word combo;  // bit k = basis_cols[k] participates
    };
    std::vector<Entry> reduced;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Word v = cols[k], combo = Word(1) << k;
        for (const Entry& e : reduced) {
            Word lead = e.vec & -e.vec;
            if (v & lead) {
                v ^= e.vec;
                combo ^= e.combo;
            }
        }
        reduced.push_back({v, combo});  // v != 0 since basis is independent
    }
    Word t = a.column(target_col), combo = 0;
    for (const Entry& e : reduced) {
        Word lead = e.vec & -e.vec;
        if (t & lead) {
            t ^= e.vec;
            combo ^= e.combo;
        }
    }
    if (t) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis_cols.size(); ++k)
        if ((combo >> k) & 1u) out.push_back(basis_cols[k]);
    return out;
}

}  // namespace bmt::gf2
