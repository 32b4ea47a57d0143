#include "bmt/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bmt {

namespace {

// Combinations of {0..n-1} of size k, lexicographic, each delivered as a mask.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Word mask = 0;
        for (std::size_t i : idx) mask |= Word(1) << i;
        f(mask);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

BinaryMatroid::BinaryMatroid(std::vector<std::string> labels, const Gf2Matrix& matrix)
    : labels_(std::move(labels)) {
    if (labels_.size() > 64)
        throw std::invalid_argument("BinaryMatroid: ground sets larger than 64 are not supported");
    if (matrix.cols != labels_.size())
        throw std::invalid_argument("BinaryMatroid: one column per element required");
    mat_ = gf2::rref(matrix).mat;
    build_index();
}

void BinaryMatroid::build_index() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("BinaryMatroid: duplicate label '" + labels_[i] + "'");
    }
}

std::size_t BinaryMatroid::index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::invalid_argument("BinaryMatroid: unknown label '" + l + "'");
    return it->second;
}

Word BinaryMatroid::mask_of(const std::vector<std::string>& ls) const {
    Word m = 0;
    for (const auto& l : ls) m |= Word(1) << index_of(l);
    return m;
}

std::vector<std::string> BinaryMatroid::labels_of(Word mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
        if ((mask >> i) & 1u) out.push_back(labels_[i]);
    return out;
}

std::size_t BinaryMatroid::rank_of(Word subset) const {
    if (subset & ~full_mask()) throw std::invalid_argument("rank_of: subset not within ground set");
    return gf2::column_space_rank(mat_, subset);
}

std::size_t BinaryMatroid::corank_of(Word subset) const {
    subset &= full_mask();
    return std::size_t(std::popcount(subset)) + rank_of(full_mask() & ~subset) - rank();
}

const std::vector<Word>& BinaryMatroid::dual_matrix_rows() const {
    if (dual_rows_.empty() && size() > rank()) {
        // Standard form: pivots P give [I | D]; dual rows indexed by the
        // non-pivot columns q, with row_q = e_q + sum over pivots p_i of
        // D[i][q] e_{p_i}.
        auto rr = gf2::rref(mat_);
        std::vector<bool> is_pivot(size(), false);
        for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
        for (std::size_t q = 0; q < size(); ++q) {
            if (is_pivot[q]) continue;
            Word row = Word(1) << q;
            for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
                if (rr.mat.get(i, q)) row |= Word(1) << rr.pivot_cols[i];
            dual_rows_.push_back(row);
        }
    }
    return dual_rows_;
}

BinaryMatroid BinaryMatroid::dual() const {
    Gf2Matrix d(size() - rank(), size());
    d.bits = dual_matrix_rows();
    d.rows = d.bits.size();
    return BinaryMatroid(labels_, d);
}

BinaryMatroid BinaryMatroid::delete_elements(Word subset) const {
    if (subset & ~full_mask())
        throw std::invalid_argument("delete: subset not within ground set");
    std::vector<std::string> keep;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < size(); ++i)
        if (!((subset >> i) & 1u)) {
            keep.push_back(labels_[i]);
            cols.push_back(i);
        }
    Gf2Matrix sub(mat_.rows, keep.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < mat_.rows; ++i)
            if (mat_.get(i, cols[j])) sub.bits[i] |= Word(1) << j;
    return BinaryMatroid(std::move(keep), sub);
}

BinaryMatroid BinaryMatroid::contract_elements(Word subset) const {
    if (subset & ~full_mask())
        throw std::invalid_argument("contract: subset not within ground set");
    if (subset == 0) return *this;
    // Pivot a maximal independent subset of `subset` into unit position and
    // drop those rows; dependent members of `subset` (loops there) just get
    // deleted, which matches contracting them.
    std::vector<Word> rows(mat_.bits);
    std::vector<std::size_t> pivot_rows;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t c = 0; c < size(); ++c) {
        if (!((subset >> c) & 1u)) continue;
        Word bit = Word(1) << c;
        std::size_t p = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && (rows[i] & bit)) {
                p = i;
                break;
            }
        if (p == rows.size()) continue;  // dependent on earlier picks
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != p && (rows[i] & bit)) rows[i] ^= rows[p];
        used[p] = true;
    }
    std::vector<std::string> keep;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < size(); ++i)
        if (!((subset >> i) & 1u)) {
            keep.push_back(labels_[i]);
            cols.push_back(i);
        }
    std::vector<Word> kept_rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i]) kept_rows.push_back(rows[i]);
    Gf2Matrix sub(kept_rows.size(), keep.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < kept_rows.size(); ++i)
            if ((kept_rows[i] >> cols[j]) & 1u) sub.bits[i] |= Word(1) << j;
    return BinaryMatroid(std::move(keep), sub);
}

BinaryMatroid BinaryMatroid::delete_elements(const std::vector<std::string>& ls) const {
    return delete_elements(mask_of(ls));
}

BinaryMatroid BinaryMatroid::contract_elements(const std::vector<std::string>& ls) const {
    return contract_elements(mask_of(ls));
}

bool BinaryMatroid::is_coloop(std::size_t i) const {
    return rank_of(full_mask() & ~(Word(1) << i)) < rank();
}

bool BinaryMatroid::is_simple() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (is_loop(i)) return false;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (mat_.column(i) == mat_.column(j)) return false;
    return true;
}

bool BinaryMatroid::is_cosimple() const {
    // No cocircuits of size 1 or 2: no coloops and no series pairs.
    for (std::size_t i = 0; i < size(); ++i)
        if (is_coloop(i)) return false;
    Word full = full_mask();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) {
            Word pair = (Word(1) << i) | (Word(1) << j);
            // with no coloops, a rank drop on removing the pair means the
            // pair itself is a 2-cocircuit
            if (rank_of(full & ~pair) < rank()) return false;
        }
    return true;
}

bool BinaryMatroid::is_independent(Word subset) const {
    return rank_of(subset) == std::size_t(std::popcount(subset));
}

bool BinaryMatroid::is_circuit(Word subset) const {
    int k = std::popcount(subset);
    if (k == 0) return false;
    if (rank_of(subset) != std::size_t(k - 1)) return false;
    Word rest = subset;
    while (rest) {
        Word e = rest & -rest;
        rest ^= e;
        if (!is_independent(subset ^ e)) return false;
    }
    return true;
}

bool BinaryMatroid::is_cocircuit(Word subset) const {
    // C* is a cocircuit iff it is minimal with r(E - C*) < r(M).
    int k = std::popcount(subset);
    if (k == 0) return false;
    Word full = full_mask();
    if (rank_of(full & ~subset) != rank() - 1) return false;
    Word rest = subset;
    while (rest) {
        Word e = rest & -rest;
        rest ^= e;
        if (rank_of(full & ~(subset ^ e)) != rank()) return false;
    }
    return true;
}

bool BinaryMatroid::is_triangle(Word subset) const {
    return std::popcount(subset) == 3 && is_circuit(subset);
}

bool BinaryMatroid::is_triad(Word subset) const {
    return std::popcount(subset) == 3 && is_cocircuit(subset);
}

std::vector<Word> BinaryMatroid::circuits(std::size_t max_size) const {
    if (max_size > size()) max_size = size();
    std::vector<Word> out;
    for (std::size_t k = 1; k <= max_size; ++k)
        for_each_combination(size(), k, [&](Word mask) {
            if (is_circuit(mask)) out.push_back(mask);
        });
    return out;
}

std::vector<Word> BinaryMatroid::cocircuits(std::size_t max_size) const {
    if (max_size > size()) max_size = size();
    std::vector<Word> out;
    for (std::size_t k = 1; k <= max_size; ++k)
        for_each_combination(size(), k, [&](Word mask) {
            if (is_cocircuit(mask)) out.push_back(mask);
        });
    return out;
}

Word BinaryMatroid::closure(Word subset) const {
    std::size_t r = rank_of(subset);
    Word cl = subset;
    for (std::size_t i = 0; i < size(); ++i) {
        Word e = Word(1) << i;
        if (cl & e) continue;
        if (rank_of(subset | e) == r) cl |= e;
    }
    return cl;
}

Word BinaryMatroid::coclosure(Word subset) const {
    // cl*(X) = {e : r(E-X-e) < r(E-X)} union X, computed on the primal.
    Word full = full_mask();
    Word comp = full & ~subset;
    std::size_t rc = rank_of(comp);
    Word cl = subset;
    for (std::size_t i = 0; i < size(); ++i) {
        Word e = Word(1) << i;
        if (cl & e) continue;
        if (rank_of(comp & ~e) < rc) cl |= e;
    }
    return cl;
}

Word BinaryMatroid::full_closure(Word subset) const {
    Word cur = subset;
    while (true) {
        Word next = coclosure(closure(cur));
        if (next == cur) return cur;
        cur = next;
    }
}

BinaryMatroid BinaryMatroid::relabeled(const std::vector<std::string>& new_labels) const {
    if (new_labels.size() != size())
        throw std::invalid_argument("relabeled: label count mismatch");
    return BinaryMatroid(new_labels, mat_);
}

std::vector<std::string> sorted_labels(const BinaryMatroid& m, Word mask) {
    auto ls = m.labels_of(mask);
    std::sort(ls.begin(), ls.end());
    return ls;
}

}  // namespace bmt
