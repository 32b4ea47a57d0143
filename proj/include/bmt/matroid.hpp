#ifndef BMT_MATROID_HPP
#define BMT_MATROID_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bmt/gf2.hpp"

namespace bmt {

using gf2::Gf2Matrix;
using gf2::Word;

// A binary matroid on a labeled ground set, represented by one GF(2)
// column per element. The stored matrix is kept in reduced row echelon
// form (rows = rank), so bit-identical representations mean identical
// labeled matroids. Immutable after construction.
class BinaryMatroid {
public:
    BinaryMatroid() = default;

    // `matrix` has one column per label, in label order. The matrix is
    // row-reduced internally; rows may be any spanning description.
    BinaryMatroid(std::vector<std::string> labels, const Gf2Matrix& matrix);

    std::size_t size() const { return labels_.size(); }
    std::size_t rank() const { return mat_.rows; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const Gf2Matrix& matrix() const { return mat_; }

    bool has_label(const std::string& l) const { return index_.count(l) != 0; }
    std::size_t index_of(const std::string& l) const;

    Word full_mask() const { return size() == 64 ? ~Word(0) : ((Word(1) << size()) - 1); }
    Word mask_of(const std::vector<std::string>& ls) const;
    std::vector<std::string> labels_of(Word mask) const;

    std::size_t rank_of(Word subset) const;
    std::size_t rank_of(const std::vector<std::string>& ls) const { return rank_of(mask_of(ls)); }
    std::size_t corank_of(Word subset) const;  // r*(X) = |X| + r(E-X) - r(M)

    BinaryMatroid dual() const;
    BinaryMatroid delete_elements(Word subset) const;
    BinaryMatroid contract_elements(Word subset) const;
    BinaryMatroid delete_elements(const std::vector<std::string>& ls) const;
    BinaryMatroid contract_elements(const std::vector<std::string>& ls) const;
    // Restriction to the elements of `subset`, keeping label order.
    BinaryMatroid restrict(Word subset) const { return delete_elements(full_mask() & ~subset); }

    bool is_loop(std::size_t i) const { return mat_.column(i) == 0; }
    bool is_coloop(std::size_t i) const;
    bool is_simple() const;    // no loops, no parallel pairs
    bool is_cosimple() const;  // dual is simple

    bool is_circuit(Word subset) const;    // minimal dependent set
    bool is_cocircuit(Word subset) const;  // circuit of the dual
    bool is_triangle(Word subset) const;
    bool is_triad(Word subset) const;
    bool is_independent(Word subset) const;

    // All circuits (resp. cocircuits) of size <= max_size, as masks in
    // deterministic order (by size, then by lexicographic position
    // sequence). The default cap covers the largest set any configuration
    // template needs.
    std::vector<Word> circuits(std::size_t max_size = 6) const;
    std::vector<Word> cocircuits(std::size_t max_size = 6) const;

    Word closure(Word subset) const;
    Word coclosure(Word subset) const;
    Word full_closure(Word subset) const;  // least set closed in M and M*

    // Relabel element i to new_labels[i]; same matrix.
    BinaryMatroid relabeled(const std::vector<std::string>& new_labels) const;

    bool operator==(const BinaryMatroid& o) const {
        return labels_ == o.labels_ && mat_ == o.mat_;
    }

private:
    std::vector<std::string> labels_;
    Gf2Matrix mat_;  // RREF, rows = rank
    std::map<std::string, std::size_t> index_;
    mutable std::vector<Word> dual_rows_;  // lazily built dual representation

    void build_index();
    const std::vector<Word>& dual_matrix_rows() const;
};

// Subset of a matroid's ground set, held as a position mask.
struct SubsetView {
    const BinaryMatroid* owner = nullptr;
    Word members = 0;
};

std::vector<std::string> sorted_labels(const BinaryMatroid& m, Word mask);

}  // namespace bmt

#endif
