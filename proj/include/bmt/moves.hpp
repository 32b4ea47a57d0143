#ifndef BMT_MOVES_HPP
#define BMT_MOVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bmt/connectivity.hpp"
#include "bmt/matroid.hpp"
#include "bmt/patterns.hpp"

namespace bmt::moves {

struct MoveReport {
    std::string move_name;
    std::vector<std::string> deleted;
    std::vector<std::string> contracted;
    BinaryMatroid result;
    // Absent when the result is degenerate (not simple/cosimple), with the
    // reason recorded below.
    std::optional<connectivity::ConnectivityClass> result_class;
    std::string result_class_note;
    std::optional<bool> n_minor_verdict;
};

// Every move validates its match first; an invalid match throws. When an N
// is supplied the report carries the N-minor verdict of the result.
MoveReport trim_bowtie_string(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                              const BinaryMatroid* n = nullptr);
MoveReport trim_open_rotor_chain(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                 const BinaryMatroid* n = nullptr);
MoveReport trim_bowtie_ring(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                            const BinaryMatroid* n = nullptr);
MoveReport trim_ladder_structure(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                 const BinaryMatroid* n = nullptr);
MoveReport enhanced_ladder_move(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                const BinaryMatroid* n = nullptr);
MoveReport mixed_ladder_move(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                             const BinaryMatroid* n = nullptr);
MoveReport delete_central_cocircuit(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                    const BinaryMatroid* n = nullptr);

MoveReport apply_move(const std::string& move_name, const BinaryMatroid& m,
                      const patterns::ConfigMatch& match, const BinaryMatroid* n = nullptr);

std::vector<std::string> move_names();

struct TheoremOutcome {
    int clause = 0;        // 1..4 for outcomes (i)..(iv)
    std::string side;      // "M" or "M*"
    std::string description;
    std::vector<std::string> deleted;
    std::vector<std::string> contracted;
};

struct TheoremOutcomeReport {
    bool hypotheses_ok = false;
    std::string failed_hypothesis;  // named when !hypotheses_ok
    std::vector<TheoremOutcome> outcomes;
    std::vector<std::string> coverage_notes;
    bool any_outcome() const { return !outcomes.empty(); }
};

// Theorem harness: verifies the hypotheses (|E(M)| >= 16, |E(N)| >= 7, both
// internally 4-connected, the bowtie ({1,2,3},{4,5,6},{2,3,4,5}) given by
// `bowtie` with M\4 (4,4,S)-connected having an N-minor and M\1,4 without),
// then searches outcomes (i)-(iv) for M and M*. The quick-win scan
// enumerates all removal multisets of size <= 3 plus augmented-4-wheel
// central-cocircuit deletions.
TheoremOutcomeReport check_theorem_outcome(const BinaryMatroid& m, const BinaryMatroid& n,
                                           const patterns::ConfigMatch& bowtie,
                                           std::size_t cap = 22);

}  // namespace bmt::moves

#endif
