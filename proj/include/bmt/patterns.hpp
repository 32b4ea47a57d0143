#ifndef BMT_PATTERNS_HPP
#define BMT_PATTERNS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt::patterns {

// A declarative configuration: variables, the circuits/cocircuits their
// images must form, distinctness requirements, permitted identifications,
// and declared automorphisms (matches are reported up to these).
//
// Variables appearing in no required set are "free": they document parts
// of a figure the captions do not pin down. The matcher leaves them
// unbound unless a partial binding supplies them.
struct ConfigTemplate {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::vector<int>> circuits;
    std::vector<std::vector<int>> cocircuits;
    std::vector<std::vector<int>> distinct_groups;
    std::vector<std::pair<int, int>> may_equal;
    std::vector<std::vector<int>> automorphisms;  // full permutations, images by var id
    bool figure_reconstructed = false;
    std::map<std::string, std::string> info;  // trim list, arrow edge, params

    int var_id(const std::string& v) const;
    bool is_free(int v) const;
    std::vector<std::string> free_vars() const;

    // Throws on inconsistency: a may_equal pair inside one required set, a
    // constrained variable missing from every set it should support, bad
    // automorphisms.
    void validate() const;
};

struct ConfigMatch {
    ConfigTemplate tmpl;
    std::map<std::string, std::string> assignment;  // variable -> element label

    std::optional<std::string> at(const std::string& var) const;
};

// Re-check a match against the matroid: required circuits are circuits,
// required cocircuits are cocircuits, distinctness holds. Free or unbound
// variables are ignored. Returns a reason on failure.
std::optional<std::string> revalidate(const BinaryMatroid& m, const ConfigMatch& match);

// Backtracking matcher over the enumerated small circuits/cocircuits of M.
// Deterministic output order; matches are deduplicated modulo the declared
// automorphism group. limit = 0 means exhaustive. `partial` pre-binds
// variables (required for free variables that a caller wants bound).
std::vector<ConfigMatch> match(const BinaryMatroid& m, const ConfigTemplate& t, std::size_t limit,
                               const std::map<std::string, std::string>& partial = {});

// Built-in templates. Parameters (when used): n, k, variant.
//   bowtie, bowtie_string(n>=1), bowtie_ring(n>=3 triangles), quasi_rotor,
//   rotor_chain(n>=2), open_rotor_chain(n>=3 dashed), augmented_4_wheel,
//   fig8_diamond, fig9_rainbow(k>=2), open_quartic_ladder(k>=3),
//   ladder_structure(n>=2, variant in {a1,a2,b1,b2}),
//   enhanced_quartic_ladder(k, variant in {a,b,c}; k>=0/1/2).
ConfigTemplate builtin(const std::string& name,
                       const std::map<std::string, std::string>& params = {});

std::vector<std::string> builtin_names();

// Template file grammar (bit-exact; see README): sections VARIABLES /
// CIRCUITS / COCIRCUITS / DISTINCT / MAY_EQUAL / AUTOMORPHISMS plus the
// optional NAME and INFO sections; '#' starts a comment; blank lines
// ignored.
ConfigTemplate parse_template(const std::string& text);
std::string format_template(const ConfigTemplate& t);

// Good-bowtie test: an element d of the matched 4-cocircuit with M\d
// (4,4,S)-connected and carrying an N-minor, if one exists.
std::optional<std::string> is_good_bowtie(const BinaryMatroid& m, const ConfigMatch& bowtie,
                                          const BinaryMatroid& n);

struct HypothesisViiCase {
    std::string side;  // "M" or "M*"
    std::map<std::string, std::string> assignment;
    bool premise_holds = false;   // M1\c0 (4,4,S)-connected and N1 <= M1\c0,c1
    bool conclusion_holds = false;  // M1\c1 (4,4,S)-connected
};

struct HypothesisViiReport {
    std::vector<HypothesisViiCase> cases;
    std::size_t violations() const;
    bool vacuous() const { return cases.empty(); }
};

// Scans all bowties of M and M*; for each with M1\c0 (4,4,S)-connected and
// M1\c0,c1 having an N1-minor, records whether M1\c1 is (4,4,S)-connected.
HypothesisViiReport check_hypothesis_vii(const BinaryMatroid& m, const BinaryMatroid& n,
                                         std::size_t cap = 22);

}  // namespace bmt::patterns

#endif
