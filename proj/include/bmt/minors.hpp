#ifndef BMT_MINORS_HPP
#define BMT_MINORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt::minors {

// Key equal across isomorphic binary matroids and distinct otherwise:
// the lexicographically least column-major serialization of the reduced
// representation over all column orders compatible with the element
// invariant classes. Cap 24 elements.
std::string canonical_form(const BinaryMatroid& m, std::size_t cap = 24);

struct IsoCertificate {
    // mapping[i] = (label in M, label in N)
    std::vector<std::pair<std::string, std::string>> mapping;
};

std::optional<IsoCertificate> is_isomorphic(const BinaryMatroid& m, const BinaryMatroid& n,
                                            std::size_t cap = 24);

struct MinorWitness {
    std::vector<std::string> deleted;
    std::vector<std::string> contracted;
    IsoCertificate iso;
};

// First witness in deterministic order that delete(contract(M, contracted),
// deleted) is isomorphic to N, or nullopt. Refuses when
// |E(M)| - |E(N)| exceeds gap_cap.
std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& n,
                                      std::size_t gap_cap = 8);

// Checks a witness by direct construction and certificate revalidation.
bool revalidate_witness(const BinaryMatroid& m, const BinaryMatroid& n, const MinorWitness& w);

}  // namespace bmt::minors

#endif
