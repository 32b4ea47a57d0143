#ifndef BMT_CHECKS_HPP
#define BMT_CHECKS_HPP

#include <string>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt::checks {

struct CheckCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckCase> cases;
    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();

// Suites: lemma2.2, lemma3.2, lemma4.2, lemma5.2, hypothesisVII,
// theorem1.4-instances. The seed feeds the pooled suites; everything else
// is deterministic.
SuiteResult run_suite(const std::string& name, unsigned seed = 1);

// Seeded pool of small binary matroids grown from F_7 by single-element
// extensions and coextensions (so each member keeps an F_7-minor), filtered
// to 3-connected, simple and cosimple members with at most max_elems
// elements.
std::vector<BinaryMatroid> seeded_fano_pool(unsigned seed, std::size_t count,
                                            std::size_t max_elems);

}  // namespace bmt::checks

#endif
