#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bmt/connectivity.hpp"
#include "bmt/families.hpp"
#include "bmt/minors.hpp"
#include "bmt/moves.hpp"
#include "bmt/patterns.hpp"

using namespace bmt;
using namespace bmt::moves;
using patterns::builtin;
using patterns::ConfigMatch;
using patterns::match;

namespace {

// explicit binding for figure-reconstructed templates with free variables
ConfigMatch make_binding(const patterns::ConfigTemplate& t,
                 const std::map<std::string, std::string>& assignment) {
    ConfigMatch m;
    m.tmpl = t;
    m.assignment = assignment;
    return m;
}

void check_report(const BinaryMatroid& m, const MoveReport& r) {
    CHECK(r.result.size() == m.size() - r.deleted.size() - r.contracted.size());
    // result revalidates: rebuild and compare
    BinaryMatroid again = m.contract_elements(r.contracted).delete_elements(r.deleted);
    CHECK(again == r.result);
    if (r.result_class) {
        auto cls = connectivity::classify(r.result);
        CHECK(cls.tier == r.result_class->tier);
    }
}

}  // namespace

TEST_CASE("trim bowtie string") {
    BinaryMatroid m = families::quartic_ladder(5, false);
    SUBCASE("n=1 deletes two elements") {
        auto ms = match(m, builtin("bowtie_string", {{"n", "1"}}), 1);
        REQUIRE(!ms.empty());
        auto r = trim_bowtie_string(m, ms[0]);
        CHECK(r.deleted.size() == 2);
        CHECK(r.contracted.empty());
        check_report(m, r);
    }
    SUBCASE("full string with intermediate 4-fan prediction") {
        auto ms = match(m, builtin("bowtie_string", {{"n", "3"}}), 1);
        REQUIRE(!ms.empty());
        const auto& mt = ms[0];
        // intermediate fan: after deleting c0, (c1, b1, a1, b0) is a 4-fan,
        // and the pattern persists stage by stage
        BinaryMatroid cur = m;
        for (std::size_t i = 0; i + 1 <= 3; ++i) {
            cur = cur.delete_elements({*mt.at("c" + std::to_string(i))});
            Word tri = cur.mask_of({*mt.at("c" + std::to_string(i + 1)),
                                    *mt.at("b" + std::to_string(i + 1)),
                                    *mt.at("a" + std::to_string(i + 1))});
            Word triad = cur.mask_of({*mt.at("b" + std::to_string(i + 1)),
                                      *mt.at("a" + std::to_string(i + 1)),
                                      *mt.at("b" + std::to_string(i))});
            CHECK(cur.is_triangle(tri));
            CHECK(cur.is_cocircuit(triad));
        }
        auto r = trim_bowtie_string(m, mt);
        CHECK(r.deleted.size() == 4);
        check_report(m, r);
    }
    SUBCASE("invalid match is an error") {
        auto ms = match(m, builtin("bowtie_string", {{"n", "1"}}), 1);
        REQUIRE(!ms.empty());
        ConfigMatch bad = ms[0];
        bad.assignment["c0"] = bad.assignment["a0"];
        CHECK_THROWS_AS(trim_bowtie_string(m, bad), std::invalid_argument);
    }
}

TEST_CASE("trim open rotor chain") {
    BinaryMatroid m = families::quartic_ladder(3, false);  // octahedron
    auto ms = match(m, builtin("open_rotor_chain", {{"n", "3"}}), 1);
    REQUIRE(!ms.empty());
    auto r = trim_open_rotor_chain(m, ms[0]);
    CHECK(r.deleted.size() == 3);
    check_report(m, r);
}

TEST_CASE("trim bowtie ring") {
    BinaryMatroid m = families::quartic_ladder(4, false);
    auto ms = match(m, builtin("bowtie_ring", {{"n", "4"}}), 1);
    REQUIRE(!ms.empty());
    auto r = trim_bowtie_ring(m, ms[0]);
    CHECK(r.deleted.size() == 4);
    // deleted set is exactly the matched c's
    std::set<std::string> expect;
    for (std::size_t i = 0; i < 4; ++i) expect.insert(*ms[0].at("c" + std::to_string(i)));
    CHECK(std::set<std::string>(r.deleted.begin(), r.deleted.end()) == expect);
    check_report(m, r);
}

TEST_CASE("trim ladder structure") {
    BinaryMatroid m = families::quartic_ladder(5, false);
    auto ms = match(m, builtin("ladder_structure", {{"n", "2"}, {"variant", "a1"}}), 1);
    REQUIRE(!ms.empty());
    auto r = trim_ladder_structure(m, ms[0]);
    CHECK(r.deleted.size() == 3);  // c0, c1, c2
    check_report(m, r);
}

TEST_CASE("enhanced ladder move arithmetic") {
    BinaryMatroid m = families::quartic_ladder(5, false);
    for (std::size_t k : {0u, 1u, 2u}) {
        auto t = builtin("enhanced_quartic_ladder",
                         {{"k", std::to_string(k)}, {"variant", "a"}});
        // figure-reconstructed: bind the deletion set explicitly
        std::map<std::string, std::string> a;
        a["c0"] = "e0";
        a["c1"] = "e2";
        a["c2"] = "e4";
        const char* vpool[] = {"f0", "f1", "f2"};
        for (std::size_t i = 0; i <= k; ++i) a["v" + std::to_string(i)] = vpool[i];
        auto r = enhanced_ladder_move(m, make_binding(t, a));
        CHECK(r.deleted.size() == k + 4);
        CHECK(r.contracted.empty());
        check_report(m, r);
    }
}

TEST_CASE("mixed ladder move") {
    BinaryMatroid m = families::quartic_ladder(5, false);
    auto ms = match(m, builtin("open_quartic_ladder", {{"k", "3"}}), 1);
    REQUIRE(!ms.empty());
    auto r = mixed_ladder_move(m, ms[0]);
    CHECK(r.contracted.size() == 1);  // the arrow edge
    CHECK(r.deleted.size() >= 3);     // at least three dashed elements
    check_report(m, r);
}

TEST_CASE("delete central cocircuit of an augmented 4-wheel") {
    // the terrahawk's apex region realizes an augmented 4-wheel whose
    // central cocircuit is the apex star; deleting it leaves the cube
    BinaryMatroid m = families::terrahawk();
    auto ms = match(m, builtin("augmented_4_wheel"), 1);
    REQUIRE(!ms.empty());
    auto r = delete_central_cocircuit(m, ms[0]);
    CHECK(r.deleted.size() == 4);
    std::set<std::string> expect{*ms[0].at("x2"), *ms[0].at("y2"), *ms[0].at("z2"),
                                 *ms[0].at("z3")};
    CHECK(std::set<std::string>(r.deleted.begin(), r.deleted.end()) == expect);
    check_report(m, r);
    CHECK(bmt::minors::is_isomorphic(r.result, families::cubic_ladder(4, false)).has_value());
    REQUIRE(r.result_class.has_value());
    CHECK(r.result_class->tier == connectivity::Tier::InternallyFourConnected);
}

TEST_CASE("theorem outcome guards") {
    BinaryMatroid m = families::quartic_ladder(4, false);
    BinaryMatroid octa = families::quartic_ladder(3, false);
    auto ms = match(m, builtin("bowtie"), 1);
    REQUIRE(!ms.empty());
    SUBCASE("small N rejected by name") {
        auto rep = check_theorem_outcome(m, families::k4(), ms[0]);
        CHECK_FALSE(rep.hypotheses_ok);
        CHECK(rep.failed_hypothesis == "|E(N)| >= 7");
        CHECK(rep.outcomes.empty());
    }
    SUBCASE("15-element M rejected by name") {
        BinaryMatroid m15 = m.delete_elements({std::string("f0")});
        auto ms15 = match(m15, builtin("bowtie"), 1);
        if (!ms15.empty()) {
            auto rep = check_theorem_outcome(m15, octa, ms15[0]);
            CHECK_FALSE(rep.hypotheses_ok);
            CHECK(rep.failed_hypothesis == "|E(M)| >= 16");
        }
    }
}
