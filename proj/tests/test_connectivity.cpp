#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "bmt/connectivity.hpp"
#include "bmt/families.hpp"
#include "bmt/patterns.hpp"

using namespace bmt;
using namespace bmt::connectivity;

TEST_CASE("lambda basics") {
    BinaryMatroid k4 = families::k4();
    CHECK(lambda(k4, 0) == 0);
    for (std::size_t i = 0; i < k4.size(); ++i) CHECK(lambda(k4, Word(1) << i) == 1);
    // a triangle of K_4: r(X)=2, r(E-X)=3, r(M)=3
    CHECK(lambda(k4, k4.mask_of({"e12", "e13", "e23"})) == 2);
}

TEST_CASE("lambda symmetry, duality, submodularity on sampled subsets") {
    std::mt19937 rng(7);
    for (BinaryMatroid m : {families::wheel(4), families::m_n(4), families::biwheel(3)}) {
        BinaryMatroid d = m.dual();
        Word full = m.full_mask();
        for (int trial = 0; trial < 200; ++trial) {
            Word x = rng() & full, y = rng() & full;
            CHECK(lambda(m, x) == lambda(m, full & ~x));
            CHECK(lambda(m, x) == lambda(d, x));
            CHECK(lambda(m, x) + lambda(m, y) >= lambda(m, x & y) + lambda(m, x | y));
        }
    }
}

TEST_CASE("moving rule") {
    BinaryMatroid m = families::wheel(4);
    Word full = m.full_mask();
    auto seps = find_k_separations(m, 3, 3);
    for (const auto& s : seps) {
        Word moves = (m.closure(s.side_x) | m.coclosure(s.side_x)) & s.side_y;
        while (moves) {
            Word e = moves & -moves;
            moves ^= e;
            CHECK(lambda(m, s.side_x | e) <= 2);
        }
        (void)full;
    }
}

TEST_CASE("find_k_separations") {
    BinaryMatroid k4 = families::k4();
    auto seps = find_k_separations(k4, 3, 3);
    CHECK(seps.size() == 4);  // the four triangle/triad partitions
    for (const auto& s : seps) {
        bool tri_side = k4.is_triangle(s.side_x) || k4.is_triangle(s.side_y);
        CHECK(tri_side);
    }
    // F_7 is 3-connected: no 2-separations
    CHECK(find_k_separations(families::fano(), 2, 2).empty());
    // the rank-4 wheel has fan separations with both sides of size 4
    auto wheel_seps = find_k_separations(families::wheel(4), 3, 4);
    CHECK(!wheel_seps.empty());
}

TEST_CASE("is_sequential") {
    BinaryMatroid f7 = families::fano();
    // triangles are sequential
    Word t = f7.closure(f7.mask_of({"1", "2"}));
    auto ord = is_sequential(f7, t);
    REQUIRE(ord.has_value());
    CHECK(ord->size() == 3);

    // a 4-fan side of the rank-4 wheel is sequential, and the first three
    // of the ordering form a circuit or a cocircuit
    BinaryMatroid w4 = families::wheel(4);
    Word fan = w4.mask_of({"x1", "y1", "x2", "y2"});
    REQUIRE(lambda(w4, fan) <= 2);
    auto ford = is_sequential(w4, fan);
    REQUIRE(ford.has_value());
    Word first3 = 0;
    for (std::size_t i = 0; i < 3; ++i) first3 |= Word(1) << (*ford)[i];
    CHECK((w4.is_circuit(first3) || w4.is_cocircuit(first3)));

    // non-sequential side in a big biwheel: the complement of a triangle
    BinaryMatroid g8 = families::biwheel(6);
    Word tri = g8.mask_of({"u1", "r1", "u2"});
    REQUIRE(g8.is_triangle(tri));
    CHECK_FALSE(is_sequential(g8, g8.full_mask() & ~tri).has_value());
}

TEST_CASE("is_sequential agrees with brute-force ordering search on small sides") {
    for (BinaryMatroid m : {families::wheel(4), families::wheel(5), families::m_n(4),
                            families::biwheel(3)}) {
        auto seps = find_k_separations(m, 3, 3);
        for (const auto& s : seps) {
            for (Word side : {s.side_x, s.side_y}) {
                std::size_t sz = std::size_t(std::popcount(side));
                if (sz > 6) continue;
                std::vector<std::size_t> elems;
                for (std::size_t i = 0; i < m.size(); ++i)
                    if ((side >> i) & 1u) elems.push_back(i);
                // brute force: does any ordering peel with every prefix
                // 3-separating?
                bool brute = false;
                std::sort(elems.begin(), elems.end());
                do {
                    bool ok = true;
                    Word u = m.full_mask() & ~side;
                    for (std::size_t i = elems.size(); i-- > 0;) {
                        u |= Word(1) << elems[i];
                        if (lambda(m, u) > 2) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        brute = true;
                        break;
                    }
                } while (std::next_permutation(elems.begin(), elems.end()));
                CHECK(is_sequential(m, side).has_value() == brute);
            }
        }
    }
}

TEST_CASE("sequential 3-separating sides of size 3..5 are fans") {
    for (BinaryMatroid m : {families::wheel(4), families::wheel(5)}) {
        auto seps = find_k_separations(m, 3, 3);
        for (const auto& s : seps) {
            for (Word side : {s.side_x, s.side_y}) {
                std::size_t sz = std::size_t(std::popcount(side));
                if (sz < 3 || sz > 5) continue;
                if (!is_sequential(m, side)) continue;
                // check the side is a fan: some maximal fan contains it...
                // directly: it admits a fan ordering
                auto fans = find_fans(m, sz, true);
                bool found = false;
                for (const auto& f : fans) {
                    Word mask = 0;
                    for (auto e : f.ordering) mask |= Word(1) << e;
                    if (mask == side) found = true;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("find_fans") {
    BinaryMatroid w4 = families::wheel(4);
    auto fans = find_fans(w4, 8, true);
    CHECK(!fans.empty());
    // F_7 has no triads, hence no 4-fans
    auto f7fans = connectivity::four_fans(families::fano());
    CHECK(f7fans.empty());
    // a series pair is not even 2-connected
    CHECK_THROWS_AS(find_fans(families::graphic(3, {{0, 1}, {1, 2}}, {"a", "b"}), 4),
                    std::invalid_argument);
}

TEST_CASE("classification") {
    CHECK(classify(families::k4()).tier == Tier::InternallyFourConnected);
    CHECK(classify(families::fano()).tier == Tier::InternallyFourConnected);
    // the rank-4 wheel is (4,4,S)-connected but not internally 4-connected
    CHECK(classify(families::wheel(4)).tier == Tier::FourFourSConnected);
    // the rank-5 wheel has a 5-fan/5-fan split, so both sides of that
    // separation have five elements: a (4,4,S)-violator whose sides are
    // sequential 5-fans (not 5-cofans), leaving exactly (4,5,S,+)
    CHECK(classify(families::wheel(5)).tier == Tier::FourFiveSPlusConnected);
    for (std::size_t n = 3; n <= 5; ++n)
        CHECK(classify(families::m_n(n)).tier == Tier::InternallyFourConnected);
}

TEST_CASE("classification tier chain consistency over the family battery") {
    std::vector<BinaryMatroid> battery = {
        families::k4(),          families::fano(),          families::wheel(4),
        families::wheel(5),      families::m_n(4),          families::m_n(5),
        families::biwheel(4),    families::quartic_ladder(4, false),
        families::terrahawk(),   families::cubic_ladder(4, true),
    };
    for (const auto& m : battery) {
        ConnectivityClass c = classify(m);
        // the classify() internals assert the implication chain; here we
        // re-derive the tier flags independently from the violator searches
        auto threes = find_k_separations(m, 3, 3);
        bool has43 = false;
        for (const auto& s : threes) {
            std::size_t sx = std::size_t(std::popcount(s.side_x));
            std::size_t sy = std::size_t(std::popcount(s.side_y));
            if (sx >= 4 && sy >= 4) has43 = true;
        }
        if (c.tier == Tier::InternallyFourConnected || c.tier == Tier::FourConnected)
            CHECK_FALSE(has43);
    }
}

TEST_CASE("a 4-connected instance reaches the top tier") {
    // [I5 | D] with D the circulant of (1,1,0,0,1): ten elements, no
    // triangles or triads, every 3-separating set has a side of size < 3
    BinaryMatroid r10({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
                      Gf2Matrix::from_strings({
                          "1000011001",
                          "0100011100",
                          "0010001110",
                          "0001000111",
                          "0000110011",
                      }));
    CHECK(r10.circuits(3).empty());
    CHECK(r10.cocircuits(3).empty());
    auto cls = classify(r10);
    CHECK(cls.tier == Tier::FourConnected);
    CHECK(cls.witnesses.empty());
    // self-dual up to isomorphism: same circuit spectrum either way
    CHECK(r10.dual().circuits(4).size() == r10.circuits(4).size());
}

TEST_CASE("classification guards") {
    BinaryMatroid big = families::biwheel(8);  // 24 elements
    CHECK_THROWS_AS(classify(big), std::invalid_argument);
    BinaryMatroid para = families::graphic(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}, {"a", "b", "c", "d"});
    CHECK_THROWS_AS(classify(para), std::invalid_argument);
    // the exhaustive separation search refuses past its hard cap
    BinaryMatroid huge = families::biwheel(9);  // 27 elements
    CHECK_THROWS_AS(find_k_separations(huge, 3, 3), std::invalid_argument);
    // higher caps are a caller decision
    CHECK_NOTHROW(find_k_separations(families::m_n(11), 1, 23, 26));
}

TEST_CASE("is_sequential rejects non-3-separating input") {
    BinaryMatroid g8 = families::biwheel(6);
    // half the rim plus assorted spokes has lambda > 2
    Word z = g8.mask_of({"r1", "r2", "r3", "u1", "w2", "u3"});
    REQUIRE(lambda(g8, z) > 2);
    CHECK_THROWS_AS(is_sequential(g8, z), std::invalid_argument);
}

TEST_CASE("deleting a bowtie cocircuit element leaves a detectable 4-fan") {
    // bowtie (T0, T1, D) and d in D∩T1: after M\d, the triad D-d together
    // with the surviving triangle T0 forms a 4-fan through the shared pair
    BinaryMatroid m = families::quartic_ladder(4, false);
    auto ms = bmt::patterns::match(m, bmt::patterns::builtin("bowtie"), 1);
    REQUIRE(!ms.empty());
    const auto& mt = ms[0];
    std::string d = *mt.at("a1");  // element of D* on the T1 side
    BinaryMatroid del = m.delete_elements({d});
    auto fans = four_fans(del);
    // predicted ordering (c0?, ...): the fan (t, b0, c0, b1) with
    // {t,b0,c0} = T0 and triad {b0,c0,b1} = D - d
    Word tri = del.mask_of({*mt.at("a0"), *mt.at("b0"), *mt.at("c0")});
    Word triad = del.mask_of({*mt.at("b0"), *mt.at("c0"), *mt.at("b1")});
    bool found = false;
    for (const auto& f : fans) {
        Word ftri = (Word(1) << f.s1) | (Word(1) << f.s2) | (Word(1) << f.s3);
        Word ftriad = (Word(1) << f.s2) | (Word(1) << f.s3) | (Word(1) << f.s4);
        if (ftri == tri && ftriad == triad) found = true;
    }
    CHECK(found);
}

TEST_CASE("wheel fans walk the rim") {
    // every spoke-rim alternating path of length >= 3 in the rank-4 wheel
    // is a fan
    BinaryMatroid w4 = families::wheel(4);
    auto all = find_fans(w4, 6, true);
    auto has_set = [&](std::initializer_list<const char*> ls) {
        Word mask = 0;
        for (const char* l : ls) mask |= Word(1) << w4.index_of(l);
        for (const auto& f : all) {
            Word m2 = 0;
            for (auto e : f.ordering) m2 |= Word(1) << e;
            if (m2 == mask) return true;
        }
        return false;
    };
    CHECK(has_set({"x1", "y1", "x2"}));
    CHECK(has_set({"y4", "x1", "y1"}));
    CHECK(has_set({"x1", "y1", "x2", "y2"}));
    CHECK(has_set({"y4", "x1", "y1", "x2", "y2"}));
}
