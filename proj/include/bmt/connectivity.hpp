#ifndef BMT_CONNECTIVITY_HPP
#define BMT_CONNECTIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt::connectivity {

// lambda_M(X) = r(X) + r(E-X) - r(M).
std::size_t lambda(const BinaryMatroid& m, Word subset);

struct Separation {
    Word side_x = 0;
    Word side_y = 0;
    std::size_t order = 0;  // lambda + 1
    bool sequential_x = false;
    bool sequential_y = false;
};

// All k-separating partitions with both sides of size >= min_side, one
// representative per unordered pair, sorted by (|X|, X-mask). Refuses
// ground sets above `cap`.
std::vector<Separation> find_k_separations(const BinaryMatroid& m, std::size_t k,
                                           std::size_t min_side, std::size_t cap = 26);

// If Z is a sequential 3-separating set, an ordering (v_1..v_m) of Z such
// that (E-Z) together with {v_m..v_i} is 3-separating for every i. The
// peel moves elements of Z lying in cl or cl* of the complement, lowest
// position first.
std::optional<std::vector<std::size_t>> is_sequential(const BinaryMatroid& m, Word z);

enum class FanKind { StartsTriangle, StartsTriad };

struct Fan {
    std::vector<std::size_t> ordering;  // element positions
    FanKind kind = FanKind::StartsTriangle;

    std::size_t length() const { return ordering.size(); }
};

// All maximal fans of length 3..max_len (with include_subfans, every fan of
// those lengths). Each fan set is reported once, with the canonical
// ordering: lexicographically least end label first, ties broken by the
// whole label sequence. Requires a 3-connected matroid.
std::vector<Fan> find_fans(const BinaryMatroid& m, std::size_t max_len,
                           bool include_subfans = false);

// 4-fans as orderings (s1,s2,s3,s4): {s1,s2,s3} a triangle, {s2,s3,s4} a
// triad; one entry per (s1, {s2,s3}, s4).
struct FourFan {
    std::size_t s1, s2, s3, s4;
};
std::vector<FourFan> four_fans(const BinaryMatroid& m);

// 5-fans (triangle-triad-triangle) and 5-cofans (triad-triangle-triad).
struct FiveFan {
    std::size_t s1, s2, s3, s4, s5;
    bool cofan = false;
};
std::vector<FiveFan> five_fans(const BinaryMatroid& m, bool cofan);

bool is_five_cofan_set(const BinaryMatroid& m, Word z);

enum class Tier {
    NotTwoConnected,
    TwoConnected,
    ThreeConnected,
    SequentiallyFourConnected,
    FourFiveSPlusConnected,
    FourFourSConnected,
    InternallyFourConnected,
    FourConnected,
};

std::string tier_name(Tier t);

struct ConnectivityClass {
    Tier tier = Tier::NotTwoConnected;
    // Violators blocking the next tier up (empty for 4-connected).
    std::vector<Separation> witnesses;
};

// Where the tier ladder is decided. Throws on |E| > cap and, for |E| >= 4,
// on matroids that are not simple and cosimple (the fan/sequential notions
// assume them). |E| < 4 is handled by a direct table capped at 3-connected.
ConnectivityClass classify(const BinaryMatroid& m, std::size_t cap = 22);

bool is_internally_4_connected(const BinaryMatroid& m, std::size_t cap = 22);
bool is_4_4_s_connected(const BinaryMatroid& m, std::size_t cap = 22);
bool is_3_connected(const BinaryMatroid& m, std::size_t cap = 26);

}  // namespace bmt::connectivity

#endif
