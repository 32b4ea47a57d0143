#include "bmt/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace bmt::connectivity {

std::size_t lambda(const BinaryMatroid& m, Word subset) {
    Word full = m.full_mask();
    subset &= full;
    std::size_t primal = m.rank_of(subset) + m.rank_of(full & ~subset) - m.rank();
#ifndef NDEBUG
    // Dual formula: lambda(X) = r(X) + r*(X) - |X|.
    std::size_t dual_form =
        m.rank_of(subset) + m.corank_of(subset) - std::size_t(std::popcount(subset));
    assert(primal == dual_form);
#endif
    return primal;
}

std::vector<Separation> find_k_separations(const BinaryMatroid& m, std::size_t k,
                                           std::size_t min_side, std::size_t cap) {
    if (k < 1 || k > 4) throw std::invalid_argument("find_k_separations: supported k is 1..4");
    if (m.size() > cap)
        throw std::invalid_argument("find_k_separations: ground set exceeds exhaustive cap");
    std::vector<Separation> out;
    if (m.size() < 2) return out;
    std::size_t n = m.size();
    Word full = m.full_mask();
    // Fix element 0 on the Y side so each unordered partition appears once.
    Word limit = Word(1) << (n - 1);
    for (Word sub = 1; sub < limit; ++sub) {
        Word x = sub << 1;
        std::size_t sx = std::size_t(std::popcount(x));
        if (sx < min_side || n - sx < min_side) continue;
        if (lambda(m, x) <= k - 1) {
            Separation s;
            s.side_x = x;
            s.side_y = full & ~x;
            s.order = lambda(m, x) + 1;
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        std::size_t pa = std::size_t(std::popcount(a.side_x));
        std::size_t pb = std::size_t(std::popcount(b.side_x));
        return pa != pb ? pa < pb : a.side_x < b.side_x;
    });
    return out;
}

std::optional<std::vector<std::size_t>> is_sequential(const BinaryMatroid& m, Word z) {
    if (lambda(m, z) > 2) throw std::invalid_argument("is_sequential: set is not 3-separating");
    Word full = m.full_mask();
    Word u = full & ~z;
    std::size_t len = std::size_t(std::popcount(z));
    std::vector<std::size_t> ordering(len);
    std::size_t next = len;  // fill v_m first
    Word rem = z;
    while (rem) {
        Word movable = (m.closure(u) | m.coclosure(u)) & rem;
        if (!movable) return std::nullopt;
        Word e = movable & -movable;  // lowest position, deterministic
        ordering[--next] = std::size_t(std::countr_zero(e));
        u |= e;
        rem &= ~e;
    }
    return ordering;
}

namespace {

struct SmallSets {
    std::vector<Word> triangles;
    std::vector<Word> triads;
};

SmallSets small_sets(const BinaryMatroid& m) {
    SmallSets s;
    for (Word c : m.circuits(3))
        if (std::popcount(c) == 3) s.triangles.push_back(c);
    for (Word c : m.cocircuits(3))
        if (std::popcount(c) == 3) s.triads.push_back(c);
    return s;
}

bool in_list(const std::vector<Word>& v, Word x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::vector<Fan> find_fans(const BinaryMatroid& m, std::size_t max_len, bool include_subfans) {
    if (!is_3_connected(m)) throw std::invalid_argument("find_fans: matroid is not 3-connected");
    if (max_len < 3) return {};
    SmallSets sets = small_sets(m);

    // DFS over fan orderings. A partial ordering is extended by any element
    // making the last triple a triangle/triad of alternating type.
    std::vector<std::pair<std::vector<std::size_t>, FanKind>> found;
    std::vector<std::size_t> cur;

    auto triple_is = [&](std::size_t a, std::size_t b, std::size_t c, bool triangle) {
        Word mask = (Word(1) << a) | (Word(1) << b) | (Word(1) << c);
        return triangle ? in_list(sets.triangles, mask) : in_list(sets.triads, mask);
    };

    // kind = type of the triple ending at position cur.size()-1.
    auto dfs = [&](auto&& self, FanKind start, bool last_was_triangle) -> void {
        bool extended = false;
        if (cur.size() < max_len) {
            for (std::size_t e = 0; e < m.size(); ++e) {
                if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
                if (!triple_is(cur[cur.size() - 2], cur[cur.size() - 1], e, !last_was_triangle))
                    continue;
                cur.push_back(e);
                self(self, start, !last_was_triangle);
                cur.pop_back();
                extended = true;
            }
        }
        if (include_subfans || !extended) found.push_back({cur, start});
    };

    for (int tri = 1; tri >= 0; --tri) {
        const auto& seeds = tri ? sets.triangles : sets.triads;
        for (Word seed : seeds) {
            std::vector<std::size_t> elems;
            for (std::size_t i = 0; i < m.size(); ++i)
                if ((seed >> i) & 1u) elems.push_back(i);
            std::sort(elems.begin(), elems.end());
            do {
                cur.assign(elems.begin(), elems.end());
                dfs(dfs, tri ? FanKind::StartsTriangle : FanKind::StartsTriad, tri);
            } while (std::next_permutation(elems.begin(), elems.end()));
        }
    }

    // Canonicalize: one fan per element set; prefer the ordering whose end
    // label is least, then the lexicographically least label sequence.
    // The 4-fan convention (start with a triangle) wins over label order.
    auto label_seq = [&](const std::vector<std::size_t>& ord) {
        std::vector<std::string> s;
        for (std::size_t e : ord) s.push_back(m.label(e));
        return s;
    };
    std::map<Word, std::pair<std::vector<std::size_t>, FanKind>> best;
    for (auto& [ord, kind] : found) {
        if (ord.size() < 3) continue;
        Word mask = 0;
        for (std::size_t e : ord) mask |= Word(1) << e;
        auto it = best.find(mask);
        if (it == best.end()) {
            best.emplace(mask, std::make_pair(ord, kind));
            continue;
        }
        auto& [bord, bkind] = it->second;
        bool cur_tri = kind == FanKind::StartsTriangle;
        bool best_tri = bkind == FanKind::StartsTriangle;
        if (cur_tri != best_tri) {
            if (cur_tri && !best_tri) it->second = {ord, kind};
            continue;
        }
        auto cs = label_seq(ord), bs = label_seq(bord);
        if (std::make_pair(cs.front(), cs) < std::make_pair(bs.front(), bs))
            it->second = {ord, kind};
    }
    std::vector<Fan> out;
    for (auto& [mask, v] : best) {
        if (!include_subfans) {
            // keep set-maximal fans only
            bool covered = false;
            for (auto& [other, w] : best)
                if (other != mask && (other & mask) == mask) {
                    covered = true;
                    break;
                }
            if (covered) continue;
        }
        out.push_back({v.first, v.second});
    }
    std::sort(out.begin(), out.end(), [&](const Fan& a, const Fan& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return label_seq(a.ordering) < label_seq(b.ordering);
    });
    return out;
}

std::vector<FourFan> four_fans(const BinaryMatroid& m) {
    SmallSets sets = small_sets(m);
    std::vector<FourFan> out;
    for (Word t : sets.triangles)
        for (Word d : sets.triads) {
            Word common = t & d;
            if (std::popcount(common) != 2) continue;
            Word s1m = t & ~d, s4m = d & ~t;
            std::size_t s1 = std::size_t(std::countr_zero(s1m));
            std::size_t s4 = std::size_t(std::countr_zero(s4m));
            std::size_t s2 = std::size_t(std::countr_zero(common));
            std::size_t s3 = std::size_t(std::countr_zero(common & (common - 1)));
            if (s2 > s3) std::swap(s2, s3);
            out.push_back({s1, s2, s3, s4});
        }
    std::sort(out.begin(), out.end(), [](const FourFan& a, const FourFan& b) {
        return std::tie(a.s1, a.s2, a.s3, a.s4) < std::tie(b.s1, b.s2, b.s3, b.s4);
    });
    return out;
}

std::vector<FiveFan> five_fans(const BinaryMatroid& m, bool cofan) {
    SmallSets sets = small_sets(m);
    const auto& outer = cofan ? sets.triads : sets.triangles;
    const auto& inner = cofan ? sets.triangles : sets.triads;
    std::vector<FiveFan> out;
    auto seen = [&](const FiveFan& f) {
        for (const auto& g : out)
            if (g.s1 == f.s5 && g.s2 == f.s4 && g.s3 == f.s3 && g.s4 == f.s2 && g.s5 == f.s1)
                return true;
        for (const auto& g : out)
            if (g.s1 == f.s1 && g.s2 == f.s2 && g.s3 == f.s3 && g.s4 == f.s4 && g.s5 == f.s5)
                return true;
        return false;
    };
    for (Word A : outer)
        for (Word B : outer) {
            if (A == B) continue;
            Word common = A & B;
            if (std::popcount(common) != 1) continue;
            std::size_t s3 = std::size_t(std::countr_zero(common));
            // middle triple {s2,s3,s4} must be of the inner type
            for (Word mid : inner) {
                if (!(mid & common)) continue;
                Word rest = mid & ~common;
                if (std::popcount(rest) != 2) continue;
                Word inA = rest & A & ~B, inB = rest & B & ~A;
                if (std::popcount(inA) != 1 || std::popcount(inB) != 1) continue;
                std::size_t s2 = std::size_t(std::countr_zero(inA));
                std::size_t s4 = std::size_t(std::countr_zero(inB));
                std::size_t s1 = std::size_t(std::countr_zero(A & ~mid & ~common));
                std::size_t s5 = std::size_t(std::countr_zero(B & ~mid & ~common));
                if (std::popcount(A & ~mid & ~common) != 1) continue;
                if (std::popcount(B & ~mid & ~common) != 1) continue;
                FiveFan f{s1, s2, s3, s4, s5, cofan};
                if (!seen(f)) out.push_back(f);
            }
        }
    std::sort(out.begin(), out.end(), [](const FiveFan& a, const FiveFan& b) {
        return std::tie(a.s1, a.s2, a.s3, a.s4, a.s5) < std::tie(b.s1, b.s2, b.s3, b.s4, b.s5);
    });
    return out;
}

bool is_five_cofan_set(const BinaryMatroid& m, Word z) {
    if (std::popcount(z) != 5) return false;
    for (const auto& f : five_fans(m, true)) {
        Word mask = (Word(1) << f.s1) | (Word(1) << f.s2) | (Word(1) << f.s3) |
                    (Word(1) << f.s4) | (Word(1) << f.s5);
        if (mask == z) return true;
    }
    return false;
}

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::NotTwoConnected: return "not-2-connected";
        case Tier::TwoConnected: return "2-connected";
        case Tier::ThreeConnected: return "3-connected";
        case Tier::SequentiallyFourConnected: return "sequentially-4-connected";
        case Tier::FourFiveSPlusConnected: return "(4,5,S,+)-connected";
        case Tier::FourFourSConnected: return "(4,4,S)-connected";
        case Tier::InternallyFourConnected: return "internally-4-connected";
        case Tier::FourConnected: return "4-connected";
    }
    return "?";
}

ConnectivityClass classify(const BinaryMatroid& m, std::size_t cap) {
    if (m.size() > cap) throw std::invalid_argument("classify: ground set exceeds exhaustive cap");
    std::size_t n = m.size();
    ConnectivityClass out;

    auto scan = [&](std::size_t k, std::size_t min_side) {
        return find_k_separations(m, k, min_side, cap);
    };

    // Loops and parallel or series pairs make the fan and sequential
    // machinery meaningless; refuse them up front.
    if (n >= 4 && (!m.is_simple() || !m.is_cosimple()))
        throw std::invalid_argument("classify: matroid must be simple and cosimple");

    auto ones = scan(1, 1);
    if (!ones.empty()) {
        out.tier = Tier::NotTwoConnected;
        out.witnesses = ones;
        return out;
    }
    if (n >= 4) {
        auto twos = scan(2, 2);
        if (!twos.empty()) {
            out.tier = Tier::TwoConnected;
            out.witnesses = twos;
            return out;
        }
    }
    if (n < 4) {
        // Direct table: nothing this small admits a 2-separation, and the
        // higher tiers are not meaningful at this size.
        out.tier = Tier::ThreeConnected;
        return out;
    }

    auto threes = scan(3, 3);
    if (threes.empty()) {
        out.tier = Tier::FourConnected;
        return out;
    }

    for (auto& s : threes) {
        s.sequential_x = is_sequential(m, s.side_x).has_value();
        s.sequential_y = is_sequential(m, s.side_y).has_value();
    }

    std::vector<Separation> v43, v44s, v45sp, nonseq;
    for (const auto& s : threes) {
        std::size_t sx = std::size_t(std::popcount(s.side_x));
        std::size_t sy = std::size_t(std::popcount(s.side_y));
        if (sx >= 4 && sy >= 4) v43.push_back(s);
        auto viol44 = [&](std::size_t sz, bool seq) { return sz >= 5 || !seq; };
        if (viol44(sx, s.sequential_x) && viol44(sy, s.sequential_y)) v44s.push_back(s);
        auto viol45 = [&](Word side, std::size_t sz, bool seq) {
            return sz >= 6 || !seq || is_five_cofan_set(m, side);
        };
        if (viol45(s.side_x, sx, s.sequential_x) && viol45(s.side_y, sy, s.sequential_y))
            v45sp.push_back(s);
        if (!s.sequential_x && !s.sequential_y) nonseq.push_back(s);
    }

    // Tier chain consistency: each violator class is contained in the next.
    assert(!(v43.empty() && !v44s.empty()));
    assert(!(v44s.empty() && !v45sp.empty()));
    assert(!(v45sp.empty() && !nonseq.empty()));

    if (v43.empty()) {
        out.tier = Tier::InternallyFourConnected;
        out.witnesses = threes;  // blocking 4-connectivity
    } else if (v44s.empty()) {
        out.tier = Tier::FourFourSConnected;
        out.witnesses = v43;
    } else if (v45sp.empty()) {
        out.tier = Tier::FourFiveSPlusConnected;
        out.witnesses = v44s;
    } else if (nonseq.empty()) {
        out.tier = Tier::SequentiallyFourConnected;
        out.witnesses = v45sp;
    } else {
        out.tier = Tier::ThreeConnected;
        out.witnesses = nonseq;
    }
    return out;
}

bool is_internally_4_connected(const BinaryMatroid& m, std::size_t cap) {
    ConnectivityClass c = classify(m, cap);
    return c.tier == Tier::InternallyFourConnected || c.tier == Tier::FourConnected;
}

bool is_4_4_s_connected(const BinaryMatroid& m, std::size_t cap) {
    ConnectivityClass c = classify(m, cap);
    return c.tier == Tier::FourFourSConnected || c.tier == Tier::InternallyFourConnected ||
           c.tier == Tier::FourConnected;
}

bool is_3_connected(const BinaryMatroid& m, std::size_t cap) {
    if (m.size() > cap) throw std::invalid_argument("is_3_connected: exceeds cap");
    if (!find_k_separations(m, 1, 1, cap).empty()) return false;
    if (m.size() >= 4 && !find_k_separations(m, 2, 2, cap).empty()) return false;
    return true;
}

}  // namespace bmt::connectivity
