#include "bmt/minors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bmt::minors {

namespace {

// Per-element invariant: loop/coloop flags plus the number of circuits and
// cocircuits of each size up to 4 through the element.
using ElemInv = std::array<int, 8>;

std::vector<ElemInv> element_invariants(const BinaryMatroid& m) {
    std::vector<ElemInv> inv(m.size(), ElemInv{});
    for (std::size_t i = 0; i < m.size(); ++i) {
        inv[i][0] = m.is_loop(i) ? 1 : 0;
        inv[i][1] = m.is_coloop(i) ? 1 : 0;
    }
    auto count = [&](const std::vector<Word>& sets, int base) {
        for (Word s : sets) {
            int k = std::popcount(s);
            if (k < 2 || k > 4) continue;
            Word rest = s;
            while (rest) {
                Word e = rest & -rest;
                rest ^= e;
                inv[std::size_t(std::countr_zero(e))][base + k - 2] += 1;
            }
        }
    };
    count(m.circuits(4), 2);
    count(m.cocircuits(4), 5);
    return inv;
}

struct CanonState {
    const BinaryMatroid* m;
    std::vector<std::size_t> class_of_pos;          // which class each position draws from
    std::vector<std::vector<std::size_t>> classes;  // element ids per class
    std::vector<bool> used;
    // elimination state: reduced vectors with their pivot-coordinate exprs
    std::vector<Word> red_vec;
    std::vector<Word> red_coord;
    std::size_t pivots = 0;
    std::vector<Word> best;    // best complete key so far
    bool have_best = false;
    std::vector<Word> cur;     // chunks so far
    std::vector<std::size_t> cur_order, best_order;
};

// Chunk of column `col`: its coordinates over the pivots chosen so far, or
// a fresh unit coordinate if independent. Returns (chunk, leftover).
std::pair<Word, Word> chunk_of(CanonState& st, Word col) {
    Word v = col, coord = 0;
    for (std::size_t t = 0; t < st.red_vec.size(); ++t) {
        Word lead = st.red_vec[t] & -st.red_vec[t];
        if (v & lead) {
            v ^= st.red_vec[t];
            coord ^= st.red_coord[t];
        }
    }
    if (v == 0) return {coord, 0};
    return {Word(1) << st.pivots, v};
}

void canon_dfs(CanonState& st, std::size_t pos) {
    std::size_t n = st.m->size();
    if (pos == n) {
        if (!st.have_best || st.cur < st.best) {
            st.best = st.cur;
            st.best_order = st.cur_order;
            st.have_best = true;
        }
        return;
    }
    auto& cls = st.classes[st.class_of_pos[pos]];
    // minimal chunk among unused candidates of this position's class
    Word min_chunk = ~Word(0);
    std::vector<std::pair<std::size_t, std::pair<Word, Word>>> cands;
    for (std::size_t e : cls) {
        if (st.used[e]) continue;
        auto ch = chunk_of(st, st.m->matrix().column(e));
        if (ch.first < min_chunk) min_chunk = ch.first;
        cands.push_back({e, ch});
    }
    // prune against the best key: chunks at this position must not exceed it
    if (st.have_best) {
        bool tight = std::equal(st.cur.begin(), st.cur.end(), st.best.begin());
        if (tight && min_chunk > st.best[pos]) return;
    }
    std::set<Word> tried_columns;  // parallel candidates give identical subtrees
    for (auto& [e, ch] : cands) {
        if (ch.first != min_chunk) continue;
        if (!tried_columns.insert(st.m->matrix().column(e)).second) continue;
        st.used[e] = true;
        st.cur.push_back(ch.first);
        st.cur_order.push_back(e);
        bool added_pivot = ch.second != 0;
        if (added_pivot) {
            // maintain invariant: red_vec[t] equals the pivot-column
            // combination recorded in red_coord[t]
            Word v = st.m->matrix().column(e), coord = Word(1) << st.pivots;
            for (std::size_t t = 0; t < st.red_vec.size(); ++t) {
                Word lead = st.red_vec[t] & -st.red_vec[t];
                if (v & lead) {
                    v ^= st.red_vec[t];
                    coord ^= st.red_coord[t];
                }
            }
            st.red_vec.push_back(v);
            st.red_coord.push_back(coord);
            st.pivots += 1;
        }
        canon_dfs(st, pos + 1);
        if (added_pivot) {
            st.red_vec.pop_back();
            st.red_coord.pop_back();
            st.pivots -= 1;
        }
        st.cur_order.pop_back();
        st.cur.pop_back();
        st.used[e] = false;
    }
}

struct CanonResult {
    std::string key;
    std::vector<std::size_t> order;
};

CanonResult canonicalize(const BinaryMatroid& m, std::size_t cap) {
    if (m.size() > cap) throw std::invalid_argument("canonical_form: ground set exceeds cap");
    auto inv = element_invariants(m);
    std::map<ElemInv, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < m.size(); ++i) by_class[inv[i]].push_back(i);

    CanonState st;
    st.m = &m;
    for (auto& [k, v] : by_class) st.classes.push_back(v);
    for (std::size_t c = 0; c < st.classes.size(); ++c)
        for (std::size_t j = 0; j < st.classes[c].size(); ++j) st.class_of_pos.push_back(c);
    st.used.assign(m.size(), false);
    canon_dfs(st, 0);

    std::ostringstream key;
    key << m.size() << ":" << m.rank() << ":";
    for (std::size_t c = 0; c < st.classes.size(); ++c) key << st.classes[c].size() << ",";
    key << ":";
    for (Word w : st.best) key << std::hex << w << ".";
    return {key.str(), st.best_order};
}

}  // namespace

std::string canonical_form(const BinaryMatroid& m, std::size_t cap) {
    return canonicalize(m, cap).key;
}

std::optional<IsoCertificate> is_isomorphic(const BinaryMatroid& m, const BinaryMatroid& n,
                                            std::size_t cap) {
    if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
    CanonResult cm = canonicalize(m, cap);
    CanonResult cn = canonicalize(n, cap);
    if (cm.key != cn.key) return std::nullopt;
    IsoCertificate cert;
    std::vector<std::pair<std::string, std::string>> pairs(m.size());
    for (std::size_t k = 0; k < m.size(); ++k)
        pairs[k] = {m.label(cm.order[k]), n.label(cn.order[k])};
    std::sort(pairs.begin(), pairs.end());
    cert.mapping = pairs;

    // Independent revalidation: circuits of size <= 4 map to circuits in
    // both directions, and subset ranks agree on every mapped circuit.
    std::map<std::string, std::string> fwd;
    for (auto& [a, b] : cert.mapping) fwd[a] = b;
    for (Word c : m.circuits(4)) {
        std::vector<std::string> img;
        for (const auto& l : m.labels_of(c)) img.push_back(fwd.at(l));
        if (!n.is_circuit(n.mask_of(img))) return std::nullopt;
    }
    for (Word c : n.circuits(4)) {
        std::map<std::string, std::string> back;
        for (auto& [a, b] : cert.mapping) back[b] = a;
        std::vector<std::string> img;
        for (const auto& l : n.labels_of(c)) img.push_back(back.at(l));
        if (!m.is_circuit(m.mask_of(img))) return std::nullopt;
    }
    return cert;
}

namespace {

std::size_t nonzero_class_count(const BinaryMatroid& m) {
    std::set<Word> cols;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Word c = m.matrix().column(i);
        if (c) cols.insert(c);
    }
    return cols.size();
}

// Deletion phase solved directly: N is a restriction of `host` iff some
// injective linear map carries N's columns onto columns of `host`. Images
// of a fixed basis of N determine the map; every other column's image is
// then forced and just looked up (with multiplicity, so parallel elements
// and loops are handled).
std::optional<std::pair<std::vector<std::string>, IsoCertificate>> restriction_witness(
    const BinaryMatroid& host, const BinaryMatroid& target) {
    if (host.rank() != target.rank()) return std::nullopt;
    std::size_t r = target.rank();

    // target columns and a basis of the target (positions of its pivots)
    auto t_rref = gf2::rref(target.matrix());
    std::vector<std::size_t> t_basis = t_rref.pivot_cols;
    // coordinates of every target column over that basis
    std::vector<Word> raw_coords(target.size(), 0);
    for (std::size_t j = 0; j < target.size(); ++j)
        for (std::size_t i = 0; i < r; ++i)
            if (t_rref.mat.get(i, j)) raw_coords[j] |= Word(1) << i;

    // order the basis so that placements force non-basis columns as early
    // as possible (greedy cover of coordinate supports)
    std::vector<std::size_t> order;
    {
        Word covered = 0;
        while (order.size() < r) {
            std::size_t best = r;
            std::size_t best_gain = 0;
            for (std::size_t b = 0; b < r; ++b) {
                if ((covered >> b) & 1u) continue;
                std::size_t gain = 0;
                for (std::size_t j = 0; j < target.size(); ++j)
                    if (raw_coords[j] && (raw_coords[j] & ~(covered | (Word(1) << b))) == 0)
                        ++gain;
                if (best == r || gain > best_gain) {
                    best = b;
                    best_gain = gain;
                }
            }
            order.push_back(best);
            covered |= Word(1) << best;
        }
    }
    std::vector<std::size_t> basis_reordered(r);
    std::vector<std::size_t> slot_of(r);  // old coordinate index -> new slot
    for (std::size_t k = 0; k < r; ++k) {
        basis_reordered[k] = t_basis[order[k]];
        slot_of[order[k]] = k;
    }
    t_basis = basis_reordered;
    std::vector<Word> t_coords(target.size(), 0);
    for (std::size_t j = 0; j < target.size(); ++j)
        for (std::size_t i = 0; i < r; ++i)
            if ((raw_coords[j] >> i) & 1u) t_coords[j] |= Word(1) << slot_of[i];

    std::vector<Word> host_cols(host.size());
    for (std::size_t i = 0; i < host.size(); ++i) host_cols[i] = host.matrix().column(i);

    std::vector<int> image(target.size(), -1);  // target element -> host element
    std::vector<bool> used(host.size(), false);

    // columns become forced as soon as their coordinates lie inside the
    // placed basis prefix
    std::vector<std::vector<std::size_t>> forced_at(r + 1);
    for (std::size_t j = 0; j < target.size(); ++j) {
        bool is_basis = std::find(t_basis.begin(), t_basis.end(), j) != t_basis.end();
        if (is_basis) continue;
        Word c = t_coords[j];
        std::size_t need = c == 0 ? 0 : std::size_t(64 - std::countl_zero(c));
        forced_at[need].push_back(j);
    }

    // place the forced columns of level `k`; returns how many were placed
    // (or nullopt on failure, with placements rolled back by the caller)
    auto place_forced = [&](std::size_t k, std::vector<std::size_t>& placed) -> bool {
        for (std::size_t j : forced_at[k]) {
            Word want = 0;
            for (std::size_t i = 0; i < r; ++i)
                if ((t_coords[j] >> i) & 1u) want ^= host_cols[std::size_t(image[t_basis[i]])];
            bool ok = false;
            for (std::size_t h = 0; h < host.size(); ++h)
                if (!used[h] && host_cols[h] == want) {
                    image[j] = int(h);
                    used[h] = true;
                    placed.push_back(j);
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    };
    auto unplace = [&](const std::vector<std::size_t>& placed) {
        for (std::size_t j : placed) {
            used[std::size_t(image[j])] = false;
            image[j] = -1;
        }
    };

    std::vector<Word> chosen;  // reduced basis-so-far for independence checks
    auto independent_with = [&](Word v) {
        for (Word b : chosen) {
            Word lead = b & -b;
            if (v & lead) v ^= b;
        }
        return v != 0;
    };

    auto dfs = [&](auto&& self, std::size_t bi) -> bool {
        if (bi == t_basis.size()) return true;
        for (std::size_t h = 0; h < host.size(); ++h) {
            if (used[h] || !independent_with(host_cols[h])) continue;
            image[t_basis[bi]] = int(h);
            used[h] = true;
            Word v = host_cols[h];
            for (Word b : chosen) {
                Word lead = b & -b;
                if (v & lead) v ^= b;
            }
            chosen.push_back(v);
            std::vector<std::size_t> placed;
            if (place_forced(bi + 1, placed) && self(self, bi + 1)) return true;
            unplace(placed);
            chosen.pop_back();
            used[h] = false;
            image[t_basis[bi]] = -1;
        }
        return false;
    };
    {
        std::vector<std::size_t> placed0;
        if (!place_forced(0, placed0) || !dfs(dfs, 0)) return std::nullopt;
    }

    std::vector<std::string> deleted;
    for (std::size_t h = 0; h < host.size(); ++h)
        if (!used[h]) deleted.push_back(host.label(h));
    IsoCertificate cert;
    for (std::size_t j = 0; j < target.size(); ++j)
        cert.mapping.push_back({host.label(std::size_t(image[j])), target.label(j)});
    std::sort(cert.mapping.begin(), cert.mapping.end());
    return std::make_pair(deleted, cert);
}

struct MinorSearch {
    const BinaryMatroid* target;
    std::size_t target_classes = 0;
    std::set<std::string> dead;  // canonical keys known target-free
    std::optional<MinorWitness> found;

    // dfs over contraction choices only (contractions and deletions
    // commute); the deletion phase is the restriction search. Contract-sets
    // are kept independent (a minor always has such a representation with
    // exactly r(M) - r(N) contractions), so loops are never contracted.
    bool dfs(const BinaryMatroid& cur, std::size_t from, std::size_t need_c,
             std::vector<std::string>& con) {
        std::size_t tr = target->rank(), tcr = target->size() - target->rank();
        if (cur.rank() != tr + need_c) return false;  // contract drops rank by 1 each
        if (cur.size() - cur.rank() < tcr) return false;
        if (cur.size() < target->size() + need_c) return false;
        // neither deletion nor contraction (a projection) can increase the
        // number of distinct nonzero column classes
        if (nonzero_class_count(cur) < target_classes) return false;
        if (need_c == 0) {
            auto w = restriction_witness(cur, *target);
            if (!w) return false;
            found = MinorWitness{w->first, con, w->second};
            return true;
        }
        bool memo = cur.size() <= target->size() + 3 && cur.size() <= 12;
        std::string key;
        if (memo) {
            key = canonical_form(cur) + "|" + std::to_string(need_c);
            if (dead.count(key)) return false;
        }
        for (std::size_t pos = from; pos < cur.size(); ++pos) {
            if (cur.is_loop(pos)) continue;
            BinaryMatroid next = cur.contract_elements(Word(1) << pos);
            con.push_back(cur.label(pos));
            if (dfs(next, pos, need_c - 1, con)) return true;
            con.pop_back();
        }
        if (memo) dead.insert(key);
        return false;
    }
};

}  // namespace

std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& n,
                                      std::size_t gap_cap) {
    if (m.size() < n.size()) return std::nullopt;
    if (m.size() - n.size() > gap_cap)
        throw std::invalid_argument(
            "has_minor: element gap " + std::to_string(m.size() - n.size()) +
            " exceeds the configured cap " + std::to_string(gap_cap));
    if (m.rank() < n.rank()) return std::nullopt;
    std::size_t need_c = m.rank() - n.rank();
    std::size_t total = m.size() - n.size();
    if (need_c > total) return std::nullopt;
    if ((m.size() - m.rank()) < (n.size() - n.rank())) return std::nullopt;

    MinorSearch s;
    s.target = &n;
    s.target_classes = nonzero_class_count(n);
    std::vector<std::string> con;
    s.dfs(m, 0, need_c, con);
    return s.found;
}

bool revalidate_witness(const BinaryMatroid& m, const BinaryMatroid& n, const MinorWitness& w) {
    BinaryMatroid minor = m.contract_elements(w.contracted).delete_elements(w.deleted);
    if (minor.size() != n.size()) return false;
    std::map<std::string, std::string> fwd;
    for (auto& [a, b] : w.iso.mapping) fwd[a] = b;
    if (fwd.size() != n.size()) return false;
    // the certificate must be a dependence-preserving bijection
    for (Word c : minor.circuits(4)) {
        std::vector<std::string> img;
        for (const auto& l : minor.labels_of(c)) img.push_back(fwd.at(l));
        if (!n.is_circuit(n.mask_of(img))) return false;
    }
    return is_isomorphic(minor, n).has_value();
}

}  // namespace bmt::minors
