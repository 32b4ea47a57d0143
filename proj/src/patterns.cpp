#include "bmt/patterns.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bmt/connectivity.hpp"
#include "bmt/minors.hpp"

namespace bmt::patterns {

int ConfigTemplate::var_id(const std::string& v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return int(i);
    throw std::invalid_argument("template '" + name + "': unknown variable '" + v + "'");
}

bool ConfigTemplate::is_free(int v) const {
    for (const auto& c : circuits)
        if (std::find(c.begin(), c.end(), v) != c.end()) return false;
    for (const auto& c : cocircuits)
        if (std::find(c.begin(), c.end(), v) != c.end()) return false;
    return true;
}

std::vector<std::string> ConfigTemplate::free_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (is_free(int(i))) out.push_back(vars[i]);
    return out;
}

void ConfigTemplate::validate() const {
    auto check_set = [&](const std::vector<int>& s, const char* what) {
        std::set<int> seen;
        for (int v : s) {
            if (v < 0 || std::size_t(v) >= vars.size())
                throw std::invalid_argument("template '" + name + "': bad variable id in " + what);
            if (!seen.insert(v).second)
                throw std::invalid_argument("template '" + name + "': repeated variable in " + what);
        }
    };
    for (const auto& c : circuits) check_set(c, "circuit");
    for (const auto& c : cocircuits) check_set(c, "cocircuit");
    for (const auto& g : distinct_groups) check_set(g, "distinct group");
    // A pair allowed to coincide must not co-occur in a required set:
    // elements of one circuit/cocircuit are distinct by definition.
    for (auto [u, v] : may_equal) {
        auto together = [&](const std::vector<int>& s) {
            return std::find(s.begin(), s.end(), u) != s.end() &&
                   std::find(s.begin(), s.end(), v) != s.end();
        };
        for (const auto& c : circuits)
            if (together(c))
                throw std::invalid_argument("template '" + name +
                                            "': may-equal pair forced distinct by a circuit");
        for (const auto& c : cocircuits)
            if (together(c))
                throw std::invalid_argument("template '" + name +
                                            "': may-equal pair forced distinct by a cocircuit");
    }
    for (const auto& p : automorphisms) {
        if (p.size() != vars.size())
            throw std::invalid_argument("template '" + name + "': automorphism arity mismatch");
        std::set<int> img(p.begin(), p.end());
        if (img.size() != vars.size() || *img.begin() != 0 || *img.rbegin() != int(vars.size()) - 1)
            throw std::invalid_argument("template '" + name + "': automorphism is not a permutation");
        auto maps_family = [&](const std::vector<std::vector<int>>& fam) {
            for (const auto& s : fam) {
                std::set<int> image;
                for (int v : s) image.insert(p[std::size_t(v)]);
                bool found = false;
                for (const auto& t : fam)
                    if (std::set<int>(t.begin(), t.end()) == image) found = true;
                if (!found) return false;
            }
            return true;
        };
        if (!maps_family(circuits) || !maps_family(cocircuits))
            throw std::invalid_argument("template '" + name +
                                        "': automorphism does not preserve the required sets");
    }
}

std::optional<std::string> ConfigMatch::at(const std::string& var) const {
    auto it = assignment.find(var);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
}

namespace {

bool pair_allowed(const ConfigTemplate& t, int u, int v) {
    for (auto [a, b] : t.may_equal)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

bool must_differ(const ConfigTemplate& t, int u, int v) {
    if (pair_allowed(t, u, v)) return false;
    for (const auto& g : t.distinct_groups) {
        bool hu = std::find(g.begin(), g.end(), u) != g.end();
        bool hv = std::find(g.begin(), g.end(), v) != g.end();
        if (hu && hv) return true;
    }
    // co-occurrence in a required set forces distinctness structurally
    auto together = [&](const std::vector<std::vector<int>>& fam) {
        for (const auto& s : fam)
            if (std::find(s.begin(), s.end(), u) != s.end() &&
                std::find(s.begin(), s.end(), v) != s.end())
                return true;
        return false;
    };
    return together(t.circuits) || together(t.cocircuits);
}

std::vector<std::vector<int>> automorphism_group(const ConfigTemplate& t) {
    std::size_t n = t.vars.size();
    std::vector<int> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = int(i);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& a : t.automorphisms) {
                std::vector<int> h(n);
                for (std::size_t i = 0; i < n; ++i) h[i] = a[std::size_t(g[i])];
                if (group.insert(h).second) next.push_back(h);
                if (group.size() > 100000)
                    throw std::invalid_argument("template automorphism group too large");
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

struct Matcher {
    const BinaryMatroid* m;
    const ConfigTemplate* t;
    std::size_t limit;
    std::vector<std::vector<int>> group;

    struct Req {
        bool circuit;
        std::vector<int> vars;
    };
    std::vector<Req> reqs;
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> circ_by_size, cocirc_by_size;
    std::vector<int> assign;  // var -> element position, -1 unbound
    std::vector<bool> done;
    std::set<std::vector<int>> seen;  // canonical assignment vectors
    std::vector<ConfigMatch> results;

    bool can_bind(int var, int elem) {
        for (std::size_t u = 0; u < assign.size(); ++u) {
            if (int(u) == var || assign[u] != elem) continue;
            if (must_differ(*t, var, int(u))) return false;
        }
        return true;
    }

    void emit() {
        std::vector<int> canon = assign;
        for (const auto& g : group) {
            // assignment after renaming variables by g
            std::vector<int> img(assign.size(), -1);
            for (std::size_t v = 0; v < assign.size(); ++v) img[std::size_t(g[v])] = assign[v];
            if (img < canon) canon = img;
        }
        if (!seen.insert(canon).second) return;
        ConfigMatch out;
        out.tmpl = *t;
        for (std::size_t v = 0; v < assign.size(); ++v)
            if (assign[v] >= 0) out.assignment[t->vars[v]] = m->label(std::size_t(assign[v]));
        results.push_back(std::move(out));
    }

    bool complete() const { return limit != 0 && results.size() >= limit; }

    void search() {
        if (complete()) return;
        // pick the unprocessed requirement with the most bound variables
        std::size_t best = reqs.size();
        int best_bound = -1;
        for (std::size_t i = 0; i < reqs.size(); ++i) {
            if (done[i]) continue;
            int bound = 0;
            for (int v : reqs[i].vars)
                if (assign[std::size_t(v)] >= 0) ++bound;
            if (bound > best_bound) {
                best_bound = bound;
                best = i;
            }
        }
        if (best == reqs.size()) {
            emit();
            return;
        }
        done[best] = true;
        const Req& r = reqs[best];
        auto& pool = r.circuit ? circ_by_size : cocirc_by_size;
        auto it = pool.find(r.vars.size());
        if (it != pool.end()) {
            for (const auto& cand : it->second) {
                try_candidate(r, cand);
                if (complete()) break;
            }
        }
        done[best] = false;
    }

    void try_candidate(const Req& r, const std::vector<std::size_t>& cand) {
        // bound vars must land inside the candidate
        std::vector<int> unbound;
        std::vector<bool> taken(cand.size(), false);
        for (int v : r.vars) {
            int a = assign[std::size_t(v)];
            if (a < 0) {
                unbound.push_back(v);
                continue;
            }
            bool ok = false;
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (!taken[j] && int(cand[j]) == a) {
                    taken[j] = true;
                    ok = true;
                    break;
                }
            if (!ok) return;
        }
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (!taken[j]) rest.push_back(cand[j]);
        // all injective assignments of `rest` onto `unbound`
        std::sort(rest.begin(), rest.end());
        std::vector<int> order(unbound.begin(), unbound.end());
        assign_rest(order, 0, rest);
    }

    void assign_rest(const std::vector<int>& order, std::size_t at, std::vector<std::size_t>& rest) {
        if (complete()) return;
        if (at == order.size()) {
            search();
            return;
        }
        int var = order[at];
        for (std::size_t j = 0; j < rest.size(); ++j) {
            int elem = int(rest[j]);
            if (!can_bind(var, elem)) continue;
            assign[std::size_t(var)] = elem;
            std::size_t saved = rest[j];
            rest.erase(rest.begin() + std::ptrdiff_t(j));
            assign_rest(order, at + 1, rest);
            rest.insert(rest.begin() + std::ptrdiff_t(j), saved);
            assign[std::size_t(var)] = -1;
            if (complete()) return;
        }
    }
};

}  // namespace

std::vector<ConfigMatch> match(const BinaryMatroid& m, const ConfigTemplate& t, std::size_t limit,
                               const std::map<std::string, std::string>& partial) {
    t.validate();
    Matcher mm;
    mm.m = &m;
    mm.t = &t;
    mm.limit = limit;
    mm.group = t.automorphisms.empty() ? std::vector<std::vector<int>>{} : automorphism_group(t);
    mm.assign.assign(t.vars.size(), -1);
    for (const auto& [var, label] : partial) {
        int v = t.var_id(var);
        int e = int(m.index_of(label));
        if (!mm.can_bind(v, e))
            throw std::invalid_argument("match: partial binding violates distinctness");
        mm.assign[std::size_t(v)] = e;
    }

    std::size_t max_circ = 0, max_cocirc = 0;
    for (const auto& c : t.circuits) {
        mm.reqs.push_back({true, c});
        max_circ = std::max(max_circ, c.size());
    }
    for (const auto& c : t.cocircuits) {
        mm.reqs.push_back({false, c});
        max_cocirc = std::max(max_cocirc, c.size());
    }
    mm.done.assign(mm.reqs.size(), false);
    if (max_circ > 0)
        for (Word w : m.circuits(max_circ)) {
            std::vector<std::size_t> elems;
            for (std::size_t i = 0; i < m.size(); ++i)
                if ((w >> i) & 1u) elems.push_back(i);
            mm.circ_by_size[elems.size()].push_back(elems);
        }
    if (max_cocirc > 0)
        for (Word w : m.cocircuits(max_cocirc)) {
            std::vector<std::size_t> elems;
            for (std::size_t i = 0; i < m.size(); ++i)
                if ((w >> i) & 1u) elems.push_back(i);
            mm.cocirc_by_size[elems.size()].push_back(elems);
        }
    mm.search();
    return mm.results;
}

std::optional<std::string> revalidate(const BinaryMatroid& m, const ConfigMatch& match) {
    const ConfigTemplate& t = match.tmpl;
    auto pos_of = [&](int var) -> int {
        auto it = match.assignment.find(t.vars[std::size_t(var)]);
        if (it == match.assignment.end()) return -1;
        return int(m.index_of(it->second));
    };
    auto check_family = [&](const std::vector<std::vector<int>>& fam, bool circuit)
        -> std::optional<std::string> {
        for (const auto& s : fam) {
            Word mask = 0;
            bool all_bound = true;
            for (int v : s) {
                int p = pos_of(v);
                if (p < 0) {
                    all_bound = false;
                    break;
                }
                mask |= Word(1) << p;
            }
            if (!all_bound) continue;
            if (std::size_t(std::popcount(mask)) != s.size())
                return "required set collapses under the assignment";
            if (circuit ? !m.is_circuit(mask) : !m.is_cocircuit(mask))
                return std::string("required ") + (circuit ? "circuit" : "cocircuit") +
                       " does not hold in the matroid";
        }
        return std::nullopt;
    };
    if (auto r = check_family(t.circuits, true)) return r;
    if (auto r = check_family(t.cocircuits, false)) return r;
    for (std::size_t u = 0; u < t.vars.size(); ++u)
        for (std::size_t v = u + 1; v < t.vars.size(); ++v) {
            int pu = pos_of(int(u)), pv = pos_of(int(v));
            if (pu < 0 || pv < 0 || pu != pv) continue;
            if (must_differ(t, int(u), int(v)))
                return "variables " + t.vars[u] + " and " + t.vars[v] +
                       " coincide but must be distinct";
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// builtins

namespace {

struct Builder {
    ConfigTemplate t;

    int var(const std::string& v) {
        for (std::size_t i = 0; i < t.vars.size(); ++i)
            if (t.vars[i] == v) return int(i);
        t.vars.push_back(v);
        return int(t.vars.size()) - 1;
    }
    std::vector<int> ids(const std::vector<std::string>& vs) {
        std::vector<int> out;
        for (const auto& v : vs) out.push_back(var(v));
        return out;
    }
    void circuit(const std::vector<std::string>& vs) { t.circuits.push_back(ids(vs)); }
    void cocircuit(const std::vector<std::string>& vs) { t.cocircuits.push_back(ids(vs)); }
    void all_distinct() {
        std::vector<int> g;
        for (std::size_t i = 0; i < t.vars.size(); ++i) g.push_back(int(i));
        t.distinct_groups = {g};
    }
    void allow_equal(const std::string& a, const std::string& b) {
        t.may_equal.push_back({var(a), var(b)});
    }
    // permutation given as cycles of variable names; fixed points implied
    void automorphism(const std::vector<std::vector<std::string>>& cycles) {
        std::vector<int> p(t.vars.size());
        for (std::size_t i = 0; i < t.vars.size(); ++i) p[i] = int(i);
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i)
                p[std::size_t(var(cyc[i]))] = var(cyc[(i + 1) % cyc.size()]);
        t.automorphisms.push_back(p);
    }
};

std::string sub(const std::string& stem, std::size_t i) { return stem + std::to_string(i); }

long param_long(const std::map<std::string, std::string>& params, const std::string& key,
                long def = std::numeric_limits<long>::min()) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (def != std::numeric_limits<long>::min()) return def;
        throw std::invalid_argument("builtin template: missing parameter '" + key + "'");
    }
    return std::stol(it->second);
}

std::string param_str(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::string& def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
}

std::string join_range(const std::string& stem, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i <= to; ++i) {
        if (!out.empty()) out += ' ';
        out += sub(stem, i);
    }
    return out;
}

ConfigTemplate make_bowtie() {
    Builder b;
    b.t.name = "bowtie";
    b.circuit({"a0", "b0", "c0"});
    b.circuit({"a1", "b1", "c1"});
    b.cocircuit({"b0", "c0", "a1", "b1"});
    b.all_distinct();
    b.automorphism({{"b0", "c0"}});
    b.automorphism({{"a1", "b1"}});
    return b.t;
}

ConfigTemplate make_bowtie_string(std::size_t n) {
    if (n < 1) throw std::invalid_argument("bowtie_string: n must be at least 1");
    Builder b;
    b.t.name = "bowtie_string";
    for (std::size_t i = 0; i <= n; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    for (std::size_t j = 0; j + 1 <= n; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    b.all_distinct();
    b.allow_equal("a0", sub("c", n));
    b.automorphism({{"b0", "c0"}});
    b.automorphism({{sub("a", n), sub("b", n)}});
    b.t.info["n"] = std::to_string(n);
    b.t.info["trim"] = join_range("c", 0, n);
    return b.t;
}

ConfigTemplate make_bowtie_ring(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("bowtie_ring: the ring contains at least three triangles");
    Builder b;
    b.t.name = "bowtie_ring";
    for (std::size_t i = 0; i < n; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    for (std::size_t i = 0; i < n; ++i)
        b.cocircuit(
            {sub("b", i), sub("c", i), sub("a", (i + 1) % n), sub("b", (i + 1) % n)});
    b.all_distinct();
    std::vector<std::vector<std::string>> rot_cycles;
    for (const char* stem : {"a", "b", "c"}) {
        std::vector<std::string> cyc;
        for (std::size_t i = 0; i < n; ++i) cyc.push_back(sub(stem, i));
        rot_cycles.push_back(cyc);
    }
    b.automorphism(rot_cycles);
    // reflection: a_i <-> c_{n-1-i}, b_i -> b_{n-1-i}
    {
        std::vector<int> p(b.t.vars.size());
        for (std::size_t i = 0; i < b.t.vars.size(); ++i) p[i] = int(i);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = n - 1 - i;
            p[std::size_t(b.var(sub("a", i)))] = b.var(sub("c", j));
            p[std::size_t(b.var(sub("c", i)))] = b.var(sub("a", j));
            p[std::size_t(b.var(sub("b", i)))] = b.var(sub("b", j));
        }
        b.t.automorphisms.push_back(p);
    }
    b.t.info["n"] = std::to_string(n);
    b.t.info["trim"] = join_range("c", 0, n - 1);
    return b.t;
}

ConfigTemplate make_quasi_rotor() {
    Builder b;
    b.t.name = "quasi_rotor";
    for (std::size_t i = 0; i <= 2; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    b.cocircuit({"b0", "c0", "a1", "b1"});
    b.cocircuit({"b1", "c1", "a2", "b2"});
    b.circuit({"c0", "b1", "a2"});
    b.all_distinct();
    b.automorphism({{"a0", "c2"}, {"b0", "b2"}, {"c0", "a2"}, {"a1", "c1"}});
    b.t.info["central_triangle"] = "a1 b1 c1";
    b.t.info["central_element"] = "b1";
    return b.t;
}

ConfigTemplate make_rotor_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("rotor_chain: n must be at least 2");
    Builder b;
    b.t.name = "rotor_chain";
    for (std::size_t i = 0; i <= n; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    for (std::size_t j = 0; j + 1 <= n; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    for (std::size_t i = 0; i + 2 <= n; ++i)
        b.circuit({sub("c", i), sub("b", i + 1), sub("a", i + 2)});
    b.all_distinct();
    b.allow_equal("a0", sub("c", n));
    {
        std::vector<int> p(b.t.vars.size());
        for (std::size_t i = 0; i < b.t.vars.size(); ++i) p[i] = int(i);
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t j = n - i;
            p[std::size_t(b.var(sub("a", i)))] = b.var(sub("c", j));
            p[std::size_t(b.var(sub("c", i)))] = b.var(sub("a", j));
            p[std::size_t(b.var(sub("b", i)))] = b.var(sub("b", j));
        }
        b.t.automorphisms.push_back(p);
    }
    b.t.info["n"] = std::to_string(n);
    return b.t;
}

ConfigTemplate make_open_rotor_chain(std::size_t n) {
    // n = number of dashed (trimmed) elements = triangles of the closed chain
    if (n < 3) throw std::invalid_argument("open_rotor_chain: at least three dashed elements");
    Builder b;
    b.t.name = "open_rotor_chain";
    b.var("b0");
    b.var("c0");
    for (std::size_t i = 1; i < n; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    b.cocircuit({"b0", "c0", "a1", "b1"});
    for (std::size_t j = 1; j + 1 < n; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    b.circuit({"c0", "b1", "a2"});
    for (std::size_t i = 1; i + 2 < n; ++i)
        b.circuit({sub("c", i), sub("b", i + 1), sub("a", i + 2)});
    b.all_distinct();
    b.t.info["n"] = std::to_string(n);
    b.t.info["trim"] = join_range("c", 0, n - 1);
    return b.t;
}

ConfigTemplate make_augmented_4_wheel() {
    Builder b;
    b.t.name = "augmented_4_wheel";
    b.circuit({"z2", "x1", "y2"});
    b.circuit({"y2", "x3", "z3"});
    b.circuit({"z3", "y3", "x2"});
    b.circuit({"x2", "y1", "z2"});
    b.cocircuit({"x1", "y1", "z1", "z2"});
    b.cocircuit({"x2", "y2", "z2", "z3"});
    b.cocircuit({"x3", "y3", "z3", "z4"});
    b.all_distinct();
    b.automorphism({{"x1", "x3"}, {"y1", "y3"}, {"z1", "z4"}, {"z2", "z3"}});
    b.automorphism({{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
    b.t.info["central_cocircuit"] = "x2 y2 z2 z3";
    b.t.info["trim"] = "x2 y2 z2 z3";
    return b.t;
}

ConfigTemplate make_fig8_diamond() {
    Builder b;
    b.t.name = "fig8_diamond";
    for (std::size_t i = 0; i <= 3; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    b.circuit({"b0", "b1", "b2", "b3"});
    b.circuit({"c1", "d1", "a2"});
    b.circuit({"c2", "d2", "a3"});
    for (std::size_t i = 0; i < 4; ++i)
        b.cocircuit(
            {sub("b", i), sub("c", i), sub("a", (i + 1) % 4), sub("b", (i + 1) % 4)});
    b.cocircuit({"d1", "a2", "c2", "d2"});
    b.all_distinct();
    {
        std::vector<int> p(b.t.vars.size());
        for (std::size_t i = 0; i < b.t.vars.size(); ++i) p[i] = int(i);
        for (std::size_t i = 0; i < 4; ++i) {
            std::size_t j = (4 - i) % 4;
            p[std::size_t(b.var(sub("a", i)))] = b.var(sub("c", j));
            p[std::size_t(b.var(sub("c", i)))] = b.var(sub("a", j));
            p[std::size_t(b.var(sub("b", i)))] = b.var(sub("b", j));
        }
        p[std::size_t(b.var("d1"))] = b.var("d2");
        p[std::size_t(b.var("d2"))] = b.var("d1");
        b.t.automorphisms.push_back(p);
    }
    b.t.figure_reconstructed = true;
    return b.t;
}

ConfigTemplate make_fig9_rainbow(std::size_t k) {
    if (k < 2) throw std::invalid_argument("fig9_rainbow: k must be at least 2");
    Builder b;
    b.t.name = "fig9_rainbow";
    for (std::size_t i = 0; i <= k; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    b.circuit({"e", "f", "g"});
    for (std::size_t i = 0; i + 1 <= k; ++i)
        b.circuit({sub("c", i), sub("d", i), sub("a", i + 1)});
    for (std::size_t j = 0; j + 1 <= k; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    for (std::size_t i = 1; i <= k; ++i)
        b.cocircuit({sub("d", i - 1), sub("a", i), sub("c", i), sub("d", i)});
    b.cocircuit({sub("b", k), sub("c", k), "e", "f"});
    b.all_distinct();
    b.allow_equal("a0", "g");
    b.allow_equal("a0", "e");
    b.allow_equal("b0", "f");
    b.allow_equal("c0", "g");
    b.automorphism({{"e", "f"}});
    b.t.figure_reconstructed = true;
    b.t.info["k"] = std::to_string(k);
    return b.t;
}

ConfigTemplate make_open_quartic_ladder(std::size_t k) {
    if (k < 3) throw std::invalid_argument("open_quartic_ladder: at least three dashed elements");
    Builder b;
    b.t.name = "open_quartic_ladder";
    b.circuit({"a", "b", "c"});
    for (std::size_t i = 1; i <= k; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    b.circuit({"d", "e", "f"});
    b.circuit({"c", "t0", "a1"});
    for (std::size_t i = 1; i + 1 <= k; ++i)
        b.circuit({sub("c", i), sub("t", i), sub("a", i + 1)});
    b.cocircuit({"b", "c", "a1", "b1"});
    for (std::size_t j = 1; j + 1 <= k; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    for (std::size_t i = 1; i <= k; ++i)
        b.cocircuit({sub("t", i - 1), sub("a", i), sub("c", i), sub("t", i)});
    b.cocircuit({sub("b", k), sub("c", k), "d", "e"});
    b.all_distinct();
    b.allow_equal("a", "f");
    b.allow_equal("a", "d");
    b.allow_equal("b", "e");
    b.allow_equal("c", "f");
    b.automorphism({{"d", "e"}});
    b.t.figure_reconstructed = true;
    b.t.info["k"] = std::to_string(k);
    b.t.info["trim"] = join_range("c", 1, k);
    b.t.info["arrow"] = sub("b", k);
    return b.t;
}

ConfigTemplate make_ladder_structure(std::size_t n, const std::string& variant) {
    if (n < 2) throw std::invalid_argument("ladder_structure: n must be at least 2");
    if (variant != "a1" && variant != "a2" && variant != "b1" && variant != "b2")
        throw std::invalid_argument("ladder_structure: variant must be a1, a2, b1 or b2");
    bool bvar = variant[0] == 'b';
    bool five_end = variant[1] == '2';
    Builder b;
    b.t.name = "ladder_structure";
    for (std::size_t i = 0; i <= n; ++i) b.circuit({sub("a", i), sub("b", i), sub("c", i)});
    for (std::size_t i = 0; i + 1 <= n; ++i)
        b.circuit({sub("c", i), sub("d", i), sub("a", i + 1)});
    if (bvar && five_end)
        b.cocircuit({"beta", "a0", "c0", "a1", "b1"});
    else
        b.cocircuit({"b0", "c0", "a1", "b1"});
    for (std::size_t j = 1; j + 1 <= n; ++j)
        b.cocircuit({sub("b", j), sub("c", j), sub("a", j + 1), sub("b", j + 1)});
    for (std::size_t i = 1; i + 2 <= n; ++i)
        b.cocircuit({sub("d", i - 1), sub("a", i), sub("c", i), sub("d", i)});
    if (!bvar && five_end)
        b.cocircuit({sub("d", n - 2), sub("a", n - 1), sub("c", n - 1), sub("a", n), sub("c", n)});
    else
        b.cocircuit({sub("d", n - 2), sub("a", n - 1), sub("c", n - 1), sub("d", n - 1)});
    if (bvar) {
        // beta (when not in the start cocircuit), gamma and d_n are shown in
        // the figure but carry no caption-stated incidence; they stay free.
        b.var("beta");
        b.var("gamma");
        b.var(sub("d", n));
        b.allow_equal(sub("d", n), "gamma");
    }
    b.all_distinct();
    b.t.figure_reconstructed = true;
    b.t.info["n"] = std::to_string(n);
    b.t.info["variant"] = variant;
    b.t.info["trim"] = join_range("c", 0, n) + (bvar ? " beta" : "");
    return b.t;
}

ConfigTemplate make_enhanced_quartic_ladder(std::size_t k, const std::string& variant) {
    if (variant != "a" && variant != "b" && variant != "c")
        throw std::invalid_argument("enhanced_quartic_ladder: variant must be a, b or c");
    if (variant == "b" && k < 1)
        throw std::invalid_argument("enhanced_quartic_ladder: variant b needs k >= 1");
    if (variant == "c" && k < 2)
        throw std::invalid_argument("enhanced_quartic_ladder: variant c needs k >= 2");
    Builder b;
    b.t.name = "enhanced_quartic_ladder";
    for (std::size_t i = 0; i <= 2; ++i) b.var(sub("c", i));
    for (std::size_t i = 0; i <= k; ++i) b.var(sub("v", i));
    for (std::size_t i = 0; i <= k; ++i) b.var(sub("u", i));
    for (std::size_t i = 0; i <= k; ++i) b.var(sub("w", i));
    b.var("d2");
    // The reconstruction pins down only the variant (b) cocircuit,
    // defined when k >= 2; everything else stays free.
    if (variant == "b" && k >= 2)
        b.cocircuit({sub("w", k - 2), sub("u", k - 1), sub("v", k - 1), sub("u", k), sub("v", k)});
    b.all_distinct();
    b.allow_equal("d2", sub("w", k));
    b.t.figure_reconstructed = true;
    b.t.info["k"] = std::to_string(k);
    b.t.info["variant"] = variant;
    b.t.info["trim"] = "c2 c1 c0 " + join_range("v", 0, k);
    return b.t;
}

}  // namespace

ConfigTemplate builtin(const std::string& name, const std::map<std::string, std::string>& params) {
    ConfigTemplate t;
    if (name == "bowtie")
        t = make_bowtie();
    else if (name == "bowtie_string")
        t = make_bowtie_string(std::size_t(param_long(params, "n")));
    else if (name == "bowtie_ring")
        t = make_bowtie_ring(std::size_t(param_long(params, "n")));
    else if (name == "quasi_rotor")
        t = make_quasi_rotor();
    else if (name == "rotor_chain")
        t = make_rotor_chain(std::size_t(param_long(params, "n")));
    else if (name == "open_rotor_chain")
        t = make_open_rotor_chain(std::size_t(param_long(params, "n")));
    else if (name == "augmented_4_wheel")
        t = make_augmented_4_wheel();
    else if (name == "fig8_diamond")
        t = make_fig8_diamond();
    else if (name == "fig9_rainbow")
        t = make_fig9_rainbow(std::size_t(param_long(params, "k")));
    else if (name == "open_quartic_ladder")
        t = make_open_quartic_ladder(std::size_t(param_long(params, "k")));
    else if (name == "ladder_structure")
        t = make_ladder_structure(std::size_t(param_long(params, "n")),
                                  param_str(params, "variant", "a1"));
    else if (name == "enhanced_quartic_ladder")
        t = make_enhanced_quartic_ladder(std::size_t(param_long(params, "k")),
                                         param_str(params, "variant", "a"));
    else
        throw std::invalid_argument("builtin: unknown template '" + name + "'");
    t.validate();
    return t;
}

std::vector<std::string> builtin_names() {
    return {"bowtie",        "bowtie_string",    "bowtie_ring",
            "quasi_rotor",   "rotor_chain",      "open_rotor_chain",
            "augmented_4_wheel", "fig8_diamond", "fig9_rainbow",
            "open_quartic_ladder", "ladder_structure", "enhanced_quartic_ladder"};
}

// ---------------------------------------------------------------------------
// template file grammar

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::istringstream in(clean);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

ConfigTemplate parse_template(const std::string& text) {
    ConfigTemplate t;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("template parse error at line " + std::to_string(lineno) +
                                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (section.empty()) {
            if (head == "NAME") {
                if (toks.size() != 2) fail("NAME takes one token");
                t.name = toks[1];
            } else if (head == "VARIABLES") {
                for (std::size_t i = 1; i < toks.size(); ++i) t.vars.push_back(toks[i]);
            } else if (head == "FIGURE_RECONSTRUCTED") {
                t.figure_reconstructed = true;
            } else if (head == "CIRCUITS" || head == "COCIRCUITS" || head == "DISTINCT" ||
                       head == "MAY_EQUAL" || head == "AUTOMORPHISMS" || head == "INFO") {
                section = head;
            } else {
                fail("unknown directive '" + head + "'");
            }
            continue;
        }
        if (head == "END") {
            section.clear();
            continue;
        }
        auto ids = [&](const std::vector<std::string>& names) {
            std::vector<int> out;
            for (const auto& v : names) out.push_back(t.var_id(v));
            return out;
        };
        if (section == "CIRCUITS")
            t.circuits.push_back(ids(toks));
        else if (section == "COCIRCUITS")
            t.cocircuits.push_back(ids(toks));
        else if (section == "DISTINCT")
            t.distinct_groups.push_back(ids(toks));
        else if (section == "MAY_EQUAL") {
            if (toks.size() != 2) fail("MAY_EQUAL lines take two variables");
            t.may_equal.push_back({t.var_id(toks[0]), t.var_id(toks[1])});
        } else if (section == "AUTOMORPHISMS") {
            std::vector<int> p(t.vars.size());
            for (std::size_t i = 0; i < t.vars.size(); ++i) p[i] = int(i);
            for (const auto& tok : toks) {
                auto sep = tok.find(':');
                if (sep == std::string::npos) fail("automorphism entries look like from:to");
                p[std::size_t(t.var_id(tok.substr(0, sep)))] = t.var_id(tok.substr(sep + 1));
            }
            t.automorphisms.push_back(p);
        } else if (section == "INFO") {
            for (const auto& tok : toks) {
                auto sep = tok.find('=');
                if (sep == std::string::npos) fail("INFO entries look like key=value");
                std::string key = tok.substr(0, sep);
                std::string val = tok.substr(sep + 1);
                // values with spaces use '_' in files; trim lists use commas
                std::replace(val.begin(), val.end(), ',', ' ');
                t.info[key] = val;
            }
        }
    }
    if (!section.empty())
        throw std::invalid_argument("template parse error: unterminated section " + section);
    t.validate();
    return t;
}

std::string format_template(const ConfigTemplate& t) {
    std::ostringstream out;
    if (!t.name.empty()) out << "NAME " << t.name << "\n";
    out << "VARIABLES";
    for (const auto& v : t.vars) out << ' ' << v;
    out << "\n";
    if (t.figure_reconstructed) out << "FIGURE_RECONSTRUCTED\n";
    auto fam = [&](const char* head, const std::vector<std::vector<int>>& f) {
        out << head << "\n";
        for (const auto& s : f) {
            for (std::size_t i = 0; i < s.size(); ++i)
                out << (i ? " " : "") << t.vars[std::size_t(s[i])];
            out << "\n";
        }
        out << "END\n";
    };
    fam("CIRCUITS", t.circuits);
    fam("COCIRCUITS", t.cocircuits);
    fam("DISTINCT", t.distinct_groups);
    out << "MAY_EQUAL\n";
    for (auto [u, v] : t.may_equal)
        out << t.vars[std::size_t(u)] << ' ' << t.vars[std::size_t(v)] << "\n";
    out << "END\n";
    out << "AUTOMORPHISMS\n";
    for (const auto& p : t.automorphisms) {
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == int(i)) continue;
            out << (first ? "" : " ") << t.vars[i] << ':' << t.vars[std::size_t(p[i])];
            first = false;
        }
        out << "\n";
    }
    out << "END\n";
    if (!t.info.empty()) {
        out << "INFO\n";
        for (const auto& [k, v] : t.info) {
            std::string val = v;
            std::replace(val.begin(), val.end(), ' ', ',');
            out << k << '=' << val << "\n";
        }
        out << "END\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

std::optional<std::string> is_good_bowtie(const BinaryMatroid& m, const ConfigMatch& bowtie,
                                          const BinaryMatroid& n) {
    if (auto why = revalidate(m, bowtie))
        throw std::invalid_argument("is_good_bowtie: invalid bowtie match: " + *why);
    for (const char* var : {"b0", "c0", "a1", "b1"}) {
        auto d = bowtie.at(var);
        if (!d) throw std::invalid_argument("is_good_bowtie: bowtie binding incomplete");
        BinaryMatroid del = m.delete_elements({*d});
        bool conn;
        try {
            conn = connectivity::is_4_4_s_connected(del);
        } catch (const std::invalid_argument&) {
            conn = false;  // degenerate deletion cannot be (4,4,S)-connected
        }
        if (!conn) continue;
        if (minors::has_minor(del, n)) return *d;
    }
    return std::nullopt;
}

HypothesisViiReport check_hypothesis_vii(const BinaryMatroid& m, const BinaryMatroid& n,
                                         std::size_t cap) {
    HypothesisViiReport report;
    ConfigTemplate bow = builtin("bowtie");
    bow.automorphisms.clear();  // c0/c1 are distinguished by the hypothesis
    for (int side = 0; side < 2; ++side) {
        BinaryMatroid m1 = side == 0 ? m : m.dual();
        BinaryMatroid n1 = side == 0 ? n : n.dual();
        std::map<std::string, bool> ffs_cache;  // deletion label -> (4,4,S)?
        auto ffs_after_delete = [&](const std::string& label) {
            auto it = ffs_cache.find(label);
            if (it != ffs_cache.end()) return it->second;
            bool v;
            try {
                v = connectivity::is_4_4_s_connected(m1.delete_elements({label}), cap);
            } catch (const std::invalid_argument&) {
                v = false;
            }
            ffs_cache[label] = v;
            return v;
        };
        for (const auto& mt : match(m1, bow, 0)) {
            std::string c0 = *mt.at("c0"), c1 = *mt.at("c1");
            HypothesisViiCase cs;
            cs.side = side == 0 ? "M" : "M*";
            cs.assignment = mt.assignment;
            bool premise = ffs_after_delete(c0) &&
                           minors::has_minor(m1.delete_elements({c0, c1}), n1).has_value();
            cs.premise_holds = premise;
            if (premise) cs.conclusion_holds = ffs_after_delete(c1);
            if (premise) report.cases.push_back(cs);
        }
    }
    return report;
}

std::size_t HypothesisViiReport::violations() const {
    std::size_t v = 0;
    for (const auto& c : cases)
        if (c.premise_holds && !c.conclusion_holds) ++v;
    return v;
}

}  // namespace bmt::patterns
