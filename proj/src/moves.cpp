#include "bmt/moves.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "bmt/minors.hpp"

namespace bmt::moves {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::vector<std::string> bound_labels(const patterns::ConfigMatch& match,
                                      const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& v : vars) {
        auto l = match.at(v);
        if (!l)
            throw std::invalid_argument("move: variable '" + v +
                                        "' is unbound; supply it in the binding");
        // identified variables (allowed coincidences) delete once
        if (std::find(out.begin(), out.end(), *l) == out.end()) out.push_back(*l);
    }
    return out;
}

MoveReport finish(const std::string& name, const BinaryMatroid& m,
                  const std::vector<std::string>& del, const std::vector<std::string>& con,
                  const BinaryMatroid* n) {
    MoveReport r;
    r.move_name = name;
    r.deleted = del;
    r.contracted = con;
    r.result = m.contract_elements(con).delete_elements(del);
    if (r.result.size() != m.size() - del.size() - con.size())
        throw std::logic_error("move: element count postcondition failed");
    try {
        r.result_class = connectivity::classify(r.result);
    } catch (const std::invalid_argument& e) {
        r.result_class_note = e.what();
    }
    if (n) r.n_minor_verdict = minors::has_minor(r.result, *n).has_value();
    return r;
}

void require_valid(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                   const std::string& expected_template) {
    if (match.tmpl.name != expected_template)
        throw std::invalid_argument("move: expected a " + expected_template + " match, got " +
                                    match.tmpl.name);
    if (auto why = patterns::revalidate(m, match))
        throw std::invalid_argument("move: invalid match: " + *why);
}

MoveReport trim_by_info(const std::string& move_name, const std::string& template_name,
                        const BinaryMatroid& m, const patterns::ConfigMatch& match,
                        const BinaryMatroid* n) {
    require_valid(m, match, template_name);
    auto it = match.tmpl.info.find("trim");
    if (it == match.tmpl.info.end())
        throw std::invalid_argument("move: template carries no trim list");
    return finish(move_name, m, bound_labels(match, split_ws(it->second)), {}, n);
}

}  // namespace

MoveReport trim_bowtie_string(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                              const BinaryMatroid* n) {
    return trim_by_info("trim_bowtie_string", "bowtie_string", m, match, n);
}

MoveReport trim_open_rotor_chain(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                 const BinaryMatroid* n) {
    return trim_by_info("trim_open_rotor_chain", "open_rotor_chain", m, match, n);
}

MoveReport trim_bowtie_ring(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                            const BinaryMatroid* n) {
    return trim_by_info("trim_bowtie_ring", "bowtie_ring", m, match, n);
}

MoveReport trim_ladder_structure(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                 const BinaryMatroid* n) {
    return trim_by_info("trim_ladder_structure", "ladder_structure", m, match, n);
}

MoveReport enhanced_ladder_move(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                const BinaryMatroid* n) {
    return trim_by_info("enhanced_ladder_move", "enhanced_quartic_ladder", m, match, n);
}

MoveReport mixed_ladder_move(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                             const BinaryMatroid* n) {
    require_valid(m, match, "open_quartic_ladder");
    auto trim_it = match.tmpl.info.find("trim");
    auto arrow_it = match.tmpl.info.find("arrow");
    if (trim_it == match.tmpl.info.end() || arrow_it == match.tmpl.info.end())
        throw std::invalid_argument("mixed_ladder_move: template lacks trim/arrow data");
    auto del = bound_labels(match, split_ws(trim_it->second));
    auto con = bound_labels(match, {arrow_it->second});
    if (con.size() != 1) throw std::invalid_argument("mixed_ladder_move: one arrow edge expected");
    return finish("mixed_ladder_move", m, del, con, n);
}

MoveReport delete_central_cocircuit(const BinaryMatroid& m, const patterns::ConfigMatch& match,
                                    const BinaryMatroid* n) {
    return trim_by_info("delete_central_cocircuit", "augmented_4_wheel", m, match, n);
}

MoveReport apply_move(const std::string& move_name, const BinaryMatroid& m,
                      const patterns::ConfigMatch& match, const BinaryMatroid* n) {
    if (move_name == "trim_bowtie_string") return trim_bowtie_string(m, match, n);
    if (move_name == "trim_open_rotor_chain") return trim_open_rotor_chain(m, match, n);
    if (move_name == "trim_bowtie_ring") return trim_bowtie_ring(m, match, n);
    if (move_name == "trim_ladder_structure") return trim_ladder_structure(m, match, n);
    if (move_name == "enhanced_ladder_move") return enhanced_ladder_move(m, match, n);
    if (move_name == "mixed_ladder_move") return mixed_ladder_move(m, match, n);
    if (move_name == "delete_central_cocircuit") return delete_central_cocircuit(m, match, n);
    throw std::invalid_argument("apply_move: unknown move '" + move_name + "'");
}

std::vector<std::string> move_names() {
    return {"trim_bowtie_string",   "trim_open_rotor_chain", "trim_bowtie_ring",
            "trim_ladder_structure", "enhanced_ladder_move",  "mixed_ladder_move",
            "delete_central_cocircuit"};
}

// ---------------------------------------------------------------------------

namespace {

bool internally_4c(const BinaryMatroid& m, std::size_t cap) {
    try {
        return connectivity::is_internally_4_connected(m, cap);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::string describe_removal(const std::vector<std::string>& del,
                             const std::vector<std::string>& con) {
    std::string s;
    if (!del.empty()) {
        s += "delete {";
        for (std::size_t i = 0; i < del.size(); ++i) s += (i ? "," : "") + del[i];
        s += "}";
    }
    if (!con.empty()) {
        if (!s.empty()) s += ", ";
        s += "contract {";
        for (std::size_t i = 0; i < con.size(); ++i) s += (i ? "," : "") + con[i];
        s += "}";
    }
    return s;
}

// Outcome (i): all removal multisets of size 1..3 (mixed delete/contract),
// plus the 4-element augmented-4-wheel central cocircuit deletions.
void quick_win_scan(const BinaryMatroid& m0, const BinaryMatroid& n0, const std::string& side,
                    std::size_t cap, std::vector<TheoremOutcome>& out) {
    std::size_t n = m0.size();
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= 3; ++k) {
        idx.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            for (std::uint32_t split = 0; split < (1u << k); ++split) {
                std::vector<std::string> del, con;
                bool skip = false;
                for (std::size_t i = 0; i < k; ++i) {
                    if ((split >> i) & 1u) {
                        if (m0.is_loop(idx[i])) {  // contracting a loop is deleting it
                            skip = true;
                            break;
                        }
                        con.push_back(m0.label(idx[i]));
                    } else {
                        del.push_back(m0.label(idx[i]));
                    }
                }
                if (skip) continue;
                BinaryMatroid minor = m0.contract_elements(con).delete_elements(del);
                if (!internally_4c(minor, cap)) continue;
                if (!minors::has_minor(minor, n0)) continue;
                out.push_back({1, side, "quick win: " + describe_removal(del, con), del, con});
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // augmented 4-wheel central-cocircuit deletions
    for (const auto& mt : patterns::match(m0, patterns::builtin("augmented_4_wheel"), 0)) {
        MoveReport rep = delete_central_cocircuit(m0, mt, &n0);
        bool i4c = rep.result_class &&
                   (rep.result_class->tier == connectivity::Tier::InternallyFourConnected ||
                    rep.result_class->tier == connectivity::Tier::FourConnected);
        if (i4c && rep.n_minor_verdict.value_or(false))
            out.push_back({1, side,
                           "quick win: augmented-4-wheel central cocircuit " +
                               describe_removal(rep.deleted, {}),
                           rep.deleted,
                           {}});
    }
}

void structured_scan(const BinaryMatroid& m0, const BinaryMatroid& n0, const std::string& side,
                     std::vector<TheoremOutcome>& out, std::vector<std::string>& notes) {
    using patterns::builtin;
    auto consider = [&](int clause, const MoveReport& rep, const std::string& what) {
        bool i4c = rep.result_class &&
                   (rep.result_class->tier == connectivity::Tier::InternallyFourConnected ||
                    rep.result_class->tier == connectivity::Tier::FourConnected);
        if (i4c && rep.n_minor_verdict.value_or(false))
            out.push_back({clause, side, what + ": " + describe_removal(rep.deleted, rep.contracted),
                           rep.deleted, rep.contracted});
    };
    std::size_t sz = m0.size();
    // (ii) open rotor chains, ladder structures, bowtie rings
    for (std::size_t n = 3; 3 * n - 1 <= sz; ++n)
        for (const auto& mt : patterns::match(m0, builtin("open_rotor_chain", {{"n", std::to_string(n)}}), 0))
            consider(2, trim_open_rotor_chain(m0, mt, &n0), "trim open rotor chain");
    for (std::size_t n = 2; 3 * (n + 1) + n <= sz; ++n)
        for (const char* variant : {"a1", "a2"})
            for (const auto& mt : patterns::match(
                     m0, builtin("ladder_structure", {{"n", std::to_string(n)}, {"variant", variant}}), 0))
                consider(2, trim_ladder_structure(m0, mt, &n0), "trim ladder structure");
    for (std::size_t n = 3; 3 * n <= sz; ++n)
        for (const auto& mt : patterns::match(m0, builtin("bowtie_ring", {{"n", std::to_string(n)}}), 0))
            consider(2, trim_bowtie_ring(m0, mt, &n0), "trim bowtie ring");
    // (iii) mixed ladder
    for (std::size_t k = 3; 4 * k + 7 <= sz; ++k)
        for (const auto& mt : patterns::match(m0, builtin("open_quartic_ladder", {{"k", std::to_string(k)}}), 0))
            consider(3, mixed_ladder_move(m0, mt, &n0), "mixed ladder move");
    // (iv) the enhanced-ladder templates declare almost all variables free,
    // so no binding can be discovered by search alone.
    notes.push_back(side +
                    ": enhanced-ladder outcome requires an explicit binding (figure-reconstructed "
                    "template has free variables); none searched");
}

}  // namespace

TheoremOutcomeReport check_theorem_outcome(const BinaryMatroid& m, const BinaryMatroid& n,
                                           const patterns::ConfigMatch& bowtie, std::size_t cap) {
    TheoremOutcomeReport rep;
    auto fail = [&](const std::string& h) {
        rep.hypotheses_ok = false;
        rep.failed_hypothesis = h;
        return rep;
    };
    if (m.size() < 16) return fail("|E(M)| >= 16");
    if (n.size() < 7) return fail("|E(N)| >= 7");
    if (!internally_4c(m, cap)) return fail("M internally 4-connected");
    if (!internally_4c(n, cap)) return fail("N internally 4-connected");
    if (bowtie.tmpl.name != "bowtie") return fail("bowtie match supplied");
    if (auto why = patterns::revalidate(m, bowtie)) return fail("bowtie match valid (" + *why + ")");
    // theorem labels: 1=a0 2=b0 3=c0 4=a1 5=b1 6=c1
    std::string e1 = *bowtie.at("a0"), e4 = *bowtie.at("a1");
    BinaryMatroid m_del4 = m.delete_elements({e4});
    bool ffs;
    try {
        ffs = connectivity::is_4_4_s_connected(m_del4, cap);
    } catch (const std::invalid_argument&) {
        ffs = false;
    }
    if (!ffs) return fail("M\\4 (4,4,S)-connected");
    if (!minors::has_minor(m_del4, n)) return fail("M\\4 has an N-minor");
    if (minors::has_minor(m.delete_elements({e1, e4}), n)) return fail("M\\1,4 has no N-minor");
    rep.hypotheses_ok = true;

    BinaryMatroid md = m.dual(), nd = n.dual();
    quick_win_scan(m, n, "M", cap, rep.outcomes);
    structured_scan(m, n, "M", rep.outcomes, rep.coverage_notes);
    quick_win_scan(md, nd, "M*", cap, rep.outcomes);
    structured_scan(md, nd, "M*", rep.outcomes, rep.coverage_notes);
    if (rep.outcomes.empty())
        rep.coverage_notes.push_back("none found within template coverage");
    return rep;
}

}  // namespace bmt::moves
