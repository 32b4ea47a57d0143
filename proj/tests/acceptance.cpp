// Acceptance harness: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code 0 iff
// everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bmt/checks.hpp"
#include "bmt/connectivity.hpp"
#include "bmt/families.hpp"
#include "bmt/io.hpp"
#include "bmt/minors.hpp"
#include "bmt/moves.hpp"
#include "bmt/patterns.hpp"

using namespace bmt;
using connectivity::Tier;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool suite_passes(const std::string& name, std::string& detail, unsigned seed = 1) {
    auto res = checks::run_suite(name, seed);
    std::size_t failed = 0;
    for (const auto& c : res.cases)
        if (!c.pass) ++failed;
    detail = std::to_string(res.cases.size()) + " cases, " + std::to_string(failed) + " failed";
    return res.pass();
}

bool crit_fano_identity(std::string& detail) {
    auto iso = minors::is_isomorphic(families::m_n(3), families::fano());
    detail = iso ? "M_3 == F_7 up to isomorphism" : "no isomorphism found";
    return iso.has_value();
}

bool crit_m4_k33(std::string& detail) {
    auto iso = minors::is_isomorphic(families::m_n(4), families::k33().dual());
    detail = iso ? "M_4 == M*(K_{3,3})" : "no isomorphism found";
    return iso.has_value();
}

bool crit_mn_classification(std::string& detail) {
    for (std::size_t n = 3; n <= 7; ++n) {
        auto cls = connectivity::classify(families::m_n(n));
        if (cls.tier != Tier::InternallyFourConnected) {
            detail = "M_" + std::to_string(n) + " classified " +
                     connectivity::tier_name(cls.tier);
            return false;
        }
    }
    detail = "M_3..M_7 all internally 4-connected";
    return true;
}

bool crit_delta_ladder(std::string& detail) {
    for (std::size_t r : {5u, 6u}) {
        auto iso = minors::is_isomorphic(families::triangular_mobius_no_z(r),
                                         families::cubic_ladder(r - 1, true).dual());
        if (!iso) {
            detail = "Delta_" + std::to_string(r) + "\\z mismatch";
            return false;
        }
    }
    detail = "r=5,6 both isomorphic to the cubic Moebius ladder dual";
    return true;
}

bool crit_biwheel_pair(std::string& detail) {
    BinaryMatroid m = families::biwheel(6);
    BinaryMatroid n = families::biwheel_alternating_minor(6);
    if (connectivity::classify(m).tier != Tier::InternallyFourConnected) {
        detail = "M(G_8) not internally 4-connected";
        return false;
    }
    if (connectivity::classify(n).tier != Tier::InternallyFourConnected) {
        detail = "alternating minor not internally 4-connected";
        return false;
    }
    auto w = minors::has_minor(m, n);
    if (!w || !minors::revalidate_witness(m, n, *w)) {
        detail = "minor relation missing";
        return false;
    }
    detail = "both internally 4-connected; minor witness revalidates";
    return true;
}

bool crit_lambda_calculus(std::string& detail) {
    std::vector<BinaryMatroid> battery = {
        families::wheel(5),  families::m_n(5),
        families::biwheel(4), families::biwheel_plus(4),
        families::triangular_mobius(5), families::cubic_ladder(4, true),
        families::quartic_ladder(4, false), families::terrahawk(),
    };
    std::mt19937 rng(424242);
    std::size_t samples = 0, violations = 0;
    while (samples < 1000) {
        const BinaryMatroid& m = battery[samples % battery.size()];
        BinaryMatroid d = m.dual();
        Word full = m.full_mask();
        Word x = rng() & full, y = rng() & full;
        ++samples;
        std::size_t lx = connectivity::lambda(m, x);
        bool ok = lx == connectivity::lambda(m, full & ~x);
        ok = ok && lx == connectivity::lambda(d, x);
        ok = ok && lx == m.rank_of(x) + m.corank_of(x) - std::size_t(std::popcount(x));
        ok = ok && connectivity::lambda(m, x) + connectivity::lambda(m, y) >=
                       connectivity::lambda(m, x & y) + connectivity::lambda(m, x | y);
        if (!ok) ++violations;
    }
    detail = std::to_string(samples) + " samples, " + std::to_string(violations) + " violations";
    return violations == 0;
}

bool crit_tier_chain(std::string& detail) {
    std::vector<BinaryMatroid> battery = {
        families::k4(),       families::fano(),     families::fano().dual(),
        families::wheel(4),   families::wheel(5),   families::wheel(6),
        families::m_n(4),     families::m_n(5),     families::m_n(6),
        families::biwheel(3), families::biwheel(4), families::biwheel_plus(4),
        families::triangular_mobius(5),             families::triangular_mobius_no_z(5),
        families::cubic_ladder(4, false),           families::cubic_ladder(4, true),
        families::quartic_ladder(4, false),         families::quartic_ladder(4, true),
        families::terrahawk(),                      families::k5(),
        families::k33(),
    };
    std::size_t violations = 0;
    for (const auto& m : battery) {
        auto threes = connectivity::find_k_separations(m, 3, 3);
        bool v43 = false, v44 = false, v45 = false, vnseq = false;
        for (auto& s : threes) {
            std::size_t sx = std::size_t(std::popcount(s.side_x));
            std::size_t sy = std::size_t(std::popcount(s.side_y));
            bool seqx = connectivity::is_sequential(m, s.side_x).has_value();
            bool seqy = connectivity::is_sequential(m, s.side_y).has_value();
            if (sx >= 4 && sy >= 4) v43 = true;
            if ((sx >= 5 || !seqx) && (sy >= 5 || !seqy)) v44 = true;
            auto v45side = [&](Word side, std::size_t sz, bool seq) {
                return sz >= 6 || !seq || connectivity::is_five_cofan_set(m, side);
            };
            if (v45side(s.side_x, sx, seqx) && v45side(s.side_y, sy, seqy)) v45 = true;
            if (!seqx && !seqy) vnseq = true;
        }
        // implication chain as violator-set containments
        if ((!v43 && v44) || (!v44 && v45) || (!v45 && vnseq)) ++violations;
        // classify agrees with the directly computed flags
        auto tier = connectivity::classify(m).tier;
        Tier expect;
        if (threes.empty())
            expect = Tier::FourConnected;
        else if (!v43)
            expect = Tier::InternallyFourConnected;
        else if (!v44)
            expect = Tier::FourFourSConnected;
        else if (!v45)
            expect = Tier::FourFiveSPlusConnected;
        else if (!vnseq)
            expect = Tier::SequentiallyFourConnected;
        else
            expect = Tier::ThreeConnected;
        if (tier != expect) ++violations;
    }
    detail = std::to_string(battery.size()) + " instances, " + std::to_string(violations) +
             " violations";
    return violations == 0;
}

bool crit_move_arithmetic(std::string& detail) {
    using namespace bmt::moves;
    using patterns::builtin;
    std::size_t checked = 0;
    auto verify = [&](const BinaryMatroid& m, const MoveReport& r, std::size_t dels,
                      std::size_t cons) {
        if (r.deleted.size() != dels || r.contracted.size() != cons) return false;
        if (r.result.size() != m.size() - dels - cons) return false;
        BinaryMatroid again = m.contract_elements(r.contracted).delete_elements(r.deleted);
        ++checked;
        return again == r.result;
    };
    BinaryMatroid q5 = families::quartic_ladder(5, false);
    BinaryMatroid q4 = families::quartic_ladder(4, false);
    BinaryMatroid octa = families::quartic_ladder(3, false);

    auto s = patterns::match(q5, builtin("bowtie_string", {{"n", "2"}}), 1);
    if (s.empty() || !verify(q5, trim_bowtie_string(q5, s[0]), 3, 0)) {
        detail = "bowtie string";
        return false;
    }
    auto orc = patterns::match(octa, builtin("open_rotor_chain", {{"n", "3"}}), 1);
    if (orc.empty() || !verify(octa, trim_open_rotor_chain(octa, orc[0]), 3, 0)) {
        detail = "open rotor chain";
        return false;
    }
    auto ring = patterns::match(q4, builtin("bowtie_ring", {{"n", "4"}}), 1);
    if (ring.empty() || !verify(q4, trim_bowtie_ring(q4, ring[0]), 4, 0)) {
        detail = "bowtie ring";
        return false;
    }
    auto lad = patterns::match(q5, builtin("ladder_structure", {{"n", "2"}, {"variant", "a1"}}), 1);
    if (lad.empty() || !verify(q5, trim_ladder_structure(q5, lad[0]), 3, 0)) {
        detail = "ladder structure";
        return false;
    }
    for (std::size_t k : {0u, 1u, 2u}) {
        auto t = builtin("enhanced_quartic_ladder", {{"k", std::to_string(k)}, {"variant", "a"}});
        patterns::ConfigMatch mt;
        mt.tmpl = t;
        mt.assignment["c0"] = "e0";
        mt.assignment["c1"] = "e2";
        mt.assignment["c2"] = "e4";
        const char* vpool[] = {"f0", "f1", "f2"};
        for (std::size_t i = 0; i <= k; ++i) mt.assignment["v" + std::to_string(i)] = vpool[i];
        if (!verify(q5, enhanced_ladder_move(q5, mt), k + 4, 0)) {
            detail = "enhanced ladder k=" + std::to_string(k);
            return false;
        }
    }
    auto oq = patterns::match(q5, builtin("open_quartic_ladder", {{"k", "3"}}), 1);
    if (oq.empty() || !verify(q5, mixed_ladder_move(q5, oq[0]), 3, 1)) {
        detail = "mixed ladder";
        return false;
    }
    auto aw = patterns::match(q5, builtin("augmented_4_wheel"), 1);
    if (aw.empty()) aw = patterns::match(families::terrahawk(), builtin("augmented_4_wheel"), 1);
    if (aw.empty()) {
        detail = "no augmented 4-wheel instance";
        return false;
    }
    const BinaryMatroid& host = aw[0].assignment.count("x1") &&
                                        q5.has_label(aw[0].assignment.at("x1"))
                                    ? q5
                                    : families::terrahawk();
    if (!verify(host, delete_central_cocircuit(host, aw[0]), 4, 0)) {
        detail = "central cocircuit";
        return false;
    }
    detail = std::to_string(checked) + " move reports verified";
    return true;
}

bool crit_file_round_trip(std::string& detail) {
    std::vector<std::pair<std::string, BinaryMatroid>> gens = {
        {"wheel(5)", families::wheel(5)},
        {"m_n(5)", families::m_n(5)},
        {"biwheel(4)", families::biwheel(4)},
        {"biwheel_plus(4)", families::biwheel_plus(4)},
        {"triangular_mobius(5)", families::triangular_mobius(5)},
        {"triangular_mobius_no_z(5)", families::triangular_mobius_no_z(5)},
        {"cubic_ladder(4,planar)", families::cubic_ladder(4, false)},
        {"cubic_ladder(4,mobius)", families::cubic_ladder(4, true)},
        {"quartic_ladder(4,planar)", families::quartic_ladder(4, false)},
        {"quartic_ladder(4,mobius)", families::quartic_ladder(4, true)},
        {"terrahawk", families::terrahawk()},
        {"fano", families::fano()},
        {"k4", families::k4()},
        {"k5", families::k5()},
        {"k33", families::k33()},
        {"graphic(K4)", families::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
        {"biwheel_alternating_minor(6)", families::biwheel_alternating_minor(6)},
    };
    for (auto& [name, m] : gens) {
        BinaryMatroid back = io::read_bmat(io::write_bmat(m));
        if (back.labels() != m.labels() ||
            minors::canonical_form(back) != minors::canonical_form(m)) {
            detail = name + " round trip failed";
            return false;
        }
    }
    detail = std::to_string(gens.size()) + " generators round-tripped";
    return true;
}

bool crit_lemma32(std::string& d) { return suite_passes("lemma3.2", d); }
bool crit_lemma52(std::string& d) { return suite_passes("lemma5.2", d); }
bool crit_lemma22(std::string& d) { return suite_passes("lemma2.2", d); }
bool crit_lemma42(std::string& d) { return suite_passes("lemma4.2", d); }
bool crit_theorem14(std::string& d) { return suite_passes("theorem1.4-instances", d); }

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 Fano identity M_3 = F_7", 1.0, crit_fano_identity},
        {"2 M_4 = M*(K_{3,3})", 1.0, crit_m4_k33},
        {"3 M_n internally 4-connected, n=3..7", 60.0, crit_mn_classification},
        {"4 Delta_r\\z = dual cubic Moebius ladder, r=5,6", 10.0, crit_delta_ladder},
        {"5 biwheel pair internally 4-connected + minor", 30.0, crit_biwheel_pair},
        {"6 lemma 3.2 unique 4-cocircuit suite", 60.0, crit_lemma32},
        {"7 lemma 5.2 isomorphism chain suite", 30.0, crit_lemma52},
        {"8 lemma 2.2 fan dichotomy suite", 300.0, crit_lemma22},
        {"9 lemma 4.2 quartic ladder identification", 10.0, crit_lemma42},
        {"10 lambda calculus on 1000 seeded samples", 30.0, crit_lambda_calculus},
        {"11 classification implication chain", 600.0, crit_tier_chain},
        {"12 move arithmetic", 600.0, crit_move_arithmetic},
        {"13 file round trip for every generator", 600.0, crit_file_round_trip},
        {"14 theorem 1.4 hypothesis guards", 600.0, crit_theorem14},
    };
    bool all = true;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.time_limit_s;
        std::printf("criterion %-48s %s (%.2fs%s)%s%s\n", c.name.c_str(),
                    ok && in_time ? "PASS" : "FAIL", secs,
                    in_time ? "" : " OVER TIME LIMIT", detail.empty() ? "" : " -- ",
                    detail.c_str());
        all = all && ok && in_time;
    }
    return all ? 0 : 1;
}
