#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmt/checks.hpp"
#include "bmt/connectivity.hpp"
#include "bmt/families.hpp"
#include "bmt/io.hpp"
#include "bmt/minors.hpp"
#include "bmt/moves.hpp"
#include "bmt/patterns.hpp"

using nlohmann::json;

namespace {

std::map<std::string, std::string> parse_params(const std::string& spec) {
    std::map<std::string, std::string> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("params look like key=value[,key=value...]");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

json separation_json(const bmt::BinaryMatroid& m, const bmt::connectivity::Separation& s) {
    return json{{"x", bmt::sorted_labels(m, s.side_x)},
                {"y", bmt::sorted_labels(m, s.side_y)},
                {"order", s.order}};
}

bmt::patterns::ConfigTemplate load_template(const std::string& spec,
                                            const std::map<std::string, std::string>& params) {
    if (!spec.empty() && spec[0] == '@')
        return bmt::patterns::parse_template(bmt::io::read_text_file(spec.substr(1)));
    return bmt::patterns::builtin(spec, params);
}

bmt::BinaryMatroid generate(const std::string& family,
                            const std::map<std::string, std::string>& params) {
    using namespace bmt::families;
    auto num = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("gen: family '" + family + "' needs parameter " + key);
        return std::stoul(it->second);
    };
    bool mobius = params.count("mobius") && params.at("mobius") != "0";
    if (family == "wheel") return wheel(num("n"));
    if (family == "m_n") return m_n(num("n"));
    if (family == "biwheel") return biwheel(num("n"));
    if (family == "biwheel_plus") return biwheel_plus(num("n"));
    if (family == "triangular_mobius") return triangular_mobius(num("r"));
    if (family == "triangular_mobius_no_z") return triangular_mobius_no_z(num("r"));
    if (family == "cubic_ladder") return cubic_ladder(num("n"), mobius);
    if (family == "quartic_ladder") return quartic_ladder(num("n"), mobius);
    if (family == "terrahawk") return terrahawk();
    if (family == "fano") return fano();
    if (family == "k4") return k4();
    if (family == "k5") return k5();
    if (family == "k33") return k33();
    if (family == "biwheel_alternating_minor") return biwheel_alternating_minor(num("n"));
    throw std::invalid_argument("gen: unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary matroid structure toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::size_t cap = 22;
    std::size_t limit = 20;
    std::size_t gap_cap = 8;
    unsigned seed = 1;
    bool as_json = false;
    std::string params_spec;
    app.add_option("--cap", cap, "exhaustive-search cap override");
    app.add_option("--limit", limit, "match limit (0 = exhaustive)");
    app.add_option("--gap-cap", gap_cap, "minor search element-gap cap");
    app.add_option("--seed", seed, "seed for pooled property suites");
    app.add_flag("--json", as_json, "machine output");
    app.add_option("--params", params_spec, "key=value[,key=value...]");

    std::string path_m, path_n, template_spec, move_name, binding_path, family, out_path,
        suite_name;

    auto* c_classify = app.add_subcommand("classify", "connectivity classification");
    c_classify->add_option("matroid", path_m)->required();

    auto* c_find = app.add_subcommand("find", "match a configuration template");
    c_find->add_option("matroid", path_m)->required();
    c_find->add_option("template", template_spec, "builtin name or @file")->required();

    auto* c_move = app.add_subcommand("move", "apply a reduction move");
    c_move->add_option("matroid", path_m)->required();
    c_move->add_option("move", move_name)->required();
    c_move->add_option("binding", binding_path, "variable binding file")->required();
    c_move->add_option("--minor", path_n, "matroid file for the N-minor verdict");
    c_move->add_option("-o,--out", out_path, "write the resulting matroid here");

    auto* c_minor = app.add_subcommand("minor", "N-minor search");
    c_minor->add_option("matroid", path_m)->required();
    c_minor->add_option("target", path_n)->required();

    auto* c_gen = app.add_subcommand("gen", "generate a named family instance");
    c_gen->add_option("family", family)->required();
    c_gen->add_option("-o,--out", out_path);

    auto* c_gen_t = app.add_subcommand("gen-template", "emit a builtin template file");
    c_gen_t->add_option("template", template_spec)->required();
    c_gen_t->add_option("-o,--out", out_path);

    auto* c_check = app.add_subcommand("check", "run a lemma/theorem suite");
    c_check->add_option("suite", suite_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto params = parse_params(params_spec);
        if (c_classify->parsed()) {
            auto m = bmt::io::read_bmat_file(path_m);
            auto cls = bmt::connectivity::classify(m, cap);
            if (as_json) {
                json j{{"tier", bmt::connectivity::tier_name(cls.tier)},
                       {"witnesses", json::array()}};
                for (const auto& w : cls.witnesses) j["witnesses"].push_back(separation_json(m, w));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "tier=" << bmt::connectivity::tier_name(cls.tier) << "\n";
                std::cout << "witnesses=" << cls.witnesses.size() << "\n";
                for (const auto& w : cls.witnesses) {
                    std::cout << "  order " << w.order << ": {";
                    auto ls = bmt::sorted_labels(m, w.side_x);
                    for (std::size_t i = 0; i < ls.size(); ++i) std::cout << (i ? "," : "") << ls[i];
                    std::cout << "} / complement\n";
                }
            }
        } else if (c_find->parsed()) {
            auto m = bmt::io::read_bmat_file(path_m);
            auto t = load_template(template_spec, params);
            auto ms = bmt::patterns::match(m, t, limit);
            if (as_json) {
                json j = json::array();
                for (const auto& mt : ms) j.push_back(mt.assignment);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "matches=" << ms.size() << "\n";
                for (const auto& mt : ms) {
                    for (const auto& [v, l] : mt.assignment) std::cout << v << "=" << l << " ";
                    std::cout << "\n";
                }
            }
        } else if (c_move->parsed()) {
            auto m = bmt::io::read_bmat_file(path_m);
            auto binding = bmt::io::read_binding_file(binding_path);
            // template selected by the move's expected configuration
            std::map<std::string, std::string> tparams = params;
            std::string tname;
            if (move_name == "trim_bowtie_string") tname = "bowtie_string";
            else if (move_name == "trim_open_rotor_chain") tname = "open_rotor_chain";
            else if (move_name == "trim_bowtie_ring") tname = "bowtie_ring";
            else if (move_name == "trim_ladder_structure") tname = "ladder_structure";
            else if (move_name == "enhanced_ladder_move") tname = "enhanced_quartic_ladder";
            else if (move_name == "mixed_ladder_move") tname = "open_quartic_ladder";
            else if (move_name == "delete_central_cocircuit") tname = "augmented_4_wheel";
            else throw std::invalid_argument("unknown move '" + move_name + "'");
            bmt::patterns::ConfigMatch match;
            match.tmpl = bmt::patterns::builtin(tname, tparams);
            match.assignment = binding;
            auto rep = bmt::moves::apply_move(move_name, m, match, nullptr);
            if (!path_n.empty()) {
                auto n = bmt::io::read_bmat_file(path_n);
                rep.n_minor_verdict = bmt::minors::has_minor(rep.result, n, gap_cap).has_value();
            }
            std::string tier = rep.result_class
                                   ? bmt::connectivity::tier_name(rep.result_class->tier)
                                   : "unclassified(" + rep.result_class_note + ")";
            if (as_json) {
                json j{{"move", rep.move_name},
                       {"deleted", rep.deleted},
                       {"contracted", rep.contracted},
                       {"result_elements", rep.result.size()},
                       {"result_rank", rep.result.rank()},
                       {"result_class", tier}};
                if (rep.n_minor_verdict) j["n_minor"] = *rep.n_minor_verdict;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "move=" << rep.move_name << "\n";
                std::cout << "deleted=";
                for (std::size_t i = 0; i < rep.deleted.size(); ++i)
                    std::cout << (i ? "," : "") << rep.deleted[i];
                std::cout << "\ncontracted=";
                for (std::size_t i = 0; i < rep.contracted.size(); ++i)
                    std::cout << (i ? "," : "") << rep.contracted[i];
                std::cout << "\nresult_class=" << tier << "\n";
                if (rep.n_minor_verdict)
                    std::cout << "n_minor=" << (*rep.n_minor_verdict ? "yes" : "no") << "\n";
            }
            if (!out_path.empty()) bmt::io::write_bmat_file(rep.result, out_path);
        } else if (c_minor->parsed()) {
            auto m = bmt::io::read_bmat_file(path_m);
            auto n = bmt::io::read_bmat_file(path_n);
            auto w = bmt::minors::has_minor(m, n, gap_cap);
            if (as_json) {
                json j;
                j["present"] = w.has_value();
                if (w) {
                    j["deleted"] = w->deleted;
                    j["contracted"] = w->contracted;
                }
                std::cout << j.dump(2) << "\n";
            } else if (w) {
                std::cout << "minor=present\ndeleted=";
                for (std::size_t i = 0; i < w->deleted.size(); ++i)
                    std::cout << (i ? "," : "") << w->deleted[i];
                std::cout << "\ncontracted=";
                for (std::size_t i = 0; i < w->contracted.size(); ++i)
                    std::cout << (i ? "," : "") << w->contracted[i];
                std::cout << "\n";
            } else {
                std::cout << "minor=none\n";
            }
            return w ? 0 : 1;
        } else if (c_gen->parsed()) {
            auto m = generate(family, params);
            std::string text = bmt::io::write_bmat(m);
            if (out_path.empty())
                std::cout << text;
            else
                bmt::io::write_text_file(out_path, text);
        } else if (c_gen_t->parsed()) {
            auto t = bmt::patterns::builtin(template_spec, params);
            std::string text = bmt::patterns::format_template(t);
            if (out_path.empty())
                std::cout << text;
            else
                bmt::io::write_text_file(out_path, text);
        } else if (c_check->parsed()) {
            auto res = bmt::checks::run_suite(suite_name, seed);
            if (as_json) {
                json j{{"suite", res.suite}, {"pass", res.pass()}, {"cases", json::array()}};
                for (const auto& c : res.cases)
                    j["cases"].push_back(
                        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& c : res.cases)
                    std::cout << "suite=" << res.suite << " case=" << c.name << " status="
                              << (c.pass ? "pass" : "FAIL")
                              << (c.detail.empty() ? "" : " detail=" + c.detail) << "\n";
                std::cout << "suite=" << res.suite << " overall="
                          << (res.pass() ? "pass" : "FAIL") << "\n";
            }
            return res.pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
