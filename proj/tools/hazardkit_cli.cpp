// hazardkit command line: hazard analysis, synthesis, and hard-instance
// generation for Boolean formulas and circuits.
//
// Exit codes: 0 analyzed, hazard-free (or generation succeeded);
//             1 usage error; 2 input/parse error; 3 analyzed, hazard found;
//             4 resource bound exceeded.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hazardkit/detectors.hpp"
#include "hazardkit/errors.hpp"
#include "hazardkit/generate.hpp"
#include "hazardkit/implicants.hpp"
#include "hazardkit/json_io.hpp"
#include "hazardkit/reduction.hpp"
#include "hazardkit/synthesis.hpp"
#include "hazardkit/text_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace hazardkit;

constexpr int kExitHazardFree = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitHazard = 3;
constexpr int kExitBound = 4;

struct Options {
    std::string formula;
    std::string dnf;
    std::string cnf;
    std::string circuit_file;
    std::string truth_table;
    std::string input;
    std::string minterms;
    int vars = 0;
    int max_vars = kDefaultBruteForceBound;
    int enum_bound = kDefaultEnumerationBound;
    int jobs = 0;
    std::uint64_t seed = 1;
    int r = 1;
    int s = 3;
    int groups = 1;
    int hazard_group = -1;
    int random_count = 0;
    int random_terms = 4;
    int random_width = 3;
};

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const json& doc, const std::string& summary) {
    std::cout << doc.dump(2) << "\n";
    std::cerr << summary << "\n";
}

int exit_code_for(const HazardReport& r) { return r.found ? kExitHazard : kExitHazardFree; }

std::string summarize(const HazardReport& r) {
    if (!r.found) return "hazard-free (" + method_name(r.method) + ")";
    return kind_name(r.kind) + " at " + r.witness.to_string() + " (" + method_name(r.method) + ")";
}

Circuit load_circuit(const Options& opt) {
    int provided = !opt.formula.empty() + !opt.circuit_file.empty() + !opt.dnf.empty() +
                   !opt.cnf.empty() + !opt.truth_table.empty();
    if (provided != 1)
        throw CLI::ValidationError("exactly one of --formula/--circuit/--dnf/--cnf/--truth-table");
    if (!opt.formula.empty()) return parse_formula(opt.formula, opt.vars);
    if (!opt.dnf.empty()) return circuit_from_dnf(parse_dnf(opt.dnf, opt.vars));
    if (!opt.cnf.empty()) return circuit_from_cnf(parse_cnf(opt.cnf, opt.vars));
    if (!opt.truth_table.empty())
        throw CLI::ValidationError("--truth-table is only accepted by function-level commands");
    std::ifstream in(opt.circuit_file);
    if (!in) throw ParseError("cannot open circuit file " + opt.circuit_file, 1, 1);
    json doc = json::parse(in);
    return circuit_from_json(doc);
}

std::vector<bool> parse_truth_table_rows(const std::string& text, int vars) {
    if (vars <= 0) throw ParseError("--truth-table requires --vars", 1, 1);
    if (text.size() != (std::size_t{1} << vars))
        throw ParseError("truth table must have exactly 2^vars rows", 1, 1);
    std::vector<bool> rows(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw ParseError("truth table rows must be 0 or 1", 1, static_cast<int>(i) + 1);
        rows[i] = text[i] == '1';
    }
    return rows;
}

/// Function input for minterms/maxterms/huffman/inject.
TruthOracle load_oracle(const Options& opt) {
    if (!opt.truth_table.empty())
        return TruthOracle::from_truth_table(opt.vars, parse_truth_table_rows(opt.truth_table, opt.vars));
    return TruthOracle::from_circuit(load_circuit(opt));
}

json implicant_set_json(const ImplicantSet& set) {
    json items = json::array();
    json terms = json::array();
    for (const auto& a : set.items) items.push_back(a.to_string());
    for (const auto& t : set.terms()) terms.push_back(to_string(t));
    return json{{"count", set.items.size()}, {"items", items}, {"terms", terms}};
}

std::vector<PartialAssignment> parse_minterm_list(const std::string& csv) {
    std::vector<PartialAssignment> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_partial_assignment(item));
    }
    return out;
}

int cmd_eval(const Options& opt) {
    Circuit c = load_circuit(opt);
    PartialAssignment a = parse_partial_assignment(opt.input);
    if (a.size() != static_cast<std::size_t>(c.num_vars))
        throw ParseError("input length does not match the variable count", 1, 1);
    Timer t;
    TernaryValue v = eval_ternary(c, a);
    json doc{{"value", std::string(1, ternary_char(v))},
             {"input", opt.input},
             {"elapsed_ms", t.elapsed_ms()}};
    emit(doc, std::string("value: ") + ternary_char(v));
    return kExitHazardFree;
}

int cmd_resolutions(const Options& opt) {
    PartialAssignment a = parse_partial_assignment(opt.input);
    if (a.u_count() > 24) throw BoundExceeded("too many unstable positions to materialize");
    json items = json::array();
    for (const auto& r : resolutions(a)) items.push_back(r.to_string());
    emit(json{{"count", items.size()}, {"resolutions", items}},
         std::to_string(items.size()) + " resolutions");
    return kExitHazardFree;
}

int cmd_implicants(const Options& opt, bool minterms) {
    TruthOracle f = load_oracle(opt);
    Timer t;
    ImplicantSet set =
        minterms ? enumerate_minterms(f, opt.enum_bound) : enumerate_maxterms(f, opt.enum_bound);
    json doc = implicant_set_json(set);
    doc["elapsed_ms"] = t.elapsed_ms();
    emit(doc, std::to_string(set.items.size()) + (minterms ? " minterms" : " maxterms"));
    return kExitHazardFree;
}

int report_and_exit(const HazardReport& r, const Timer& t, json meta) {
    emit(report_to_json(r, t.elapsed_ms(), std::move(meta)), summarize(r));
    return exit_code_for(r);
}

int cmd_detect(const Options& opt) {
    Timer t;
    if (!opt.dnf.empty() && !opt.cnf.empty())
        throw CLI::ValidationError("give only one of --dnf/--cnf");
    if (!opt.dnf.empty()) {
        DnfFormula f = parse_dnf(opt.dnf, opt.vars);
        HazardReport r = dnf_detect_1hazard(f);
        json meta;
        bool contradictory = f.has_contradictory_terms();
        meta["note"] = contradictory
                           ? "contradictory terms present; 0-hazards were not checked "
                             "(eliminate-dnf0 removes them without changing the function)"
                           : "no contradictory terms, so the formula cannot have 0-hazards";
        json doc = report_to_json(r, t.elapsed_ms(), meta);
        if (!r.found && contradictory) doc["result"] = "unknown";
        emit(doc, summarize(r));
        return exit_code_for(r);
    }
    if (!opt.cnf.empty()) {
        CnfFormula f = parse_cnf(opt.cnf, opt.vars);
        HazardReport r = cnf_detect_0hazard(f);
        json meta;
        bool tautological = f.has_tautological_clauses();
        meta["note"] = tautological
                           ? "tautological clauses present; 1-hazards were not checked "
                             "(eliminate-cnf1 removes them without changing the function)"
                           : "no tautological clauses, so the formula cannot have 1-hazards";
        json doc = report_to_json(r, t.elapsed_ms(), meta);
        if (!r.found && tautological) doc["result"] = "unknown";
        emit(doc, summarize(r));
        return exit_code_for(r);
    }
    Circuit c = load_circuit(opt);
    if (c.num_vars > opt.enum_bound)
        throw BoundExceeded("circuit exceeds the enumeration bound; rerun with --enum-bound or "
                            "use detect-brute within --max-vars");
    return report_and_exit(eichelberger(c, opt.enum_bound), t, {});
}

int cmd_detect_brute(const Options& opt) {
    Circuit c = load_circuit(opt);
    Timer t;
    return report_and_exit(brute_force_hazard(c, opt.max_vars), t, {});
}

int cmd_detect_eichelberger(const Options& opt) {
    Circuit c = load_circuit(opt);
    Timer t;
    return report_and_exit(eichelberger(c, opt.enum_bound), t, {});
}

int cmd_detect_dnf1(const Options& opt) {
    DnfFormula f = parse_dnf(opt.dnf, opt.vars);
    Timer t;
    return report_and_exit(dnf_detect_1hazard(f), t, {});
}

int cmd_detect_cnf0(const Options& opt) {
    CnfFormula f = parse_cnf(opt.cnf, opt.vars);
    Timer t;
    return report_and_exit(cnf_detect_0hazard(f), t, {});
}

int cmd_list_hazards(const Options& opt) {
    Circuit c = load_circuit(opt);
    Timer t;
    auto reports = list_all_hazards(c, opt.max_vars);
    json witnesses = json::array();
    for (const auto& r : reports)
        witnesses.push_back(json{{"witness", r.witness.to_string()}, {"kind", kind_name(r.kind)}});
    emit(json{{"count", reports.size()}, {"hazards", witnesses}, {"elapsed_ms", t.elapsed_ms()}},
         std::to_string(reports.size()) + " hazard witnesses");
    return reports.empty() ? kExitHazardFree : kExitHazard;
}

int cmd_eliminate_dnf0(const Options& opt) {
    DnfFormula f = parse_dnf(opt.dnf, opt.vars);
    DnfFormula g = dnf_eliminate_0hazards(f);
    emit(json{{"formula", to_string(g)},
              {"removed_terms", f.terms.size() - g.terms.size()}},
         "removed " + std::to_string(f.terms.size() - g.terms.size()) + " contradictory terms");
    return kExitHazardFree;
}

int cmd_eliminate_cnf1(const Options& opt) {
    CnfFormula f = parse_cnf(opt.cnf, opt.vars);
    CnfFormula g = cnf_eliminate_1hazards(f);
    emit(json{{"formula", to_string(g)},
              {"removed_clauses", f.clauses.size() - g.clauses.size()}},
         "removed " + std::to_string(f.clauses.size() - g.clauses.size()) + " tautological clauses");
    return kExitHazardFree;
}

int cmd_huffman(const Options& opt) {
    TruthOracle f = load_oracle(opt);
    Timer t;
    DnfFormula dnf = huffman_dnf(f, opt.enum_bound);
    emit(json{{"formula", to_string(dnf)},
              {"terms", dnf.terms.size()},
              {"num_vars", dnf.num_vars},
              {"elapsed_ms", t.elapsed_ms()}},
         "hazard-free DNF: " + to_string(dnf));
    return kExitHazardFree;
}

int cmd_inject(const Options& opt) {
    TruthOracle f = load_oracle(opt);
    auto S = parse_minterm_list(opt.minterms);
    Timer t;
    DnfFormula dnf = inject_hazards(f, S, opt.enum_bound);
    emit(json{{"formula", to_string(dnf)},
              {"terms", dnf.terms.size()},
              {"injected", S.size()},
              {"elapsed_ms", t.elapsed_ms()}},
         "DNF with injected hazards: " + to_string(dnf));
    return kExitHazardFree;
}

int cmd_gen_cm(const Options& opt) {
    CmSpec spec{opt.s};
    ImplicantSet minterms = cm_minterms_direct(spec);
    DnfFormula dnf = huffman_dnf(minterms);
    emit(json{{"formula", to_string(dnf)},
              {"num_vars", spec.s},
              {"threshold", spec.threshold()},
              {"minterm_count", minterms.items.size()}},
         "CM(" + std::to_string(opt.s) + "): " + std::to_string(minterms.items.size()) + " minterms");
    return kExitHazardFree;
}

int cmd_gen_acm(const Options& opt) {
    AcmSpec spec{opt.groups, CmSpec{opt.s}};
    Circuit c;
    json meta{{"generator", "acm"}, {"groups", opt.groups}, {"s", opt.s}};
    if (opt.hazard_group >= 0) {
        auto S = parse_minterm_list(opt.minterms);
        c = acm_formula_with_hazards(spec, opt.hazard_group, S);
        meta["hazard_group"] = opt.hazard_group;
        meta["injected"] = S.size();
    } else {
        c = acm_hazard_free_formula(spec);
    }
    emit(circuit_to_json(c, meta),
         "ACM formula on " + std::to_string(spec.total_vars()) + " variables, depth " +
             std::to_string(depth(c)));
    return kExitHazardFree;
}

int cmd_reduce(const Options& opt) {
    DnfFormula f = parse_dnf(opt.dnf, opt.vars);
    Timer t;
    ReductionParams params = ReductionParams::make(f.num_vars, opt.r);
    BetaBijection beta = BetaBijection::make(params.r, params.s);
    Circuit c = reduce_dnffalse_to_hazard(f, opt.r);
    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(beta.digest()));
    json meta{{"generator", "dnffalse-reduction"},
              {"r", params.r},
              {"s", params.s},
              {"n", params.n},
              {"source_vars", f.num_vars},
              {"padded_source_vars", params.source_vars()},
              {"beta_digest", digest}};
    json doc = circuit_to_json(c, meta);
    doc["meta"]["elapsed_ms"] = t.elapsed_ms();
    emit(doc, "reduced to depth-" + std::to_string(depth(c)) + " formula on " +
                  std::to_string(c.num_vars) + " variables (" + std::to_string(c.gates.size()) +
                  " gates)");
    return kExitHazardFree;
}

int cmd_gadget_0hazard(const Options& opt) {
    DnfFormula f = parse_dnf(opt.dnf, opt.vars);
    DnfFormula g = zero_hazard_gadget(f);
    emit(json{{"formula", to_string(g)}, {"num_vars", g.num_vars}},
         "0-hazard gadget: " + to_string(g));
    return kExitHazardFree;
}

int cmd_verify_reduce(const Options& opt) {
    Timer t;
    json cases = json::array();
    bool all_pass = true;

    auto run_one = [&](const DnfFormula& f, const std::string& label) {
        ReductionVerification v = verify_reduction(f, opt.r, opt.max_vars);
        all_pass = all_pass && v.pass;
        json jc{{"case", label},
                {"pass", v.pass},
                {"falsifiable", v.falsifiable},
                {"hazard_found", v.hazard_found},
                {"output_depth", v.output_depth},
                {"falsifying_count", v.falsifying_count}};
        if (!v.failures.empty()) jc["failures"] = v.failures;
        cases.push_back(std::move(jc));
    };

    if (opt.random_count > 0) {
        Rng rng(opt.seed);
        for (int i = 0; i < opt.random_count; ++i) {
            DnfFormula f = random_dnf(rng, opt.vars, opt.random_terms, opt.random_width);
            run_one(f, "random#" + std::to_string(i) + ": " + to_string(f));
        }
    } else {
        if (opt.dnf.empty()) throw CLI::ValidationError("verify-reduce needs --dnf or --random");
        run_one(parse_dnf(opt.dnf, opt.vars), opt.dnf);
    }

    emit(json{{"pass", all_pass}, {"cases", cases}, {"elapsed_ms", t.elapsed_ms()}},
         all_pass ? "verification passed" : "verification FAILED");
    return all_pass ? kExitHazardFree : kExitUsage;
}

void add_common_input_flags(CLI::App* cmd, Options& opt, bool with_function_inputs) {
    cmd->add_option("--formula", opt.formula, "circuit as a formula expression");
    cmd->add_option("--circuit", opt.circuit_file, "circuit document (JSON file)");
    cmd->add_option("--dnf", opt.dnf, "DNF formula text");
    cmd->add_option("--cnf", opt.cnf, "CNF formula text");
    cmd->add_option("--vars", opt.vars, "minimum variable count / truth table width");
    if (with_function_inputs)
        cmd->add_option("--truth-table", opt.truth_table, "2^vars rows, row index big-endian in x1..xn");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hazardkit: logic hazard analysis under three-valued semantics"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options opt;
    if (const char* env = std::getenv("HAZARDKIT_MAX_VARS")) opt.max_vars = std::atoi(env);

    app.add_option("--max-vars", opt.max_vars, "brute-force variable bound")
        ->capture_default_str();
    app.add_option("--enum-bound", opt.enum_bound, "minterm enumeration variable bound")
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker thread cap (0 = library default)");
    app.add_option("--seed", opt.seed, "random corpus seed")->capture_default_str();

    std::function<int()> action;
    auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
        cmd->fallthrough();  // let --max-vars/--jobs/... appear after the subcommand
        cmd->callback([&action, fn = std::move(fn)]() { action = fn; });
    };

    auto* eval = app.add_subcommand("eval", "evaluate a circuit on a {0,1,u} input");
    add_common_input_flags(eval, opt, false);
    eval->add_option("--input", opt.input, "assignment string over {0,1,u}")->required();
    bind(eval, [&] { return cmd_eval(opt); });

    auto* res = app.add_subcommand("resolutions", "list all stable refinements of an input");
    res->add_option("--input", opt.input)->required();
    bind(res, [&] { return cmd_resolutions(opt); });

    auto* mins = app.add_subcommand("minterms", "enumerate minterms of a function");
    add_common_input_flags(mins, opt, true);
    bind(mins, [&] { return cmd_implicants(opt, true); });

    auto* maxs = app.add_subcommand("maxterms", "enumerate maxterms of a function");
    add_common_input_flags(maxs, opt, true);
    bind(maxs, [&] { return cmd_implicants(opt, false); });

    auto* det = app.add_subcommand("detect", "auto-select the best detector for the input");
    add_common_input_flags(det, opt, false);
    bind(det, [&] { return cmd_detect(opt); });

    auto* detb = app.add_subcommand("detect-brute", "exhaustive 3^n hazard scan");
    add_common_input_flags(detb, opt, false);
    bind(detb, [&] { return cmd_detect_brute(opt); });

    auto* dete = app.add_subcommand("detect-eichelberger", "minterm/maxterm evaluation detection");
    add_common_input_flags(dete, opt, false);
    bind(dete, [&] { return cmd_detect_eichelberger(opt); });

    auto* detd = app.add_subcommand("detect-dnf1", "polynomial 1-hazard detection in a DNF");
    detd->add_option("--dnf", opt.dnf)->required();
    detd->add_option("--vars", opt.vars);
    bind(detd, [&] { return cmd_detect_dnf1(opt); });

    auto* detc = app.add_subcommand("detect-cnf0", "polynomial 0-hazard detection in a CNF");
    detc->add_option("--cnf", opt.cnf)->required();
    detc->add_option("--vars", opt.vars);
    bind(detc, [&] { return cmd_detect_cnf0(opt); });

    auto* elim0 = app.add_subcommand("eliminate-dnf0", "drop contradictory DNF terms");
    elim0->add_option("--dnf", opt.dnf)->required();
    elim0->add_option("--vars", opt.vars);
    bind(elim0, [&] { return cmd_eliminate_dnf0(opt); });

    auto* elim1 = app.add_subcommand("eliminate-cnf1", "drop tautological CNF clauses");
    elim1->add_option("--cnf", opt.cnf)->required();
    elim1->add_option("--vars", opt.vars);
    bind(elim1, [&] { return cmd_eliminate_cnf1(opt); });

    auto* huff = app.add_subcommand("huffman", "hazard-free DNF (OR of all minterms)");
    add_common_input_flags(huff, opt, true);
    bind(huff, [&] { return cmd_huffman(opt); });

    auto* inj = app.add_subcommand("inject", "DNF with 1-hazards exactly at chosen minterms");
    add_common_input_flags(inj, opt, true);
    inj->add_option("--minterms", opt.minterms, "comma-separated {0,1,u} minterm assignments")
        ->required();
    bind(inj, [&] { return cmd_inject(opt); });

    auto* gcm = app.add_subcommand("gen-cm", "hazard-free DNF for the CM function");
    gcm->add_option("--s", opt.s, "variable count (multiple of 3)")->required();
    bind(gcm, [&] { return cmd_gen_cm(opt); });

    auto* gacm = app.add_subcommand("gen-acm", "AND-of-CM formula, optionally hazard-injected");
    gacm->add_option("--groups", opt.groups)->required();
    gacm->add_option("--s", opt.s)->required();
    gacm->add_option("--hazard-group", opt.hazard_group, "group to inject (0-based)");
    gacm->add_option("--minterms", opt.minterms, "local minterm assignments for the injected group");
    bind(gacm, [&] { return cmd_gen_acm(opt); });

    auto* red = app.add_subcommand("reduce", "falsifiability-to-hazard reduction (depth 4)");
    red->add_option("--r", opt.r, "group width")->required();
    red->add_option("--dnf", opt.dnf)->required();
    red->add_option("--vars", opt.vars);
    bind(red, [&] { return cmd_reduce(opt); });

    auto* gad = app.add_subcommand("gadget-0hazard", "append the contradictory-term gadget");
    gad->add_option("--dnf", opt.dnf)->required();
    gad->add_option("--vars", opt.vars);
    bind(gad, [&] { return cmd_gadget_0hazard(opt); });

    auto* ver = app.add_subcommand("verify-reduce", "desk-scale reduction correctness check");
    ver->add_option("--r", opt.r)->required();
    ver->add_option("--dnf", opt.dnf);
    ver->add_option("--random", opt.random_count, "verify this many random DNFs instead");
    ver->add_option("--vars", opt.vars, "variables for random DNFs");
    ver->add_option("--max-terms", opt.random_terms);
    ver->add_option("--term-width", opt.random_width);
    bind(ver, [&] { return cmd_verify_reduce(opt); });

    auto* lh = app.add_subcommand("list-hazards", "every hazard witness (exhaustive)");
    add_common_input_flags(lh, opt, false);
    bind(lh, [&] { return cmd_list_hazards(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

#ifdef _OPENMP
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
