// Command-line front end: classify, solve, minimize, oracle, rep, reduce, gen, export.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <variant>

#include "wordeq/chains.hpp"
#include "wordeq/classify.hpp"
#include "wordeq/fillpos.hpp"
#include "wordeq/generators.hpp"
#include "wordeq/onerv.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/reductions.hpp"
#include "wordeq/smtlib.hpp"
#include "wordeq/solver.hpp"

using namespace wordeq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSat = 0;
constexpr int kUnsat = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kSoftware = 70;
constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Equation read_single_equation(const std::string& path) {
    auto eqs = parse_equations(read_input(path));
    if (eqs.size() != 1)
        throw ParseError("expected exactly one equation, found " + std::to_string(eqs.size()), 0, 0);
    return eqs.front();
}

json header(const std::string& command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

json substitution_json(const Substitution& h) {
    json out = json::object();
    for (const auto& [v, w] : h) out["X" + std::to_string(v)] = w;
    return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

int status_code(Status s) {
    switch (s) {
        case Status::Sat: return kSat;
        case Status::Unsat: return kUnsat;
        case Status::Unknown: return kUnknown;
    }
    return kUnknown;
}

std::vector<std::size_t> parse_positions(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw UsageError("bad position '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// ---- subcommands ----------------------------------------------------------

struct Common {
    std::string file = "-";
    bool as_json = false;
};

int run_classify(const Common& c, std::ostream& out) {
    auto eqs = parse_equations(read_input(c.file));
    json results = json::array();
    std::string text;
    for (const auto& eq : eqs) {
        auto r = classify(eq);
        auto d = class_d_membership(eq);
        json j{{"equation", render_equation(eq)},
               {"regular", r.regular},
               {"non_cross", r.non_cross},
               {"ordered", r.ordered ? json(*r.ordered) : json(nullptr)},
               {"regular_ordered", r.regular_ordered()},
               {"quadratic", r.quadratic},
               {"class_d", d.member},
               {"repeated_variable", d.repeated ? json("X" + std::to_string(*d.repeated)) : json(nullptr)}};
        results.push_back(j);
        if (eqs.size() > 1) text += "equation: " + render_equation(eq) + "\n";
        text += "regular: " + flag(r.regular) + "\n";
        text += "non_cross: " + flag(r.non_cross) + "\n";
        text += "ordered: " + (r.ordered ? flag(*r.ordered) : std::string("n/a")) + "\n";
        text += "regular_ordered: " + flag(r.regular_ordered()) + "\n";
        text += "quadratic: " + flag(r.quadratic) + "\n";
        text += "class_d: " + flag(d.member) + "\n";
        text += "repeated_variable: " + (d.repeated ? "X" + std::to_string(*d.repeated) : std::string("none")) + "\n";
    }
    if (c.as_json) {
        json j = header("classify");
        j["results"] = results;
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
    return kSat;
}

struct SolveArgs {
    std::optional<std::size_t> bound;
    std::string constraints;
    std::string engine = "auto";
    std::string assign;
    unsigned jobs = 1;
    std::string letter;
};

int run_assign(const Common& c, const Equation& eq, const SolveArgs& a, std::ostream& out) {
    Substitution given = parse_substitution(a.assign);
    LengthAssignment la;
    for (const auto& [v, w] : given) la[v] = w.size();
    std::optional<char> letter;
    if (!a.letter.empty()) letter = a.letter.front();
    auto check = check_lengths(eq, la, letter);
    json j = header("solve");
    j["mode"] = "lengths";
    j["lengths"] = json::object();
    for (const auto& [v, l] : la) j["lengths"]["X" + std::to_string(v)] = l;
    j["given_is_solution"] = is_solution(eq, given);
    int code = kUnsat;
    std::string text;
    if (auto* sol = std::get_if<LengthSolution>(&check)) {
        code = kSat;
        j["status"] = "sat";
        j["assignment"] = substitution_json(sol->h);
        j["total_length"] = solution_length(eq, sol->h);
        j["free_classes"] = sol->free_classes;
        text = "sat\nassignment: " + render_substitution(sol->h) + "\nfree_classes: " +
               std::to_string(sol->free_classes) + "\n";
    } else if (auto* mm = std::get_if<LengthMismatch>(&check)) {
        j["status"] = "unsat";
        j["reason"] = "length mismatch";
        j["lhs_length"] = mm->lhs_length;
        j["rhs_length"] = mm->rhs_length;
        text = "unsat\nreason: side lengths " + std::to_string(mm->lhs_length) + " and " +
               std::to_string(mm->rhs_length) + " differ\n";
    } else {
        const auto& con = std::get<Contradiction>(check);
        j["status"] = "unsat";
        j["reason"] = "contradiction";
        j["detail"] = con.description;
        text = "unsat\nreason: " + con.description + "\n";
    }
    text += "given_is_solution: " + flag(j["given_is_solution"].get<bool>()) + "\n";
    out << (c.as_json ? j.dump(2) + "\n" : text);
    return code;
}

int run_solve(const Common& c, const SolveArgs& a, std::ostream& out) {
    Equation eq = read_single_equation(c.file);
    if (!a.assign.empty()) return run_assign(c, eq, a, out);

    std::optional<char> letter;
    if (!a.letter.empty()) {
        if (a.letter.size() != 1) throw UsageError("--letter takes a single letter");
        letter = a.letter.front();
    }
    bool onerv = a.engine == "onerv" || (a.engine == "auto" && a.constraints.empty() && is_class_d(eq));
    if (onerv && !a.constraints.empty()) throw UsageError("the onerv engine does not take constraints");

    SolveResult r;
    if (onerv) {
        if (!class_d_membership(eq).member) throw UsageError("--engine onerv needs an equation in class D");
        OneRvOptions o;
        o.bound = a.bound;
        o.default_letter = letter;
        r = solve_one_rv(eq, o);
    } else {
        SolveOptions o;
        o.per_var_bound = a.bound;
        o.default_letter = letter;
        o.jobs = a.jobs;
        if (!a.constraints.empty()) {
            r = solve_with_constraints(eq, load_constraints(a.constraints), o);
        } else {
            if (!a.bound && !classify(eq).regular_ordered())
                throw UsageError("--bound is required for equations that are not regular-ordered");
            r = solve(eq, o);
        }
    }

    if (c.as_json) {
        json j = header("solve");
        j["status"] = to_string(r.status);
        j["assignment"] = r.h ? substitution_json(*r.h) : json(nullptr);
        j["total_length"] = r.h ? json(r.total_length) : json(nullptr);
        j["free_classes"] = r.free_classes;
        j["engine"] = r.engine;
        j["bound"] = r.bound_used;
        j["note"] = r.note;
        j["stats"] = {{"vectors_tried", r.stats.vectors_tried},
                      {"total_time", r.stats.total_time},
                      {"first_sat_total_length",
                       r.stats.first_sat_total_length ? json(*r.stats.first_sat_total_length) : json(nullptr)},
                      {"completions_tried", r.stats.completions_tried},
                      {"cap_hit", r.stats.cap_hit}};
        out << j.dump(2) << "\n";
    } else {
        out << to_string(r.status) << "\n";
        if (r.h) {
            out << "assignment: " << render_substitution(*r.h) << "\n";
            out << "total_length: " << r.total_length << "\n";
            out << "free_classes: " << r.free_classes << "\n";
        }
        out << "engine: " << r.engine << "\n";
        out << "bound: " << r.bound_used << "\n";
        if (!r.note.empty()) out << "note: " << r.note << "\n";
        out << "vectors_tried: " << r.stats.vectors_tried << "\n";
    }
    return status_code(r.status);
}

int run_minimize(const Common& c, const std::string& assign, bool verbose, std::ostream& out) {
    Equation eq = read_single_equation(c.file);
    Substitution h = parse_substitution(assign);
    if (!is_solution(eq, h)) throw InvalidArgument("the given substitution is not a solution");
    Reduction red = reduce_via_squares(eq, h);
    if (c.as_json) {
        json j = header("minimize");
        j["before"] = substitution_json(h);
        j["before_length"] = solution_length(eq, h);
        j["after"] = substitution_json(red.result);
        j["after_length"] = solution_length(eq, red.result);
        json steps = json::array();
        for (const auto& st : red.trace)
            steps.push_back({{"sequence", st.sequence_index},
                             {"start", st.square.start},
                             {"half", st.square.half},
                             {"shift", st.square.shift},
                             {"after", substitution_json(st.after)}});
        j["trace"] = steps;
        out << j.dump(2) << "\n";
        return kSat;
    }
    out << "before: " << render_substitution(h) << " (length " << solution_length(eq, h) << ")\n";
    if (verbose) {
        for (const auto& st : red.trace) {
            out << "square in sequence " << st.sequence_index << ": start " << st.square.start << ", half "
                << st.square.half << ", shift " << st.square.shift << "\n  window:";
            for (const auto& p : st.square.window) out << " " << render_position(p);
            out << "\n  -> " << render_substitution(st.after) << "\n";
        }
    }
    out << "after: " << render_substitution(red.result) << " (length " << solution_length(eq, red.result)
        << ")\n";
    return kSat;
}

struct OracleArgs {
    std::size_t max_len = 4;
    bool all = false;
    bool force = false;
    std::string alphabet;
};

int run_oracle(const Common& c, const OracleArgs& a, std::ostream& out) {
    Equation eq = read_single_equation(c.file);
    OracleOptions o;
    o.per_var_cap = a.max_len;
    o.find_all = a.all;
    o.force = a.force;
    if (!a.alphabet.empty()) o.alphabet = a.alphabet;
    auto r = brute_solve(eq, o);
    if (c.as_json) {
        json j = header("oracle");
        j["status"] = r.sat ? "sat" : "unsat-within-cap";
        j["cap"] = r.cap;
        j["assignments_checked"] = r.assignments_checked;
        json sols = json::array();
        for (const auto& h : r.solutions)
            sols.push_back({{"assignment", substitution_json(h)}, {"total_length", solution_length(eq, h)}});
        j["solutions"] = sols;
        out << j.dump(2) << "\n";
    } else {
        out << (r.sat ? "sat" : "unsat-within-cap") << "\n";
        for (const auto& h : r.solutions)
            out << render_substitution(h) << " (length " << solution_length(eq, h) << ")\n";
    }
    return r.sat ? kSat : kUnsat;
}

int run_rep_run(const Common& c, const std::string& positions, std::ostream& out) {
    RepInstance inst = parse_rep(read_input(c.file));
    RepWitness w = rep_run(inst, parse_positions(positions));
    bool reached = w.intermediate.back() == inst.u_end;
    if (c.as_json) {
        json j = header("rep-run");
        j["positions"] = w.positions;
        j["intermediate"] = w.intermediate;
        j["final"] = w.intermediate.back();
        j["reaches_end"] = reached;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < w.intermediate.size(); ++i) out << i << ": " << w.intermediate[i] << "\n";
        out << "reaches_end: " << flag(reached) << "\n";
    }
    return reached ? kSat : kUnsat;
}

int run_rep_solve(const Common& c, std::size_t budget, std::ostream& out) {
    RepInstance inst = parse_rep(read_input(c.file));
    auto r = rep_solve(inst, budget);
    if (c.as_json) {
        json j = header("rep-solve");
        j["status"] = to_string(r.status);
        j["nodes"] = r.nodes;
        j["positions"] = r.witness ? json(r.witness->positions) : json(nullptr);
        j["intermediate"] = r.witness ? json(r.witness->intermediate) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(r.status) << "\n";
        if (r.witness) {
            out << "positions:";
            for (auto p : r.witness->positions) out << " " << p;
            out << "\n";
        }
        out << "nodes: " << r.nodes << "\n";
    }
    switch (r.status) {
        case RepSearchStatus::Found: return kSat;
        case RepSearchStatus::NoWitness: return kUnsat;
        case RepSearchStatus::BudgetExhausted: return kUnknown;
    }
    return kUnknown;
}

int run_reduce_3par(const Common& c, std::ostream& out) {
    auto text = read_input(c.file);
    RepInstance rep = threepar_to_rep(parse_three_partition(text));
    if (c.as_json) {
        json j = header("reduce-3par-to-rep");
        j["start"] = rep.u_start;
        j["end"] = rep.u_end;
        json rules = json::array();
        for (const auto& r : rep.rules) rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
        j["rules"] = rules;
        out << j.dump(2) << "\n";
    } else {
        out << render_rep(rep);
    }
    return kSat;
}

int run_reduce_rep(const Common& c, bool mu, std::ostream& out) {
    RepInstance rep = parse_rep(read_input(c.file));
    Equation eq = mu ? rep_to_equation_mu(rep) : rep_to_equation(rep);
    if (c.as_json) {
        json j = header("reduce-rep-to-eq");
        j["variant"] = mu ? "mu" : "tripled";
        j["equation"] = render_equation(eq);
        j["size"] = equation_size(eq);
        out << j.dump(2) << "\n";
    } else {
        out << render_equation(eq) << "\n";
    }
    return kSat;
}

int emit_equations(const Common& c, const std::vector<Equation>& eqs, const std::string& command,
                   std::ostream& out) {
    if (c.as_json) {
        json j = header(command);
        json list = json::array();
        for (const auto& eq : eqs) list.push_back(render_equation(eq));
        j["equations"] = list;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& eq : eqs) out << render_equation(eq) << "\n";
    }
    return kSat;
}

int run_export(const Common& c, const std::string& constraints, std::ostream& out) {
    Equation eq = read_single_equation(c.file);
    Constraints cons;
    if (!constraints.empty()) cons = load_constraints(constraints);
    out << export_smtlib(eq, cons);
    return kSat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word equation toolkit: classification, solving, reductions and instance generation"};
    app.require_subcommand(1);
    std::function<int(std::ostream&)> action;

    auto add_common = [](CLI::App* sub, Common& c, bool file = true) {
        if (file) sub->add_option("file", c.file, "Input file, '-' for stdin")->required();
        sub->add_flag("--json", c.as_json, "JSON output");
    };

    Common classify_c;
    auto* classify_cmd = app.add_subcommand("classify", "Report structural classes of each equation");
    add_common(classify_cmd, classify_c);
    classify_cmd->callback([&] { action = [&](std::ostream& o) { return run_classify(classify_c, o); }; });

    Common solve_c;
    SolveArgs solve_a;
    auto* solve_cmd = app.add_subcommand("solve", "Decide satisfiability and print a minimal solution");
    add_common(solve_cmd, solve_c);
    solve_cmd->add_option("--bound", solve_a.bound, "Per-variable image length bound");
    solve_cmd->add_option("--constraints", solve_a.constraints, "Regular constraint file");
    solve_cmd->add_option("--engine", solve_a.engine, "auto, generic or onerv")
        ->check(CLI::IsMember({"auto", "generic", "onerv"}));
    solve_cmd->add_option("--assign", solve_a.assign, "Check the image lengths of this substitution only");
    solve_cmd->add_option("--jobs", solve_a.jobs, "Worker threads for the generic engine")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--letter", solve_a.letter, "Letter for unconstrained positions");
    solve_cmd->callback([&] { action = [&](std::ostream& o) { return run_solve(solve_c, solve_a, o); }; });

    Common min_c;
    std::string min_assign;
    bool min_verbose = false;
    auto* min_cmd = app.add_subcommand("minimize", "Shorten a solution by removing squares in its sequences");
    add_common(min_cmd, min_c);
    min_cmd->add_option("--assign", min_assign, "The solution to shorten")->required();
    min_cmd->add_flag("--verbose", min_verbose, "Print the square trace");
    min_cmd->callback([&] { action = [&](std::ostream& o) { return run_minimize(min_c, min_assign, min_verbose, o); }; });

    Common oracle_c;
    OracleArgs oracle_a;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search up to a per-variable length cap");
    add_common(oracle_cmd, oracle_c);
    oracle_cmd->add_option("--max-len", oracle_a.max_len, "Per-variable length cap");
    oracle_cmd->add_flag("--all", oracle_a.all, "List every solution within the cap");
    oracle_cmd->add_flag("--force", oracle_a.force, "Lift the search-space guards");
    oracle_cmd->add_option("--alphabet", oracle_a.alphabet, "Letters for variable images");
    oracle_cmd->callback([&] { action = [&](std::ostream& o) { return run_oracle(oracle_c, oracle_a, o); }; });

    auto* rep_cmd = app.add_subcommand("rep", "Programmed rewriting instances");
    rep_cmd->require_subcommand(1);
    Common rep_run_c;
    std::string rep_positions;
    auto* rep_run_cmd = rep_cmd->add_subcommand("run", "Apply the rules at the given occurrences");
    add_common(rep_run_cmd, rep_run_c);
    rep_run_cmd->add_option("--positions", rep_positions, "Comma-separated 1-based occurrence indices")->required();
    rep_run_cmd->callback([&] { action = [&](std::ostream& o) { return run_rep_run(rep_run_c, rep_positions, o); }; });
    Common rep_solve_c;
    std::size_t rep_budget = 1'000'000;
    auto* rep_solve_cmd = rep_cmd->add_subcommand("solve", "Search for the least witness");
    add_common(rep_solve_cmd, rep_solve_c);
    rep_solve_cmd->add_option("--budget", rep_budget, "Node budget");
    rep_solve_cmd->callback([&] { action = [&](std::ostream& o) { return run_rep_solve(rep_solve_c, rep_budget, o); }; });

    auto* reduce_cmd = app.add_subcommand("reduce", "Hardness reductions");
    reduce_cmd->require_subcommand(1);
    Common red3_c;
    auto* red3_cmd = reduce_cmd->add_subcommand("3par-to-rep", "3-Partition instance to rewriting instance");
    add_common(red3_cmd, red3_c);
    red3_cmd->callback([&] { action = [&](std::ostream& o) { return run_reduce_3par(red3_c, o); }; });
    Common redeq_c;
    bool redeq_mu = false;
    auto* redeq_cmd = reduce_cmd->add_subcommand("rep-to-eq", "Rewriting instance to regular-ordered equation");
    add_common(redeq_cmd, redeq_c);
    redeq_cmd->add_flag("--mu", redeq_mu, "Emit the single-variable-per-step equation instead of the tripled one");
    redeq_cmd->callback([&] { action = [&](std::ostream& o) { return run_reduce_rep(redeq_c, redeq_mu, o); }; });

    auto* gen_cmd = app.add_subcommand("gen", "Instance generators");
    gen_cmd->require_subcommand(1);
    Common genexp_c;
    unsigned genexp_n = 2;
    auto* genexp_cmd = gen_cmd->add_subcommand("exp-family", "Equations with exponentially long minimal solutions");
    add_common(genexp_cmd, genexp_c, false);
    genexp_cmd->add_option("--n", genexp_n, "Number of variables (>= 2)")->required();
    genexp_cmd->callback([&] {
        action = [&](std::ostream& o) { return emit_equations(genexp_c, {gen_exp_family(genexp_n)}, "gen-exp-family", o); };
    });
    Common genr_c;
    RandomParams genr_p;
    std::string genr_class = "regular-ordered";
    unsigned genr_count = 1;
    auto* genr_cmd = gen_cmd->add_subcommand("random", "Seeded random equations of a given class");
    add_common(genr_cmd, genr_c, false);
    genr_cmd->add_option("--class", genr_class, "regular-ordered, quadratic or class-d")
        ->check(CLI::IsMember({"regular-ordered", "quadratic", "class-d"}));
    genr_cmd->add_option("--vars", genr_p.vars, "Number of variables");
    genr_cmd->add_option("--side-length", genr_p.side_length, "Symbols per side (regular-ordered, quadratic)");
    genr_cmd->add_option("--size", genr_p.size, "Total symbols |lhs|+|rhs| (class-d)");
    genr_cmd->add_option("--alphabet", genr_p.alphabet, "Constant letters");
    genr_cmd->add_option("--seed", genr_p.seed, "64-bit seed");
    genr_cmd->add_option("--count", genr_count, "Number of equations; seeds seed, seed+1, ...");
    genr_cmd->callback([&] {
        action = [&](std::ostream& o) {
            genr_p.cls = parse_random_class(genr_class);
            std::vector<Equation> eqs;
            RandomParams p = genr_p;
            for (unsigned i = 0; i < genr_count; ++i, ++p.seed) eqs.push_back(gen_random(p));
            return emit_equations(genr_c, eqs, "gen-random", o);
        };
    });

    Common export_c;
    std::string export_constraints;
    auto* export_cmd = app.add_subcommand("export", "SMT-LIB 2.6 script for external string solvers");
    export_cmd->add_option("file", export_c.file, "Input file, '-' for stdin")->required();
    export_cmd->add_option("--constraints", export_constraints, "Regular constraint file");
    export_cmd->callback([&] { action = [&](std::ostream& o) { return run_export(export_c, export_constraints, o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::ostringstream buffer;
    int code = kSat;
    try {
        code = action(buffer);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kData;
    } catch (const UnboundVariableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kSoftware;
    }
    std::cout << buffer.str();
    return code;
}
