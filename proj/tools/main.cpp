// atomlat command line: builds models from problem files, crosses assertions,
// checks against the congruence-closure oracle, and emits diagrams.
//
// Exit codes: 0 success, 1 semantic disagreement (check found a
// counterexample), 2 input or validation error, 3 guard violation.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atomlat/crossing.hpp"
#include "atomlat/decompose.hpp"
#include "atomlat/formats.hpp"
#include "atomlat/oracle.hpp"
#include "atomlat/redundancy.hpp"

namespace {

using namespace atomlat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValueError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct GuardSet {
    unsigned enumeration = kEnumerationGuard;
    unsigned omega = kOmegaGuard;
    unsigned oracle = kOracleGuard;

    void override_all(unsigned value) { enumeration = omega = oracle = value; }
};

void print_queries(const Model& m, const Problem& problem) {
    for (const Duple& q : problem.queries)
        std::cout << (m.term_le(q.left, q.right) ? "POS" : "NEG") << " "
                  << term_to_string(*problem.table, q.left) << " <= "
                  << term_to_string(*problem.table, q.right) << "\n";
}

int run_atomize(const std::string& path, bool reduce, const std::string& format) {
    Problem problem = parse_problem(read_file(path));
    Model m = freest_model(problem.table, problem.assertions);
    if (reduce)
        m = reduce_atomization(m);
    std::cout << serialize_model(m, format == "structured" ? SerializeStyle::structured
                                                           : SerializeStyle::text);
    print_queries(m, problem);
    return 0;
}

int run_cross(const std::string& path, const std::string& base_path, bool reduce,
              const std::string& format) {
    Model base = parse_model(read_file(base_path));
    Problem problem = parse_problem(read_file(path));
    if (!(*problem.table == *base.table()))
        throw ValueError("constants in '" + path + "' do not match the base model");
    Model m = full_cross_batch(base, problem.assertions);
    if (reduce)
        m = reduce_atomization(m);
    std::cout << serialize_model(m, format == "structured" ? SerializeStyle::structured
                                                           : SerializeStyle::text);
    print_queries(m, problem);
    return 0;
}

int run_check(const std::string& path, const GuardSet& guards) {
    Problem problem = parse_problem(read_file(path));
    Model m = freest_model(problem.table, problem.assertions);
    OrderOracle oracle = congruence_closure(problem.table, problem.assertions, guards.oracle);
    EquivResult result = oracle_equiv(m, oracle);
    if (!result.equivalent) {
        const Duple& r = *result.counterexample;
        std::cout << "DISAGREE " << term_to_string(*problem.table, r.left) << " <= "
                  << term_to_string(*problem.table, r.right) << " (model="
                  << (m.term_le(r.left, r.right) ? "POS" : "NEG") << " oracle="
                  << (oracle.le(r.left, r.right) ? "POS" : "NEG") << ")\n";
        return 1;
    }
    const uint64_t terms = (uint64_t{1} << problem.table->size()) - 1;
    std::cout << "OK " << terms * terms << " term pairs agree with the oracle\n";
    return 0;
}

int run_omega(const std::string& path, const GuardSet& guards) {
    Problem problem = parse_problem(read_file(path));
    Model m = freest_model(problem.table, problem.assertions);
    for (const Atom& phi : omega(m, guards.omega)) {
        const bool redundant = is_redundant(m, phi, guards.omega);
        std::cout << "atom " << atom_to_string(*problem.table, phi) << " "
                  << (redundant ? "R" : "NR") << "\n";
    }
    return 0;
}

int run_decompose(const std::string& path, const GuardSet& guards) {
    Problem problem = parse_problem(read_file(path));
    Model m = freest_model(problem.table, problem.assertions);
    const std::vector<Factor> factors = subdirect_factors(m);
    for (std::size_t i = 0; i < factors.size(); ++i)
        std::cout << "factor " << i + 1 << ": atom "
                  << atom_to_string(*problem.table, factors[i].atom) << "\n";

    const uint32_t n = problem.table->size();
    const std::vector<uint64_t> below = constants_below_table(m, guards.enumeration);
    const uint64_t full = (uint64_t{1} << n) - 1;

    // One row per distinct element, labelled by its minimal term.
    std::map<uint64_t, uint64_t> class_rep;
    for (uint64_t t = 1; t <= full; ++t) {
        auto [it, inserted] = class_rep.try_emplace(below[t], t);
        if (!inserted && size_lex_less(CSet::from_mask(n, t), CSet::from_mask(n, it->second)))
            it->second = t;
    }
    std::vector<uint64_t> reps;
    for (const auto& [key, rep] : class_rep)
        reps.push_back(rep);
    std::sort(reps.begin(), reps.end(), [n](uint64_t a, uint64_t b) {
        return size_lex_less(CSet::from_mask(n, a), CSet::from_mask(n, b));
    });
    for (uint64_t rep : reps) {
        const Term t{CSet::from_mask(n, rep)};
        std::cout << "element " << term_to_string(*problem.table, t) << " -> ";
        for (const Factor& f : factors)
            std::cout << factor_project(f, t);
        std::cout << "\n";
    }
    return 0;
}

int run_hasse(const std::string& path, const std::string& out_path, const GuardSet& guards) {
    Problem problem = parse_problem(read_file(path));
    Model m = freest_model(problem.table, problem.assertions);
    const std::string dot = hasse_dot(m, guards.enumeration);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw ValueError("cannot write '" + out_path + "'");
        out << dot;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atomized semilattice toolkit"};
    app.require_subcommand(1);

    GuardSet guards;
    std::optional<unsigned> guard_override;
    std::optional<uint64_t> seed; // reserved for randomized subcommands
    app.add_option("--guard", guard_override, "override all enumeration guards");
    app.add_option("--seed", seed, "seed for randomized subcommands");

    std::string path;
    std::string base_path;
    std::string out_path;
    std::string format = "text";
    bool reduce = false;
    std::optional<unsigned> max_c;

    CLI::App* atomize = app.add_subcommand("atomize", "build the freest model of the assertions");
    atomize->fallthrough();
    atomize->add_option("file", path, "problem file (.slt)")->required();
    atomize->add_flag("--reduce", reduce, "drop redundant atoms from the atomization");
    atomize->add_option("--format", format, "output style")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* cross = app.add_subcommand("cross", "cross the assertions into a base model");
    cross->fallthrough();
    cross->add_option("file", path, "problem file (.slt)")->required();
    cross->add_option("--base", base_path, "structured model file")->required();
    cross->add_flag("--reduce", reduce, "drop redundant atoms from the atomization");
    cross->add_option("--format", format, "output style")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* check = app.add_subcommand("check", "compare the model against the oracle");
    check->fallthrough();
    check->add_option("file", path, "problem file (.slt)")->required();
    check->add_option("--max-c", max_c, "override the oracle guard");

    CLI::App* omega_cmd = app.add_subcommand("omega", "list compatible atoms, flagged R/NR");
    omega_cmd->fallthrough();
    omega_cmd->add_option("file", path, "problem file (.slt)")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "print subdirect factors and tuples");
    decompose->fallthrough();
    decompose->add_option("file", path, "problem file (.slt)")->required();

    CLI::App* hasse = app.add_subcommand("hasse", "emit the order diagram as DOT");
    hasse->fallthrough();
    hasse->add_option("file", path, "problem file (.slt)")->required();
    hasse->add_option("-o,--output", out_path, "write DOT here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (guard_override)
        guards.override_all(*guard_override);
    if (max_c)
        guards.oracle = *max_c;

    try {
        if (atomize->parsed())
            return run_atomize(path, reduce, format);
        if (cross->parsed())
            return run_cross(path, base_path, reduce, format);
        if (check->parsed())
            return run_check(path, guards);
        if (omega_cmd->parsed())
            return run_omega(path, guards);
        if (decompose->parsed())
            return run_decompose(path, guards);
        if (hasse->parsed())
            return run_hasse(path, out_path, guards);
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
