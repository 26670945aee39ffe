// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.
//
// Command-line surface: gem generation, basis/tangle verification, exact
// circuit simulation, and reconstruction of the registered figure circuits.
// Machine-readable JSON goes to stdout, human diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bellgem/circuit.hpp"
#include "bellgem/gem.hpp"
#include "bellgem/io.hpp"
#include "bellgem/registry.hpp"
#include "bellgem/synth.hpp"
#include "bellgem/tangle.hpp"

namespace {

using namespace bellgem;

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_gen(std::uint32_t level, const std::string& out_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write to " + out_path);
        out = &file;
    }
    if (level == 4) {
        // Stream element by element; the full level-4 gem is large.
        const Gem pred = generate(3);
        std::uint64_t d = expected_cardinality(4);
        *out << "{\n  \"count\": " << d << ",\n  \"elements\": [\n";
        for (std::uint64_t k = 0; k < d; ++k) {
            json je = {{"index", k}, {"state", state_to_json(successor_element(pred, k))}};
            *out << "    " << je.dump() << (k + 1 < d ? ",\n" : "\n");
        }
        *out << "  ],\n  \"level\": 4,\n  \"qubits\": 16\n}\n";
        std::cerr << d << " elements, 16 qubits\n";
        return 0;
    }
    Gem g = generate(level);
    emit(gem_to_json(g), *out);
    std::cerr << g.size() << " elements, " << g.qubits() << " qubits\n";
    return 0;
}

int run_verify(std::uint32_t level, const std::string& theorem, std::uint64_t samples,
               std::uint64_t seed) {
    json out;
    bool pass = true;
    bool want1 = theorem == "1" || theorem == "all";
    bool want2 = theorem == "2" || theorem == "all";
    if (level <= 3) {
        Gem g = generate(level);
        if (want1) {
            OrthoReport r = verify_orthonormal(g);
            out["orthonormal"] = ortho_report_to_json(r);
            pass = pass && r.pass();
        }
        if (want2) {
            TangleReport r = verify_maximal_tangle(g);
            out["maximal_tangle"] = tangle_report_to_json(r, level <= 2);
            pass = pass && r.all_maximal;
        }
    } else {
        // Level 4 runs sampled mode automatically.
        const Gem pred = generate(3);
        if (want1) {
            OrthoReport r = verify_orthonormal_sampled(pred, samples, seed);
            out["orthonormal"] = ortho_report_to_json(r);
            pass = pass && r.pass();
        }
        if (want2) {
            TangleReport r = verify_maximal_tangle_sampled(pred, samples, seed);
            out["maximal_tangle"] = tangle_report_to_json(r, false);
            pass = pass && r.all_maximal;
        }
        out["samples"] = samples;
        out["seed"] = seed;
    }
    out["level"] = level;
    out["pass"] = pass;
    emit(out, std::cout);
    std::cerr << "level " << level << " verification: " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_tangle(const std::string& state_path) {
    SparseState s = state_from_json(json::parse(read_file(state_path)));
    if (!is_normalized(s)) {
        std::cerr << "state is not normalized: norm_sq = " << norm_sq(s).str() << "\n";
        return 1;
    }
    DyadicRational tau = n_tangle(s);
    emit({{"tau", tau.str()}, {"tau_decimal", tau.decimal()}}, std::cout);
    return 0;
}

int run_simulate(const std::string& circuit_path, const std::string& input_bits) {
    Circuit c = parse_circuit(read_file(circuit_path));
    BasisIndex input = basis_from_string(input_bits, c.width);
    emit(state_to_json(simulate(c, input)), std::cout);
    return 0;
}

int run_synth(int figure, std::optional<std::uint32_t> budget) {
    SynthesisTask task = figure_task(figure);
    if (budget) task.budget = *budget;
    SearchResult res = search_detailed(task);
    json out = {{"figure", figure}, {"budget", task.budget}, {"nodes", res.nodes}};
    if (!res.circuit) {
        out["found"] = false;
        emit(out, std::cout);
        std::cerr << "figure " << figure << ": not found within budget " << task.budget
                  << "\n";
        return 1;
    }
    out["found"] = true;
    out["circuit"] = serialize(*res.circuit);
    out["gate_count"] = res.circuit->gates.size();
    TaskReport rep = verify_task(*res.circuit, task);
    out["verification"] = task_report_to_json(rep, task.width);
    out["matches_registry"] = (*res.circuit == registry_entry(figure).circuit);
    emit(out, std::cout);
    std::cerr << "figure " << figure << ": found " << res.circuit->gates.size()
              << "-gate circuit\n";
    return rep.all_pass ? 0 : 1;
}

int run_show(int figure) {
    emit(registry_entry_to_json(registry_entry(figure)), std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, verification and preparation circuits for the "
                 "recursively defined entangled bases"};
    app.require_subcommand(1);

    std::uint32_t level = 1;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "generate the canonical basis at a level");
    gen->add_option("--level", level, "recursion level (1..4)")->required();
    gen->add_option("--out", out_path, "output path (default stdout)");

    std::string theorem = "all";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 20260809;
    auto* verify = app.add_subcommand("verify", "verify orthonormality and tangle");
    verify->add_option("--level", level, "recursion level (1..4)")->required();
    verify->add_option("--theorem", theorem, "1, 2 or all")
        ->check(CLI::IsMember({"1", "2", "all"}));
    verify->add_option("--samples", samples, "sample count for level 4");
    verify->add_option("--seed", seed, "sampling seed for level 4");

    std::string state_path;
    auto* tangle = app.add_subcommand("tangle", "exact n-tangle of a state file");
    tangle->add_option("--state", state_path, "state JSON file")->required();

    std::string circuit_path, input_bits;
    auto* sim = app.add_subcommand("simulate", "simulate a circuit on a basis input");
    sim->add_option("--circuit", circuit_path, "circuit text file")->required();
    sim->add_option("--input", input_bits, "input bitstring, qubit 1 first")->required();

    int figure = 1;
    std::optional<std::uint32_t> budget;
    auto* synth = app.add_subcommand("synth", "re-run the search for a figure circuit");
    synth->add_option("--figure", figure, "figure id (1..3)")->required()
        ->check(CLI::Range(1, 3));
    synth->add_option("--budget", budget, "maximum gate count");

    auto* show = app.add_subcommand("show", "print a registered circuit and its record");
    show->add_option("--figure", figure, "figure id (1..3)")->required()
        ->check(CLI::Range(1, 3));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (level < 1 || level > kMaxGemLevel) {
                std::cerr << "error: level exceeds supported range (1..4)\n";
                return 2;
            }
            return run_gen(level, out_path);
        }
        if (verify->parsed()) {
            if (level < 1 || level > kMaxGemLevel) {
                std::cerr << "error: level exceeds supported range (1..4)\n";
                return 2;
            }
            return run_verify(level, theorem, samples, seed);
        }
        if (tangle->parsed()) return run_tangle(state_path);
        if (sim->parsed()) return run_simulate(circuit_path, input_bits);
        if (synth->parsed()) return run_synth(figure, budget);
        if (show->parsed()) return run_show(figure);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
