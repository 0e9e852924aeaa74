//
// Copyright (c) 2026 The hasp authors
//
// This file is part of hasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include "hasp/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hasp/incremental.hpp"
#include "hasp/io.hpp"
#include "hasp/oracle.hpp"
#include "hasp/registry.hpp"
#include "hasp/semantics.hpp"
#include "hasp/splitting.hpp"

namespace hasp {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string mode;
    std::string program_path;
    std::string init_path;
    std::string out_path;
    std::int64_t horizon = 0;
    std::string f = "select_all";
    std::string d = "first";
    std::string keep = "1/2";
    std::optional<std::uint64_t> seed;
    bool trace = false;
    bool corrupt_bottom = false;
    std::size_t max_facts = OracleLimits{}.max_facts;
    std::size_t max_positions = OracleLimits{}.max_positions;
    std::size_t max_branches = SolverLimits{}.max_branches;

    OracleLimits oracle_limits() const { return {max_positions, max_facts}; }
    SolverLimits solver_limits() const { return {max_branches, asp::default_universe_limit}; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
T unwrap(Parsed<T> parsed, const std::string& what) {
    if (parsed.ok()) return std::move(*parsed.value);
    std::string msg = "invalid " + what;
    for (const auto& e : parsed.errors) msg += "\n  " + to_string(e);
    throw InputError(msg);
}

struct Inputs {
    Program program;
    InitialCondition init;
};

Inputs load(const RunConfig& cfg) {
    Program p = unwrap(parse_program(read_file(cfg.program_path), cfg.program_path), "program");
    InitialCondition j = unwrap(parse_init(read_file(cfg.init_path), cfg.init_path), "initial condition");
    return {std::move(p), std::move(j)};
}

std::uint64_t require_seed(const RunConfig& cfg, const std::string& selector) {
    if (!cfg.seed) throw InputError("selector '" + selector + "' needs --seed");
    return *cfg.seed;
}

AdvancingSelector advancing_selector(const RunConfig& cfg) {
    if (cfg.f == "select_all") return select_all();
    if (cfg.f == "select_none") return select_none();
    if (cfg.f == "random") {
        auto keep = Rational::parse(cfg.keep);
        if (!keep || *keep < Rational(0) || *keep > Rational(1)) throw InputError("--keep must be a rational in [0, 1]");
        return seeded_random_advancing(*keep, require_seed(cfg, cfg.f));
    }
    throw InputError("unknown advancing selector '" + cfg.f + "' (select_all, select_none, random)");
}

StationarySelector stationary_selector(const RunConfig& cfg) {
    if (cfg.d == "first") return first_answer_set();
    if (cfg.d == "random") return seeded_random_stationary(require_seed(cfg, cfg.d));
    throw InputError("unknown stationary selector '" + cfg.d + "' (first, random)");
}

void print_sets(std::ostream& out, const std::vector<Interpretation>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out << "answer set " << i + 1 << "\n";
        out << serialize_interpretation(sets[i]);
    }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    auto [p, init] = load(cfg);
    // Selector problems are input errors even when the run would not reach them.
    auto f = advancing_selector(cfg);
    auto d = stationary_selector(cfg);
    RunResult res = run(p, init, f, d, cfg.horizon, cfg.solver_limits());
    out << serialize_interpretation(res.model);
    for (const auto& lt : res.layers)
        out << "layer " << lt.k << ": frontier " << lt.frontier.size() << ", facts " << lt.layer.size()
            << (lt.failed ? ", no answer set at some position" : "") << "\n";
    if (cfg.trace) out << serialize_trace(res.layers);
    out << "validated: " << (res.validated ? "true" : "false") << "\n";
    return res.validated ? exit_ok : exit_not_answer_set;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    auto [p, init] = load(cfg);
    auto sets = enumerate_all(p, init, cfg.horizon, cfg.solver_limits());
    print_sets(out, sets);
    out << "answer sets: " << sets.size() << "\n";
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto [p, init] = load(cfg);
    auto inc = enumerate_all(p, init, cfg.horizon, cfg.solver_limits());
    auto orc = brute_force_answer_sets(p, init, cfg.horizon, cfg.oracle_limits());
    std::vector<Interpretation> only_inc, only_orc;
    for (const auto& m : inc)
        if (std::find(orc.begin(), orc.end(), m) == orc.end()) only_inc.push_back(m);
    for (const auto& m : orc)
        if (std::find(inc.begin(), inc.end(), m) == inc.end()) only_orc.push_back(m);
    out << "incremental: " << inc.size() << ", oracle: " << orc.size()
        << ", diff: " << only_inc.size() + only_orc.size() << "\n";
    for (const auto& m : only_inc) out << "only incremental\n" << serialize_interpretation(m);
    for (const auto& m : only_orc) out << "only oracle\n" << serialize_interpretation(m);
    return only_inc.empty() && only_orc.empty() ? exit_ok : exit_check_failed;
}

int cmd_check_splitting(const RunConfig& cfg, std::ostream& out) {
    auto [p, init] = load(cfg);
    const OracleLimits lim = cfg.oracle_limits();
    const FiniteUniverse uni = reachable_universe(p, init, cfg.horizon, lim);
    const auto oracle = answer_sets_within(p, init, uni, uni.facts(), lim);
    const auto seq = prefix_sequence(uni, cfg.horizon);

    bool all = true;
    auto report = [&](bool ok, const std::string& what) {
        out << (ok ? "PASS " : "FAIL ") << what << "\n";
        all = all && ok;
    };
    for (std::size_t m = 0; m < seq.size(); ++m) {
        const std::string name = "theorem1 U_" + std::to_string(m);
        const Program b = cfg.corrupt_bottom ? Program{{}, p.delta_t, p.registry} : bottom(seq[m], p, uni);
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            auto v = theorem1_decompose_with(p, b, seq[m], init, uni, oracle[i]);
            report(v.holds(), name + " decompose answer set " + std::to_string(i + 1));
        }
        auto sols = theorem1_solutions(p, seq[m], init, uni, lim);
        report(sols == oracle, name + " assemble " + std::to_string(sols.size()) + " of " +
                                   std::to_string(oracle.size()));
    }
    for (std::size_t i = 0; i < oracle.size(); ++i)
        report(theorem2_decompose(p, seq, init, uni, oracle[i]).holds(),
               "theorem2 decompose answer set " + std::to_string(i + 1));
    auto sols = theorem2_solutions(p, seq, init, uni, lim);
    report(sols == oracle, "theorem2 assemble " + std::to_string(sols.size()) + " of " + std::to_string(oracle.size()));
    return all ? exit_ok : exit_check_failed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--program", cfg.program_path, "program file (.hasp)")->required();
    sub->add_option("--init", cfg.init_path, "initial condition file (.init)")->required();
    sub->add_option("--horizon", cfg.horizon, "last time step")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--f", cfg.f, "advancing selector: select_all, select_none, random");
    sub->add_option("--d", cfg.d, "stationary selector: first, random");
    sub->add_option("--keep", cfg.keep, "keep probability p/q for --f random");
    sub->add_option("--seed", cfg.seed, "seed for random selectors");
    sub->add_flag("--trace", cfg.trace, "print every layer in full");
    sub->add_option("--max-facts", cfg.max_facts, "oracle candidate-fact limit");
    sub->add_option("--max-positions", cfg.max_positions, "oracle universe limit");
    sub->add_option("--max-branches", cfg.max_branches, "enumeration branch limit");
    sub->add_option("--out", cfg.out_path, "write results here instead of standard output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Hybrid ASP solver for discrete-time programs", "hasp"};
    app.require_subcommand(1);
    for (const char* mode : {"solve", "enumerate", "check-splitting", "verify"}) {
        auto* sub = app.add_subcommand(mode);
        add_common(sub, cfg);
        if (std::string(mode) == "check-splitting")
            sub->add_flag("--corrupt-bottom", cfg.corrupt_bottom, "replace every bottom program by the empty one");
        sub->callback([&cfg, mode] { cfg.mode = mode; });
    }

    std::vector<const char*> argv{"hasp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_input;
    }

    std::ostringstream buf;
    int rc = exit_ok;
    try {
        if (cfg.mode == "solve")
            rc = cmd_solve(cfg, buf);
        else if (cfg.mode == "enumerate")
            rc = cmd_enumerate(cfg, buf);
        else if (cfg.mode == "verify")
            rc = cmd_verify(cfg, buf);
        else
            rc = cmd_check_splitting(cfg, buf);
    } catch (const GuardError& e) {
        err << "hasp: limit exceeded: " << e.what() << "\n";
        return exit_guard;
    } catch (const IterationLimitError& e) {
        err << "hasp: limit exceeded: " << e.what() << "\n";
        return exit_guard;
    } catch (const std::exception& e) {
        err << "hasp: " << e.what() << "\n";
        return exit_input;
    }

    if (cfg.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!(file << buf.str())) {
            err << "hasp: cannot write '" << cfg.out_path << "'\n";
            return exit_input;
        }
    }
    return rc;
}

}  // namespace hasp
