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
#pragma once

// Layer-by-layer answer-set computation for discrete-time programs.
//
// Facts at step k never depend on later steps, so an answer set can be built
// one step at a time: the advancing rules active at step k propose the
// positions of step k+1 (an advancing selector keeps a subset), and at every
// kept position the state is an answer set of a classical program made of the
// last blocks of the active stationary rules plus the advancing heads landing
// there (a stationary selector picks one).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hasp/asp.hpp"
#include "hasp/core.hpp"
#include "hasp/oracle.hpp"

namespace hasp {

/// F(M, Z) subset of Z.
struct AdvancingSelector {
    std::string name;
    std::function<PositionSet(const Interpretation&, const PositionSet&)> choose;
};

/// D(M, z, U): one answer set of U, or nothing when U has none.
struct StationarySelector {
    std::string name;
    std::function<std::optional<LiteralSet>(const Interpretation&, const Position&, const asp::NormalProgram&)> choose;
};

AdvancingSelector select_all();
AdvancingSelector select_none();
/// Keeps each candidate independently with probability `keep`; a pure
/// function of (seed, Z).
AdvancingSelector seeded_random_advancing(Rational keep, std::uint64_t seed);
/// First answer set in size-then-lexicographic order.
StationarySelector first_answer_set();
/// Uniform pick among the answer sets; a pure function of (seed, z, U).
StationarySelector seeded_random_stationary(std::uint64_t seed);

/// Advancing rules with a constraint tuple over GP_J(N) ending at step k
/// whose body N satisfies.
std::vector<std::size_t> rules_adv_at_time(const Program& p, const Interpretation& n, const InitialCondition& init,
                                           std::int64_t k);

/// Union of Adv(r)(tuple) over the advancing rules active at `tuple`.
PositionSet next_gp_at_tuple(const Program& p, const Interpretation& n, const InitialCondition& init,
                             const Tuple& tuple);

/// Every successor position proposed from tuples ending at step k.
PositionSet next_gp_candidates(const Program& p, const Interpretation& n, const InitialCondition& init,
                               std::int64_t k);

/// F(N, candidates).
PositionSet next_gp(const Program& p, const AdvancingSelector& f, const Interpretation& n,
                    const InitialCondition& init, std::int64_t k);

/// Heads of the active advancing rules that produce q.
LiteralSet head_adv(const Program& p, const Interpretation& n, const InitialCondition& init, const Position& q);

/// Stationary rules with `tuple` in CS n Bool whose first n-1 blocks N
/// satisfies at the first n-1 positions. The last block is not checked.
std::vector<std::size_t> rules_stat(const Program& p, const Interpretation& n, const InitialCondition& init,
                                    const Tuple& tuple);

/// head :- B_n
asp::NormalRule red_app_rule(const Rule& r);

/// Active reduct at z: red_app_rule over every stationary rule active at a
/// tuple ending in z. The universe is Lit_At(P).
asp::NormalProgram red_app_program(const Program& p, const Interpretation& n, const InitialCondition& init,
                                   const Position& z);

/// Per-position record of one layer.
struct PositionSolve {
    Position z;
    asp::NormalProgram program;
    std::optional<LiteralSet> chosen;
};

struct LayerTrace {
    std::int64_t k = 0;
    PositionSet frontier;  ///< Z_k (J[0] for the first layer)
    std::vector<PositionSolve> solves;
    Interpretation layer;  ///< Y_k
    bool failed = false;   ///< some position had no answer set
};

struct SolverLimits {
    std::size_t max_branches = 100'000;
    std::size_t max_universe = asp::default_universe_limit;
};

/// Y_0: per z in J[0], D's answer set of the active reduct at z, crossed with
/// z. A position without an answer set contributes nothing.
LayerTrace compute_y0(const Program& p, const InitialCondition& init, const StationarySelector& d,
                      const SolverLimits& limits = {});

/// (Z_{k+1}, Y_{k+1}) from N = Y_0 u ... u Y_k. When some position of
/// Z_{k+1} has no answer set the whole layer Y_{k+1} is empty.
LayerTrace step(const Program& p, const InitialCondition& init, const AdvancingSelector& f,
                const StationarySelector& d, const Interpretation& n, std::int64_t k, const SolverLimits& limits = {});

struct RunResult {
    Interpretation model;
    std::vector<LayerTrace> layers;
    bool validated = false;
};

/// Runs layers until Y_k is empty (k > 0) or k reaches the horizon, then
/// checks the union against the full answer-set definition.
RunResult run(const Program& p, const InitialCondition& init, const AdvancingSelector& f, const StationarySelector& d,
              std::int64_t horizon, const SolverLimits& limits = {});

/// Union of the outcomes of every selector behaviour (every subset at each
/// frontier, every answer set at each position), filtered by the answer-set
/// test, in canonical order. Throws GuardError past `limits.max_branches`.
std::vector<Interpretation> enumerate_all(const Program& p, const InitialCondition& init, std::int64_t horizon,
                                          const SolverLimits& limits = {});

}  // namespace hasp
