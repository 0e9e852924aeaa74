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

// Splitting sets for hybrid programs over a materialized finite universe.
//
// A hybrid rule can contribute to U for some tuples and to the complement
// for others, so splitting cuts rules as well as programs: the bottom keeps
// the tuple parts that conclude inside U, the remainder keeps the parts of
// those same rules that conclude outside it. Derived rules carry explicit
// tuple sets (and advancing maps) instead of registry references.

#include <vector>

#include "hasp/core.hpp"
#include "hasp/oracle.hpp"

namespace hasp {

struct SplitSet {
    Interpretation facts;
    bool operator==(const SplitSet&) const = default;
};

/// Both closure conditions over every constraint tuple in the universe:
/// whenever a tuple concludes a fact in U, every body literal at every tuple
/// position is in U and every tuple position is in GP_J(U).
bool is_splitting_set(const SplitSet& u, const Program& p, const InitialCondition& init, const FiniteUniverse& uni);

/// Indices of the rules that conclude some fact in U for some tuple
/// (stationary tuples must pass the boolean algorithm).
std::vector<std::size_t> rules_b(const SplitSet& u, const Program& p, const FiniteUniverse& uni);

/// b_U(P): each rule of rules_b cut down to the tuples (and advancing
/// outputs) that conclude inside U.
Program bottom(const SplitSet& u, const Program& p, const FiniteUniverse& uni);

/// Rem(U,P): the parts of rules_b rules that conclude outside U.
Program remainder(const SplitSet& u, const Program& p, const FiniteUniverse& uni);

/// (P \ Rules_b(U,P)) u Rem(U,P)
Program top_program(const SplitSet& u, const Program& p, const FiniteUniverse& uni);

/// eps_U(P,X): one rule per (rule, tuple) whose projection onto U is
/// satisfied by X, with the U-literals at each tuple position removed from
/// the blocks and a singleton constraint set.
Program eps(const SplitSet& u, const Program& p, const Interpretation& x, const FiniteUniverse& uni);

struct SplitVerdict {
    Interpretation x;  ///< M n U
    Interpretation y;  ///< M \ U
    bool bottom_ok = false;
    bool top_ok = false;

    bool holds() const { return bottom_ok && top_ok; }
};

/// Splits M along U and checks X against the bottom w.i.c. J and M \ U
/// against eps_U(top, X) w.i.c. GP_J(X). Throws std::invalid_argument when
/// U is not a splitting set.
SplitVerdict theorem1_decompose(const Program& p, const SplitSet& u, const InitialCondition& init,
                                const FiniteUniverse& uni, const Interpretation& m);
/// Same, with the bottom program supplied by the caller.
SplitVerdict theorem1_decompose_with(const Program& p, const Program& bottom_program, const SplitSet& u,
                                     const InitialCondition& init, const FiniteUniverse& uni,
                                     const Interpretation& m);

/// Every consistent X u Y with X an answer set of the bottom and Y one of
/// the eps-program for that X, in canonical order.
std::vector<Interpretation> theorem1_solutions(const Program& p, const SplitSet& u, const InitialCondition& init,
                                               const FiniteUniverse& uni, const OracleLimits& limits = {});

/// U_0 c U_1 c ... c U_horizon with U_i = literals x {positions with step <= i}.
std::vector<SplitSet> prefix_sequence(const FiniteUniverse& uni, std::int64_t horizon);

struct LayerVerdict {
    Interpretation x;
    bool ok = false;
};

struct SequenceVerdict {
    std::vector<LayerVerdict> layers;
    /// M lies inside the union of the sequence.
    bool covered = false;

    bool holds() const;
};

/// Layer-by-layer decomposition along a splitting sequence. Throws
/// std::invalid_argument on a non-monotone sequence, an invalid member or a
/// union that misses part of the universe.
SequenceVerdict theorem2_decompose(const Program& p, const std::vector<SplitSet>& seq, const InitialCondition& init,
                                   const FiniteUniverse& uni, const Interpretation& m);

/// Every union of a solution sequence (X_0, X_1, ...), in canonical order.
std::vector<Interpretation> theorem2_solutions(const Program& p, const std::vector<SplitSet>& seq,
                                               const InitialCondition& init, const FiniteUniverse& uni,
                                               const OracleLimits& limits = {});

}  // namespace hasp
