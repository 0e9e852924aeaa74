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

// Brute-force answer-set enumeration over a finite reachable universe.
// Deliberately exponential; every theorem check in the test suite is
// measured against it.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hasp/core.hpp"
#include "hasp/semantics.hpp"

namespace hasp {

struct FiniteUniverse {
    PositionSet positions;
    LiteralSet literals;

    /// positions x literals
    Interpretation facts() const;
};

struct OracleLimits {
    std::size_t max_positions = 64;
    std::size_t max_facts = 22;
};

/// Closure of J (cut at `horizon`) under every advancing algorithm applied
/// to every constraint-valid tuple, bodies ignored. Throws GuardError past
/// `limits.max_positions`.
FiniteUniverse reachable_universe(const Program& p, const InitialCondition& init, std::int64_t horizon,
                                  const OracleLimits& limits = {});

/// Facts some rule could conclude inside the universe: (head, p_n) for
/// stationary tuples passing the boolean algorithm, (head, q) for advancing
/// outputs q in the universe. Answer sets are always subsets of this.
Interpretation derivable_facts(const Program& p, const InitialCondition& init, const FiniteUniverse& uni);

/// Every answer set of `p` w.i.c. `init` whose facts lie in `candidates`,
/// in canonical order. Candidates are pruned to derivable facts first and
/// the guard applies to what remains.
std::vector<Interpretation> answer_sets_within(const Program& p, const InitialCondition& init,
                                               const FiniteUniverse& uni, const Interpretation& candidates,
                                               const OracleLimits& limits = {});

/// All answer sets whose positions lie in the horizon-truncated reachable
/// universe.
std::vector<Interpretation> brute_force_answer_sets(const Program& p, const InitialCondition& init,
                                                    std::int64_t horizon, const OracleLimits& limits = {});

/// Canonical order for collections of interpretations: size, then facts.
bool canonical_less(const Interpretation& a, const Interpretation& b);
void sort_canonical(std::vector<Interpretation>& v);

}  // namespace hasp
