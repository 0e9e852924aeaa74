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

// Model theory of hybrid programs with an initial condition I: block
// satisfaction, inapplicability, the GL reduct P^{M,I}, the one-step
// provability operator T[P,I] and the answer-set test.

#include <stdexcept>

#include "hasp/core.hpp"
#include "hasp/registry.hpp"

namespace hasp {

class IterationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r^{M,I}. Blocks are positive-only; the constraint set O^{M,I} and, for
/// advancing rules, A^{M,I} are explicit.
struct ReductRule {
    RuleKind kind = RuleKind::stationary;
    Literal head;
    std::vector<std::vector<Literal>> positive;
    TupleSet constraint;
    AdvancingMap advance;

    bool operator==(const ReductRule&) const = default;
};

struct HornHybridProgram {
    std::vector<ReductRule> rules;
};

/// GP(M)
PositionSet gp(const Interpretation& m);
/// GP_I(M) = GP(M) u I
PositionSet gp_i(const Interpretation& m, const InitialCondition& init);

/// M |=_I (B, p)
bool satisfies_block(const Interpretation& m, const InitialCondition& init, const Block& b, const Position& p);
/// Same test with GP_I(M) already computed.
bool satisfies_block(const Interpretation& m, const PositionSet& gp_m, const Block& b, const Position& p);
/// M |=_I (B1;...;Bn, (p1,...,pn)). Throws std::invalid_argument on a length mismatch.
bool satisfies_body(const Interpretation& m, const InitialCondition& init, const std::vector<Block>& blocks,
                    const Tuple& tuple);

/// True iff every tuple of CS(r) over GP_I(M) violates a negative part,
/// has no advancing output inside GP_I(M), or fails the boolean algorithm.
bool is_inapplicable(const Program& p, const Rule& r, const Interpretation& m, const InitialCondition& init);

/// Throws std::logic_error when `r` is inapplicable for (M, I).
ReductRule reduct_rule(const Program& p, const Rule& r, const Interpretation& m, const InitialCondition& init);

/// P^{M,I}: inapplicable rules dropped, the rest reduced.
HornHybridProgram reduct_program(const Program& p, const Interpretation& m, const InitialCondition& init);

/// T[P,I](M); result always contains M.
Interpretation one_step(const HornHybridProgram& ph, const InitialCondition& init, const Interpretation& m);

/// Limit of T[P,I]^k from the empty interpretation.
Interpretation least_fixpoint(const HornHybridProgram& ph, const InitialCondition& init,
                              std::size_t max_iterations = 10'000);

/// Consistent and equal to the least fixpoint of its own reduct.
bool is_answer_set(const Program& p, const InitialCondition& init, const Interpretation& m);

}  // namespace hasp
