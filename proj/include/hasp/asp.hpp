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

// Classical ground programs `a :- B` with classical negation: GL reduct,
// least models of Horn programs and exhaustive answer-set enumeration.

#include <stdexcept>
#include <vector>

#include "hasp/core.hpp"

namespace hasp::asp {

struct NormalRule {
    Literal head;
    Block body;
    bool operator==(const NormalRule&) const = default;
};

struct NormalProgram {
    std::vector<NormalRule> rules;
    /// Candidate literals; always includes every literal in the rules.
    LiteralSet universe;

    NormalProgram() = default;
    explicit NormalProgram(std::vector<NormalRule> rs, LiteralSet declared = {});

    void add(NormalRule r);
    bool is_horn() const;
    bool operator==(const NormalProgram&) const = default;
};

std::string to_string(const NormalRule& r);

/// M |= B
bool n_satisfies(const LiteralSet& m, const Block& b);
/// P^M
NormalProgram n_gl_reduct(const NormalProgram& p, const LiteralSet& m);
/// Least model of a Horn program. Throws std::invalid_argument otherwise.
LiteralSet n_least_model(const NormalProgram& p);
bool n_is_answer_set(const NormalProgram& p, const LiteralSet& m);

inline constexpr std::size_t default_universe_limit = 20;

/// All answer sets, ordered by size and then lexicographically.
/// Throws GuardError when the universe exceeds `max_universe` literals.
std::vector<LiteralSet> n_answer_sets(const NormalProgram& p, std::size_t max_universe = default_universe_limit);

/// Size-then-lexicographic order used for enumeration results.
bool canonical_less(const LiteralSet& a, const LiteralSet& b);

}  // namespace hasp::asp
