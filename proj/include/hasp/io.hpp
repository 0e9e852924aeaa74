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

// Text formats: programs (.hasp), initial conditions (.init) and
// interpretations (.facts), plus the solver trace.
//
//   #delta_t 1/2.
//   b :- a : cs any1, adv tick.          % advancing
//   c :- b, not a : cs any1, bool true.  % stationary
//
//   gp step=0 level=7/2
//
//   fact -a @ step=0 level=7/2

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hasp/core.hpp"
#include "hasp/incremental.hpp"

namespace hasp {

struct SourceSpan {
    std::string file;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 1;
};

struct ParseError {
    SourceSpan span;
    std::string message;
    std::string expected;  ///< empty when nothing specific was expected
};

/// "file:line:col: message (expected ...)"
std::string to_string(const ParseError& e);

template <class T>
struct Parsed {
    std::optional<T> value;
    std::vector<ParseError> errors;

    bool ok() const { return value.has_value(); }
};

/// References are resolved against `registry` (the built-in one when null).
/// A malformed rule is reported and skipped up to the next '.', so one call
/// reports every bad rule.
Parsed<Program> parse_program(std::string_view text, std::string_view file = "<program>",
                              std::shared_ptr<const Registry> registry = nullptr);

/// Always emits the #delta_t header. Throws std::invalid_argument for rules
/// with explicit tuple sets or advancing maps, which have no concrete syntax.
std::string serialize_program(const Program& p);

Parsed<InitialCondition> parse_init(std::string_view text, std::string_view file = "<init>");
std::string serialize_init(const InitialCondition& init);

/// One `fact <literal> @ <position>` line per fact, in canonical order.
std::string serialize_interpretation(const Interpretation& m);
Parsed<Interpretation> parse_interpretation(std::string_view text, std::string_view file = "<facts>");

std::string serialize_literals(const LiteralSet& lits);
std::string serialize_normal_program(const asp::NormalProgram& p);
std::string serialize_trace(const std::vector<LayerTrace>& layers);

}  // namespace hasp
