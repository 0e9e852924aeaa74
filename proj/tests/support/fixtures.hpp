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

#include <stdexcept>
#include <string>

#include "hasp/core.hpp"
#include "hasp/io.hpp"

namespace hasp::testing {

inline Position at(std::int64_t k) { return Position{k, {}}; }

inline Position at(std::int64_t k, const std::string& name, Rational v) {
    Position p{k, {}};
    p.params[name] = v;
    return p;
}

/// "a" or "-a"
inline Literal lit(const std::string& s) { return s[0] == '-' ? Literal::neg(s.substr(1)) : Literal::pos(s); }

inline Fact fact(const std::string& l, std::int64_t k) { return Fact{lit(l), at(k)}; }

inline Program program(const std::string& text) {
    auto parsed = parse_program(text);
    if (!parsed.ok()) throw std::invalid_argument(to_string(parsed.errors.front()));
    return *parsed.value;
}

inline constexpr const char* kE1 =
    "a :- : cs time_eq(0), bool true.\n"
    "b :- a : cs any1, adv tick.\n"
    "c :- b, not a : cs any1, bool true.\n";

inline Program e1() { return program(kE1); }
inline InitialCondition j0() { return InitialCondition{{at(0)}}; }
inline Interpretation e1_answer() { return {fact("a", 0), fact("b", 1), fact("c", 1)}; }

}  // namespace hasp::testing
