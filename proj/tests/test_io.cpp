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
#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "hasp/incremental.hpp"
#include "hasp/io.hpp"

using namespace hasp;
using namespace hasp::testing;

namespace {

std::vector<ParseError> errors_of(std::string_view text) { return parse_program(text, "t.hasp").errors; }

// Every span must point inside the text.
void check_spans(std::string_view text, const std::vector<ParseError>& errs) {
    std::size_t lines = 1;
    for (char ch : text) lines += ch == '\n';
    for (const auto& e : errs) {
        CHECK(e.span.file == "t.hasp");
        CHECK(e.span.line >= 1);
        CHECK(e.span.line <= lines);
        CHECK(e.span.column >= 1);
        CHECK(e.span.length >= 1);
    }
}

}  // namespace

TEST_CASE("the tick program parses into three rules") {
    Program p = e1();
    REQUIRE(p.rules.size() == 3);
    CHECK(p.delta_t == Rational(1));
    CHECK(p.rules[0].is_stationary());
    CHECK(p.rules[0].blocks == std::vector<Block>{Block{}});
    CHECK(p.rules[1].is_advancing());
    CHECK(p.rules[2].blocks == std::vector<Block>{Block{{lit("b")}, {lit("a")}}});
}

TEST_CASE("multi-block rules and headers") {
    auto parsed = parse_program("#delta_t 1/2.\nh :- a ; b, not -c : cs consecutive2, bool true.\n");
    REQUIRE(parsed.ok());
    const Program& p = *parsed.value;
    CHECK(p.delta_t == Rational(1, 2));
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].blocks == std::vector<Block>{Block{{lit("a")}, {}}, Block{{lit("b")}, {lit("-c")}}});
    CHECK(serialize_program(p) == "#delta_t 1/2.\nh :- a ; b, not -c : cs consecutive2, bool true.\n");
}

TEST_CASE("serialization of single programs") {
    CHECK(serialize_program(e1()) == std::string("#delta_t 1.\n") + kE1);
    Program lead = program("a :- ; b : cs consecutive2, bool true.\n");
    CHECK(serialize_program(lead) == "#delta_t 1.\na :- ; b : cs consecutive2, bool true.\n");
    Program none{{}, Rational(1), Registry::builtin()};
    CHECK(serialize_program(none) == "#delta_t 1.\n");
}

TEST_CASE("comments and CRLF line endings") {
    auto parsed = parse_program("% header\r\na :- : cs any1, bool true. % trailing\r\n");
    REQUIRE(parsed.ok());
    CHECK(parsed.value->rules.size() == 1);
}

TEST_CASE("unresolved names and arity mismatches") {
    std::string text = "a :- : cs nosuch, bool true.\nb :- a : cs any2, bool true.\nc :- : cs any1, adv warp.\n";
    auto errs = errors_of(text);
    REQUIRE(errs.size() == 3);
    CHECK(errs[0].span.line == 1);
    CHECK(errs[0].message.find("nosuch") != std::string::npos);
    CHECK(errs[1].span.line == 2);
    CHECK(errs[2].span.line == 3);
    check_spans(text, errs);
}

TEST_CASE("bad headers") {
    CHECK(errors_of("#delta_t 0.\n").size() == 1);
    CHECK(errors_of("#delta_t 1.\n#delta_t 2.\n").size() == 1);
    auto late = errors_of("a :- : cs any1, bool true.\n#delta_t 1.\n");
    REQUIRE(late.size() == 1);
    CHECK(late[0].span.line == 2);
}

TEST_CASE("reserved words and syntax errors") {
    std::string text = "not :- : cs any1, bool true.\nb :- a cs any1, bool true.\nc :- : cs any1, bool true.\n";
    auto parsed = parse_program(text, "t.hasp");
    CHECK_FALSE(parsed.ok());
    CHECK(parsed.errors.size() == 2);
    check_spans(text, parsed.errors);
    CHECK(to_string(parsed.errors[0]).rfind("t.hasp:1:1: ", 0) == 0);

    auto stray = errors_of("a :- : cs any1, bool true.\n\xc3\xa9 :- : cs any1, bool true.\n");
    REQUIRE_FALSE(stray.empty());
    CHECK(stray[0].span.line == 2);
    CHECK(stray[0].span.column == 1);
}

TEST_CASE("initial conditions") {
    auto j = parse_init("gp step=0 level=7/2\ngp step=0 level=7/2\ngp step=1\n");
    REQUIRE(j.ok());
    CHECK(j.value->positions == PositionSet{at(0, "level", Rational(7, 2)), at(1)});
    CHECK(serialize_init(*j.value) == "gp step=0 level=7/2\ngp step=1\n");
    CHECK_FALSE(parse_init("gp step=-1\n").ok());
    CHECK_FALSE(parse_init("gp level=1\n").ok());
    CHECK_FALSE(parse_init("gp step=0 x=1 x=2\n").ok());
    CHECK_FALSE(parse_init("pos step=0\n").ok());
    CHECK(parse_init("").value->positions.empty());
}

TEST_CASE("interpretations") {
    CHECK(serialize_interpretation({}) == "");
    CHECK(serialize_interpretation(e1_answer()) == "fact a @ step=0\nfact b @ step=1\nfact c @ step=1\n");
    CHECK(serialize_interpretation({fact("-a", 0)}) == "fact -a @ step=0\n");
    auto back = parse_interpretation(serialize_interpretation(e1_answer()));
    REQUIRE(back.ok());
    CHECK(*back.value == e1_answer());
    CHECK_FALSE(parse_interpretation("fact a step=0\n").ok());
    CHECK(serialize_literals({lit("a"), lit("-b")}) == "{a, -b}");
    CHECK(serialize_literals({}) == "{}");
}

TEST_CASE("trace layout") {
    auto res = run(e1(), j0(), select_all(), first_answer_set(), 3);
    std::string t = serialize_trace(res.layers);
    CHECK(t.rfind("layer 0\n  frontier step=0\n  at step=0\n    rule a :-.\n    rule c :- b, not a.\n"
                   "    chosen {a}\n  fact a @ step=0\nlayer 1\n", 0) == 0);
    CHECK(t.find("    rule b :-.\n    chosen {b, c}\n") != std::string::npos);
    CHECK(t.size() - t.rfind("layer 2\n") == 8);
}

TEST_CASE("round trips over the corpus") {
    for (const auto& c : make_corpus(200, 5)) {
        std::string text = serialize_program(c.program);
        auto back = parse_program(text);
        REQUIRE(back.ok());
        CHECK(*back.value == c.program);
        CHECK(serialize_program(*back.value) == text);

        auto j = parse_init(serialize_init(c.init));
        REQUIRE(j.ok());
        CHECK(*j.value == c.init);

        for (const auto& m : brute_force_answer_sets(c.program, c.init, c.horizon)) {
            auto mb = parse_interpretation(serialize_interpretation(m));
            REQUIRE(mb.ok());
            CHECK(*mb.value == m);
        }
    }
}
