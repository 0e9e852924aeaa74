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

#include "fixtures.hpp"
#include "hasp/semantics.hpp"

using namespace hasp;
using namespace hasp::testing;

TEST_CASE("generalized positions of an interpretation") {
    CHECK(gp({}).empty());
    CHECK(gp({fact("a", 0), fact("b", 1)}) == PositionSet{at(0), at(1)});
    CHECK(gp({fact("a", 0), fact("b", 0)}) == PositionSet{at(0)});
    CHECK(gp_i({}, j0()) == PositionSet{at(0)});
    CHECK(gp_i({fact("a", 1)}, j0()) == PositionSet{at(0), at(1)});
    CHECK(gp_i({fact("a", 0)}, j0()) == PositionSet{at(0)});
}

TEST_CASE("block satisfaction") {
    const Block a{{lit("a")}, {}};
    const Block empty;
    CHECK(satisfies_block({fact("a", 0)}, j0(), a, at(0)));
    CHECK(satisfies_block({}, j0(), empty, at(0)));
    CHECK_FALSE(satisfies_block({}, j0(), empty, at(1)));
    CHECK(satisfies_block({fact("b", 1)}, j0(), Block{{lit("b")}, {lit("a")}}, at(1)));
    CHECK_FALSE(satisfies_block({fact("b", 1), fact("a", 1)}, j0(), Block{{lit("b")}, {lit("a")}}, at(1)));
    // Negative-only block: the position must be known.
    CHECK(satisfies_block({fact("b", 1)}, j0(), Block{{}, {lit("a")}}, at(1)));
    CHECK_FALSE(satisfies_block({fact("b", 1)}, j0(), Block{{}, {lit("a")}}, at(2)));
    // Classical negation is just another literal.
    CHECK_FALSE(satisfies_block({fact("-a", 0)}, j0(), a, at(0)));
}

TEST_CASE("body satisfaction") {
    CHECK(satisfies_body({}, j0(), {Block{}}, {at(0)}));
    CHECK_FALSE(satisfies_body({fact("a", 0)}, j0(), {Block{{lit("a")}, {}}, Block{{lit("b")}, {}}}, {at(0), at(1)}));
    CHECK(satisfies_body({fact("a", 0), fact("b", 1)}, j0(), e1().rules[2].blocks, {at(1)}));
    CHECK_THROWS_AS(satisfies_body({}, j0(), {Block{}}, {at(0), at(1)}), std::invalid_argument);
}

TEST_CASE("inapplicability") {
    Program p = program("h :- : cs time_eq(5), bool true.\nf :- : cs any1, bool false.\n" + std::string(kE1));
    Interpretation m{fact("a", 0), fact("b", 1)};
    CHECK(is_inapplicable(p, p.rules[0], m, j0()));  // no tuples at all
    CHECK(is_inapplicable(p, p.rules[1], m, j0()));  // boolean never true
    Program e = e1();
    CHECK_FALSE(is_inapplicable(e, e.rules[1], e1_answer(), j0()));
    // The tick output (k=1) is not a known position yet.
    CHECK(is_inapplicable(e, e.rules[1], {fact("a", 0)}, j0()));
    // `not a` blocks r3 wherever a holds.
    CHECK(is_inapplicable(e, e.rules[2], {fact("a", 0)}, j0()));
}

TEST_CASE("reducts of the tick program rules") {
    Program e = e1();
    const auto m = e1_answer();
    ReductRule r1 = reduct_rule(e, e.rules[0], m, j0());
    CHECK(r1.constraint == TupleSet{{at(0)}});

    ReductRule r2 = reduct_rule(e, e.rules[1], m, j0());
    CHECK(r2.kind == RuleKind::advancing);
    CHECK(r2.head == lit("b"));
    CHECK(r2.positive == std::vector<std::vector<Literal>>{{lit("a")}});
    CHECK(r2.constraint == TupleSet{{at(0)}});
    CHECK(r2.advance == AdvancingMap{{{at(0)}, {at(1)}}});

    ReductRule r3 = reduct_rule(e, e.rules[2], m, j0());
    CHECK(r3.head == lit("c"));
    CHECK(r3.positive == std::vector<std::vector<Literal>>{{lit("b")}});
    CHECK(r3.constraint == TupleSet{{at(1)}});

    CHECK(reduct_program(e, m, j0()).rules.size() == 3);
    CHECK_THROWS_AS(reduct_rule(e, e.rules[2], {fact("a", 0)}, j0()), std::logic_error);
}

TEST_CASE("reduct of a negation-free program keeps every applicable rule") {
    Program p = program("a :- : cs any1, bool true.\nb :- a : cs any1, adv tick.\nc :- b : cs time_eq(7), bool true.\n");
    Interpretation m{fact("a", 0), fact("b", 1), fact("a", 1)};
    auto ph = reduct_program(p, m, j0());
    REQUIRE(ph.rules.size() == 2);
    CHECK(ph.rules[0].constraint == TupleSet{{at(0)}, {at(1)}});
    // (k=1) is excluded: its tick output (k=2) is not in GP(M).
    CHECK(ph.rules[1].constraint == TupleSet{{at(0)}});
}

TEST_CASE("one-step provability") {
    Program e = e1();
    auto ph = reduct_program(e, e1_answer(), j0());
    CHECK(one_step(HornHybridProgram{}, j0(), {fact("a", 0)}) == Interpretation{fact("a", 0)});
    CHECK(one_step(ph, j0(), {}) == Interpretation{fact("a", 0)});
    CHECK(one_step(ph, j0(), {fact("a", 0)}) == Interpretation{fact("a", 0), fact("b", 1)});
    CHECK(one_step(ph, j0(), {fact("a", 0), fact("b", 1)}) == e1_answer());
}

TEST_CASE("least fixpoint") {
    CHECK(least_fixpoint(HornHybridProgram{}, j0()).empty());
    Program e = e1();
    CHECK(least_fixpoint(reduct_program(e, e1_answer(), j0()), j0()) == e1_answer());
    // a :- a never gets started.
    Program loop = program("a :- a : cs any1, adv tick.\n");
    CHECK(least_fixpoint(reduct_program(loop, {}, j0()), j0()).empty());
}

TEST_CASE("answer-set test") {
    CHECK(is_answer_set(Program{{}, Rational(1), Registry::builtin()}, j0(), {}));
    Program e = e1();
    CHECK(is_answer_set(e, j0(), e1_answer()));
    // With only (a,0) known, r2's output position is unknown, so r2 is
    // inapplicable and the fixpoint is {(a,0)} itself.
    CHECK(is_answer_set(e, j0(), {fact("a", 0)}));
    CHECK_FALSE(is_answer_set(e, j0(), {}));
    CHECK_FALSE(is_answer_set(e, j0(), {fact("a", 0), fact("b", 1)}));
    CHECK_FALSE(is_answer_set(e, j0(), {fact("a", 0), fact("b", 1), fact("c", 1), fact("c", 0)}));
}

TEST_CASE("inconsistent fixpoints are not answer sets") {
    Program p = program("a :- : cs any1, bool true.\n-a :- : cs any1, bool true.\n");
    CHECK_FALSE(is_answer_set(p, j0(), {fact("a", 0), fact("-a", 0)}));
    CHECK_FALSE(is_answer_set(p, j0(), {fact("a", 0)}));
}

TEST_CASE("initial positions other than step 0 seed empty blocks") {
    Program p = program("a :- : cs any1, bool true.\n");
    InitialCondition j{{at(0), at(2)}};
    CHECK(is_answer_set(p, j, {fact("a", 0), fact("a", 2)}));
    CHECK_FALSE(is_answer_set(p, j, {fact("a", 0)}));
}

TEST_CASE("the iteration cap is reported") {
    auto loose = Registry::with_builtins(Registry::Options{1'000'000, false}).freeze();
    auto parsed = parse_program("a :- : cs any1, bool true.\nb :- a : cs any1, adv tick.\n", "p", loose);
    REQUIRE(parsed.ok());
    Interpretation m{fact("a", 0), fact("b", 1)};
    CHECK_THROWS_AS(least_fixpoint(reduct_program(*parsed.value, m, j0()), j0(), 1), IterationLimitError);
}
