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
#include "hasp/oracle.hpp"

using namespace hasp;
using namespace hasp::testing;

TEST_CASE("reachable universe") {
    CHECK(reachable_universe(e1(), j0(), 2).positions == PositionSet{at(0), at(1), at(2)});
    Program still = program("a :- : cs any1, bool true.\n");
    InitialCondition j{{at(0), at(1)}};
    CHECK(reachable_universe(still, j, 3).positions == j.positions);
    CHECK(reachable_universe(e1(), j, 0).positions == PositionSet{at(0)});
    CHECK(reachable_universe(e1(), j0(), 2).literals == LiteralSet{lit("a"), lit("-a"), lit("b"), lit("-b"), lit("c"), lit("-c")});
}

TEST_CASE("the position guard reports sizes") {
    Program wide = program("a :- : cs any1, adv fanout(x, {0, 1, 2, 3}).\n");
    InitialCondition j{{at(0, "x", Rational(0))}};
    try {
        reachable_universe(wide, j, 3, OracleLimits{10, 22});
        FAIL("expected a guard error");
    } catch (const GuardError& e) {
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
}

TEST_CASE("the tick program answer sets") {
    // {(a,0)} is stable too: with (k=1) unknown, r2 is inapplicable.
    auto sets = brute_force_answer_sets(e1(), j0(), 3);
    CHECK(sets == std::vector<Interpretation>{{fact("a", 0)}, e1_answer()});
}

TEST_CASE("trivial and odd-loop programs") {
    Program none{{}, Rational(1), Registry::builtin()};
    CHECK(brute_force_answer_sets(none, j0(), 3) == std::vector<Interpretation>{Interpretation{}});
    CHECK(brute_force_answer_sets(program("a :- not a : cs any1, bool true.\n"), j0(), 2).empty());
}

TEST_CASE("the fact guard") {
    Program big = program("a :- : cs any1, bool true.\nb :- : cs any1, bool true.\n"
                          "c :- a : cs any1, adv fanout(x, {0, 1, 2}).\n");
    InitialCondition j{{at(0, "x", Rational(0))}};
    CHECK_THROWS_AS(brute_force_answer_sets(big, j, 3, OracleLimits{64, 6}), GuardError);
}

TEST_CASE("derivable facts bound every answer set") {
    for (const auto& c : make_corpus(60, 17)) {
        auto uni = reachable_universe(c.program, c.init, c.horizon);
        auto derivable = derivable_facts(c.program, c.init, uni);
        for (const auto& m : brute_force_answer_sets(c.program, c.init, c.horizon)) {
            CHECK(is_subset(m, derivable));
            CHECK(consistent(m));
            for (const auto& f : m) CHECK(uni.positions.contains(f.position));
        }
    }
}

TEST_CASE("pruning loses nothing against the unpruned search") {
    // Plain subset search over every consistent fact set of the universe.
    std::size_t checked = 0;
    for (const auto& c : make_corpus(80, 23, CorpusShape{3, 1, 1, 4, 1 << 14})) {
        auto uni = reachable_universe(c.program, c.init, c.horizon);
        auto all = uni.facts();
        if (all.size() > 12) continue;
        ++checked;
        std::vector<Fact> v(all.begin(), all.end());
        std::vector<Interpretation> expected;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
            Interpretation m;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask >> i & 1U) m.insert(v[i]);
            if (is_answer_set(c.program, c.init, m)) expected.push_back(m);
        }
        sort_canonical(expected);
        CHECK(brute_force_answer_sets(c.program, c.init, c.horizon) == expected);
    }
    CHECK(checked >= 20);
}

TEST_CASE("canonical order") {
    std::vector<Interpretation> v{e1_answer(), {fact("b", 0)}, {}, {fact("a", 0)}};
    sort_canonical(v);
    CHECK(v == std::vector<Interpretation>{{}, {fact("a", 0)}, {fact("b", 0)}, e1_answer()});
}
