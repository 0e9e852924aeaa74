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
#include "hasp/splitting.hpp"

#include <algorithm>
#include <map>

#include "hasp/registry.hpp"
#include "hasp/semantics.hpp"

namespace hasp {

namespace {

bool in_u(const SplitSet& u, const Literal& l, const Position& p) { return u.facts.contains(Fact{l, p}); }

// Does tuple t of r conclude anything inside U?
bool concludes_in(const SplitSet& u, const Program& p, const Rule& r, const Tuple& t) {
    if (r.is_stationary()) return in_u(u, r.head, t.back());
    for (const auto& q : rule_advance(p, r, t))
        if (in_u(u, r.head, q)) return true;
    return false;
}

// Contribution tuples of r split by U: tuples concluding inside U (CS_b)
// and outside (CS_Rem), with the advancing outputs on each side.
struct Cut {
    TupleSet inside, outside;
    AdvancingMap inside_adv, outside_adv;
};

Cut cut_rule(const SplitSet& u, const Program& p, const Rule& r, const FiniteUniverse& uni) {
    Cut c;
    for (const auto& t : rule_tuples(p, r, uni.positions)) {
        if (r.is_stationary()) {
            if (!rule_boolean(p, r, t)) continue;
            (in_u(u, r.head, t.back()) ? c.inside : c.outside).insert(t);
            continue;
        }
        PositionSet in, out;
        for (const auto& q : rule_advance(p, r, t)) (in_u(u, r.head, q) ? in : out).insert(q);
        if (!in.empty()) {
            c.inside.insert(t);
            c.inside_adv.emplace(t, std::move(in));
        }
        if (!out.empty()) {
            c.outside.insert(t);
            c.outside_adv.emplace(t, std::move(out));
        }
    }
    return c;
}

Rule with_parts(const Rule& r, TupleSet tuples, AdvancingMap adv) {
    Rule out = r;
    out.cs = std::move(tuples);
    if (r.is_advancing()) out.adv = std::move(adv);
    return out;
}

std::map<Position, LiteralSet> literals_by_position(const Interpretation& facts) {
    std::map<Position, LiteralSet> out;
    for (const auto& f : facts) out[f.position].insert(f.literal);
    return out;
}

InitialCondition gp_j(const Interpretation& x, const InitialCondition& init) { return {gp_i(x, init)}; }

}  // namespace

bool is_splitting_set(const SplitSet& u, const Program& p, const InitialCondition& init, const FiniteUniverse& uni) {
    const PositionSet gp_u = gp_i(u.facts, init);
    for (const auto& r : p.rules) {
        for (const auto& t : rule_tuples(p, r, uni.positions)) {
            if (!concludes_in(u, p, r, t)) continue;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (!gp_u.contains(t[i])) return false;
                for (const auto& l : r.blocks[i].literals())
                    if (!in_u(u, l, t[i])) return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> rules_b(const SplitSet& u, const Program& p, const FiniteUniverse& uni) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        if (!cut_rule(u, p, p.rules[i], uni).inside.empty()) out.push_back(i);
    return out;
}

Program bottom(const SplitSet& u, const Program& p, const FiniteUniverse& uni) {
    Program out{{}, p.delta_t, p.registry};
    for (const auto& r : p.rules) {
        Cut c = cut_rule(u, p, r, uni);
        if (!c.inside.empty()) out.rules.push_back(with_parts(r, std::move(c.inside), std::move(c.inside_adv)));
    }
    return out;
}

Program remainder(const SplitSet& u, const Program& p, const FiniteUniverse& uni) {
    Program out{{}, p.delta_t, p.registry};
    for (const auto& r : p.rules) {
        Cut c = cut_rule(u, p, r, uni);
        if (!c.inside.empty() && !c.outside.empty())
            out.rules.push_back(with_parts(r, std::move(c.outside), std::move(c.outside_adv)));
    }
    return out;
}

Program top_program(const SplitSet& u, const Program& p, const FiniteUniverse& uni) {
    Program out{{}, p.delta_t, p.registry};
    for (const auto& r : p.rules) {
        Cut c = cut_rule(u, p, r, uni);
        if (c.inside.empty())
            out.rules.push_back(r);
        else if (!c.outside.empty())
            out.rules.push_back(with_parts(r, std::move(c.outside), std::move(c.outside_adv)));
    }
    return out;
}

Program eps(const SplitSet& u, const Program& p, const Interpretation& x, const FiniteUniverse& uni) {
    const auto u_at = literals_by_position(u.facts);
    auto at = [&](const Position& q) -> const LiteralSet& {
        static const LiteralSet none;
        auto it = u_at.find(q);
        return it == u_at.end() ? none : it->second;
    };
    Program out{{}, p.delta_t, p.registry};
    for (const auto& r : p.rules) {
        for (const auto& t : rule_tuples(p, r, uni.positions)) {
            bool projected = true;
            for (std::size_t i = 0; projected && i < t.size(); ++i) {
                for (const auto& l : r.blocks[i].positive)
                    if (in_u(u, l, t[i]) && !x.contains(Fact{l, t[i]})) projected = false;
                for (const auto& l : r.blocks[i].negative)
                    if (x.contains(Fact{l, t[i]})) projected = false;
            }
            if (!projected) continue;
            Rule e = r;
            for (std::size_t i = 0; i < t.size(); ++i) e.blocks[i] = block_difference(r.blocks[i], at(t[i]));
            e.cs = TupleSet{t};
            if (auto m = std::get_if<AdvancingMap>(&r.adv)) {
                AdvancingMap one;
                if (auto it = m->find(t); it != m->end()) one.emplace(t, it->second);
                e.adv = std::move(one);
            }
            out.rules.push_back(std::move(e));
        }
    }
    return out;
}

SplitVerdict theorem1_decompose_with(const Program& p, const Program& bottom_program, const SplitSet& u,
                                     const InitialCondition& init, const FiniteUniverse& uni,
                                     const Interpretation& m) {
    if (!is_splitting_set(u, p, init, uni)) throw std::invalid_argument("not a splitting set of the program");
    SplitVerdict v;
    v.x = intersect(m, u.facts);
    v.y = subtract(m, u.facts);
    v.bottom_ok = is_answer_set(bottom_program, init, v.x);
    Program top = eps(u, top_program(u, p, uni), v.x, uni);
    v.top_ok = is_answer_set(top, gp_j(v.x, init), v.y);
    return v;
}

SplitVerdict theorem1_decompose(const Program& p, const SplitSet& u, const InitialCondition& init,
                                const FiniteUniverse& uni, const Interpretation& m) {
    return theorem1_decompose_with(p, bottom(u, p, uni), u, init, uni, m);
}

std::vector<Interpretation> theorem1_solutions(const Program& p, const SplitSet& u, const InitialCondition& init,
                                               const FiniteUniverse& uni, const OracleLimits& limits) {
    if (!is_splitting_set(u, p, init, uni)) throw std::invalid_argument("not a splitting set of the program");
    const Program b = bottom(u, p, uni);
    const Program top = top_program(u, p, uni);
    const Interpretation outside = subtract(uni.facts(), u.facts);
    std::vector<Interpretation> out;
    for (const auto& x : answer_sets_within(b, init, uni, u.facts, limits)) {
        Program e = eps(u, top, x, uni);
        for (const auto& y : answer_sets_within(e, gp_j(x, init), uni, outside, limits)) {
            Interpretation m = unite(x, y);
            if (consistent(m)) out.push_back(std::move(m));
        }
    }
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SplitSet> prefix_sequence(const FiniteUniverse& uni, std::int64_t horizon) {
    std::vector<SplitSet> out;
    for (std::int64_t i = 0; i <= horizon; ++i) {
        SplitSet u;
        for (const auto& q : uni.positions)
            if (q.step <= i)
                for (const auto& l : uni.literals) u.facts.insert(Fact{l, q});
        out.push_back(std::move(u));
    }
    return out;
}

bool SequenceVerdict::holds() const {
    return covered && std::all_of(layers.begin(), layers.end(), [](const LayerVerdict& l) { return l.ok; });
}

namespace {

void check_sequence(const Program& p, const std::vector<SplitSet>& seq, const InitialCondition& init,
                    const FiniteUniverse& uni) {
    if (seq.empty()) throw std::invalid_argument("empty splitting sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && !is_subset(seq[i - 1].facts, seq[i].facts))
            throw std::invalid_argument("splitting sequence is not monotone at index " + std::to_string(i));
        if (!is_splitting_set(seq[i], p, init, uni))
            throw std::invalid_argument("member " + std::to_string(i) + " is not a splitting set");
    }
    if (!is_subset(uni.facts(), seq.back().facts))
        throw std::invalid_argument("splitting sequence does not cover the universe");
}

// Everything the sequence check needs per index, computed once.
struct SequencePrograms {
    std::vector<Program> bottoms;  // b_{U_a}(P)
    std::vector<Program> tops;     // b_{U_{a+1}}(P) \ Rules_b(U_a, .) u Rem(U_a, .)
};

SequencePrograms sequence_programs(const Program& p, const std::vector<SplitSet>& seq, const FiniteUniverse& uni) {
    SequencePrograms sp;
    for (const auto& u : seq) sp.bottoms.push_back(bottom(u, p, uni));
    for (std::size_t a = 0; a + 1 < seq.size(); ++a) sp.tops.push_back(top_program(seq[a], sp.bottoms[a + 1], uni));
    return sp;
}

}  // namespace

SequenceVerdict theorem2_decompose(const Program& p, const std::vector<SplitSet>& seq, const InitialCondition& init,
                                   const FiniteUniverse& uni, const Interpretation& m) {
    check_sequence(p, seq, init, uni);
    const SequencePrograms sp = sequence_programs(p, seq, uni);
    SequenceVerdict v;
    v.covered = is_subset(m, seq.back().facts);

    Interpretation acc = intersect(m, seq[0].facts);
    v.layers.push_back({acc, is_answer_set(sp.bottoms[0], init, acc)});
    for (std::size_t a = 0; a + 1 < seq.size(); ++a) {
        Interpretation layer = intersect(m, subtract(seq[a + 1].facts, seq[a].facts));
        Program e = eps(seq[a], sp.tops[a], acc, uni);
        bool ok = is_answer_set(e, gp_j(acc, init), layer) && is_answer_set(sp.bottoms[a], init, acc);
        acc = unite(acc, layer);
        v.layers.push_back({std::move(layer), ok});
    }
    return v;
}

std::vector<Interpretation> theorem2_solutions(const Program& p, const std::vector<SplitSet>& seq,
                                               const InitialCondition& init, const FiniteUniverse& uni,
                                               const OracleLimits& limits) {
    check_sequence(p, seq, init, uni);
    const SequencePrograms sp = sequence_programs(p, seq, uni);
    std::vector<Interpretation> out;
    auto extend = [&](auto&& self, std::size_t a, const Interpretation& acc) -> void {
        if (a + 1 == seq.size()) {
            if (consistent(acc)) out.push_back(acc);
            return;
        }
        if (!is_answer_set(sp.bottoms[a], init, acc)) return;
        Program e = eps(seq[a], sp.tops[a], acc, uni);
        Interpretation layer_facts = subtract(seq[a + 1].facts, seq[a].facts);
        for (const auto& x : answer_sets_within(e, gp_j(acc, init), uni, layer_facts, limits))
            self(self, a + 1, unite(acc, x));
    };
    for (const auto& x0 : answer_sets_within(sp.bottoms[0], init, uni, seq[0].facts, limits)) extend(extend, 0, x0);
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hasp
