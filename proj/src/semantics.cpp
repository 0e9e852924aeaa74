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
#include "hasp/semantics.hpp"

#include <algorithm>

namespace hasp {

namespace {

bool negatives_clear(const Interpretation& m, const PositionSet& gp_m, const Rule& r, const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        Block neg{{}, r.blocks[i].negative};
        if (!satisfies_block(m, gp_m, neg, t[i])) return false;
    }
    return true;
}

PositionSet restrict_positions(const PositionSet& s, const PositionSet& keep) {
    PositionSet out;
    std::set_intersection(s.begin(), s.end(), keep.begin(), keep.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace

PositionSet gp(const Interpretation& m) {
    PositionSet out;
    for (const auto& f : m) out.insert(out.end(), f.position);
    return out;
}

PositionSet gp_i(const Interpretation& m, const InitialCondition& init) {
    PositionSet out = gp(m);
    out.insert(init.positions.begin(), init.positions.end());
    return out;
}

bool satisfies_block(const Interpretation& m, const PositionSet& gp_m, const Block& b, const Position& p) {
    for (const auto& l : b.negative)
        if (m.contains(Fact{l, p})) return false;
    if (b.positive.empty()) return gp_m.contains(p);
    for (const auto& l : b.positive)
        if (!m.contains(Fact{l, p})) return false;
    return true;
}

bool satisfies_block(const Interpretation& m, const InitialCondition& init, const Block& b, const Position& p) {
    return satisfies_block(m, gp_i(m, init), b, p);
}

bool satisfies_body(const Interpretation& m, const InitialCondition& init, const std::vector<Block>& blocks,
                    const Tuple& tuple) {
    if (blocks.size() != tuple.size())
        throw std::invalid_argument("body has " + std::to_string(blocks.size()) + " blocks but tuple has " +
                                    std::to_string(tuple.size()) + " positions");
    PositionSet gp_m = gp_i(m, init);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!satisfies_block(m, gp_m, blocks[i], tuple[i])) return false;
    return true;
}

namespace {

// O^{M,I} with A^{M,I}; empty constraint means the rule is inapplicable.
ReductRule reduce(const Program& p, const Rule& r, const Interpretation& m, const PositionSet& gp_m) {
    ReductRule out{r.kind, r.head, body_positive(r), {}, {}};
    for (const auto& t : rule_tuples(p, r, gp_m)) {
        if (!negatives_clear(m, gp_m, r, t)) continue;
        if (r.is_advancing()) {
            PositionSet kept = restrict_positions(rule_advance(p, r, t), gp_m);
            if (kept.empty()) continue;
            out.advance.emplace(t, std::move(kept));
        } else if (!rule_boolean(p, r, t)) {
            continue;
        }
        out.constraint.insert(t);
    }
    return out;
}

}  // namespace

bool is_inapplicable(const Program& p, const Rule& r, const Interpretation& m, const InitialCondition& init) {
    return reduce(p, r, m, gp_i(m, init)).constraint.empty();
}

ReductRule reduct_rule(const Program& p, const Rule& r, const Interpretation& m, const InitialCondition& init) {
    ReductRule out = reduce(p, r, m, gp_i(m, init));
    if (out.constraint.empty()) throw std::logic_error("reduct of an inapplicable rule for '" + to_string(r.head) + "'");
    return out;
}

HornHybridProgram reduct_program(const Program& p, const Interpretation& m, const InitialCondition& init) {
    HornHybridProgram out;
    PositionSet gp_m = gp_i(m, init);
    for (const auto& r : p.rules) {
        ReductRule rr = reduce(p, r, m, gp_m);
        if (!rr.constraint.empty()) out.rules.push_back(std::move(rr));
    }
    return out;
}

Interpretation one_step(const HornHybridProgram& ph, const InitialCondition& init, const Interpretation& m) {
    Interpretation out = m;
    PositionSet gp_m = gp_i(m, init);
    for (const auto& r : ph.rules) {
        for (const auto& t : r.constraint) {
            bool fires = true;
            for (std::size_t i = 0; fires && i < t.size(); ++i) {
                if (!gp_m.contains(t[i])) {
                    fires = false;
                    break;
                }
                for (const auto& l : r.positive[i])
                    if (!m.contains(Fact{l, t[i]})) {
                        fires = false;
                        break;
                    }
            }
            if (!fires) continue;
            if (r.kind == RuleKind::stationary) {
                out.insert(Fact{r.head, t.back()});
            } else if (auto it = r.advance.find(t); it != r.advance.end()) {
                for (const auto& q : it->second) out.insert(Fact{r.head, q});
            }
        }
    }
    return out;
}

Interpretation least_fixpoint(const HornHybridProgram& ph, const InitialCondition& init, std::size_t max_iterations) {
    Interpretation cur;
    for (std::size_t i = 0; i < max_iterations; ++i) {
        Interpretation next = one_step(ph, init, cur);
        if (next.size() == cur.size()) return cur;
        cur = std::move(next);
    }
    throw IterationLimitError("no fixpoint within " + std::to_string(max_iterations) + " iterations");
}

bool is_answer_set(const Program& p, const InitialCondition& init, const Interpretation& m) {
    if (!consistent(m)) return false;
    return least_fixpoint(reduct_program(p, m, init), init) == m;
}

}  // namespace hasp
