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
#include "hasp/oracle.hpp"

#include <algorithm>
#include <map>

#include "hasp/registry.hpp"

namespace hasp {

Interpretation FiniteUniverse::facts() const {
    Interpretation out;
    for (const auto& p : positions)
        for (const auto& l : literals) out.insert(Fact{l, p});
    return out;
}

FiniteUniverse reachable_universe(const Program& p, const InitialCondition& init, std::int64_t horizon,
                                  const OracleLimits& limits) {
    FiniteUniverse uni;
    uni.literals = p.literal_universe();
    for (const auto& q : init.positions)
        if (q.step <= horizon) uni.positions.insert(q);
    auto guard = [&] {
        if (uni.positions.size() > limits.max_positions)
            throw GuardError("reachable universe has more than " + std::to_string(limits.max_positions) +
                             " positions (horizon " + std::to_string(horizon) + ")");
    };
    guard();
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& r : p.rules) {
            if (!r.is_advancing()) continue;
            for (const auto& t : rule_tuples(p, r, uni.positions))
                for (const auto& q : rule_advance(p, r, t))
                    if (q.step <= horizon && uni.positions.insert(q).second) grew = true;
            guard();
        }
    }
    return uni;
}

Interpretation derivable_facts(const Program& p, const InitialCondition& init, const FiniteUniverse& uni) {
    PositionSet domain = uni.positions;
    domain.insert(init.positions.begin(), init.positions.end());
    Interpretation out;
    for (const auto& r : p.rules) {
        for (const auto& t : rule_tuples(p, r, domain)) {
            if (r.is_stationary()) {
                if (rule_boolean(p, r, t)) out.insert(Fact{r.head, t.back()});
            } else {
                for (const auto& q : rule_advance(p, r, t))
                    if (uni.positions.contains(q)) out.insert(Fact{r.head, q});
            }
        }
    }
    return out;
}

std::vector<Interpretation> answer_sets_within(const Program& p, const InitialCondition& init,
                                               const FiniteUniverse& uni, const Interpretation& candidates,
                                               const OracleLimits& limits) {
    Interpretation cand = intersect(derivable_facts(p, init, uni), candidates);
    if (cand.size() > limits.max_facts)
        throw GuardError("brute force over " + std::to_string(cand.size()) + " candidate facts exceeds limit " +
                         std::to_string(limits.max_facts));

    PositionSet domain = uni.positions;
    domain.insert(init.positions.begin(), init.positions.end());
    const Program ground = ground_over(p, domain);

    // One slot per (atom, position); a slot holds nothing, the atom or its
    // classical negation, so inconsistent candidates are never built.
    std::map<std::pair<Position, std::string>, std::vector<Fact>> slots;
    for (const auto& f : cand) slots[{f.position, f.literal.atom.name()}].push_back(f);
    std::vector<std::vector<Fact>> options;
    for (auto& [key, fs] : slots) options.push_back(std::move(fs));

    std::vector<Interpretation> out;
    std::vector<std::size_t> choice(options.size(), 0);  // 0 = absent, i = options[..][i-1]
    while (true) {
        Interpretation m;
        for (std::size_t i = 0; i < options.size(); ++i)
            if (choice[i]) m.insert(options[i][choice[i] - 1]);
        if (is_answer_set(ground, init, m)) out.push_back(std::move(m));
        std::size_t i = 0;
        for (; i < options.size(); ++i) {
            if (++choice[i] <= options[i].size()) break;
            choice[i] = 0;
        }
        if (i == options.size()) break;
    }
    sort_canonical(out);
    return out;
}

std::vector<Interpretation> brute_force_answer_sets(const Program& p, const InitialCondition& init,
                                                    std::int64_t horizon, const OracleLimits& limits) {
    FiniteUniverse uni = reachable_universe(p, init, horizon, limits);
    return answer_sets_within(p, init, uni, uni.facts(), limits);
}

bool canonical_less(const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_canonical(std::vector<Interpretation>& v) {
    std::sort(v.begin(), v.end(), [](const Interpretation& a, const Interpretation& b) { return canonical_less(a, b); });
}

}  // namespace hasp
