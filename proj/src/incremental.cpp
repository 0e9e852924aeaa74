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
#include "hasp/incremental.hpp"

#include <algorithm>

#include "hasp/registry.hpp"
#include "hasp/semantics.hpp"

namespace hasp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

PositionSet gp_j(const Interpretation& n, const InitialCondition& init) { return gp_i(n, init); }

bool body_holds(const Interpretation& n, const PositionSet& gp_n, const Rule& r, const Tuple& t, std::size_t blocks) {
    for (std::size_t i = 0; i < blocks; ++i)
        if (!satisfies_block(n, gp_n, r.blocks[i], t[i])) return false;
    return true;
}

// Advancing (rule, tuple) pairs over GP_J(N) whose body N satisfies.
template <class Fn>
void for_each_active_advancing(const Program& p, const Interpretation& n, const InitialCondition& init, Fn&& fn) {
    const PositionSet gp_n = gp_j(n, init);
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        if (!r.is_advancing()) continue;
        for (const auto& t : rule_tuples(p, r, gp_n))
            if (body_holds(n, gp_n, r, t, r.arity())) fn(i, t);
    }
}

void add_rule(asp::NormalProgram& prog, asp::NormalRule rule) {
    if (std::find(prog.rules.begin(), prog.rules.end(), rule) == prog.rules.end()) prog.add(std::move(rule));
}

asp::NormalProgram local_program(const Program& p, const Interpretation& n, const InitialCondition& init,
                                 const Position& z) {
    asp::NormalProgram prog = red_app_program(p, n, init, z);
    for (const auto& h : head_adv(p, n, init, z)) add_rule(prog, asp::NormalRule{h, Block{}});
    return prog;
}

std::optional<LiteralSet> choose_checked(const StationarySelector& d, const Interpretation& n, const Position& z,
                                         const asp::NormalProgram& prog) {
    auto chosen = d.choose(n, z, prog);
    if (chosen && !asp::n_is_answer_set(prog, *chosen))
        throw ContractError("stationary selector '" + d.name + "' returned a non-answer-set at " + to_string(z));
    return chosen;
}

std::string program_key(const asp::NormalProgram& prog) {
    std::string out;
    for (const auto& r : prog.rules) out += asp::to_string(r);
    return out;
}

}  // namespace

AdvancingSelector select_all() {
    return {"select_all", [](const Interpretation&, const PositionSet& z) { return z; }};
}

AdvancingSelector select_none() {
    return {"select_none", [](const Interpretation&, const PositionSet&) { return PositionSet{}; }};
}

AdvancingSelector seeded_random_advancing(Rational keep, std::uint64_t seed) {
    if (keep < Rational(0) || keep > Rational(1)) throw std::invalid_argument("keep probability must lie in [0, 1]");
    return {"seeded_random", [keep, seed](const Interpretation&, const PositionSet& z) {
                PositionSet out;
                for (const auto& q : z) {
                    std::uint64_t h = splitmix64(seed ^ fnv1a(to_string(q)));
                    if (static_cast<std::int64_t>(h % static_cast<std::uint64_t>(keep.den())) < keep.num())
                        out.insert(q);
                }
                return out;
            }};
}

StationarySelector first_answer_set() {
    return {"first", [](const Interpretation&, const Position&, const asp::NormalProgram& u) -> std::optional<LiteralSet> {
                auto all = asp::n_answer_sets(u);
                if (all.empty()) return std::nullopt;
                return all.front();
            }};
}

StationarySelector seeded_random_stationary(std::uint64_t seed) {
    return {"seeded_random",
            [seed](const Interpretation&, const Position& z, const asp::NormalProgram& u) -> std::optional<LiteralSet> {
                auto all = asp::n_answer_sets(u);
                if (all.empty()) return std::nullopt;
                std::uint64_t h = splitmix64(seed ^ fnv1a(program_key(u), fnv1a(to_string(z))));
                return all[h % all.size()];
            }};
}

std::vector<std::size_t> rules_adv_at_time(const Program& p, const Interpretation& n, const InitialCondition& init,
                                           std::int64_t k) {
    std::vector<std::size_t> out;
    for_each_active_advancing(p, n, init, [&](std::size_t i, const Tuple& t) {
        if (t.back().step == k && (out.empty() || out.back() != i)) out.push_back(i);
    });
    return out;
}

PositionSet next_gp_at_tuple(const Program& p, const Interpretation& n, const InitialCondition& init,
                             const Tuple& tuple) {
    const PositionSet gp_n = gp_j(n, init);
    PositionSet out;
    for (const auto& r : p.rules) {
        if (!r.is_advancing() || r.arity() != tuple.size() || !rule_contains(p, r, tuple)) continue;
        if (!std::all_of(tuple.begin(), tuple.end(), [&](const Position& q) { return gp_n.contains(q); })) continue;
        if (!body_holds(n, gp_n, r, tuple, r.arity())) continue;
        auto qs = rule_advance(p, r, tuple);
        out.insert(qs.begin(), qs.end());
    }
    return out;
}

PositionSet next_gp_candidates(const Program& p, const Interpretation& n, const InitialCondition& init,
                               std::int64_t k) {
    PositionSet out;
    for_each_active_advancing(p, n, init, [&](std::size_t i, const Tuple& t) {
        if (t.back().step != k) return;
        auto qs = rule_advance(p, p.rules[i], t);
        out.insert(qs.begin(), qs.end());
    });
    return out;
}

PositionSet next_gp(const Program& p, const AdvancingSelector& f, const Interpretation& n,
                    const InitialCondition& init, std::int64_t k) {
    PositionSet z = next_gp_candidates(p, n, init, k);
    PositionSet chosen = f.choose(n, z);
    if (!std::includes(z.begin(), z.end(), chosen.begin(), chosen.end()))
        throw ContractError("advancing selector '" + f.name + "' chose positions outside its candidates");
    return chosen;
}

LiteralSet head_adv(const Program& p, const Interpretation& n, const InitialCondition& init, const Position& q) {
    LiteralSet out;
    for_each_active_advancing(p, n, init, [&](std::size_t i, const Tuple& t) {
        if (t.back().step + 1 != q.step && p.registry->options().discrete_time) return;
        if (rule_advance(p, p.rules[i], t).contains(q)) out.insert(p.rules[i].head);
    });
    return out;
}

std::vector<std::size_t> rules_stat(const Program& p, const Interpretation& n, const InitialCondition& init,
                                    const Tuple& tuple) {
    const PositionSet gp_n = gp_j(n, init);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        if (!r.is_stationary() || r.arity() != tuple.size()) continue;
        if (!rule_contains(p, r, tuple) || !rule_boolean(p, r, tuple)) continue;
        if (body_holds(n, gp_n, r, tuple, r.arity() - 1)) out.push_back(i);
    }
    return out;
}

asp::NormalRule red_app_rule(const Rule& r) { return asp::NormalRule{r.head, r.blocks.back()}; }

asp::NormalProgram red_app_program(const Program& p, const Interpretation& n, const InitialCondition& init,
                                   const Position& z) {
    asp::NormalProgram prog;
    prog.universe = p.literal_universe();
    PositionSet domain = gp_j(n, init);
    domain.insert(z);
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        if (!r.is_stationary()) continue;
        for (const auto& t : rule_tuples(p, r, domain)) {
            if (t.back() != z) continue;
            auto active = rules_stat(p, n, init, t);
            if (std::find(active.begin(), active.end(), i) != active.end()) {
                add_rule(prog, red_app_rule(r));
                break;
            }
        }
    }
    return prog;
}

LayerTrace compute_y0(const Program& p, const InitialCondition& init, const StationarySelector& d,
                      const SolverLimits&) {
    LayerTrace lt;
    lt.k = 0;
    lt.frontier = init.at_step(0);
    const Interpretation none;
    for (const auto& z : lt.frontier) {
        PositionSolve ps{z, red_app_program(p, none, init, z), std::nullopt};
        ps.chosen = choose_checked(d, none, z, ps.program);
        if (ps.chosen) {
            auto facts = cross(*ps.chosen, z);
            lt.layer.insert(facts.begin(), facts.end());
        } else {
            lt.failed = true;
        }
        lt.solves.push_back(std::move(ps));
    }
    return lt;
}

LayerTrace step(const Program& p, const InitialCondition& init, const AdvancingSelector& f,
                const StationarySelector& d, const Interpretation& n, std::int64_t k, const SolverLimits&) {
    LayerTrace lt;
    lt.k = k + 1;
    lt.frontier = next_gp(p, f, n, init, k);
    for (const auto& z : lt.frontier) {
        PositionSolve ps{z, local_program(p, n, init, z), std::nullopt};
        ps.chosen = choose_checked(d, n, z, ps.program);
        if (ps.chosen) {
            auto facts = cross(*ps.chosen, z);
            lt.layer.insert(facts.begin(), facts.end());
        } else {
            lt.failed = true;
        }
        lt.solves.push_back(std::move(ps));
    }
    if (lt.failed) lt.layer.clear();
    return lt;
}

RunResult run(const Program& p, const InitialCondition& init, const AdvancingSelector& f, const StationarySelector& d,
              std::int64_t horizon, const SolverLimits& limits) {
    if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
    RunResult res;
    res.layers.push_back(compute_y0(p, init, d, limits));
    res.model = res.layers.back().layer;
    for (std::int64_t k = 0; k < horizon; ++k) {
        if (k > 0 && res.layers.back().layer.empty()) break;
        res.layers.push_back(step(p, init, f, d, res.model, k, limits));
        const auto& y = res.layers.back().layer;
        res.model.insert(y.begin(), y.end());
    }
    res.validated = is_answer_set(p, init, res.model);
    return res;
}

std::vector<Interpretation> enumerate_all(const Program& p, const InitialCondition& init, std::int64_t horizon,
                                          const SolverLimits& limits) {
    if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
    std::size_t branches = 0;
    auto count_branch = [&] {
        if (++branches > limits.max_branches)
            throw GuardError("enumeration exceeded " + std::to_string(limits.max_branches) + " branches");
    };
    std::vector<Interpretation> candidates;

    // Cartesian product of per-position answer sets, each crossed with its
    // position; `fn` receives every combined layer.
    auto combine = [&](const std::vector<Position>& zs, const std::vector<std::vector<LiteralSet>>& choices,
                       auto&& fn) {
        std::vector<std::size_t> idx(zs.size(), 0);
        while (true) {
            Interpretation layer;
            for (std::size_t i = 0; i < zs.size(); ++i) {
                auto facts = cross(choices[i][idx[i]], zs[i]);
                layer.insert(facts.begin(), facts.end());
            }
            fn(layer);
            std::size_t i = 0;
            for (; i < zs.size(); ++i) {
                if (++idx[i] < choices[i].size()) break;
                idx[i] = 0;
            }
            if (i == zs.size()) break;
        }
    };

    auto descend = [&](auto&& self, const Interpretation& n, std::int64_t k, bool last_empty) -> void {
        count_branch();
        if (k >= horizon || (k > 0 && last_empty)) {
            candidates.push_back(n);
            return;
        }
        const PositionSet all = next_gp_candidates(p, n, init, k);
        std::vector<Position> zs(all.begin(), all.end());
        // Local programs depend on (N, z) only, so solve once per level.
        std::vector<std::vector<LiteralSet>> local(zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i)
            local[i] = asp::n_answer_sets(local_program(p, n, init, zs[i]), limits.max_universe);

        if (zs.size() >= 63) throw GuardError("frontier of " + std::to_string(zs.size()) + " positions");
        const std::uint64_t subsets = std::uint64_t{1} << zs.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<Position> picked;
            std::vector<std::vector<LiteralSet>> choices;
            bool dead = false;
            for (std::size_t i = 0; i < zs.size(); ++i) {
                if (!(mask >> i & 1U)) continue;
                if (local[i].empty()) dead = true;
                picked.push_back(zs[i]);
                choices.push_back(local[i]);
            }
            if (picked.empty() || dead) {
                // Y_{k+1} is empty: the run stops here.
                count_branch();
                candidates.push_back(n);
                continue;
            }
            combine(picked, choices, [&](const Interpretation& layer) { self(self, unite(n, layer), k + 1, false); });
        }
    };

    // Y_0: every position of J[0] independently; one without answer sets
    // contributes nothing.
    std::vector<Position> z0;
    std::vector<std::vector<LiteralSet>> c0;
    for (const auto& z : init.at_step(0)) {
        auto sets = asp::n_answer_sets(red_app_program(p, {}, init, z), limits.max_universe);
        if (sets.empty()) sets.push_back({});
        z0.push_back(z);
        c0.push_back(std::move(sets));
    }
    combine(z0, c0, [&](const Interpretation& y0) { descend(descend, y0, 0, y0.empty()); });

    std::vector<Interpretation> out;
    for (auto& m : candidates)
        if (is_answer_set(p, init, m)) out.push_back(std::move(m));
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hasp
