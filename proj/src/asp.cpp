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
#include "hasp/asp.hpp"

#include <algorithm>

namespace hasp::asp {

NormalProgram::NormalProgram(std::vector<NormalRule> rs, LiteralSet declared) : universe(std::move(declared)) {
    for (auto& r : rs) add(std::move(r));
}

void NormalProgram::add(NormalRule r) {
    universe.insert(r.head);
    auto ls = r.body.literals();
    universe.insert(ls.begin(), ls.end());
    rules.push_back(std::move(r));
}

bool NormalProgram::is_horn() const {
    return std::all_of(rules.begin(), rules.end(), [](const NormalRule& r) { return r.body.negative.empty(); });
}

std::string to_string(const NormalRule& r) {
    std::string body = to_string(r.body);
    return to_string(r.head) + " :-" + (body.empty() ? "" : " " + body) + ".";
}

bool n_satisfies(const LiteralSet& m, const Block& b) {
    for (const auto& l : b.positive)
        if (!m.contains(l)) return false;
    for (const auto& l : b.negative)
        if (m.contains(l)) return false;
    return true;
}

NormalProgram n_gl_reduct(const NormalProgram& p, const LiteralSet& m) {
    NormalProgram out;
    out.universe = p.universe;
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.body.negative.begin(), r.body.negative.end(),
                                   [&](const Literal& l) { return m.contains(l); });
        if (!blocked) out.rules.push_back(NormalRule{r.head, Block{r.body.positive, {}}});
    }
    return out;
}

LiteralSet n_least_model(const NormalProgram& p) {
    if (!p.is_horn()) throw std::invalid_argument("least model requested for a program with default negation");
    LiteralSet m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules)
            if (!m.contains(r.head) && n_satisfies(m, r.body)) {
                m.insert(r.head);
                changed = true;
            }
    }
    return m;
}

namespace {

bool literal_set_consistent(const LiteralSet& m) {
    for (const auto& l : m)
        if (!l.negated && m.contains(l.complement())) return false;
    return true;
}

}  // namespace

bool n_is_answer_set(const NormalProgram& p, const LiteralSet& m) {
    return literal_set_consistent(m) && n_least_model(n_gl_reduct(p, m)) == m;
}

bool canonical_less(const LiteralSet& a, const LiteralSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<LiteralSet> n_answer_sets(const NormalProgram& p, std::size_t max_universe) {
    // Only heads can be derived, so candidates range over head literals;
    // the guard still applies to the declared universe.
    if (p.universe.size() > max_universe)
        throw GuardError("universe of " + std::to_string(p.universe.size()) + " literals exceeds limit " +
                         std::to_string(max_universe));
    LiteralSet heads;
    for (const auto& r : p.rules) heads.insert(r.head);
    std::vector<Literal> cand(heads.begin(), heads.end());
    std::vector<LiteralSet> out;
    const std::uint64_t total = std::uint64_t{1} << cand.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        LiteralSet m;
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (mask >> i & 1U) m.insert(cand[i]);
        if (n_is_answer_set(p, m)) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace hasp::asp
