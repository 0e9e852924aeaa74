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
#include "hasp/registry.hpp"

#include <algorithm>
#include <cctype>

namespace hasp {

namespace {

[[noreturn]] void bad_args(const std::string& name, const std::string& what) {
    throw RegistryError("bad arguments to '" + name + "': " + what);
}

void expect_count(const std::string& name, const std::vector<Arg>& args, std::size_t n) {
    if (args.size() != n) bad_args(name, "expected " + std::to_string(n) + ", got " + std::to_string(args.size()));
}

ParamValue to_param(const Arg& a, const std::string& name) {
    if (auto r = a.as_number()) return *r;
    if (auto s = a.as_ident()) return *s;
    bad_args(name, "set where a value was expected");
}

std::int64_t integer_arg(const Arg& a, const std::string& name) {
    auto r = a.as_number();
    if (!r || !r->is_integer()) bad_args(name, "expected an integer");
    return r->num();
}

Position successor(const Tuple& tuple) {
    Position q = tuple.back();
    ++q.step;
    return q;
}

Registry::Boolean param_compare(std::string name, bool (*cmp)(std::strong_ordering)) {
    return {
        [name](const std::vector<Arg>& args) {
            expect_count(name, args, 2);
            if (!args[0].as_ident()) bad_args(name, "first argument must be a parameter name");
            to_param(args[1], name);
        },
        [name, cmp](const std::vector<Arg>& args, const Tuple& t) {
            const ParamValue* v = t.back().param(*args[0].as_ident());
            if (!v) return false;
            ParamValue c = to_param(args[1], name);
            if (v->index() != c.index()) return false;
            return cmp(*v <=> c);
        }};
}

Registry::Constraint fixed_arity(std::size_t n, Registry::ContainsFn contains) {
    return {[n](const std::vector<Arg>& args) {
                if (!args.empty()) throw RegistryError("constraint family takes no arguments");
                if (n == 0) throw RegistryError("constraint arity must be at least 1");
            },
            [n](const std::vector<Arg>&) { return n; }, std::move(contains)};
}

}  // namespace

Registry::Builder& Registry::Builder::add_advancing(std::string name, Advancing impl) {
    reg_->advancing_[std::move(name)] = std::move(impl);
    return *this;
}

Registry::Builder& Registry::Builder::add_boolean(std::string name, Boolean impl) {
    reg_->boolean_[std::move(name)] = std::move(impl);
    return *this;
}

Registry::Builder& Registry::Builder::add_constraint(std::string name, Constraint impl) {
    reg_->constraint_[std::move(name)] = std::move(impl);
    return *this;
}

Registry::Builder& Registry::Builder::add_constraint_family(std::string prefix, ConstraintFamily factory) {
    reg_->families_.emplace_back(std::move(prefix), std::move(factory));
    return *this;
}

std::shared_ptr<const Registry> Registry::Builder::freeze() {
    if (!reg_) throw std::logic_error("registry already frozen");
    std::shared_ptr<const Registry> out = std::move(reg_);
    return out;
}

Registry::Builder Registry::with_builtins(Options opts) {
    Builder b(opts);
    const std::int64_t max_den = opts.max_denominator;

    b.add_advancing("tick", {[](const std::vector<Arg>& a) { expect_count("tick", a, 0); },
                             [](const std::vector<Arg>&, const Tuple& t, const EvalContext&) {
                                 return PositionSet{successor(t)};
                             }});
    b.add_advancing("set_param", {[](const std::vector<Arg>& a) {
                                      expect_count("set_param", a, 2);
                                      if (!a[0].as_ident()) bad_args("set_param", "first argument must be a name");
                                      to_param(a[1], "set_param");
                                  },
                                  [](const std::vector<Arg>& a, const Tuple& t, const EvalContext&) {
                                      Position q = successor(t);
                                      q.params[*a[0].as_ident()] = to_param(a[1], "set_param");
                                      return PositionSet{q};
                                  }});
    b.add_advancing("euler", {[](const std::vector<Arg>& a) {
                                  expect_count("euler", a, 2);
                                  if (!a[0].as_number()) bad_args("euler", "rate must be a number");
                                  if (!a[1].as_ident()) bad_args("euler", "var must be a parameter name");
                              },
                              [max_den](const std::vector<Arg>& a, const Tuple& t, const EvalContext& ctx) {
                                  const std::string& var = *a[1].as_ident();
                                  const ParamValue* v = t.back().param(var);
                                  const Rational* x = v ? std::get_if<Rational>(v) : nullptr;
                                  if (!x) throw ContractError("euler: position lacks numeric parameter '" + var + "'");
                                  Position q = successor(t);
                                  q.params[var] = (*x + ctx.delta_t * *a[0].as_number() * *x).rounded(max_den);
                                  return PositionSet{q};
                              }});
    b.add_advancing("fanout", {[](const std::vector<Arg>& a) {
                                   expect_count("fanout", a, 2);
                                   if (!a[0].as_ident()) bad_args("fanout", "first argument must be a name");
                                   auto vals = a[1].as_set();
                                   if (!vals) bad_args("fanout", "second argument must be a set");
                                   for (const auto& v : *vals) to_param(v, "fanout");
                               },
                               [](const std::vector<Arg>& a, const Tuple& t, const EvalContext&) {
                                   PositionSet out;
                                   for (const auto& v : *a[1].as_set()) {
                                       Position q = successor(t);
                                       q.params[*a[0].as_ident()] = to_param(v, "fanout");
                                       out.insert(std::move(q));
                                   }
                                   return out;
                               }});

    auto no_args = [](std::string name) {
        return [name](const std::vector<Arg>& a) { expect_count(name, a, 0); };
    };
    b.add_boolean("true", {no_args("true"), [](const std::vector<Arg>&, const Tuple&) { return true; }});
    b.add_boolean("false", {no_args("false"), [](const std::vector<Arg>&, const Tuple&) { return false; }});
    b.add_boolean("param_ge", param_compare("param_ge", [](std::strong_ordering o) { return o >= 0; }));
    b.add_boolean("param_le", param_compare("param_le", [](std::strong_ordering o) { return o <= 0; }));
    b.add_boolean("param_eq", param_compare("param_eq", [](std::strong_ordering o) { return o == 0; }));
    b.add_boolean("step_eq", {[](const std::vector<Arg>& a) {
                                  expect_count("step_eq", a, 1);
                                  integer_arg(a[0], "step_eq");
                              },
                              [](const std::vector<Arg>& a, const Tuple& t) {
                                  return t.back().step == integer_arg(a[0], "step_eq");
                              }});

    b.add_constraint("time_eq", {[](const std::vector<Arg>& a) {
                                     expect_count("time_eq", a, 1);
                                     integer_arg(a[0], "time_eq");
                                 },
                                 [](const std::vector<Arg>&) { return std::size_t{1}; },
                                 [](const std::vector<Arg>& a, const Tuple& t) {
                                     return t[0].step == integer_arg(a[0], "time_eq");
                                 }});
    b.add_constraint("window", {[](const std::vector<Arg>& a) {
                                    if (a.empty()) bad_args("window", "expected at least one step");
                                    for (const auto& x : a) integer_arg(x, "window");
                                },
                                [](const std::vector<Arg>& a) { return a.size(); },
                                [](const std::vector<Arg>& a, const Tuple& t) {
                                    for (std::size_t i = 0; i < t.size(); ++i)
                                        if (t[i].step != integer_arg(a[i], "window")) return false;
                                    return true;
                                }});
    b.add_constraint_family("any", [](std::size_t n) {
        return fixed_arity(n, [](const std::vector<Arg>&, const Tuple&) { return true; });
    });
    b.add_constraint_family("consecutive", [](std::size_t n) {
        return fixed_arity(n, [](const std::vector<Arg>&, const Tuple& t) {
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i].step != t[i - 1].step + 1) return false;
            return true;
        });
    });
    return b;
}

std::shared_ptr<const Registry> Registry::builtin() {
    static const std::shared_ptr<const Registry> reg = with_builtins().freeze();
    return reg;
}

bool Registry::has_advancing(const std::string& name) const { return advancing_.contains(name); }
bool Registry::has_boolean(const std::string& name) const { return boolean_.contains(name); }

bool Registry::has_constraint(const std::string& name) const {
    try {
        constraint(name);
        return true;
    } catch (const RegistryError&) {
        return false;
    }
}

const Registry::Advancing& Registry::advancing(const std::string& name) const {
    auto it = advancing_.find(name);
    if (it == advancing_.end()) throw RegistryError("unknown advancing algorithm '" + name + "'");
    return it->second;
}

const Registry::Boolean& Registry::boolean(const std::string& name) const {
    auto it = boolean_.find(name);
    if (it == boolean_.end()) throw RegistryError("unknown boolean algorithm '" + name + "'");
    return it->second;
}

Registry::Constraint Registry::constraint(const std::string& name) const {
    if (auto it = constraint_.find(name); it != constraint_.end()) return it->second;
    for (const auto& [prefix, factory] : families_) {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) continue;
        std::string digits = name.substr(prefix.size());
        if (digits[0] == '0' || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            continue;
        return factory(std::stoul(digits));
    }
    throw RegistryError("unknown constraint set '" + name + "'");
}

void Registry::check(const AdvancingAlgorithmRef& ref) const { advancing(ref.name).validate(ref.args); }
void Registry::check(const BooleanAlgorithmRef& ref) const { boolean(ref.name).validate(ref.args); }

std::size_t Registry::cs_arity(const ConstraintSetRef& ref) const {
    auto c = constraint(ref.name);
    c.validate(ref.args);
    return c.arity(ref.args);
}

bool strictly_increasing(const Tuple& tuple) {
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i].step <= tuple[i - 1].step) return false;
    return true;
}

PositionSet Registry::eval_advancing(const AdvancingAlgorithmRef& ref, const Tuple& tuple, const EvalContext& ctx) const {
    const auto& impl = advancing(ref.name);
    impl.validate(ref.args);
    if (tuple.empty() || !strictly_increasing(tuple))
        throw ContractError("advancing algorithm '" + ref.name + "' applied to a tuple without increasing steps");
    PositionSet out = impl.eval(ref.args, tuple, ctx);
    const std::int64_t last = tuple.back().step;
    for (const auto& q : out) {
        bool ok = opts_.discrete_time ? q.step == last + 1 : q.step > last;
        if (!ok)
            throw ContractError("advancing algorithm '" + to_string(ref) + "' produced step " + std::to_string(q.step) +
                                " from last input step " + std::to_string(last));
    }
    return out;
}

bool Registry::eval_boolean(const BooleanAlgorithmRef& ref, const Tuple& tuple) const {
    const auto& impl = boolean(ref.name);
    impl.validate(ref.args);
    if (tuple.empty()) throw RegistryError("boolean algorithm '" + ref.name + "' applied to an empty tuple");
    return impl.eval(ref.args, tuple);
}

bool Registry::cs_contains(const ConstraintSetRef& ref, const Tuple& tuple) const {
    auto c = constraint(ref.name);
    c.validate(ref.args);
    if (tuple.size() != c.arity(ref.args) || !strictly_increasing(tuple)) return false;
    return c.contains(ref.args, tuple);
}

std::vector<Tuple> increasing_tuples(const PositionSet& domain, std::size_t n) {
    std::vector<Tuple> out;
    if (n == 0) return out;
    std::vector<Position> items(domain.begin(), domain.end());
    Tuple cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < items.size(); ++i) {
            if (!cur.empty() && items[i].step <= cur.back().step) continue;
            cur.push_back(items[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    // Domain is ordered by step first, so increasing tuples only move right.
    rec(rec, 0);
    return out;
}

std::vector<Tuple> Registry::cs_enumerate(const ConstraintSetRef& ref, const PositionSet& domain) const {
    auto c = constraint(ref.name);
    c.validate(ref.args);
    std::vector<Tuple> out;
    for (auto& t : increasing_tuples(domain, c.arity(ref.args)))
        if (c.contains(ref.args, t)) out.push_back(std::move(t));
    return out;
}

std::size_t constraint_arity(const Program& p, const Rule& r) {
    if (auto ref = std::get_if<ConstraintSetRef>(&r.cs)) return p.registry->cs_arity(*ref);
    return r.arity();
}

std::vector<Tuple> rule_tuples(const Program& p, const Rule& r, const PositionSet& domain) {
    if (auto ref = std::get_if<ConstraintSetRef>(&r.cs)) return p.registry->cs_enumerate(*ref, domain);
    std::vector<Tuple> out;
    for (const auto& t : std::get<TupleSet>(r.cs))
        if (std::all_of(t.begin(), t.end(), [&](const Position& q) { return domain.contains(q); })) out.push_back(t);
    return out;
}

bool rule_contains(const Program& p, const Rule& r, const Tuple& tuple) {
    if (auto ref = std::get_if<ConstraintSetRef>(&r.cs)) return p.registry->cs_contains(*ref, tuple);
    return std::get<TupleSet>(r.cs).contains(tuple);
}

PositionSet rule_advance(const Program& p, const Rule& r, const Tuple& tuple) {
    if (auto ref = std::get_if<AdvancingAlgorithmRef>(&r.adv)) return p.registry->eval_advancing(*ref, tuple, {p.delta_t});
    const auto& m = std::get<AdvancingMap>(r.adv);
    auto it = m.find(tuple);
    return it == m.end() ? PositionSet{} : it->second;
}

bool rule_boolean(const Program& p, const Rule& r, const Tuple& tuple) {
    return p.registry->eval_boolean(r.boolean, tuple);
}

void validate_program(const Program& p) {
    if (!p.registry) throw RegistryError("program has no registry attached");
    if (p.delta_t <= Rational(0)) throw RegistryError("delta_t must be positive");
    for (const auto& r : p.rules) {
        if (r.blocks.empty()) throw RegistryError("rule for '" + to_string(r.head) + "' has no blocks");
        if (auto ref = std::get_if<ConstraintSetRef>(&r.cs)) {
            std::size_t n = p.registry->cs_arity(*ref);
            if (n != r.arity())
                throw RegistryError("rule for '" + to_string(r.head) + "' has " + std::to_string(r.arity()) +
                                    " blocks but constraint set '" + to_string(*ref) + "' has arity " +
                                    std::to_string(n));
        }
        if (r.is_advancing()) {
            if (auto ref = std::get_if<AdvancingAlgorithmRef>(&r.adv)) p.registry->check(*ref);
        } else {
            p.registry->check(r.boolean);
        }
    }
}

Program ground_over(const Program& p, const PositionSet& domain) {
    Program out{{}, p.delta_t, p.registry};
    out.rules.reserve(p.rules.size());
    for (const auto& r : p.rules) {
        Rule g = r;
        auto tuples = rule_tuples(p, r, domain);
        if (r.is_advancing()) {
            AdvancingMap m;
            for (const auto& t : tuples) m.emplace(t, rule_advance(p, r, t));
            g.adv = std::move(m);
        }
        g.cs = TupleSet(tuples.begin(), tuples.end());
        out.rules.push_back(std::move(g));
    }
    return out;
}

}  // namespace hasp
