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

// Outside sources of a program: advancing algorithms, boolean algorithms and
// constraint sets, addressed by name from rules and evaluated here.
//
// Built-in library (names and argument order are part of the file format):
//   advancing   tick | set_param(name, value) | euler(rate, var) | fanout(name, {v, ...})
//   boolean     true | false | param_ge(name, c) | param_le(name, c) | param_eq(name, c) | step_eq(k)
//   constraint  anyN | time_eq(k) | consecutiveN | window(k1, ..., kn)
//
// Advancing and boolean algorithms look at the last position of the tuple.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hasp/core.hpp"

namespace hasp {

/// Unknown name or malformed arguments.
class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algorithm broke its contract, e.g. produced a position whose step is
/// not one past the last input step.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvalContext {
    Rational delta_t{1};
};

class Registry {
public:
    struct Options {
        /// Denominator bound for numeric results of `euler`.
        std::int64_t max_denominator = 1'000'000;
        /// Enforce step(q) = step(p_n) + 1 on every advancing output.
        bool discrete_time = true;
    };

    using Validator = std::function<void(const std::vector<Arg>&)>;
    using AdvancingFn = std::function<PositionSet(const std::vector<Arg>&, const Tuple&, const EvalContext&)>;
    using BooleanFn = std::function<bool(const std::vector<Arg>&, const Tuple&)>;
    using ArityFn = std::function<std::size_t(const std::vector<Arg>&)>;
    using ContainsFn = std::function<bool(const std::vector<Arg>&, const Tuple&)>;

    struct Advancing {
        Validator validate;
        AdvancingFn eval;
    };
    struct Boolean {
        Validator validate;
        BooleanFn eval;
    };
    struct Constraint {
        Validator validate;
        ArityFn arity;
        ContainsFn contains;
    };
    /// Factory for numbered families such as any1, any2, ...
    using ConstraintFamily = std::function<Constraint(std::size_t n)>;

    class Builder {
    public:
        Builder() : Builder(Options{}) {}
        explicit Builder(Options opts) : reg_(new Registry(opts)) {}
        Builder& add_advancing(std::string name, Advancing impl);
        Builder& add_boolean(std::string name, Boolean impl);
        Builder& add_constraint(std::string name, Constraint impl);
        Builder& add_constraint_family(std::string prefix, ConstraintFamily factory);
        /// Registry is read-only from here on.
        std::shared_ptr<const Registry> freeze();

    private:
        std::shared_ptr<Registry> reg_;
    };

    /// Builder preloaded with the built-in library.
    static Builder with_builtins(Options opts);
    static Builder with_builtins() { return with_builtins(Options{}); }
    /// Shared frozen built-in registry with default options.
    static std::shared_ptr<const Registry> builtin();

    const Options& options() const { return opts_; }

    bool has_advancing(const std::string& name) const;
    bool has_boolean(const std::string& name) const;
    bool has_constraint(const std::string& name) const;

    void check(const AdvancingAlgorithmRef& ref) const;
    void check(const BooleanAlgorithmRef& ref) const;
    std::size_t cs_arity(const ConstraintSetRef& ref) const;

    PositionSet eval_advancing(const AdvancingAlgorithmRef& ref, const Tuple& tuple, const EvalContext& ctx) const;
    bool eval_boolean(const BooleanAlgorithmRef& ref, const Tuple& tuple) const;
    /// False whenever the length differs from the arity or steps are not
    /// strictly increasing.
    bool cs_contains(const ConstraintSetRef& ref, const Tuple& tuple) const;
    /// Every tuple over `domain` the constraint set contains, in tuple order.
    std::vector<Tuple> cs_enumerate(const ConstraintSetRef& ref, const PositionSet& domain) const;

private:
    explicit Registry(Options opts) : opts_(opts) {}
    const Advancing& advancing(const std::string& name) const;
    const Boolean& boolean(const std::string& name) const;
    Constraint constraint(const std::string& name) const;

    Options opts_;
    std::unordered_map<std::string, Advancing> advancing_;
    std::unordered_map<std::string, Boolean> boolean_;
    std::unordered_map<std::string, Constraint> constraint_;
    std::vector<std::pair<std::string, ConstraintFamily>> families_;
};

bool strictly_increasing(const Tuple& tuple);

/// Every n-tuple over `domain` with strictly increasing steps, in tuple order.
std::vector<Tuple> increasing_tuples(const PositionSet& domain, std::size_t n);

// Rule-level evaluation. Explicit tuple sets and advancing maps are used as
// they are; references go through the program's registry.

std::size_t constraint_arity(const Program& p, const Rule& r);
/// CS(r) restricted to domain^n.
std::vector<Tuple> rule_tuples(const Program& p, const Rule& r, const PositionSet& domain);
bool rule_contains(const Program& p, const Rule& r, const Tuple& tuple);
/// Adv(r)(tuple) for advancing rules.
PositionSet rule_advance(const Program& p, const Rule& r, const Tuple& tuple);
/// Bool(r)(tuple) for stationary rules.
bool rule_boolean(const Program& p, const Rule& r, const Tuple& tuple);

/// Resolves every reference and checks that block counts match constraint
/// arities. Throws RegistryError.
void validate_program(const Program& p);

/// Replaces every registry constraint set by its tuples over `domain` and
/// every advancing reference by its materialized map on those tuples.
/// Equivalent to `p` for any interpretation whose positions lie in `domain`.
Program ground_over(const Program& p, const PositionSet& domain);

}  // namespace hasp
