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

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hasp {

class Registry;

/// A desk-scale size limit (universe, candidate facts, branches) was hit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number in lowest terms with a positive denominator.
/// Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error when a result does not fit back into 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Nearest rational with denominator `max_den` (ties away from zero),
    /// or the value itself when its denominator already fits.
    Rational rounded(std::int64_t max_den) const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    /// Accepts "p" or "p/q" with an optional leading '-'.
    static std::optional<Rational> parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Value of a named parameter in a generalized position.
using ParamValue = std::variant<Rational, std::string>;

std::string to_string(const ParamValue& v);

/// A point of the parameter space: a time step k (time k*dt) and named
/// parameter values. Plain value type; equality and order are exact.
struct Position {
    std::int64_t step = 0;
    std::map<std::string, ParamValue> params;

    bool operator==(const Position&) const = default;
    auto operator<=>(const Position&) const = default;

    const ParamValue* param(const std::string& name) const;
};

/// "step=<k> name=value ..." with params in name order.
std::string to_string(const Position& p);

using PositionSet = std::set<Position>;
using Tuple = std::vector<Position>;
using TupleSet = std::set<Tuple>;

bool is_valid_atom_name(std::string_view name);

/// Propositional symbol. Names match [a-z][A-Za-z0-9_]*.
class Atom {
public:
    explicit Atom(std::string name);
    const std::string& name() const { return name_; }
    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;

private:
    std::string name_;
};

/// Atom or classically negated atom. Orders by atom name, positive first.
struct Literal {
    Atom atom;
    bool negated = false;

    Literal complement() const { return {atom, !negated}; }
    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;

    static Literal pos(std::string name) { return {Atom(std::move(name)), false}; }
    static Literal neg(std::string name) { return {Atom(std::move(name)), true}; }
};

using LiteralSet = std::set<Literal>;

std::string to_string(const Literal& l);

/// Body unit `b1, ..., bk, not bk+1, ..., not bk+m`. Insertion order is kept
/// for printing; every semantic operation treats both parts as sets.
struct Block {
    std::vector<Literal> positive;
    std::vector<Literal> negative;

    bool empty() const { return positive.empty() && negative.empty(); }
    LiteralSet literals() const;
    bool operator==(const Block&) const = default;
};

/// Removes the members of `drop` from both parts, keeping survivor order.
Block block_difference(const Block& b, const LiteralSet& drop);

std::string to_string(const Block& b);

struct Fact {
    Literal literal;
    Position position;

    bool operator==(const Fact&) const = default;
    /// Canonical order: position first, then literal.
    std::strong_ordering operator<=>(const Fact& o) const;
};

std::string to_string(const Fact& f);

using Interpretation = std::set<Fact>;

bool consistent(const Interpretation& m);
/// M|_p
Interpretation restrict_to(const Interpretation& m, const Position& p);
/// At(M)
LiteralSet literals_of(const Interpretation& m);
/// Facts whose step equals k (the layer N[k]).
Interpretation slice(const Interpretation& m, std::int64_t k);
/// Facts whose step is at most k.
Interpretation prefix(const Interpretation& m, std::int64_t k);
Interpretation unite(const Interpretation& a, const Interpretation& b);
Interpretation intersect(const Interpretation& a, const Interpretation& b);
Interpretation subtract(const Interpretation& a, const Interpretation& b);
bool is_subset(const Interpretation& a, const Interpretation& b);
/// L x p
Interpretation cross(const LiteralSet& lits, const Position& p);

/// Argument of an algorithm reference: number, identifier or set.
struct Arg {
    std::variant<Rational, std::string, std::vector<Arg>> value;

    bool operator==(const Arg&) const = default;

    const Rational* as_number() const { return std::get_if<Rational>(&value); }
    const std::string* as_ident() const { return std::get_if<std::string>(&value); }
    const std::vector<Arg>* as_set() const { return std::get_if<std::vector<Arg>>(&value); }
};

std::string to_string(const Arg& a);

/// Named, parameterized reference into a Registry. The tag keeps the three
/// kinds of outside source apart at the type level.
template <class Tag>
struct AlgorithmRef {
    std::string name;
    std::vector<Arg> args;
    bool operator==(const AlgorithmRef&) const = default;
};

struct AdvancingTag {};
struct BooleanTag {};
struct ConstraintTag {};

using AdvancingAlgorithmRef = AlgorithmRef<AdvancingTag>;
using BooleanAlgorithmRef = AlgorithmRef<BooleanTag>;
using ConstraintSetRef = AlgorithmRef<ConstraintTag>;

template <class Tag>
std::string to_string(const AlgorithmRef<Tag>& r) {
    std::string out = r.name;
    if (!r.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < r.args.size(); ++i) {
            if (i) out += ", ";
            out += to_string(r.args[i]);
        }
        out += ')';
    }
    return out;
}

/// Advancing algorithm materialized over a finite tuple set.
using AdvancingMap = std::map<Tuple, PositionSet>;

/// A constraint set is either a registry reference or an explicit tuple set
/// (the latter appears in programs derived by splitting and grounding).
using ConstraintSpec = std::variant<ConstraintSetRef, TupleSet>;
using AdvancingSpec = std::variant<AdvancingAlgorithmRef, AdvancingMap>;

enum class RuleKind { advancing, stationary };

/// `head :- B1; ...; Bn : O, A` (advancing) or `: O, H` (stationary).
struct Rule {
    RuleKind kind = RuleKind::stationary;
    Literal head;
    std::vector<Block> blocks;
    ConstraintSpec cs;
    AdvancingSpec adv;            // advancing rules only
    BooleanAlgorithmRef boolean;  // stationary rules only

    std::size_t arity() const { return blocks.size(); }
    bool is_advancing() const { return kind == RuleKind::advancing; }
    bool is_stationary() const { return kind == RuleKind::stationary; }
    bool operator==(const Rule&) const = default;

    static Rule advancing(Literal head, std::vector<Block> blocks, ConstraintSpec cs, AdvancingSpec adv);
    static Rule stationary(Literal head, std::vector<Block> blocks, ConstraintSpec cs, BooleanAlgorithmRef boolean);
};

/// body(r)+ as per-block positive parts.
std::vector<std::vector<Literal>> body_positive(const Rule& r);
/// body(r)- as per-block negative parts.
std::vector<std::vector<Literal>> body_negative(const Rule& r);

struct Program {
    std::vector<Rule> rules;
    Rational delta_t{1};
    std::shared_ptr<const Registry> registry;

    /// Literals occurring anywhere in the program (heads and bodies).
    LiteralSet literals() const;
    /// Lit_At(P): both polarities of every atom occurring in the program.
    LiteralSet literal_universe() const;

    bool operator==(const Program& o) const { return rules == o.rules && delta_t == o.delta_t; }
};

struct InitialCondition {
    PositionSet positions;

    /// J[k]
    PositionSet at_step(std::int64_t k) const;
    bool operator==(const InitialCondition&) const = default;
};

}  // namespace hasp
