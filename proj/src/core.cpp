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
#include "hasp/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hasp {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = narrow(-static_cast<i128>(num));
        den = narrow(-static_cast<i128>(den));
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::operator+(const Rational& o) const {
    return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 l = static_cast<i128>(num_) * o.den_;
    i128 r = static_cast<i128>(o.num_) * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::rounded(std::int64_t max_den) const {
    if (max_den <= 0) throw std::invalid_argument("rounding denominator must be positive");
    if (den_ <= max_den) return *this;
    i128 scaled = static_cast<i128>(num_) * max_den;
    i128 q = scaled / den_;
    i128 rem = scaled % den_;
    if (rem < 0) rem = -rem;
    if (2 * rem >= den_) q += (scaled < 0 ? -1 : 1);
    return make(q, max_den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view a = text.substr(0, slash);
    std::string_view b = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    auto to_int = [](std::string_view s, bool allow_sign) -> std::optional<std::int64_t> {
        if (s.empty()) return std::nullopt;
        if (!allow_sign && (s[0] == '-' || s[0] == '+')) return std::nullopt;
        std::int64_t v = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
        return v;
    };
    auto num = to_int(a, true);
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(*num);
    auto den = to_int(b, false);
    if (!den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

std::string to_string(const ParamValue& v) {
    if (auto r = std::get_if<Rational>(&v)) return r->to_string();
    return std::get<std::string>(v);
}

const ParamValue* Position::param(const std::string& name) const {
    auto it = params.find(name);
    return it == params.end() ? nullptr : &it->second;
}

std::string to_string(const Position& p) {
    std::string out = "step=" + std::to_string(p.step);
    for (const auto& [name, value] : p.params) {
        out += ' ';
        out += name;
        out += '=';
        out += to_string(value);
    }
    return out;
}

bool is_valid_atom_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!is_valid_atom_name(name_)) throw std::invalid_argument("invalid atom name '" + name_ + "'");
}

std::string to_string(const Literal& l) { return (l.negated ? "-" : "") + l.atom.name(); }

LiteralSet Block::literals() const {
    LiteralSet out(positive.begin(), positive.end());
    out.insert(negative.begin(), negative.end());
    return out;
}

Block block_difference(const Block& b, const LiteralSet& drop) {
    Block out;
    for (const auto& l : b.positive)
        if (!drop.contains(l)) out.positive.push_back(l);
    for (const auto& l : b.negative)
        if (!drop.contains(l)) out.negative.push_back(l);
    return out;
}

std::string to_string(const Block& b) {
    std::string out;
    for (const auto& l : b.positive) {
        if (!out.empty()) out += ", ";
        out += to_string(l);
    }
    for (const auto& l : b.negative) {
        if (!out.empty()) out += ", ";
        out += "not " + to_string(l);
    }
    return out;
}

std::strong_ordering Fact::operator<=>(const Fact& o) const {
    if (auto c = position <=> o.position; c != 0) return c;
    return literal <=> o.literal;
}

std::string to_string(const Fact& f) { return to_string(f.literal) + " @ " + to_string(f.position); }

bool consistent(const Interpretation& m) {
    for (const auto& f : m)
        if (!f.literal.negated && m.contains(Fact{f.literal.complement(), f.position})) return false;
    return true;
}

Interpretation restrict_to(const Interpretation& m, const Position& p) {
    Interpretation out;
    for (const auto& f : m)
        if (f.position == p) out.insert(f);
    return out;
}

LiteralSet literals_of(const Interpretation& m) {
    LiteralSet out;
    for (const auto& f : m) out.insert(f.literal);
    return out;
}

Interpretation slice(const Interpretation& m, std::int64_t k) {
    Interpretation out;
    for (const auto& f : m)
        if (f.position.step == k) out.insert(f);
    return out;
}

Interpretation prefix(const Interpretation& m, std::int64_t k) {
    Interpretation out;
    for (const auto& f : m)
        if (f.position.step <= k) out.insert(f);
    return out;
}

Interpretation unite(const Interpretation& a, const Interpretation& b) {
    Interpretation out = a;
    out.insert(b.begin(), b.end());
    return out;
}

Interpretation intersect(const Interpretation& a, const Interpretation& b) {
    Interpretation out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Interpretation subtract(const Interpretation& a, const Interpretation& b) {
    Interpretation out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const Interpretation& a, const Interpretation& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Interpretation cross(const LiteralSet& lits, const Position& p) {
    Interpretation out;
    for (const auto& l : lits) out.insert(Fact{l, p});
    return out;
}

std::string to_string(const Arg& a) {
    if (auto r = a.as_number()) return r->to_string();
    if (auto s = a.as_ident()) return *s;
    std::string out = "{";
    const auto& items = *a.as_set();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += to_string(items[i]);
    }
    return out + "}";
}

Rule Rule::advancing(Literal head, std::vector<Block> blocks, ConstraintSpec cs, AdvancingSpec adv) {
    return Rule{RuleKind::advancing, std::move(head), std::move(blocks), std::move(cs), std::move(adv), {}};
}

Rule Rule::stationary(Literal head, std::vector<Block> blocks, ConstraintSpec cs, BooleanAlgorithmRef boolean) {
    return Rule{RuleKind::stationary, std::move(head), std::move(blocks), std::move(cs), AdvancingAlgorithmRef{},
                std::move(boolean)};
}

std::vector<std::vector<Literal>> body_positive(const Rule& r) {
    std::vector<std::vector<Literal>> out;
    for (const auto& b : r.blocks) out.push_back(b.positive);
    return out;
}

std::vector<std::vector<Literal>> body_negative(const Rule& r) {
    std::vector<std::vector<Literal>> out;
    for (const auto& b : r.blocks) out.push_back(b.negative);
    return out;
}

LiteralSet Program::literals() const {
    LiteralSet out;
    for (const auto& r : rules) {
        out.insert(r.head);
        for (const auto& b : r.blocks) {
            auto ls = b.literals();
            out.insert(ls.begin(), ls.end());
        }
    }
    return out;
}

LiteralSet Program::literal_universe() const {
    LiteralSet out;
    for (const auto& l : literals()) {
        out.insert(Literal{l.atom, false});
        out.insert(Literal{l.atom, true});
    }
    return out;
}

PositionSet InitialCondition::at_step(std::int64_t k) const {
    PositionSet out;
    for (const auto& p : positions)
        if (p.step == k) out.insert(p);
    return out;
}

}  // namespace hasp
