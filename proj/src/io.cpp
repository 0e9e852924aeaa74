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
#include "hasp/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "hasp/registry.hpp"

namespace hasp {

std::string to_string(const ParseError& e) {
    std::string out = e.span.file + ":" + std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": " +
                      e.message;
    if (!e.expected.empty()) out += " (expected " + e.expected + ")";
    return out;
}

namespace {

bool is_reserved(std::string_view s) { return s == "cs" || s == "adv" || s == "bool" || s == "not"; }

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
    return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

// ---------------------------------------------------------------- lexer

enum class Tok { ident, number, header, arrow, colon, semi, comma, dot, lparen, rparen, lbrace, rbrace, minus, bad, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::end: return "end of input";
        case Tok::bad: return "invalid character '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view text, const std::string& file) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        SourceSpan span{file, line, col, 1};
        auto push = [&](Tok k, std::size_t n) {
            span.length = n;
            out.push_back({k, std::string(text.substr(i, n)), span});
            advance(n);
        };
        if (is_ident_start(c)) {
            std::size_t n = 1;
            while (i + n < text.size() && is_ident_char(text[i + n])) ++n;
            push(Tok::ident, n);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 1;
            while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
            if (i + n + 1 < text.size() && text[i + n] == '/' && std::isdigit(static_cast<unsigned char>(text[i + n + 1]))) {
                ++n;
                while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
            }
            push(Tok::number, n);
        } else if (text.substr(i, 8) == "#delta_t") {
            push(Tok::header, 8);
        } else if (text.substr(i, 2) == ":-") {
            push(Tok::arrow, 2);
        } else {
            switch (c) {
                case ':': push(Tok::colon, 1); break;
                case ';': push(Tok::semi, 1); break;
                case ',': push(Tok::comma, 1); break;
                case '.': push(Tok::dot, 1); break;
                case '(': push(Tok::lparen, 1); break;
                case ')': push(Tok::rparen, 1); break;
                case '{': push(Tok::lbrace, 1); break;
                case '}': push(Tok::rbrace, 1); break;
                case '-': push(Tok::minus, 1); break;
                default: {
                    // One token per UTF-8 sequence keeps columns meaningful.
                    std::size_t n = 1;
                    while (i + n < text.size() && (static_cast<unsigned char>(text[i + n]) & 0xC0) == 0x80) ++n;
                    push(Tok::bad, n);
                }
            }
        }
    }
    out.push_back({Tok::end, "", SourceSpan{file, line, col, 1}});
    return out;
}

// ---------------------------------------------------------------- parser

struct Failure {
    ParseError error;
};

class ProgramParser {
public:
    ProgramParser(std::vector<Token> toks, std::shared_ptr<const Registry> reg)
        : toks_(std::move(toks)), reg_(std::move(reg)) {}

    Parsed<Program> run() {
        Program p{{}, Rational(1), reg_};
        bool header_seen = false;
        while (peek().kind != Tok::end) {
            const std::size_t start = pos_;
            try {
                if (peek().kind == Tok::header) {
                    const Token& h = next();
                    if (header_seen) fail(h, "duplicate #delta_t header");
                    if (!p.rules.empty()) fail(h, "#delta_t header must precede every rule");
                    header_seen = true;
                    p.delta_t = number(false);
                    if (p.delta_t <= Rational(0)) fail(toks_[pos_ - 1], "delta_t must be positive");
                    expect(Tok::dot, "'.'");
                    continue;
                }
                Rule r = rule();
                Program one{{r}, p.delta_t, reg_};
                try {
                    validate_program(one);
                } catch (const RegistryError& e) {
                    errors_.push_back({toks_[start].span, e.what(), ""});
                    continue;
                }
                p.rules.push_back(std::move(r));
            } catch (const Failure& f) {
                errors_.push_back(f.error);
                recover();
            }
        }
        Parsed<Program> out;
        out.errors = std::move(errors_);
        if (out.errors.empty()) out.value = std::move(p);
        return out;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    [[noreturn]] void fail(const Token& at, std::string message, std::string expected = "") {
        throw Failure{{at.span, std::move(message), std::move(expected)}};
    }
    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail(peek(), "unexpected " + describe(peek()), what);
        return next();
    }
    bool at_keyword(std::string_view kw) const { return peek().kind == Tok::ident && peek().text == kw; }
    void expect_keyword(std::string_view kw) {
        if (!at_keyword(kw)) fail(peek(), "unexpected " + describe(peek()), "'" + std::string(kw) + "'");
        next();
    }

    // Skip past the '.' that ends the broken statement.
    void recover() {
        while (peek().kind != Tok::end && peek().kind != Tok::dot) next();
        accept(Tok::dot);
    }

    Rational number(bool allow_sign) {
        bool negative = false;
        if (allow_sign && peek().kind == Tok::minus && peek(1).kind == Tok::number) {
            next();
            negative = true;
        }
        const Token& t = expect(Tok::number, "a number");
        auto r = Rational::parse(t.text);
        if (!r) fail(t, "malformed number '" + t.text + "'");
        try {
            return negative ? -*r : *r;
        } catch (const std::exception& e) {
            fail(t, e.what());
        }
    }

    Literal literal() {
        bool negated = accept(Tok::minus);
        if (peek().kind != Tok::ident) fail(peek(), "unexpected " + describe(peek()), "an atom");
        const Token& t = next();
        if (is_reserved(t.text)) fail(t, "'" + t.text + "' is a reserved word and cannot name an atom");
        if (!is_valid_atom_name(t.text)) fail(t, "invalid atom name '" + t.text + "'", "a lowercase identifier");
        return Literal{Atom(t.text), negated};
    }

    bool at_block_end() const {
        Tok k = peek().kind;
        return k == Tok::semi || k == Tok::colon || k == Tok::dot || k == Tok::end;
    }

    Block block() {
        Block b;
        if (at_block_end()) return b;
        do {
            if (at_keyword("not")) {
                next();
                b.negative.push_back(literal());
            } else {
                b.positive.push_back(literal());
            }
        } while (accept(Tok::comma));
        return b;
    }

    Arg arg() {
        if (accept(Tok::lbrace)) {
            std::vector<Arg> items;
            items.push_back(arg());
            while (accept(Tok::comma)) items.push_back(arg());
            expect(Tok::rbrace, "'}'");
            return Arg{std::move(items)};
        }
        if (peek().kind == Tok::ident) return Arg{next().text};
        if (peek().kind == Tok::number || peek().kind == Tok::minus) return Arg{number(true)};
        fail(peek(), "unexpected " + describe(peek()), "a number, identifier or '{'");
    }

    template <class Tag>
    AlgorithmRef<Tag> call() {
        if (peek().kind != Tok::ident) fail(peek(), "unexpected " + describe(peek()), "an algorithm name");
        AlgorithmRef<Tag> ref{next().text, {}};
        if (accept(Tok::lparen)) {
            ref.args.push_back(arg());
            while (accept(Tok::comma)) ref.args.push_back(arg());
            expect(Tok::rparen, "')'");
        }
        return ref;
    }

    Rule rule() {
        Literal head = literal();
        expect(Tok::arrow, "':-'");
        std::vector<Block> blocks;
        blocks.push_back(block());
        while (accept(Tok::semi)) blocks.push_back(block());
        expect(Tok::colon, "':' before the annotations");
        expect_keyword("cs");
        auto cs = call<ConstraintTag>();
        expect(Tok::comma, "','");
        if (at_keyword("adv")) {
            next();
            auto adv = call<AdvancingTag>();
            expect(Tok::dot, "'.'");
            return Rule::advancing(std::move(head), std::move(blocks), std::move(cs), std::move(adv));
        }
        if (at_keyword("bool")) {
            next();
            auto boolean = call<BooleanTag>();
            expect(Tok::dot, "'.'");
            return Rule::stationary(std::move(head), std::move(blocks), std::move(cs), std::move(boolean));
        }
        fail(peek(), "unexpected " + describe(peek()), "'adv' or 'bool'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::shared_ptr<const Registry> reg_;
    std::vector<ParseError> errors_;
};

// ------------------------------------------------- line-oriented formats

struct Word {
    std::string_view text;
    std::size_t column;
};

std::vector<Word> split_words(std::string_view line) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

// Calls fn(line_number, words) for every non-blank, non-comment line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
        auto words = split_words(line);
        if (!words.empty()) fn(line_no, words);
    }
}

class LineError : public std::runtime_error {
public:
    LineError(const Word& w, const std::string& msg, std::string expected = "")
        : std::runtime_error(msg), word(w), expected(std::move(expected)) {}
    Word word;
    std::string expected;
};

std::pair<std::string_view, std::string_view> key_value(const Word& w) {
    auto eq = w.text.find('=');
    if (eq == std::string_view::npos) throw LineError(w, "malformed '" + std::string(w.text) + "'", "name=value");
    return {w.text.substr(0, eq), w.text.substr(eq + 1)};
}

// "step=<k> name=value ..." starting at words[from].
Position parse_position(const std::vector<Word>& words, std::size_t from) {
    if (from >= words.size()) throw LineError(words.back(), "missing step", "step=<INT>");
    auto [key, value] = key_value(words[from]);
    if (key != "step") throw LineError(words[from], "position must start with step", "step=<INT>");
    auto k = Rational::parse(value);
    if (!k || !k->is_integer()) throw LineError(words[from], "malformed step '" + std::string(value) + "'", "an integer");
    if (k->num() < 0) throw LineError(words[from], "negative step " + std::string(value));
    Position p;
    p.step = k->num();
    for (std::size_t i = from + 1; i < words.size(); ++i) {
        auto [name, v] = key_value(words[i]);
        if (!is_identifier(name) || name == "step")
            throw LineError(words[i], "invalid parameter name '" + std::string(name) + "'");
        ParamValue pv;
        if (auto r = Rational::parse(v))
            pv = *r;
        else if (is_identifier(v))
            pv = std::string(v);
        else
            throw LineError(words[i], "malformed value '" + std::string(v) + "'", "an integer, p/q or identifier");
        if (!p.params.emplace(std::string(name), std::move(pv)).second)
            throw LineError(words[i], "parameter '" + std::string(name) + "' given twice");
    }
    return p;
}

template <class T, class Fn>
Parsed<T> parse_lines(std::string_view text, std::string_view file, T acc, Fn&& per_line) {
    Parsed<T> out;
    for_each_line(text, [&](std::size_t line_no, const std::vector<Word>& words) {
        try {
            per_line(acc, words);
        } catch (const LineError& e) {
            out.errors.push_back({SourceSpan{std::string(file), line_no, e.word.column, std::max<std::size_t>(1, e.word.text.size())},
                                  e.what(), e.expected});
        }
    });
    if (out.errors.empty()) out.value = std::move(acc);
    return out;
}

std::string call_text(const ConstraintSpec& cs) {
    if (auto ref = std::get_if<ConstraintSetRef>(&cs)) return to_string(*ref);
    throw std::invalid_argument("explicit constraint tuple sets have no concrete syntax");
}

}  // namespace

Parsed<Program> parse_program(std::string_view text, std::string_view file, std::shared_ptr<const Registry> registry) {
    if (!registry) registry = Registry::builtin();
    return ProgramParser(lex(text, std::string(file)), std::move(registry)).run();
}

std::string serialize_program(const Program& p) {
    std::string out = "#delta_t " + p.delta_t.to_string() + ".\n";
    for (const auto& r : p.rules) {
        out += to_string(r.head) + " :-";
        for (std::size_t i = 0; i < r.blocks.size(); ++i) {
            if (i) out += " ;";
            if (!r.blocks[i].empty()) out += " " + to_string(r.blocks[i]);
        }
        out += " : cs " + call_text(r.cs) + ", ";
        if (r.is_advancing()) {
            auto ref = std::get_if<AdvancingAlgorithmRef>(&r.adv);
            if (!ref) throw std::invalid_argument("materialized advancing maps have no concrete syntax");
            out += "adv " + to_string(*ref);
        } else {
            out += "bool " + to_string(r.boolean);
        }
        out += ".\n";
    }
    return out;
}

Parsed<InitialCondition> parse_init(std::string_view text, std::string_view file) {
    return parse_lines(text, file, InitialCondition{}, [](InitialCondition& acc, const std::vector<Word>& words) {
        if (words[0].text != "gp") throw LineError(words[0], "unexpected '" + std::string(words[0].text) + "'", "'gp'");
        acc.positions.insert(parse_position(words, 1));
    });
}

std::string serialize_init(const InitialCondition& init) {
    std::string out;
    for (const auto& p : init.positions) out += "gp " + to_string(p) + "\n";
    return out;
}

std::string serialize_interpretation(const Interpretation& m) {
    std::string out;
    for (const auto& f : m) out += "fact " + to_string(f.literal) + " @ " + to_string(f.position) + "\n";
    return out;
}

Parsed<Interpretation> parse_interpretation(std::string_view text, std::string_view file) {
    return parse_lines(text, file, Interpretation{}, [](Interpretation& acc, const std::vector<Word>& words) {
        if (words[0].text != "fact") throw LineError(words[0], "unexpected '" + std::string(words[0].text) + "'", "'fact'");
        if (words.size() < 4) throw LineError(words.back(), "incomplete fact", "fact <literal> @ step=<k>");
        std::string_view lit = words[1].text;
        bool negated = !lit.empty() && lit[0] == '-';
        if (negated) lit.remove_prefix(1);
        if (!is_valid_atom_name(lit) || is_reserved(lit))
            throw LineError(words[1], "invalid literal '" + std::string(words[1].text) + "'");
        if (words[2].text != "@") throw LineError(words[2], "unexpected '" + std::string(words[2].text) + "'", "'@'");
        acc.insert(Fact{Literal{Atom(std::string(lit)), negated}, parse_position(words, 3)});
    });
}

std::string serialize_literals(const LiteralSet& lits) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : lits) {
        if (!first) out += ", ";
        first = false;
        out += to_string(l);
    }
    return out + "}";
}

std::string serialize_normal_program(const asp::NormalProgram& p) {
    std::string out;
    for (const auto& r : p.rules) out += asp::to_string(r) + "\n";
    return out;
}

std::string serialize_trace(const std::vector<LayerTrace>& layers) {
    std::string out;
    for (const auto& lt : layers) {
        out += "layer " + std::to_string(lt.k) + (lt.failed ? " failed" : "") + "\n";
        for (const auto& q : lt.frontier) out += "  frontier " + to_string(q) + "\n";
        for (const auto& s : lt.solves) {
            out += "  at " + to_string(s.z) + "\n";
            for (const auto& r : s.program.rules) out += "    rule " + asp::to_string(r) + "\n";
            out += "    chosen " + (s.chosen ? serialize_literals(*s.chosen) : std::string("none")) + "\n";
        }
        for (const auto& f : lt.layer) out += "  fact " + to_string(f.literal) + " @ " + to_string(f.position) + "\n";
    }
    return out;
}

}  // namespace hasp
