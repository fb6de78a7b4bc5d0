// Copyright 2026 The QRW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrw/inference/reader.hpp"

#include <cctype>
#include <map>

#include "qrw/error.hpp"

namespace qrw::inference {
namespace {

enum class Tok { Name, QuotedName, Var, Int, Punct, End, Eof };

struct Token {
    Tok kind = Tok::Eof;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
    /// Set when '(' follows this token with no layout in between.
    bool functional = false;
    /// Set when this token immediately follows the previous one.
    bool adjacent = false;
};

bool is_symbol_char(char c) { return std::string_view("#$&*+-./:<=>?@^~\\").find(c) != std::string_view::npos; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        const std::size_t before = pos_;
        skip_layout();
        Token t;
        t.adjacent = pos_ == before;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::Eof;
            return t;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text += advance();
            }
        } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Var;
            while (pos_ < src_.size() && is_alnum(src_[pos_])) {
                t.text += advance();
            }
        } else if (std::islower(static_cast<unsigned char>(c))) {
            t.kind = Tok::Name;
            while (pos_ < src_.size() && is_alnum(src_[pos_])) {
                t.text += advance();
            }
        } else if (c == '\'') {
            t.kind = Tok::QuotedName;
            advance();
            for (;;) {
                if (pos_ >= src_.size() || src_[pos_] == '\n') {
                    throw ParseError("unterminated quoted atom", t.line, t.column);
                }
                char q = advance();
                if (q == '\'') {
                    if (pos_ < src_.size() && src_[pos_] == '\'') {
                        t.text += advance();
                        continue;
                    }
                    break;
                }
                if (q == '\\' && pos_ < src_.size()) {
                    const char e = advance();
                    t.text += e == 'n' ? '\n' : e == 't' ? '\t' : e;
                    continue;
                }
                t.text += q;
            }
        } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == '|') {
            t.kind = Tok::Punct;
            t.text = std::string(1, advance());
        } else if (c == '!' || c == ';') {
            t.kind = Tok::Name;
            t.text = std::string(1, advance());
        } else if (c == '.' && (pos_ + 1 >= src_.size() || std::isspace(static_cast<unsigned char>(src_[pos_ + 1])) ||
                                src_[pos_ + 1] == '%')) {
            t.kind = Tok::End;
            t.text = std::string(1, advance());
        } else if (is_symbol_char(c)) {
            t.kind = Tok::Name;
            while (pos_ < src_.size() && is_symbol_char(src_[pos_])) {
                t.text += advance();
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
        }
        t.functional = (t.kind == Tok::Name || t.kind == Tok::QuotedName) && pos_ < src_.size() && src_[pos_] == '(';
        return t;
    }

   private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_layout() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                advance();
                advance();
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
                    advance();
                }
                if (pos_ + 1 < src_.size()) {
                    advance();
                    advance();
                } else {
                    pos_ = src_.size();
                }
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

struct Reader::Impl {
    Lexer lexer;
    OperatorTable ops;
    Token current;
    bool bar_is_operator = true;
    std::map<std::string, std::size_t> var_ids;
    std::vector<std::string> var_names;

    Impl(std::string_view src, OperatorTable table) : lexer(src), ops(std::move(table)) { current = lexer.next(); }

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(message, current.line, current.column);
    }

    Token take() {
        Token t = current;
        current = lexer.next();
        return t;
    }

    bool at_punct(std::string_view p) const { return current.kind == Tok::Punct && current.text == p; }

    void expect_punct(std::string_view p) {
        if (!at_punct(p)) {
            fail("expected '" + std::string(p) + "'" + describe_current());
        }
        take();
    }

    std::string describe_current() const {
        if (current.kind == Tok::Eof) {
            return " but reached end of input";
        }
        if (current.kind == Tok::End) {
            return " but found end of clause";
        }
        return " but found '" + current.text + "'";
    }

    Term make_variable(const std::string &name) {
        if (name == "_") {
            const std::size_t id = var_names.size();
            var_names.push_back("_");
            return Term::variable(id, "_");
        }
        auto [it, inserted] = var_ids.emplace(name, var_names.size());
        if (inserted) {
            var_names.push_back(name);
        }
        return Term::variable(it->second, name);
    }

    // Whether the current token can begin a term (used to decide whether a
    // prefix operator is applied or stands alone as an atom).
    bool starts_term() const {
        switch (current.kind) {
            case Tok::Int:
            case Tok::Var:
            case Tok::QuotedName:
                return true;
            case Tok::Name:
                return !ops.infix(current.text) || ops.prefix(current.text) || current.functional;
            case Tok::Punct:
                return current.text == "(" || current.text == "[" || current.text == "{";
            default:
                return false;
        }
    }

    std::vector<Term> parse_arguments() {
        expect_punct("(");
        const bool saved = bar_is_operator;
        bar_is_operator = true;
        std::vector<Term> args;
        args.push_back(parse(999).first);
        while (at_punct(",")) {
            take();
            args.push_back(parse(999).first);
        }
        expect_punct(")");
        bar_is_operator = saved;
        return args;
    }

    Term parse_list() {
        const bool saved = bar_is_operator;
        bar_is_operator = false;
        std::vector<Term> items;
        items.push_back(parse(999).first);
        while (at_punct(",")) {
            take();
            items.push_back(parse(999).first);
        }
        Term tail = Term::atom("[]");
        if (at_punct("|")) {
            take();
            tail = parse(999).first;
        }
        bar_is_operator = saved;
        expect_punct("]");
        return Term::list(std::move(items), std::move(tail));
    }

    std::pair<Term, int> parse_primary(int max_priority) {
        if (current.kind == Tok::Eof) {
            fail("unexpected end of input");
        }
        if (current.kind == Tok::End) {
            fail("unexpected end of clause");
        }
        Token tok = take();
        switch (tok.kind) {
            case Tok::Int:
                return {Term::integer(std::stoll(tok.text)), 0};
            case Tok::Var:
                return {make_variable(tok.text), 0};
            case Tok::Punct: {
                if (tok.text == "(") {
                    const bool saved = bar_is_operator;
                    bar_is_operator = true;
                    Term inner = parse(1200).first;
                    bar_is_operator = saved;
                    expect_punct(")");
                    return {inner, 0};
                }
                if (tok.text == "[") {
                    if (at_punct("]")) {
                        take();
                        return {Term::atom("[]"), 0};
                    }
                    return {parse_list(), 0};
                }
                if (tok.text == "{") {
                    if (at_punct("}")) {
                        take();
                        return {Term::atom("{}"), 0};
                    }
                    const bool saved = bar_is_operator;
                    bar_is_operator = true;
                    Term inner = parse(1200).first;
                    bar_is_operator = saved;
                    expect_punct("}");
                    return {Term::compound("{}", {inner}), 0};
                }
                throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);
            }
            case Tok::Name:
            case Tok::QuotedName: {
                if (tok.functional) {
                    return {Term::compound(tok.text, parse_arguments()), 0};
                }
                if (tok.kind == Tok::Name && tok.text == "-" && current.kind == Tok::Int && current.adjacent) {
                    return {Term::integer(-std::stoll(take().text)), 0};
                }
                if (tok.kind == Tok::Name) {
                    if (auto op = ops.prefix(tok.text); op && starts_term()) {
                        int priority = op->priority;
                        if (priority > max_priority) {
                            priority = 999;
                        }
                        const int arg_max = op->type == OpType::fy ? priority : priority - 1;
                        Term arg = parse(arg_max).first;
                        return {Term::compound(tok.text, {arg}), priority};
                    }
                }
                return {Term::atom(tok.text), 0};
            }
            default:
                break;
        }
        throw ParseError("unexpected token '" + tok.text + "'", tok.line, tok.column);
    }

    std::pair<Term, int> parse(int max_priority) {
        auto [left, left_priority] = parse_primary(max_priority);
        for (;;) {
            std::string name;
            if (current.kind == Tok::Name) {
                name = current.text;
            } else if (at_punct(",")) {
                name = ",";
            } else if (at_punct("|") && bar_is_operator) {
                name = "|";
            } else {
                break;
            }
            if (auto op = ops.infix(name)) {
                const int left_max = op->type == OpType::yfx ? op->priority : op->priority - 1;
                const int right_max = op->type == OpType::xfy ? op->priority : op->priority - 1;
                if (op->priority <= max_priority && left_priority <= left_max) {
                    take();
                    Term right = parse(right_max).first;
                    left = Term::compound(name, {left, right});
                    left_priority = op->priority;
                    continue;
                }
            }
            if (auto op = ops.postfix(name)) {
                const int left_max = op->type == OpType::yf ? op->priority : op->priority - 1;
                if (op->priority <= max_priority && left_priority <= left_max) {
                    take();
                    left = Term::compound(name, {left});
                    left_priority = op->priority;
                    continue;
                }
            }
            break;
        }
        return {left, left_priority};
    }

    std::optional<ReadTerm> next_term(bool require_end) {
        if (current.kind == Tok::Eof) {
            return std::nullopt;
        }
        var_ids.clear();
        var_names.clear();
        const std::size_t line = current.line;
        Term term = parse(1200).first;
        if (current.kind == Tok::End) {
            take();
        } else if (require_end || current.kind != Tok::Eof) {
            fail("expected end of clause" + describe_current());
        }
        return ReadTerm{term, var_names, line};
    }
};

Reader::Reader(std::string_view source, OperatorTable ops) : impl_(std::make_unique<Impl>(source, std::move(ops))) {}
Reader::~Reader() = default;

std::optional<ReadTerm> Reader::next() { return impl_->next_term(true); }
OperatorTable &Reader::operators() { return impl_->ops; }

ReadTerm read_term(std::string_view text) {
    Reader::Impl impl(text, OperatorTable::standard());
    auto out = impl.next_term(false);
    if (!out) {
        throw ParseError("empty term", 1, 1);
    }
    if (impl.current.kind != Tok::Eof) {
        impl.fail("trailing input after term");
    }
    return *out;
}

}  // namespace qrw::inference
