#include "monomod/parser.hpp"

#include <cctype>
#include <charconv>

#include "monomod/error.hpp"

namespace monomod {

namespace {

enum class Tok { End, Var, True, False, LParen, RParen, Not, Box, Dia, And, Or, Imp, Stage, Pr, PrR, Number };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    bool startsWith(std::string_view p) const { return s_.substr(pos_, p.size()) == p; }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        cur_ = Token{Tok::End, pos_, {}};
        if (pos_ >= s_.size()) return;

        struct Sym {
            std::string_view text;
            Tok kind;
        };
        static constexpr Sym syms[] = {
            {"->", Tok::Imp},       {"→", Tok::Imp}, {"[]", Tok::Box},  {"□", Tok::Box},
            {"<>", Tok::Dia},       {"◇", Tok::Dia}, {"◊", Tok::Dia}, {"~", Tok::Not},
            {"!", Tok::Not},        {"¬", Tok::Not}, {"&", Tok::And},   {"∧", Tok::And},
            {"|", Tok::Or},         {"∨", Tok::Or},  {"(", Tok::LParen}, {")", Tok::RParen},
            {"#t", Tok::True},      {"⊤", Tok::True}, {"#f", Tok::False}, {"⊥", Tok::False},
        };
        for (const auto& sym : syms) {
            if (startsWith(sym.text)) {
                cur_ = Token{sym.kind, pos_, s_.substr(pos_, sym.text.size())};
                pos_ += sym.text.size();
                return;
            }
        }

        std::size_t start = pos_;
        char c = s_[pos_];
        auto identChar = [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        };
        if (c >= 'a' && c <= 'z') {
            while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                        std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            if (pos_ < s_.size() && identChar(s_[pos_])) throw ParseError("invalid character in variable name", pos_);
            cur_ = Token{Tok::Var, start, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            cur_ = Token{Tok::Number, start, s_.substr(start, pos_ - start)};
            return;
        }
        if (c >= 'A' && c <= 'Z') {
            while (pos_ < s_.size() && identChar(s_[pos_])) ++pos_;
            std::string_view word = s_.substr(start, pos_ - start);
            if (word == "S") cur_ = Token{Tok::Stage, start, word};
            else if (word == "Pr") cur_ = Token{Tok::Pr, start, word};
            else if (word == "PrR") cur_ = Token{Tok::PrR, start, word};
            else throw ParseError("unknown token '" + std::string(word) + "'", start);
            return;
        }
        throw ParseError("unknown token", start);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) {}

    Formula parseAll() {
        Formula f = form();
        if (lex_.peek().kind != Tok::End) throw ParseError("unexpected token", lex_.peek().offset);
        return f;
    }

private:
    Formula form() {
        Formula acc = unary();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::And) {
                lex_.take();
                acc = Formula::conj(acc, unary());
            } else if (k == Tok::Or) {
                lex_.take();
                acc = Formula::disj(acc, unary());
            } else {
                break;
            }
        }
        if (lex_.peek().kind == Tok::Imp) {
            lex_.take();
            return Formula::imp(acc, form());
        }
        return acc;
    }

    Formula unary() {
        Tok k = lex_.peek().kind;
        if (k == Tok::Not || k == Tok::Box || k == Tok::Dia) {
            lex_.take();
            Formula a = unary();
            if (k == Tok::Not) return Formula::neg(a);
            if (k == Tok::Box) return Formula::box(a);
            return Formula::dia(a);
        }
        return atom();
    }

    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) throw ParseError(std::string("expected ") + what, lex_.peek().offset);
        lex_.take();
    }

    Formula atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Var: return Formula::var(t.text);
            case Tok::True: return Formula::top();
            case Tok::False: return Formula::bot();
            case Tok::LParen: {
                Formula f = form();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Stage: {
                expect(Tok::LParen, "'('");
                Token n = lex_.take();
                if (n.kind != Tok::Number) throw ParseError("expected stage index", n.offset);
                std::uint64_t j = 0;
                auto [p, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), j);
                if (ec != std::errc() || p != n.text.data() + n.text.size())
                    throw ParseError("stage index out of range", n.offset);
                expect(Tok::RParen, "')'");
                return Formula::stage(j);
            }
            case Tok::Pr:
            case Tok::PrR: {
                expect(Tok::LParen, "'('");
                Formula f = form();
                expect(Tok::RParen, "')'");
                return t.kind == Tok::Pr ? Formula::pr(f) : Formula::prRosser(f);
            }
            case Tok::End: throw ParseError("unexpected end of input", t.offset);
            default: throw ParseError("unexpected token", t.offset);
        }
    }

    Lexer lex_;
};

// Precedence levels: 0 implication, 1 conjunction chain, 2 prefix operators, 3 atoms.
void emit(const Formula& f, int ctx, std::string& out);

void wrap(const Formula& f, int level, int ctx, std::string& out, void (*body)(const Formula&, std::string&)) {
    if (level < ctx) out += '(';
    body(f, out);
    if (level < ctx) out += ')';
}

bool isTop(const Formula& f) { return f.is(Kind::Imp) && f.left().is(Kind::Bot) && f.right().is(Kind::Bot); }

// <>A is ~[]~A.
std::optional<Formula> diamondBody(const Formula& f) {
    if (!f.isNegation() || !f.left().is(Kind::Box) || !f.left().inner().isNegation()) return std::nullopt;
    return f.left().inner().left();
}

// A & B is ~(A -> ~B).
bool isConj(const Formula& f) {
    return f.isNegation() && f.left().is(Kind::Imp) && f.left().right().isNegation();
}

void emit(const Formula& f, int ctx, std::string& out) {
    switch (f.kind()) {
        case Kind::Bot: out += "#f"; return;
        case Kind::Var: out += f.name(); return;
        case Kind::Stage:
            out += "S(" + std::to_string(f.stageIndex()) + ")";
            return;
        case Kind::Pr:
        case Kind::PrR:
            out += f.is(Kind::Pr) ? "Pr(" : "PrR(";
            emit(f.inner(), 0, out);
            out += ')';
            return;
        case Kind::Box:
            out += "[]";
            emit(f.inner(), 2, out);
            return;
        case Kind::Imp: break;
    }
    if (isTop(f)) {
        out += "#t";
        return;
    }
    if (auto body = diamondBody(f)) {
        out += "<>";
        emit(*body, 2, out);
        return;
    }
    if (isConj(f)) {
        wrap(f, 1, ctx, out, [](const Formula& g, std::string& o) {
            emit(g.left().left(), 1, o);
            o += " & ";
            emit(g.left().right().left(), 2, o);
        });
        return;
    }
    if (f.isNegation()) {
        out += '~';
        emit(f.left(), 2, out);
        return;
    }
    wrap(f, 0, ctx, out, [](const Formula& g, std::string& o) {
        emit(g.left(), 1, o);
        o += " -> ";
        emit(g.right(), 0, o);
    });
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parseAll(); }

std::string render(const Formula& f) {
    std::string out;
    emit(f, 0, out);
    return out;
}

}  // namespace monomod
