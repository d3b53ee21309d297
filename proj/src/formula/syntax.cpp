#include "nnfc/formula.hpp"

#include <cctype>

namespace nnfc {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
      column_(column)
{
}

namespace {

enum class Tok { Upper, Lower, LParen, RParen, Comma, Tilde, Amp, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            char c = s_[i_];
            int l = line_, co = col_;
            if (std::isupper(static_cast<unsigned char>(c))) {
                std::string t;
                while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
                    t += advance();
                out.push_back({Tok::Upper, t, l, co});
            } else if (std::islower(static_cast<unsigned char>(c))) {
                std::string t(1, advance());
                while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                    t += advance();
                out.push_back({Tok::Lower, t, l, co});
            } else {
                Tok k;
                switch (c) {
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case '~': k = Tok::Tilde; break;
                case '&': k = Tok::Amp; break;
                case '|': k = Tok::Bar; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", l, co);
                }
                advance();
                out.push_back({k, std::string(1, c), l, co});
            }
        }
    }

private:
    char advance()
    {
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            advance();
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const ParseOptions& opts) : toks_(std::move(toks)), opts_(opts) {}

    Formula run()
    {
        Formula f = formula();
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
    [[noreturn]] static void fail_at(const std::string& msg, const Token& t)
    {
        throw ParseError(msg, t.line, t.col);
    }

    void expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            fail(std::string("expected ") + what);
        take();
    }

    Formula formula() { return disjunction(); }

    Formula disjunction()
    {
        Formula f = conjunction();
        while (peek().kind == Tok::Bar) {
            take();
            f = Formula::disj(f, conjunction());
        }
        return f;
    }

    Formula conjunction()
    {
        Formula f = unit();
        while (peek().kind == Tok::Amp) {
            take();
            f = Formula::conj(f, unit());
        }
        return f;
    }

    bool at_quantifier() const
    {
        const Token& t = peek();
        return t.kind == Tok::Upper && (t.text == "A" || t.text == "E") && peek(1).kind == Tok::Lower;
    }

    Var variable()
    {
        const Token& t = peek();
        if (t.kind != Tok::Lower)
            fail("expected variable");
        auto v = parse_var(t.text);
        if (!v)
            fail("malformed variable '" + t.text + "'");
        take();
        return *v;
    }

    Formula unit()
    {
        const Token& t = peek();
        if (at_quantifier()) {
            NodeKind k = t.text == "A" ? NodeKind::Forall : NodeKind::Exists;
            take();
            const Token& vt = peek();
            Var v = variable();
            if (v.letter == 'y' && v.base == 0 && !opts_.allow_y0)
                fail_at("y0 is reserved for the fresh variable of universal elimination", vt);
            scope_.push_back(v);
            Formula body = unit();
            scope_.pop_back();
            return Formula::quant(k, v, body);
        }
        switch (t.kind) {
        case Tok::Tilde:
            take();
            return Formula::neg(unit());
        case Tok::LParen: {
            take();
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        case Tok::Upper:
            return atom();
        case Tok::End:
            fail("unexpected end of input");
        default:
            fail("unexpected '" + t.text + "'");
        }
    }

    Formula atom()
    {
        Token name = take();
        if (peek().kind != Tok::LParen)
            fail_at("0-ary predicate '" + name.text + "' is not allowed", name);
        take();
        if (peek().kind == Tok::RParen)
            fail_at("0-ary predicate '" + name.text + "' is not allowed", name);
        std::vector<Var> args;
        while (true) {
            const Token& vt = peek();
            Var v = variable();
            if (opts_.require_closed && !bound(v))
                fail_at("unbound variable " + v.str(), vt);
            args.push_back(v);
            if (peek().kind == Tok::Comma) {
                take();
                continue;
            }
            expect(Tok::RParen, "',' or ')'");
            break;
        }
        return Formula::atom(name.text, std::move(args));
    }

    bool bound(const Var& v) const
    {
        for (const auto& s : scope_)
            if (s == v)
                return true;
        return false;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& opts_;
    std::vector<Var> scope_;
};

void print_unit(const Formula& f, std::string& out);

void print_formula(const Formula& f, std::string& out)
{
    switch (f.kind()) {
    case NodeKind::And:
    case NodeKind::Or: {
        const char* op = f.is_and() ? " & " : " | ";
        const Formula& l = f.left();
        const Formula& r = f.right();
        // left-nested chains of the same operator and tighter-binding & under | need no parens
        bool left_bare = l.kind() == f.kind() || (f.is_or() && l.is_and()) || !l.is_binary();
        bool right_bare = (f.is_or() && r.is_and()) || !r.is_binary();
        if (left_bare)
            print_formula(l, out);
        else
            print_unit(l, out);
        out += op;
        if (right_bare)
            print_formula(r, out);
        else
            print_unit(r, out);
        return;
    }
    default:
        print_unit(f, out);
    }
}

void print_unit(const Formula& f, std::string& out)
{
    switch (f.kind()) {
    case NodeKind::Atom:
        out += f.pred();
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i)
                out += ',';
            out += f.args()[i].str();
        }
        out += ')';
        return;
    case NodeKind::Sat:
        out += "sat";
        return;
    case NodeKind::Not:
        out += '~';
        print_unit(f.left(), out);
        return;
    case NodeKind::Forall:
    case NodeKind::Exists:
        out += f.is_forall() ? "A " : "E ";
        out += f.var().str();
        out += ' ';
        print_unit(f.body(), out);
        return;
    default:
        out += '(';
        print_formula(f, out);
        out += ')';
    }
}

} // namespace

Formula parse(const std::string& text, const ParseOptions& opts)
{
    Lexer lex(text);
    Parser p(lex.run(), opts);
    return p.run();
}

std::string Formula::str() const
{
    std::string out;
    print_formula(*this, out);
    return out;
}

} // namespace nnfc
