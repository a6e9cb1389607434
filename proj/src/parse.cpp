#include "msc/parse.hpp"

#include "msc/errors.hpp"
#include "msc/series.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace msc {

namespace {

enum class Tok {
    Ident, Int,
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Plus, Minus, Star, Caret, Slash, Comma, Semi, Colon, Equals, Arrow,
    End,
};

struct Token {
    Tok type;
    std::string text; // identifier name or digit string
    int line = 1, col = 1;
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') { ++line; col = 1; }
            else ++col;
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.type = Tok::Ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            t.type = Tok::Int;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            t.type = Tok::Arrow;
            advance(2);
        } else {
            switch (c) {
            case '(': t.type = Tok::LParen; break;
            case ')': t.type = Tok::RParen; break;
            case '{': t.type = Tok::LBrace; break;
            case '}': t.type = Tok::RBrace; break;
            case '[': t.type = Tok::LBracket; break;
            case ']': t.type = Tok::RBracket; break;
            case '+': t.type = Tok::Plus; break;
            case '-': t.type = Tok::Minus; break;
            case '*': t.type = Tok::Star; break;
            case '^': t.type = Tok::Caret; break;
            case '/': t.type = Tok::Slash; break;
            case ',': t.type = Tok::Comma; break;
            case ';': t.type = Tok::Semi; break;
            case ':': t.type = Tok::Colon; break;
            case '=': t.type = Tok::Equals; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'",
                                  line, col);
            }
            advance(1);
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> r = {
        "pt", "A", "Gm", "P", "GL", "T", "B", "K", "Ga", "Fib", "inv",
        "let", "gen", "affine", "class", "count", "hodge", "order", "L",
    };
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Program parse_program() {
        prescan();
        Program prog;
        while (!at(Tok::End)) {
            if (at_ident("gen"))
                parse_decl(prog);
            else if (at_ident("let"))
                parse_binding(prog);
            else
                throw SyntaxError("expected 'gen' or 'let'", cur().line, cur().col);
        }
        return prog;
    }

    // Bare expression with a caller-provided declaration table.
    ExprPtr parse_bare(const DeclTable& decls) {
        bare_mode_ = true;
        for (const auto& [name, d] : decls) decl_affine_[name] = d.affine;
        ExprPtr e = parse_expr();
        expect(Tok::End);
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    bool bare_mode_ = false;

    // prescan results: every declared generator name -> affine flag, and
    // every binding name (so forward references can be told apart from
    // unknown names)
    std::map<std::string, bool> decl_affine_;
    std::set<std::string> binding_names_;

    // pass-2 state
    std::map<std::string, ExprPtr> bound_;
    std::set<std::string> used_names_;
    std::string current_binding_;

    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok t) const { return cur().type == t; }
    bool at_ident(const char* s) const { return at(Tok::Ident) && cur().text == s; }

    Token take() { return toks_[pos_++]; }

    Token expect(Tok t) {
        if (!at(t))
            throw SyntaxError(std::string("expected ") + tok_name(t) + ", found " +
                                  tok_name(cur().type),
                              cur().line, cur().col);
        return take();
    }

    bool accept(Tok t) {
        if (!at(t)) return false;
        ++pos_;
        return true;
    }

    Token expect_ident() { return expect(Tok::Ident); }

    // Unsigned integer that must fit in a long long (arities, exponents,
    // table keys, orders).
    long long expect_small_int(const char* what) {
        Token t = expect(Tok::Int);
        if (t.text.size() > 12)
            throw SyntaxError(std::string(what) + " out of range", t.line, t.col);
        return std::stoll(t.text);
    }

    Int expect_signed_big() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int);
        Int v(t.text);
        return neg ? -v : v;
    }

    long long expect_signed_small(const char* what) {
        bool neg = accept(Tok::Minus);
        long long v = expect_small_int(what);
        return neg ? -v : v;
    }

    // ---- pass 1 ----------------------------------------------------------

    // Collects declaration names (with affine flags) and binding names so
    // pass 2 can resolve identifiers and licence generator fibers even when
    // the declaration appears later in the file.
    void prescan() {
        size_t save = pos_;
        while (!at(Tok::End)) {
            if (at_ident("gen")) {
                ++pos_;
                if (at(Tok::Ident)) {
                    std::string name = take().text;
                    bool affine = at_ident("affine");
                    if (!decl_affine_.count(name)) decl_affine_[name] = affine;
                }
            } else if (at_ident("let")) {
                ++pos_;
                if (at(Tok::Ident)) binding_names_.insert(take().text);
            }
            skip_statement();
        }
        pos_ = save;
    }

    // Advances past the next top-level ';' (brackets of any kind nest).
    void skip_statement() {
        int depth = 0;
        while (!at(Tok::End)) {
            Tok t = take().type;
            if (t == Tok::LParen || t == Tok::LBrace || t == Tok::LBracket)
                ++depth;
            else if (t == Tok::RParen || t == Tok::RBrace || t == Tok::RBracket)
                --depth;
            else if (t == Tok::Semi && depth <= 0)
                return;
        }
    }

    // ---- pass 2: statements ----------------------------------------------

    std::string expect_fresh_name() {
        Token t = expect_ident();
        if (reserved_words().count(t.text))
            throw SyntaxError("'" + t.text + "' is a reserved word", t.line, t.col);
        if (used_names_.count(t.text))
            throw DuplicateNameError("name '" + t.text + "' already defined",
                                     t.line, t.col);
        used_names_.insert(t.text);
        return t.text;
    }

    void parse_decl(Program& prog) {
        Token kw = take(); // 'gen'
        GeneratorDecl d;
        d.line = kw.line;
        d.name = expect_fresh_name();
        if (at_ident("affine")) {
            ++pos_;
            d.affine = true;
        }
        expect(Tok::LBrace);
        if (at_ident("class")) {
            ++pos_;
            expect(Tok::Colon);
            d.class_poly = parse_lpoly();
        }
        if (at_ident("count")) {
            ++pos_;
            expect(Tok::Colon);
            parse_count_table(d);
        }
        if (at_ident("hodge")) {
            ++pos_;
            expect(Tok::Colon);
            d.hodge = parse_series_literal();
        }
        expect(Tok::RBrace);
        expect(Tok::Semi);
        validate_decl(d);
        prog.decls.push_back(std::move(d));
    }

    void parse_binding(Program& prog) {
        Token kw = take(); // 'let'
        Binding b;
        b.line = kw.line;
        b.name = expect_fresh_name();
        current_binding_ = b.name;
        expect(Tok::Equals);
        b.expr = parse_expr();
        expect(Tok::Semi);
        current_binding_.clear();
        bound_[b.name] = b.expr;
        prog.bindings.push_back(std::move(b));
    }

    // ---- declared data ----------------------------------------------------

    // Integer polynomial in L: term ::= INT | INT '*' L ['^' INT] | L ['^' INT],
    // terms joined by '+'/'-', optional leading '-'.
    Poly parse_lpoly() {
        Poly acc;
        bool neg = accept(Tok::Minus);
        acc += neg ? -parse_lpoly_term() : parse_lpoly_term();
        for (;;) {
            if (accept(Tok::Plus))
                acc += parse_lpoly_term();
            else if (accept(Tok::Minus))
                acc -= parse_lpoly_term();
            else
                break;
        }
        return acc;
    }

    Poly parse_lpoly_term() {
        if (at(Tok::Int)) {
            Token t = take();
            Int c(t.text);
            if (accept(Tok::Star)) {
                expect_L();
                return Poly(c) * Poly::lefschetz(parse_exponent());
            }
            return Poly(c);
        }
        if (at_ident("L")) {
            ++pos_;
            return Poly::lefschetz(parse_exponent());
        }
        throw SyntaxError("expected a polynomial term in L", cur().line, cur().col);
    }

    void expect_L() {
        if (!at_ident("L"))
            throw SyntaxError("expected 'L'", cur().line, cur().col);
        ++pos_;
    }

    unsigned parse_exponent() {
        if (!accept(Tok::Caret)) return 1;
        Token t = toks_[pos_]; // position for the range check message
        long long e = expect_small_int("exponent");
        if (e > 1000000)
            throw SyntaxError("exponent too large", t.line, t.col);
        return static_cast<unsigned>(e);
    }

    void parse_count_table(GeneratorDecl& d) {
        expect(Tok::LBrace);
        while (!at(Tok::RBrace)) {
            Token qtok = cur();
            long long q = expect_small_int("count key");
            if (q < 2 || !is_prime_power(q))
                throw DeclDataError("count key " + std::to_string(q) +
                                        " is not a prime power >= 2",
                                    qtok.line, qtok.col);
            expect(Tok::Arrow);
            Int v = expect_signed_big();
            if (!d.count_table.emplace(q, std::move(v)).second)
                throw DeclDataError("duplicate count key " + std::to_string(q),
                                    qtok.line, qtok.col);
            if (!accept(Tok::Comma)) break;
        }
        expect(Tok::RBrace);
    }

    // `{ (p,q) -> c, ... ; order N }` where N counts powers of uv.
    TruncatedSeries parse_series_literal() {
        Token open = expect(Tok::LBrace);
        std::map<std::pair<int, int>, Int> coeffs;
        while (at(Tok::LParen)) {
            Token entry = take();
            long long p = expect_signed_small("series exponent");
            expect(Tok::Comma);
            long long q = expect_signed_small("series exponent");
            expect(Tok::RParen);
            expect(Tok::Arrow);
            Int c = expect_signed_big();
            auto key = std::make_pair(static_cast<int>(p), static_cast<int>(q));
            if (coeffs.count(key))
                throw DeclDataError("duplicate series exponent pair", entry.line,
                                    entry.col);
            if (!c.is_zero()) coeffs.emplace(key, std::move(c));
            if (!accept(Tok::Comma)) break;
        }
        expect(Tok::Semi);
        if (!at_ident("order"))
            throw SyntaxError("expected 'order'", cur().line, cur().col);
        ++pos_;
        long long n = expect_small_int("series order");
        if (n > 100000)
            throw SyntaxError("series order too large", cur().line, cur().col);
        expect(Tok::RBrace);
        int internal = static_cast<int>(2 * n); // order counts powers of uv
        for (const auto& [pq, c] : coeffs)
            if (pq.first + pq.second > internal)
                throw DeclDataError("series term above declared order", open.line,
                                    open.col);
        return TruncatedSeries::from_coeffs(std::move(coeffs), internal);
    }

    void validate_decl(const GeneratorDecl& d) {
        if (!d.class_poly) return;
        for (const auto& [q, v] : d.count_table) {
            Rational got = d.class_poly->evaluate(Rational(q));
            if (got != Rational(v))
                throw DeclDataError("generator '" + d.name + "': count at q=" +
                                        std::to_string(q) +
                                        " disagrees with the class polynomial",
                                    d.line);
        }
        if (d.hodge) {
            std::map<std::pair<int, int>, Int> expected;
            for (const auto& [m, c] : d.class_poly->terms()) {
                int k = static_cast<int>(m.lef);
                if (2 * k <= d.hodge->order()) expected[{k, k}] = c;
            }
            if (expected != d.hodge->coeffs())
                throw DeclDataError("generator '" + d.name +
                                        "': hodge series disagrees with the "
                                        "class polynomial",
                                    d.line);
        }
    }

    // ---- pass 2: expressions ----------------------------------------------

    // expr := term (('+'|'-') term)* — left associative; maximal runs of '+'
    // collapse into one n-ary disjoint union.
    ExprPtr parse_expr() {
        std::vector<ExprPtr> parts;
        parts.push_back(parse_term());
        for (;;) {
            if (accept(Tok::Plus)) {
                parts.push_back(parse_term());
            } else if (accept(Tok::Minus)) {
                ExprPtr ambient =
                    parts.size() == 1 ? parts[0] : disjoint_union(std::move(parts));
                parts.clear();
                parts.push_back(complement(std::move(ambient), parse_term()));
            } else {
                break;
            }
        }
        return parts.size() == 1 ? parts[0] : disjoint_union(std::move(parts));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (accept(Tok::Star)) factors.push_back(parse_factor());
        return factors.size() == 1 ? factors[0] : product(std::move(factors));
    }

    long long paren_arg(const char* what, long long min_value) {
        expect(Tok::LParen);
        Token t = cur();
        long long n = expect_small_int(what);
        expect(Tok::RParen);
        if (n < min_value)
            throw ArityError(std::string(what) + " must be >= " +
                                 std::to_string(min_value),
                             t.line, t.col);
        return n;
    }

    ExprPtr parse_factor() {
        if (accept(Tok::LParen)) {
            ExprPtr e = parse_expr();
            expect(Tok::RParen);
            return e;
        }
        if (at(Tok::LBracket)) {
            Token open = take();
            ExprPtr total = parse_expr();
            expect(Tok::Slash);
            if (!at_ident("GL"))
                throw SyntaxError("expected 'GL' in quotient", cur().line, cur().col);
            ++pos_;
            long long r = paren_arg("quotient rank", 1);
            expect(Tok::RBracket);
            (void)open;
            return quotient_by_gl(std::move(total), static_cast<int>(r));
        }
        if (!at(Tok::Ident))
            throw SyntaxError(std::string("expected an expression, found ") +
                                  tok_name(cur().type),
                              cur().line, cur().col);

        Token t = take();
        const std::string& w = t.text;
        if (w == "pt") return point();
        if (w == "Gm") return multiplicative_group();
        if (w == "A") return affine_space(static_cast<int>(paren_arg("A dimension", 0)));
        if (w == "P")
            return projective_space(static_cast<int>(paren_arg("P dimension", 0)));
        if (w == "GL") return general_linear(static_cast<int>(paren_arg("GL rank", 1)));
        if (w == "T") return torus(static_cast<int>(paren_arg("T rank", 1)));
        if (w == "B") {
            if (at_ident("Gm")) {
                ++pos_;
                return classifying_gm();
            }
            if (at_ident("GL")) {
                ++pos_;
                return classifying_gl(static_cast<int>(paren_arg("GL rank", 1)));
            }
            throw SyntaxError("expected 'GL(n)' or 'Gm' after 'B'", cur().line,
                              cur().col);
        }
        if (w == "K") {
            expect(Tok::LParen);
            if (!at_ident("Ga"))
                throw SyntaxError("expected 'Ga' in K(Ga,n)", cur().line, cur().col);
            ++pos_;
            expect(Tok::Comma);
            Token ntok = cur();
            long long n = expect_small_int("K(Ga,n) degree");
            expect(Tok::RParen);
            if (n < 1)
                throw ArityError("K(Ga,n) degree must be >= 1", ntok.line, ntok.col);
            return eilenberg_maclane_ga(static_cast<int>(n));
        }
        if (w == "inv") {
            expect(Tok::LParen);
            ExprPtr operand = parse_expr();
            expect(Tok::RParen);
            return inverse(std::move(operand));
        }
        if (w == "Fib") {
            expect(Tok::LParen);
            ExprPtr base = parse_expr();
            expect(Tok::Comma);
            Token ftok = cur();
            ExprPtr fiber = parse_expr();
            expect(Tok::RParen);
            auto affine_gen = [&](const std::string& g) {
                auto it = decl_affine_.find(g);
                return it != decl_affine_.end() && it->second;
            };
            if (!is_licensed_fiber(*fiber, affine_gen))
                throw ArityError(
                    "fiber must be an affine atom (pt, A(n), Gm, GL(n), T(n), "
                    "an affine generator) or K(Ga,n)",
                    ftok.line, ftok.col);
            return fibration(std::move(base), std::move(fiber));
        }
        if (reserved_words().count(w))
            throw SyntaxError("unexpected keyword '" + w + "'", t.line, t.col);

        // plain identifier: generator reference or binding expansion
        if (decl_affine_.count(w)) return gen_ref(w);
        if (auto it = bound_.find(w); it != bound_.end()) return it->second;
        if (bare_mode_) return gen_ref(w);
        if (w == current_binding_ || binding_names_.count(w))
            throw CyclicBindingError("binding '" + w +
                                         "' referenced before its definition",
                                     t.line, t.col);
        throw UnknownNameError("unknown name '" + w + "'", t.line, t.col);
    }
};

} // namespace

Program parse(const std::string& text) { return Parser(text).parse_program(); }

ExprPtr parse_expression(const std::string& text, const DeclTable& decls) {
    return Parser(text).parse_bare(decls);
}

} // namespace msc
