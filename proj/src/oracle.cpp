#include "msc/oracle.hpp"

#include "msc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace msc {

int OraclePoly::max_var() const {
    int m = -1;
    for (const auto& t : terms)
        for (const auto& [v, e] : t.powers) m = std::max(m, v);
    return m;
}

FieldSpec::FieldSpec(long long p_) : p(p_) {
    if (p < 2 || p > 101 || !is_prime(p))
        throw UnsupportedError("field size " + std::to_string(p) +
                               " is not a prime <= 101");
}

namespace {

long long pow_mod(long long base, unsigned exp, long long p) {
    long long acc = 1 % p, b = base % p;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return acc;
}

// Equation with coefficients pre-reduced mod p.
struct CompiledEq {
    struct Term {
        long long c;
        std::vector<std::pair<int, unsigned>> powers;
    };
    std::vector<Term> terms;
};

CompiledEq compile(const OraclePoly& poly, long long p) {
    CompiledEq eq;
    for (const auto& t : poly.terms) {
        long long c = static_cast<long long>(t.coeff % p);
        if (c < 0) c += p;
        if (c != 0) eq.terms.push_back({c, t.powers});
    }
    return eq;
}

bool vanishes(const CompiledEq& eq, const std::vector<long long>& x, long long p) {
    long long sum = 0;
    for (const auto& t : eq.terms) {
        long long v = t.c;
        for (const auto& [var, exp] : t.powers) v = v * pow_mod(x[var], exp, p) % p;
        sum = (sum + v) % p;
    }
    return sum == 0;
}

} // namespace

long long enumerate_points(const VarietyPresentation& v, const FieldSpec& f,
                           long long guard) {
    for (const auto& eq : v.equations)
        if (eq.max_var() >= v.nvars)
            throw UnsupportedError("equation references a variable >= nvars");
    Int space = int_pow(Int(f.p), static_cast<unsigned long long>(v.nvars));
    if (space > guard)
        throw TooLargeError("enumeration space " + space.str() +
                            " exceeds the guard of " + std::to_string(guard));

    std::vector<CompiledEq> eqs;
    eqs.reserve(v.equations.size());
    for (const auto& e : v.equations) eqs.push_back(compile(e, f.p));

    std::vector<long long> x(static_cast<size_t>(v.nvars), 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& eq : eqs)
            if (!vanishes(eq, x, f.p)) {
                ok = false;
                break;
            }
        if (ok) ++count;
        // odometer step
        int i = 0;
        while (i < v.nvars && ++x[static_cast<size_t>(i)] == f.p)
            x[static_cast<size_t>(i++)] = 0;
        if (i == v.nvars) break;
    }
    return count;
}

namespace {

long long det_mod(const std::vector<long long>& m, int n, long long p) {
    switch (n) {
    case 1:
        return m[0] % p;
    case 2:
        return ((m[0] * m[3] - m[1] * m[2]) % p + p) % p;
    case 3: {
        long long d = m[0] * (m[4] * m[8] - m[5] * m[7]) -
                      m[1] * (m[3] * m[8] - m[5] * m[6]) +
                      m[2] * (m[3] * m[7] - m[4] * m[6]);
        return (d % p + p) % p;
    }
    default:
        throw TooLargeError("gl_order supports n <= 3");
    }
}

} // namespace

long long gl_order(int n, const FieldSpec& f) {
    if (n < 1 || n > 3) throw TooLargeError("gl_order supports 1 <= n <= 3");
    if (f.p > 7) throw TooLargeError("gl_order supports p <= 7");
    int cells = n * n;
    std::vector<long long> m(static_cast<size_t>(cells), 0);
    long long count = 0;
    for (;;) {
        if (det_mod(m, n, f.p) != 0) ++count;
        int i = 0;
        while (i < cells && ++m[static_cast<size_t>(i)] == f.p)
            m[static_cast<size_t>(i++)] = 0;
        if (i == cells) break;
    }
    return count;
}

Rational groupoid_count(const VarietyPresentation& v, int r, const FieldSpec& f,
                        long long guard) {
    if (r < 0) throw UnsupportedError("quotient rank must be >= 0");
    long long points = enumerate_points(v, f, guard);
    if (r == 0) return Rational(points);
    return Rational(points) / Rational(gl_order(r, f));
}

// ---- variety file parsing ---------------------------------------------

namespace {

struct VTok {
    enum Type { Ident, Int, LBrace, RBrace, LParen, RParen, Plus, Minus, Star,
                Caret, Semi, End } type;
    std::string text;
    int line = 1, col = 1;
};

std::vector<VTok> vlex(const std::string& text) {
    std::vector<VTok> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto step = [&]() {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
        ++i;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') step();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { step(); continue; }
        VTok t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_')) {
                t.text += text[i];
                step();
            }
            t.type = VTok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                step();
            }
            t.type = VTok::Int;
        } else {
            switch (c) {
            case '{': t.type = VTok::LBrace; break;
            case '}': t.type = VTok::RBrace; break;
            case '(': t.type = VTok::LParen; break;
            case ')': t.type = VTok::RParen; break;
            case '+': t.type = VTok::Plus; break;
            case '-': t.type = VTok::Minus; break;
            case '*': t.type = VTok::Star; break;
            case '^': t.type = VTok::Caret; break;
            case ';': t.type = VTok::Semi; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'",
                                  line, col);
            }
            step();
        }
        out.push_back(std::move(t));
    }
    out.push_back({VTok::End, "", line, col});
    return out;
}

// Sparse multivariate polynomial used only while parsing.
using MonoMap = std::map<std::map<int, unsigned>, Int>;

MonoMap mono_add(const MonoMap& a, const MonoMap& b, int sign) {
    MonoMap out = a;
    for (const auto& [m, c] : b) {
        Int& slot = out[m];
        slot += sign * c;
        if (slot == 0) out.erase(m);
    }
    return out;
}

MonoMap mono_mul(const MonoMap& a, const MonoMap& b) {
    MonoMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::map<int, unsigned> m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            Int& slot = out[m];
            slot += ca * cb;
            if (slot == 0) out.erase(m);
        }
    return out;
}

class VParser {
public:
    explicit VParser(const std::string& text) : toks_(vlex(text)) {}

    std::map<std::string, VarietyPresentation> run() {
        std::map<std::string, VarietyPresentation> out;
        while (!at(VTok::End)) {
            if (!at_ident("variety"))
                throw SyntaxError("expected 'variety'", cur().line, cur().col);
            ++pos_;
            VTok name = expect(VTok::Ident);
            if (out.count(name.text))
                throw DuplicateNameError("variety '" + name.text + "' already defined",
                                         name.line, name.col);
            if (!at_ident("vars"))
                throw SyntaxError("expected 'vars'", cur().line, cur().col);
            ++pos_;
            VTok ntok = expect(VTok::Int);
            if (ntok.text.size() > 2)
                throw SyntaxError("vars out of range", ntok.line, ntok.col);
            long long n = std::stoll(ntok.text);
            if (n < 0 || n > 64)
                throw SyntaxError("vars out of range", ntok.line, ntok.col);
            VarietyPresentation v;
            v.nvars = static_cast<int>(n);
            expect(VTok::LBrace);
            while (!at(VTok::RBrace)) {
                VTok start = cur();
                OraclePoly p = to_poly(parse_poly());
                if (p.max_var() >= v.nvars)
                    throw SyntaxError("equation references a variable >= vars",
                                      start.line, start.col);
                v.equations.push_back(std::move(p));
                expect(VTok::Semi);
            }
            expect(VTok::RBrace);
            out.emplace(name.text, std::move(v));
        }
        return out;
    }

private:
    std::vector<VTok> toks_;
    size_t pos_ = 0;

    const VTok& cur() const { return toks_[pos_]; }
    bool at(VTok::Type t) const { return cur().type == t; }
    bool at_ident(const char* s) const {
        return at(VTok::Ident) && cur().text == s;
    }
    VTok expect(VTok::Type t) {
        if (!at(t))
            throw SyntaxError("unexpected token in variety file", cur().line,
                              cur().col);
        return toks_[pos_++];
    }
    bool accept(VTok::Type t) {
        if (!at(t)) return false;
        ++pos_;
        return true;
    }

    MonoMap parse_poly() {
        MonoMap acc;
        int sign = accept(VTok::Minus) ? -1 : 1;
        acc = mono_add(MonoMap{}, parse_mterm(), sign);
        for (;;) {
            if (accept(VTok::Plus))
                acc = mono_add(acc, parse_mterm(), 1);
            else if (accept(VTok::Minus))
                acc = mono_add(acc, parse_mterm(), -1);
            else
                break;
        }
        return acc;
    }

    MonoMap parse_mterm() {
        MonoMap acc = parse_mpow();
        while (accept(VTok::Star)) acc = mono_mul(acc, parse_mpow());
        return acc;
    }

    MonoMap parse_mpow() {
        MonoMap base = parse_mprimary();
        if (accept(VTok::Caret)) {
            VTok etok = expect(VTok::Int);
            if (etok.text.size() > 5)
                throw SyntaxError("exponent out of range", etok.line, etok.col);
            long long e = std::stoll(etok.text);
            if (e < 0 || e > 10000)
                throw SyntaxError("exponent out of range", etok.line, etok.col);
            MonoMap acc{{{}, Int(1)}};
            for (long long k = 0; k < e; ++k) acc = mono_mul(acc, base);
            return acc;
        }
        return base;
    }

    MonoMap parse_mprimary() {
        if (accept(VTok::LParen)) {
            MonoMap inner = parse_poly();
            expect(VTok::RParen);
            return inner;
        }
        if (at(VTok::Int)) {
            VTok t = toks_[pos_++];
            return {{{}, Int(t.text)}};
        }
        if (at(VTok::Ident)) {
            VTok t = toks_[pos_++];
            if (t.text.size() >= 2 && t.text.size() <= 4 && t.text[0] == 'x' &&
                std::all_of(t.text.begin() + 1, t.text.end(), [](char ch) {
                    return std::isdigit(static_cast<unsigned char>(ch));
                })) {
                int var = std::stoi(t.text.substr(1));
                return {{{{var, 1u}}, Int(1)}};
            }
            throw SyntaxError("expected a variable x0..xN", t.line, t.col);
        }
        throw SyntaxError("expected a polynomial term", cur().line, cur().col);
    }

    static OraclePoly to_poly(const MonoMap& m) {
        OraclePoly p;
        for (const auto& [mono, c] : m) {
            OraclePoly::Term t;
            t.coeff = c;
            for (const auto& [v, e] : mono) t.powers.emplace_back(v, e);
            p.terms.push_back(std::move(t));
        }
        return p;
    }
};

} // namespace

std::map<std::string, VarietyPresentation> parse_varieties(const std::string& text) {
    return VParser(text).run();
}

} // namespace msc
