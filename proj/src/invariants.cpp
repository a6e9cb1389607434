#include "msc/invariants.hpp"

#include "msc/errors.hpp"

#include <algorithm>

namespace msc {

namespace {

void require_prime_power(long long q) {
    if (q < 2 || !is_prime_power(q))
        throw UnsupportedError("q = " + std::to_string(q) +
                               " is not a prime power >= 2");
}

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
Rational gl_group_order(int n, long long q) {
    Rational qn = rational_pow(Rational(q), n);
    Rational acc(1);
    Rational qi(1);
    for (int i = 0; i < n; ++i) {
        acc *= qn - qi;
        qi *= q;
    }
    return acc;
}

Rational mu_rec(const StackExpr& e, long long q, const DeclTable& decls) {
    using K = StackExpr::Kind;
    switch (e.kind) {
    case K::Point:
        return Rational(1);
    case K::AffineSpace:
        return rational_pow(Rational(q), e.arg);
    case K::MultiplicativeGroup:
        return Rational(q - 1);
    case K::ProjectiveSpace: {
        Rational acc(0), qi(1);
        for (int i = 0; i <= e.arg; ++i) {
            acc += qi;
            qi *= q;
        }
        return acc;
    }
    case K::GeneralLinear:
        return gl_group_order(e.arg, q);
    case K::Torus:
        return rational_pow(Rational(q - 1), e.arg);
    case K::ClassifyingGL:
        // one point, automorphisms GL_n(F_q); torsors are trivial over a
        // finite field, so mu = 1/|GL_n(F_q)|
        return Rational(1) / gl_group_order(e.arg, q);
    case K::ClassifyingGm:
        return Rational(1) / Rational(q - 1);
    case K::EilenbergMacLaneGa:
        // single homotopy group pi_n of order q
        return e.arg % 2 == 0 ? Rational(q) : Rational(1) / Rational(q);
    case K::GenRef: {
        auto it = decls.find(e.name);
        if (it != decls.end()) {
            auto jt = it->second.count_table.find(q);
            if (jt != it->second.count_table.end()) return Rational(jt->second);
        }
        throw MissingCountDataError("generator '" + e.name +
                                    "' has no count at q=" + std::to_string(q));
    }
    case K::DisjointUnion: {
        Rational acc(0);
        for (const auto& c : e.children) acc += mu_rec(*c, q, decls);
        return acc;
    }
    case K::Product: {
        Rational acc(1);
        for (const auto& c : e.children) acc *= mu_rec(*c, q, decls);
        return acc;
    }
    case K::Complement:
        return mu_rec(*e.children[0], q, decls) - mu_rec(*e.children[1], q, decls);
    case K::QuotientByGL:
        return mu_rec(*e.children[0], q, decls) / gl_group_order(e.arg, q);
    case K::Fibration:
        return mu_rec(*e.children[0], q, decls) * mu_rec(*e.children[1], q, decls);
    case K::Inverse: {
        Rational v = mu_rec(*e.children[0], q, decls);
        if (v == 0)
            throw DenominatorVanishesError(
                "cannot invert a class whose count vanishes at q=" +
                std::to_string(q));
        return Rational(1) / v;
    }
    }
    throw Error("unreachable expression kind");
}

} // namespace

Rational point_count(const RingElement& elem, long long q,
                     const std::map<std::string, Rational>& env) {
    require_prime_power(q);
    return rc_specialize(elem, Rational(q), env);
}

Rational mu_compositional(const StackExpr& expr, long long q,
                          const DeclTable& decls) {
    require_prime_power(q);
    return mu_rec(expr, q, decls);
}

TruncatedSeries hodge(const StackExpr& expr, int n, const DeclTable& decls) {
    RingElement elem = normalize(expr, decls);
    std::map<std::string, TruncatedSeries> genv;
    for (const auto& name : elem.symbols()) {
        auto it = decls.find(name);
        if (it != decls.end() && it->second.hodge) genv.emplace(name, *it->second.hodge);
    }
    return s_expand(elem, n, genv);
}

std::map<std::string, Rational> count_env(const RingElement& elem, long long q,
                                          const DeclTable& decls) {
    std::map<std::string, Rational> env;
    for (const auto& name : elem.symbols()) {
        auto it = decls.find(name);
        if (it != decls.end()) {
            auto jt = it->second.count_table.find(q);
            if (jt != it->second.count_table.end()) {
                env.emplace(name, Rational(jt->second));
                continue;
            }
        }
        throw MissingCountDataError("generator '" + name +
                                    "' has no count at q=" + std::to_string(q));
    }
    return env;
}

std::vector<CountReport> check_trace(const StackExpr& expr,
                                     const std::vector<long long>& qs,
                                     const DeclTable& decls) {
    RingElement elem = normalize(expr, decls);
    std::vector<long long> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<CountReport> out;
    out.reserve(sorted.size());
    for (long long q : sorted) {
        CountReport r;
        r.q = q;
        r.symbolic = point_count(elem, q, count_env(elem, q, decls));
        r.compositional = mu_compositional(expr, q, decls);
        r.agree = r.symbolic == r.compositional;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace msc
