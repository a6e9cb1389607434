#include "msc/poly.hpp"

#include "msc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace msc {

unsigned Monomial::total_degree() const {
    unsigned d = lef;
    for (const auto& [name, e] : gens)
        d += e;
    return d;
}

Poly::Poly(Int constant) {
    if (constant != 0)
        terms_[Monomial{}] = std::move(constant);
}

Poly Poly::lefschetz(unsigned exp) {
    Poly p;
    p.terms_[Monomial{exp, {}}] = 1;
    return p;
}

Poly Poly::generator(const std::string& name, unsigned exp) {
    Poly p;
    Monomial m;
    if (exp > 0)
        m.gens[name] = exp;
    p.terms_[m] = 1;
    return p;
}

Poly Poly::cyclo_factor(unsigned i) {
    Poly p = lefschetz(i);
    p.add_term(Monomial{}, -1);
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
           terms_.begin()->second == 1;
}

std::optional<int> Poly::as_plus_minus_one() const {
    if (terms_.size() != 1)
        return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (!(m == Monomial{}))
        return std::nullopt;
    if (c == 1)
        return 1;
    if (c == -1)
        return -1;
    return std::nullopt;
}

std::optional<Int> Poly::as_constant() const {
    if (terms_.empty())
        return Int(0);
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{})
        return terms_.begin()->second;
    return std::nullopt;
}

unsigned Poly::lef_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.lef);
    return d;
}

bool Poly::has_generators() const {
    for (const auto& [m, c] : terms_)
        if (!m.gens.empty())
            return true;
    return false;
}

std::set<std::string> Poly::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.gens)
            out.insert(name);
    return out;
}

void Poly::add_term(const Monomial& m, const Int& coeff) {
    if (coeff == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_)
        out.terms_[m] = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            m.lef += mb.lef;
            for (const auto& [name, e] : mb.gens)
                m.gens[name] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly acc(Int(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    // Divisor must be univariate in L, monic, of degree >= 1.
    std::map<unsigned, Int> dcoef;
    for (const auto& [m, c] : divisor.terms_) {
        if (!m.gens.empty())
            return std::nullopt;
        dcoef[m.lef] = c;
    }
    if (dcoef.empty())
        return std::nullopt;
    const unsigned d = dcoef.rbegin()->first;
    if (d == 0 || dcoef.rbegin()->second != 1)
        return std::nullopt;

    // Long division along the L variable; coefficients are polynomials in
    // the generator symbols.
    using GenPart = std::map<std::map<std::string, unsigned>, Int>;
    std::map<unsigned, GenPart> rem;
    for (const auto& [m, c] : terms_)
        rem[m.lef][m.gens] = c;

    Poly quot;
    while (!rem.empty()) {
        const unsigned m = rem.rbegin()->first;
        if (m < d)
            return std::nullopt;
        GenPart lead = rem.rbegin()->second;
        for (const auto& [g, c] : lead) {
            Monomial qm{m - d, g};
            quot.add_term(qm, c);
        }
        for (const auto& [j, dc] : dcoef) {
            GenPart& slot = rem[m - d + j];
            for (const auto& [g, c] : lead) {
                auto it = slot.find(g);
                if (it == slot.end()) {
                    slot.emplace(g, -dc * c);
                    if (slot[g] == 0)
                        slot.erase(g);
                } else {
                    it->second -= dc * c;
                    if (it->second == 0)
                        slot.erase(it);
                }
            }
            if (slot.empty())
                rem.erase(m - d + j);
        }
    }
    return quot;
}

Rational Poly::evaluate(const Rational& q,
                        const std::map<std::string, Rational>& env) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t(c);
        t *= rational_pow(q, m.lef);
        for (const auto& [name, e] : m.gens) {
            auto it = env.find(name);
            if (it == env.end())
                throw UnboundGeneratorError("unbound generator '" + name + "'");
            t *= rational_pow(it->second, e);
        }
        sum += t;
    }
    return sum;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    // Highest total degree first, L before generator symbols within a degree.
    std::vector<const std::pair<const Monomial, Int>*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        unsigned da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db)
            return da > db;
        if (a->first.lef != b->first.lef)
            return a->first.lef > b->first.lef;
        return a->first.gens < b->first.gens;
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        Int abs = c < 0 ? Int(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;

        std::vector<std::string> parts;
        if (m.lef == 1)
            parts.push_back("L");
        else if (m.lef > 1)
            parts.push_back("L^" + std::to_string(m.lef));
        for (const auto& [name, e] : m.gens)
            parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));

        if (parts.empty()) {
            os << abs.str();
        } else {
            if (abs != 1)
                os << abs.str() << "*";
            for (size_t i = 0; i < parts.size(); ++i)
                os << (i ? "*" : "") << parts[i];
        }
    }
    return os.str();
}

} // namespace msc
