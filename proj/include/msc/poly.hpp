#pragma once

#include "msc/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace msc {

// A monomial L^lef * prod g^e over the Lefschetz class L and named generator
// symbols. Only nonzero generator exponents are stored.
struct Monomial {
    unsigned lef = 0;
    std::map<std::string, unsigned> gens;

    unsigned total_degree() const;
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {
        if (lef != o.lef)
            return lef < o.lef;
        return gens < o.gens;
    }
};

// Element of Z[L, g1, ..., gk]. Terms map monomials to nonzero coefficients;
// a zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant);
    explicit Poly(long long constant) : Poly(Int(constant)) {}

    static Poly lefschetz(unsigned exp = 1);
    static Poly generator(const std::string& name, unsigned exp = 1);
    // L^i - 1
    static Poly cyclo_factor(unsigned i);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // +1 or -1, no generators, no L
    std::optional<int> as_plus_minus_one() const;
    std::optional<Int> as_constant() const;

    unsigned lef_degree() const;
    bool has_generators() const;
    std::set<std::string> symbols() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly pow(unsigned e) const;

    // Exact division by a monic polynomial in L alone (the only divisors the
    // localization ever needs). Returns the quotient, or nothing when the
    // division leaves a remainder.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    // Evaluation at L = q, generators from env. Throws UnboundGeneratorError
    // when a symbol is missing from env.
    Rational evaluate(const Rational& q,
                      const std::map<std::string, Rational>& env = {}) const;

    const std::map<Monomial, Int>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Int& coeff);

    std::string str() const;

private:
    std::map<Monomial, Int> terms_;
};

inline Poly operator*(const Int& c, const Poly& p) { return Poly(c) * p; }

} // namespace msc
