#pragma once

#include "msc/poly.hpp"

#include <map>
#include <string>

namespace msc {

// Denominator multiset over the alphabet {L} union {L^i - 1 : i >= 1},
// stored as exponents. All factors have positive leading coefficient; any
// global sign lives in the numerator.
struct Denominator {
    unsigned lef_pow = 0;
    std::map<unsigned, unsigned> cyclo; // i -> multiplicity of (L^i - 1)

    bool empty() const { return lef_pow == 0 && cyclo.empty(); }
    Poly expand() const;
    bool operator==(const Denominator&) const = default;
};

// Element of Z[L, g1..gk] localized at L and all L^i - 1, kept as a fraction
// numer / denom. The representation is partially reduced: no whole
// denominator factor exactly divides the numerator. There is no canonical
// form (L^i - 1 is reducible); equality is decided by cross-multiplication.
class RingElement {
public:
    RingElement() = default; // zero
    explicit RingElement(Poly numer) : numer_(std::move(numer)) {}
    RingElement(Poly numer, Denominator denom);

    static RingElement zero() { return RingElement(); }
    static RingElement one() { return RingElement(Poly(Int(1))); }
    static RingElement from_int(long long v) { return RingElement(Poly(Int(v))); }
    static RingElement lefschetz(unsigned exp = 1) {
        return RingElement(Poly::lefschetz(exp));
    }
    static RingElement generator(const std::string& name) {
        return RingElement(Poly::generator(name));
    }

    const Poly& numer() const { return numer_; }
    const Denominator& denom() const { return denom_; }
    Poly denom_poly() const { return denom_.expand(); }

    bool is_zero() const { return numer_.is_zero(); }
    std::set<std::string> symbols() const { return numer_.symbols(); }

    std::string str() const;

private:
    Poly numer_;
    Denominator denom_;

    void reduce();
};

RingElement rc_add(const RingElement& a, const RingElement& b);
RingElement rc_sub(const RingElement& a, const RingElement& b);
RingElement rc_neg(const RingElement& a);
RingElement rc_mul(const RingElement& a, const RingElement& b);
bool rc_eq(const RingElement& a, const RingElement& b);

// Inverse of a unit. Units are recognized by exhaustively dividing the
// numerator by L and by L^i - 1 (i up to its L-degree); the element is a
// unit iff the residue is +-1. Throws NotAUnitError otherwise.
RingElement rc_invert(const RingElement& a);

// Exact value at L = q with generator values from env. Throws
// DenominatorVanishesError when q or some q^i - 1 kills a present
// denominator factor, UnboundGeneratorError for missing symbols.
Rational rc_specialize(const RingElement& a, const Rational& q,
                       const std::map<std::string, Rational>& env = {});

} // namespace msc
