#include "msc/ring.hpp"

#include "msc/errors.hpp"

#include <sstream>

namespace msc {

Poly Denominator::expand() const {
    Poly p = Poly::lefschetz(0); // 1, as a product of zero factors
    if (lef_pow > 0)
        p *= Poly::lefschetz(lef_pow);
    for (const auto& [i, e] : cyclo)
        p *= Poly::cyclo_factor(i).pow(e);
    return p;
}

RingElement::RingElement(Poly numer, Denominator denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
    reduce();
}

void RingElement::reduce() {
    if (numer_.is_zero()) {
        denom_ = Denominator{};
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        if (denom_.lef_pow > 0) {
            if (auto q = numer_.divide_exact(Poly::lefschetz(1))) {
                numer_ = std::move(*q);
                --denom_.lef_pow;
                changed = true;
                continue;
            }
        }
        // Largest factor first: L^j-1 divides L^i-1 for j | i, so cancelling
        // small factors first could shred a larger factor that is present
        // whole and leave a needlessly unreduced fraction.
        for (auto it = denom_.cyclo.rbegin(); it != denom_.cyclo.rend(); ++it) {
            if (auto q = numer_.divide_exact(Poly::cyclo_factor(it->first))) {
                numer_ = std::move(*q);
                if (--it->second == 0)
                    denom_.cyclo.erase(std::next(it).base());
                changed = true;
                break;
            }
        }
    }
}

std::string RingElement::str() const {
    if (denom_.empty())
        return numer_.str();
    std::ostringstream os;
    const bool wrap = numer_.terms().size() > 1;
    os << (wrap ? "(" : "") << numer_.str() << (wrap ? ")" : "") << " / [";
    bool first = true;
    if (denom_.lef_pow > 0) {
        os << "L^" << denom_.lef_pow;
        first = false;
    }
    for (const auto& [i, e] : denom_.cyclo) {
        if (!first)
            os << " * ";
        os << "(L^" << i << "-1)^" << e;
        first = false;
    }
    os << "]";
    return os.str();
}

namespace {

// b may only differ from a by extra factors; returns the product of factors
// in `big` missing from `small`.
Poly complement_factors(const Denominator& big, const Denominator& small) {
    Poly p(Int(1));
    if (big.lef_pow > small.lef_pow)
        p *= Poly::lefschetz(big.lef_pow - small.lef_pow);
    for (const auto& [i, e] : big.cyclo) {
        auto it = small.cyclo.find(i);
        unsigned have = it == small.cyclo.end() ? 0 : it->second;
        if (e > have)
            p *= Poly::cyclo_factor(i).pow(e - have);
    }
    return p;
}

Denominator denom_lcm(const Denominator& a, const Denominator& b) {
    Denominator out;
    out.lef_pow = std::max(a.lef_pow, b.lef_pow);
    out.cyclo = a.cyclo;
    for (const auto& [i, e] : b.cyclo) {
        auto& slot = out.cyclo[i];
        slot = std::max(slot, e);
    }
    return out;
}

Denominator denom_product(const Denominator& a, const Denominator& b) {
    Denominator out = a;
    out.lef_pow += b.lef_pow;
    for (const auto& [i, e] : b.cyclo)
        out.cyclo[i] += e;
    return out;
}

} // namespace

RingElement rc_add(const RingElement& a, const RingElement& b) {
    Denominator lcm = denom_lcm(a.denom(), b.denom());
    Poly numer = a.numer() * complement_factors(lcm, a.denom()) +
                 b.numer() * complement_factors(lcm, b.denom());
    return RingElement(std::move(numer), std::move(lcm));
}

RingElement rc_neg(const RingElement& a) {
    return RingElement(-a.numer(), a.denom());
}

RingElement rc_sub(const RingElement& a, const RingElement& b) {
    return rc_add(a, rc_neg(b));
}

RingElement rc_mul(const RingElement& a, const RingElement& b) {
    return RingElement(a.numer() * b.numer(),
                       denom_product(a.denom(), b.denom()));
}

bool rc_eq(const RingElement& a, const RingElement& b) {
    return a.numer() * b.denom_poly() == b.numer() * a.denom_poly();
}

RingElement rc_invert(const RingElement& a) {
    if (a.is_zero())
        throw NotAUnitError("zero is not a unit");
    Poly n = a.numer();
    Denominator inv_denom;
    while (auto q = n.divide_exact(Poly::lefschetz(1))) {
        n = std::move(*q);
        ++inv_denom.lef_pow;
    }
    // Peel L^i-1 factors from the top degree down. Descending order makes
    // greedy peeling exact: the largest factor present divides no smaller
    // one, while ascending order would let L-1 split L^2-1 into (L-1)(L+1)
    // and strand the unit test on a non-unit residue.
    for (unsigned i = n.lef_degree(); i >= 1; --i) {
        while (auto q = n.divide_exact(Poly::cyclo_factor(i))) {
            n = std::move(*q);
            ++inv_denom.cyclo[i];
        }
    }
    auto sign = n.as_plus_minus_one();
    if (!sign)
        throw NotAUnitError("numerator " + a.numer().str() +
                            " is not a product of L and L^i-1 factors");
    Poly inv_numer = a.denom_poly();
    if (*sign < 0)
        inv_numer = -inv_numer;
    return RingElement(std::move(inv_numer), std::move(inv_denom));
}

Rational rc_specialize(const RingElement& a, const Rational& q,
                       const std::map<std::string, Rational>& env) {
    const Denominator& d = a.denom();
    if (d.lef_pow > 0 && q == 0)
        throw DenominatorVanishesError("L = 0 kills denominator factor L");
    Rational den(1);
    den *= rational_pow(q, d.lef_pow);
    for (const auto& [i, e] : d.cyclo) {
        Rational f = rational_pow(q, i) - 1;
        if (f == 0)
            throw DenominatorVanishesError("q^" + std::to_string(i) +
                                           " = 1 kills denominator factor L^" +
                                           std::to_string(i) + "-1");
        den *= rational_pow(f, e);
    }
    return a.numer().evaluate(q, env) / den;
}

} // namespace msc
