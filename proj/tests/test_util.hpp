#pragma once

#include "msc/lang.hpp"
#include "msc/ring.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace msc;

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// ---- random polynomials / ring elements --------------------------------

inline Poly random_poly(std::mt19937_64& rng, bool with_gens) {
    static const std::string names[] = {"X", "Y"};
    Poly p;
    int terms = static_cast<int>(pick(rng, 0, 4));
    for (int t = 0; t < terms; ++t) {
        long long c = pick(rng, -9, 9);
        if (c == 0) c = 1;
        Poly term{Int(c)};
        term *= Poly::lefschetz(static_cast<unsigned>(pick(rng, 0, 4)));
        if (with_gens && pick(rng, 0, 2) == 0)
            term *= Poly::generator(names[pick(rng, 0, 1)],
                                    static_cast<unsigned>(pick(rng, 1, 2)));
        p += term;
    }
    return p;
}

inline Denominator random_denominator(std::mt19937_64& rng) {
    Denominator d;
    d.lef_pow = static_cast<unsigned>(pick(rng, 0, 2));
    for (unsigned i = 1; i <= 3; ++i) {
        unsigned e = static_cast<unsigned>(pick(rng, 0, 2));
        if (e > 0) d.cyclo[i] = e;
    }
    return d;
}

inline RingElement random_element(std::mt19937_64& rng, bool with_gens) {
    return RingElement(random_poly(rng, with_gens), random_denominator(rng));
}

// ---- random stack expressions -------------------------------------------
//
// Unit-valued expressions must survive inv() at every nesting level. Partial
// reduction cancels whole denominator factors into the numerator, and once
// that digs into a larger factor (say (L^2-1)/(L-1) -> L+1) the numerator is
// no longer a product of L and L^i-1 factors, so inversion rejects it. To
// keep every intermediate invertible, a generated unit keeps all its L^i-1
// factors on one side of the fraction: "direct" atoms carry them in the
// numerator, "inverse" atoms in the denominator, and pure powers of L are
// safe on either side.

inline ExprPtr random_unit_atom(std::mt19937_64& rng, bool inverse_side) {
    if (inverse_side) {
        switch (pick(rng, 0, 3)) {
        case 0: return classifying_gl(static_cast<int>(pick(rng, 1, 3)));
        case 1: return classifying_gm();
        default: return eilenberg_maclane_ga(static_cast<int>(pick(rng, 1, 4)));
        }
    }
    switch (pick(rng, 0, 5)) {
    case 0: return affine_space(static_cast<int>(pick(rng, 0, 3)));
    case 1: return general_linear(static_cast<int>(pick(rng, 1, 3)));
    case 2: return torus(static_cast<int>(pick(rng, 1, 3)));
    case 3: return multiplicative_group();
    default: return eilenberg_maclane_ga(static_cast<int>(pick(rng, 1, 4)));
    }
}

// Unit-valued expression (products, inverses, and fibrations of unit atoms)
// whose L^i-1 factors all live on the side selected by inverse_side.
inline ExprPtr random_unit_expr_side(std::mt19937_64& rng, int depth,
                                     bool inverse_side) {
    if (depth <= 0 || pick(rng, 0, 2) == 0)
        return random_unit_atom(rng, inverse_side);
    switch (pick(rng, 0, 2)) {
    case 0: {
        std::vector<ExprPtr> f;
        int n = static_cast<int>(pick(rng, 2, 3));
        for (int i = 0; i < n; ++i)
            f.push_back(random_unit_expr_side(rng, depth - 1, inverse_side));
        return product(std::move(f));
    }
    case 1:
        return inverse(random_unit_expr_side(rng, depth - 1, !inverse_side));
    default: {
        // The fiber slot only accepts affine shapes; pt and A(n) are also
        // free of L^i-1 factors, so the product stays one-sided.
        ExprPtr fib = pick(rng, 0, 1) == 0
                          ? point()
                          : affine_space(static_cast<int>(pick(rng, 0, 3)));
        return fibration(random_unit_expr_side(rng, depth - 1, inverse_side),
                         std::move(fib));
    }
    }
}

inline ExprPtr random_unit_expr(std::mt19937_64& rng, int depth) {
    return random_unit_expr_side(rng, depth, pick(rng, 0, 1) == 1);
}

// Fiber shapes accepted by the parser without any declaration table.
inline ExprPtr random_fiber(std::mt19937_64& rng) {
    switch (pick(rng, 0, 5)) {
    case 0: return point();
    case 1: return affine_space(static_cast<int>(pick(rng, 0, 3)));
    case 2: return multiplicative_group();
    case 3: return general_linear(static_cast<int>(pick(rng, 1, 3)));
    case 4: return torus(static_cast<int>(pick(rng, 1, 3)));
    default: return eilenberg_maclane_ga(static_cast<int>(pick(rng, 1, 4)));
    }
}

// General random expression. Every tree this produces parses back from its
// pretty form and normalizes without error (inverses wrap units only).
inline ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    static const std::string gen_names[] = {"X", "Y", "Z0", "W"};
    if (depth <= 0 || pick(rng, 0, 3) == 0) {
        switch (pick(rng, 0, 10)) {
        case 0: return point();
        case 1: return affine_space(static_cast<int>(pick(rng, 0, 3)));
        case 2: return multiplicative_group();
        case 3: return projective_space(static_cast<int>(pick(rng, 0, 3)));
        case 4: return general_linear(static_cast<int>(pick(rng, 1, 3)));
        case 5: return torus(static_cast<int>(pick(rng, 1, 3)));
        case 6: return classifying_gl(static_cast<int>(pick(rng, 1, 3)));
        case 7: return classifying_gm();
        case 8: return eilenberg_maclane_ga(static_cast<int>(pick(rng, 1, 4)));
        default: return gen_ref(gen_names[pick(rng, 0, 3)]);
        }
    }
    switch (pick(rng, 0, 5)) {
    case 0: {
        std::vector<ExprPtr> parts;
        int n = static_cast<int>(pick(rng, 2, 3));
        for (int i = 0; i < n; ++i) parts.push_back(random_expr(rng, depth - 1));
        return disjoint_union(std::move(parts));
    }
    case 1: {
        std::vector<ExprPtr> parts;
        int n = static_cast<int>(pick(rng, 2, 3));
        for (int i = 0; i < n; ++i) parts.push_back(random_expr(rng, depth - 1));
        return product(std::move(parts));
    }
    case 2:
        return complement(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3:
        return quotient_by_gl(random_expr(rng, depth - 1),
                              static_cast<int>(pick(rng, 1, 3)));
    case 4:
        return fibration(random_expr(rng, depth - 1), random_fiber(rng));
    default:
        return inverse(random_unit_expr(rng, depth - 1));
    }
}

} // namespace testutil
