#pragma once

#include "msc/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace msc {

// Multivariate integer polynomial in expanded form, kept deliberately
// separate from the symbolic layer: the oracle must not share code with the
// machinery it checks.
struct OraclePoly {
    struct Term {
        Int coeff;
        // (variable index, exponent), indices strictly increasing
        std::vector<std::pair<int, unsigned>> powers;
    };
    std::vector<Term> terms;

    int max_var() const; // -1 when constant
};

// Affine variety cut out by simultaneous equations in F_p^nvars.
struct VarietyPresentation {
    int nvars = 0;
    std::vector<OraclePoly> equations;
};

// Prime field F_p, p <= 101.
struct FieldSpec {
    long long p;
    explicit FieldSpec(long long p_);
};

inline constexpr long long kDefaultEnumGuard = 100'000'000;

// Number of solutions in F_p^nvars of all equations simultaneously, by full
// enumeration. Throws TooLargeError when p^nvars exceeds the guard.
long long enumerate_points(const VarietyPresentation& v, const FieldSpec& f,
                           long long guard = kDefaultEnumGuard);

// |GL_n(F_p)| by enumerating all n x n matrices and testing the determinant.
// Bounds: n <= 3, p <= 7.
long long gl_order(int n, const FieldSpec& f);

// Homotopy cardinality |X(F_p)| / |GL_r(F_p)| of the quotient groupoid;
// r = 0 means no quotient (plain count).
Rational groupoid_count(const VarietyPresentation& v, int r, const FieldSpec& f,
                        long long guard = kDefaultEnumGuard);

// Parses `variety NAME vars n { poly ; ... }` blocks; polynomials use
// variables x0..x{n-1}, integer literals and + - * ^. Comments run from '#'
// to end of line.
std::map<std::string, VarietyPresentation> parse_varieties(const std::string& text);

} // namespace msc
