#pragma once

#include "msc/lang.hpp"
#include "msc/normalize.hpp"
#include "msc/series.hpp"

#include <vector>

namespace msc {

// A point count computed along both paths at one field size.
struct CountReport {
    long long q = 0;
    Rational symbolic;      // specialization of the normalized class
    Rational compositional; // structural homotopy cardinality
    bool agree = false;
};

// Exact value of the normalized class at L = q, q a prime power >= 2.
// env supplies counts for generator symbols left in the element.
Rational point_count(const RingElement& elem, long long q,
                     const std::map<std::string, Rational>& env = {});

// Homotopy cardinality over F_q computed structurally from the expression,
// never touching the ring layer: affine space contributes q^n, GL(n) its
// group order prod_{i<n}(q^n - q^i), classifying stacks the reciprocal of
// the group order, K(Ga,n) contributes q^{(-1)^n}; unions add, products and
// fibrations multiply, complements subtract, GL(r)-quotients divide by the
// group order. Generator counts come from their declared tables.
Rational mu_compositional(const StackExpr& expr, long long q,
                          const DeclTable& decls = {});
inline Rational mu_compositional(const ExprPtr& expr, long long q,
                                 const DeclTable& decls = {}) {
    return mu_compositional(*expr, q, decls);
}

// Hodge series of the expression through (uv)-power N: normalization
// followed by series expansion, with declared generator series substituted.
TruncatedSeries hodge(const StackExpr& expr, int n, const DeclTable& decls = {});
inline TruncatedSeries hodge(const ExprPtr& expr, int n,
                             const DeclTable& decls = {}) {
    return hodge(*expr, n, decls);
}

// Runs both counting paths at each q and reports agreement; exact
// disagreement at any q falsifies the normalization rules.
std::vector<CountReport> check_trace(const StackExpr& expr,
                                     const std::vector<long long>& qs,
                                     const DeclTable& decls = {});

// Count environment for the generator symbols remaining in elem, drawn from
// the declared tables at q. Throws MissingCountDataError when a needed
// generator has no entry.
std::map<std::string, Rational> count_env(const RingElement& elem, long long q,
                                          const DeclTable& decls);

} // namespace msc
