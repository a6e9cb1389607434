#pragma once

#include "msc/numeric.hpp"
#include "msc/ring.hpp"

#include <map>
#include <string>
#include <utility>

namespace msc {

// Element of Z[[u,v]][u^-1, v^-1] truncated by total degree: every term with
// p+q <= order() is exact, terms above are dropped, and the support is
// bounded below by min_total() <= p+q. Exactness (order) and the support
// bound (min_total) are tracked separately so products only ever report
// coefficients that are provably exact.
class TruncatedSeries {
public:
    // order value meaning "exact at every total degree" (polynomials,
    // monomials); large enough to never be reached, small enough to add.
    static constexpr int kExactOrder = 1 << 28;

    TruncatedSeries() = default; // zero, exact
    static TruncatedSeries zero(int order = kExactOrder);
    static TruncatedSeries monomial(int p, int q, const Int& c,
                                    int order = kExactOrder);
    static TruncatedSeries constant(const Int& c, int order = kExactOrder) {
        return monomial(0, 0, c, order);
    }
    // Assembles a series from explicit coefficients, exact through `order`.
    static TruncatedSeries from_coeffs(std::map<std::pair<int, int>, Int> coeffs,
                                       int order);
    // -(1 + (uv)^i + (uv)^{2i} + ...), the expansion of 1/((uv)^i - 1) whose
    // support is bounded below; exact through `order`.
    static TruncatedSeries cyclo_inverse(unsigned i, int order);

    const std::map<std::pair<int, int>, Int>& coeffs() const { return coeffs_; }
    Int coeff(int p, int q) const;
    int order() const { return order_; }
    int min_total() const { return min_total_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Drops terms above total degree n and lowers the order bound to n.
    void truncate(int n);

    bool operator==(const TruncatedSeries&) const = default;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Int> coeffs_;
    int min_total_ = 0;
    int order_ = kExactOrder;

    void add_coeff(int p, int q, const Int& c);
    friend TruncatedSeries s_add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries s_mul(const TruncatedSeries&, const TruncatedSeries&);
};

TruncatedSeries s_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries s_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Maps a localized ring element into Z[[u,v]][u^-1,v^-1]: L goes to uv,
// generators are substituted from genv, 1/L to (uv)^-1 and 1/(L^i-1) to its
// bounded-below expansion -sum_k (uv)^{ik}. The order n counts powers of uv:
// the result is exact through total degree 2n, so it carries every (uv)^k
// with k <= n. Throws InsufficientOrderError if some generator series is too
// short to guarantee that, UnboundGeneratorError for missing generators.
TruncatedSeries s_expand(const RingElement& elem, int n,
                         const std::map<std::string, TruncatedSeries>& genv = {});

} // namespace msc
