#pragma once

#include "msc/lang.hpp"
#include "msc/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace msc {

// Structural evaluation of a stack expression into the localized ring:
//   pt -> 1, A(n) -> L^n, Gm -> L-1, P(n) -> sum L^i,
//   GL(n) -> L^{n(n-1)/2} * prod_{i=1..n} (L^i - 1),
//   B GL(n) -> its inverse, B Gm -> 1/(L-1), K(Ga,n) -> L^{(-1)^n},
//   T(n) -> (L-1)^n, [E / GL(r)] -> value(E) * [GL(r)]^{-1},
//   union -> +, product/fibration -> *, complement -> -, inv -> rc_invert,
//   generator -> declared class polynomial if present, else its symbol.
RingElement normalize(const StackExpr& expr, const DeclTable& decls = {});
inline RingElement normalize(const ExprPtr& expr, const DeclTable& decls = {}) {
    return normalize(*expr, decls);
}

// Normalizes each binding in order. Results are reported in source order.
std::vector<std::pair<std::string, RingElement>> normalize_program(const Program& p);

} // namespace msc
