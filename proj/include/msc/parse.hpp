#pragma once

#include "msc/lang.hpp"

#include <string>

namespace msc {

// Parses a full program (generator declarations and let-bindings).
// Binding references expand to the bound subtree; generator references stay
// symbolic GenRef nodes. Declared data is cross-checked at load.
Program parse(const std::string& text);

// Parses a single bare expression (no let/gen). Identifiers that are not
// builtin forms become generator references; `decls` supplies affine flags
// for fiber validation.
ExprPtr parse_expression(const std::string& text, const DeclTable& decls = {});

} // namespace msc
