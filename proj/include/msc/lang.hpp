#pragma once

#include "msc/poly.hpp"
#include "msc/series.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace msc {

struct StackExpr;
using ExprPtr = std::shared_ptr<const StackExpr>;

// One node of a stack-class expression. Nodes are immutable after
// construction and shared freely (bindings referencing earlier bindings
// reuse their subtrees).
struct StackExpr {
    enum class Kind {
        Point,               // the one-point variety
        AffineSpace,         // A^n, n >= 0
        MultiplicativeGroup, // Gm
        ProjectiveSpace,     // P^n, n >= 0
        GeneralLinear,       // GL_n, n >= 1
        Torus,               // Gm^n, n >= 1
        ClassifyingGL,       // B GL_n, n >= 1
        ClassifyingGm,       // B Gm
        EilenbergMacLaneGa,  // K(Ga, n), n >= 1
        GenRef,              // named atomic variety class
        DisjointUnion,       // >= 2 children
        Product,             // >= 2 children
        Complement,          // children = {ambient, closed}
        QuotientByGL,        // children = {total}, arg = r >= 1
        Fibration,           // children = {base, fiber}
        Inverse,             // children = {operand}
    };

    Kind kind;
    int arg = 0;                    // the n or r of parametrized kinds
    std::string name;               // GenRef only
    std::vector<ExprPtr> children;

    bool operator==(const StackExpr& o) const;
};

const char* kind_name(StackExpr::Kind k);

// Factories; each checks the arity stated above and throws
// std::invalid_argument on violation.
ExprPtr point();
ExprPtr affine_space(int n);
ExprPtr multiplicative_group();
ExprPtr projective_space(int n);
ExprPtr general_linear(int n);
ExprPtr torus(int n);
ExprPtr classifying_gl(int n);
ExprPtr classifying_gm();
ExprPtr eilenberg_maclane_ga(int n);
ExprPtr gen_ref(std::string name);
ExprPtr disjoint_union(std::vector<ExprPtr> parts);
ExprPtr product(std::vector<ExprPtr> parts);
ExprPtr complement(ExprPtr ambient, ExprPtr closed);
ExprPtr quotient_by_gl(ExprPtr total, int r);
ExprPtr fibration(ExprPtr base, ExprPtr fiber);
ExprPtr inverse(ExprPtr operand);

// Fiber shapes licensed in a fibration: an affine-scheme-valued atom
// (pt, A(n), Gm, GL(n), T(n), a generator flagged affine) or K(Ga,n).
// Generator affineness is looked up through is_affine_gen.
template <class IsAffineGen>
bool is_licensed_fiber(const StackExpr& e, IsAffineGen&& is_affine_gen) {
    using K = StackExpr::Kind;
    switch (e.kind) {
    case K::Point:
    case K::AffineSpace:
    case K::MultiplicativeGroup:
    case K::GeneralLinear:
    case K::Torus:
    case K::EilenbergMacLaneGa:
        return true;
    case K::GenRef:
        return is_affine_gen(e.name);
    default:
        return false;
    }
}

// A named atomic variety class together with whatever invariant data the
// user attached to it.
struct GeneratorDecl {
    std::string name;
    bool affine = false;
    std::optional<Poly> class_poly;            // polynomial in L only
    std::map<long long, Int> count_table;      // prime power q -> #points
    std::optional<TruncatedSeries> hodge;      // user-facing order units
    int line = 0;
};

using DeclTable = std::map<std::string, GeneratorDecl>;

struct Binding {
    std::string name;
    ExprPtr expr;
    int line = 0;
};

struct Program {
    std::vector<GeneratorDecl> decls;
    std::vector<Binding> bindings; // in source order; later may use earlier

    DeclTable decl_table() const;
    const Binding* find_binding(const std::string& name) const;
};

// Renders an expression in the concrete syntax; parse(pretty(e)) rebuilds a
// structurally equal tree.
std::string pretty(const StackExpr& e);
inline std::string pretty(const ExprPtr& e) { return pretty(*e); }

} // namespace msc
