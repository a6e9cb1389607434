#include "msc/lang.hpp"

#include <stdexcept>

namespace msc {

bool StackExpr::operator==(const StackExpr& o) const {
    if (kind != o.kind || arg != o.arg || name != o.name) return false;
    if (children.size() != o.children.size()) return false;
    for (size_t i = 0; i < children.size(); ++i)
        if (!(*children[i] == *o.children[i])) return false;
    return true;
}

const char* kind_name(StackExpr::Kind k) {
    using K = StackExpr::Kind;
    switch (k) {
    case K::Point: return "Point";
    case K::AffineSpace: return "AffineSpace";
    case K::MultiplicativeGroup: return "MultiplicativeGroup";
    case K::ProjectiveSpace: return "ProjectiveSpace";
    case K::GeneralLinear: return "GeneralLinear";
    case K::Torus: return "Torus";
    case K::ClassifyingGL: return "ClassifyingGL";
    case K::ClassifyingGm: return "ClassifyingGm";
    case K::EilenbergMacLaneGa: return "EilenbergMacLaneGa";
    case K::GenRef: return "GenRef";
    case K::DisjointUnion: return "DisjointUnion";
    case K::Product: return "Product";
    case K::Complement: return "Complement";
    case K::QuotientByGL: return "QuotientByGL";
    case K::Fibration: return "Fibration";
    case K::Inverse: return "Inverse";
    }
    return "?";
}

namespace {

ExprPtr make(StackExpr::Kind k, int arg = 0, std::string name = {},
             std::vector<ExprPtr> children = {}) {
    for (const auto& c : children)
        if (!c) throw std::invalid_argument("null child expression");
    auto e = std::make_shared<StackExpr>();
    e->kind = k;
    e->arg = arg;
    e->name = std::move(name);
    e->children = std::move(children);
    return e;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

ExprPtr point() { return make(StackExpr::Kind::Point); }

ExprPtr affine_space(int n) {
    require(n >= 0, "A(n) needs n >= 0");
    return make(StackExpr::Kind::AffineSpace, n);
}

ExprPtr multiplicative_group() { return make(StackExpr::Kind::MultiplicativeGroup); }

ExprPtr projective_space(int n) {
    require(n >= 0, "P(n) needs n >= 0");
    return make(StackExpr::Kind::ProjectiveSpace, n);
}

ExprPtr general_linear(int n) {
    require(n >= 1, "GL(n) needs n >= 1");
    return make(StackExpr::Kind::GeneralLinear, n);
}

ExprPtr torus(int n) {
    require(n >= 1, "T(n) needs n >= 1");
    return make(StackExpr::Kind::Torus, n);
}

ExprPtr classifying_gl(int n) {
    require(n >= 1, "B GL(n) needs n >= 1");
    return make(StackExpr::Kind::ClassifyingGL, n);
}

ExprPtr classifying_gm() { return make(StackExpr::Kind::ClassifyingGm); }

ExprPtr eilenberg_maclane_ga(int n) {
    require(n >= 1, "K(Ga,n) needs n >= 1");
    return make(StackExpr::Kind::EilenbergMacLaneGa, n);
}

ExprPtr gen_ref(std::string name) {
    require(!name.empty(), "generator reference needs a name");
    return make(StackExpr::Kind::GenRef, 0, std::move(name));
}

ExprPtr disjoint_union(std::vector<ExprPtr> parts) {
    require(parts.size() >= 2, "disjoint union needs >= 2 parts");
    return make(StackExpr::Kind::DisjointUnion, 0, {}, std::move(parts));
}

ExprPtr product(std::vector<ExprPtr> parts) {
    require(parts.size() >= 2, "product needs >= 2 factors");
    return make(StackExpr::Kind::Product, 0, {}, std::move(parts));
}

ExprPtr complement(ExprPtr ambient, ExprPtr closed) {
    return make(StackExpr::Kind::Complement, 0, {},
                {std::move(ambient), std::move(closed)});
}

ExprPtr quotient_by_gl(ExprPtr total, int r) {
    require(r >= 1, "[E / GL(r)] needs r >= 1");
    return make(StackExpr::Kind::QuotientByGL, r, {}, {std::move(total)});
}

ExprPtr fibration(ExprPtr base, ExprPtr fiber) {
    return make(StackExpr::Kind::Fibration, 0, {},
                {std::move(base), std::move(fiber)});
}

ExprPtr inverse(ExprPtr operand) {
    return make(StackExpr::Kind::Inverse, 0, {}, {std::move(operand)});
}

DeclTable Program::decl_table() const {
    DeclTable t;
    for (const auto& d : decls) t.emplace(d.name, d);
    return t;
}

const Binding* Program::find_binding(const std::string& name) const {
    for (const auto& b : bindings)
        if (b.name == name) return &b;
    return nullptr;
}

namespace {

// Precedence for parenthesization: '+'/'-' bind loosest, '*' next,
// everything else (atoms and the bracketed/functional forms) is primary.
// A child is wrapped whenever its level does not exceed its parent's, which
// restores left association and keeps mixed chains unambiguous.
int prec(StackExpr::Kind k) {
    using K = StackExpr::Kind;
    switch (k) {
    case K::DisjointUnion:
    case K::Complement:
        return 1;
    case K::Product:
        return 2;
    default:
        return 3;
    }
}

void render(const StackExpr& e, std::string& out);

void render_child(const StackExpr& parent, const StackExpr& child, std::string& out) {
    bool wrap = prec(child.kind) <= prec(parent.kind);
    if (wrap) out += '(';
    render(child, out);
    if (wrap) out += ')';
}

void render(const StackExpr& e, std::string& out) {
    using K = StackExpr::Kind;
    switch (e.kind) {
    case K::Point: out += "pt"; return;
    case K::AffineSpace: out += "A(" + std::to_string(e.arg) + ")"; return;
    case K::MultiplicativeGroup: out += "Gm"; return;
    case K::ProjectiveSpace: out += "P(" + std::to_string(e.arg) + ")"; return;
    case K::GeneralLinear: out += "GL(" + std::to_string(e.arg) + ")"; return;
    case K::Torus: out += "T(" + std::to_string(e.arg) + ")"; return;
    case K::ClassifyingGL: out += "B GL(" + std::to_string(e.arg) + ")"; return;
    case K::ClassifyingGm: out += "B Gm"; return;
    case K::EilenbergMacLaneGa: out += "K(Ga," + std::to_string(e.arg) + ")"; return;
    case K::GenRef: out += e.name; return;
    case K::DisjointUnion:
        for (size_t i = 0; i < e.children.size(); ++i) {
            if (i) out += " + ";
            render_child(e, *e.children[i], out);
        }
        return;
    case K::Product:
        for (size_t i = 0; i < e.children.size(); ++i) {
            if (i) out += " * ";
            render_child(e, *e.children[i], out);
        }
        return;
    case K::Complement:
        render_child(e, *e.children[0], out);
        out += " - ";
        render_child(e, *e.children[1], out);
        return;
    case K::QuotientByGL:
        out += '[';
        render(*e.children[0], out);
        out += " / GL(" + std::to_string(e.arg) + ")]";
        return;
    case K::Fibration:
        out += "Fib(";
        render(*e.children[0], out);
        out += ", ";
        render(*e.children[1], out);
        out += ')';
        return;
    case K::Inverse:
        out += "inv(";
        render(*e.children[0], out);
        out += ')';
        return;
    }
}

} // namespace

std::string pretty(const StackExpr& e) {
    std::string out;
    render(e, out);
    return out;
}

} // namespace msc
