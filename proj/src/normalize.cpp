#include "msc/normalize.hpp"

#include "msc/errors.hpp"

namespace msc {

namespace {

// L^{n(n-1)/2} * prod_{i=1..n} (L^i - 1)
RingElement gl_class(int n) {
    Poly p = Poly::lefschetz(static_cast<unsigned>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) p *= Poly::cyclo_factor(static_cast<unsigned>(i));
    return RingElement(std::move(p));
}

} // namespace

RingElement normalize(const StackExpr& e, const DeclTable& decls) {
    using K = StackExpr::Kind;
    switch (e.kind) {
    case K::Point:
        return RingElement::one();
    case K::AffineSpace:
        return RingElement::lefschetz(static_cast<unsigned>(e.arg));
    case K::MultiplicativeGroup:
        return RingElement(Poly::cyclo_factor(1));
    case K::ProjectiveSpace: {
        Poly p;
        for (int i = 0; i <= e.arg; ++i) p += Poly::lefschetz(static_cast<unsigned>(i));
        return RingElement(std::move(p));
    }
    case K::GeneralLinear:
        return gl_class(e.arg);
    case K::Torus:
        return RingElement(Poly::cyclo_factor(1).pow(static_cast<unsigned>(e.arg)));
    case K::ClassifyingGL:
        return rc_invert(gl_class(e.arg));
    case K::ClassifyingGm:
        return rc_invert(RingElement(Poly::cyclo_factor(1)));
    case K::EilenbergMacLaneGa:
        // [K(Ga,n)] = L^{(-1)^n}
        return e.arg % 2 == 0 ? RingElement::lefschetz(1)
                              : rc_invert(RingElement::lefschetz(1));
    case K::GenRef: {
        auto it = decls.find(e.name);
        if (it != decls.end() && it->second.class_poly)
            return RingElement(*it->second.class_poly);
        return RingElement::generator(e.name);
    }
    case K::DisjointUnion: {
        RingElement acc = normalize(*e.children[0], decls);
        for (size_t i = 1; i < e.children.size(); ++i)
            acc = rc_add(acc, normalize(*e.children[i], decls));
        return acc;
    }
    case K::Product: {
        RingElement acc = normalize(*e.children[0], decls);
        for (size_t i = 1; i < e.children.size(); ++i)
            acc = rc_mul(acc, normalize(*e.children[i], decls));
        return acc;
    }
    case K::Complement:
        return rc_sub(normalize(*e.children[0], decls),
                      normalize(*e.children[1], decls));
    case K::QuotientByGL:
        return rc_mul(normalize(*e.children[0], decls), rc_invert(gl_class(e.arg)));
    case K::Fibration:
        return rc_mul(normalize(*e.children[0], decls),
                      normalize(*e.children[1], decls));
    case K::Inverse:
        return rc_invert(normalize(*e.children[0], decls));
    }
    throw Error("unreachable expression kind");
}

std::vector<std::pair<std::string, RingElement>> normalize_program(const Program& p) {
    DeclTable decls = p.decl_table();
    std::vector<std::pair<std::string, RingElement>> out;
    out.reserve(p.bindings.size());
    for (const auto& b : p.bindings) out.emplace_back(b.name, normalize(b.expr, decls));
    return out;
}

} // namespace msc
