#include "dgh/rigidity.hpp"

#include <map>

#include "dgh/errors.hpp"

namespace dgh {

GradedMap nat_component(const NatEndo& eta, const Comodule& C) {
    return coaction_component(C, eta.alpha, eta.A);
}

GradedMap extract_alpha(const GradedMap& regular_component, const HopfData& B, const CdgAlgebra& A) {
    return chain(left_unitor(A.space), tmap(B.eps, id(A.space)), frak_q(regular_component, A));
}

Report tensor_nat_report(const NatEndo& eta, const std::vector<ProbePair>& probes) {
    Report r;
    r.title = "tensor naturality of " + eta.B.name + " -> " + eta.A.name;
    r.expect("η has degree 0", eta.alpha.degree() == 0, std::to_string(eta.alpha.degree()));
    if (eta.alpha.degree() != 0) return r;
    // Z⁰: each component must be a cocycle, else multiplicativity alone would pass
    auto closed = [&](const Comodule& C) {
        GradedMap dMA = free_differential(C.d, eta.A);
        r.expect_zero("δη = 0 at " + C.name, hom_differential(nat_component(eta, C), dMA, dMA));
    };
    closed(regular_comodule(eta.B));
    Comodule k = trivial_comodule(eta.B);
    r.expect_equal("η^k = I", nat_component(eta, k), id(tensor(k.space, eta.A.space)));
    for (auto& [C, C2] : probes) {
        closed(C);
        closed(C2);
        r.expect_equal("η^{" + C.name + "⊗" + C2.name + "} = η⊗η",
                       nat_component(eta, tensor_comodule(C, C2, eta.B)),
                       tensor_module_morphism(nat_component(eta, C), nat_component(eta, C2), eta.A));
    }
    return r;
}

bool is_tensor_nat(const NatEndo& eta, const std::vector<ProbePair>& probes) {
    return tensor_nat_report(eta, probes).ok();
}

Report naturality_report(const NatEndo& eta, const GradedMap& psi, const Comodule& C, const Comodule& C2) {
    Report r;
    r.title = "naturality along " + C.name + " -> " + C2.name;
    GradedMap pa = tmap(psi, id(eta.A.space));
    Scalar s = parity_sign(eta.alpha.degree() * psi.degree());
    r.expect_equal("η'∘(ψ⊗I) = ±(ψ⊗I)∘η", compose(nat_component(eta, C2), pa),
                   s * compose(pa, nat_component(eta, C)));
    return r;
}

DualComodule dual_comodule(const Comodule& C, const HopfData& B) {
    const GradedMap& S = B.S();
    const Space& M = C.space;
    const std::size_t n = M.dim(), nb = B.space.dim();
    std::vector<std::pair<std::string, int>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back({M.label(i) + "∨", -M.degree(i)});
    Space D(make_atom(C.name + "∨", basis));

    GradedMap d(D, D, 1);
    for (std::size_t j = 0; j < n; ++j)
        for (auto& [i, x] : C.d.col(j)) d.add_to(j, i, Scalar(-parity_sign(M.degree(i))) * x);

    // γ(x_k) = Σ_j x_j⊗γ^j_k; γ∨(e^i) = Σ_k (-1)^{|k|+|i||k|} e^k⊗ς(γ^i_k)
    GradedMap g(D, tensor(D, B.space), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::map<std::size_t, Vec> coeff;  // i -> γ^i_k
        for (auto& [flat, x] : C.gamma.col(k)) coeff[flat / nb].push_back({flat % nb, x});
        long dk = M.degree(k);
        for (auto& [i, v] : coeff) {
            long di = M.degree(i);
            Scalar sign = parity_sign(dk + di * dk);
            for (auto& [b, x] : S.apply(v)) g.add_to(k * nb + b, i, sign * x);
        }
    }

    GradedMap ev(tensor(D, M), Space::ground(), 0), cv(Space::ground(), tensor(M, D), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ev.set(0, i * n + i, 1);
        cv.set(i * n + i, 0, 1);
    }
    return {{C.name + "∨", D, d, g}, ev, cv};
}

RigidPair rigid_pair(const Comodule& C, const DualComodule& D) { return {C.space, D.dual.space, D.ev, D.cv}; }

RigidPair flipped(const RigidPair& p) {
    GradedMap t = braiding(p.object, p.dual);
    return {p.dual, p.object, compose(p.ev, t), compose(t, p.cv)};
}

Report triangle_report(const RigidPair& p) {
    Report r;
    r.title = "duality " + p.object.name() + ", " + p.dual.name();
    const Space &X = p.object, &Xd = p.dual;
    r.expect_equal("ȷ∘(I⊗ev)∘(cv⊗I)∘ι⁻¹ = I",
                   chain(right_unitor(X), tmap(id(X), p.ev), tmap(p.cv, id(X)), left_unitor_inv(X)), id(X));
    r.expect_equal("ι∘(ev⊗I)∘(I⊗cv)∘ȷ⁻¹ = I",
                   chain(left_unitor(Xd), tmap(p.ev, id(Xd)), tmap(id(Xd), p.cv), right_unitor_inv(Xd)), id(Xd));
    return r;
}

GradedMap dual_morphism(const GradedMap& psi, const RigidPair& src, const RigidPair& tgt) {
    if (psi.source() != src.object || psi.target() != tgt.object)
        throw SpaceMismatch("dual of " + psi.source().name() + " -> " + psi.target().name());
    const Space &Xd = src.dual, &Yd = tgt.dual;
    return chain(left_unitor(Xd), tmap(tgt.ev, id(Xd)), tmap(id(Yd), psi, id(Xd)), tmap(id(Yd), src.cv),
                 right_unitor_inv(Yd));
}

GradedMap S_component(const NatEndo& eta, const Comodule& C, const DualComodule& D) {
    const Space& M = C.space;
    const Space& A = eta.A.space;
    RigidPair dual = flipped(rigid_pair(C, D));  // object M∨, dual M
    const Space& Md = dual.object;
    GradedMap xi = nat_component(eta, D.dual);
    return chain(braiding(A, M), left_unitor(tensor(A, M)), tmap(dual.ev, id(A), id(M)),
                 tmap(id(M), xi, id(M)), tmap(id(M), id(Md), braiding(M, A)), tmap(id(M), dual.cv, id(A)),
                 tmap(right_unitor_inv(M), id(A)));
}

GradedMap S_component(const NatEndo& eta, const Comodule& C) {
    return S_component(eta, C, dual_comodule(C, eta.B));
}

GradedMap sigma_component(const NatEndo& eta, const Comodule& C) {
    const Space& M = C.space;
    const Space& A = eta.A.space;
    GradedMap star = nat_component(eta, star_comodule(eta.B));
    return chain(tmap(right_unitor(M), id(A)), tmap(id(M), eta.B.eps, id(A)), tmap(id(M), star),
                 tmap(C.gamma, id(A)));
}

NatEndo nat_transport(const GradedMap& f, const CdgAlgebra& A2, const NatEndo& eta) {
    if (!verify_algebra_morphism(f, eta.A, A2).ok()) throw NotAlgebraMorphism(eta.A.name + " -> " + A2.name);
    return {eta.B, A2, compose(f, eta.alpha)};
}

Report verify_nat_homotopy_pair(const Convolution& C, const HomotopyPair& hp,
                                const std::vector<Comodule>& singles, const std::vector<ProbePair>& pairs) {
    Report r;
    r.title = "natural homotopy pair " + C.B().name + " -> " + C.A().name;
    if (hp.flavor != Flavor::algebra) {
        r.expect("algebra flavor", false);
        return r;
    }
    const HopfData& B = C.B();
    const CdgAlgebra& A = C.A();
    auto comp = [&](const GradedMap& a, const Comodule& M) { return coaction_component(M, a, A); };
    const std::size_t n = std::max(hp.f.size(), hp.xi.size() + 1);
    NatEndo eta0{B, A, hp.f.coeff(0)};
    r.merge(tensor_nat_report(eta0, pairs), "η(0): ");

    Comodule k = trivial_comodule(B);
    for (std::size_t t = 0; t < hp.xi.size(); ++t)
        r.expect_zero("λ^k = 0 at t^" + std::to_string(t), comp(hp.xi.coeff(t), k));

    std::vector<Comodule> all = singles;
    all.push_back(k);
    for (auto& M : all) {
        GradedMap dMA = free_differential(M.d, A);
        r.expect_zero("δη(0) = 0 at " + M.name, hom_differential(comp(hp.f.coeff(0), M), dMA, dMA));
        for (std::size_t t = 0; t + 1 < n; ++t)
            r.expect_equal("flow at " + M.name + ", t^" + std::to_string(t),
                           Scalar(static_cast<long>(t + 1)) * comp(hp.f.coeff(t + 1), M),
                           hom_differential(comp(hp.xi.coeff(t), M), dMA, dMA));
    }
    for (auto& [M, M2] : pairs) {
        Comodule T = tensor_comodule(M, M2, B);
        for (std::size_t t = 0; t < hp.f.size() + hp.xi.size(); ++t) {
            GradedMap rhs(tensor(T.space, A.space), tensor(T.space, A.space), -1);
            for (std::size_t i = 0; i <= t; ++i) {
                GradedMap l1 = comp(hp.xi.coeff(i), M), e1 = comp(hp.f.coeff(i), M);
                GradedMap l2 = comp(hp.xi.coeff(t - i), M2), e2 = comp(hp.f.coeff(t - i), M2);
                rhs += tensor_module_morphism(l1, e2, A) + tensor_module_morphism(e1, l2, A);
            }
            r.expect_equal("λ^{" + T.name + "} co-Leibniz at t^" + std::to_string(t), comp(hp.xi.coeff(t), T), rhs);
        }
    }
    return r;
}

}  // namespace dgh
