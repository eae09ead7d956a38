#pragma once

#include <utility>
#include <vector>

#include "dgh/comodules.hpp"

namespace dgh {

// A natural endomorphism of ω⊗A, represented by α: B -> A.
struct NatEndo {
    HopfData B;
    CdgAlgebra A;
    GradedMap alpha;
};

// (I⊗m_A)∘(I⊗α⊗I)∘(γ⊗I)
GradedMap nat_component(const NatEndo& eta, const Comodule& C);

// ι_A∘(ε⊗I)∘q(η^B), from the component at the regular comodule
GradedMap extract_alpha(const GradedMap& regular_component, const HopfData& B, const CdgAlgebra& A);

using ProbePair = std::pair<Comodule, Comodule>;

// Degree 0, closed, η^k = I and η^{M⊗M'} = η^M ⊗_{m_A} η^{M'} on every probe pair.
Report tensor_nat_report(const NatEndo& eta, const std::vector<ProbePair>& probes);
bool is_tensor_nat(const NatEndo& eta, const std::vector<ProbePair>& probes);

// η^{M'}∘(ψ⊗I) = (-1)^{|η||ψ|} (ψ⊗I)∘η^M
Report naturality_report(const NatEndo& eta, const GradedMap& psi, const Comodule& C, const Comodule& C2);

// Object with a chosen dual: ev: X∨⊗X -> k, cv: k -> X⊗X∨.
struct RigidPair {
    Space object, dual;
    GradedMap ev, cv;
};

struct DualComodule {
    Comodule dual;
    GradedMap ev, cv;
};

DualComodule dual_comodule(const Comodule& C, const HopfData& B);
RigidPair rigid_pair(const Comodule& C, const DualComodule& D);
// M∨ with M as its dual: ev_{M∨} = ev∘τ, cv_{M∨} = τ∘cv
RigidPair flipped(const RigidPair& p);

Report triangle_report(const RigidPair& p);

// ψ∨ = ι∘(ev'⊗I)∘(I⊗ψ⊗I)∘(I⊗cv)∘ȷ⁻¹ : X'∨ -> X∨
GradedMap dual_morphism(const GradedMap& psi, const RigidPair& src, const RigidPair& tgt);

GradedMap S_component(const NatEndo& eta, const Comodule& C, const DualComodule& D);
GradedMap S_component(const NatEndo& eta, const Comodule& C);
// (ȷ⊗I)∘(I⊗ε⊗I)∘(I⊗η^{B*})∘(γ⊗I)
GradedMap sigma_component(const NatEndo& eta, const Comodule& C);

// α' = f∘α; throws NotAlgebraMorphism.
NatEndo nat_transport(const GradedMap& f, const CdgAlgebra& A2, const NatEndo& eta);

// (η̆(g(t)), η̆(χ(t))) as a homotopy pair of tensor natural endomorphisms, checked on probes.
Report verify_nat_homotopy_pair(const Convolution& C, const HomotopyPair& hp,
                                const std::vector<Comodule>& singles, const std::vector<ProbePair>& pairs);

}  // namespace dgh
