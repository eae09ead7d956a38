#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgh/convolution.hpp"
#include "dgh/free_modules.hpp"

namespace dgh {

// Right dg-comodule (M, d, γ: M -> M⊗B).
struct Comodule {
    std::string name;
    Space space;
    GradedMap d, gamma;

    CochainComplex complex() const { return {space, d}; }
};

Report verify_comodule(const Comodule& C, const HopfData& B);

enum class ComoduleKind { trivial, regular, cofree, star, point };

// cofree and point need a complex M; star needs the antipode.
Comodule standard_comodule(ComoduleKind kind, const HopfData& B,
                           const std::optional<CochainComplex>& M = std::nullopt);
Comodule trivial_comodule(const HopfData& B);
Comodule regular_comodule(const HopfData& B);
Comodule cofree_comodule(const CochainComplex& M, const HopfData& B);
Comodule star_comodule(const HopfData& B);
Comodule point_comodule(const CochainComplex& M, const HopfData& B);

// γ = (I⊗I⊗m_B)∘(I⊗τ⊗I)∘(γ^M⊗γ^N)
Comodule tensor_comodule(const Comodule& C, const Comodule& C2, const HopfData& B);

Report comodule_morphism_report(const GradedMap& psi, const Comodule& C, const Comodule& C2,
                                const HopfData& B);
bool verify_comodule_morphism(const GradedMap& psi, const Comodule& C, const Comodule& C2,
                              const HopfData& B);

// (I⊗m_A)∘(I⊗α⊗I)∘(γ⊗I_A): M⊗A -> M⊗A, for any α: B -> A.
GradedMap coaction_component(const Comodule& C, const GradedMap& alpha, const CdgAlgebra& A);

// Same formula, restricted to group elements.
GradedMap rep_from_comodule(const Comodule& C, const HopfData& B, const GradedMap& g,
                            const CdgAlgebra& A);

// A representation, stored through its universal element ρ(I_B) on M⊗B.
struct Representation {
    std::string name;
    Space space;
    GradedMap d, universal;
};

Representation representation_of(const Comodule& C, const HopfData& B);
Comodule comodule_from_rep(const Representation& R, const HopfData& B);
// ρ_A(g) = p((I_M⊗g)∘q(ρ_B(I_B)))
GradedMap rep_component(const Representation& R, const HopfData& B, const GradedMap& g,
                        const CdgAlgebra& A);

struct Subcomodule {
    Comodule sub;
    GradedMap inclusion;     // sub -> ambient
    unsigned rounds = 0;     // closure passes until nothing new appeared
    bool one_step_closed = false;  // span{mⁱ, d mⁱ} already closed
    Report checks;
};

// Smallest graded subcomodule containing m.
Subcomodule finite_subcomodule(const Comodule& C, const Vec& m, const HopfData& B);

}  // namespace dgh
