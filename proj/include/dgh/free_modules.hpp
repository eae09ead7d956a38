#pragma once

#include <optional>
#include <vector>

#include "dgh/structures.hpp"

namespace dgh {

// Free right dg-modules M⊗A with action I_M⊗m_A. Maps between them are plain
// GradedMaps M⊗A -> N⊗A; M and N are read off by stripping the trailing A.

// Drops one trailing copy of `suffix` from the factor list of s.
Space strip_suffix(const Space& s, const Space& suffix);

// p(α) = (I_N⊗m_A)∘(α⊗I_A) for α: M -> N⊗A
GradedMap frak_p(const GradedMap& alpha, const CdgAlgebra& A);
// q(φ) = φ∘(I_M⊗u_A)∘ȷ⁻¹ for φ: M⊗A -> N⊗A
GradedMap frak_q(const GradedMap& phi, const CdgAlgebra& A);
// r(φ) = φ∘(I_M⊗m_A) - (I_N⊗m_A)∘(φ⊗I_A)
GradedMap frak_r(const GradedMap& phi, const CdgAlgebra& A);
// s(β) = β∘(I_M⊗u_A⊗I_A)∘(ȷ⁻¹⊗I_A) for β: M⊗A⊗A -> N⊗A
GradedMap frak_s(const GradedMap& beta, const CdgAlgebra& A);

bool is_module_morphism(const GradedMap& phi, const CdgAlgebra& A);

// Differential on M⊗A.
GradedMap free_differential(const GradedMap& dM, const CdgAlgebra& A);

// φ⊗_{m_A}φ' = (I⊗I⊗m_A)∘(I_N⊗τ⊗I_A)∘(q(φ)⊗φ')
GradedMap tensor_module_morphism(const GradedMap& phi, const GradedMap& phi2, const CdgAlgebra& A);

// p'((I_M⊗f)∘q(φ)): moves a module map over A to one over A'.
GradedMap transport_endo(const GradedMap& f, const CdgAlgebra& A, const CdgAlgebra& A2,
                         const GradedMap& phi);

// Basis of Hom_{m_A}(M⊗A, N⊗A)^deg, the p-images of elementary maps M -> N⊗A.
std::vector<GradedMap> module_hom_basis(const Space& M, const Space& N, const CdgAlgebra& A, int deg);

// λ in Hom_{m_A}^{-1} with d λ = φ̃ - φ, if any.
std::optional<GradedMap> module_homotopy(const GradedMap& phi, const GradedMap& phit,
                                         const GradedMap& dM, const GradedMap& dN,
                                         const CdgAlgebra& A);
bool homotopy_class_equal(const GradedMap& phi, const GradedMap& phit, const GradedMap& dM,
                          const GradedMap& dN, const CdgAlgebra& A);

// φ∘ψ - (-1)^{|φ||ψ|} ψ∘φ
GradedMap commutator(const GradedMap& phi, const GradedMap& psi);

// The three exactness identities, checked on every elementary map of every degree.
Report verify_pqrs(const Space& M, const Space& N, const CdgAlgebra& A);

}  // namespace dgh
