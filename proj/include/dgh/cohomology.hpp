#pragma once

#include <optional>

#include "dgh/structures.hpp"

namespace dgh {

// (H, 0) ⇄ (C, d): q∘p = I_H, p∘q = I - d∘χ - χ∘d.
struct SDR {
    Space H;
    GradedMap p, q, chi;
};

// Per-degree elimination. The pivot order picks the complement W on which χ inverts d;
// cohomology representatives are always taken from the forward kernel basis, with the
// unit first, so that χ∘u = 0 and two orders produce the same H.
SDR compute_sdr(const CochainComplex& C, const std::optional<GradedMap>& unit = std::nullopt,
                const std::string& name = "", PivotOrder order = PivotOrder::forward);

Report verify_sdr(const SDR& s, const CochainComplex& C, const std::optional<GradedMap>& unit = std::nullopt);

// u_H = q∘u, ε_H = ε∘p, m_H = q∘m∘(p⊗p), Δ_H = (q⊗q)∘Δ∘p, ς_H = q∘ς∘p
HopfData induced_hopf_on_H(const HopfData& B, const SDR& s);
CdgAlgebra induced_algebra_on_H(const CdgAlgebra& A, const SDR& s);

// How far p and q are from being structure maps; nonzero entries are expected.
Report sdr_defects(const HopfData& B, const SDR& s);

// Degree-0 part for B concentrated in degrees >= 0. Throws WindowError otherwise.
Report verify_nonneg_reduction(const HopfData& B, const SDR& s);

}  // namespace dgh
