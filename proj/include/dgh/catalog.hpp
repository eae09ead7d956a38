#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgh/structures.hpp"

namespace dgh {

// Exterior Hopf algebra on odd-degree primitive generators, d = 0.
// Basis: monomials ordered by length, then lexicographically ("1", "x", "y", "xy").
HopfData exterior_hopf(const std::string& name, const std::vector<std::pair<std::string, int>>& gens,
                       bool with_antipode = true);

// The ground field as a Hopf algebra.
HopfData ground_hopf();
CdgAlgebra ground_algebra();

// {1, t, dt}: |t| = 0, |dt| = 1, d t = dt, all products of non-units vanish.
CdgAlgebra interval_algebra(const std::string& name = "I");

// (m⊗m)∘(I⊗τ⊗I) on A⊗A'
CdgAlgebra tensor_algebra(const CdgAlgebra& a, const CdgAlgebra& b);

// z0 -> z1 with d z0 = z1, degrees 0 and 1.
CochainComplex small_complex(const std::string& name = "Z");
// one vector of the given degree, zero differential
CochainComplex line_complex(const std::string& name, int degree);

}  // namespace dgh
