#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgh/core.hpp"
#include "dgh/report.hpp"

namespace dgh {

struct CochainComplex {
    Space space;
    GradedMap d;
};

struct CdgAlgebra {
    std::string name;
    Space space;
    GradedMap d, u, m;  // u: k -> A, m: A⊗A -> A

    CochainComplex complex() const { return {space, d}; }
};

struct DgCoalgebra {
    std::string name;
    Space space;
    GradedMap d, eps, delta;  // eps: B -> k, delta: B -> B⊗B
};

// One bundle for bialgebras and Hopf algebras; antipode may be absent.
struct HopfData {
    std::string name;
    Space space;
    GradedMap d, u, m, eps, delta;
    std::optional<GradedMap> antipode;

    CdgAlgebra algebra() const { return {name, space, d, u, m}; }
    DgCoalgebra coalgebra() const { return {name, space, d, eps, delta}; }
    const GradedMap& S() const;  // throws NotHopf if absent
};

enum class StructureKind { algebra, coalgebra, bialgebra, hopf };

GradedMap tensor_differential(const GradedMap& dV, const GradedMap& dW);

Report verify_algebra(const CdgAlgebra& a);
Report verify_coalgebra(const DgCoalgebra& c);
Report verify_structure(const HopfData& h, StructureKind kind);
Report verify_antipode_properties(const HopfData& h);

// Unique antipode of a bialgebra, or nothing. Throws NotABialgebra on bad input.
std::optional<GradedMap> solve_antipode(const HopfData& bialgebra);

enum class MorphismKind { algebra, coalgebra, hopf };
Report verify_algebra_morphism(const GradedMap& f, const CdgAlgebra& src, const CdgAlgebra& dst);
Report verify_morphism(const GradedMap& f, const HopfData& src, const HopfData& dst,
                       MorphismKind kind);

// (m⊗m)∘(I⊗τ⊗I) and (I⊗τ⊗I)∘(Δ⊗Δ)
GradedMap tensor_square_product(const CdgAlgebra& a);
GradedMap tensor_square_coproduct(const DgCoalgebra& c);

// Δ(x) - 1⊗x - x⊗1
GradedMap reduced_coproduct(const HopfData& h);

// m^(n): A^{⊗n} -> A
GradedMap iterated_product(const GradedMap& m, unsigned n);
GradedMap iterated_product(const CdgAlgebra& a, unsigned n);
// right-handed variant m∘(I⊗m^(n-1)), used to cross-check associativity
GradedMap iterated_product_right(const GradedMap& m, unsigned n);

enum class CoproductVariant { plain, reduced, on_tensor_square };
// Δ^(n) generated by a coproduct X -> X⊗X
GradedMap iterate_coproduct(const GradedMap& delta, unsigned n);
GradedMap iterate_coproduct_right(const GradedMap& delta, unsigned n);
GradedMap iterated_coproduct(const HopfData& h, unsigned n, CoproductVariant v);

struct ConilpotencyFiltration {
    std::vector<std::vector<Column>> layers;  // layers[n] spans B̄_n, n = 0..index
    std::optional<unsigned> index;
    std::size_t kernel_dim = 0;  // dim Ker ε
    Report checks;
};

ConilpotencyFiltration conilpotency_filtration(const HopfData& h, unsigned max_n = 8);

// Columns = source basis, rows = every (map, target index) pair that is ever nonzero.
Matrix stacked_matrix(const std::vector<GradedMap>& maps);

}  // namespace dgh
