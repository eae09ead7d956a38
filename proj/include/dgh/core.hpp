#pragma once

#include <optional>

#include "dgh/graded_map.hpp"

namespace dgh {

// f∘g
GradedMap compose(const GradedMap& f, const GradedMap& g);

// f1∘f2∘...∘fn
template <class... Rest>
GradedMap chain(const GradedMap& f, const Rest&... rest) {
    if constexpr (sizeof...(rest) == 0)
        return f;
    else
        return compose(f, chain(rest...));
}

// (f⊗g)(v⊗w) = (-1)^{|g||v|} f(v)⊗g(w)
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);

template <class... Rest>
GradedMap tmap(const GradedMap& f, const Rest&... rest) {
    if constexpr (sizeof...(rest) == 0)
        return f;
    else
        return tensor_map(f, tmap(rest...));
}

inline GradedMap id(const Space& v) { return GradedMap::identity(v); }

// τ(v⊗w) = (-1)^{|v||w|} w⊗v
GradedMap braiding(const Space& v, const Space& w);

// ı: k⊗V -> V and ȷ: V⊗k -> V, with inverses.
GradedMap left_unitor(const Space& v);
GradedMap left_unitor_inv(const Space& v);
GradedMap right_unitor(const Space& v);
GradedMap right_unitor_inv(const Space& v);

// d_{V,W} f = d_W∘f - (-1)^{|f|} f∘d_V
GradedMap hom_differential(const GradedMap& f, const GradedMap& dV, const GradedMap& dW);

bool is_cochain_map(const GradedMap& f, const GradedMap& dV, const GradedMap& dW);

// Some λ with d_{V,W} λ = ft - f, or nothing when ft - f is not a coboundary.
std::optional<GradedMap> solve_chain_homotopy(const GradedMap& f, const GradedMap& ft,
                                              const GradedMap& dV, const GradedMap& dW);

// Zero differential on a space.
GradedMap zero_differential(const Space& v);

}  // namespace dgh
