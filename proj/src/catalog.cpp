#include "dgh/catalog.hpp"

#include <algorithm>
#include <bit>

#include "dgh/errors.hpp"

namespace dgh {

namespace {

std::vector<unsigned> monomial_order(std::size_t n) {
    std::vector<unsigned> masks;
    for (unsigned s = 0; s < (1u << n); ++s) masks.push_back(s);
    auto key = [](unsigned s) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; s >> i; ++i)
            if (s >> i & 1) idx.push_back(i);
        return idx;
    };
    std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return key(a) < key(b);
    });
    return masks;
}

}  // namespace

HopfData exterior_hopf(const std::string& name, const std::vector<std::pair<std::string, int>>& gens,
                       bool with_antipode) {
    const std::size_t n = gens.size();
    for (auto& [g, d] : gens)
        if (d % 2 == 0) throw DegreeError("exterior generator " + g + " must have odd degree");
    auto masks = monomial_order(n);
    std::vector<std::size_t> pos(1u << n);
    std::vector<std::pair<std::string, int>> basis;
    for (std::size_t k = 0; k < masks.size(); ++k) {
        unsigned s = masks[k];
        pos[s] = k;
        std::string label;
        int deg = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1) label += gens[i].first, deg += gens[i].second;
        basis.emplace_back(label.empty() ? "1" : label, deg);
    }
    Space B(make_atom(name, basis));
    const Space& k = Space::ground();
    HopfData h{name, B, zero_differential(B), GradedMap(k, B, 0), GradedMap(tensor(B, B), B, 0),
               GradedMap(B, k, 0), GradedMap(B, tensor(B, B), 0), std::nullopt};
    h.u.set(pos[0], 0, 1);
    h.eps.set(0, pos[0], 1);
    // x_S · x_T: zero on overlap, else the sign of sorting odd generators
    for (unsigned a = 0; a < (1u << n); ++a)
        for (unsigned b = 0; b < (1u << n); ++b) {
            if (a & b) continue;
            int sign = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if ((a >> i & 1) && (b >> j & 1)) sign = -sign;
            h.m.set(pos[a | b], pos[a] * B.dim() + pos[b], sign);
        }
    // Δ is multiplicative: Δ(x_i x_R) = m_{B⊗B}(Δx_i ⊗ Δx_R)
    GradedMap m2 = tensor_square_product(h.algebra());
    std::vector<Vec> delta(1u << n);
    delta[0] = {{pos[0] * B.dim() + pos[0], Scalar(1)}};
    for (unsigned s : masks) {
        if (s == 0) continue;
        unsigned low = s & (~s + 1), rest = s ^ low;
        std::size_t i = pos[low];
        Vec prim = {{pos[0] * B.dim() + i, Scalar(1)}, {i * B.dim() + pos[0], Scalar(1)}};
        std::sort(prim.begin(), prim.end());
        if (rest == 0) {
            delta[s] = prim;
            continue;
        }
        const std::size_t d2 = B.dim() * B.dim();
        Vec outer;
        for (auto& [p, a] : prim)
            for (auto& [q, b] : delta[rest]) outer.emplace_back(p * d2 + q, a * b);
        std::sort(outer.begin(), outer.end());
        delta[s] = m2.apply(outer);
    }
    for (unsigned s = 0; s < (1u << n); ++s) h.delta.set_col(pos[s], delta[s]);
    if (with_antipode) {
        GradedMap S(B, B, 0);
        for (unsigned s = 0; s < (1u << n); ++s) S.set(pos[s], pos[s], std::popcount(s) % 2 ? -1 : 1);
        h.antipode = S;
    }
    return h;
}

HopfData ground_hopf() {
    const Space& k = Space::ground();
    return HopfData{"k", k, zero_differential(k), id(k), left_unitor(k), id(k), left_unitor_inv(k), id(k)};
}

CdgAlgebra ground_algebra() { return ground_hopf().algebra(); }

CdgAlgebra interval_algebra(const std::string& name) {
    Space A(make_atom(name, {{"1", 0}, {"t", 0}, {"dt", 1}}));
    const Space& k = Space::ground();
    CdgAlgebra a{name, A, GradedMap(A, A, 1), GradedMap(k, A, 0), GradedMap(tensor(A, A), A, 0)};
    a.d.set(2, 1, 1);
    a.u.set(0, 0, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        a.m.set(i, 0 * 3 + i, 1);
        if (i) a.m.set(i, i * 3 + 0, 1);
    }
    return a;
}

CdgAlgebra tensor_algebra(const CdgAlgebra& a, const CdgAlgebra& b) {
    const Space& k = Space::ground();
    CdgAlgebra t;
    t.name = a.name + "⊗" + b.name;
    t.space = tensor(a.space, b.space);
    t.d = tensor_differential(a.d, b.d);
    t.u = compose(tmap(a.u, b.u), left_unitor_inv(k));
    t.m = compose(tmap(a.m, b.m), tmap(id(a.space), braiding(b.space, a.space), id(b.space)));
    return t;
}

CochainComplex small_complex(const std::string& name) {
    Space Z(make_atom(name, {{"z0", 0}, {"z1", 1}}));
    GradedMap d(Z, Z, 1);
    d.set(1, 0, 1);
    return {Z, d};
}

CochainComplex line_complex(const std::string& name, int degree) {
    Space L(make_atom(name, {{"l", degree}}));
    return {L, zero_differential(L)};
}

}  // namespace dgh
