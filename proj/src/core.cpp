#include "dgh/core.hpp"

#include <map>

#include "dgh/errors.hpp"

namespace dgh {

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (g.target() != f.source())
        throw SpaceMismatch("compose: " + g.target().name() + " vs " + f.source().name());
    GradedMap out(g.source(), f.target(), f.degree() + g.degree());
    std::map<std::size_t, Scalar> acc;
    for (std::size_t j = 0; j < g.source().dim(); ++j) {
        acc.clear();
        for (auto& [k, c] : g.col(j))
            for (auto& [i, a] : f.col(k)) acc[i] += a * c;
        Vec v;
        for (auto& [i, c] : acc)
            if (c != 0) v.emplace_back(i, c);
        out.set_col(j, std::move(v));
    }
    return out;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
    Space src = tensor(f.source(), g.source());
    Space tgt = tensor(f.target(), g.target());
    GradedMap out(src, tgt, f.degree() + g.degree());
    const std::size_t nw = g.source().dim(), nw2 = g.target().dim();
    const bool g_odd = g.degree() % 2 != 0;
    for (std::size_t jv = 0; jv < f.source().dim(); ++jv) {
        const Vec& fv = f.col(jv);
        const bool neg = g_odd && (f.source().degree(jv) % 2 != 0);
        for (std::size_t jw = 0; jw < nw; ++jw) {
            const Vec& gw = g.col(jw);
            if (fv.empty() || gw.empty()) continue;
            Vec v;
            v.reserve(fv.size() * gw.size());
            for (auto& [i, a] : fv)
                for (auto& [k, b] : gw) v.emplace_back(i * nw2 + k, neg ? Scalar(-a * b) : Scalar(a * b));
            out.set_col(jv * nw + jw, std::move(v));
        }
    }
    return out;
}

GradedMap braiding(const Space& v, const Space& w) {
    Space src = tensor(v, w), tgt = tensor(w, v);
    GradedMap out(src, tgt, 0);
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) {
            int s = parity_sign(static_cast<long>(v.degree(i)) * w.degree(j));
            out.set(j * v.dim() + i, i * w.dim() + j, s);
        }
    return out;
}

GradedMap left_unitor(const Space& v) {
    GradedMap out(tensor(Space::ground(), v), v, 0);
    for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, i, 1);
    return out;
}

GradedMap left_unitor_inv(const Space& v) {
    GradedMap out(v, tensor(Space::ground(), v), 0);
    for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, i, 1);
    return out;
}

GradedMap right_unitor(const Space& v) {
    GradedMap out(tensor(v, Space::ground()), v, 0);
    for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, i, 1);
    return out;
}

GradedMap right_unitor_inv(const Space& v) {
    GradedMap out(v, tensor(v, Space::ground()), 0);
    for (std::size_t i = 0; i < v.dim(); ++i) out.set(i, i, 1);
    return out;
}

GradedMap hom_differential(const GradedMap& f, const GradedMap& dV, const GradedMap& dW) {
    if (dV.source() != f.source() || dV.target() != f.source() || dW.source() != f.target() ||
        dW.target() != f.target())
        throw SpaceMismatch("hom_differential: differentials do not match " + f.source().name() +
                            " -> " + f.target().name());
    GradedMap a = compose(dW, f);
    GradedMap b = compose(f, dV);
    return f.degree() % 2 == 0 ? a - b : a + b;
}

bool is_cochain_map(const GradedMap& f, const GradedMap& dV, const GradedMap& dW) {
    if (f.degree() != 0)
        throw DegreeError("cochain map must have degree 0, got " + std::to_string(f.degree()));
    return hom_differential(f, dV, dW).is_zero();
}

std::optional<GradedMap> solve_chain_homotopy(const GradedMap& f, const GradedMap& ft,
                                              const GradedMap& dV, const GradedMap& dW) {
    if (f.source() != ft.source() || f.target() != ft.target())
        throw SpaceMismatch("solve_chain_homotopy: endpoints live in different Hom spaces");
    auto basis = hom_basis(f.source(), f.target(), f.degree() - 1);
    LinearSystem sys;
    for (auto& e : basis) sys.add_variable({hom_differential(e, dV, dW)});
    auto x = sys.solve({ft - f});
    if (!x) return std::nullopt;
    return combine(basis, *x, f.source(), f.target(), f.degree() - 1);
}

GradedMap zero_differential(const Space& v) { return GradedMap(v, v, 1); }

}  // namespace dgh
