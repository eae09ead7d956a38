#include "dgh/structures.hpp"

#include <map>

#include "dgh/errors.hpp"

namespace dgh {

const GradedMap& HopfData::S() const {
    if (!antipode) throw NotHopf(name + " carries no antipode");
    return *antipode;
}

GradedMap tensor_differential(const GradedMap& dV, const GradedMap& dW) {
    return tensor_map(dV, id(dW.source())) + tensor_map(id(dV.source()), dW);
}

static void degree_zero(Report& r, const std::string& name, const GradedMap& f) {
    r.expect(name + " has degree 0", f.degree() == 0, "degree " + std::to_string(f.degree()));
}

Report verify_algebra(const CdgAlgebra& a) {
    Report r;
    r.title = "cdg-algebra " + a.name;
    const Space& A = a.space;
    degree_zero(r, "u", a.u);
    degree_zero(r, "m", a.m);
    r.expect("d has degree 1", a.d.degree() == 1);
    r.expect_zero("d∘d = 0", compose(a.d, a.d));
    r.expect_zero("d∘u = 0", compose(a.d, a.u));
    r.expect_equal("m∘d_{A⊗A} = d∘m", compose(a.m, tensor_differential(a.d, a.d)), compose(a.d, a.m));
    r.expect_equal("m∘(u⊗I) = ı", compose(a.m, tmap(a.u, id(A))), left_unitor(A));
    r.expect_equal("m∘(I⊗u) = ȷ", compose(a.m, tmap(id(A), a.u)), right_unitor(A));
    r.expect_equal("m∘(m⊗I) = m∘(I⊗m)", compose(a.m, tmap(a.m, id(A))),
                   compose(a.m, tmap(id(A), a.m)));
    r.expect_equal("m∘τ = m", compose(a.m, braiding(A, A)), a.m);
    return r;
}

Report verify_coalgebra(const DgCoalgebra& c) {
    Report r;
    r.title = "dg-coalgebra " + c.name;
    const Space& B = c.space;
    degree_zero(r, "ε", c.eps);
    degree_zero(r, "Δ", c.delta);
    r.expect("d has degree 1", c.d.degree() == 1);
    r.expect_zero("d∘d = 0", compose(c.d, c.d));
    r.expect_zero("ε∘d = 0", compose(c.eps, c.d));
    r.expect_equal("Δ∘d = d_{B⊗B}∘Δ", compose(c.delta, c.d),
                   compose(tensor_differential(c.d, c.d), c.delta));
    r.expect_equal("(ε⊗I)∘Δ = ı⁻¹", compose(tmap(c.eps, id(B)), c.delta), left_unitor_inv(B));
    r.expect_equal("(I⊗ε)∘Δ = ȷ⁻¹", compose(tmap(id(B), c.eps), c.delta), right_unitor_inv(B));
    r.expect_equal("(Δ⊗I)∘Δ = (I⊗Δ)∘Δ", compose(tmap(c.delta, id(B)), c.delta),
                   compose(tmap(id(B), c.delta), c.delta));
    return r;
}

GradedMap tensor_square_product(const CdgAlgebra& a) {
    const Space& A = a.space;
    return compose(tmap(a.m, a.m), tmap(id(A), braiding(A, A), id(A)));
}

GradedMap tensor_square_coproduct(const DgCoalgebra& c) {
    const Space& B = c.space;
    return compose(tmap(id(B), braiding(B, B), id(B)), tmap(c.delta, c.delta));
}

static Report verify_bialgebra_laws(const HopfData& h) {
    Report r;
    const Space& k = Space::ground();
    r.expect_equal("ε∘u = I_k", compose(h.eps, h.u), id(k));
    r.expect_equal("ε∘m = ε⊗ε", compose(h.eps, h.m), compose(left_unitor(k), tmap(h.eps, h.eps)));
    r.expect_equal("Δ∘u = u⊗u", compose(h.delta, h.u), compose(tmap(h.u, h.u), left_unitor_inv(k)));
    r.expect_equal("Δ∘m = m_{B⊗B}∘(Δ⊗Δ)", compose(h.delta, h.m),
                   compose(tensor_square_product(h.algebra()), tmap(h.delta, h.delta)));
    return r;
}

Report verify_structure(const HopfData& h, StructureKind kind) {
    Report r;
    r.title = h.name;
    if (kind == StructureKind::algebra || kind == StructureKind::bialgebra ||
        kind == StructureKind::hopf)
        r.merge(verify_algebra(h.algebra()), "algebra: ");
    if (kind == StructureKind::coalgebra || kind == StructureKind::bialgebra ||
        kind == StructureKind::hopf)
        r.merge(verify_coalgebra(h.coalgebra()), "coalgebra: ");
    if (kind == StructureKind::bialgebra || kind == StructureKind::hopf)
        r.merge(verify_bialgebra_laws(h), "bialgebra: ");
    if (kind == StructureKind::hopf) {
        if (!h.antipode) {
            r.expect("antipode present", false, "no antipode in bundle");
            return r;
        }
        const GradedMap& S = *h.antipode;
        const Space& B = h.space;
        degree_zero(r, "hopf: ς", S);
        GradedMap e = compose(h.u, h.eps);
        r.expect_equal("hopf: m∘(ς⊗I)∘Δ = u∘ε", chain(h.m, tmap(S, id(B)), h.delta), e);
        r.expect_equal("hopf: m∘(I⊗ς)∘Δ = u∘ε", chain(h.m, tmap(id(B), S), h.delta), e);
        r.expect_equal("hopf: d∘ς = ς∘d", compose(h.d, S), compose(S, h.d));
    }
    return r;
}

Report verify_antipode_properties(const HopfData& h) {
    Report r;
    r.title = "antipode of " + h.name;
    const GradedMap& S = h.S();
    const Space& B = h.space;
    r.expect_equal("ς∘u = u", compose(S, h.u), h.u);
    r.expect_equal("ς∘m = m∘(ς⊗ς)", compose(S, h.m), compose(h.m, tmap(S, S)));
    r.expect_equal("ε∘ς = ε", compose(h.eps, S), h.eps);
    r.expect_equal("Δ∘ς = τ∘(ς⊗ς)∘Δ", compose(h.delta, S),
                   chain(braiding(B, B), tmap(S, S), h.delta));
    r.expect_equal("d∘ς = ς∘d", compose(h.d, S), compose(S, h.d));
    return r;
}

std::optional<GradedMap> solve_antipode(const HopfData& bi) {
    auto rep = verify_structure(bi, StructureKind::bialgebra);
    if (!rep.ok()) throw NotABialgebra(bi.name + ": " + rep.failures().front().name);
    const Space& B = bi.space;
    auto basis = hom_basis(B, B, 0);
    LinearSystem sys;
    for (auto& s : basis)
        sys.add_variable({chain(bi.m, tmap(s, id(B)), bi.delta), chain(bi.m, tmap(id(B), s), bi.delta)});
    GradedMap e = compose(bi.u, bi.eps);
    auto x = sys.solve({e, e});
    if (!x) return std::nullopt;
    if (!sys.kernel().empty()) throw NotABialgebra(bi.name + ": antipode equations not determined");
    GradedMap S = combine(basis, *x, B, B, 0);
    if (!is_cochain_map(S, bi.d, bi.d)) throw NotABialgebra(bi.name + ": antipode not a cochain map");
    return S;
}

Report verify_algebra_morphism(const GradedMap& f, const CdgAlgebra& src, const CdgAlgebra& dst) {
    Report r;
    r.title = "algebra morphism " + src.name + " -> " + dst.name;
    if (f.degree() != 0) throw DegreeError("morphism must have degree 0");
    r.expect_equal("d∘f = f∘d", compose(dst.d, f), compose(f, src.d));
    r.expect_equal("f∘u = u'", compose(f, src.u), dst.u);
    r.expect_equal("f∘m = m'∘(f⊗f)", compose(f, src.m), compose(dst.m, tmap(f, f)));
    return r;
}

Report verify_morphism(const GradedMap& f, const HopfData& src, const HopfData& dst,
                       MorphismKind kind) {
    Report r;
    r.title = "morphism " + src.name + " -> " + dst.name;
    if (f.degree() != 0) throw DegreeError("morphism must have degree 0");
    if (kind != MorphismKind::coalgebra)
        r.merge(verify_algebra_morphism(f, src.algebra(), dst.algebra()));
    if (kind != MorphismKind::algebra) {
        if (kind == MorphismKind::coalgebra)
            r.expect_equal("d∘f = f∘d", compose(dst.d, f), compose(f, src.d));
        r.expect_equal("ε'∘f = ε", compose(dst.eps, f), src.eps);
        r.expect_equal("Δ'∘f = (f⊗f)∘Δ", compose(dst.delta, f), compose(tmap(f, f), src.delta));
    }
    if (kind == MorphismKind::hopf)
        r.expect_equal("f∘ς = ς'∘f", compose(f, src.S()), compose(dst.S(), f));
    return r;
}

GradedMap reduced_coproduct(const HopfData& h) {
    const Space& B = h.space;
    return h.delta - compose(tmap(h.u, id(B)), left_unitor_inv(B)) -
           compose(tmap(id(B), h.u), right_unitor_inv(B));
}

GradedMap iterated_product(const GradedMap& m, unsigned n) {
    const Space& A = m.target();
    if (n == 0) throw DegreeError("iterated product needs n >= 1");
    GradedMap cur = id(A);
    for (unsigned k = 1; k < n; ++k) cur = compose(m, tmap(cur, id(A)));
    return cur;
}

GradedMap iterated_product(const CdgAlgebra& a, unsigned n) { return iterated_product(a.m, n); }

GradedMap iterated_product_right(const GradedMap& m, unsigned n) {
    const Space& A = m.target();
    if (n == 0) throw DegreeError("iterated product needs n >= 1");
    GradedMap cur = id(A);
    for (unsigned k = 1; k < n; ++k) cur = compose(m, tmap(id(A), cur));
    return cur;
}

GradedMap iterate_coproduct(const GradedMap& delta, unsigned n) {
    const Space& X = delta.source();
    if (n == 0) throw DegreeError("iterated coproduct needs n >= 1");
    GradedMap cur = id(X);
    for (unsigned k = 1; k < n; ++k) cur = compose(tmap(cur, id(X)), delta);
    return cur;
}

GradedMap iterate_coproduct_right(const GradedMap& delta, unsigned n) {
    const Space& X = delta.source();
    if (n == 0) throw DegreeError("iterated coproduct needs n >= 1");
    GradedMap cur = id(X);
    for (unsigned k = 1; k < n; ++k) cur = compose(tmap(id(X), cur), delta);
    return cur;
}

GradedMap iterated_coproduct(const HopfData& h, unsigned n, CoproductVariant v) {
    switch (v) {
        case CoproductVariant::plain: return iterate_coproduct(h.delta, n);
        case CoproductVariant::reduced: return iterate_coproduct(reduced_coproduct(h), n);
        case CoproductVariant::on_tensor_square:
            return iterate_coproduct(tensor_square_coproduct(h.coalgebra()), n);
    }
    return id(h.space);
}

Matrix stacked_matrix(const std::vector<GradedMap>& maps) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rows;
    for (std::size_t e = 0; e < maps.size(); ++e)
        for (std::size_t j = 0; j < maps[e].source().dim(); ++j)
            for (auto& [i, c] : maps[e].col(j)) rows.emplace(std::pair{e, i}, 0);
    std::size_t r = 0;
    for (auto& [k, v] : rows) v = r++;
    std::size_t cols = maps.empty() ? 0 : maps.front().source().dim();
    Matrix m(rows.size(), cols);
    for (std::size_t e = 0; e < maps.size(); ++e)
        for (std::size_t j = 0; j < cols; ++j)
            for (auto& [i, c] : maps[e].col(j)) m(rows[{e, i}], j) = c;
    return m;
}

static Vec to_vec(const Column& c) {
    Vec v;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) v.emplace_back(i, c[i]);
    return v;
}

static bool in_span(const std::vector<Vec>& span, const Vec& v, std::size_t dim) {
    Matrix m(dim, span.size() + 1);
    for (std::size_t c = 0; c < span.size(); ++c)
        for (auto& [i, a] : span[c]) m(i, c) = a;
    for (auto& [i, a] : v) m(i, span.size()) = a;
    Matrix without(dim, span.size());
    for (std::size_t rr = 0; rr < dim; ++rr)
        for (std::size_t c = 0; c < span.size(); ++c) without(rr, c) = m(rr, c);
    return rank(m) == rank(without);
}

ConilpotencyFiltration conilpotency_filtration(const HopfData& h, unsigned max_n) {
    ConilpotencyFiltration F;
    const Space& B = h.space;
    F.kernel_dim = kernel(stacked_matrix({h.eps})).size();
    GradedMap rd = reduced_coproduct(h);
    F.layers.push_back({});  // B̄_0 = Ker ε ∩ Ker I = 0
    if (F.kernel_dim == 0) {
        F.index = 0;
    } else {
        GradedMap iter = rd;  // Δ̄^(2)
        for (unsigned n = 1; n <= max_n; ++n) {
            F.layers.push_back(kernel(stacked_matrix({h.eps, iter})));
            if (F.layers.back().size() == F.kernel_dim) {
                F.index = n;
                break;
            }
            iter = compose(tmap(iter, id(B)), rd);
        }
    }
    // d-stability and Δ̄(B̄_n) ⊆ Σ B̄_r⊗B̄_{n-r}
    bool d_stable = true, coproduct_ok = true;
    for (std::size_t n = 1; n < F.layers.size(); ++n) {
        std::vector<Vec> layer;
        for (auto& c : F.layers[n]) layer.push_back(to_vec(c));
        std::vector<Vec> target;
        for (std::size_t r = 1; r < n; ++r)
            for (auto& a : F.layers[r])
                for (auto& b : F.layers[n - r]) {
                    Vec t;
                    for (std::size_t i = 0; i < a.size(); ++i)
                        for (std::size_t j = 0; j < b.size(); ++j)
                            if (a[i] != 0 && b[j] != 0) t.emplace_back(i * B.dim() + j, a[i] * b[j]);
                    target.push_back(t);
                }
        for (auto& v : layer) {
            if (!in_span(layer, h.d.apply(v), B.dim())) d_stable = false;
            if (!in_span(target, rd.apply(v), B.dim() * B.dim())) coproduct_ok = false;
        }
    }
    F.checks.title = "conilpotency filtration of " + h.name;
    F.checks.expect("d(B̄_n) ⊆ B̄_n", d_stable);
    F.checks.expect("Δ̄(B̄_n) ⊆ Σ B̄_r⊗B̄_{n-r}", coproduct_ok);
    return F;
}

}  // namespace dgh
