#include "dgh/comodules.hpp"

#include <map>
#include <set>

#include "dgh/errors.hpp"

namespace dgh {

Report verify_comodule(const Comodule& C, const HopfData& B) {
    Report r;
    r.title = "comodule " + C.name + " over " + B.name;
    const Space MB = tensor(C.space, B.space);
    if (C.gamma.source() != C.space || C.gamma.target() != MB) {
        r.expect("coaction has shape M -> M⊗B", false, C.gamma.source().name() + " -> " + C.gamma.target().name());
        return r;
    }
    r.expect("coaction has degree 0", C.gamma.degree() == 0);
    r.expect_zero("d∘d = 0", compose(C.d, C.d));
    r.expect_equal("d∘γ = γ∘d", compose(tensor_differential(C.d, B.d), C.gamma), compose(C.gamma, C.d));
    r.expect_equal("(γ⊗I)∘γ = (I⊗Δ)∘γ", compose(tmap(C.gamma, id(B.space)), C.gamma),
                   compose(tmap(id(C.space), B.delta), C.gamma));
    r.expect_equal("(I⊗ε)∘γ = ȷ⁻¹", compose(tmap(id(C.space), B.eps), C.gamma), right_unitor_inv(C.space));
    return r;
}

Comodule trivial_comodule(const HopfData& B) {
    const Space& k = Space::ground();
    return {"k", k, zero_differential(k), compose(left_unitor_inv(B.space), B.u)};
}

Comodule regular_comodule(const HopfData& B) { return {B.name, B.space, B.d, B.delta}; }

Comodule cofree_comodule(const CochainComplex& M, const HopfData& B) {
    return {M.space.name() + "⊗" + B.name, tensor(M.space, B.space), tensor_differential(M.d, B.d),
            tmap(id(M.space), B.delta)};
}

Comodule star_comodule(const HopfData& B) {
    return {B.name + "*", B.space, B.d, chain(braiding(B.space, B.space), tmap(B.S(), id(B.space)), B.delta)};
}

Comodule point_comodule(const CochainComplex& M, const HopfData& B) {
    return {M.space.name(), M.space, M.d, compose(tmap(id(M.space), B.u), right_unitor_inv(M.space))};
}

Comodule standard_comodule(ComoduleKind kind, const HopfData& B, const std::optional<CochainComplex>& M) {
    auto need = [&]() -> const CochainComplex& {
        if (!M) throw DimensionError("this comodule kind needs an underlying complex");
        return *M;
    };
    switch (kind) {
        case ComoduleKind::trivial: return trivial_comodule(B);
        case ComoduleKind::regular: return regular_comodule(B);
        case ComoduleKind::cofree: return cofree_comodule(need(), B);
        case ComoduleKind::star: return star_comodule(B);
        case ComoduleKind::point: return point_comodule(need(), B);
    }
    throw DimensionError("unknown comodule kind");
}

Comodule tensor_comodule(const Comodule& C, const Comodule& C2, const HopfData& B) {
    const Space& b = B.space;
    GradedMap g = chain(tmap(id(C.space), id(C2.space), B.m), tmap(id(C.space), braiding(b, C2.space), id(b)),
                        tmap(C.gamma, C2.gamma));
    return {C.name + "⊗" + C2.name, tensor(C.space, C2.space), tensor_differential(C.d, C2.d), g};
}

Report comodule_morphism_report(const GradedMap& psi, const Comodule& C, const Comodule& C2,
                                const HopfData& B) {
    Report r;
    r.title = "comodule map " + C.name + " -> " + C2.name;
    if (psi.source() != C.space || psi.target() != C2.space) {
        r.expect("shape", false, psi.source().name() + " -> " + psi.target().name());
        return r;
    }
    r.expect_equal("γ'∘ψ = (ψ⊗I)∘γ", compose(C2.gamma, psi), compose(tmap(psi, id(B.space)), C.gamma));
    return r;
}

bool verify_comodule_morphism(const GradedMap& psi, const Comodule& C, const Comodule& C2,
                              const HopfData& B) {
    return comodule_morphism_report(psi, C, C2, B).ok();
}

GradedMap coaction_component(const Comodule& C, const GradedMap& alpha, const CdgAlgebra& A) {
    const Space& M = C.space;
    return chain(tmap(id(M), A.m), tmap(id(M), alpha, id(A.space)), tmap(C.gamma, id(A.space)));
}

GradedMap rep_from_comodule(const Comodule& C, const HopfData& B, const GradedMap& g, const CdgAlgebra& A) {
    if (!Convolution(B, A).is_group_element(g)) throw NotGroupElement(B.name + " -> " + A.name);
    return coaction_component(C, g, A);
}

Representation representation_of(const Comodule& C, const HopfData& B) {
    return {C.name, C.space, C.d, coaction_component(C, id(B.space), B.algebra())};
}

Comodule comodule_from_rep(const Representation& R, const HopfData& B) {
    CdgAlgebra Ba = B.algebra();
    if (!is_module_morphism(R.universal, Ba)) throw NotRepresentation("universal element is not B-linear");
    Comodule C{R.name, R.space, R.d, frak_q(R.universal, Ba)};
    auto rep = verify_comodule(C, B);
    if (!rep.ok()) throw NotRepresentation(rep.failures().front().name);
    return C;
}

GradedMap rep_component(const Representation& R, const HopfData& B, const GradedMap& g, const CdgAlgebra& A) {
    if (!Convolution(B, A).is_group_element(g)) throw NotGroupElement(B.name + " -> " + A.name);
    return frak_p(compose(tmap(id(R.space), g), frak_q(R.universal, B.algebra())), A);
}

// ---- subcomodules

namespace {

// Spanning set kept as row-reduced vectors, one group per degree.
struct Span {
    const Space* space;
    std::map<int, std::vector<Column>> rows;

    Column dense(const Vec& v) const {
        Column c(space->dim());
        for (auto& [i, x] : v) c[i] = x;
        return c;
    }
    // true if v was new
    bool add(const Vec& v) {
        if (v.empty()) return false;
        int deg = space->degree(v.front().first);
        auto& rs = rows[deg];
        std::vector<Column> cols = rs;
        std::size_t before = cols.empty() ? 0 : rank(Matrix::from_columns(cols, space->dim()));
        cols.push_back(dense(v));
        if (rank(Matrix::from_columns(cols, space->dim())) == before) return false;
        rs.push_back(cols.back());
        return true;
    }
    std::size_t dim() const {
        std::size_t n = 0;
        for (auto& [d, rs] : rows) n += rs.size();
        return n;
    }
};

std::vector<Vec> homogeneous_parts(const Space& s, const Vec& v) {
    std::map<int, Vec> by;
    for (auto& e : v) by[s.degree(e.first)].push_back(e);
    std::vector<Vec> out;
    for (auto& [d, part] : by) out.push_back(part);
    return out;
}

std::vector<Vec> coaction_components(const Comodule& C, const Vec& v, std::size_t dimB) {
    std::map<std::size_t, Vec> by;
    for (auto& [i, x] : C.gamma.apply(v)) by[i % dimB].push_back({i / dimB, x});
    std::vector<Vec> out;
    for (auto& [j, part] : by) out.push_back(part);
    return out;
}

std::vector<Vec> one_pass(const Comodule& C, const std::vector<Vec>& vs, std::size_t dimB) {
    std::vector<Vec> out;
    for (auto& v : vs) {
        out.push_back(C.d.apply(v));
        for (auto& c : coaction_components(C, v, dimB)) out.push_back(c);
    }
    return out;
}

}  // namespace

Subcomodule finite_subcomodule(const Comodule& C, const Vec& m, const HopfData& B) {
    const std::size_t dimB = B.space.dim();
    Span span{&C.space, {}};
    std::vector<Vec> frontier;
    for (auto& part : homogeneous_parts(C.space, m))
        if (span.add(part)) frontier.push_back(part);
    unsigned rounds = 0;
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (auto& v : one_pass(C, frontier, dimB))
            if (span.add(v)) next.push_back(v);
        if (!next.empty()) ++rounds;
        frontier = std::move(next);
    }

    // the one-step span {mⁱ, d mⁱ}
    Span step{&C.space, {}};
    for (auto& part : homogeneous_parts(C.space, m))
        for (auto& c : coaction_components(C, part, dimB)) {
            step.add(c);
            step.add(C.d.apply(c));
        }

    // canonical basis: reduced rows per degree, ordered by degree then pivot
    struct Basis {
        Column v;
        std::size_t pivot;
        int degree;
    };
    std::vector<Basis> basis;
    for (auto& [deg, rs] : span.rows) {
        Matrix t(rs.size(), C.space.dim());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < C.space.dim(); ++j) t(i, j) = rs[i][j];
        auto piv = rref(t);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            Column row(C.space.dim());
            for (std::size_t j = 0; j < C.space.dim(); ++j) row[j] = t(i, j);
            basis.push_back({row, piv[i], deg});
        }
    }
    std::set<std::string> used;
    std::vector<std::pair<std::string, int>> labels;
    std::size_t fresh = 0;
    for (auto& b : basis) {
        std::size_t nz = 0;
        for (auto& x : b.v) nz += (x != 0);
        std::string l = nz == 1 ? C.space.label(b.pivot) : "";
        while (l.empty() || used.count(l)) l = "s" + std::to_string(++fresh);
        used.insert(l);
        labels.push_back({l, b.degree});
    }
    Space S(make_atom("⟨" + format_vec(C.space, m) + "⟩", labels));

    GradedMap inc(S, C.space, 0), proj(C.space, S, 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t j = 0; j < C.space.dim(); ++j)
            if (basis[k].v[j] != 0) inc.set(j, k, basis[k].v[j]);
        proj.set(k, basis[k].pivot, 1);
    }
    Subcomodule out;
    out.sub = {C.name + S.name(), S, chain(proj, C.d, inc), chain(tmap(proj, id(B.space)), C.gamma, inc)};
    out.inclusion = inc;
    out.rounds = rounds;
    out.one_step_closed = step.dim() == span.dim();
    out.checks.title = "subcomodule " + out.sub.name;
    out.checks.expect_equal("d∘ι = ι∘d", compose(C.d, inc), compose(inc, out.sub.d));
    out.checks.expect_equal("γ∘ι = (ι⊗I)∘γ", compose(C.gamma, inc),
                            compose(tmap(inc, id(B.space)), out.sub.gamma));
    out.checks.merge(verify_comodule(out.sub, B));
    return out;
}

}  // namespace dgh
