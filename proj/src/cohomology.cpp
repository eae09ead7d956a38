#include "dgh/cohomology.hpp"

#include <map>
#include <set>

#include "dgh/errors.hpp"

namespace dgh {

namespace {

Column dense(const Vec& v, std::size_t n) {
    Column c(n);
    for (auto& [i, x] : v) c[i] = x;
    return c;
}

bool independent_of(const std::vector<Column>& span, const Column& v, std::size_t n) {
    std::vector<Column> cols = span;
    std::size_t before = cols.empty() ? 0 : rank(Matrix::from_columns(cols, n));
    cols.push_back(v);
    return rank(Matrix::from_columns(cols, n)) > before;
}

std::vector<std::size_t> positions(const Space& s, int deg) { return s.indices_of_degree(deg); }

}  // namespace

SDR compute_sdr(const CochainComplex& C, const std::optional<GradedMap>& unit, const std::string& name,
                PivotOrder order) {
    const Space& X = C.space;
    const std::size_t n = X.dim();
    if (C.d.is_zero())
        return {X, id(X), id(X), GradedMap(X, X, -1)};

    std::vector<int> degs = X.populated_degrees();
    // W^k: basis vectors whose images under d are independent; B^{k+1} = d(W^k)
    std::map<int, std::vector<std::size_t>> W;
    for (int k : degs) {
        auto src = positions(X, k), tgt = positions(X, k + 1);
        Matrix m(tgt.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (auto& [row, x] : C.d.col(src[c])) {
                std::size_t r = 0;
                while (tgt[r] != row) ++r;
                m(r, c) = x;
            }
        for (auto c : independent_columns(m, order)) W[k].push_back(src[c]);
    }

    struct Piece {
        std::vector<Column> bnd, reps, comp;
        std::vector<std::size_t> comp_idx;
    };
    std::vector<std::pair<std::string, int>> hlabels;
    std::vector<Column> all_reps;
    std::map<int, Piece> pieces;
    std::set<std::string> used;
    std::size_t fresh = 0;
    for (int k : degs) {
        Piece& P = pieces[k];
        for (auto j : W[k - 1]) P.bnd.push_back(dense(C.d.col(j), n));
        for (auto j : W[k]) {
            Column e(n);
            e[j] = 1;
            P.comp.push_back(e);
            P.comp_idx.push_back(j);
        }
        // kernel of d restricted to degree k, forward order
        auto src = positions(X, k), tgt = positions(X, k + 1);
        Matrix m(tgt.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (auto& [row, x] : C.d.col(src[c])) {
                std::size_t r = 0;
                while (tgt[r] != row) ++r;
                m(r, c) = x;
            }
        std::vector<Column> cands;
        if (unit && k == 0) cands.push_back(dense(unit->col(0), n));
        for (auto& kv : kernel(m)) {
            Column v(n);
            for (std::size_t c = 0; c < src.size(); ++c) v[src[c]] = kv[c];
            cands.push_back(v);
        }
        std::vector<Column> span = P.bnd;
        for (auto& v : cands)
            if (independent_of(span, v, n)) {
                span.push_back(v);
                P.reps.push_back(v);
                std::size_t nz = 0, at = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (v[i] != 0) ++nz, at = i;
                std::string l = (nz == 1 && v[at] == 1) ? X.label(at) : "";
                while (l.empty() || used.count(l)) l = "h" + std::to_string(++fresh);
                used.insert(l);
                hlabels.push_back({l, k});
                all_reps.push_back(v);
            }
    }
    Space H(make_atom(name.empty() ? "H(" + X.name() + ")" : name, hlabels));

    GradedMap p(H, X, 0), q(X, H, 0), chi(X, X, -1);
    for (std::size_t h = 0; h < all_reps.size(); ++h)
        for (std::size_t i = 0; i < n; ++i)
            if (all_reps[h][i] != 0) p.set(i, h, all_reps[h][i]);

    std::size_t hbase = 0;
    for (int k : degs) {
        Piece& P = pieces[k];
        auto idx = positions(X, k);
        // columns of the change of basis, restricted to degree k coordinates
        std::vector<Column> cols;
        for (auto* group : {&P.bnd, &P.reps, &P.comp})
            for (auto& v : *group) {
                Column c(idx.size());
                for (std::size_t a = 0; a < idx.size(); ++a) c[a] = v[idx[a]];
                cols.push_back(c);
            }
        Matrix basis = Matrix::from_columns(cols, idx.size());
        const auto& preimages = W[k - 1];
        for (std::size_t a = 0; a < idx.size(); ++a) {
            Column e(idx.size());
            e[a] = 1;
            auto coords = solve(basis, e);
            if (!coords) throw DimensionError("splitting failed in degree " + std::to_string(k));
            for (std::size_t b = 0; b < P.bnd.size(); ++b)
                if ((*coords)[b] != 0) chi.add_to(preimages[b], idx[a], (*coords)[b]);
            for (std::size_t h = 0; h < P.reps.size(); ++h) {
                const Scalar& c = (*coords)[P.bnd.size() + h];
                if (c != 0) q.set(hbase + h, idx[a], c);
            }
        }
        hbase += P.reps.size();
    }
    return {H, p, q, chi};
}

Report verify_sdr(const SDR& s, const CochainComplex& C, const std::optional<GradedMap>& unit) {
    Report r;
    r.title = "deformation retract " + s.H.name() + " of " + C.space.name();
    const GradedMap& d = C.d;
    r.expect_equal("q∘p = I", compose(s.q, s.p), id(s.H));
    r.expect_equal("p∘q = I - dχ - χd", compose(s.p, s.q), id(C.space) - compose(d, s.chi) - compose(s.chi, d));
    r.expect_equal("d = d∘χ∘d", chain(d, s.chi, d), d);
    r.expect_zero("d∘p = 0", compose(d, s.p));
    r.expect_zero("q∘d = 0", compose(s.q, d));
    if (unit) r.expect_zero("χ∘u = 0", compose(s.chi, *unit));
    return r;
}

HopfData induced_hopf_on_H(const HopfData& B, const SDR& s) {
    const GradedMap& S = B.S();
    HopfData h;
    h.name = "H(" + B.name + ")";
    h.space = s.H;
    h.d = zero_differential(s.H);
    h.u = compose(s.q, B.u);
    h.eps = compose(B.eps, s.p);
    h.m = chain(s.q, B.m, tmap(s.p, s.p));
    h.delta = chain(tmap(s.q, s.q), B.delta, s.p);
    h.antipode = chain(s.q, S, s.p);
    return h;
}

CdgAlgebra induced_algebra_on_H(const CdgAlgebra& A, const SDR& s) {
    return {"H(" + A.name + ")", s.H, zero_differential(s.H), compose(s.q, A.u), chain(s.q, A.m, tmap(s.p, s.p))};
}

Report sdr_defects(const HopfData& B, const SDR& s) {
    HopfData h = induced_hopf_on_H(B, s);
    Report r;
    r.title = "defects of p, q for " + B.name;
    r.expect_equal("p∘m_H = m∘(p⊗p)", compose(s.p, h.m), compose(B.m, tmap(s.p, s.p)));
    r.expect_equal("q∘m = m_H∘(q⊗q)", compose(s.q, B.m), compose(h.m, tmap(s.q, s.q)));
    r.expect_equal("Δ∘p = (p⊗p)∘Δ_H", compose(B.delta, s.p), compose(tmap(s.p, s.p), h.delta));
    r.expect_equal("(q⊗q)∘Δ = Δ_H∘q", compose(tmap(s.q, s.q), B.delta), compose(h.delta, s.q));
    r.expect_equal("ς∘p = p∘ς_H", compose(B.S(), s.p), compose(s.p, h.S()));
    return r;
}

// Keeps the columns of f on source basis elements of total degree 0.
static GradedMap on_degree_zero(const GradedMap& f) {
    GradedMap g(f.source(), f.target(), f.degree());
    for (std::size_t j = 0; j < f.source().dim(); ++j)
        if (f.source().degree(j) == 0) g.set_col(j, f.col(j));
    return g;
}

Report verify_nonneg_reduction(const HopfData& B, const SDR& s) {
    for (int k : B.space.populated_degrees())
        if (k < 0) throw WindowError(B.name + " has basis elements in degree " + std::to_string(k));
    HopfData h = induced_hopf_on_H(B, s);
    Report r;
    r.title = "degree-0 reduction for " + B.name;
    r.expect_zero("χ = 0 on degree 0", on_degree_zero(s.chi));
    r.expect_equal("q0∘p0 = I", on_degree_zero(compose(s.q, s.p)), on_degree_zero(id(s.H)));
    r.expect_equal("p0∘q0 = I - χ1∘d0", on_degree_zero(compose(s.p, s.q)),
                   on_degree_zero(id(B.space) - compose(s.chi, B.d)));
    // with degrees >= 0, tensors of degree 0 are products of degree-0 factors
    r.expect_equal("p0 multiplicative", on_degree_zero(compose(s.p, h.m)), on_degree_zero(compose(B.m, tmap(s.p, s.p))));
    r.expect_equal("q0 multiplicative", on_degree_zero(compose(s.q, B.m)), on_degree_zero(compose(h.m, tmap(s.q, s.q))));
    r.expect_equal("p0 comultiplicative", on_degree_zero(compose(B.delta, s.p)),
                   on_degree_zero(compose(tmap(s.p, s.p), h.delta)));
    r.expect_equal("q0 comultiplicative", on_degree_zero(compose(tmap(s.q, s.q), B.delta)),
                   on_degree_zero(compose(h.delta, s.q)));
    r.expect_equal("p0 unital", compose(s.p, h.u), B.u);
    r.expect_equal("q0 unital", compose(s.q, B.u), h.u);
    r.expect_equal("p0 counital", on_degree_zero(compose(B.eps, s.p)), on_degree_zero(h.eps));
    r.expect_equal("q0 counital", on_degree_zero(compose(h.eps, s.q)), on_degree_zero(B.eps));
    return r;
}

}  // namespace dgh
