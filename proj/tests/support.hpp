#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgh/catalog.hpp"
#include "dgh/core.hpp"
#include "dgh/structures.hpp"

namespace dgh::test {

inline std::size_t ix(const Space& s, const std::vector<std::string>& tuple) {
    long i = s.find(tuple);
    if (i < 0) throw std::logic_error("no basis tuple in " + s.name());
    return static_cast<std::size_t>(i);
}

// f(src tuple) += c·(tgt tuple)
inline void put(GradedMap& f, const std::vector<std::string>& from, const std::vector<std::string>& to,
                const Scalar& c = 1) {
    f.add_to(ix(f.target(), to), ix(f.source(), from), c);
}

inline Scalar entry(const GradedMap& f, const std::vector<std::string>& from,
                    const std::vector<std::string>& to) {
    return f.at(ix(f.target(), to), ix(f.source(), from));
}

inline Vec unit_vec(const Space& s, const std::vector<std::string>& tuple) {
    return Vec{{ix(s, tuple), Scalar(1)}};
}

// The algebra map B -> A that sends each listed generator to its image: every other
// non-unit monomial b is written as m_B(gen⊗rest) = c·b and sent to m_A(g(gen)⊗g(rest))/c.
inline GradedMap extend_multiplicatively(const HopfData& B, const CdgAlgebra& A,
                                         const std::vector<std::pair<std::string, Vec>>& gens) {
    GradedMap g(B.space, A.space, 0);
    std::vector<bool> done(B.space.dim(), false);
    std::vector<std::size_t> gen_ix;
    g.set_col(ix(B.space, {"1"}), A.u.col(0));
    done[ix(B.space, {"1"})] = true;
    for (auto& [name, img] : gens) {
        std::size_t j = ix(B.space, {name});
        g.set_col(j, img);
        done[j] = true;
        gen_ix.push_back(j);
    }
    Space BB = tensor(B.space, B.space);
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t b = 0; b < B.space.dim(); ++b) {
            if (done[b]) continue;
            for (std::size_t gi : gen_ix) {
                for (std::size_t r = 0; r < B.space.dim() && !done[b]; ++r) {
                    if (!done[r]) continue;
                    const Vec& prod = B.m.col(BB.join({gi, r}));
                    if (prod.size() != 1 || prod[0].first != b) continue;
                    Space AA = tensor(A.space, A.space);
                    Vec img;
                    for (auto& [i, x] : g.col(gi))
                        for (auto& [j, y] : g.col(r)) img.emplace_back(AA.join({i, j}), x * y);
                    std::sort(img.begin(), img.end(), [](auto& p, auto& q) { return p.first < q.first; });
                    Vec out = A.m.apply(img);
                    for (auto& e : out) e.second /= prod[0].second;
                    g.set_col(b, out);
                    done[b] = progress = true;
                }
            }
        }
    }
    return g;
}

// Zero on 1 and on products of generators; the listed values on generators.
inline GradedMap on_generators(const HopfData& B, const Space& A,
                               const std::vector<std::pair<std::string, Vec>>& gens) {
    GradedMap v(B.space, A, 0);
    for (auto& [name, img] : gens) v.set_col(ix(B.space, {name}), img);
    return v;
}

inline Vec scaled(const Space& s, const std::vector<std::string>& tuple, const Scalar& c) {
    return Vec{{ix(s, tuple), c}};
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool coin() { return uniform(0, 1) == 1; }
    Scalar scalar() {
        Scalar s(uniform(-3, 3), uniform(1, 2));
        s.canonicalize();
        return s;
    }

    // One atom with 1..max_dim basis vectors in degrees [-1, 2].
    Space space(const std::string& name, int max_dim = 2) {
        std::vector<std::pair<std::string, int>> basis;
        int n = uniform(1, max_dim);
        for (int i = 0; i < n; ++i) basis.emplace_back(name + std::to_string(i), uniform(-1, 2));
        return Space(make_atom(name, basis));
    }

    GradedMap map(const Space& src, const Space& tgt, int deg) {
        GradedMap f(src, tgt, deg);
        for (std::size_t j = 0; j < src.dim(); ++j)
            for (std::size_t i = 0; i < tgt.dim(); ++i)
                if (tgt.degree(i) == src.degree(j) + deg && coin()) f.add_to(i, j, scalar());
        return f;
    }

    // d² = 0 by construction: random disjoint pairs (j -> i) in adjacent degrees.
    GradedMap differential(const Space& s) {
        GradedMap d(s, s, 1);
        std::vector<bool> used(s.dim(), false);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            if (used[j]) continue;
            for (std::size_t i = 0; i < s.dim(); ++i)
                if (!used[i] && i != j && s.degree(i) == s.degree(j) + 1 && coin()) {
                    d.add_to(i, j, scalar() + 4);  // lies in [1, 7], never zero
                    used[i] = used[j] = true;
                    break;
                }
        }
        return d;
    }
};

}  // namespace dgh::test
