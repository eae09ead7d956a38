#include "dgh/space.hpp"

#include <algorithm>
#include <set>

#include "dgh/errors.hpp"

namespace dgh {

AtomPtr make_atom(std::string name, std::vector<std::pair<std::string, int>> basis, int lo,
                  int hi) {
    auto a = std::make_shared<Atom>();
    a->name = std::move(name);
    std::set<std::string> seen;
    for (auto& [l, d] : basis) {
        if (!seen.insert(l).second) throw ReferenceError("duplicate basis label '" + l + "'");
        a->labels.push_back(l);
        a->degrees.push_back(d);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    a->window_lo = lo;
    a->window_hi = hi;
    return a;
}

AtomPtr make_atom(std::string name, std::vector<std::pair<std::string, int>> basis) {
    int lo = 0, hi = 0;
    if (!basis.empty()) {
        lo = hi = basis.front().second;
    }
    return make_atom(std::move(name), std::move(basis), lo, hi);
}

Space::Space(AtomPtr a) : Space(std::vector<AtomPtr>{std::move(a)}) {}

Space::Space(std::vector<AtomPtr> factors) : factors_(std::move(factors)) {
    std::size_t dim = 1;
    for (auto& f : factors_) {
        dim *= f->dim();
        if (dim > max_dim)
            throw WindowOverflow("tensor space " + name() + " exceeds " + std::to_string(max_dim) +
                                 " basis elements");
        lo_ += f->window_lo;
        hi_ += f->window_hi;
    }
    if (factors_.empty()) dim = 0;
    degrees_.assign(dim, 0);
    std::size_t stride = dim;
    for (auto& f : factors_) {
        if (f->dim() == 0) break;
        stride /= f->dim();
        for (std::size_t i = 0; i < dim; ++i) degrees_[i] += f->degrees[(i / stride) % f->dim()];
    }
}

const Space& Space::ground() {
    static const Space k(make_atom("k", {{"1", 0}}));
    return k;
}

std::vector<std::size_t> Space::indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == d) out.push_back(i);
    return out;
}

std::vector<int> Space::populated_degrees() const {
    std::set<int> s(degrees_.begin(), degrees_.end());
    return {s.begin(), s.end()};
}

std::vector<std::size_t> Space::split(std::size_t flat) const {
    std::vector<std::size_t> m(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        m[k] = flat % factors_[k]->dim();
        flat /= factors_[k]->dim();
    }
    return m;
}

std::size_t Space::join(const std::vector<std::size_t>& multi) const {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) flat = flat * factors_[k]->dim() + multi[k];
    return flat;
}

std::vector<std::string> Space::label_tuple(std::size_t flat) const {
    auto m = split(flat);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < m.size(); ++k) out.push_back(factors_[k]->labels[m[k]]);
    return out;
}

std::string Space::label(std::size_t flat) const {
    std::string s;
    for (auto& l : label_tuple(flat)) {
        if (!s.empty()) s += "⊗";
        s += l;
    }
    return s;
}

long Space::find(const std::vector<std::string>& tuple) const {
    if (tuple.size() != factors_.size()) return -1;
    std::vector<std::size_t> m(tuple.size());
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        auto& ls = factors_[k]->labels;
        auto it = std::find(ls.begin(), ls.end(), tuple[k]);
        if (it == ls.end()) return -1;
        m[k] = static_cast<std::size_t>(it - ls.begin());
    }
    return static_cast<long>(join(m));
}

std::string Space::name() const {
    std::string s;
    for (auto& f : factors_) {
        if (!s.empty()) s += "⊗";
        s += f->name;
    }
    return s.empty() ? "0" : s;
}

bool Space::operator==(const Space& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (factors_[k] != o.factors_[k] && !factors_[k]->same_as(*o.factors_[k])) return false;
    return true;
}

Space tensor(const Space& a, const Space& b) {
    auto f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return Space(std::move(f));
}

Space tensor(std::initializer_list<Space> parts) {
    std::vector<AtomPtr> f;
    for (auto& p : parts) f.insert(f.end(), p.factors().begin(), p.factors().end());
    return Space(std::move(f));
}

Space power(const Space& a, unsigned n) {
    std::vector<AtomPtr> f;
    for (unsigned i = 0; i < n; ++i) f.insert(f.end(), a.factors().begin(), a.factors().end());
    return Space(std::move(f));
}

}  // namespace dgh
