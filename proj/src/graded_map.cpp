#include "dgh/graded_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "dgh/errors.hpp"

namespace dgh {

Vec add(const Vec& a, const Vec& b, const Scalar& cb) {
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, cb * b[j].second);
            ++j;
        } else {
            Scalar s = a[i].second + cb * b[j].second;
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i, ++j;
        }
    }
    return out;
}

std::string format_vec(const Space& s, const Vec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (auto& [i, c] : v) {
        Scalar a = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        if (a != 1) out += a.get_str() + " ";
        out += s.label(i);
    }
    return out;
}

GradedMap::GradedMap(Space src, Space tgt, int deg)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(deg), cols_(src_.dim()) {}

GradedMap GradedMap::identity(const Space& v) {
    GradedMap f(v, v, 0);
    for (std::size_t j = 0; j < v.dim(); ++j) f.cols_[j] = {{j, Scalar(1)}};
    return f;
}

GradedMap GradedMap::from_columns(Space src, Space tgt, int deg,
                                  const std::function<Vec(std::size_t)>& col) {
    GradedMap f(std::move(src), std::move(tgt), deg);
    for (std::size_t j = 0; j < f.src_.dim(); ++j) f.set_col(j, col(j));
    return f;
}

void GradedMap::check_entry(std::size_t row, std::size_t col) const {
    if (row >= tgt_.dim() || col >= src_.dim())
        throw DimensionError("entry outside " + src_.name() + " -> " + tgt_.name());
    if (tgt_.degree(row) != src_.degree(col) + deg_)
        throw DegreeError("entry " + src_.label(col) + " -> " + tgt_.label(row) +
                          " breaks degree " + std::to_string(deg_));
}

void GradedMap::set_col(std::size_t j, Vec v) {
    // mpq equality is only meaningful on canonical values
    for (auto& e : v) e.second.canonicalize();
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    Vec clean;
    for (auto& [i, c] : v) {
        if (!clean.empty() && clean.back().first == i) {
            clean.back().second += c;
            if (clean.back().second == 0) clean.pop_back();
            continue;
        }
        if (c != 0) {
            check_entry(i, j);
            clean.emplace_back(i, c);
        }
    }
    cols_[j] = std::move(clean);
}

Scalar GradedMap::at(std::size_t row, std::size_t col) const {
    for (auto& [i, c] : cols_[col])
        if (i == row) return c;
    return 0;
}

void GradedMap::set(std::size_t row, std::size_t col, const Scalar& value) {
    check_entry(row, col);
    Scalar c = value;
    c.canonicalize();
    auto& v = cols_[col];
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](auto& e, std::size_t r) { return e.first < r; });
    if (it != v.end() && it->first == row) {
        if (c == 0)
            v.erase(it);
        else
            it->second = c;
    } else if (c != 0) {
        v.insert(it, {row, c});
    }
}

void GradedMap::add_to(std::size_t row, std::size_t col, const Scalar& c) {
    set(row, col, at(row, col) + c);
}

Vec GradedMap::apply(const Vec& v) const {
    std::map<std::size_t, Scalar> acc;
    for (auto& [j, c] : v)
        for (auto& [i, a] : cols_[j]) acc[i] += a * c;
    Vec out;
    for (auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, c);
    return out;
}

bool GradedMap::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](auto& c) { return c.empty(); });
}

std::size_t GradedMap::nonzeros() const {
    std::size_t n = 0;
    for (auto& c : cols_) n += c.size();
    return n;
}

Matrix GradedMap::block(int n) const {
    auto cs = src_.indices_of_degree(n);
    auto rs = tgt_.indices_of_degree(n + deg_);
    Matrix m(rs.size(), cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (auto& [i, a] : cols_[cs[c]]) {
            auto r = std::lower_bound(rs.begin(), rs.end(), i) - rs.begin();
            m(static_cast<std::size_t>(r), c) = a;
        }
    return m;
}

void GradedMap::same_shape(const GradedMap& o, const char* op) const {
    if (src_ != o.src_ || tgt_ != o.tgt_)
        throw SpaceMismatch(std::string(op) + ": " + src_.name() + "->" + tgt_.name() + " vs " +
                            o.src_.name() + "->" + o.tgt_.name());
    if (deg_ != o.deg_)
        throw DegreeError(std::string(op) + ": degrees " + std::to_string(deg_) + " and " +
                          std::to_string(o.deg_));
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
    same_shape(o, "sum");
    for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] = add(cols_[j], o.cols_[j]);
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
    same_shape(o, "difference");
    for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] = add(cols_[j], o.cols_[j], -1);
    return *this;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    GradedMap r = *this;
    return r += o;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
    GradedMap r = *this;
    return r -= o;
}

GradedMap GradedMap::operator-() const { return Scalar(-1) * *this; }

GradedMap operator*(const Scalar& c, const GradedMap& f) {
    GradedMap r(f.src_, f.tgt_, f.deg_);
    if (c == 0) return r;
    for (std::size_t j = 0; j < f.cols_.size(); ++j) {
        r.cols_[j] = f.cols_[j];
        for (auto& e : r.cols_[j]) e.second *= c;
    }
    return r;
}

bool GradedMap::operator==(const GradedMap& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && (deg_ == o.deg_ || (is_zero() && o.is_zero())) &&
           cols_ == o.cols_;
}

std::string GradedMap::describe() const {
    std::ostringstream os;
    os << src_.name() << " -> " << tgt_.name() << " (degree " << deg_ << ")";
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (!cols_[j].empty()) os << "\n  " << src_.label(j) << " -> " << format_vec(tgt_, cols_[j]);
    return os.str();
}

Difference first_difference(const GradedMap& f, const GradedMap& g) {
    Difference d;
    if (f.source() != g.source() || f.target() != g.target()) {
        d.differs = true;
        d.element = "(shape)";
        d.lhs = f.source().name() + "->" + f.target().name();
        d.rhs = g.source().name() + "->" + g.target().name();
        return d;
    }
    for (std::size_t j = 0; j < f.source().dim(); ++j) {
        if (f.col(j) != g.col(j)) {
            d.differs = true;
            d.element = f.source().label(j);
            d.lhs = format_vec(f.target(), f.col(j));
            d.rhs = format_vec(g.target(), g.col(j));
            return d;
        }
    }
    return d;
}

std::vector<GradedMap> hom_basis(const Space& src, const Space& tgt, int deg) {
    std::vector<GradedMap> out;
    for (std::size_t j = 0; j < src.dim(); ++j)
        for (std::size_t i : tgt.indices_of_degree(src.degree(j) + deg)) {
            GradedMap e(src, tgt, deg);
            e.set(i, j, 1);
            out.push_back(std::move(e));
        }
    return out;
}

void LinearSystem::add_variable(const std::vector<GradedMap>& image) { images_.push_back(image); }

Matrix LinearSystem::assemble(const std::vector<GradedMap>* rhs, Column* b) const {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<Key, std::size_t> rows;
    auto visit = [&](const std::vector<GradedMap>& maps, auto&& fn) {
        for (std::size_t e = 0; e < maps.size(); ++e)
            for (std::size_t j = 0; j < maps[e].source().dim(); ++j)
                for (auto& [i, c] : maps[e].col(j)) fn(Key{e, j, i}, c);
    };
    for (auto& img : images_) visit(img, [&](Key k, const Scalar&) { rows.emplace(k, 0); });
    if (rhs) visit(*rhs, [&](Key k, const Scalar&) { rows.emplace(k, 0); });
    std::size_t r = 0;
    for (auto& [k, idx] : rows) idx = r++;
    Matrix m(rows.size(), images_.size());
    for (std::size_t v = 0; v < images_.size(); ++v)
        visit(images_[v], [&](Key k, const Scalar& c) { m(rows[k], v) += c; });
    if (rhs) {
        b->assign(rows.size(), Scalar(0));
        visit(*rhs, [&](Key k, const Scalar& c) { (*b)[rows[k]] += c; });
    }
    return m;
}

std::optional<std::vector<Scalar>> LinearSystem::solve(const std::vector<GradedMap>& rhs) const {
    Column b;
    Matrix m = assemble(&rhs, &b);
    return dgh::solve(m, b);
}

std::vector<std::vector<Scalar>> LinearSystem::kernel() const {
    Matrix m = assemble(nullptr, nullptr);
    return dgh::kernel(m);
}

GradedMap combine(const std::vector<GradedMap>& basis, const std::vector<Scalar>& coeffs,
                  const Space& src, const Space& tgt, int deg) {
    GradedMap out(src, tgt, deg);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k] != 0) out += coeffs[k] * basis[k];
    return out;
}

}  // namespace dgh
