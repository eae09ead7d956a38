#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dgh/linalg.hpp"
#include "dgh/scalar.hpp"
#include "dgh/space.hpp"

namespace dgh {

// Sparse vector: sorted (index, nonzero coefficient) pairs.
using Vec = std::vector<std::pair<std::size_t, Scalar>>;

Vec add(const Vec& a, const Vec& b, const Scalar& cb = 1);
std::string format_vec(const Space& s, const Vec& v);

// A degree-homogeneous linear map. Column j holds the image of basis element j;
// every entry respects target degree = source degree + deg.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(Space src, Space tgt, int deg);

    static GradedMap identity(const Space& v);
    static GradedMap from_columns(Space src, Space tgt, int deg,
                                  const std::function<Vec(std::size_t)>& col);

    const Space& source() const { return src_; }
    const Space& target() const { return tgt_; }
    int degree() const { return deg_; }

    const Vec& col(std::size_t j) const { return cols_[j]; }
    void set_col(std::size_t j, Vec v);
    Scalar at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Scalar& c);
    void add_to(std::size_t row, std::size_t col, const Scalar& c);

    Vec apply(const Vec& v) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    // Dense block from source degree n into target degree n + deg.
    Matrix block(int n) const;

    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap operator-() const;
    GradedMap& operator+=(const GradedMap& o);
    GradedMap& operator-=(const GradedMap& o);
    friend GradedMap operator*(const Scalar& c, const GradedMap& f);

    bool operator==(const GradedMap& o) const;
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

    std::string describe() const;

private:
    void check_entry(std::size_t row, std::size_t col) const;
    void same_shape(const GradedMap& o, const char* op) const;

    Space src_, tgt_;
    int deg_ = 0;
    std::vector<Vec> cols_;
};

// First source basis element on which f and g differ, with both values; empty if equal.
struct Difference {
    bool differs = false;
    std::string element, lhs, rhs;
};
Difference first_difference(const GradedMap& f, const GradedMap& g);

// Elementary maps spanning Hom(src, tgt)^deg.
std::vector<GradedMap> hom_basis(const Space& src, const Space& tgt, int deg);

// Linear systems whose unknowns are coefficients of a list of maps; each variable
// is recorded through the list of residual maps it produces.
class LinearSystem {
public:
    void add_variable(const std::vector<GradedMap>& image);
    std::size_t variables() const { return images_.size(); }
    std::optional<std::vector<Scalar>> solve(const std::vector<GradedMap>& rhs) const;
    std::vector<std::vector<Scalar>> kernel() const;

private:
    Matrix assemble(const std::vector<GradedMap>* rhs, Column* b) const;
    std::vector<std::vector<GradedMap>> images_;
};

GradedMap combine(const std::vector<GradedMap>& basis, const std::vector<Scalar>& coeffs,
                  const Space& src, const Space& tgt, int deg);

}  // namespace dgh
