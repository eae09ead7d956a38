#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dgh {

// A named graded space with an explicit ordered basis.
struct Atom {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    int window_lo = 0, window_hi = 0;

    std::size_t dim() const { return labels.size(); }
    bool same_as(const Atom& o) const {
        return name == o.name && labels == o.labels && degrees == o.degrees;
    }
};

using AtomPtr = std::shared_ptr<const Atom>;

// Window is widened to cover the degrees if needed; labels must be unique.
AtomPtr make_atom(std::string name, std::vector<std::pair<std::string, int>> basis);
AtomPtr make_atom(std::string name, std::vector<std::pair<std::string, int>> basis, int lo,
                  int hi);

// An ordered tensor product of atoms. Tensor products of spaces concatenate the
// factor lists, so (U⊗V)⊗W and U⊗(V⊗W) are literally the same space. The
// ground field is the one-dimensional atom "k" and is never dropped.
class Space {
public:
    static constexpr std::size_t max_dim = 400000;

    Space() = default;
    explicit Space(AtomPtr a);
    explicit Space(std::vector<AtomPtr> factors);

    static const Space& ground();

    const std::vector<AtomPtr>& factors() const { return factors_; }
    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }

    // Basis indices of a given degree, in basis order.
    std::vector<std::size_t> indices_of_degree(int d) const;
    std::vector<int> populated_degrees() const;

    std::vector<std::size_t> split(std::size_t flat) const;
    std::size_t join(const std::vector<std::size_t>& multi) const;
    std::string label(std::size_t flat) const;
    std::vector<std::string> label_tuple(std::size_t flat) const;
    // -1 if absent
    long find(const std::vector<std::string>& tuple) const;
    std::string name() const;

    bool operator==(const Space& o) const;
    bool operator!=(const Space& o) const { return !(*this == o); }

private:
    std::vector<AtomPtr> factors_;
    std::vector<int> degrees_;
    int lo_ = 0, hi_ = 0;
};

Space tensor(const Space& a, const Space& b);
Space tensor(std::initializer_list<Space> parts);
Space power(const Space& a, unsigned n);

}  // namespace dgh
