#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "cosdyn/errors.hpp"

namespace cosdyn {

/// An element of Z^d under componentwise addition. The identity is the zero
/// vector and the inverse is negation. Dimension d >= 1 is fixed per element.
class GroupElement {
  public:
    explicit GroupElement(std::vector<std::int64_t> coords);
    GroupElement(std::initializer_list<std::int64_t> coords)
        : GroupElement(std::vector<std::int64_t>(coords)) {}

    static GroupElement zero(int dim);

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    bool is_identity() const;

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    /// n-fold sum of this element (n may be negative).
    GroupElement scaled(std::int64_t n) const;

    bool operator==(const GroupElement& o) const { return coords_ == o.coords_; }
    bool operator<(const GroupElement& o) const;

    std::string to_string() const;

  private:
    std::vector<std::int64_t> coords_;
};

/// A finite set of distinct group elements, all of the same dimension.
class FiniteSet {
  public:
    FiniteSet() = default;
    explicit FiniteSet(std::set<GroupElement> elements);
    FiniteSet(std::initializer_list<GroupElement> elements);

    /// {a, a+1, ..., b} in Z.
    static FiniteSet range(std::int64_t a, std::int64_t b);

    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(const GroupElement& x) const { return elements_.count(x) > 0; }

    void insert(const GroupElement& x);

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    FiniteSet translated(const GroupElement& g, std::int64_t n) const;
    FiniteSet united(const FiniteSet& o) const;
    FiniteSet intersected(const FiniteSet& o) const;

    bool operator==(const FiniteSet& o) const { return elements_ == o.elements_; }

  private:
    std::set<GroupElement> elements_;
};

/// True iff g generates an unbounded subgroup; in Z^d that is every nonzero g.
bool is_aperiodic(const GroupElement& g);

/// Least N >= 0 such that K and K +- n*g are disjoint for every n > N.
/// g must be aperiodic and K nonempty.
std::int64_t separation_index(const FiniteSet& K, const GroupElement& g);

/// x + n*g.
GroupElement translate(const GroupElement& x, const GroupElement& g, std::int64_t n);

}  // namespace cosdyn
