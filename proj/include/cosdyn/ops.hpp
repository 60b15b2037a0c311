#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cosdyn/group.hpp"
#include "cosdyn/seq.hpp"

namespace cosdyn {

/// A strictly positive weight on the group. Every evaluation is checked to be
/// finite and > 0; the name travels into reports.
class Weight {
  public:
    using Fn = std::function<double(const GroupElement&)>;

    Weight(std::string name, Fn fn);

    double operator()(const GroupElement& x) const;
    const std::string& name() const { return name_; }

    static Weight constant(double c);
    /// Example preset `paper-step` on Z: 1/2 on i >= 0, 3/2 on i < 0.
    static Weight preset(std::string_view name);

    /// sup and inf of the weight over a finite window of points.
    struct Bounds {
        double sup = 0.0;
        double inf = 0.0;
    };
    Bounds bounds_over(const std::vector<GroupElement>& window) const;

  private:
    std::string name_;
    Fn fn_;
};

/// The pair (g, w) defining the weighted translation, its inverse and the
/// cosine operators. The constructor rejects torsion g (the identity in Z^d).
/// Immutable; all operations are pure.
class WeightedTranslation {
  public:
    WeightedTranslation(GroupElement g, Weight w);

    const GroupElement& shift() const { return g_; }
    const Weight& weight() const { return w_; }

  private:
    GroupElement g_;
    Weight w_;
};

/// n-th power of the weighted translation:
/// x |-> [prod_{j=0}^{n-1} w(x - j*g)] * f(x - n*g); n = 0 is the identity.
FinSeq apply_T(const WeightedTranslation& op, const FinSeq& f, std::int64_t n);

/// n-th power of the inverse:
/// x |-> [prod_{j=1}^{n} w(x + j*g)^{-1}] * f(x + n*g). Exact inverse of
/// apply_T at the same n.
FinSeq apply_S(const WeightedTranslation& op, const FinSeq& f, std::int64_t n);

/// Cosine operator (apply_T(f, n) + apply_S(f, n)) / 2.
FinSeq apply_cosine(const WeightedTranslation& op, const FinSeq& f, std::int64_t n);

/// The two cumulative weight products along the g-orbit through x.
enum class ProductKind {
    forward,   // prod_{j=1}^{n} w(x + j*g)
    backward,  // prod_{j=1}^{n} w(x - j*g)^{-1}
};

/// Cumulative product for n >= 1; computed in log space for n > 64 so long
/// products cannot overflow midway.
double weight_product(const WeightedTranslation& op, const GroupElement& x, std::int64_t n,
                      ProductKind kind);

/// Orbit window {x + j*g : x in s, -n <= j <= n}; used for reporting the
/// sup-norm of the weight over the points an evaluation can touch.
std::vector<GroupElement> orbit_window(const FiniteSet& s, const GroupElement& g,
                                       std::int64_t n);

}  // namespace cosdyn
