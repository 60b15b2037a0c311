#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosdyn/errors.hpp"

namespace cosdyn {

/// A Young function: continuous, even, convex phi with phi(0) = 0, vanishing
/// only at 0 and diverging at infinity. Evaluation folds the argument through
/// |t|; the raw callable is kept for evenness checks on parsed expressions.
///
/// Immutable after construction; all members are safe to call concurrently.
class YoungFunction {
  public:
    using Fn = std::function<double(double)>;

    YoungFunction(std::string name, Fn eval);
    YoungFunction(std::string name, Fn eval, Fn derivative);

    /// phi(|t|). Throws DomainError on non-finite t.
    double operator()(double t) const;

    /// The callable as supplied, without evenness folding.
    double raw(double t) const { return eval_(t); }

    const std::string& name() const { return name_; }

    bool has_derivative() const { return static_cast<bool>(derivative_); }
    /// phi'(t) for t >= 0; throws DomainError when no derivative was supplied.
    double derivative(double t) const;
    /// phi'(t), falling back to a central difference when none was supplied.
    double derivative_or_numeric(double t) const;

    /// Monotone inverse on [0, inf): the t >= 0 with phi(t) = y, by bisection.
    double inverse(double y) const;

    /// Preset name of the closed-form conjugate partner, when known (presets
    /// only); empty otherwise.
    const std::string& known_conjugate_name() const { return conjugate_name_; }
    YoungFunction& set_known_conjugate_name(std::string n) {
        conjugate_name_ = std::move(n);
        return *this;
    }

    /// Accepted names: paper-entropy, paper-exp, square, power:p (p > 1).
    static YoungFunction preset(std::string_view spec);

  private:
    std::string name_;
    Fn eval_;
    Fn derivative_;
    std::string conjugate_name_;
};

/// Search grid for the conjugate's fallback maximization (no derivative):
/// x in [0, range] with the given step, locally refined around the best point.
struct ConjugateGrid {
    double step = 1e-2;
    double range = 1e2;
};

/// Complementary Young function psi(y) = sup_{x >= 0} (x*|y| - phi(x)),
/// computed numerically: monotone bisection on phi' when a derivative is
/// available, otherwise grid search with golden-section refinement.
/// Throws UnboundedConjugate when the supremum diverges at the requested y.
YoungFunction conjugate(const YoungFunction& phi, ConjugateGrid grid = {});

/// Numerical evidence for the Delta_2 condition phi(2t) <= k*phi(t), t > 0.
/// `constant` is the max ratio over the grid; `satisfied` additionally
/// requires the ratio to be finite and stable under grid refinement.
/// This is evidence, not a proof: the condition quantifies over all t.
struct Delta2Result {
    bool satisfied = false;
    double constant = 0.0;
    double refined_constant = 0.0;
    double grid_min = 0.0;
    double grid_max = 0.0;
    int grid_points = 0;
};

Delta2Result is_delta2(const YoungFunction& phi, std::span<const double> t_grid);
Delta2Result is_delta2(const YoungFunction& phi);

/// Log-spaced default grid for is_delta2: 480 points in [1e-6, 1e6].
std::vector<double> delta2_default_grid();

/// One violated invariant with the sample point that witnessed it.
struct ValidationIssue {
    std::string invariant;
    double witness = 0.0;
    std::string detail;
};

/// Samples the Young-function invariants (zero only at 0, evenness, convexity,
/// monotone divergence) on a fixed log-spaced grid of 512 points in
/// [1e-8, 1e8]. Returns the first violation, or nullopt if all hold.
std::optional<ValidationIssue> validate_young(const YoungFunction& phi);

}  // namespace cosdyn
