#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosdyn/ops.hpp"

namespace cosdyn {

/// Verdicts are graded by evidence: a finite horizon cannot certify a limit,
/// so the positive verdict is explicitly "up to the horizon", and `violated`
/// is only emitted when a quantity is constant or monotonically nondecreasing
/// across the whole horizon while staying well above eps.
enum class Verdict { satisfied_up_to_horizon, violated, inconclusive };

std::string to_string(Verdict v);

enum class PartitionStrategy { all_plus, all_minus, greedy };

PartitionStrategy partition_strategy_from_string(const std::string& s);
std::string to_string(PartitionStrategy s);

/// sup over feasible nu of sum_{x in E} product(x) |nu(x + n*g)|, which by a
/// change of variable is the Orlicz norm of y |-> product(y - n*g) on E + n*g.
double criterion_quantity(const WeightedTranslation& op, const YoungFunction& phi,
                          const FiniteSet& E, std::int64_t n, ProductKind kind);

/// Splits K into (E+, E-). `greedy` sends x to E+ iff the forward 2n-product
/// at x does not exceed the backward one (ties to E+); the named constant
/// strategies return (K, empty) and (empty, K).
std::pair<FiniteSet, FiniteSet> choose_partition(const WeightedTranslation& op,
                                                 const FiniteSet& K, std::int64_t n,
                                                 PartitionStrategy strategy);

struct CriterionRow {
    std::int64_t n = 0;
    double q_phi = 0.0;    // forward products on K, shift n
    double q_tilde = 0.0;  // backward products on K, shift n
    double q2_plus = 0.0;  // forward products on E+, shift 2n
    double q2_minus = 0.0; // backward products on E-, shift 2n
    FiniteSet e_plus;
    FiniteSet e_minus;
};

/// Fitted geometric decay ratio per quantity: exp of the least-squares slope
/// of log Q against the power actually used (n for the first two quantities,
/// 2n for the 2n-quantities), over the last max(8, horizon/4) rows. Absent
/// when the window has fewer than two positive values; a window of all zeros
/// reports ratio 0 (fully decayed).
struct DecayFit {
    std::optional<double> q_phi;
    std::optional<double> q_tilde;
    std::optional<double> q2_plus;
    std::optional<double> q2_minus;
};

struct CriterionReport {
    std::string kind;  // "transitive" or "mixing"
    std::string phi_name;
    std::string weight_name;
    GroupElement g{1};
    FiniteSet K;
    std::int64_t horizon = 0;
    double eps = 0.0;
    PartitionStrategy strategy = PartitionStrategy::greedy;
    std::int64_t separation = 0;
    // Weight bounds over the orbit window the run can touch (radius 2*horizon
    // around K); the finite-window stand-in for the sup norm of w.
    double weight_sup = 0.0;
    double weight_inf = 0.0;
    std::int64_t window_radius = 0;
    std::vector<CriterionRow> rows;
    DecayFit decay;
    std::vector<std::int64_t> good_ns;      // all n with every quantity < eps
    std::vector<std::int64_t> subsequence;  // dyadic-block minimizers (transitive)
    std::optional<std::int64_t> n0;         // mixing: start of full-sequence decay
    Verdict verdict = Verdict::inconclusive;
};

/// Transitivity evidence: evaluates the four criterion quantities for
/// n = 1..horizon with the partition from `strategy`. Requires
/// horizon > separation_index(K, g) and eps > 0.
CriterionReport check_transitive(const WeightedTranslation& op, const YoungFunction& phi,
                                 const FiniteSet& K, std::int64_t horizon, double eps,
                                 PartitionStrategy strategy);

/// Mixing evidence: the two n-quantities only, and the positive verdict
/// requires every n from some n0 on to fall below eps, not just a
/// subsequence.
CriterionReport check_mixing(const WeightedTranslation& op, const YoungFunction& phi,
                             const FiniteSet& K, std::int64_t horizon, double eps);

struct DirectSumReport {
    std::vector<CriterionReport> components;
    std::vector<std::int64_t> joint_ns;  // n good for every component
    Verdict verdict = Verdict::inconclusive;
};

/// Direct-sum transitivity evidence: the per-component checks must share a
/// common good subsequence. A single component degenerates to
/// check_transitive.
DirectSumReport check_direct_sum(std::span<const WeightedTranslation> ops,
                                 const YoungFunction& phi, const FiniteSet& K,
                                 std::int64_t horizon, double eps,
                                 PartitionStrategy strategy);

}  // namespace cosdyn
