#include "cosdyn/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "cosdyn/parallel.hpp"

namespace cosdyn {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied_up_to_horizon: return "satisfied_up_to_horizon";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PartitionStrategy partition_strategy_from_string(const std::string& s) {
    if (s == "all_plus") return PartitionStrategy::all_plus;
    if (s == "all_minus") return PartitionStrategy::all_minus;
    if (s == "greedy") return PartitionStrategy::greedy;
    throw DomainError("unknown partition strategy '" + s +
                      "'; accepted: all_plus, all_minus, greedy");
}

std::string to_string(PartitionStrategy s) {
    switch (s) {
        case PartitionStrategy::all_plus: return "all_plus";
        case PartitionStrategy::all_minus: return "all_minus";
        case PartitionStrategy::greedy: return "greedy";
    }
    return "greedy";
}

double criterion_quantity(const WeightedTranslation& op, const YoungFunction& phi,
                          const FiniteSet& E, std::int64_t n, ProductKind kind) {
    if (n < 1) throw DomainError("criterion quantity needs n >= 1");
    if (E.empty()) return 0.0;
    FinSeq products;
    for (const auto& x : E)
        products.set(translate(x, op.shift(), n), weight_product(op, x, n, kind));
    return orlicz_norm(phi, products);
}

std::pair<FiniteSet, FiniteSet> choose_partition(const WeightedTranslation& op,
                                                 const FiniteSet& K, std::int64_t n,
                                                 PartitionStrategy strategy) {
    switch (strategy) {
        case PartitionStrategy::all_plus: return {K, FiniteSet{}};
        case PartitionStrategy::all_minus: return {FiniteSet{}, K};
        case PartitionStrategy::greedy: break;
    }
    FiniteSet plus, minus;
    for (const auto& x : K) {
        const double fwd = weight_product(op, x, 2 * n, ProductKind::forward);
        const double bwd = weight_product(op, x, 2 * n, ProductKind::backward);
        if (fwd <= bwd)
            plus.insert(x);
        else
            minus.insert(x);
    }
    return {plus, minus};
}

namespace {

struct Series {
    std::vector<double> values;  // indexed by row
    std::vector<double> powers;  // the exponent each row's product carries
};

// exp(slope) of the least-squares line through (power, log value) over the
// fit window. Zero rows are skipped; an all-zero window means the quantity
// already vanished, reported as ratio 0.
std::optional<double> fit_ratio(const Series& s, std::size_t window_start) {
    std::vector<std::pair<double, double>> pts;
    bool any_positive = false;
    for (std::size_t i = window_start; i < s.values.size(); ++i) {
        if (s.values[i] > 0.0) {
            any_positive = true;
            pts.emplace_back(s.powers[i], std::log(s.values[i]));
        }
    }
    if (!any_positive) return 0.0;
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double denom = m * sxx - sx * sx;
    if (denom <= 0.0) return std::nullopt;
    return std::exp((m * sxy - sx * sy) / denom);
}

// A quantity blocks the criterion when it never decreases over the whole
// horizon and ends well above eps: constants (e.g. w == 1) and monotone
// growth are the only shapes we call out as violations, anything else stays
// inconclusive.
bool is_blocking(const std::vector<double>& q, double eps) {
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (q[i + 1] < q[i] * (1.0 - 1e-9) - 1e-300) return false;
    return q.back() > 10.0 * eps;
}

std::size_t fit_window_start(std::size_t rows) {
    const std::size_t window = std::max<std::size_t>(8, rows / 4);
    return rows > window ? rows - window : 0;
}

void check_preconditions(const WeightedTranslation& op, const FiniteSet& K,
                         std::int64_t horizon, double eps, std::int64_t separation) {
    if (K.empty()) throw PreconditionError("criterion checks need a nonempty K");
    if (!(eps > 0.0)) throw PreconditionError("criterion checks need eps > 0");
    (void)op;
    if (horizon <= separation)
        throw PreconditionError("horizon must exceed the separation index " +
                                std::to_string(separation) + "; need horizon >= " +
                                std::to_string(separation + 1));
}

}  // namespace

CriterionReport check_transitive(const WeightedTranslation& op, const YoungFunction& phi,
                                 const FiniteSet& K, std::int64_t horizon, double eps,
                                 PartitionStrategy strategy) {
    const std::int64_t separation = separation_index(K, op.shift());
    check_preconditions(op, K, horizon, eps, separation);

    CriterionReport report;
    report.kind = "transitive";
    report.phi_name = phi.name();
    report.weight_name = op.weight().name();
    report.g = op.shift();
    report.K = K;
    report.horizon = horizon;
    report.eps = eps;
    report.strategy = strategy;
    report.separation = separation;
    report.window_radius = 2 * horizon;
    const auto bounds = op.weight().bounds_over(orbit_window(K, op.shift(), 2 * horizon));
    report.weight_sup = bounds.sup;
    report.weight_inf = bounds.inf;
    report.rows.resize(static_cast<std::size_t>(horizon));

    parallel_for_index(static_cast<std::size_t>(horizon), [&](std::size_t i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        CriterionRow row;
        row.n = n;
        auto [plus, minus] = choose_partition(op, K, n, strategy);
        row.q_phi = criterion_quantity(op, phi, K, n, ProductKind::forward);
        row.q_tilde = criterion_quantity(op, phi, K, n, ProductKind::backward);
        row.q2_plus = criterion_quantity(op, phi, plus, 2 * n, ProductKind::forward);
        row.q2_minus = criterion_quantity(op, phi, minus, 2 * n, ProductKind::backward);
        row.e_plus = std::move(plus);
        row.e_minus = std::move(minus);
        report.rows[i] = std::move(row);
    });

    const std::size_t rows = report.rows.size();
    Series s_phi, s_tilde, s2_plus, s2_minus;
    for (const auto& row : report.rows) {
        const double n = static_cast<double>(row.n);
        s_phi.values.push_back(row.q_phi);
        s_phi.powers.push_back(n);
        s_tilde.values.push_back(row.q_tilde);
        s_tilde.powers.push_back(n);
        s2_plus.values.push_back(row.q2_plus);
        s2_plus.powers.push_back(2.0 * n);
        s2_minus.values.push_back(row.q2_minus);
        s2_minus.powers.push_back(2.0 * n);
    }
    const std::size_t ws = fit_window_start(rows);
    report.decay.q_phi = fit_ratio(s_phi, ws);
    report.decay.q_tilde = fit_ratio(s_tilde, ws);
    report.decay.q2_plus = fit_ratio(s2_plus, ws);
    report.decay.q2_minus = fit_ratio(s2_minus, ws);

    const auto row_max = [](const CriterionRow& r) {
        return std::max({r.q_phi, r.q_tilde, r.q2_plus, r.q2_minus});
    };
    for (const auto& row : report.rows)
        if (row_max(row) < eps) report.good_ns.push_back(row.n);

    // One representative per dyadic block [2^j, 2^(j+1)): the n minimizing
    // the row maximum.
    for (std::int64_t lo = 1; lo <= horizon; lo *= 2) {
        const std::int64_t hi = std::min(horizon, 2 * lo - 1);
        std::int64_t best_n = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t n = lo; n <= hi; ++n) {
            const double v = row_max(report.rows[static_cast<std::size_t>(n - 1)]);
            if (v < best) {
                best = v;
                best_n = n;
            }
        }
        if (best_n > 0) report.subsequence.push_back(best_n);
    }

    const auto ratios_decay = [&] {
        for (const auto& r :
             {report.decay.q_phi, report.decay.q_tilde, report.decay.q2_plus,
              report.decay.q2_minus})
            if (r.has_value() && !(*r < 1.0)) return false;
        return true;
    };
    if (!report.good_ns.empty() && ratios_decay()) {
        report.verdict = Verdict::satisfied_up_to_horizon;
    } else if (report.good_ns.empty() &&
               (is_blocking(s_phi.values, eps) || is_blocking(s_tilde.values, eps) ||
                is_blocking(s2_plus.values, eps) || is_blocking(s2_minus.values, eps))) {
        report.verdict = Verdict::violated;
    } else {
        report.verdict = Verdict::inconclusive;
    }
    return report;
}

CriterionReport check_mixing(const WeightedTranslation& op, const YoungFunction& phi,
                             const FiniteSet& K, std::int64_t horizon, double eps) {
    const std::int64_t separation = separation_index(K, op.shift());
    check_preconditions(op, K, horizon, eps, separation);

    CriterionReport report;
    report.kind = "mixing";
    report.phi_name = phi.name();
    report.weight_name = op.weight().name();
    report.g = op.shift();
    report.K = K;
    report.horizon = horizon;
    report.eps = eps;
    report.strategy = PartitionStrategy::all_plus;
    report.separation = separation;
    report.window_radius = 2 * horizon;
    const auto bounds = op.weight().bounds_over(orbit_window(K, op.shift(), 2 * horizon));
    report.weight_sup = bounds.sup;
    report.weight_inf = bounds.inf;
    report.rows.resize(static_cast<std::size_t>(horizon));

    parallel_for_index(static_cast<std::size_t>(horizon), [&](std::size_t i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        CriterionRow row;
        row.n = n;
        row.q_phi = criterion_quantity(op, phi, K, n, ProductKind::forward);
        row.q_tilde = criterion_quantity(op, phi, K, n, ProductKind::backward);
        row.e_plus = K;  // mixing has no +/- split; E_n = K in the discrete case
        report.rows[i] = std::move(row);
    });

    const std::size_t rows = report.rows.size();
    Series s_phi, s_tilde;
    for (const auto& row : report.rows) {
        const double n = static_cast<double>(row.n);
        s_phi.values.push_back(row.q_phi);
        s_phi.powers.push_back(n);
        s_tilde.values.push_back(row.q_tilde);
        s_tilde.powers.push_back(n);
    }
    const std::size_t ws = fit_window_start(rows);
    report.decay.q_phi = fit_ratio(s_phi, ws);
    report.decay.q_tilde = fit_ratio(s_tilde, ws);

    for (const auto& row : report.rows)
        if (std::max(row.q_phi, row.q_tilde) < eps) report.good_ns.push_back(row.n);

    // Full-sequence decay: every n from n0 to the horizon must be good, and
    // n0 must leave a trailing window of evidence.
    const std::int64_t window = static_cast<std::int64_t>(std::max<std::size_t>(8, rows / 4));
    std::optional<std::int64_t> n0;
    std::int64_t tail_start = horizon + 1;
    for (std::int64_t n = horizon; n >= 1; --n) {
        const auto& row = report.rows[static_cast<std::size_t>(n - 1)];
        if (std::max(row.q_phi, row.q_tilde) < eps)
            tail_start = n;
        else
            break;
    }
    if (tail_start <= horizon - window) n0 = tail_start;
    report.n0 = n0;

    if (n0.has_value()) {
        report.verdict = Verdict::satisfied_up_to_horizon;
    } else if (report.good_ns.empty() &&
               (is_blocking(s_phi.values, eps) || is_blocking(s_tilde.values, eps))) {
        report.verdict = Verdict::violated;
    } else {
        report.verdict = Verdict::inconclusive;
    }
    return report;
}

DirectSumReport check_direct_sum(std::span<const WeightedTranslation> ops,
                                 const YoungFunction& phi, const FiniteSet& K,
                                 std::int64_t horizon, double eps,
                                 PartitionStrategy strategy) {
    if (ops.empty()) throw DomainError("direct sum needs at least one component");
    DirectSumReport report;
    report.components.reserve(ops.size());
    for (const auto& op : ops)
        report.components.push_back(check_transitive(op, phi, K, horizon, eps, strategy));

    std::vector<std::int64_t> joint = report.components.front().good_ns;
    for (std::size_t l = 1; l < report.components.size(); ++l) {
        std::vector<std::int64_t> next;
        std::set_intersection(joint.begin(), joint.end(),
                              report.components[l].good_ns.begin(),
                              report.components[l].good_ns.end(), std::back_inserter(next));
        joint = std::move(next);
    }
    report.joint_ns = std::move(joint);

    if (report.components.size() == 1) {
        report.verdict = report.components.front().verdict;
        return report;
    }
    const bool any_violated =
        std::any_of(report.components.begin(), report.components.end(),
                    [](const CriterionReport& c) { return c.verdict == Verdict::violated; });
    const bool all_satisfied = std::all_of(
        report.components.begin(), report.components.end(), [](const CriterionReport& c) {
            return c.verdict == Verdict::satisfied_up_to_horizon;
        });
    // The joint subsequence must keep growing with the horizon: demand a
    // member in the last quartile, not just somewhere early.
    const bool tail_present =
        !report.joint_ns.empty() && report.joint_ns.back() > horizon - horizon / 4;
    if (any_violated)
        report.verdict = Verdict::violated;
    else if (all_satisfied && tail_present)
        report.verdict = Verdict::satisfied_up_to_horizon;
    else
        report.verdict = Verdict::inconclusive;
    return report;
}

}  // namespace cosdyn
