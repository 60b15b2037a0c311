#include "cosdyn/ops.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace cosdyn {

Weight::Weight(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {
    if (!fn_) throw DomainError("weight needs a callable");
}

double Weight::operator()(const GroupElement& x) const {
    const double v = fn_(x);
    if (!std::isfinite(v) || v <= 0.0)
        throw DomainError("weight '" + name_ + "' is not strictly positive at " +
                          x.to_string() + " (value " + std::to_string(v) + ")");
    return v;
}

Weight Weight::constant(double c) {
    if (!std::isfinite(c) || c <= 0.0) throw DomainError("constant weight must be positive");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", c);
    return Weight(buf, [c](const GroupElement&) { return c; });
}

Weight Weight::preset(std::string_view name) {
    if (name == "paper-step") {
        return Weight("paper-step", [](const GroupElement& x) {
            if (x.dim() != 1)
                throw DomainError("preset paper-step is defined on Z (dimension 1)");
            return x[0] >= 0 ? 0.5 : 1.5;
        });
    }
    throw DomainError("unknown weight preset '" + std::string(name) +
                      "'; accepted: paper-step");
}

Weight::Bounds Weight::bounds_over(const std::vector<GroupElement>& window) const {
    if (window.empty()) throw DomainError("weight bounds need a nonempty window");
    Bounds b{0.0, std::numeric_limits<double>::infinity()};
    for (const auto& x : window) {
        const double v = (*this)(x);
        b.sup = std::max(b.sup, v);
        b.inf = std::min(b.inf, v);
    }
    return b;
}

WeightedTranslation::WeightedTranslation(GroupElement g, Weight w)
    : g_(std::move(g)), w_(std::move(w)) {
    if (!is_aperiodic(g_))
        throw AperiodicityError(
            "weighted translation needs an aperiodic g; the identity is torsion");
}

namespace {

// Product of w over {x + j*g : j in [j0, j1]}, optionally reciprocal. Long
// products accumulate in log space so a huge partial product cannot saturate
// before a tiny factor pulls it back.
double orbit_product(const WeightedTranslation& op, const GroupElement& x, std::int64_t j0,
                     std::int64_t j1, bool reciprocal) {
    const std::int64_t count = j1 - j0 + 1;
    if (count > 64) {
        double logsum = 0.0;
        for (std::int64_t j = j0; j <= j1; ++j)
            logsum += std::log(op.weight()(translate(x, op.shift(), j)));
        return std::exp(reciprocal ? -logsum : logsum);
    }
    double prod = 1.0;
    for (std::int64_t j = j0; j <= j1; ++j) prod *= op.weight()(translate(x, op.shift(), j));
    return reciprocal ? 1.0 / prod : prod;
}

}  // namespace

FinSeq apply_T(const WeightedTranslation& op, const FinSeq& f, std::int64_t n) {
    if (n < 0) throw DomainError("apply_T needs n >= 0");
    if (n == 0) return f;
    FinSeq out;
    // [T^n f](y + n*g) = f(y) * prod_{j=1}^{n} w(y + j*g).
    for (const auto& [y, v] : f)
        out.set(translate(y, op.shift(), n), v * orbit_product(op, y, 1, n, false));
    return out;
}

FinSeq apply_S(const WeightedTranslation& op, const FinSeq& f, std::int64_t n) {
    if (n < 0) throw DomainError("apply_S needs n >= 0");
    if (n == 0) return f;
    FinSeq out;
    // [S^n f](y - n*g) = f(y) / prod_{j=0}^{n-1} w(y - j*g), the exact
    // inverse of apply_T at the same n.
    for (const auto& [y, v] : f)
        out.set(translate(y, op.shift(), -n), v * orbit_product(op, y, -(n - 1), 0, true));
    return out;
}

FinSeq apply_cosine(const WeightedTranslation& op, const FinSeq& f, std::int64_t n) {
    if (n < 0) throw DomainError("apply_cosine needs n >= 0");
    if (n == 0) return f;
    FinSeq out = apply_T(op, f, n);
    out += apply_S(op, f, n);
    out *= 0.5;
    return out;
}

double weight_product(const WeightedTranslation& op, const GroupElement& x, std::int64_t n,
                      ProductKind kind) {
    if (n < 1) throw DomainError("weight product needs n >= 1");
    return kind == ProductKind::forward ? orbit_product(op, x, 1, n, false)
                                        : orbit_product(op, x, -n, -1, true);
}

std::vector<GroupElement> orbit_window(const FiniteSet& s, const GroupElement& g,
                                       std::int64_t n) {
    std::vector<GroupElement> window;
    window.reserve(s.size() * static_cast<std::size_t>(2 * n + 1));
    for (const auto& x : s)
        for (std::int64_t j = -n; j <= n; ++j) window.push_back(translate(x, g, j));
    return window;
}

}  // namespace cosdyn
