#include "cosdyn/young.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace cosdyn {

namespace {

constexpr double kRootTol = 1e-12;        // bisection tolerance on located roots
constexpr double kExpandCap = 1e300;      // bracket expansion limit
constexpr double kUnboundedProbe = 1e12;  // grid-path divergence probe limit

double golden_max(const std::function<double(double)>& f, double a, double b) {
    // Golden-section maximization of a concave function on [a, b].
    const double r = 0.6180339887498949;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double tol = kRootTol * std::max(1.0, std::abs(b));
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        }
    }
    return f(0.5 * (a + b));
}

// Least x >= 0 with nondecreasing fn(x) >= target; expands the bracket by
// doubling. Returns nullopt when no bracket exists below the expansion cap.
std::optional<double> root_of_nondecreasing(const std::function<double(double)>& fn,
                                            double target) {
    double hi = 1.0;
    while (fn(hi) < target) {
        hi *= 2.0;
        if (hi > kExpandCap) return std::nullopt;
    }
    double lo = 0.0;
    while (hi - lo > kRootTol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (fn(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

YoungFunction::YoungFunction(std::string name, Fn eval)
    : name_(std::move(name)), eval_(std::move(eval)) {
    if (!eval_) throw DomainError("Young function needs a callable");
}

YoungFunction::YoungFunction(std::string name, Fn eval, Fn derivative)
    : name_(std::move(name)), eval_(std::move(eval)), derivative_(std::move(derivative)) {
    if (!eval_) throw DomainError("Young function needs a callable");
}

double YoungFunction::operator()(double t) const {
    if (!std::isfinite(t))
        throw DomainError("non-finite argument to Young function " + name_);
    return eval_(std::abs(t));
}

double YoungFunction::derivative(double t) const {
    if (!derivative_)
        throw DomainError("Young function " + name_ + " has no derivative");
    return derivative_(t);
}

double YoungFunction::derivative_or_numeric(double t) const {
    if (derivative_) return derivative_(t);
    const double h = 1e-6 * std::max(1.0, std::abs(t));
    return ((*this)(t + h) - (*this)(t - h)) / (2.0 * h);
}

double YoungFunction::inverse(double y) const {
    if (!std::isfinite(y) || y < 0.0)
        throw DomainError("Young function inverse needs y >= 0");
    if (y == 0.0) return 0.0;
    double hi = 1.0;
    while ((*this)(hi) < y) {
        hi *= 2.0;
        if (hi > kExpandCap)
            throw NumericError("failed to bracket inverse of " + name_ + " at y = " +
                               std::to_string(y));
    }
    double lo = 0.0;
    while (hi - lo > kRootTol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if ((*this)(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

YoungFunction YoungFunction::preset(std::string_view spec) {
    const std::string name(spec);
    if (name == "paper-entropy") {
        YoungFunction phi(
            name, [](double t) { return (1.0 + t) * std::log1p(t) - t; },
            [](double t) { return std::log1p(t); });
        phi.set_known_conjugate_name("paper-exp");
        return phi;
    }
    if (name == "paper-exp") {
        YoungFunction phi(
            name, [](double t) { return std::expm1(t) - t; },
            [](double t) { return std::expm1(t); });
        phi.set_known_conjugate_name("paper-entropy");
        return phi;
    }
    if (name == "square") {
        YoungFunction phi(
            name, [](double t) { return t * t; }, [](double t) { return 2.0 * t; });
        phi.set_known_conjugate_name("quarter-square");
        return phi;
    }
    if (name == "quarter-square") {
        YoungFunction phi(
            name, [](double t) { return 0.25 * t * t; }, [](double t) { return 0.5 * t; });
        phi.set_known_conjugate_name("square");
        return phi;
    }
    if (name.rfind("power:", 0) == 0) {
        double p = 0.0;
        try {
            p = std::stod(name.substr(6));
        } catch (const std::exception&) {
            throw DomainError("cannot parse exponent in preset '" + name + "'");
        }
        if (!(p > 1.0) || !std::isfinite(p))
            throw DomainError("power preset needs a finite exponent p > 1, got " +
                              name.substr(6));
        const double q = p / (p - 1.0);
        char buf[48];
        std::snprintf(buf, sizeof buf, "power:%.12g", p);
        YoungFunction phi(
            buf, [p](double t) { return std::pow(t, p) / p; },
            [p](double t) { return std::pow(t, p - 1.0); });
        std::snprintf(buf, sizeof buf, "power:%.12g", q);
        phi.set_known_conjugate_name(buf);
        return phi;
    }
    throw DomainError("unknown Young function preset '" + name +
                      "'; accepted: paper-entropy, paper-exp, square, power:p");
}

namespace {

bool is_preset_name(const std::string& name) {
    try {
        (void)YoungFunction::preset(name);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// sup_{x >= 0} (x*ay - phi(x)) located through the monotone root phi'(x) = ay.
double conjugate_via_derivative(const YoungFunction& phi, double ay) {
    if (ay == 0.0) return 0.0;
    const auto root = root_of_nondecreasing([&](double x) { return phi.derivative(x); }, ay);
    if (!root) throw UnboundedConjugate(ay);
    const double x = *root;
    return std::max(0.0, x * ay - phi(x));
}

double conjugate_via_grid(const YoungFunction& phi, double ay, const ConjugateGrid& grid) {
    if (ay == 0.0) return 0.0;
    const auto value = [&](double x) { return x * ay - phi(x); };
    double best_x = 0.0, best_v = value(0.0);
    const long steps = std::lround(grid.range / grid.step);
    for (long i = 1; i <= steps; ++i) {
        const double x = static_cast<double>(i) * grid.step;
        const double v = value(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    if (best_x >= grid.range - grid.step) {
        // Maximum sits at the edge: keep doubling until the value drops.
        double x1 = std::max(grid.range, grid.step), x2 = 2.0 * x1;
        while (value(x2) > value(x1)) {
            x1 = x2;
            x2 *= 2.0;
            if (x2 > kUnboundedProbe) throw UnboundedConjugate(ay);
        }
        return std::max(0.0, golden_max(value, x1 * 0.25, x2));
    }
    return std::max(0.0, golden_max(value, std::max(0.0, best_x - grid.step),
                                    best_x + grid.step));
}

}  // namespace

YoungFunction conjugate(const YoungFunction& phi, ConjugateGrid grid) {
    if (!(grid.step > 0.0) || !(grid.range > grid.step))
        throw DomainError("conjugate grid needs 0 < step < range");

    YoungFunction::Fn eval;
    YoungFunction::Fn deriv;
    if (phi.has_derivative()) {
        auto base = phi;  // capture by value; YoungFunction is immutable
        eval = [base](double y) { return conjugate_via_derivative(base, std::abs(y)); };
        // psi'(y) is the maximizer x*(y) of the conjugate supremum.
        deriv = [base](double y) -> double {
            const double ay = std::abs(y);
            if (ay == 0.0) return 0.0;
            const auto root =
                root_of_nondecreasing([&](double x) { return base.derivative(x); }, ay);
            if (!root) throw UnboundedConjugate(ay);
            return *root;
        };
    } else {
        auto base = phi;
        eval = [base, grid](double y) { return conjugate_via_grid(base, std::abs(y), grid); };
    }

    YoungFunction psi = deriv
                            ? YoungFunction("conjugate(" + phi.name() + ")", std::move(eval),
                                            std::move(deriv))
                            : YoungFunction("conjugate(" + phi.name() + ")", std::move(eval));
    if (is_preset_name(phi.name())) psi.set_known_conjugate_name(phi.name());
    return psi;
}

std::vector<double> delta2_default_grid() {
    std::vector<double> grid;
    const int points = 480;
    grid.reserve(points);
    const double lo = std::log(1e-6), hi = std::log(1e6);
    for (int i = 0; i < points; ++i)
        grid.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
    return grid;
}

namespace {

double max_doubling_ratio(const YoungFunction& phi, std::span<const double> grid) {
    double worst = 0.0;
    for (double t : grid) {
        if (!(t > 0.0)) throw DomainError("Delta2 grid must be strictly positive");
        const double p1 = phi(t);
        if (p1 == 0.0)
            throw InvalidYoungFunction("zero-only-at-origin", t, "phi(t) = 0 on Delta2 grid");
        const double p2 = phi(2.0 * t);
        if (std::isinf(p1) && std::isinf(p2)) continue;  // both overflowed, no information
        worst = std::max(worst, p2 / p1);
    }
    return worst;
}

}  // namespace

Delta2Result is_delta2(const YoungFunction& phi, std::span<const double> t_grid) {
    if (t_grid.size() < 2) throw DomainError("Delta2 grid needs at least two points");
    Delta2Result r;
    r.grid_min = t_grid.front();
    r.grid_max = t_grid.back();
    r.grid_points = static_cast<int>(t_grid.size());
    r.constant = max_doubling_ratio(phi, t_grid);

    // Refine by inserting geometric midpoints; a stable maximum is evidence
    // that the grid resolved the ratio.
    std::vector<double> refined;
    refined.reserve(t_grid.size() * 2);
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
        refined.push_back(t_grid[i]);
        refined.push_back(std::sqrt(t_grid[i] * t_grid[i + 1]));
    }
    refined.push_back(t_grid.back());
    r.refined_constant = max_doubling_ratio(phi, refined);

    r.satisfied = std::isfinite(r.constant) && std::isfinite(r.refined_constant) &&
                  r.refined_constant <= r.constant * 1.01 + 1e-9;
    return r;
}

Delta2Result is_delta2(const YoungFunction& phi) {
    const auto grid = delta2_default_grid();
    return is_delta2(phi, grid);
}

std::optional<ValidationIssue> validate_young(const YoungFunction& phi) {
    // Fixed sampling grid: 512 log-spaced points in [1e-8, 1e8].
    std::vector<double> grid;
    const int points = 512;
    grid.reserve(points);
    const double lo = std::log(1e-8), hi = std::log(1e8);
    for (int i = 0; i < points; ++i)
        grid.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));

    if (std::abs(phi.raw(0.0)) > 1e-12)
        return ValidationIssue{"phi(0) = 0", 0.0, "phi(0) = " + std::to_string(phi.raw(0.0))};

    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double v = phi(t);
        if (std::isnan(v)) return ValidationIssue{"finite evaluation", t, "phi(t) is NaN"};
        if (!(v > 0.0))
            return ValidationIssue{"zero-only-at-origin", t,
                                   "phi(t) = " + std::to_string(v) + " for t > 0"};
        vals[i] = v;
    }

    for (double t : grid) {
        const double a = phi.raw(t), b = phi.raw(-t);
        if (std::isinf(a) && std::isinf(b)) continue;
        if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a)))
            return ValidationIssue{"evenness", t,
                                   "phi(-t) differs from phi(t) by " + std::to_string(b - a)};
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const double rhs = 0.5 * (vals[i] + vals[j]);
            if (std::isinf(rhs)) continue;
            const double mid = phi(0.5 * (grid[i] + grid[j]));
            if (mid > rhs + 1e-9 * std::max(1.0, rhs))
                return ValidationIssue{"convexity", 0.5 * (grid[i] + grid[j]),
                                       "midpoint value exceeds chord"};
        }
    }

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (std::isinf(vals[i])) break;
        if (vals[i + 1] < vals[i] * (1.0 - 1e-12))
            return ValidationIssue{"monotone on [0, inf)", grid[i + 1], "phi decreased"};
    }
    // Divergence proxy: well above any moderate bound at the top of the grid.
    if (!(vals.back() > 1e3))
        return ValidationIssue{"divergence", grid.back(),
                               "phi(1e8) = " + std::to_string(vals.back()) + " <= 1e3"};
    return std::nullopt;
}

}  // namespace cosdyn
