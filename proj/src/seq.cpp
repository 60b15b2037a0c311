#include "cosdyn/seq.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace cosdyn {

FinSeq abs(const FinSeq& f) {
    FinSeq out;
    for (const auto& [x, v] : f) out.set(x, std::abs(v));
    return out;
}

FinSeq abs(const CFinSeq& f) {
    FinSeq out;
    for (const auto& [x, v] : f) out.set(x, std::abs(v));
    return out;
}

FinSeq real_part(const CFinSeq& f) {
    FinSeq out;
    for (const auto& [x, v] : f) out.set(x, v.real());
    return out;
}

FinSeq imag_part(const CFinSeq& f) {
    FinSeq out;
    for (const auto& [x, v] : f) out.set(x, v.imag());
    return out;
}

FinSeq positive_part(const FinSeq& f) {
    FinSeq out;
    for (const auto& [x, v] : f)
        if (v > 0.0) out.set(x, v);
    return out;
}

double modular(const YoungFunction& phi, const FinSeq& f) {
    double sum = 0.0;
    for (const auto& [x, v] : f) sum += phi(std::abs(v));
    return sum;
}

namespace {

constexpr double kSolveTol = 1e-12;  // 1-D solver tolerance on k

double bisect_luxemburg(const YoungFunction& phi, const FinSeq& f) {
    // modular(f/k) is continuous, strictly decreasing where positive, with
    // limits +inf at k -> 0 and 0 at k -> inf, so the level set at 1 is a
    // single k.
    const auto level = [&](double k) {
        double s = 0.0;
        for (const auto& [x, v] : f) s += phi(std::abs(v) / k);
        return s;
    };
    double hi = std::max(f.max_abs(), 1e-300);
    int grow = 0;
    while (level(hi) > 1.0) {
        hi *= 2.0;
        if (++grow > 4000) throw NumericError("Luxemburg bisection failed to bracket above");
    }
    double lo = hi;
    while (level(lo) < 1.0) {
        lo *= 0.5;
        if (lo < 1e-300) throw NumericError("Luxemburg bisection failed to bracket below");
    }
    while (hi - lo > kSolveTol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (level(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double luxemburg_norm(const YoungFunction& phi, const FinSeq& f) {
    if (f.empty()) return 0.0;
    return bisect_luxemburg(phi, f);
}

OrliczNormResult orlicz_norm_details(const YoungFunction& phi, const FinSeq& f) {
    if (f.empty()) return {};
    const auto amemiya = [&](double k) {
        double s = 1.0;
        for (const auto& [x, v] : f) s += phi(k * std::abs(v));
        return s / k;
    };

    // The objective decreases then increases; expand geometrically from a
    // scale-normalized start until both sides rise, then golden-section.
    double k0 = 1.0 / f.max_abs();
    double a = k0, b = k0;
    while (a > 1e-300 && amemiya(a * 0.5) < amemiya(a)) a *= 0.5;
    while (b < 1e300 && amemiya(b * 2.0) < amemiya(b)) b *= 2.0;
    a *= 0.5;
    b *= 2.0;

    const double r = 0.6180339887498949;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = amemiya(x1), f2 = amemiya(x2);
    while (b - a > kSolveTol * std::max(1.0, b)) {
        if (f1 > f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = amemiya(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = amemiya(x1);
        }
    }
    const double k = 0.5 * (a + b);
    return {amemiya(k), k};
}

double orlicz_norm(const YoungFunction& phi, const FinSeq& f) {
    return orlicz_norm_details(phi, f).value;
}

YoungFunction conjugate_of(const YoungFunction& phi) {
    if (!phi.known_conjugate_name().empty())
        return YoungFunction::preset(phi.known_conjugate_name());
    return conjugate(phi);
}

double max_feasible_point(const YoungFunction& psi) { return psi.inverse(1.0); }

namespace {

// Largest c with sum psi(c * nu) <= 1; nu nonzero somewhere.
double rescale_to_boundary(const YoungFunction& psi, const std::vector<double>& nu) {
    const auto level = [&](double c) {
        double s = 0.0;
        for (double v : nu) s += psi(c * v);
        return s;
    };
    double hi = 1.0;
    int grow = 0;
    while (level(hi) < 1.0) {
        hi *= 2.0;
        if (++grow > 2000) throw NumericError("dual rescale failed to bracket");
    }
    double lo = 0.0;
    while (hi - lo > 1e-13 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (level(mid) <= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

double orlicz_norm_dual_bound(const YoungFunction& phi, const FinSeq& f, int trials,
                              std::uint64_t seed) {
    if (trials < 1) throw DomainError("dual bound needs trials >= 1");
    if (f.empty()) return 0.0;
    const YoungFunction psi = conjugate_of(phi);

    std::vector<double> fv;
    fv.reserve(f.size());
    for (const auto& [x, v] : f) fv.push_back(std::abs(v));
    const std::size_t m = fv.size();

    const auto objective = [&](const std::vector<double>& nu) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += fv[i] * nu[i];
        return s;
    };
    const auto feasible = [&](const std::vector<double>& nu) {
        double s = 0.0;
        for (double v : nu) s += psi(v);
        return s <= 1.0 + 1e-12;
    };

    double best = 0.0;
    const auto consider = [&](const std::vector<double>& nu) {
        if (feasible(nu)) best = std::max(best, objective(nu));
    };

    // Ascent: push one coordinate along the gradient, rescale radially back
    // to the constraint boundary, keep improvements. Step shrinks when a full
    // sweep stalls.
    const auto ascend = [&](std::vector<double> nu) {
        double c = rescale_to_boundary(psi, nu);
        for (auto& v : nu) v *= c;
        consider(nu);
        double obj = objective(nu);
        const double scale = *std::max_element(fv.begin(), fv.end());
        int sweeps = 0;
        for (double step = 1.0; step > 1e-12 && sweeps < 200; ++sweeps) {
            bool improved = false;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<double> cand = nu;
                cand[i] += step * fv[i] / scale;
                const double cc = rescale_to_boundary(psi, cand);
                for (auto& v : cand) v *= cc;
                const double co = objective(cand);
                if (co > obj * (1.0 + 1e-14)) {
                    nu = std::move(cand);
                    obj = co;
                    improved = true;
                }
            }
            consider(nu);
            if (!improved) step *= 0.1;
        }
    };

    // Deterministic start: the conjugate-side witness at the one-parameter
    // minimizer, which attains the norm when phi is differentiable.
    const double kstar = orlicz_norm_details(phi, f).minimizer;
    std::vector<double> det(m);
    for (std::size_t i = 0; i < m; ++i) det[i] = phi.derivative_or_numeric(kstar * fv[i]);
    if (*std::max_element(det.begin(), det.end()) > 0.0) {
        // The witness sits on the boundary up to solver tolerance; nudge it
        // inside before accepting, then polish.
        std::vector<double> nudged = det;
        double c = rescale_to_boundary(psi, nudged);
        for (auto& v : nudged) v *= c;
        consider(nudged);
        ascend(det);
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int t = 0; t < trials; ++t) {
        std::vector<double> nu(m);
        for (auto& v : nu) v = unit(rng);
        ascend(std::move(nu));
    }
    return best;
}

}  // namespace cosdyn
