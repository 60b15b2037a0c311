#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "cosdyn/group.hpp"
#include "cosdyn/young.hpp"

namespace cosdyn {

/// A finitely supported function on Z^d. The stored map holds exactly the
/// nonzero values: writing a zero erases the point, so `support()` always
/// equals the key set. Scalar is double or std::complex<double>.
template <class Scalar>
class FinSeqT {
  public:
    FinSeqT() = default;

    static FinSeqT delta(const GroupElement& x, Scalar value = Scalar(1)) {
        FinSeqT f;
        f.set(x, value);
        return f;
    }

    static FinSeqT indicator(const FiniteSet& s) {
        FinSeqT f;
        for (const auto& x : s) f.set(x, Scalar(1));
        return f;
    }

    Scalar at(const GroupElement& x) const {
        const auto it = values_.find(x);
        return it == values_.end() ? Scalar(0) : it->second;
    }

    void set(const GroupElement& x, Scalar value) {
        if (!values_.empty() && values_.begin()->first.dim() != x.dim())
            throw DomainError("sequence mixes point dimensions");
        if (value == Scalar(0))
            values_.erase(x);
        else
            values_[x] = value;
    }

    void add(const GroupElement& x, Scalar value) { set(x, at(x) + value); }

    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }

    FiniteSet support() const {
        FiniteSet s;
        for (const auto& [x, v] : values_) s.insert(x);
        return s;
    }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    FinSeqT& operator+=(const FinSeqT& o) {
        for (const auto& [x, v] : o.values_) add(x, v);
        return *this;
    }
    FinSeqT& operator-=(const FinSeqT& o) {
        for (const auto& [x, v] : o.values_) add(x, -v);
        return *this;
    }
    FinSeqT& operator*=(Scalar c) {
        if (c == Scalar(0)) {
            values_.clear();
            return *this;
        }
        for (auto& [x, v] : values_) v *= c;
        return *this;
    }

    friend FinSeqT operator+(FinSeqT a, const FinSeqT& b) { return a += b; }
    friend FinSeqT operator-(FinSeqT a, const FinSeqT& b) { return a -= b; }
    friend FinSeqT operator*(Scalar c, FinSeqT f) { return f *= c; }
    FinSeqT operator-() const {
        FinSeqT f(*this);
        return f *= Scalar(-1);
    }

    /// x |-> f(x - n*g).
    FinSeqT shifted(const GroupElement& g, std::int64_t n) const {
        FinSeqT out;
        for (const auto& [x, v] : values_) out.set(x + g.scaled(n), v);
        return out;
    }

    /// f * indicator(s).
    FinSeqT restricted(const FiniteSet& s) const {
        FinSeqT out;
        for (const auto& [x, v] : values_)
            if (s.contains(x)) out.set(x, v);
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [x, v] : values_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const FinSeqT& o) const { return values_ == o.values_; }

  private:
    std::map<GroupElement, Scalar> values_;
};

using FinSeq = FinSeqT<double>;
using CFinSeq = FinSeqT<std::complex<double>>;

/// Pointwise |f|.
FinSeq abs(const FinSeq& f);
FinSeq abs(const CFinSeq& f);
/// Pointwise real and imaginary parts.
FinSeq real_part(const CFinSeq& f);
FinSeq imag_part(const CFinSeq& f);
/// Pointwise max(f, 0).
FinSeq positive_part(const FinSeq& f);

/// Sum over the support of phi(|f(x)|); 0 for the empty sequence.
double modular(const YoungFunction& phi, const FinSeq& f);

/// Luxemburg norm: the unique k > 0 with modular(phi, f/k) = 1, by bisection;
/// 0 for the zero sequence.
double luxemburg_norm(const YoungFunction& phi, const FinSeq& f);

struct OrliczNormResult {
    double value = 0.0;
    double minimizer = 0.0;  // the k achieving the one-parameter minimum
};

/// Orlicz norm through the one-parameter form
/// min_{k > 0} (1 + sum phi(k|f|)) / k, by golden-section search.
OrliczNormResult orlicz_norm_details(const YoungFunction& phi, const FinSeq& f);
double orlicz_norm(const YoungFunction& phi, const FinSeq& f);

/// Certified lower bound on the Orlicz norm: maximizes sum |f(x)| nu(x) over
/// nu >= 0 on support(f) with sum psi(nu) <= 1, by projected coordinate
/// ascent from `trials` random starts plus the deterministic start
/// nu(x) = phi'(k* |f(x)|) at the one-parameter minimizer k*. Every candidate
/// is feasibility-checked before being accepted.
double orlicz_norm_dual_bound(const YoungFunction& phi, const FinSeq& f, int trials,
                              std::uint64_t seed = 0);

/// The conjugate partner used by the dual bound: the closed-form preset when
/// the function declares one, otherwise the numerical conjugate.
YoungFunction conjugate_of(const YoungFunction& phi);

/// Largest single-point value of a feasible nu for modular constraint
/// sum psi(|nu|) <= 1, i.e. the monotone inverse of psi at 1.
double max_feasible_point(const YoungFunction& psi);

}  // namespace cosdyn
