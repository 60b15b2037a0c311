#include "cosdyn/witness.hpp"

#include <algorithm>

#include "cosdyn/parallel.hpp"

namespace cosdyn {

FinSeq build_vk(const WeightedTranslation& op, const FinSeq& f, const FinSeq& h,
                std::int64_t n, const std::pair<FiniteSet, FiniteSet>& partition) {
    const auto& [plus, minus] = partition;
    if (!plus.intersected(minus).empty())
        throw DomainError("partition parts must be disjoint");
    const FiniteSet K = plus.united(minus);
    const FiniteSet supports = f.support().united(h.support());
    if (!(supports.united(K) == K))
        throw DomainError("partition must cover the supports of f and h");
    if (K.empty()) return f;
    const std::int64_t sep = separation_index(K, op.shift());
    if (n <= sep) throw SeparationError(n, sep + 1);

    FinSeq v = f.restricted(K);
    v += 2.0 * apply_T(op, h.restricted(plus), n);
    v += 2.0 * apply_S(op, h.restricted(minus), n);
    return v;
}

WitnessTrace verify_witness(const WeightedTranslation& op, const YoungFunction& phi,
                            const FinSeq& f, const FinSeq& h, std::span<const std::int64_t> ns,
                            PartitionStrategy strategy) {
    WitnessTrace trace;
    trace.phi_name = phi.name();
    trace.weight_name = op.weight().name();
    trace.g = op.shift();
    trace.f = f;
    trace.h = h;
    trace.strategy = strategy;
    trace.rows.resize(ns.size());

    const FiniteSet K = f.support().united(h.support());

    parallel_for_index(ns.size(), [&](std::size_t i) {
        const std::int64_t n = ns[i];
        WitnessRow row;
        row.n = n;
        if (K.empty()) {
            trace.rows[i] = std::move(row);
            return;
        }
        const auto partition = choose_partition(op, K, n, strategy);
        row.e_plus_size = partition.first.size();
        row.v = build_vk(op, f, h, n, partition);

        const FinSeq cv = apply_cosine(op, row.v, n);
        row.dist_to_f = orlicz_norm(phi, row.v - f);
        row.dist_to_h = orlicz_norm(phi, cv - h);

        // The triangle-inequality budget for ||C_n v - h||: the tail of h
        // outside K (identically zero in the discrete case, kept to hold the
        // ledger shape), the two half-size images of f, and the two
        // double-length images of h.
        const FinSeq f_on_K = f.restricted(K);
        row.bound_terms[0] = orlicz_norm(phi, h - h.restricted(K));
        row.bound_terms[1] = 0.5 * orlicz_norm(phi, apply_T(op, f_on_K, n));
        row.bound_terms[2] = 0.5 * orlicz_norm(phi, apply_S(op, f_on_K, n));
        row.bound_terms[3] =
            orlicz_norm(phi, apply_T(op, h.restricted(partition.first), 2 * n));
        row.bound_terms[4] =
            orlicz_norm(phi, apply_S(op, h.restricted(partition.second), 2 * n));
        row.bound_total = 0.0;
        for (double t : row.bound_terms) row.bound_total += t;

        if (row.dist_to_h > row.bound_total + 1e-9)
            throw NumericError("witness bound violated at n = " + std::to_string(n) +
                               ": distance " + std::to_string(row.dist_to_h) +
                               " exceeds budget " + std::to_string(row.bound_total));
        trace.rows[i] = std::move(row);
    });
    return trace;
}

}  // namespace cosdyn
