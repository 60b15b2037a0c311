#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosdyn/criteria.hpp"

namespace cosdyn {

struct WitnessRow {
    std::int64_t n = 0;
    FinSeq v;                              // the constructed approximant
    double dist_to_f = 0.0;                // ||v - f||
    double dist_to_h = 0.0;                // ||C_n v - h||
    std::array<double, 5> bound_terms{};   // tail of h, T^n f / 2, S^n f / 2,
                                           // T^2n h restricted to E+, S^2n h to E-
    double bound_total = 0.0;
    std::size_t e_plus_size = 0;
};

struct WitnessTrace {
    std::string phi_name;
    std::string weight_name;
    GroupElement g{1};
    FinSeq f, h;
    PartitionStrategy strategy = PartitionStrategy::all_plus;
    std::vector<WitnessRow> rows;
};

/// The approximant f * chi_K + 2 T^n(h * chi_{E+}) + 2 S^n(h * chi_{E-}),
/// whose three summands have pairwise disjoint supports once n exceeds the
/// separation index of K = E+ u E-. Requires the partition to cover both
/// supports; throws SeparationError naming the minimal admissible n.
FinSeq build_vk(const WeightedTranslation& op, const FinSeq& f, const FinSeq& h,
                std::int64_t n, const std::pair<FiniteSet, FiniteSet>& partition);

/// For each n: builds the approximant, measures ||v - f|| and ||C_n v - h||
/// exactly, and records the five-term triangle-inequality budget that
/// dominates the latter. Partition per `strategy` on K = supp f u supp h.
WitnessTrace verify_witness(const WeightedTranslation& op, const YoungFunction& phi,
                            const FinSeq& f, const FinSeq& h, std::span<const std::int64_t> ns,
                            PartitionStrategy strategy);

}  // namespace cosdyn
