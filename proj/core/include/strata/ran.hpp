#ifndef STRATA_RAN_HPP
#define STRATA_RAN_HPP

#include <string>
#include <vector>

#include "strata/poset.hpp"

namespace strata {

/// All partitions of I, ordered by reverse inclusion of the underlying
/// equivalence relations: the indiscrete partition is the minimum, the
/// discrete one the maximum.  Element ids look like "{a,b|c}" with blocks
/// and members in sorted order.
Poset partitions_poset(const std::vector<Id>& ground);

struct WreathPoset {
    Poset poset;                  // pairs (partition, labeling of blocks)
    Poset partitions;             // partitions_poset(ground)
    Poset power;                  // |ground|-fold product of the label poset
    std::vector<int> to_partitions;  // monotone projection
    std::vector<int> to_power;       // monotone projection
};

/// Pairs (partition P of I, map I/P -> p), with (P,c) <= (P',c') iff P'
/// refines P and c factors below c' pointwise.  Returns the two monotone
/// projections.
WreathPoset wreath_poset(const std::vector<Id>& ground, const Poset& p);

/**
 * The stratifying relation of the space of at most `max_points` points: maps
 * c : P -> Z>=0 with 1 <= sum <= max_points, where c <= c' iff the set
 * {p : c_p > c'_p} contains no maximal element of P.  The relation is stated,
 * not repaired: the attached validation verdict records any failed poset
 * axiom verbatim.
 */
struct RanRelation {
    std::vector<std::vector<int>> points;  // per element: counts per stratum of p
    std::vector<Id> labels;
    std::vector<std::vector<unsigned char>> leq;
    PosetReport verdict;

    int size() const { return static_cast<int>(points.size()); }
    /// View as a Poset (requires a clean verdict).
    Poset as_poset() const;
};

RanRelation ran_poset(const Poset& p, int max_points);

}  // namespace strata

#endif
