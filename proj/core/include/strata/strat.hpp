#ifndef STRATA_STRAT_HPP
#define STRATA_STRAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/complex.hpp"
#include "strata/homology.hpp"
#include "strata/poset.hpp"

namespace strata {

/**
 * A simplicial complex with a monotone assignment of strata to simplices:
 * faces never sit in strictly higher strata.  Monotonicity is exactly
 * continuity of the induced map to the stratifying poset with its
 * upward-closed-opens topology.
 */
struct StratifiedComplex {
    SimplicialComplex complex;
    Poset strata;
    /// Stratum index per simplex, aligned with complex.simplices().
    std::vector<int> assignment;

    int stratum_of(int simplex_id) const { return assignment.at(static_cast<size_t>(simplex_id)); }
    const Id& stratum_id(int simplex_id) const { return strata.id_of(stratum_of(simplex_id)); }
    /// Simplex ids assigned to the given stratum.
    std::vector<int> stratum_members(int stratum) const;
    std::vector<int> empty_strata() const;
};

struct StratReport {
    /// Face pairs (face, coface) whose strata are not comparable the right way.
    std::vector<std::pair<std::vector<Id>, std::vector<Id>>> monotonicity;
    std::vector<Id> empty_strata;  // flagged, not an error
    bool ok() const { return monotonicity.empty(); }
};

StratReport validate_strat(const StratifiedComplex& x);

/// Canonical stratification: strata poset is the face poset, assignment the
/// identity.
StratifiedComplex face_stratification(const SimplicialComplex& k);

/// The n-simplex over the chain 0 < 1 < ... < n; a simplex goes to its
/// largest vertex index.
StratifiedComplex standard_simplex_stratification(int n);

/// Cone: new apex vertex and new minimal stratum; {v} goes to the tip,
/// s and {v} u s keep the stratum of s.
StratifiedComplex cone_strat(const Id& v, const StratifiedComplex& x, const Id& tip = "*");

/// Join: strata poset is join_poset; pure-left simplices keep s(sigma)
/// (as "L:..."), pure-right keep t(tau) ("R:..."), mixed go to the pair.
StratifiedComplex join_strat(const StratifiedComplex& x, const StratifiedComplex& y);

/// Product: complex is the order-complex triangulation, stratified by the
/// pair of strata of the componentwise chain maxima.
StratifiedComplex product_strat(const StratifiedComplex& x, const StratifiedComplex& y);

/**
 * Restriction to a consecutive set of strata.  Downward-closed q keeps the
 * literal subcomplex; upward-closed q takes the full subcomplex of the
 * barycentric subdivision on barycenters of in-stratum simplices, stratified
 * by the stratum of the chain maximum; general consecutive q composes the
 * two.  The result models the restricted space up to stratified homotopy
 * equivalence.  Non-consecutive q throws with the witness triple.
 */
StratifiedComplex restrict_strata(const StratifiedComplex& x, const std::vector<Id>& q);

struct StratumDepthRow {
    Id stratum;
    bool empty = false;
    int stratum_dim = -1;  // max dim of simplices assigned here
    int star_dim = -1;     // max dim of simplices with a face assigned here
    int depth = 0;         // star_dim - stratum_dim
    bool pure = true;      // star dimension constant across the stratum's simplices
};

struct DepthDimReport {
    std::vector<StratumDepthRow> rows;  // aligned with strata poset elements
    int max_star_dim = -1;
    Poset depth_dim_poset;             // pp_make(max_star_dim)
    std::vector<Id> image;             // per stratum: id "(depth,dim)" (empty strata -> "")
    bool monotone = true;              // over non-empty pure strata
    std::vector<std::array<Id, 2>> witnesses;
    int max_depth() const;
};

DepthDimReport depth_dim_report(const StratifiedComplex& x);

}  // namespace strata

#endif
