#ifndef STRATA_EXITPATH_HPP
#define STRATA_EXITPATH_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "strata/homology.hpp"
#include "strata/strat.hpp"

namespace strata {

/**
 * The enter-path category of a stratified complex, presented as a relative
 * category: the face poset of the complex together with the set W of strict
 * face relations that stay inside one stratum.  The localization at W is
 * never materialized; consumers work with W-inverting functors instead.
 */
struct RelativeCategory {
    Poset base;                         // face poset of the complex
    std::set<std::pair<int, int>> weak; // strict pairs (face, coface) with equal stratum

    bool is_weak(int a, int b) const { return weak.count({a, b}) > 0; }
};

RelativeCategory enter_category(const StratifiedComplex& x);

/// The carrier projection Face(Sd k) -> Face(k): a chain goes to its maximal
/// member.  `map[i]` is the target index for source element i.
struct RefinementFunctor {
    Poset source;
    Poset target;
    std::vector<int> map;
    bool monotone = true;
};

RefinementFunctor refinement_functor(const SimplicialComplex& k);

struct ClassifyingSpaceReport {
    HomologyProfile nerve;  // of the order complex of the enter category base
    HomologyProfile space;  // of the complex itself
    bool equal = false;
};

/// Betti numbers of the classifying space of the enter-path category agree
/// with those of the complex (barycentric subdivision invariance).
ClassifyingSpaceReport classifying_space_check(const StratifiedComplex& x, Field field);

struct GroupoidVerdict {
    bool groupoid = false;
    /// A strict face pair not in W when the answer is no.
    std::optional<std::pair<std::vector<Id>, std::vector<Id>>> witness;
};

/// True iff every strict face relation is weak, i.e. the assignment is
/// constant on connected components.
GroupoidVerdict is_groupoid(const StratifiedComplex& x);

}  // namespace strata

#endif
