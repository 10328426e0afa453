#ifndef STRATA_SHEAF_HPP
#define STRATA_SHEAF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/exitpath.hpp"
#include "strata/homology.hpp"

namespace strata {

/**
 * A constructible sheaf presented as a W-inverting functor on the face
 * poset: finite-dimensional rational stalks at the poset elements,
 * generization matrices on covering edges (face -> coface), required to be
 * path independent and invertible along weak edges.  Stalks sit at the
 * deeper simplex; maps go toward cofaces, so the degree-0 cohomology is the
 * limit (global sections).
 */
struct Sheaf {
    RelativeCategory carrier;
    std::vector<int> dims;                       // stalk dimension per base element
    std::map<std::pair<int, int>, QMatrix> maps; // covering edges (face, coface)
};

struct SheafReport {
    bool shapes_ok = true;
    std::string shape_error;
    bool path_independent = true;
    /// First violating diamond: (source, via_a, via_b, target).
    std::optional<std::array<Id, 4>> diamond;
    bool w_inverting = true;
    std::optional<std::pair<Id, Id>> non_invertible_weak;
    bool ok() const { return shapes_ok && path_independent && w_inverting; }
};

SheafReport validate_sheaf(const Sheaf& f);

/// All stalks of the given rank, identity maps.
Sheaf constant_sheaf(const StratifiedComplex& x, int rank);

/// Every covering-edge matrix invertible (weak or not).
bool is_locally_constant(const Sheaf& f);

/// Composite matrix for any pair a <= b; requires path independence.
QMatrix sheaf_composite(const Sheaf& f, int a, int b);

struct GlobalSections {
    int dim = 0;
    /// Basis vectors in the concatenated stalk coordinates, one column per
    /// section; `offsets[i]` is the first coordinate of stalk i.
    QMatrix basis;
    std::vector<int> offsets;
};

GlobalSections global_sections(const Sheaf& f);

struct SheafCohomology {
    std::vector<long long> h;
    long long euler = 0;           // alternating sum of h
    long long euler_cochain = 0;   // alternating sum of cochain dimensions
};

/// Cohomology of the functor: cochains are indexed by strict chains of the
/// base poset with the stalk of the chain's top element; the last face map
/// composes with the functor.  H^0 equals global sections.
SheafCohomology sheaf_cohomology(const Sheaf& f);

/// Compose with the carrier projection Face(Sd k) -> Face(k); the result is
/// W-inverting for the subdivision's weak edges by construction.
Sheaf pullback_refinement(const Sheaf& f, const StratifiedComplex& x);

/// A functor on the chain [n]: stalk dimensions and one matrix per step
/// i -> i+1 with shape dims[i+1] x dims[i].
struct ChainFunctor {
    std::vector<int> dims;
    std::vector<QMatrix> steps;
};

struct CoarseEquivalenceReport {
    bool w_inverting = true;
    SheafCohomology on_faces;   // induced sheaf on the face poset of the simplex
    SheafCohomology on_chain;   // the functor's cohomology over the chain poset
    bool equal = false;
};

/// The standard n-simplex stratification turns a functor on [n] into a sheaf
/// on the face poset (stalk at sigma = value at max vertex); both sides must
/// have equal cohomology.
CoarseEquivalenceReport coarse_equivalence_check(int n, const ChainFunctor& g);

}  // namespace strata

#endif
