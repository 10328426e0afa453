#ifndef STRATA_COMPLEX_HPP
#define STRATA_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/poset.hpp"

namespace strata {

/// Simplices are sorted vertex-index vectors; the list of simplices is kept
/// in canonical (dimension, lexicographic) order so serialized output is
/// byte-stable.
struct SimplexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/**
 * Finite abstract simplicial complex over totally ordered vertex ids.
 *
 * The vertex order is the order of the `vertices()` list (constructions such
 * as joins concatenate orders).  Use `from_maximal` / `from_simplices` to
 * build; mutation after construction is not supported.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from maximal simplices; the closure under faces is taken.
    static SimplicialComplex from_maximal(const std::vector<Id>& vertices,
                                          const std::vector<std::vector<Id>>& maximal);

    /// Build from an explicit simplex list; set `close` to take the closure.
    /// Every listed vertex becomes a 0-simplex only if it appears in some
    /// simplex or `close` adds it; isolated vertices must be listed as
    /// singleton simplices.
    static SimplicialComplex from_simplices(const std::vector<Id>& vertices,
                                            const std::vector<std::vector<Id>>& simplices,
                                            bool close);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const std::vector<Id>& vertices() const { return verts_; }
    const Id& vertex_id(int i) const { return verts_.at(static_cast<size_t>(i)); }
    int vertex_index(const Id& v) const;

    int simplex_count() const { return static_cast<int>(simp_.size()); }
    const std::vector<std::vector<int>>& simplices() const { return simp_; }
    const std::vector<int>& simplex(int s) const { return simp_.at(static_cast<size_t>(s)); }
    int index_of(const std::vector<int>& s) const;  // -1 if absent
    bool contains(const std::vector<int>& s) const { return index_of(s) >= 0; }

    /// -1 for the empty complex.
    int dim() const;
    /// Simplex counts per dimension.
    std::vector<long long> f_vector() const;
    long long euler() const;

    /// "{a,b,c}" with ids in vertex order.
    Id label(const std::vector<int>& s) const;
    std::vector<Id> id_vector(const std::vector<int>& s) const;
    std::vector<int> to_indices(const std::vector<Id>& ids) const;

    /// Codimension-1 faces, in deletion order.
    static std::vector<std::vector<int>> facets(const std::vector<int>& s);

    bool operator==(const SimplicialComplex& other) const {
        return verts_ == other.verts_ && simp_ == other.simp_;
    }

private:
    std::vector<Id> verts_;
    std::map<Id, int> vidx_;
    std::vector<std::vector<int>> simp_;
    std::map<std::vector<int>, int, SimplexLess> sidx_;

    void finalize(std::set<std::vector<int>, SimplexLess>&& simplices);
    friend SimplicialComplex order_complex(const Poset&);
};

struct ComplexReport {
    // Each violation: a simplex present whose listed face is missing.
    std::vector<std::pair<std::vector<Id>, std::vector<Id>>> missing_faces;
    bool ok() const { return missing_faces.empty(); }
};

ComplexReport validate_complex(const SimplicialComplex& k);

/// v joined to everything: simplices of k, {v}, and {v} u s for each s.
SimplicialComplex cone_complex(const Id& v, const SimplicialComplex& k);

/// {s u t : s in k or empty, t in l or empty, not both}; vertex order is
/// k's order followed by l's.
SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Inclusion order on simplices; element ids are simplex labels.
Poset face_poset(const SimplicialComplex& k);

/// Nerve: vertices are elements (ordered by the deterministic linear
/// extension), simplices are nonempty chains.
SimplicialComplex order_complex(const Poset& p);

struct Subdivision {
    SimplicialComplex sd;
    /// Per sd-vertex: the simplex of the original complex it subdivides
    /// (vertex indices of the original).  The carrier of an sd-simplex, a
    /// chain, is the entry of its inclusion-maximal vertex.
    std::vector<std::vector<int>> carrier;
    /// Index of the carrier entry maximal in a given sd-simplex.
    int chain_max(const std::vector<int>& sd_simplex) const;
};

Subdivision subdivide(const SimplicialComplex& k);

/// Order complex of the product of the face posets; triangulates |k| x |l|.
/// Vertices are pairs "(s,t)" of simplex labels.
SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l);

struct LinkStar {
    SimplicialComplex link;
    SimplicialComplex star;  // closed star
};

LinkStar link_star(const std::vector<Id>& sigma, const SimplicialComplex& k);

/// Full subcomplex on a vertex subset (all simplices with every vertex in
/// the subset); vertex order inherited.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& vertex_subset);

/// Backtracking isomorphism search on vertex bijections, pruned by iterated
/// degree refinement.
bool complex_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace strata

#endif
