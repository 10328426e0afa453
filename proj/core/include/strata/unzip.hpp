#ifndef STRATA_UNZIP_HPP
#define STRATA_UNZIP_HPP

#include <string>
#include <vector>

#include "strata/homology.hpp"
#include "strata/strat.hpp"

namespace strata {

enum class ChainClass : unsigned char { deep, outer, mixed };

/**
 * Classification of the simplices of the barycentric subdivision (chains in
 * the face poset) against a downward-closed set of strata: deep when every
 * chain member lies in the deep subcomplex, outer when none does, mixed
 * otherwise.  Deep members always form an initial segment of a chain; this
 * is asserted per run.
 */
struct ChainClassification {
    Subdivision sd;
    std::vector<ChainClass> simplex_class;  // per sd simplex
    std::vector<char> deep_simplex;         // per original simplex
    std::vector<int> deep_strata;           // validated stratum indices
};

/// Throws with a witness pair if `d` is not downward closed.
ChainClassification classify_chains(const StratifiedComplex& x, const std::vector<Id>& d);

/**
 * The combinatorial resolution along a closed union of strata Y:
 *
 *  - cone_locus: the subdivision of the deep subcomplex (the full subcomplex
 *    of Sd on deep barycenters);
 *  - unzip: the complement model of the blown-up space, restratified by the
 *    stratum of the chain maximum.  When Y is full in the complex the
 *    complement is taken one level coarser (full subcomplex of Sd on
 *    barycenters of simplices disjoint from Y), which realizes the cone law
 *    on the nose; otherwise it is the full subcomplex of Sd on non-deep
 *    barycenters.
 *  - link: the full subcomplex of the second subdivision on mixed-chain
 *    barycenters, the interface between the two sides;
 *  - pi: link -> Sd(cone_locus), a mixed chain to its deep initial segment;
 *  - rho: link -> Sd(unzip), a mixed chain to its outer final segment (with
 *    deep vertices deleted memberwise in the coarse-complement case).
 *
 * N (deep-or-mixed barycenters) and U (outer-or-mixed) cover the second
 * subdivision with intersection exactly the link; the Euler/Betti ledger
 * over that cover is produced by decomposition_report.
 */
struct UnzipDecomposition {
    bool degenerate = false;  // d empty (identity resolution) or total
    bool far_model = false;   // deep subcomplex full: complement taken coarser

    SimplicialComplex source_complex;
    SimplicialComplex deep_complex;

    StratifiedComplex unzip;
    SimplicialComplex cone_locus;
    SimplicialComplex link;

    SimplicialComplex sd_cone_locus;  // target of pi
    SimplicialComplex sd_unzip;       // target of rho
    std::vector<int> pi;              // per link vertex
    std::vector<int> rho;
    bool pi_simplicial = true;
    bool rho_simplicial = true;

    SimplicialComplex sd2;
    std::vector<int> n_vertices;
    std::vector<int> u_vertices;
    std::vector<int> link_vertices;
};

UnzipDecomposition unzip_once(const StratifiedComplex& x, const std::vector<Id>& d);

struct DecompositionLedger {
    bool balanced = false;
    std::string failure;
    long long chi_k = 0, chi_n = 0, chi_u = 0, chi_link = 0;
    std::vector<long long> betti_k, betti_sd2, betti_n, betti_y, betti_u, betti_unzip,
        betti_link;
    MVLedger mv;
};

/// Verifies the cover identities, the Euler count, the collapse equalities
/// Betti(N) = Betti(Y) and Betti(U) = Betti(unzip), and the Mayer-Vietoris
/// rank ledger against Betti of the source complex.
DecompositionLedger decomposition_report(const UnzipDecomposition& dec, Field field,
                                         int chain_cap = 2000,
                                         const std::vector<long long>* betti_sd2_cache = nullptr);

/// Repeatedly resolves the strata of maximal depth until depth is zero
/// everywhere.  Each stage must strictly decrease the maximal depth.
std::vector<UnzipDecomposition> unzip_tower(const StratifiedComplex& x);

}  // namespace strata

#endif
