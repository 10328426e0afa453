#ifndef STRATA_CORPUS_HPP
#define STRATA_CORPUS_HPP

#include <string>
#include <vector>

#include "strata/sheaf.hpp"
#include "strata/strat.hpp"

namespace strata::corpus {

/// Deterministic built-in complexes: point, two-points, delta1..delta3,
/// s1 (triangle boundary), s2 (tetrahedron boundary), hexagon, torus
/// (7 vertices), rp2 (6 vertices), their cones (cone-<name>) and the joins
/// suspension-s1, circle-join.  Construction is reproducible byte for byte.
std::vector<std::string> complex_names();
SimplicialComplex complex(const std::string& name);

/// Stratified corpus: <name>-face for the small complexes, delta1..3-standard,
/// cone-two-points, cone-s1, cone-hexagon, cone-s2 and join-point-point.
std::vector<std::string> stratified_names();
StratifiedComplex stratified(const std::string& name);

/// Rational sheaf corpus: constant-<complex> rank-1 sheaves, the rank-1
/// circle systems monodromy-plus / monodromy-minus on s1 and hexagon-plus /
/// hexagon-minus, and zero-s1.
std::vector<std::string> sheaf_names();
struct NamedSheaf {
    Sheaf sheaf;
    StratifiedComplex base;
};
NamedSheaf sheaf(const std::string& name);

}  // namespace strata::corpus

#endif
