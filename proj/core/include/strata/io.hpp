#ifndef STRATA_IO_HPP
#define STRATA_IO_HPP

#include <string>

#include "json.hpp"
#include "strata/exitpath.hpp"
#include "strata/homology.hpp"
#include "strata/ran.hpp"
#include "strata/sheaf.hpp"
#include "strata/strat.hpp"
#include "strata/unzip.hpp"

namespace strata {

using json = nlohmann::ordered_json;

// Document formats.  Posets: {"elements": [...], "leq": [[a,b],...]} with
// reflexive pairs implied; emitted with elements sorted.  Complexes:
// {"vertices": [...], "simplices": [[...],...]} listing maximal simplices,
// closure taken on load.  Stratified complexes add {"poset": ...,
// "assignment": [[simplex, stratum],...]} covering every simplex.  Sheaves:
// {"base": <stratified complex>, "dims": {label: n}, "maps":
// [[src, dst, [["p/q",...],...]],...]} on covering edges.

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& doc);

json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& doc);

json strat_to_json(const StratifiedComplex& x);
StratifiedComplex strat_from_json(const json& doc);

json sheaf_to_json(const Sheaf& f, const StratifiedComplex& base);
Sheaf sheaf_from_json(const json& doc, StratifiedComplex* base_out = nullptr);

json relcat_to_json(const RelativeCategory& c);

json homology_to_json(const HomologyProfile& h);
json poset_report_to_json(const PosetReport& r);
json complex_report_to_json(const ComplexReport& r);
json strat_report_to_json(const StratReport& r);
json sheaf_report_to_json(const SheafReport& r);
json depth_report_to_json(const DepthDimReport& r, const StratifiedComplex& x);
json cohomology_to_json(const SheafCohomology& h);
json ran_to_json(const RanRelation& r);
json wreath_to_json(const WreathPoset& w);
json ledger_to_json(const DecompositionLedger& led);
json decomposition_to_json(const UnzipDecomposition& dec);

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// OFF mesh for complexes of dimension <= 3 (tetrahedra emitted as their
/// triangular faces).  Coordinates come from iterated barycentric placement:
/// vertices whose labels are brace-nested chains average their members'
/// coordinates; base vertices are placed on a deterministic sphere.
std::string off_export(const SimplicialComplex& k);

}  // namespace strata

#endif
