#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strata/corpus.hpp"
#include "strata/unzip.hpp"

using namespace strata;

namespace {

std::vector<long long> betti_q(const SimplicialComplex& k) {
    auto h = homology(k, Field::Q);
    while (!h.betti.empty() && h.betti.back() == 0) h.betti.pop_back();
    return h.betti;
}

int count_class(const ChainClassification& c, ChainClass cl) {
    int n = 0;
    for (auto x : c.simplex_class)
        if (x == cl) ++n;
    return n;
}

}  // namespace

TEST_CASE("chain classification on the cone over the circle") {
    auto x = corpus::stratified("cone-s1");
    auto cls = classify_chains(x, {"*"});
    // deep: only the singleton chain at the tip
    CHECK(count_class(cls, ChainClass::deep) == 1);
    // mixed: chains through the tip of length >= 2; the tip has 6 strict
    // cofaces (3 cone edges, 3 cone triangles), and 6 triples
    CHECK(count_class(cls, ChainClass::mixed) == 12);
    CHECK(count_class(cls, ChainClass::outer) ==
          cls.sd.sd.simplex_count() - 13);
}

TEST_CASE("chain classification at the extremes") {
    auto x = corpus::stratified("cone-s1");
    auto none = classify_chains(x, {});
    CHECK(count_class(none, ChainClass::outer) == none.sd.sd.simplex_count());
    auto all = classify_chains(x, x.strata.elements());
    CHECK(count_class(all, ChainClass::deep) == all.sd.sd.simplex_count());
}

TEST_CASE("non-downward-closed deep sets are rejected with a witness") {
    auto x = corpus::stratified("cone-s1");
    // a base vertex stratum without the tip below it is downward closed in
    // the cone poset only if it includes the tip
    std::vector<Id> bad = {"{0}"};
    CHECK_THROWS_WITH_AS(classify_chains(x, bad),
                         doctest::Contains("not downward closed"), ValidationError);
}

TEST_CASE("cone law for the two-point base") {
    auto x = corpus::stratified("cone-two-points");
    auto dec = unzip_once(x, {"*"});
    CHECK(dec.far_model);
    CHECK(dec.cone_locus.f_vector() == std::vector<long long>{1});
    auto sd_base = subdivide(corpus::complex("two-points")).sd;
    CHECK(complex_isomorphic(dec.unzip.complex, sd_base));
    auto sd2_base = subdivide(sd_base).sd;
    CHECK(complex_isomorphic(dec.link, sd2_base));
    CHECK(dec.pi_simplicial);
    CHECK(dec.rho_simplicial);
}

TEST_CASE("cone law for the circle base: hexagonal resolution, 12-gon link") {
    auto x = corpus::stratified("cone-s1");
    auto dec = unzip_once(x, {"*"});
    CHECK(dec.cone_locus.f_vector() == std::vector<long long>{1});
    CHECK(dec.unzip.complex.f_vector() == std::vector<long long>{6, 6});
    CHECK(dec.link.f_vector() == std::vector<long long>{12, 12});
    auto sd_s1 = subdivide(corpus::complex("s1")).sd;
    CHECK(complex_isomorphic(dec.unzip.complex, sd_s1));
    CHECK(complex_isomorphic(dec.link, subdivide(sd_s1).sd));
    CHECK(validate_strat(dec.unzip).ok());

    // pi collapses the link onto the subdivided cone locus, which is a point
    for (int v = 0; v < dec.link.vertex_count(); ++v)
        CHECK(dec.sd_cone_locus.vertex_id(dec.pi[static_cast<size_t>(v)]) == "{{v}}");
    CHECK(dec.pi_simplicial);
    CHECK(dec.rho_simplicial);
}

TEST_CASE("interval with both endpoints deep: point resolution, two-point link") {
    auto x = corpus::stratified("delta1-face");
    auto dec = unzip_once(x, {"{0}", "{1}"});
    CHECK_FALSE(dec.far_model);  // the deep set is not full in the interval
    CHECK(dec.unzip.complex.f_vector() == std::vector<long long>{1});
    CHECK(dec.unzip.complex.vertex_id(0) == "{0,1}");
    CHECK(dec.link.f_vector() == std::vector<long long>{2});
    CHECK(dec.cone_locus.f_vector() == std::vector<long long>{2});
    auto led = decomposition_report(dec, Field::Q);
    CHECK(led.balanced);
}

TEST_CASE("empty deep set gives the identity resolution") {
    auto x = corpus::stratified("cone-s1");
    auto dec = unzip_once(x, {});
    CHECK(dec.degenerate);
    CHECK(dec.unzip.complex.simplices() == x.complex.simplices());
    CHECK(dec.link.simplex_count() == 0);
    auto led = decomposition_report(dec, Field::Q);
    CHECK(led.balanced);
}

TEST_CASE("total deep set gives the trivial decomposition") {
    auto x = corpus::stratified("delta1-face");
    auto dec = unzip_once(x, x.strata.elements());
    CHECK(dec.degenerate);
    CHECK(dec.link.simplex_count() == 0);
    CHECK(dec.unzip.complex.simplex_count() == 0);
}

TEST_CASE("ledger balances on the cone over the circle") {
    auto x = corpus::stratified("cone-s1");
    auto dec = unzip_once(x, {"*"});
    for (Field f : {Field::Q, Field::F2}) {
        auto led = decomposition_report(dec, f);
        CHECK(led.balanced);
        CHECK(led.chi_k == led.chi_n + led.chi_u - led.chi_link);
        CHECK(led.betti_n == std::vector<long long>{1});  // collapses onto the tip
        CHECK(led.betti_u == std::vector<long long>{1, 1});
        CHECK(led.betti_unzip == std::vector<long long>{1, 1});
    }
}

TEST_CASE("ledger balances on the sphere with all vertices deep") {
    auto x = corpus::stratified("s2-face");
    std::vector<Id> d = {"{0}", "{1}", "{2}", "{3}"};
    auto dec = unzip_once(x, d);
    auto led = decomposition_report(dec, Field::Q);
    CHECK(led.balanced);
    CHECK(led.betti_y == std::vector<long long>{4});
    CHECK(led.betti_n == std::vector<long long>{4});
    CHECK(led.chi_k == 2);
    CHECK(led.chi_n + led.chi_u - led.chi_link == 2);
}

TEST_CASE("mixed-chain projections hit every cone-locus vertex on cone inputs") {
    for (const auto& name : {"cone-two-points", "cone-s1", "cone-hexagon"}) {
        auto x = corpus::stratified(name);
        auto dec = unzip_once(x, {"*"});
        std::vector<char> hit(static_cast<size_t>(dec.sd_cone_locus.vertex_count()), 0);
        for (int v = 0; v < dec.link.vertex_count(); ++v)
            hit[static_cast<size_t>(dec.pi[static_cast<size_t>(v)])] = 1;
        for (char h : hit) CHECK(h == 1);
    }
}

TEST_CASE("towers") {
    // one stage resolves the cone tip, the next the base vertices
    auto cone = corpus::stratified("cone-s1");
    auto stages = unzip_tower(cone);
    CHECK(stages.size() == 2);
    CHECK(depth_dim_report(cone).max_depth() == 2);

    // face-stratified triangle: vertices first, then the edge strata
    auto d2 = corpus::stratified("delta2-face");
    CHECK(depth_dim_report(d2).max_depth() == 2);
    auto stages2 = unzip_tower(d2);
    CHECK(stages2.size() == 2);
    CHECK(betti_q(stages2.back().unzip.complex) == std::vector<long long>{1});

    // single stratum: nothing to do
    StratifiedComplex flat;
    flat.complex = corpus::complex("torus");
    flat.strata = Poset::from_relations({"s"}, {});
    flat.assignment.assign(static_cast<size_t>(flat.complex.simplex_count()), 0);
    CHECK(unzip_tower(flat).empty());
}

TEST_CASE("tower length never exceeds the maximal depth on stratified corpus entries") {
    for (const auto& name : corpus::stratified_names()) {
        auto x = corpus::stratified(name);
        if (x.complex.simplex_count() > 30) continue;  // larger ones run in acceptance
        auto stages = unzip_tower(x);
        CHECK(static_cast<int>(stages.size()) <= std::max(0, depth_dim_report(x).max_depth()));
    }
}

TEST_CASE("every downward-closed proper deep set balances on a small instance") {
    auto x = corpus::stratified("delta2-face");
    int n = x.strata.size();
    int checked = 0;
    for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
        std::vector<int> sel;
        std::vector<Id> ids;
        for (int i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) {
                sel.push_back(i);
                ids.push_back(x.strata.id_of(i));
            }
        if (!x.strata.is_downward_closed(sel)) continue;
        auto dec = unzip_once(x, ids);
        auto led = decomposition_report(dec, Field::Q);
        CHECK(led.balanced);
        ++checked;
    }
    CHECK(checked > 0);
}
