#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "strata/complex.hpp"
#include "strata/corpus.hpp"
#include "strata/homology.hpp"

using namespace strata;

namespace {

std::vector<long long> betti(const SimplicialComplex& k, Field f) {
    auto h = homology(k, f);
    while (!h.betti.empty() && h.betti.back() == 0) h.betti.pop_back();
    return h.betti;
}

// Both the implementation and the independent dense oracle, which must agree.
std::vector<long long> checked_betti(const SimplicialComplex& k, Field f) {
    auto fast = betti(k, f);
    auto slow = oracle::betti(k, f);
    REQUIRE(fast == slow);
    return fast;
}

}  // namespace

TEST_CASE("validation reports missing faces") {
    auto ok = SimplicialComplex::from_maximal({"a", "b"}, {{"a", "b"}});
    CHECK(validate_complex(ok).ok());

    auto broken = SimplicialComplex::from_simplices({"a", "b"}, {{"a", "b"}, {"b"}}, false);
    auto rep = validate_complex(broken);
    REQUIRE(rep.missing_faces.size() == 1);
    CHECK(rep.missing_faces[0].second == std::vector<Id>{"a"});

    auto full = SimplicialComplex::from_maximal({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    CHECK(validate_complex(full).ok());
    CHECK(full.simplex_count() == 15);
}

TEST_CASE("cone over the empty complex is a point") {
    SimplicialComplex empty;
    auto c = cone_complex("v", empty);
    CHECK(c.simplex_count() == 1);
    CHECK(checked_betti(c, Field::Q) == std::vector<long long>{1});
}

TEST_CASE("cone over two points is a path") {
    auto c = cone_complex("v", corpus::complex("two-points"));
    CHECK(c.simplex_count() == 5);
    CHECK(checked_betti(c, Field::Q) == std::vector<long long>{1});
}

TEST_CASE("cone over the triangle boundary is a disk") {
    auto c = cone_complex("v", corpus::complex("s1"));
    CHECK(checked_betti(c, Field::Q) == std::vector<long long>{1});
    CHECK_THROWS_AS(cone_complex("0", corpus::complex("s1")), ValidationError);
}

TEST_CASE("join with the empty complex is the identity") {
    SimplicialComplex empty;
    auto k = corpus::complex("hexagon");
    auto j = join_complex(empty, k);
    CHECK(j.simplex_count() == k.simplex_count());
    CHECK(betti(j, Field::Q) == betti(k, Field::Q));
}

TEST_CASE("join with a point agrees with the cone") {
    auto k = corpus::complex("s1");
    auto pt = SimplicialComplex::from_maximal({"v"}, {{"v"}});
    auto j = join_complex(pt, k);
    auto c = cone_complex("v", k);
    CHECK(j.simplices() == c.simplices());
}

TEST_CASE("join of the circle with two points is a 2-sphere") {
    auto j = join_complex(corpus::complex("s1"), corpus::complex("two-points"));
    CHECK(checked_betti(j, Field::Q) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("subdivision of an edge is a path with three vertices") {
    auto sd = subdivide(corpus::complex("delta1"));
    CHECK(sd.sd.vertex_count() == 3);
    CHECK(sd.sd.simplex_count() == 5);
    CHECK(checked_betti(sd.sd, Field::Q) == std::vector<long long>{1});
}

TEST_CASE("subdivision of the triangle boundary is the hexagon") {
    auto sd = subdivide(corpus::complex("s1"));
    CHECK(sd.sd.vertex_count() == 6);
    auto f = sd.sd.f_vector();
    CHECK(f == std::vector<long long>{6, 6});
    CHECK(checked_betti(sd.sd, Field::Q) == std::vector<long long>{1, 1});
    CHECK(complex_isomorphic(sd.sd, corpus::complex("hexagon")));
}

TEST_CASE("carrier of a chain is its maximal member") {
    auto k = corpus::complex("delta1");
    auto sd = subdivide(k);
    // the edge of the subdivision joining {0} and {0,1}
    std::vector<int> chain = {sd.sd.vertex_index("{0}"), sd.sd.vertex_index("{0,1}")};
    std::sort(chain.begin(), chain.end());
    REQUIRE(sd.sd.contains(chain));
    int top = sd.chain_max(chain);
    CHECK(sd.carrier[static_cast<size_t>(top)] == std::vector<int>{0, 1});
}

TEST_CASE("product with a point is the subdivision up to relabeling") {
    auto k = corpus::complex("s1");
    auto pt = SimplicialComplex::from_maximal({"q"}, {{"q"}});
    auto prod = product_complex(k, pt);
    auto sd = subdivide(k);
    CHECK(prod.f_vector() == sd.sd.f_vector());
    CHECK(complex_isomorphic(prod, sd.sd));
}

TEST_CASE("square and torus from products") {
    auto d1 = corpus::complex("delta1");
    auto square = product_complex(d1, d1);
    CHECK(checked_betti(square, Field::Q) == std::vector<long long>{1});

    auto s1 = corpus::complex("s1");
    auto torus = product_complex(s1, s1);
    CHECK(checked_betti(torus, Field::Q) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("homology of spheres and projective space over both fields") {
    CHECK(checked_betti(corpus::complex("s2"), Field::Q) == std::vector<long long>{1, 0, 1});
    CHECK(checked_betti(corpus::complex("rp2"), Field::Q) == std::vector<long long>{1});
    CHECK(checked_betti(corpus::complex("rp2"), Field::F2) == std::vector<long long>{1, 1, 1});
    SimplicialComplex empty;
    auto h = homology(empty, Field::Q);
    CHECK(h.betti.empty());
    CHECK(h.euler == 0);
}

TEST_CASE("seven-vertex torus is a torus") {
    auto t = corpus::complex("torus");
    CHECK(t.f_vector() == std::vector<long long>{7, 21, 14});
    CHECK(checked_betti(t, Field::Q) == std::vector<long long>{1, 2, 1});
    CHECK(checked_betti(t, Field::F2) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("link and star") {
    auto s1 = corpus::complex("s1");
    auto ls = link_star({"0"}, s1);
    CHECK(ls.link.simplex_count() == 2);  // two opposite vertices
    CHECK(ls.link.dim() == 0);

    auto s2 = corpus::complex("s2");
    auto ls2 = link_star({"0", "1"}, s2);
    CHECK(ls2.link.f_vector() == std::vector<long long>{2});

    auto d2 = corpus::complex("delta2");
    auto ls3 = link_star({"0", "1", "2"}, d2);
    CHECK(ls3.star.simplex_count() == 7);
    CHECK_THROWS_AS(link_star({"0", "9"}, s1), ValidationError);
}

TEST_CASE("subdivision preserves homology across the corpus, both fields") {
    for (const auto& name : corpus::complex_names()) {
        auto k = corpus::complex(name);
        if (k.simplex_count() > 100) continue;  // the large cones are covered in acceptance
        auto sd = subdivide(k).sd;
        for (Field f : {Field::Q, Field::F2}) CHECK(betti(sd, f) == betti(k, f));
    }
}

TEST_CASE("Euler characteristic is additive over disjoint union and multiplicative over products") {
    auto a = corpus::complex("s1");
    auto b = corpus::complex("two-points");
    auto j = join_complex(a, b);  // not disjoint union; checked via formula below
    CHECK(j.euler() == a.euler() + b.euler() - a.euler() * b.euler());
    // disjoint union via from_simplices
    std::vector<Id> verts = a.vertices();
    std::vector<std::vector<Id>> simps;
    for (const auto& s : a.simplices()) simps.push_back(a.id_vector(s));
    for (const Id& v : b.vertices()) verts.push_back(v);
    for (const auto& s : b.simplices()) simps.push_back(b.id_vector(s));
    auto disj = SimplicialComplex::from_simplices(verts, simps, false);
    CHECK(disj.euler() == a.euler() + b.euler());
    for (const auto& nx : {"delta1", "s1", "two-points"})
        for (const auto& ny : {"delta1", "s1"}) {
            auto x = corpus::complex(nx);
            auto y = corpus::complex(ny);
            CHECK(product_complex(x, y).euler() == x.euler() * y.euler());
        }
}

TEST_CASE("order complex of a poset with a minimum is contractible") {
    // face poset of delta2 has the empty-simplex-free minimum {0}? no: use an
    // explicit cone poset
    Poset p = cone(face_poset(corpus::complex("s1")));
    auto oc = order_complex(p);
    CHECK(checked_betti(oc, Field::Q) == std::vector<long long>{1});
}

TEST_CASE("order complex of an antichain is a discrete set") {
    Poset a = Poset::from_relations({"x", "y", "z"}, {});
    auto oc = order_complex(a);
    CHECK(oc.f_vector() == std::vector<long long>{3});
}

TEST_CASE("order complex of the product square is two triangles along a diagonal") {
    Poset two = Poset::from_relations({"0", "1"}, {{"0", "1"}});
    auto oc = order_complex(product(two, two));
    CHECK(oc.f_vector() == std::vector<long long>{4, 5, 2});
    CHECK(checked_betti(oc, Field::Q) == std::vector<long long>{1});
}

TEST_CASE("complex isomorphism distinguishes the circle from the path") {
    auto hexagon = corpus::complex("hexagon");
    auto sd_s1 = subdivide(corpus::complex("s1")).sd;
    CHECK(complex_isomorphic(hexagon, sd_s1));
    // drop one edge: path
    std::vector<std::vector<Id>> simps;
    for (const auto& s : hexagon.simplices())
        if (hexagon.label(s) != "{h0,h1}") simps.push_back(hexagon.id_vector(s));
    auto path = SimplicialComplex::from_simplices(hexagon.vertices(), simps, false);
    CHECK_FALSE(complex_isomorphic(hexagon, path));
}
