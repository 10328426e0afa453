#include "strata/corpus.hpp"

#include <algorithm>
#include <map>

namespace strata::corpus {

namespace {

SimplicialComplex simplex_complex(int n) {
    std::vector<Id> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
    return SimplicialComplex::from_maximal(verts, {verts});
}

SimplicialComplex boundary_complex(int n) {
    std::vector<Id> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::vector<Id>> maximal;
    for (int drop = 0; drop <= n; ++drop) {
        std::vector<Id> f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(std::to_string(i));
        maximal.push_back(f);
    }
    return SimplicialComplex::from_maximal(verts, maximal);
}

SimplicialComplex hexagon() {
    std::vector<Id> verts = {"h0", "h1", "h2", "h3", "h4", "h5"};
    std::vector<std::vector<Id>> maximal;
    for (int i = 0; i < 6; ++i)
        maximal.push_back({verts[static_cast<size_t>(i)], verts[static_cast<size_t>((i + 1) % 6)]});
    return SimplicialComplex::from_maximal(verts, maximal);
}

SimplicialComplex torus7() {
    std::vector<Id> verts;
    for (int i = 0; i < 7; ++i) verts.push_back("t" + std::to_string(i));
    std::vector<std::vector<Id>> maximal;
    auto v = [&](int i) { return verts[static_cast<size_t>(((i % 7) + 7) % 7)]; };
    for (int i = 0; i < 7; ++i) {
        maximal.push_back({v(i), v(i + 1), v(i + 3)});
        maximal.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return SimplicialComplex::from_maximal(verts, maximal);
}

SimplicialComplex rp2_6() {
    std::vector<Id> verts = {"r1", "r2", "r3", "r4", "r5", "r6"};
    auto v = [&](int i) { return verts[static_cast<size_t>(i - 1)]; };
    std::vector<std::vector<Id>> maximal = {
        {v(1), v(2), v(5)}, {v(1), v(2), v(6)}, {v(1), v(3), v(4)}, {v(1), v(3), v(6)},
        {v(1), v(4), v(5)}, {v(2), v(3), v(4)}, {v(2), v(3), v(5)}, {v(2), v(4), v(6)},
        {v(3), v(5), v(6)}, {v(4), v(5), v(6)}};
    return SimplicialComplex::from_maximal(verts, maximal);
}

SimplicialComplex two_points() {
    return SimplicialComplex::from_maximal({"a", "b"}, {{"a"}, {"b"}});
}

SimplicialComplex point() { return SimplicialComplex::from_maximal({"p"}, {{"p"}}); }

const std::vector<std::string> kBaseNames = {"point", "two-points", "delta1", "delta2",
                                             "delta3", "s1", "s2", "hexagon", "torus", "rp2"};

}  // namespace

std::vector<std::string> complex_names() {
    std::vector<std::string> out = kBaseNames;
    for (const auto& n : kBaseNames) out.push_back("cone-" + n);
    out.push_back("suspension-s1");
    out.push_back("circle-join");
    return out;
}

SimplicialComplex complex(const std::string& name) {
    if (name == "point") return point();
    if (name == "two-points") return two_points();
    if (name == "delta1") return simplex_complex(1);
    if (name == "delta2") return simplex_complex(2);
    if (name == "delta3") return simplex_complex(3);
    if (name == "s1") return boundary_complex(2);
    if (name == "s2") return boundary_complex(3);
    if (name == "hexagon") return hexagon();
    if (name == "torus") return torus7();
    if (name == "rp2") return rp2_6();
    if (name.rfind("cone-", 0) == 0) return cone_complex("v", complex(name.substr(5)));
    if (name == "suspension-s1") {
        SimplicialComplex poles = SimplicialComplex::from_maximal({"n", "s"}, {{"n"}, {"s"}});
        return join_complex(boundary_complex(2), poles);
    }
    if (name == "circle-join") {
        SimplicialComplex left = SimplicialComplex::from_maximal({"a", "b"}, {{"a"}, {"b"}});
        SimplicialComplex right = SimplicialComplex::from_maximal({"c", "d"}, {{"c"}, {"d"}});
        return join_complex(left, right);
    }
    throw ValidationError("unknown corpus complex: " + name);
}

std::vector<std::string> stratified_names() {
    return {"point-face",   "two-points-face", "delta1-face",     "delta2-face",
            "delta3-face",  "s1-face",         "s2-face",         "hexagon-face",
            "delta1-standard", "delta2-standard", "delta3-standard", "cone-two-points",
            "cone-s1",      "cone-hexagon",    "cone-s2",         "join-point-point"};
}

StratifiedComplex stratified(const std::string& name) {
    auto face_suffix = name.rfind("-face");
    if (face_suffix != std::string::npos && face_suffix == name.size() - 5)
        return face_stratification(complex(name.substr(0, face_suffix)));
    if (name == "delta1-standard") return standard_simplex_stratification(1);
    if (name == "delta2-standard") return standard_simplex_stratification(2);
    if (name == "delta3-standard") return standard_simplex_stratification(3);
    if (name == "cone-two-points") return cone_strat("v", face_stratification(two_points()));
    if (name == "cone-s1") return cone_strat("v", face_stratification(boundary_complex(2)));
    if (name == "cone-hexagon") return cone_strat("v", face_stratification(hexagon()));
    if (name == "cone-s2") return cone_strat("v", face_stratification(boundary_complex(3)));
    if (name == "join-point-point") {
        StratifiedComplex a = face_stratification(SimplicialComplex::from_maximal({"a"}, {{"a"}}));
        StratifiedComplex b = face_stratification(SimplicialComplex::from_maximal({"b"}, {{"b"}}));
        return join_strat(a, b);
    }
    throw ValidationError("unknown corpus stratified complex: " + name);
}

namespace {

// Rank-1 system on a cycle complex: all generization maps +1 except one edge
// of the cycle, which gets `twist`.
NamedSheaf circle_system(const SimplicialComplex& circle, const Rat& twist) {
    NamedSheaf out;
    out.base = face_stratification(circle);
    out.sheaf = constant_sheaf(out.base, 1);
    // Pick the lexicographically first covering edge (vertex into an edge)
    // and replace its matrix.
    const Poset& base = out.sheaf.carrier.base;
    std::pair<int, int> chosen{-1, -1};
    for (const auto& [a, b] : base.covers()) {
        if (chosen.first < 0 || base.id_of(a) + "|" + base.id_of(b) <
                                    base.id_of(chosen.first) + "|" + base.id_of(chosen.second))
            chosen = {a, b};
    }
    out.sheaf.maps[chosen] = QMatrix{{twist}};
    return out;
}

}  // namespace

std::vector<std::string> sheaf_names() {
    std::vector<std::string> out;
    for (const auto& n : std::vector<std::string>{"point", "two-points", "delta1", "delta2",
                                                  "s1", "s2", "hexagon", "torus", "rp2"})
        out.push_back("constant-" + n);
    out.push_back("monodromy-plus");
    out.push_back("monodromy-minus");
    out.push_back("hexagon-plus");
    out.push_back("hexagon-minus");
    out.push_back("zero-s1");
    return out;
}

NamedSheaf sheaf(const std::string& name) {
    if (name.rfind("constant-", 0) == 0) {
        NamedSheaf out;
        out.base = face_stratification(complex(name.substr(9)));
        out.sheaf = constant_sheaf(out.base, 1);
        return out;
    }
    if (name == "monodromy-plus") return circle_system(boundary_complex(2), Rat(1));
    if (name == "monodromy-minus") return circle_system(boundary_complex(2), Rat(-1));
    if (name == "hexagon-plus") return circle_system(hexagon(), Rat(1));
    if (name == "hexagon-minus") return circle_system(hexagon(), Rat(-1));
    if (name == "zero-s1") {
        NamedSheaf out;
        out.base = face_stratification(boundary_complex(2));
        out.sheaf = constant_sheaf(out.base, 0);
        return out;
    }
    throw ValidationError("unknown corpus sheaf: " + name);
}

}  // namespace strata::corpus
