#include "strata/complex.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

void SimplicialComplex::finalize(std::set<std::vector<int>, SimplexLess>&& simplices) {
    simp_.assign(simplices.begin(), simplices.end());
    for (int i = 0; i < simplex_count(); ++i) sidx_.emplace(simp_[static_cast<size_t>(i)], i);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Id>& vertices,
                                                  const std::vector<std::vector<Id>>& maximal) {
    return from_simplices(vertices, maximal, true);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Id>& vertices,
                                                    const std::vector<std::vector<Id>>& simplices,
                                                    bool close) {
    SimplicialComplex k;
    for (const Id& v : vertices) {
        auto [it, fresh] = k.vidx_.emplace(v, static_cast<int>(k.verts_.size()));
        if (!fresh) throw ValidationError("duplicate vertex id: " + v);
        k.verts_.push_back(v);
    }
    std::set<std::vector<int>, SimplexLess> acc;
    for (const auto& s : simplices) {
        std::vector<int> ix;
        for (const Id& v : s) {
            int i = k.vertex_index(v);
            if (i < 0) throw ValidationError("simplex references unknown vertex: " + v);
            ix.push_back(i);
        }
        ix = sorted_unique(std::move(ix));
        if (ix.empty()) throw ValidationError("empty simplex not allowed");
        if (!close) {
            acc.insert(ix);
            continue;
        }
        // All nonempty subsets.
        size_t n = ix.size();
        for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t{1} << b)) face.push_back(ix[b]);
            acc.insert(std::move(face));
        }
    }
    k.finalize(std::move(acc));
    return k;
}

int SimplicialComplex::vertex_index(const Id& v) const {
    auto it = vidx_.find(v);
    return it == vidx_.end() ? -1 : it->second;
}

int SimplicialComplex::index_of(const std::vector<int>& s) const {
    auto it = sidx_.find(s);
    return it == sidx_.end() ? -1 : it->second;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& s : simp_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f(static_cast<size_t>(dim() + 1), 0);
    for (const auto& s : simp_) ++f[s.size() - 1];
    return f;
}

long long SimplicialComplex::euler() const {
    long long chi = 0;
    for (const auto& s : simp_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

Id SimplicialComplex::label(const std::vector<int>& s) const {
    Id out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_id(s[i]);
    }
    return out + "}";
}

std::vector<Id> SimplicialComplex::id_vector(const std::vector<int>& s) const {
    std::vector<Id> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(vertex_id(i));
    return out;
}

std::vector<int> SimplicialComplex::to_indices(const std::vector<Id>& ids) const {
    std::vector<int> ix;
    for (const Id& v : ids) {
        int i = vertex_index(v);
        if (i < 0) throw ValidationError("unknown vertex: " + v);
        ix.push_back(i);
    }
    return sorted_unique(std::move(ix));
}

std::vector<std::vector<int>> SimplicialComplex::facets(const std::vector<int>& s) {
    std::vector<std::vector<int>> out;
    if (s.size() <= 1) return out;
    for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (size_t i = 0; i < s.size(); ++i)
            if (i != drop) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

ComplexReport validate_complex(const SimplicialComplex& k) {
    ComplexReport rep;
    for (const auto& s : k.simplices())
        for (const auto& f : SimplicialComplex::facets(s))
            if (!k.contains(f)) rep.missing_faces.emplace_back(k.id_vector(s), k.id_vector(f));
    return rep;
}

SimplicialComplex cone_complex(const Id& v, const SimplicialComplex& k) {
    if (k.vertex_index(v) >= 0) throw ValidationError("cone_complex: apex id collides: " + v);
    std::vector<Id> verts;
    verts.push_back(v);
    for (const Id& w : k.vertices()) verts.push_back(w);
    std::vector<std::vector<Id>> simplices;
    simplices.push_back({v});
    for (const auto& s : k.simplices()) {
        simplices.push_back(k.id_vector(s));
        auto with_apex = k.id_vector(s);
        with_apex.insert(with_apex.begin(), v);
        simplices.push_back(std::move(with_apex));
    }
    return SimplicialComplex::from_simplices(verts, simplices, false);
}

SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<Id> verts = k.vertices();
    for (const Id& w : l.vertices()) {
        if (k.vertex_index(w) >= 0) throw ValidationError("join_complex: vertex collision: " + w);
        verts.push_back(w);
    }
    std::vector<std::vector<Id>> simplices;
    for (const auto& s : k.simplices()) simplices.push_back(k.id_vector(s));
    for (const auto& t : l.simplices()) simplices.push_back(l.id_vector(t));
    for (const auto& s : k.simplices())
        for (const auto& t : l.simplices()) {
            auto u = k.id_vector(s);
            auto tv = l.id_vector(t);
            u.insert(u.end(), tv.begin(), tv.end());
            simplices.push_back(std::move(u));
        }
    return SimplicialComplex::from_simplices(verts, simplices, false);
}

Poset face_poset(const SimplicialComplex& k) {
    std::vector<Id> elems;
    elems.reserve(static_cast<size_t>(k.simplex_count()));
    for (const auto& s : k.simplices()) elems.push_back(k.label(s));
    std::vector<std::pair<Id, Id>> rel;
    for (int a = 0; a < k.simplex_count(); ++a)
        for (int b = 0; b < k.simplex_count(); ++b) {
            if (a == b) continue;
            const auto& sa = k.simplex(a);
            const auto& sb = k.simplex(b);
            if (sa.size() > sb.size()) continue;
            if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
                rel.emplace_back(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
        }
    return Poset::from_relations(elems, rel);
}

SimplicialComplex order_complex(const Poset& p) {
    SimplicialComplex k;
    std::vector<int> ext = p.linear_extension();
    for (int e : ext) {
        k.vidx_.emplace(p.id_of(e), static_cast<int>(k.verts_.size()));
        k.verts_.push_back(p.id_of(e));
    }
    std::vector<int> pos(static_cast<size_t>(p.size()));
    for (size_t i = 0; i < ext.size(); ++i) pos[static_cast<size_t>(ext[i])] = static_cast<int>(i);
    std::set<std::vector<int>, SimplexLess> acc;
    for (const auto& chain : p.chains()) {
        std::vector<int> s;
        s.reserve(chain.size());
        for (int e : chain) s.push_back(pos[static_cast<size_t>(e)]);
        std::sort(s.begin(), s.end());
        acc.insert(std::move(s));
    }
    k.finalize(std::move(acc));
    return k;
}

Subdivision subdivide(const SimplicialComplex& k) {
    // Vertices of the subdivision = simplices of k in canonical order; the
    // canonical (dim, lex) order is itself a linear extension of inclusion.
    Subdivision out;
    std::vector<Id> verts;
    for (const auto& s : k.simplices()) {
        verts.push_back(k.label(s));
        out.carrier.push_back(s);
    }
    int n = k.simplex_count();
    // Strict coface lists, restricted to later canonical positions.
    std::vector<std::vector<int>> above(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& sa = k.simplex(a);
            const auto& sb = k.simplex(b);
            if (sa.size() >= sb.size()) continue;
            if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
                above[static_cast<size_t>(a)].push_back(b);
        }
    std::vector<std::vector<Id>> chains;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int last) -> void {
        std::vector<Id> named;
        named.reserve(cur.size());
        for (int c : cur) named.push_back(verts[static_cast<size_t>(c)]);
        chains.push_back(std::move(named));
        for (int nxt : above[static_cast<size_t>(last)]) {
            cur.push_back(nxt);
            self(self, nxt);
            cur.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        cur.assign(1, s);
        dfs(dfs, s);
    }
    out.sd = SimplicialComplex::from_simplices(verts, chains, false);
    return out;
}

int Subdivision::chain_max(const std::vector<int>& sd_simplex) const {
    if (sd_simplex.empty()) throw ValidationError("chain_max of empty simplex");
    int best = sd_simplex[0];
    for (int v : sd_simplex)
        if (carrier[static_cast<size_t>(v)].size() > carrier[static_cast<size_t>(best)].size())
            best = v;
    return best;
}

SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
    return order_complex(product(face_poset(k), face_poset(l)));
}

LinkStar link_star(const std::vector<Id>& sigma, const SimplicialComplex& k) {
    std::vector<int> s = k.to_indices(sigma);
    if (!k.contains(s)) throw ValidationError("link_star: not a simplex: " + k.label(s));
    std::vector<std::vector<Id>> star_simps, link_simps;
    for (const auto& t : k.simplices()) {
        if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
        star_simps.push_back(k.id_vector(t));  // closure taken below
        std::vector<int> rest;
        std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) link_simps.push_back(k.id_vector(rest));
    }
    LinkStar out;
    out.star = SimplicialComplex::from_simplices(k.vertices(), star_simps, true);
    out.link = SimplicialComplex::from_simplices(k.vertices(), link_simps, true);
    return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& vertex_subset) {
    std::vector<char> in(static_cast<size_t>(k.vertex_count()), 0);
    for (int v : vertex_subset) in[static_cast<size_t>(v)] = 1;
    std::vector<std::vector<Id>> simplices;
    for (const auto& s : k.simplices()) {
        bool keep = true;
        for (int v : s)
            if (!in[static_cast<size_t>(v)]) { keep = false; break; }
        if (keep) simplices.push_back(k.id_vector(s));
    }
    std::vector<Id> verts;
    for (int v = 0; v < k.vertex_count(); ++v)
        if (in[static_cast<size_t>(v)]) verts.push_back(k.vertex_id(v));
    return SimplicialComplex::from_simplices(verts, simplices, false);
}

namespace {

// Per-vertex invariant: multiset of incident simplex dimensions, refined by
// neighbor colors.
std::vector<long long> complex_colors(const SimplicialComplex& k) {
    int n = k.vertex_count();
    std::vector<std::vector<long long>> sig(static_cast<size_t>(n));
    for (const auto& s : k.simplices())
        for (int v : s) sig[static_cast<size_t>(v)].push_back(static_cast<long long>(s.size()));
    std::vector<long long> color(static_cast<size_t>(n), 0);
    {
        for (auto& v : sig) std::sort(v.begin(), v.end());
        std::vector<std::vector<long long>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int a = 0; a < n; ++a)
            color[static_cast<size_t>(a)] = static_cast<long long>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(a)]) - uniq.begin());
    }
    // Adjacency via edges.
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& s : k.simplices())
        if (s.size() == 2) {
            adj[static_cast<size_t>(s[0])].push_back(s[1]);
            adj[static_cast<size_t>(s[1])].push_back(s[0]);
        }
    size_t stable = 0;
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> rs(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a) {
            std::vector<long long> nb;
            for (int b : adj[static_cast<size_t>(a)]) nb.push_back(color[static_cast<size_t>(b)]);
            std::sort(nb.begin(), nb.end());
            rs[static_cast<size_t>(a)].push_back(color[static_cast<size_t>(a)]);
            rs[static_cast<size_t>(a)].insert(rs[static_cast<size_t>(a)].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<long long>> uniq = rs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int a = 0; a < n; ++a)
            color[static_cast<size_t>(a)] = static_cast<long long>(
                std::lower_bound(uniq.begin(), uniq.end(), rs[static_cast<size_t>(a)]) - uniq.begin());
        if (uniq.size() == stable) break;
        stable = uniq.size();
    }
    return color;
}

bool complex_backtrack(const SimplicialComplex& k, const SimplicialComplex& l,
                       const std::vector<long long>& ck, const std::vector<long long>& cl,
                       const std::vector<std::vector<int>>& adjk,
                       const std::vector<std::vector<char>>& adjl_mat, std::vector<int>& map,
                       std::vector<char>& used, size_t at, const std::vector<int>& order) {
    if (at == order.size()) {
        // Vertex bijection fixed; verify simplex sets correspond.
        for (const auto& s : k.simplices()) {
            std::vector<int> img;
            img.reserve(s.size());
            for (int v : s) img.push_back(map[static_cast<size_t>(v)]);
            std::sort(img.begin(), img.end());
            if (!l.contains(img)) return false;
        }
        return true;  // equal counts make the correspondence a bijection
    }
    int a = order[at];
    for (int b = 0; b < l.vertex_count(); ++b) {
        if (used[static_cast<size_t>(b)]) continue;
        if (ck[static_cast<size_t>(a)] != cl[static_cast<size_t>(b)]) continue;
        bool fits = true;
        for (size_t j = 0; j < at && fits; ++j) {
            int a2 = order[j];
            bool ek = std::binary_search(adjk[static_cast<size_t>(a)].begin(),
                                         adjk[static_cast<size_t>(a)].end(), a2);
            bool el = adjl_mat[static_cast<size_t>(b)][static_cast<size_t>(map[static_cast<size_t>(a2)])] != 0;
            if (ek != el) fits = false;
        }
        if (!fits) continue;
        map[static_cast<size_t>(a)] = b;
        used[static_cast<size_t>(b)] = 1;
        if (complex_backtrack(k, l, ck, cl, adjk, adjl_mat, map, used, at + 1, order)) return true;
        used[static_cast<size_t>(b)] = 0;
    }
    return false;
}

}  // namespace

bool complex_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.vertex_count() != l.vertex_count()) return false;
    if (k.f_vector() != l.f_vector()) return false;
    if (k.vertex_count() == 0) return true;
    auto ck = complex_colors(k), cl = complex_colors(l);
    auto sk = ck, sl = cl;
    std::sort(sk.begin(), sk.end());
    std::sort(sl.begin(), sl.end());
    if (sk != sl) return false;
    std::vector<std::vector<int>> adjk(static_cast<size_t>(k.vertex_count()));
    for (const auto& s : k.simplices())
        if (s.size() == 2) {
            adjk[static_cast<size_t>(s[0])].push_back(s[1]);
            adjk[static_cast<size_t>(s[1])].push_back(s[0]);
        }
    for (auto& v : adjk) std::sort(v.begin(), v.end());
    std::vector<std::vector<char>> adjl(static_cast<size_t>(l.vertex_count()),
                                        std::vector<char>(static_cast<size_t>(l.vertex_count()), 0));
    for (const auto& s : l.simplices())
        if (s.size() == 2) {
            adjl[static_cast<size_t>(s[0])][static_cast<size_t>(s[1])] = 1;
            adjl[static_cast<size_t>(s[1])][static_cast<size_t>(s[0])] = 1;
        }
    std::map<long long, int> freq;
    for (long long c : ck) ++freq[c];
    std::vector<int> order(static_cast<size_t>(k.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int fa = freq[ck[static_cast<size_t>(a)]], fb = freq[ck[static_cast<size_t>(b)]];
        if (fa != fb) return fa < fb;
        return a < b;
    });
    std::vector<int> map(static_cast<size_t>(k.vertex_count()), -1);
    std::vector<char> used(static_cast<size_t>(l.vertex_count()), 0);
    return complex_backtrack(k, l, ck, cl, adjk, adjl, map, used, 0, order);
}

}  // namespace strata
