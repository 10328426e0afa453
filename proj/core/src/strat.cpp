#include "strata/strat.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace strata {

std::vector<int> StratifiedComplex::stratum_members(int stratum) const {
    std::vector<int> out;
    for (int s = 0; s < complex.simplex_count(); ++s)
        if (assignment[static_cast<size_t>(s)] == stratum) out.push_back(s);
    return out;
}

std::vector<int> StratifiedComplex::empty_strata() const {
    std::vector<char> hit(static_cast<size_t>(strata.size()), 0);
    for (int a : assignment) hit[static_cast<size_t>(a)] = 1;
    std::vector<int> out;
    for (int p = 0; p < strata.size(); ++p)
        if (!hit[static_cast<size_t>(p)]) out.push_back(p);
    return out;
}

StratReport validate_strat(const StratifiedComplex& x) {
    if (static_cast<int>(x.assignment.size()) != x.complex.simplex_count())
        throw ValidationError("validate_strat: assignment size mismatch");
    for (int a : x.assignment)
        if (a < 0 || a >= x.strata.size())
            throw ValidationError("validate_strat: assignment references unknown stratum");
    StratReport rep;
    for (int s = 0; s < x.complex.simplex_count(); ++s) {
        const auto& simplex = x.complex.simplex(s);
        for (const auto& f : SimplicialComplex::facets(simplex)) {
            int fid = x.complex.index_of(f);
            if (fid < 0) throw ValidationError("validate_strat: complex not face closed");
            if (!x.strata.leq(x.stratum_of(fid), x.stratum_of(s)))
                rep.monotonicity.emplace_back(x.complex.id_vector(f), x.complex.id_vector(simplex));
        }
    }
    for (int p : x.empty_strata()) rep.empty_strata.push_back(x.strata.id_of(p));
    return rep;
}

StratifiedComplex face_stratification(const SimplicialComplex& k) {
    StratifiedComplex x;
    x.complex = k;
    x.strata = face_poset(k);
    x.assignment.resize(static_cast<size_t>(k.simplex_count()));
    for (int s = 0; s < k.simplex_count(); ++s) {
        int p = x.strata.index_of(k.label(k.simplex(s)));
        if (p < 0) throw InternalError("face_stratification: label not in face poset");
        x.assignment[static_cast<size_t>(s)] = p;
    }
    return x;
}

StratifiedComplex standard_simplex_stratification(int n) {
    if (n < 0) throw ValidationError("standard_simplex_stratification: n must be >= 0");
    std::vector<Id> verts;
    std::vector<Id> chain_elems;
    for (int i = 0; i <= n; ++i) {
        verts.push_back(std::to_string(i));
        chain_elems.push_back(std::to_string(i));
    }
    std::vector<std::pair<Id, Id>> rel;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) rel.emplace_back(std::to_string(i), std::to_string(j));
    StratifiedComplex x;
    x.complex = SimplicialComplex::from_maximal(verts, {verts});
    x.strata = Poset::from_relations(chain_elems, rel);
    x.assignment.resize(static_cast<size_t>(x.complex.simplex_count()));
    for (int s = 0; s < x.complex.simplex_count(); ++s) {
        int maxv = *std::max_element(x.complex.simplex(s).begin(), x.complex.simplex(s).end());
        x.assignment[static_cast<size_t>(s)] = x.strata.index_of(x.complex.vertex_id(maxv));
    }
    return x;
}

StratifiedComplex cone_strat(const Id& v, const StratifiedComplex& x, const Id& tip) {
    StratifiedComplex out;
    out.complex = cone_complex(v, x.complex);
    out.strata = cone(x.strata, tip);
    int apex = out.complex.vertex_index(v);
    out.assignment.resize(static_cast<size_t>(out.complex.simplex_count()));
    for (int s = 0; s < out.complex.simplex_count(); ++s) {
        const auto& simplex = out.complex.simplex(s);
        bool has_apex = std::binary_search(simplex.begin(), simplex.end(), apex);
        if (has_apex && simplex.size() == 1) {
            out.assignment[static_cast<size_t>(s)] = out.strata.index_of(tip);
            continue;
        }
        std::vector<Id> base_ids;
        for (int w : simplex)
            if (w != apex) base_ids.push_back(out.complex.vertex_id(w));
        int orig = x.complex.index_of(x.complex.to_indices(base_ids));
        if (orig < 0) throw InternalError("cone_strat: base simplex missing");
        out.assignment[static_cast<size_t>(s)] =
            out.strata.index_of(x.strata.id_of(x.stratum_of(orig)));
    }
    return out;
}

StratifiedComplex join_strat(const StratifiedComplex& x, const StratifiedComplex& y) {
    StratifiedComplex out;
    out.complex = join_complex(x.complex, y.complex);
    out.strata = join_poset(x.strata, y.strata);
    out.assignment.resize(static_cast<size_t>(out.complex.simplex_count()));
    int nx = x.complex.vertex_count();
    for (int s = 0; s < out.complex.simplex_count(); ++s) {
        const auto& simplex = out.complex.simplex(s);
        std::vector<Id> left, right;
        for (int w : simplex) {
            if (w < nx)
                left.push_back(out.complex.vertex_id(w));
            else
                right.push_back(out.complex.vertex_id(w));
        }
        Id target;
        if (right.empty()) {
            int sx = x.complex.index_of(x.complex.to_indices(left));
            target = "L:" + x.strata.id_of(x.stratum_of(sx));
        } else if (left.empty()) {
            int sy = y.complex.index_of(y.complex.to_indices(right));
            target = "R:" + y.strata.id_of(y.stratum_of(sy));
        } else {
            int sx = x.complex.index_of(x.complex.to_indices(left));
            int sy = y.complex.index_of(y.complex.to_indices(right));
            target = pair_id(x.strata.id_of(x.stratum_of(sx)), y.strata.id_of(y.stratum_of(sy)));
        }
        int p = out.strata.index_of(target);
        if (p < 0) throw InternalError("join_strat: stratum missing: " + target);
        out.assignment[static_cast<size_t>(s)] = p;
    }
    return out;
}

StratifiedComplex product_strat(const StratifiedComplex& x, const StratifiedComplex& y) {
    Poset fx = face_poset(x.complex);
    Poset fy = face_poset(y.complex);
    Poset fprod = product(fx, fy);
    StratifiedComplex out;
    out.complex = order_complex(fprod);
    out.strata = product(x.strata, y.strata);
    out.assignment.resize(static_cast<size_t>(out.complex.simplex_count()));
    // Vertex of the product triangulation = pair (sigma, tau); a simplex is a
    // chain of pairs, assigned the pair of strata of the componentwise maxima
    // (the chain's top element, since chains are totally ordered).
    std::vector<std::array<int, 2>> vertex_pair(static_cast<size_t>(out.complex.vertex_count()));
    for (int v = 0; v < out.complex.vertex_count(); ++v) {
        const Id& id = out.complex.vertex_id(v);
        int e = fprod.index_of(id);
        if (e < 0) throw InternalError("product_strat: vertex not in product poset");
        int a = e / fy.size();
        int b = e % fy.size();
        // fprod enumerates pairs row-major over (fx, fy); recover components.
        vertex_pair[static_cast<size_t>(v)] = {a, b};
    }
    // Face poset elements are simplex labels; map them back to simplex ids.
    std::map<Id, int> x_by_label, y_by_label;
    for (int t = 0; t < x.complex.simplex_count(); ++t)
        x_by_label.emplace(x.complex.label(x.complex.simplex(t)), t);
    for (int t = 0; t < y.complex.simplex_count(); ++t)
        y_by_label.emplace(y.complex.label(y.complex.simplex(t)), t);
    for (int s = 0; s < out.complex.simplex_count(); ++s) {
        const auto& simplex = out.complex.simplex(s);
        int top = simplex[0];
        for (int v : simplex) {
            auto [a, b] = vertex_pair[static_cast<size_t>(v)];
            auto [ta, tb] = vertex_pair[static_cast<size_t>(top)];
            if (fx.leq(ta, a) && fy.leq(tb, b)) top = v;
        }
        auto [a, b] = vertex_pair[static_cast<size_t>(top)];
        int ia = x_by_label.at(fx.id_of(a));
        int ib = y_by_label.at(fy.id_of(b));
        Id target = pair_id(x.strata.id_of(x.stratum_of(ia)), y.strata.id_of(y.stratum_of(ib)));
        int p = out.strata.index_of(target);
        if (p < 0) throw InternalError("product_strat: stratum missing: " + target);
        out.assignment[static_cast<size_t>(s)] = p;
    }
    return out;
}

namespace {

StratifiedComplex restrict_downward(const StratifiedComplex& x, const std::vector<int>& strata_sel) {
    std::vector<char> keep_stratum(static_cast<size_t>(x.strata.size()), 0);
    for (int p : strata_sel) keep_stratum[static_cast<size_t>(p)] = 1;
    std::vector<std::vector<Id>> simplices;
    std::vector<Id> strat_of;
    for (int s = 0; s < x.complex.simplex_count(); ++s)
        if (keep_stratum[static_cast<size_t>(x.stratum_of(s))]) {
            simplices.push_back(x.complex.id_vector(x.complex.simplex(s)));
            strat_of.push_back(x.stratum_id(s));
        }
    std::vector<Id> verts;
    for (const auto& s : simplices)
        if (s.size() == 1) verts.push_back(s[0]);
    // preserve ambient vertex order
    std::vector<Id> ordered;
    for (const Id& v : x.complex.vertices())
        if (std::find(verts.begin(), verts.end(), v) != verts.end()) ordered.push_back(v);
    StratifiedComplex out;
    out.complex = SimplicialComplex::from_simplices(ordered, simplices, false);
    out.strata = x.strata.induced(strata_sel);
    out.assignment.resize(static_cast<size_t>(out.complex.simplex_count()));
    for (size_t i = 0; i < simplices.size(); ++i) {
        int sid = out.complex.index_of(out.complex.to_indices(simplices[i]));
        out.assignment[static_cast<size_t>(sid)] = out.strata.index_of(strat_of[i]);
    }
    return out;
}

StratifiedComplex restrict_upward(const StratifiedComplex& x, const std::vector<int>& strata_sel) {
    std::vector<char> keep_stratum(static_cast<size_t>(x.strata.size()), 0);
    for (int p : strata_sel) keep_stratum[static_cast<size_t>(p)] = 1;
    Subdivision sd = subdivide(x.complex);
    // Keep barycenters of simplices whose stratum lies in the selection.
    std::vector<int> keep_verts;
    for (int v = 0; v < sd.sd.vertex_count(); ++v) {
        int orig = x.complex.index_of(sd.carrier[static_cast<size_t>(v)]);
        if (keep_stratum[static_cast<size_t>(x.stratum_of(orig))]) keep_verts.push_back(v);
    }
    SimplicialComplex sub = full_subcomplex(sd.sd, keep_verts);
    StratifiedComplex out;
    out.complex = sub;
    out.strata = x.strata.induced(strata_sel);
    out.assignment.resize(static_cast<size_t>(sub.simplex_count()));
    for (int s = 0; s < sub.simplex_count(); ++s) {
        // Chain maximum carries the stratum.
        const auto& chain = sub.simplex(s);
        int best_orig = -1;
        for (int v : chain) {
            int sdv = sd.sd.vertex_index(sub.vertex_id(v));
            int orig = x.complex.index_of(sd.carrier[static_cast<size_t>(sdv)]);
            if (best_orig < 0 ||
                x.complex.simplex(orig).size() > x.complex.simplex(best_orig).size())
                best_orig = orig;
        }
        out.assignment[static_cast<size_t>(s)] =
            out.strata.index_of(x.stratum_id(best_orig));
    }
    return out;
}

}  // namespace

StratifiedComplex restrict_strata(const StratifiedComplex& x, const std::vector<Id>& q) {
    auto check = consecutive_check(q, x.strata);
    if (check.verdict != Consecutive::consecutive)
        throw ValidationError("restrict_strata: strata set is not consecutive; witness (" +
                              check.witness[0] + "," + check.witness[1] + "," + check.witness[2] +
                              ")");
    std::vector<int> sel;
    for (const Id& e : q) sel.push_back(x.strata.index_of(e));
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    if (x.strata.is_downward_closed(sel)) return restrict_downward(x, sel);
    if (x.strata.is_upward_closed(sel)) return restrict_upward(x, sel);
    // General consecutive set: the downward closure first (a subcomplex),
    // then the selection is upward closed inside it.
    std::vector<char> in(static_cast<size_t>(x.strata.size()), 0);
    for (int p : sel) in[static_cast<size_t>(p)] = 1;
    std::vector<int> down;
    for (int p = 0; p < x.strata.size(); ++p)
        for (int s : sel)
            if (x.strata.leq(p, s)) { down.push_back(p); break; }
    StratifiedComplex coarse = restrict_downward(x, down);
    std::vector<Id> inner;
    for (int p : sel) inner.push_back(x.strata.id_of(p));
    return restrict_upward(coarse, [&] {
        std::vector<int> si;
        for (const Id& e : inner) si.push_back(coarse.strata.index_of(e));
        return si;
    }());
}

int DepthDimReport::max_depth() const {
    int d = 0;
    for (const auto& r : rows)
        if (!r.empty) d = std::max(d, r.depth);
    return d;
}

DepthDimReport depth_dim_report(const StratifiedComplex& x) {
    DepthDimReport rep;
    int n = x.strata.size();
    rep.rows.resize(static_cast<size_t>(n));
    // star dimension per simplex: max dim over cofaces.
    std::vector<int> star_dim(static_cast<size_t>(x.complex.simplex_count()), -1);
    for (int s = 0; s < x.complex.simplex_count(); ++s) {
        const auto& ss = x.complex.simplex(s);
        for (int t = 0; t < x.complex.simplex_count(); ++t) {
            const auto& st = x.complex.simplex(t);
            if (st.size() < ss.size()) continue;
            if (std::includes(st.begin(), st.end(), ss.begin(), ss.end()))
                star_dim[static_cast<size_t>(s)] =
                    std::max(star_dim[static_cast<size_t>(s)], static_cast<int>(st.size()) - 1);
        }
    }
    for (int p = 0; p < n; ++p) {
        StratumDepthRow row;
        row.stratum = x.strata.id_of(p);
        auto members = x.stratum_members(p);
        if (members.empty()) {
            row.empty = true;
            rep.rows[static_cast<size_t>(p)] = row;
            continue;
        }
        int sdim = -1, stardim = -1;
        int first_star = -2;
        bool pure = true;
        for (int s : members) {
            sdim = std::max(sdim, static_cast<int>(x.complex.simplex(s).size()) - 1);
            stardim = std::max(stardim, star_dim[static_cast<size_t>(s)]);
            if (first_star == -2)
                first_star = star_dim[static_cast<size_t>(s)];
            else if (first_star != star_dim[static_cast<size_t>(s)])
                pure = false;
        }
        row.stratum_dim = sdim;
        row.star_dim = stardim;
        row.depth = stardim - sdim;
        row.pure = pure;
        if (row.depth < 0) throw InternalError("depth_dim_report: negative depth");
        rep.rows[static_cast<size_t>(p)] = row;
        rep.max_star_dim = std::max(rep.max_star_dim, stardim);
    }
    rep.depth_dim_poset = pp_make(std::max(rep.max_star_dim, -1));
    rep.image.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        const auto& row = rep.rows[static_cast<size_t>(p)];
        rep.image[static_cast<size_t>(p)] =
            row.empty ? Id{}
                      : pair_id(std::to_string(row.depth), std::to_string(row.star_dim));
    }
    // Order preservation over non-empty pure strata.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (p == q || !x.strata.lt(p, q)) continue;
            const auto& rp = rep.rows[static_cast<size_t>(p)];
            const auto& rq = rep.rows[static_cast<size_t>(q)];
            if (rp.empty || rq.empty || !rp.pure || !rq.pure) continue;
            bool ok = rp.depth >= rq.depth && rp.star_dim >= rq.star_dim;
            if (!ok) {
                rep.monotone = false;
                rep.witnesses.push_back({x.strata.id_of(p), x.strata.id_of(q)});
            }
        }
    return rep;
}

}  // namespace strata
