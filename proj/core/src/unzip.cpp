#include "strata/unzip.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strata {

namespace {

std::vector<int> strata_indices(const StratifiedComplex& x, const std::vector<Id>& d) {
    std::vector<int> out;
    for (const Id& e : d) {
        int p = x.strata.index_of(e);
        if (p < 0) throw ValidationError("unknown stratum: " + e);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ChainClassification classify_chains(const StratifiedComplex& x, const std::vector<Id>& d) {
    ChainClassification out;
    out.deep_strata = strata_indices(x, d);
    if (!x.strata.is_downward_closed(out.deep_strata)) {
        // find a witness pair
        std::vector<char> in(static_cast<size_t>(x.strata.size()), 0);
        for (int p : out.deep_strata) in[static_cast<size_t>(p)] = 1;
        for (int p : out.deep_strata)
            for (int b = 0; b < x.strata.size(); ++b)
                if (x.strata.leq(b, p) && !in[static_cast<size_t>(b)])
                    throw ValidationError("deep strata not downward closed: " +
                                          x.strata.id_of(b) + " < " + x.strata.id_of(p));
        throw InternalError("classify_chains: closure check inconsistent");
    }
    std::vector<char> deep_stratum(static_cast<size_t>(x.strata.size()), 0);
    for (int p : out.deep_strata) deep_stratum[static_cast<size_t>(p)] = 1;
    out.deep_simplex.resize(static_cast<size_t>(x.complex.simplex_count()));
    for (int s = 0; s < x.complex.simplex_count(); ++s)
        out.deep_simplex[static_cast<size_t>(s)] = deep_stratum[static_cast<size_t>(x.stratum_of(s))];
    out.sd = subdivide(x.complex);
    out.simplex_class.resize(static_cast<size_t>(out.sd.sd.simplex_count()));
    for (int c = 0; c < out.sd.sd.simplex_count(); ++c) {
        const auto& chain = out.sd.sd.simplex(c);
        int deep_members = 0;
        for (int v : chain) {
            int orig = x.complex.index_of(out.sd.carrier[static_cast<size_t>(v)]);
            if (out.deep_simplex[static_cast<size_t>(orig)]) ++deep_members;
        }
        out.simplex_class[static_cast<size_t>(c)] =
            deep_members == 0 ? ChainClass::outer
                              : (deep_members == static_cast<int>(chain.size()) ? ChainClass::deep
                                                                                : ChainClass::mixed);
        // Deep members must form an initial segment: members are ordered by
        // inclusion, and faces of deep simplices are deep.
        bool seen_outer = false;
        std::vector<int> sorted_by_size = chain;
        std::sort(sorted_by_size.begin(), sorted_by_size.end(), [&](int a, int b) {
            return out.sd.carrier[static_cast<size_t>(a)].size() <
                   out.sd.carrier[static_cast<size_t>(b)].size();
        });
        for (int v : sorted_by_size) {
            int orig = x.complex.index_of(out.sd.carrier[static_cast<size_t>(v)]);
            bool dv = out.deep_simplex[static_cast<size_t>(orig)] != 0;
            if (dv && seen_outer)
                throw InternalError("classify_chains: deep members not an initial segment");
            if (!dv) seen_outer = true;
        }
    }
    return out;
}

namespace {

// Stratify a subcomplex of a subdivision by the stratum of the chain maximum,
// over the strata outside the deep set.
StratifiedComplex restratify_by_chain_max(const SimplicialComplex& sub, const Subdivision& sd,
                                          const StratifiedComplex& x,
                                          const std::vector<int>& kept_strata) {
    StratifiedComplex out;
    out.complex = sub;
    out.strata = x.strata.induced(kept_strata);
    out.assignment.resize(static_cast<size_t>(sub.simplex_count()));
    for (int s = 0; s < sub.simplex_count(); ++s) {
        const auto& chain = sub.simplex(s);
        int best = -1;
        for (int v : chain) {
            int sdv = sd.sd.vertex_index(sub.vertex_id(v));
            int orig = x.complex.index_of(sd.carrier[static_cast<size_t>(sdv)]);
            if (best < 0 || x.complex.simplex(orig).size() > x.complex.simplex(best).size())
                best = orig;
        }
        int p = out.strata.index_of(x.stratum_id(best));
        if (p < 0) throw InternalError("unzip restratification: stratum missing");
        out.assignment[static_cast<size_t>(s)] = p;
    }
    return out;
}

std::vector<int> complement_strata(const StratifiedComplex& x, const std::vector<int>& deep) {
    std::vector<char> in(static_cast<size_t>(x.strata.size()), 0);
    for (int p : deep) in[static_cast<size_t>(p)] = 1;
    std::vector<int> out;
    for (int p = 0; p < x.strata.size(); ++p)
        if (!in[static_cast<size_t>(p)]) out.push_back(p);
    return out;
}

}  // namespace

UnzipDecomposition unzip_once(const StratifiedComplex& x, const std::vector<Id>& d) {
    UnzipDecomposition dec;
    dec.source_complex = x.complex;
    ChainClassification cls = classify_chains(x, d);
    const Subdivision& sd1 = cls.sd;

    int deep_count = 0;
    for (char c : cls.deep_simplex) deep_count += c ? 1 : 0;
    if (deep_count == 0 || deep_count == x.complex.simplex_count()) {
        dec.degenerate = true;
        if (deep_count == 0) {
            dec.unzip = x;  // identity resolution
        } else {
            dec.cone_locus = sd1.sd;
            dec.unzip.strata = x.strata.induced({});
        }
        return dec;
    }

    // Deep subcomplex Y.
    {
        std::vector<std::vector<Id>> simplices;
        for (int s = 0; s < x.complex.simplex_count(); ++s)
            if (cls.deep_simplex[static_cast<size_t>(s)])
                simplices.push_back(x.complex.id_vector(x.complex.simplex(s)));
        std::vector<Id> verts;
        for (const auto& sv : simplices)
            if (sv.size() == 1) verts.push_back(sv[0]);
        std::vector<Id> ordered;
        for (const Id& v : x.complex.vertices())
            if (std::find(verts.begin(), verts.end(), v) != verts.end()) ordered.push_back(v);
        dec.deep_complex = SimplicialComplex::from_simplices(ordered, simplices, false);
    }

    // Is Y full in the complex?
    bool full = true;
    {
        std::vector<char> deep_vertex(static_cast<size_t>(x.complex.vertex_count()), 0);
        for (int s = 0; s < x.complex.simplex_count(); ++s)
            if (cls.deep_simplex[static_cast<size_t>(s)] && x.complex.simplex(s).size() == 1)
                deep_vertex[static_cast<size_t>(x.complex.simplex(s)[0])] = 1;
        for (int s = 0; s < x.complex.simplex_count() && full; ++s) {
            if (cls.deep_simplex[static_cast<size_t>(s)]) continue;
            bool all_deep_verts = true;
            for (int v : x.complex.simplex(s))
                if (!deep_vertex[static_cast<size_t>(v)]) { all_deep_verts = false; break; }
            if (all_deep_verts) full = false;
        }
        dec.far_model = full;
    }

    // cone_locus: full subcomplex of Sd on deep barycenters.
    std::vector<int> deep_barycenters, unzip_barycenters;
    {
        std::vector<char> deep_vertex(static_cast<size_t>(x.complex.vertex_count()), 0);
        for (int s = 0; s < x.complex.simplex_count(); ++s)
            if (cls.deep_simplex[static_cast<size_t>(s)] && x.complex.simplex(s).size() == 1)
                deep_vertex[static_cast<size_t>(x.complex.simplex(s)[0])] = 1;
        for (int v = 0; v < sd1.sd.vertex_count(); ++v) {
            int orig = x.complex.index_of(sd1.carrier[static_cast<size_t>(v)]);
            if (cls.deep_simplex[static_cast<size_t>(orig)]) deep_barycenters.push_back(v);
            if (dec.far_model) {
                bool disjoint = true;
                for (int w : x.complex.simplex(orig))
                    if (deep_vertex[static_cast<size_t>(w)]) { disjoint = false; break; }
                if (disjoint) unzip_barycenters.push_back(v);
            } else if (!cls.deep_simplex[static_cast<size_t>(orig)]) {
                unzip_barycenters.push_back(v);
            }
        }
    }
    dec.cone_locus = full_subcomplex(sd1.sd, deep_barycenters);
    SimplicialComplex unzip_complex = full_subcomplex(sd1.sd, unzip_barycenters);
    dec.unzip = restratify_by_chain_max(unzip_complex, sd1, x,
                                        complement_strata(x, cls.deep_strata));

    // Second subdivision and the three vertex classes.
    Subdivision sd2 = subdivide(sd1.sd);
    dec.sd2 = sd2.sd;
    for (int v = 0; v < sd2.sd.vertex_count(); ++v) {
        int sd1_simplex = sd1.sd.index_of(sd2.carrier[static_cast<size_t>(v)]);
        ChainClass c = cls.simplex_class[static_cast<size_t>(sd1_simplex)];
        if (c == ChainClass::deep || c == ChainClass::mixed) dec.n_vertices.push_back(v);
        if (c == ChainClass::outer || c == ChainClass::mixed) dec.u_vertices.push_back(v);
        if (c == ChainClass::mixed) dec.link_vertices.push_back(v);
    }
    dec.link = full_subcomplex(sd2.sd, dec.link_vertices);

    // pi / rho as vertex maps.
    dec.sd_cone_locus = subdivide(dec.cone_locus).sd;
    dec.sd_unzip = subdivide(unzip_complex).sd;
    std::vector<char> deep_vertex(static_cast<size_t>(x.complex.vertex_count()), 0);
    for (int s = 0; s < x.complex.simplex_count(); ++s)
        if (cls.deep_simplex[static_cast<size_t>(s)] && x.complex.simplex(s).size() == 1)
            deep_vertex[static_cast<size_t>(x.complex.simplex(s)[0])] = 1;
    dec.pi.resize(static_cast<size_t>(dec.link.vertex_count()));
    dec.rho.resize(static_cast<size_t>(dec.link.vertex_count()));
    for (int lv = 0; lv < dec.link.vertex_count(); ++lv) {
        int sd2v = sd2.sd.vertex_index(dec.link.vertex_id(lv));
        const auto& mixed_chain = sd2.carrier[static_cast<size_t>(sd2v)];  // an sd1 simplex
        std::vector<Id> deep_part, outer_part;
        for (int sd1v : mixed_chain) {
            int orig = x.complex.index_of(sd1.carrier[static_cast<size_t>(sd1v)]);
            if (cls.deep_simplex[static_cast<size_t>(orig)]) {
                deep_part.push_back(sd1.sd.vertex_id(sd1v));
            } else if (dec.far_model) {
                // delete the deep vertices of the member simplex
                std::vector<Id> trimmed;
                for (int w : x.complex.simplex(orig))
                    if (!deep_vertex[static_cast<size_t>(w)])
                        trimmed.push_back(x.complex.vertex_id(w));
                outer_part.push_back(x.complex.label(x.complex.to_indices(trimmed)));
            } else {
                outer_part.push_back(sd1.sd.vertex_id(sd1v));
            }
        }
        std::sort(outer_part.begin(), outer_part.end());
        outer_part.erase(std::unique(outer_part.begin(), outer_part.end()), outer_part.end());
        // deep initial segment as a simplex of cone_locus -> vertex of its Sd
        int ci = dec.sd_cone_locus.vertex_index(
            dec.cone_locus.label(dec.cone_locus.to_indices(deep_part)));
        int ui = dec.sd_unzip.vertex_index(
            unzip_complex.label(unzip_complex.to_indices(outer_part)));
        if (ci < 0 || ui < 0) throw InternalError("unzip_once: projection target missing");
        dec.pi[static_cast<size_t>(lv)] = ci;
        dec.rho[static_cast<size_t>(lv)] = ui;
    }
    // simpliciality: images of link simplices are simplices of the targets
    for (int s = 0; s < dec.link.simplex_count() &&
                    (dec.pi_simplicial || dec.rho_simplicial);
         ++s) {
        std::vector<int> pi_img, rho_img;
        for (int v : dec.link.simplex(s)) {
            pi_img.push_back(dec.pi[static_cast<size_t>(v)]);
            rho_img.push_back(dec.rho[static_cast<size_t>(v)]);
        }
        std::sort(pi_img.begin(), pi_img.end());
        pi_img.erase(std::unique(pi_img.begin(), pi_img.end()), pi_img.end());
        std::sort(rho_img.begin(), rho_img.end());
        rho_img.erase(std::unique(rho_img.begin(), rho_img.end()), rho_img.end());
        if (!dec.sd_cone_locus.contains(pi_img)) dec.pi_simplicial = false;
        if (!dec.sd_unzip.contains(rho_img)) dec.rho_simplicial = false;
    }
    return dec;
}

DecompositionLedger decomposition_report(const UnzipDecomposition& dec, Field field,
                                         int chain_cap,
                                         const std::vector<long long>* betti_sd2_cache) {
    DecompositionLedger led;
    auto trim = [](std::vector<long long> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    if (dec.degenerate) {
        led.balanced = true;
        led.chi_k = dec.source_complex.euler();
        led.betti_k = trim(homology(dec.source_complex, field).betti);
        return led;
    }
    // (a) cover identities at the simplex level.
    std::vector<char> in_n(static_cast<size_t>(dec.sd2.vertex_count()), 0);
    std::vector<char> in_u(static_cast<size_t>(dec.sd2.vertex_count()), 0);
    for (int v : dec.n_vertices) in_n[static_cast<size_t>(v)] = 1;
    for (int v : dec.u_vertices) in_u[static_cast<size_t>(v)] = 1;
    long long count_n = 0, count_u = 0, count_both = 0;
    for (int s = 0; s < dec.sd2.simplex_count(); ++s) {
        bool all_n = true, all_u = true;
        for (int v : dec.sd2.simplex(s)) {
            if (!in_n[static_cast<size_t>(v)]) all_n = false;
            if (!in_u[static_cast<size_t>(v)]) all_u = false;
        }
        if (!all_n && !all_u) {
            led.failure = "cover misses simplex " + dec.sd2.label(dec.sd2.simplex(s));
            return led;
        }
        count_n += all_n ? 1 : 0;
        count_u += all_u ? 1 : 0;
        count_both += (all_n && all_u) ? 1 : 0;
        if (all_n && all_u) {
            std::vector<int> translated;
            for (int v : dec.sd2.simplex(s))
                translated.push_back(dec.link.vertex_index(dec.sd2.vertex_id(v)));
            std::sort(translated.begin(), translated.end());
            if (translated.front() < 0 || !dec.link.contains(translated)) {
                led.failure = "intersection simplex outside link: " +
                              dec.sd2.label(dec.sd2.simplex(s));
                return led;
            }
        }
    }
    if (count_both != dec.link.simplex_count()) {
        led.failure = "intersection simplex count differs from link";
        return led;
    }
    // (b) Euler additivity.
    led.chi_k = dec.source_complex.euler();
    led.chi_link = dec.link.euler();
    led.chi_n = count_n - 0;  // recompute signed below
    {
        long long chi_n = 0, chi_u = 0;
        for (int s = 0; s < dec.sd2.simplex_count(); ++s) {
            bool all_n = true, all_u = true;
            for (int v : dec.sd2.simplex(s)) {
                if (!in_n[static_cast<size_t>(v)]) all_n = false;
                if (!in_u[static_cast<size_t>(v)]) all_u = false;
            }
            long long sgn = (dec.sd2.simplex(s).size() % 2 == 1) ? 1 : -1;
            if (all_n) chi_n += sgn;
            if (all_u) chi_u += sgn;
        }
        led.chi_n = chi_n;
        led.chi_u = chi_u;
    }
    if (led.chi_k != led.chi_n + led.chi_u - led.chi_link) {
        led.failure = "Euler additivity fails";
        return led;
    }
    // (c)(d) collapse identities.
    led.betti_k = trim(homology(dec.source_complex, field).betti);
    led.betti_y = trim(homology(dec.deep_complex, field).betti);
    led.betti_unzip = trim(homology(dec.unzip.complex, field).betti);
    led.betti_link = trim(homology(dec.link, field).betti);
    led.betti_n = trim(betti_full_subcomplex(dec.sd2, dec.n_vertices, field));
    led.betti_u = trim(betti_full_subcomplex(dec.sd2, dec.u_vertices, field));
    if (led.betti_n != led.betti_y) {
        led.failure = "Betti(N) differs from Betti(Y)";
        return led;
    }
    if (led.betti_u != led.betti_unzip) {
        led.failure = "Betti(U) differs from Betti(unzip)";
        return led;
    }
    // (e) Mayer-Vietoris ranks against Betti(K).
    std::vector<long long> betti_sd2;
    if (betti_sd2_cache) {
        betti_sd2 = *betti_sd2_cache;
    } else {
        betti_sd2 = homology(dec.sd2, field).betti;
    }
    led.betti_sd2 = trim(betti_sd2);
    if (led.betti_sd2 != led.betti_k) {
        led.failure = "Betti of the second subdivision differs from Betti(K)";
        return led;
    }
    led.mv = mayer_vietoris_ledger(dec.sd2, dec.n_vertices, dec.u_vertices, field, chain_cap,
                                   &betti_sd2);
    if (!led.mv.exact) {
        led.failure = "Mayer-Vietoris ledger: " + led.mv.failure;
        return led;
    }
    led.balanced = true;
    return led;
}

std::vector<UnzipDecomposition> unzip_tower(const StratifiedComplex& x) {
    std::vector<UnzipDecomposition> stages;
    StratifiedComplex cur = x;
    int guard = 0;
    while (true) {
        if (cur.complex.simplex_count() == 0) break;
        DepthDimReport rep = depth_dim_report(cur);
        int maxd = rep.max_depth();
        if (maxd == 0) break;
        std::vector<int> deep;
        for (int p = 0; p < cur.strata.size(); ++p)
            if (!rep.rows[static_cast<size_t>(p)].empty &&
                rep.rows[static_cast<size_t>(p)].depth == maxd)
                deep.push_back(p);
        // close downward (empty strata below a deep stratum join the deep set)
        std::vector<char> in(static_cast<size_t>(cur.strata.size()), 0);
        for (int p : deep) in[static_cast<size_t>(p)] = 1;
        for (int p = 0; p < cur.strata.size(); ++p) {
            if (in[static_cast<size_t>(p)]) continue;
            for (int q : deep)
                if (cur.strata.leq(p, q)) { in[static_cast<size_t>(p)] = 1; break; }
        }
        std::vector<Id> d;
        for (int p = 0; p < cur.strata.size(); ++p)
            if (in[static_cast<size_t>(p)]) d.push_back(cur.strata.id_of(p));
        UnzipDecomposition dec = unzip_once(cur, d);
        if (dec.degenerate)
            throw InternalError("unzip_tower: degenerate stage at positive depth");
        StratifiedComplex next = dec.unzip;
        DepthDimReport next_rep = depth_dim_report(next);
        if (next_rep.max_depth() >= maxd)
            throw InternalError("unzip_tower: stage did not decrease depth");
        stages.push_back(std::move(dec));
        cur = std::move(next);
        if (++guard > 64) throw InternalError("unzip_tower: too many stages");
    }
    return stages;
}

}  // namespace strata
