#include "strata/exitpath.hpp"

#include <algorithm>

namespace strata {

RelativeCategory enter_category(const StratifiedComplex& x) {
    RelativeCategory out;
    out.base = face_poset(x.complex);
    // base element i corresponds to complex simplex with the same label; the
    // face poset lists elements in the complex's canonical simplex order.
    for (int a = 0; a < out.base.size(); ++a)
        for (int b = 0; b < out.base.size(); ++b)
            if (out.base.lt(a, b) && x.stratum_of(a) == x.stratum_of(b)) out.weak.insert({a, b});
    return out;
}

RefinementFunctor refinement_functor(const SimplicialComplex& k) {
    Subdivision sd = subdivide(k);
    RefinementFunctor out;
    out.source = face_poset(sd.sd);
    out.target = face_poset(k);
    out.map.resize(static_cast<size_t>(out.source.size()));
    for (int e = 0; e < out.source.size(); ++e) {
        // Source element = a simplex of Sd k = a chain; its label lists the
        // chain members, and its position in the canonical order matches the
        // complex's simplex order.
        const auto& chain = sd.sd.simplex(e);
        int top = sd.chain_max(chain);
        out.map[static_cast<size_t>(e)] =
            out.target.index_of(k.label(sd.carrier[static_cast<size_t>(top)]));
    }
    for (int a = 0; a < out.source.size(); ++a)
        for (int b = 0; b < out.source.size(); ++b)
            if (out.source.leq(a, b) &&
                !out.target.leq(out.map[static_cast<size_t>(a)], out.map[static_cast<size_t>(b)]))
                out.monotone = false;
    return out;
}

ClassifyingSpaceReport classifying_space_check(const StratifiedComplex& x, Field field) {
    ClassifyingSpaceReport rep;
    RelativeCategory ent = enter_category(x);
    rep.nerve = homology(order_complex(ent.base), field);
    rep.space = homology(x.complex, field);
    auto trim = [](std::vector<long long> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    rep.equal = trim(rep.nerve.betti) == trim(rep.space.betti);
    return rep;
}

GroupoidVerdict is_groupoid(const StratifiedComplex& x) {
    for (int s = 0; s < x.complex.simplex_count(); ++s) {
        const auto& simplex = x.complex.simplex(s);
        for (const auto& f : SimplicialComplex::facets(simplex)) {
            int fid = x.complex.index_of(f);
            if (x.stratum_of(fid) != x.stratum_of(s)) {
                GroupoidVerdict v;
                v.groupoid = false;
                v.witness = {{x.complex.id_vector(f), x.complex.id_vector(simplex)}};
                return v;
            }
        }
    }
    GroupoidVerdict v;
    v.groupoid = true;
    return v;
}

}  // namespace strata
