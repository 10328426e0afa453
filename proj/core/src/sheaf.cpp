#include "strata/sheaf.hpp"

#include <algorithm>
#include <array>

namespace strata {

namespace {

bool same_matrix(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// a * b with an explicit column count for b, so that factoring through a
// zero-dimensional stalk (b with no rows) still yields a correctly shaped
// zero matrix.
QMatrix compose(const QMatrix& a, const QMatrix& b, int b_cols) {
    if (b.empty())
        return QMatrix(a.size(), std::vector<Rat>(static_cast<size_t>(b_cols), Rat(0)));
    return q_mul(a, b);
}

struct CompositeTable {
    // For each source a: matrices to every b >= a reachable through covers.
    std::vector<std::map<int, QMatrix>> to;
    bool path_independent = true;
    std::optional<std::array<Id, 4>> diamond;
};

CompositeTable all_composites(const Sheaf& f) {
    const Poset& base = f.carrier.base;
    CompositeTable table;
    table.to.resize(static_cast<size_t>(base.size()));
    auto covers = base.covers();
    std::vector<std::vector<int>> covers_up(static_cast<size_t>(base.size()));
    for (const auto& [a, b] : covers) covers_up[static_cast<size_t>(a)].push_back(b);
    std::vector<int> ext = base.linear_extension();
    for (int src = 0; src < base.size(); ++src) {
        auto& comp = table.to[static_cast<size_t>(src)];
        std::map<int, int> via;  // how each target was first reached
        comp.emplace(src, q_identity(f.dims[static_cast<size_t>(src)]));
        via.emplace(src, src);
        for (int e : ext) {
            auto it = comp.find(e);
            if (it == comp.end()) continue;
            for (int up : covers_up[static_cast<size_t>(e)]) {
                auto mit = f.maps.find({e, up});
                if (mit == f.maps.end())
                    throw ValidationError("sheaf: missing matrix on covering edge " +
                                          base.id_of(e) + " -> " + base.id_of(up));
                QMatrix cand = compose(mit->second, it->second, f.dims[static_cast<size_t>(src)]);
                auto [cit, fresh] = comp.emplace(up, cand);
                if (fresh) {
                    via.emplace(up, e);
                } else if (!same_matrix(cit->second, cand) && table.path_independent) {
                    table.path_independent = false;
                    table.diamond = {{base.id_of(src), base.id_of(via.at(up)), base.id_of(e),
                                      base.id_of(up)}};
                }
            }
        }
    }
    return table;
}

}  // namespace

SheafReport validate_sheaf(const Sheaf& f) {
    SheafReport rep;
    const Poset& base = f.carrier.base;
    if (static_cast<int>(f.dims.size()) != base.size())
        throw ValidationError("sheaf: dims size mismatch");
    for (int d : f.dims)
        if (d < 0) throw ValidationError("sheaf: negative stalk dimension");
    // Shape checks.
    auto covers = base.covers();
    std::set<std::pair<int, int>> cover_set(covers.begin(), covers.end());
    for (const auto& [edge, m] : f.maps) {
        if (!cover_set.count(edge)) {
            rep.shapes_ok = false;
            rep.shape_error = "matrix on non-covering pair " + base.id_of(edge.first) + " -> " +
                              base.id_of(edge.second);
            return rep;
        }
        size_t rows = static_cast<size_t>(f.dims[static_cast<size_t>(edge.second)]);
        size_t cols = static_cast<size_t>(f.dims[static_cast<size_t>(edge.first)]);
        bool shape = m.size() == rows;
        for (const auto& row : m)
            if (row.size() != cols) shape = false;
        if (!shape) {
            rep.shapes_ok = false;
            rep.shape_error = "matrix shape on " + base.id_of(edge.first) + " -> " +
                              base.id_of(edge.second) + " must be " + std::to_string(rows) + "x" +
                              std::to_string(cols);
            return rep;
        }
    }
    for (const auto& e : covers)
        if (!f.maps.count(e)) {
            rep.shapes_ok = false;
            rep.shape_error = "missing matrix on covering edge " + base.id_of(e.first) + " -> " +
                              base.id_of(e.second);
            return rep;
        }
    CompositeTable table = all_composites(f);
    rep.path_independent = table.path_independent;
    rep.diamond = table.diamond;
    if (!rep.path_independent) return rep;
    for (const auto& [a, b] : f.carrier.weak) {
        const QMatrix& m = table.to[static_cast<size_t>(a)].at(b);
        if (f.dims[static_cast<size_t>(a)] != f.dims[static_cast<size_t>(b)] || !q_invertible(m)) {
            rep.w_inverting = false;
            rep.non_invertible_weak = {{f.carrier.base.id_of(a), f.carrier.base.id_of(b)}};
            break;
        }
    }
    return rep;
}

Sheaf constant_sheaf(const StratifiedComplex& x, int rank) {
    if (rank < 0) throw ValidationError("constant_sheaf: rank must be >= 0");
    Sheaf f;
    f.carrier = enter_category(x);
    f.dims.assign(static_cast<size_t>(f.carrier.base.size()), rank);
    for (const auto& e : f.carrier.base.covers()) f.maps.emplace(e, q_identity(rank));
    return f;
}

bool is_locally_constant(const Sheaf& f) {
    for (const auto& [edge, m] : f.maps) {
        if (f.dims[static_cast<size_t>(edge.first)] != f.dims[static_cast<size_t>(edge.second)])
            return false;
        if (!q_invertible(m)) return false;
    }
    return true;
}

QMatrix sheaf_composite(const Sheaf& f, int a, int b) {
    if (!f.carrier.base.leq(a, b)) throw ValidationError("sheaf_composite: not a relation");
    CompositeTable table = all_composites(f);
    if (!table.path_independent) throw ValidationError("sheaf_composite: not path independent");
    return table.to[static_cast<size_t>(a)].at(b);
}

GlobalSections global_sections(const Sheaf& f) {
    const Poset& base = f.carrier.base;
    GlobalSections out;
    out.offsets.resize(static_cast<size_t>(base.size()) + 1, 0);
    for (int i = 0; i < base.size(); ++i)
        out.offsets[static_cast<size_t>(i) + 1] =
            out.offsets[static_cast<size_t>(i)] + f.dims[static_cast<size_t>(i)];
    int total = out.offsets.back();
    std::vector<std::vector<Rat>> rows;
    for (const auto& [edge, m] : f.maps) {
        auto [a, b] = edge;
        int da = f.dims[static_cast<size_t>(a)];
        int db = f.dims[static_cast<size_t>(b)];
        for (int r = 0; r < db; ++r) {
            std::vector<Rat> row(static_cast<size_t>(total), Rat(0));
            for (int c = 0; c < da; ++c)
                row[static_cast<size_t>(out.offsets[static_cast<size_t>(a)] + c)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            row[static_cast<size_t>(out.offsets[static_cast<size_t>(b)] + r)] -= 1;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) rows.emplace_back(static_cast<size_t>(total), Rat(0));
    out.basis = q_nullspace(rows);
    out.dim = out.basis.empty() ? 0 : static_cast<int>(out.basis[0].size());
    if (total == 0) out.dim = 0;
    return out;
}

SheafCohomology sheaf_cohomology(const Sheaf& f) {
    const Poset& base = f.carrier.base;
    CompositeTable table = all_composites(f);
    if (!table.path_independent)
        throw ValidationError("sheaf_cohomology: functor is not path independent");
    auto chains = base.chains();
    int top = 0;
    for (const auto& c : chains) top = std::max(top, static_cast<int>(c.size()) - 1);
    // Index chains by degree; record coordinate offsets.
    std::vector<std::vector<int>> by_degree(static_cast<size_t>(top + 1));
    std::vector<std::vector<int>> chain_offset(static_cast<size_t>(top + 1));
    std::vector<long long> cochain_dim(static_cast<size_t>(top + 1), 0);
    std::map<std::vector<int>, int> chain_index;
    for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
        size_t d = chains[static_cast<size_t>(i)].size() - 1;
        chain_index.emplace(chains[static_cast<size_t>(i)], static_cast<int>(by_degree[d].size()));
        by_degree[d].push_back(i);
    }
    for (int d = 0; d <= top; ++d) {
        chain_offset[static_cast<size_t>(d)].resize(by_degree[static_cast<size_t>(d)].size() + 1, 0);
        for (size_t j = 0; j < by_degree[static_cast<size_t>(d)].size(); ++j) {
            const auto& c = chains[static_cast<size_t>(by_degree[static_cast<size_t>(d)][j])];
            chain_offset[static_cast<size_t>(d)][j + 1] =
                chain_offset[static_cast<size_t>(d)][j] + f.dims[static_cast<size_t>(c.back())];
        }
        cochain_dim[static_cast<size_t>(d)] = chain_offset[static_cast<size_t>(d)].back();
    }
    // Differential D_d : C^{d-1} -> C^d as sparse columns over Q.
    using Col = std::vector<std::pair<int, Rat>>;
    auto build_diff = [&](int d) -> std::vector<Col> {
        std::vector<Col> cols(static_cast<size_t>(cochain_dim[static_cast<size_t>(d - 1)]));
        for (size_t j = 0; j < by_degree[static_cast<size_t>(d)].size(); ++j) {
            const auto& c = chains[static_cast<size_t>(by_degree[static_cast<size_t>(d)][j])];
            int row0 = chain_offset[static_cast<size_t>(d)][j];
            int dim_top = f.dims[static_cast<size_t>(c.back())];
            for (size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<int> face;
                for (size_t t = 0; t < c.size(); ++t)
                    if (t != drop) face.push_back(c[t]);
                auto fit = chain_index.find(face);
                if (fit == chain_index.end()) throw InternalError("cochain face missing");
                int fj = fit->second;
                int col0 = chain_offset[static_cast<size_t>(d - 1)][static_cast<size_t>(fj)];
                int sign = (drop % 2 == 0) ? 1 : -1;
                if (drop + 1 < c.size()) {
                    // identity block on the shared top stalk
                    for (int t = 0; t < dim_top; ++t)
                        cols[static_cast<size_t>(col0 + t)].emplace_back(row0 + t, Rat(sign));
                } else {
                    // face drops the top; compose with the functor map
                    const QMatrix& m =
                        table.to[static_cast<size_t>(c[c.size() - 2])].at(c.back());
                    int dim_prev = f.dims[static_cast<size_t>(c[c.size() - 2])];
                    for (int cc = 0; cc < dim_prev; ++cc)
                        for (int rr = 0; rr < dim_top; ++rr) {
                            const Rat& v = m[static_cast<size_t>(rr)][static_cast<size_t>(cc)];
                            if (v != 0)
                                cols[static_cast<size_t>(col0 + cc)].emplace_back(row0 + rr,
                                                                                  Rat(sign) * v);
                        }
                }
            }
        }
        for (auto& col : cols)
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge duplicate rows (a column can hit the same row via several faces)
        for (auto& col : cols) {
            Col merged;
            for (const auto& [r, v] : col) {
                if (!merged.empty() && merged.back().first == r) {
                    merged.back().second += v;
                    if (merged.back().second == 0) merged.pop_back();
                } else {
                    merged.emplace_back(r, v);
                }
            }
            col = std::move(merged);
        }
        return cols;
    };
    // ranks via column reduction
    std::vector<int> rank(static_cast<size_t>(top + 2), 0);
    for (int d = 1; d <= top; ++d) {
        auto cols = build_diff(d);
        std::map<int, size_t> pivot_owner;
        int r = 0;
        for (size_t j = 0; j < cols.size(); ++j) {
            auto& col = cols[j];
            while (!col.empty()) {
                int piv = col.back().first;
                auto it = pivot_owner.find(piv);
                if (it == pivot_owner.end()) break;
                const auto& other = cols[it->second];
                Rat lambda = -col.back().second / other.back().second;
                Col merged;
                size_t a = 0, b = 0;
                while (a < col.size() || b < other.size()) {
                    if (b == other.size() || (a < col.size() && col[a].first < other[b].first))
                        merged.push_back(col[a++]);
                    else if (a == col.size() || other[b].first < col[a].first) {
                        merged.emplace_back(other[b].first, lambda * other[b].second);
                        ++b;
                    } else {
                        Rat v = col[a].second + lambda * other[b].second;
                        if (v != 0) merged.emplace_back(col[a].first, v);
                        ++a;
                        ++b;
                    }
                }
                col = std::move(merged);
            }
            if (!col.empty()) {
                pivot_owner.emplace(col.back().first, j);
                ++r;
            }
        }
        rank[static_cast<size_t>(d)] = r;
    }
    SheafCohomology out;
    out.h.resize(static_cast<size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        out.h[static_cast<size_t>(d)] = cochain_dim[static_cast<size_t>(d)] -
                                        rank[static_cast<size_t>(d)] -
                                        rank[static_cast<size_t>(d + 1)];
        out.euler += (d % 2 == 0) ? out.h[static_cast<size_t>(d)] : -out.h[static_cast<size_t>(d)];
        out.euler_cochain += (d % 2 == 0) ? cochain_dim[static_cast<size_t>(d)]
                                          : -cochain_dim[static_cast<size_t>(d)];
    }
    if (out.euler != out.euler_cochain)
        throw InternalError("sheaf_cohomology: Euler characteristic mismatch");
    while (!out.h.empty() && out.h.back() == 0) out.h.pop_back();
    return out;
}

Sheaf pullback_refinement(const Sheaf& f, const StratifiedComplex& x) {
    // f must live on the face poset of x's complex.
    Poset fk = face_poset(x.complex);
    if (fk.elements() != f.carrier.base.elements())
        throw ValidationError("pullback_refinement: sheaf base does not match the complex");
    CompositeTable table = all_composites(f);
    if (!table.path_independent)
        throw ValidationError("pullback_refinement: functor is not path independent");
    Subdivision sd = subdivide(x.complex);
    Sheaf out;
    // Base = face poset of the subdivision; weak edges from the carrier-max
    // restratification of x.
    out.carrier.base = face_poset(sd.sd);
    std::vector<int> to_orig_simplex(static_cast<size_t>(sd.sd.simplex_count()));
    for (int s = 0; s < sd.sd.simplex_count(); ++s) {
        int top = sd.chain_max(sd.sd.simplex(s));
        to_orig_simplex[static_cast<size_t>(s)] =
            x.complex.index_of(sd.carrier[static_cast<size_t>(top)]);
    }
    for (int a = 0; a < out.carrier.base.size(); ++a)
        for (int b = 0; b < out.carrier.base.size(); ++b)
            if (out.carrier.base.lt(a, b) &&
                x.stratum_of(to_orig_simplex[static_cast<size_t>(a)]) ==
                    x.stratum_of(to_orig_simplex[static_cast<size_t>(b)]))
                out.carrier.weak.insert({a, b});
    out.dims.resize(static_cast<size_t>(out.carrier.base.size()));
    for (int e = 0; e < out.carrier.base.size(); ++e)
        out.dims[static_cast<size_t>(e)] =
            f.dims[static_cast<size_t>(to_orig_simplex[static_cast<size_t>(e)])];
    for (const auto& [a, b] : out.carrier.base.covers()) {
        int oa = to_orig_simplex[static_cast<size_t>(a)];
        int ob = to_orig_simplex[static_cast<size_t>(b)];
        out.maps.emplace(std::make_pair(a, b), table.to[static_cast<size_t>(oa)].at(ob));
    }
    return out;
}

CoarseEquivalenceReport coarse_equivalence_check(int n, const ChainFunctor& g) {
    if (n < 0) throw ValidationError("coarse_equivalence_check: n must be >= 0");
    if (static_cast<int>(g.dims.size()) != n + 1 || static_cast<int>(g.steps.size()) != n)
        throw ValidationError("coarse_equivalence_check: functor arity mismatch");
    for (int i = 0; i < n; ++i) {
        if (g.steps[static_cast<size_t>(i)].size() != static_cast<size_t>(g.dims[static_cast<size_t>(i) + 1]))
            throw ValidationError("coarse_equivalence_check: step shape mismatch");
        for (const auto& row : g.steps[static_cast<size_t>(i)])
            if (row.size() != static_cast<size_t>(g.dims[static_cast<size_t>(i)]))
                throw ValidationError("coarse_equivalence_check: step shape mismatch");
    }
    CoarseEquivalenceReport rep;
    // The chain poset side.
    Sheaf on_chain;
    {
        std::vector<Id> elems;
        std::vector<std::pair<Id, Id>> rel;
        for (int i = 0; i <= n; ++i) elems.push_back(std::to_string(i));
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) rel.emplace_back(std::to_string(i), std::to_string(j));
        on_chain.carrier.base = Poset::from_relations(elems, rel);
        on_chain.dims = g.dims;
        for (int i = 0; i < n; ++i)
            on_chain.maps.emplace(std::make_pair(i, i + 1), g.steps[static_cast<size_t>(i)]);
    }
    rep.on_chain = sheaf_cohomology(on_chain);
    // The face poset side.
    StratifiedComplex x = standard_simplex_stratification(n);
    Sheaf on_faces;
    on_faces.carrier = enter_category(x);
    const Poset& base = on_faces.carrier.base;
    // stalk at sigma = value at the largest vertex of sigma
    std::vector<int> level(static_cast<size_t>(base.size()));
    for (int s = 0; s < x.complex.simplex_count(); ++s) {
        int maxv = *std::max_element(x.complex.simplex(s).begin(), x.complex.simplex(s).end());
        level[static_cast<size_t>(s)] = maxv;  // vertex ids are "0".."n" in order
    }
    on_faces.dims.resize(static_cast<size_t>(base.size()));
    for (int s = 0; s < base.size(); ++s)
        on_faces.dims[static_cast<size_t>(s)] = g.dims[static_cast<size_t>(level[static_cast<size_t>(s)])];
    auto step_composite = [&](int from, int to) {
        QMatrix m = q_identity(g.dims[static_cast<size_t>(from)]);
        for (int i = from; i < to; ++i)
            m = compose(g.steps[static_cast<size_t>(i)], m, g.dims[static_cast<size_t>(from)]);
        return m;
    };
    for (const auto& [a, b] : base.covers())
        on_faces.maps.emplace(std::make_pair(a, b),
                              step_composite(level[static_cast<size_t>(a)], level[static_cast<size_t>(b)]));
    SheafReport v = validate_sheaf(on_faces);
    if (!v.shapes_ok || !v.path_independent)
        throw InternalError("coarse_equivalence_check: induced sheaf invalid");
    rep.w_inverting = v.w_inverting;
    rep.on_faces = sheaf_cohomology(on_faces);
    auto trim = [](std::vector<long long> h) {
        while (!h.empty() && h.back() == 0) h.pop_back();
        return h;
    };
    rep.equal = trim(rep.on_faces.h) == trim(rep.on_chain.h);
    return rep;
}

}  // namespace strata
