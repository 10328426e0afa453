#include "strata/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace strata {

const char* field_name(Field f) { return f == Field::Q ? "q" : "f2"; }

namespace {

// ----- field traits ---------------------------------------------------------

struct QOps {
    using elem = Rat;
    static elem one() { return Rat(1); }
    static bool is_zero(const elem& x) { return x == 0; }
    static elem neg(const elem& x) { return -x; }
    static elem mul(const elem& x, const elem& y) { return x * y; }
    static elem add(const elem& x, const elem& y) { return x + y; }
    static elem inv(const elem& x) { return Rat(1) / x; }
    static elem from_sign(int s) { return Rat(s); }
};

struct F2Ops {
    using elem = unsigned char;
    static elem one() { return 1; }
    static bool is_zero(elem x) { return x == 0; }
    static elem neg(elem x) { return x; }
    static elem mul(elem x, elem y) { return x & y; }
    static elem add(elem x, elem y) { return x ^ y; }
    static elem inv(elem) { return 1; }
    static elem from_sign(int) { return 1; }
};

template <class Ops>
using Col = std::vector<std::pair<int, typename Ops::elem>>;  // sorted by row

// x += lambda * y
template <class Ops>
void axpy(Col<Ops>& x, const Col<Ops>& y, const typename Ops::elem& lambda) {
    Col<Ops> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, Ops::mul(lambda, y[j].second));
            ++j;
        } else {
            auto v = Ops::add(x[i].second, Ops::mul(lambda, y[j].second));
            if (!Ops::is_zero(v)) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    x = std::move(out);
}

template <class Ops>
struct ReduceResult {
    int rank = 0;
    std::vector<Col<Ops>> kernel;  // combinations of input columns spanning the null space
    std::vector<Col<Ops>> image;   // reduced nonzero columns: a basis of the column space
};

// Column reduction with pivot = largest row index.  Optionally tracks the
// companion combination matrix to output a kernel basis.
template <class Ops>
ReduceResult<Ops> reduce_columns(std::vector<Col<Ops>> cols, bool want_kernel, bool want_image) {
    ReduceResult<Ops> out;
    std::map<int, size_t> pivot_owner;  // pivot row -> column index
    std::vector<Col<Ops>> companion;
    if (want_kernel) {
        companion.resize(cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            companion[j] = {{static_cast<int>(j), Ops::one()}};
    }
    for (size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int piv = col.back().first;
            auto it = pivot_owner.find(piv);
            if (it == pivot_owner.end()) break;
            size_t o = it->second;
            // cancel: col += lambda * cols[o], lambda = -col[piv]/owner[piv]
            auto lambda = Ops::neg(Ops::mul(col.back().second, Ops::inv(cols[o].back().second)));
            axpy<Ops>(col, cols[o], lambda);
            if (want_kernel) axpy<Ops>(companion[j], companion[o], lambda);
        }
        if (!col.empty()) {
            pivot_owner.emplace(col.back().first, j);
            ++out.rank;
        } else if (want_kernel) {
            out.kernel.push_back(std::move(companion[j]));
        }
    }
    if (want_image)
        for (auto& c : cols)
            if (!c.empty()) out.image.push_back(std::move(c));
    return out;
}

// ----- chain data for a complex and its full subcomplexes -------------------

struct ChainIndex {
    const SimplicialComplex* k = nullptr;
    std::vector<std::vector<int>> by_dim;  // simplex ids per dimension
    std::vector<int> pos;                  // simplex id -> position within its dimension

    explicit ChainIndex(const SimplicialComplex& kk) : k(&kk) {
        by_dim.resize(static_cast<size_t>(kk.dim() + 1));
        pos.assign(static_cast<size_t>(kk.simplex_count()), -1);
        for (int s = 0; s < kk.simplex_count(); ++s) {
            size_t d = kk.simplex(s).size() - 1;
            pos[static_cast<size_t>(s)] = static_cast<int>(by_dim[d].size());
            by_dim[d].push_back(s);
        }
    }
};

// Boundary column of one simplex, rows indexed by a caller-supplied position
// map over (dim-1)-simplices (-1 entries are dropped rows -- never needed
// here since subcomplexes are face closed).
template <class Ops>
Col<Ops> boundary_column(const SimplicialComplex& k, int simplex_id,
                         const std::vector<int>& row_pos) {
    Col<Ops> col;
    const auto& s = k.simplex(simplex_id);
    if (s.size() <= 1) return col;
    int sign = 1;
    for (const auto& f : SimplicialComplex::facets(s)) {
        int fid = k.index_of(f);
        if (fid < 0) throw InternalError("boundary: face missing from complex");
        int row = row_pos[static_cast<size_t>(fid)];
        if (row < 0) throw InternalError("boundary: face outside subcomplex");
        col.emplace_back(row, Ops::from_sign(sign));
        sign = -sign;
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
}

// Selection of a full subcomplex inside an indexed ambient complex.
struct Selection {
    std::vector<std::vector<int>> by_dim;  // simplex ids per dim (ambient ids)
    std::vector<int> pos;                  // ambient simplex id -> position, -1 if absent

    Selection(const ChainIndex& ci, const std::vector<char>& member) {
        by_dim.resize(ci.by_dim.size());
        pos.assign(static_cast<size_t>(ci.k->simplex_count()), -1);
        for (size_t d = 0; d < ci.by_dim.size(); ++d)
            for (int s : ci.by_dim[d])
                if (member[static_cast<size_t>(s)]) {
                    pos[static_cast<size_t>(s)] = static_cast<int>(by_dim[d].size());
                    by_dim[d].push_back(s);
                }
    }

    long long count(size_t d) const {
        return d < by_dim.size() ? static_cast<long long>(by_dim[d].size()) : 0;
    }
};

template <class Ops>
std::vector<Col<Ops>> boundary_matrix(const SimplicialComplex& k, const Selection& sel, size_t d) {
    std::vector<Col<Ops>> cols;
    if (d >= sel.by_dim.size()) return cols;
    cols.reserve(sel.by_dim[d].size());
    for (int s : sel.by_dim[d]) cols.push_back(boundary_column<Ops>(k, s, sel.pos));
    return cols;
}

template <class Ops>
std::vector<long long> betti_of_selection(const SimplicialComplex& k, const Selection& sel) {
    int top = -1;
    for (size_t d = 0; d < sel.by_dim.size(); ++d)
        if (!sel.by_dim[d].empty()) top = static_cast<int>(d);
    std::vector<long long> betti;
    if (top < 0) return betti;
    std::vector<int> rank(static_cast<size_t>(top + 2), 0);
    for (int d = 1; d <= top; ++d) {
        auto cols = boundary_matrix<Ops>(k, sel, static_cast<size_t>(d));
        rank[static_cast<size_t>(d)] = reduce_columns<Ops>(std::move(cols), false, false).rank;
    }
    betti.resize(static_cast<size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        betti[static_cast<size_t>(d)] =
            sel.count(static_cast<size_t>(d)) - rank[static_cast<size_t>(d)] -
            rank[static_cast<size_t>(d + 1)];
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    return betti;
}

std::vector<char> members_of_vertex_subset(const SimplicialComplex& k,
                                           const std::vector<int>& verts) {
    std::vector<char> vin(static_cast<size_t>(k.vertex_count()), 0);
    for (int v : verts) vin[static_cast<size_t>(v)] = 1;
    std::vector<char> member(static_cast<size_t>(k.simplex_count()), 1);
    for (int s = 0; s < k.simplex_count(); ++s)
        for (int v : k.simplex(s))
            if (!vin[static_cast<size_t>(v)]) { member[static_cast<size_t>(s)] = 0; break; }
    return member;
}

template <class Ops>
std::vector<long long> betti_dispatch(const SimplicialComplex& k, const std::vector<char>& member) {
    ChainIndex ci(k);
    Selection sel(ci, member);
    return betti_of_selection<Ops>(k, sel);
}

long long signed_count(const std::vector<long long>& betti) {
    long long chi = 0;
    for (size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0) ? betti[i] : -betti[i];
    return chi;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& k, Field field) {
    std::vector<char> all(static_cast<size_t>(k.simplex_count()), 1);
    HomologyProfile out;
    out.field = field;
    out.betti = field == Field::Q ? betti_dispatch<QOps>(k, all) : betti_dispatch<F2Ops>(k, all);
    out.betti.resize(static_cast<size_t>(std::max(0, k.dim() + 1)), 0);
    out.euler = signed_count(out.betti);
    if (out.euler != k.euler())
        throw InternalError("homology: Euler characteristic mismatch against simplex count");
    return out;
}

std::vector<long long> betti_full_subcomplex(const SimplicialComplex& ambient,
                                             const std::vector<int>& vertex_subset, Field field) {
    auto member = members_of_vertex_subset(ambient, vertex_subset);
    return field == Field::Q ? betti_dispatch<QOps>(ambient, member)
                             : betti_dispatch<F2Ops>(ambient, member);
}

namespace {

template <class Ops>
MVLedger mv_impl(const SimplicialComplex& ambient, const std::vector<int>& verts_a,
                 const std::vector<int>& verts_b, int chain_cap,
                 const std::vector<long long>* betti_ambient) {
    ChainIndex ci(ambient);
    auto mem_a = members_of_vertex_subset(ambient, verts_a);
    auto mem_b = members_of_vertex_subset(ambient, verts_b);
    for (int s = 0; s < ambient.simplex_count(); ++s)
        if (!mem_a[static_cast<size_t>(s)] && !mem_b[static_cast<size_t>(s)])
            throw ValidationError("mayer_vietoris_ledger: cover misses simplex " +
                                  ambient.label(ambient.simplex(s)));
    std::vector<char> mem_i(static_cast<size_t>(ambient.simplex_count()), 0);
    for (int s = 0; s < ambient.simplex_count(); ++s)
        mem_i[static_cast<size_t>(s)] = (mem_a[static_cast<size_t>(s)] && mem_b[static_cast<size_t>(s)]) ? 1 : 0;
    Selection sa(ci, mem_a), sb(ci, mem_b), si(ci, mem_i);
    Selection sx(ci, std::vector<char>(static_cast<size_t>(ambient.simplex_count()), 1));

    auto ba = betti_of_selection<Ops>(ambient, sa);
    auto bb = betti_of_selection<Ops>(ambient, sb);
    auto bi = betti_of_selection<Ops>(ambient, si);
    std::vector<long long> bx;
    if (betti_ambient) {
        bx = *betti_ambient;
    } else {
        bx = betti_of_selection<Ops>(ambient, sx);
    }

    int top = std::max(std::max(static_cast<int>(ba.size()), static_cast<int>(bb.size())),
                       std::max(static_cast<int>(bi.size()), static_cast<int>(bx.size()))) -
              1;
    top = std::max(top, 0);
    auto get = [](const std::vector<long long>& v, int d) -> long long {
        return (d >= 0 && d < static_cast<int>(v.size())) ? v[static_cast<size_t>(d)] : 0;
    };

    MVLedger ledger;
    ledger.exact = true;
    std::vector<long long> alpha(static_cast<size_t>(top + 1), -1);
    std::vector<char> alpha_chain(static_cast<size_t>(top + 1), 0);

    // Chain-level restriction ranks where the spaces are small enough.
    for (int n = 0; n <= top; ++n) {
        long long ci_n = si.count(static_cast<size_t>(n));
        long long ca_n = sa.count(static_cast<size_t>(n));
        long long cb_n = sb.count(static_cast<size_t>(n));
        if (ci_n == 0) {
            alpha[static_cast<size_t>(n)] = 0;
            alpha_chain[static_cast<size_t>(n)] = 1;
            continue;
        }
        if (std::max({ci_n, ca_n, cb_n}) > chain_cap) continue;
        // Z_n(inter) as combinations of inter n-simplices.
        auto zred = reduce_columns<Ops>(boundary_matrix<Ops>(ambient, si, static_cast<size_t>(n)),
                                        true, false);
        // Boundary bases inside A and B.
        auto bred_a = reduce_columns<Ops>(
            boundary_matrix<Ops>(ambient, sa, static_cast<size_t>(n + 1)), false, true);
        auto bred_b = reduce_columns<Ops>(
            boundary_matrix<Ops>(ambient, sb, static_cast<size_t>(n + 1)), false, true);
        // Assemble columns in C_n(A) + C_n(B): rows 0..ca-1 for A, then B.
        std::vector<Col<Ops>> cols;
        auto lift = [&](const Col<Ops>& z) {
            Col<Ops> big;
            for (const auto& [p, v] : z) {
                int amb = si.by_dim[static_cast<size_t>(n)][static_cast<size_t>(p)];
                big.emplace_back(sa.pos[static_cast<size_t>(amb)], v);
            }
            std::sort(big.begin(), big.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            Col<Ops> tail;
            for (const auto& [p, v] : z) {
                int amb = si.by_dim[static_cast<size_t>(n)][static_cast<size_t>(p)];
                tail.emplace_back(static_cast<int>(ca_n) + sb.pos[static_cast<size_t>(amb)], v);
            }
            std::sort(tail.begin(), tail.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            big.insert(big.end(), tail.begin(), tail.end());
            return big;
        };
        for (const auto& z : zred.kernel) cols.push_back(lift(z));
        for (const auto& c : bred_a.image) cols.push_back(c);  // rows already A positions
        for (const auto& c : bred_b.image) {
            Col<Ops> shifted = c;
            for (auto& [r, v] : shifted) r += static_cast<int>(ca_n);
            cols.push_back(std::move(shifted));
        }
        long long boundary_rank =
            static_cast<long long>(bred_a.image.size() + bred_b.image.size());
        long long total = reduce_columns<Ops>(std::move(cols), false, false).rank;
        alpha[static_cast<size_t>(n)] = total - boundary_rank;
        alpha_chain[static_cast<size_t>(n)] = 1;
    }

    // Solve the remaining ranks from exactness, top degree downward, and
    // verify all constraints.
    long long s_above = 0;  // rank of connecting map out of degree n+1
    std::string fail;
    std::vector<MVRow> rows(static_cast<size_t>(top + 1));
    for (int n = top; n >= 0; --n) {
        MVRow row;
        row.degree = n;
        row.b_inter = get(bi, n);
        row.b_a = get(ba, n);
        row.b_b = get(bb, n);
        row.b_x = get(bx, n);
        long long solved_alpha = row.b_inter - s_above;
        if (alpha[static_cast<size_t>(n)] < 0) {
            row.rank_restriction = solved_alpha;
            row.chain_level = false;
        } else {
            row.rank_restriction = alpha[static_cast<size_t>(n)];
            row.chain_level = alpha_chain[static_cast<size_t>(n)] != 0;
            if (row.rank_restriction != solved_alpha && fail.empty())
                fail = "degree " + std::to_string(n) + ": chain-level restriction rank " +
                       std::to_string(row.rank_restriction) + " != solved " +
                       std::to_string(solved_alpha);
        }
        long long beta = row.b_a + row.b_b - row.rank_restriction;
        long long s_n = row.b_x - beta;
        row.rank_connecting = s_n;
        if (fail.empty()) {
            if (row.rank_restriction < 0 || row.rank_restriction > row.b_inter)
                fail = "degree " + std::to_string(n) + ": restriction rank out of range";
            else if (beta < 0 || beta > row.b_x)
                fail = "degree " + std::to_string(n) + ": middle rank out of range";
            else if (s_n < 0 || (n > 0 && s_n > get(bi, n - 1)))
                fail = "degree " + std::to_string(n) + ": connecting rank out of range";
            else if (n == 0 && s_n != 0)
                fail = "degree 0: connecting rank must vanish";
        }
        rows[static_cast<size_t>(n)] = row;
        s_above = s_n;
    }
    ledger.rows = rows;
    ledger.exact = fail.empty();
    ledger.failure = fail;
    return ledger;
}

}  // namespace

MVLedger mayer_vietoris_ledger(const SimplicialComplex& ambient, const std::vector<int>& verts_a,
                               const std::vector<int>& verts_b, Field field, int chain_cap,
                               const std::vector<long long>* betti_ambient) {
    return field == Field::Q
               ? mv_impl<QOps>(ambient, verts_a, verts_b, chain_cap, betti_ambient)
               : mv_impl<F2Ops>(ambient, verts_a, verts_b, chain_cap, betti_ambient);
}

// ----- dense rational helpers ------------------------------------------------

QMatrix q_identity(int n) {
    QMatrix m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size();
    size_t mid = b.size();
    size_t m = mid ? b[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != mid) throw ValidationError("q_mul: shape mismatch");
    QMatrix out(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> q_rref(QMatrix& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int q_rank(QMatrix m) { return static_cast<int>(q_rref(m).size()); }

bool q_invertible(const QMatrix& m) {
    if (m.empty()) return true;
    if (m.size() != m[0].size()) return false;
    return q_rank(m) == static_cast<int>(m.size());
}

QMatrix q_nullspace(const QMatrix& m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    QMatrix work = m;
    std::vector<int> pivots = q_rref(work);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<int> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
    QMatrix basis(cols, std::vector<Rat>(free_cols.size(), Rat(0)));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        size_t fc = static_cast<size_t>(free_cols[f]);
        basis[fc][f] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis[static_cast<size_t>(pivots[pi])][f] = -work[pi][fc];
    }
    return basis;
}

}  // namespace strata
