#include "strata/poset.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

Id pair_id(const Id& a, const Id& b) { return "(" + a + "," + b + ")"; }

Poset Poset::from_relations(std::vector<Id> elements,
                            const std::vector<std::pair<Id, Id>>& leq_pairs) {
    Poset p;
    p.elems_ = std::move(elements);
    for (int i = 0; i < p.size(); ++i) {
        auto [it, fresh] = p.idx_.emplace(p.elems_[static_cast<size_t>(i)], i);
        if (!fresh) throw ValidationError("duplicate poset element: " + p.elems_[static_cast<size_t>(i)]);
    }
    p.leq_.assign(p.elems_.size(), std::vector<std::uint8_t>(p.elems_.size(), 0));
    for (int i = 0; i < p.size(); ++i) p.leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (const auto& [a, b] : leq_pairs) {
        int i = p.index_of(a), j = p.index_of(b);
        if (i < 0) throw ValidationError("relation references unknown element: " + a);
        if (j < 0) throw ValidationError("relation references unknown element: " + b);
        p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
    return p;
}

int Poset::index_of(const Id& e) const {
    auto it = idx_.find(e);
    return it == idx_.end() ? -1 : it->second;
}

bool Poset::leq(const Id& a, const Id& b) const {
    int i = index_of(a), j = index_of(b);
    if (i < 0 || j < 0) throw ValidationError("leq query on unknown element");
    return leq(i, j);
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (!lt(a, b)) continue;
            bool covered = true;
            for (int m = 0; m < size() && covered; ++m)
                if (m != a && m != b && lt(a, m) && lt(m, b)) covered = false;
            if (covered) out.emplace_back(a, b);
        }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        bool minimal = true;
        for (int b = 0; b < size() && minimal; ++b)
            if (lt(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        bool maximal = true;
        for (int b = 0; b < size() && maximal; ++b)
            if (lt(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

bool Poset::is_downward_closed(const std::vector<int>& subset) const {
    std::vector<char> in(static_cast<size_t>(size()), 0);
    for (int s : subset) in[static_cast<size_t>(s)] = 1;
    for (int s : subset)
        for (int b = 0; b < size(); ++b)
            if (leq(b, s) && !in[static_cast<size_t>(b)]) return false;
    return true;
}

bool Poset::is_upward_closed(const std::vector<int>& subset) const {
    std::vector<char> in(static_cast<size_t>(size()), 0);
    for (int s : subset) in[static_cast<size_t>(s)] = 1;
    for (int s : subset)
        for (int b = 0; b < size(); ++b)
            if (leq(s, b) && !in[static_cast<size_t>(b)]) return false;
    return true;
}

Poset Poset::induced(const std::vector<int>& subset) const {
    std::vector<int> sel = subset;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    Poset out;
    for (int s : sel) {
        if (s < 0 || s >= size()) throw ValidationError("induced: index out of range");
        out.idx_.emplace(elems_[static_cast<size_t>(s)], static_cast<int>(out.elems_.size()));
        out.elems_.push_back(elems_[static_cast<size_t>(s)]);
    }
    out.leq_.assign(sel.size(), std::vector<std::uint8_t>(sel.size(), 0));
    for (size_t i = 0; i < sel.size(); ++i)
        for (size_t j = 0; j < sel.size(); ++j)
            out.leq_[i][j] = leq(sel[i], sel[j]) ? 1 : 0;
    return out;
}

std::vector<int> Poset::linear_extension() const {
    std::vector<int> placed;
    std::vector<char> done(static_cast<size_t>(size()), 0);
    for (int step = 0; step < size(); ++step) {
        int best = -1;
        for (int a = 0; a < size(); ++a) {
            if (done[static_cast<size_t>(a)]) continue;
            bool ready = true;
            for (int b = 0; b < size() && ready; ++b)
                if (!done[static_cast<size_t>(b)] && lt(b, a)) ready = false;
            if (!ready) continue;
            if (best < 0 || elems_[static_cast<size_t>(a)] < elems_[static_cast<size_t>(best)]) best = a;
        }
        if (best < 0) throw InternalError("linear_extension: relation is cyclic");
        done[static_cast<size_t>(best)] = 1;
        placed.push_back(best);
    }
    return placed;
}

std::vector<std::vector<int>> Poset::chains() const {
    std::vector<int> ext = linear_extension();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Extend by strictly-greater elements that come later in the extension,
    // so each chain is produced exactly once, in poset order.
    auto extend = [&](auto&& self, size_t start) -> void {
        out.push_back(cur);
        for (size_t k = start; k < ext.size(); ++k) {
            int cand = ext[k];
            if (!cur.empty() && !lt(cur.back(), cand)) continue;
            cur.push_back(cand);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    for (size_t k = 0; k < ext.size(); ++k) {
        cur.assign(1, ext[k]);
        extend(extend, k + 1);
    }
    return out;
}

PosetReport validate_poset(const Poset& p) {
    PosetReport rep;
    int n = p.size();
    for (int a = 0; a < n; ++a)
        if (!p.leq(a, a)) rep.missing_reflexive.push_back(p.id_of(a));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.leq(a, b) && p.leq(b, a))
                rep.antisymmetry.push_back({p.id_of(a), p.id_of(b)});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == b || !p.leq(b, c)) continue;
                if (!p.leq(a, c)) rep.transitivity.push_back({p.id_of(a), p.id_of(b), p.id_of(c)});
            }
        }
    return rep;
}

Poset product(const Poset& p, const Poset& q) {
    Poset out;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            Id id = pair_id(p.id_of(a), q.id_of(b));
            out.idx_.emplace(id, static_cast<int>(out.elems_.size()));
            out.elems_.push_back(id);
        }
    int n = out.size();
    out.leq_.assign(static_cast<size_t>(n), std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            for (int c = 0; c < p.size(); ++c)
                for (int d = 0; d < q.size(); ++d)
                    out.leq_[static_cast<size_t>(a * q.size() + b)]
                            [static_cast<size_t>(c * q.size() + d)] =
                        (p.leq(a, c) && q.leq(b, d)) ? 1 : 0;
    return out;
}

Poset cone(const Poset& p, const Id& tip) {
    if (p.contains(tip)) throw ValidationError("cone: tip id collides: " + tip);
    Poset out;
    out.elems_.push_back(tip);
    out.idx_.emplace(tip, 0);
    for (int a = 0; a < p.size(); ++a) {
        out.idx_.emplace(p.id_of(a), a + 1);
        out.elems_.push_back(p.id_of(a));
    }
    int n = out.size();
    out.leq_.assign(static_cast<size_t>(n), std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j) out.leq_[0][static_cast<size_t>(j)] = 1;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            out.leq_[static_cast<size_t>(a + 1)][static_cast<size_t>(b + 1)] = p.leq(a, b) ? 1 : 0;
    return out;
}

Poset join_poset(const Poset& p, const Poset& q) {
    Poset out;
    auto push = [&out](const Id& id) {
        auto [it, fresh] = out.idx_.emplace(id, static_cast<int>(out.elems_.size()));
        if (!fresh) throw ValidationError("join_poset: id collision: " + id);
        out.elems_.push_back(id);
    };
    for (int a = 0; a < p.size(); ++a) push("L:" + p.id_of(a));
    for (int b = 0; b < q.size(); ++b) push("R:" + q.id_of(b));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b) push(pair_id(p.id_of(a), q.id_of(b)));
    int np = p.size(), nq = q.size(), n = out.size();
    auto pi = [&](int a) { return a; };
    auto qi = [&](int b) { return np + b; };
    auto pq = [&](int a, int b) { return np + nq + a * nq + b; };
    out.leq_.assign(static_cast<size_t>(n), std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
    for (int a = 0; a < np; ++a)
        for (int c = 0; c < np; ++c)
            out.leq_[static_cast<size_t>(pi(a))][static_cast<size_t>(pi(c))] = p.leq(a, c) ? 1 : 0;
    for (int b = 0; b < nq; ++b)
        for (int d = 0; d < nq; ++d)
            out.leq_[static_cast<size_t>(qi(b))][static_cast<size_t>(qi(d))] = q.leq(b, d) ? 1 : 0;
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b)
            for (int c = 0; c < np; ++c)
                for (int d = 0; d < nq; ++d)
                    out.leq_[static_cast<size_t>(pq(a, b))][static_cast<size_t>(pq(c, d))] =
                        (p.leq(a, c) && q.leq(b, d)) ? 1 : 0;
    // a <= (c,d) iff a <= c; b <= (c,d) iff b <= d.  These are the closures
    // of the generating relations a <= (a,b), b <= (a,b).
    for (int a = 0; a < np; ++a)
        for (int c = 0; c < np; ++c)
            if (p.leq(a, c))
                for (int d = 0; d < nq; ++d)
                    out.leq_[static_cast<size_t>(pi(a))][static_cast<size_t>(pq(c, d))] = 1;
    for (int b = 0; b < nq; ++b)
        for (int d = 0; d < nq; ++d)
            if (q.leq(b, d))
                for (int c = 0; c < np; ++c)
                    out.leq_[static_cast<size_t>(qi(b))][static_cast<size_t>(pq(c, d))] = 1;
    for (int i = 0; i < n; ++i) out.leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return out;
}

ConsecutiveResult consecutive_check(const std::vector<Id>& q, const Poset& p) {
    std::vector<char> in(static_cast<size_t>(p.size()), 0);
    for (const Id& e : q) {
        int i = p.index_of(e);
        if (i < 0) throw ValidationError("consecutive_check: unknown element: " + e);
        in[static_cast<size_t>(i)] = 1;
    }
    for (int x = 0; x < p.size(); ++x) {
        if (!in[static_cast<size_t>(x)]) continue;
        for (int z = 0; z < p.size(); ++z) {
            if (!in[static_cast<size_t>(z)] || !p.leq(x, z)) continue;
            for (int y = 0; y < p.size(); ++y) {
                if (in[static_cast<size_t>(y)]) continue;
                if (p.leq(x, y) && p.leq(y, z))
                    return {Consecutive::not_interval, {p.id_of(x), p.id_of(y), p.id_of(z)}};
            }
        }
    }
    return {Consecutive::consecutive, {}};
}

Poset pp_make(int maxdim) {
    if (maxdim < -1) throw ValidationError("pp_make: maxdim must be >= -1");
    std::vector<std::pair<int, int>> pairs;
    for (int n = -1; n <= maxdim; ++n)
        for (int k = -1; k <= n; ++k) pairs.emplace_back(k, n);
    Poset out;
    for (const auto& [k, n] : pairs) {
        Id id = pair_id(std::to_string(k), std::to_string(n));
        out.idx_.emplace(id, static_cast<int>(out.elems_.size()));
        out.elems_.push_back(id);
    }
    size_t m = pairs.size();
    out.leq_.assign(m, std::vector<std::uint8_t>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            out.leq_[i][j] =
                (pairs[i].first >= pairs[j].first && pairs[i].second >= pairs[j].second) ? 1 : 0;
    return out;
}

namespace {

// Invariant coloring used to prune the isomorphism search: start from
// (|down-set|, |up-set|) and refine by hashing sorted neighbor colors.  The
// hash is a pure function of the order structure, so colors are comparable
// across posets; collisions only weaken pruning, never correctness.
std::vector<unsigned long long> iso_colors(const Poset& p) {
    int n = p.size();
    std::vector<unsigned long long> color(static_cast<size_t>(n)), next(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        unsigned long long down = 0, up = 0;
        for (int b = 0; b < n; ++b) {
            if (p.leq(b, a)) ++down;
            if (p.leq(a, b)) ++up;
        }
        color[static_cast<size_t>(a)] = down * 0x9e3779b97f4a7c15ULL + up * 0xc2b2ae3d27d4eb4fULL;
    }
    std::vector<unsigned long long> buf;
    buf.reserve(static_cast<size_t>(n));
    int rounds = std::min(n, 3);
    for (int round = 0; round < rounds; ++round) {
        for (int a = 0; a < n; ++a) {
            unsigned long long h = color[static_cast<size_t>(a)] * 0xff51afd7ed558ccdULL + 1;
            buf.clear();
            for (int b = 0; b < n; ++b)
                if (p.lt(b, a)) buf.push_back(color[static_cast<size_t>(b)]);
            std::sort(buf.begin(), buf.end());
            for (unsigned long long v : buf) h = (h ^ v) * 0x9e3779b97f4a7c15ULL;
            h = h * 0xc4ceb9fe1a85ec53ULL + 2;
            buf.clear();
            for (int b = 0; b < n; ++b)
                if (p.lt(a, b)) buf.push_back(color[static_cast<size_t>(b)]);
            std::sort(buf.begin(), buf.end());
            for (unsigned long long v : buf) h = (h ^ v) * 0x9e3779b97f4a7c15ULL;
            next[static_cast<size_t>(a)] = h;
        }
        color.swap(next);
    }
    return color;
}

bool iso_backtrack(const Poset& p, const Poset& q,
                   const std::vector<unsigned long long>& cp,
                   const std::vector<unsigned long long>& cq, std::vector<int>& map,
                   std::vector<char>& used, size_t at, const std::vector<int>& order) {
    if (at == order.size()) return true;
    int a = order[at];
    for (int b = 0; b < q.size(); ++b) {
        if (used[static_cast<size_t>(b)]) continue;
        if (cp[static_cast<size_t>(a)] != cq[static_cast<size_t>(b)]) continue;
        bool fits = true;
        for (size_t k = 0; k < at && fits; ++k) {
            int a2 = order[k], b2 = map[static_cast<size_t>(a2)];
            if (p.leq(a, a2) != q.leq(b, b2) || p.leq(a2, a) != q.leq(b2, b)) fits = false;
        }
        if (!fits) continue;
        map[static_cast<size_t>(a)] = b;
        used[static_cast<size_t>(b)] = 1;
        if (iso_backtrack(p, q, cp, cq, map, used, at + 1, order)) return true;
        used[static_cast<size_t>(b)] = 0;
    }
    return false;
}

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    if (p.empty()) return true;
    auto cp = iso_colors(p), cq = iso_colors(q);
    auto sorted_p = cp, sorted_q = cq;
    std::sort(sorted_p.begin(), sorted_p.end());
    std::sort(sorted_q.begin(), sorted_q.end());
    if (sorted_p != sorted_q) return false;
    // Match rare colors first.
    std::map<unsigned long long, int> freq;
    for (unsigned long long c : cp) ++freq[c];
    std::vector<int> order(static_cast<size_t>(p.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int fa = freq[cp[static_cast<size_t>(a)]], fb = freq[cp[static_cast<size_t>(b)]];
        if (fa != fb) return fa < fb;
        return a < b;
    });
    std::vector<int> map(static_cast<size_t>(p.size()), -1);
    std::vector<char> used(static_cast<size_t>(q.size()), 0);
    return iso_backtrack(p, q, cp, cq, map, used, 0, order);
}

}  // namespace strata
