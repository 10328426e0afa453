// Independent oracles used to pin expected values before the library paths
// are trusted: dense Gaussian elimination over exact rationals / GF(2) with
// its own boundary-matrix assembly, naive poset isomorphism by permutation
// search, and brute-force chain enumeration.  Nothing here shares code with
// the library's homology or isomorphism routines.
#ifndef STRATA_TESTS_ORACLE_HPP
#define STRATA_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "strata/complex.hpp"
#include "strata/homology.hpp"
#include "strata/poset.hpp"

namespace oracle {

using strata::Id;
using strata::Poset;
using strata::Rat;
using strata::SimplicialComplex;

// Dense rank over Q.
inline int dense_rank_q(std::vector<std::vector<Rat>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

// Dense rank over GF(2).
inline int dense_rank_f2(std::vector<std::vector<int>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] % 2 == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % 2 == 0) continue;
            for (size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + m[r][j]) % 2;
        }
        ++rank;
        ++r;
    }
    return rank;
}

// Naive simplicial homology: boundary matrices assembled from scratch.
inline std::vector<long long> betti(const SimplicialComplex& k, strata::Field field) {
    int top = k.dim();
    if (top < 0) return {};
    std::vector<std::vector<std::vector<int>>> simps(static_cast<size_t>(top + 1));
    std::map<std::vector<int>, int> pos;
    for (const auto& s : k.simplices()) {
        pos[s] = static_cast<int>(simps[s.size() - 1].size());
        simps[s.size() - 1].push_back(s);
    }
    std::vector<int> ranks(static_cast<size_t>(top + 2), 0);
    for (int d = 1; d <= top; ++d) {
        size_t nrows = simps[static_cast<size_t>(d - 1)].size();
        size_t ncols = simps[static_cast<size_t>(d)].size();
        std::vector<std::vector<Rat>> mq(nrows, std::vector<Rat>(ncols, Rat(0)));
        std::vector<std::vector<int>> m2(nrows, std::vector<int>(ncols, 0));
        for (size_t c = 0; c < ncols; ++c) {
            const auto& s = simps[static_cast<size_t>(d)][c];
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> f;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) f.push_back(s[i]);
                size_t rr = static_cast<size_t>(pos.at(f));
                mq[rr][c] = Rat(sign);
                m2[rr][c] = 1;
                sign = -sign;
            }
        }
        ranks[static_cast<size_t>(d)] =
            field == strata::Field::Q ? dense_rank_q(mq) : dense_rank_f2(m2);
    }
    std::vector<long long> out(static_cast<size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        out[static_cast<size_t>(d)] = static_cast<long long>(simps[static_cast<size_t>(d)].size()) -
                                      ranks[static_cast<size_t>(d)] -
                                      ranks[static_cast<size_t>(d + 1)];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Exhaustive permutation-search poset isomorphism (inputs up to ~8 elements).
inline bool poset_isomorphic_bruteforce(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    std::vector<int> perm(static_cast<size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < p.size() && ok; ++a)
            for (int b = 0; b < p.size() && ok; ++b)
                if (p.leq(a, b) != q.leq(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All labeled strict partial orders on n elements ("0".."n-1"), via bitmask
// enumeration of irreflexive relations.
inline std::vector<Poset> all_posets(int n) {
    std::vector<Poset> out;
    std::vector<Id> elems;
    for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
    if (n == 0) {
        out.push_back(Poset::from_relations({}, {}));
        return out;
    }
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) slots.emplace_back(i, j);
    for (size_t mask = 0; mask < (size_t{1} << slots.size()); ++mask) {
        std::vector<std::vector<char>> lt(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
        for (size_t s = 0; s < slots.size(); ++s)
            if (mask & (size_t{1} << s)) lt[static_cast<size_t>(slots[s].first)][static_cast<size_t>(slots[s].second)] = 1;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (lt[static_cast<size_t>(i)][static_cast<size_t>(j)] && lt[static_cast<size_t>(j)][static_cast<size_t>(i)]) ok = false;
                if (!ok) break;
                for (int kk = 0; kk < n && ok; ++kk)
                    if (lt[static_cast<size_t>(i)][static_cast<size_t>(j)] && lt[static_cast<size_t>(j)][static_cast<size_t>(kk)] &&
                        !lt[static_cast<size_t>(i)][static_cast<size_t>(kk)])
                        ok = false;
            }
        if (!ok) continue;
        std::vector<std::pair<Id, Id>> rel;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (lt[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    rel.emplace_back(std::to_string(i), std::to_string(j));
        out.push_back(Poset::from_relations(elems, rel));
    }
    return out;
}

}  // namespace oracle

#endif
