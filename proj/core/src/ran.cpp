#include "strata/ran.hpp"

#include <algorithm>
#include <map>

namespace strata {

namespace {

// Partitions as block lists via restricted-growth strings.
std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    auto emit = [&] {
        int blocks = 0;
        for (int g : rgs) blocks = std::max(blocks, g + 1);
        std::vector<std::vector<int>> part(static_cast<size_t>(blocks));
        for (int i = 0; i < n; ++i) part[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i);
        out.push_back(std::move(part));
    };
    auto rec = [&](auto&& self, int i, int maxg) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int g = 0; g <= maxg + 1; ++g) {
            rgs[static_cast<size_t>(i)] = g;
            self(self, i + 1, std::max(maxg, g));
        }
    };
    if (n == 0) return out;
    rec(rec, 1, 0);  // element 0 always in block 0
    return out;
}

Id partition_label(const std::vector<std::vector<int>>& blocks, const std::vector<Id>& ground) {
    std::vector<std::vector<Id>> named;
    for (const auto& b : blocks) {
        std::vector<Id> nb;
        for (int i : b) nb.push_back(ground[static_cast<size_t>(i)]);
        std::sort(nb.begin(), nb.end());
        named.push_back(std::move(nb));
    }
    std::sort(named.begin(), named.end());
    Id out = "{";
    for (size_t b = 0; b < named.size(); ++b) {
        if (b) out += "|";
        for (size_t i = 0; i < named[b].size(); ++i) {
            if (i) out += ",";
            out += named[b][i];
        }
    }
    return out + "}";
}

// block index per ground element
std::vector<int> block_of(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> out(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int i : blocks[b]) out[static_cast<size_t>(i)] = static_cast<int>(b);
    return out;
}

// P refines Q: every block of P is contained in a block of Q; equivalently
// the relation of P is a subset of the relation of Q.
bool refines(const std::vector<int>& block_p, const std::vector<int>& block_q, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (block_p[static_cast<size_t>(i)] == block_p[static_cast<size_t>(j)] &&
                block_q[static_cast<size_t>(i)] != block_q[static_cast<size_t>(j)])
                return false;
    return true;
}

}  // namespace

Poset partitions_poset(const std::vector<Id>& ground) {
    if (ground.empty()) throw ValidationError("partitions_poset: ground set must be nonempty");
    int n = static_cast<int>(ground.size());
    auto parts = all_partitions(n);
    std::vector<Id> elems;
    std::vector<std::vector<int>> blocks;
    for (const auto& p : parts) {
        elems.push_back(partition_label(p, ground));
        blocks.push_back(block_of(p, n));
    }
    std::vector<std::pair<Id, Id>> rel;
    // p <= p' iff the relation of p' is contained in the relation of p,
    // i.e. p' refines p.
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = 0; b < parts.size(); ++b)
            if (refines(blocks[b], blocks[a], n)) rel.emplace_back(elems[a], elems[b]);
    return Poset::from_relations(elems, rel);
}

WreathPoset wreath_poset(const std::vector<Id>& ground, const Poset& p) {
    if (ground.empty()) throw ValidationError("wreath_poset: ground set must be nonempty");
    int n = static_cast<int>(ground.size());
    auto parts = all_partitions(n);
    WreathPoset out;
    out.partitions = partitions_poset(ground);
    out.power = [&] {
        Poset acc = p;
        for (int i = 1; i < n; ++i) acc = product(acc, p);
        return acc;
    }();

    struct Elem {
        size_t part;                // index into parts
        std::vector<int> label;     // stratum per block
        std::vector<int> by_member; // stratum per ground element
        Id id;
    };
    std::vector<Elem> elems;
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& blocks = parts[pi];
        std::vector<int> label(blocks.size(), 0);
        auto rec = [&](auto&& self, size_t b) -> void {
            if (b == blocks.size()) {
                Elem e;
                e.part = pi;
                e.label = label;
                e.by_member.resize(static_cast<size_t>(n));
                for (size_t bb = 0; bb < blocks.size(); ++bb)
                    for (int i : blocks[bb]) e.by_member[static_cast<size_t>(i)] = label[bb];
                // id: "(partition;block->stratum,...)" with blocks sorted by
                // their smallest member for reproducibility
                std::vector<std::pair<std::vector<Id>, Id>> tagged;
                for (size_t bb = 0; bb < blocks.size(); ++bb) {
                    std::vector<Id> nb;
                    for (int i : blocks[bb]) nb.push_back(ground[static_cast<size_t>(i)]);
                    std::sort(nb.begin(), nb.end());
                    tagged.emplace_back(nb, p.id_of(label[bb]));
                }
                std::sort(tagged.begin(), tagged.end());
                Id id = "(";
                for (size_t t = 0; t < tagged.size(); ++t) {
                    if (t) id += "|";
                    for (size_t i = 0; i < tagged[t].first.size(); ++i) {
                        if (i) id += ",";
                        id += tagged[t].first[i];
                    }
                    id += "->" + tagged[t].second;
                }
                e.id = id + ")";
                elems.push_back(std::move(e));
                return;
            }
            for (int s = 0; s < p.size(); ++s) {
                label[b] = s;
                self(self, b + 1);
            }
        };
        if (p.size() > 0) rec(rec, 0);
    }
    std::vector<Id> ids;
    for (const auto& e : elems) ids.push_back(e.id);
    std::vector<std::pair<Id, Id>> rel;
    std::vector<std::vector<int>> blocks_by_part;
    for (const auto& pp : parts) blocks_by_part.push_back(block_of(pp, n));
    for (const auto& a : elems)
        for (const auto& b : elems) {
            // (P,c) <= (P',c') iff P' refines P and c(block of i in P) <=
            // c'(block of i in P') for every ground element i.
            if (!refines(blocks_by_part[b.part], blocks_by_part[a.part], n)) continue;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (!p.leq(a.by_member[static_cast<size_t>(i)], b.by_member[static_cast<size_t>(i)]))
                    ok = false;
            if (ok) rel.emplace_back(a.id, b.id);
        }
    out.poset = Poset::from_relations(ids, rel);
    out.to_partitions.resize(elems.size());
    out.to_power.resize(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        out.to_partitions[i] =
            out.partitions.index_of(partition_label(parts[elems[i].part], ground));
        // power poset id: nested pairs built left to right
        Id pid = p.id_of(elems[i].by_member[0]);
        for (int j = 1; j < n; ++j)
            pid = pair_id(pid, p.id_of(elems[i].by_member[static_cast<size_t>(j)]));
        out.to_power[i] = out.power.index_of(pid);
        if (out.to_partitions[i] < 0 || out.to_power[i] < 0)
            throw InternalError("wreath_poset: projection target missing");
    }
    return out;
}

RanRelation ran_poset(const Poset& p, int max_points) {
    if (max_points < 1) throw ValidationError("ran_poset: max_points must be >= 1");
    RanRelation out;
    int n = p.size();
    std::vector<int> counts(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == n) {
            int total = 0;
            for (int c : counts) total += c;
            if (total >= 1) out.points.push_back(counts);
            return;
        }
        for (int c = 0; c <= budget; ++c) {
            counts[static_cast<size_t>(i)] = c;
            self(self, i + 1, budget - c);
        }
        counts[static_cast<size_t>(i)] = 0;
    };
    if (n > 0) rec(rec, 0, max_points);
    // deterministic order
    std::sort(out.points.begin(), out.points.end());
    for (const auto& c : out.points) {
        Id id = "[";
        for (int i = 0; i < n; ++i) {
            if (i) id += ",";
            id += p.id_of(i) + ":" + std::to_string(c[static_cast<size_t>(i)]);
        }
        out.labels.push_back(id + "]");
    }
    std::vector<char> is_max(static_cast<size_t>(n), 0);
    for (int m : p.maximal_elements()) is_max[static_cast<size_t>(m)] = 1;
    size_t m = out.points.size();
    out.leq.assign(m, std::vector<unsigned char>(m, 0));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (out.points[a][static_cast<size_t>(i)] > out.points[b][static_cast<size_t>(i)] &&
                    is_max[static_cast<size_t>(i)])
                    ok = false;
            out.leq[a][b] = ok ? 1 : 0;
        }
    // attach the validation verdict of the stated relation
    if (m > 0) {
        std::vector<std::pair<Id, Id>> rel;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b)
                if (out.leq[a][b]) rel.emplace_back(out.labels[a], out.labels[b]);
        Poset as_stated = Poset::from_relations(out.labels, rel);
        out.verdict = validate_poset(as_stated);
    }
    return out;
}

Poset RanRelation::as_poset() const {
    if (!verdict.ok()) throw ValidationError("ran relation is not a poset for this input");
    std::vector<std::pair<Id, Id>> rel;
    for (size_t a = 0; a < leq.size(); ++a)
        for (size_t b = 0; b < leq.size(); ++b)
            if (leq[a][b]) rel.emplace_back(labels[a], labels[b]);
    return Poset::from_relations(labels, rel);
}

}  // namespace strata
