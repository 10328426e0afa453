#ifndef STRATA_POSET_HPP
#define STRATA_POSET_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

using Id = std::string;

/// Raised when a construction receives inconsistent input (colliding
/// identifiers, unknown elements, bad arity).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal mathematical invariant fails.  The CLI maps this
/// to exit code 2; tests treat it as a hard failure.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * Finite poset over string identifiers.
 *
 * The relation is stored as a full boolean matrix, so `leq` queries are O(1).
 * Construction does not force the axioms; `validate_poset` reports every
 * violation with witnesses.  All values are immutable after construction.
 */
class Poset {
public:
    Poset() = default;

    /// Elements plus the relation pairs (x,y) meaning x <= y.  Reflexive
    /// pairs are implied and may be omitted.  Unknown ids throw.
    static Poset from_relations(std::vector<Id> elements,
                                const std::vector<std::pair<Id, Id>>& leq_pairs);

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    const std::vector<Id>& elements() const { return elems_; }
    const Id& id_of(int i) const { return elems_.at(static_cast<size_t>(i)); }

    /// Index of an element, or -1 if absent.
    int index_of(const Id& e) const;
    bool contains(const Id& e) const { return index_of(e) >= 0; }

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }
    bool leq(const Id& a, const Id& b) const;
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    /// Covering relation a <. b (no element strictly between).
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    bool is_downward_closed(const std::vector<int>& subset) const;
    bool is_upward_closed(const std::vector<int>& subset) const;

    /// Induced subposet; element order follows this poset's element order.
    Poset induced(const std::vector<int>& subset) const;

    /// Deterministic linear extension: repeatedly take the lexicographically
    /// smallest identifier among elements whose predecessors are all placed.
    std::vector<int> linear_extension() const;

    /// All nonempty chains (totally ordered subsets), each listed in
    /// increasing poset order.  Deterministic enumeration.
    std::vector<std::vector<int>> chains() const;

private:
    std::vector<Id> elems_;
    std::map<Id, int> idx_;
    std::vector<std::vector<std::uint8_t>> leq_;

    friend Poset product(const Poset&, const Poset&);
    friend Poset cone(const Poset&, const Id&);
    friend Poset join_poset(const Poset&, const Poset&);
    friend Poset pp_make(int);
};

struct PosetReport {
    std::vector<Id> missing_reflexive;
    std::vector<std::array<Id, 2>> antisymmetry;  // e <= f, f <= e, e != f
    std::vector<std::array<Id, 3>> transitivity;  // e <= f <= g but not e <= g
    bool ok() const {
        return missing_reflexive.empty() && antisymmetry.empty() && transitivity.empty();
    }
};

PosetReport validate_poset(const Poset& p);

/// Pairs (a,b) with componentwise order; ids "(a,b)".
Poset product(const Poset& p, const Poset& q);

/// Adjoins a new minimum below everything; throws on id collision.
Poset cone(const Poset& p, const Id& tip = "*");

/// Disjoint union of p ("L:..."), q ("R:...") and pairs "(a,b)"; a and b sit
/// below (a,b), pairs carry the product order, no relations between the two
/// sides otherwise.  Throws if the decorated ids collide.
Poset join_poset(const Poset& p, const Poset& q);

enum class Consecutive { consecutive, not_full, not_interval };

struct ConsecutiveResult {
    Consecutive verdict = Consecutive::consecutive;
    std::array<Id, 3> witness{};  // x <= y <= z with y missing, when not_interval
};

/// A subset (with its induced order) is consecutive when it is interval
/// closed: x,z in q and x <= y <= z forces y in q.  Induced subposets are
/// always full, so `not_full` is unreachable here; it is kept for report
/// compatibility.
ConsecutiveResult consecutive_check(const std::vector<Id>& q, const Poset& p);

/// The poset of (depth, dimension) pairs (k,n), -1 <= k <= n <= maxdim,
/// with (k,n) <= (k',n') iff k >= k' and n >= n'.  Ids "(k,n)".
Poset pp_make(int maxdim);

/// Backtracking isomorphism search with degree/level invariant pruning.
bool poset_isomorphic(const Poset& p, const Poset& q);

/// Label helpers shared by the derived constructions.
Id pair_id(const Id& a, const Id& b);

}  // namespace strata

#endif
