#ifndef STRATA_HOMOLOGY_HPP
#define STRATA_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

#include "strata/complex.hpp"

namespace strata {

using Rat = boost::multiprecision::cpp_rational;

enum class Field { Q, F2 };

const char* field_name(Field f);

/**
 * Betti numbers over an exact field.  `euler` is cross-checked against the
 * alternating simplex count at computation time; a mismatch throws
 * InternalError.  All arithmetic is exact; no floating point.
 */
struct HomologyProfile {
    Field field = Field::Q;
    std::vector<long long> betti;
    long long euler = 0;

    bool operator==(const HomologyProfile& o) const {
        return field == o.field && betti == o.betti && euler == o.euler;
    }
};

HomologyProfile homology(const SimplicialComplex& k, Field field);

/// Betti numbers of the full subcomplex of `ambient` spanned by
/// `vertex_subset`, computed without materializing the subcomplex.
std::vector<long long> betti_full_subcomplex(const SimplicialComplex& ambient,
                                             const std::vector<int>& vertex_subset, Field field);

/// One degree of the Mayer-Vietoris ledger for a cover X = A u B by full
/// subcomplexes.  `rank_restriction` is the rank of
/// H_n(A n B) -> H_n(A) + H_n(B); `chain_level` records whether it was
/// computed from chain bases or solved from the exact-sequence rank
/// relations.
struct MVRow {
    int degree = 0;
    long long b_inter = 0, b_a = 0, b_b = 0, b_x = 0;
    long long rank_restriction = 0;
    long long rank_connecting = 0;  // H_n(X) -> H_{n-1}(A n B)
    bool chain_level = false;
};

struct MVLedger {
    std::vector<MVRow> rows;
    bool exact = false;       // all rank relations consistent
    std::string failure;      // first violated relation, when not exact
};

/**
 * Rank ledger of the Mayer-Vietoris sequence for the cover of `ambient` by
 * the full subcomplexes on `verts_a` and `verts_b`.  Requires the cover to
 * be exact (every simplex lies in one side); throws otherwise.  Restriction
 * ranks are computed from cycle/boundary bases when the chain spaces in a
 * degree have at most `chain_cap` columns, and solved from the rank
 * relations above that size.
 */
MVLedger mayer_vietoris_ledger(const SimplicialComplex& ambient, const std::vector<int>& verts_a,
                               const std::vector<int>& verts_b, Field field, int chain_cap = 2000,
                               const std::vector<long long>* betti_ambient = nullptr);

// --- exact dense linear algebra over Q (small systems: sheaves, sections) ---

using QMatrix = std::vector<std::vector<Rat>>;  // row-major

QMatrix q_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
int q_rank(QMatrix m);
bool q_invertible(const QMatrix& m);
/// Basis of the null space as matrix columns; empty matrix has shape 0 x 0.
QMatrix q_nullspace(const QMatrix& m);

}  // namespace strata

#endif
