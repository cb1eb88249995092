#pragma once

#include <vector>

#include "selcsa/rel_ext.hpp"

namespace selcsa {

// A central simple algebra of degree n over k, given by its local Hasse
// invariants. Unlisted finite places carry invariant 0 (matrix algebra).
// real_invariant is meaningful only over Q (imaginary quadratic fields
// have no real place) and must be 0 or 1/2.
struct AlgebraSpec {
    BaseField field = BaseField::rationals();
    int n = 3;
    std::vector<std::pair<PrimeIdeal, Frac>> finite_invariants;
    Frac real_invariant = Frac(0);

    bool is_matrix_algebra() const;
};

// Checks reciprocity (invariant sum integral), denominators dividing n,
// distinct primes, invariants reduced into [0, 1), and the real-place
// rules. Throws ValidationError naming the offending datum.
void validate_algebra(const AlgebraSpec& spec);

// Local structure A (x) k_v = M_{m_v}(D_v) with deg D_v = d_v, d_v*m_v = n.
struct LocalIndexDatum {
    PrimeIdeal prime;
    int d_v = 1;
    int m_v = 1;
};

LocalIndexDatum local_index(const AlgebraSpec& spec, const PrimeIdeal& prime);

// K (x) k_v embeds into A (x) k_v iff d_v divides every local degree e*f
// of K above the prime. Requires certified splitting data.
bool local_embeddable(const AlgebraSpec& spec, const RelativeExtension& ext,
                      const PrimeIdeal& prime, std::uint64_t seed = 0);

// K embeds into A iff embeddable at every place; only primes with d_v > 1
// and (over Q) a ramified real place can obstruct.
bool global_embeddable(const AlgebraSpec& spec, const RelativeExtension& ext,
                       std::uint64_t seed = 0);

// Number of real roots of the minimal polynomial (Sturm chain); used for
// the real-place condition over Q.
int count_real_roots(const std::vector<QuadInt>& poly);

}  // namespace selcsa
