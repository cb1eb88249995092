#pragma once

#include <cstdint>
#include <vector>

#include "selcsa/class_group.hpp"
#include "selcsa/rel_ext.hpp"

namespace selcsa {

// Valuation data for the module index [o_K : o_k[theta]] of the monogenic
// order inside the full ring of integers of K = k[x]/(f).
struct IndexDatum {
    PrimeIdeal prime;
    int valuation;  // v_p(index ideal) >= 1
};

// Computes the index ideal exactly at every prime where the Dedekind
// criterion left maximality open, by saturating the underlying Z-order at
// each rational prime below them (radical / multiplier-ring iteration) and
// reading off the per-prime valuations from the n-th exterior power of the
// resulting Z-basis. Only primes with a positive valuation are reported.
// Throws OracleUnavailableError if the exact arithmetic would overflow.
std::vector<IndexDatum> maximal_order_index(const RelativeExtension& ext, std::uint64_t seed = 0);

// Steinitz class of the ring of integers of K as an o_k-module: the class
// of the n-th exterior power of o_K, i.e. the inverse class of the index
// ideal of the monogenic order. Trivial whenever the monogenic order is
// maximal.
IdealClass ring_of_integers_class(const RelativeExtension& ext, const ClassGroup& g,
                                  std::uint64_t seed = 0);

}  // namespace selcsa
