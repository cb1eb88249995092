#pragma once

#include <string>
#include <vector>

#include "selcsa/class_field.hpp"
#include "selcsa/ideals.hpp"

namespace selcsa {

// Element of k = Q(sqrt(D)) as a + b*omega with rational a, b.
struct KElem {
    Frac a;
    Frac b;
    bool operator==(const KElem& o) const { return a == o.a && b == o.b; }
};

KElem kadd(const KElem& x, const KElem& y);
KElem ksub(const KElem& x, const KElem& y);
KElem kmul(const BaseField& k, const KElem& x, const KElem& y);

// Fractional ideal (1/den) * num.
struct FracIdeal {
    ZIdeal num;
    i64 den = 1;
};

// Rank-n module sum_i a_i * v_i inside k^n: coefficient ideals a_i and
// basis rows v_i (over k). The module itself, not the pseudo-basis, is
// the invariant object.
struct PseudoLattice {
    std::vector<FracIdeal> coefficient_ideals;
    std::vector<std::vector<KElem>> basis;  // basis[i] = v_i

    int rank() const { return (int)coefficient_ideals.size(); }
};

PseudoLattice free_lattice(const BaseField& k, int n);

// Canonical form: the Hermite basis of the underlying rank-2n Z-lattice
// in the 2n rational coordinates of k^n. Two pseudo-lattices are the same
// module iff their canonical forms agree. Throws on singular basis.
std::vector<std::vector<Frac>> canonical_lattice_basis(const BaseField& k,
                                                       const PseudoLattice& lat);

bool lattice_equal(const BaseField& k, const PseudoLattice& x, const PseudoLattice& y);

// Ideal class of a (fractional) ideal of o_k.
IdealClass ideal_class_of(const ClassGroup& g, const ZIdeal& I);

struct SteinitzClass {
    IdealClass cls;
    bool operator==(const SteinitzClass& o) const { return cls == o.cls; }
};

// Class of the product of coefficient ideals; classifies the module up to
// o_k-isomorphism. Invariant under pseudo-basis change.
SteinitzClass steinitz_class(const ClassGroup& g, const PseudoLattice& lat);

// Representatives of Cl(k)/Cl(k)^n; each coset is one conjugacy class of
// maximal orders End(lattice) of the n x n matrix algebra over k.
std::vector<IdealClass> maximal_order_class_set(const ClassGroup& g, int n);

// The Cl/Cl^n cosets of Steinitz classes of rank-n lattices carrying a
// module structure over the ring of integers of K: the norm-subgroup
// translate of the module class of the ring of integers itself (computed
// exactly via maximal_order_index). Lex-minimal coset representatives,
// sorted; raises OracleUnavailableError only if the exact index
// computation would overflow.
std::vector<IdealClass> embeddable_steinitz_set(const RelativeExtension& ext, const ClassGroup& g,
                                                int n, i64 bound, std::uint64_t seed = 0);

struct CrossCheckResult {
    bool match = false;
    std::string orientation;  // "direct" or "inverse", whichever matched
};

// Compares the engine's embeddable set with the lattice oracle's set,
// accepting either orientation of the class-group identification (applied
// consistently to the whole set). Only meaningful for matrix algebras
// with all-maximal local types; anything else is out of the oracle's
// scope and raises an error.
CrossCheckResult cross_check(const OrderGenusSpec& spec, const ClassGroup& g,
                             const SelectivityReport& report,
                             const std::vector<IdealClass>& oracle_set);

}  // namespace selcsa
