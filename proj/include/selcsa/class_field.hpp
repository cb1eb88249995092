#pragma once

#include <string>
#include <vector>

#include "selcsa/csa.hpp"

namespace selcsa {

// Local shape of the order at a prime: conjugation-stabilizer norm groups
//   MaximalSplit     o_v^x (k_v^x)^{m_v}  (maximal order, m_v = n/d_v)
//   MaximalDivision  k_v^x                (maximal order where d_v = n)
//   Custom           full units, valuations = 0 mod g (g | n)
enum class LocalTypeKind { MaximalSplit, MaximalDivision, Custom };

struct LocalType {
    LocalTypeKind kind = LocalTypeKind::MaximalSplit;
    int custom_exponent = 1;  // only read for Custom
};

// A genus of orders in the algebra; unlisted primes default to
// MaximalSplit, so an empty list describes the maximal orders.
struct OrderGenusSpec {
    AlgebraSpec algebra;
    std::vector<std::pair<PrimeIdeal, LocalType>> local_types;
};

void validate_genus(const OrderGenusSpec& spec);

// Class-group image S of the norms of the adelic stabilizer of the genus:
// generated by Cl^n together with ideal_class(p)^{exponent} over the
// effective listed primes. Cl/S is the Galois group of the class field of
// the genus.
struct StabilizerSubgroup {
    Subgroup subgroup;
    std::vector<std::pair<PrimeIdeal, i64>> derivation;  // (prime, exponent used)
};

StabilizerSubgroup stabilizer_subgroup(const OrderGenusSpec& spec, const ClassGroup& g);

// [Cl : S] = number of conjugacy classes in the genus.
i64 genus_class_count(const OrderGenusSpec& spec, const ClassGroup& g);

// [Cl : N*S] = degree over k of the intersection of K with the class
// field of the genus.
i64 selectivity_degree(const OrderGenusSpec& spec, const ClassGroup& g, const NormSubgroup& norm);

// Whether the order class indexed by c admits the embedding: the image of
// c in Cl/S must lie in (N*S)/S. Assumes the global obstruction vanishes.
bool decide_class(const OrderGenusSpec& spec, const ClassGroup& g, const NormSubgroup& norm,
                  const IdealClass& c);

enum class Exactness { Exact, LowerBound };

struct SelectivityReport {
    i64 genus_class_count = 1;
    i64 class_field_degree = 1;
    i64 selectivity_degree = 1;
    i64 embeddable_class_count = 1;
    Frac ratio = Frac(1);
    Exactness exactness = Exactness::Exact;
    bool globally_embeddable = true;
    // lex-minimal representatives of the embeddable cosets of S
    std::vector<IdealClass> embeddable_classes;
    std::vector<std::string> diagnostics;
};

SelectivityReport selectivity_report(const OrderGenusSpec& spec, const ClassGroup& g,
                                     const RelativeExtension& ext, const NormSubgroup& norm,
                                     std::uint64_t seed = 0);

// Convenience wrapper that samples the norm subgroup itself.
SelectivityReport selectivity_report(const OrderGenusSpec& spec, const ClassGroup& g,
                                     const RelativeExtension& ext, i64 bound,
                                     std::uint64_t seed = 0);

}  // namespace selcsa
