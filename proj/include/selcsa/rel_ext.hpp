#pragma once

#include <cstdint>
#include <vector>

#include "selcsa/class_group.hpp"
#include "selcsa/residue.hpp"

namespace selcsa {

// K = k[x]/(f), f monic of degree n >= 3 with coefficients in o_k.
// Coefficient of x^i at index i; min_poly.back() == 1.
class RelativeExtension {
public:
    // Validates monicity, n >= 3 and irreducibility over k. Irreducibility
    // is decided exactly for n <= 5 (root search plus quadratic-factor
    // search over divisors of the constant term); for larger n a
    // factorization-pattern sieve over sampled primes is used and an
    // inconclusive sieve is a validation error rather than a guess.
    static RelativeExtension create(const BaseField& base, std::vector<QuadInt> min_poly);

    const BaseField& base() const { return base_; }
    const std::vector<QuadInt>& min_poly() const { return min_poly_; }
    int degree() const { return (int)min_poly_.size() - 1; }

    // disc(f) = (-1)^{n(n-1)/2} Res(f, f'), an element of o_k.
    QuadInt poly_discriminant() const;

private:
    RelativeExtension(BaseField base, std::vector<QuadInt> poly)
        : base_(base), min_poly_(std::move(poly)) {}
    BaseField base_;
    std::vector<QuadInt> min_poly_;
};

// Shape of f mod a prime of k: one (e, f) pair per irreducible factor.
// certified means the Dedekind criterion guarantees o_k[x]/(f) is maximal
// at this prime, so the pairs are the true ramification/residue data of
// the primes of K above it.
struct SplittingDatum {
    PrimeIdeal prime;
    std::vector<std::pair<int, int>> factors;  // (e_v, f_v), sum e*f = n
    bool certified = false;
};

SplittingDatum splitting_type(const RelativeExtension& ext, const PrimeIdeal& prime,
                              std::uint64_t seed = 0);

// Primes of k dividing disc(f) where the Dedekind criterion does not
// certify maximality; empty result means o_k[x]/(f) is the full ring of
// integers of K.
std::vector<PrimeIdeal> maximality_check(const RelativeExtension& ext, std::uint64_t seed = 0);

// Class-group image of the ideal norms from K, sampled over primes of k
// of residue characteristic <= sampling_bound.
struct NormSubgroup {
    Subgroup subgroup;
    i64 sampling_bound;
    bool stabilized;                   // no growth over the last half of the range
    std::vector<PrimeIdeal> skipped;   // uncertified primes excluded from sampling
};

// Generated by ideal_class(p)^{e*f} over all certified sampled primes
// (f per unramified factor, e*f per ramified factor). Uncertified primes
// are skipped and recorded.
NormSubgroup norm_class_subgroup(const RelativeExtension& ext, const ClassGroup& g, i64 bound,
                                 std::uint64_t seed = 0);

// [Cl(k) : N] = degree over k of the part of K inside the Hilbert class
// field of k.
i64 intersection_degree_hilbert(const RelativeExtension& ext, const ClassGroup& g, i64 bound,
                                std::uint64_t seed = 0);

// Small helpers for polynomials over o_k (dense, index = exponent).
QuadInt poly_eval(const BaseField& k, const std::vector<QuadInt>& f, const QuadInt& x);
std::vector<QuadInt> poly_mul_k(const BaseField& k, const std::vector<QuadInt>& f,
                                const std::vector<QuadInt>& g);

}  // namespace selcsa
