#pragma once

#include <cstdint>
#include <vector>

#include "selcsa/base_field.hpp"

namespace selcsa {

// The residue field o_k/p: F_p for degree-1 primes (and over Q), F_{p^2}
// for inert primes, where the class of omega is adjoined with minimal
// polynomial x^2 - t x + nw mod p.
class ResidueField {
public:
    // Element u + v*wbar (v = 0 identically when the field is F_p).
    struct Elem {
        i64 u = 0;
        i64 v = 0;
        bool operator==(const Elem& o) const { return u == o.u && v == o.v; }
        bool operator!=(const Elem& o) const { return !(*this == o); }
    };

    ResidueField(const BaseField& k, const PrimeIdeal& prime);

    i64 p() const { return p_; }
    i64 q() const { return quadratic_ ? p_ * p_ : p_; }
    bool quadratic() const { return quadratic_; }

    Elem zero() const { return {0, 0}; }
    Elem one() const { return {1 % p_, 0}; }
    Elem from_int(i64 n) const { return {mod_floor(n, p_), 0}; }
    bool is_zero(const Elem& x) const { return x.u == 0 && x.v == 0; }

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(Elem x, i64 e) const;

    // reduction o_k -> o_k/p and a fixed section back
    Elem reduce(const QuadInt& x) const;
    QuadInt lift(const Elem& x) const;

private:
    i64 p_ = 2;
    bool quadratic_ = false;
    i64 t_ = 0, nw_ = 0;       // wbar^2 = t*wbar - nw (inert case)
    i64 omega_image_ = 0;      // degree-1 case: omega = omega_image
    bool rational_base_ = false;
};

// Dense polynomial over a residue field, coefficient of x^i at index i.
struct FqPoly {
    std::vector<ResidueField::Elem> coeffs;

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
};

FqPoly fq_trim(FqPoly f);
FqPoly fq_add(const ResidueField& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_sub(const ResidueField& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_mul(const ResidueField& F, const FqPoly& f, const FqPoly& g);
FqPoly fq_mod(const ResidueField& F, FqPoly f, const FqPoly& g);
FqPoly fq_gcd(const ResidueField& F, FqPoly f, FqPoly g);  // monic gcd
FqPoly fq_monic(const ResidueField& F, FqPoly f);
FqPoly fq_derivative(const ResidueField& F, const FqPoly& f);
FqPoly fq_powmod(const ResidueField& F, FqPoly base, i64 e, const FqPoly& mod);
bool fq_eq(const FqPoly& f, const FqPoly& g);
FqPoly fq_one(const ResidueField& F);
FqPoly fq_x(const ResidueField& F);

// Full factorization of a nonzero polynomial into monic irreducible
// factors with multiplicities (squarefree + distinct-degree +
// Cantor-Zassenhaus equal-degree splitting, seeded for reproducibility).
std::vector<std::pair<FqPoly, int>> fq_factor(const ResidueField& F, const FqPoly& f,
                                              std::uint64_t seed = 0);

}  // namespace selcsa
