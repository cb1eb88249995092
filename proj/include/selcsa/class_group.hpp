#pragma once

#include <vector>

#include "selcsa/base_field.hpp"
#include "selcsa/forms.hpp"

namespace selcsa {

// An ideal class of k, canonically represented by its reduced form.
// Over Q the unique class carries the marker form (1, 0, 0).
struct IdealClass {
    QuadForm form;
    bool operator==(const IdealClass& o) const { return form == o.form; }
    bool operator!=(const IdealClass& o) const { return !(*this == o); }
    bool operator<(const IdealClass& o) const { return form < o.form; }
};

// The ideal class group Cl(k), fully enumerated with a composition table.
class ClassGroup {
public:
    static ClassGroup compute(const BaseField& k);

    const BaseField& field() const { return field_; }
    int order() const { return (int)elements_.size(); }
    const std::vector<IdealClass>& elements() const { return elements_; }
    const IdealClass& element(int i) const { return elements_[(size_t)i]; }

    int identity() const { return identity_; }
    int index_of(const IdealClass& c) const;  // throws if not reduced/member
    int compose(int i, int j) const { return table_[(size_t)i][(size_t)j]; }
    int inverse(int i) const { return inverse_[(size_t)i]; }
    int power(int i, i64 n) const;
    int element_order(int i) const;

    // Cyclic decomposition with d_1 | d_2 | ... and prod d_j = h.
    const std::vector<i64>& elementary_divisors() const { return elementary_divisors_; }
    const std::vector<int>& generator_indices() const { return generators_; }

private:
    BaseField field_ = BaseField::rationals();
    std::vector<IdealClass> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::vector<i64> elementary_divisors_;
    std::vector<int> generators_;

    void compute_structure();
};

// Subgroup of Cl(k), stored as the sorted list of member indices.
class Subgroup {
public:
    Subgroup(const ClassGroup& g, std::vector<int> members);

    static Subgroup trivial(const ClassGroup& g);
    static Subgroup full(const ClassGroup& g);
    static Subgroup generated(const ClassGroup& g, const std::vector<int>& gens);
    // {c^n : c in Cl}
    static Subgroup power_subgroup(const ClassGroup& g, i64 n);

    const ClassGroup& ambient() const { return *group_; }
    const std::vector<int>& members() const { return members_; }
    int order() const { return (int)members_.size(); }
    i64 index() const { return group_->order() / order(); }
    bool contains(int i) const;

    Subgroup join(const Subgroup& other) const;
    // Coset representatives of Cl / this, each the lex-smallest member of
    // its coset (deterministic enumeration order).
    std::vector<int> coset_representatives() const;
    // Lex-smallest member of the coset i * this.
    int coset_of(int i) const;

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }

private:
    const ClassGroup* group_;
    std::vector<int> members_;
};

// The reduced form attached to the Z-basis [p, -root + omega] of a prime
// ideal; identity for inert/rational primes.
IdealClass ideal_class(const BaseField& k, const ClassGroup& g, const PrimeIdeal& prime);

}  // namespace selcsa
