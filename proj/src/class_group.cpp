#include "selcsa/class_group.hpp"

#include <algorithm>
#include <set>

#include "selcsa/errors.hpp"

namespace selcsa {

ClassGroup ClassGroup::compute(const BaseField& k) {
    ClassGroup g;
    g.field_ = k;
    if (k.is_rational()) {
        g.elements_ = {IdealClass{QuadForm{1, 0, 0}}};
        g.table_ = {{0}};
        g.inverse_ = {0};
        g.identity_ = 0;
        g.elementary_divisors_ = {};
        g.generators_ = {};
        return g;
    }
    i64 D = k.discriminant();
    auto forms = reduced_forms(D);
    g.elements_.reserve(forms.size());
    for (auto& f : forms) g.elements_.push_back(IdealClass{f});

    int h = (int)forms.size();
    g.table_.assign((size_t)h, std::vector<int>((size_t)h, -1));
    auto find = [&](const QuadForm& f) {
        auto it = std::lower_bound(forms.begin(), forms.end(), f);
        if (it == forms.end() || *it != f)
            throw std::logic_error("composition left the enumerated class list");
        return (int)(it - forms.begin());
    };
    QuadForm one = principal_form(D);
    g.identity_ = find(one);
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            int r = find(compose_forms(forms[(size_t)i], forms[(size_t)j]));
            g.table_[(size_t)i][(size_t)j] = r;
            g.table_[(size_t)j][(size_t)i] = r;
        }
    g.inverse_.resize((size_t)h);
    for (int i = 0; i < h; ++i) g.inverse_[(size_t)i] = find(inverse_form(forms[(size_t)i]));
    g.compute_structure();
    return g;
}

int ClassGroup::index_of(const IdealClass& c) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
    if (it == elements_.end() || *it != c)
        throw ValidationError("not a reduced class of this group: " + c.form.str());
    return (int)(it - elements_.begin());
}

int ClassGroup::power(int i, i64 n) const {
    n = mod_floor(n, order());  // x^h = identity
    int acc = identity_;
    int base = i;
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

int ClassGroup::element_order(int i) const {
    int ord = 1;
    int x = i;
    while (x != identity_) {
        x = compose(x, i);
        ++ord;
    }
    return ord;
}

void ClassGroup::compute_structure() {
    // Peel off cyclic factors from the largest order downward.
    elementary_divisors_.clear();
    generators_.clear();
    int h = order();
    if (h == 1) return;
    // subgroup generated so far
    std::set<int> span = {identity_};
    std::vector<std::pair<i64, int>> picked;  // (order in quotient, generator)
    while ((int)span.size() < h) {
        // element whose coset in Cl/<span> has maximal order
        int best = -1;
        i64 best_ord = 0;
        for (int i = 0; i < h; ++i) {
            if (span.count(i)) continue;
            i64 ord = 1;
            int x = i;
            while (!span.count(x)) {
                x = compose(x, i);
                ++ord;
            }
            if (ord > best_ord || (ord == best_ord && best == -1)) {
                best_ord = ord;
                best = i;
            }
        }
        picked.emplace_back(best_ord, best);
        // enlarge span
        std::set<int> next;
        for (int s : span) {
            int x = s;
            for (i64 j = 0; j < best_ord; ++j) {
                next.insert(x);
                x = compose(x, best);
            }
        }
        span = std::move(next);
    }
    // picked orders descend; store divisors ascending d1 | d2 | ...
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
        elementary_divisors_.push_back(it->first);
        generators_.push_back(it->second);
    }
}

Subgroup::Subgroup(const ClassGroup& g, std::vector<int> members) : group_(&g), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Subgroup Subgroup::trivial(const ClassGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::full(const ClassGroup& g) {
    std::vector<int> all((size_t)g.order());
    for (int i = 0; i < g.order(); ++i) all[(size_t)i] = i;
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated(const ClassGroup& g, const std::vector<int>& gens) {
    std::set<int> closure = {g.identity()};
    std::vector<int> frontier = {g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gen : gens) {
                int y = g.compose(x, gen);
                if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return Subgroup(g, std::vector<int>(closure.begin(), closure.end()));
}

Subgroup Subgroup::power_subgroup(const ClassGroup& g, i64 n) {
    if (n < 1) throw ValidationError("power_subgroup: exponent must be >= 1");
    std::vector<int> members;
    for (int i = 0; i < g.order(); ++i) members.push_back(g.power(i, n));
    return Subgroup(g, std::move(members));
}

bool Subgroup::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

Subgroup Subgroup::join(const Subgroup& other) const {
    if (group_ != other.group_)
        throw ValidationError("subgroup join: ambient groups differ");
    std::vector<int> gens = members_;
    gens.insert(gens.end(), other.members_.begin(), other.members_.end());
    return generated(*group_, gens);
}

std::vector<int> Subgroup::coset_representatives() const {
    std::vector<int> reps;
    std::vector<bool> seen((size_t)group_->order(), false);
    for (int i = 0; i < group_->order(); ++i) {
        if (seen[(size_t)i]) continue;
        reps.push_back(i);  // elements are lex-sorted, so i is lex-minimal
        for (int m : members_) seen[(size_t)group_->compose(i, m)] = true;
    }
    return reps;
}

int Subgroup::coset_of(int i) const {
    int best = -1;
    for (int m : members_) {
        int x = group_->compose(i, m);
        if (best == -1 || x < best) best = x;
    }
    return best;
}

IdealClass ideal_class(const BaseField& k, const ClassGroup& g, const PrimeIdeal& prime) {
    if (k.is_rational() || prime.type == SplitType::Inert || prime.type == SplitType::Rational)
        return g.element(g.identity());
    // ideal [p, b + omega] with b = -root gives the form
    // (p, 2b + t, (b^2 + t b + nw)/p)
    i64 t = k.omega_trace(), nw = k.omega_norm();
    i64 b = -prime.root;
    i64 num = b * b + t * b + nw;
    if (num % prime.p) throw ValidationError("prime ideal does not lie over " + k.str());
    QuadForm f{prime.p, 2 * b + t, num / prime.p};
    return IdealClass{reduce_form(f)};
}

}  // namespace selcsa
