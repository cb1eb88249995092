#pragma once

// Brute-force class-number oracle: enumerate every integral ideal of norm
// up to ceil(sqrt(|D|)) (at least the Minkowski bound 2*sqrt(|D|)/pi, so
// every class is represented) and count equivalence classes directly,
// using I ~ J iff I * conj(J) is principal. Independent of the
// quadratic-form composition path.

#include <vector>

#include "selcsa/ideals.hpp"

namespace selcsa::testing {

inline std::vector<ZIdeal> ideals_of_norm_up_to(const BaseField& k, i64 bound) {
    i64 t = k.omega_trace(), nw = k.omega_norm();
    std::vector<ZIdeal> out;
    for (i64 m = 1; m <= bound; ++m)
        for (i64 c = 1; c * c <= m; ++c) {
            if (m % (c * c)) continue;
            i64 a = m / (c * c);
            for (i64 b = 0; b < a; ++b)
                if ((b * b + t * b + nw) % a == 0) out.push_back(ZIdeal{c, a, b});
        }
    return out;
}

inline bool ideals_equivalent(const BaseField& k, const ZIdeal& I, const ZIdeal& J) {
    return principal_generator(k, ideal_mul(k, I, ideal_conj(k, J))).has_value();
}

inline int brute_force_class_number(const BaseField& k) {
    i64 D = -k.discriminant();
    i64 bound = isqrt_i64(D);
    if (bound * bound < D) ++bound;
    auto ideals = ideals_of_norm_up_to(k, bound);
    std::vector<ZIdeal> reps;
    for (const auto& I : ideals) {
        bool found = false;
        for (const auto& R : reps)
            if (ideals_equivalent(k, I, R)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(I);
    }
    return (int)reps.size();
}

}  // namespace selcsa::testing
