#include "selcsa/base_field.hpp"

#include "selcsa/errors.hpp"

namespace selcsa {

namespace {

bool squarefree(i64 n) {
    if (n < 0) n = -n;
    for (auto& [p, e] : factorize(n)) {
        (void)p;
        if (e >= 2) return false;
    }
    return true;
}

}  // namespace

BaseField BaseField::rationals() { return BaseField(0); }

BaseField BaseField::imaginary_quadratic(i64 D) {
    if (D >= 0) throw ValidationError("discriminant must be negative (got " + std::to_string(D) + ")");
    i64 r = mod_floor(D, 4);
    if (r != 0 && r != 1) throw ValidationError("discriminant must be 0 or 1 mod 4 (got " + std::to_string(D) + ")");
    if (r == 1) {
        if (!squarefree(D)) throw ValidationError("discriminant not fundamental: " + std::to_string(D) + " is not squarefree");
    } else {
        i64 m = D / 4;
        i64 mr = mod_floor(m, 4);
        if (!squarefree(m) || (mr != 2 && mr != 3))
            throw ValidationError("discriminant not fundamental: " + std::to_string(D) +
                                  "/4 must be squarefree and 2,3 mod 4");
    }
    return BaseField(D);
}

BaseField BaseField::from_discriminant(i64 D) {
    return D == 0 ? rationals() : imaginary_quadratic(D);
}

i64 BaseField::omega_trace() const {
    if (disc_ == 0) return 0;
    return mod_floor(disc_, 4) == 1 ? 1 : 0;
}

i64 BaseField::omega_norm() const {
    if (disc_ == 0) return 0;
    return mod_floor(disc_, 4) == 1 ? (1 - disc_) / 4 : -disc_ / 4;
}

std::string BaseField::str() const {
    if (disc_ == 0) return "Q";
    return "Q(sqrt(" + std::to_string(disc_) + "))";
}

QuadInt qadd(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
QuadInt qsub(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
QuadInt qneg(const QuadInt& x) { return {-x.a, -x.b}; }

QuadInt qmul(const BaseField& k, const QuadInt& x, const QuadInt& y) {
    // omega^2 = t*omega - nw
    i64 t = k.omega_trace(), nw = k.omega_norm();
    return {x.a * y.a - nw * x.b * y.b, x.a * y.b + x.b * y.a + t * x.b * y.b};
}

QuadInt qconj(const BaseField& k, const QuadInt& x) {
    // conj(omega) = t - omega
    return {x.a + k.omega_trace() * x.b, -x.b};
}

i64 qnorm(const BaseField& k, const QuadInt& x) {
    i64 t = k.omega_trace(), nw = k.omega_norm();
    return x.a * x.a + t * x.a * x.b + nw * x.b * x.b;
}

std::string qstr(const QuadInt& x) {
    if (x.b == 0) return std::to_string(x.a);
    return std::to_string(x.a) + (x.b >= 0 ? "+" : "") + std::to_string(x.b) + "w";
}

i64 PrimeIdeal::norm() const {
    i64 n = p;
    for (int i = 1; i < f; ++i) n *= p;
    return n;
}

std::string PrimeIdeal::str() const {
    switch (type) {
        case SplitType::Rational: return "(" + std::to_string(p) + ")";
        case SplitType::Inert: return "(" + std::to_string(p) + ") inert";
        case SplitType::Split: return "(" + std::to_string(p) + ", w-" + std::to_string(root) + ")";
        case SplitType::Ramified: return "(" + std::to_string(p) + ", w-" + std::to_string(root) + ") ramified";
    }
    return "?";
}

std::vector<PrimeIdeal> prime_ideals_above(const BaseField& k, i64 p) {
    if (!is_prime_i64(p)) throw ValidationError("not a rational prime: " + std::to_string(p));
    if (k.is_rational()) return {PrimeIdeal{p, SplitType::Rational, 0, 1, 1}};

    i64 D = k.discriminant();
    i64 t = k.omega_trace(), nw = k.omega_norm();
    auto root_of_min_poly = [&](bool double_root) -> i64 {
        // roots of x^2 - t x + nw mod p
        if (p == 2) {
            for (i64 r = 0; r < 2; ++r)
                if (mod_floor(r * r - t * r + nw, 2) == 0) return r;
            return -1;
        }
        if (double_root) return mod_floor(t * mod_inv(2, p), p);
        // D is a QR mod p here; find sqrt by search (p stays desk-scale)
        for (i64 s = 0; s <= p / 2; ++s) {
            if (mod_floor(s * s - D, p) == 0) {
                // x = (t +- s)/2 mod p
                return mod_floor((t + s) * mod_inv(2, p), p);
            }
        }
        return -1;
    };

    if (mod_floor(D, p) == 0) {
        i64 r = root_of_min_poly(p != 2);
        return {PrimeIdeal{p, SplitType::Ramified, r, 2, 1}};
    }
    int chi;
    if (p == 2) {
        chi = (mod_floor(D, 8) == 1) ? 1 : -1;
    } else {
        chi = kronecker(D, p);
    }
    if (chi == -1) return {PrimeIdeal{p, SplitType::Inert, 0, 1, 2}};

    i64 r1 = root_of_min_poly(false);
    i64 r2 = mod_floor(t - r1, p);  // the conjugate root
    PrimeIdeal p1{p, SplitType::Split, std::min(r1, r2), 1, 1};
    PrimeIdeal p2{p, SplitType::Split, std::max(r1, r2), 1, 1};
    return {p1, p2};
}

}  // namespace selcsa
