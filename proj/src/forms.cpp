#include "selcsa/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "selcsa/errors.hpp"

namespace selcsa {

bool QuadForm::is_reduced() const {
    i64 ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

std::string QuadForm::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool QuadForm::operator<(const QuadForm& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

QuadForm principal_form(i64 D) {
    if (mod_floor(D, 4) == 0) return {1, 0, -D / 4};
    return {1, 1, (1 - D) / 4};
}

QuadForm reduce_form(QuadForm f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce_form: form is not positive definite");
    i64 D = f.discriminant();
    while (!f.is_reduced()) {
        // normalize: -a < b <= a
        i64 r = mod_floor(f.b, 2 * f.a);
        if (r > f.a) r -= 2 * f.a;
        f.b = r;
        f.c = (f.b * f.b - D) / (4 * f.a);
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
        } else if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
        }
    }
    return f;
}

QuadForm inverse_form(const QuadForm& f) { return reduce_form({f.a, -f.b, f.c}); }

namespace {

// value of f at (x, y)
i64 eval_form(const QuadForm& f, i64 x, i64 y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

// Transform f by a unimodular matrix [[x, beta],[y, delta]] so the new
// leading coefficient is f(x, y); requires x*delta - y*beta = 1.
QuadForm transform(const QuadForm& f, i64 x, i64 y, i64 beta, i64 delta) {
    QuadForm g;
    g.a = eval_form(f, x, y);
    g.c = eval_form(f, beta, delta);
    g.b = 2 * (f.a * x * beta + f.c * y * delta) + f.b * (x * delta + y * beta);
    return g;
}

// Find a form equivalent to f whose leading coefficient is coprime to m.
QuadForm with_leading_coprime_to(const QuadForm& f, i64 m) {
    if (gcd_i64(f.a, m) == 1) return f;
    for (i64 bound = 1; bound <= 64; ++bound) {
        for (i64 x = -bound; x <= bound; ++x) {
            for (i64 y = -bound; y <= bound; ++y) {
                if (gcd_i64(x, y) != 1) continue;
                i64 v = eval_form(f, x, y);
                if (v <= 0 || gcd_i64(v, m) != 1) continue;
                i64 delta, beta;
                ext_gcd(x, y, delta, beta);  // x*delta + y*beta = 1
                return transform(f, x, y, -beta, delta);
            }
        }
    }
    throw std::logic_error("with_leading_coprime_to: no representation found");
}

}  // namespace

QuadForm compose_forms(const QuadForm& f, const QuadForm& g) {
    i64 D = f.discriminant();
    if (D != g.discriminant())
        throw ValidationError("compose_forms: discriminants differ");
    // Unite: replace g by an equivalent form with leading coefficient
    // coprime to f.a, so gcd(a1, a2, (b1+b2)/2) = 1.
    QuadForm h = with_leading_coprime_to(g, f.a);
    i64 a1 = f.a, b1 = f.b;
    i64 a2 = h.a, b2 = h.b;
    // B = b1 (mod 2 a1), B = b2 (mod 2 a2); b1 = b2 = D (mod 2) and
    // gcd(a1, a2) = 1, so the congruences are solvable.
    i64 t = 0;
    if (a2 > 1) {
        i64 diff = mod_floor((b2 - b1) / 2, a2);
        t = (i64)((i128)diff * mod_inv(a1, a2) % a2);
    }
    i64 B = b1 + 2 * a1 * t;
    i64 A = a1 * a2;
    i64 C = (i64)(((i128)B * B - D) / (4 * A));
    return reduce_form({A, B, C});
}

std::vector<QuadForm> reduced_forms(i64 D) {
    std::vector<QuadForm> out;
    for (i64 a = 1; a * a * 3 <= -D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - D;
            if (num % (4 * a)) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            QuadForm f{a, b, c};
            if (!f.is_reduced()) continue;
            if (gcd_i64(gcd_i64(a, b), c) != 1) continue;  // primitive only
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace selcsa
