#include "selcsa/residue.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "selcsa/errors.hpp"

namespace selcsa {

ResidueField::ResidueField(const BaseField& k, const PrimeIdeal& prime) : p_(prime.p) {
    if (k.is_rational()) {
        rational_base_ = true;
        return;
    }
    if (prime.type == SplitType::Inert) {
        quadratic_ = true;
        t_ = mod_floor(k.omega_trace(), p_);
        nw_ = mod_floor(k.omega_norm(), p_);
    } else {
        omega_image_ = mod_floor(prime.root, p_);
    }
}

ResidueField::Elem ResidueField::add(const Elem& x, const Elem& y) const {
    return {mod_floor(x.u + y.u, p_), mod_floor(x.v + y.v, p_)};
}
ResidueField::Elem ResidueField::sub(const Elem& x, const Elem& y) const {
    return {mod_floor(x.u - y.u, p_), mod_floor(x.v - y.v, p_)};
}
ResidueField::Elem ResidueField::neg(const Elem& x) const {
    return {mod_floor(-x.u, p_), mod_floor(-x.v, p_)};
}

ResidueField::Elem ResidueField::mul(const Elem& x, const Elem& y) const {
    if (!quadratic_) return {(i64)((i128)x.u * y.u % p_), 0};
    // (u1 + v1 w)(u2 + v2 w) with w^2 = t w - nw
    i64 uv = (i64)((i128)x.v * y.v % p_);
    i64 u = mod_floor((i64)((i128)x.u * y.u % p_) - (i64)((i128)nw_ * uv % p_), p_);
    i64 v = mod_floor((i64)((i128)x.u * y.v % p_) + (i64)((i128)x.v * y.u % p_) +
                          (i64)((i128)t_ * uv % p_),
                      p_);
    return {u, v};
}

ResidueField::Elem ResidueField::pow(Elem x, i64 e) const {
    Elem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

ResidueField::Elem ResidueField::inv(const Elem& x) const {
    if (is_zero(x)) throw std::invalid_argument("residue field: inverse of zero");
    return pow(x, q() - 2);
}

ResidueField::Elem ResidueField::reduce(const QuadInt& x) const {
    if (rational_base_) {
        if (x.b != 0) throw ValidationError("nonrational coefficient over Q");
        return {mod_floor(x.a, p_), 0};
    }
    if (quadratic_) return {mod_floor(x.a, p_), mod_floor(x.b, p_)};
    return {mod_floor(x.a + x.b * omega_image_, p_), 0};
}

QuadInt ResidueField::lift(const Elem& x) const {
    if (quadratic_) return {x.u, x.v};
    return {x.u, 0};
}

int FqPoly::degree() const {
    for (int i = (int)coeffs.size() - 1; i >= 0; --i)
        if (coeffs[(size_t)i].u != 0 || coeffs[(size_t)i].v != 0) return i;
    return -1;
}

FqPoly fq_trim(FqPoly f) {
    f.coeffs.resize((size_t)(f.degree() + 1));
    return f;
}

FqPoly fq_one(const ResidueField& F) { return {{F.one()}}; }
FqPoly fq_x(const ResidueField& F) { return {{F.zero(), F.one()}}; }

FqPoly fq_add(const ResidueField& F, const FqPoly& f, const FqPoly& g) {
    FqPoly r;
    r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), F.zero());
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        auto a = i < f.coeffs.size() ? f.coeffs[i] : F.zero();
        auto b = i < g.coeffs.size() ? g.coeffs[i] : F.zero();
        r.coeffs[i] = F.add(a, b);
    }
    return fq_trim(r);
}

FqPoly fq_sub(const ResidueField& F, const FqPoly& f, const FqPoly& g) {
    FqPoly r;
    r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), F.zero());
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        auto a = i < f.coeffs.size() ? f.coeffs[i] : F.zero();
        auto b = i < g.coeffs.size() ? g.coeffs[i] : F.zero();
        r.coeffs[i] = F.sub(a, b);
    }
    return fq_trim(r);
}

FqPoly fq_mul(const ResidueField& F, const FqPoly& f, const FqPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    FqPoly r;
    r.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, F.zero());
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        for (size_t j = 0; j < g.coeffs.size(); ++j)
            r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(f.coeffs[i], g.coeffs[j]));
    return fq_trim(r);
}

namespace {

// quotient and remainder of f by g
std::pair<FqPoly, FqPoly> fq_divmod(const ResidueField& F, FqPoly f, const FqPoly& g) {
    int dg = g.degree();
    if (dg < 0) throw std::invalid_argument("fq_divmod: division by zero polynomial");
    f = fq_trim(f);
    FqPoly quot;
    if (f.degree() >= dg) quot.coeffs.assign((size_t)(f.degree() - dg + 1), F.zero());
    auto lead_inv = F.inv(g.coeffs[(size_t)dg]);
    while (f.degree() >= dg) {
        int df = f.degree();
        auto factor = F.mul(f.coeffs[(size_t)df], lead_inv);
        quot.coeffs[(size_t)(df - dg)] = factor;
        for (int i = 0; i <= dg; ++i) {
            size_t idx = (size_t)(df - dg + i);
            f.coeffs[idx] = F.sub(f.coeffs[idx], F.mul(factor, g.coeffs[(size_t)i]));
        }
        f = fq_trim(f);
    }
    return {fq_trim(quot), f};
}

FqPoly fq_divexact(const ResidueField& F, const FqPoly& f, const FqPoly& g) {
    auto [q, r] = fq_divmod(F, f, g);
    if (!r.is_zero()) throw std::logic_error("fq_divexact: nonzero remainder");
    return q;
}

}  // namespace

FqPoly fq_mod(const ResidueField& F, FqPoly f, const FqPoly& g) {
    return fq_divmod(F, std::move(f), g).second;
}

FqPoly fq_monic(const ResidueField& F, FqPoly f) {
    int d = f.degree();
    if (d < 0) return f;
    auto inv = F.inv(f.coeffs[(size_t)d]);
    for (auto& c : f.coeffs) c = F.mul(c, inv);
    return f;
}

FqPoly fq_gcd(const ResidueField& F, FqPoly f, FqPoly g) {
    f = fq_trim(f);
    g = fq_trim(g);
    while (!g.is_zero()) {
        FqPoly r = fq_mod(F, f, g);
        f = g;
        g = r;
    }
    return fq_monic(F, f);
}

FqPoly fq_derivative(const ResidueField& F, const FqPoly& f) {
    FqPoly r;
    if (f.coeffs.size() <= 1) return r;
    r.coeffs.resize(f.coeffs.size() - 1);
    for (size_t i = 1; i < f.coeffs.size(); ++i)
        r.coeffs[i - 1] = F.mul(f.coeffs[i], F.from_int((i64)i));
    return fq_trim(r);
}

FqPoly fq_powmod(const ResidueField& F, FqPoly base, i64 e, const FqPoly& mod) {
    FqPoly acc = fq_one(F);
    base = fq_mod(F, std::move(base), mod);
    while (e > 0) {
        if (e & 1) acc = fq_mod(F, fq_mul(F, acc, base), mod);
        base = fq_mod(F, fq_mul(F, base, base), mod);
        e >>= 1;
    }
    return acc;
}

bool fq_eq(const FqPoly& f, const FqPoly& g) {
    FqPoly a = fq_trim(f), b = fq_trim(g);
    return a.coeffs == b.coeffs;
}

namespace {

// Frobenius inverse on coefficients: identity on F_p, x -> x^p on F_{p^2}.
ResidueField::Elem pth_root(const ResidueField& F, const ResidueField::Elem& x) {
    if (!F.quadratic()) return x;
    return F.pow(x, F.p());
}

void squarefree_decompose(const ResidueField& F, FqPoly f, int mult,
                          std::vector<std::pair<FqPoly, int>>& out) {
    f = fq_monic(F, fq_trim(f));
    if (f.degree() <= 0) return;
    FqPoly d = fq_derivative(F, f);
    if (d.is_zero()) {
        // f = g(x^p)
        FqPoly g;
        i64 p = F.p();
        g.coeffs.resize((size_t)(f.degree() / p) + 1, F.zero());
        for (int i = 0; i <= f.degree(); i += (int)p)
            g.coeffs[(size_t)(i / p)] = pth_root(F, f.coeffs[(size_t)i]);
        squarefree_decompose(F, g, mult * (int)p, out);
        return;
    }
    FqPoly c = fq_gcd(F, f, d);
    FqPoly w = fq_divexact(F, f, c);
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fq_gcd(F, w, c);
        if (w.degree() > y.degree())
            out.emplace_back(fq_monic(F, fq_divexact(F, w, y)), mult * i);
        c = fq_divexact(F, c, y);
        w = y;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(F, c, mult, out);
}

// Cantor-Zassenhaus equal-degree splitting; f squarefree with all
// irreducible factors of degree d.
void equal_degree_split(const ResidueField& F, const FqPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(fq_monic(F, f));
        return;
    }
    i64 q = F.q();
    FqPoly splitter;
    while (splitter.is_zero()) {
        FqPoly r;
        r.coeffs.resize((size_t)f.degree(), F.zero());
        for (auto& c : r.coeffs) {
            c.u = (i64)(rng() % (std::uint64_t)F.p());
            if (F.quadratic()) c.v = (i64)(rng() % (std::uint64_t)F.p());
        }
        r = fq_trim(r);
        if (r.degree() < 1) continue;
        FqPoly g = fq_gcd(F, r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
        FqPoly h;
        if (F.p() == 2) {
            // trace map r + r^2 + r^4 + ... over F_{2^(k*d)}
            int k = F.quadratic() ? 2 : 1;
            FqPoly acc = fq_mod(F, r, f);
            FqPoly term = acc;
            for (int i = 1; i < k * d; ++i) {
                term = fq_mod(F, fq_mul(F, term, term), f);
                acc = fq_add(F, acc, term);
            }
            h = acc;
        } else {
            i64 e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            h = fq_sub(F, fq_powmod(F, r, (e - 1) / 2, f), fq_one(F));
        }
        FqPoly g2 = fq_gcd(F, h, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) splitter = g2;
    }
    equal_degree_split(F, splitter, d, rng, out);
    equal_degree_split(F, fq_divexact(F, f, splitter), d, rng, out);
}

}  // namespace

std::vector<std::pair<FqPoly, int>> fq_factor(const ResidueField& F, const FqPoly& f,
                                              std::uint64_t seed) {
    std::vector<std::pair<FqPoly, int>> squarefree;
    squarefree_decompose(F, f, 1, squarefree);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::pair<FqPoly, int>> out;
    for (auto& [sf, mult] : squarefree) {
        // distinct-degree pass
        FqPoly rest = sf;
        FqPoly h = fq_x(F);
        int d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (2 * d > rest.degree()) {
                out.emplace_back(fq_monic(F, rest), mult);
                break;
            }
            h = fq_powmod(F, h, F.q(), rest);
            FqPoly g = fq_gcd(F, fq_sub(F, h, fq_x(F)), rest);
            if (g.degree() > 0) {
                std::vector<FqPoly> pieces;
                equal_degree_split(F, g, d, rng, pieces);
                for (auto& piece : pieces) out.emplace_back(piece, mult);
                rest = fq_divexact(F, rest, g);
                if (rest.degree() <= 0) break;
                h = fq_mod(F, h, rest);
            }
        }
    }
    return out;
}

}  // namespace selcsa
