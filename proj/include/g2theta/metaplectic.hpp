#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2theta/rational.hpp"

namespace g2theta {

// ---------------------------------------------------------------------------
// Places of Q
// ---------------------------------------------------------------------------

struct Place {
    std::optional<Int> prime;  // empty = archimedean

    static Place infinite() { return Place{}; }
    static Place finite(const Int& q) {
        if (mpz_probab_prime_p(q.get_mpz_t(), 40) == 0)
            throw std::invalid_argument("place must be prime");
        return Place{q};
    }
    bool is_finite() const { return prime.has_value(); }
    bool operator==(const Place& o) const { return prime == o.prime; }
    std::string to_string() const { return prime ? prime->get_str() : "inf"; }
};

inline Place parse_place(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return Place::infinite();
    return Place::finite(Int(s));
}

// ---------------------------------------------------------------------------
// Quadratic Hilbert symbol on Q, computed exactly from rationals
// ---------------------------------------------------------------------------

namespace detail {

inline long val_at(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    Int m = int_abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

inline long val_at(const Rat& x, const Int& p) {
    return val_at(rat_num(x), p) - val_at(rat_den(x), p);
}

// the p-unit part of x as an exact rational
inline Rat unit_part(const Rat& x, const Int& p) {
    Rat u = x;
    long v = val_at(x, p);
    Rat pr(p);
    for (; v > 0; --v) u /= pr;
    for (; v < 0; ++v) u *= pr;
    return u;
}

// Legendre symbol of a p-unit rational at an odd prime
inline int legendre_unit(const Rat& u, const Int& p) {
    Int n = mod_pos(rat_num(u), p);
    Int d = mod_pos(rat_den(u), p);
    Int r = mod_pos(n * mod_inverse(d, p), p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// residue mod 8 of a 2-adic unit rational (odd/odd); odd^2 = 1 mod 8, so
// the inverse of the denominator mod 8 is the denominator itself
inline long mod8_unit(const Rat& u) {
    Int n = mod_pos(rat_num(u), Int(8));
    Int d = mod_pos(rat_den(u), Int(8));
    return mod_pos(n * d, Int(8)).get_si();
}

inline int eps2(long u8) { return (u8 % 4 == 3) ? 1 : 0; }        // (u-1)/2 mod 2
inline int omega2(long u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; }  // (u^2-1)/8 mod 2

}  // namespace detail

inline int hilbert(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    if (!v.is_finite()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = *v.prime;
    long al = detail::val_at(a, p), be = detail::val_at(b, p);
    Rat u = detail::unit_part(a, p), w = detail::unit_part(b, p);
    if (p == 2) {
        long u8 = detail::mod8_unit(u), w8 = detail::mod8_unit(w);
        long e = detail::eps2(u8) * detail::eps2(w8) + al * detail::omega2(w8) +
                 be * detail::omega2(u8);
        return (e % 2) ? -1 : 1;
    }
    long e = (al % 2) && (be % 2) && ((p - 1) / 2 % 2 != 0) ? 1 : 0;
    int s = (e % 2) ? -1 : 1;
    if (be % 2) s *= detail::legendre_unit(u, p);
    if (al % 2) s *= detail::legendre_unit(w, p);
    return s;
}

// product over the archimedean place and all primes dividing 2ab; always +1
inline int hilbert_product(const Rat& a, const Rat& b) {
    int s = hilbert(a, b, Place::infinite());
    Int support = 2 * int_abs(rat_num(a)) * int_abs(rat_den(a)) *
                  int_abs(rat_num(b)) * int_abs(rat_den(b));
    for (const auto& [q, e] : factorize(support)) {
        (void)e;
        s *= hilbert(a, b, Place::finite(q));
    }
    return s;
}

// ---------------------------------------------------------------------------
// 2x2 exact matrices
// ---------------------------------------------------------------------------

using Mat2 = std::array<std::array<Rat, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}
inline Rat mat2_det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
inline Mat2 mat2_identity() { return {{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}}; }
inline Mat2 mat2_inv(const Mat2& m) {
    Rat d = mat2_det(m);
    if (d == 0) throw std::invalid_argument("singular 2x2 matrix");
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

// x(s) = c when c != 0, else d (for s = (a,b;c,d) with det 1)
inline Rat x_of(const Mat2& s) {
    if (mat2_det(s) != 1) throw std::invalid_argument("x_of needs det 1");
    return (s[1][0] != 0) ? s[1][0] : s[1][1];
}

inline int alpha_cocycle(const Mat2& g1, const Mat2& g2, const Place& v) {
    Rat x1 = x_of(g1), x2 = x_of(g2), x12 = x_of(mat2_mul(g1, g2));
    return hilbert(x1, x2, v) * hilbert(-x1 * x2, x12, v);
}

// ---------------------------------------------------------------------------
// The double cover of SL2(Q) in the Gelbart cocycle model
// ---------------------------------------------------------------------------

struct MetaSL2Elem {
    Mat2 g;
    int zeta = 1;  // ±1
    Place place;

    MetaSL2Elem(const Mat2& g_, int zeta_, const Place& v) : g(g_), zeta(zeta_), place(v) {
        if (mat2_det(g) != 1) throw std::invalid_argument("MetaSL2 matrix must have det 1");
        if (zeta != 1 && zeta != -1) throw std::invalid_argument("zeta must be ±1");
    }
    bool operator==(const MetaSL2Elem& o) const {
        return g == o.g && zeta == o.zeta && place == o.place;
    }
};

inline MetaSL2Elem msl2_identity(const Place& v) { return {mat2_identity(), 1, v}; }

inline MetaSL2Elem msl2_mul(const MetaSL2Elem& x, const MetaSL2Elem& y) {
    if (!(x.place == y.place)) throw std::invalid_argument("place mismatch");
    return {mat2_mul(x.g, y.g), alpha_cocycle(x.g, y.g, x.place) * x.zeta * y.zeta, x.place};
}

inline MetaSL2Elem msl2_inv(const MetaSL2Elem& x) {
    Mat2 gi = mat2_inv(x.g);
    return {gi, alpha_cocycle(x.g, gi, x.place) * x.zeta, x.place};
}

// pinned generator images
inline MetaSL2Elem msl2_w(const Rat& t, const Place& v) {
    if (t == 0) throw std::invalid_argument("w(t) needs t != 0");
    return {{{{Rat(0), t}, {-1 / t, Rat(0)}}}, 1, v};
}
inline MetaSL2Elem msl2_h(const Rat& t, const Place& v) {
    return msl2_mul(msl2_w(t, v), msl2_w(Rat(-1), v));
}
inline MetaSL2Elem msl2_x_upper(const Rat& u, const Place& v) {
    return {{{{Rat(1), u}, {Rat(0), Rat(1)}}}, 1, v};
}
inline MetaSL2Elem msl2_x_lower(const Rat& u, const Place& v) {
    return {{{{Rat(1), Rat(0)}, {u, Rat(1)}}}, 1, v};
}

// x_a(t) x_{-a}(s) = (1+st, t/(1+st))^{-1} x_{-a}(s/(1+st)) h(1+st) x_a(t/(1+st))
inline bool steinberg_opposite_identity(const Rat& t, const Rat& s, const Place& v) {
    Rat q = 1 + s * t;
    if (q == 0) throw std::invalid_argument("1 + st = 0");
    MetaSL2Elem lhs = msl2_mul(msl2_x_upper(t, v), msl2_x_lower(s, v));
    MetaSL2Elem rhs = msl2_mul(msl2_mul(msl2_x_lower(s / q, v), msl2_h(q, v)),
                               msl2_x_upper(t / q, v));
    int pre = (t == 0) ? 1 : hilbert(q, t / q, v);  // t = 0 degenerates to triviality
    rhs.zeta *= pre;  // the ±1 prefactor is its own inverse
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Double covers of GL2(Q): elements (s, zeta, y) with matrix s·diag(1,y)
// ---------------------------------------------------------------------------

inline int v_factor(const Rat& y, const Mat2& s, const Place& v) {
    if (y == 0) throw std::invalid_argument("y must be nonzero");
    return (s[1][0] != 0) ? 1 : hilbert(y, s[1][1], v);
}

inline MetaSL2Elem conj_action(const Rat& y, const MetaSL2Elem& x) {
    // s^y = diag(1,y)^{-1} s diag(1,y), sign multiplied by v(y,s)
    Mat2 sy{{{x.g[0][0], x.g[0][1] * y}, {x.g[1][0] / y, x.g[1][1]}}};
    return {sy, v_factor(y, x.g, x.place) * x.zeta, x.place};
}

enum class CoverVariant { COVER0, COVER1 };

struct MetaGL2Elem {
    Mat2 s;  // det 1
    int zeta = 1;
    Rat y;  // underlying matrix is s·diag(1,y), so det = y
    Place place;
    CoverVariant variant;

    MetaGL2Elem(const Mat2& s_, int zeta_, const Rat& y_, const Place& v, CoverVariant var)
        : s(s_), zeta(zeta_), y(y_), place(v), variant(var) {
        if (mat2_det(s) != 1) throw std::invalid_argument("MetaGL2 s must have det 1");
        if (y == 0) throw std::invalid_argument("MetaGL2 y must be nonzero");
        if (zeta != 1 && zeta != -1) throw std::invalid_argument("zeta must be ±1");
    }
    bool operator==(const MetaGL2Elem& o) const {
        return s == o.s && zeta == o.zeta && y == o.y && place == o.place &&
               variant == o.variant;
    }
};

inline MetaGL2Elem mgl2_identity(const Place& v, CoverVariant var) {
    return {mat2_identity(), 1, Rat(1), v, var};
}

inline MetaGL2Elem mgl2_mul(const MetaGL2Elem& x, const MetaGL2Elem& y) {
    if (!(x.place == y.place) || x.variant != y.variant)
        throw std::invalid_argument("MetaGL2 mismatch");
    MetaSL2Elem tw = conj_action(1 / x.y, MetaSL2Elem{y.s, y.zeta, x.place});
    MetaSL2Elem prod = msl2_mul(MetaSL2Elem{x.s, x.zeta, x.place}, tw);
    int vf = (x.variant == CoverVariant::COVER1) ? hilbert(x.y, y.y, x.place) : 1;
    return {prod.g, prod.zeta * vf, x.y * y.y, x.place, x.variant};
}

inline MetaGL2Elem mgl2_inv(const MetaGL2Elem& x) {
    // conj_action(1/x.y, s') must equal s^{-1} matrix-wise
    MetaSL2Elem si{mat2_inv(x.s), 1, x.place};
    Mat2 sp = conj_action(x.y, si).g;  // undo the diag(1, 1/y) twist
    MetaGL2Elem cand{sp, 1, 1 / x.y, x.place, x.variant};
    MetaGL2Elem probe = mgl2_mul(x, cand);
    cand.zeta = probe.zeta;  // flip so the product's sign is +1
    return cand;
}

inline MetaGL2Elem embed_sl2_gelbart(const MetaSL2Elem& x, CoverVariant var) {
    return {x.g, x.zeta, Rat(1), x.place, var};
}

// torus elements along the two simple roots of the GL2 Levi
inline MetaGL2Elem mgl2_h_alpha1(const Rat& t, const Place& v, CoverVariant var) {
    return embed_sl2_gelbart(msl2_h(t, v), var);
}
inline MetaGL2Elem mgl2_h_alpha2(const Rat& t, const Place& v, CoverVariant var) {
    return {mat2_identity(), 1, t, v, var};
}
inline MetaGL2Elem mgl2_w_alpha1(const Rat& t, const Place& v, CoverVariant var) {
    return embed_sl2_gelbart(msl2_w(t, v), var);
}

// ---------------------------------------------------------------------------
// Randomized relation self-tests
// ---------------------------------------------------------------------------

struct SelftestResult {
    std::string test;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
};

namespace detail {

inline Rat random_rat(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    for (;;) {
        Rat r = make_rat(Int(num(rng)), Int(den(rng)));
        if (!nonzero || r != 0) return r;
    }
}

inline Mat2 random_sl2(std::mt19937_64& rng) {
    for (;;) {
        Rat a = random_rat(rng, false), b = random_rat(rng, false), c = random_rat(rng, false);
        if (a != 0) return {{{a, b}, {c, (1 + b * c) / a}}};
        if (b != 0) return {{{a, b}, {-1 / b, c}}};
    }
}

}  // namespace detail

inline SelftestResult selftest_cocycle(const Place& v, std::uint64_t samples,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"cocycle", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Mat2 g1 = detail::random_sl2(rng), g2 = detail::random_sl2(rng),
             g3 = detail::random_sl2(rng);
        int lhs = alpha_cocycle(g1, g2, v) * alpha_cocycle(mat2_mul(g1, g2), g3, v);
        int rhs = alpha_cocycle(g1, mat2_mul(g2, g3), v) * alpha_cocycle(g2, g3, v);
        if (lhs != rhs) ++r.failures;
    }
    return r;
}

inline SelftestResult selftest_hilbert(const Place& v, std::uint64_t samples,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"hilbert", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rat a = detail::random_rat(rng, true), b = detail::random_rat(rng, true),
            c = detail::random_rat(rng, true);
        bool ok = hilbert(a, b, v) == hilbert(b, a, v) &&
                  hilbert(a * c, b, v) == hilbert(a, b, v) * hilbert(c, b, v) &&
                  hilbert(a, -a, v) == 1;
        if (a + b != 0) ok = ok && hilbert(a, b, v) * hilbert(-a * b, a + b, v) == 1;
        if (!ok) ++r.failures;
    }
    return r;
}

inline SelftestResult selftest_hilbert_product(std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"hilbert_product", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rat a = detail::random_rat(rng, true), b = detail::random_rat(rng, true);
        if (hilbert_product(a, b) != 1) ++r.failures;
    }
    return r;
}

inline SelftestResult selftest_steinberg(const Place& v, std::uint64_t samples,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"steinberg", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rat t = detail::random_rat(rng, false), s = detail::random_rat(rng, false);
        if (1 + s * t == 0) continue;
        if (!steinberg_opposite_identity(t, s, v)) ++r.failures;
    }
    return r;
}

inline SelftestResult selftest_conj(const Place& v, std::uint64_t samples,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"conj_action", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rat y1 = detail::random_rat(rng, true), y2 = detail::random_rat(rng, true);
        MetaSL2Elem a{detail::random_sl2(rng), 1, v}, b{detail::random_sl2(rng), 1, v};
        bool ok = conj_action(y1, msl2_mul(a, b)) ==
                      msl2_mul(conj_action(y1, a), conj_action(y1, b)) &&
                  conj_action(y1, conj_action(y2, a)) == conj_action(y1 * y2, a);
        if (!ok) ++r.failures;
    }
    return r;
}

inline SelftestResult selftest_cover_compare(const Place& v, std::uint64_t samples,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestResult r{"cover_compare", samples, 0};
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rat y1 = detail::random_rat(rng, true), y2 = detail::random_rat(rng, true);
        Mat2 s1 = detail::random_sl2(rng), s2 = detail::random_sl2(rng);
        MetaGL2Elem a0{s1, 1, y1, v, CoverVariant::COVER0},
            b0{s2, 1, y2, v, CoverVariant::COVER0};
        MetaGL2Elem a1{s1, 1, y1, v, CoverVariant::COVER1},
            b1{s2, 1, y2, v, CoverVariant::COVER1};
        MetaGL2Elem p0 = mgl2_mul(a0, b0), p1 = mgl2_mul(a1, b1);
        if (p1.zeta != p0.zeta * hilbert(y1, y2, v)) ++r.failures;
    }
    return r;
}

inline std::vector<SelftestResult> run_all_selftests(const Place& v, std::uint64_t samples,
                                                     std::uint64_t seed) {
    std::vector<SelftestResult> out;
    out.push_back(selftest_hilbert(v, samples, seed));
    out.push_back(selftest_hilbert_product(samples, seed + 1));
    out.push_back(selftest_cocycle(v, samples, seed + 2));
    out.push_back(selftest_steinberg(v, samples, seed + 3));
    out.push_back(selftest_conj(v, samples, seed + 4));
    out.push_back(selftest_cover_compare(v, samples, seed + 5));
    return out;
}

}  // namespace g2theta
