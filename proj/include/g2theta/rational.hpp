#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2theta {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Entry of J_0^vee: integer or half-integer.
inline bool is_half_integer(const Rat& r) {
    return r.get_den() == 1 || r.get_den() == 2;
}

inline Int int_abs(const Int& x) { return x >= 0 ? x : Int(-x); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// Trial-division factorization; adequate for the small integers this
// library encounters (discriminants, Hilbert-symbol arguments).
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    n = int_abs(n);
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// x mod m in [0, m).
inline Int mod_pos(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("not invertible mod m");
    return inv;
}

}  // namespace g2theta
