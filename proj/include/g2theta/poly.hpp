#pragma once

#include <algorithm>
#include <vector>

#include "g2theta/rational.hpp"

namespace g2theta {

// Dense univariate polynomial over Q, coefficients low to high.
// Only small degrees (<= 6) ever occur here.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    poly_trim(d);
    return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly_trim(c);
    return c;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c = a;
    if (c.size() < b.size()) c.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    poly_trim(c);
    return c;
}

inline Poly poly_neg(const Poly& a) {
    Poly c = a;
    for (auto& x : c) x = -x;
    return c;
}

// Euclidean remainder over Q.
inline Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    if (poly_is_zero(b)) throw std::invalid_argument("poly_rem by zero");
    while (!a.empty() && a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        poly_trim(a);
    }
    return a;
}

inline Poly poly_quot(Poly a, const Poly& b) {
    poly_trim(a);
    if (poly_is_zero(b)) throw std::invalid_argument("poly_quot by zero");
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1, Rat(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    poly_trim(q);
    return q;
}

// Monic gcd.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!poly_is_zero(b)) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Poly poly_squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, poly_derivative(p));
    if (poly_deg(g) <= 0) {
        Poly q = p;
        if (!q.empty()) {
            Rat lead = q.back();
            for (auto& c : q) c /= lead;
        }
        return q;
    }
    return poly_quot(p, g);
}

// Sturm chain of a squarefree polynomial.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = poly_derivative(p);
    if (!poly_is_zero(d)) chain.push_back(d);
    while (chain.size() >= 2) {
        Poly r = poly_neg(poly_rem(chain[chain.size() - 2], chain.back()));
        if (poly_is_zero(r)) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = poly_eval(p, x);
        int s = (v > 0) - (v < 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

// Number of distinct real roots in (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sturm_sign_variations(chain, a) - sturm_sign_variations(chain, b);
}

// Number of distinct real roots in the open interval (a, b).
inline int sturm_count_open(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    int n = sturm_count(chain, a, b);
    if (poly_eval(chain.front(), b) == 0) --n;
    return n;
}

}  // namespace g2theta
