#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "g2theta/jordan.hpp"
#include "g2theta/monic_cubic.hpp"
#include "g2theta/rational.hpp"

namespace g2theta {

// f(u,v) = a u^3 + b u^2 v + c u v^2 + d v^3.
struct BinaryCubic {
    Int a, b, c, d;

    bool operator==(const BinaryCubic&) const = default;
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    // Coefficient reversal = substitution (u,v) -> (v,u).
    BinaryCubic reversed() const { return BinaryCubic{d, c, b, a}; }

    std::string to_text() const {
        return a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str();
    }

    static BinaryCubic from_text(const std::string& s) {
        std::array<Int, 4> v;
        size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            size_t next = (i == 3) ? s.size() : s.find(',', pos);
            if (next == std::string::npos) throw std::invalid_argument("expected a,b,c,d");
            std::string tok = s.substr(pos, next - pos);
            // strip spaces
            size_t b0 = tok.find_first_not_of(" \t");
            size_t b1 = tok.find_last_not_of(" \t");
            if (b0 == std::string::npos) throw std::invalid_argument("empty coefficient");
            tok = tok.substr(b0, b1 - b0 + 1);
            if (mpz_set_str(v[i].get_mpz_t(), tok.c_str(), 10) != 0)
                throw std::invalid_argument("bad integer: " + tok);
            pos = next + 1;
        }
        return BinaryCubic{v[0], v[1], v[2], v[3]};
    }
};

// (a, b, c, d) in W^vee maps to a u^3 + tr(b) u^2 v + tr(c) u v^2 + d v^3.
inline BinaryCubic trace_map(const WVector& w) {
    Rat tb = trace(w.b), tc = trace(w.c);
    if (!is_integer(tb) || !is_integer(tc))
        throw std::invalid_argument("trace of a dual Jordan element must be integral");
    return BinaryCubic{w.a, rat_num(tb), rat_num(tc), w.d};
}

// f(1,t) = t^3 + c t^2 + b t + a, defined when d = 1.
inline MonicCubic companion(const BinaryCubic& f) {
    if (f.d != 1) throw std::invalid_argument("companion requires d = 1");
    return MonicCubic{f.c, f.b, f.a};
}

// 18abcd - 4 b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2.
inline Int form_discriminant(const BinaryCubic& f) {
    const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

enum class PsdClass { PSD, NOT_PSD };

// PSD iff f(z,1) has no root in the open upper half plane, i.e. all projective
// roots are real. A vanishing leading coefficient contributes the (real) root
// at infinity; repeated real roots are fine.
inline PsdClass psd_classify(const BinaryCubic& f) {
    if (f.is_zero()) throw std::invalid_argument("psd_classify: zero form");
    // Dehomogenize: g(z) = a z^3 + b z^2 + c z + d.
    Poly g = {Rat(f.d), Rat(f.c), Rat(f.b), Rat(f.a)};
    poly_trim(g);
    int deg = poly_deg(g);
    if (deg <= 0) return PsdClass::PSD;  // nonzero constant never vanishes
    Poly sf = poly_squarefree_part(g);
    int distinct = static_cast<int>(isolate_distinct_real_roots(sf, Rat(1)).size());
    return distinct == poly_deg(sf) ? PsdClass::PSD : PsdClass::NOT_PSD;
}

}  // namespace g2theta
