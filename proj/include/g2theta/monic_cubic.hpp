#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2theta/poly.hpp"
#include "g2theta/rational.hpp"

namespace g2theta {

// p(t) = t^3 + a2 t^2 + a1 t + a0.
struct MonicCubic {
    Int a2, a1, a0;

    bool operator==(const MonicCubic&) const = default;

    Poly to_poly() const { return {Rat(a0), Rat(a1), Rat(a2), Rat(1)}; }
};

struct RationalInterval {
    Rat lo, hi;

    RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

struct IsolatedRoot {
    RationalInterval interval;
    int multiplicity;
};

inline Int discriminant(const MonicCubic& p) {
    const Int &a = p.a2, &b = p.a1, &c = p.a0;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

namespace detail {

// Strict bound: every real root r of p has |r| < cauchy_bound(p).
inline Rat cauchy_bound(const Poly& p) {
    Rat m = 0;
    Rat lead = p.back();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rat c = abs(p[i] / lead);
        if (c > m) m = c;
    }
    return m + 1;
}

inline bool has_root_in(const Poly& q, const RationalInterval& iv) {
    if (poly_is_zero(q) || poly_deg(q) == 0) return false;
    if (iv.lo == iv.hi) return poly_eval(q, iv.lo) == 0;
    auto chain = sturm_chain(poly_squarefree_part(q));
    if (poly_eval(q, iv.lo) == 0 || poly_eval(q, iv.hi) == 0) return true;
    return sturm_count(chain, iv.lo, iv.hi) > 0;
}

}  // namespace detail

// Isolating intervals for the distinct real roots of p (any degree), each of
// width < eps, sorted left to right. Endpoints of a non-degenerate interval
// are never roots; a degenerate interval [r, r] is an exact rational root.
inline std::vector<RationalInterval> isolate_distinct_real_roots(const Poly& p,
                                                                 const Rat& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    std::vector<RationalInterval> out;
    Poly h = poly_squarefree_part(p);
    if (poly_deg(h) <= 0) return out;
    auto chain = sturm_chain(h);
    Rat bound = detail::cauchy_bound(h);

    std::vector<std::pair<Rat, Rat>> stack;
    stack.emplace_back(-bound, bound);
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = sturm_count(chain, lo, hi);  // endpoints are non-roots
        if (n == 0) continue;
        if (n == 1 && hi - lo < eps) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        if (poly_eval(h, mid) == 0) {
            out.emplace_back(mid, mid);
            // Shrink around the exact root until the removed neighborhood
            // contains no other root and has non-root endpoints.
            Rat delta = (hi - lo) / 4;
            while (poly_eval(h, mid - delta) == 0 || poly_eval(h, mid + delta) == 0 ||
                   sturm_count(chain, mid - delta, mid + delta) != 1)
                delta /= 2;
            stack.emplace_back(lo, mid - delta);
            stack.emplace_back(mid + delta, hi);
        } else {
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return out;
}

// Halve the width of an isolating interval, keeping its unique root inside.
// `chain` must be the Sturm chain of the squarefree polynomial that `iv`
// isolates a root of.
inline RationalInterval refine_root_interval(const std::vector<Poly>& chain,
                                             const RationalInterval& iv) {
    if (iv.lo == iv.hi) return iv;
    const Poly& h = chain.front();
    Rat mid = (iv.lo + iv.hi) / 2;
    if (poly_eval(h, mid) == 0) return {mid, mid};
    if (sturm_count(chain, iv.lo, mid) == 1) return {iv.lo, mid};
    return {mid, iv.hi};
}

inline std::vector<IsolatedRoot> isolate_real_roots(const MonicCubic& p, const Rat& eps) {
    Poly f = p.to_poly();
    auto intervals = isolate_distinct_real_roots(f, eps);
    // Multiplicity of a root r equals the number of polynomials in the
    // iterated gcd chain f, gcd(f,f'), gcd(gcd,..)' that vanish at r.
    std::vector<Poly> gcd_chain;
    Poly g = f;
    while (poly_deg(g) >= 1) {
        gcd_chain.push_back(g);
        g = poly_gcd(g, poly_derivative(g));
    }
    std::vector<IsolatedRoot> out;
    for (const auto& iv : intervals) {
        int mult = 0;
        for (const auto& q : gcd_chain)
            if (detail::has_root_in(q, iv)) ++mult;
        out.push_back({iv, mult});
    }
    return out;
}

// True iff p has three real roots counted with multiplicity.
inline bool is_totally_real(const MonicCubic& p) {
    auto roots = isolate_real_roots(p, Rat(1));
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total == 3;
}

// Smallest integer B with |r| <= B for every real root r of p.
inline Int max_abs_root_bound(const MonicCubic& p) {
    Poly h = poly_squarefree_part(p.to_poly());
    if (poly_deg(h) <= 0) return 0;
    auto chain = sturm_chain(h);
    Rat bound = detail::cauchy_bound(h);
    int total = sturm_count(chain, -bound, bound);
    if (total == 0) return 0;
    for (Int b = 0;; ++b) {
        Rat lo(-b), hi(b);
        int n = sturm_count(chain, lo, hi);
        if (poly_eval(h, lo) == 0) ++n;
        if (n == total) return b;
    }
}

// ---------------------------------------------------------------------------
// Text form. Accepts expanded polynomials like "t^3 - t^2 - 2*t + 1" and
// product forms like "(t-1)(t^2-2)"; implicit multiplication ("3t") is fine.
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(std::string s) : s_(std::move(s)) {}

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    std::string s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly parse_expr() {
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s_[pos_++] == '-');
        Poly acc = parse_term();
        if (neg) acc = poly_neg(acc);
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly t = parse_term();
            acc = (c == '+') ? poly_sub(acc, poly_neg(t)) : poly_sub(acc, t);
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = poly_mul(acc, parse_factor());
            } else if (c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = poly_mul(acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base;
        char c = peek();
        if (c == '(') {
            ++pos_;
            base = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (c == 't') {
            ++pos_;
            base = {Rat(0), Rat(1)};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            base = {Rat(Int(digits))};
        } else {
            fail("expected '(', 't' or a number");
        }
        if (peek() == '^') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            long e = std::stol(digits);
            if (e < 0 || e > 16) fail("exponent out of range");
            Poly r = {Rat(1)};
            for (long i = 0; i < e; ++i) r = poly_mul(r, base);
            base = std::move(r);
        }
        return base;
    }
};

}  // namespace detail

inline MonicCubic parse_monic_cubic(const std::string& text) {
    Poly p = detail::PolyParser(text).parse();
    if (poly_deg(p) != 3) throw std::invalid_argument("not a cubic: " + text);
    if (p[3] != 1) throw std::invalid_argument("not monic: " + text);
    for (int i = 0; i < 3; ++i)
        if (!is_integer(p[i])) throw std::invalid_argument("non-integer coefficient: " + text);
    return MonicCubic{rat_num(p[2]), rat_num(p[1]), rat_num(p[0])};
}

inline std::string format_monic_cubic(const MonicCubic& p) {
    std::ostringstream os;
    os << "t^3";
    auto emit = [&os](const Int& c, const std::string& mon) {
        if (c == 0) return;
        os << (c > 0 ? " + " : " - ");
        Int a = int_abs(c);
        if (mon.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mon;
        }
    };
    emit(p.a2, "t^2");
    emit(p.a1, "t");
    emit(p.a0, "");
    return os.str();
}

}  // namespace g2theta
