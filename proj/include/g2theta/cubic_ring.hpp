#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2theta/jordan.hpp"
#include "g2theta/linalg.hpp"
#include "g2theta/monic_cubic.hpp"
#include "g2theta/poly.hpp"
#include "g2theta/qp.hpp"
#include "g2theta/rational.hpp"

namespace g2theta {

// x0 + x1*theta + x2*theta^2 in E = Q[theta]/(p).
struct FieldElem {
    Vec3 c{Rat(0), Rat(0), Rat(0)};

    FieldElem() = default;
    explicit FieldElem(Vec3 v) : c(std::move(v)) {}
    FieldElem(Rat x0, Rat x1, Rat x2) : c{std::move(x0), std::move(x1), std::move(x2)} {}

    static FieldElem from_rat(const Rat& x) { return FieldElem(x, Rat(0), Rat(0)); }
    static FieldElem theta() { return FieldElem(Rat(0), Rat(1), Rat(0)); }

    bool operator==(const FieldElem&) const = default;
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    Poly to_poly() const { return Poly{c[0], c[1], c[2]}; }
};

// Fractional ideal as (1/den) * (integer lattice in row HNF); rows are
// coordinates with respect to (1, theta, theta^2).
struct FracIdeal {
    Int den = 1;  // positive
    std::array<IntRow3, 3> rows{};

    bool operator==(const FracIdeal&) const = default;

    FieldElem basis_elem(int i) const {
        return FieldElem(make_rat(rows[i][0], den), make_rat(rows[i][1], den),
                         make_rat(rows[i][2], den));
    }
};

struct BalancedPair {
    FracIdeal ideal;
    FieldElem mu;
};

enum class Tri { yes, no, undecided };

namespace detail {

// Exact Gaussian elimination; returns the unique solution of the (possibly
// overdetermined, consistent) system, or nullopt on inconsistency/rank < n.
inline std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> a,
                                                   std::vector<Rat> b) {
    const size_t m = a.size(), n = m ? a[0].size() : 0;
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[row][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() < n) return std::nullopt;  // rank deficient
    for (size_t r = row; r < m; ++r)
        if (b[r] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(n);
    for (size_t k = 0; k < n; ++k) x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
    return x;
}

inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out = {Int(1)};
    for (const auto& [q, e] : factorize(int_abs(n))) {
        size_t base = out.size();
        Int pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return out;
}

// All rational roots of a nonzero rational-coefficient polynomial.
inline std::vector<Rat> rational_roots(Poly f) {
    poly_trim(f);
    if (poly_is_zero(f)) throw std::invalid_argument("zero polynomial");
    std::vector<Rat> out;
    // strip roots at 0
    size_t shift = 0;
    while (shift < f.size() && f[shift] == 0) ++shift;
    if (shift > 0) {
        out.push_back(Rat(0));
        f.erase(f.begin(), f.begin() + static_cast<long>(shift));
    }
    if (poly_deg(f) <= 0) return out;
    Int den = 1;
    for (const auto& c : f) den = lcm(den, rat_den(c));
    std::vector<Int> ic;
    for (const auto& c : f) ic.push_back(rat_num(c * den));
    const Int &lead = ic.back(), &tail = ic.front();
    for (const Int& u : divisors(tail))
        for (const Int& w : divisors(lead)) {
            if (gcd(u, w) != 1) continue;
            for (int s : {+1, -1}) {
                Rat cand = make_rat(s * u, w);
                if (poly_eval(f, cand) == 0 &&
                    std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// sqrt of a nonnegative rational when it is an exact square.
inline bool rat_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    if (!is_perfect_square(rat_num(x)) || !is_perfect_square(rat_den(x))) return false;
    out = make_rat(isqrt(rat_num(x)), isqrt(rat_den(x)));
    return true;
}

}  // namespace detail

class CubicRing {
public:
    explicit CubicRing(MonicCubic p) : p_(std::move(p)), disc_(discriminant(p_)) {}

    const MonicCubic& poly() const { return p_; }
    const Int& disc() const { return disc_; }

    // ----- etale algebra arithmetic -------------------------------------

    FieldElem add(const FieldElem& x, const FieldElem& y) const {
        return FieldElem(x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2]);
    }
    FieldElem sub(const FieldElem& x, const FieldElem& y) const {
        return FieldElem(x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2]);
    }
    FieldElem neg(const FieldElem& x) const { return FieldElem(-x.c[0], -x.c[1], -x.c[2]); }
    FieldElem scale(const Rat& s, const FieldElem& x) const {
        return FieldElem(s * x.c[0], s * x.c[1], s * x.c[2]);
    }

    FieldElem mul(const FieldElem& x, const FieldElem& y) const {
        Poly prod = poly_mul(x.to_poly(), y.to_poly());
        Poly r = poly_rem(prod, p_.to_poly());
        r.resize(3, Rat(0));
        return FieldElem(r[0], r[1], r[2]);
    }

    // Matrix of multiplication by x on the basis (1, theta, theta^2);
    // column j = coordinates of x * theta^j.
    Mat3 regular_rep(const FieldElem& x) const {
        Mat3 m{};
        FieldElem cur = x;
        for (int j = 0; j < 3; ++j) {
            for (int i = 0; i < 3; ++i) m[i][static_cast<size_t>(j)] = cur.c[i];
            cur = mul(cur, FieldElem::theta());
        }
        return m;
    }

    Rat elem_norm(const FieldElem& x) const { return det3(regular_rep(x)); }
    Rat elem_trace(const FieldElem& x) const {
        Mat3 m = regular_rep(x);
        return m[0][0] + m[1][1] + m[2][2];
    }

    FieldElem inv(const FieldElem& x) const {
        Mat3 m = regular_rep(x);
        if (det3(m) == 0) throw std::domain_error("zero divisor in etale algebra");
        Vec3 e1 = {Rat(1), Rat(0), Rat(0)};
        Vec3 y = solve3(m, e1);
        return FieldElem(y);
    }

    FieldElem div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }

    // ----- real embeddings ------------------------------------------------

    // Sign of x in the real embedding attached to a given isolating interval
    // of the (squarefree) minimal polynomial.
    int sign_at_root(const FieldElem& x, RationalInterval iv) const {
        require_etale();
        Poly q = x.to_poly();
        poly_trim(q);
        if (poly_is_zero(q)) return 0;
        if (poly_deg(q) == 0) return sgn(q[0]);
        if (iv.lo == iv.hi) return sgn(poly_eval(q, iv.lo));
        Poly h = poly_squarefree_part(p_.to_poly());
        // x vanishes at the root iff gcd(p, q) does
        Poly g = poly_gcd(h, q);
        if (poly_deg(g) >= 1 && detail::has_root_in(g, iv)) return 0;
        auto chain = sturm_chain(h);
        Poly qs = poly_squarefree_part(q);
        auto qchain = sturm_chain(qs);
        while (poly_eval(q, iv.lo) == 0 || poly_eval(q, iv.hi) == 0 ||
               sturm_count(qchain, iv.lo, iv.hi) > 0) {
            iv = refine_root_interval(chain, iv);
            if (iv.lo == iv.hi) return sgn(poly_eval(q, iv.lo));
        }
        return sgn(poly_eval(q, (iv.lo + iv.hi) / 2));
    }

    std::vector<RationalInterval> real_roots() const {
        require_etale();
        return isolate_distinct_real_roots(p_.to_poly(), Rat(1));
    }

    bool is_totally_positive(const FieldElem& x) const {
        require_totally_real();
        for (const auto& iv : real_roots())
            if (sign_at_root(x, iv) <= 0) return false;
        return true;
    }

    // ----- fractional ideals ----------------------------------------------

    // Z-span of the given elements (caller guarantees an R-module when one is
    // required; ideal_from_gens closes under theta for arbitrary generators).
    FracIdeal lattice_from_elems(const std::vector<FieldElem>& gens) const {
        Int den = 1;
        for (const auto& g : gens)
            for (int i = 0; i < 3; ++i) den = lcm(den, rat_den(g.c[i]));
        std::vector<IntRow3> rows;
        for (const auto& g : gens) {
            IntRow3 r;
            for (int i = 0; i < 3; ++i) r[i] = rat_num(g.c[i] * den);
            rows.push_back(r);
        }
        FracIdeal out;
        out.rows = hnf_rows(std::move(rows));
        out.den = den;
        normalize(out);
        return out;
    }

    FracIdeal ideal_from_gens(const std::vector<FieldElem>& gens) const {
        std::vector<FieldElem> span;
        for (const auto& g : gens) {
            FieldElem cur = g;
            for (int k = 0; k < 3; ++k) {
                span.push_back(cur);
                cur = mul(cur, FieldElem::theta());
            }
        }
        return lattice_from_elems(span);
    }

    FracIdeal ring_ideal() const {
        return lattice_from_elems({FieldElem::from_rat(Rat(1)), FieldElem::theta(),
                                   mul(FieldElem::theta(), FieldElem::theta())});
    }

    FracIdeal ideal_mul(const FracIdeal& a, const FracIdeal& b) const {
        std::vector<FieldElem> prods;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) prods.push_back(mul(a.basis_elem(i), b.basis_elem(j)));
        return lattice_from_elems(prods);
    }

    FracIdeal ideal_scale(const FieldElem& x, const FracIdeal& a) const {
        std::vector<FieldElem> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(mul(x, a.basis_elem(i)));
        return lattice_from_elems(gens);
    }

    // a subset of b, exactly (HNF back-substitution over Z).
    bool ideal_subset(const FracIdeal& a, const FracIdeal& b) const {
        // compare b.den * (a lattice) against a.den * (b lattice)
        for (int i = 0; i < 3; ++i) {
            std::array<Int, 3> v = {a.rows[i][0] * b.den, a.rows[i][1] * b.den,
                                    a.rows[i][2] * b.den};
            for (int col = 0; col < 3; ++col) {
                // rows of b are upper triangular; column col is pinned by row col
                Int piv = b.rows[col][col] * a.den;
                if (v[col] % piv != 0) return false;
                Int q = v[col] / piv;
                for (int j = 0; j < 3; ++j) v[j] -= q * b.rows[col][j] * a.den;
            }
            if (v[0] != 0 || v[1] != 0 || v[2] != 0) return false;
        }
        return true;
    }

    bool is_r_module(const FracIdeal& a) const {
        FracIdeal th = ideal_scale(FieldElem::theta(), a);
        FracIdeal sum = lattice_from_elems({a.basis_elem(0), a.basis_elem(1), a.basis_elem(2),
                                            th.basis_elem(0), th.basis_elem(1),
                                            th.basis_elem(2)});
        return sum == a;
    }

    Rat ideal_norm(const FracIdeal& a) const {
        Rat d = Rat(a.rows[0][0]) * Rat(a.rows[1][1]) * Rat(a.rows[2][2]);
        Rat n = abs(d) / (Rat(a.den) * Rat(a.den) * Rat(a.den));
        return n;
    }

    // ----- inverse different ------------------------------------------------

    FracIdeal inverse_different() const {
        require_etale();
        // Gram matrix of the trace form on (1, theta, theta^2) via power traces.
        std::array<Rat, 5> t;
        t[0] = 3;
        t[1] = -Rat(p_.a2);
        t[2] = Rat(p_.a2) * Rat(p_.a2) - 2 * Rat(p_.a1);
        t[3] = -Rat(p_.a2) * t[2] - Rat(p_.a1) * t[1] - 3 * Rat(p_.a0);
        t[4] = -Rat(p_.a2) * t[3] - Rat(p_.a1) * t[2] - Rat(p_.a0) * t[1];
        Mat3 gram{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gram[i][j] = t[static_cast<size_t>(i + j)];
        Mat3 gi = inverse3(gram);
        std::vector<FieldElem> dual;
        for (int i = 0; i < 3; ++i) dual.push_back(FieldElem(gi[i]));
        FracIdeal d = lattice_from_elems(dual);
        // Consistency: the trace dual of a monogenic ring is (1/p'(theta)) R.
        FieldElem dp(Rat(p_.a1), 2 * Rat(p_.a2), Rat(3));
        FracIdeal alt = ideal_scale(inv(dp), ring_ideal());
        if (!(d == alt)) throw std::logic_error("trace dual disagrees with 1/p'(theta)");
        return d;
    }

    // ----- balanced pairs ---------------------------------------------------

    bool is_balanced(const FracIdeal& ideal, const FieldElem& mu) const {
        require_etale();
        Rat nmu = elem_norm(mu);
        if (nmu == 0) throw std::domain_error("zero divisor in etale algebra");
        Rat ni = ideal_norm(ideal);
        if (abs(nmu) * ni * ni * abs(Rat(disc_)) != 1) return false;
        FracIdeal mi2 = ideal_scale(mu, ideal_mul(ideal, ideal));
        return ideal_subset(mi2, inverse_different());
    }

    BalancedPair matrix_to_pair(const SymMat3& tmat) const {
        require_totally_real();
        // theta acts on M = Z^3 by -T.
        Mat3 negt{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) negt[i][j] = -Rat(tmat.entry(i, j));
        // cyclic vector search, expanding box
        Mat3 cmat{};
        bool found = false;
        for (long box = 2; box <= 6 && !found; ++box) {
            for (long e0 = -box; e0 <= box && !found; ++e0)
                for (long e1 = -box; e1 <= box && !found; ++e1)
                    for (long e2 = -box; e2 <= box && !found; ++e2) {
                        if (e0 == 0 && e1 == 0 && e2 == 0) continue;
                        Vec3 e = {Rat(e0), Rat(e1), Rat(e2)};
                        Vec3 te = mat_apply(negt, e);
                        Vec3 t2e = mat_apply(negt, te);
                        for (int i = 0; i < 3; ++i) {
                            cmat[i][0] = e[i];
                            cmat[i][1] = te[i];
                            cmat[i][2] = t2e[i];
                        }
                        if (det3(cmat) != 0) found = true;
                    }
        }
        if (!found) throw std::logic_error("no cyclic vector in search box");
        Mat3 cinv = inverse3(cmat);
        // standard basis of M expressed in E
        std::array<FieldElem, 3> x;
        for (int i = 0; i < 3; ++i) {
            Vec3 u{Rat(0), Rat(0), Rat(0)};
            u[i] = 1;
            x[i] = FieldElem(mat_apply(cinv, u));
        }
        FracIdeal ideal = lattice_from_elems({x[0], x[1], x[2]});
        if (!is_r_module(ideal)) throw std::logic_error("image lattice not an R-module");
        // mu from tr(mu x_i x_j) = delta_ij
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                FieldElem prod = mul(x[i], x[j]);
                std::vector<Rat> row;
                FieldElem pw = FieldElem::from_rat(Rat(1));
                for (int k = 0; k < 3; ++k) {
                    row.push_back(elem_trace(mul(pw, prod)));
                    pw = mul(pw, FieldElem::theta());
                }
                a.push_back(std::move(row));
                b.push_back(i == j ? Rat(1) : Rat(0));
            }
        auto sol = detail::solve_exact(std::move(a), std::move(b));
        if (!sol) throw std::logic_error("trace form system inconsistent");
        FieldElem mu((*sol)[0], (*sol)[1], (*sol)[2]);
        if (!is_totally_positive(mu)) throw std::logic_error("mu not totally positive");
        if (!is_balanced(ideal, mu)) throw std::logic_error("constructed pair not balanced");
        return BalancedPair{ideal, mu};
    }

    // Orthonormalizer of an integral positive definite unimodular Gram matrix:
    // U with U*G*U^t = I. LLL reduction brings such a form to the identity
    // (all successive minima are 1 and size reduction kills integral
    // off-diagonal entries); the norm-1 vector enumeration below remains as a
    // fallback on the reduced form.
    static std::array<IntRow3, 3> gram_orthonormalize(const std::array<IntRow3, 3>& g) {
        auto form = [&](const IntRow3& v, const IntRow3& w) -> Int {
            Int s = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += v[i] * g[i][j] * w[j];
            return s;
        };
        std::array<IntRow3, 3> u = {IntRow3{1, 0, 0}, IntRow3{0, 1, 0}, IntRow3{0, 0, 1}};
        auto mu_B = [&](std::array<Rat, 3>& B, std::array<std::array<Rat, 3>, 3>& mu) {
            // Gram-Schmidt data of the current basis u under the form g
            for (int i = 0; i < 3; ++i) {
                Rat b = Rat(form(u[i], u[i]));
                for (int j = 0; j < i; ++j) {
                    Rat proj = Rat(form(u[i], u[j]));
                    for (int k = 0; k < j; ++k) proj -= mu[i][k] * mu[j][k] * B[k];
                    mu[i][j] = proj / B[j];
                    b -= mu[i][j] * mu[i][j] * B[j];
                }
                B[i] = b;
            }
        };
        auto round_rat = [](const Rat& x) -> Int {
            Rat shifted = x + make_rat(Int(1), Int(2));
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rat_num(shifted).get_mpz_t(),
                       rat_den(shifted).get_mpz_t());
            return q;
        };
        std::array<Rat, 3> B{};
        std::array<std::array<Rat, 3>, 3> mu{};
        int k = 1;
        int guard = 0;
        while (k < 3 && ++guard < 10000) {
            mu_B(B, mu);
            for (int j = k - 1; j >= 0; --j) {
                Int q = round_rat(mu[k][j]);
                if (q != 0)
                    for (int c = 0; c < 3; ++c) u[k][c] -= q * u[j][c];
                mu_B(B, mu);
            }
            if (B[k] >= (make_rat(Int(3), Int(4)) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
                ++k;
            } else {
                std::swap(u[k], u[k - 1]);
                k = std::max(k - 1, 1);
            }
        }
        bool is_identity = true;
        for (int i = 0; i < 3 && is_identity; ++i)
            for (int j = 0; j < 3 && is_identity; ++j)
                if (form(u[i], u[j]) != (i == j ? 1 : 0)) is_identity = false;
        if (is_identity) {
            Int det = u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) -
                      u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0]) +
                      u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0]);
            if (det == -1)
                for (int c = 0; c < 3; ++c) u[2][c] = -u[2][c];
            // canonical choice: G = I comes back as the identity transform
            return u;
        }
        // reduced-form fallback: enumerate norm-1 vectors of G' = u G u^t
        std::array<IntRow3, 3> gp;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gp[i][j] = form(u[i], u[j]);
        auto w = gram_orthonormalize_enum(gp);
        std::array<IntRow3, 3> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int c = 0; c < 3; ++c) out[i][c] += w[i][j] * u[j][c];
        return out;
    }

    static std::array<IntRow3, 3> gram_orthonormalize_enum(const std::array<IntRow3, 3>& g) {
        auto quad = [&](const IntRow3& v, const IntRow3& w) -> Int {
            Int s = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += v[i] * g[i][j] * w[j];
            return s;
        };
        // coordinates of a norm-1 vector are bounded by sqrt(adj(G)_ii)
        auto adj_diag = [&](int i) -> Int {
            int a = (i + 1) % 3, b = (i + 2) % 3;
            return g[a][a] * g[b][b] - g[a][b] * g[b][a];
        };
        std::array<Int, 3> bound;
        for (int i = 0; i < 3; ++i) bound[i] = isqrt(adj_diag(i));
        std::vector<IntRow3> units;
        for (Int v0 = bound[0]; v0 >= -bound[0]; --v0)
            for (Int v1 = bound[1]; v1 >= -bound[1]; --v1)
                for (Int v2 = bound[2]; v2 >= -bound[2]; --v2) {
                    IntRow3 v = {v0, v1, v2};
                    if (quad(v, v) == 1) units.push_back(v);
                }
        // first pairwise-orthogonal triple in scan order; G = I yields U = I
        for (size_t i = 0; i < units.size(); ++i)
            for (size_t j = 0; j < units.size(); ++j) {
                if (j == i || quad(units[i], units[j]) != 0) continue;
                for (size_t k = 0; k < units.size(); ++k) {
                    if (k == i || k == j) continue;
                    if (quad(units[i], units[k]) != 0 || quad(units[j], units[k]) != 0)
                        continue;
                    std::array<IntRow3, 3> u = {units[i], units[j], units[k]};
                    Int det = u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) -
                              u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0]) +
                              u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0]);
                    if (det == -1)
                        for (int c = 0; c < 3; ++c) u[2][c] = -u[2][c];
                    return u;
                }
            }
        throw std::invalid_argument("pair not balanced");
    }

    SymMat3 pair_to_matrix(const BalancedPair& pair) const {
        require_totally_real();
        std::array<FieldElem, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = pair.ideal.basis_elem(i);
        std::array<IntRow3, 3> gram;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat gij = elem_trace(mul(pair.mu, mul(v[i], v[j])));
                if (!is_integer(gij)) throw std::invalid_argument("pair not balanced");
                gram[i][j] = rat_num(gij);
            }
        // positive definite and unimodular, else not balanced
        Int d1 = gram[0][0];
        Int d2 = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
        Int d3 = gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1]) -
                 gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0]) +
                 gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);
        if (d1 <= 0 || d2 <= 0 || d3 != 1) throw std::invalid_argument("pair not balanced");
        auto u = gram_orthonormalize(gram);
        std::array<FieldElem, 3> w;
        for (int i = 0; i < 3; ++i) {
            w[i] = FieldElem();
            for (int j = 0; j < 3; ++j)
                w[i] = add(w[i], scale(Rat(u[i][j]), v[j]));
        }
        FieldElem mtheta = neg(FieldElem::theta());
        std::array<std::array<Int, 3>, 3> tm;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat e = elem_trace(mul(pair.mu, mul(w[i], mul(mtheta, w[j]))));
                if (!is_integer(e)) throw std::logic_error("non-integral matrix entry");
                tm[i][j] = rat_num(e);
            }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (tm[i][j] != tm[j][i]) throw std::logic_error("matrix not symmetric");
        SymMat3 out{tm[0][0], tm[1][1], tm[2][2], tm[1][2], tm[0][2], tm[0][1]};
        MonicCubic cp{trace(out), rat_num(trace(HalfSymMat3::from(sharp(out)))), det(out)};
        if (!(cp == p_)) throw std::logic_error("wrong characteristic polynomial");
        return out;
    }

    // ----- square roots -----------------------------------------------------

    struct SqrtResult {
        Tri status = Tri::no;
        std::vector<FieldElem> roots;  // all square roots up to global sign
    };

    SqrtResult sqrt_in_E(const FieldElem& lambda) const {
        require_totally_real();
        if (elem_norm(lambda) == 0) throw std::domain_error("zero divisor in etale algebra");
        // Exact decision (complete on squarefree cubics); the numeric
        // reconstruction below remains as a fallback and can report
        // undecided-at-cap.
        if (auto exact = sqrt_exact(lambda)) return *exact;
        return sqrt_numeric(lambda);
    }

private:
    // ---- exact square-root decision ----------------------------------------

    // If beta^2 = lambda with char poly m(t) = t^3 + b t^2 + c t + d, then the
    // char poly g of lambda satisfies g(t^2) = -m(t)m(-t), which pins
    // d^2 = N(lambda), c = (g2 + b^2)/2 and makes b a rational root of
    // b^4 + 2 g2 b^2 - 8 d b + (g2^2 - 4 g1). Conversely each solution gives
    // the candidate beta = -(b lambda + d)/(lambda + c), verified exactly.
    std::optional<SqrtResult> sqrt_exact(const FieldElem& lambda) const {
        auto proots = detail::rational_roots(p_.to_poly());
        if (proots.empty()) return sqrt_exact_field(lambda);
        return sqrt_exact_split(lambda, proots.front());
    }

    std::optional<SqrtResult> sqrt_exact_field(const FieldElem& lambda) const {
        if (lambda.c[1] == 0 && lambda.c[2] == 0) {
            Rat r;
            if (detail::rat_sqrt(lambda.c[0], r))
                return SqrtResult{Tri::yes, {FieldElem::from_rat(r)}};
            return SqrtResult{Tri::no, {}};  // a cubic field has no quadratic subfield
        }
        Mat3 m = regular_rep(lambda);
        Rat tr = m[0][0] + m[1][1] + m[2][2];
        Mat3 m2 = mat_mul(m, m);
        Rat tr2 = m2[0][0] + m2[1][1] + m2[2][2];
        Rat g2 = -tr, g1 = (tr * tr - tr2) / 2, g0 = -det3(m);
        Rat nd;
        if (!detail::rat_sqrt(-g0, nd)) return SqrtResult{Tri::no, {}};
        SqrtResult res{Tri::no, {}};
        for (int s : {+1, -1}) {
            if (s == -1 && nd == 0) break;
            Rat d = s * nd;
            Poly quart = {g2 * g2 - 4 * g1, -8 * d, 2 * g2, Rat(0), Rat(1)};
            for (const Rat& b : detail::rational_roots(quart)) {
                Rat c = (g2 + b * b) / 2;
                FieldElem denom = add(lambda, FieldElem::from_rat(c));
                if (elem_norm(denom) == 0) continue;  // lambda irrational: unreachable
                FieldElem beta =
                    neg(div(add(scale(b, lambda), FieldElem::from_rat(d)), denom));
                if (mul(beta, beta) == lambda) push_root(res, beta);
            }
        }
        return res;
    }

    std::optional<SqrtResult> sqrt_exact_split(const FieldElem& lambda, const Rat& r) const {
        // p = (t - r) q(t); idempotent split E = Q x Q[t]/(q)
        Poly q = poly_quot(p_.to_poly(), Poly{-r, Rat(1)});
        if (poly_deg(q) != 2) return std::nullopt;
        Rat q1 = q[1], q0 = q[0];
        Rat qr = poly_eval(q, r);
        if (qr == 0) return std::nullopt;  // p not squarefree
        FieldElem e1 = scale(1 / qr, FieldElem(q0, q1, Rat(1)));
        FieldElem e2 = sub(FieldElem::from_rat(Rat(1)), e1);
        // rational component of lambda is its value at theta = r
        Rat sval = poly_eval(lambda.to_poly(), r);
        Rat ssq;
        if (!detail::rat_sqrt(sval, ssq)) return SqrtResult{Tri::no, {}};
        // quadratic component: lambda e2 = u e2 + v theta e2
        FieldElem le2 = mul(lambda, e2);
        FieldElem te2 = mul(FieldElem::theta(), e2);
        std::vector<std::vector<Rat>> a(3, std::vector<Rat>(2));
        std::vector<Rat> bvec(3);
        for (int i = 0; i < 3; ++i) {
            a[i][0] = e2.c[i];
            a[i][1] = te2.c[i];
            bvec[i] = le2.c[i];
        }
        auto uv = detail::solve_exact(std::move(a), std::move(bvec));
        if (!uv) return std::nullopt;
        Rat u = (*uv)[0], v = (*uv)[1];
        // beta2 = x e2 + y theta e2 needs x^2 - q0 y^2 = u and 2xy - q1 y^2 = v;
        // with Y = y^2: (q1^2 - 4 q0) Y^2 + (2 q1 v - 4u) Y + v^2 = 0, plus Y = 0.
        std::vector<std::pair<Rat, Rat>> comp;  // (x, y)
        if (v == 0) {
            Rat xs;
            if (detail::rat_sqrt(u, xs)) comp.emplace_back(xs, Rat(0));
        }
        Rat qd = q1 * q1 - 4 * q0;  // disc(q) != 0 since p is squarefree
        if (qd != 0) {
            Poly quadY = {v * v, 2 * q1 * v - 4 * u, qd};
            for (const Rat& Y : detail::rational_roots(quadY)) {
                if (Y <= 0) continue;
                Rat y;
                if (!detail::rat_sqrt(Y, y)) continue;
                Rat x = (v + q1 * Y) / (2 * y);
                comp.emplace_back(x, y);
            }
        }
        SqrtResult res{Tri::no, {}};
        for (const auto& [x, y] : comp)
            for (int s1 : {+1, -1}) {
                if (s1 == -1 && ssq == 0) break;
                FieldElem beta = add(scale(s1 * ssq, e1),
                                     add(scale(x, e2), scale(y, te2)));
                if (mul(beta, beta) == lambda) push_root(res, beta);
            }
        return res;
    }

    static void push_root(SqrtResult& res, const FieldElem& beta) {
        res.status = Tri::yes;
        for (const auto& r : res.roots) {
            FieldElem nb(-beta.c[0], -beta.c[1], -beta.c[2]);
            if (r == beta || r == nb) return;
        }
        res.roots.push_back(beta);
    }

    // ---- numeric fallback (embedding refinement + rational reconstruction) --

    SqrtResult sqrt_numeric(const FieldElem& lambda) const {
        auto ivs = real_roots();
        for (const auto& iv : ivs)
            if (sign_at_root(lambda, iv) < 0) return {Tri::no, {}};
        Poly h = poly_squarefree_part(p_.to_poly());
        auto chain = sturm_chain(h);
        Poly lq = lambda.to_poly();
        SqrtResult res;
        for (long prec = 256; prec <= 4096; prec *= 2) {
            // refine roots to ~prec bits
            std::vector<Rat> approx;
            for (auto iv : ivs) {
                Rat goal = Rat(1);
                for (long b = 0; b < prec + 16; ++b) goal /= 2;
                while (iv.width() > goal) iv = refine_root_interval(chain, iv);
                approx.push_back((iv.lo + iv.hi) / 2);
            }
            const auto fprec = static_cast<mp_bitcnt_t>(2 * prec + 64);
            std::array<mpf_class, 3> alpha, lam, rt;
            for (int i = 0; i < 3; ++i) {
                alpha[i] = mpf_class(approx[static_cast<size_t>(i)], fprec);
                mpf_class lv(poly_eval(lq, approx[static_cast<size_t>(i)]), fprec);
                lam[i] = lv;
                if (lam[i] <= 0) {
                    // embedding numerically ~0 was ruled out above; resolve sign exactly
                    int s = sign_at_root(lambda, ivs[static_cast<size_t>(i)]);
                    if (s < 0) return {Tri::no, {}};
                    lam[i] = 0;
                }
                rt[i] = sqrt(lam[i]);
            }
            Int den_bound = Int(1) << static_cast<unsigned>(prec / 3);
            for (int mask = 0; mask < 4; ++mask) {
                std::array<mpf_class, 3> s = {rt[0], (mask & 1) ? -rt[1] : rt[1],
                                              (mask & 2) ? -rt[2] : rt[2]};
                // Vandermonde solve by Lagrange interpolation through
                // (alpha_i, s_i)
                std::array<mpf_class, 3> coef = {mpf_class(0, fprec), mpf_class(0, fprec),
                                                 mpf_class(0, fprec)};
                bool degenerate = false;
                for (int i = 0; i < 3 && !degenerate; ++i) {
                    int a = (i + 1) % 3, b = (i + 2) % 3;
                    mpf_class denom = (alpha[i] - alpha[a]) * (alpha[i] - alpha[b]);
                    if (denom == 0) {
                        degenerate = true;
                        break;
                    }
                    mpf_class f = s[i] / denom;
                    // f * (x - alpha_a)(x - alpha_b)
                    coef[0] += f * alpha[a] * alpha[b];
                    coef[1] += -f * (alpha[a] + alpha[b]);
                    coef[2] += f;
                }
                if (degenerate) continue;
                Vec3 cand;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    ok = rational_reconstruct(coef[i], den_bound, cand[i]);
                if (!ok) continue;
                FieldElem beta(cand);
                if (mul(beta, beta) == lambda) {
                    bool dup = false;
                    for (const auto& r : res.roots)
                        if (r == beta || neg(r) == beta) dup = true;
                    if (!dup) res.roots.push_back(beta);
                }
            }
            if (!res.roots.empty()) {
                res.status = Tri::yes;
                return res;
            }
        }
        return {Tri::undecided, {}};
    }

public:
    Tri pairs_equivalent(const BalancedPair& p1, const BalancedPair& p2) const {
        FieldElem lambda = div(p1.mu, p2.mu);
        SqrtResult sq = sqrt_in_E(lambda);
        if (sq.status == Tri::no) return Tri::no;
        if (sq.status == Tri::undecided) return Tri::undecided;
        // (I1, mu1) ~ (beta I1, beta^-2 mu1); matching mu2 forces beta^2 = mu1/mu2
        for (const auto& beta : sq.roots) {
            if (ideal_scale(beta, p1.ideal) == p2.ideal) return Tri::yes;
            if (ideal_scale(neg(beta), p1.ideal) == p2.ideal) return Tri::yes;
        }
        return Tri::no;
    }

    // ----- class counts -------------------------------------------------------

    struct QRClasses {
        long count = 0;
        int delta = 0;
        std::vector<SymMat3> reps;
        std::vector<BalancedPair> pairs;
    };

    QRClasses classes_QR(bool validate = true) const {
        require_totally_real();
        QpResult qp = orbit_decompose(enumerate_qp(p_));
        QRClasses out;
        out.count = static_cast<long>(qp.orbits.size());
        out.delta = qp.total > 0 ? 1 : 0;
        for (const auto& o : qp.orbits) {
            out.reps.push_back(o.representative);
            out.pairs.push_back(matrix_to_pair(o.representative));
        }
        if (validate) {
            for (size_t i = 0; i < out.pairs.size(); ++i)
                for (size_t j = i + 1; j < out.pairs.size(); ++j)
                    if (pairs_equivalent(out.pairs[i], out.pairs[j]) != Tri::no)
                        throw std::logic_error("distinct orbits gave equivalent pairs");
        }
        return out;
    }

    // ----- maximality -----------------------------------------------------------

    bool is_maximal() const {
        require_etale();
        for (const auto& [q, e] : factorize(int_abs(disc_))) {
            if (e < 2) continue;
            if (!dedekind_maximal_at(q)) return false;
        }
        return true;
    }

private:
    MonicCubic p_;
    Int disc_;

    void require_etale() const {
        if (disc_ == 0) throw std::domain_error("ring is not etale (disc = 0)");
    }
    void require_totally_real() const {
        require_etale();
        if (!is_totally_real(p_)) throw std::domain_error("polynomial is not totally real");
    }

    static void normalize(FracIdeal& id) {
        Int g = id.den;
        for (const auto& r : id.rows)
            for (const auto& v : r) g = gcd(g, v);
        if (g > 1) {
            id.den /= g;
            for (auto& r : id.rows)
                for (auto& v : r) v /= g;
        }
    }

    // Best rational approximation with bounded denominator (continued
    // fractions); returns false when the tail suggests no stable value.
    static bool rational_reconstruct(const mpf_class& x, const Int& den_bound, Rat& out) {
        Rat v(x);  // exact conversion
        Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        Rat rem = v;
        for (int iter = 0; iter < 20000; ++iter) {
            Int a;
            mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
            Int p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > den_bound) break;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            Rat frac = rem - Rat(a);
            if (frac == 0) break;
            rem = 1 / frac;
        }
        if (q1 == 0) return false;
        out = make_rat(p1, q1);
        return true;
    }

    // --- Dedekind's criterion at q --------------------------------------------

    using ModPoly = std::vector<Int>;  // coefficients in [0, q), low to high

    static ModPoly mp_trim(ModPoly f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }
    static ModPoly mp_mul(const ModPoly& f, const ModPoly& g, const Int& q) {
        if (f.empty() || g.empty()) return {};
        ModPoly r(f.size() + g.size() - 1, Int(0));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % q;
        return mp_trim(std::move(r));
    }
    // long division by a monic divisor
    static std::pair<ModPoly, ModPoly> mp_divmod(ModPoly f, const ModPoly& g, const Int& q) {
        if (g.empty() || g.back() != 1) throw std::logic_error("mp_divmod needs monic divisor");
        if (f.size() < g.size()) return {{}, mp_trim(std::move(f))};
        ModPoly quot(f.size() - g.size() + 1, Int(0));
        for (size_t shift = quot.size(); shift-- > 0;) {
            Int c = f[shift + g.size() - 1] % q;
            quot[shift] = mod_pos(c, q);
            for (size_t i = 0; i < g.size(); ++i)
                f[shift + i] = mod_pos(f[shift + i] - c * g[i], q);
        }
        return {mp_trim(std::move(quot)), mp_trim(std::move(f))};
    }
    static ModPoly mp_monic(ModPoly f, const Int& q) {
        f = mp_trim(std::move(f));
        if (f.empty()) return f;
        Int inv = mod_inverse(f.back(), q);
        for (auto& c : f) c = (c * inv) % q;
        return f;
    }
    static ModPoly mp_gcd(ModPoly a, ModPoly b, const Int& q) {
        a = mp_trim(std::move(a));
        b = mp_trim(std::move(b));
        while (!b.empty()) {
            ModPoly r = mp_divmod(a, mp_monic(b, q), q).second;
            a = std::move(b);
            b = std::move(r);
        }
        return mp_monic(std::move(a), q);
    }
    static Int mp_eval(const ModPoly& f, const Int& x, const Int& q) {
        Int v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % q;
        return v;
    }

    bool dedekind_maximal_at(const Int& q) const {
        // p mod q
        ModPoly pb = {mod_pos(p_.a0, q), mod_pos(p_.a1, q), mod_pos(p_.a2, q), Int(1)};
        pb = mp_trim(std::move(pb));
        // factor the cubic completely: pull out roots, leftover is irreducible
        ModPoly rem = pb;
        std::vector<Int> roots;
        for (Int r = 0; r < q; ++r)
            if (mp_eval(pb, r, q) == 0) roots.push_back(r);
        // radical = product of distinct linear factors times the rootless
        // leftover (which, having degree <= 3 and no roots, is irreducible)
        ModPoly radical = {Int(1)};
        for (const Int& r : roots) {
            ModPoly lin = {mod_pos(-r, q), Int(1)};
            radical = mp_mul(radical, lin, q);
            while (true) {
                auto [quo, rm] = mp_divmod(rem, lin, q);
                if (!rm.empty()) break;
                rem = std::move(quo);
            }
        }
        if (rem.size() >= 2) radical = mp_mul(radical, mp_monic(rem, q), q);
        ModPoly gbar = mp_monic(radical, q);
        ModPoly hbar = mp_divmod(pb, gbar, q).first;
        hbar = mp_monic(hbar, q);
        // lift monic g, h to Z[t] with coefficients in [0, q)
        auto lift_mul_minus_p = [&](const ModPoly& gz, const ModPoly& hz) {
            // (g*h - p)/q over Z
            std::vector<Int> prod(gz.size() + hz.size() - 1, Int(0));
            for (size_t i = 0; i < gz.size(); ++i)
                for (size_t j = 0; j < hz.size(); ++j) prod[i + j] += gz[i] * hz[j];
            std::array<Int, 4> pc = {p_.a0, p_.a1, p_.a2, Int(1)};
            prod.resize(4, Int(0));
            ModPoly f(4);
            for (size_t i = 0; i < 4; ++i) {
                Int diff = prod[i] - pc[i];
                if (diff % q != 0) throw std::logic_error("lift mismatch in Dedekind test");
                f[i] = mod_pos(diff / q, q);
            }
            return mp_trim(std::move(f));
        };
        ModPoly fbar = lift_mul_minus_p(gbar, hbar);
        ModPoly g1 = mp_gcd(gbar, hbar, q);
        ModPoly g2 = mp_gcd(g1, fbar, q);
        return g2.size() == 1;  // gcd = 1
    }
};

// (1, sqrt(l)) / (r, omega) generator tests for Z x O_K.
enum class QuadraticCase { sqrt_case, half_case };

struct MonogenicWitness {
    Int r;
    MonicCubic charpoly;
};

inline std::optional<MonogenicWitness> quadratic_monogenic_witness(const Int& ell,
                                                                   QuadraticCase c) {
    if (c == QuadraticCase::sqrt_case) {
        // l = r^2 + 1 or l = r^2 - 1; generator (r, sqrt(l)), charpoly (t-r)(t^2-l)
        for (int s : {+1, -1}) {
            Int target = ell - s;  // r^2
            if (target < 0 || !is_perfect_square(target)) continue;
            Int r = isqrt(target);
            return MonogenicWitness{r, MonicCubic{-r, -ell, r * ell}};
        }
        return std::nullopt;
    }
    // r(r-1) = l + 1 or l - 1; generator (r, omega), charpoly (t-r)(t^2-t-l)
    for (int s : {+1, -1}) {
        Int m = ell + s;  // r^2 - r - m = 0
        Int d = 1 + 4 * m;
        if (d < 0 || !is_perfect_square(d)) continue;
        Int sq = isqrt(d);
        if ((1 + sq) % 2 != 0) continue;
        Int r = (1 + sq) / 2;
        return MonogenicWitness{r, MonicCubic{-(r + 1), r - ell, r * ell}};
    }
    return std::nullopt;
}

}  // namespace g2theta
