#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2theta/rational.hpp"

namespace g2theta {

using Root4 = std::array<Rat, 4>;   // point of the Euclidean model, exact
using Mat4 = std::array<Root4, 4>;  // orthogonal map, rows act on column vectors

inline Rat inner(const Root4& a, const Root4& b) {
    Rat s = 0;
    for (int i = 0; i < 4; ++i) s += a[i] * b[i];
    return s;
}

inline Root4 r4_add(const Root4& a, const Root4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Root4 r4_sub(const Root4& a, const Root4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Root4 r4_scale(const Rat& s, const Root4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline Root4 r4_neg(const Root4& a) { return r4_scale(Rat(-1), a); }

inline Root4 mat4_apply(const Mat4& m, const Root4& v) {
    Root4 r{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

// The 48 roots {±e_i} ∪ {±e_i ± e_j} ∪ {(±e1±e2±e3±e4)/2}, with simple roots
//   a1 = e2−e3, a2 = e3−e4 (long, norm 2), a3 = e4, a4 = (e1−e2−e3−e4)/2
// (short, norm 1): the diagram reads long—long⇒short—short left to right.
class RootSystemF4 {
public:
    RootSystemF4() {
        auto e = [](int i) {
            Root4 v{Rat(0), Rat(0), Rat(0), Rat(0)};
            v[i] = 1;
            return v;
        };
        simple_[0] = r4_sub(e(1), e(2));
        simple_[1] = r4_sub(e(2), e(3));
        simple_[2] = e(3);
        simple_[3] = r4_scale(make_rat(Int(1), Int(2)),
                              r4_sub(e(0), r4_add(e(1), r4_add(e(2), e(3)))));
        for (int i = 0; i < 4; ++i)
            for (int si : {+1, -1}) roots_.push_back(r4_scale(Rat(si), e(i)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int si : {+1, -1})
                    for (int sj : {+1, -1})
                        roots_.push_back(r4_add(r4_scale(Rat(si), e(i)),
                                                r4_scale(Rat(sj), e(j))));
        Rat half = make_rat(Int(1), Int(2));
        for (int mask = 0; mask < 16; ++mask) {
            Root4 v;
            for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -half : half;
            roots_.push_back(v);
        }
        std::sort(roots_.begin(), roots_.end());
        if (roots_.size() != 48) throw std::logic_error("bad root count");
        // simple-root coefficients of each root (a 4x4 exact solve per root)
        for (const auto& r : roots_) coeffs_.push_back(expand(r));
    }

    const std::vector<Root4>& roots() const { return roots_; }
    const std::array<Root4, 4>& simple() const { return simple_; }

    bool is_root(const Root4& v) const {
        return std::binary_search(roots_.begin(), roots_.end(), v);
    }

    bool is_long(const Root4& r) const { return inner(r, r) == 2; }

    // coefficients m_i with r = sum m_i * alpha_i (integers for actual roots)
    Root4 coeffs_of(const Root4& r) const {
        auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
        if (it == roots_.end() || !(*it == r)) throw std::invalid_argument("not a root");
        return coeffs_[static_cast<size_t>(it - roots_.begin())];
    }

    bool is_positive(const Root4& r) const {
        Root4 c = coeffs_of(r);
        for (int i = 0; i < 4; ++i)
            if (c[i] > 0) return true;
            else if (c[i] < 0) return false;
        return false;
    }

    std::vector<Root4> positive_roots() const {
        std::vector<Root4> out;
        for (const auto& r : roots_)
            if (is_positive(r)) out.push_back(r);
        return out;
    }

    // multiplier exponents: 2 on long simple roots, 1 on short ones
    int m_value(int i) const { return (i == 0 || i == 1) ? 2 : 1; }

    // ----- named positive subsets (by simple-root coefficients) --------------

    // Levi of the Siegel parabolic of H_J: {a3, a4, a3+a4}
    std::vector<Root4> phi_MR_plus() const {
        return {simple_[2], simple_[3], r4_add(simple_[2], simple_[3])};
    }
    // Heisenberg unipotent radical: m1 >= 1
    std::vector<Root4> phi_N_plus() const { return select([](const Root4& c) { return c[0] >= 1; }); }
    // Siegel unipotent: m1 = 0, m2 = 1
    std::vector<Root4> phi_NS_plus() const {
        return select([](const Root4& c) { return c[0] == 0 && c[1] == 1; });
    }
    // both m1, m2 > 0
    std::vector<Root4> phi_11_plus() const {
        return select([](const Root4& c) { return c[0] > 0 && c[1] > 0; });
    }
    std::vector<Root4> phi_UR_plus() const {
        auto a = phi_N_plus(), b = phi_NS_plus();
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        return a;
    }
    // unipotent of the maximal parabolic attached to a2: m2 >= 1
    std::vector<Root4> phi_UQ_plus() const {
        return select([](const Root4& c) { return c[1] >= 1; });
    }

    // ----- closure lemmas ----------------------------------------------------

    struct ClosureCheck {
        std::string id;
        std::string statement;
        bool verified = true;
        std::vector<std::array<Root4, 2>> counterexamples;  // (alpha-like, beta-like)
    };

    // a,b range over [1, height of the highest root]
    static constexpr int kCoefBound = 11;

    std::vector<ClosureCheck> check_closure_lemmas() const {
        std::vector<ClosureCheck> out;
        auto neg_of = [&](const std::vector<Root4>& v) {
            std::vector<Root4> r;
            for (const auto& x : v) r.push_back(r4_neg(x));
            return r;
        };
        // (i): beta in Phi^-_{U_R}, alpha in Phi_{M_R}, gamma = a*alpha + b*beta
        // a root implies gamma in Phi^-_{U_R}
        {
            ClosureCheck c{"levi-preserves-lower",
                           "a*alpha + b*beta stays in the lower unipotent block", true, {}};
            auto ur_minus = neg_of(phi_UR_plus());
            std::vector<Root4> mr = phi_MR_plus();
            for (const auto& m : phi_MR_plus()) mr.push_back(r4_neg(m));
            for (const auto& beta : ur_minus)
                for (const auto& alpha : mr)
                    for (int a = 1; a <= kCoefBound; ++a)
                        for (int b = 1; b <= kCoefBound; ++b) {
                            Root4 g = r4_add(r4_scale(Rat(a), alpha), r4_scale(Rat(b), beta));
                            if (!is_root(g)) continue;
                            bool in = std::find(ur_minus.begin(), ur_minus.end(), g) !=
                                      ur_minus.end();
                            if (!in) {
                                c.verified = false;
                                c.counterexamples.push_back({alpha, beta});
                            }
                        }
            out.push_back(std::move(c));
        }
        // (ii): i in {1,2}, alpha in Phi^+_{U_R}, alpha != alpha_i, gamma =
        // a*alpha_i - b*alpha a root implies gamma negative
        {
            ClosureCheck c{"simple-minus-upper-negative",
                           "a*alpha_i - b*alpha is negative when it is a root", true, {}};
            for (int i : {0, 1})
                for (const auto& alpha : phi_UR_plus()) {
                    if (alpha == simple_[static_cast<size_t>(i)]) continue;
                    for (int a = 1; a <= kCoefBound; ++a)
                        for (int b = 1; b <= kCoefBound; ++b) {
                            Root4 g = r4_sub(r4_scale(Rat(a), simple_[static_cast<size_t>(i)]),
                                             r4_scale(Rat(b), alpha));
                            if (!is_root(g)) continue;
                            if (is_positive(g)) {
                                c.verified = false;
                                c.counterexamples.push_back(
                                    {simple_[static_cast<size_t>(i)], alpha});
                            }
                        }
                }
            out.push_back(std::move(c));
        }
        // (iii): alpha in Phi^+_{N_S}: a*alpha_1 - b*alpha is never a root
        {
            ClosureCheck c{"alpha1-siegel-no-root",
                           "a*alpha_1 - b*alpha is never a root for Siegel-block alpha", true, {}};
            for (const auto& alpha : phi_NS_plus())
                for (int a = 1; a <= kCoefBound; ++a)
                    for (int b = 1; b <= kCoefBound; ++b) {
                        Root4 g = r4_sub(r4_scale(Rat(a), simple_[0]), r4_scale(Rat(b), alpha));
                        if (is_root(g)) {
                            c.verified = false;
                            c.counterexamples.push_back({simple_[0], alpha});
                        }
                    }
            out.push_back(std::move(c));
        }
        // (iv): beta in Phi^+_{N_S}, beta != alpha_2: gamma = a*beta - b*alpha_2
        // a root implies gamma positive
        {
            ClosureCheck c{"siegel-minus-alpha2-positive",
                           "a*beta - b*alpha_2 is positive when it is a root", true, {}};
            for (const auto& beta : phi_NS_plus()) {
                if (beta == simple_[1]) continue;
                for (int a = 1; a <= kCoefBound; ++a)
                    for (int b = 1; b <= kCoefBound; ++b) {
                        Root4 g = r4_sub(r4_scale(Rat(a), beta), r4_scale(Rat(b), simple_[1]));
                        if (!is_root(g)) continue;
                        if (!is_positive(g)) {
                            c.verified = false;
                            c.counterexamples.push_back({beta, simple_[1]});
                        }
                    }
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    // ----- Weyl group ---------------------------------------------------------

    static Mat4 reflection(const Root4& alpha) {
        Mat4 m = mat4_identity();
        Rat nn = inner(alpha, alpha);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                // s(x) = x - 2 (x, a)/(a,a) a, column-action matrix
                m[i][j] -= 2 * alpha[i] * alpha[j] / nn;
            }
        return m;
    }

    const std::vector<Mat4>& weyl_group() const {
        if (weyl_.empty()) {
            std::vector<Mat4> gens;
            for (const auto& s : simple_) gens.push_back(reflection(s));
            std::vector<Mat4> work = {mat4_identity()};
            std::vector<Mat4> seen = work;  // kept sorted
            for (size_t i = 0; i < work.size(); ++i) {
                Mat4 cur = work[i];
                for (const auto& g : gens) {
                    Mat4 h = mat4_mul(g, cur);
                    auto it = std::lower_bound(seen.begin(), seen.end(), h);
                    if (it == seen.end() || !(*it == h)) {
                        seen.insert(it, h);
                        work.push_back(h);
                    }
                }
            }
            weyl_ = std::move(seen);
        }
        return weyl_;
    }

    // ----- weights -------------------------------------------------------------

    Root4 coroot(const Root4& alpha) const {
        return r4_scale(2 / inner(alpha, alpha), alpha);
    }

    // fundamental weights: <w_i, a_j^vee> = delta_ij
    std::array<Root4, 4> fundamental_weights() const {
        // solve the 4x4 system with rows a_j^vee
        Mat4 a{};
        for (int j = 0; j < 4; ++j) a[j] = coroot(simple_[static_cast<size_t>(j)]);
        std::array<Root4, 4> w{};
        for (int i = 0; i < 4; ++i) {
            // Gaussian elimination on [a | e_i]
            Mat4 m = a;
            Root4 rhs{Rat(0), Rat(0), Rat(0), Rat(0)};
            rhs[i] = 1;
            for (int col = 0; col < 4; ++col) {
                int piv = col;
                while (piv < 4 && m[piv][col] == 0) ++piv;
                if (piv == 4) throw std::logic_error("coroot matrix singular");
                std::swap(m[piv], m[col]);
                std::swap(rhs[piv], rhs[col]);
                Rat d = m[col][col];
                for (int k = 0; k < 4; ++k) m[col][k] /= d;
                rhs[col] /= d;
                for (int r = 0; r < 4; ++r) {
                    if (r == col || m[r][col] == 0) continue;
                    Rat f = m[r][col];
                    for (int k = 0; k < 4; ++k) m[r][k] -= f * m[col][k];
                    rhs[r] -= f * rhs[col];
                }
            }
            w[i] = rhs;
        }
        return w;
    }

    Root4 rho() const {
        auto w = fundamental_weights();
        return r4_add(r4_add(w[0], w[1]), r4_add(w[2], w[3]));
    }

    // rho - (omega_1 + omega_2)/2, the exceptional exponent
    Root4 nu_exc() const {
        auto w = fundamental_weights();
        return r4_sub(rho(), r4_scale(make_rat(Int(1), Int(2)), r4_add(w[0], w[1])));
    }

    // dot action: w . lambda = w(lambda + rho) - rho
    Root4 dot(const Mat4& w, const Root4& lambda) const {
        Root4 r = rho();
        return r4_sub(mat4_apply(w, r4_add(lambda, r)), r);
    }

    // all w with w . (-(3/2) omega_1) = -(omega_1 + omega_2)/2, sorted
    std::vector<Mat4> find_dot_witnesses() const {
        auto w = fundamental_weights();
        Root4 lam = r4_scale(make_rat(Int(-3), Int(2)), w[0]);
        Root4 target = r4_scale(make_rat(Int(-1), Int(2)), r4_add(w[0], w[1]));
        std::vector<Mat4> out;
        for (const auto& g : weyl_group())
            if (dot(g, lam) == target) out.push_back(g);
        std::sort(out.begin(), out.end());
        return out;
    }

    // ----- subsystems -----------------------------------------------------------

    // A2 generated by the short simple roots {a3, a4}
    std::vector<Root4> a2_subsystem() const {
        std::vector<Root4> out;
        for (const auto& r : roots_) {
            Root4 c = coeffs_of(r);
            if (c[0] == 0 && c[1] == 0) out.push_back(r);
        }
        return out;
    }

    // rank of the smallest exceptional Chevalley lattice (8 + 3 + 3)
    static int g2_lattice_rank() { return 14; }

private:
    std::array<Root4, 4> simple_{};
    std::vector<Root4> roots_;
    std::vector<Root4> coeffs_;
    mutable std::vector<Mat4> weyl_;

    template <class Pred>
    std::vector<Root4> select(Pred pred) const {
        std::vector<Root4> out;
        for (size_t i = 0; i < roots_.size(); ++i) {
            const Root4& c = coeffs_[i];
            bool nonneg = c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && c[3] >= 0;
            if (nonneg && pred(c) && !(c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0))
                out.push_back(roots_[i]);
        }
        return out;
    }

    Root4 expand(const Root4& r) const {
        // solve sum_j m_j * simple_j = r
        Mat4 m{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = simple_[static_cast<size_t>(j)][i];
        Root4 rhs = r;
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            while (piv < 4 && m[piv][col] == 0) ++piv;
            if (piv == 4) throw std::logic_error("simple roots degenerate");
            std::swap(m[piv], m[col]);
            std::swap(rhs[piv], rhs[col]);
            Rat d = m[col][col];
            for (int k = 0; k < 4; ++k) m[col][k] /= d;
            rhs[col] /= d;
            for (int rr = 0; rr < 4; ++rr) {
                if (rr == col || m[rr][col] == 0) continue;
                Rat f = m[rr][col];
                for (int k = 0; k < 4; ++k) m[rr][k] -= f * m[col][k];
                rhs[rr] -= f * rhs[col];
            }
        }
        return rhs;
    }
};

}  // namespace g2theta
