/*
   Copyright 2026 the wsigma authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WSIGMA_KLEINFORMS_HPP
#define WSIGMA_KLEINFORMS_HPP

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "wsigma/curve.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/expansion.hpp"
#include "wsigma/laurent.hpp"
#include "wsigma/rational.hpp"
#include "wsigma/semigroup.hpp"

namespace wsigma {

/*
 * Two-point kernel: h~(x,y;y') = sum_i Ups_i(x,y) y'^i from the exact
 * division (f(x,y) - f(x,y')) / (y - y'); h = h~(x,y;y) = f_y.
 */
struct TwoPointKernel {
    std::vector<XYPoly> upsilon;  // Ups_0 .. Ups_{r-1}
    XYPoly h;                     // = f_y
    long long d_h = 0;
    long long k_excess = 0;       // d_h - 2g - r + 1, zero on the plane tier
};

inline TwoPointKernel two_point_kernel(const WCurve& W) {
    TwoPointKernel K;
    XYPoly recon;
    for (long long k = 0; k < W.r(); ++k) {
        K.upsilon.push_back(W.upsilon(k));
        recon = recon + K.upsilon.back() * XYPoly::monomial(0, static_cast<int>(k), Rat(1));
    }
    K.h = W.fy();
    if (!(recon - K.h).is_zero()) throw IdentityFailure("kernel division identity");
    K.d_h = W.d_h();
    K.k_excess = K.d_h - 2 * W.genus() - W.r() + 1;
    if (K.k_excess != 0) throw IdentityFailure("kernel weight excess nonzero on plane tier");
    return K;
}

/* x^a Ups_k ordered by weight d_h - k s + a r (strictly increasing) */
struct PhiHat {
    long long a = 0;
    long long k = 0;
    long long weight = 0;
};

inline std::vector<PhiHat> phihat_list(const WCurve& W, long long count) {
    std::vector<std::tuple<long long, long long, long long>> items;  // (w, a, k)
    for (long long k = 0; k < W.r(); ++k)
        for (long long a = 0; a < count + 8; ++a)
            items.emplace_back(W.d_h() - k * W.s() + a * W.r(), a, k);
    std::sort(items.begin(), items.end());
    std::vector<PhiHat> out;
    for (long long i = 0; i < count; ++i) {
        const auto& [w, a, k] = items[static_cast<size_t>(i)];
        out.push_back({a, k, w});
    }
    return out;
}

/* <nu, nu'> = res_{t=0} (int nu) nu'; antisymmetric for residue-free nu */
template <typename T>
T pairing(const LaurentSeries<T>& nu, const LaurentSeries<T>& nup) {
    return (nu.antiderivative() * nup).residue();
}

namespace detail {

inline std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw RankDeficiency("pairing system singular; raise series order");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        const Rat pv = A[col][col];
        for (auto& v : A[col]) v /= pv;
        b[col] /= pv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            const Rat f = A[row][col];
            for (size_t j = 0; j < n; ++j) A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

}  // namespace detail

/*
 * Exact differential bases at infinity.  All series are dt-coefficients in
 * the arithmetic parameter t.  nu^I_i ~ t^{N^c(g-i)-1}(1 + ...) dt with unit
 * leading coefficient; nu^II is the triangular-gauge dual basis, corrected
 * so that <nu^II_i, nu^II_j> = 0 exactly.
 */
class DifferentialBasis {
public:
    struct NumTerm {
        Rat c;
        long long a = 0;  // x power
        long long k = 0;  // Ups index
    };

    explicit DifferentialBasis(const WCurve& W, long long order = 0)
        : W_(W), order_(order > 0 ? order : 4 * W.genus() + 2 * W.d_h() + 16) {
        const long long g = W.genus();
        kernel_ = two_point_kernel(W);
        chart_ = expand_at_infinity(W, order_);
        dx_over_h_ = chart_.x.derivative() / W.fy().eval(chart_.x, chart_.y);

        const long long n_need = 3 * g + W.semigroup().conductor() + 10;
        phis_ = phihat_list(W, n_need);
        for (const auto& ph : phis_) {
            RatSeries ser = chart_.x.pow(ph.a) *
                            kernel_.upsilon[static_cast<size_t>(ph.k)].eval(chart_.x, chart_.y) *
                            dx_over_h_;
            phi_series_.push_back(std::move(ser));
        }

        /* first kind: leading exponents must realize the gap sequence */
        const auto& H = W.semigroup();
        for (long long i = 1; i <= g; ++i) {
            const RatSeries& ser = phi_series_[static_cast<size_t>(i - 1)];
            if (ser.is_zero() || ser.lo() != H.gap(g - i) - 1)
                throw GapMismatch("first-kind leading exponent misses gap");
            const Rat cnorm = Rat(1) / ser.coeffs().begin()->second;
            nuI_norm_.push_back(cnorm);
            nuI_.push_back(ser.scaled(cnorm));
        }

        /* pre-normalized second kind on the phi-hat tail, one gap value each */
        std::vector<long long> Wj;
        for (size_t j = static_cast<size_t>(g); j < phi_series_.size(); ++j) {
            if (phi_series_[j].is_zero()) throw GapMismatch("vanishing phi-hat series");
            Wj.push_back(-phi_series_[j].lo() - 1);
        }
        for (long long i = 1; i <= g; ++i) {
            std::vector<size_t> idx;
            for (long long k = i; k <= g; ++k) {
                const long long gapv = H.gap(g - k);
                size_t found = 0, at = 0;
                for (size_t j = 0; j < Wj.size(); ++j)
                    if (Wj[j] == gapv) {
                        ++found;
                        at = j + static_cast<size_t>(g);
                    }
                if (found != 1) throw GapMismatch("pole-order slot not unique");
                idx.push_back(at);
            }
            const size_t m = idx.size();
            std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
            std::vector<Rat> b(m, Rat(0));
            for (size_t row = 0; row < m; ++row) {
                const size_t k = static_cast<size_t>(i) + row;  // 1-based nu^I index
                for (size_t colj = 0; colj < m; ++colj)
                    A[row][colj] = pairing(nuI_[k - 1], phi_series_[idx[colj]]);
            }
            b[0] = Rat(1);
            std::vector<Rat> sol = detail::solve_exact(std::move(A), std::move(b));
            RatSeries ser;
            std::vector<std::pair<size_t, Rat>> support;
            for (size_t colj = 0; colj < m; ++colj) {
                ser = ser + phi_series_[idx[colj]].scaled(sol[colj]);
                support.emplace_back(idx[colj], sol[colj]);
            }
            nuII_tilde_.push_back(std::move(ser));
            nuII_support_.push_back(std::move(support));
        }

        /* Gram correction restores <nu^II, nu^II> = 0 exactly */
        G_.assign(static_cast<size_t>(g), std::vector<Rat>(static_cast<size_t>(g), Rat(0)));
        for (size_t i = 0; i < static_cast<size_t>(g); ++i)
            for (size_t j = 0; j < static_cast<size_t>(g); ++j)
                G_[i][j] = pairing(nuII_tilde_[i], nuII_tilde_[j]);
        for (size_t i = 0; i < static_cast<size_t>(g); ++i) {
            RatSeries ser = nuII_tilde_[i];
            for (size_t j = 0; j < static_cast<size_t>(g); ++j)
                if (G_[i][j] != 0) ser = ser + nuI_[j].scaled(Rat(-1, 2) * G_[i][j]);
            nuII_.push_back(std::move(ser));
        }
    }

    const WCurve& curve() const { return W_; }
    long long order() const { return order_; }
    const TwoPointKernel& kernel() const { return kernel_; }
    const ChartExpansion& chart() const { return chart_; }
    const RatSeries& dx_over_h() const { return dx_over_h_; }
    const std::vector<PhiHat>& phis() const { return phis_; }
    const std::vector<RatSeries>& phi_series() const { return phi_series_; }
    const std::vector<RatSeries>& nuI() const { return nuI_; }
    const std::vector<Rat>& nuI_norm() const { return nuI_norm_; }
    const std::vector<RatSeries>& nuII_tilde() const { return nuII_tilde_; }
    const std::vector<std::vector<std::pair<size_t, Rat>>>& nuII_support() const {
        return nuII_support_;
    }
    const std::vector<std::vector<Rat>>& gram() const { return G_; }
    const std::vector<RatSeries>& nuII() const { return nuII_; }

    /* polynomial numerators over h dx for pointwise evaluation */
    std::vector<NumTerm> nuI_terms(size_t i) const {
        return {{nuI_norm_[i], phis_[i].a, phis_[i].k}};
    }

    std::vector<NumTerm> nuII_terms(size_t i) const {
        std::vector<NumTerm> terms;
        for (const auto& [j, c] : nuII_support_[i])
            if (c != 0) terms.push_back({c, phis_[j].a, phis_[j].k});
        for (size_t j = 0; j < G_.size(); ++j)
            if (G_[i][j] != 0)
                terms.push_back({Rat(-1, 2) * G_[i][j] * nuI_norm_[j], phis_[j].a, phis_[j].k});
        return terms;
    }

    /* union of phi-hat weights carrying the pre-normalized second kind */
    std::set<long long> nuII_support_weights() const {
        std::set<long long> w;
        for (const auto& sup : nuII_support_)
            for (const auto& [j, c] : sup) w.insert(phis_[j].weight);
        return w;
    }

private:
    WCurve W_;
    long long order_;
    TwoPointKernel kernel_;
    ChartExpansion chart_;
    RatSeries dx_over_h_;
    std::vector<PhiHat> phis_;
    std::vector<RatSeries> phi_series_;
    std::vector<RatSeries> nuI_;
    std::vector<Rat> nuI_norm_;
    std::vector<RatSeries> nuII_tilde_;
    std::vector<std::vector<std::pair<size_t, Rat>>> nuII_support_;
    std::vector<std::vector<Rat>> G_;
    std::vector<RatSeries> nuII_;
};

/* ---------- double series at infinity ---------- */

using NestedSeries = LaurentSeries<RatSeries>;

/* t-series of the outer variable, scalar coefficients */
inline NestedSeries lift_outer(const RatSeries& s) {
    std::map<long long, RatSeries> m;
    for (const auto& [k, v] : s.coeffs()) m.emplace(k, RatSeries::term(0, v, kInfWindow));
    return NestedSeries(std::move(m), s.window());
}

/* t-series of the inner variable, embedded as an outer constant */
inline NestedSeries embed_inner(const RatSeries& s) {
    if (s.is_zero() && s.window() == kInfWindow) return NestedSeries();
    return NestedSeries::term(0, s, kInfWindow);
}

/* derivative with respect to the inner variable */
inline NestedSeries nested_inner_derivative(const NestedSeries& s) {
    std::map<long long, RatSeries> m;
    for (const auto& [k, v] : s.coeffs()) {
        RatSeries d = v.derivative();
        if (!d.is_zero() || d.window() < kInfWindow) m.emplace(k, std::move(d));
    }
    return NestedSeries(std::move(m), s.window());
}

/*
 * Sigma(P,Q) dt_P-coefficient as a double series at infinity,
 * region |t_P| < |t_Q|: outer variable t_P, inner variable t_Q.
 */
inline NestedSeries sigma_series_region1(const DifferentialBasis& D) {
    const WCurve& W = D.curve();
    NestedSeries ht;
    for (long long k = 0; k < W.r(); ++k) {
        const RatSeries upsP =
            D.kernel().upsilon[static_cast<size_t>(k)].eval(D.chart().x, D.chart().y);
        ht = ht + lift_outer(upsP) * embed_inner(D.chart().y.pow(k));
    }
    const NestedSeries xdiff = lift_outer(D.chart().x) - embed_inner(D.chart().x);
    return lift_outer(D.dx_over_h()) * xdiff.inverse() * ht;
}

/* same form, region |t_Q| < |t_P|: outer variable t_Q, inner variable t_P */
inline NestedSeries sigma_series_region2(const DifferentialBasis& D) {
    const WCurve& W = D.curve();
    NestedSeries ht;
    for (long long k = 0; k < W.r(); ++k) {
        const RatSeries upsP =
            D.kernel().upsilon[static_cast<size_t>(k)].eval(D.chart().x, D.chart().y);
        ht = ht + embed_inner(upsP) * lift_outer(D.chart().y).pow(k);
    }
    const NestedSeries xdiff = embed_inner(D.chart().x) - lift_outer(D.chart().x);
    return embed_inner(D.dx_over_h()) * xdiff.inverse() * ht;
}

/*
 * Monomial oracle Sigma_H = -(t_Q^r/(t_Q^r - t_P^r)) sum_i (t_P/t_Q)^{e_i} dt_P/t_P
 * expanded in the two regions; exponent data from the ordered standard basis.
 */
inline NestedSeries sigmaH_region1(const NumericalSemigroup& H, long long hiP) {
    const long long r = H.r_min();
    const StandardBasis sb = standard_basis(H);
    std::map<long long, RatSeries> m;
    for (long long e : sb.ordered_e)
        for (long long k = 0;; ++k) {
            const long long n = e + r * k;
            if (n - 1 >= hiP) break;
            auto [it, fresh] = m.try_emplace(n - 1, RatSeries::term(-n, Rat(-1), kInfWindow));
            if (!fresh) it->second = it->second + RatSeries::term(-n, Rat(-1), kInfWindow);
        }
    return NestedSeries(std::move(m), hiP);
}

inline NestedSeries sigmaH_region2(const NumericalSemigroup& H, long long hiQ) {
    const long long r = H.r_min();
    const StandardBasis sb = standard_basis(H);
    std::map<long long, RatSeries> m;
    for (long long e : sb.ordered_e)
        for (long long k = 1;; ++k) {
            const long long ex = r * k - e;  // outer t_Q exponent
            if (ex >= hiQ) break;
            auto [it, fresh] = m.try_emplace(ex, RatSeries::term(e - r * k - 1, Rat(1), kInfWindow));
            if (!fresh) it->second = it->second + RatSeries::term(e - r * k - 1, Rat(1), kInfWindow);
        }
    return NestedSeries(std::move(m), hiQ);
}

/* d_Q Sigma_H, dt_P dt_Q-coefficient; region |t_P| < |t_Q|, outer t_P */
inline NestedSeries dq_sigmaH_region1(const NumericalSemigroup& H, long long hiP) {
    const long long r = H.r_min();
    const StandardBasis sb = standard_basis(H);
    std::map<long long, RatSeries> m;
    for (long long e : sb.ordered_e)
        for (long long k = 1;; ++k) {
            const long long n = e + r * k;
            if (n - 1 >= hiP) break;
            auto [it, fresh] = m.try_emplace(n - 1, RatSeries::term(-n - 1, Rat(n), kInfWindow));
            if (!fresh) it->second = it->second + RatSeries::term(-n - 1, Rat(n), kInfWindow);
        }
    return NestedSeries(std::move(m), hiP);
}

/* region |t_Q| < |t_P|, outer t_Q */
inline NestedSeries dq_sigmaH_region2(const NumericalSemigroup& H, long long hiQ) {
    const long long r = H.r_min();
    const StandardBasis sb = standard_basis(H);
    std::map<long long, RatSeries> m;
    for (long long e : sb.ordered_e)
        for (long long k = 1;; ++k) {
            const long long ex = r * k - e - 1;  // outer t_Q exponent
            if (ex >= hiQ) break;
            auto [it, fresh] =
                m.try_emplace(ex, RatSeries::term(e - r * k - 1, Rat(r * k - e), kInfWindow));
            if (!fresh)
                it->second = it->second + RatSeries::term(e - r * k - 1, Rat(r * k - e), kInfWindow);
        }
    return NestedSeries(std::move(m), hiQ);
}

/*
 * Singular part of d_Q Sigma_H near Q = infinity (outer exponent < 0).
 * Each term is c t_P^a t_Q^{-a-2} with c = -(a+1); the exponents a realize
 * the g-element weight set that also indexes the second-kind tail.
 */
struct SingularPart {
    std::vector<long long> tP_exponents;                        // sorted
    std::vector<std::tuple<long long, long long, Rat>> terms;  // (a_P, a_Q, coeff)
};

inline SingularPart dq_sigmaH_singular(const NumericalSemigroup& H) {
    const long long r = H.r_min();
    const StandardBasis sb = standard_basis(H);
    SingularPart S;
    for (long long e : sb.ordered_e)
        for (long long k = 1; r * k - e - 1 < 0; ++k) {
            const long long aQ = r * k - e - 1;
            const long long aP = e - r * k - 1;
            S.terms.emplace_back(aP, aQ, Rat(r * k - e));
            S.tP_exponents.push_back(aP);
        }
    std::sort(S.tP_exponents.begin(), S.tP_exponents.end());
    return S;
}

/* matching helper: equal coefficients for outer < hiOuter and inner < hiInner */
inline bool nested_match(const NestedSeries& a, const NestedSeries& b, long long hiOuter,
                         long long hiInner) {
    const NestedSeries d = a - b;
    if (hiOuter > d.window()) throw OrderUnderflow("outer comparison window too small");
    for (const auto& [k, v] : d.coeffs()) {
        if (k >= hiOuter) continue;
        if (hiInner > v.window()) throw OrderUnderflow("inner comparison window too small");
        for (const auto& [k2, c] : v.coeffs())
            if (k2 < hiInner && c != 0) return false;
    }
    return true;
}

}  // namespace wsigma

#endif  // WSIGMA_KLEINFORMS_HPP
