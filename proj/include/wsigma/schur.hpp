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

#ifndef WSIGMA_SCHUR_HPP
#define WSIGMA_SCHUR_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "wsigma/errors.hpp"
#include "wsigma/semigroup.hpp"
#include "wsigma/upoly.hpp"

namespace wsigma {

/* Jacobi-Trudi: s_Lambda = det(h_{Lambda_i - i + j})_{1<=i,j<=n rows}. */
inline UPoly schur_polynomial(const std::vector<long long>& rows, int nvars) {
    const int n = static_cast<int>(rows.size());
    if (nvars < n) throw TooFewVariables();
    if (n == 0) return UPoly::constant(nvars, Rat(1));
    int maxh = 0;
    for (int i = 0; i < n; ++i)
        maxh = std::max(maxh, static_cast<int>(rows[static_cast<size_t>(i)]) - i + n - 1);
    std::vector<UPoly> h(static_cast<size_t>(maxh) + 1, UPoly(nvars));
    for (int m = 0; m <= maxh; ++m) h[static_cast<size_t>(m)] = complete_homogeneous(nvars, m);
    auto entry = [&](int i, int j) -> UPoly {
        const long long d = rows[static_cast<size_t>(i)] - (i + 1) + (j + 1);
        if (d < 0) return UPoly(nvars);
        return h[static_cast<size_t>(d)];
    };
    /* Leibniz expansion; row counts stay tiny (n <= 4 in practice) */
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    UPoly det(nvars);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        UPoly prod = UPoly::constant(nvars, Rat(1));
        for (int i = 0; i < n; ++i) prod = prod * entry(i, perm[static_cast<size_t>(i)]);
        det = det + ((inv % 2) ? prod.scaled(Rat(-1)) : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/* Bialternant oracle: s_Lambda(x) = det(x_i^{L_j+n-j}) / det(x_i^{j-1}). */
inline Rat schur_det_ratio(const std::vector<long long>& rows, const std::vector<Rat>& x) {
    const size_t n = x.size();
    std::vector<long long> lam(n, 0);
    for (size_t i = 0; i < rows.size(); ++i) lam[i] = rows[i];
    std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> den(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            num[i][j] = rat_pow(x[i], lam[j] + static_cast<long long>(n - 1 - j));
            den[i][j] = rat_pow(x[i], static_cast<long long>(n - 1 - j));
        }
    const Rat d = rat_det(den);
    if (d == 0) throw ValidationError("schur_det_ratio: coincident evaluation points");
    return rat_det(num) / d;
}

namespace detail {

/* Border-strip character via beta numbers.  beta = {rows_i + n - i} (distinct);
   removing a strip of size m moves one beta number down by m; the sign counts
   occupied positions jumped over. */
inline Rat mn_character(std::vector<long long> beta, std::vector<long long> mu,
                        std::map<std::pair<std::vector<long long>, std::vector<long long>>, Rat>& memo) {
    if (mu.empty()) return Rat(1);
    auto key = std::make_pair(beta, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const long long m = mu.back();
    std::vector<long long> mu2(mu.begin(), mu.end() - 1);
    Rat acc(0);
    for (size_t i = 0; i < beta.size(); ++i) {
        const long long target = beta[i] - m;
        if (target < 0) continue;
        bool occupied = false;
        int jumps = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumps;
        }
        if (occupied) continue;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<long long>());
        const Rat sub = mn_character(nb, mu2, memo);
        acc += (jumps % 2) ? -sub : sub;
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

inline Rat mn_character(const std::vector<long long>& rows, const std::vector<long long>& mu) {
    std::vector<long long> beta;
    const long long n = static_cast<long long>(rows.size());
    for (long long i = 0; i < n; ++i)
        beta.push_back(rows[static_cast<size_t>(i)] + n - 1 - i);
    std::map<std::pair<std::vector<long long>, std::vector<long long>>, Rat> memo;
    std::vector<long long> mu_sorted = mu;
    std::sort(mu_sorted.begin(), mu_sorted.end());
    return mn_character(beta, mu_sorted, memo);
}

inline void partitions_from_parts(long long total, const std::vector<long long>& parts,
                                  size_t start, std::vector<long long>& cur,
                                  std::vector<std::vector<long long>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < parts.size(); ++i) {
        if (parts[i] > total) break;
        cur.push_back(parts[i]);
        partitions_from_parts(total - parts[i], parts, i, cur, out);
        cur.pop_back();
    }
}

inline Rat z_mu(const std::vector<long long>& mu) {
    std::map<long long, int> mult;
    for (long long p : mu) ++mult[p];
    Rat z(1);
    for (const auto& [p, m] : mult) {
        for (int i = 0; i < m; ++i) z *= Rat(p);
        Rat fact(1);
        for (int i = 2; i <= m; ++i) fact *= i;
        z *= fact;
    }
    return z;
}

}  // namespace detail

/*
 * Schur polynomial of the semigroup diagram rewritten in the u coordinates:
 * expand in power sums (character expansion), substitute the scaled power sum
 * of degree gap(g-i) by u_i.  For semigroup diagrams the characters vanish on
 * cycle types with parts outside the gap set; asserted below.
 */
inline UPoly schur_in_u(const NumericalSemigroup& H) {
    const long long g = H.genus();
    YoungDiagram d = young_diagram(H);
    const long long wL = d.weight();
    {
        /* substitution indices Lambda_i + g - i must be distinct (they are the
           gaps in descending order) */
        std::vector<long long> idx;
        for (long long i = 1; i <= g; ++i)
            idx.push_back(d.rows[static_cast<size_t>(i - 1)] + g - i);
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] <= idx[i + 1]) throw SubstitutionCollision();
    }
    std::vector<std::vector<long long>> parts_list;
    std::vector<long long> cur;
    detail::partitions_from_parts(wL, H.gaps(), 0, cur, parts_list);
    UPoly s(static_cast<int>(g));
    for (const auto& mu : parts_list) {
        const Rat chi = detail::mn_character(d.rows, mu);
        if (chi == 0) continue;
        Rat coeff = chi / detail::z_mu(mu);
        std::vector<int> e(static_cast<size_t>(g), 0);
        for (long long p : mu) {
            coeff *= Rat(p);  // p_k = k * T_k
            const auto& gp = H.gaps();
            auto it = std::lower_bound(gp.begin(), gp.end(), p);
            const long long j = it - gp.begin();          // ascending gap index
            const long long var = g - 1 - j;              // u_{g-j} is 0-based g-1-j
            ++e[static_cast<size_t>(var)];
        }
        s.add_term(e, coeff);
    }
    return s;
}

/* weighted homogeneity: every term has sum alpha_i * (Lambda_i + g - i) = |Lambda| */
inline bool schur_u_weight_check(const NumericalSemigroup& H, const UPoly& s) {
    const long long g = H.genus();
    YoungDiagram d = young_diagram(H);
    for (const auto& [e, c] : s.terms()) {
        long long w = 0;
        for (long long i = 1; i <= g; ++i)
            w += static_cast<long long>(e[static_cast<size_t>(i - 1)]) *
                 (d.rows[static_cast<size_t>(i - 1)] + g - i);
        if (w != d.weight()) return false;
    }
    return true;
}

struct EpsilonReport {
    int sign = 0;
    std::vector<long long> natural;
    long long durfee_rank = 0;
};

/*
 * Sign relating the truncated-diagram Schur polynomial to the natural-index
 * derivative of the full one, both restricted to the rank-k locus
 * u_i = (scaled power sum of degree gap(g-i)) in k variables.  The identity
 * is verified symbolically; any ratio other than +-1 is an error.
 */
inline EpsilonReport epsilon_sign(const NumericalSemigroup& H, long long k) {
    const long long g = H.genus();
    if (k < 0 || k >= g) throw IndexOutOfRange("epsilon_sign level");
    YoungDiagram d = young_diagram(H);
    EpsilonReport rep;
    rep.natural = natural_index(H, k);
    rep.durfee_rank = static_cast<long long>(rep.natural.size());

    UPoly s = schur_in_u(H);
    for (long long Li : rep.natural) s = s.derivative(static_cast<int>(Li - 1));

    const int kx = static_cast<int>(k);
    /* images of u_i in the k restriction variables */
    std::vector<UPoly> images;
    for (long long i = 1; i <= g; ++i) {
        const long long deg = d.rows[static_cast<size_t>(i - 1)] + g - i;
        images.push_back(power_sum(kx, static_cast<int>(deg))
                             .scaled(Rat(1) / Rat(deg)));
    }
    UPoly rhs = s.substitute(images, kx);

    std::vector<long long> upper(d.rows.begin(), d.rows.begin() + k);
    while (!upper.empty() && upper.back() == 0) upper.pop_back();
    UPoly lhs = schur_polynomial(upper, kx);

    /* lhs must equal eps * rhs exactly */
    if (lhs.is_zero() || rhs.is_zero()) throw IdentityFailure("degenerate restriction");
    const Rat c0 = lhs.terms().begin()->second / rhs.coeff_at(lhs.terms().begin()->first);
    if (!(c0 == 1 || c0 == -1)) throw IdentityFailure("ratio not a sign: " + rat_str(c0));
    const UPoly diff = lhs - rhs.scaled(c0);
    if (!diff.is_zero()) throw IdentityFailure("truncation identity mismatch");
    rep.sign = (c0 == 1) ? 1 : -1;
    return rep;
}

}  // namespace wsigma

#endif  // WSIGMA_SCHUR_HPP
