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

#ifndef WSIGMA_SEMIGROUP_HPP
#define WSIGMA_SEMIGROUP_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wsigma/errors.hpp"

namespace wsigma {

/*
 * Numerical semigroup H = <generators>: cofinite additive submonoid of the
 * nonnegative integers.  N(i) enumerates elements ascending (N(0) = 0),
 * gap(i) enumerates the complement ascending; both 0-based.
 */
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long long> gens) {
        if (gens.empty()) throw EmptyGenerators();
        for (long long v : gens)
            if (v <= 0) throw EmptyGenerators("generators must be positive");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        long long d = 0;
        for (long long v : gens) d = std::gcd(d, v);
        if (d != 1) throw NonCoprimeGenerators("gcd = " + std::to_string(d));

        /* Sieve bound: product of the two smallest generators dominates the
           Frobenius number of any coprime pair inside the generating set. */
        long long bound = (gens.size() >= 2) ? gens[0] * gens[1] + gens.back() + 2
                                             : gens[0] + 2;
        member_.assign(static_cast<size_t>(bound) + 1, false);
        member_[0] = true;
        for (long long n = 1; n <= bound; ++n)
            for (long long v : gens) {
                if (v > n) break;
                if (member_[static_cast<size_t>(n - v)]) {
                    member_[static_cast<size_t>(n)] = true;
                    break;
                }
            }

        for (long long n = 0; n <= bound; ++n)
            if (!member_[static_cast<size_t>(n)]) gaps_.push_back(n);
        genus_ = static_cast<long long>(gaps_.size());
        conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;

        elements_.clear();
        for (long long n = 0; n <= conductor_; ++n)
            if (member_[static_cast<size_t>(n)]) elements_.push_back(n);

        /* minimal generating set: keep g unless generated by the others */
        for (long long v : gens) {
            std::vector<long long> others;
            for (long long w : gens)
                if (w != v) others.push_back(w);
            if (!others.empty() && generates(others, v)) continue;
            generators_.push_back(v);
        }
    }

    const std::vector<long long>& generators() const { return generators_; }
    const std::vector<long long>& gaps() const { return gaps_; }
    long long genus() const { return genus_; }
    long long conductor() const { return conductor_; }
    long long r_min() const { return generators_.front(); }

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return member_[static_cast<size_t>(n)];
    }

    /* i-th element, 0-based; N(i) = i + genus once past the conductor */
    long long N(long long i) const {
        if (i < 0) throw IndexOutOfRange("N(i), i < 0");
        if (i < static_cast<long long>(elements_.size()))
            return elements_[static_cast<size_t>(i)];
        return i + genus_;
    }

    /* i-th gap, 0-based ascending */
    long long gap(long long i) const {
        if (i < 0 || i >= genus_) throw IndexOutOfRange("gap index");
        return gaps_[static_cast<size_t>(i)];
    }

    bool is_symmetric() const {
        return genus_ > 0 && !contains(2 * genus_ - 1);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "<";
        for (size_t i = 0; i < generators_.size(); ++i)
            os << (i ? "," : "") << generators_[i];
        os << ">";
        return os.str();
    }

private:
    static bool generates(const std::vector<long long>& gens, long long target) {
        std::vector<char> mem(static_cast<size_t>(target) + 1, 0);
        mem[0] = 1;
        for (long long n = 1; n <= target; ++n)
            for (long long v : gens) {
                if (v > n) break;
                if (mem[static_cast<size_t>(n - v)]) {
                    mem[static_cast<size_t>(n)] = 1;
                    break;
                }
            }
        return mem[static_cast<size_t>(target)] != 0;
    }

    std::vector<long long> generators_;
    std::vector<long long> gaps_;
    std::vector<long long> elements_;
    std::vector<bool> member_;
    long long genus_ = 0;
    long long conductor_ = 0;
};

inline NumericalSemigroup build_semigroup(const std::vector<long long>& gens) {
    return NumericalSemigroup(gens);
}

/*
 * Standard basis: tilde_e[i] is the minimal element congruent to i mod r;
 * ordered_e lists the same values ascending, ordered_e[0] = 0.
 */
struct StandardBasis {
    std::vector<long long> tilde_e;
    std::vector<long long> ordered_e;
};

inline StandardBasis standard_basis(const NumericalSemigroup& H) {
    const long long r = H.r_min();
    StandardBasis sb;
    sb.tilde_e.assign(static_cast<size_t>(r), -1);
    long long found = 0;
    for (long long n = 0; found < r; ++n)
        if (H.contains(n) && sb.tilde_e[static_cast<size_t>(n % r)] < 0) {
            sb.tilde_e[static_cast<size_t>(n % r)] = n;
            ++found;
        }
    sb.ordered_e = sb.tilde_e;
    std::sort(sb.ordered_e.begin(), sb.ordered_e.end());
    return sb;
}

/*
 * Young diagram of H: rows Lambda_i = gap(g-i) - g + i (1-based i), weakly
 * decreasing.  frob_a lists column arm lengths ascending, frob_b row arm
 * lengths ascending (the printed order of the reference tables); hooks are
 * the diagonal hook lengths gap(g-i) - N(i-1).
 */
struct YoungDiagram {
    std::vector<long long> rows;
    std::vector<long long> frob_a;
    std::vector<long long> frob_b;
    std::vector<long long> hooks;
    long long rank = 0;

    long long weight() const {
        long long w = 0;
        for (long long v : rows) w += v;
        return w;
    }
};

inline YoungDiagram diagram_of_rows(const std::vector<long long>& rows) {
    YoungDiagram d;
    d.rows = rows;
    const long long n = static_cast<long long>(rows.size());
    d.rank = 0;
    while (d.rank < n && rows[static_cast<size_t>(d.rank)] >= d.rank + 1) ++d.rank;
    auto col = [&](long long j) {  // conjugate row length
        long long c = 0;
        while (c < n && rows[static_cast<size_t>(c)] >= j + 1) ++c;
        return c;
    };
    for (long long i = d.rank - 1; i >= 0; --i)
        d.frob_a.push_back(col(i) - (i + 1));
    for (long long i = d.rank - 1; i >= 0; --i)
        d.frob_b.push_back(rows[static_cast<size_t>(i)] - (i + 1));
    for (long long i = 1; i <= d.rank; ++i)
        d.hooks.push_back(rows[static_cast<size_t>(i - 1)] + col(i - 1) - 2 * i + 1);
    return d;
}

inline YoungDiagram young_diagram(const NumericalSemigroup& H) {
    const long long g = H.genus();
    if (g == 0) throw GenusZero();
    std::vector<long long> rows;
    for (long long i = 1; i <= g; ++i)
        rows.push_back(H.gap(g - i) - g + i);
    YoungDiagram d = diagram_of_rows(rows);
    /* hook invariant: diagonal hooks are gaps, equal to gap(g-i) - N(i-1) */
    for (long long i = 1; i <= d.rank; ++i) {
        const long long h = H.gap(g - i) - H.N(i - 1);
        if (h != d.hooks[static_cast<size_t>(i - 1)] || H.contains(h))
            throw GapMismatch("diagonal hook inconsistent at i=" + std::to_string(i));
    }
    return d;
}

/* Reverse map; rejects row lists whose gap complement is not additively closed. */
inline NumericalSemigroup semigroup_from_diagram(const std::vector<long long>& rows) {
    const long long g = static_cast<long long>(rows.size());
    std::vector<long long> gaps;
    for (long long i = 1; i <= g; ++i)
        gaps.push_back(rows[static_cast<size_t>(i - 1)] + g - i);
    std::reverse(gaps.begin(), gaps.end());
    for (size_t i = 0; i + 1 < gaps.size(); ++i)
        if (gaps[i] >= gaps[i + 1])
            throw ValidationError("diagram rows do not define a gap sequence");
    const long long bound = gaps.back() + 1;
    std::vector<char> mem(static_cast<size_t>(2 * bound + 1), 1);
    for (long long v : gaps) mem[static_cast<size_t>(v)] = 0;
    for (long long a = 1; a <= 2 * bound; ++a)
        for (long long b = a; a + b <= 2 * bound; ++b)
            if (mem[static_cast<size_t>(a)] && mem[static_cast<size_t>(b)] &&
                !mem[static_cast<size_t>(a + b)])
                throw ValidationError("diagram not associated with a semigroup: " +
                                      std::to_string(a) + "+" + std::to_string(b) +
                                      " falls in the gap set");
    std::vector<long long> gens;
    for (long long n = 1; n <= 2 * bound; ++n) {
        if (!mem[static_cast<size_t>(n)]) continue;
        bool decomposable = false;
        for (long long a = 1; a < n && !decomposable; ++a)
            if (mem[static_cast<size_t>(a)] && mem[static_cast<size_t>(n - a)])
                decomposable = true;
        if (!decomposable) gens.push_back(n);
    }
    return NumericalSemigroup(gens);
}

struct DiagramTruncation {
    std::vector<long long> upper;  // first k rows
    std::vector<long long> lower;  // rows k+1..g
    NumericalSemigroup lower_semigroup;
};

inline DiagramTruncation truncate_diagram(const NumericalSemigroup& H, long long k) {
    const long long g = H.genus();
    if (k < 0 || k > g) throw IndexOutOfRange("truncation level");
    YoungDiagram d = young_diagram(H);
    DiagramTruncation t{{}, {}, H};
    for (long long i = 0; i < g; ++i)
        (i < k ? t.upper : t.lower).push_back(d.rows[static_cast<size_t>(i)]);
    std::vector<long long> gens = H.generators();
    for (long long i = g - k; i < g; ++i) gens.push_back(H.gap(i));
    t.lower_semigroup = NumericalSemigroup(gens);
    for (long long v : t.lower_semigroup.gaps())
        if (H.contains(v))
            throw GapMismatch("lower-truncation complement escapes the gap set");
    return t;
}

/*
 * Index set feeding the theta-derivative normalization.  The Durfee-rank
 * many hook values gap(g-k-i) - N(i-1) of the lower truncation are gaps;
 * entry L_i is the descending-order position of that gap: gap(g - L_i) = hook.
 * First entry is always k+1.
 */
inline std::vector<long long> natural_index(const NumericalSemigroup& H, long long k) {
    const long long g = H.genus();
    if (k < 0 || k >= g) throw IndexOutOfRange("natural_index level");
    YoungDiagram d = young_diagram(H);
    long long nk = 0;  // Durfee rank of rows k+1..g
    while (k + nk < g && d.rows[static_cast<size_t>(k + nk)] >= nk + 1) ++nk;
    std::vector<long long> L;
    for (long long i = 1; i <= nk; ++i) {
        const long long hook = H.gap(g - k - i) - H.N(i - 1);
        const auto& gp = H.gaps();
        auto it = std::lower_bound(gp.begin(), gp.end(), hook);
        if (it == gp.end() || *it != hook)
            throw GapMismatch("natural-index hook is not a gap");
        L.push_back(g - static_cast<long long>(it - gp.begin()));
    }
    if (L.empty() || L.front() != k + 1)
        throw GapMismatch("natural_index first entry != k+1");
    return L;
}

/* smallest positive pair with i_s*s - i_r*r = 1 */
inline std::pair<long long, long long> bezout_pair(long long r, long long s) {
    if (r < 2 || s < 2 || std::gcd(r, s) != 1) throw NotCoprime();
    for (long long is = 1; is <= r; ++is)
        if ((is * s - 1) % r == 0) return {is, (is * s - 1) / r};
    throw NotCoprime("no solution");  // unreachable for coprime input
}

/*
 * Weight bookkeeping for the second-kind gauge: Hp collects d_h - e_i + kr
 * over pairs with e_i - (k+1)r > 0, Hps the companion set d_h + e_i - r(k+2).
 * Both have exactly genus-many entries.
 */
struct DualWeightSets {
    std::vector<long long> Hp;
    std::vector<long long> Hps;
};

inline DualWeightSets dual_weight_sets(const NumericalSemigroup& H, long long d_h) {
    const long long r = H.r_min();
    StandardBasis sb = standard_basis(H);
    DualWeightSets out;
    for (long long e : sb.ordered_e)
        for (long long kk = 0; e - (kk + 1) * r > 0; ++kk) {
            out.Hp.push_back(d_h - e + kk * r);
            out.Hps.push_back(d_h + e - r * (kk + 2));
        }
    std::sort(out.Hp.begin(), out.Hp.end());
    std::sort(out.Hps.begin(), out.Hps.end());
    if (static_cast<long long>(out.Hp.size()) != H.genus() ||
        static_cast<long long>(out.Hps.size()) != H.genus())
        throw InconsistentDh("dual weight sets have cardinality != genus");
    return out;
}

}  // namespace wsigma

#endif  // WSIGMA_SEMIGROUP_HPP
