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

#ifndef WSIGMA_LAURENT_HPP
#define WSIGMA_LAURENT_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "wsigma/errors.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

inline constexpr long long kInfWindow = 1LL << 60;

inline long long sat_add(long long a, long long b) {
    if (a >= kInfWindow || b >= kInfWindow) return kInfWindow;
    long long s = a + b;
    return s > kInfWindow ? kInfWindow : s;
}

/*
 * Truncated Laurent series sum_k c[k] t^k.  `window` is the exclusive upper
 * bound of guaranteed-accurate exponents: coefficients at k >= window are
 * unknown, absent keys below it are exact zeros.  Every operation tracks the
 * window pessimistically so accuracy is never overstated.
 *
 * The coefficient type T may itself be a LaurentSeries (nested two-variable
 * expansions); a default-constructed T must behave as an exact zero.
 */
template <typename T>
class LaurentSeries {
public:
    using coeff_map = std::map<long long, T>;

    LaurentSeries() : window_(kInfWindow) {}  // exact zero

    LaurentSeries(coeff_map c, long long window) : c_(std::move(c)), window_(window) {
        prune();
    }

    static LaurentSeries term(long long exp, T v, long long window) {
        coeff_map m;
        m.emplace(exp, std::move(v));
        return LaurentSeries(std::move(m), window);
    }

    static LaurentSeries one(long long window) {
        return term(0, scalar_traits<T>::one(), window);
    }

    long long window() const { return window_; }
    bool is_zero() const { return c_.empty(); }

    /* lowest exponent carrying a nonzero coefficient; window if none */
    long long lo() const { return c_.empty() ? window_ : c_.begin()->first; }

    const coeff_map& coeffs() const { return c_; }

    T coeff(long long k) const {
        if (k >= window_) throw OrderUnderflow("coefficient " + std::to_string(k) +
                                               " beyond window " + std::to_string(window_));
        auto it = c_.find(k);
        return it == c_.end() ? scalar_traits<T>::zero() : it->second;
    }

    T residue() const { return coeff(-1); }

    LaurentSeries truncated(long long new_window) const {
        coeff_map m;
        for (const auto& [k, v] : c_)
            if (k < new_window) m.emplace(k, v);
        return LaurentSeries(std::move(m), std::min(window_, new_window));
    }

    LaurentSeries shifted(long long d) const {
        coeff_map m;
        for (const auto& [k, v] : c_) m.emplace(k + d, v);
        return LaurentSeries(std::move(m), sat_add(window_, d));
    }

    LaurentSeries operator-() const {
        coeff_map m;
        for (const auto& [k, v] : c_) m.emplace(k, -v);
        return LaurentSeries(std::move(m), window_);
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        coeff_map m = a.c_;
        for (const auto& [k, v] : b.c_) {
            auto it = m.find(k);
            if (it == m.end())
                m.emplace(k, v);
            else
                it->second = it->second + v;
        }
        return LaurentSeries(std::move(m), std::min(a.window_, b.window_));
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const long long w =
            std::min(sat_add(a.window_, b.lo()), sat_add(b.window_, a.lo()));
        coeff_map m;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                const long long k = ka + kb;
                if (k >= w) continue;
                auto it = m.find(k);
                if (it == m.end())
                    m.emplace(k, va * vb);
                else
                    it->second = it->second + va * vb;
            }
        return LaurentSeries(std::move(m), w);
    }

    LaurentSeries scaled(const T& s) const {
        coeff_map m;
        for (const auto& [k, v] : c_) m.emplace(k, v * s);
        return LaurentSeries(std::move(m), window_);
    }

    /* multiplicative inverse of a series with invertible leading coefficient */
    LaurentSeries inverse() const {
        if (c_.empty()) throw OrderUnderflow("inverse of zero series");
        const long long l = lo();
        const T a0 = c_.begin()->second;
        /* u := (this << -l) / a0 = 1 + higher; invert by recurrence */
        const long long n = std::min(window_ - l, static_cast<long long>(400));
        if (n <= 0) throw OrderUnderflow("inverse window empty");
        coeff_map u;
        for (const auto& [k, v] : c_)
            if (k - l < n) u.emplace(k - l, v / a0);
        coeff_map b;
        b.emplace(0, scalar_traits<T>::one());
        for (long long m = 1; m < n; ++m) {
            T acc = scalar_traits<T>::zero();
            bool any = false;
            for (const auto& [j, uj] : u) {
                if (j < 1 || j > m) continue;
                auto it = b.find(m - j);
                if (it == b.end()) continue;
                acc = acc + uj * it->second;
                any = true;
            }
            if (any) b.emplace(m, -acc);
        }
        coeff_map out;
        for (const auto& [k, v] : b) {
            T q = v / a0;
            if (!scalar_traits<T>::is_zero(q)) out.emplace(k - l, std::move(q));
        }
        return LaurentSeries(std::move(out), n - l);
    }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        return a * b.inverse();
    }

    LaurentSeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return one(kInfWindow);
        LaurentSeries base = *this, result;
        bool has = false;
        while (e > 0) {
            if (e & 1) {
                result = has ? result * base : base;
                has = true;
            }
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    LaurentSeries derivative() const {
        coeff_map m;
        for (const auto& [k, v] : c_) {
            if (k == 0) continue;
            m.emplace(k - 1, v * scalar_traits<T>::from_int(k));
        }
        return LaurentSeries(std::move(m), window_ == kInfWindow ? kInfWindow : window_ - 1);
    }

    /* antiderivative with zero constant term; refuses a 1/t term */
    LaurentSeries antiderivative() const {
        coeff_map m;
        for (const auto& [k, v] : c_) {
            if (k == -1) {
                if (!scalar_traits<T>::is_zero(v))
                    throw LogTermError("nonzero residue under antiderivative");
                continue;
            }
            m.emplace(k + 1, v / scalar_traits<T>::from_int(k + 1));
        }
        return LaurentSeries(std::move(m), sat_add(window_, 1));
    }

    template <typename U, typename F>
    LaurentSeries<U> map(F&& f) const {
        typename LaurentSeries<U>::coeff_map m;
        for (const auto& [k, v] : c_) m.emplace(k, f(v));
        return LaurentSeries<U>(std::move(m), window_);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        bool sep = false;
        for (const auto& [k, v] : c_) {
            if (sep) os << ", ";
            os << k << ": " << v;
            sep = true;
        }
        os << " | <" << window_ << "}";
        return os.str();
    }

private:
    void prune() {
        for (auto it = c_.begin(); it != c_.end();)
            if (it->first >= window_ || scalar_traits<T>::is_zero(it->second))
                it = c_.erase(it);
            else
                ++it;
    }

    coeff_map c_;
    long long window_;
};

using RatSeries = LaurentSeries<Rat>;
using CplxSeries = LaurentSeries<cplx>;

/* nested series behave as scalars for an outer LaurentSeries */
template <typename T>
struct scalar_traits<LaurentSeries<T>> {
    static LaurentSeries<T> zero() { return LaurentSeries<T>(); }
    static LaurentSeries<T> one() { return LaurentSeries<T>::one(kInfWindow); }
    static bool is_zero(const LaurentSeries<T>& v) { return v.is_zero(); }
    static LaurentSeries<T> from_int(long long k) {
        return LaurentSeries<T>::term(0, scalar_traits<T>::from_int(k), kInfWindow);
    }
};

}  // namespace wsigma

#endif  // WSIGMA_LAURENT_HPP
