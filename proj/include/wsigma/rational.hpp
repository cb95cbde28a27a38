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

#ifndef WSIGMA_RATIONAL_HPP
#define WSIGMA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace wsigma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline cplx to_cplx(const Rat& q) { return cplx(to_double(q), 0.0); }

inline Rat rat_pow(const Rat& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat acc(1), b = base;
    long long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

template <typename T>
struct scalar_traits;  // zero(), one(), is_zero()

template <>
struct scalar_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& v) { return v == 0; }
    static Rat from_int(long long k) { return Rat(k); }
    static double norm(const Rat& v) { return std::abs(to_double(v)); }
};

template <>
struct scalar_traits<cplx> {
    static cplx zero() { return cplx(0, 0); }
    static cplx one() { return cplx(1, 0); }
    /* numeric zero test: used only by code paths that tolerate drops */
    static bool is_zero(const cplx& v) { return v == cplx(0, 0); }
    static cplx from_int(long long k) { return cplx(static_cast<double>(k), 0); }
    static double norm(const cplx& v) { return std::abs(v); }
};

}  // namespace wsigma

#endif  // WSIGMA_RATIONAL_HPP
