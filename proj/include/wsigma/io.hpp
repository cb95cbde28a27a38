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

/*
 * Serialization and file formats: decimal-string JSON numbers (17 significant
 * digits for bit-stable diffs), the curve description file (TOML subset), and
 * the on-disk period cache.
 */

#ifndef WSIGMA_IO_HPP
#define WSIGMA_IO_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wsigma/periods.hpp"

namespace wsigma {

using json = nlohmann::json;

inline std::string dec_str(double v, int sig = 17) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return std::string(buf);
}

inline json cplx_json(cplx v, int sig = 17) {
    return json{{"im", dec_str(v.imag(), sig)}, {"re", dec_str(v.real(), sig)}};
}

inline json matrix_json(const Eigen::MatrixXcd& M, int sig = 17) {
    json rows = json::array();
    for (long long i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (long long j = 0; j < M.cols(); ++j) row.push_back(cplx_json(M(i, j), sig));
        rows.push_back(row);
    }
    return rows;
}

inline double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    return std::strtod(s.c_str(), nullptr);
}

inline cplx cplx_from_json(const json& j) {
    return cplx(double_from_json(j.at("re")), double_from_json(j.at("im")));
}

inline Eigen::MatrixXcd matrix_from_json(const json& j) {
    const long long rows = static_cast<long long>(j.size());
    const long long cols = rows ? static_cast<long long>(j.at(0).size()) : 0;
    Eigen::MatrixXcd M(rows, cols);
    for (long long i = 0; i < rows; ++i)
        for (long long k = 0; k < cols; ++k)
            M(i, k) = cplx_from_json(j.at(static_cast<size_t>(i)).at(static_cast<size_t>(k)));
    return M;
}

/* complex literal of the form a, bi, a+bi, a-bi (also accepts trailing j) */
inline cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += (c == 'j') ? 'i' : c;
    if (s.empty()) throw ConfigError("empty complex literal");
    /* split at the last +/- that is not an exponent sign and not leading */
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    auto num = [](std::string t) -> double {
        if (t.empty() || t == "+") t += "1";
        if (t == "-") t = "-1";
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end == nullptr || *end != '\0') throw ConfigError("bad number in complex literal: " + t);
        return v;
    };
    const bool has_i = s.back() == 'i';
    if (!has_i) {
        if (split != std::string::npos) throw ConfigError("malformed complex literal: " + text);
        return cplx(num(s), 0.0);
    }
    s.pop_back();
    if (split == std::string::npos) return cplx(0.0, num(s));
    return cplx(num(s.substr(0, split)), num(s.substr(split)));
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

/* ---------- curve description files (TOML subset) ---------- */

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline long long parse_ll(const std::string& s, const std::string& what) {
    long long v = 0;
    const std::string t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ConfigError(what + ": expected an integer, got '" + t + "'");
    return v;
}

/* [[i, j, num, den], ...]; den may be omitted (defaults to 1) */
inline std::map<std::pair<long long, long long>, Rat> parse_coefficients(const std::string& text) {
    std::map<std::pair<long long, long long>, Rat> lam;
    std::vector<std::vector<long long>> groups;
    std::vector<long long> cur;
    std::string tok;
    int depth = 0;
    auto flush_tok = [&] {
        if (tok.empty()) return;
        if (depth != 2) throw ConfigError("coefficients: number outside an entry");
        cur.push_back(parse_ll(tok, "coefficients"));
        tok.clear();
    };
    for (char c : text) {
        if (c == '[') {
            flush_tok();
            ++depth;
            if (depth > 2) throw ConfigError("coefficients: nesting too deep");
        } else if (c == ']') {
            flush_tok();
            if (depth == 2) {
                groups.push_back(cur);
                cur.clear();
            }
            --depth;
            if (depth < 0) throw ConfigError("coefficients: unbalanced brackets");
        } else if (c == ',') {
            flush_tok();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            tok += c;
        }
    }
    if (depth != 0) throw ConfigError("coefficients: unbalanced brackets");
    for (const auto& gp : groups) {
        if (gp.size() != 3 && gp.size() != 4)
            throw ConfigError("coefficients: entries are [i, j, num] or [i, j, num, den]");
        const Rat den = gp.size() == 4 ? Rat(gp[3]) : Rat(1);
        if (den == 0) throw ConfigError("coefficients: zero denominator");
        auto key = std::make_pair(gp[0], gp[1]);
        if (lam.count(key)) throw ConfigError("coefficients: duplicate entry");
        lam[key] = Rat(gp[2]) / den;
    }
    return lam;
}

}  // namespace detail

/*
 * Curve file grammar:
 *   [curve]
 *   r = 2
 *   s = 3
 *   coefficients = [[2, 1, 1]]      # lambda_{i,j} = num/den, x^j y^{r-i}
 * Unknown sections or keys are rejected.
 */
inline WCurve parse_curve_file(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    long long r = 0, s = 0;
    bool saw_r = false, saw_s = false, saw_coeff = false;
    std::map<std::pair<long long, long long>, Rat> lam;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line != "[curve]")
                throw ConfigError("line " + std::to_string(lineno) + ": unknown section " + line);
            section = "curve";
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (section != "curve")
            throw ConfigError("line " + std::to_string(lineno) + ": key outside [curve]");
        const std::string key = detail::trim(line.substr(0, eq));
        std::string val = detail::trim(line.substr(eq + 1));
        if (key == "r") {
            r = detail::parse_ll(val, "r");
            saw_r = true;
        } else if (key == "s") {
            s = detail::parse_ll(val, "s");
            saw_s = true;
        } else if (key == "coefficients") {
            /* the array may span lines; read until brackets balance */
            auto balance = [](const std::string& t) {
                int d = 0;
                for (char c : t) d += (c == '[') - (c == ']');
                return d;
            };
            int depth = balance(val);
            while (depth > 0 && std::getline(in, line)) {
                ++lineno;
                const size_t h2 = line.find('#');
                if (h2 != std::string::npos) line = line.substr(0, h2);
                val += " " + line;
                depth = balance(val);
            }
            lam = detail::parse_coefficients(val);
            saw_coeff = true;
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_r || !saw_s) throw ConfigError("curve file must set r and s");
    (void)saw_coeff;  // a bare monomial curve is legal
    return WCurve(r, s, lam);
}

inline WCurve load_curve_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open curve file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_curve_file(buf.str());
}

/* ---------- run configuration ---------- */

struct RunConfig {
    std::string command;
    std::string curve_path;
    std::string output;     // empty = stdout
    long long order = 0;    // 0 = module default
    double tolerance = 0;   // 0 = suite defaults
    int threads = 0;        // 0 = one task per quadrature cell
    bool use_cache = true;
    std::string cache_dir;  // resolved from WSIGMA_CACHE_DIR when empty

    void validate() const {
        if (order < 0) throw ConfigError("order must be nonnegative");
        if (tolerance < 0) throw ConfigError("tolerances must be positive");
        if (threads < 0) throw ConfigError("thread count must be nonnegative");
    }
};

inline std::string resolve_cache_dir(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("WSIGMA_CACHE_DIR")) return std::string(env);
    return (std::filesystem::temp_directory_path() / "wsigma-cache").string();
}

/* ---------- period cache ---------- */

inline std::string periods_cache_key(const WCurve& W, long long order) {
    return hash_hex(fnv1a64(W.canonical_string() + "|order=" + std::to_string(order)));
}

inline std::string periods_cache_path(const std::string& dir, const std::string& key) {
    return (std::filesystem::path(dir) / ("periods-" + key + ".json")).string();
}

struct CachedPeriods {
    PeriodMatrices mats;
    double intersection_error = 0.0;
    bool flipped = false;
};

inline bool load_periods_cache(const std::string& dir, const std::string& key,
                               const WCurve& W, long long order, CachedPeriods* out) {
    std::ifstream f(periods_cache_path(dir, key));
    if (!f) return false;
    json j;
    try {
        f >> j;
        if (j.at("curve").get<std::string>() != W.canonical_string()) return false;
        if (j.at("order").get<long long>() != order) return false;
        out->mats.omega1 = matrix_from_json(j.at("omega1"));
        out->mats.omega2 = matrix_from_json(j.at("omega2"));
        out->mats.eta1 = matrix_from_json(j.at("eta1"));
        out->mats.eta2 = matrix_from_json(j.at("eta2"));
        out->mats.tau = matrix_from_json(j.at("tau"));
        const json& res = j.at("residuals");
        out->mats.legendre_residual = double_from_json(res.at("legendre"));
        out->mats.tau_asymmetry = double_from_json(res.at("tau_asymmetry"));
        out->mats.im_tau_min_eig = double_from_json(res.at("im_tau_min_eig"));
        out->intersection_error = double_from_json(res.at("intersection"));
        out->flipped = j.at("flipped").get<bool>();
    } catch (const json::exception&) {
        return false;  // unreadable cache entries count as misses
    }
    return true;
}

inline void store_periods_cache(const std::string& dir, const std::string& key,
                                const WCurve& W, long long order, const PeriodData& P) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // caching is best-effort
    json j;
    j["curve"] = W.canonical_string();
    j["order"] = order;
    j["omega1"] = matrix_json(P.mats.omega1);
    j["omega2"] = matrix_json(P.mats.omega2);
    j["eta1"] = matrix_json(P.mats.eta1);
    j["eta2"] = matrix_json(P.mats.eta2);
    j["tau"] = matrix_json(P.mats.tau);
    j["residuals"] = json{{"im_tau_min_eig", dec_str(P.mats.im_tau_min_eig)},
                          {"intersection", dec_str(P.intersection_error)},
                          {"legendre", dec_str(P.mats.legendre_residual)},
                          {"tau_asymmetry", dec_str(P.mats.tau_asymmetry)}};
    j["flipped"] = P.flipped;
    std::ofstream f(periods_cache_path(dir, key));
    if (f) f << j.dump(2) << "\n";
}

}  // namespace wsigma

#endif  // WSIGMA_IO_HPP
