#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlat {

using ZVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct shape_error : error {
    using error::error;
};
struct degree_error : error {
    using error::error;
};
struct containment_error : error {
    using error::error;
};
struct saturation_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};

// log of an arbitrarily large positive integer, accurate to ~1 ulp.
inline double log_mpz(const mpz_class& z) {
    if (z <= 0) throw error("log_mpz: nonpositive argument");
    signed long exp;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * M_LN2;
}

inline double log_mpq(const mpq_class& q) {
    if (q <= 0) throw error("log_mpq: nonpositive argument");
    return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpq_class pow_q(const mpq_class& q, unsigned long e) {
    mpq_class r = 1;
    mpq_class b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw error("invalid rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

inline mpz_class content(const ZVec& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// Divides out the content and makes the first nonzero entry positive.
inline ZVec primitive_part(const ZVec& v) {
    mpz_class g = content(v);
    if (g == 0) return v;
    ZVec r = v;
    for (auto& x : r) x /= g;
    for (const auto& x : r) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : r) y = -y;
            break;
        }
    }
    return r;
}

inline bool is_zero(const ZVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace arlat
