#ifndef JCAS_PARAMS_HPP
#define JCAS_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/gradings.hpp>

namespace jcas {

// Parameter block for one (a, b, m, n, delta, i) stage.
struct ParamContext {
    long a = 0, b = 0, m = 0, n = 0;
    long delta = 1;
    long i = 0;

    int u = 0;         // 0: L = x+1, w = (0,1); 1: L = x+y, w = (1,1)
    Direction w = Direction::W01;
    Rational eps;      // 1 / (m (n - m))
    long r = 0;        // gcd(m, n)
    long d = 0;        // u m + n
    long e = 0;        // b d / a
    long mfrak = 0;    // d + e - u - 2, the last c-index
    long uE = 0, vE = 0, uF = 0, vF = 0;
    long ai = 0, bi = 0;
    Rational deg_tau;  // n/m for u = 0, m/n + 1 for u = 1

    bool L_is_xy() const { return u == 1; }
    std::string L_text() const { return u == 1 ? "x+y" : "x+1"; }
    // Exponent denominator of R2: y^(1/m) for u = 0, x^(1/n) for u = 1.
    std::int64_t r2_denom() const { return u == 1 ? n : m; }
    // r (e - beta) / d is an integer.
    bool admissible(long beta) const;
    // Admissible beta in [1, mfrak].
    std::vector<long> admissible_betas() const;
    // Degree of Gamma_j / x_j (shifted by the tau power they carry).
    Rational gamma_degree(long j) const;
    Rational x_degree(long j) const;
};

// Membership of i: i/m integral or (i+1)/(n-m) integral (exactly one holds).
bool in_index_set(long i, long m, long n);
// Positive common divisors of m/a and n/a.
std::vector<long> delta_set(long a, long m, long n);

// ParameterError when (a,b,m,n) is not admissible, delta is not a common
// divisor of m/a and n/a, or i is outside the index set.
ParamContext build_params(long a, long b, long m, long n, long delta, long i);

nlohmann::json params_to_json(const ParamContext &ctx);

} // namespace jcas

#endif
