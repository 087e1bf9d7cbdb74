#include <jcas/params.hpp>

#include <numeric>

#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>
#include <jcas/polygon.hpp>

namespace jcas {

namespace {

long positive_part(long v) { return v > 0 ? v : 0; }

} // namespace

bool ParamContext::admissible(long beta) const { return (r * (e - beta)) % d == 0; }

std::vector<long> ParamContext::admissible_betas() const
{
    std::vector<long> out;
    for (long beta = 1; beta <= mfrak; ++beta) {
        if (admissible(beta)) {
            out.push_back(beta);
        }
    }
    return out;
}

Rational ParamContext::gamma_degree(long j) const
{
    return Rational(j) - Rational(positive_part(j - uE)) * deg_tau;
}

Rational ParamContext::x_degree(long j) const
{
    return Rational(j) - Rational(positive_part(j - uF)) * deg_tau;
}

bool in_index_set(long i, long m, long n)
{
    if (i < 0 || i > m * (n - m)) {
        return false;
    }
    return i % m == 0 || (i + 1) % (n - m) == 0;
}

std::vector<long> delta_set(long a, long m, long n)
{
    const long g = std::gcd(m / a, n / a);
    std::vector<long> out;
    for (long k = 1; k <= g; ++k) {
        if (g % k == 0) {
            out.push_back(k);
        }
    }
    return out;
}

ParamContext build_params(long a, long b, long m, long n, long delta, long i)
{
    validate_Q(a, b, m, n);
    if (delta < 1 || (m / a) % delta != 0 || (n / a) % delta != 0) {
        throw ParameterError("delta = " + std::to_string(delta) + " is not a common divisor of m/a and n/a");
    }
    if (i < 0 || i > m * (n - m)) {
        throw ParameterError("i = " + std::to_string(i) + " is outside [0, m(n-m)]");
    }
    const bool by_m = i % m == 0;
    const bool by_nm = (i + 1) % (n - m) == 0;
    if (!by_m && !by_nm) {
        throw ParameterError("i = " + std::to_string(i) + " is not in the index set");
    }
    if (by_m && by_nm) {
        throw ParameterError("i = " + std::to_string(i) + " satisfies both index conditions");
    }

    ParamContext c;
    c.a = a;
    c.b = b;
    c.m = m;
    c.n = n;
    c.delta = delta;
    c.i = i;
    c.eps = make_rational(1, m * (n - m));
    c.ai = seq_a(i, m, n);
    c.bi = seq_b(i, m, n);
    if (by_m) {
        c.u = 0;
        c.w = Direction::W01;
        c.uE = (n - m) / (delta * a);
        c.uF = to_int64(floor(Rational(i * (n - m)) * c.eps));
        c.deg_tau = make_rational(n, m);
    } else {
        c.u = 1;
        c.w = Direction::W11;
        c.uE = m / (delta * a);
        c.uF = to_int64(floor(Rational((i + 1) * m) * c.eps));
        c.deg_tau = make_rational(m, n) + 1;
    }
    c.r = std::gcd(m, n);
    c.d = c.u * m + n;
    c.e = b * c.d / a;
    c.mfrak = c.d + c.e - c.u - 2;
    c.vE = c.d / (delta * a);

    const Rational threshold = make_rational(m * (n - m) * (a - 1), a);
    if (Rational(i) > threshold) {
        c.vF = c.uF + (c.u * n - c.u * m + m) * (a - 1) / a - 1;
    } else {
        const Rational lhs = make_rational(a * delta * (i / m), n - m);
        const Rational rhs = make_rational(a * delta * c.ai, m);
        if (lhs == rhs && is_integer(lhs)) {
            c.vF = c.u * c.ai + c.bi - 1;
        } else {
            c.vF = c.u * c.ai + c.bi;
        }
    }
    return c;
}

nlohmann::json params_to_json(const ParamContext &c)
{
    nlohmann::json betas = c.admissible_betas();
    return {{"a", c.a},
            {"b", c.b},
            {"m", c.m},
            {"n", c.n},
            {"delta", c.delta},
            {"i", c.i},
            {"u", c.u},
            {"w", direction_name(c.w)},
            {"L", c.L_text()},
            {"eps", rational_to_json(c.eps)},
            {"r", c.r},
            {"d", c.d},
            {"e", c.e},
            {"mfrak", c.mfrak},
            {"u_E", c.uE},
            {"v_E", c.vE},
            {"u_F", c.uF},
            {"v_F", c.vF},
            {"a_i", c.ai},
            {"b_i", c.bi},
            {"deg_tau", rational_to_json(c.deg_tau)},
            {"admissible_betas", betas}};
}

} // namespace jcas
