#include <jcas/division.hpp>

#include <map>

#include <jcas/error.hpp>

namespace jcas {

Poly binomial_L(const RingPtr &ring, bool x_plus_y)
{
    return Poly::variable(ring, "x") + (x_plus_y ? Poly::variable(ring, "y") : Poly::constant(ring, 1));
}

namespace {

// Extracts c from L = x + c.
Poly split_linear(const Poly &L, std::size_t xi)
{
    const std::int64_t D = L.ring()->denom();
    Poly c(L.ring());
    bool have_x = false;
    std::vector<Term> rest;
    for (const auto &t : L.terms()) {
        if (t.exps[xi] == D) {
            bool pure = true;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (i != xi && t.exps[i] != 0) {
                    pure = false;
                }
            }
            if (!pure || t.coeff != 1 || have_x) {
                throw DomainError("divisor must be x + c with c free of x, got " + to_string(L));
            }
            have_x = true;
        } else if (t.exps[xi] == 0) {
            rest.push_back(t);
        } else {
            throw DomainError("divisor must be x + c with c free of x, got " + to_string(L));
        }
    }
    if (!have_x) {
        throw DomainError("divisor must be x + c with c free of x, got " + to_string(L));
    }
    return Poly::from_terms(L.ring(), std::move(rest));
}

} // namespace

std::optional<Poly> divide_by_binomial_power(const Poly &f, const Poly &L, unsigned k)
{
    if (!same_ring(f.ring(), L.ring())) {
        throw ContextError("divisor from a different ring");
    }
    const auto &ring = f.ring();
    const auto xi = ring->index("x");
    const std::int64_t D = ring->denom();
    const Poly c = split_linear(L, xi);
    if (f.is_zero() || k == 0) {
        return f;
    }
    const bool c_is_scalar = c.is_constant();
    const Rational cval = c.constant_term();

    // Residue class of the x-exponent mod D -> (x-exponent/D floor -> coefficient).
    std::map<std::int64_t, std::map<std::int64_t, Poly>> classes;
    for (const auto &[e, coef] : collect(f, xi)) {
        const std::int64_t q = floor_div(e, D);
        const std::int64_t r = e - q * D;
        classes[r].emplace(q, coef);
    }
    PolyAccumulator out(ring);
    for (auto &[r, parts] : classes) {
        const std::int64_t lo = parts.begin()->first;
        const std::int64_t hi = parts.rbegin()->first;
        if (hi - lo < static_cast<std::int64_t>(k)) {
            return std::nullopt;
        }
        std::vector<Poly> a(static_cast<std::size_t>(hi - lo + 1), Poly(ring));
        for (auto &[q, coef] : parts) {
            a[static_cast<std::size_t>(q - lo)] = coef;
        }
        for (unsigned step = 0; step < k; ++step) {
            // Synthetic division of sum a_i x^i by (x + c).
            const std::size_t n = a.size() - 1;
            if (n == 0) {
                return std::nullopt;
            }
            std::vector<Poly> qt(n, Poly(ring));
            qt[n - 1] = a[n];
            for (std::size_t i = n - 1; i >= 1; --i) {
                qt[i - 1] = a[i] - (c_is_scalar ? qt[i] * cval : qt[i] * c);
            }
            Poly rem = a[0] - (c_is_scalar ? qt[0] * cval : qt[0] * c);
            if (!rem.is_zero()) {
                return std::nullopt;
            }
            a = std::move(qt);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            Exponents sh(ring->nvars(), 0);
            sh[xi] = (lo + static_cast<std::int64_t>(i)) * D + r;
            out.add(a[i].shift(sh));
        }
    }
    return out.finish();
}

unsigned binomial_multiplicity(const Poly &f, const Poly &L, unsigned cap)
{
    if (f.is_zero()) {
        return cap;
    }
    unsigned l = 0;
    Poly cur = f;
    while (l < cap) {
        auto q = divide_by_binomial_power(cur, L, 1);
        if (!q) {
            break;
        }
        cur = std::move(*q);
        ++l;
    }
    return l;
}

std::optional<Poly> exact_divide(const Poly &f, const Poly &g)
{
    if (g.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    const Term &lg = g.leading_term();
    PolyAccumulator q(f.ring());
    Poly rem = f;
    while (!rem.is_zero()) {
        const Term &lr = rem.leading_term();
        Exponents e(lr.exps.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = lr.exps[i] - lg.exps[i];
            if (e[i] < 0) {
                return std::nullopt;
            }
        }
        const Rational c = lr.coeff / lg.coeff;
        q.add(e, c);
        rem -= g.shift(e) * c;
    }
    return q.finish();
}

} // namespace jcas
