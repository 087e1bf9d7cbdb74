#include <jcas/laurent.hpp>

#include <algorithm>

#include <jcas/error.hpp>
#include <jcas/series.hpp>

namespace jcas {

namespace {

Poly drop_below(const Poly &p, std::size_t xi, std::int64_t order_num)
{
    std::vector<Term> kept;
    for (const auto &t : p.terms()) {
        if (t.exps[xi] >= order_num) {
            kept.push_back(t);
        }
    }
    return Poly::from_sorted_unchecked(p.ring(), std::move(kept));
}

} // namespace

LaurentSeriesX::LaurentSeriesX(Poly poly, std::int64_t trunc_order, std::string x_name)
    : poly_(std::move(poly)), trunc_(trunc_order), xi_(poly_.ring()->index(x_name))
{
    if (poly_.ring()->denom() != 1) {
        throw DomainError("Laurent series in x need integer exponents");
    }
    poly_ = drop_below(poly_, xi_, trunc_);
}

std::map<std::int64_t, Poly> LaurentSeriesX::coefficients() const { return collect(poly_, xi_); }

std::optional<std::int64_t> LaurentSeriesX::leading_exponent() const
{
    if (poly_.is_zero()) {
        return std::nullopt;
    }
    std::int64_t m = poly_.terms()[0].exps[xi_];
    for (const auto &t : poly_.terms()) {
        m = std::max(m, t.exps[xi_]);
    }
    return m;
}

LaurentSeriesX LaurentSeriesX::operator+(const LaurentSeriesX &o) const
{
    const auto order = std::max(trunc_, o.trunc_);
    return LaurentSeriesX(poly_ + o.poly_, order, poly_.ring()->vars()[xi_]);
}

LaurentSeriesX LaurentSeriesX::operator-(const LaurentSeriesX &o) const
{
    const auto order = std::max(trunc_, o.trunc_);
    return LaurentSeriesX(poly_ - o.poly_, order, poly_.ring()->vars()[xi_]);
}

LaurentSeriesX LaurentSeriesX::operator*(const LaurentSeriesX &o) const
{
    const auto &name = poly_.ring()->vars()[xi_];
    if (poly_.is_zero() || o.poly_.is_zero()) {
        // 0 is only known down to the truncation order; the product is
        // unknown below trunc + lead(other).
        auto la = o.leading_exponent().value_or(0);
        auto lb = leading_exponent().value_or(0);
        return LaurentSeriesX(Poly(poly_.ring()), std::max(trunc_ + la, o.trunc_ + lb), name);
    }
    const auto la = *leading_exponent();
    const auto lb = *o.leading_exponent();
    const auto order = std::min(la + o.trunc_, lb + trunc_);
    return LaurentSeriesX(drop_below(poly_, xi_, order - lb) * drop_below(o.poly_, xi_, order - la), order, name);
}

LaurentSeriesX LaurentSeriesX::operator*(const Rational &c) const
{
    return LaurentSeriesX(poly_ * c, trunc_, poly_.ring()->vars()[xi_]);
}

LaurentSeriesX LaurentSeriesX::pow(unsigned long k) const
{
    const auto &name = poly_.ring()->vars()[xi_];
    if (k == 0) {
        return LaurentSeriesX(Poly::constant(poly_.ring(), 1), std::numeric_limits<std::int32_t>::min(), name);
    }
    LaurentSeriesX r = *this;
    for (unsigned long i = 1; i < k; ++i) {
        r = r * *this;
    }
    return r;
}

LaurentSeriesX LaurentSeriesX::truncated(std::int64_t order) const
{
    if (order < trunc_) {
        throw TruncationError("cannot extend a truncated Laurent series");
    }
    return LaurentSeriesX(poly_, order, poly_.ring()->vars()[xi_]);
}

LaurentSeriesX laurent_root(const Poly &G, unsigned a, std::int64_t order)
{
    const auto &ring = G.ring();
    if (ring->denom() != 1) {
        throw RootError("Laurent root needs integer exponents");
    }
    if (a < 1) {
        throw RootError("root index must be positive");
    }
    const auto xi = ring->index("x");
    if (G.is_zero()) {
        throw RootError("root of zero");
    }
    auto parts = collect(G, xi);
    const auto top = parts.rbegin()->first;
    if (top != static_cast<std::int64_t>(a)) {
        throw RootError("x-degree " + std::to_string(top) + " of G is not " + std::to_string(a));
    }
    const Poly &lc = parts.rbegin()->second;
    if (!(lc.is_constant() && lc.constant_term() == 1)) {
        throw RootError("x-leading coefficient of G must be 1, got " + to_string(lc));
    }
    // C = x (1 + sum_k G_{a-k} t^k)^{1/a} with t = 1/x; t^k <-> x^{1-k}.
    const std::int64_t kmax = 1 - order;
    if (kmax < 0) {
        return LaurentSeriesX(Poly(ring), order);
    }
    const auto n = static_cast<std::size_t>(kmax + 1);
    std::vector<Poly> ys(n, Poly(ring));
    ys[0] = Poly::constant(ring, 1);
    for (const auto &[e, c] : parts) {
        const std::int64_t k = static_cast<std::int64_t>(a) - e;
        if (k >= 1 && k <= kmax) {
            ys[static_cast<std::size_t>(k)] = c;
        }
    }
    auto s = frac_power_series(ys, Rational(1, a), n);
    PolyAccumulator acc(ring);
    for (std::size_t k = 0; k < n; ++k) {
        Exponents shift(ring->nvars(), 0);
        shift[xi] = 1 - static_cast<std::int64_t>(k);
        acc.add(s.coeff(k).shift(shift));
    }
    return LaurentSeriesX(acc.finish(), order);
}

} // namespace jcas
