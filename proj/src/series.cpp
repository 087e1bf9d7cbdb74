#include <jcas/series.hpp>

#include <jcas/error.hpp>

namespace jcas {

TruncSeries::TruncSeries(RingPtr ring, std::size_t order) : ring_(std::move(ring)), coeffs_(order, Poly(ring_)) {}

TruncSeries::TruncSeries(RingPtr ring, std::size_t order, std::vector<Poly> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs))
{
    coeffs_.resize(order, Poly(ring_));
    for (const auto &c : coeffs_) {
        if (!same_ring(c.ring(), ring_)) {
            throw ContextError("series coefficient from a different ring");
        }
    }
}

const Poly &TruncSeries::coeff(std::size_t j) const
{
    if (j >= coeffs_.size()) {
        throw TruncationError("coefficient of t^" + std::to_string(j) + " unknown at truncation order " +
                              std::to_string(coeffs_.size()));
    }
    return coeffs_[j];
}

void TruncSeries::set_coeff(std::size_t j, Poly p)
{
    if (j >= coeffs_.size()) {
        throw TruncationError("t^" + std::to_string(j) + " beyond truncation order");
    }
    coeffs_[j] = std::move(p);
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > coeffs_.size()) {
        throw TruncationError("cannot extend a truncated series");
    }
    return TruncSeries(ring_, order, std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + order));
}

TruncSeries &TruncSeries::operator+=(const TruncSeries &o)
{
    const std::size_t n = std::min(order(), o.order());
    coeffs_.resize(n, Poly(ring_));
    for (std::size_t j = 0; j < n; ++j) {
        coeffs_[j] += o.coeffs_[j];
    }
    return *this;
}

TruncSeries &TruncSeries::operator-=(const TruncSeries &o)
{
    const std::size_t n = std::min(order(), o.order());
    coeffs_.resize(n, Poly(ring_));
    for (std::size_t j = 0; j < n; ++j) {
        coeffs_[j] -= o.coeffs_[j];
    }
    return *this;
}

TruncSeries &TruncSeries::operator*=(const Rational &c)
{
    for (auto &p : coeffs_) {
        p *= c;
    }
    return *this;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(a.ring_, n);
    for (std::size_t k = 0; k < n; ++k) {
        PolyAccumulator acc(a.ring_);
        bool any = false;
        for (std::size_t i = 0; i <= k; ++i) {
            const Poly &p = a.coeffs_[i];
            const Poly &q = b.coeffs_[k - i];
            if (p.is_zero() || q.is_zero()) {
                continue;
            }
            acc.add(p * q);
            any = true;
        }
        if (any) {
            r.coeffs_[k] = acc.finish();
        }
    }
    return r;
}

bool TruncSeries::operator==(const TruncSeries &o) const { return coeffs_ == o.coeffs_; }

TruncSeries TruncSeries::pow(unsigned long k) const
{
    TruncSeries result(ring_, order());
    if (order() > 0) {
        result.coeffs_[0] = Poly::constant(ring_, 1);
    }
    TruncSeries base = *this;
    while (k > 0) {
        if (k & 1UL) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

namespace {

TruncSeries frac_multinomial(const std::vector<Poly> &y, const Rational &A, std::size_t order, const Poly &lead,
                             const Poly &inv0)
{
    const auto &ring = lead.ring();
    TruncSeries z(ring, order);
    for (std::size_t j = 1; j < order && j < y.size(); ++j) {
        z.set_coeff(j, y[j] * inv0);
    }
    TruncSeries sum(ring, order);
    sum.set_coeff(0, Poly::constant(ring, 1));
    TruncSeries zs = sum;
    // Z has no constant term, so Z^s only reaches t^order for s < order.
    for (std::size_t s = 1; s < order; ++s) {
        zs = zs * z;
        Rational w = binomial(A, s);
        if (w == 0) {
            break;
        }
        sum += zs * w;
    }
    for (std::size_t j = 0; j < order; ++j) {
        sum.set_coeff(j, sum.coeff(j) * lead);
    }
    return sum;
}

TruncSeries frac_recurrence(const std::vector<Poly> &y, const Rational &A, std::size_t order, const Poly &lead,
                            const Poly &inv0)
{
    const auto &ring = lead.ring();
    std::vector<Poly> g;
    g.reserve(order);
    g.push_back(lead);
    const Rational A1 = A + 1;
    for (std::size_t k = 1; k < order; ++k) {
        PolyAccumulator acc(ring);
        for (std::size_t j = 1; j <= k && j < y.size(); ++j) {
            if (y[j].is_zero() || g[k - j].is_zero()) {
                continue;
            }
            Rational w = A1 * static_cast<long>(j) - static_cast<long>(k);
            if (w == 0) {
                continue;
            }
            acc.add(y[j] * g[k - j], w);
        }
        Poly gk = acc.finish();
        if (!gk.is_zero()) {
            gk = gk * inv0;
            gk /= Rational(static_cast<long>(k));
        }
        g.push_back(std::move(gk));
    }
    return TruncSeries(ring, order, std::move(g));
}

} // namespace

TruncSeries frac_power_series(const std::vector<Poly> &y, const Rational &A_in, std::size_t order,
                              FracPowerMethod method)
{
    Rational A = A_in;
    A.canonicalize();
    if (y.empty()) {
        throw DomainError("empty series");
    }
    if (order == 0) {
        throw DomainError("truncation order must be at least 1");
    }
    const auto &ring = y[0].ring();
    if (y[0].is_zero()) {
        throw RootError("leading coefficient y_0 is zero");
    }
    if (!y[0].is_monomial()) {
        throw RootError("root choice for a non-monomial y_0 is not determined: " + to_string(y[0]));
    }
    for (const auto &p : y) {
        if (!same_ring(p.ring(), ring)) {
            throw ContextError("series coefficients from different rings");
        }
    }
    const Poly lead = monomial_power(y[0], A);
    const Poly inv0 = y[0].monomial_inverse();
    if (method == FracPowerMethod::Multinomial) {
        return frac_multinomial(y, A, order, lead, inv0);
    }
    return frac_recurrence(y, A, order, lead, inv0);
}

Poly coeff_in(const Poly &f, std::size_t var, std::int64_t num)
{
    std::vector<Term> terms;
    for (const auto &t : f.terms()) {
        if (t.exps[var] == num) {
            Term nt = t;
            nt.exps[var] = 0;
            terms.push_back(std::move(nt));
        }
    }
    return Poly::from_terms(f.ring(), std::move(terms));
}

} // namespace jcas
