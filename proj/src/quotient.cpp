#include <jcas/quotient.hpp>

#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

QuotientElem::QuotientElem(RingPtr ring, bool x_plus_y, unsigned k) : ring_(std::move(ring)), xy_(x_plus_y)
{
    coeffs_.assign(k, Poly(ring_));
}

bool QuotientElem::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

void QuotientElem::check(const QuotientElem &o) const
{
    if (!same_ring(ring_, o.ring_) || xy_ != o.xy_ || k() != o.k()) {
        throw ContextError("quotient elements from different rings");
    }
}

QuotientElem QuotientElem::operator+(const QuotientElem &o) const
{
    check(o);
    QuotientElem r = *this;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        r.coeffs_[j] += o.coeffs_[j];
    }
    return r;
}

QuotientElem QuotientElem::operator-(const QuotientElem &o) const
{
    check(o);
    QuotientElem r = *this;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        r.coeffs_[j] -= o.coeffs_[j];
    }
    return r;
}

QuotientElem QuotientElem::operator*(const QuotientElem &o) const
{
    check(o);
    QuotientElem r(ring_, xy_, k());
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
        if (coeffs_[p].is_zero()) {
            continue;
        }
        for (std::size_t q = 0; p + q < coeffs_.size(); ++q) {
            r.coeffs_[p + q] += coeffs_[p] * o.coeffs_[q];
        }
    }
    return r;
}

bool QuotientElem::operator==(const QuotientElem &o) const
{
    check(o);
    return coeffs_ == o.coeffs_;
}

Poly QuotientElem::lift() const
{
    const Poly X = Poly::variable(ring_, "x");
    const Poly L = xy_ ? X + Poly::variable(ring_, "y") : X + Poly::constant(ring_, 1);
    Poly acc(ring_);
    Poly Lj = Poly::constant(ring_, 1);
    for (const auto &c : coeffs_) {
        acc += c * Lj;
        Lj = Lj * L;
    }
    return acc;
}

std::string QuotientElem::to_string() const
{
    std::string s;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + jcas::to_string(coeffs_[j]) + ")";
        if (j > 0) {
            s += "*L^" + std::to_string(j);
        }
    }
    return s.empty() ? "0" : s;
}

QuotientElem reduce_Pk(const Poly &f, bool x_plus_y, unsigned k)
{
    const auto &ring = f.ring();
    const auto xi = ring->index("x");
    const auto yi = ring->index("y");
    const std::int64_t D = ring->denom();
    // The rewritten variable v becomes L - c with c = 1 (L = x+1) or c = x
    // (L = x+y): v^e = sum_j binom(e, j) L^j (-c)^(e-j), truncated at L^k.
    const std::size_t vi = x_plus_y ? yi : xi;
    QuotientElem q(ring, x_plus_y, k);
    if (k == 0) {
        return q;
    }
    std::vector<PolyAccumulator> acc(k, PolyAccumulator(ring));
    for (const auto &t : f.terms()) {
        if (t.exps[vi] % D != 0) {
            throw LatticeError(std::string("P_k needs integer exponents of ") + (x_plus_y ? "y" : "x") + ": " +
                               to_string(f));
        }
        const long e = static_cast<long>(t.exps[vi] / D);
        Exponents rest = t.exps;
        rest[vi] = 0;
        for (unsigned j = 0; j < k; ++j) {
            const Rational bc = binomial(Rational(e), j);
            if (bc == 0) {
                continue;
            }
            const long pw = e - static_cast<long>(j);
            const Rational sign = (pw % 2 == 0) ? Rational(1) : Rational(-1);
            Exponents ex = rest;
            if (x_plus_y) {
                ex[xi] += pw * D;
            }
            acc[j].add(ex, t.coeff * bc * sign);
        }
    }
    for (unsigned j = 0; j < k; ++j) {
        q.coeffs_[j] = acc[j].finish();
    }
    return q;
}

nlohmann::json quotient_to_json(const QuotientElem &q)
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto &p : q.coeffs()) {
        c.push_back(to_string(p));
    }
    return {{"k", q.k()}, {"L", q.x_plus_y() ? "x+y" : "x+1"}, {"coeffs", c}, {"zero", q.is_zero()}};
}

} // namespace jcas
