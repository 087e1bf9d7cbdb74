#pragma once

#include <random>

#include <jcas/poly.hpp>
#include <jcas/poly_io.hpp>

namespace testutil {

inline jcas::RingPtr xy(std::int64_t denom = 1) { return jcas::make_ring({"x", "y"}, denom); }

inline jcas::Poly P(const char *text, const jcas::RingPtr &ring) { return jcas::parse_poly(text, ring); }

// Random polynomial with small coefficients and exponents in [lo, hi] per variable.
inline jcas::Poly random_poly(std::mt19937_64 &rng, const jcas::RingPtr &ring, int nterms, int lo, int hi,
                              std::int64_t step = 0)
{
    if (step == 0) {
        step = ring->denom();
    }
    std::vector<jcas::Term> terms;
    for (int k = 0; k < nterms; ++k) {
        jcas::Exponents e(ring->nvars());
        for (auto &v : e) {
            v = (lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1))) * step;
        }
        long c = static_cast<long>(rng() % 19) - 9;
        terms.push_back({e, jcas::Rational(c)});
    }
    return jcas::Poly::from_terms(ring, std::move(terms));
}

} // namespace testutil
