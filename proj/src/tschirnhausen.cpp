#include <jcas/tschirnhausen.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <jcas/division.hpp>
#include <jcas/error.hpp>
#include <jcas/gradings.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

// ---- Tschirnhausen ----

Tschirnhausen::Tschirnhausen(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    while (c_.size() > 1 && c_.back() == 0) {
        c_.pop_back();
    }
    if (c_.size() < 2) {
        throw DomainError("Tschirnhausen polynomial must have degree >= 1");
    }
    if (c_.back() != 1) {
        throw DomainError("Tschirnhausen polynomial must be monic");
    }
    if (c_[c_.size() - 2] != 0 && c_.size() > 2) {
        throw DomainError("Tschirnhausen polynomial must have zero subleading coefficient");
    }
    if (c_.size() == 2 && c_[0] != 0) {
        throw DomainError("degree-one Tschirnhausen polynomial is z");
    }
}

Tschirnhausen Tschirnhausen::monomial(std::size_t k)
{
    std::vector<Rational> c(k + 1, 0);
    c[k] = 1;
    return Tschirnhausen(std::move(c));
}

Tschirnhausen Tschirnhausen::plus_monomial(std::size_t j, const Rational &lambda) const
{
    if (j + 2 > degree()) {
        throw DomainError("move would break the Tschirnhausen form");
    }
    auto c = c_;
    c[j] += lambda;
    return Tschirnhausen(std::move(c));
}

Tschirnhausen Tschirnhausen::power(unsigned long a) const
{
    std::vector<Rational> acc{1};
    for (unsigned long i = 0; i < a; ++i) {
        std::vector<Rational> next(acc.size() + c_.size() - 1, 0);
        for (std::size_t p = 0; p < acc.size(); ++p) {
            if (acc[p] == 0) {
                continue;
            }
            for (std::size_t q = 0; q < c_.size(); ++q) {
                next[p + q] += acc[p] * c_[q];
            }
        }
        acc = std::move(next);
    }
    return Tschirnhausen(std::move(acc));
}

Tschirnhausen Tschirnhausen::reflected() const
{
    if (degree() % 2 != 0) {
        throw DomainError("reflection needs even degree");
    }
    auto c = c_;
    for (std::size_t j = 1; j < c.size(); j += 2) {
        c[j] = -c[j];
    }
    return Tschirnhausen(std::move(c));
}

Poly Tschirnhausen::compose(const Poly &E) const
{
    Poly r = Poly::constant(E.ring(), c_.back());
    for (std::size_t j = c_.size() - 1; j-- > 0;) {
        r = r * E + Poly::constant(E.ring(), c_[j]);
    }
    return r;
}

Poly Tschirnhausen::compose(const std::vector<Poly> &powers) const
{
    if (powers.size() < c_.size()) {
        throw DomainError("not enough powers for composition");
    }
    PolyAccumulator acc(powers[0].ring());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        acc.add(powers[j], c_[j]);
    }
    return acc.finish();
}

std::string Tschirnhausen::to_string(const std::string &var) const
{
    auto R = make_ring({var});
    std::vector<Term> terms;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        terms.push_back({Exponents{static_cast<std::int64_t>(j)}, c_[j]});
    }
    return jcas::to_string(Poly::from_terms(R, std::move(terms)));
}

nlohmann::json Tschirnhausen::to_json() const
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto &q : c_) {
        c.push_back(rational_to_json(q));
    }
    return {{"degree", degree()}, {"coeffs", c}, {"text", to_string()}};
}

// ---- helpers ----

namespace {

std::int64_t total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

struct XY {
    std::size_t xi;
    std::size_t yi;
};

XY xy_index(const RingPtr &ring)
{
    if (ring->denom() != 1) {
        throw DomainError("expected integer exponents");
    }
    return {ring->index("x"), ring->index("y")};
}

Poly xy_monomial(const RingPtr &ring, std::int64_t i, std::int64_t j, const Rational &c = 1)
{
    Exponents e(ring->nvars(), 0);
    e[ring->index("x")] = i * ring->denom();
    e[ring->index("y")] = j * ring->denom();
    return Poly::monomial(ring, std::move(e), c);
}

Rational xy_coeff(const Poly &f, std::int64_t i, std::int64_t j)
{
    Exponents e(f.ring()->nvars(), 0);
    e[f.ring()->index("x")] = i * f.ring()->denom();
    e[f.ring()->index("y")] = j * f.ring()->denom();
    return f.coeff(e);
}

void check_structural(const Poly &F, long a, long m, long n)
{
    if (a < 1 || m <= 0 || n <= 0 || m % a != 0 || n % a != 0) {
        throw PreconditionError("need a | m and a | n");
    }
    if (!trapezoid(m, n).contains(newton_polygon0(F))) {
        throw PreconditionError("N0(F) is not contained in T_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    }
    const Rational corner = xy_coeff(F, m, n);
    if (corner != 1) {
        throw NormalizationError("coefficient of x^" + std::to_string(m) + "*y^" + std::to_string(n) + " is " +
                                 corner.get_str() + ", expected 1");
    }
}

LatticePolygon nsecond(long a, long m, long n)
{
    return trapezoid(make_rational(m, a), make_rational(n, a))
        .translated({make_rational(m * (a - 1), a), make_rational(n * (a - 1), a)});
}

} // namespace

// ---- extract_Q ----

Poly extract_Q(const Poly &F, long a, long m, long n)
{
    check_structural(F, a, m, n);
    const auto &ring = F.ring();
    xy_index(ring);
    const std::int64_t ma = m / a;
    const std::int64_t na = n / a;
    auto pts = trapezoid(ma, na).lattice_points();
    // Descending under ((m+n) x + (m+n+1) y, x): strict, additive, and with
    // the corner (m/a, n/a) as the unique maximum.
    const std::int64_t c1 = m + n;
    const std::int64_t c2 = m + n + 1;
    std::sort(pts.begin(), pts.end(), [&](const auto &p, const auto &q) {
        const auto fp = c1 * p.first + c2 * p.second;
        const auto fq = c1 * q.first + c2 * q.second;
        if (fp != fq) {
            return fp > fq;
        }
        return p.first > q.first;
    });
    if (pts.empty() || pts[0] != std::pair<std::int64_t, std::int64_t>{ma, na}) {
        throw InconsistencyError("corner is not the leading lattice point");
    }
    const Rational ainv = make_rational(1, a);
    Poly P = xy_monomial(ring, ma, na);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const auto tx = (a - 1) * ma + pts[k].first;
        const auto ty = (a - 1) * na + pts[k].second;
        const Rational lambda = xy_coeff(F, tx, ty);
        const Rational have = xy_coeff(P.pow(static_cast<unsigned long>(a)), tx, ty);
        const Rational q = (lambda - have) * ainv;
        if (q != 0) {
            P += xy_monomial(ring, pts[k].first, pts[k].second, q);
        }
    }
    return P;
}

// ---- decompose_principal ----

namespace {

// Approximate delta-th root of Q in grlex order, followed by the E-adic
// expansion. Returns nullopt when no decomposition of this depth exists with
// the given leading coefficient of E.
std::optional<Decomposition> try_depth(const Poly &Q, long delta, const Rational &lc_root)
{
    const auto &ring = Q.ring();
    const Term &lt = Q.leading_term();
    Exponents e0(lt.exps.size());
    for (std::size_t i = 0; i < e0.size(); ++i) {
        e0[i] = lt.exps[i] / delta;
    }
    Poly E = Poly::monomial(ring, e0, lc_root);
    if (delta == 1) {
        return Decomposition{Q, 1, Tschirnhausen::monomial(1)};
    }
    const std::int64_t degE = total_degree(e0);
    const std::int64_t stop = (delta - 2) * degE;
    const Poly lead_factor = Poly::monomial(ring, e0, lc_root).pow(static_cast<unsigned long>(delta - 1)) *
                             Rational(delta);
    const Term &lf = lead_factor.leading_term();
    // The correction loop adds at most one term per monomial of degree < degE.
    const std::int64_t max_steps = (degE + 2) * (degE + 2) * static_cast<std::int64_t>(ring->nvars()) + 8;
    Poly R = Q - E.pow(static_cast<unsigned long>(delta));
    for (std::int64_t step = 0; !R.is_zero(); ++step) {
        const Term &rt = R.leading_term();
        if (total_degree(rt.exps) <= stop) {
            break;
        }
        if (step > max_steps) {
            return std::nullopt;
        }
        Exponents te(rt.exps.size());
        for (std::size_t i = 0; i < te.size(); ++i) {
            te[i] = rt.exps[i] - lf.exps[i];
            if (te[i] < 0) {
                return std::nullopt;
            }
        }
        E += Poly::monomial(ring, std::move(te), rt.coeff / lf.coeff);
        R = Q - E.pow(static_cast<unsigned long>(delta));
    }
    // E-adic expansion of the remainder with constant coefficients.
    std::vector<Rational> coeffs(static_cast<std::size_t>(delta + 1), 0);
    coeffs[static_cast<std::size_t>(delta)] = 1;
    std::vector<Poly> powers{Poly::constant(ring, 1)};
    for (long k = 1; k <= delta - 2; ++k) {
        powers.push_back(powers.back() * E);
    }
    for (long k = delta - 2; k >= 0 && !R.is_zero(); --k) {
        const Term &rt = R.leading_term();
        const auto d = total_degree(rt.exps);
        if (d > k * degE) {
            return std::nullopt;
        }
        if (d < k * degE) {
            continue;
        }
        const Term &pt = powers[static_cast<std::size_t>(k)].leading_term();
        if (pt.exps != rt.exps) {
            return std::nullopt;
        }
        const Rational c = rt.coeff / pt.coeff;
        coeffs[static_cast<std::size_t>(k)] = c;
        R -= powers[static_cast<std::size_t>(k)] * c;
    }
    if (!R.is_zero()) {
        return std::nullopt;
    }
    Tschirnhausen alpha(std::move(coeffs));
    if (alpha.compose(E) != Q) {
        return std::nullopt;
    }
    return Decomposition{std::move(E), delta, std::move(alpha)};
}

std::vector<long> divisors_descending(std::int64_t g)
{
    std::vector<long> d;
    for (std::int64_t k = g; k >= 1; --k) {
        if (g % k == 0) {
            d.push_back(static_cast<long>(k));
        }
    }
    return d;
}

} // namespace

Decomposition decompose_principal(const Poly &Q, std::optional<std::pair<std::int64_t, std::int64_t>> corner)
{
    if (Q.is_constant()) {
        throw DomainError("decomposition of a constant");
    }
    if (has_negative_exponents(Q)) {
        throw DomainError("decomposition needs a polynomial");
    }
    const Term &lt = Q.leading_term();
    std::int64_t g = 0;
    for (auto e : lt.exps) {
        g = std::gcd(g, e);
    }
    std::optional<Decomposition> found;
    for (long delta : divisors_descending(g)) {
        auto root = rational_root(lt.coeff, static_cast<unsigned long>(delta));
        if (root) {
            found = try_depth(Q, delta, *root);
            if (found) {
                break;
            }
        } else if (delta > 1) {
            // Over Q no root of the leading coefficient exists; a decomposition
            // of the normalized polynomial means the depth needs an extension.
            if (try_depth(Q / lt.coeff, delta, 1)) {
                throw FieldExtensionError("a depth-" + std::to_string(delta) +
                                          " decomposition needs a root of " + lt.coeff.get_str());
            }
        }
    }
    if (!found) {
        throw InconsistencyError("no decomposition found, not even the trivial one");
    }
    Decomposition d = std::move(*found);
    if (corner) {
        const auto &ring = Q.ring();
        const auto [cx, cy] = *corner;
        if (cx % d.delta != 0 || cy % d.delta != 0) {
            throw NormalizationError("corner is not divisible by the depth");
        }
        Exponents ce(ring->nvars(), 0);
        ce[ring->index("x")] = cx / d.delta * ring->denom();
        ce[ring->index("y")] = cy / d.delta * ring->denom();
        const Rational c = d.E.coeff(ce);
        if (c == -1 && d.delta % 2 == 0) {
            d.E = -d.E;
            d.alpha = d.alpha.reflected();
        } else if (c != 1) {
            throw NormalizationError("corner coefficient of E is " + c.get_str() + ", cannot normalize to 1");
        }
    }
    return d;
}

// ---- minimize_remainder ----

bool in_tschirnhausen_window(const Poly &P, const LatticePolygon &N0F, const LatticePolygon &Ns)
{
    for (auto [i, j] : support(P)) {
        const Point p{i, j};
        if (Ns.contains(p) || !N0F.contains(p)) {
            return false;
        }
    }
    return true;
}

RemainderResult minimize_remainder(const Poly &F, long a, long m, long n)
{
    check_structural(F, a, m, n);
    const auto N0F = newton_polygon0(F);
    const auto Ns = nsecond(a, m, n);
    Poly Q = extract_Q(F, a, m, n);
    Decomposition dec = decompose_principal(Q, std::pair<std::int64_t, std::int64_t>{m / a, n / a});
    const auto top = static_cast<std::size_t>(a * dec.delta);
    std::vector<Poly> powers{Poly::constant(F.ring(), 1)};
    for (std::size_t k = 1; k <= top; ++k) {
        powers.push_back(powers.back() * dec.E);
    }
    Tschirnhausen alpha = dec.alpha.power(static_cast<unsigned long>(a));
    Poly Fc = F - alpha.compose(powers);
    if (!in_tschirnhausen_window(Fc, N0F, Ns)) {
        throw InconsistencyError("alpha_Q^a is not in the Tschirnhausen window of F");
    }
    int moves = 0;
    bool improved = true;
    while (improved && !Fc.is_zero()) {
        improved = false;
        const auto V = newton_polygon0(Fc);
        for (std::size_t k = 0; k + 2 <= top && !improved; ++k) {
            const Poly &Ek = powers[k];
            for (const auto &t : Fc.terms()) {
                const Rational ek = Ek.coeff(t.exps);
                if (ek == 0) {
                    continue;
                }
                const Rational lambda = t.coeff / ek;
                Poly Fn = Fc - Ek * lambda;
                if (!in_tschirnhausen_window(Fn, N0F, Ns)) {
                    continue;
                }
                const auto Vn = newton_polygon0(Fn);
                if (V.contains(Vn) && Vn != V) {
                    alpha = alpha.plus_monomial(k, lambda);
                    Fc = std::move(Fn);
                    ++moves;
                    improved = true;
                    break;
                }
            }
        }
    }
    RemainderResult r{Q,           F - Q.pow(static_cast<unsigned long>(a)),
                      dec.E,       dec.delta,
                      dec.alpha,   alpha,
                      Fc,          newton_polygon0(Fc),
                      moves};
    return r;
}

nlohmann::json remainder_to_json(const RemainderResult &r)
{
    return {{"Q", poly_to_json(r.Q)},
            {"Q_text", to_string(r.Q)},
            {"R", poly_to_json(r.R)},
            {"Ecirc", poly_to_json(r.Ecirc)},
            {"Ecirc_text", to_string(r.Ecirc)},
            {"delta", r.delta},
            {"alphaQ", r.alphaQ.to_json()},
            {"alphaCirc", r.alphaCirc.to_json()},
            {"Fcirc", poly_to_json(r.Fcirc)},
            {"Fcirc_text", to_string(r.Fcirc)},
            {"Vcirc", polygon_to_json(r.Vcirc)},
            {"moves", r.moves}};
}

// ---- verify_leading_structure ----

namespace {

StructureCheck compare_piece(const std::string &name, const Poly &have, const Poly &want)
{
    Poly diff = have - want;
    if (diff.is_zero()) {
        return {name, true, ""};
    }
    return {name, false, to_string(Poly::from_sorted_unchecked(diff.ring(), {diff.leading_term()}))};
}

StructureCheck divisibility_chain(const std::string &name, const Poly &P, Direction w, std::int64_t top_deg,
                                  std::int64_t top_pow)
{
    const auto g = w_decompose(P, w);
    const auto L = binomial_L(P.ring(), w == Direction::W11);
    for (std::int64_t i = 0; i <= top_pow; ++i) {
        const Poly piece = g.piece(top_deg - i, P.ring());
        if (!divide_by_binomial_power(piece, L, static_cast<unsigned>(top_pow - i))) {
            return {name, false, "i=" + std::to_string(i) + ": " + to_string(piece)};
        }
    }
    return {name, true, ""};
}

} // namespace

std::vector<StructureCheck> verify_leading_structure(const Poly &Q, const Poly &E, long delta, const Poly *R, long a,
                                                     long m, long n)
{
    const auto &ring = Q.ring();
    const auto X = Poly::variable(ring, "x");
    const auto Y = Poly::variable(ring, "y");
    const auto one = Poly::constant(ring, 1);
    const long qa = m / a;
    const long qb = n / a;
    std::vector<StructureCheck> out;
    out.push_back(compare_piece("Q (0,1)-top piece", w_piece(Q, Direction::W01, qb),
                                (X + one).pow(qa) * Y.pow(qb)));
    out.push_back(compare_piece("Q (1,1)-top piece", w_piece(Q, Direction::W11, qa + qb),
                                X.pow(qa) * (X + Y).pow(qb)));
    if (qa % delta == 0 && qb % delta == 0) {
        const long ea = qa / delta;
        const long eb = qb / delta;
        out.push_back(compare_piece("E (0,1)-top piece", w_piece(E, Direction::W01, eb),
                                    (X + one).pow(ea) * Y.pow(eb)));
        out.push_back(compare_piece("E (1,1)-top piece", w_piece(E, Direction::W11, ea + eb),
                                    X.pow(ea) * (X + Y).pow(eb)));
        out.push_back(divisibility_chain("E (0,1)-pieces divisible by powers of x+1", E, Direction::W01, eb, ea));
        out.push_back(divisibility_chain("E (1,1)-pieces divisible by powers of x+y", E, Direction::W11, ea + eb, eb));
    } else {
        out.push_back({"E shape", false, "depth does not divide the corner"});
    }
    out.push_back(divisibility_chain("Q (0,1)-pieces divisible by powers of x+1", Q, Direction::W01, qb, qa));
    if (R) {
        StructureCheck c{"R (0,1)-degree bound", true, ""};
        const auto yi = ring->index("y");
        for (const auto &t : R->terms()) {
            if (t.exps[yi] > (n - qa - 1) * ring->denom()) {
                c.ok = false;
                c.witness = to_string(Poly::from_sorted_unchecked(ring, {t}));
                break;
            }
        }
        out.push_back(c);
    }
    return out;
}

std::vector<StructureCheck> verify_leading_structure(const RemainderResult &r, long a, long m, long n)
{
    return verify_leading_structure(r.Q, r.Ecirc, r.delta, &r.R, a, m, n);
}

nlohmann::json structure_to_json(const std::vector<StructureCheck> &checks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json j{{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) {
            j["witness"] = c.witness;
        }
        arr.push_back(j);
    }
    return arr;
}

} // namespace jcas
