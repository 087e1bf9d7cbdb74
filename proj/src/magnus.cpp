#include <jcas/magnus.hpp>

#include <numeric>

#include <jcas/division.hpp>
#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

namespace {

std::int64_t total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

} // namespace

std::optional<Poly> poly_root(const Poly &f, unsigned long r)
{
    if (r == 0) {
        throw DomainError("zeroth root");
    }
    if (r == 1 || f.is_zero()) {
        return f;
    }
    const Term &lt = f.leading_term();
    Exponents e0(lt.exps.size());
    for (std::size_t i = 0; i < e0.size(); ++i) {
        if (lt.exps[i] % static_cast<std::int64_t>(r) != 0) {
            return std::nullopt;
        }
        e0[i] = lt.exps[i] / static_cast<std::int64_t>(r);
    }
    auto c0 = rational_root(lt.coeff, r);
    if (!c0) {
        return std::nullopt;
    }
    const auto &ring = f.ring();
    Poly E = Poly::monomial(ring, e0, *c0);
    const Poly lead = E.pow(r - 1) * Rational(static_cast<long>(r));
    const Term &lf = lead.leading_term();
    const std::int64_t floor_deg = static_cast<std::int64_t>(r - 1) * total_degree(e0);
    Poly R = f - E.pow(r);
    while (!R.is_zero()) {
        const Term &rt = R.leading_term();
        // Every correction term has degree >= 0, so the residual of a true
        // power never drops below (r-1) deg E before vanishing.
        if (total_degree(rt.exps) < floor_deg) {
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
        R = f - E.pow(r);
    }
    return E;
}

HomogeneousRoot root_of_homogeneous(const Poly &Fd, Direction w)
{
    if (Fd.is_zero()) {
        throw DomainError("root of the zero polynomial");
    }
    if (!is_homogeneous(Fd, xy_weights(Fd.ring(), w))) {
        throw GradingError("not " + direction_name(w) + "-homogeneous: " + to_string(Fd));
    }
    if (has_negative_exponents(Fd) || has_fractional_exponents(Fd)) {
        throw DomainError("root_of_homogeneous needs a polynomial: " + to_string(Fd));
    }
    const Rational lc = Fd.leading_term().coeff;
    const Poly monic = Fd / lc;
    std::int64_t g = 0;
    for (const auto *t : {&Fd.terms().front(), &Fd.terms().back()}) {
        for (auto e : t->exps) {
            g = std::gcd(g, e / Fd.ring()->denom());
        }
    }
    HomogeneousRoot out{Fd, 1, 1, ""};
    for (std::int64_t r = g; r >= 2; --r) {
        if (g % r != 0) {
            continue;
        }
        auto root = poly_root(monic, static_cast<unsigned long>(r));
        if (!root) {
            continue;
        }
        out.r = static_cast<long>(r);
        if (auto c = rational_root(lc, static_cast<unsigned long>(r))) {
            out.rho = *root * *c;
        } else {
            out.rho = *root;
            out.lambda = lc;
            out.note = "leading coefficient " + lc.get_str() + " has no rational " + std::to_string(r) +
                       "-th root; F_d = lambda * rho^r";
        }
        return out;
    }
    return out;
}

// ---- MagnusExpander ----

namespace {

long positive_w_degree(const Poly &F, Direction w)
{
    auto deg = w_degree(F, w);
    if (!deg || *deg <= 0 || !is_integer(*deg)) {
        throw PreconditionError("w-degree of F must be a positive integer");
    }
    return static_cast<long>(to_int64(*deg));
}

} // namespace

MagnusExpander::MagnusExpander(const Poly &F, Direction w, long e, long last)
    : F_(F), w_(w), d_(positive_w_degree(F, w)), e_(e), last_(last),
      root_(root_of_homogeneous(leading_form(F, w), w)),
      y_(homogenize(F, w, static_cast<std::size_t>(std::max(last, 0L) + 1)).coeffs())
{
}

const Poly &MagnusExpander::rho_power(long k) const
{
    if (k < 0) {
        throw DomainError("negative rho power");
    }
    if (rho_pow_.empty()) {
        rho_pow_.push_back(Poly::constant(F_.ring(), 1));
    }
    while (static_cast<long>(rho_pow_.size()) <= k) {
        rho_pow_.push_back(rho_pow_.back() * root_.rho);
    }
    return rho_pow_[static_cast<std::size_t>(k)];
}

Rational MagnusExpander::kappa(long beta) const
{
    if (root_.lambda == 1) {
        return 1;
    }
    const Rational A = make_rational(e_ - beta, d_);
    const long p = to_int64(A.get_num());
    const auto q = static_cast<unsigned long>(to_int64(A.get_den()));
    auto k = rational_root(pow(root_.lambda, p), q);
    if (!k) {
        throw FieldExtensionError("lambda^" + A.get_str() + " is irrational for lambda = " + root_.lambda.get_str());
    }
    return *k;
}

// Miller recurrence with y_0 = F_d kept symbolic: [h(F)^A]_{t^k} equals
// kappa * rho^{r(A-k)} * N_k / lambda^k with
// N_k = (1/k) sum_j ((A+1) j - k) y_j F_d^{j-1} N_{k-j}.
const std::vector<Poly> &MagnusExpander::series(long beta) const
{
    auto it = cache_.find(beta);
    if (it != cache_.end()) {
        return it->second;
    }
    const Rational A = make_rational(e_ - beta, d_);
    const long len = last_ - beta + 1;
    std::vector<Poly> N{Poly::constant(F_.ring(), 1)};
    std::vector<Poly> Fd_pow{Poly::constant(F_.ring(), 1)};
    for (long k = 1; k < len; ++k) {
        PolyAccumulator acc(F_.ring());
        for (long j = 1; j <= k && j < static_cast<long>(y_.size()); ++j) {
            if (y_[static_cast<std::size_t>(j)].is_zero()) {
                continue;
            }
            const Rational wgt = (A + 1) * j - k;
            if (wgt == 0) {
                continue;
            }
            while (static_cast<long>(Fd_pow.size()) < j) {
                Fd_pow.push_back(Fd_pow.back() * y_[0]);
            }
            acc.add(y_[static_cast<std::size_t>(j)] * Fd_pow[static_cast<std::size_t>(j - 1)] *
                        N[static_cast<std::size_t>(k - j)],
                    wgt / k);
        }
        N.push_back(acc.finish());
    }
    return cache_.emplace(beta, std::move(N)).first->second;
}

std::pair<long, Poly> MagnusExpander::combination(const std::vector<Rational> &c, long mu) const
{
    std::map<long, Poly> byq;
    const long r = root_.r;
    for (long beta = 0; beta <= mu && beta < static_cast<long>(c.size()); ++beta) {
        const Rational &cb = c[static_cast<std::size_t>(beta)];
        if (cb == 0) {
            continue;
        }
        if (!admissible(beta)) {
            throw InconsistencyError("c_" + std::to_string(beta) + " must vanish: r(e - beta)/d is not an integer");
        }
        const long s = mu - beta;
        const long q = r * (e_ - beta) / d_ - r * s;
        const Poly &N = series(beta).at(static_cast<std::size_t>(s));
        const Rational scale = cb * kappa(beta) / pow(root_.lambda, s);
        auto [pos, fresh] = byq.try_emplace(q, N * scale);
        if (!fresh) {
            pos->second += N * scale;
        }
    }
    if (byq.empty()) {
        return {0, Poly(F_.ring())};
    }
    const long qmin = byq.begin()->first;
    PolyAccumulator acc(F_.ring());
    for (const auto &[q, N] : byq) {
        acc.add(N * rho_power(q - qmin));
    }
    Poly total = acc.finish();
    if (qmin >= 0) {
        return {0, total * rho_power(qmin)};
    }
    return {qmin, std::move(total)};
}

Poly MagnusExpander::combination_poly(const std::vector<Rational> &c, long mu) const
{
    auto [q, M] = combination(c, mu);
    if (q >= 0 || M.is_zero()) {
        return M;
    }
    auto quot = exact_divide(M, rho_power(-q));
    if (!quot) {
        throw InconsistencyError("combination at mu = " + std::to_string(mu) + " is not a polynomial");
    }
    return *quot;
}

// ---- solver ----

MagnusCoefficients solve_magnus(const Poly &F, const Poly &G, Direction w)
{
    if (G.is_zero()) {
        throw PreconditionError("G must be nonzero");
    }
    auto eg = w_degree(G, w);
    if (!is_integer(*eg)) {
        throw PreconditionError("w-degree of G must be an integer");
    }
    const long e = static_cast<long>(to_int64(*eg));
    auto [u, v] = direction_weights(w);
    auto fd = w_degree(F, w);
    if (!fd || *fd <= 0) {
        throw PreconditionError("w-degree of F must be positive");
    }
    const long d = static_cast<long>(to_int64(*fd));
    const long last = d + e - u - v - 1;
    MagnusExpander ex(F, w, e, last);
    const auto Gd = w_decompose(G, w);

    MagnusCoefficients out{{}, ex.root().rho, 1, 1, 0, 0, w, ""};
    out.c.assign(static_cast<std::size_t>(std::max(last, 0L) + 1), 0);
    out.rho = ex.root().rho;
    out.r = ex.root().r;
    out.lambda = ex.root().lambda;
    out.note = ex.root().note;
    out.d = d;
    out.e = e;
    out.w = w;

    for (long mu = 0; mu <= last; ++mu) {
        auto [qmin, M] = ex.combination(out.c, mu);
        const Poly Gp = Gd.piece(e - mu, G.ring());
        // residual = G_{e-mu} - combination, written as rho^qmin * M
        if (qmin >= 0) {
            M = Gp - M;
        } else {
            M = Gp * ex.rho_power(-qmin) - M;
        }
        const std::string where = "mu = " + std::to_string(mu);
        if (M.is_zero()) {
            continue;
        }
        if (!ex.admissible(mu)) {
            throw InconsistencyError(where + ": nonzero residual but r(e - mu)/d is not an integer");
        }
        const long qstar = ex.root().r * (e - mu) / d;
        if (qstar < qmin) {
            throw InconsistencyError(where + ": residual is not a constant multiple of F_d^{(e-mu)/d}");
        }
        const Poly T = ex.rho_power(qstar - qmin) * ex.kappa(mu);
        const Term &lm = M.leading_term();
        const Term &lt = T.leading_term();
        if (lm.exps != lt.exps) {
            throw InconsistencyError(where + ": residual is not a constant multiple of F_d^{(e-mu)/d}");
        }
        const Rational cm = lm.coeff / lt.coeff;
        if (M != T * cm) {
            throw InconsistencyError(where + ": residual is not a constant multiple of F_d^{(e-mu)/d}");
        }
        out.c[static_cast<std::size_t>(mu)] = cm;
    }
    if (out.c.empty() || out.c[0] == 0) {
        throw InconsistencyError("c_0 vanishes");
    }
    return out;
}

nlohmann::json magnus_to_json(const MagnusCoefficients &mc)
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto &q : mc.c) {
        c.push_back(rational_to_json(q));
    }
    nlohmann::json j{{"c", c},
                     {"rho", to_string(mc.rho)},
                     {"r", mc.r},
                     {"lambda", rational_to_json(mc.lambda)},
                     {"d", mc.d},
                     {"e", mc.e},
                     {"w", direction_name(mc.w)}};
    if (!mc.note.empty()) {
        j["note"] = mc.note;
    }
    return j;
}

} // namespace jcas
