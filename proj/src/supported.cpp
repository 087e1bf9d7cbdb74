#include <jcas/supported.hpp>

#include <algorithm>
#include <future>
#include <random>

#include <jcas/division.hpp>
#include <jcas/error.hpp>
#include <jcas/gradings.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

std::string gamma_name(long j) { return "Gamma" + std::to_string(j); }
std::string xt_name(long j) { return "xt" + std::to_string(j); }
std::string c_name(long beta) { return "c" + std::to_string(beta); }

namespace {

long positive_part(long v) { return v > 0 ? v : 0; }

std::size_t tau_index_of(const RingPtr &ring) { return ring->index("tau"); }

} // namespace

SymbolicRing make_symbolic_ring(const ParamContext &ctx)
{
    std::vector<std::string> vars{"tau"};
    std::vector<Rational> weights{ctx.deg_tau};
    for (long j = 0; j < ctx.vE; ++j) {
        vars.push_back(gamma_name(j));
        weights.push_back(ctx.gamma_degree(j));
    }
    for (long j = 0; j <= ctx.vF; ++j) {
        vars.push_back(xt_name(j));
        weights.push_back(ctx.x_degree(j));
    }
    for (long beta = 1; beta <= ctx.mfrak; ++beta) {
        vars.push_back(c_name(beta));
        weights.push_back(0);
    }
    return {make_ring(std::move(vars)), std::move(weights)};
}

HParts build_H(const ParamContext &ctx, const Tschirnhausen &alpha, const Poly &tau, const std::vector<Poly> &Gamma,
               const std::vector<Poly> &X, const std::vector<Rational> &weights, std::size_t order)
{
    if (alpha.degree() != static_cast<std::size_t>(ctx.delta * ctx.a)) {
        throw ParameterError("deg(alpha) = " + std::to_string(alpha.degree()) + " but delta * a = " +
                             std::to_string(ctx.delta * ctx.a));
    }
    const auto &ring = tau.ring();
    Poly E = tau.pow(static_cast<unsigned long>(ctx.vE - ctx.uE));
    for (long j = 0; j < ctx.vE; ++j) {
        E += tau.pow(static_cast<unsigned long>(positive_part(j - ctx.uE))) * Gamma.at(static_cast<std::size_t>(j));
    }
    Poly F(ring);
    for (long j = 0; j <= ctx.vF; ++j) {
        F += tau.pow(static_cast<unsigned long>(positive_part(j - ctx.uF))) * X.at(static_cast<std::size_t>(j));
    }
    Poly total = alpha.compose(E) + F;
    auto top = graded_decompose(total, weights).degree;
    if (!top || *top != ctx.d) {
        throw InconsistencyError("alpha(E~) + F~ does not have degree d");
    }
    TruncSeries H = homogenize(total, weights, order);
    if (!H.coeff(0).is_monomial()) {
        throw InconsistencyError("top piece of alpha(E~) + F~ is not a tau-monomial: " + to_string(H.coeff(0)));
    }
    return {std::move(E), std::move(F), std::move(H)};
}

SymbolicSystem build_symbolic(const ParamContext &ctx, const Tschirnhausen &alpha)
{
    SymbolicRing R = make_symbolic_ring(ctx);
    const Poly tau = Poly::variable(R.ring, "tau");
    std::vector<Poly> G;
    for (long j = 0; j < ctx.vE; ++j) {
        G.push_back(Poly::variable(R.ring, gamma_name(j)));
    }
    std::vector<Poly> X;
    for (long j = 0; j <= ctx.vF; ++j) {
        X.push_back(Poly::variable(R.ring, xt_name(j)));
    }
    auto parts = build_H(ctx, alpha, tau, G, X, R.weights, static_cast<std::size_t>(ctx.mfrak + 1));
    return {ctx, alpha, std::move(R), std::move(parts.Etilde), std::move(parts.Ftilde), std::move(parts.H)};
}

// ---- GFamily ----

GFamily::GFamily(const ParamContext &ctx, const TruncSeries &H, long mu_max, bool parallel)
    : ctx_(ctx), ring_(H.ring()), mu_max_(std::min(mu_max, ctx.mfrak))
{
    if (mu_max_ < 0) {
        throw ParameterError("mu out of range");
    }
    std::vector<long> betas{0};
    for (long beta : ctx.admissible_betas()) {
        if (beta <= mu_max_) {
            betas.push_back(beta);
        }
    }
    const auto &y = H.coeffs();
    auto job = [&, this](long beta) {
        return frac_power_series(y, make_rational(ctx_.e - beta, ctx_.d),
                                 static_cast<std::size_t>(mu_max_ - beta + 1));
    };
    if (parallel && betas.size() > 1) {
        std::vector<std::future<TruncSeries>> futs;
        for (long beta : betas) {
            futs.push_back(std::async(std::launch::async, job, beta));
        }
        for (std::size_t k = 0; k < betas.size(); ++k) {
            series_.emplace(betas[k], futs[k].get());
        }
    } else {
        for (long beta : betas) {
            series_.emplace(beta, job(beta));
        }
    }
}

const Poly &GFamily::piece(long beta, long s) const
{
    auto it = series_.find(beta);
    if (it == series_.end()) {
        throw ParameterError("beta = " + std::to_string(beta) + " is not admissible or beyond mu_max");
    }
    return it->second.coeff(static_cast<std::size_t>(s));
}

Poly GFamily::G(long mu, const std::vector<long> &B, const std::function<Poly(long)> &c) const
{
    if (mu < 0 || mu > mu_max_) {
        throw ParameterError("mu = " + std::to_string(mu) + " out of range [0, " + std::to_string(mu_max_) + "]");
    }
    Poly g = piece(0, mu);
    for (long beta : B) {
        if (beta < 1 || beta > mu) {
            continue;
        }
        if (!ctx_.admissible(beta)) {
            throw ParameterError("beta = " + std::to_string(beta) + " is not admissible");
        }
        Poly cb = c(beta);
        if (!cb.is_zero()) {
            g += cb * piece(beta, mu - beta);
        }
    }
    return g;
}

// ---- j-table ----

void JfrakTable::raise(long beta, long s, long j)
{
    auto &v = neg_[{beta, s}];
    v = std::max(v, j);
}

long JfrakTable::get(long beta, long s) const
{
    auto it = neg_.find({beta, s});
    return it == neg_.end() ? 0 : it->second;
}

long JfrakTable::jfrak(long mu, const std::vector<long> &B) const
{
    long j = get(0, mu);
    for (long beta : B) {
        if (beta >= 1 && beta <= mu) {
            j = std::max(j, get(beta, mu - beta));
        }
    }
    return j;
}

namespace {

long negative_depth(const Poly &p, std::size_t ti)
{
    if (p.is_zero()) {
        return 0;
    }
    const Rational lo = min_exponent(p, ti);
    if (lo >= 0) {
        return 0;
    }
    return to_int64(ceil(-lo));
}

} // namespace

JfrakTable jfrak_from_family(const GFamily &fam, const ParamContext &ctx, std::size_t tau_index)
{
    JfrakTable t;
    std::vector<long> betas{0};
    for (long beta : ctx.admissible_betas()) {
        betas.push_back(beta);
    }
    for (long beta : betas) {
        for (long s = 0; beta + s <= fam.mu_max(); ++s) {
            t.raise(beta, s, negative_depth(fam.piece(beta, s), tau_index));
        }
    }
    return t;
}

JfrakTable jfrak_randomized(const SymbolicSystem &sys, int trials, std::uint64_t seed, long mu_max)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    const auto tring = make_ring({"tau"});
    JfrakTable out;
    for (int trial = 0; trial < std::max(trials, 1); ++trial) {
        std::map<std::string, Poly> images{{"tau", Poly::variable(tring, "tau")}};
        for (const auto &v : sys.R.ring->vars()) {
            if (v == "tau") {
                continue;
            }
            std::int64_t val = 0;
            while (val == 0) {
                val = dist(rng);
            }
            images.emplace(v, Poly::constant(tring, Rational(static_cast<long>(val))));
        }
        std::vector<Poly> y;
        for (const auto &h : sys.H.coeffs()) {
            y.push_back(substitute(h, images, tring));
        }
        GFamily fam(sys.ctx, TruncSeries(tring, y.size(), y), mu_max, false);
        auto t = jfrak_from_family(fam, sys.ctx, 0);
        for (long beta = 0; beta <= mu_max; ++beta) {
            for (long s = 0; beta + s <= mu_max; ++s) {
                out.raise(beta, s, t.get(beta, s));
            }
        }
    }
    return out;
}

JfrakTable jfrak_exact(const SymbolicSystem &sys, long mu_max)
{
    GFamily fam(sys.ctx, sys.H, mu_max, true);
    return jfrak_from_family(fam, sys.ctx, tau_index_of(sys.R.ring));
}

// ---- evaluation maps ----

RingPtr r2_ring(const ParamContext &ctx) { return make_ring({"x", "y"}, ctx.r2_denom()); }

Poly tau_image(const ParamContext &ctx, const RingPtr &R2)
{
    const auto D = R2->denom();
    const Poly X = Poly::variable(R2, "x");
    const Poly Y = Poly::variable(R2, "y");
    if (ctx.u == 0) {
        // (x+1) y^{n/m}
        return (X + Poly::constant(R2, 1)) * Poly::monomial(R2, {0, ctx.n * D / ctx.m});
    }
    return Poly::monomial(R2, {ctx.m * D / ctx.n, 0}) * (X + Y);
}

namespace {

// piece / S(tau)^p inside R2, or nullopt.
std::optional<Poly> divide_by_tau_power(const ParamContext &ctx, const RingPtr &R2, const Poly &piece, long p)
{
    if (p == 0 || piece.is_zero()) {
        return piece;
    }
    const Poly L = binomial_L(R2, ctx.L_is_xy());
    auto q = divide_by_binomial_power(piece, L, static_cast<unsigned>(p));
    if (!q) {
        return std::nullopt;
    }
    const auto D = R2->denom();
    Exponents mono = ctx.u == 0 ? Exponents{0, -p * ctx.n * D / ctx.m} : Exponents{-p * ctx.m * D / ctx.n, 0};
    return q->shift(mono);
}

} // namespace

EvalMap make_eval_map(const ParamContext &ctx, const Poly &Ecirc, const Poly &Fcirc, const std::map<long, Rational> &c)
{
    const auto R2 = r2_ring(ctx);
    EvalMap S{R2, tau_image(ctx, R2), {}, {}, c};
    const Poly E = change_ring(Ecirc, S.R2);
    const Poly F = change_ring(Fcirc, S.R2);
    const auto Eg = w_decompose(E, ctx.w);
    const auto Fg = w_decompose(F, ctx.w);
    if (!Eg.degree || *Eg.degree != ctx.vE) {
        throw PreconditionError("w-degree of E must be v_E = " + std::to_string(ctx.vE));
    }
    if (Eg.piece(ctx.vE, S.R2) != S.tau.pow(static_cast<unsigned long>(ctx.vE - ctx.uE))) {
        throw PreconditionError("top piece of E is not S(tau)^{v_E - u_E}: " + to_string(Eg.piece(ctx.vE, S.R2)));
    }
    if (Fg.degree && *Fg.degree > ctx.vF) {
        throw PreconditionError("w-degree of F exceeds v_F = " + std::to_string(ctx.vF));
    }
    for (const auto &[deg, piece] : Eg.pieces) {
        if (deg < 0) {
            throw PreconditionError("E has a piece of negative w-degree");
        }
    }
    for (const auto &[deg, piece] : Fg.pieces) {
        if (deg < 0) {
            throw PreconditionError("F has a piece of negative w-degree");
        }
    }
    for (long j = 0; j < ctx.vE; ++j) {
        auto g = divide_by_tau_power(ctx, S.R2, Eg.piece(j, S.R2), positive_part(j - ctx.uE));
        if (!g) {
            throw PreconditionError("E piece of degree " + std::to_string(j) + " is not divisible by " + ctx.L_text() +
                                    "^" + std::to_string(positive_part(j - ctx.uE)));
        }
        S.Gamma.push_back(std::move(*g));
    }
    for (long j = 0; j <= ctx.vF; ++j) {
        auto x = divide_by_tau_power(ctx, S.R2, Fg.piece(j, S.R2), positive_part(j - ctx.uF));
        if (!x) {
            throw PreconditionError("F piece of degree " + std::to_string(j) + " is not divisible by " + ctx.L_text() +
                                    "^" + std::to_string(positive_part(j - ctx.uF)));
        }
        S.X.push_back(std::move(*x));
    }
    return S;
}

void validate_eval_map(const ParamContext &ctx, const EvalMap &S)
{
    if (!S.R2 || S.R2->denom() % ctx.r2_denom() != 0) {
        throw PreconditionError("evaluation map target is not R2");
    }
    if (S.tau != tau_image(ctx, S.R2)) {
        throw PreconditionError("S(tau) = " + to_string(S.tau) + " violates the S^w condition");
    }
    if (S.Gamma.size() != static_cast<std::size_t>(ctx.vE) || S.X.size() != static_cast<std::size_t>(ctx.vF + 1)) {
        throw PreconditionError("evaluation map has the wrong number of images");
    }
    for (const auto &[beta, v] : S.c) {
        if (beta < 1 || beta > ctx.mfrak) {
            throw PreconditionError("constant image for beta = " + std::to_string(beta) + " outside [1, mfrak]");
        }
    }
}

Poly eval_S(const ParamContext &ctx, const EvalMap &S, const Poly &symbolic)
{
    const auto &ring = symbolic.ring();
    if (auto ti = ring->find("tau")) {
        for (const auto &t : symbolic.terms()) {
            if (t.exps[*ti] < 0 || t.exps[*ti] % ring->denom() != 0) {
                throw LatticeError("tau^(" + make_rational(t.exps[*ti], ring->denom()).get_str() +
                                   ") has no image in R2");
            }
        }
    }
    std::map<std::string, Poly> images{{"tau", S.tau}};
    for (long j = 0; j < ctx.vE; ++j) {
        images.emplace(gamma_name(j), S.Gamma.at(static_cast<std::size_t>(j)));
    }
    for (long j = 0; j <= ctx.vF; ++j) {
        images.emplace(xt_name(j), S.X.at(static_cast<std::size_t>(j)));
    }
    for (long beta = 1; beta <= ctx.mfrak; ++beta) {
        auto it = S.c.find(beta);
        images.emplace(c_name(beta), Poly::constant(S.R2, it == S.c.end() ? Rational(0) : it->second));
    }
    for (const auto &v : ring->vars()) {
        if (!images.count(v)) {
            throw ContextError("symbol '" + v + "' has no image under S");
        }
    }
    return substitute(symbolic, images, S.R2);
}

EvalMap restrict_constants(const EvalMap &S, const std::vector<long> &B, const std::vector<long> &Bsub)
{
    EvalMap out = S;
    for (long beta : B) {
        if (std::find(Bsub.begin(), Bsub.end(), beta) == Bsub.end()) {
            out.c.erase(beta);
        }
    }
    return out;
}

// ---- supported-set checks ----

SupportEngine::SupportEngine(const ParamContext &ctx, const Tschirnhausen &alpha, const EvalMap &S,
                             const SupportOptions &opts)
    : ctx_(ctx), alpha_(alpha), S_(S), opts_(opts), sys_(build_symbolic(ctx, alpha))
{
    validate_eval_map(ctx, S);
    pring_ = make_ring({"tau", "x", "y"}, S.R2->denom());
    const auto [u, v] = direction_weights(ctx.w);
    std::vector<Rational> weights{ctx.deg_tau, Rational(u), Rational(v)};
    std::vector<Poly> G;
    for (const auto &g : S.Gamma) {
        G.push_back(change_ring(g, pring_));
    }
    std::vector<Poly> X;
    for (const auto &x : S.X) {
        X.push_back(change_ring(x, pring_));
    }
    auto parts = build_H(ctx, alpha, Poly::variable(pring_, "tau"), G, X, weights,
                         static_cast<std::size_t>(ctx.mfrak + 1));
    partial_ = std::make_shared<GFamily>(ctx, parts.H, ctx.mfrak, opts.parallel);
    if (opts.exact_jfrak) {
        jt_ = jfrak_exact(sys_, ctx.mfrak);
    } else {
        jt_ = jfrak_randomized(sys_, opts.trials, opts.seed, ctx.mfrak);
    }
    // The partial images are homomorphic images of the symbolic coefficients,
    // so any negative tau-depth seen there is a certified lower bound.
    auto cert = jfrak_from_family(*partial_, ctx, 0);
    for (long beta = 0; beta <= ctx.mfrak; ++beta) {
        for (long s = 0; beta + s <= ctx.mfrak; ++s) {
            jt_.raise(beta, s, cert.get(beta, s));
        }
    }
}

Poly SupportEngine::partial_eval(const Poly &symbolic) const
{
    std::map<std::string, Poly> images{{"tau", Poly::variable(pring_, "tau")}};
    for (long j = 0; j < ctx_.vE; ++j) {
        images.emplace(gamma_name(j), change_ring(S_.Gamma.at(static_cast<std::size_t>(j)), pring_));
    }
    for (long j = 0; j <= ctx_.vF; ++j) {
        images.emplace(xt_name(j), change_ring(S_.X.at(static_cast<std::size_t>(j)), pring_));
    }
    for (long beta = 1; beta <= ctx_.mfrak; ++beta) {
        auto it = S_.c.find(beta);
        images.emplace(c_name(beta), Poly::constant(pring_, it == S_.c.end() ? Rational(0) : it->second));
    }
    return substitute(symbolic, images, pring_);
}

Poly SupportEngine::partial_G(long mu, const std::vector<long> &B, const std::map<long, Rational> &c) const
{
    return partial_->G(mu, B, [&](long beta) {
        auto it = c.find(beta);
        return Poly::constant(pring_, it == c.end() ? Rational(0) : it->second);
    });
}

SupportedReport SupportEngine::check(const std::vector<long> &B) const { return check(B, S_.c); }

SupportedReport SupportEngine::check(const std::vector<long> &B, const std::map<long, Rational> &c) const
{
    for (long beta : B) {
        if (beta < 1 || beta > ctx_.mfrak || !ctx_.admissible(beta)) {
            throw PreconditionError("beta = " + std::to_string(beta) + " is not an admissible index");
        }
    }
    SupportedReport rep;
    rep.jfrak_mode = opts_.exact_jfrak ? "exact" : "randomized";
    std::vector<Poly> tau_pow{Poly::constant(S_.R2, 1)};
    auto tpow = [&](long k) -> const Poly & {
        while (static_cast<long>(tau_pow.size()) <= k) {
            tau_pow.push_back(tau_pow.back() * S_.tau);
        }
        return tau_pow[static_cast<std::size_t>(k)];
    };
    const std::int64_t D = pring_->denom();
    for (long mu = 0; mu <= ctx_.mfrak; ++mu) {
        const Poly Gp = partial_G(mu, B, c);
        std::map<long, Poly> coef;
        for (auto &[num, p] : collect(Gp, 0)) {
            coef.emplace(static_cast<long>(num / D), change_ring(p, S_.R2));
        }
        const long jf = jt_.jfrak(mu, B);
        rep.jfrak.push_back(jf);
        auto at = [&](long ell) {
            auto it = coef.find(ell);
            return it == coef.end() ? Poly(S_.R2) : it->second;
        };
        for (long k = 1; k <= jf; ++k) {
            PolyAccumulator acc(S_.R2);
            for (long j = jf + 1 - k; j <= jf; ++j) {
                const Poly cj = at(-j);
                if (!cj.is_zero()) {
                    acc.add(tpow(jf - j) * cj);
                }
            }
            const auto q = reduce_Pk(acc.finish(), ctx_.L_is_xy(), static_cast<unsigned>(k));
            KCheck kc{mu, k, q.is_zero(), ""};
            if (!kc.ok) {
                kc.witness = q.to_string();
                if (kc.witness.size() > 240) {
                    kc.witness = kc.witness.substr(0, 240) + "...";
                }
                if (!rep.first_failure) {
                    rep.first_failure = std::make_pair(mu, k);
                }
                rep.supported = false;
            }
            rep.checks.push_back(std::move(kc));
        }
        if (mu >= ctx_.e + 1) {
            // S(G~) = 0 iff S(tau)^J S(G~) = 0, with J clearing negative tau-powers.
            long J = 0;
            if (!coef.empty()) {
                J = std::max(0L, -coef.begin()->first);
            }
            PolyAccumulator acc(S_.R2);
            for (const auto &[ell, p] : coef) {
                acc.add(tpow(ell + J) * p);
            }
            const bool ok = acc.finish().is_zero();
            rep.zero_tail.push_back({mu, ok});
            if (!ok) {
                rep.supported = false;
                if (!rep.first_failure) {
                    rep.first_failure = std::make_pair(mu, 0L);
                }
            }
        }
    }
    return rep;
}

SupportedReport check_supported(const ParamContext &ctx, const Tschirnhausen &alpha, const EvalMap &S,
                                const std::vector<long> &B, const SupportOptions &opts)
{
    return SupportEngine(ctx, alpha, S, opts).check(B);
}

nlohmann::json supported_to_json(const SupportedReport &r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : r.checks) {
        nlohmann::json j{{"mu", c.mu}, {"k", c.k}, {"ok", c.ok}};
        if (!c.ok) {
            j["witness"] = c.witness;
        }
        checks.push_back(j);
    }
    nlohmann::json tail = nlohmann::json::array();
    for (const auto &t : r.zero_tail) {
        tail.push_back({{"mu", t.mu}, {"ok", t.ok}});
    }
    nlohmann::json out{{"supported", r.supported},
                       {"checks", checks},
                       {"zero_tail", tail},
                       {"jfrak", r.jfrak},
                       {"jfrak_mode", r.jfrak_mode}};
    if (r.first_failure) {
        out["first_failure"] = {{"mu", r.first_failure->first}, {"k", r.first_failure->second}};
    }
    return out;
}

} // namespace jcas
