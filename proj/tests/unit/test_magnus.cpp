#include <doctest.h>

#include <algorithm>
#include <random>

#include <jcas/error.hpp>
#include <jcas/harness.hpp>
#include <jcas/magnus.hpp>
#include <jcas/params.hpp>
#include <jcas/quotient.hpp>
#include <jcas/supported.hpp>

#include "helpers.hpp"

using namespace jcas;
using testutil::P;

namespace {

// Bracket-zero instance from the generator with the evaluation map of one stage.
struct Instance {
    ParamContext ctx;
    Tschirnhausen alpha;
    EvalMap S;
    std::vector<Rational> c;
};

Instance make_instance(long a, long b, long m, long n, long delta, long i, std::uint64_t seed)
{
    ExampleRequest req;
    req.a = a;
    req.b = b;
    req.m = m;
    req.n = n;
    req.delta = delta;
    req.seed = seed;
    auto ex = generate_example(req);
    auto ctx = build_params(a, b, m, n, delta, i);
    auto mc = solve_magnus(ex.F, *ex.G, ctx.w);
    std::map<long, Rational> c;
    for (long k = 1; k < static_cast<long>(mc.c.size()); ++k) {
        if (mc.c[static_cast<std::size_t>(k)] != 0) {
            c[k] = mc.c[static_cast<std::size_t>(k)] / mc.c[0];
        }
    }
    auto S = make_eval_map(ctx, *ex.E, Poly(ex.F.ring()), c);
    return {ctx, *ex.alpha, S, mc.c};
}

std::vector<long> without(std::vector<long> B, long beta)
{
    B.erase(std::remove(B.begin(), B.end(), beta), B.end());
    return B;
}

bool visible(const SupportEngine &eng, long beta, long mfrak)
{
    for (long s = 0; s <= mfrak - beta; ++s) {
        const Poly &p = eng.partial_family().piece(beta, s);
        if (!p.is_zero() && min_exponent(p, 0) < 0) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("stage parameters")
{
    auto c = build_params(2, 3, 4, 8, 1, 15);
    CHECK(c.u == 1);
    CHECK(c.d == 12);
    CHECK(c.e == 18);
    CHECK(c.L_text() == "x+y");
    CHECK(c.uE == 2);
    CHECK(c.vE == 6);
    CHECK(c.uF == 4);
    CHECK(c.vF == 7);
    CHECK(c.mfrak == 27);
    CHECK(c.r == 4);
    CHECK(c.admissible_betas() == std::vector<long>{3, 6, 9, 12, 15, 18, 21, 24, 27});
    CHECK(c.deg_tau == make_rational(3, 2));

    auto c16 = build_params(2, 3, 4, 8, 1, 16);
    CHECK(c16.u == 0);
    CHECK(c16.d == 8);
    CHECK(c16.e == 12);
    CHECK(c16.L_text() == "x+1");
    CHECK(c16.uE == 2);
    CHECK(c16.vE == 4);
    CHECK(c16.uF == 4);
    CHECK(c16.vF == 5);
    CHECK(c16.mfrak == 18);
    CHECK(c16.deg_tau == 2);

    auto j = params_to_json(c);
    for (const char *k : {"u", "d", "e", "L", "u_E", "v_E", "u_F", "v_F", "mfrak", "admissible_betas"}) {
        CHECK(j.contains(k));
    }
    CHECK(j["L"] == "x+y");

    CHECK_THROWS_AS(build_params(2, 3, 4, 8, 1, 1), ParameterError);
    CHECK_THROWS_AS(build_params(2, 3, 4, 8, 3, 15), ParameterError);
    CHECK_THROWS_AS(build_params(2, 3, 4, 8, 1, 17), ParameterError);
    CHECK_THROWS_AS(build_params(2, 4, 4, 8, 1, 15), ParameterError);
    CHECK(delta_set(2, 4, 8) == std::vector<long>{1, 2});
}

TEST_CASE("symbolic system of the (2,3,4,8) stage")
{
    auto ctx = build_params(2, 3, 4, 8, 1, 15);
    auto sys = build_symbolic(ctx, Tschirnhausen({0, 0, 1}));
    const auto &R = sys.R.ring;
    CHECK(sys.Etilde == P("tau^4 + Gamma0 + Gamma1 + Gamma2 + tau*Gamma3 + tau^2*Gamma4 + tau^3*Gamma5", R));
    CHECK(sys.Ftilde == P("xt0 + xt1 + xt2 + xt3 + xt4 + tau*xt5 + tau^2*xt6 + tau^3*xt7", R));
    CHECK(sys.H.coeff(0) == P("tau^8", R));
    auto Eg = graded_decompose(sys.Etilde, sys.R.weights);
    CHECK(*Eg.degree == ctx.vE);
    CHECK(Eg.pieces.size() == static_cast<std::size_t>(ctx.vE + 1));
    CHECK(Eg.piece(3, R) == P("tau*Gamma3", R));

    CHECK_THROWS_AS(build_symbolic(ctx, Tschirnhausen({0, 0, 0, 1})), ParameterError);

    GFamily fam(ctx, sys.H, 2, false);
    auto cvar = [&](long beta) { return Poly::variable(R, c_name(beta)); };
    CHECK(fam.piece(0, 0) == P("tau^12", R));
    CHECK(fam.G(0, ctx.admissible_betas(), cvar) == fam.piece(0, 0));
    // beta = 1 is not admissible here, so mu = 1 sees only the beta = 0 series
    CHECK(fam.G(1, ctx.admissible_betas(), cvar) == fam.piece(0, 1));
}

TEST_CASE("G-family pieces raised to the d-th power give H^(e - beta)")
{
    auto ctx = build_params(2, 3, 2, 4, 1, 1);
    auto sys = build_symbolic(ctx, Tschirnhausen({0, 0, 1}));
    const long order = 5;
    GFamily fam(ctx, sys.H.truncated(order), order - 1, false);
    for (long beta : std::vector<long>{0, 3}) {
        if (beta != 0 && !ctx.admissible(beta)) {
            continue;
        }
        const auto len = static_cast<std::size_t>(order - beta);
        std::vector<Poly> y;
        for (std::size_t s = 0; s < len; ++s) {
            y.push_back(fam.piece(beta, static_cast<long>(s)));
        }
        TruncSeries root(sys.R.ring, len, y);
        auto lhs = root.pow(static_cast<unsigned long>(ctx.d));
        auto rhs = sys.H.truncated(len).pow(static_cast<unsigned long>(ctx.e - beta));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evaluation map")
{
    auto ctx = build_params(2, 3, 4, 8, 1, 16);
    auto R2 = r2_ring(ctx);
    CHECK(R2->denom() == 4);
    EvalMap S{R2, tau_image(ctx, R2), {}, {}, {{3, Rational(5)}}};
    S.Gamma.assign(static_cast<std::size_t>(ctx.vE), Poly(R2));
    S.X.assign(static_cast<std::size_t>(ctx.vF + 1), Poly(R2));
    validate_eval_map(ctx, S);
    auto sym = make_symbolic_ring(ctx);
    CHECK(eval_S(ctx, S, P("tau^2", sym.ring)) == P("(x+1)^2*y^4", R2));
    CHECK(eval_S(ctx, S, P("c3*tau + c5", sym.ring)) == P("5*(x+1)*y^2", R2));

    auto half = make_ring({"tau"}, 2);
    CHECK_THROWS_AS(eval_S(ctx, S, P("tau^(1/2)", half)), LatticeError);
    CHECK_THROWS_AS(eval_S(ctx, S, P("tau^-1", sym.ring)), LatticeError);

    EvalMap bad = S;
    bad.tau = P("x+1", R2);
    CHECK_THROWS_AS(validate_eval_map(ctx, bad), PreconditionError);
    bad = S;
    bad.X.pop_back();
    CHECK_THROWS_AS(validate_eval_map(ctx, bad), PreconditionError);
    bad = S;
    bad.c[100] = 1;
    CHECK_THROWS_AS(validate_eval_map(ctx, bad), PreconditionError);

    auto u1 = build_params(2, 3, 4, 8, 1, 15);
    auto R2b = r2_ring(u1);
    CHECK(tau_image(u1, R2b) == P("x^(1/2)*(x+y)", R2b));

    auto xy = testutil::xy();
    CHECK_THROWS_AS(make_eval_map(ctx, P("x*y + 1", xy), Poly(xy)), PreconditionError);

    auto r = restrict_constants(S, {3, 6}, {6});
    CHECK(r.c.count(3) == 0);
}

TEST_CASE("quotient rings R2 / L^k")
{
    auto R = testutil::xy();
    CHECK(reduce_Pk(P("x^2", R), false, 2) == reduce_Pk(P("1 - 2*(x+1)", R), false, 2));
    CHECK(reduce_Pk(P("x + y", R), true, 1).is_zero());
    CHECK(reduce_Pk(P("x + y", R), true, 3).lift() == P("x + y", R));
    CHECK(reduce_Pk(P("x^-1", R), false, 2) == reduce_Pk(P("-1 - (x+1)", R), false, 2));
    CHECK(reduce_Pk(P("(x+1)^3*y", R), false, 3).is_zero());
    CHECK(!reduce_Pk(P("(x+1)^2*y", R), false, 3).is_zero());
    CHECK(reduce_Pk(P("x^2 + 2*x*y + y^2", R), true, 2).is_zero());
    CHECK(reduce_Pk(P("x*y - 3", R), true, 1).lift() == P("-x^2 - 3", R));

    auto Rf = testutil::xy(3);
    CHECK_THROWS_AS(reduce_Pk(P("x^(1/3)", Rf), false, 1), LatticeError);
    CHECK_NOTHROW(reduce_Pk(P("y^(1/3)*x", Rf), false, 2));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const bool xyL = trial % 2 == 1;
        const unsigned k = 1 + static_cast<unsigned>(trial % 4);
        auto f = testutil::random_poly(rng, R, 4, -2, 3);
        auto g = testutil::random_poly(rng, R, 4, -2, 3);
        auto pf = reduce_Pk(f, xyL, k);
        auto pg = reduce_Pk(g, xyL, k);
        CHECK(reduce_Pk(f * g, xyL, k) == pf * pg);
        CHECK(reduce_Pk(f + g, xyL, k) == pf + pg);
        CHECK(reduce_Pk(pf.lift(), xyL, k) == pf);
        auto p1f = reduce_Pk(f, xyL, 1);
        auto p1g = reduce_Pk(g, xyL, 1);
        if (!p1f.is_zero() && !p1g.is_zero()) {
            CHECK(!reduce_Pk(f * g, xyL, 1).is_zero());
        }
    }
}

TEST_CASE("roots of homogeneous leading forms")
{
    auto R = testutil::xy();
    auto h = root_of_homogeneous(P("x^2 + 2*x*y + y^2", R), Direction::W11);
    CHECK(h.r == 2);
    CHECK(h.rho == P("x + y", R));
    CHECK(h.lambda == 1);

    h = root_of_homogeneous(P("x^2*(x+y)^2", R), Direction::W11);
    CHECK(h.r == 2);
    CHECK(h.rho == P("x^2 + x*y", R));

    h = root_of_homogeneous(P("4*(x+y)^2", R), Direction::W11);
    CHECK(h.r == 2);
    CHECK(h.rho == P("2*x + 2*y", R));
    CHECK(h.lambda == 1);

    h = root_of_homogeneous(P("3*(x+y)^2", R), Direction::W11);
    CHECK(h.r == 2);
    CHECK(h.rho == P("x + y", R));
    CHECK(h.lambda == 3);

    h = root_of_homogeneous(P("(x+1)^3*y^6", R), Direction::W01);
    CHECK(h.r == 3);
    CHECK(h.rho == P("(x+1)*y^2", R));

    h = root_of_homogeneous(P("x^2 + x*y", R), Direction::W11);
    CHECK(h.r == 1);

    CHECK(poly_root(P("x^2 - 2*x*y + y^2", R), 2) == P("x - y", R));
    CHECK(!poly_root(P("x^2 + y", R), 2));
}

TEST_CASE("Magnus coefficients")
{
    auto R = testutil::xy();
    auto F = P("x^2 + x*y + 1", R);

    auto mc = solve_magnus(F, F, Direction::W11);
    CHECK(mc.d == 2);
    CHECK(mc.e == 2);
    REQUIRE(mc.c.size() == 2);
    CHECK(mc.c[0] == 1);
    CHECK(mc.c[1] == 0);

    mc = solve_magnus(F, F * F + F, Direction::W11);
    CHECK(mc.c == std::vector<Rational>{1, 0, 1, 0});

    CHECK_THROWS_AS(solve_magnus(F, F * F + P("x", R), Direction::W11), InconsistencyError);
    CHECK_THROWS_AS(solve_magnus(F, Poly(R), Direction::W11), PreconditionError);
    CHECK_THROWS_AS(solve_magnus(P("1", R), F, Direction::W11), PreconditionError);

    // fractional exponent e/d = 3/2
    auto E = P("x + y + 1", R);
    mc = solve_magnus(E.pow(2), E.pow(3), Direction::W11);
    CHECK(mc.r == 2);
    CHECK(mc.c[0] == 1);
    for (std::size_t k = 1; k < mc.c.size(); ++k) {
        CHECK(mc.c[k] == 0);
    }

    // a non-integral lambda^(e/d) needs a field extension
    CHECK_THROWS_AS(solve_magnus(P("2*x^2 + y", R), P("x^3", R), Direction::W11), FieldExtensionError);

    auto j = magnus_to_json(solve_magnus(F, F * F + F, Direction::W11));
    CHECK(j["c"].size() == 4);
    CHECK(j["r"] == 1);
}

TEST_CASE("Magnus re-substitution on polynomial pairs")
{
    auto R = testutil::xy();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        // F with a (1,1)-leading form of degree 2 or 3 and random lower terms
        auto lead = trial % 2 == 0 ? P("x^2 + 3*x*y", R) : P("x^3 - y^3 + x*y^2", R);
        auto F = lead + testutil::random_poly(rng, R, 3, 0, 1);
        if (*w_degree(F, Direction::W11) != *w_degree(lead, Direction::W11)) {
            continue;
        }
        const Rational b0(static_cast<long>(rng() % 7) - 3), b1(static_cast<long>(rng() % 7) - 3);
        auto G = F.pow(3) * Rational(2) + F * b1 + Poly::constant(R, b0);
        auto mc = solve_magnus(F, G, Direction::W11);
        const long d = mc.d;
        // G = 2F^3 + b1 F + b0: c sits at beta = e - k d
        CHECK(mc.c[0] == 2);
        for (long beta = 1; beta < static_cast<long>(mc.c.size()); ++beta) {
            Rational want = 0;
            if (beta == 2 * d) {
                want = b1;
            } else if (beta == 3 * d) {
                want = b0;
            }
            CHECK(mc.c[static_cast<std::size_t>(beta)] == want);
        }
        MagnusExpander ex(F, Direction::W11, mc.e, static_cast<long>(mc.c.size()) - 1);
        const auto Gd = w_decompose(G, Direction::W11);
        for (long mu = 0; mu < static_cast<long>(mc.c.size()); ++mu) {
            CHECK(ex.combination_poly(mc.c, mu) == Gd.piece(mc.e - mu, R));
        }
    }
}

TEST_CASE("j-table: exact expansion agrees with random evaluation")
{
    for (long i = 0; i <= 4; ++i) {
        auto ctx = build_params(2, 3, 2, 4, 1, i);
        auto sys = build_symbolic(ctx, Tschirnhausen({-3, 0, 1}));
        auto ex = jfrak_exact(sys, ctx.mfrak);
        auto rnd = jfrak_randomized(sys, 2, 99, ctx.mfrak);
        const auto B = ctx.admissible_betas();
        for (long mu = 0; mu <= ctx.mfrak; ++mu) {
            CHECK(ex.jfrak(mu, B) == rnd.jfrak(mu, B));
            CHECK(ex.jfrak(mu, {}) == rnd.jfrak(mu, {}));
        }
    }
}

TEST_CASE("supported sets on bracket-zero pairs")
{
    for (long i : {0L, 1L, 3L}) {
        auto inst = make_instance(2, 3, 2, 4, 1, i, 5 + static_cast<std::uint64_t>(i));
        SupportEngine eng(inst.ctx, inst.alpha, inst.S);
        const auto B = inst.ctx.admissible_betas();

        // S commutes with forming G~: map the symbolic G~ or build it from mapped series
        const auto &sys = eng.symbolic();
        GFamily fam(inst.ctx, sys.H, inst.ctx.mfrak, false);
        auto cvar = [&](long beta) { return Poly::variable(sys.R.ring, c_name(beta)); };
        for (long mu = 0; mu <= inst.ctx.mfrak; ++mu) {
            CHECK(eng.partial_eval(fam.G(mu, B, cvar)) == eng.partial_G(mu, B, inst.S.c));
        }

        auto full = eng.check(B);
        CHECK(full.supported);
        CHECK(!full.first_failure);
        CHECK(full.jfrak.size() == static_cast<std::size_t>(inst.ctx.mfrak + 1));

        // dropping beta is visible exactly when its mapped series reaches negative tau-powers
        for (const auto &[beta, cb] : inst.S.c) {
            auto rep = eng.check(without(B, beta));
            CHECK(rep.supported == !visible(eng, beta, inst.ctx.mfrak));
            if (rep.supported) {
                continue;
            }
            REQUIRE(rep.first_failure);
            CHECK(rep.first_failure->first >= beta);
            bool witnessed = false;
            for (const auto &k : rep.checks) {
                witnessed = witnessed || (!k.ok && !k.witness.empty());
            }
            for (const auto &t : rep.zero_tail) {
                witnessed = witnessed || !t.ok;
            }
            CHECK(witnessed);
        }

        // S' zeroes the dropped constants; the kept subset is unaffected
        if (!inst.S.c.empty()) {
            const long drop = inst.S.c.begin()->first;
            auto Sp = restrict_constants(inst.S, B, without(B, drop));
            CHECK(Sp.c.count(drop) == 0);
            auto a1 = check_supported(inst.ctx, inst.alpha, Sp, without(B, drop));
            auto a2 = eng.check(without(B, drop));
            CHECK(a1.supported == a2.supported);
        }

        auto j = supported_to_json(full);
        CHECK(j["supported"] == true);
        CHECK(j.contains("checks"));
        CHECK(j.contains("zero_tail"));
    }
}

TEST_CASE("supported sets at (2,3,4,8)")
{
    auto inst = make_instance(2, 3, 4, 8, 1, 15, 1);
    SupportEngine eng(inst.ctx, inst.alpha, inst.S);
    const auto B = inst.ctx.admissible_betas();
    CHECK(eng.check(B).supported);
    REQUIRE(!inst.S.c.empty());
    auto empty = eng.check({});
    CHECK(!empty.supported);
    REQUIRE(empty.first_failure);
    CHECK(empty.first_failure->first >= inst.S.c.begin()->first);
    CHECK(empty.first_failure->first == 24);
    CHECK_THROWS_AS(eng.check({1}), PreconditionError);

    SupportOptions exact;
    exact.exact_jfrak = true;
    auto rep = check_supported(inst.ctx, inst.alpha, inst.S, B, exact);
    CHECK(rep.supported);
    CHECK(rep.jfrak == eng.check(B).jfrak);
    CHECK(rep.jfrak_mode == "exact");
}
