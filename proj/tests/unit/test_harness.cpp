#include <doctest.h>

#include <random>

#include <jcas/error.hpp>
#include <jcas/harness.hpp>

#include "helpers.hpp"

using namespace jcas;
using testutil::P;

namespace {

ExampleRequest request(ExampleKind kind, long a, long b, long m, long n, std::uint64_t seed, double density = 0.5)
{
    ExampleRequest r;
    r.kind = kind;
    r.a = a;
    r.b = b;
    r.m = m;
    r.n = n;
    r.seed = seed;
    r.density = density;
    return r;
}

const char *matrix_example = "3*x^6*y + 2*x^5*y^2 + x^3*y^4 + 2*x^4*y^2 + 3*x^2*y^4 + 3*x*y^4 + y^4 + x*y^2 + y^2 + 1";

} // namespace

TEST_CASE("Jacobian bracket")
{
    auto R = testutil::xy();
    CHECK(jacobian_bracket(P("x", R), P("y", R)) == P("1", R));
    CHECK(jacobian_bracket(P("x^2", R), P("y", R)) == P("2*x", R));
    auto f = P("x^3*y + 2*x - y^2", R);
    CHECK(jacobian_bracket(f, f).is_zero());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto a = testutil::random_poly(rng, R, 4, 0, 3);
        auto b = testutil::random_poly(rng, R, 4, 0, 3);
        auto c = testutil::random_poly(rng, R, 4, 0, 3);
        CHECK(jacobian_bracket(a, b) == -jacobian_bracket(b, a));
        CHECK(jacobian_bracket(a + c, b) == jacobian_bracket(a, b) + jacobian_bracket(c, b));
        CHECK(jacobian_bracket(a * Rational(3), b) == jacobian_bracket(a, b) * Rational(3));
        // Leibniz rule
        CHECK(jacobian_bracket(a * c, b) == a * jacobian_bracket(c, b) + c * jacobian_bracket(a, b));
    }
    CHECK_THROWS_AS(jacobian_bracket(P("x", R), P("x", testutil::xy(2))), ContextError);
}

TEST_CASE("condition report")
{
    auto R = testutil::xy();
    auto E = P("(x+1)*(x+y)^2", R);
    auto rep = check_conditions(E.pow(2), E.pow(3), 2, 3, 2, 4);
    CHECK(rep.all());
    CHECK(rep.first_failure() == 0);

    auto mono = check_conditions(P("x^2*y^4", R), E.pow(3), 2, 3, 2, 4);
    CHECK(!mono.holds(1));
    CHECK(mono.conditions[0].witness.find("(6,0)") != std::string::npos);

    auto same = check_conditions(E.pow(2), E.pow(2), 2, 3, 2, 4);
    CHECK(same.holds(1));
    CHECK(!same.holds(4));
    CHECK(same.holds(5));

    // corner coefficient 2 keeps N0 unchanged after subtracting x^m y^n
    auto twice = check_conditions(E.pow(2) * Rational(2), E.pow(3), 2, 3, 2, 4);
    CHECK(!twice.holds(1));
    CHECK(twice.conditions[0].witness.find("not 1") != std::string::npos);

    // x y^4 breaks the (0,1) divisibility of the top piece but not the shape
    auto F2 = E.pow(2) + P("x*y^4", R);
    auto r2 = check_conditions(F2, E.pow(3), 2, 3, 2, 4);
    CHECK(r2.holds(1));
    CHECK(!r2.holds(2));
    CHECK(!r2.holds(5));
    for (const auto &c : r2.conditions) {
        CHECK(c.ok == c.witness.empty());
    }

    CHECK_THROWS_AS(check_conditions(E, E, 2, 4, 2, 4), ParameterError);

    auto j = conditions_to_json(r2);
    CHECK(j["all"] == false);
    CHECK(j["conditions"].size() == 5);
}

TEST_CASE("generated examples satisfy the conditions")
{
    const long sets[][4] = {{2, 3, 2, 4}, {2, 3, 4, 8}, {3, 4, 3, 6}};
    for (const auto &s : sets) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto ex = generate_example(request(ExampleKind::BracketZeroPair, s[0], s[1], s[2], s[3], seed));
            REQUIRE(ex.G);
            auto rep = check_conditions(ex.F, *ex.G, s[0], s[1], s[2], s[3]);
            CHECK_MESSAGE(rep.all(), "seed ", seed);
            CHECK(jacobian_bracket(ex.F, *ex.G).is_zero());
            CHECK(ex.alpha->degree() == static_cast<std::size_t>(s[0]));
            CHECK(ex.gamma->degree() == static_cast<std::size_t>(s[1]));
        }
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto ex = generate_example(request(ExampleKind::Condition123F, 2, 3, 4, 8, seed));
        auto rep = check_conditions(ex.F, ex.F, 2, 3, 4, 8);
        CHECK(rep.holds(1));
        CHECK(rep.holds(2));
        CHECK(rep.holds(3));
        CHECK(trapezoid_shape_check(ex.F, 4, 8, ShapeKind::Both).polygon_side);
    }
}

TEST_CASE("example generator contract")
{
    auto R = testutil::xy();
    auto ex = generate_example(request(ExampleKind::BracketZeroPair, 2, 3, 2, 4, 1, 0.0));
    CHECK(*ex.E == P("(x+1)*(x+y)^2", R));
    CHECK(ex.F == P("((x+1)*(x+y)^2)^2", R));
    CHECK(*ex.G == P("((x+1)*(x+y)^2)^3", R));

    auto t3 = generate_example(request(ExampleKind::RandomT3, 2, 3, 3, 5, 9, 0.0));
    CHECK(t3.F == P("(x+1)^3*(x+y)^5", R));
    CHECK(*t3.Fzw == P("z^3*w^5", make_ring({"z", "w"})));

    for (auto kind : {ExampleKind::Condition123F, ExampleKind::BracketZeroPair, ExampleKind::RandomT3}) {
        auto a = example_to_json(generate_example(request(kind, 2, 3, 4, 8, 42)));
        auto b = example_to_json(generate_example(request(kind, 2, 3, 4, 8, 42)));
        auto c = example_to_json(generate_example(request(kind, 2, 3, 4, 8, 43)));
        CHECK(a.dump() == b.dump());
        CHECK(a.dump() != c.dump());
    }

    auto bad = request(ExampleKind::BracketZeroPair, 2, 3, 4, 8, 0);
    bad.delta = 3;
    CHECK_THROWS_AS(generate_example(bad), ParameterError);
    CHECK_THROWS_AS(generate_example(request(ExampleKind::Condition123F, 2, 4, 4, 8, 0)), ParameterError);
    CHECK(parse_example_kind("random_T3") == ExampleKind::RandomT3);
    CHECK_THROWS_AS(parse_example_kind("nope"), ParameterError);
}

TEST_CASE("divisibility and support conditions")
{
    auto R = testutil::xy();
    auto f = P(matrix_example, R);
    CHECK(divisibility_failures(f, Direction::W01, 1).empty());
    CHECK(!divisibility_failures(f, Direction::W01, 0).empty());
    CHECK(divisibility_failures(f, Direction::W11, 6).empty());
    CHECK(!divisibility_failures(f, Direction::W11, 5).empty());

    Poly zero(R);
    for (long i = 0; i <= 16; ++i) {
        for (auto mode : {DcMode::W01, DcMode::W11, DcMode::DC, DcMode::DSC}) {
            CHECK(dc_dsc_check(zero, 4, 8, i, mode).ok);
        }
    }

    // i = 0: a_0 = b_0 = 0, so T_{0,0} is the origin
    auto out = dc_dsc_check(P("x*y", R), 4, 8, 0, DcMode::DSC);
    CHECK(!out.ok);
    bool found = false;
    for (const auto &w : out.witnesses) {
        found = found || w.find("point (1,1)") != std::string::npos;
    }
    CHECK(found);

    // x^{a_i + b_i} y lies outside T_{a_i, b_i} while its graded pieces are fine
    const long i = 11;
    const long ai = static_cast<long>(seq_a(i, 4, 8)), bi = static_cast<long>(seq_b(i, 4, 8));
    auto g = Poly::monomial(R, {ai + bi, 1});
    auto dsc = dc_dsc_check(g, 4, 8, i, DcMode::DSC);
    CHECK(!dsc.ok);
    CHECK(dsc.shift01 == 2);
    CHECK(dsc.shift11 == 3);
    CHECK(dc_dsc_check(g, 4, 8, i, DcMode::W01).ok);

    CHECK_THROWS_AS(dc_dsc_check(zero, 4, 8, 17, DcMode::DC), ParameterError);
    CHECK(parse_dc_mode("(1,1)-DC") == DcMode::W11);
    CHECK(dc_mode_name(DcMode::DSC) == "DSC");

    // degree bound implied by (0,1)-DC near the top of the range
    DcOptions opt;
    opt.consequences = true;
    opt.a = 2;
    auto v = dc_dsc_check(P("(x+1)*y^3", R), 2, 4, 4, DcMode::W01, opt);
    CHECK(v.ok);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].find("(0,1)-degree 3") != std::string::npos);
    auto quiet = dc_dsc_check(P("(x+1)*y^2", R), 2, 4, 4, DcMode::W01, opt);
    CHECK(quiet.ok);
    CHECK(quiet.violations.empty());

    auto j = dc_to_json(out);
    CHECK(j["ok"] == false);
}

TEST_CASE("remainder pipeline")
{
    auto R = testutil::xy();
    auto ex = generate_example(request(ExampleKind::BracketZeroPair, 2, 3, 4, 8, 2));
    auto run = remainder_pipeline(ex.F, *ex.G, 2, 3, 4, 8);
    CHECK(run.truncated_at.empty());
    REQUIRE(run.remainder);
    CHECK(run.remainder->Fcirc.is_zero());
    CHECK(run.stages.empty());
    REQUIRE(!run.conclusions.empty());
    CHECK(run.conclusions[0].find("vacuous") != std::string::npos);

    auto bad = remainder_pipeline(ex.F, ex.F, 2, 3, 4, 8);
    CHECK(bad.truncated_at == "check_conditions");
    CHECK(bad.reason.find("(4)") != std::string::npos);

    // a T^3-supported perturbation keeps (1)-(3) but leaves a remainder
    auto E = P("(x+1)*(x+y)^2", R);
    auto F = E.pow(2) + P("x + 1", R);
    auto G = E.pow(3);
    auto p1 = remainder_pipeline(F, G, 2, 3, 2, 4);
    auto p2 = remainder_pipeline(F, G, 2, 3, 2, 4);
    CHECK(p1.truncated_at.empty());
    REQUIRE(p1.remainder);
    CHECK(!p1.remainder->Fcirc.is_zero());
    CHECK(!p1.conditions->holds(5));
    CHECK(!p1.stages.empty());
    for (const auto &st : p1.stages) {
        CHECK(st.truncated_at.empty() == st.support.has_value());
    }
    CHECK(pipeline_to_json(p1).dump() == pipeline_to_json(p2).dump());

    PipelineOptions only;
    only.only_i = 2;
    auto p3 = remainder_pipeline(F, G, 2, 3, 2, 4, only);
    REQUIRE(p3.stages.size() == 1);
    CHECK(p3.stages[0].i == 2);
}

TEST_CASE("Laurent-form check")
{
    auto R = testutil::xy();
    auto mono = valqui_check(P("x^3", R), P("x^2", R), 2, 3, -4);
    CHECK(mono.C.poly() == P("x", R));
    CHECK(mono.lambda == std::vector<Rational>{1, 0, 0, 0});
    CHECK(mono.P.poly().is_zero());
    CHECK(mono.root_ok);
    for (const auto &c : mono.conditions) {
        CHECK(c.ok);
    }

    auto G = P("x^2 + 2*y", R);
    auto rep = valqui_check(P("x^3 + 3*x*y", R), G, 2, 3, -6);
    // C = x (1 + 2y/x^2)^(1/2) by the binomial series
    Poly want(R);
    for (long k = 0; 1 - 2 * k >= -6; ++k) {
        want += Poly::monomial(R, {1 - 2 * k, k}, binomial(make_rational(1, 2), static_cast<unsigned long>(k)) *
                                                      pow(Rational(2), k));
    }
    CHECK(rep.C.poly() == want);
    CHECK(rep.root_ok);
    CHECK(rep.conditions[0].ok);
    // C^3 = x^3 + 3xy + (3/2) y^2 x^-1 + ..., so P starts at degree 1 > 2 - a
    CHECK(rep.P.poly().coeff({-1, 2}) == make_rational(-3, 2));
    CHECK(!rep.conditions[1].ok);

    // F and G polynomial in a common C with P = 0: the bracket vanishes
    auto C = P("x + y", R);
    auto F = C.pow(3) + C * Rational(2);
    auto common = valqui_check(F, C.pow(2), 2, 3, -5);
    CHECK(common.P.poly().is_zero());
    CHECK(common.C.poly() == C);
    CHECK(common.lambda == std::vector<Rational>{1, 0, 2, 0});
    CHECK(!common.conditions[0].ok);
    CHECK(jacobian_bracket(F, C.pow(2)).is_zero());

    // a >= 3 needs negative powers of C
    auto neg = valqui_check(P("x^2", R), P("x^3 + y", R), 3, 2, -8);
    CHECK(neg.lambda.size() == 4);
    CHECK(neg.root_ok);

    CHECK_THROWS_AS(valqui_check(P("x^3", R), P("x^3", R), 2, 3, -4), RootError);
    CHECK_THROWS_AS(valqui_check(P("x^4", R), P("x^2", R), 2, 4, -4), PreconditionError);
    auto j = valqui_to_json(mono);
    CHECK(j["all"] == true);
}
