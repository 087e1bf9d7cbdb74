#include <doctest.h>

#include <random>

#include <jcas/error.hpp>
#include <jcas/tschirnhausen.hpp>

#include "helpers.hpp"

using namespace jcas;
using testutil::P;

namespace {

bool all_ok(const std::vector<StructureCheck> &checks)
{
    for (const auto &c : checks) {
        if (!c.ok) {
            return false;
        }
    }
    return true;
}

const StructureCheck &find_check(const std::vector<StructureCheck> &checks, const std::string &name)
{
    for (const auto &c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::runtime_error("no check named " + name);
}

} // namespace

TEST_CASE("Tschirnhausen polynomial validation and arithmetic")
{
    CHECK_THROWS_AS(Tschirnhausen({1, 1, 1}), DomainError);
    CHECK_THROWS_AS(Tschirnhausen({0, 0, 2}), DomainError);
    CHECK_THROWS_AS(Tschirnhausen({1}), DomainError);
    CHECK_THROWS_AS(Tschirnhausen({3, 1}), DomainError);

    Tschirnhausen a({1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(a.degree() == 12);
    CHECK(a.to_string() == "z^12 + z^4 + 1");

    Tschirnhausen s({-1, 0, 1});
    auto s2 = s.power(2);
    CHECK(s2 == Tschirnhausen({1, 0, -2, 0, 1}));
    CHECK(s2.plus_monomial(0, -1) == Tschirnhausen({0, 0, -2, 0, 1}));
    CHECK_THROWS_AS(s2.plus_monomial(3, 1), DomainError);

    Tschirnhausen c({2, 5, 0, 1});
    CHECK_THROWS_AS(c.reflected(), DomainError);
    Tschirnhausen e({2, 5, 0, 0, 1});
    CHECK(e.reflected() == Tschirnhausen({2, -5, 0, 0, 1}));

    auto R = testutil::xy();
    auto E = P("x + y^2", R);
    CHECK(e.compose(E) == e.reflected().compose(-E));
    std::vector<Poly> pw{Poly::constant(R, 1)};
    for (int k = 0; k < 4; ++k) {
        pw.push_back(pw.back() * E);
    }
    CHECK(e.compose(pw) == e.compose(E));
}

TEST_CASE("extract_Q worked examples")
{
    auto R = testutil::xy();
    auto Q = P("(x+1)*y^2 + 1", R);
    CHECK(extract_Q(P("(x+1)^2*y^4 + 2*(x+1)*y^2 + 1", R), 2, 2, 4) == Q);
    CHECK(extract_Q(P("x^2*y^4", R), 2, 2, 4) == P("x*y^2", R));
    CHECK(extract_Q(Q.pow(2) + P("x", R), 2, 2, 4) == Q);

    CHECK_THROWS_AS(extract_Q(P("2*x^2*y^4", R), 2, 2, 4), NormalizationError);
    CHECK_THROWS_AS(extract_Q(P("x^2*y^4 + y^5", R), 2, 2, 4), PreconditionError);
    CHECK_THROWS_AS(extract_Q(P("x^2*y^4", R), 2, 3, 4), PreconditionError);
}

TEST_CASE("extract_Q characterization: window and uniqueness")
{
    auto R = testutil::xy();
    std::mt19937_64 rng(7);
    const auto Ns = trapezoid(1, 2).translated({1, 2});
    for (int trial = 0; trial < 50; ++trial) {
        auto noise = testutil::random_poly(rng, R, 6, 0, 4);
        Poly F = P("x^2*y^4", R);
        for (const auto &t : noise.terms()) {
            Poly mono = Poly::from_sorted_unchecked(R, {t});
            auto N0 = newton_polygon0(F + mono);
            if (trapezoid(2, 4).contains(N0) && t.exps != Exponents{2, 4}) {
                F += mono;
            }
        }
        Poly Q = extract_Q(F, 2, 2, 4);
        CHECK(Q.coeff({1, 2}) == 1);
        CHECK(trapezoid(1, 2).contains(newton_polygon0(Q)));
        for (auto [i, j] : support(F - Q.pow(2))) {
            CHECK_FALSE(Ns.contains(Point{i, j}));
        }
    }
}

TEST_CASE("extract_Q round trip on random Q")
{
    std::mt19937_64 rng(2024);
    auto R = testutil::xy();
    for (auto [a, m, n] : {std::tuple{2L, 2L, 4L}, {2L, 4L, 8L}, {3L, 3L, 6L}}) {
        const auto pts = trapezoid(m / a, n / a).lattice_points();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Term> terms{{{m / a, n / a}, 1}};
            for (auto [i, j] : pts) {
                if ((i != m / a || j != n / a) && rng() % 2) {
                    terms.push_back({{i, j}, Rational(static_cast<long>(rng() % 19) - 9)});
                }
            }
            Poly Q = Poly::from_terms(R, terms);
            CHECK(extract_Q(Q.pow(static_cast<unsigned long>(a)), a, m, n) == Q);
        }
    }
}

TEST_CASE("decompose_principal worked examples")
{
    auto R = testutil::xy();
    auto d = decompose_principal(P("(3*x^2+y)^12 + (3*x^2+y)^4 + 1", R));
    CHECK(d.delta == 12);
    CHECK(d.E == P("3*x^2 + y", R));
    CHECK(d.alpha.to_string() == "z^12 + z^4 + 1");

    auto lin = decompose_principal(P("x", R));
    CHECK(lin.delta == 1);
    CHECK(lin.E == P("x", R));
    CHECK(lin.alpha == Tschirnhausen::monomial(1));

    auto Q = P("(x+1)*y^2 + 1", R);
    auto p = decompose_principal(Q, std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(p.delta == 1);
    CHECK(p.E == Q);

    CHECK_THROWS_AS(decompose_principal(P("7", R)), DomainError);
}

TEST_CASE("decompose_principal normalization and field extensions")
{
    auto R = testutil::xy();
    // Even depth with the corner at -1: E is negated and alpha reflected.
    auto E = P("-x*y + x + 2", R);
    auto Q = E.pow(4) + E.pow(1) * Rational(3) + P("5", R);
    auto d = decompose_principal(Q, std::pair<std::int64_t, std::int64_t>{4, 4});
    CHECK(d.delta == 4);
    CHECK(d.E == -E);
    CHECK(d.E.coeff({1, 1}) == 1);
    CHECK(d.alpha.compose(d.E) == Q);

    // 2(x+y)^2 + 1: depth 2 needs sqrt(2).
    CHECK_THROWS_AS(decompose_principal(P("2*(x+y)^2 + 1", R)), FieldExtensionError);

    // Corner coefficient of E other than +-1.
    CHECK_THROWS_AS(decompose_principal(P("4*x^2*y^2 + 1", R), std::pair<std::int64_t, std::int64_t>{2, 2}),
                    NormalizationError);
}

TEST_CASE("decompose_principal recomposition on random compositions")
{
    std::mt19937_64 rng(99);
    auto R = testutil::xy();
    for (int trial = 0; trial < 40; ++trial) {
        Poly E = testutil::random_poly(rng, R, 3, 0, 2);
        if (E.is_constant()) {
            continue;
        }
        const std::size_t k = 2 + rng() % 3;
        std::vector<Rational> c(k + 1, 0);
        c[k] = 1;
        for (std::size_t j = 0; j + 2 <= k; ++j) {
            c[j] = static_cast<long>(rng() % 7) - 3;
        }
        Poly Q = Tschirnhausen(c).compose(E);
        try {
            auto d = decompose_principal(Q);
            CHECK(d.alpha.compose(d.E) == Q);
            CHECK(d.delta % static_cast<long>(k) == 0);
        } catch (const FieldExtensionError &) {
            // only possible when the leading coefficient is not a perfect power
            CHECK_FALSE(rational_root(Q.leading_term().coeff, 2).has_value());
        }
    }
}

TEST_CASE("minimize_remainder worked examples")
{
    auto R = testutil::xy();
    auto E = P("(x+1)*y^2 + 1", R);

    auto r = minimize_remainder(E.pow(2), 2, 2, 4);
    CHECK(r.Fcirc.is_zero());
    CHECK(r.alphaCirc.to_string() == "z^2");
    CHECK(r.Ecirc == E);
    CHECK(r.delta == 1);

    auto F = E.pow(2) + P("x", R);
    auto r2 = minimize_remainder(F, 2, 2, 4);
    CHECK(r2.Fcirc == P("x", R));
    CHECK(r2.Vcirc == LatticePolygon::hull({{0, 0}, {1, 0}}));
    CHECK(r2.alphaCirc.compose(r2.Ecirc) + r2.Fcirc == F);

    // x^2 y^4 + x y^2: Q picks up 1/2, the constant is absorbed by alpha.
    auto r3 = minimize_remainder(P("x^2*y^4 + x*y^2", R), 2, 2, 4);
    CHECK(r3.Ecirc == P("x*y^2 + 1/2", R));
    CHECK(r3.alphaCirc.to_string() == "z^2 - 1/4");
    CHECK(r3.Fcirc.is_zero());
    CHECK(r3.moves == 1);

    CHECK_THROWS_AS(minimize_remainder(P("x^2*y^4 + y^5", R), 2, 2, 4), PreconditionError);
}

TEST_CASE("minimize_remainder invariants on random instances")
{
    std::mt19937_64 rng(31337);
    auto R = testutil::xy();
    const auto Ns = trapezoid(2, 4).scaled(make_rational(1, 2)).translated({1, 2});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Term> qt{{{1, 2}, 1}};
        for (auto [i, j] : trapezoid(1, 2).lattice_points()) {
            if ((i != 1 || j != 2) && rng() % 2) {
                qt.push_back({{i, j}, Rational(static_cast<long>(rng() % 7) - 3)});
            }
        }
        Poly F = Poly::from_terms(R, qt).pow(2);
        // low-order noise outside N''
        for (int k = 0; k < 3; ++k) {
            Exponents e{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 2)};
            F += Poly::monomial(R, e, static_cast<long>(rng() % 5) + 1);
        }
        if (!trapezoid(2, 4).contains(newton_polygon0(F))) {
            continue;
        }
        auto r = minimize_remainder(F, 2, 2, 4);
        CHECK(r.alphaCirc.compose(r.Ecirc) + r.Fcirc == F);
        CHECK(r.alphaCirc.degree() == static_cast<std::size_t>(2 * r.delta));
        CHECK(in_tschirnhausen_window(r.Fcirc, newton_polygon0(F), Ns));
        CHECK(r.alphaQ.compose(r.Ecirc) == r.Q);
        auto j = remainder_to_json(r);
        CHECK(j.contains("Fcirc"));
        CHECK(j.at("delta") == r.delta);
    }
}

TEST_CASE("verify_leading_structure controls")
{
    auto R = testutil::xy();
    auto Q = P("(x+1)*y^2 + 1", R);
    auto checks = verify_leading_structure(Q, Q, 1, nullptr, 2, 2, 4);
    CHECK(find_check(checks, "Q (0,1)-top piece").ok);
    const auto &c11 = find_check(checks, "Q (1,1)-top piece");
    CHECK_FALSE(c11.ok);
    CHECK_FALSE(c11.witness.empty());

    auto neg = verify_leading_structure(P("x*y^2", R), P("x*y^2", R), 1, nullptr, 2, 2, 4);
    CHECK_FALSE(find_check(neg, "E (0,1)-top piece").ok);

    // Both leading forms match and the lower (1,1)-piece y^2 + xy carries x+y.
    auto good = P("(x+1)*y^2 + x^3 + 2*x^2*y + x*y", R);
    auto F = good.pow(2);
    auto r = minimize_remainder(F, 2, 2, 4);
    auto all = verify_leading_structure(r, 2, 2, 4);
    CHECK(all_ok(all));
    auto j = structure_to_json(all);
    CHECK(j.size() == all.size());
}
