#include <doctest.h>

#include <numeric>

#include <jcas/error.hpp>
#include <jcas/gradings.hpp>
#include <jcas/polygon.hpp>

#include "helpers.hpp"

using namespace jcas;
using testutil::P;

namespace {

LatticePolygon poly_of(std::vector<Point> pts) { return LatticePolygon::hull(std::move(pts)); }

} // namespace

TEST_CASE("support and Newton polygons")
{
    auto R = testutil::xy();
    auto f = P("x^2*y + 1", R);
    CHECK(support(f).size() == 2);
    CHECK(newton_polygon(f) == poly_of({{0, 0}, {2, 1}}));
    CHECK(newton_polygon0(f) == newton_polygon(f));
    CHECK(newton_polygon0(Poly(R)).empty());
    auto g = P("y^2", R);
    CHECK(newton_polygon(g).vertices().size() == 1);
    CHECK(newton_polygon0(g) == poly_of({{0, 0}, {0, 2}}));
    CHECK_THROWS_AS(newton_polygon(P("x^-1", R)), DomainError);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = testutil::random_poly(rng, R, 6, 0, 6);
        if (h.is_zero()) {
            continue;
        }
        CHECK(newton_polygon0(h).contains(newton_polygon(h)));
        for (const auto &v : newton_polygon0(h).vertices()) {
            CHECK(v.x >= 0);
            CHECK(v.y >= 0);
        }
    }
}

TEST_CASE("hull handles collinear and repeated points")
{
    auto seg = poly_of({{0, 0}, {1, 1}, {2, 2}, {1, 1}});
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.contains(Point{1, 1}));
    CHECK_FALSE(seg.contains(Point{1, 0}));
    auto sq = poly_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}, {1, 1}});
    CHECK(sq.vertices().size() == 4);
    CHECK(sq.lattice_points().size() == 9);
}

TEST_CASE("lengths")
{
    auto R = testutil::xy();
    CHECK(len_of(P("(x+1)^3*y^2", R), Direction::W01) == 3);
    CHECK(len_of(Point{0, 0}, Point{2, 4}) == 2);
    CHECK_FALSE(len_of(Poly(R), Direction::W11).has_value());
    CHECK_THROWS_AS(len_of(P("x + y^2", R), Direction::W11), GradingError);
    CHECK(len_of(P("x^3 + x*y^2", R), Direction::W11) == 2);
}

TEST_CASE("regions and sequences")
{
    auto R = build_regions(2, 3, 4, 8);
    CHECK(R.a_seq.front() == 0);
    CHECK(R.b_seq.front() == 0);
    CHECK(R.a_seq[16] == 4);
    CHECK(R.b_seq[16] == 8);
    CHECK(R.a_seq[15] == 4);
    CHECK(R.b_seq[15] == 7);

    auto S = build_regions(2, 3, 2, 4);
    CHECK(S.Nprime == poly_of({{0, 0}, {3, 0}, {1, 2}, {0, 2}}));
    CHECK(S.Nsecond == S.Nprime.translated({1, 2}));
    CHECK(S.T3 == poly_of({{0, 0}, {2, 0}, {2, 4}, {0, 2}}));
    CHECK(S.T2 == poly_of({{0, 0}, {2, 0}, {2, 4}, {0, 4}}));

    CHECK_THROWS_AS(build_regions(2, 4, 4, 8), ParameterError);
    CHECK_THROWS_AS(build_regions(2, 3, 3, 8), ParameterError);
    CHECK_THROWS_AS(build_regions(2, 3, 8, 4), ParameterError);
}

TEST_CASE("polygon predicates")
{
    CHECK(trapezoid(2, 4).contains(trapezoid(1, 2)));
    CHECK(similar_with_ratio(trapezoid(2, 4), trapezoid(3, 6), make_rational(2, 3)));
    CHECK_FALSE(similar_with_ratio(trapezoid(2, 4), trapezoid(3, 6), 1));
    CHECK(trapezoid(4, 8).has_vertex({4, 8}));
}

TEST_CASE("graded decomposition")
{
    auto R = testutil::xy();
    auto f = P("x^2*y + x*y + 1", R);
    auto g = w_decompose(f, Direction::W11);
    CHECK(g.pieces.size() == 3);
    CHECK(g.piece(3, R) == P("x^2*y", R));
    CHECK(g.piece(2, R) == P("x*y", R));
    CHECK(g.piece(0, R) == P("1", R));
    auto h = w_decompose(f, Direction::W01);
    CHECK(h.piece(1, R) == P("x^2*y + x*y", R));
    CHECK(w_degree(P("x^3*y^2 + y^5", R), Direction::W10) == 3);
    CHECK(leading_form(P("x^3*y^2 + y^5", R), Direction::W10) == P("x^3*y^2", R));
    CHECK_FALSE(w_degree(Poly(R), Direction::W01).has_value());

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        auto p = testutil::random_poly(rng, R, 5, -2, 5);
        for (auto w : {Direction::W01, Direction::W11, Direction::W10}) {
            Poly sum(R);
            for (const auto &[d, piece] : w_decompose(p, w).pieces) {
                sum += piece;
            }
            CHECK(sum == p);
        }
    }
}

TEST_CASE("change of variables")
{
    auto R = testutil::xy();
    auto f = P("x^3*y - 2*y^2 + x", R);
    for (auto [fw, bw] : {std::pair{Phi::ZY, Phi::ZYInv}, {Phi::XW, Phi::XWInv}, {Phi::ZW, Phi::ZWInv}}) {
        CHECK(apply_phi(apply_phi(f, fw), bw) == f);
    }
    auto Z = make_ring({"z", "w"});
    CHECK(apply_phi(P("z^2*w^4", Z), Phi::ZWInv) == P("(x+1)^2*(x+y)^4", R));
    auto zy = apply_phi(P("x^2", R), Phi::ZY);
    CHECK(zy == P("z^2 - 2*z + 1", make_ring({"z", "y"})));
    CHECK(apply_phi(P("y", R), Phi::XW) == P("w - x", make_ring({"x", "w"})));
}

TEST_CASE("homogenization")
{
    auto R = testutil::xy();
    auto h = homogenize(P("x^2*y + x", R), Direction::W11);
    CHECK(h.order() == 3);
    CHECK(h.coeff(0) == P("x^2*y", R));
    CHECK(h.coeff(1).is_zero());
    CHECK(h.coeff(2) == P("x", R));
    auto hh = homogenize(P("x^2*y + x*y^2", R), Direction::W11);
    CHECK(hh.order() == 1);
    CHECK(homogenize(P("x^2*y + x", R), Direction::W11).coeff(2) == P("x", R));
    auto T = make_ring({"a", "b"});
    CHECK_THROWS_AS(homogenize(P("a + b", T), {Rational(1), make_rational(1, 2)}), HomogenizationError);
}

TEST_CASE("trapezoid shape equivalences")
{
    auto R = testutil::xy();
    auto a = trapezoid_shape_check(P("(x+1)^2*y^4", R), 2, 4, ShapeKind::A);
    CHECK(a.divisibility_side);
    CHECK(a.polygon_side);
    auto b = trapezoid_shape_check(P("x^2*(x+y)^4", R), 2, 4, ShapeKind::B);
    CHECK(b.divisibility_side);
    CHECK(b.polygon_side);
    auto c = trapezoid_shape_check(P("x^6", R), 2, 4, ShapeKind::Both);
    CHECK_FALSE(c.divisibility_side);
    CHECK_FALSE(c.polygon_side);
    CHECK_FALSE(condition_b(P("x^6", R), 2, 4));
    CHECK_THROWS_AS(trapezoid_shape_check(P("x", R), 4, 4, ShapeKind::A), ParameterError);
}
