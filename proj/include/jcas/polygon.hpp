#ifndef JCAS_POLYGON_HPP
#define JCAS_POLYGON_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include <jcas/poly.hpp>

namespace jcas {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point &o) const { return x == o.x && y == o.y; }
    bool operator<(const Point &o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Convex polygon with rational vertices, counterclockwise, extreme points
// only. Empty, point and segment hulls are valid values.
class LatticePolygon {
public:
    LatticePolygon() = default;

    static LatticePolygon hull(std::vector<Point> points);

    const std::vector<Point> &vertices() const noexcept { return v_; }
    bool empty() const noexcept { return v_.empty(); }

    bool contains(const Point &p) const;
    bool contains(const LatticePolygon &other) const;
    bool has_vertex(const Point &p) const;

    LatticePolygon scaled(const Rational &s) const;
    LatticePolygon translated(const Point &d) const;

    // Integer points inside (boundary included).
    std::vector<std::pair<std::int64_t, std::int64_t>> lattice_points() const;

    bool operator==(const LatticePolygon &o) const { return v_ == o.v_; }
    bool operator!=(const LatticePolygon &o) const { return !(*this == o); }

private:
    std::vector<Point> v_;
};

// Q equals P scaled by 1/r about the origin (r = 2/3 means Q = (3/2) P).
bool similar_with_ratio(const LatticePolygon &P, const LatticePolygon &Q, const Rational &r);

// Exponent support of a polynomial in x, y with nonnegative integer exponents.
// Throws DomainError otherwise.
std::vector<std::pair<std::int64_t, std::int64_t>> support(const Poly &f);
LatticePolygon newton_polygon(const Poly &f);
// Convex hull of supp(f) and the origin; empty for f = 0.
LatticePolygon newton_polygon0(const Poly &f);

// Number of lattice steps on a segment.
std::int64_t len_of(const Point &a, const Point &b);

enum class Direction { W01, W11, W10 };

// Length of a w-homogeneous polynomial; nullopt encodes -infinity (h = 0).
// Throws GradingError when h is not w-homogeneous.
std::optional<std::int64_t> len_of(const Poly &h, Direction w);

// Trapezoids and the regions of the decomposition lemmas.
LatticePolygon trapezoid(const Rational &m, const Rational &n);   // T_{m,n}
LatticePolygon trapezoid1(const Rational &m, const Rational &n);  // T^1
LatticePolygon trapezoid2(const Rational &m, const Rational &n);  // T^2
LatticePolygon trapezoid3(const Rational &m, const Rational &n);  // T^3

// Throws ParameterError unless gcd(a,b)=1, 2<=a<b, a|m, a|n, 0<m<n.
void validate_Q(long a, long b, long m, long n);

struct RegionSet {
    LatticePolygon T;
    LatticePolygon T1;
    LatticePolygon T2;
    LatticePolygon T3;
    LatticePolygon Nprime;
    LatticePolygon Nsecond;
    std::vector<std::int64_t> a_seq;
    std::vector<std::int64_t> b_seq;
};

// a_i = floor((i+1)/(n-m)), b_i = a_i + floor(i/m) for i in [0, m(n-m)].
std::int64_t seq_a(std::int64_t i, std::int64_t m, std::int64_t n);
std::int64_t seq_b(std::int64_t i, std::int64_t m, std::int64_t n);

RegionSet build_regions(long a, long b, long m, long n);

nlohmann::json polygon_to_json(const LatticePolygon &p);

} // namespace jcas

#endif
