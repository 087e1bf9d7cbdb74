#include <jcas/polygon.hpp>

#include <algorithm>
#include <numeric>

#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

namespace {

Rational cross(const Point &o, const Point &a, const Point &b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

LatticePolygon LatticePolygon::hull(std::vector<Point> pts)
{
    LatticePolygon P;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) {
        P.v_ = std::move(pts);
        return P;
    }
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto &p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) {
            --k;
        }
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) {
            --k;
        }
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    // All points collinear: the chain degenerates to the two endpoints.
    P.v_ = std::move(h);
    return P;
}

bool LatticePolygon::contains(const Point &p) const
{
    if (v_.empty()) {
        return false;
    }
    if (v_.size() == 1) {
        return v_[0] == p;
    }
    if (v_.size() == 2) {
        if (cross(v_[0], v_[1], p) != 0) {
            return false;
        }
        return std::min(v_[0].x, v_[1].x) <= p.x && p.x <= std::max(v_[0].x, v_[1].x) &&
               std::min(v_[0].y, v_[1].y) <= p.y && p.y <= std::max(v_[0].y, v_[1].y);
    }
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (cross(v_[i], v_[(i + 1) % v_.size()], p) < 0) {
            return false;
        }
    }
    return true;
}

bool LatticePolygon::contains(const LatticePolygon &other) const
{
    return std::all_of(other.v_.begin(), other.v_.end(), [&](const Point &p) { return contains(p); });
}

bool LatticePolygon::has_vertex(const Point &p) const { return std::find(v_.begin(), v_.end(), p) != v_.end(); }

LatticePolygon LatticePolygon::scaled(const Rational &s) const
{
    std::vector<Point> pts;
    for (const auto &p : v_) {
        pts.push_back({p.x * s, p.y * s});
    }
    return hull(std::move(pts));
}

LatticePolygon LatticePolygon::translated(const Point &d) const
{
    std::vector<Point> pts;
    for (const auto &p : v_) {
        pts.push_back({p.x + d.x, p.y + d.y});
    }
    return hull(std::move(pts));
}

std::vector<std::pair<std::int64_t, std::int64_t>> LatticePolygon::lattice_points() const
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (v_.empty()) {
        return out;
    }
    Rational x0 = v_[0].x, x1 = v_[0].x, y0 = v_[0].y, y1 = v_[0].y;
    for (const auto &p : v_) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    for (auto i = to_int64(ceil(x0)); i <= to_int64(floor(x1)); ++i) {
        for (auto j = to_int64(ceil(y0)); j <= to_int64(floor(y1)); ++j) {
            if (contains(Point{i, j})) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

bool similar_with_ratio(const LatticePolygon &P, const LatticePolygon &Q, const Rational &r)
{
    if (r <= 0) {
        return false;
    }
    return P.scaled(1 / r) == Q;
}

std::vector<std::pair<std::int64_t, std::int64_t>> support(const Poly &f)
{
    const auto &ring = f.ring();
    const auto xi = ring->index("x");
    const auto yi = ring->index("y");
    const std::int64_t D = ring->denom();
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto &t : f.terms()) {
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (i != xi && i != yi && t.exps[i] != 0) {
                throw DomainError("support needs a polynomial in x and y only: " + to_string(f));
            }
        }
        const auto ex = t.exps[xi];
        const auto ey = t.exps[yi];
        if (ex < 0 || ey < 0 || ex % D != 0 || ey % D != 0) {
            throw DomainError("support needs nonnegative integer exponents: " + to_string(f));
        }
        out.emplace_back(ex / D, ey / D);
    }
    return out;
}

LatticePolygon newton_polygon(const Poly &f)
{
    std::vector<Point> pts;
    for (auto [i, j] : support(f)) {
        pts.push_back({i, j});
    }
    return LatticePolygon::hull(std::move(pts));
}

LatticePolygon newton_polygon0(const Poly &f)
{
    if (f.is_zero()) {
        return {};
    }
    std::vector<Point> pts{{0, 0}};
    for (auto [i, j] : support(f)) {
        pts.push_back({i, j});
    }
    return LatticePolygon::hull(std::move(pts));
}

std::int64_t len_of(const Point &a, const Point &b)
{
    const Rational dx = abs(b.x - a.x);
    const Rational dy = abs(b.y - a.y);
    if (!is_integer(dx) || !is_integer(dy)) {
        throw DomainError("segment endpoints are not lattice-aligned");
    }
    return std::gcd(to_int64(dx), to_int64(dy));
}

std::optional<std::int64_t> len_of(const Poly &h, Direction w)
{
    if (h.is_zero()) {
        return std::nullopt;
    }
    const auto &ring = h.ring();
    const auto xi = ring->index("x");
    const auto yi = ring->index("y");
    const std::int64_t D = ring->denom();
    const auto deg = [&](const Term &t) {
        switch (w) {
        case Direction::W01:
            return t.exps[yi];
        case Direction::W11:
            return t.exps[xi] + t.exps[yi];
        default:
            return t.exps[xi];
        }
    };
    const auto d0 = deg(h.terms()[0]);
    // Coordinate that moves along a homogeneous component.
    const auto idx = (w == Direction::W10) ? yi : xi;
    std::int64_t lo = h.terms()[0].exps[idx];
    std::int64_t hi = lo;
    for (const auto &t : h.terms()) {
        if (deg(t) != d0) {
            throw GradingError("polynomial is not homogeneous: " + to_string(h));
        }
        lo = std::min(lo, t.exps[idx]);
        hi = std::max(hi, t.exps[idx]);
    }
    if ((hi - lo) % D != 0) {
        throw GradingError("homogeneous length is not integral: " + to_string(h));
    }
    return (hi - lo) / D;
}

LatticePolygon trapezoid(const Rational &m, const Rational &n)
{
    return LatticePolygon::hull({{0, 0}, {m + n, 0}, {m, n}, {0, n}});
}

LatticePolygon trapezoid1(const Rational &m, const Rational &n)
{
    return LatticePolygon::hull({{0, 0}, {m + n, 0}, {m, n}, {0, n - m}});
}

LatticePolygon trapezoid2(const Rational &m, const Rational &n)
{
    return LatticePolygon::hull({{0, 0}, {m, 0}, {m, n}, {0, n}});
}

LatticePolygon trapezoid3(const Rational &m, const Rational &n)
{
    return LatticePolygon::hull({{0, 0}, {m, 0}, {m, n}, {0, n - m}});
}

void validate_Q(long a, long b, long m, long n)
{
    if (!(2 <= a && a < b)) {
        throw ParameterError("need 2 <= a < b");
    }
    if (std::gcd(a, b) != 1) {
        throw ParameterError("need gcd(a, b) = 1");
    }
    if (m <= 0 || m % a != 0 || n % a != 0) {
        throw ParameterError("need a | m and a | n with m > 0");
    }
    if (!(m < n)) {
        throw ParameterError("need m < n");
    }
}

std::int64_t seq_a(std::int64_t i, std::int64_t m, std::int64_t n) { return floor_div(i + 1, n - m); }

std::int64_t seq_b(std::int64_t i, std::int64_t m, std::int64_t n) { return seq_a(i, m, n) + floor_div(i, m); }

RegionSet build_regions(long a, long b, long m, long n)
{
    validate_Q(a, b, m, n);
    RegionSet R;
    R.T = trapezoid(m, n);
    R.T1 = trapezoid1(m, n);
    R.T2 = trapezoid2(m, n);
    R.T3 = trapezoid3(m, n);
    R.Nprime = R.T.scaled(make_rational(1, a));
    R.Nsecond = R.Nprime.translated({make_rational(m * (a - 1), a), make_rational(n * (a - 1), a)});
    const std::int64_t top = static_cast<std::int64_t>(m) * (n - m);
    for (std::int64_t i = 0; i <= top; ++i) {
        R.a_seq.push_back(seq_a(i, m, n));
        R.b_seq.push_back(seq_b(i, m, n));
    }
    return R;
}

nlohmann::json polygon_to_json(const LatticePolygon &p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &v : p.vertices()) {
        arr.push_back({rational_to_json(v.x), rational_to_json(v.y)});
    }
    return arr;
}

} // namespace jcas
