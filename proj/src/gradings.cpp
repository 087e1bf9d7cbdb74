#include <jcas/gradings.hpp>

#include <jcas/division.hpp>
#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

std::string direction_name(Direction w)
{
    switch (w) {
    case Direction::W01:
        return "(0,1)";
    case Direction::W11:
        return "(1,1)";
    default:
        return "(1,0)";
    }
}

Direction parse_direction(const std::string &s)
{
    if (s == "(0,1)" || s == "0,1" || s == "01") {
        return Direction::W01;
    }
    if (s == "(1,1)" || s == "1,1" || s == "11") {
        return Direction::W11;
    }
    if (s == "(1,0)" || s == "1,0" || s == "10") {
        return Direction::W10;
    }
    throw ParameterError("unknown direction '" + s + "'");
}

std::pair<long, long> direction_weights(Direction w)
{
    switch (w) {
    case Direction::W01:
        return {0, 1};
    case Direction::W11:
        return {1, 1};
    default:
        return {1, 0};
    }
}

std::vector<Rational> xy_weights(const RingPtr &ring, Direction w)
{
    std::vector<Rational> weights(ring->nvars(), 0);
    auto [u, v] = direction_weights(w);
    weights[ring->index("x")] = u;
    weights[ring->index("y")] = v;
    return weights;
}

Poly GradedDecomposition::piece(const Rational &deg, const RingPtr &ring) const
{
    auto it = pieces.find(deg);
    return it == pieces.end() ? Poly(ring) : it->second;
}

Poly GradedDecomposition::leading(const RingPtr &ring) const
{
    return pieces.empty() ? Poly(ring) : pieces.rbegin()->second;
}

GradedDecomposition graded_decompose(const Poly &f, const std::vector<Rational> &weights)
{
    std::map<Rational, std::vector<Term>> groups;
    const auto D = f.ring()->denom();
    for (const auto &t : f.terms()) {
        groups[weighted_degree(t.exps, weights, D)].push_back(t);
    }
    GradedDecomposition g;
    for (auto &[deg, terms] : groups) {
        // A subsequence of a sorted term list stays sorted.
        g.pieces.emplace(deg, Poly::from_sorted_unchecked(f.ring(), std::move(terms)));
    }
    if (!g.pieces.empty()) {
        g.degree = g.pieces.rbegin()->first;
    }
    return g;
}

GradedDecomposition w_decompose(const Poly &f, Direction w) { return graded_decompose(f, xy_weights(f.ring(), w)); }

std::optional<Rational> w_degree(const Poly &f, Direction w) { return w_decompose(f, w).degree; }

Poly w_piece(const Poly &f, Direction w, const Rational &deg) { return w_decompose(f, w).piece(deg, f.ring()); }

Poly leading_form(const Poly &f, Direction w) { return w_decompose(f, w).leading(f.ring()); }

bool is_homogeneous(const Poly &f, const std::vector<Rational> &weights)
{
    return graded_decompose(f, weights).pieces.size() <= 1;
}

Phi parse_phi(const std::string &s)
{
    if (s == "zy") {
        return Phi::ZY;
    }
    if (s == "xw") {
        return Phi::XW;
    }
    if (s == "zw") {
        return Phi::ZW;
    }
    if (s == "zy-inv" || s == "zy^-1") {
        return Phi::ZYInv;
    }
    if (s == "xw-inv" || s == "xw^-1") {
        return Phi::XWInv;
    }
    if (s == "zw-inv" || s == "zw^-1") {
        return Phi::ZWInv;
    }
    throw ParameterError("unknown map '" + s + "'");
}

Poly apply_phi(const Poly &f, Phi which)
{
    const auto &src = f.ring();
    std::map<std::string, std::string> rename;
    switch (which) {
    case Phi::ZY:
        rename = {{"x", "z"}};
        break;
    case Phi::XW:
        rename = {{"y", "w"}};
        break;
    case Phi::ZW:
        rename = {{"x", "z"}, {"y", "w"}};
        break;
    case Phi::ZYInv:
        rename = {{"z", "x"}};
        break;
    case Phi::XWInv:
        rename = {{"w", "y"}};
        break;
    case Phi::ZWInv:
        rename = {{"z", "x"}, {"w", "y"}};
        break;
    }
    std::vector<std::string> vars = src->vars();
    for (auto &v : vars) {
        auto it = rename.find(v);
        if (it != rename.end()) {
            v = it->second;
        }
    }
    auto target = make_ring(vars, src->denom());
    std::map<std::string, Poly> images;
    for (const auto &v : src->vars()) {
        if (!rename.count(v)) {
            images.emplace(v, Poly::variable(target, v));
        }
    }
    auto V = [&](const char *name) { return Poly::variable(target, name); };
    auto one = Poly::constant(target, 1);
    switch (which) {
    case Phi::ZY:
        images.emplace("x", V("z") - one);
        images.emplace("y", V("y"));
        break;
    case Phi::XW:
        images.emplace("x", V("x"));
        images.emplace("y", V("w") - V("x"));
        break;
    case Phi::ZW:
        images.emplace("x", V("z") - one);
        images.emplace("y", V("w") + one - V("z"));
        break;
    case Phi::ZYInv:
        images.emplace("z", V("x") + one);
        images.emplace("y", V("y"));
        break;
    case Phi::XWInv:
        images.emplace("x", V("x"));
        images.emplace("w", V("x") + V("y"));
        break;
    case Phi::ZWInv:
        images.emplace("z", V("x") + one);
        images.emplace("w", V("x") + V("y"));
        break;
    }
    for (const auto &entry : rename) {
        src->index(entry.first); // throws ContextError for a missing source variable
    }
    return substitute(f, images, target);
}

TruncSeries homogenize(const Poly &f, const std::vector<Rational> &weights, std::optional<std::size_t> order)
{
    auto g = graded_decompose(f, weights);
    if (!g.degree) {
        return TruncSeries(f.ring(), order.value_or(1));
    }
    const Rational top = *g.degree;
    std::size_t max_gap = 0;
    for (const auto &[deg, piece] : g.pieces) {
        Rational gap = top - deg;
        if (!is_integer(gap)) {
            throw HomogenizationError("degree gap " + gap.get_str() + " is not an integer");
        }
        max_gap = std::max(max_gap, static_cast<std::size_t>(to_int64(gap)));
    }
    const std::size_t n = order.value_or(max_gap + 1);
    TruncSeries s(f.ring(), n);
    for (auto &[deg, piece] : g.pieces) {
        const auto j = static_cast<std::size_t>(to_int64(Rational(top - deg)));
        if (j < n) {
            s.set_coeff(j, piece);
        }
    }
    return s;
}

TruncSeries homogenize(const Poly &f, Direction w, std::optional<std::size_t> order)
{
    return homogenize(f, xy_weights(f.ring(), w), order);
}

bool condition_a(const Poly &F, long m, long n)
{
    auto g = w_decompose(F, Direction::W01);
    auto L = binomial_L(F.ring(), false);
    for (long i = 0; i <= m; ++i) {
        if (!divide_by_binomial_power(g.piece(n - i, F.ring()), L, static_cast<unsigned>(m - i))) {
            return false;
        }
    }
    return true;
}

bool condition_b(const Poly &F, long m, long n)
{
    auto g = w_decompose(F, Direction::W11);
    auto L = binomial_L(F.ring(), true);
    for (long i = 0; i <= n; ++i) {
        if (!divide_by_binomial_power(g.piece(m + n - i, F.ring()), L, static_cast<unsigned>(n - i))) {
            return false;
        }
    }
    return true;
}

namespace {

// N0 of a polynomial in two renamed variables, reusing the x/y support code.
LatticePolygon newton0_renamed(const Poly &f, const char *first, const char *second)
{
    auto R = make_ring({"x", "y"}, f.ring()->denom());
    std::map<std::string, Poly> images{{first, Poly::variable(R, "x")}, {second, Poly::variable(R, "y")}};
    return newton_polygon0(substitute(f, images, R));
}

} // namespace

ShapeVerdict trapezoid_shape_check(const Poly &F, long m, long n, ShapeKind kind)
{
    if (m >= n) {
        throw ParameterError("trapezoid shape check needs m < n");
    }
    ShapeVerdict v;
    const bool inT = trapezoid(m, n).contains(newton_polygon0(F));
    switch (kind) {
    case ShapeKind::A:
        v.divisibility_side = inT && condition_a(F, m, n);
        v.polygon_side = trapezoid1(m, n).contains(newton0_renamed(apply_phi(F, Phi::ZY), "z", "y"));
        break;
    case ShapeKind::B:
        v.divisibility_side = inT && condition_b(F, m, n);
        v.polygon_side = trapezoid2(m, n).contains(newton0_renamed(apply_phi(F, Phi::XW), "x", "w"));
        break;
    case ShapeKind::Both:
        v.divisibility_side = inT && condition_a(F, m, n) && condition_b(F, m, n);
        v.polygon_side = trapezoid3(m, n).contains(newton0_renamed(apply_phi(F, Phi::ZW), "z", "w"));
        break;
    }
    return v;
}

} // namespace jcas
