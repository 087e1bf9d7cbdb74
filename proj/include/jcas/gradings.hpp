#ifndef JCAS_GRADINGS_HPP
#define JCAS_GRADINGS_HPP

#include <map>
#include <optional>
#include <string>

#include <jcas/polygon.hpp>
#include <jcas/series.hpp>

namespace jcas {

std::string direction_name(Direction w);
Direction parse_direction(const std::string &s);
// Weights (u, v) of a direction.
std::pair<long, long> direction_weights(Direction w);

// Weight vector for the ring of f: u on "x", v on "y", zero elsewhere.
std::vector<Rational> xy_weights(const RingPtr &ring, Direction w);

struct GradedDecomposition {
    // Degree -> homogeneous piece; pieces are nonzero.
    std::map<Rational, Poly> pieces;
    // Maximal degree; nullopt encodes -infinity (zero polynomial).
    std::optional<Rational> degree;

    // Piece of the given degree (zero if absent).
    Poly piece(const Rational &deg, const RingPtr &ring) const;
    // Leading form f_+ (zero polynomial when f = 0).
    Poly leading(const RingPtr &ring) const;
};

// Decomposition by an arbitrary rational weight vector (one weight per ring variable).
GradedDecomposition graded_decompose(const Poly &f, const std::vector<Rational> &weights);
GradedDecomposition w_decompose(const Poly &f, Direction w);

std::optional<Rational> w_degree(const Poly &f, Direction w);
Poly w_piece(const Poly &f, Direction w, const Rational &deg);
Poly leading_form(const Poly &f, Direction w);
bool is_homogeneous(const Poly &f, const std::vector<Rational> &weights);

enum class Phi { ZY, XW, ZW, ZYInv, XWInv, ZWInv };

Phi parse_phi(const std::string &s);

// The change-of-variable homomorphisms. Forward maps take a ring containing
// x, y to one where the renamed variables replace them (x->z, y->w as
// appropriate); inverse maps go back. Other variables are carried along.
Poly apply_phi(const Poly &f, Phi which);

// h(f) = sum_j f_j t^{deg f - j}; coefficient j of the result is the piece of
// degree deg(f) - j. Requires integral degree gaps (HomogenizationError).
// The order defaults to one past the largest gap. The zero polynomial gives
// the zero series.
TruncSeries homogenize(const Poly &f, const std::vector<Rational> &weights, std::optional<std::size_t> order = {});
TruncSeries homogenize(const Poly &f, Direction w, std::optional<std::size_t> order = {});

enum class ShapeKind { A, B, Both };

struct ShapeVerdict {
    bool divisibility_side = false; // N0(F) in T and (a)/(b)
    bool polygon_side = false;      // N0 of the mapped polynomial in T^1/T^2/T^3
    bool agree() const { return divisibility_side == polygon_side; }
};

// Condition (a): F^{(0,1)}_{n-i} divisible by (x+1)^{m-i}, 0 <= i <= m.
bool condition_a(const Poly &F, long m, long n);
// Condition (b): F^{(1,1)}_{m+n-i} divisible by (x+y)^{n-i}, 0 <= i <= n.
bool condition_b(const Poly &F, long m, long n);

ShapeVerdict trapezoid_shape_check(const Poly &F, long m, long n, ShapeKind kind);

} // namespace jcas

#endif
