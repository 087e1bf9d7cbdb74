#ifndef JCAS_MAGNUS_HPP
#define JCAS_MAGNUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/gradings.hpp>

namespace jcas {

// Exact r-th root over Q, if one exists (positive leading coefficient for
// even r).
std::optional<Poly> poly_root(const Poly &f, unsigned long r);

struct HomogeneousRoot {
    Poly rho;
    long r = 1;
    // F_d = lambda * rho^r; lambda = 1 unless the leading coefficient of F_d
    // has no rational r-th root.
    Rational lambda = 1;
    std::string note;
};

// Largest r with F_d = lambda * rho^r and rho over Q. rho has leading grlex
// coefficient 1 when lambda != 1, and positive otherwise.
HomogeneousRoot root_of_homogeneous(const Poly &Fd, Direction w);

struct MagnusCoefficients {
    std::vector<Rational> c; // c_0 .. c_last
    Poly rho;
    long r = 1;
    Rational lambda = 1;
    long d = 0;
    long e = 0;
    Direction w = Direction::W11;
    std::string note;
};

// Pieces [h(F)^{(e-beta)/d}]_{t^s} for the admissible beta (r(e-beta)/d
// integral), kept as rho^q * N with N a polynomial.
class MagnusExpander {
public:
    MagnusExpander(const Poly &F, Direction w, long e, long last);

    long d() const noexcept { return d_; }
    long e() const noexcept { return e_; }
    long last() const noexcept { return last_; }
    const HomogeneousRoot &root() const noexcept { return root_; }
    bool admissible(long beta) const { return (root_.r * (e_ - beta)) % d_ == 0; }

    // sum_{beta <= mu} c_beta [h(F)^{(e-beta)/d}]_{t^{mu-beta}} as rho^q * N,
    // N not divisible by rho unless q >= 0 (then folded in). Terms with
    // inadmissible beta must have c_beta = 0.
    std::pair<long, Poly> combination(const std::vector<Rational> &c, long mu) const;
    // The same combination as a Laurent polynomial; InconsistencyError if it
    // has a genuine rho denominator.
    Poly combination_poly(const std::vector<Rational> &c, long mu) const;

    // lambda^{(e-beta)/d}, FieldExtensionError when irrational.
    Rational kappa(long beta) const;

    const Poly &rho_power(long k) const;

private:
    const std::vector<Poly> &series(long beta) const;

    Poly F_;
    Direction w_;
    long d_, e_, last_;
    HomogeneousRoot root_;
    std::vector<Poly> y_; // y_j = F_{d-j}
    mutable std::map<long, std::vector<Poly>> cache_;
    mutable std::vector<Poly> rho_pow_;
};

// Solves for the constants c_0..c_{d+e-u-v-1} with
// G_{e-mu} = sum_beta c_beta [h(F)^{(e-beta)/d}]_{t^{mu-beta}}.
// PreconditionError if d <= 0 or G = 0; InconsistencyError if the
// triangular system has no solution.
MagnusCoefficients solve_magnus(const Poly &F, const Poly &G, Direction w);

nlohmann::json magnus_to_json(const MagnusCoefficients &mc);

} // namespace jcas

#endif
