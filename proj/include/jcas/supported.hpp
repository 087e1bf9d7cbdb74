#ifndef JCAS_SUPPORTED_HPP
#define JCAS_SUPPORTED_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/params.hpp>
#include <jcas/quotient.hpp>
#include <jcas/series.hpp>
#include <jcas/tschirnhausen.hpp>

namespace jcas {

std::string gamma_name(long j);
std::string xt_name(long j);
std::string c_name(long beta);

// R1[tau^{+-1}]: tau, Gamma0..Gamma{vE-1}, xt0..xt{vF}, c1..c{mfrak}, with the
// grading deg(tau), deg(Gamma_j), deg(xt_j) and deg(c) = 0.
struct SymbolicRing {
    RingPtr ring;
    std::vector<Rational> weights;
};

SymbolicRing make_symbolic_ring(const ParamContext &ctx);

// E~ = tau^{vE-uE} + sum_j tau^{[j-uE]+} Gamma[j], F~ likewise with X, and
// H = h(alpha(E~) + F~) to t-order `order` under `weights`.
struct HParts {
    Poly Etilde;
    Poly Ftilde;
    TruncSeries H;
};
HParts build_H(const ParamContext &ctx, const Tschirnhausen &alpha, const Poly &tau, const std::vector<Poly> &Gamma,
               const std::vector<Poly> &X, const std::vector<Rational> &weights, std::size_t order);

struct SymbolicSystem {
    ParamContext ctx;
    Tschirnhausen alpha;
    SymbolicRing R;
    Poly Etilde;
    Poly Ftilde;
    TruncSeries H;
};

// ParameterError unless deg(alpha) = delta * a.
SymbolicSystem build_symbolic(const ParamContext &ctx, const Tschirnhausen &alpha);

// Series H^{(e-beta)/d} for beta = 0 and the admissible beta <= mu_max, each
// to t-order mu_max - beta + 1. Built once (optionally in parallel); read-only
// afterwards.
class GFamily {
public:
    GFamily(const ParamContext &ctx, const TruncSeries &H, long mu_max, bool parallel = true);

    long mu_max() const noexcept { return mu_max_; }
    const RingPtr &ring() const noexcept { return ring_; }
    // [H^{(e-beta)/d}]_{t^s}
    const Poly &piece(long beta, long s) const;
    // G~_{B,e-mu} with c(beta) supplying the constant (or indeterminate) image.
    Poly G(long mu, const std::vector<long> &B, const std::function<Poly(long)> &c) const;

private:
    ParamContext ctx_;
    RingPtr ring_;
    long mu_max_;
    std::map<long, TruncSeries> series_;
};

// Largest j with a nonzero tau^{-j} coefficient per (beta, s); j(mu) for a set
// B is the maximum over beta in {0} and B within [1, mu], since the c~_beta
// are independent indeterminates.
class JfrakTable {
public:
    void raise(long beta, long s, long j);
    long get(long beta, long s) const;
    long jfrak(long mu, const std::vector<long> &B) const;

private:
    std::map<std::pair<long, long>, long> neg_;
};

JfrakTable jfrak_from_family(const GFamily &fam, const ParamContext &ctx, std::size_t tau_index);
// Evaluates Gamma~ and x~ at random integers of height 2^40 (`trials` times,
// maximum taken), keeping tau symbolic.
JfrakTable jfrak_randomized(const SymbolicSystem &sys, int trials, std::uint64_t seed, long mu_max);
// Full symbolic expansion; only practical for small instances.
JfrakTable jfrak_exact(const SymbolicSystem &sys, long mu_max);

// Evaluation map S in S^w restricted to the data it needs.
struct EvalMap {
    RingPtr R2;                 // x, y with exponent denominator m (u=0) or n (u=1)
    Poly tau;                   // S(tau)
    std::vector<Poly> Gamma;    // S(Gamma~_j), j < vE
    std::vector<Poly> X;        // S(x~_j), j <= vF
    std::map<long, Rational> c; // S(c~_beta); missing entries are 0
};

RingPtr r2_ring(const ParamContext &ctx);
// (x+1) y^{n/m} or x^{m/n} (x+y).
Poly tau_image(const ParamContext &ctx, const RingPtr &R2);

// Reads Gamma_j and x_j off the w-graded pieces of E and F (condition block
// S(tau^{[j-u]+} v_j) = piece_j). PreconditionError when a piece is not
// divisible by the required power of S(tau) or a degree bound fails.
EvalMap make_eval_map(const ParamContext &ctx, const Poly &Ecirc, const Poly &Fcirc,
                      const std::map<long, Rational> &c = {});

// PreconditionError if S(tau) or the image counts do not match the context.
void validate_eval_map(const ParamContext &ctx, const EvalMap &S);

// S applied to an element of R1[tau]. LatticeError for negative or
// fractional tau exponents (their images leave R2).
Poly eval_S(const ParamContext &ctx, const EvalMap &S, const Poly &symbolic);

// S' with S'(c~_beta) = 0 for beta in B \ Bsub.
EvalMap restrict_constants(const EvalMap &S, const std::vector<long> &B, const std::vector<long> &Bsub);

struct SupportOptions {
    int trials = 2;
    std::uint64_t seed = 0x6a6361735eedULL;
    bool exact_jfrak = false;
    bool parallel = true;
};

struct KCheck {
    long mu;
    long k;
    bool ok;
    std::string witness;
};

struct TailCheck {
    long mu;
    bool ok;
};

struct SupportedReport {
    bool supported = true;
    std::vector<KCheck> checks;
    std::vector<TailCheck> zero_tail;
    std::vector<long> jfrak; // per mu
    std::optional<std::pair<long, long>> first_failure; // (mu, k), k = 0 for a tail failure
    std::string jfrak_mode;
};

// Holds the symbolic system, the j-table and the series of the partial
// evaluation (Gamma~, x~, c~ mapped by S, tau kept) so several B can be
// checked against one (S, E, F, alpha).
class SupportEngine {
public:
    SupportEngine(const ParamContext &ctx, const Tschirnhausen &alpha, const EvalMap &S,
                  const SupportOptions &opts = {});

    SupportedReport check(const std::vector<long> &B) const;
    // Same engine with the c-images replaced (series are shared).
    SupportedReport check(const std::vector<long> &B, const std::map<long, Rational> &c) const;

    const SymbolicSystem &symbolic() const noexcept { return sys_; }
    const JfrakTable &jtable() const noexcept { return jt_; }
    const GFamily &partial_family() const noexcept { return *partial_; }
    // Ring tau, x, y of the partial evaluation.
    const RingPtr &partial_ring() const noexcept { return pring_; }
    // Partial image of G~_{B,e-mu}.
    Poly partial_G(long mu, const std::vector<long> &B, const std::map<long, Rational> &c) const;
    // Symbolic element mapped by S except tau.
    Poly partial_eval(const Poly &symbolic) const;

private:
    ParamContext ctx_;
    Tschirnhausen alpha_;
    EvalMap S_;
    SupportOptions opts_;
    SymbolicSystem sys_;
    RingPtr pring_;
    std::shared_ptr<GFamily> partial_;
    JfrakTable jt_;
    std::vector<Poly> tau_pow_;
};

SupportedReport check_supported(const ParamContext &ctx, const Tschirnhausen &alpha, const EvalMap &S,
                                const std::vector<long> &B, const SupportOptions &opts = {});

nlohmann::json supported_to_json(const SupportedReport &r);

} // namespace jcas

#endif
