#ifndef JCAS_HARNESS_HPP
#define JCAS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <jcas/laurent.hpp>
#include <jcas/magnus.hpp>
#include <jcas/supported.hpp>
#include <jcas/tschirnhausen.hpp>

namespace jcas {

// f_x g_y - f_y g_x.
Poly jacobian_bracket(const Poly &f, const Poly &g);

struct ConditionVerdict {
    int index; // 1..5
    bool ok;
    std::string witness; // empty iff ok
};

struct ConditionReport {
    std::vector<ConditionVerdict> conditions;

    bool all() const;
    bool holds(int index) const;
    // First failing condition, 0 if none.
    int first_failure() const;
};

// Decides each of the five trapezoid/divisibility/bracket conditions on (F, G)
// independently. ParameterError unless (a,b,m,n) is admissible.
ConditionReport check_conditions(const Poly &F, const Poly &G, long a, long b, long m, long n);

nlohmann::json conditions_to_json(const ConditionReport &r);

// ---- divisibility and support conditions ----

enum class DcMode { W01, W11, DC, DSC };

DcMode parse_dc_mode(const std::string &s);
std::string dc_mode_name(DcMode m);

// Pieces f^w_j with j - shift > 0 that are not divisible by L^{j - shift}
// (L = x+1 for (0,1), x+y for (1,1)), one message per piece.
std::vector<std::string> divisibility_failures(const Poly &f, Direction w, long shift);

struct DcOptions {
    // Also test the degree bounds and the corner vanishing that DC/DSC imply
    // for a genuine remainder; needs a (and delta for the corner test).
    bool consequences = false;
    long a = 0;
    long delta = 1;
};

struct DcReport {
    bool ok = true;
    long shift01 = 0; // floor(i/m)
    long shift11 = 0; // a_i
    std::vector<std::string> witnesses;
    std::vector<std::string> violations; // consequence failures, reported only
};

// ParameterError unless 0 <= i <= m(n-m).
DcReport dc_dsc_check(const Poly &Fc, long m, long n, long i, DcMode mode, const DcOptions &opt = {});

nlohmann::json dc_to_json(const DcReport &r);

// ---- example generation ----

enum class ExampleKind { Condition123F, BracketZeroPair, RandomT3 };

ExampleKind parse_example_kind(const std::string &s);
std::string example_kind_name(ExampleKind k);

struct ExampleRequest {
    ExampleKind kind = ExampleKind::BracketZeroPair;
    long a = 2, b = 3, m = 2, n = 4;
    long delta = 1;
    // Probability that a non-corner lattice point (or Tschirnhausen
    // coefficient) receives a nonzero coefficient.
    double density = 0.5;
    std::uint64_t seed = 0;
};

struct GeneratedExample {
    ExampleKind kind;
    Poly F;
    std::optional<Poly> G;
    std::optional<Poly> E;
    std::optional<Poly> Fzw; // the draw in z, w before mapping back
    std::optional<Tschirnhausen> alpha;
    std::optional<Tschirnhausen> gamma;
};

// Deterministic in the request (mt19937_64, coefficients uniform on
// {-9..9} minus 0, corner coefficient 1).
GeneratedExample generate_example(const ExampleRequest &req);

nlohmann::json example_to_json(const GeneratedExample &g);

// ---- remainder pipeline ----

struct PipelineOptions {
    SupportOptions support;
    // Restrict the stages to one index i.
    std::optional<long> only_i;
};

struct StageRun {
    long delta = 1;
    long i = 0;
    std::optional<ParamContext> ctx;
    // Empty when the stage completed; otherwise the step that failed.
    std::string truncated_at;
    std::string reason;
    std::optional<bool> dc;
    std::optional<bool> dsc;
    std::optional<SupportedReport> support;
    // (l, P_1(x_l) = 0) for l descending from v_F to u_F.
    std::vector<std::pair<long, bool>> p1;
};

struct PipelineRun {
    long a = 0, b = 0, m = 0, n = 0;
    std::optional<ConditionReport> conditions;
    std::optional<RemainderResult> remainder;
    std::map<int, MagnusCoefficients> magnus; // keyed by u
    std::vector<StageRun> stages;
    std::string truncated_at;
    std::string reason;
    std::vector<std::string> conclusions;
};

// Conditions -> remainder -> per-(delta, i) stages. Failures of conditions
// (1)-(4) or of the remainder step stop the run; a nonconstant bracket is
// recorded but does not stop it. Stage failures stop only that stage.
PipelineRun remainder_pipeline(const Poly &F, const Poly &G, long a, long b, long m, long n,
                               const PipelineOptions &opts = {});

nlohmann::json pipeline_to_json(const PipelineRun &run);

// ---- Laurent-form check ----

struct ValquiReport {
    long a = 0, b = 0;
    LaurentSeriesX C;
    std::vector<Rational> lambda; // lambda_0 .. lambda_{a+b-2}
    LaurentSeriesX P;
    bool root_ok = false; // C^a = G above the truncation floor
    std::vector<ConditionVerdict> conditions; // (1)-(3)
};

// C = laurent_root(G, a, order), lambda matched greedily from the top
// x-degree down, P = F - sum lambda_i C^{b-i}. PreconditionError if a | b or
// b | a; root errors propagate.
ValquiReport valqui_check(const Poly &F, const Poly &G, long a, long b, std::int64_t order);

nlohmann::json laurent_to_json(const LaurentSeriesX &s);
nlohmann::json valqui_to_json(const ValquiReport &r);

} // namespace jcas

#endif
