#include <jcas/harness.hpp>

#include <algorithm>
#include <random>

#include <jcas/division.hpp>
#include <jcas/error.hpp>
#include <jcas/poly_io.hpp>

namespace jcas {

Poly jacobian_bracket(const Poly &f, const Poly &g)
{
    if (!same_ring(f.ring(), g.ring())) {
        throw ContextError("bracket operands live in different rings");
    }
    return derivative(f, "x") * derivative(g, "y") - derivative(f, "y") * derivative(g, "x");
}

// ---- conditions ----

bool ConditionReport::all() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const auto &c) { return c.ok; });
}

bool ConditionReport::holds(int index) const
{
    for (const auto &c : conditions) {
        if (c.index == index) {
            return c.ok;
        }
    }
    throw ParameterError("no condition " + std::to_string(index));
}

int ConditionReport::first_failure() const
{
    for (const auto &c : conditions) {
        if (!c.ok) {
            return c.index;
        }
    }
    return 0;
}

namespace {

std::string clip(std::string s, std::size_t limit = 240)
{
    if (s.size() > limit) {
        s = s.substr(0, limit) + "...";
    }
    return s;
}

std::string point_text(const Point &p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string monomial_text(std::int64_t p, std::int64_t q) { return "x^" + std::to_string(p) + "*y^" + std::to_string(q); }

RingPtr xy_ring_of(const Poly &f)
{
    const auto &vars = f.ring()->vars();
    if (vars.size() == 2 && vars[0] == "x" && vars[1] == "y" && f.ring()->denom() == 1) {
        return f.ring();
    }
    return make_ring({"x", "y"});
}

// Empty string when N0(f) = T_{M,N} and N0(f - x^M y^N) is strictly smaller.
std::string trapezoid_witness(const Poly &f, long M, long N, const char *name)
{
    if (f.is_zero()) {
        return std::string(name) + " is zero";
    }
    Poly g = f;
    try {
        g = change_ring(f, xy_ring_of(f));
        support(g);
    } catch (const Error &) {
        return std::string(name) + " is not a polynomial in x, y";
    }
    const auto T = trapezoid(M, N);
    for (auto [p, q] : support(g)) {
        if (!T.contains(Point{Rational(p), Rational(q)})) {
            return "monomial " + monomial_text(p, q) + " of " + name + " lies outside T_{" + std::to_string(M) + "," +
                   std::to_string(N) + "}";
        }
    }
    const auto N0 = newton_polygon0(g);
    for (const auto &v : T.vertices()) {
        if (!N0.has_vertex(v)) {
            return "N0(" + std::string(name) + ") misses the vertex " + point_text(v);
        }
    }
    const Poly corner = Poly::monomial(g.ring(), {M, N});
    if (newton_polygon0(g - corner) == N0) {
        return "coefficient of " + monomial_text(M, N) + " in " + name + " is " + to_string(g.coeff({M, N})) +
               ", not 1";
    }
    return {};
}

} // namespace

ConditionReport check_conditions(const Poly &F, const Poly &G, long a, long b, long m, long n)
{
    validate_Q(a, b, m, n);
    ConditionReport rep;
    auto add = [&](int idx, std::string witness) {
        rep.conditions.push_back({idx, witness.empty(), std::move(witness)});
    };

    add(1, trapezoid_witness(F, m, n, "F"));

    const bool F_xy = [&] {
        try {
            support(change_ring(F, xy_ring_of(F)));
            return true;
        } catch (const Error &) {
            return false;
        }
    }();
    if (!F_xy) {
        add(2, "F is not a polynomial in x, y");
        add(3, "F is not a polynomial in x, y");
    } else {
        const Poly Fx = change_ring(F, xy_ring_of(F));
        std::string w2, w3;
        const Poly L0 = binomial_L(Fx.ring(), false);
        const Poly L1 = binomial_L(Fx.ring(), true);
        for (long i = 0; i <= m && w2.empty(); ++i) {
            const Poly piece = w_piece(Fx, Direction::W01, n - i);
            if (!divide_by_binomial_power(piece, L0, static_cast<unsigned>(m - i))) {
                w2 = "F^(0,1)_" + std::to_string(n - i) + " is not divisible by (x+1)^" + std::to_string(m - i);
            }
        }
        for (long i = 0; i <= n && w3.empty(); ++i) {
            const Poly piece = w_piece(Fx, Direction::W11, m + n - i);
            if (!divide_by_binomial_power(piece, L1, static_cast<unsigned>(n - i))) {
                w3 = "F^(1,1)_" + std::to_string(m + n - i) + " is not divisible by (x+y)^" + std::to_string(n - i);
            }
        }
        add(2, w2);
        add(3, w3);
    }

    add(4, trapezoid_witness(G, b * m / a, b * n / a, "G"));

    std::string w5;
    try {
        const auto R = xy_ring_of(F);
        const Poly br = jacobian_bracket(change_ring(F, R), change_ring(G, R));
        if (!br.is_constant() && !br.is_zero()) {
            w5 = "[F,G] = " + clip(to_string(br));
        }
    } catch (const Error &e) {
        w5 = std::string("bracket undefined: ") + e.what();
    }
    add(5, w5);
    return rep;
}

nlohmann::json conditions_to_json(const ConditionReport &r)
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto &c : r.conditions) {
        nlohmann::json j{{"condition", c.index}, {"ok", c.ok}};
        if (!c.ok) {
            j["witness"] = c.witness;
        }
        list.push_back(j);
    }
    return {{"all", r.all()}, {"conditions", list}};
}

// ---- DC / DSC ----

DcMode parse_dc_mode(const std::string &s)
{
    if (s == "(0,1)-DC" || s == "w01" || s == "01") {
        return DcMode::W01;
    }
    if (s == "(1,1)-DC" || s == "w11" || s == "11") {
        return DcMode::W11;
    }
    if (s == "DC" || s == "dc") {
        return DcMode::DC;
    }
    if (s == "DSC" || s == "dsc") {
        return DcMode::DSC;
    }
    throw ParameterError("unknown DC mode '" + s + "'");
}

std::string dc_mode_name(DcMode m)
{
    switch (m) {
    case DcMode::W01:
        return "(0,1)-DC";
    case DcMode::W11:
        return "(1,1)-DC";
    case DcMode::DC:
        return "DC";
    case DcMode::DSC:
        return "DSC";
    }
    return "?";
}

std::vector<std::string> divisibility_failures(const Poly &f, Direction w, long shift)
{
    std::vector<std::string> out;
    const Poly fx = change_ring(f, xy_ring_of(f));
    const Poly L = binomial_L(fx.ring(), w == Direction::W11);
    const std::string Lt = w == Direction::W11 ? "(x+y)" : "(x+1)";
    for (const auto &[deg, piece] : w_decompose(fx, w).pieces) {
        const Rational need = deg - shift;
        if (need <= 0) {
            continue;
        }
        if (!is_integer(need)) {
            throw GradingError("fractional w-degree " + to_string(deg));
        }
        const auto k = static_cast<unsigned>(to_int64(need));
        if (!divide_by_binomial_power(piece, L, k)) {
            const unsigned got = binomial_multiplicity(piece, L, k);
            out.push_back(direction_name(w) + "-piece of degree " + to_string(deg) + " is divisible by " + Lt + "^" +
                          std::to_string(got) + " only, needs " + Lt + "^" + std::to_string(k));
        }
    }
    return out;
}

DcReport dc_dsc_check(const Poly &Fc, long m, long n, long i, DcMode mode, const DcOptions &opt)
{
    if (m <= 0 || n <= m) {
        throw ParameterError("need 0 < m < n");
    }
    const long top = m * (n - m);
    if (i < 0 || i > top) {
        throw ParameterError("i must lie in [0, " + std::to_string(top) + "]");
    }
    DcReport rep;
    rep.shift01 = i / m;
    rep.shift11 = static_cast<long>(seq_a(i, m, n));
    const long ai = rep.shift11;
    const long bi = static_cast<long>(seq_b(i, m, n));

    const bool do01 = mode != DcMode::W11;
    const bool do11 = mode != DcMode::W01;
    bool ok01 = true, ok11 = true;
    if (do01) {
        auto f = divisibility_failures(Fc, Direction::W01, rep.shift01);
        ok01 = f.empty();
        rep.witnesses.insert(rep.witnesses.end(), f.begin(), f.end());
    }
    if (do11) {
        auto f = divisibility_failures(Fc, Direction::W11, rep.shift11);
        ok11 = f.empty();
        rep.witnesses.insert(rep.witnesses.end(), f.begin(), f.end());
    }
    if (mode == DcMode::DSC && !Fc.is_zero()) {
        const auto T = trapezoid(ai, bi);
        for (auto [p, q] : support(change_ring(Fc, xy_ring_of(Fc)))) {
            if (!T.contains(Point{Rational(p), Rational(q)})) {
                rep.witnesses.push_back("point (" + std::to_string(p) + "," + std::to_string(q) + ") outside T_{" +
                                        std::to_string(ai) + "," + std::to_string(bi) + "}");
            }
        }
    }
    rep.ok = rep.witnesses.empty();

    if (opt.consequences && !Fc.is_zero()) {
        const long a = opt.a;
        if (a < 2 || m % a != 0 || n % a != 0) {
            throw ParameterError("consequence checks need a >= 2 dividing m and n");
        }
        const long edge = top * (a - 1) / a;
        const Poly fx = change_ring(Fc, xy_ring_of(Fc));
        const Rational deg01 = *w_degree(fx, Direction::W01);
        const Rational deg11 = *w_degree(fx, Direction::W11);
        if (do01 && ok01 && i >= edge) {
            const long bound = rep.shift01 + m - m / a;
            if (deg01 >= bound) {
                rep.violations.push_back("(0,1)-degree " + to_string(deg01) + " is not below " +
                                         std::to_string(bound));
            }
        }
        if (do11 && ok11 && i >= edge - 1 && deg01 < make_rational(n * (a - 1), a)) {
            const Rational bound = ai + make_rational(n * (a - 1), a);
            if (deg11 >= bound) {
                rep.violations.push_back("(1,1)-degree " + to_string(deg11) + " is not below " + to_string(bound));
            }
        }
        if (mode == DcMode::DSC && rep.ok && i <= edge) {
            const Rational lhs = make_rational(a * opt.delta * ai, m);
            const Rational rhs = make_rational(a * opt.delta * rep.shift01, n - m);
            if (lhs == rhs && is_integer(lhs) && lhs >= 0) {
                const auto T = trapezoid(ai, bi - 1);
                for (auto [p, q] : support(fx)) {
                    if (!T.contains(Point{Rational(p), Rational(q)})) {
                        rep.violations.push_back("point (" + std::to_string(p) + "," + std::to_string(q) +
                                                 ") outside T_{" + std::to_string(ai) + "," + std::to_string(bi - 1) +
                                                 "}");
                    }
                }
            }
        }
    }
    return rep;
}

nlohmann::json dc_to_json(const DcReport &r)
{
    return {{"ok", r.ok},
            {"shift_01", r.shift01},
            {"shift_11", r.shift11},
            {"witnesses", r.witnesses},
            {"violations", r.violations}};
}

// ---- example generation ----

ExampleKind parse_example_kind(const std::string &s)
{
    if (s == "condition123_F") {
        return ExampleKind::Condition123F;
    }
    if (s == "bracket_zero_pair") {
        return ExampleKind::BracketZeroPair;
    }
    if (s == "random_T3") {
        return ExampleKind::RandomT3;
    }
    throw ParameterError("unknown example kind '" + s + "'");
}

std::string example_kind_name(ExampleKind k)
{
    switch (k) {
    case ExampleKind::Condition123F:
        return "condition123_F";
    case ExampleKind::BracketZeroPair:
        return "bracket_zero_pair";
    case ExampleKind::RandomT3:
        return "random_T3";
    }
    return "?";
}

namespace {

// Raw engine output only, so draws do not depend on the standard library's
// distribution implementations.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    bool bernoulli(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

    Rational coeff()
    {
        const long k = static_cast<long>(rng_() % 18);
        return Rational(k < 9 ? k - 9 : k - 8);
    }

private:
    std::mt19937_64 rng_;
};

Poly draw_T3(Draw &dr, long M, long N, double density)
{
    auto Z = make_ring({"z", "w"});
    std::vector<Term> terms;
    for (auto [p, q] : trapezoid3(M, N).lattice_points()) {
        if (p == M && q == N) {
            terms.push_back({{p, q}, 1});
        } else if (dr.bernoulli(density)) {
            terms.push_back({{p, q}, dr.coeff()});
        }
    }
    return Poly::from_terms(Z, std::move(terms));
}

Tschirnhausen draw_tschirnhausen(Draw &dr, long k, double density)
{
    std::vector<Rational> c(static_cast<std::size_t>(k + 1), 0);
    c.back() = 1;
    for (long j = 0; j + 2 <= k; ++j) {
        if (dr.bernoulli(density)) {
            c[static_cast<std::size_t>(j)] = dr.coeff();
        }
    }
    return Tschirnhausen(std::move(c));
}

} // namespace

GeneratedExample generate_example(const ExampleRequest &req)
{
    if (req.density < 0 || req.density > 1) {
        throw ParameterError("density must lie in [0, 1]");
    }
    Draw dr(req.seed);
    switch (req.kind) {
    case ExampleKind::RandomT3: {
        if (req.m < 0 || req.n < req.m) {
            throw ParameterError("need 0 <= m <= n");
        }
        Poly f = draw_T3(dr, req.m, req.n, req.density);
        Poly F = apply_phi(f, Phi::ZWInv);
        return {req.kind, std::move(F), std::nullopt, std::nullopt, std::move(f), std::nullopt, std::nullopt};
    }
    case ExampleKind::Condition123F: {
        validate_Q(req.a, req.b, req.m, req.n);
        Poly f = draw_T3(dr, req.m, req.n, req.density);
        Poly F = apply_phi(f, Phi::ZWInv);
        return {req.kind, std::move(F), std::nullopt, std::nullopt, std::move(f), std::nullopt, std::nullopt};
    }
    case ExampleKind::BracketZeroPair:
        break;
    }
    validate_Q(req.a, req.b, req.m, req.n);
    const long scale = req.a * req.delta;
    if (req.delta < 1 || req.m % scale != 0 || req.n % scale != 0) {
        throw ParameterError("m/(a delta) and n/(a delta) must be integers");
    }
    const long M = req.m / scale, N = req.n / scale;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly p = draw_T3(dr, M, N, req.density);
        Poly E = apply_phi(p, Phi::ZWInv);
        try {
            if (decompose_principal(E, std::make_pair(static_cast<std::int64_t>(M), static_cast<std::int64_t>(N))).delta != 1) {
                continue;
            }
        } catch (const FieldExtensionError &) {
            continue;
        }
        auto alpha = draw_tschirnhausen(dr, req.a * req.delta, req.density);
        auto gamma = draw_tschirnhausen(dr, req.b * req.delta, req.density);
        Poly F = alpha.compose(E);
        Poly G = gamma.compose(E);
        return {req.kind, std::move(F), std::move(G), std::move(E), std::move(p), alpha, gamma};
    }
    throw ParameterError("no principal generator found in 64 draws");
}

nlohmann::json example_to_json(const GeneratedExample &g)
{
    nlohmann::json j{{"kind", example_kind_name(g.kind)}, {"F", poly_to_json(g.F)}};
    if (g.G) {
        j["G"] = poly_to_json(*g.G);
    }
    if (g.E) {
        j["E"] = poly_to_json(*g.E);
    }
    if (g.Fzw) {
        j["Fzw"] = poly_to_json(*g.Fzw);
    }
    if (g.alpha) {
        j["alpha"] = g.alpha->to_json();
    }
    if (g.gamma) {
        j["gamma"] = g.gamma->to_json();
    }
    return j;
}

// ---- pipeline ----

namespace {

std::vector<long> index_set(long m, long n)
{
    std::vector<long> out;
    for (long i = m * (n - m); i >= 0; --i) {
        if (in_index_set(i, m, n)) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

PipelineRun remainder_pipeline(const Poly &F, const Poly &G, long a, long b, long m, long n,
                               const PipelineOptions &opts)
{
    PipelineRun run;
    run.a = a;
    run.b = b;
    run.m = m;
    run.n = n;
    try {
        validate_Q(a, b, m, n);
    } catch (const Error &e) {
        run.truncated_at = "parameters";
        run.reason = e.what();
        return run;
    }
    run.conditions = check_conditions(F, G, a, b, m, n);
    for (int k = 1; k <= 4; ++k) {
        if (!run.conditions->holds(k)) {
            run.truncated_at = "check_conditions";
            run.reason = "condition (" + std::to_string(k) + ") fails: " + run.conditions->conditions[k - 1].witness;
            return run;
        }
    }
    if (!run.conditions->holds(5)) {
        run.conclusions.push_back("bracket is not constant; downstream verdicts are exploratory");
    }
    const auto R = xy_ring_of(F);
    const Poly Fx = change_ring(F, R);
    const Poly Gx = change_ring(G, R);
    try {
        run.remainder = minimize_remainder(Fx, a, m, n);
    } catch (const Error &e) {
        run.truncated_at = "remainder";
        run.reason = e.what();
        return run;
    }
    const auto &rem = *run.remainder;
    if (rem.Fcirc.is_zero()) {
        run.conclusions.push_back("F° = 0: the remainder vanishes; every P1 check is vacuous");
        return run;
    }
    run.conclusions.push_back("F° != 0");

    std::map<int, std::string> magnus_fail;
    for (long i : index_set(m, n)) {
        if (opts.only_i && *opts.only_i != i) {
            continue;
        }
        StageRun st;
        st.delta = rem.delta;
        st.i = i;
        auto stop = [&](const char *step, const std::string &why) {
            st.truncated_at = step;
            st.reason = why;
        };
        try {
            st.ctx = build_params(a, b, m, n, rem.delta, i);
        } catch (const Error &e) {
            stop("build_params", e.what());
            run.stages.push_back(std::move(st));
            continue;
        }
        const auto &ctx = *st.ctx;
        st.dc = dc_dsc_check(rem.Fcirc, m, n, i, DcMode::DC).ok;
        st.dsc = dc_dsc_check(rem.Fcirc, m, n, i, DcMode::DSC).ok;

        std::optional<EvalMap> S;
        try {
            S = make_eval_map(ctx, rem.Ecirc, rem.Fcirc);
        } catch (const Error &e) {
            stop("decompose_remainder", e.what());
            run.stages.push_back(std::move(st));
            continue;
        }

        if (!run.magnus.count(ctx.u) && !magnus_fail.count(ctx.u)) {
            try {
                run.magnus.emplace(ctx.u, solve_magnus(Fx, Gx, ctx.w));
            } catch (const Error &e) {
                magnus_fail.emplace(ctx.u, std::string(e.category()) + ": " + e.what());
            }
        }
        if (magnus_fail.count(ctx.u)) {
            stop("solve_magnus", magnus_fail.at(ctx.u));
            run.stages.push_back(std::move(st));
            continue;
        }
        const auto &mc = run.magnus.at(ctx.u);
        for (long beta = 1; beta < static_cast<long>(mc.c.size()); ++beta) {
            const Rational cb = mc.c[static_cast<std::size_t>(beta)] / mc.c[0];
            if (cb != 0) {
                S->c[beta] = cb;
            }
        }

        try {
            validate_eval_map(ctx, *S);
            st.support = check_supported(ctx, rem.alphaCirc, *S, ctx.admissible_betas(), opts.support);
        } catch (const Error &e) {
            stop("check_supported", e.what());
            run.stages.push_back(std::move(st));
            continue;
        }
        for (long l = ctx.vF; l >= ctx.uF; --l) {
            const auto q = reduce_Pk(S->X[static_cast<std::size_t>(l)], ctx.L_is_xy(), 1);
            st.p1.emplace_back(l, q.is_zero());
        }
        run.stages.push_back(std::move(st));
    }
    return run;
}

nlohmann::json pipeline_to_json(const PipelineRun &run)
{
    nlohmann::json j{{"a", run.a}, {"b", run.b}, {"m", run.m}, {"n", run.n}};
    if (run.conditions) {
        j["conditions"] = conditions_to_json(*run.conditions);
    }
    if (run.remainder) {
        j["remainder"] = remainder_to_json(*run.remainder);
    }
    nlohmann::json mag = nlohmann::json::object();
    for (const auto &[u, mc] : run.magnus) {
        mag[std::to_string(u)] = magnus_to_json(mc);
    }
    j["magnus"] = mag;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto &st : run.stages) {
        nlohmann::json s{{"delta", st.delta}, {"i", st.i}};
        if (st.ctx) {
            s["params"] = params_to_json(*st.ctx);
        }
        if (st.dc) {
            s["dc"] = *st.dc;
        }
        if (st.dsc) {
            s["dsc"] = *st.dsc;
        }
        if (st.support) {
            s["support"] = supported_to_json(*st.support);
        }
        nlohmann::json p1 = nlohmann::json::array();
        for (const auto &[l, zero] : st.p1) {
            p1.push_back({{"l", l}, {"P1_zero", zero}});
        }
        s["p1"] = p1;
        if (!st.truncated_at.empty()) {
            s["truncated_at"] = st.truncated_at;
            s["reason"] = st.reason;
        }
        stages.push_back(s);
    }
    j["stages"] = stages;
    j["conclusions"] = run.conclusions;
    if (!run.truncated_at.empty()) {
        j["truncated_at"] = run.truncated_at;
        j["reason"] = run.reason;
    }
    return j;
}

// ---- Laurent form ----

namespace {

long total_degree(const Term &t) { return static_cast<long>(t.exps[0] + t.exps[1]); }

std::optional<long> series_degree(const Poly &p)
{
    std::optional<long> d;
    for (const auto &t : p.terms()) {
        d = std::max(d.value_or(total_degree(t)), total_degree(t));
    }
    return d;
}

} // namespace

ValquiReport valqui_check(const Poly &F, const Poly &G, long a, long b, std::int64_t order)
{
    if (a < 1 || b < 1) {
        throw PreconditionError("a and b must be positive");
    }
    if (b % a == 0 || a % b == 0) {
        throw PreconditionError("need a not dividing b and b not dividing a");
    }
    const auto R = make_ring({"x", "y"});
    const Poly Fx = change_ring(F, R);
    const Poly Gx = change_ring(G, R);
    LaurentSeriesX C = laurent_root(Gx, static_cast<unsigned>(a), order);

    // C^k for k >= 0 and, when a >= 3, C^{-1} = x^{-1} sum_j (-(C - x)/x)^j for
    // the negative powers b - i.
    const std::int64_t exact = 4 * std::min<std::int64_t>(order, 0) - 4 * (a + b) - 16;
    std::vector<LaurentSeriesX> Cpow{LaurentSeriesX(Poly::constant(R, 1), exact)};
    for (long k = 1; k <= b; ++k) {
        Cpow.push_back(Cpow.back() * C);
    }
    std::vector<LaurentSeriesX> Cneg{Cpow[0]};
    if (a + b - 2 > b) {
        const LaurentSeriesX xinv(Poly::monomial(R, {-1, 0}), exact);
        const LaurentSeriesX D = (C - LaurentSeriesX(Poly::variable(R, "x"), exact)) * xinv;
        LaurentSeriesX sum = Cpow[0];
        LaurentSeriesX term = Cpow[0];
        for (std::int64_t j = 1; j <= 1 - order + (a + b); ++j) {
            term = term * D * Rational(-1);
            sum = sum + term;
        }
        Cneg.push_back(sum * xinv);
        for (long k = 2; k <= a - 2; ++k) {
            Cneg.push_back(Cneg.back() * Cneg[1]);
        }
    }
    LaurentSeriesX residual(Fx, order);
    std::vector<Rational> lambda;
    for (long i = 0; i <= a + b - 2; ++i) {
        const long k = b - i;
        Rational li = 1;
        if (i > 0) {
            if (k < residual.trunc_order()) {
                throw PreconditionError("truncation order " + std::to_string(order) +
                                        " is too shallow to fit lambda_" + std::to_string(i));
            }
            li = residual.poly().coeff({k, 0});
        }
        lambda.push_back(li);
        if (li != 0) {
            const LaurentSeriesX &Ck = k >= 0 ? Cpow[static_cast<std::size_t>(k)] : Cneg[static_cast<std::size_t>(-k)];
            residual = residual - Ck * li;
        }
    }

    ValquiReport rep{a, b, C, lambda, residual, false, {}};
    const auto floor_order = C.pow(static_cast<unsigned long>(a)).trunc_order();
    rep.root_ok = (C.pow(static_cast<unsigned long>(a)) - LaurentSeriesX(Gx, floor_order)).poly().is_zero();

    auto add = [&](int idx, std::string witness) { rep.conditions.push_back({idx, witness.empty(), std::move(witness)}); };

    std::string w1;
    for (const auto &[e, coef] : C.coefficients()) {
        if (e == 1) {
            if (coef != Poly::constant(R, 1)) {
                w1 = "x-coefficient is " + to_string(coef);
            }
        } else if (e >= 0) {
            w1 = "C has a term with x^" + std::to_string(e) + ": " + to_string(coef);
        } else if (has_negative_exponents(coef)) {
            w1 = "C_" + std::to_string(e) + " is not a polynomial in y";
        }
        if (!w1.empty()) {
            break;
        }
    }
    add(1, w1);

    std::string w2;
    const auto dC = series_degree(C.poly());
    if (!dC || *dC != 1) {
        w2 = "deg(C) = " + (dC ? std::to_string(*dC) : std::string("-inf"));
    }
    const auto dP = series_degree(residual.poly());
    if (w2.empty() && dP && *dP > 2 - a) {
        w2 = "deg(P) = " + std::to_string(*dP) + " exceeds " + std::to_string(2 - a);
    }
    add(2, w2);

    std::string w3;
    if (dP && *dP == 2 - a) {
        const Poly Pplus = leading_form(residual.poly(), Direction::W10);
        const Poly want = Poly::monomial(R, {1 - a, 1});
        if (Pplus != want) {
            w3 = "P_+ = " + clip(to_string(Pplus)) + ", expected " + to_string(want);
        }
    }
    add(3, w3);
    return rep;
}

nlohmann::json laurent_to_json(const LaurentSeriesX &s)
{
    return {{"poly", poly_to_json(s.poly())}, {"text", to_string(s.poly())}, {"trunc_order", s.trunc_order()}};
}

nlohmann::json valqui_to_json(const ValquiReport &r)
{
    nlohmann::json lam = nlohmann::json::array();
    for (const auto &q : r.lambda) {
        lam.push_back(rational_to_json(q));
    }
    nlohmann::json conds = nlohmann::json::array();
    bool all = true;
    for (const auto &c : r.conditions) {
        nlohmann::json j{{"condition", c.index}, {"ok", c.ok}};
        if (!c.ok) {
            j["witness"] = c.witness;
        }
        all = all && c.ok;
        conds.push_back(j);
    }
    return {{"a", r.a},       {"b", r.b},           {"C", laurent_to_json(r.C)}, {"lambda", lam},
            {"P", laurent_to_json(r.P)}, {"root_ok", r.root_ok}, {"conditions", conds},      {"all", all}};
}

} // namespace jcas
