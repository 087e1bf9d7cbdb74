// Command-line front end. Every subcommand reads its polynomial inputs from a
// JSON envelope (file or stdin) or from inline options and writes a JSON
// envelope to stdout. Exit codes: 0 computed, 1 precondition, 2 inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <jcas/error.hpp>
#include <jcas/harness.hpp>
#include <jcas/poly_io.hpp>

using nlohmann::json;
using namespace jcas;

namespace {

struct Common {
    std::string input;
    std::string output;
    bool report = false;
    std::string F, G, Q, Fcirc;
    std::vector<long> params; // a b m n
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Envelope {
public:
    explicit Envelope(const Common &c) : c_(c)
    {
        if (!c.input.empty()) {
            std::string text;
            if (c.input == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(c.input);
                if (!in) {
                    throw InputError("cannot open " + c.input);
                }
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            try {
                j_ = json::parse(text);
            } catch (const json::exception &e) {
                throw InputError(std::string("malformed JSON input: ") + e.what());
            }
            // Accept our own output envelopes as input, so gen | conditions works.
            for (const char *k : {"input", "result"}) {
                if (j_.is_object() && j_.contains(k)) {
                    j_ = json(j_[k]);
                }
            }
        }
    }

    Poly poly(const std::string &key, const std::string &inline_text) const
    {
        static const auto xy = make_ring({"x", "y"});
        if (!inline_text.empty()) {
            return parse_poly(inline_text, xy);
        }
        if (!j_.contains(key)) {
            throw InputError("missing polynomial '" + key + "' (pass --" + key + " or an input envelope)");
        }
        const auto &v = j_[key];
        if (v.is_string()) {
            return parse_poly(v.get<std::string>(), xy);
        }
        return poly_from_json(v);
    }

    // a b m n from --params or the envelope's "params" object.
    std::array<long, 4> abmn(bool need_b = true) const
    {
        if (!c_.params.empty()) {
            if (c_.params.size() != 4) {
                throw InputError("--params takes a b m n");
            }
            return {c_.params[0], c_.params[1], c_.params[2], c_.params[3]};
        }
        if (!j_.contains("params")) {
            throw InputError("missing parameters (pass --params a b m n)");
        }
        const auto &p = j_["params"];
        return {p.at("a").get<long>(), need_b ? p.at("b").get<long>() : p.value("b", 0L), p.at("m").get<long>(),
                p.at("n").get<long>()};
    }

private:
    const Common &c_;
    json j_;
};

void add_common(CLI::App *sub, Common &c, bool with_params = true)
{
    sub->add_option("--input", c.input, "JSON envelope file ('-' for stdin)");
    sub->add_option("--output", c.output, "write the result here instead of stdout");
    sub->add_flag("--report", c.report, "print a human-readable summary");
    if (with_params) {
        sub->add_option("--params", c.params, "a b m n")->expected(4);
    }
}

std::string text_of(const json &poly)
{
    return to_string(poly_from_json(poly));
}

// Short human summaries; anything not covered falls back to key: value lines.
std::string summarize(const std::string &cmd, const json &r)
{
    std::ostringstream os;
    if (cmd == "params") {
        for (const char *k : {"u", "d", "e", "L", "u_E", "v_E", "u_F", "v_F", "mfrak"}) {
            os << k << " = " << (r[k].is_string() ? r[k].get<std::string>() : r[k].dump()) << "\n";
        }
    } else if (cmd == "conditions") {
        for (const auto &c : r["conditions"]) {
            os << "(" << c["condition"].get<int>() << ") " << (c["ok"].get<bool>() ? "holds" : "fails");
            if (c.contains("witness")) {
                os << ": " << c["witness"].get<std::string>();
            }
            os << "\n";
        }
    } else if (cmd == "remainder") {
        os << "Q = " << r["Q_text"].get<std::string>() << "\n";
        os << "E = " << r["Ecirc_text"].get<std::string>() << "  (delta " << r["delta"] << ")\n";
        os << "alpha = " << r["alphaCirc"]["text"].get<std::string>() << "\n";
        os << "F° = " << r["Fcirc_text"].get<std::string>() << "\n";
    } else if (cmd == "magnus") {
        os << "d=" << r["d"] << " e=" << r["e"] << " r=" << r["r"] << " rho=" << r["rho"].get<std::string>() << "\n";
        int k = 0;
        for (const auto &c : r["c"]) {
            const Rational q = rational_from_json(c);
            if (q != 0) {
                os << "c_" << k << " = " << to_string(q) << "\n";
            }
            ++k;
        }
    } else if (cmd == "check-dc") {
        os << (r["ok"].get<bool>() ? "holds" : "fails") << " (shifts " << r["shift_01"] << ", " << r["shift_11"]
           << ")\n";
        for (const auto &w : r["witnesses"]) {
            os << "  " << w.get<std::string>() << "\n";
        }
        for (const auto &w : r["violations"]) {
            os << "  consequence: " << w.get<std::string>() << "\n";
        }
    } else if (cmd == "pipeline") {
        if (r.contains("truncated_at")) {
            os << "stopped at " << r["truncated_at"].get<std::string>() << ": " << r["reason"].get<std::string>()
               << "\n";
        }
        for (const auto &c : r["conclusions"]) {
            os << c.get<std::string>() << "\n";
        }
        for (const auto &s : r["stages"]) {
            os << "stage delta=" << s["delta"] << " i=" << s["i"] << ": ";
            if (s.contains("truncated_at")) {
                os << "stopped at " << s["truncated_at"].get<std::string>() << " ("
                   << s["reason"].get<std::string>() << ")";
            } else {
                os << "supported=" << s["support"]["supported"].dump() << " P1 zero at";
                for (const auto &p : s["p1"]) {
                    if (p["P1_zero"].get<bool>()) {
                        os << " " << p["l"];
                    }
                }
            }
            os << "\n";
        }
    } else if (cmd == "valqui") {
        os << "C = " << r["C"]["text"].get<std::string>() << " + O(x^" << r["C"]["trunc_order"] << ")\n";
        os << "P = " << r["P"]["text"].get<std::string>() << "\n";
        for (const auto &c : r["conditions"]) {
            os << "(" << c["condition"].get<int>() << ") " << (c["ok"].get<bool>() ? "holds" : "fails") << "\n";
        }
    } else if (cmd == "gen") {
        os << "F = " << text_of(r["F"]) << "\n";
        if (r.contains("G")) {
            os << "G = " << text_of(r["G"]) << "\n";
        }
    } else if (cmd == "extract-q") {
        os << "Q = " << text_of(r["Q"]) << "\n";
    } else if (cmd == "decompose") {
        os << "E = " << text_of(r["E"]) << "\nalpha = " << r["alpha"]["text"].get<std::string>() << "\n";
    } else {
        for (auto it = r.begin(); it != r.end(); ++it) {
            os << it.key() << ": " << it.value().dump() << "\n";
        }
    }
    return os.str();
}

int emit(const Common &c, const json &out, const std::string &report)
{
    std::ofstream file;
    std::ostream *os = &std::cout;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) {
            std::cerr << "cannot write " << c.output << "\n";
            return 1;
        }
        os = &file;
    }
    if (c.report) {
        *os << report;
    } else {
        *os << out.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact algebra tools for Jacobian-pair reduction experiments"};
    app.require_subcommand(1);
    Common c;

    long pa = 0, pb = 0, pm = 0, pn = 0, delta = 1, idx = 0;
    auto *params = app.add_subcommand("params", "stage parameters for (a, b, m, n, delta, i)");
    params->add_option("a", pa)->required();
    params->add_option("b", pb)->required();
    params->add_option("m", pm)->required();
    params->add_option("n", pn)->required();
    params->add_option("--delta", delta, "common divisor of m/a and n/a")->default_val(1);
    params->add_option("--i", idx, "index i")->required();
    add_common(params, c, false);

    std::string kind = "bracket_zero_pair";
    std::uint64_t seed = 0;
    double density = 0.5;
    auto *gen = app.add_subcommand("gen", "seeded example generation");
    gen->add_option("--kind", kind, "condition123_F | bracket_zero_pair | random_T3");
    gen->add_option("--seed", seed);
    gen->add_option("--density", density)->default_val(0.5);
    gen->add_option("--delta", delta)->default_val(1);
    add_common(gen, c);

    auto *conds = app.add_subcommand("conditions", "trapezoid, divisibility and bracket conditions on (F, G)");
    conds->add_option("--F", c.F);
    conds->add_option("--G", c.G);
    add_common(conds, c);

    auto *exq = app.add_subcommand("extract-q", "the polynomial Q with F - Q^a outside N''");
    exq->add_option("--F", c.F);
    add_common(exq, c);

    std::vector<long> corner;
    auto *dec = app.add_subcommand("decompose", "deepest decomposition Q = alpha(E)");
    dec->add_option("--Q", c.Q);
    dec->add_option("--corner", corner, "corner point p q normalized to +1")->expected(2);
    add_common(dec, c, false);

    auto *rem = app.add_subcommand("remainder", "F = alpha(E) + F° with minimal F°");
    rem->add_option("--F", c.F);
    add_common(rem, c);

    std::string wdir = "(1,1)";
    auto *mag = app.add_subcommand("magnus", "Magnus coefficients c_0.. for (F, G)");
    mag->add_option("--F", c.F);
    mag->add_option("--G", c.G);
    mag->add_option("--w", wdir, "(0,1) or (1,1)");
    add_common(mag, c, false);

    std::string mode = "DC";
    bool consequences = false;
    auto *dc = app.add_subcommand("check-dc", "i-th divisibility (and support) conditions on F°");
    dc->add_option("--Fcirc", c.Fcirc);
    dc->add_option("--i", idx)->required();
    dc->add_option("--mode", mode, "(0,1)-DC | (1,1)-DC | DC | DSC");
    dc->add_option("--delta", delta)->default_val(1);
    dc->add_flag("--consequences", consequences, "also test the implied degree and corner bounds");
    add_common(dc, c);

    std::vector<long> only_i;
    bool exact_j = false;
    auto *pipe = app.add_subcommand("pipeline", "conditions, remainder, Magnus and supported-set stages");
    pipe->add_option("--F", c.F);
    pipe->add_option("--G", c.G);
    pipe->add_option("--only-i", only_i)->expected(1);
    pipe->add_flag("--exact-j", exact_j, "expand the j-table symbolically");
    pipe->add_option("--seed", seed);
    add_common(pipe, c);

    std::int64_t order = -6;
    auto *val = app.add_subcommand("valqui", "Laurent-form check with C^a = G");
    val->add_option("--F", c.F);
    val->add_option("--G", c.G);
    val->add_option("--order", order)->default_val(-6);
    add_common(val, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    auto *sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    json out{{"command", cmd}};
    try {
        Envelope env(c);
        json r;
        if (cmd == "params") {
            r = params_to_json(build_params(pa, pb, pm, pn, delta, idx));
        } else if (cmd == "gen") {
            auto p = env.abmn();
            ExampleRequest req;
            req.kind = parse_example_kind(kind);
            req.a = p[0];
            req.b = p[1];
            req.m = p[2];
            req.n = p[3];
            req.delta = delta;
            req.density = density;
            req.seed = seed;
            r = example_to_json(generate_example(req));
            r["params"] = {{"a", p[0]}, {"b", p[1]}, {"m", p[2]}, {"n", p[3]}};
            r["seed"] = seed;
        } else if (cmd == "conditions") {
            auto p = env.abmn();
            r = conditions_to_json(check_conditions(env.poly("F", c.F), env.poly("G", c.G), p[0], p[1], p[2], p[3]));
        } else if (cmd == "extract-q") {
            auto p = env.abmn(false);
            r = {{"Q", poly_to_json(extract_Q(env.poly("F", c.F), p[0], p[2], p[3]))}};
        } else if (cmd == "decompose") {
            std::optional<std::pair<std::int64_t, std::int64_t>> cp;
            if (corner.size() == 2) {
                cp = std::make_pair(static_cast<std::int64_t>(corner[0]), static_cast<std::int64_t>(corner[1]));
            }
            auto d = decompose_principal(env.poly("Q", c.Q), cp);
            r = {{"E", poly_to_json(d.E)}, {"delta", d.delta}, {"alpha", d.alpha.to_json()}};
        } else if (cmd == "remainder") {
            auto p = env.abmn(false);
            auto res = minimize_remainder(env.poly("F", c.F), p[0], p[2], p[3]);
            r = remainder_to_json(res);
            r["structure"] = structure_to_json(verify_leading_structure(res, p[0], p[2], p[3]));
        } else if (cmd == "magnus") {
            r = magnus_to_json(solve_magnus(env.poly("F", c.F), env.poly("G", c.G), parse_direction(wdir)));
        } else if (cmd == "check-dc") {
            auto p = env.abmn(false);
            DcOptions opt;
            opt.consequences = consequences;
            opt.a = p[0];
            opt.delta = delta;
            r = dc_to_json(dc_dsc_check(env.poly("Fcirc", c.Fcirc), p[2], p[3], idx, parse_dc_mode(mode), opt));
            r["mode"] = dc_mode_name(parse_dc_mode(mode));
            r["i"] = idx;
        } else if (cmd == "pipeline") {
            auto p = env.abmn();
            PipelineOptions opt;
            opt.support.exact_jfrak = exact_j;
            if (sub->count("--seed") > 0) {
                opt.support.seed = seed;
            }
            if (!only_i.empty()) {
                opt.only_i = only_i[0];
            }
            r = pipeline_to_json(
                remainder_pipeline(env.poly("F", c.F), env.poly("G", c.G), p[0], p[1], p[2], p[3], opt));
        } else if (cmd == "valqui") {
            auto p = env.abmn();
            r = valqui_to_json(valqui_check(env.poly("F", c.F), env.poly("G", c.G), p[0], p[1], order));
        }
        out["status"] = "ok";
        out["result"] = r;
        return emit(c, out, summarize(cmd, r));
    } catch (const Error &e) {
        out["status"] = "error";
        out["error"] = {{"category", e.category()}, {"message", e.what()}};
        emit(c, out, std::string("error (") + e.category() + "): " + e.what() + "\n");
        return e.is_inconsistency() ? 2 : 1;
    } catch (const InputError &e) {
        out["status"] = "error";
        out["error"] = {{"category", "input"}, {"message", e.what()}};
        emit(c, out, std::string("error (input): ") + e.what() + "\n");
        return 1;
    } catch (const json::exception &e) {
        out["status"] = "error";
        out["error"] = {{"category", "input"}, {"message", e.what()}};
        emit(c, out, std::string("error (input): ") + e.what() + "\n");
        return 1;
    }
}
