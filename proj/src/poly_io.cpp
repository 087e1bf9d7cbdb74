#include <jcas/poly_io.hpp>

#include <cctype>

#include <jcas/error.hpp>

namespace jcas {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr &ring) : s_(text), ring_(ring) {}

    Poly run()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr()
    {
        Poly acc(ring_);
        bool neg = false;
        if (accept('-')) {
            neg = true;
        } else {
            accept('+');
        }
        Poly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = power();
        while (true) {
            if (accept('*')) {
                acc *= power();
            } else if (accept('/')) {
                Poly d = power();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                if (!d.is_monomial()) {
                    fail("division by a non-monomial");
                }
                acc *= d.monomial_inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    Rational exponent()
    {
        if (accept('(')) {
            bool neg = accept('-');
            Rational q = number();
            if (accept('/')) {
                Rational den = number();
                if (den == 0) {
                    fail("zero denominator");
                }
                q /= den;
            }
            if (!accept(')')) {
                fail("expected ')'");
            }
            return neg ? Rational(-q) : q;
        }
        bool neg = accept('-');
        Rational q = number();
        return neg ? Rational(-q) : q;
    }

    Poly power()
    {
        Poly base = atom();
        if (accept('^')) {
            Rational e = exponent();
            if (is_integer(e)) {
                return base.ipow(to_int64(e));
            }
            return monomial_power(base, e);
        }
        return base;
    }

    Rational number()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return Rational(Integer(std::string(s_.substr(start, pos_ - start))));
    }

    Poly atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(ring_, number());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(s_.substr(start, pos_ - start));
            if (!ring_->find(name)) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, name);
        }
        fail("unexpected input");
    }

    std::string_view s_;
    const RingPtr &ring_;
    std::size_t pos_ = 0;
};

nlohmann::json integer_to_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return static_cast<std::int64_t>(z.get_si());
    }
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json &j)
{
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_number_unsigned()) {
        return Integer(std::to_string(j.get<std::uint64_t>()));
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument &) {
            throw ParseError("not an integer: " + j.get<std::string>());
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr &ring) { return Parser(text, ring).run(); }

nlohmann::json rational_to_json(const Rational &q)
{
    return nlohmann::json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const nlohmann::json &j)
{
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ParseError("rational must be [num, den]");
        }
        Integer num = integer_from_json(j[0]);
        Integer den = integer_from_json(j[1]);
        if (den == 0) {
            throw ParseError("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    return Rational(integer_from_json(j));
}

nlohmann::json poly_to_json(const Poly &f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : f.terms()) {
        terms.push_back(nlohmann::json::array({t.exps, rational_to_json(t.coeff)}));
    }
    return {{"vars", f.ring()->vars()}, {"denom", f.ring()->denom()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw ParseError("polynomial JSON needs 'vars' and 'terms'");
    }
    std::int64_t denom = 1;
    if (j.contains("denom")) {
        denom = j.at("denom").get<std::int64_t>();
    }
    auto ring = make_ring(j.at("vars").get<std::vector<std::string>>(), denom);
    std::vector<Term> terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) {
            throw ParseError("term must be [exponents, coefficient]");
        }
        auto exps = t[0].get<Exponents>();
        if (exps.size() != ring->nvars()) {
            throw ParseError("exponent vector length mismatch");
        }
        terms.push_back({std::move(exps), rational_from_json(t[1])});
    }
    return Poly::from_terms(ring, std::move(terms));
}

Poly poly_from_json(const nlohmann::json &j, const RingPtr &ring)
{
    if (j.is_string()) {
        return parse_poly(j.get<std::string>(), ring);
    }
    Poly p = poly_from_json(j);
    if (ring->denom() % p.ring()->denom() != 0) {
        throw ContextError("input denominator " + std::to_string(p.ring()->denom()) +
                           " does not divide the working denominator " + std::to_string(ring->denom()));
    }
    return change_ring(p, ring);
}

} // namespace jcas
