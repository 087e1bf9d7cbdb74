#include <jcas/poly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <jcas/error.hpp>

namespace jcas {

Ring::Ring(std::vector<std::string> vars, std::int64_t denom) : vars_(std::move(vars)), denom_(denom)
{
    if (denom_ <= 0) {
        throw DomainError("exponent denominator must be positive");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) {
            throw ContextError("empty variable name");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (vars_[i] == vars_[j]) {
                throw ContextError("duplicate variable '" + vars_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> Ring::find(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const
{
    auto i = find(name);
    if (!i) {
        throw ContextError("unknown variable '" + std::string(name) + "'");
    }
    return *i;
}

RingPtr make_ring(std::vector<std::string> vars, std::int64_t denom)
{
    return std::make_shared<const Ring>(std::move(vars), denom);
}

bool same_ring(const RingPtr &a, const RingPtr &b) { return a == b || *a == *b; }

std::size_t ExponentsHash::operator()(const Exponents &e) const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : e) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

bool grlex_greater(const Exponents &a, const Exponents &b)
{
    std::int64_t da = 0;
    std::int64_t db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) {
        return da > db;
    }
    return a > b;
}

namespace {

void sort_terms(std::vector<Term> &terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return grlex_greater(x.exps, y.exps); });
}

} // namespace

// ---- Poly ----

Poly::Poly(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_) {
        throw ContextError("null ring");
    }
}

Poly Poly::constant(RingPtr ring, const Rational &c)
{
    Poly p(std::move(ring));
    if (c != 0) {
        p.terms_.push_back({Exponents(p.ring_->nvars(), 0), c});
    }
    return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name)
{
    const auto idx = ring->index(name);
    Exponents e(ring->nvars(), 0);
    e[idx] = ring->denom();
    return monomial(std::move(ring), std::move(e), 1);
}

Poly Poly::monomial(RingPtr ring, Exponents exps, const Rational &c)
{
    Poly p(std::move(ring));
    if (exps.size() != p.ring_->nvars()) {
        throw ContextError("exponent vector length does not match ring");
    }
    if (c != 0) {
        p.terms_.push_back({std::move(exps), c});
    }
    return p;
}

Poly Poly::from_sorted_unchecked(RingPtr ring, std::vector<Term> terms)
{
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms)
{
    PolyAccumulator acc(std::move(ring));
    for (auto &t : terms) {
        acc.add(t.exps, t.coeff);
    }
    return acc.finish();
}

bool Poly::is_constant() const
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

Rational Poly::coeff(const Exponents &exps) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                               [](const Term &t, const Exponents &e) { return grlex_greater(t.exps, e); });
    if (it != terms_.end() && it->exps == exps) {
        return it->coeff;
    }
    return 0;
}

Rational Poly::constant_term() const { return coeff(Exponents(ring_->nvars(), 0)); }

const Term &Poly::leading_term() const
{
    if (terms_.empty()) {
        throw DomainError("leading term of the zero polynomial");
    }
    return terms_.front();
}

void Poly::check_ring(const Poly &o) const
{
    if (!same_ring(ring_, o.ring_)) {
        throw ContextError("polynomials belong to different rings");
    }
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto &t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

namespace {

// Merges two sorted term lists; sign = +1 or -1 applies to b.
std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
            out.push_back(b[j++]);
            if (sign < 0) {
                out.back().coeff = -out.back().coeff;
            }
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (c != 0) {
                out.push_back({a[i].exps, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly &Poly::operator+=(const Poly &o)
{
    check_ring(o);
    if (o.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, 1);
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    check_ring(o);
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.ring_);
    }
    const std::size_t nv = a.ring_->nvars();
    if (a.size() == 1 || b.size() == 1) {
        const Poly &mono = a.size() == 1 ? a : b;
        const Poly &other = a.size() == 1 ? b : a;
        const Term &m = mono.terms_[0];
        Poly r(a.ring_);
        r.terms_.reserve(other.size());
        for (const auto &t : other.terms_) {
            Exponents e(nv);
            for (std::size_t k = 0; k < nv; ++k) {
                e[k] = t.exps[k] + m.exps[k];
            }
            r.terms_.push_back({std::move(e), t.coeff * m.coeff});
        }
        // Shifting by a monomial preserves grlex order.
        return r;
    }
    PolyAccumulator acc(a.ring_);
    Exponents buf(nv);
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            for (std::size_t k = 0; k < nv; ++k) {
                buf[k] = s.exps[k] + t.exps[k];
            }
            acc.add_product(buf, s.coeff, t.coeff);
        }
    }
    return acc.finish();
}

Poly &Poly::operator*=(const Poly &o)
{
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

Poly &Poly::operator/=(const Rational &c)
{
    if (c == 0) {
        throw DomainError("division by zero");
    }
    for (auto &t : terms_) {
        t.coeff /= c;
    }
    return *this;
}

bool Poly::operator==(const Poly &o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

Poly Poly::pow(unsigned long k) const
{
    Poly result = constant(ring_, 1);
    if (k == 0) {
        return result;
    }
    if (is_monomial()) {
        const auto &t = terms_[0];
        Exponents e(t.exps.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = t.exps[i] * static_cast<std::int64_t>(k);
        }
        return monomial(ring_, std::move(e), jcas::pow(t.coeff, static_cast<long>(k)));
    }
    Poly base = *this;
    while (true) {
        if (k & 1UL) {
            result *= base;
        }
        k >>= 1;
        if (k == 0) {
            break;
        }
        base *= base;
    }
    return result;
}

Poly Poly::ipow(long k) const
{
    if (k >= 0) {
        return pow(static_cast<unsigned long>(k));
    }
    return monomial_inverse().pow(static_cast<unsigned long>(-k));
}

Poly Poly::monomial_inverse() const
{
    if (!is_monomial()) {
        throw SubstitutionError("only monomials are invertible, got " + to_string(*this));
    }
    const auto &t = terms_[0];
    Exponents e(t.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = -t.exps[i];
    }
    return monomial(ring_, std::move(e), 1 / t.coeff);
}

Poly Poly::shift(const Exponents &exps) const
{
    Poly r = *this;
    for (auto &t : r.terms_) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            t.exps[i] += exps[i];
        }
    }
    return r;
}

// ---- PolyAccumulator ----

void PolyAccumulator::add(const Exponents &exps, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = acc_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
    }
}

void PolyAccumulator::add_product(const Exponents &exps, const Rational &a, const Rational &b)
{
    auto [it, inserted] = acc_.try_emplace(exps);
    if (inserted) {
        mpq_mul(it->second.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    } else {
        mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), tmp_.get_mpq_t());
    }
}

void PolyAccumulator::add(const Poly &p, const Rational &scale)
{
    if (!same_ring(ring_, p.ring())) {
        throw ContextError("accumulator ring mismatch");
    }
    if (scale == 0) {
        return;
    }
    for (const auto &t : p.terms()) {
        add_product(t.exps, t.coeff, scale);
    }
}

Poly PolyAccumulator::finish()
{
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto &[e, c] : acc_) {
        if (c != 0) {
            terms.push_back({e, std::move(c)});
        }
    }
    acc_.clear();
    sort_terms(terms);
    return Poly::from_sorted_unchecked(ring_, std::move(terms));
}

// ---- Free operations ----

Poly derivative(const Poly &f, std::string_view var)
{
    const auto &ring = f.ring();
    const auto idx = ring->index(var);
    const std::int64_t D = ring->denom();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto &t : f.terms()) {
        if (t.exps[idx] == 0) {
            continue;
        }
        Term nt{t.exps, t.coeff * make_rational(t.exps[idx], D)};
        nt.exps[idx] -= D;
        out.push_back(std::move(nt));
    }
    return Poly::from_terms(ring, std::move(out));
}

Poly monomial_power(const Poly &mono, const Rational &power)
{
    if (!mono.is_monomial()) {
        throw RootError("rational power of a non-monomial: " + to_string(mono));
    }
    const auto &ring = mono.ring();
    const auto &t = mono.terms()[0];
    const long pnum = to_int64(Integer(power.get_num()));
    const long pden = to_int64(Integer(power.get_den()));
    Exponents e(t.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::int64_t prod = t.exps[i] * pnum;
        if (prod % pden != 0) {
            throw LatticeError("exponent leaves the 1/" + std::to_string(ring->denom()) + " lattice in " +
                               to_string(mono) + "^(" + power.get_str() + ")");
        }
        e[i] = prod / pden;
    }
    Rational c = t.coeff;
    if (pden != 1) {
        auto root = rational_root(c, static_cast<unsigned long>(pden));
        if (!root) {
            throw RootError("coefficient " + c.get_str() + " has no rational " + std::to_string(pden) + "-th root");
        }
        c = *root;
    }
    c = pow(c, pnum);
    return Poly::monomial(ring, std::move(e), c);
}

Poly substitute(const Poly &f, const std::map<std::string, Poly> &images, const RingPtr &target)
{
    const auto &src = f.ring();
    const std::int64_t D = src->denom();
    const std::size_t nv = src->nvars();
    std::vector<const Poly *> img(nv, nullptr);
    for (std::size_t i = 0; i < nv; ++i) {
        auto it = images.find(src->vars()[i]);
        if (it != images.end()) {
            if (!same_ring(it->second.ring(), target)) {
                throw ContextError("image of '" + src->vars()[i] + "' is not in the target ring");
            }
            img[i] = &it->second;
        }
    }
    // Cache of powers per variable, keyed by exponent numerator.
    std::vector<std::map<std::int64_t, Poly>> cache(nv);
    auto power_of = [&](std::size_t v, std::int64_t num) -> const Poly & {
        auto it = cache[v].find(num);
        if (it != cache[v].end()) {
            return it->second;
        }
        const Poly &base = *img[v];
        Poly value(target);
        if (num % D == 0) {
            const std::int64_t k = num / D;
            if (k < 0 && !base.is_monomial()) {
                throw SubstitutionError("negative power of '" + src->vars()[v] + "' needs a unit image, got " +
                                        to_string(base));
            }
            // Reuse the next smaller cached power when available.
            if (k > 1) {
                auto prev = cache[v].find(num - D);
                if (prev != cache[v].end()) {
                    value = prev->second * base;
                } else {
                    value = base.pow(static_cast<unsigned long>(k));
                }
            } else {
                value = base.ipow(k);
            }
        } else {
            if (!base.is_monomial()) {
                throw SubstitutionError("fractional power of '" + src->vars()[v] + "' needs a monomial image, got " +
                                        to_string(base));
            }
            value = monomial_power(base, make_rational(num, D));
        }
        return cache[v].emplace(num, std::move(value)).first->second;
    };

    PolyAccumulator acc(target);
    for (const auto &t : f.terms()) {
        Poly term = Poly::constant(target, t.coeff);
        for (std::size_t v = 0; v < nv; ++v) {
            if (t.exps[v] == 0) {
                continue;
            }
            if (!img[v]) {
                throw SubstitutionError("no image for variable '" + src->vars()[v] + "'");
            }
            term *= power_of(v, t.exps[v]);
        }
        acc.add(term);
    }
    return acc.finish();
}

Poly change_ring(const Poly &f, const RingPtr &target)
{
    const auto &src = f.ring();
    if (same_ring(src, target)) {
        return f;
    }
    if (target->denom() % src->denom() != 0) {
        throw ContextError("target denominator " + std::to_string(target->denom()) + " is not a multiple of " +
                           std::to_string(src->denom()));
    }
    const std::int64_t scale = target->denom() / src->denom();
    std::vector<std::optional<std::size_t>> map(src->nvars());
    for (std::size_t i = 0; i < src->nvars(); ++i) {
        map[i] = target->find(src->vars()[i]);
    }
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto &t : f.terms()) {
        Exponents e(target->nvars(), 0);
        for (std::size_t i = 0; i < src->nvars(); ++i) {
            if (t.exps[i] == 0) {
                continue;
            }
            if (!map[i]) {
                throw ContextError("variable '" + src->vars()[i] + "' does not exist in the target ring");
            }
            e[*map[i]] = t.exps[i] * scale;
        }
        out.push_back({std::move(e), t.coeff});
    }
    return Poly::from_terms(target, std::move(out));
}

std::map<std::int64_t, Poly> collect(const Poly &f, std::size_t var)
{
    std::map<std::int64_t, std::vector<Term>> groups;
    for (const auto &t : f.terms()) {
        Term nt = t;
        nt.exps[var] = 0;
        groups[t.exps[var]].push_back(std::move(nt));
    }
    std::map<std::int64_t, Poly> out;
    for (auto &[k, terms] : groups) {
        out.emplace(k, Poly::from_terms(f.ring(), std::move(terms)));
    }
    return out;
}

namespace {

Rational rational_power_value(const Rational &value, std::int64_t num, std::int64_t D, const std::string &name)
{
    const std::int64_t g = std::gcd(num, D);
    const std::int64_t p = num / g;
    const std::int64_t q = D / g;
    Rational base = value;
    if (q != 1) {
        auto root = rational_root(value, static_cast<unsigned long>(q));
        if (!root) {
            throw RootError("value " + value.get_str() + " of '" + name + "' has no rational " + std::to_string(q) +
                            "-th root");
        }
        base = *root;
    }
    return pow(base, p);
}

} // namespace

Poly evaluate(const Poly &f, const std::map<std::string, Rational> &values)
{
    const auto &ring = f.ring();
    std::vector<const Rational *> val(ring->nvars(), nullptr);
    for (const auto &[name, v] : values) {
        val[ring->index(name)] = &v;
    }
    PolyAccumulator acc(ring);
    for (const auto &t : f.terms()) {
        Rational c = t.coeff;
        Exponents e = t.exps;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (val[i] && e[i] != 0) {
                c *= rational_power_value(*val[i], e[i], ring->denom(), ring->vars()[i]);
                e[i] = 0;
            }
        }
        acc.add(e, c);
    }
    return acc.finish();
}

Rational evaluate_all(const Poly &f, const std::map<std::string, Rational> &values)
{
    Poly r = evaluate(f, values);
    if (!r.is_constant()) {
        throw SubstitutionError("evaluation left free variables: " + to_string(r));
    }
    return r.constant_term();
}

Rational weighted_degree(const Exponents &exps, const std::vector<Rational> &weights, std::int64_t denom)
{
    Rational s = 0;
    for (std::size_t i = 0; i < exps.size() && i < weights.size(); ++i) {
        if (exps[i] != 0 && weights[i] != 0) {
            s += weights[i] * exps[i];
        }
    }
    return s / denom;
}

Rational max_exponent(const Poly &f, std::size_t var)
{
    if (f.is_zero()) {
        throw DomainError("max exponent of zero");
    }
    std::int64_t m = f.terms()[0].exps[var];
    for (const auto &t : f.terms()) {
        m = std::max(m, t.exps[var]);
    }
    return make_rational(m, f.ring()->denom());
}

Rational min_exponent(const Poly &f, std::size_t var)
{
    if (f.is_zero()) {
        throw DomainError("min exponent of zero");
    }
    std::int64_t m = f.terms()[0].exps[var];
    for (const auto &t : f.terms()) {
        m = std::min(m, t.exps[var]);
    }
    return make_rational(m, f.ring()->denom());
}

bool has_negative_exponents(const Poly &f)
{
    for (const auto &t : f.terms()) {
        for (auto e : t.exps) {
            if (e < 0) {
                return true;
            }
        }
    }
    return false;
}

bool has_fractional_exponents(const Poly &f)
{
    const auto D = f.ring()->denom();
    for (const auto &t : f.terms()) {
        for (auto e : t.exps) {
            if (e % D != 0) {
                return true;
            }
        }
    }
    return false;
}

std::string to_string(const Poly &f)
{
    if (f.is_zero()) {
        return "0";
    }
    const auto &ring = f.ring();
    const std::int64_t D = ring->denom();
    std::ostringstream os;
    bool first = true;
    for (const auto &t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) {
                c = -c;
            }
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) {
                continue;
            }
            if (any_var) {
                mono << "*";
            }
            any_var = true;
            mono << ring->vars()[i];
            Rational e = make_rational(t.exps[i], D);
            if (e != 1) {
                if (is_integer(e) && e > 0) {
                    mono << "^" << e.get_str();
                } else {
                    mono << "^(" << e.get_str() << ")";
                }
            }
        }
        if (!any_var) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << c.get_str() << "*" << mono.str();
        }
    }
    return os.str();
}

} // namespace jcas
