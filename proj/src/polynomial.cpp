#include "motivic/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <type_traits>

namespace motivic {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::power(Var v, int exp)
{
    Monomial m;
    if (exp != 0) {
        m.factors_.push_back({v, exp});
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<VarPower> factors)
{
    const bool canonical = std::all_of(factors.begin(), factors.end(), [](const VarPower &f) { return f.exp != 0; }) &&
                           std::adjacent_find(factors.begin(), factors.end(), [](const VarPower &a, const VarPower &b) {
                               return !var_less(a.var, b.var);
                           }) == factors.end();
    if (canonical) {
        Monomial m;
        m.factors_.assign(factors.begin(), factors.end());
        return m;
    }
    std::sort(factors.begin(), factors.end(), [](const VarPower &a, const VarPower &b) { return var_less(a.var, b.var); });
    Monomial m;
    for (const auto &f : factors) {
        if (!m.factors_.empty() && m.factors_.back().var == f.var) {
            m.factors_.back().exp += f.exp;
        } else {
            m.factors_.push_back(f);
        }
        if (m.factors_.back().exp == 0) {
            m.factors_.pop_back();
        }
    }
    return m;
}

int Monomial::exponent(Var v) const noexcept
{
    for (const auto &f : factors_) {
        if (f.var == v) {
            return f.exp;
        }
    }
    return 0;
}

bool Monomial::is_polynomial() const noexcept
{
    return std::all_of(factors_.begin(), factors_.end(), [](const VarPower &f) { return f.exp > 0; });
}

int Monomial::total_degree() const noexcept
{
    int d = 0;
    for (const auto &f : factors_) {
        d += f.exp;
    }
    return d;
}

Monomial Monomial::inverse() const
{
    Monomial m = *this;
    for (auto &f : m.factors_) {
        f.exp = -f.exp;
    }
    return m;
}

Monomial Monomial::pow(int k) const
{
    if (k == 0) {
        return {};
    }
    Monomial m = *this;
    for (auto &f : m.factors_) {
        f.exp *= k;
    }
    return m;
}

Monomial Monomial::componentwise_min(const Monomial &a, const Monomial &b)
{
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        VarPower f;
        if (j == b.factors_.end() || (i != a.factors_.end() && var_less(i->var, j->var))) {
            f = {i->var, std::min(i->exp, 0)};
            ++i;
        } else if (i == a.factors_.end() || var_less(j->var, i->var)) {
            f = {j->var, std::min(j->exp, 0)};
            ++j;
        } else {
            f = {i->var, std::min(i->exp, j->exp)};
            ++i;
            ++j;
        }
        if (f.exp != 0) {
            out.factors_.push_back(f);
        }
    }
    return out;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    if (a.is_one()) {
        return b;
    }
    if (b.is_one()) {
        return a;
    }
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->var == j->var) {
            if (int e = i->exp + j->exp; e != 0) {
                out.factors_.push_back({i->var, e});
            }
            ++i;
            ++j;
        } else if (var_less(i->var, j->var)) {
            out.factors_.push_back(*i++);
        } else {
            out.factors_.push_back(*j++);
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

std::strong_ordering compare(const Monomial &a, const Monomial &b) noexcept
{
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && var_less(fa[i].var, fb[j].var))) {
            return fa[i].exp <=> 0;
        }
        if (i == fa.size() || var_less(fb[j].var, fa[i].var)) {
            return 0 <=> fb[j].exp;
        }
        if (fa[i].exp != fb[j].exp) {
            return fa[i].exp <=> fb[j].exp;
        }
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

using Terms = std::vector<Polynomial::Term>;

// Merges two descending term lists, summing like terms; sign applies to b.
// Terms of `a` are moved; terms of `b` are moved when it is an rvalue.
template <class B>
Terms merge(Terms a, B &&b, bool subtract)
{
    constexpr bool steal = !std::is_lvalue_reference_v<B>;
    auto take = [subtract](auto &t) {
        Polynomial::Term out = steal ? std::move(t) : t;
        if (subtract) {
            mpq_neg(out.coeff.get_mpq_t(), out.coeff.get_mpq_t());
        }
        return out;
    };
    Terms out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        auto c = compare(i->mono, j->mono);
        if (c > 0) {
            out.push_back(std::move(*i++));
        } else if (c < 0) {
            out.push_back(take(*j++));
        } else {
            if (subtract) {
                i->coeff -= j->coeff;
            } else {
                i->coeff += j->coeff;
            }
            if (sgn(i->coeff) != 0) {
                out.push_back(std::move(*i));
            }
            ++i;
            ++j;
        }
    }
    for (; i != a.end(); ++i) {
        out.push_back(std::move(*i));
    }
    for (; j != b.end(); ++j) {
        out.push_back(take(*j));
    }
    return out;
}

} // namespace

Polynomial::Polynomial(const Rational &c)
{
    if (sgn(c) != 0) {
        terms_.push_back({Monomial{}, c});
    }
}

Polynomial Polynomial::variable(Var v, int exp) { return term(Monomial::power(v, exp), Rational(1)); }

Polynomial Polynomial::term(const Monomial &m, const Rational &c)
{
    Polynomial p;
    if (sgn(c) != 0) {
        p.terms_.push_back({m, c});
    }
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto &t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (sgn(p.terms_.back().coeff) == 0) {
                p.terms_.pop_back();
            }
        } else if (sgn(t.coeff) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_term() const
{
    for (const auto &t : terms_) {
        if (t.mono.is_one()) {
            return t.coeff;
        }
    }
    return Rational(0);
}

bool Polynomial::is_polynomial() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.mono.is_polynomial(); });
}

std::vector<Var> Polynomial::variables() const
{
    // factors are sorted, and the variable set is tiny: merge term by term
    std::vector<Var> vars;
    for (const auto &t : terms_) {
        for (const auto &f : t.mono.factors()) {
            auto it = std::lower_bound(vars.begin(), vars.end(), f.var, var_less);
            if (it == vars.end() || *it != f.var) {
                vars.insert(it, f.var);
            }
        }
    }
    return vars;
}

bool Polynomial::contains(Var v) const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term &t) { return t.mono.exponent(v) != 0; });
}

int Polynomial::max_degree(Var v) const noexcept
{
    if (terms_.empty()) {
        return 0;
    }
    int d = terms_.front().mono.exponent(v);
    for (const auto &t : terms_) {
        d = std::max(d, t.mono.exponent(v));
    }
    return d;
}

int Polynomial::min_degree(Var v) const noexcept
{
    if (terms_.empty()) {
        return 0;
    }
    int d = terms_.front().mono.exponent(v);
    for (const auto &t : terms_) {
        d = std::min(d, t.mono.exponent(v));
    }
    return d;
}

Monomial Polynomial::monomial_content() const
{
    if (terms_.empty()) {
        return {};
    }
    Monomial m = terms_.front().mono;
    for (const auto &t : terms_) {
        m = Monomial::componentwise_min(m, t.mono);
    }
    return m;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var x) const
{
    if (min_degree(x) < 0) {
        throw std::domain_error("coefficients_in: negative exponent in main variable");
    }
    std::vector<Terms> buckets(static_cast<std::size_t>(std::max(max_degree(x), 0)) + 1);
    Monomial xinv = Monomial::power(x, -1);
    for (const auto &t : terms_) {
        int e = t.mono.exponent(x);
        // dividing by x^e keeps relative order within a bucket
        buckets[static_cast<std::size_t>(e)].push_back({t.mono * xinv.pow(e), t.coeff});
    }
    std::vector<Polynomial> out(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        out[i].terms_ = std::move(buckets[i]);
    }
    return out;
}

Polynomial Polynomial::from_coefficients(Var x, std::span<const Polynomial> coeffs)
{
    Polynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) {
            out += coeffs[i] * Monomial::power(x, static_cast<int>(i));
        }
    }
    return out;
}

Polynomial Polynomial::map_monomials(const std::function<Monomial(const Monomial &)> &f) const
{
    std::vector<Term> mapped;
    mapped.reserve(terms_.size());
    for (const auto &t : terms_) {
        mapped.push_back({f(t.mono), t.coeff});
    }
    return from_terms(std::move(mapped));
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto &t : p.terms_) {
        t.coeff = -t.coeff;
    }
    return p;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    terms_ = merge(std::move(terms_), o.terms_, false);
    return *this;
}

Polynomial &Polynomial::operator+=(Polynomial &&o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = std::move(o);
    }
    terms_ = merge(std::move(terms_), std::move(o.terms_), false);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    if (o.is_zero()) {
        return *this;
    }
    terms_ = merge(std::move(terms_), o.terms_, true);
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) { return *this = *this * o; }

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial &p, const Monomial &m)
{
    Polynomial out = p;
    if (!m.is_one()) {
        for (auto &t : out.terms_) {
            t.mono = t.mono * m;
        }
    }
    return out;
}

namespace {

// Integer numerators of p after scaling by the lcm of its denominators.
mpz_class scaled_numerators(const Polynomial &p, std::vector<mpz_class> &out)
{
    mpz_class den = 1;
    for (const auto &t : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        out.push_back(t.coeff.get_num() * (den / t.coeff.get_den()));
    }
    return den;
}

} // namespace

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const Polynomial &small = a.size() <= b.size() ? a : b;
    const Polynomial &large = a.size() <= b.size() ? b : a;
    std::vector<mpz_class> cs;
    std::vector<mpz_class> cl;
    const mpz_class den = scaled_numerators(small, cs) * scaled_numerators(large, cl);

    // Each row (one term of `small` times `large`) is sorted, since
    // multiplying by a monomial preserves the order. A heap over the row
    // heads yields the products in decreasing order.
    struct Head {
        Monomial mono;
        std::size_t i;
        std::size_t j;
    };
    auto lower = [](const Head &x, const Head &y) { return compare(x.mono, y.mono) < 0; };
    std::vector<Head> heap;
    heap.reserve(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        heap.push_back({small.terms_[i].mono * large.terms_[0].mono, i, 0});
    }
    std::make_heap(heap.begin(), heap.end(), lower);

    Terms out;
    Monomial current;
    mpz_class acc;
    bool open = false;
    auto flush = [&] {
        if (open && acc != 0) {
            Rational c(acc, den);
            if (den != 1) {
                c.canonicalize();
            }
            out.push_back({std::move(current), std::move(c)});
        }
    };
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), lower);
        Head &top = heap.back();
        if (open && top.mono == current) {
            mpz_addmul(acc.get_mpz_t(), cs[top.i].get_mpz_t(), cl[top.j].get_mpz_t());
        } else {
            flush();
            current = std::move(top.mono);
            acc = cs[top.i] * cl[top.j];
            open = true;
        }
        if (++top.j < large.size()) {
            top.mono = small.terms_[top.i].mono * large.terms_[top.j].mono;
            std::push_heap(heap.begin(), heap.end(), lower);
        } else {
            heap.pop_back();
        }
    }
    flush();
    Polynomial p;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial make_monic(const Polynomial &p)
{
    if (p.is_zero()) {
        return p;
    }
    Rational inv = 1 / p.leading().coeff;
    return p * inv;
}

Polynomial divide_exact(const Polynomial &a, const Polynomial &b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (b.is_constant()) {
        return a * Rational(1 / b.leading().coeff);
    }
    // remainder keyed by monomial, largest first, so each step costs O(|b| log n)
    auto greater = [](const Monomial &x, const Monomial &y) { return compare(x, y) > 0; };
    std::map<Monomial, Rational, decltype(greater)> remainder(greater);
    for (const auto &t : a.terms()) {
        remainder.emplace(t.mono, t.coeff);
    }
    std::vector<Polynomial::Term> quotient;
    const auto &lead = b.leading();
    const Monomial lead_inv = lead.mono.inverse();
    const Rational lead_coeff_inv = 1 / lead.coeff;
    while (!remainder.empty()) {
        auto top = remainder.begin();
        Monomial t = top->first * lead_inv;
        if (!t.is_polynomial()) {
            throw std::domain_error("divide_exact: divisor does not divide dividend");
        }
        Rational c = top->second * lead_coeff_inv;
        remainder.erase(top);
        for (std::size_t i = 1; i < b.size(); ++i) {
            const auto &bt = b.terms()[i];
            Monomial m = t * bt.mono;
            Rational delta = c * bt.coeff;
            auto [it, inserted] = remainder.try_emplace(std::move(m), -delta);
            if (!inserted) {
                it->second -= delta;
                if (sgn(it->second) == 0) {
                    remainder.erase(it);
                }
            }
        }
        quotient.push_back({std::move(t), std::move(c)});
    }
    // quotient terms were produced in decreasing order
    return Polynomial::from_terms(std::move(quotient));
}

} // namespace motivic
