// Multivariate gcd over Q.
//
// Strategy: strip monomial content, then reduce on symbols present in only
// one argument (the gcd must divide every coefficient with respect to such a
// symbol). The remaining pair goes to the heuristic gcd of Char, Geddes and
// Gonnet: evaluate a variable at a large integer, recurse, rebuild the
// candidate xi-adically and keep it if it divides both inputs. In one
// variable xi is large enough for that test to be a proof; with more
// variables the cofactors must also pass a coprimality certificate. When
// the heuristic gives up, a primitive pseudo-remainder sequence (or Euclid
// over Q for one variable) decides.

#include "motivic/polynomial.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>

namespace motivic {

namespace {

using Dense = std::vector<Polynomial>; // coefficients in the main variable, by degree
using DenseQ = std::vector<Rational>;

void trim(Dense &v)
{
    while (!v.empty() && v.back().is_zero()) {
        v.pop_back();
    }
}

void trim(DenseQ &v)
{
    while (!v.empty() && sgn(v.back()) == 0) {
        v.pop_back();
    }
}

DenseQ euclid(DenseQ a, DenseQ b)
{
    trim(a);
    trim(b);
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        // a <- a mod b
        const Rational lead_inv = 1 / b.back();
        while (a.size() >= b.size()) {
            const Rational factor = a.back() * lead_inv;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] -= factor * b[i];
            }
            a.pop_back(); // leading coefficient cancels exactly
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Rational lead_inv = 1 / a.back();
        for (auto &c : a) {
            c *= lead_inv;
        }
    }
    return a;
}

Polynomial univariate_gcd(const Polynomial &a, const Polynomial &b, Var x)
{
    auto to_dense = [x](const Polynomial &p) {
        DenseQ out;
        for (const auto &c : p.coefficients_in(x)) {
            out.push_back(c.constant_term());
        }
        return out;
    };
    DenseQ g = euclid(to_dense(a), to_dense(b));
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (sgn(g[i]) != 0) {
            terms.push_back({Monomial::power(x, static_cast<int>(i)), g[i]});
        }
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial content(const Dense &v)
{
    Polynomial g;
    for (const auto &c : v) {
        if (c.is_zero()) {
            continue;
        }
        g = g.is_zero() ? make_monic(c) : gcd(g, c);
        if (g.is_constant()) {
            return Polynomial(1);
        }
    }
    return g;
}

Dense primitive_part(const Dense &v, const Polynomial &cont)
{
    if (cont.is_constant()) {
        // normalize the rational scale so the leading coefficient is monic
        Rational s = 1 / v.back().leading().coeff;
        Dense out = v;
        for (auto &c : out) {
            c *= s;
        }
        return out;
    }
    Dense out;
    out.reserve(v.size());
    for (const auto &c : v) {
        out.push_back(divide_exact(c, cont));
    }
    return out;
}

Dense pseudo_remainder(Dense r, const Dense &b)
{
    const std::size_t db = b.size() - 1;
    const Polynomial &lc_b = b.back();
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t dr = r.size() - 1;
        const Polynomial lc_r = r.back();
        for (auto &c : r) {
            c = c * lc_b;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            r[i + dr - db] -= lc_r * b[i];
        }
        trim(r);
    }
    return r;
}

// ---- heuristic gcd over Z ----

mpz_class integer_content(const Polynomial &p)
{
    mpz_class g = 0;
    for (const auto &t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    return g;
}

// Scales to integer coefficients with content 1.
Polynomial integer_primitive(const Polynomial &p)
{
    mpz_class l = 1;
    for (const auto &t : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Polynomial q = p * Rational(l);
    return q * Rational(1 / Rational(integer_content(q)));
}

mpz_class max_norm(const Polynomial &p)
{
    mpz_class m = 0;
    for (const auto &t : p.terms()) {
        mpz_class a = abs(t.coeff.get_num());
        if (a > m) {
            m = a;
        }
    }
    return m;
}

// Substitutes integer values for some variables in one pass.
Polynomial substitute(const Polynomial &p, const std::vector<std::pair<Var, mpz_class>> &values)
{
    // powers[i][e] = values[i]^e, grown on demand
    std::vector<std::vector<mpz_class>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        powers[i].push_back(1);
    }
    auto power = [&](std::size_t i, int e) -> const mpz_class & {
        auto &row = powers[i];
        while (row.size() <= static_cast<std::size_t>(e)) {
            row.push_back(row.back() * values[i].second);
        }
        return row[static_cast<std::size_t>(e)];
    };

    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto &t : p.terms()) {
        Rational c = t.coeff;
        std::vector<VarPower> rest;
        for (const auto &f : t.mono.factors()) {
            auto it = std::find_if(values.begin(), values.end(), [&f](const auto &v) { return v.first == f.var; });
            if (it == values.end()) {
                rest.push_back(f);
            } else {
                mpz_mul(c.get_num_mpz_t(), c.get_num_mpz_t(),
                        power(static_cast<std::size_t>(it - values.begin()), f.exp).get_mpz_t());
            }
        }
        if (c.get_den() != 1) {
            c.canonicalize();
        }
        terms.push_back({Monomial::from_factors(std::move(rest)), std::move(c)});
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial evaluate_at(const Polynomial &p, Var x, const mpz_class &xi) { return substitute(p, {{x, xi}}); }

// Recovers H with H(xi) = h from the symmetric xi-adic digits of h's coefficients.
Polynomial interpolate(Polynomial h, Var x, const mpz_class &xi)
{
    const mpz_class half = xi / 2;
    std::vector<Polynomial::Term> terms;
    for (int i = 0; !h.is_zero(); ++i) {
        std::vector<Polynomial::Term> digit;
        std::vector<Polynomial::Term> rest;
        for (const auto &t : h.terms()) {
            mpz_class c = t.coeff.get_num();
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) {
                r -= xi;
            }
            if (r != 0) {
                digit.push_back({t.mono, Rational(r)});
                terms.push_back({t.mono * Monomial::power(x, i), Rational(r)});
            }
            mpz_class q = (c - r) / xi;
            if (q != 0) {
                rest.push_back({t.mono, Rational(q)});
            }
        }
        h = Polynomial::from_terms(std::move(rest));
    }
    return Polynomial::from_terms(std::move(terms));
}

std::optional<Polynomial> quotient(const Polynomial &p, const Polynomial &d)
{
    try {
        return divide_exact(p, d);
    } catch (const std::domain_error &) {
        return std::nullopt;
    }
}

bool divides(const Polynomial &d, const Polynomial &p) { return quotient(p, d).has_value(); }

struct Cofactors {
    Polynomial gcd, f, g; // f = gcd * f and g = gcd * g up to integer content
};

// Common divisor of integer polynomials found by the heuristic, or nullopt
// when it gives up. With one variable the result is the gcd: a missed factor
// k would satisfy |k(xi)| <= |content of the candidate| <= xi/2, while the
// root bound gives |k(xi)| > xi/2 once xi >= 2 ceil(|f|/|lc f|) + 3. With
// more variables the result may be a proper divisor of the gcd.
std::optional<Cofactors> heuristic_gcd(Polynomial f, Polynomial g)
{
    if (f.is_constant() || g.is_constant()) {
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), integer_content(f).get_mpz_t(), integer_content(g).get_mpz_t());
        return Cofactors{Polynomial(Rational(c)), f, g};
    }
    const mpz_class cf = integer_content(f);
    const mpz_class cg = integer_content(g);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    f = f * Rational(1 / Rational(cf));
    g = g * Rational(1 / Rational(cg));

    const Var x = f.variables().front();
    const mpz_class nf = max_norm(f);
    const mpz_class ng = max_norm(g);
    const mpz_class b = 2 * std::min(nf, ng) + 29;
    mpz_class xi = std::min(b, mpz_class(99 * sqrt(b)));
    mpz_class rf, rg;
    mpz_cdiv_q(rf.get_mpz_t(), nf.get_mpz_t(), mpz_class(abs(f.leading().coeff.get_num())).get_mpz_t());
    mpz_cdiv_q(rg.get_mpz_t(), ng.get_mpz_t(), mpz_class(abs(g.leading().coeff.get_num())).get_mpz_t());
    xi = std::max(xi, mpz_class(2 * std::min(rf, rg) + 3));

    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial ff = evaluate_at(f, x, xi);
        Polynomial gg = evaluate_at(g, x, xi);
        if (!ff.is_zero() && !gg.is_zero()) {
            std::optional<Cofactors> h = heuristic_gcd(ff, gg);
            if (!h) {
                return std::nullopt;
            }
            Polynomial candidate = interpolate(h->gcd, x, xi);
            if (!candidate.is_zero()) {
                candidate = candidate * Rational(1 / Rational(integer_content(candidate)));
                if (auto qf = quotient(f, candidate)) {
                    if (auto qg = quotient(g, candidate)) {
                        return Cofactors{candidate * Rational(c), std::move(*qf), std::move(*qg)};
                    }
                }
            }
        }
        xi = 73794 * xi * mpz_class(sqrt(mpz_class(sqrt(xi)))) / 27011;
    }
    return std::nullopt;
}

// Coefficients of p as a polynomial in the variables outside `keep`.
std::vector<Polynomial> coefficients_over(const Polynomial &p, const std::vector<Var> &keep)
{
    std::map<Monomial, std::vector<Polynomial::Term>, MonomialLess> groups;
    for (const auto &t : p.terms()) {
        std::vector<VarPower> inner;
        std::vector<VarPower> outer;
        for (const VarPower &f : t.mono.factors()) {
            (std::binary_search(keep.begin(), keep.end(), f.var, var_less) ? inner : outer).push_back(f);
        }
        groups[Monomial::from_factors(std::move(outer))].push_back(
            {Monomial::from_factors(std::move(inner)), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(groups.size());
    for (auto &[mono, terms] : groups) {
        out.push_back(Polynomial::from_terms(std::move(terms)));
    }
    // small coefficients first so the gcd collapses early
    std::stable_sort(out.begin(), out.end(),
                     [](const Polynomial &x, const Polynomial &y) { return x.size() < y.size(); });
    return out;
}

Polynomial gcd_with_all(Polynomial g, const std::vector<Polynomial> &others)
{
    for (const auto &c : others) {
        if (c.is_zero()) {
            continue;
        }
        g = gcd(g, c);
        if (g.is_constant()) {
            return Polynomial(1);
        }
    }
    return make_monic(g);
}

// gcd(small, big) where big has variables outside `keep`, the variables of
// small. The gcd lives in `keep`, so it divides the image of big under any
// integer substitution of the others; that image usually proves coprimality
// at once, and otherwise yields a candidate confirmed by trial division.
Polynomial gcd_one_sided(const Polynomial &small, const Polynomial &big, const std::vector<Var> &keep)
{
    std::vector<std::pair<Var, mpz_class>> values;
    long value = 2;
    for (Var v : big.variables()) {
        if (!std::binary_search(keep.begin(), keep.end(), v, var_less)) {
            values.emplace_back(v, value++);
        }
    }
    const Polynomial image = substitute(big, values);
    if (!image.is_zero()) {
        Polynomial h = gcd(small, image);
        if (h.is_constant()) {
            return Polynomial(1);
        }
        if (divides(h, big)) {
            return make_monic(h);
        }
    }
    return gcd_with_all(small, coefficients_over(big, keep));
}

// Proves that a and b share no factor of positive degree. Such a factor D
// involves some shared variable v and keeps its degree in v under any
// substitution of the other variables that keeps lc_v(a) nonzero, so a
// coprime univariate image for every shared variable rules it out. False
// means only that no image settled the question.
bool certified_coprime(const Polynomial &a, const Polynomial &b)
{
    const auto va = a.variables();
    const auto vb = b.variables();
    std::vector<Var> all;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(all), var_less);
    for (Var v : va) {
        if (!std::binary_search(vb.begin(), vb.end(), v, var_less)) {
            continue;
        }
        bool settled = false;
        for (long start : {2L, 13L, -7L}) {
            std::vector<std::pair<Var, mpz_class>> values;
            long value = start;
            for (Var w : all) {
                if (w != v) {
                    values.emplace_back(w, value++);
                }
            }
            const Polynomial ia = substitute(a, values);
            if (ia.max_degree(v) != a.max_degree(v)) {
                continue;
            }
            if (gcd(ia, substitute(b, values)).is_constant()) {
                settled = true;
                break;
            }
        }
        if (!settled) {
            return false;
        }
    }
    return true;
}

// Both arguments nonzero, non-constant, free of monomial content.
Polynomial gcd_stripped(const Polynomial &a, const Polynomial &b)
{
    if (a == b) {
        return make_monic(a);
    }
    const auto va = a.variables();
    const auto vb = b.variables();
    // a variable present on one side only cannot occur in the gcd
    auto one_sided = [](const std::vector<Var> &x, const std::vector<Var> &y) {
        return std::any_of(x.begin(), x.end(),
                           [&y](Var v) { return !std::binary_search(y.begin(), y.end(), v, var_less); });
    };
    if (one_sided(va, vb)) {
        return gcd_one_sided(b, a, vb);
    }
    if (one_sided(vb, va)) {
        return gcd_one_sided(a, b, va);
    }
    if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b))) {
        if (va.size() == 1 || certified_coprime(h->f, h->g)) {
            return make_monic(h->gcd);
        }
    }
    if (va.size() == 1) {
        return univariate_gcd(a, b, va.front());
    }

    // main variable: smallest combined degree keeps the remainder sequence short
    Var x = va.front();
    int best = a.max_degree(x) + b.max_degree(x);
    for (Var v : va) {
        int d = a.max_degree(v) + b.max_degree(v);
        if (d < best) {
            best = d;
            x = v;
        }
    }

    Dense da = a.coefficients_in(x);
    Dense db = b.coefficients_in(x);
    const Polynomial ca = content(da);
    const Polynomial cb = content(db);
    const Polynomial cg = gcd(ca, cb);
    Dense pa = primitive_part(da, ca);
    Dense pb = primitive_part(db, cb);
    if (pa.size() < pb.size()) {
        std::swap(pa, pb);
    }

    Dense g;
    while (true) {
        Dense r = pseudo_remainder(pa, pb);
        if (r.empty()) {
            g = pb;
            break;
        }
        if (r.size() == 1) {
            g = Dense{Polynomial(1)};
            break;
        }
        pa = std::move(pb);
        pb = primitive_part(r, content(r));
    }
    if (g.size() > 1) {
        g = primitive_part(g, content(g));
    }
    return make_monic(cg * Polynomial::from_coefficients(x, g));
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (!a.is_polynomial() || !b.is_polynomial()) {
        throw std::domain_error("gcd: Laurent input; clear monomial units first");
    }
    if (a.is_constant() || b.is_constant()) {
        return Polynomial(1);
    }
    const Monomial ma = a.monomial_content();
    const Monomial mb = b.monomial_content();
    const Monomial mg = Monomial::componentwise_min(ma, mb);
    const Polynomial a1 = a * ma.inverse();
    const Polynomial b1 = b * mb.inverse();
    if (a1.is_constant() || b1.is_constant()) {
        return Polynomial::term(mg, Rational(1));
    }
    return gcd_stripped(a1, b1) * mg;
}

} // namespace motivic
