#include "motivic/verify.hpp"

#include "motivic/text.hpp"

#include <functional>
#include <stdexcept>

namespace motivic::verify {

long Rng::uniform(long lo, long hi)
{
    if (hi < lo) {
        throw std::invalid_argument("empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Polynomial random_laurent(Rng &rng, const ScalarShape &shape)
{
    std::vector<Polynomial::Term> terms;
    const long count = rng.uniform(1, shape.max_terms);
    for (long t = 0; t < count; ++t) {
        std::vector<VarPower> factors;
        if (int e = static_cast<int>(rng.uniform(-shape.u_range, shape.u_range)); e != 0) {
            factors.push_back({u_var(), e});
        }
        for (int j = 1; j <= shape.atom_count; ++j) {
            if (rng.chance(50)) {
                continue;
            }
            factors.push_back({atom_var("X", j), static_cast<int>(rng.uniform(1, shape.max_atom_exp))});
        }
        long c = rng.uniform(-shape.coeff_bound, shape.coeff_bound);
        if (c == 0) {
            c = 1;
        }
        Rational coeff(c, rng.uniform(1, 3));
        coeff.canonicalize();
        terms.push_back({Monomial::from_factors(std::move(factors)), coeff});
    }
    return Polynomial::from_terms(std::move(terms));
}

MotiveScalar random_scalar(Rng &rng, const ScalarShape &shape)
{
    Polynomial num = random_laurent(rng, shape);
    if (!rng.chance(shape.fraction_percent)) {
        return MotiveScalar::normalize(num, Polynomial(1));
    }
    Polynomial den = Polynomial(1);
    if (shape.u_denominators) {
        for (long f = rng.uniform(1, shape.max_den_factors); f > 0; --f) {
            den *= Polynomial::variable(u_var(), static_cast<int>(rng.uniform(1, shape.max_den_degree))) + Polynomial(rng.chance(50) ? 1 : -1);
        }
    } else {
        den = random_laurent(rng, shape);
    }
    if (den.is_zero()) {
        den = Polynomial(1);
    }
    return MotiveScalar::normalize(num, den);
}

QSeries random_series(Rng &rng, std::size_t order, const ScalarShape &shape)
{
    QSeries f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        if (rng.chance(shape.density_percent)) {
            f.set(n, random_scalar(rng, shape));
        }
    }
    return f;
}

TorusElement random_element(Rng &rng, const Window &window, Sector sector, const ScalarShape &shape, bool nilpotent,
                            int max_terms)
{
    std::vector<GradedClass> pool;
    for (const GradedClass &v : window.classes()) {
        bool rank_ok = (sector == Sector::Gamma0) == (v.rank == 0);
        if (rank_ok && !(nilpotent && v.rank == 0 && v.a == 0)) {
            pool.push_back(v);
        }
    }
    TorusElement x(window);
    if (pool.empty()) {
        return x;
    }
    const long count = rng.uniform(1, max_terms);
    for (long t = 0; t < count; ++t) {
        const GradedClass &v = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        x.add_term(v, random_scalar(rng, shape));
    }
    return x;
}

bool SuiteResult::passed() const
{
    for (const auto &p : properties) {
        if (!p.passed()) {
            return false;
        }
    }
    return true;
}

namespace {

enum class Outcome { Pass, Fail, Skip };

// A generated test case: homogeneous values that can be shrunk plus fixed integer parameters.
template <class T> struct Case {
    std::vector<T> values;
    std::vector<long> params;
};

template <class T> struct Property {
    std::string name;
    std::function<Case<T>(Rng &)> generate;
    std::function<Outcome(const Case<T> &)> check;
};

std::string show(const MotiveScalar &s) { return to_string(s); }
std::string show(const QSeries &f) { return to_string(f); }

std::string show(const TorusElement &x)
{
    std::string out;
    for (const auto &[v, c] : x.terms()) {
        out += (out.empty() ? "" : " + ") + ("(" + to_string(c) + ") x^" + to_string(v));
    }
    return out.empty() ? "0" : out;
}

template <class T> std::string show(const Case<T> &c)
{
    std::string out;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        out += (i ? "; " : "") + ("#" + std::to_string(i) + " = " + show(c.values[i]));
    }
    for (std::size_t i = 0; i < c.params.size(); ++i) {
        out += "; k" + std::to_string(i) + " = " + std::to_string(c.params[i]);
    }
    return out;
}

std::vector<MotiveScalar> smaller(const MotiveScalar &s)
{
    std::vector<MotiveScalar> out;
    if (s.is_zero()) {
        return out;
    }
    out.emplace_back();
    const auto &num = s.numerator().terms();
    const auto &den = s.denominator().terms();
    if (!s.denominator().is_constant()) {
        out.push_back(MotiveScalar::normalize(s.numerator(), Polynomial(1)));
    }
    for (std::size_t i = 0; num.size() > 1 && i < num.size(); ++i) {
        out.push_back(MotiveScalar::normalize(s.numerator() - Polynomial::term(num[i].mono, num[i].coeff), s.denominator()));
    }
    for (std::size_t i = 0; den.size() > 1 && i < den.size(); ++i) {
        out.push_back(MotiveScalar::normalize(s.numerator(), s.denominator() - Polynomial::term(den[i].mono, den[i].coeff)));
    }
    return out;
}

std::vector<QSeries> smaller(const QSeries &f)
{
    std::vector<QSeries> out;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        for (const MotiveScalar &c : smaller(f[n])) {
            QSeries g = f;
            g.set(n, c);
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<TorusElement> smaller(const TorusElement &x)
{
    std::vector<TorusElement> out;
    for (const auto &[v, c] : x.terms()) {
        for (const MotiveScalar &d : smaller(c)) {
            TorusElement y = x;
            y.add_term(v, d - c);
            out.push_back(std::move(y));
        }
    }
    return out;
}

template <class T> Outcome guarded(const Property<T> &prop, const Case<T> &c)
{
    try {
        return prop.check(c);
    } catch (const std::exception &) {
        return Outcome::Fail;
    }
}

// Greedy shrinking: take the first smaller candidate that still fails, repeat.
template <class T> Case<T> shrink(const Property<T> &prop, Case<T> failing)
{
    for (int round = 0; round < 200; ++round) {
        bool progressed = false;
        for (std::size_t i = 0; i < failing.values.size() && !progressed; ++i) {
            for (T &candidate : smaller(failing.values[i])) {
                Case<T> trial = failing;
                trial.values[i] = std::move(candidate);
                if (guarded(prop, trial) == Outcome::Fail) {
                    failing = std::move(trial);
                    progressed = true;
                    break;
                }
            }
        }
        if (!progressed) {
            break;
        }
    }
    return failing;
}

template <class T> PropertyResult run(Rng &rng, std::size_t cases, const Property<T> &prop)
{
    PropertyResult result{prop.name, 0, 0, std::nullopt};
    for (std::size_t i = 0; i < cases; ++i) {
        Case<T> c;
        try {
            c = prop.generate(rng);
        } catch (const std::exception &e) {
            ++result.cases;
            result.counterexample = "case " + std::to_string(i) + ": generator threw: " + e.what();
            break;
        }
        Outcome outcome = guarded(prop, c);
        ++result.cases;
        if (outcome == Outcome::Skip) {
            ++result.skipped;
        } else if (outcome == Outcome::Fail) {
            Case<T> minimal = shrink(prop, std::move(c));
            std::string detail = show(minimal);
            try {
                prop.check(minimal);
            } catch (const std::exception &e) {
                detail += "; threw: " + std::string(e.what());
            }
            result.counterexample = detail;
            break;
        }
    }
    return result;
}

// A single deterministic check reported as a property.
PropertyResult fixed(const std::string &name, std::size_t cases, const std::function<std::optional<std::string>()> &body)
{
    PropertyResult result{name, cases, 0, std::nullopt};
    try {
        result.counterexample = body();
    } catch (const std::exception &e) {
        result.counterexample = std::string("threw: ") + e.what();
    }
    return result;
}

Outcome verdict(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

template <class T> std::function<Case<T>(Rng &)> draw(std::size_t count, std::function<T(Rng &)> one,
                                                      std::vector<std::pair<long, long>> params = {})
{
    return [count, one, params](Rng &rng) {
        Case<T> c;
        for (std::size_t i = 0; i < count; ++i) {
            c.values.push_back(one(rng));
        }
        for (auto [lo, hi] : params) {
            c.params.push_back(rng.uniform(lo, hi));
        }
        return c;
    };
}

Rational random_rational(Rng &rng)
{
    long num = rng.uniform(-40, 40);
    Rational r(num == 0 ? 17 : num, rng.uniform(1, 9));
    r.canonicalize();
    return r;
}

EvaluationPoint random_point(Rng &rng, const ScalarShape &shape)
{
    EvaluationPoint p = make_point();
    p[u_var()] = random_rational(rng);
    for (int j = 1; j <= shape.atom_count; ++j) {
        p[atom_var("X", j)] = random_rational(rng);
    }
    return p;
}

std::size_t or_default(std::size_t requested, std::size_t fallback) { return requested ? requested : fallback; }

} // namespace

SuiteResult ring_suite(const SuiteOptions &opts)
{
    Rng rng(opts.seed);
    const std::size_t cases = or_default(opts.cases, 200);
    ScalarShape shape;
    auto scalar = [shape](Rng &r) { return random_scalar(r, shape); };
    auto laurent = [shape](Rng &r) { return MotiveScalar(random_laurent(r, shape)); };

    SuiteResult out{"ring", opts.seed, {}};
    out.properties.push_back(run<MotiveScalar>(
        rng, cases,
        {"normalize is idempotent and value preserving", draw<MotiveScalar>(3, laurent),
         [&rng, shape](const Case<MotiveScalar> &c) {
             const Polynomial &p = c.values[0].numerator();
             const Polynomial &q = c.values[1].numerator();
             const Polynomial &r = c.values[2].numerator();
             if (q.is_zero() || r.is_zero()) {
                 return Outcome::Skip;
             }
             MotiveScalar n = MotiveScalar::normalize(p, q);
             if (!(MotiveScalar::normalize(n.numerator(), n.denominator()) == n)) {
                 return Outcome::Fail;
             }
             if (!(MotiveScalar::normalize(p * r, q * r) == n)) {
                 return Outcome::Fail;
             }
             EvaluationPoint pt = random_point(rng, shape);
             Rational qv = eval_at(q, pt);
             if (qv == 0) {
                 return Outcome::Skip;
             }
             return verdict(eval_at(n, pt) == eval_at(p, pt) / qv);
         }}));
    out.properties.push_back(run<MotiveScalar>(rng, cases,
                                               {"addition is commutative and associative", draw<MotiveScalar>(3, scalar),
                                                [](const Case<MotiveScalar> &c) {
                                                    const auto &[a, b, d] = std::tie(c.values[0], c.values[1], c.values[2]);
                                                    return verdict(a + b == b + a && (a + b) + d == a + (b + d) &&
                                                                   (a - a).is_zero());
                                                }}));
    out.properties.push_back(run<MotiveScalar>(rng, cases,
                                               {"multiplication is associative and distributive",
                                                draw<MotiveScalar>(3, scalar), [](const Case<MotiveScalar> &c) {
                                                    const auto &[a, b, d] = std::tie(c.values[0], c.values[1], c.values[2]);
                                                    return verdict(a * b == b * a && (a * b) * d == a * (b * d) &&
                                                                   a * (b + d) == a * b + a * d);
                                                }}));
    out.properties.push_back(run<MotiveScalar>(rng, cases,
                                               {"nonzero scalars are invertible", draw<MotiveScalar>(2, scalar),
                                                [](const Case<MotiveScalar> &c) {
                                                    const auto &[a, b] = std::tie(c.values[0], c.values[1]);
                                                    if (a.is_zero()) {
                                                        return Outcome::Skip;
                                                    }
                                                    return verdict((a * a.inverse()).is_one() && (b * a) / a == b);
                                                }}));
    out.properties.push_back(run<MotiveScalar>(
        rng, cases,
        {"psi^1 is the identity", draw<MotiveScalar>(1, scalar),
         [](const Case<MotiveScalar> &c) { return verdict(adams(1, c.values[0]) == c.values[0]); }}));
    out.properties.push_back(run<MotiveScalar>(
        rng, cases,
        {"psi^k is a ring homomorphism", draw<MotiveScalar>(2, scalar, {{1, 3}}), [](const Case<MotiveScalar> &c) {
             const auto &[a, b] = std::tie(c.values[0], c.values[1]);
             int k = static_cast<int>(c.params[0]);
             return verdict(adams(k, a * b) == adams(k, a) * adams(k, b) && adams(k, a + b) == adams(k, a) + adams(k, b));
         }}));
    out.properties.push_back(run<MotiveScalar>(rng, cases,
                                               {"psi^j psi^k = psi^{jk}", draw<MotiveScalar>(1, scalar, {{1, 3}, {1, 3}}),
                                                [](const Case<MotiveScalar> &c) {
                                                    int j = static_cast<int>(c.params[0]);
                                                    int k = static_cast<int>(c.params[1]);
                                                    return verdict(adams(j, adams(k, c.values[0])) ==
                                                                   adams(j * k, c.values[0]));
                                                }}));
    out.properties.push_back(run<MotiveScalar>(
        rng, cases,
        {"euler o psi^k = euler", draw<MotiveScalar>(1, scalar, {{1, 4}, {-10, 10}}), [](const Case<MotiveScalar> &c) {
             EulerConfig cfg = EulerConfig::numeric("X", Rational(c.params[1]));
             std::optional<MotiveScalar> plain;
             try {
                 plain = euler_specialize(c.values[0], cfg);
             } catch (const std::domain_error &) {
                 return Outcome::Skip;
             }
             return verdict(euler_specialize(adams(static_cast<int>(c.params[0]), c.values[0]), cfg) == *plain);
         }}));
    out.properties.push_back(run<MotiveScalar>(
        rng, cases,
        {"canonical equality agrees with 5-point evaluation",
         [shape](Rng &r) {
             Case<MotiveScalar> c;
             MotiveScalar a = random_scalar(r, shape);
             MotiveScalar s = random_scalar(r, shape);
             MotiveScalar b;
             switch (r.uniform(0, 3)) {
             case 0: // same value through a different route
                 b = s.is_zero() ? a : (a * s + s) / s - MotiveScalar(1);
                 break;
             case 1:
                 b = s.is_zero() ? a
                                 : MotiveScalar::normalize(a.numerator() * s.numerator(), a.denominator() * s.numerator());
                 break;
             case 2: // small perturbation
                 b = a + MotiveScalar(Rational(1, 1000)) * MotiveScalar::u(static_cast<int>(r.uniform(-2, 2)));
                 break;
             default:
                 b = s;
             }
             c.values = {a, b};
             c.params = {r.uniform(0, 1L << 30)};
             return c;
         },
         [shape](const Case<MotiveScalar> &c) {
             const auto &[a, b] = std::tie(c.values[0], c.values[1]);
             Rng points(static_cast<std::uint64_t>(c.params[0]));
             bool agree = true;
             int evaluated = 0;
             for (int tries = 0; evaluated < 5 && tries < 50; ++tries) {
                 EvaluationPoint pt = random_point(points, shape);
                 try {
                     agree = agree && eval_at(a, pt) == eval_at(b, pt);
                     ++evaluated;
                 } catch (const std::domain_error &) {
                 }
             }
             if (evaluated < 5) {
                 return Outcome::Skip;
             }
             return verdict((a == b) == agree);
         }}));
    return out;
}

namespace {

// Exp through the product over m of exp(sum_k psi^k(b_m) q^{km} / k),
// one factor per coefficient, as an independent route to the bridge.
QSeries product_exp(const QSeries &b)
{
    const std::size_t order = b.order();
    QSeries total = QSeries::one(order);
    for (std::size_t m = 1; m <= order; ++m) {
        if (b[m].is_zero()) {
            continue;
        }
        QSeries factor_log(order);
        for (std::size_t k = 1; k * m <= order; ++k) {
            factor_log.set(k * m, adams(static_cast<int>(k), b[m]) * MotiveScalar(Rational(1, static_cast<long>(k))));
        }
        total = total * series_exp(factor_log);
    }
    return total;
}

} // namespace

SuiteResult plethystic_suite(const SuiteOptions &opts)
{
    Rng rng(opts.seed);
    const std::size_t cases = or_default(opts.cases, 50);
    constexpr std::size_t order = 8;
    ScalarShape shape;
    shape.max_terms = 2;
    shape.atom_count = 3;
    shape.max_atom_exp = 1;
    shape.u_range = 2;
    shape.fraction_percent = 15;
    shape.u_denominators = true;
    shape.max_den_factors = 1;
    shape.max_den_degree = 2;
    shape.density_percent = 50;
    auto series = [shape](Rng &r) { return random_series(r, order, shape); };

    SuiteResult out{"plethystic", opts.seed, {}};
    out.properties.push_back(run<QSeries>(rng, cases,
                                          {"Log o Exp = id", draw<QSeries>(1, series), [](const Case<QSeries> &c) {
                                               return verdict(plethystic_log(plethystic_exp(c.values[0])) == c.values[0]);
                                           }}));
    out.properties.push_back(run<QSeries>(rng, cases,
                                          {"Exp(f + g) = Exp(f) Exp(g)", draw<QSeries>(2, series),
                                           [](const Case<QSeries> &c) {
                                               const auto &[f, g] = std::tie(c.values[0], c.values[1]);
                                               return verdict(plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g));
                                           }}));
    out.properties.push_back(run<QSeries>(rng, cases,
                                          {"exp of the Adams bridge is the product-form Exp", draw<QSeries>(1, series),
                                           [](const Case<QSeries> &c) {
                                               const QSeries &b = c.values[0];
                                               QSeries a = exp_coeff_bridge(b);
                                               return verdict(series_exp(a) == product_exp(b) && bridge_inverse(a) == b);
                                           }}));
    out.properties.push_back(run<QSeries>(rng, cases,
                                          {"log o exp = id", draw<QSeries>(1, series), [](const Case<QSeries> &c) {
                                               return verdict(series_log(series_exp(c.values[0])) == c.values[0]);
                                           }}));
    return out;
}

namespace {

// chi(v, w) = v^T M w over coordinates (a, beta..., rank).
long matrix_pairing(const PairingForm::Matrix &m, const GradedClass &v, const GradedClass &w)
{
    auto coords = [](const GradedClass &x) {
        std::vector<long> c{x.a};
        c.insert(c.end(), x.beta.begin(), x.beta.end());
        c.push_back(x.rank);
        return c;
    };
    std::vector<long> cv = coords(v);
    std::vector<long> cw = coords(w);
    long total = 0;
    for (std::size_t i = 0; i < cv.size(); ++i) {
        for (std::size_t j = 0; j < cw.size(); ++j) {
            total += cv[i] * m[i][j] * cw[j];
        }
    }
    return total;
}

// Acceptance condition checked by brute force over the window.
bool admissible(const PairingForm::Matrix &m, const Window &window)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[i][j] != -m[j][i]) {
                return false;
            }
        }
    }
    for (const GradedClass &v : window.classes()) {
        if (v.rank != 1) {
            continue;
        }
        for (int n = 1; n <= 3; ++n) {
            if (matrix_pairing(m, GradedClass::gamma0(n, window.curve_rank()), v) != n) {
                return false;
            }
        }
    }
    return true;
}

// The brute-force twisted product coefficient at w.
MotiveScalar product_coefficient(const TorusElement &x, const TorusElement &y, const GradedClass &w,
                                 const PairingForm &form)
{
    MotiveScalar total;
    for (const auto &[v1, c1] : x.terms()) {
        for (const auto &[v2, c2] : y.terms()) {
            if (v1.rank + v2.rank > 1) {
                continue;
            }
            GradedClass s = v1 + v2;
            if (s == w) {
                total += c1 * c2 * MotiveScalar::lefschetz_half_power(static_cast<int>(form(v1, v2)));
            }
        }
    }
    return total;
}

} // namespace

SuiteResult torus_suite(const SuiteOptions &opts)
{
    Rng rng(opts.seed);
    const std::size_t cases = or_default(opts.cases, 25);
    const Window window = opts.geometry.window;
    const PairingForm form = opts.geometry.pairing;
    ScalarShape shape;
    shape.max_terms = 2;
    shape.fraction_percent = 20;

    auto triple = [window, shape](Rng &r) {
        // at most one rank 1 factor, in a random position
        Case<TorusElement> c;
        const long slot = r.uniform(0, 3);
        for (long i = 0; i < 3; ++i) {
            c.values.push_back(random_element(r, window, i == slot ? Sector::Gamma1 : Sector::Gamma0, shape));
        }
        return c;
    };

    SuiteResult out{"torus", opts.seed, {}};
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"*-associativity", triple, [form](const Case<TorusElement> &c) {
                                                    const auto &[x, y, z] = std::tie(c.values[0], c.values[1], c.values[2]);
                                                    return verdict(star_mul(star_mul(x, y, form), z, form) ==
                                                                   star_mul(x, star_mul(y, z, form), form));
                                                }}));
    out.properties.push_back(fixed("commutator identity for n = 1..6", 0, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= std::min(6, window.depth()); ++n) {
            TorusElement e = TorusElement::monomial(window, GradedClass::gamma0(n, window.curve_rank()));
            MotiveScalar weight = MotiveScalar::lefschetz_half_power(n) - MotiveScalar::lefschetz_half_power(-n);
            for (const GradedClass &v : window.classes()) {
                if (v.rank != 1) {
                    continue;
                }
                TorusElement x = TorusElement::monomial(window, v);
                if (!(bracket(e, x, form) == untwisted_mul(e, x) * weight)) {
                    return "n = " + std::to_string(n) + ", v = " + to_string(v);
                }
            }
        }
        return std::nullopt;
    }));
    out.properties.back().cases = static_cast<std::size_t>(std::min(6, window.depth()));
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"Jacobi identity", triple, [form](const Case<TorusElement> &c) {
                                                    const auto &[x, y, z] = std::tie(c.values[0], c.values[1], c.values[2]);
                                                    TorusElement sum = bracket(x, bracket(y, z, form), form) +
                                                                       bracket(y, bracket(z, x, form), form) +
                                                                       bracket(z, bracket(x, y, form), form);
                                                    return verdict(sum.is_zero());
                                                }}));
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"bracket antisymmetry", triple, [form](const Case<TorusElement> &c) {
                                                    const auto &[x, y] = std::tie(c.values[0], c.values[1]);
                                                    return verdict(bracket(x, y, form) == -bracket(y, x, form));
                                                }}));
    out.properties.push_back(run<TorusElement>(
        rng, cases,
        {"product is graded by class", triple, [form, window](const Case<TorusElement> &c) {
             const auto &[x, y] = std::tie(c.values[0], c.values[1]);
             TorusElement p = star_mul(x, y, form);
             for (const GradedClass &w : window.classes()) {
                 if (!(p.extract(w) == product_coefficient(x, y, w, form))) {
                     return Outcome::Fail;
                 }
             }
             return Outcome::Pass;
         }}));
    out.properties.push_back(fixed("pairing-constraint rejection", cases, [&]() -> std::optional<std::string> {
        const std::size_t dim = window.curve_rank() + 2;
        for (std::size_t i = 0; i < cases; ++i) {
            PairingForm::Matrix m(dim, std::vector<long>(dim, 0));
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t s = r + 1; s < dim; ++s) {
                    m[r][s] = rng.uniform(-2, 2);
                    m[s][r] = rng.chance(85) ? -m[r][s] : rng.uniform(-2, 2);
                }
            }
            if (rng.chance(50)) {
                m[0][dim - 1] = -1;
                m[dim - 1][0] = 1;
            }
            bool accepted = true;
            try {
                PairingForm::from_matrix(m);
            } catch (const std::invalid_argument &) {
                accepted = false;
            }
            if (accepted != admissible(m, window)) {
                std::string text;
                for (const auto &row : m) {
                    for (long e : row) {
                        text += std::to_string(e) + " ";
                    }
                    text += "/ ";
                }
                return "matrix " + text + (accepted ? "accepted" : "rejected");
            }
        }
        return std::nullopt;
    }));
    auto adjoint_case = [window, shape](Rng &r) {
        Case<TorusElement> c;
        c.values.push_back(random_element(r, window, Sector::Gamma0, shape, true));
        c.values.push_back(random_element(r, window, Sector::Gamma0, shape));
        c.values.push_back(random_element(r, window, Sector::Gamma1, shape));
        return c;
    };
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"exp({e,-}) is multiplicative", adjoint_case,
                                                [form](const Case<TorusElement> &c) {
                                                    const auto &[e, x, y] = std::tie(c.values[0], c.values[1], c.values[2]);
                                                    if (!e.supported_in_gamma0()) {
                                                        return Outcome::Skip;
                                                    }
                                                    return verdict(exp_adjoint(e, star_mul(x, y, form), form) ==
                                                                   star_mul(exp_adjoint(e, x, form),
                                                                            exp_adjoint(e, y, form), form));
                                                }}));
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"exp({e,-})(x) = exp(e) * x * exp(-e)", adjoint_case,
                                                [form](const Case<TorusElement> &c) {
                                                    const auto &[e, y] = std::tie(c.values[0], c.values[2]);
                                                    TorusElement lhs = exp_adjoint(e, y, form);
                                                    TorusElement rhs =
                                                        star_mul(star_mul(exp_gamma0(e), y, form), exp_gamma0(-e), form);
                                                    return verdict(lhs == rhs);
                                                }}));
    out.properties.push_back(run<TorusElement>(rng, cases,
                                               {"log o exp = id in Gamma^0", adjoint_case,
                                                [](const Case<TorusElement> &c) {
                                                    return verdict(log_gamma0(exp_gamma0(c.values[0])) == c.values[0]);
                                                }}));
    return out;
}

SuiteResult wallcross_suite(const SuiteOptions &opts)
{
    const GeometryConfig &base = opts.geometry;
    SuiteResult out{"wallcross", opts.seed, {}};

    auto failing_classes = [](const WallcrossReport &report) -> std::optional<std::string> {
        for (const ClassCheck &check : report.per_class) {
            if (!check.equal) {
                return "class " + to_string(check.cls) + ": lhs " + to_string(check.lhs) + ", rhs " + to_string(check.rhs);
            }
        }
        return std::nullopt;
    };

    std::optional<WallcrossReport> symbolic;
    out.properties.push_back(fixed("wall-crossing closure, symbolic PT atoms", 1, [&]() {
        GeometryConfig cfg = base;
        cfg.pt_mode = GeometryConfig::PtMode::Symbolic;
        symbolic = wallcross_verify(cfg);
        return failing_classes(*symbolic);
    }));
    out.properties.push_back(fixed("DT coefficients are beta-graded", 1, [&]() -> std::optional<std::string> {
        if (!symbolic) {
            return "no symbolic report";
        }
        return symbolic->beta_graded ? std::nullopt : std::optional<std::string>("a coefficient mixes curve classes");
    }));
    out.properties.push_back(fixed("wall-crossing closure, unit PT series", 1, [&]() -> std::optional<std::string> {
        GeometryConfig cfg = base;
        cfg.pt_mode = GeometryConfig::PtMode::Unit;
        WallcrossReport report = wallcross_verify(cfg);
        if (auto failure = failing_classes(report)) {
            return failure;
        }
        QSeries d = bbs_degree0_series(cfg, static_cast<std::size_t>(cfg.window.depth()));
        for (const ClassCheck &check : report.per_class) {
            bool on_axis = check.cls.a <= 0 && std::all_of(check.cls.beta.begin(), check.cls.beta.end(),
                                                           [](int b) { return b == 0; });
            MotiveScalar expected = on_axis ? d[static_cast<std::size_t>(-check.cls.a)] : MotiveScalar();
            if (!(check.lhs == expected)) {
                return "class " + to_string(check.cls) + " is not the degree-0 coefficient";
            }
        }
        return std::nullopt;
    }));
    out.properties.push_back(fixed("zeroed pairing leaves A_PT unchanged", 1, [&]() -> std::optional<std::string> {
        TorusElement a_pt = pt_element(base);
        if (!(exp_adjoint(epsilon_element(base), a_pt, PairingForm::trivial()) == a_pt)) {
            return "trivial pairing moved A_PT";
        }
        return std::nullopt;
    }));
    out.properties.push_back(fixed("conjugation form E * A_PT * E^-1", 1, [&]() -> std::optional<std::string> {
        if (!conjugation_form_holds(base, pt_element(base))) {
            return "exp({eps,-})(A_PT) differs from E * A_PT * E^-1";
        }
        return std::nullopt;
    }));
    out.properties.push_back(fixed("N_n^mot: series inversion equals closed form", base.order,
                                   [&]() -> std::optional<std::string> {
                                       std::vector<MotiveScalar> series = n_invariants_from_series(base, base.order);
                                       EulerConfig euler = base.euler_config();
                                       for (std::size_t i = 0; i < series.size(); ++i) {
                                           int n = static_cast<int>(i + 1);
                                           MotiveScalar closed = n_invariant_closed_form(base, n);
                                           if (!(closed == series[i])) {
                                               return "n = " + std::to_string(n) + ": " + to_string(closed) + " vs " +
                                                      to_string(series[i]);
                                           }
                                           if (!(euler_specialize(closed, euler) == euler_n_invariant(base, n))) {
                                               return "n = " + std::to_string(n) + ": Euler value differs";
                                           }
                                       }
                                       return std::nullopt;
                                   }));
    return out;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"ring", "plethystic", "torus", "wallcross", "all"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string &name, const SuiteOptions &opts)
{
    if (name == "ring") {
        return {ring_suite(opts)};
    }
    if (name == "plethystic") {
        return {plethystic_suite(opts)};
    }
    if (name == "torus") {
        return {torus_suite(opts)};
    }
    if (name == "wallcross") {
        return {wallcross_suite(opts)};
    }
    if (name == "all") {
        return {ring_suite(opts), plethystic_suite(opts), torus_suite(opts), wallcross_suite(opts)};
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace motivic::verify
