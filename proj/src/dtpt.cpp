#include "motivic/dtpt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace motivic {

EulerConfig GeometryConfig::euler_config() const
{
    return chi ? EulerConfig::numeric(generator, *chi) : EulerConfig::symbolic(generator);
}

void GeometryConfig::validate() const
{
    if (order < 1) {
        throw std::invalid_argument("q-order N must be at least 1");
    }
    if (!is_valid_base(generator)) {
        throw std::invalid_argument("invalid generator name: " + generator);
    }
    if (!is_valid_base(pt_prefix)) {
        throw std::invalid_argument("invalid PT atom prefix: " + pt_prefix);
    }
    window.validate();
}

MotiveScalar degree0_seed(const GeometryConfig &cfg)
{
    return MotiveScalar::lefschetz_half_power(-3) * MotiveScalar::atom(cfg.generator);
}

MotiveScalar bracket_weight(int n)
{
    if (n < 1) {
        throw std::invalid_argument("bracket weight needs n >= 1");
    }
    auto lhalf = [](int k) { return MotiveScalar::lefschetz_half_power(k); };
    return (lhalf(n) - lhalf(-n)) / (lhalf(1) - lhalf(-1));
}

QSeries bbs_argument(const GeometryConfig &cfg, std::size_t order)
{
    // numerator -L^{-3/2}[X] q, denominator 1 + (L^{1/2} + L^{-1/2}) q + q^2
    std::vector<MotiveScalar> num{MotiveScalar(), -degree0_seed(cfg)};
    std::vector<MotiveScalar> den{
        MotiveScalar(1), MotiveScalar::lefschetz_half_power(1) + MotiveScalar::lefschetz_half_power(-1), MotiveScalar(1)};
    return expand_rational(num, den, order);
}

QSeries bbs_degree0_series(const GeometryConfig &cfg, std::size_t order)
{
    return plethystic_exp(bbs_argument(cfg, order)).negate_variable();
}

std::vector<MotiveScalar> n_invariants_from_series(const GeometryConfig &cfg, std::size_t order)
{
    QSeries log_d = series_log(bbs_degree0_series(cfg, order));
    std::vector<MotiveScalar> out;
    out.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        out.push_back(log_d[n] / bracket_weight(static_cast<int>(n)));
    }
    return out;
}

MotiveScalar n_invariant_closed_form(const GeometryConfig &cfg, int n)
{
    if (n <= 0) {
        throw std::invalid_argument("N_n^mot is defined for n >= 1");
    }
    const MotiveScalar seed = degree0_seed(cfg);
    MotiveScalar total;
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) {
            continue;
        }
        Rational sign_over_k(k % 2 == 1 ? 1 : -1, k);
        total += MotiveScalar(sign_over_k) / bracket_weight(k) * adams(k, seed);
    }
    return total;
}

MotiveScalar euler_n_invariant(const GeometryConfig &cfg, int n)
{
    if (n <= 0) {
        throw std::invalid_argument("N_n is defined for n >= 1");
    }
    Rational sum(0);
    for (long k = 1; k <= n; ++k) {
        if (n % k == 0) {
            sum += Rational(1, k * k);
        }
    }
    MotiveScalar chi = cfg.chi ? MotiveScalar(*cfg.chi) : MotiveScalar(Polynomial::variable(chi_var(cfg.generator)));
    return -chi * MotiveScalar(sum);
}

QSeries macmahon_power(const Rational &c, std::size_t order)
{
    QSeries log_m(order);
    for (long n = 1; n <= static_cast<long>(order); ++n) {
        Rational sigma2(0);
        for (long k = 1; k <= n; ++k) {
            if (n % k == 0) {
                sigma2 += k * k;
            }
        }
        log_m.set(static_cast<std::size_t>(n), MotiveScalar(c * sigma2 / n));
    }
    return series_exp(log_m);
}

MotiveScalar pt_atom(const GeometryConfig &cfg, int n, const std::vector<int> &beta)
{
    std::string base = cfg.pt_prefix + "[" + std::to_string(n);
    for (int b : beta) {
        base += "," + std::to_string(b);
    }
    return MotiveScalar::atom(base + "]");
}

TorusElement pt_element(const GeometryConfig &cfg)
{
    TorusElement a(cfg.window);
    for (const GradedClass &v : cfg.window.classes()) {
        if (v.rank != 1) {
            continue;
        }
        if (cfg.pt_mode == GeometryConfig::PtMode::Symbolic) {
            a.add_term(v, pt_atom(cfg, -v.a, v.beta));
        } else if (v.a == 0 && std::all_of(v.beta.begin(), v.beta.end(), [](int b) { return b == 0; })) {
            a.add_term(v, MotiveScalar(1));
        }
    }
    return a;
}

namespace {

int max_n(const Window &w) { return w.depth(); }

// The degree-0 factor must reach every shift between two rank 1 classes.
void require_closing_depth(const Window &w)
{
    const int span = w.a_max - w.a_min;
    if (w.depth() < span) {
        GradedClass missing{-span, std::vector<int>(w.curve_rank(), 0), 0};
        throw std::invalid_argument("window too small to close the adjoint sum: missing class " + to_string(missing));
    }
}

} // namespace

TorusElement epsilon_element(const GeometryConfig &cfg)
{
    TorusElement eps(cfg.window);
    const MotiveScalar inv = (MotiveScalar::lefschetz_half_power(1) - MotiveScalar::lefschetz_half_power(-1)).inverse();
    for (int n = 1; n <= max_n(cfg.window); ++n) {
        eps.add_term(GradedClass::gamma0(n, cfg.curve_rank()), n_invariant_closed_form(cfg, n) * inv);
    }
    return eps;
}

TorusElement degree0_element(const GeometryConfig &cfg)
{
    QSeries d = bbs_degree0_series(cfg, static_cast<std::size_t>(max_n(cfg.window)));
    return series_to_gamma0(d, cfg.window);
}

namespace {

// PT atom bases allowed in a coefficient of curve class beta.
std::set<std::string> pt_bases_for(const GeometryConfig &cfg, const std::vector<int> &beta)
{
    std::set<std::string> out;
    for (const GradedClass &v : cfg.window.classes()) {
        if (v.rank == 1 && v.beta == beta) {
            Var atom = pt_atom(cfg, -v.a, beta).numerator().variables().front();
            out.insert(atom->base);
        }
    }
    return out;
}

bool only_pt_atoms_from(const MotiveScalar &c, const std::string &prefix, const std::set<std::string> &allowed)
{
    for (const Polynomial *p : {&c.numerator(), &c.denominator()}) {
        for (Var v : p->variables()) {
            if (v->kind == SymbolKind::Atom && v->base.starts_with(prefix + "[") && !allowed.contains(v->base)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

WallcrossReport wallcross_verify(const GeometryConfig &cfg)
{
    cfg.validate();
    require_closing_depth(cfg.window);

    const TorusElement a_pt = pt_element(cfg);
    const TorusElement eps = epsilon_element(cfg);
    const TorusElement lhs = exp_adjoint(eps, a_pt, cfg.pairing);
    const TorusElement rhs = untwisted_mul(degree0_element(cfg), a_pt);

    WallcrossReport report;
    report.config = cfg;
    report.lhs_truncated = lhs.truncated();
    report.rhs_truncated = rhs.truncated();
    report.pass = true;
    report.beta_graded = true;
    for (const GradedClass &v : cfg.window.classes()) {
        if (v.rank != 1) {
            continue;
        }
        ClassCheck check{v, lhs.extract(v), rhs.extract(v), false};
        check.equal = check.lhs == check.rhs;
        report.pass = report.pass && check.equal;
        if (cfg.pt_mode == GeometryConfig::PtMode::Symbolic &&
            !only_pt_atoms_from(check.lhs, cfg.pt_prefix, pt_bases_for(cfg, v.beta))) {
            report.beta_graded = false;
        }
        report.per_class.push_back(std::move(check));
    }
    return report;
}

bool conjugation_form_holds(const GeometryConfig &cfg, const TorusElement &a)
{
    const TorusElement eps = epsilon_element(cfg);
    const TorusElement e = exp_gamma0(eps);
    const TorusElement e_inv = exp_gamma0(-eps);
    return exp_adjoint(eps, a, cfg.pairing) == star_mul(star_mul(e, a, cfg.pairing), e_inv, cfg.pairing);
}

std::vector<FactorizationRow> dt_pt_factorization_coefficients(const GeometryConfig &cfg)
{
    WallcrossReport report = wallcross_verify(cfg);
    const TorusElement a_pt = pt_element(cfg);
    QSeries d = bbs_degree0_series(cfg, static_cast<std::size_t>(max_n(cfg.window)));
    std::vector<FactorizationRow> rows;
    for (const ClassCheck &check : report.per_class) {
        int n = -check.cls.a;
        FactorizationRow row;
        row.n = n;
        row.beta = check.cls.beta;
        row.dt = check.lhs;
        bool degree0 = std::all_of(row.beta.begin(), row.beta.end(), [](int b) { return b == 0; });
        if (degree0 && n >= 0 && static_cast<std::size_t>(n) <= d.order()) {
            row.dt0 = d[static_cast<std::size_t>(n)];
        }
        row.pt = a_pt.extract(check.cls);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace motivic
