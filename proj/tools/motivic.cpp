// Command-line front end: N_n^mot tables, the degree-0 series, the
// verification suites, rational expansion and the wall-crossing replay.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include "motivic/json_io.hpp"
#include "motivic/text.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace motivic;
using io::Json;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raw flag values; numbers stay text until they are parsed as exact rationals.
struct Flags {
    std::optional<std::string> config, order, chi, curve_rank, beta_max, a_min, a_max, gamma0_depth, pairing, format,
        seed, cases, suite, pt, expr_file;
    bool symbolic = false;
};

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw UsageError(path.string() + ": " + e.what());
    }
}

// Flag value if given, else the config file entry, else nothing.
class Settings {
public:
    explicit Settings(const Flags &flags)
    {
        if (flags.config) {
            file_ = read_json_file(*flags.config);
            if (!file_.is_object()) {
                throw UsageError("config file must hold a JSON object");
            }
            base_ = std::filesystem::path(*flags.config).parent_path();
        }
    }

    std::optional<Json> get(const std::optional<std::string> &flag, const char *key) const
    {
        if (flag) {
            return Json(*flag);
        }
        if (file_.contains(key)) {
            return file_[key];
        }
        return std::nullopt;
    }

    bool file_has(const char *key) const { return file_.contains(key); }
    const Json &file(const char *key) const { return file_[key]; }
    std::filesystem::path resolve(const std::string &path) const { return base_ / path; }

private:
    Json file_ = Json::object();
    std::filesystem::path base_;
};

Rational rational_of(const Json &j, const std::string &what)
{
    try {
        return io::rational_from_json(j);
    } catch (const std::exception &e) {
        throw UsageError(what + ": " + e.what());
    }
}

long integer_of(const Json &j, const std::string &what, long lo, long hi)
{
    Rational r = rational_of(j, what);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p() || r < lo || r > hi) {
        throw UsageError(what + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return r.get_num().get_si();
}

std::string string_of(const Json &j, const std::string &what)
{
    if (!j.is_string()) {
        throw UsageError(what + " must be a string");
    }
    return j.get<std::string>();
}

std::vector<int> beta_list(const Json &j)
{
    std::vector<Json> items;
    if (j.is_array()) {
        items.assign(j.begin(), j.end());
    } else if (j.is_string()) {
        std::stringstream in(j.get<std::string>());
        std::string item;
        while (std::getline(in, item, ',')) {
            items.emplace_back(item);
        }
    } else {
        items.push_back(j);
    }
    std::vector<int> out;
    for (const Json &item : items) {
        out.push_back(static_cast<int>(integer_of(item, "--beta-max", 0, 1000)));
    }
    return out;
}

PairingForm pairing_of(const Settings &s, const Flags &flags)
{
    Json descriptor;
    if (flags.pairing) {
        descriptor = read_json_file(*flags.pairing);
    } else if (s.file_has("pairing")) {
        const Json &entry = s.file("pairing");
        descriptor = entry.is_string() ? read_json_file(s.resolve(entry.get<std::string>())) : entry;
    } else {
        return PairingForm::standard();
    }
    if (descriptor.is_array()) {
        descriptor = {{"mode", "matrix"}, {"matrix", descriptor}};
    }
    try {
        return io::pairing_from_json(descriptor);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--pairing: ") + e.what());
    }
}

GeometryConfig geometry_of(const Settings &s, const Flags &flags)
{
    GeometryConfig cfg;
    if (auto v = s.get(flags.order, "order")) {
        cfg.order = static_cast<std::size_t>(integer_of(*v, "--order", 1, 64));
    }

    // --symbolic and --chi exclude each other within one source; flags win over the file
    std::optional<Json> chi = flags.chi ? std::optional<Json>(*flags.chi) : std::nullopt;
    bool symbolic = flags.symbolic;
    if (chi && symbolic) {
        throw UsageError("--chi and --symbolic are mutually exclusive");
    }
    if (!chi && !symbolic) {
        bool file_symbolic = s.file_has("symbolic") && s.file("symbolic") == true;
        bool file_chi = s.file_has("chi") && s.file("chi") != "symbolic";
        if (file_symbolic && file_chi) {
            throw UsageError("config sets both chi and symbolic");
        }
        if (file_chi) {
            chi = s.file("chi");
        }
    }
    if (chi) {
        cfg.chi = rational_of(*chi, "--chi");
    }

    std::optional<long> rank;
    if (auto v = s.get(flags.curve_rank, "curve_rank")) {
        rank = integer_of(*v, "--curve-rank", 0, 8);
    }
    std::vector<int> beta_max = {2};
    if (auto v = s.get(flags.beta_max, "beta_max")) {
        beta_max = beta_list(*v);
    }
    if (rank) {
        if (beta_max.size() == 1) {
            beta_max.assign(static_cast<std::size_t>(*rank), beta_max.front());
        } else if (beta_max.size() != static_cast<std::size_t>(*rank)) {
            throw UsageError("--beta-max lists " + std::to_string(beta_max.size()) + " bounds for curve rank " +
                             std::to_string(*rank));
        }
    }
    cfg.window.beta_max = beta_max;
    if (auto v = s.get(flags.a_min, "a_min")) {
        cfg.window.a_min = static_cast<int>(integer_of(*v, "--a-min", -64, 64));
    }
    if (auto v = s.get(flags.a_max, "a_max")) {
        cfg.window.a_max = static_cast<int>(integer_of(*v, "--a-max", -64, 64));
    }
    if (auto v = s.get(flags.gamma0_depth, "gamma0_depth")) {
        cfg.window.gamma0_depth = static_cast<int>(integer_of(*v, "--gamma0-depth", 0, 128));
    }
    cfg.pairing = pairing_of(s, flags);
    if (auto v = s.get(flags.pt, "pt")) {
        std::string mode = string_of(*v, "--pt");
        if (mode == "symbolic") {
            cfg.pt_mode = GeometryConfig::PtMode::Symbolic;
        } else if (mode == "unit") {
            cfg.pt_mode = GeometryConfig::PtMode::Unit;
        } else {
            throw UsageError("--pt must be symbolic or unit");
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

enum class Format { Table, Json };

Format format_of(const Settings &s, const Flags &flags)
{
    auto v = s.get(flags.format, "format");
    if (!v) {
        return Format::Table;
    }
    std::string name = string_of(*v, "--format");
    if (name == "table") {
        return Format::Table;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw UsageError("--format must be table or json");
}

// Left-aligned columns separated by two spaces, with a dashed rule under the header.
void print_table(std::ostream &out, const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto &row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string> &cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            text += cells[c];
            if (c + 1 < cells.size()) {
                text += std::string(width[c] - cells[c].size() + 2, ' ');
            }
        }
        out << text << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (std::size_t w : width) {
        rule.emplace_back(w, '-');
    }
    line(rule);
    for (const auto &row : rows) {
        line(row);
    }
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const Json &j) { std::cout << j.dump(2) << '\n'; }

std::string class_label(const GradedClass &v)
{
    std::string beta;
    for (std::size_t i = 0; i < v.beta.size(); ++i) {
        beta += (i ? "," : "") + std::to_string(v.beta[i]);
    }
    return "n=" + std::to_string(-v.a) + " beta=(" + beta + ")";
}

int cmd_n_mot(const Settings &s, const Flags &flags)
{
    const GeometryConfig cfg = geometry_of(s, flags);
    const Format format = format_of(s, flags);
    const EulerConfig euler = cfg.euler_config();
    const std::vector<MotiveScalar> series = n_invariants_from_series(cfg, cfg.order);

    bool pass = true;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const int n = static_cast<int>(i + 1);
        const MotiveScalar closed = n_invariant_closed_form(cfg, n);
        const bool equal = closed == series[i];
        const MotiveScalar value = euler_specialize(closed, euler);
        const MotiveScalar expected = euler_n_invariant(cfg, n);
        const bool euler_equal = value == expected && euler_specialize(series[i], euler) == expected;
        pass = pass && equal && euler_equal;
        rows.push_back({{"n", n},
                        {"closed_form", to_string(closed)},
                        {"from_series", to_string(series[i])},
                        {"equal", equal},
                        {"euler", to_string(value)},
                        {"euler_expected", to_string(expected)},
                        {"euler_equal", euler_equal}});
        table.push_back({std::to_string(n), yes_no(equal), to_string(value), yes_no(euler_equal), to_string(closed),
                         to_string(series[i])});
    }
    if (format == Format::Json) {
        print_json({{"config", io::to_json(cfg)}, {"rows", rows}, {"pass", pass}});
    } else {
        print_table(std::cout, {"n", "equal", "euler", "euler ok", "N_n^mot (closed form)", "N_n^mot (series)"}, table);
        std::cout << "result: " << (pass ? "pass" : "FAIL") << '\n';
    }
    return pass ? 0 : exit_failure;
}

int cmd_degree0(const Settings &s, const Flags &flags)
{
    const GeometryConfig cfg = geometry_of(s, flags);
    const Format format = format_of(s, flags);
    const QSeries d = bbs_degree0_series(cfg, cfg.order);
    const QSeries specialized = euler_specialize(d, cfg.euler_config());
    // sum DT_{n,0} (-q)^n specializes to M(q)^chi
    std::optional<QSeries> macmahon;
    if (cfg.chi) {
        macmahon = macmahon_power(*cfg.chi, cfg.order).negate_variable();
    }

    bool pass = true;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
        Json row = {{"n", n}, {"dt", to_string(d[n])}, {"euler", to_string(specialized[n])}};
        std::vector<std::string> cells = {std::to_string(n), to_string(specialized[n])};
        if (macmahon) {
            const bool match = (*macmahon)[n] == specialized[n];
            pass = pass && match;
            row["macmahon"] = to_string((*macmahon)[n]);
            row["match"] = match;
            cells.push_back(to_string((*macmahon)[n]));
            cells.push_back(yes_no(match));
        }
        cells.push_back(to_string(d[n]));
        rows.push_back(row);
        table.push_back(cells);
    }
    if (format == Format::Json) {
        print_json({{"config", io::to_json(cfg)}, {"rows", rows}, {"pass", pass}});
    } else {
        std::vector<std::string> header = {"n", "euler"};
        if (macmahon) {
            header.insert(header.end(), {"(-1)^n [q^n] M(q)^chi", "match"});
        }
        header.push_back("DT_{n,0}");
        print_table(std::cout, header, table);
        if (macmahon) {
            std::cout << "result: " << (pass ? "pass" : "FAIL") << '\n';
        }
    }
    return pass ? 0 : exit_failure;
}

int cmd_verify(const Settings &s, const Flags &flags)
{
    verify::SuiteOptions opts;
    opts.geometry = geometry_of(s, flags);
    const Format format = format_of(s, flags);
    if (auto v = s.get(flags.seed, "seed")) {
        opts.seed = static_cast<std::uint64_t>(integer_of(*v, "--seed", 0, std::numeric_limits<long>::max()));
    }
    if (auto v = s.get(flags.cases, "cases")) {
        opts.cases = static_cast<std::size_t>(integer_of(*v, "--cases", 1, 100000));
    }
    std::string suite = "all";
    if (auto v = s.get(flags.suite, "suite")) {
        suite = string_of(*v, "--suite");
    }
    const auto &names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'; expected ring, plethystic, torus, wallcross or all");
    }

    const std::vector<verify::SuiteResult> results = verify::run_suites(suite, opts);
    const bool pass = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed(); });
    if (format == Format::Json) {
        Json suites = Json::array();
        for (const auto &r : results) {
            suites.push_back(io::to_json(r));
        }
        print_json({{"seed", opts.seed}, {"suites", suites}, {"pass", pass}});
    } else {
        std::vector<std::vector<std::string>> table;
        for (const auto &r : results) {
            for (const auto &p : r.properties) {
                table.push_back({r.suite, p.name, std::to_string(p.cases), std::to_string(p.skipped),
                                 p.passed() ? "pass" : "FAIL"});
            }
        }
        print_table(std::cout, {"suite", "property", "cases", "skipped", "status"}, table);
        for (const auto &r : results) {
            for (const auto &p : r.properties) {
                if (p.counterexample) {
                    std::cout << "counterexample [" << r.suite << " / " << p.name << "]: " << *p.counterexample << '\n';
                }
            }
        }
        std::cout << "seed " << opts.seed << ": " << (pass ? "pass" : "FAIL") << '\n';
    }
    return pass ? 0 : exit_failure;
}

int cmd_expand(const Settings &s, const Flags &flags)
{
    if (!flags.expr_file) {
        throw UsageError("expand needs an expression file");
    }
    const Json expr = read_json_file(*flags.expr_file);
    if (!expr.is_object() || !expr.contains("num")) {
        throw UsageError("expression file needs a \"num\" field and optionally \"den\" and \"order\"");
    }
    std::size_t order = 6;
    if (auto v = s.get(flags.order, "order")) {
        order = static_cast<std::size_t>(integer_of(*v, "--order", 0, 256));
    } else if (expr.contains("order")) {
        order = static_cast<std::size_t>(integer_of(expr["order"], "order", 0, 256));
    }
    const Format format = format_of(s, flags);

    std::vector<MotiveScalar> num, den;
    try {
        num = parse_q_polynomial(string_of(expr["num"], "num"));
        den = parse_q_polynomial(expr.contains("den") ? string_of(expr["den"], "den") : "1");
    } catch (const ParseError &e) {
        throw UsageError(std::string(e.what()) + " at offset " + std::to_string(e.offset()));
    }
    QSeries h;
    try {
        h = expand_rational(num, den, order);
    } catch (const std::domain_error &e) {
        throw UsageError(e.what());
    }
    if (format == Format::Json) {
        print_json(io::to_json(h));
    } else {
        std::vector<std::vector<std::string>> table;
        for (std::size_t n = 0; n <= h.order(); ++n) {
            table.push_back({std::to_string(n), to_string(h[n])});
        }
        print_table(std::cout, {"n", "coefficient"}, table);
    }
    return 0;
}

int cmd_wallcross(const Settings &s, const Flags &flags)
{
    const GeometryConfig cfg = geometry_of(s, flags);
    const Format format = format_of(s, flags);
    WallcrossReport report;
    try {
        report = wallcross_verify(cfg);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (format == Format::Json) {
        print_json(io::to_json(report));
    } else {
        std::vector<std::vector<std::string>> table;
        for (const ClassCheck &c : report.per_class) {
            table.push_back({class_label(c.cls), yes_no(c.equal), to_string(c.lhs), to_string(c.rhs)});
        }
        print_table(std::cout, {"class", "equal", "exp({eps,-}) A_PT", "DT_0 . A_PT"}, table);
        std::cout << "beta-graded: " << yes_no(report.beta_graded) << '\n'
                  << "truncated: lhs " << yes_no(report.lhs_truncated) << ", rhs " << yes_no(report.rhs_truncated)
                  << '\n'
                  << "result: " << (report.pass ? "pass" : "FAIL") << '\n';
    }
    return report.pass && report.beta_graded ? 0 : exit_failure;
}

int cmd_table(const Settings &s, const Flags &flags)
{
    const GeometryConfig cfg = geometry_of(s, flags);
    const Format format = format_of(s, flags);
    std::vector<FactorizationRow> rows;
    try {
        rows = dt_pt_factorization_coefficients(cfg);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (format == Format::Json) {
        Json out = Json::array();
        for (const FactorizationRow &r : rows) {
            out.push_back({{"n", r.n},
                           {"beta", r.beta},
                           {"dt", to_string(r.dt)},
                           {"dt0", to_string(r.dt0)},
                           {"pt", to_string(r.pt)}});
        }
        print_json({{"config", io::to_json(cfg)}, {"rows", out}});
    } else {
        std::vector<std::vector<std::string>> table;
        for (const FactorizationRow &r : rows) {
            table.push_back({class_label(GradedClass{-r.n, r.beta, 1}), to_string(r.dt), to_string(r.dt0),
                             to_string(r.pt)});
        }
        print_table(std::cout, {"class", "DT_{n,beta}", "DT_{n,0}", "PT_{n,beta}"}, table);
    }
    return 0;
}

void add_config(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--config", f.config, "JSON file mirroring the flags; flags override it");
    cmd->add_option("--format", f.format, "table (default) or json");
}

void add_geometry(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--order", f.order, "q-order N (default 6)");
    cmd->add_option("--chi", f.chi, "Euler characteristic as p/q");
    cmd->add_flag("--symbolic", f.symbolic, "keep chi(X) symbolic (the default without --chi)");
}

void add_window(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--curve-rank", f.curve_rank, "rank r of the curve lattice (default 1)");
    cmd->add_option("--beta-max", f.beta_max, "curve-class bound, one value or a comma list (default 2)");
    cmd->add_option("--a-min", f.a_min, "smallest a of rank 1 classes (default -6)");
    cmd->add_option("--a-max", f.a_max, "largest a of rank 1 classes (default 2)");
    cmd->add_option("--gamma0-depth", f.gamma0_depth, "largest n of rank 0 classes (default a_max - a_min)");
    cmd->add_option("--pairing", f.pairing, "JSON pairing descriptor or matrix");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Motivic DT/PT engine"};
    app.require_subcommand(1);
    Flags flags;

    CLI::App *n_mot = app.add_subcommand("n-mot", "N_n^mot by closed form and by series inversion");
    add_config(n_mot, flags);
    add_geometry(n_mot, flags);

    CLI::App *degree0 = app.add_subcommand("degree0", "degree-0 DT series with its Euler specialization");
    add_config(degree0, flags);
    add_geometry(degree0, flags);

    CLI::App *verify_cmd = app.add_subcommand("verify", "run property suites");
    add_config(verify_cmd, flags);
    add_geometry(verify_cmd, flags);
    add_window(verify_cmd, flags);
    verify_cmd->add_option("--suite", flags.suite, "ring, plethystic, torus, wallcross or all (default)");
    verify_cmd->add_option("--seed", flags.seed, "random seed (default 1)");
    verify_cmd->add_option("--cases", flags.cases, "cases per randomized property");

    CLI::App *expand = app.add_subcommand("expand", "expand num/den from a JSON file as a power series in q");
    add_config(expand, flags);
    expand->add_option("file", flags.expr_file, "JSON object with num, den and order")->required();
    expand->add_option("--order", flags.order, "truncation order (default 6)");

    CLI::App *wallcross = app.add_subcommand("wallcross", "replay the wall-crossing class by class");
    CLI::App *table = app.add_subcommand("table", "aligned DT, DT_0 and PT coefficients");
    for (CLI::App *cmd : {wallcross, table}) {
        add_config(cmd, flags);
        add_geometry(cmd, flags);
        add_window(cmd, flags);
        cmd->add_option("--pt", flags.pt, "PT data: symbolic (default) or unit");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        Settings settings(flags);
        if (n_mot->parsed()) {
            return cmd_n_mot(settings, flags);
        }
        if (degree0->parsed()) {
            return cmd_degree0(settings, flags);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(settings, flags);
        }
        if (expand->parsed()) {
            return cmd_expand(settings, flags);
        }
        if (wallcross->parsed()) {
            return cmd_wallcross(settings, flags);
        }
        return cmd_table(settings, flags);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << " at offset " << e.offset() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
