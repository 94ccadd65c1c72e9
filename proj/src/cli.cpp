#include "littlewood/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "littlewood/families.hpp"
#include "littlewood/limits.hpp"
#include "littlewood/number_core.hpp"
#include "littlewood/rational.hpp"

namespace littlewood::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json exact(const Rational& x) { return Json{{"exact", to_string(x)}, {"decimal", to_decimal(x, 12)}}; }

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

enum class Format { json, csv };

struct Record {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::array();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

void emit(const Record& rec, Format format, double elapsed_ms, std::ostream& out) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < rec.csv_header.size(); ++i) out << (i ? "," : "") << rec.csv_header[i];
        out << "\r\n";
        for (const auto& row : rec.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\r\n";
        }
        return;
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = rec.command;
    j["parameters"] = rec.parameters;
    j["results"] = rec.results;
    j["timing"] = Json{{"elapsed_ms", elapsed_ms}};
    out << j.dump(2) << "\n";
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, std::ostream& err) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    err << j.dump() << "\n";
}

Rational parse_flag_rational(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + " expects a rational such as 1/4, got '" + text + "'");
    }
}

LimitFamily limit_family(const std::string& name) {
    return name == "fekete" ? LimitFamily::fekete : LimitFamily::galois;
}

Record cmd_limits(const std::string& family, unsigned qmax) {
    Record rec;
    rec.command = "limits";
    rec.parameters = Json{{"family", family}, {"qmax", qmax}};
    rec.csv_header = {"q", "limit", "limit_decimal"};
    const auto table = limit_table(limit_family(family), qmax);
    for (const auto& [q, value] : table.entries) {
        rec.results.push_back(Json{{"q", q}, {"limit", exact(value)}});
        rec.csv_rows.push_back({std::to_string(q), csv_quote(to_string(value)), to_decimal(value, 12)});
    }
    return rec;
}

Record cmd_triangle(const std::string& family, unsigned rows) {
    Record rec;
    rec.command = "triangle";
    rec.parameters = Json{{"family", family}, {"rows", rows}};
    rec.csv_header = {"k", "m", "value"};
    for (unsigned k = 1; k <= rows; ++k) {
        const auto row = family == "fekete" ? fekete_triangle_row(k) : galois_triangle_row(k);
        Json values = Json::array();
        for (unsigned m = 1; m <= row.values.size(); ++m) {
            values.push_back(to_string(row.at(m)));
            rec.csv_rows.push_back({std::to_string(k), std::to_string(m), to_string(row.at(m))});
        }
        rec.results.push_back(Json{{"k", k}, {"values", values}});
    }
    return rec;
}

struct PhiOptions {
    unsigned q = 0;
    std::string eval;
    bool min = false;
    std::string eps = "1/1048576";
    bool pieces = false;
};

Record cmd_phi(const PhiOptions& opt) {
    Record rec;
    rec.command = "phi";
    const int modes = (opt.eval.empty() ? 0 : 1) + (opt.min ? 1 : 0) + (opt.pieces ? 1 : 0);
    if (modes != 1) throw UsageError("phi needs exactly one of --eval R, --min, --pieces");

    if (!opt.eval.empty()) {
        if (opt.q > kMaxShiftedQ) throw UsageError("phi --eval supports q <= " + std::to_string(kMaxShiftedQ));
        const Rational R = parse_flag_rational(opt.eval, "--eval");
        rec.parameters = Json{{"q", opt.q}, {"mode", "eval"}, {"R", to_string(R)}};
        const Rational v = shifted_fekete_limit(opt.q, R);
        rec.results.push_back(Json{{"q", opt.q}, {"R", to_string(R)}, {"value", exact(v)}});
        rec.csv_header = {"q", "R", "value", "value_decimal"};
        rec.csv_rows.push_back({std::to_string(opt.q), csv_quote(to_string(R)), csv_quote(to_string(v)), to_decimal(v, 12)});
        return rec;
    }
    if (opt.q > kMaxSymbolicQ) throw UsageError("phi --min/--pieces support q <= " + std::to_string(kMaxSymbolicQ));
    if (opt.min) {
        if (opt.q < 2) throw UsageError("phi --min needs q >= 2 (phi_1 is constant)");
        const Rational eps = parse_flag_rational(opt.eps, "--eps");
        if (eps <= 0) throw UsageError("--eps must be positive");
        rec.parameters = Json{{"q", opt.q}, {"mode", "min"}, {"eps", to_string(eps)}};
        const auto m = phi_min(opt.q, eps);
        rec.results.push_back(Json{{"q", opt.q},
                                   {"argmin", Json{{"lo", exact(m.argmin.lo)}, {"hi", exact(m.argmin.hi)}}},
                                   {"min", Json{{"lo", exact(m.value.lo)}, {"hi", exact(m.value.hi)}}},
                                   {"alt_flag", m.alternative}});
        rec.csv_header = {"q", "argmin_lo", "argmin_hi", "min_lo", "min_hi", "alt_flag"};
        rec.csv_rows.push_back({std::to_string(opt.q), csv_quote(to_string(m.argmin.lo)), csv_quote(to_string(m.argmin.hi)),
                                csv_quote(to_string(m.value.lo)), csv_quote(to_string(m.value.hi)),
                                m.alternative ? "true" : "false"});
        return rec;
    }
    rec.parameters = Json{{"q", opt.q}, {"mode", "pieces"}};
    const auto phi = phi_piecewise(opt.q);
    rec.csv_header = {"piece", "lo", "hi", "power", "coefficient"};
    const auto& b = phi.breakpoints();
    for (std::size_t i = 0; i < phi.pieces().size(); ++i) {
        Json coeffs = Json::array();
        const auto& c = phi.pieces()[i].coeffs();
        for (std::size_t d = 0; d < c.size(); ++d) {
            coeffs.push_back(to_string(c[d]));
            rec.csv_rows.push_back({std::to_string(i), csv_quote(to_string(b[i])), csv_quote(to_string(b[i + 1])),
                                    std::to_string(d), csv_quote(to_string(c[d]))});
        }
        rec.results.push_back(Json{{"piece", i}, {"lo", to_string(b[i])}, {"hi", to_string(b[i + 1])}, {"coefficients", coeffs}});
    }
    return rec;
}

struct EmpiricalOptions {
    std::string family;
    unsigned q = 0;
    std::vector<std::uint64_t> p;
    std::vector<std::uint64_t> k;
    std::optional<std::int64_t> shift;
    std::string shift_ratio;
};

Record cmd_empirical(const EmpiricalOptions& opt) {
    Record rec;
    rec.command = "empirical";
    const Family family = *parse_family(opt.family);
    ShiftRule rule;
    std::vector<std::uint64_t> sizes;
    if (family == Family::galois) {
        if (!opt.p.empty() || opt.shift || !opt.shift_ratio.empty()) {
            throw UsageError("galois family takes --k only");
        }
        if (opt.k.empty()) throw UsageError("galois family needs at least one --k");
        sizes = opt.k;
    } else {
        if (!opt.k.empty()) throw UsageError("--k applies to the galois family only");
        if (opt.p.empty()) throw UsageError(opt.family + " family needs at least one --p");
        sizes = opt.p;
        if (family == Family::fekete && (opt.shift || !opt.shift_ratio.empty())) {
            throw UsageError("--shift/--shift-ratio apply to the shifted family");
        }
        if (opt.shift && !opt.shift_ratio.empty()) throw UsageError("use either --shift or --shift-ratio");
        rule.fixed = opt.shift;
        if (!opt.shift_ratio.empty()) rule.ratio = parse_flag_rational(opt.shift_ratio, "--shift-ratio");
    }

    rec.parameters = Json{{"family", std::string(to_string(family))}, {"q", opt.q}};
    Json size_list = Json::array();
    for (auto s : sizes) size_list.push_back(s);
    rec.parameters[family == Family::galois ? "k" : "p"] = size_list;
    if (rule.fixed) rec.parameters["shift"] = *rule.fixed;
    if (rule.ratio) rec.parameters["shift_ratio"] = to_string(*rule.ratio);

    const auto rows = convergence_table(family, opt.q, sizes, rule);
    rec.csv_header = {"n", "exact_norm", "ratio_num", "ratio_den", "limit_num", "limit_den", "rel_err"};
    for (const auto& r : rows) {
        Json row{{"n", r.n},
                 {family == Family::galois ? "k" : "p", r.size_param},
                 {"shift", r.shift},
                 {"exact_norm", to_string(r.exact_norm)},
                 {"ratio", exact(r.ratio)},
                 {"limit", exact(r.limit)},
                 {"abs_err", sci(r.abs_err)},
                 {"rel_err", sci(r.rel_err)}};
        rec.results.push_back(std::move(row));
        rec.csv_rows.push_back({std::to_string(r.n), to_string(r.exact_norm), to_string(r.ratio.get_num()),
                                to_string(r.ratio.get_den()), to_string(r.limit.get_num()), to_string(r.limit.get_den()),
                                sci(r.rel_err)});
    }
    return rec;
}

}  // namespace

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact L^2q norm limits of Fekete, shifted Fekete and Galois polynomials", "littlewood"};
    app.require_subcommand(1);
    bool seed = false;
    app.add_flag("--seed-tables", seed, "Pre-warm factorial and special-number caches");

    std::string format = "json";
    const auto format_check = CLI::IsMember({"json", "csv"});

    std::string limits_family;
    unsigned qmax = 0;
    auto* limits = app.add_subcommand("limits", "Limiting ratios from the triangle recursion");
    limits->add_option("--family", limits_family, "fekete or galois")->required()->check(CLI::IsMember({"fekete", "galois"}));
    limits->add_option("--qmax", qmax, "Largest q")->required()->check(CLI::Range(1u, 64u));
    limits->add_option("--format", format)->check(format_check);

    std::string tri_family;
    unsigned tri_rows = 0;
    auto* triangle = app.add_subcommand("triangle", "Integer triangles (2k-1)! F(k,m) / (2k-1)! G(k,m)");
    triangle->add_option("--family", tri_family, "fekete or galois")->required()->check(CLI::IsMember({"fekete", "galois"}));
    triangle->add_option("--rows", tri_rows, "Number of rows")->required()->check(CLI::Range(1u, 16u));
    triangle->add_option("--format", format)->check(format_check);

    PhiOptions phi_opt;
    auto* phi = app.add_subcommand("phi", "Shifted Fekete limit function phi_q");
    phi->add_option("--q", phi_opt.q, "q")->required()->check(CLI::Range(1u, kMaxShiftedQ));
    phi->add_option("--eval", phi_opt.eval, "Evaluate phi_q at a rational R");
    phi->add_flag("--min", phi_opt.min, "Minimise phi_q on [0, 1/2]");
    phi->add_option("--eps", phi_opt.eps, "Argmin enclosure width for --min (default 2^-20)");
    phi->add_flag("--pieces", phi_opt.pieces, "Print the pieces of phi_q on [0, 1/2]");
    phi->add_option("--format", format)->check(format_check);

    EmpiricalOptions emp;
    std::int64_t shift_value = 0;
    auto* empirical = app.add_subcommand("empirical", "Exact norms of actual polynomials against the limits");
    empirical->add_option("--family", emp.family, "fekete, shifted or galois")
        ->required()
        ->check(CLI::IsMember({"fekete", "shifted", "galois"}));
    empirical->add_option("--q", emp.q, "q")->required()->check(CLI::Range(1u, 16u));
    empirical->add_option("--p", emp.p, "Odd primes (fekete/shifted)");
    empirical->add_option("--k", emp.k, "Field degrees (galois)");
    auto* shift_opt = empirical->add_option("--shift", shift_value, "Fixed shift r");
    empirical->add_option("--shift-ratio", emp.shift_ratio, "Target R with r = round(R p)");
    empirical->add_option("--format", format)->check(format_check);

    std::vector<std::string> argv_store{"littlewood"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    std::string command = args.empty() ? "" : args.front();
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kOk;
    } catch (const CLI::Success&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit_error(command, "usage", e.what(), err);
        return kUsageError;
    }
    if (shift_opt->count() > 0) emp.shift = shift_value;

    if (seed) seed_tables(64);
    const auto start = std::chrono::steady_clock::now();
    try {
        Record rec;
        if (limits->parsed()) {
            rec = cmd_limits(limits_family, qmax);
        } else if (triangle->parsed()) {
            rec = cmd_triangle(tri_family, tri_rows);
        } else if (phi->parsed()) {
            rec = cmd_phi(phi_opt);
        } else {
            rec = cmd_empirical(emp);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(rec, format == "csv" ? Format::csv : Format::json, ms, out);
        return kOk;
    } catch (const UsageError& e) {
        emit_error(command, "usage", e.what(), err);
        return kUsageError;
    } catch (const std::exception& e) {
        emit_error(command, "domain", e.what(), err);
        return kDomainError;
    }
}

}  // namespace littlewood::cli
