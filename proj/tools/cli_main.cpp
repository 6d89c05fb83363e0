// softedge command-line front end. Talks to the library exclusively through the
// public C API in softedge.h.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "softedge.h"

using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// shortest round-trip decimal rendering
std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Options {
    int beta = 2;
    int n = 10;
    std::optional<double> p;
    double smin = -4.0, smax = 4.0;
    int points = 81;
    int order = 2;
    int j = 1;
    std::string format = "csv";
    std::string output;
    std::vector<int> n_ladder;
};

struct Handle {
    softedge_ensemble* e = nullptr;
    ~Handle() { softedge_ensemble_free(e); }
};

[[noreturn]] void fail(softedge_status st, const std::string& what) {
    std::cerr << "softedge: " << what << ": " << softedge_status_name(st) << " ("
              << softedge_last_error_message() << ")\n";
    std::exit(st == SOFTEDGE_ERR_INVALID ? kExitUsage : kExitDomain);
}

void check(softedge_status st, const std::string& what) {
    if (st != SOFTEDGE_OK) fail(st, what);
}

Handle make_ensemble(const Options& o, int n) {
    Handle h;
    softedge_status st;
    if (o.p) {
        double p = *o.p * (double)n / (double)o.n;  // keep p/n fixed along a ladder
        st = softedge_ensemble_create_laguerre(o.beta, n, p, &h.e);
    } else {
        st = softedge_ensemble_create_gaussian(o.beta, n, &h.e);
    }
    check(st, "ensemble");
    return h;
}

std::vector<double> s_grid(const Options& o) {
    std::vector<double> g(o.points);
    for (int i = 0; i < o.points; ++i)
        g[i] = o.smin + (o.smax - o.smin) * i / (o.points - 1);
    return g;
}

void write_text(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
        std::cerr << "softedge: cannot open output file " << o.output << "\n";
        std::exit(kExitUsage);
    }
    f << text;
}

json params_json(const Options& o) {
    json p{{"beta", o.beta}, {"n", o.n},     {"smin", o.smin},   {"smax", o.smax},
           {"points", o.points}, {"order", o.order}};
    if (o.p) p["p"] = *o.p;
    return p;
}

int cmd_density(const Options& o) {
    Handle h = make_ensemble(o, o.n);
    double sc[6];
    check(softedge_scaling(h.e, sc), "scaling");
    std::ostringstream csv;
    json rows = json::array();
    csv << "s,x,rho_rescaled\n";
    for (double s : s_grid(o)) {
        double x = sc[0] + sc[1] * s, v;
        check(softedge_density_rescaled(h.e, s, &v), "density");
        csv << fmt(s) << ',' << fmt(x) << ',' << fmt(v) << '\n';
        if (o.format == "json") rows.push_back({{"s", s}, {"x", x}, {"rho_rescaled", v}});
    }
    if (o.format == "json") {
        json doc{{"command", "density"}, {"params", params_json(o)}, {"results", rows},
                 {"failures", json::array()}};
        write_text(o, doc.dump(2) + "\n");
    } else {
        write_text(o, csv.str());
    }
    return 0;
}

int cmd_expansion(const Options& o) {
    Handle h = make_ensemble(o, o.n);
    std::ostringstream csv;
    json rows = json::array();
    csv << "s";
    for (int m = 0; m <= o.order; ++m) csv << ",m" << m;
    csv << "\n";
    for (double s : s_grid(o)) {
        csv << fmt(s);
        json row{{"s", s}};
        for (int m = 0; m <= o.order; ++m) {
            double v;
            check(softedge_expansion_density(h.e, s, m, &v), "expansion");
            csv << ',' << fmt(v);
            row["m" + std::to_string(m)] = v;
        }
        csv << '\n';
        rows.push_back(row);
    }
    if (o.format == "json") {
        json doc{{"command", "expansion"}, {"params", params_json(o)}, {"results", rows},
                 {"failures", json::array()}};
        write_text(o, doc.dump(2) + "\n");
    } else {
        write_text(o, csv.str());
    }
    return 0;
}

// least-squares slope of y against x
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

int cmd_compare(const Options& o) {
    Handle h = make_ensemble(o, o.n);
    std::ostringstream csv;
    csv << "s,exact";
    for (int m = 0; m <= o.order; ++m) csv << ",m" << m;
    for (int m = 0; m <= o.order; ++m) csv << ",err" << m;
    csv << "\n";
    std::vector<double> max_err(o.order + 1, 0.0);
    json rows = json::array();
    for (double s : s_grid(o)) {
        double ex;
        check(softedge_density_rescaled(h.e, s, &ex), "density");
        std::vector<double> vals(o.order + 1);
        for (int m = 0; m <= o.order; ++m)
            check(softedge_expansion_density(h.e, s, m, &vals[m]), "expansion");
        csv << fmt(s) << ',' << fmt(ex);
        for (int m = 0; m <= o.order; ++m) csv << ',' << fmt(vals[m]);
        json row{{"s", s}, {"exact", ex}};
        for (int m = 0; m <= o.order; ++m) {
            double err = std::fabs(ex - vals[m]);
            max_err[m] = std::max(max_err[m], err);
            csv << ',' << fmt(err);
            row["m" + std::to_string(m)] = vals[m];
            row["err" + std::to_string(m)] = err;
        }
        csv << '\n';
        rows.push_back(row);
    }

    json summary{{"max_err", json::object()}};
    for (int m = 0; m <= o.order; ++m) summary["max_err"]["m" + std::to_string(m)] = max_err[m];
    if (!o.n_ladder.empty()) {
        std::vector<double> logh;
        std::vector<std::vector<double>> logerr(o.order + 1);
        for (int n : o.n_ladder) {
            Handle hl = make_ensemble(o, n);
            double sc[6];
            check(softedge_scaling(hl.e, sc), "scaling");
            logh.push_back(std::log(sc[2]));
            std::vector<double> worst(o.order + 1, 0.0);
            for (double s : s_grid(o)) {
                double ex;
                check(softedge_density_rescaled(hl.e, s, &ex), "density");
                for (int m = 0; m <= o.order; ++m) {
                    double v;
                    check(softedge_expansion_density(hl.e, s, m, &v), "expansion");
                    worst[m] = std::max(worst[m], std::fabs(ex - v));
                }
            }
            for (int m = 0; m <= o.order; ++m) logerr[m].push_back(std::log(worst[m]));
        }
        summary["n_ladder"] = o.n_ladder;
        summary["slopes"] = json::object();
        for (int m = 0; m <= o.order; ++m)
            summary["slopes"]["m" + std::to_string(m)] = ls_slope(logh, logerr[m]);
    }

    if (o.format == "json") {
        json doc{{"command", "compare"}, {"params", params_json(o)}, {"results", rows},
                 {"summary", summary}, {"failures", json::array()}};
        write_text(o, doc.dump(2) + "\n");
    } else {
        write_text(o, csv.str());
        json doc{{"command", "compare"}, {"params", params_json(o)}, {"results", summary},
                 {"failures", json::array()}};
        // the CSV owns --output; the summary goes to stdout when the CSV went to a file
        if (!o.output.empty()) std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_reconstruct(const Options& o) {
    int match = 0;
    char* text = nullptr;
    softedge_status st = softedge_reconstruct_text(o.beta, o.j, &match, &text);
    check(st, "reconstruct");
    std::ostringstream out;
    out << "# P_{beta=" << o.beta << ", j=" << o.j << ", k}, k = 1..2j\n";
    out << text;
    out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    softedge_free_string(text);
    write_text(o, out.str());
    return match ? 0 : kExitValidation;
}

int cmd_validate(const Options& o) {
    int failures = 0;
    char* text = nullptr;
    check(softedge_validate_json(&failures, &text), "validate");
    write_text(o, std::string(text) + "\n");
    softedge_free_string(text);
    return failures == 0 ? 0 : kExitValidation;
}

int cmd_tables(const Options& o) {
    char* text = nullptr;
    check(softedge_tables_json(&text), "tables");
    write_text(o, std::string(text) + "\n");
    softedge_free_string(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"softedge: finite-n level densities of Gaussian/Laguerre ensembles "
                 "and their soft-edge Airy expansions"};
    app.require_subcommand(1);
    Options o;

    auto add_ensemble_flags = [&](CLI::App* c, bool with_grid) {
        c->add_option("--beta,-b", o.beta, "ensemble beta (1, 2 or 4)")->required();
        c->add_option("--n,-n", o.n, "dimension n")->required();
        c->add_option("--p,-p", o.p, "Laguerre parameter p (omit for Gaussian)");
        if (with_grid) {
            c->add_option("--smin", o.smin, "grid start in the edge variable s");
            c->add_option("--smax", o.smax, "grid end");
            c->add_option("--points", o.points, "grid size (>= 2)")
                ->check(CLI::Range(2, 100000));
            c->add_option("--order,-m", o.order, "highest truncation order (<= 2)")
                ->check(CLI::Range(0, 2));
        }
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--output,-o", o.output, "output path (default stdout)");
    };

    auto* density = app.add_subcommand("density", "rescaled exact density over an s-grid");
    add_ensemble_flags(density, true);
    auto* expansion = app.add_subcommand("expansion", "expansion truncations over an s-grid");
    add_ensemble_flags(expansion, true);
    auto* compare = app.add_subcommand("compare", "exact vs expansions, with errors");
    add_ensemble_flags(compare, true);
    compare->add_option("--n-ladder", o.n_ladder,
                        "extra dimensions for the convergence-slope fit")
        ->delimiter(',');
    auto* reconstruct =
        app.add_subcommand("reconstruct", "generating-function polynomials by exact elimination");
    reconstruct->add_option("--beta,-b", o.beta, "ensemble beta")->required();
    reconstruct->add_option("--j,-j", o.j, "correction order (1 or 2)")->required();
    reconstruct->add_option("--output,-o", o.output, "output path");
    auto* validate = app.add_subcommand("validate", "run the built-in invariant suite");
    validate->add_option("--output,-o", o.output, "output path");
    auto* tables = app.add_subcommand("tables", "dump the exact coefficient tables as JSON");
    tables->add_option("--output,-o", o.output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (density->parsed()) return cmd_density(o);
    if (expansion->parsed()) return cmd_expansion(o);
    if (compare->parsed()) return cmd_compare(o);
    if (reconstruct->parsed()) return cmd_reconstruct(o);
    if (validate->parsed()) return cmd_validate(o);
    if (tables->parsed()) return cmd_tables(o);
    return kExitUsage;
}
