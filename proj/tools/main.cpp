#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vsb/errors.hpp"
#include "vsb/families.hpp"
#include "vsb/gf.hpp"
#include "vsb/poly.hpp"
#include "vsb/report.hpp"
#include "vsb/svgplot.hpp"
#include "vsb/verify.hpp"

namespace {

// 0 ok, 2 parse/params/io, 3 envelope, 4 unused variables,
// 5 verification violation.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEnvelope = 3;
constexpr int kExitUnusedVars = 4;
constexpr int kExitViolation = 5;

vsb::FieldPtr make_field(std::uint64_t p, int a,
                         const std::vector<std::uint32_t>& modulus) {
    if (modulus.empty()) return vsb::Field::make(p, a);
    return vsb::Field::make(p, a, modulus);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vsb::BadParamsError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"value set bounds for polynomial maps over finite fields"};
    app.require_subcommand(1);

    // invariants
    std::string inv_file;
    std::uint64_t inv_p = 0;
    int inv_a = 1;
    std::vector<std::uint32_t> inv_modulus;
    bool inv_skip_heavy = false;
    bool inv_with_u = false;
    std::optional<std::uint64_t> inv_u_cap;
    auto* inv = app.add_subcommand(
        "invariants", "full invariant report for one map file, as JSON");
    inv->add_option("file", inv_file, "map file in the vars:/fi grammar")
        ->required();
    inv->add_option("--p", inv_p, "field characteristic")->required();
    inv->add_option("--a", inv_a, "extension degree, field is F_{p^a}");
    inv->add_option("--modulus", inv_modulus,
                    "modulus coefficients c0,c1,...,1 (monic, degree a)")
        ->delimiter(',');
    inv->add_flag("--skip-heavy", inv_skip_heavy,
                  "skip over-envelope stages with a note instead of failing");
    inv->add_flag("--with-u", inv_with_u,
                  "search for the first k with a nonvanishing power sum");
    inv->add_option("--u-cap", inv_u_cap, "upper end of the u search");

    // verify
    std::vector<std::uint64_t> ver_q;
    std::vector<int> ver_n;
    std::string ver_count = "0";
    std::uint64_t ver_seed = 0;
    auto* ver = app.add_subcommand(
        "verify", "check the cardinality bounds against brute force");
    ver->add_option("--q", ver_q, "field sizes (prime powers)")
        ->required()
        ->delimiter(',');
    ver->add_option("--n", ver_n, "variable counts")->required()->delimiter(
        ',');
    ver->add_option("--count", ver_count,
                    "maps per (q, n) pair, or 'all' for every map of "
                    "degree <= 2");
    ver->add_option("--seed", ver_seed, "corpus seed");

    // example
    std::string ex_name;
    std::uint64_t ex_q = 0;
    int ex_n = 0;
    std::uint64_t ex_a = 1;
    int ex_k = 0;
    std::string ex_out;
    auto* ex = app.add_subcommand(
        "example", "emit a sharp example family member as a map file");
    ex->add_option("name", ex_name, "cusick-muller | norm-map | zan-cao")
        ->required();
    ex->add_option("--q", ex_q, "base field size");
    ex->add_option("--n", ex_n, "variables (norm-map)");
    ex->add_option("--a", ex_a, "family parameter");
    ex->add_option("--k", ex_k, "extension degree (cusick-muller)");
    ex->add_option("--out", ex_out, "write here instead of stdout");

    // plot
    std::string plot_file;
    std::string plot_out;
    std::uint64_t plot_p = 0;
    int plot_a = 1;
    std::vector<std::uint32_t> plot_modulus;
    auto* plot = app.add_subcommand(
        "plot", "SVG of the exponent hull and its n/d contraction (n = 2)");
    plot->add_option("file", plot_file, "map file")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();
    plot->add_option("--p", plot_p, "field characteristic")->required();
    plot->add_option("--a", plot_a, "extension degree");
    plot->add_option("--modulus", plot_modulus,
                     "modulus coefficients c0,c1,...,1 (monic, degree a)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    if (inv->parsed()) {
        auto field = make_field(inv_p, inv_a, inv_modulus);
        auto map = vsb::PolyMap::parse(read_file(inv_file), field);
        vsb::AnalyzeOptions opts;
        opts.skip_heavy = inv_skip_heavy;
        opts.with_u = inv_with_u;
        opts.u_cap = inv_u_cap;
        std::cout << vsb::report_json(vsb::analyze(map, opts)) << "\n";
        return kExitOk;
    }

    if (ver->parsed()) {
        vsb::VerifySpec spec;
        spec.qs = ver_q;
        spec.ns = ver_n;
        spec.seed = ver_seed;
        if (ver_count == "all") {
            spec.exhaustive = true;
        } else {
            try {
                spec.count = std::stoull(ver_count);
            } catch (const std::exception&) {
                throw vsb::BadParamsError("--count takes a number or 'all'");
            }
            if (spec.count == 0)
                throw vsb::BadParamsError("--count must be positive or 'all'");
        }
        auto summary = vsb::run_verify(spec);
        std::cout << vsb::verify_json(summary) << "\n";
        return summary.violations.empty() ? kExitOk : kExitViolation;
    }

    if (ex->parsed()) {
        vsb::PolyMap map = [&] {
            if (ex_name == "zan-cao") return vsb::zan_cao(ex_a);
            if (ex_name == "norm-map") {
                if (ex_q == 0 || ex_n == 0)
                    throw vsb::BadParamsError("norm-map needs --q and --n");
                return vsb::norm_map(ex_q, ex_n, ex_a);
            }
            if (ex_name == "cusick-muller") {
                if (ex_q == 0 || ex_k == 0)
                    throw vsb::BadParamsError(
                        "cusick-muller needs --q and --k");
                return vsb::cusick_muller(ex_q, ex_k);
            }
            throw vsb::BadParamsError("unknown family: " + ex_name);
        }();
        const auto& f = map.field();
        std::cerr << "field: p=" << f->p() << " a=" << f->a() << " (q="
                  << f->q() << ")\n";
        if (ex_out.empty()) {
            std::cout << map.render();
        } else {
            std::ofstream out(ex_out, std::ios::binary);
            if (!out) throw vsb::BadParamsError("cannot open " + ex_out);
            out << map.render();
        }
        return kExitOk;
    }

    if (plot->parsed()) {
        auto field = make_field(plot_p, plot_a, plot_modulus);
        auto map = vsb::PolyMap::parse(read_file(plot_file), field);
        auto svg = vsb::polytope_svg(map);
        std::ofstream out(plot_out, std::ios::binary);
        if (!out) throw vsb::BadParamsError("cannot open " + plot_out);
        out << svg;
        return kExitOk;
    }

    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const vsb::UnusedVariablesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnusedVars;
    } catch (const vsb::DomainTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEnvelope;
    } catch (const vsb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
