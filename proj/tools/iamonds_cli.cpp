// Batch CLI exposing the toolkit: extremal bound tables, spiral
// construction and certification, exhaustive enumeration, witness searches,
// document validation, and the one-shot reproduction run.
//
// Exit codes: 0 ok, 1 verification/validation failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iamonds/bounds.hpp"
#include "iamonds/enumerate.hpp"
#include "iamonds/io_render.hpp"
#include "iamonds/lattice.hpp"
#include "iamonds/spiral.hpp"
#include "iamonds/verify.hpp"

namespace {

using iamonds::Polyiamond;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

// Line-oriented table with a stable header row; tab-separated so output
// diffs cleanly.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print_text(std::ostream& os) const {
        for (size_t i = 0; i < header.size(); ++i) os << (i ? "\t" : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
            os << "\n";
        }
    }
    void print_json(std::ostream& os) const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (size_t i = 0; i < header.size() && i < row.size(); ++i) {
                // numbers and booleans keep their types
                const std::string& v = row[i];
                if (v == "true" || v == "false") {
                    obj[header[i]] = (v == "true");
                    continue;
                }
                try {
                    size_t used = 0;
                    const long long x = std::stoll(v, &used);
                    if (used == v.size()) {
                        obj[header[i]] = x;
                        continue;
                    }
                } catch (...) {
                }
                obj[header[i]] = v;
            }
            arr.push_back(std::move(obj));
        }
        os << arr.dump() << "\n";
    }
    void print(std::ostream& os, const std::string& format) const {
        if (format == "json")
            print_json(os);
        else
            print_text(os);
    }
};

int cmd_pmin(long long n_max, const std::string& format) {
    Table t;
    t.header = {"n", "pmin", "delta"};
    long long prev = 0;
    bool increments_ok = true;
    for (long long n = 1; n <= n_max; ++n) {
        const long long p = iamonds::p_min(n);
        std::string delta = "-";
        if (n > 1) {
            const long long d = p - prev;
            delta = (d > 0 ? "+" : "") + std::to_string(d);
            if (d != 1 && d != -1) increments_ok = false;
        }
        t.rows.push_back({std::to_string(n), std::to_string(p), delta});
        prev = p;
    }
    t.print(std::cout, format);
    std::cout << "increment-check\t" << (increments_ok ? "ok" : "FAIL") << "\n";
    return increments_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_bound(long long n, long long h, const std::string& format) {
    const iamonds::BoundReport r = iamonds::m_bound(n, h);
    Table t;
    t.header = {"n", "h", "pmin_n_plus_h", "m_value", "feasible"};
    t.rows.push_back({std::to_string(r.n), std::to_string(r.h),
                      std::to_string(r.p_min_at_n_plus_h), r.m_value.str(),
                      r.feasible ? "true" : "false"});
    t.print(std::cout, format);
    return kExitOk;
}

int cmd_gbound(long long h, const std::string& format) {
    const long long g = iamonds::g_lower_bound(h);
    if (format == "json")
        std::cout << json{{"h", h}, {"g_lower_bound", g}}.dump() << "\n";
    else
        std::cout << g << "\n";
    return kExitOk;
}

int cmd_spiral(int k, const std::string& out_path, const std::string& format,
               bool certify_flag) {
    const Polyiamond s = iamonds::spir(k);
    if (!out_path.empty() || format == "svg" || format == "text") {
        std::string content;
        if (format == "svg") {
            content = iamonds::to_svg(s);
        } else if (format == "text") {
            content = iamonds::to_text_art(s);
        } else {
            iamonds::DocumentMetadata meta;
            meta.name = "spir_" + std::to_string(k);
            meta.k = k;
            content = iamonds::to_json(s, meta) + "\n";
        }
        if (out_path.empty())
            std::cout << content;
        else
            write_file(out_path, content);
    }
    Table t;
    if (certify_flag) {
        const iamonds::SpiralCertificate c = iamonds::certify(k);
        t.header = {"k",         "tiles",           "holes",          "all_holes_area_one",
                    "dual_tree", "outer_perimeter", "p_min_of_filled", "passes"};
        t.rows.push_back({std::to_string(c.k), std::to_string(c.tiles),
                          std::to_string(c.holes), c.all_holes_area_one ? "true" : "false",
                          c.dual_tree ? "true" : "false", std::to_string(c.outer_perimeter),
                          std::to_string(c.p_min_of_filled), c.passes ? "true" : "false"});
        t.print(std::cout, format == "json" ? "json" : "");
        return c.passes ? kExitOk : kExitVerificationFailed;
    }
    t.header = {"k", "tiles", "holes"};
    t.rows.push_back({std::to_string(k), std::to_string(s.size()),
                      std::to_string(iamonds::holes(s).count)});
    t.print(std::cout, format == "json" ? "json" : "");
    return kExitOk;
}

int cmd_enumerate(int n_max, bool with_free, bool with_holes, int jobs, int cap,
                  const std::string& format) {
    iamonds::EnumOptions opts;
    opts.jobs = jobs;
    opts.limits.max_n = cap;
    Table t;
    t.header = {"n", "fixed"};
    if (with_free) t.header.push_back("free");
    t.header.insert(t.header.end(), {"pmin_emp", "bmin_emp"});
    if (with_holes) t.header.push_back("fmax");
    for (int n = 1; n <= n_max; ++n) {
        const iamonds::EnumStats s = iamonds::enum_stats(n, with_free, with_holes, opts);
        std::vector<std::string> row{std::to_string(n), std::to_string(s.fixed_count)};
        if (with_free) row.push_back(std::to_string(s.free_count));
        row.push_back(std::to_string(s.min_perimeter));
        row.push_back(std::to_string(s.min_interior_edges));
        if (with_holes) row.push_back(std::to_string(s.max_holes));
        t.rows.push_back(std::move(row));
    }
    t.print(std::cout, format);
    return kExitOk;
}

int cmd_search_g(long long h, int cap, int jobs, const std::string& out_path,
                 const std::string& format) {
    iamonds::EnumOptions opts;
    opts.jobs = jobs;
    try {
        const iamonds::GSearchResult r = iamonds::g_min_tiles(h, cap, opts);
        iamonds::DocumentMetadata meta;
        meta.name = "g_witness_h" + std::to_string(h);
        meta.provenance = "exhaustive search";
        const std::string path =
            out_path.empty() ? "g" + std::to_string(h) + "_witness.json" : out_path;
        write_file(path, iamonds::to_json(r.witness, meta) + "\n");
        Table t;
        t.header = {"h", "g_tiles", "holes_found", "exact", "witness_file"};
        t.rows.push_back({std::to_string(r.h), std::to_string(r.tiles),
                          std::to_string(r.holes_found), r.exact ? "true" : "false", path});
        t.print(std::cout, format);
        return kExitOk;
    } catch (const iamonds::WitnessNotFoundError& e) {
        std::cerr << "search-g: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

int cmd_validate(const std::string& path, const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "validate: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        iamonds::DocumentMetadata meta;
        const Polyiamond a = iamonds::from_json(buf.str(), meta);
        const long long n = a.size();
        const long long p = iamonds::perimeter(a);
        const long long b = iamonds::interior_edges(a);
        const iamonds::HoleSummary hs = iamonds::holes(a);
        const iamonds::BoundReport bound = iamonds::m_bound(n, hs.count);
        const bool identity = 3 * n == p + 2 * b;
        const bool split = p == hs.hole_perimeter + hs.outer_perimeter;
        const bool bound_ok = bound.feasible;
        Table t;
        t.header = {"property", "value"};
        t.rows = {{"valid", "true"},
                  {"tiles", std::to_string(n)},
                  {"perimeter", std::to_string(p)},
                  {"interior_edges", std::to_string(b)},
                  {"holes", std::to_string(hs.count)},
                  {"hole_area_total", std::to_string(hs.total_area)},
                  {"hole_perimeter", std::to_string(hs.hole_perimeter)},
                  {"outer_perimeter", std::to_string(hs.outer_perimeter)},
                  {"dual_tree", iamonds::dual_graph_is_tree(a) ? "true" : "false"},
                  {"identity_3n_eq_p_plus_2b", identity ? "true" : "false"},
                  {"identity_p_eq_pout_plus_ph", split ? "true" : "false"},
                  {"m_bound", bound.m_value.str()},
                  {"m_bound_feasible", bound_ok ? "true" : "false"}};
        t.print(std::cout, format);
        return identity && split && bound_ok ? kExitOk : kExitVerificationFailed;
    } catch (const std::exception& e) {
        if (format == "json")
            std::cout << json{{"valid", false}, {"error", e.what()}}.dump() << "\n";
        else
            std::cout << "valid\tfalse\nerror\t" << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

int cmd_verify_paper(int k_max, int n_cap, int jobs, const std::string& format) {
    iamonds::VerifyOptions opts;
    opts.k_max = k_max;
    opts.enum_cap = n_cap;
    opts.jobs = jobs;
    const auto results = iamonds::run_verification(opts);
    bool all = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"criterion", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        std::cout << arr.dump() << "\n";
    } else {
        int i = 0;
        for (const auto& r : results) {
            ++i;
            std::cout << "[" << i << "/" << results.size() << "] "
                      << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.passed) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all = all && r.passed;
        }
        std::cout << (all ? "all criteria passed" : "VERIFICATION FAILED") << "\n";
    }
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyiamond topology toolkit: extremal hole bounds, spirals, enumeration"};
    app.require_subcommand(1);

    std::string format = "table";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "svg", "text"}));
    };

    // pmin
    long long pmin_n = 0;
    auto* pmin_cmd = app.add_subcommand("pmin", "table of p_min(1..N) with increments");
    pmin_cmd->add_option("N", pmin_n, "upper bound")->required()->check(CLI::PositiveNumber);
    add_format(pmin_cmd);

    // bound
    long long bound_n = 0, bound_h = 0;
    auto* bound_cmd = app.add_subcommand("bound", "exact-rational M(n,h) report");
    bound_cmd->add_option("--tiles", bound_n, "tile count n")->required()
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--holes", bound_h, "hole count h")->required()
        ->check(CLI::NonNegativeNumber);
    add_format(bound_cmd);

    // gbound
    long long gbound_h = 0;
    auto* gbound_cmd = app.add_subcommand("gbound", "lower bound for g(h)");
    gbound_cmd->add_option("H", gbound_h, "hole count")->required()->check(CLI::PositiveNumber);
    add_format(gbound_cmd);

    // spiral
    int spiral_k = 0;
    std::string spiral_out;
    bool spiral_certify = false;
    auto* spiral_cmd = app.add_subcommand("spiral", "build Spir_k, optionally certify");
    spiral_cmd->add_option("K", spiral_k, "spiral index (>= 2)")->required();
    spiral_cmd->add_option("--out", spiral_out, "write the shape to FILE");
    spiral_cmd->add_flag("--certify", spiral_certify, "verify the structure theorem bundle");
    add_format(spiral_cmd);

    // enumerate
    int enum_n = 0, enum_jobs = 0, enum_cap = 16;
    bool enum_free = false, enum_holes = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive stats for n = 1..N");
    enum_cmd->add_option("N", enum_n, "largest size")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--free", enum_free, "count free polyiamonds too");
    enum_cmd->add_flag("--holes", enum_holes, "track max holes and witness");
    enum_cmd->add_option("--jobs", enum_jobs, "parallel jobs (0 = all)");
    enum_cmd->add_option("--cap", enum_cap, "enumeration size cap");
    add_format(enum_cmd);

    // search-g
    long long sg_h = 0;
    int sg_cap = 0, sg_jobs = 0;
    std::string sg_out;
    auto* sg_cmd = app.add_subcommand("search-g", "minimal tiles for H holes, with witness");
    sg_cmd->add_option("H", sg_h, "hole count")->required()->check(CLI::PositiveNumber);
    sg_cmd->add_option("--cap", sg_cap, "largest n to try (default bound+6)");
    sg_cmd->add_option("--jobs", sg_jobs, "parallel jobs (0 = all)");
    sg_cmd->add_option("--out", sg_out, "witness file path");
    add_format(sg_cmd);

    // validate
    std::string validate_path;
    auto* val_cmd = app.add_subcommand("validate", "property report for a shape document");
    val_cmd->add_option("FILE", validate_path, "JSON document")->required();
    add_format(val_cmd);

    // verify-paper
    int vp_kmax = 50, vp_ncap = 12, vp_jobs = 0;
    auto* vp_cmd = app.add_subcommand("verify-paper", "run every acceptance criterion");
    vp_cmd->add_option("--kmax", vp_kmax, "spiral certification range");
    vp_cmd->add_option("--ncap", vp_ncap, "enumeration range for identity/bound suites");
    vp_cmd->add_option("--jobs", vp_jobs, "parallel jobs (0 = all)");
    add_format(vp_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(pmin_cmd)) return cmd_pmin(pmin_n, format);
        if (app.got_subcommand(bound_cmd)) return cmd_bound(bound_n, bound_h, format);
        if (app.got_subcommand(gbound_cmd)) return cmd_gbound(gbound_h, format);
        if (app.got_subcommand(spiral_cmd))
            return cmd_spiral(spiral_k, spiral_out, format, spiral_certify);
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(enum_n, enum_free, enum_holes, enum_jobs, enum_cap, format);
        if (app.got_subcommand(sg_cmd)) {
            const int cap = sg_cap > 0
                                ? sg_cap
                                : static_cast<int>(iamonds::g_lower_bound(sg_h)) + 6;
            return cmd_search_g(sg_h, cap, sg_jobs, sg_out, format);
        }
        if (app.got_subcommand(val_cmd)) return cmd_validate(validate_path, format);
        if (app.got_subcommand(vp_cmd))
            return cmd_verify_paper(vp_kmax, vp_ncap, vp_jobs, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
