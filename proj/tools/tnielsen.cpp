// Command line driver for the one parameter fixed point invariants of fiber
// preserving maps of torus bundles over the circle.
//
// Subcommands:
//   report      classify one input and cross check the algebraic trace, the
//               geometric circle enumeration and the closed form count
//   classify    normal form of the pair of matrices only
//   sweep       run report over a parameter grid, in parallel
//   dump-model  print the cellular model matrices for given parameters
//
// Exit codes: 0 the computed quantities agree, 2 they disagree, 3 invalid
// input, 4 input outside the supported families.

#include <CLI11.hpp>
#include <ntb/ntb.hpp>

#include <atomic>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace ntb;

std::optional<IntMat2> parse_mat(const std::string& text) {
    std::vector<Int> vals;
    std::string cur;
    auto flush = [&]() -> bool {
        if (cur.empty()) return false;
        try {
            vals.emplace_back(cur);
        } catch (const std::exception&) {
            return false;
        }
        cur.clear();
        return true;
    };
    for (char ch : text) {
        if (ch == ',') {
            if (!flush()) return std::nullopt;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!flush() || vals.size() != 4) return std::nullopt;
    return IntMat2{vals[0], vals[1], vals[2], vals[3]};
}

ModelOptions options_from(const std::string& branch, const std::string& source) {
    ModelOptions o;
    o.y_branch = branch == "shifted" ? YNegBranch::Shifted : YNegBranch::Printed;
    o.source = source == "rederived" ? MatrixSource::Rederived : MatrixSource::Tabulated;
    return o;
}

int run_report(const std::string& a_text, const std::string& b_text, long long c1, long long c2,
               const std::string& format, const ModelOptions& options) {
    auto a = parse_mat(a_text);
    auto b = parse_mat(b_text);
    if (!a || !b) {
        std::cerr << "error: matrices must be four comma separated integers, row by row\n";
        return exit_invalid;
    }
    BundleMapData d{*a, *b, Int(c1), Int(c2)};
    Report r = make_report(d, options);
    if (format == "json")
        std::cout << to_json(r).dump(2) << "\n";
    else
        std::cout << render_text(r);
    return r.exit_code;
}

int run_classify(const std::string& a_text, const std::string& b_text, long long c1,
                 long long c2, const std::string& format) {
    auto a = parse_mat(a_text);
    auto b = parse_mat(b_text);
    if (!a || !b) {
        std::cerr << "error: matrices must be four comma separated integers, row by row\n";
        return exit_invalid;
    }
    BundleMapData d{*a, *b, Int(c1), Int(c2)};
    auto errors = validate(d);
    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "invalid input: " << e << "\n";
        return exit_invalid;
    }
    Classification cls = classify(d);
    if (format == "json") {
        ordered_json j;
        j["classified"] = cls.classified;
        if (cls.classified) {
            j["case"] = to_string(cls.label);
            j["P"] = ordered_json::array(
                {ordered_json::array({to_ll(cls.P.a11), to_ll(cls.P.a12)}),
                 ordered_json::array({to_ll(cls.P.a21), to_ll(cls.P.a22)})});
            j["A_normal"] = cls.A1.to_string();
            j["B_normal"] = cls.B1.to_string();
            j["c_normal"] = ordered_json::array({to_ll(cls.c1), to_ll(cls.c2)});
        }
        std::cout << j.dump(2) << "\n";
    } else if (cls.classified) {
        std::cout << "case " << to_string(cls.label) << " via P = " << cls.P.to_string()
                  << ": A -> " << cls.A1.to_string() << ", B -> " << cls.B1.to_string()
                  << ", c -> (" << cls.c1 << ", " << cls.c2 << ")\n";
    } else {
        std::cout << "unclassified: no basis change within the search bound reaches a "
                     "normal form\n";
    }
    return cls.classified ? 0 : exit_unsupported;
}

struct SweepPoint {
    long long c1 = 0, c2 = 0, b4 = 0;
};

int run_sweep(const std::string& family, std::pair<long long, long long> c1_range,
              std::pair<long long, long long> c2_range, std::vector<long long> b4_values,
              unsigned jobs, const std::string& format, const ModelOptions& options) {
    const bool square = family == "square";
    std::vector<SweepPoint> grid;
    if (square) {
        for (long long b4 : b4_values)
            for (long long c1 = c1_range.first; c1 <= c1_range.second; ++c1)
                for (long long c2 = c2_range.first; c2 <= c2_range.second; ++c2)
                    grid.push_back({c1, c2, b4});
    } else {
        for (long long c1 = c1_range.first; c1 <= c1_range.second; ++c1)
            for (long long c2 = c2_range.first; c2 <= c2_range.second; ++c2)
                grid.push_back({c1, c2, -1});
    }

    std::vector<Report> results(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
            const SweepPoint& p = grid[i];
            IntMat2 ident{1, 0, 0, 1};
            IntMat2 b = square ? IntMat2{1, 0, 0, Int(p.b4)} : IntMat2{1, 1, 0, -1};
            results[i] = make_report({ident, b, Int(p.c1), Int(p.c2)}, options);
        }
    };
    if (jobs == 0) jobs = 1;
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    int exit_code = 0;
    auto fold = [&exit_code](int code) {
        if (code == exit_disagree || exit_code == exit_disagree)
            exit_code = exit_disagree;
        else if (code != 0)
            exit_code = code;
    };
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Report& r = results[i];
            ordered_json row;
            row["c1"] = grid[i].c1;
            row["c2"] = grid[i].c2;
            if (square) row["b4"] = grid[i].b4;
            if (r.mf.mf) row["minimal_circle_count"] = to_ll(*r.mf.mf);
            if (r.trace_run) row["nielsen_number"] = to_ll(r.trace.nielsen);
            if (r.oracle_run) row["circle_count"] = r.circles.size();
            row["agree"] = r.agree;
            row["exit_code"] = r.exit_code;
            rows.push_back(row);
            fold(r.exit_code);
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Report& r = results[i];
            std::string line = "c1=" + std::to_string(grid[i].c1) +
                               " c2=" + std::to_string(grid[i].c2);
            if (square) line += " b4=" + std::to_string(grid[i].b4);
            if (r.mf.mf) line += " mf=" + r.mf.mf->str();
            if (r.trace_run) line += " nielsen=" + r.trace.nielsen.str();
            if (r.oracle_run) line += " circles=" + std::to_string(r.circles.size());
            line += r.agree ? " agree" : (" exit=" + std::to_string(r.exit_code));
            std::cout << line << "\n";
            fold(r.exit_code);
        }
    }
    return exit_code;
}

void print_matrix(const std::string& name, const RingMat& m) {
    std::cout << name << " (" << m.rows() << " x " << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " | ";
            std::cout << m.at(i, j).to_string();
        }
        std::cout << " ]\n";
    }
}

int run_dump(const std::string& family, long long c1, long long c2, long long b4,
             const ModelOptions& options) {
    CellModel m = family == "square"
                      ? build_square_model(Int(c1), Int(c2), Int(b4), options)
                      : build_triangulated_model(Int(c1), Int(c2), options);
    std::cout << "model " << m.name << " with c1 = " << m.c1 << ", c2 = " << m.c2
              << ", b4 = " << m.b4 << ", twist " << m.phi.to_string() << "\n";
    print_matrix("boundary degree 1", m.partial1);
    print_matrix("boundary degree 2", m.partial2);
    print_matrix("transport D0", m.d0);
    print_matrix("transport D1", m.d1);
    std::cout << "boundary squared is zero: " << (verify_complex(m) ? "yes" : "no") << "\n";
    HomotopyIdentityReport rep = chain_homotopy_identity(m);
    std::cout << "transport identity holds: " << (rep.ok ? "yes" : "no") << "\n";
    if (!rep.ok) {
        if (!rep.res0.is_zero()) print_matrix("degree 0 residue", rep.res0);
        if (!rep.res1.is_zero()) print_matrix("degree 1 residue", rep.res1);
        if (!rep.res2.is_zero()) print_matrix("degree 2 residue", rep.res2);
    }
    return 0;
}

std::pair<long long, long long> parse_range(const std::string& text, bool& ok) {
    ok = false;
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            long long v = std::stoll(text);
            ok = true;
            return {v, v};
        }
        long long lo = std::stoll(text.substr(0, colon));
        long long hi = std::stoll(text.substr(colon + 1));
        ok = lo <= hi;
        return {lo, hi};
    } catch (const std::exception&) {
        return {0, 0};
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one parameter fixed point invariants of torus bundle maps"};
    app.require_subcommand(1);

    std::string a_text = "1,0,0,1", b_text = "1,0,0,1";
    long long c1 = 0, c2 = 0, b4 = 2;
    std::string format = "text", branch = "printed", source = "tabulated";
    std::string family = "square";
    std::string c1_range_text = "-3:3", c2_range_text = "0:0";
    std::vector<long long> b4_values{-2, -1, 0, 2, 3};
    unsigned jobs = std::thread::hardware_concurrency();

    auto add_common = [&](CLI::App* cmd, bool with_c) {
        cmd->add_option("--A", a_text, "gluing matrix, row major: a11,a12,a21,a22");
        cmd->add_option("--B", b_text, "fiber matrix, row major: b11,b12,b21,b22");
        if (with_c) {
            cmd->add_option("--c1", c1, "first winding parameter");
            cmd->add_option("--c2", c2, "second winding parameter");
        }
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_model_options = [&](CLI::App* cmd) {
        cmd->add_option("--neg-branch", branch,
                        "helper sum branch for negative first parameters")
            ->check(CLI::IsMember({"printed", "shifted"}));
        cmd->add_option("--source", source, "model matrices: tabulated or rederived")
            ->check(CLI::IsMember({"tabulated", "rederived"}));
    };

    CLI::App* report = app.add_subcommand("report", "full cross checked computation");
    add_common(report, true);
    add_model_options(report);

    CLI::App* classify_cmd = app.add_subcommand("classify", "normal form only");
    add_common(classify_cmd, true);

    CLI::App* sweep = app.add_subcommand("sweep", "report over a parameter grid");
    sweep->add_option("--family", family, "model family: square or triangulated")
        ->check(CLI::IsMember({"square", "triangulated"}));
    sweep->add_option("--c1", c1_range_text, "c1 range lo:hi or single value");
    sweep->add_option("--c2", c2_range_text, "c2 range lo:hi or single value");
    sweep->add_option("--b4", b4_values, "square family b4 values")->delimiter(',');
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    add_model_options(sweep);

    CLI::App* dump = app.add_subcommand("dump-model", "print the model matrices");
    dump->add_option("--family", family, "model family: square or triangulated")
        ->check(CLI::IsMember({"square", "triangulated"}));
    dump->add_option("--c1", c1, "first winding parameter");
    dump->add_option("--c2", c2, "second winding parameter");
    dump->add_option("--b4", b4, "square family fiber parameter");
    add_model_options(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ntb::exit_invalid;
    }

    try {
        ModelOptions options = options_from(branch, source);
        if (report->parsed()) return run_report(a_text, b_text, c1, c2, format, options);
        if (classify_cmd->parsed()) return run_classify(a_text, b_text, c1, c2, format);
        if (sweep->parsed()) {
            bool ok1 = false, ok2 = false;
            auto r1 = parse_range(c1_range_text, ok1);
            auto r2 = parse_range(c2_range_text, ok2);
            if (!ok1 || !ok2) {
                std::cerr << "error: ranges must be lo:hi with lo <= hi\n";
                return ntb::exit_invalid;
            }
            if (family == "triangulated" && sweep->count("--c2") == 0) r2 = {-3, 3};
            return run_sweep(family, r1, r2, b4_values, jobs, format, options);
        }
        if (dump->parsed()) return run_dump(family, c1, c2, b4, options);
    } catch (const ntb::NonCircleFixedSet& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return ntb::exit_unsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ntb::exit_invalid;
    }
    return ntb::exit_invalid;
}
