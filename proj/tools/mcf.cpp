#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "mcf/cones.hpp"
#include "mcf/dynamics.hpp"
#include "mcf/emit.hpp"
#include "mcf/eonestar.hpp"
#include "mcf/sadic.hpp"
#include "mcf/vector_spec.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::string algo = "brun";
    std::string algos;  // comma list for lyapunov-compare
    std::string vector_text = "1,e,pi";
    std::string format;
    std::string output;
    std::uint64_t iterations = 1000000;
    bool paper_scale = false;
    int orbits = 30;
    int ndivs = 30;
    int n = 2;
    std::size_t length = 40;
    std::size_t prefix = 10000;
    std::size_t nmax = 20;
    std::int64_t sum = 200;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MCF_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void write_output(const Options& opt, const std::string& data) {
    if (opt.output.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opt.output + "'");
    out << data;
}

std::string rational_string(const mcf::Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

json matrix_json(const mcf::IMat3& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back({r[0], r[1], r[2]});
    return rows;
}

// fixed map taking the projected simplex into the unit square
std::pair<double, double> scene_point(double px, double py) {
    return {(px + 0.85) / 1.7, (py + 1.0) / 1.7};
}

const std::array<std::string, 3> kFaceColors{"#e41a1c", "#377eb8", "#4daf4a"};

// ---- subcommand bodies ----

int run_matrices(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"branches", json::array()}};
        for (const auto& b : algo.branches)
            j["branches"].push_back({{"tag", b.tag},
                                     {"matrix", matrix_json(b.matrix)},
                                     {"determinant", b.determinant}});
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    std::string out = algo.name + " branch matrices\n";
    for (const auto& b : algo.branches) {
        out += "M_" + b.tag + " (det " + std::to_string(b.determinant) + "):\n";
        for (const auto& row : b.matrix) {
            out += " ";
            for (auto v : row) out += " " + std::to_string(v);
            out += "\n";
        }
    }
    write_output(opt, out);
    return 0;
}

int run_substitutions(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"branches", json::array()}};
        for (const auto& b : algo.branches)
            j["branches"].push_back(
                {{"tag", b.tag},
                 {"substitution",
                  {b.substitution.images[0], b.substitution.images[1], b.substitution.images[2]}},
                 {"dual_substitution",
                  {b.dual_substitution.images[0], b.dual_substitution.images[1],
                   b.dual_substitution.images[2]}}});
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    std::string out = algo.name + " substitutions\n";
    for (const auto& b : algo.branches)
        out += "sigma_" + b.tag + ": " + format_substitution(b.substitution) + "\n";
    out += algo.name + " dual substitutions\n";
    for (const auto& b : algo.branches)
        out += "sigma*_" + b.tag + ": " + format_substitution(b.dual_substitution) + "\n";
    write_output(opt, out);
    return 0;
}

int run_cylinders(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto cells = mcf::enumerate_cylinders(algo, opt.n);
    if (opt.format == "svg") {
        mcf::Scene scene;
        for (const auto& cell : cells) {
            mcf::Scene::Polygon poly;
            for (const auto& [px, py] : mcf::cylinder_polygon(cell))
                poly.points.push_back(scene_point(px, py));
            poly.fill = "none";
            poly.stroke = "#333333";
            scene.elements.push_back(poly);
        }
        write_output(opt, mcf::write_svg(scene));
        return 0;
    }
    if (opt.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& cell : cells) {
            std::string word;
            for (const auto& t : cell.word) word += (word.empty() ? "" : " ") + t;
            for (const auto& r : cell.rays)
                rows.push_back({word, std::to_string(r[0]), std::to_string(r[1]),
                                std::to_string(r[2])});
        }
        write_output(opt, mcf::write_csv({"word", "ray1", "ray2", "ray3"}, rows));
        return 0;
    }
    json j{{"algorithm", algo.name}, {"n", opt.n}, {"cells", json::array()}};
    for (const auto& cell : cells) {
        json rays = json::array();
        for (const auto& r : cell.rays) rays.push_back({r[0], r[1], r[2]});
        j["cells"].push_back({{"word", cell.word},
                              {"rays", rays},
                              {"area", rational_string(mcf::cell_polygon_exact(cell).area)},
                              {"product_matrix", matrix_json(cell.product_matrix)}});
    }
    write_output(opt, j.dump(2) + "\n");
    return 0;
}

int run_invariant_measure(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const std::uint64_t iters = opt.paper_scale ? 100000000ull : opt.iterations;
    const auto h = mcf::invariant_measure_histogram(algo, iters, opt.ndivs, opt.seed);
    if (opt.format == "json") {
        json j = h;
        j["algorithm"] = algo.name;
        j["seed"] = opt.seed;
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    if (opt.format == "svg") {
        mcf::Scene scene;
        std::uint64_t peak = 1;
        for (auto c : h.counts) peak = std::max(peak, c);
        for (const auto& cell : h.cells()) {
            const std::uint64_t c = h.counts[h.cell_index(cell.i, cell.j, cell.up)];
            if (c == 0) continue;
            const double n = h.ndivs;
            double ax, ay, bx, by, cx, cy;
            if (cell.up) {
                ax = cell.i / n; ay = cell.j / n;
                bx = (cell.i + 1) / n; by = cell.j / n;
                cx = cell.i / n; cy = (cell.j + 1) / n;
            } else {
                ax = (cell.i + 1) / n; ay = cell.j / n;
                bx = (cell.i + 1) / n; by = (cell.j + 1) / n;
                cx = cell.i / n; cy = (cell.j + 1) / n;
            }
            mcf::Scene::Polygon poly;
            for (auto [u, v] : {std::pair{ax, ay}, {bx, by}, {cx, cy}}) {
                auto [px, py] = mcf::plane_project(mcf::Vec3{u, v, 1.0 - u - v});
                poly.points.push_back(scene_point(px, py));
            }
            const double shade = static_cast<double>(c) / static_cast<double>(peak);
            const int level = 255 - static_cast<int>(245.0 * std::min(1.0, 0.15 + shade));
            char buf[8];
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, 255 - (255 - level) / 2);
            poly.fill = buf;
            poly.stroke = "none";
            scene.elements.push_back(poly);
        }
        write_output(opt, mcf::write_svg(scene));
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& cell : h.cells())
        rows.push_back({std::to_string(cell.i), std::to_string(cell.j),
                        cell.up ? "up" : "down",
                        std::to_string(h.counts[h.cell_index(cell.i, cell.j, cell.up)])});
    write_output(opt, mcf::write_csv({"i", "j", "orientation", "count"}, rows));
    return 0;
}

int run_natural_extension(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto states = mcf::natural_extension_sample(algo, opt.length, opt.seed);
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"seed", opt.seed}, {"states", json::array()}};
        for (const auto& s : states)
            j["states"].push_back({{"label", s.label},
                                   {"x", {s.x[0], s.x[1], s.x[2]}},
                                   {"a", {s.a[0], s.a[1], s.a[2]}},
                                   {"px", s.px},
                                   {"py", s.py},
                                   {"pax", s.pax},
                                   {"pay", s.pay}});
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    if (opt.format == "svg") {
        mcf::Scene scene;
        for (const auto& s : states) {
            auto [ux, uy] = scene_point(s.px, s.py);
            scene.elements.push_back(mcf::Scene::Dot{ux, uy, 0.0015, "#e41a1c"});
            auto [vx, vy] = scene_point(s.pax, s.pay);
            scene.elements.push_back(mcf::Scene::Dot{vx, vy, 0.0015, "#377eb8"});
        }
        write_output(opt, mcf::write_svg(scene));
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto& s = states[k];
        rows.push_back({std::to_string(k + 1), s.label, mcf::csv_double(s.x[0]),
                        mcf::csv_double(s.x[1]), mcf::csv_double(s.x[2]),
                        mcf::csv_double(s.a[0]), mcf::csv_double(s.a[1]),
                        mcf::csv_double(s.a[2]), mcf::csv_double(s.px), mcf::csv_double(s.py),
                        mcf::csv_double(s.pax), mcf::csv_double(s.pay)});
    }
    write_output(opt, mcf::write_csv({"step", "label", "x1", "x2", "x3", "a1", "a2", "a3",
                                      "px", "py", "pax", "pay"},
                                     rows));
    return 0;
}

int run_lyapunov(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const std::uint64_t iters = opt.paper_scale ? 100000000ull : opt.iterations;
    const auto table =
        mcf::lyapunov_table(algo, opt.orbits, iters, opt.seed, effective_threads(opt.threads));
    if (opt.format == "json") {
        write_output(opt, json(table).dump(2) + "\n");
        return 0;
    }
    write_output(opt, mcf::write_table_text(table));
    return 0;
}

int run_lyapunov_compare(const Options& opt) {
    std::vector<const mcf::AlgorithmDef*> algos;
    if (opt.algos.empty() || opt.algos == "all") {
        algos = mcf::all_algorithms();
    } else {
        std::size_t pos = 0;
        while (pos <= opt.algos.size()) {
            const std::size_t comma = opt.algos.find(',', pos);
            const std::string name = opt.algos.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            algos.push_back(&mcf::algorithm(name));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    const std::uint64_t iters = opt.paper_scale ? 100000000ull : opt.iterations;
    auto tables = mcf::lyapunov_comparison(algos, opt.orbits, iters, opt.seed,
                                           effective_threads(opt.threads));
    std::stable_sort(tables.begin(), tables.end(), [](const auto& a, const auto& b) {
        return a.ratio.mean > b.ratio.mean;
    });
    if (opt.format == "json") {
        json j{{"n_orbits", opt.orbits}, {"n_iterations", iters}, {"rows", tables}};
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    write_output(opt, mcf::write_comparison_text(tables));
    return 0;
}

int run_sadic(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto spec = mcf::parse_vector(opt.vector_text);
    mcf::Word word;
    if (spec.integers) {
        word = mcf::s_adic_word_integer(algo, *spec.integers);
    } else {
        word = mcf::s_adic_prefix(algo, spec.values, opt.length);
    }
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"vector", spec.repr}, {"word", word}};
        if (!spec.integers) {
            j["coding"] = mcf::coding(algo, spec.values, 10);
            j["length"] = opt.length;
        }
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    write_output(opt, word + "\n");
    return 0;
}

int run_complexity(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto spec = mcf::parse_vector(opt.vector_text);
    mcf::Word word;
    if (spec.integers)
        word = mcf::s_adic_word_integer(algo, *spec.integers);
    else
        word = mcf::s_adic_word(algo, spec.values, opt.prefix);
    const auto p = mcf::factor_complexity(word, std::min(opt.nmax, word.size()));
    if (opt.format == "json") {
        json j{{"algorithm", algo.name},
               {"vector", spec.repr},
               {"prefix_length", word.size()},
               {"complexity", p}};
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(p[i]);
    }
    out += ")\n";
    write_output(opt, out);
    return 0;
}

int run_discrepancy(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto entries =
        mcf::discrepancy_statistics(algo, opt.sum, effective_threads(opt.threads));
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"sum", opt.sum}, {"entries", json::array()}};
        for (const auto& e : entries) {
            json row{{"v", {e.v[0], e.v[1], e.v[2]}}, {"status", mcf::to_string(e.status)}};
            if (e.status == mcf::DiscrepancyEntry::Status::Ok)
                row["discrepancy"] = static_cast<double>(e.value);
            else
                row["detail"] = e.detail;
            j["entries"].push_back(row);
        }
        write_output(opt, j.dump() + "\n");
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : entries) {
        const bool ok = e.status == mcf::DiscrepancyEntry::Status::Ok;
        rows.push_back({std::to_string(e.v[0]), std::to_string(e.v[1]), std::to_string(e.v[2]),
                        ok ? mcf::csv_double(static_cast<double>(e.value)) : "",
                        mcf::to_string(e.status)});
    }
    write_output(opt, mcf::write_csv({"v1", "v2", "v3", "discrepancy", "status"}, rows));
    return 0;
}

int run_eonestar(const Options& opt) {
    const auto& algo = mcf::algorithm(opt.algo);
    const auto spec = mcf::parse_vector(opt.vector_text);
    const auto patch = mcf::e_one_star_iterate(algo, spec.values, opt.n);
    if (opt.format == "json") {
        json j{{"algorithm", algo.name}, {"vector", spec.repr}, {"n", opt.n},
               {"faces", json::array()}};
        for (const auto& f : patch)
            j["faces"].push_back(
                {{"x", f.position[0]}, {"y", f.position[1]}, {"z", f.position[2]},
                 {"type", f.type}});
        write_output(opt, j.dump(2) + "\n");
        return 0;
    }
    if (opt.format == "svg") {
        // project face rhombi; fit the patch into the unit square
        double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
        std::vector<std::pair<std::array<std::pair<double, double>, 4>, int>> quads;
        for (const auto& f : patch) {
            std::array<std::pair<double, double>, 4> q;
            int k = 0;
            for (const auto& corner : mcf::face_corners(f)) {
                const mcf::Vec3 c{static_cast<double>(corner[0]), static_cast<double>(corner[1]),
                                  static_cast<double>(corner[2])};
                q[static_cast<std::size_t>(k++)] = mcf::plane_project(c);
            }
            for (const auto& [px, py] : q) {
                lo_x = std::min(lo_x, px); hi_x = std::max(hi_x, px);
                lo_y = std::min(lo_y, py); hi_y = std::max(hi_y, py);
            }
            quads.push_back({q, f.type});
        }
        const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
        mcf::Scene scene;
        for (const auto& [q, type] : quads) {
            mcf::Scene::Polygon poly;
            for (const auto& [px, py] : q)
                poly.points.push_back({0.05 + 0.9 * (px - lo_x) / span,
                                       0.05 + 0.9 * (py - lo_y) / span});
            poly.fill = kFaceColors[static_cast<std::size_t>(type - 1)];
            poly.stroke = "#000000";
            scene.elements.push_back(poly);
        }
        write_output(opt, mcf::write_svg(scene));
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : patch)
        rows.push_back({std::to_string(f.position[0]), std::to_string(f.position[1]),
                        std::to_string(f.position[2]), std::to_string(f.type)});
    write_output(opt, mcf::write_csv({"x", "y", "z", "face_type"}, rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seven 3-dimensional continued fraction algorithms: orbits, words, "
                 "cylinders, Lyapunov exponents, dual geometry"};
    app.require_subcommand(1);
    Options opt;

    auto add_algo = [&opt](CLI::App* cmd) {
        cmd->add_option("--algo", opt.algo,
                        "algorithm: brun | selmer | poincare | fully-subtractive | arp | "
                        "reverse | cassaigne");
    };
    auto add_format = [&opt](CLI::App* cmd, const std::string& allowed,
                             const std::string& def) {
        opt.format = def;
        cmd->add_option("--format", opt.format, "output format (" + allowed + ")")
            ->check(CLI::IsMember(CLI::detail::split(allowed, '|')));
    };
    auto add_output = [&opt](CLI::App* cmd) {
        cmd->add_option("--output,-o", opt.output, "write to file instead of stdout");
    };
    auto add_seed = [&opt](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "random seed (fixed seed gives identical output)");
    };

    auto* matrices = app.add_subcommand("matrices", "branch matrices of one algorithm");
    add_algo(matrices);
    add_format(matrices, "text|json", "text");
    add_output(matrices);

    auto* subs = app.add_subcommand("substitutions", "substitutions and dual substitutions");
    add_algo(subs);
    add_format(subs, "text|json", "text");
    add_output(subs);

    auto* cyl = app.add_subcommand("cylinders", "exact n-cylinders of the cone partition");
    add_algo(cyl);
    cyl->add_option("--n", opt.n, "cylinder depth")->check(CLI::PositiveNumber);
    add_format(cyl, "json|csv|svg", "json");
    add_output(cyl);

    auto* inv = app.add_subcommand("invariant-measure", "orbit histogram on the simplex");
    add_algo(inv);
    inv->add_option("--iterations", opt.iterations, "orbit length")->check(CLI::PositiveNumber);
    inv->add_flag("--paper-scale", opt.paper_scale, "use 10^8 iterations");
    inv->add_option("--ndivs", opt.ndivs, "grid resolution")->check(CLI::PositiveNumber);
    add_seed(inv);
    add_format(inv, "csv|json|svg", "csv");
    add_output(inv);

    auto* nat = app.add_subcommand("natural-extension", "coupled forward/dual orbit sample");
    add_algo(nat);
    opt.length = 1200;
    nat->add_option("--n", opt.length, "number of steps")->check(CLI::PositiveNumber);
    add_seed(nat);
    add_format(nat, "csv|json|svg", "csv");
    add_output(nat);

    auto* lyap = app.add_subcommand("lyapunov", "Lyapunov exponents of one algorithm");
    add_algo(lyap);
    lyap->add_option("--orbits", opt.orbits, "number of orbits")->check(CLI::PositiveNumber);
    lyap->add_option("--iterations", opt.iterations, "iterations per orbit")
        ->check(CLI::PositiveNumber);
    lyap->add_flag("--paper-scale", opt.paper_scale, "use 10^8 iterations per orbit");
    add_seed(lyap);
    lyap->add_option("--threads", opt.threads, "worker threads (default: MCF_THREADS or cores)");
    add_format(lyap, "text|json", "text");
    add_output(lyap);

    auto* cmp = app.add_subcommand("lyapunov-compare", "comparison table across algorithms");
    cmp->add_option("--algos", opt.algos, "comma-separated algorithm list (default: all)");
    cmp->add_option("--orbits", opt.orbits, "orbits per algorithm")->check(CLI::PositiveNumber);
    cmp->add_option("--iterations", opt.iterations, "iterations per orbit")
        ->check(CLI::PositiveNumber);
    cmp->add_flag("--paper-scale", opt.paper_scale, "use 10^8 iterations per orbit");
    add_seed(cmp);
    cmp->add_option("--threads", opt.threads, "worker threads");
    add_format(cmp, "text|json", "text");
    add_output(cmp);

    auto* sadic = app.add_subcommand("sadic", "word along the orbit coding of a vector");
    add_algo(sadic);
    sadic->add_option("--vector", opt.vector_text,
                      "direction: integers, rationals p/q, decimals, or e/pi");
    opt.length = 40;
    sadic->add_option("--length", opt.length, "prefix length for non-integer directions")
        ->check(CLI::PositiveNumber);
    add_format(sadic, "text|json", "text");
    add_output(sadic);

    auto* cpx = app.add_subcommand("complexity", "factor complexity of the orbit word");
    add_algo(cpx);
    cpx->add_option("--vector", opt.vector_text, "direction vector");
    cpx->add_option("--prefix", opt.prefix, "prefix length cap")->check(CLI::PositiveNumber);
    cpx->add_option("--nmax", opt.nmax, "largest factor length");
    add_format(cpx, "text|json", "text");
    add_output(cpx);

    auto* disc = app.add_subcommand("discrepancy",
                                    "discrepancy of every direction with a fixed coordinate sum");
    add_algo(disc);
    disc->add_option("--sum", opt.sum, "coordinate sum of the directions")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{100000}));
    disc->add_option("--threads", opt.threads, "worker threads");
    add_format(disc, "csv|json", "csv");
    add_output(disc);

    auto* eos = app.add_subcommand("eonestar", "dual-substitution digital-plane patch");
    add_algo(eos);
    eos->add_option("--vector", opt.vector_text, "direction vector");
    eos->add_option("--n", opt.n, "number of iterations")
        ->check(CLI::Range(0, 1000));
    add_format(eos, "csv|json|svg", "csv");
    add_output(eos);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (matrices->parsed()) return run_matrices(opt);
        if (subs->parsed()) return run_substitutions(opt);
        if (cyl->parsed()) return run_cylinders(opt);
        if (inv->parsed()) return run_invariant_measure(opt);
        if (nat->parsed()) return run_natural_extension(opt);
        if (lyap->parsed()) return run_lyapunov(opt);
        if (cmp->parsed()) return run_lyapunov_compare(opt);
        if (sadic->parsed()) return run_sadic(opt);
        if (cpx->parsed()) return run_complexity(opt);
        if (disc->parsed()) return run_discrepancy(opt);
        if (eos->parsed()) return run_eonestar(opt);
    } catch (const mcf::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
