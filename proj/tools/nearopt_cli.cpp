#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nearopt/colorer.hpp"
#include "nearopt/decompose.hpp"
#include "nearopt/detect.hpp"
#include "nearopt/graph.hpp"
#include "nearopt/harness.hpp"
#include "nearopt/oracles.hpp"
#include "nearopt/witnesses.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw nearopt::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nearopt::Graph load_graph(const std::string& path) {
    const std::string text = slurp(path);
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return nearopt::parse_json_graph(text);
    std::vector<std::string> warnings;
    auto g = nearopt::parse_dimacs(text, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return g;
}

void write_text(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream o(out);
    if (!o) throw nearopt::ParseError("cannot open " + out + " for writing");
    o << text;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

void print_not_member(const nearopt::ClassReport& rep) {
    if (rep.violation)
        std::cout << "not a member: induced " << rep.violation->pattern << " on vertices "
                  << join(rep.violation->map) << "\n";
    else
        std::cout << "not a member\n";
}

int run_check(const std::string& file) {
    auto g = load_graph(file);
    auto rep = nearopt::check_class_membership(g);
    if (!rep.member()) {
        print_not_member(rep);
        return 1;
    }
    std::cout << "member: n=" << g.n() << " m=" << g.edge_count() << "\n";
    return 0;
}

int run_color(const std::string& file, const std::string& cert_out, bool fallback,
              std::uint64_t budget) {
    auto g = load_graph(file);
    nearopt::ColorOptions opts;
    opts.fallback_exact = fallback;
    opts.oracle_budget = budget;
    auto cert = nearopt::color_near_optimal(g, opts);
    std::cout << "case " << nearopt::to_string(cert.tag) << "\n";
    if (!cert.anchor.empty()) std::cout << "anchor " << join(cert.anchor) << "\n";
    std::cout << "colors_used " << cert.colors_used << "\n";
    std::cout << "bound " << cert.bound_claim << "\n";
    if (cert.omega) std::cout << "omega " << *cert.omega << "\n";
    std::string why;
    const bool ok = nearopt::revalidate_certificate(g, cert.to_json(), &why);
    std::cout << "validated " << (ok ? "true" : "false") << "\n";
    if (!ok) std::cerr << "certificate self-check failed: " << why << "\n";
    if (!cert_out.empty()) write_text(cert.to_json() + "\n", cert_out);
    return ok ? 0 : 3;
}

void print_violations(const std::vector<nearopt::PropertyViolation>& viols) {
    for (const auto& v : viols)
        std::cout << "violated " << v.property << " i=" << v.index << " witness "
                  << join(v.witness) << "\n";
    if (viols.empty()) std::cout << "all properties hold\n";
}

int run_decompose(const std::string& file, const std::string& cycle_csv) {
    auto g = load_graph(file);
    std::vector<int> cyc;
    std::stringstream ss(cycle_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) cyc.push_back(std::stoi(tok));

    auto show = [](const char* name, int i, const nearopt::Bitset& s) {
        std::cout << name << i << " = {" << join(s.to_vector()) << "}\n";
    };
    if (cyc.size() == 5) {
        std::array<int, 5> c;
        std::copy(cyc.begin(), cyc.end(), c.begin());
        auto res = nearopt::decompose_c5(g, c);
        if (auto* w = std::get_if<nearopt::K4eWitness>(&res)) {
            std::cout << "K4-e witness on vertices " << w->vertices[0] << " " << w->vertices[1]
                      << " " << w->vertices[2] << " " << w->vertices[3] << "\n";
            return 0;
        }
        const auto& d = std::get<nearopt::C5Decomposition>(res);
        for (int i = 1; i <= 5; ++i) show("A", i, d.a(i));
        for (int i = 1; i <= 5; ++i) show("B", i, d.b(i));
        for (int i = 1; i <= 5; ++i) show("D", i, d.d(i));
        for (int i = 1; i <= 5; ++i) show("Z", i, d.z(i));
        std::cout << "T = {" << join(d.t().to_vector()) << "}\n";
        print_violations(nearopt::validate_c5_properties(g, d));
        return 0;
    }
    if (cyc.size() == 7) {
        std::array<int, 7> c;
        std::copy(cyc.begin(), cyc.end(), c.begin());
        auto res = nearopt::decompose_c7(g, c);
        if (auto* u = std::get_if<nearopt::UnclassifiedVertex>(&res)) {
            std::cout << "vertex " << u->vertex << " matches no trace family (cycle positions "
                      << join(u->trace) << ")\n";
            return 0;
        }
        const auto& d = std::get<nearopt::C7Decomposition>(res);
        for (int i = 1; i <= 7; ++i) show("Q", i, d.q(i));
        for (int i = 1; i <= 7; ++i) show("X", i, d.x(i));
        for (int i = 1; i <= 7; ++i) show("Y", i, d.y(i));
        for (int i = 1; i <= 7; ++i) show("L", i, d.l(i));
        std::cout << "M = {" << join(d.m().to_vector()) << "}\n";
        print_violations(nearopt::validate_c7_claims(g, d));
        return 0;
    }
    std::cerr << "error: --cycle needs 5 or 7 comma-separated vertex ids\n";
    return 2;
}

int run_oracle(const std::string& which, const std::string& file, std::uint64_t budget) {
    auto g = load_graph(file);
    if (which == "omega") {
        auto r = nearopt::clique_number(g);
        std::cout << "omega " << r.omega << "\n";
        std::cout << "clique " << join(r.witness) << "\n";
        return 0;
    }
    auto r = nearopt::chromatic_number(g, budget);
    std::cout << "chi " << r.chi() << "\n";
    std::cout << "nodes " << r.nodes << "\n";
    return 0;
}

int run_witness(const std::string& kind, int n, bool as_json, const std::string& out) {
    nearopt::Graph g = [&] {
        if (kind == "schlafli") return nearopt::schlafli_complement();
        if (kind == "gstar") return nearopt::gstar();
        if (kind == "kn") return nearopt::complete_graph(n);
        if (kind == "cn") return nearopt::cycle_graph(n);
        throw std::invalid_argument("unknown witness kind: " + kind);
    }();
    write_text(as_json ? nearopt::write_json_graph(g) + "\n" : nearopt::write_dimacs(g), out);
    return 0;
}

int run_sweep(const std::string& n_range, double p, int count, std::uint64_t seed, bool exact,
              std::uint64_t budget, const std::string& report_out) {
    nearopt::SweepConfig cfg;
    const auto dots = n_range.find("..");
    if (dots == std::string::npos) {
        cfg.n_min = cfg.n_max = std::stoi(n_range);
    } else {
        cfg.n_min = std::stoi(n_range.substr(0, dots));
        cfg.n_max = std::stoi(n_range.substr(dots + 2));
    }
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw std::invalid_argument("bad --n range");
    cfg.p = p;
    cfg.count = count;
    cfg.seed = seed;
    cfg.compare_exact_chi = exact;
    cfg.oracle_budget = budget;
    auto rep = nearopt::run_sweep(cfg);
    std::cout << "samples " << rep.records.size() << "\n";
    for (const auto& [tag, k] : rep.tag_histogram) std::cout << "  " << tag << " " << k << "\n";
    std::cout << "failed " << rep.failed << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    if (!report_out.empty()) write_text(rep.to_json() + "\n", report_out);
    return rep.all_ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive near-optimal coloring for (P2+P4, K4-e)-free graphs"};
    app.require_subcommand(1);

    std::string file, cert_out, cycle_csv, which, kind, out, n_range = "5..12", report_out;
    bool fallback = false, as_json = false, exact = false;
    int wn = 0, count = 100;
    double p = 0.35;
    std::uint64_t seed = 1, budget = nearopt::default_oracle_budget();

    auto* c_check = app.add_subcommand("check", "test membership in the graph class");
    c_check->add_option("file", file, "graph file, DIMACS or JSON ('-' = stdin)")->required();

    auto* c_color = app.add_subcommand("color", "run the constructive coloring");
    c_color->add_option("file", file)->required();
    c_color->add_option("--certificate", cert_out, "write the certificate JSON here");
    c_color->add_flag("--fallback-exact", fallback, "fall back to the exact oracle on failure");
    c_color->add_option("--budget", budget, "oracle node budget");

    auto* c_dec = app.add_subcommand("decompose", "show the trace decomposition for a cycle");
    c_dec->add_option("file", file)->required();
    c_dec->add_option("--cycle", cycle_csv, "5 or 7 vertex ids, comma separated")->required();

    auto* c_oracle = app.add_subcommand("oracle", "exact chi / omega");
    c_oracle->add_option("which", which, "chi or omega")->required()->check(CLI::IsMember({"chi", "omega"}));
    c_oracle->add_option("file", file)->required();
    c_oracle->add_option("--budget", budget, "oracle node budget");

    auto* c_wit = app.add_subcommand("witness", "emit a named witness graph");
    c_wit->add_option("kind", kind, "schlafli | gstar | kn | cn")
        ->required()
        ->check(CLI::IsMember({"schlafli", "gstar", "kn", "cn"}));
    c_wit->add_option("n", wn, "order for kn / cn");
    c_wit->add_flag("--json", as_json, "emit JSON instead of DIMACS");
    c_wit->add_option("-o,--out", out, "output file (default stdout)");

    auto* c_sweep = app.add_subcommand("sweep", "random member sweep with property checks");
    c_sweep->add_option("--n", n_range, "vertex count range A..B");
    c_sweep->add_option("--p", p, "edge probability");
    c_sweep->add_option("--count", count, "number of samples");
    c_sweep->add_option("--seed", seed, "RNG seed");
    c_sweep->add_flag("--exact", exact, "also compare against the exact chi oracle");
    c_sweep->add_option("--budget", budget, "oracle node budget");
    c_sweep->add_option("--report", report_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return run_check(file);
        if (c_color->parsed()) return run_color(file, cert_out, fallback, budget);
        if (c_dec->parsed()) return run_decompose(file, cycle_csv);
        if (c_oracle->parsed()) return run_oracle(which, file, budget);
        if (c_wit->parsed()) {
            if ((kind == "kn" || kind == "cn") && wn <= 0) {
                std::cerr << "error: " << kind << " needs a positive order\n";
                return 2;
            }
            return run_witness(kind, wn, as_json, out);
        }
        if (c_sweep->parsed()) return run_sweep(n_range, p, count, seed, exact, budget, report_out);
    } catch (const nearopt::NotAMember& e) {
        print_not_member(e.report);
        return 1;
    } catch (const nearopt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nearopt::UnclassifiedVertexError& e) {
        std::cerr << "decomposition failed: " << e.what() << "\n";
        return 3;
    } catch (const nearopt::LemmaViolation& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const nearopt::OracleBudgetExceeded& e) {
        std::cerr << "oracle budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
