// Command-line front end: gram construction, tropical cones and comparisons,
// SOS membership checks, certificate verification, and the finite-n oracle.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "limitcones/limitmat.hpp"
#include "limitcones/partitions.hpp"
#include "limitcones/polycone.hpp"
#include "limitcones/spectra.hpp"
#include "limitcones/sympoly.hpp"
#include "limitcones/tropical.hpp"

using namespace limitcones;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Budget {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds = 0;  // 0 = unlimited

    bool exceeded() const {
        if (seconds <= 0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               seconds;
    }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int default_threads() {
    if (const char* env = std::getenv("LIMITCONES_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

SymbolicGram gram_for(int degree, bool even, const std::string& source, bool dedup) {
    SymbolicGram g;
    if (source == "full") {
        g = build_limit_gram(even ? even_terms(degree / 2) : full_terms(degree / 2), even);
    } else {
        g = fixture_gram(source);
        if (g.degree() != degree)
            throw std::invalid_argument("fixture " + source + " has degree " +
                                        std::to_string(g.degree()));
    }
    return dedup ? dedup_rows(g) : g;
}

std::vector<Partition> trop_coordinates(int degree, bool even, bool restricted) {
    if (restricted) return non_odd_partitions(degree);
    if (even) return PartitionIndexer::even(degree).list();
    return PartitionIndexer(degree).list();
}

void check_trop_degree(int degree, bool even, bool restricted, bool extended) {
    if (degree < 2 || degree % 2 != 0) throw std::invalid_argument("degree must be even, >= 2");
    if (restricted) {
        if (degree != 6)
            throw std::invalid_argument("the restricted pipeline is implemented for degree 6");
        return;
    }
    if (even) {
        if (degree > 16) throw std::invalid_argument("even tropical cones support degree <= 16");
        if (degree > 12 && !extended)
            throw std::invalid_argument("degrees 14 and 16 require --extended");
    } else if (degree > 6) {
        throw std::invalid_argument("general tropical cones support degree <= 6");
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact limit cones of symmetric sums of squares and their tropicalizations"};
    app.require_subcommand(1);

    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for independent sub-computations");

    // ---- build-gram ----
    auto* cmd_gram = app.add_subcommand("build-gram", "construct a limit gram matrix");
    int bg_degree = 4;
    bool bg_even = false, bg_full = false, bg_dedup = false;
    std::string bg_fixture, bg_output;
    cmd_gram->add_option("--degree", bg_degree, "form degree 2d")->required();
    cmd_gram->add_flag("--even", bg_even, "even-form variant");
    cmd_gram->add_flag("--full", bg_full, "use the complete term list");
    cmd_gram->add_option("--fixture", bg_fixture, "named term-list fixture (R4, R4_raw, R6, R10e)");
    cmd_gram->add_flag("--dedup", bg_dedup, "drop literally repeated rows");
    cmd_gram->add_option("--output,-o", bg_output, "output file (default stdout)");

    // ---- trop ----
    auto* cmd_trop = app.add_subcommand("trop", "tropicalized dual cone facets");
    int tr_degree = 10;
    bool tr_even = false, tr_moment = false, tr_sos = false, tr_restricted = false;
    bool tr_extended = false;
    double tr_budget = 0;
    std::string tr_output, tr_format = "json";
    cmd_trop->add_option("--degree", tr_degree, "form degree 2d")->required();
    cmd_trop->add_flag("--even", tr_even, "even-form cones");
    cmd_trop->add_flag("--moment", tr_moment, "moment side (Hankel image hull)");
    cmd_trop->add_flag("--sos", tr_sos, "sums-of-squares side (gram minors)");
    cmd_trop->add_flag("--restricted-even-subspace", tr_restricted,
                       "degree-6 slice without odd-multiplicity coordinates");
    cmd_trop->add_flag("--extended", tr_extended, "allow the long degree 14/16 runs");
    cmd_trop->add_option("--budget", tr_budget, "wall-clock budget in seconds (exit 3 beyond)");
    cmd_trop->add_option("--format", tr_format, "json | ine")
        ->check(CLI::IsMember({"json", "ine"}));
    cmd_trop->add_option("--output,-o", tr_output, "output file (default stdout)");

    // ---- compare ----
    auto* cmd_cmp = app.add_subcommand("compare", "compare moment and sos tropical cones");
    int cp_degree = 10;
    bool cp_even = false, cp_restricted = false, cp_extended = false;
    double cp_budget = 0;
    std::string cp_output;
    cmd_cmp->add_option("--degree", cp_degree, "form degree 2d")->required();
    cmd_cmp->add_flag("--even", cp_even, "even-form cones");
    cmd_cmp->add_flag("--restricted-even-subspace", cp_restricted, "degree-6 restricted slice");
    cmd_cmp->add_flag("--extended", cp_extended, "allow the long degree 14/16 runs");
    cmd_cmp->add_option("--budget", cp_budget, "wall-clock budget in seconds (exit 3 beyond)");
    cmd_cmp->add_option("--output,-o", cp_output, "output file (default stdout)");

    // ---- check-sos ----
    auto* cmd_sos = app.add_subcommand("check-sos", "membership in the limit sos cone");
    int cs_degree = 6;
    std::string cs_form, cs_gram = "full", cs_export, cs_output;
    double cs_tol = 1e-9;
    int cs_iter = 100000;
    bool cs_dual_search = false, cs_float = false;
    cmd_sos->add_option("--degree", cs_degree, "form degree 2d")->required();
    cmd_sos->add_option("--form", cs_form, "limit form JSON file")->required();
    cmd_sos->add_option("--gram", cs_gram, "full or a fixture name");
    cmd_sos->add_option("--tol", cs_tol, "solver tolerance");
    cmd_sos->add_option("--max-iter", cs_iter, "solver iteration cap");
    cmd_sos->add_option("--export-sdpa", cs_export, "also write the instance in sparse SDPA form");
    cmd_sos->add_flag("--dual-search", cs_dual_search,
                      "attempt an exact dual certificate when the solver reports infeasibility");
    cmd_sos->add_flag("--float", cs_float, "include floating-point diagnostics");
    cmd_sos->add_option("--output,-o", cs_output, "output file (default stdout)");

    // ---- verify ----
    auto* cmd_ver = app.add_subcommand("verify", "exact certificate verification");
    std::string vf_cert, vf_output;
    cmd_ver->add_option("--certificate", vf_cert, "certificate JSON file")->required();
    cmd_ver->add_option("--output,-o", vf_output, "output file (default stdout)");

    // ---- oracle ----
    auto* cmd_orc = app.add_subcommand("oracle", "finite-n monomial mean product expansions");
    std::string or_pair, or_ns = "20,40,80";
    int or_max = 0;
    std::string or_output;
    cmd_orc->add_option("--pair", or_pair, "partition pair, e.g. \"(1,1)|(1)\"");
    cmd_orc->add_option("--n", or_ns, "comma-separated variable counts");
    cmd_orc->add_option("--suite", or_max, "run all pairs with |lambda|+|mu| <= this bound");
    cmd_orc->add_option("--output,-o", or_output, "output file (default stdout)");

    // ---- export ----
    auto* cmd_exp = app.add_subcommand("export", "convert cone files between formats");
    std::string ex_in, ex_format = "ine", ex_output;
    cmd_exp->add_option("--cone", ex_in, "cone JSON file")->required();
    cmd_exp->add_option("--format", ex_format, "ine | ext | json")
        ->check(CLI::IsMember({"ine", "ext", "json"}));
    cmd_exp->add_option("--output,-o", ex_output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gram) {
            if (bg_full == !bg_fixture.empty())
                throw std::invalid_argument("choose exactly one of --full / --fixture");
            SymbolicGram g = gram_for(bg_degree, bg_even, bg_full ? "full" : bg_fixture, bg_dedup);
            write_output(bg_output, gram_to_json(g));
            return 0;
        }

        if (*cmd_trop) {
            if (tr_moment == tr_sos)
                throw std::invalid_argument("choose exactly one of --moment / --sos");
            check_trop_degree(tr_degree, tr_even, tr_restricted, tr_extended);
            Budget budget{std::chrono::steady_clock::now(), tr_budget};
            Cone cone = [&] {
                if (tr_restricted)
                    return tr_moment ? trop_moment_restricted(tr_degree, threads)
                                     : trop_sos_restricted(tr_degree);
                return tr_moment ? trop_moment_cone(tr_degree, tr_even, threads)
                                 : trop_sos_pipeline(tr_degree, tr_even);
            }();
            if (budget.exceeded()) {
                write_output(tr_output, "{\"error\": \"budget exceeded during cone construction\"}");
                return kExitBudget;
            }
            if (tr_format == "ine")
                write_output(tr_output, write_ine(cone));
            else
                write_output(tr_output, facets_to_json(cone, trop_coordinates(tr_degree, tr_even,
                                                                              tr_restricted)));
            return 0;
        }

        if (*cmd_cmp) {
            check_trop_degree(cp_degree, cp_even, cp_restricted, cp_extended);
            Budget budget{std::chrono::steady_clock::now(), cp_budget};
            Cone mom = cp_restricted ? trop_moment_restricted(cp_degree, threads)
                                     : trop_moment_cone(cp_degree, cp_even, threads);
            if (budget.exceeded()) {
                write_output(cp_output, "{\"error\": \"budget exceeded after the moment cone\"}");
                return kExitBudget;
            }
            Cone sos = cp_restricted ? trop_sos_restricted(cp_degree)
                                     : trop_sos_pipeline(cp_degree, cp_even);
            if (budget.exceeded()) {
                write_output(cp_output, "{\"error\": \"budget exceeded after the sos cone\"}");
                return kExitBudget;
            }
            CompareReport rep = compare_cones(mom, sos);
            write_output(cp_output, compare_to_json(rep, trop_coordinates(cp_degree, cp_even,
                                                                          cp_restricted)));
            return 0;
        }

        if (*cmd_sos) {
            LimitForm f = limitform_from_json(read_file(cs_form));
            if (f.degree != cs_degree)
                throw std::invalid_argument("form degree does not match --degree");
            SymbolicGram g = gram_for(cs_degree, false, cs_gram, /*dedup=*/false);
            SdpInstance inst = assemble_sos_sdp(f, g);
            if (!cs_export.empty()) write_output(cs_export, export_sdpa(inst));
            SolveResult sol = solve_feasibility(inst, cs_tol, cs_iter);
            nlohmann::ordered_json j;
            j["status"] = sol.status == FeasStatus::Feasible           ? "feasible"
                          : sol.status == FeasStatus::LikelyInfeasible ? "likely_infeasible"
                                                                       : "undecided";
            j["iterations"] = sol.iterations;
            if (cs_float) j["gap"] = sol.gap;
            if (sol.status == FeasStatus::Feasible) {
                if (auto a = round_primal_certificate(sol, inst, Int(1000000));
                    a && verify_primal(*a, g, f)) {
                    j["exact_primal_certificate"] = nlohmann::ordered_json::parse(
                        certificate_to_json("primal", cs_gram, f, &*a, nullptr));
                }
            }
            if (sol.status != FeasStatus::Feasible && cs_dual_search) {
                DualSearchResult dual = find_dual_certificate(f, g);
                j["dual_certificate_found"] = dual.found;
                if (dual.found)
                    j["exact_dual_certificate"] = nlohmann::ordered_json::parse(
                        certificate_to_json("dual", cs_gram, f, nullptr, &dual.z));
            }
            write_output(cs_output, j.dump(2));
            return 0;
        }

        if (*cmd_ver) {
            ParsedCertificate cert = certificate_from_json(read_file(vf_cert));
            SymbolicGram g = gram_for(cert.form.degree, false,
                                      cert.gram_name.empty() ? "full" : cert.gram_name, false);
            nlohmann::ordered_json j;
            bool ok = false;
            if (cert.type == "primal") {
                ok = verify_primal(cert.primal, g, cert.form);
                j["verdict"] = ok ? "certified-sos" : "invalid";
            } else if (cert.type == "dual") {
                ok = verify_dual(cert.dual, g, cert.form);
                j["verdict"] = ok ? "certified-not-sos" : "invalid";
            } else {
                throw std::invalid_argument("unknown certificate type: " + cert.type);
            }
            write_output(vf_output, j.dump(2));
            return ok ? 0 : kExitUsage;
        }

        if (*cmd_orc) {
            std::ostringstream os;
            std::vector<int> ns = parse_int_list(or_ns);
            if (ns.empty()) throw std::invalid_argument("--n needs at least one value");
            auto report_pair = [&](const Partition& lam, const Partition& mu) {
                Partition target = glue({lam, mu});
                os << "pair " << lam << " * " << mu << "  (limit key " << target << ")\n";
                for (int n : ns) {
                    SymPoly p = monomial_mean_product(lam, mu, n);
                    Rat off = 0;
                    for (const auto& [key, val] : p.coeffs)
                        if (key != target) off += val;
                    os << "  n=" << n << "  coeff[" << target
                       << "]=" << rat_to_string(p.coeff(target))
                       << "  off-mass=" << rat_to_string(off) << "\n";
                }
            };
            if (!or_pair.empty()) {
                auto bar = or_pair.find('|');
                if (bar == std::string::npos)
                    throw std::invalid_argument("--pair expects \"(...)|(...)\"");
                report_pair(parse_partition(or_pair.substr(0, bar)),
                            parse_partition(or_pair.substr(bar + 1)));
            } else if (or_max > 0) {
                for (int a = 0; a <= or_max; ++a)
                    for (int b = a; a + b <= or_max; ++b)
                        for (const auto& lam : enum_partitions(a))
                            for (const auto& mu : enum_partitions(b)) report_pair(lam, mu);
            } else {
                throw std::invalid_argument("oracle needs --pair or --suite");
            }
            write_output(or_output, os.str());
            return 0;
        }

        if (*cmd_exp) {
            Cone c = cone_from_json(read_file(ex_in));
            if (ex_format == "ine")
                write_output(ex_output, write_ine(c));
            else if (ex_format == "ext")
                write_output(ex_output, write_ext(c));
            else
                write_output(ex_output, cone_to_json(dd_convert(c)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
