// Command-line front end: expression normalization, the grading involution,
// Harish-Chandra projection and evaluation, twisted adjoint actions, orbit
// closures, central/anticentral solves, truncated highest-weight modules, and
// the verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error, 3 resource
// budget exhausted.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ospq/ospq.hpp"

using namespace ospq;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Weight parse_weight_arg(const std::string& s, int rank) {
    auto parts = split_commas(s);
    if (static_cast<int>(parts.size()) != rank)
        throw domain_error("expected " + std::to_string(rank) + " comma-separated coordinates");
    std::vector<int> t;
    for (const auto& p : parts) t.push_back(std::stoi(p));
    return Weight(t);
}

Gamma parse_bits_arg(const std::string& s, int rank) {
    std::vector<uint8_t> bits;
    if (s.find(',') != std::string::npos) {
        for (const auto& p : split_commas(s)) bits.push_back(uint8_t(std::stoi(p) & 1));
    } else {
        for (char c : s) {
            if (c != '0' && c != '1') throw domain_error("bits must be 0 or 1");
            bits.push_back(uint8_t(c - '0'));
        }
    }
    if (static_cast<int>(bits.size()) != rank)
        throw domain_error("expected " + std::to_string(rank) + " bits");
    return Gamma(bits);
}

Character parse_character_arg(const Algebra& A, const std::string& values,
                              const std::string& theta) {
    std::vector<Scalar> vals;
    for (const auto& p : split_commas(values)) vals.push_back(parse_scalar(A, p));
    if (static_cast<int>(vals.size()) != A.rank())
        throw domain_error("character needs exactly l values");
    Gamma th = theta.empty() ? Gamma::zero(A.rank()) : parse_bits_arg(theta, A.rank());
    return Character(vals, th.bits);
}

std::string verma_vector_str(const VermaModule& M, const VermaVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : v.entries) {
        NormalWord w = NormalWord::empty(M.algebra().rank());
        w.f = M.basis()[k].word;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + detail::word_str(w) + "*hw";
    }
    return out;
}

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"status", c.status},
                          {"witness", c.witness},
                          {"micros", c.micros}});
    return {{"suite", rep.suite},
            {"aborted", rep.aborted},
            {"failures", rep.failures()},
            {"checks", checks}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for a sign-group extended quantum enveloping algebra "
                 "of type B and its super twist"};
    app.require_subcommand(0, 1);

    int rank = 1;
    int height = 4;
    std::string rho = "half";
    std::string report_fmt = "tsv";
    app.add_option("--rank", rank, "rank l of the root system")->check(CLI::Range(1, 8));
    app.add_option("--height", height, "truncation height for windows")
        ->check(CLI::Range(1, 12));
    app.add_option("--rho", rho, "rho convention: half | literal")
        ->check(CLI::IsMember({"half", "literal"}));
    app.add_option("--report", report_fmt, "verification report format: tsv | nested")
        ->check(CLI::IsMember({"tsv", "nested"}));

    // normalize
    std::string norm_expr;
    CLI::App* cmd_norm = app.add_subcommand("normalize", "parse and print canonical form");
    cmd_norm->add_option("expr", norm_expr, "element expression")->required();

    // psi
    std::string psi_expr;
    CLI::App* cmd_psi = app.add_subcommand("psi", "apply the grading involution");
    cmd_psi->add_option("expr", psi_expr, "element expression")->required();

    // hc
    std::string hc_expr;
    CLI::App* cmd_hc = app.add_subcommand("hc", "Harish-Chandra projection onto the torus part");
    cmd_hc->add_option("expr", hc_expr, "element expression")->required();

    // eval
    std::string eval_expr, eval_char, eval_theta;
    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a torus element on a character");
    cmd_eval->add_option("expr", eval_expr, "torus element expression")->required();
    cmd_eval->add_option("--character", eval_char, "comma-separated scalar values on K_{beta_i}")
        ->required();
    cmd_eval->add_option("--theta", eval_theta, "sign-character bits");

    // ad / sad
    std::string ad_a, ad_x, ad_twist;
    CLI::App* cmd_ad = app.add_subcommand("ad", "twisted adjoint action");
    cmd_ad->add_option("a", ad_a, "acting element")->required();
    cmd_ad->add_option("x", ad_x, "target element")->required();
    cmd_ad->add_option("--twist", ad_twist, "twist bits (default all zero)");
    std::string sad_a, sad_x, sad_twist;
    CLI::App* cmd_sad = app.add_subcommand("sad", "twisted super adjoint action");
    cmd_sad->add_option("a", sad_a, "acting element (must be twisted-subalgebra)")->required();
    cmd_sad->add_option("x", sad_x, "target element")->required();
    cmd_sad->add_option("--twist", sad_twist, "twist bits (default all zero)");

    // orbit
    std::string orbit_seed;
    int orbit_height = -1;
    CLI::App* cmd_orbit = app.add_subcommand("orbit", "adjoint orbit closure of K_{-2 lambda}");
    cmd_orbit->add_option("--seed", orbit_seed, "twice-coordinates of 2*lambda")->required();
    cmd_orbit->add_option("--height", orbit_height, "window height (defaults to global)");

    // casimir / scasimir
    std::string cas_two_lambda;
    int cas_height = -1;
    CLI::App* cmd_cas = app.add_subcommand("casimir", "solve for the central element of a seed");
    cmd_cas->add_option("--two-lambda", cas_two_lambda, "twice-coordinates of 2*lambda")
        ->required();
    cmd_cas->add_option("--height", cas_height, "window height (defaults to global)");
    int scas_height = -1;
    CLI::App* cmd_scas = app.add_subcommand("scasimir", "the anticentral generator xi z");
    cmd_scas->add_option("--height", scas_height, "window height (defaults to rank+1)");

    // verma
    std::string v_char, v_theta, v_on, v_offset;
    int v_height = 3, v_offset_grade = 0, v_solver_height = -1;
    std::string v_act_expr;
    CLI::App* cmd_verma = app.add_subcommand("verma", "truncated highest-weight module");
    cmd_verma->add_option("--character", v_char, "comma-separated scalar values")->required();
    cmd_verma->add_option("--theta", v_theta, "sign-character bits");
    cmd_verma->add_option("--height", v_height, "truncation height");
    cmd_verma->add_option("--grade-offset", v_offset_grade, "grading offset bit")
        ->check(CLI::Range(0, 1));
    CLI::App* cmd_v_act = cmd_verma->add_subcommand("act", "act on a basis vector");
    cmd_v_act->add_option("expr", v_act_expr, "acting element")->required();
    cmd_v_act->add_option("--on", v_on, "lowering word, e.g. F1^2*F2 (default: highest vector)");
    CLI::App* cmd_v_sing = cmd_verma->add_subcommand("singular", "kernel of the raising action");
    cmd_v_sing->add_option("--offset", v_offset, "twice-coordinates of one weight offset");
    CLI::App* cmd_v_spec =
        cmd_verma->add_subcommand("scasimir-spectrum", "graded eigenvalues of xi z");
    cmd_v_spec->add_option("--solver-height", v_solver_height, "solve window for xi z");
    CLI::App* cmd_v_crit =
        cmd_verma->add_subcommand("criterion", "squared-form annihilation criterion");
    CLI::App* cmd_v_ann = cmd_verma->add_subcommand(
        "annihilation-check", "xi z annihilates the whole window (degenerate characters)");
    cmd_v_ann->add_option("--solver-height", v_solver_height, "solve window for xi z");

    // verify
    std::string suite;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "all|gradations|hopf|zhang|bar-relations|adjoint|center|verma")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RhoConvention conv = rho == "half" ? RhoConvention::HalfSum : RhoConvention::LiteralSum;
        Algebra A(rank, conv);

        if (*cmd_norm) {
            std::cout << to_string(parse_element(A, norm_expr)) << "\n";
        } else if (*cmd_psi) {
            std::cout << to_string(psi(A, parse_element(A, psi_expr))) << "\n";
        } else if (*cmd_hc) {
            std::cout << to_string(upsilon(parse_element(A, hc_expr)), rank) << "\n";
        } else if (*cmd_eval) {
            Character chi = parse_character_arg(A, eval_char, eval_theta);
            TorusElement t = upsilon(parse_element(A, eval_expr));
            std::cout << evaluate(t, chi).str() << "\n";
        } else if (*cmd_ad) {
            Gamma tw = ad_twist.empty() ? Gamma::zero(rank) : parse_bits_arg(ad_twist, rank);
            std::cout << to_string(adjoint_act(A, parse_element(A, ad_a),
                                               parse_element(A, ad_x), tw))
                      << "\n";
        } else if (*cmd_sad) {
            Gamma tw = sad_twist.empty() ? Gamma::zero(rank) : parse_bits_arg(sad_twist, rank);
            std::cout << to_string(super_adjoint_act(A, parse_element(A, sad_a),
                                                     parse_element(A, sad_x), tw))
                      << "\n";
        } else if (*cmd_orbit) {
            int h = orbit_height > 0 ? orbit_height : height;
            OrbitResult o = ad_orbit_span(A, parse_weight_arg(orbit_seed, rank), h);
            std::cout << "dimension\t" << o.basis.size() << "\n";
            std::cout << "stabilized\t" << (o.stabilized ? "true" : "false") << "\n";
            for (const Element& b : o.basis) std::cout << to_string(b) << "\n";
        } else if (*cmd_cas) {
            int h = cas_height > 0 ? cas_height : height;
            Element z = solve_central(A, parse_weight_arg(cas_two_lambda, rank), h);
            std::cout << to_string(z) << "\n";
        } else if (*cmd_scas) {
            int h = scas_height > 0 ? scas_height : rank + 1;
            std::cout << to_string(solve_anticentral(A, h)) << "\n";
        } else if (*cmd_verma) {
            Character chi = parse_character_arg(A, v_char, v_theta);
            VermaModule M(A, chi, v_height, v_offset_grade);
            if (*cmd_v_act) {
                VermaVector start = VermaVector::unit(*M.index_of(Letters{}));
                if (!v_on.empty()) {
                    Element wexpr = parse_element(A, v_on);
                    start = VermaVector();
                    for (const auto& [w, c] : wexpr.terms()) {
                        if (!w.e.empty() || !w.torus.is_zero() || !w.gamma.is_zero())
                            throw domain_error("--on must be a lowering word");
                        auto idx = M.index_of(w.f);
                        if (!idx) throw domain_error("--on is outside the window");
                        start.add(*idx, c);
                    }
                }
                auto img = M.act(parse_element(A, v_act_expr), start);
                std::cout << verma_vector_str(M, img.vec) << "\n";
                if (img.overflow) std::cout << "overflow\ttrue\n";
            } else if (*cmd_v_sing) {
                auto report_offset = [&](const Weight& nu) {
                    for (const auto& [vec, chi2] : M.singular_vectors(nu)) {
                        std::cout << "offset\t" << nu.str() << "\t"
                                  << verma_vector_str(M, vec) << "\tcharacter\t";
                        for (size_t i = 0; i < chi2.values.size(); ++i)
                            std::cout << (i ? "," : "") << chi2.values[i].str();
                        std::cout << "\ttheta\t";
                        for (size_t i = 0; i < chi2.theta.size(); ++i)
                            std::cout << (i ? "," : "") << int(chi2.theta[i]);
                        std::cout << "\n";
                    }
                };
                if (!v_offset.empty()) {
                    report_offset(parse_weight_arg(v_offset, rank));
                } else {
                    std::set<std::vector<int>> seen;
                    for (const auto& b : M.basis())
                        if (!b.word.empty() && seen.insert(b.offset.twice).second)
                            report_offset(b.offset);
                }
            } else if (*cmd_v_spec) {
                int h = v_solver_height > 0 ? v_solver_height : rank + 1;
                Element sc = solve_anticentral(A, h);
                auto [e0, e1] = M.graded_spectrum(sc);
                std::cout << "grade0\t" << e0.str() << "\n";
                std::cout << "grade1\t" << e1.str() << "\n";
            } else if (*cmd_v_crit) {
                std::cout << (annihilation_criterion(A.roots(), chi) ? "true" : "false")
                          << "\n";
            } else if (*cmd_v_ann) {
                int h = v_solver_height > 0 ? v_solver_height : rank + 1;
                Element sc = solve_anticentral(A, h);
                std::cout << (degenerate_annihilation_check(M, sc) ? "true" : "false") << "\n";
            } else {
                // no subcommand: describe the module
                std::cout << "dimension\t" << M.dim() << "\n";
                for (const auto& b : M.basis()) {
                    NormalWord w = NormalWord::empty(rank);
                    w.f = b.word;
                    std::cout << detail::word_str(w) << "\toffset\t" << b.offset.str()
                              << "\tgrade\t" << b.parity << "\n";
                }
            }
        } else if (*cmd_verify) {
            SuiteRunner runner(rank, height, conv);
            VerificationReport rep = runner.run(suite);
            if (report_fmt == "tsv")
                std::cout << rep.tsv();
            else
                std::cout << report_json(rep).dump(2) << "\n";
            if (rep.aborted) return 3;
            return rep.all_passed() ? 0 : 1;
        } else {
            std::cout << app.help() << "\n";
        }
        return 0;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const solve_error& e) {
        std::cerr << "solve error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
