// Command-line front door: compute q-expansions, run theorem verifiers,
// decompose modular functions in Hauptmoduls, and emit exact reports.
//
// Exit codes: 0 = all checks passed, 1 = verified failure found,
// 2 = configuration or truncation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaq/etaq.hpp"

using json = nlohmann::ordered_json;
using namespace etaq;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::string q_str(const Q& v) {
    return v.get_str();
}

json report_to_json(const CongruenceReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["params"] = json::object();
    for (const auto& [k, v] : rep.params) j["params"][k] = v;
    j["range"] = {{"n_min", rep.n_min}, {"n_max", rep.n_max}};
    j["modulus"] = rep.modulus;
    j["checked"] = rep.checked;
    j["failures"] = json::array();
    for (const auto& f : rep.failures)
        j["failures"].push_back({{"n", f.n}, {"lhs", q_str(f.lhs)}, {"rhs", q_str(f.rhs)}});
    j["witnesses"] = json::object();
    for (const auto& [k, v] : rep.witnesses) j["witnesses"][k] = q_str(v);
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(output_path);
        os << j.dump(2) << "\n";
    }
}

ProductSpec parse_spec(const std::string& text) {
    ProductSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad spec syntax, expected scale:exponent pairs: " + text);
        long m = std::stol(item.substr(0, colon));
        long e = std::stol(item.substr(colon + 1));
        if (m <= 0 || e == 0 || spec.factors.count(m))
            throw std::invalid_argument("bad spec: scales distinct positive, exponents nonzero");
        spec.factors[m] = e;
    }
    if (spec.factors.empty()) throw std::invalid_argument("empty product spec");
    return spec;
}

LaurentSeries named_series(const std::string& name, long N) {
    if (name == "E") return euler_E(N);
    if (name == "alpha") return alpha_series(N);
    if (name == "beta") return beta_series(N);
    if (name == "overpartition") return overpartition_series(N);
    if (name == "pod") return pod_signed_series(N);
    if (name == "partition") return invert(euler_E(N));
    if (name == "E2") return eisenstein(Eisenstein::E2, N);
    if (name == "E4") return eisenstein(Eisenstein::E4, N);
    if (name == "E6") return eisenstein(Eisenstein::E6, N);
    if (name == "delta") return discriminant(N);
    if (name == "j") return j_invariant(N);
    if (name == "kohler") return kohler_series(N);
    if (name.rfind("phi", 0) == 0) return hauptmodul_phi(std::stol(name.substr(3)), N);
    return eta_quotient(parse_spec(name), N);
}

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(q_str(p[i]));
    return {{"degree", p.degree()}, {"coefficients", coeffs}, {"display", p.to_string()}};
}

struct VerifyOptions {
    std::string theorem;
    long ell = 5;
    int i = 1;
    long r = -2, s = 3, p = 2;
    long n_max = 100;
    int cases = 10;
    long truncation = -1;
};

int run_verify(const VerifyOptions& opt, const std::string& output_path) {
    long required = 0;
    CongruenceReport rep;
    if (opt.theorem == "thm1.1") {
        required = opt.ell * opt.ell * opt.n_max + (opt.ell * opt.ell - 1) / 6;
        if (opt.truncation >= 0 && opt.truncation < required)
            throw std::invalid_argument("truncation override " + std::to_string(opt.truncation) +
                                        " below required order " + std::to_string(required));
        rep = verify_thm_1_1(opt.ell, opt.n_max);
    } else if (opt.theorem == "thm1.3") {
        rep = verify_thm_1_3(opt.i, opt.ell, opt.cases);
    } else if (opt.theorem == "thm1.4") {
        NewmanParams np = derive_params(opt.r, opt.s, opt.p, opt.ell);
        required = opt.ell * opt.ell * opt.n_max + np.delta.get_si();
        if (opt.truncation >= 0 && opt.truncation < required)
            throw std::invalid_argument("truncation override " + std::to_string(opt.truncation) +
                                        " below required order " + std::to_string(required));
        rep = verify_thm_1_4(opt.r, opt.s, opt.p, opt.ell, opt.n_max);
    } else if (opt.theorem == "overpartition") {
        required = opt.ell * opt.ell * opt.n_max;
        if (opt.truncation >= 0 && opt.truncation < required)
            throw std::invalid_argument("truncation override below required order " +
                                        std::to_string(required));
        rep = verify_overpartition(opt.ell, opt.n_max);
    } else if (opt.theorem == "corollary") {
        rep = verify_overpartition_corollary(opt.i, opt.ell, opt.n_max);
    } else if (opt.theorem == "mu32") {
        rep = verify_mu_mod32(opt.ell);
    } else {
        throw std::invalid_argument("unknown theorem id: " + opt.theorem);
    }
    emit(report_to_json(rep), output_path);
    return rep.pass() ? kExitPass : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series computations for eta-quotient congruences"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Dump exact coefficients of a named series or product spec");
    std::string series_name = "alpha";
    long coeffs_max = 20;
    std::string format = "plain";
    coeffs->add_option("series", series_name,
                       "E, alpha, beta, overpartition, pod, partition, E2, E4, E6, delta, j, "
                       "kohler, phi<p>, or scale:exponent pairs like 1:-2,2:3");
    coeffs->add_option("--max", coeffs_max, "Largest exponent to print");
    coeffs->add_option("--format", format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a theorem verifier and emit a JSON report");
    VerifyOptions vopt;
    verify->add_option("theorem", vopt.theorem, "thm1.1 | thm1.3 | thm1.4 | overpartition | corollary | mu32")
        ->required();
    verify->add_option("--ell", vopt.ell, "Auxiliary prime (or ell_max for mu32)");
    verify->add_option("--i", vopt.i, "Power of 2 for thm1.3 / corollary");
    verify->add_option("--r", vopt.r, "Exponent r");
    verify->add_option("--s", vopt.s, "Exponent s");
    verify->add_option("--p", vopt.p, "Genus-zero prime p");
    verify->add_option("--nmax", vopt.n_max, "Verify for 0 <= n <= nmax");
    verify->add_option("--cases", vopt.cases, "Number of admissible pairs for thm1.3");
    verify->add_option("--truncation", vopt.truncation,
                       "Series-order override; rejected (exit 2) when below the required order");

    // decompose
    auto* dec = app.add_subcommand("decompose", "Decompose G or G* as a polynomial in the Hauptmodul");
    long dr = -2, ds = 3, dp = 2, dell = 5, dorder = 40;
    std::string side = "starred";
    dec->add_option("--r", dr, "Exponent r");
    dec->add_option("--s", ds, "Exponent s");
    dec->add_option("--p", dp, "Genus-zero prime p");
    dec->add_option("--ell", dell, "Auxiliary prime")->required();
    dec->add_option("--side", side, "plain (basis Phi_p) | starred (basis Phi_p^{-1})")
        ->check(CLI::IsMember({"plain", "starred"}));
    dec->add_option("--order", dorder, "Window through which the residual is required to vanish");

    // eigenvalue
    auto* eig = app.add_subcommand("eigenvalue", "Compute lambda along both routes");
    long er = -2, es = 3, ep = 2, eell = 5;
    eig->add_option("--r", er, "Exponent r");
    eig->add_option("--s", es, "Exponent s");
    eig->add_option("--p", ep, "Genus-zero prime p");
    eig->add_option("--ell", eell, "Auxiliary prime")->required();

    // faber
    auto* fab = app.add_subcommand("faber", "Emit a Faber-type polynomial family");
    std::string family = "J";
    long fmax = 5, fp = 2, fr = -2, fs = 3;
    fab->add_option("family", family, "J | A | P | sB")->check(CLI::IsMember({"J", "A", "P", "sB"}));
    fab->add_option("--max", fmax, "Largest index m");
    fab->add_option("--p", fp, "Genus-zero prime (P and sB families)");
    fab->add_option("--r", fr, "Exponent r (sB family)");
    fab->add_option("--s", fs, "Exponent s (sB family)");

    // identities
    auto* ident = app.add_subcommand("identities", "Run the series identity suite");
    long id_order = 200;
    ident->add_option("--order", id_order, "Truncation order for the identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*coeffs) {
            LaurentSeries s = named_series(series_name, coeffs_max);
            if (format == "json") {
                json rows = json::array();
                for (long n = s.valuation(); n <= coeffs_max; ++n)
                    rows.push_back({{"n", n}, {"value", q_str(s.coeff(n))}});
                emit({{"series", series_name}, {"max", coeffs_max}, {"rows", rows}}, output_path);
            } else {
                std::ostringstream os;
                if (format == "csv") os << "n,value\n";
                for (long n = s.valuation(); n <= coeffs_max; ++n) {
                    if (format == "csv")
                        os << n << "," << q_str(s.coeff(n)) << "\n";
                    else
                        os << "(" << n << ", " << q_str(s.coeff(n)) << ")\n";
                }
                if (output_path.empty())
                    std::cout << os.str();
                else
                    std::ofstream(output_path) << os.str();
            }
            return kExitPass;
        }
        if (*verify) return run_verify(vopt, output_path);
        if (*dec) {
            NewmanParams np = derive_params(dr, ds, dp, dell);
            Side sd = side == "plain" ? Side::plain : Side::starred;
            long degree = -np.delta_star.get_si();
            HeckeExpansion he = expand(np, sd, dorder);
            LaurentSeries basis = hauptmodul_phi(dp, dorder + degree + 4);
            Decomposition d = sd == Side::plain
                                  ? decompose(he.quotient, basis.truncated(dorder), degree)
                                  : decompose(he.quotient, invert(basis), degree);
            json gamma = json::array();
            for (long jj = 1; jj <= degree; ++jj) gamma.push_back(q_str(d.gamma[jj]));
            emit({{"r", dr},
                  {"s", ds},
                  {"p", dp},
                  {"ell", dell},
                  {"side", side},
                  {"basis", side == "plain" ? "Phi_p" : "Phi_p^-1"},
                  {"constant", q_str(d.constant)},
                  {"gamma", gamma},
                  {"residual_checked_to", d.checked_order}},
                 output_path);
            return kExitPass;
        }
        if (*eig) {
            NewmanParams np = derive_params(er, es, ep, eell);
            auto [direct, via_mu] = lambda_two_ways(np, 64);
            emit({{"r", er},
                  {"s", es},
                  {"p", ep},
                  {"ell", eell},
                  {"lambda_direct", q_str(direct)},
                  {"lambda_via_mu", q_str(via_mu)},
                  {"difference", q_str(direct - via_mu)}},
                 output_path);
            return direct == via_mu ? kExitPass : kExitFailure;
        }
        if (*fab) {
            std::vector<Poly> polys;
            if (family == "J")
                polys = faber_J(fmax, fmax);
            else if (family == "A")
                polys = faber_A(fmax, fmax);
            else if (family == "P")
                polys = beneish_larson_P(fp, fmax, fmax + 2);
            else
                polys = sB_poly(fr, fs, fp, fmax, fmax + 2);
            json arr = json::array();
            for (std::size_t m = 0; m < polys.size(); ++m) {
                json e = poly_to_json(polys[m]);
                e["m"] = static_cast<long>(m);
                arr.push_back(std::move(e));
            }
            emit({{"family", family}, {"polynomials", arr}}, output_path);
            return kExitPass;
        }
        if (*ident) {
            ThetaProductCheck theta = theta_product_checks(id_order);
            bool kohler = verify_kohler_identity(id_order);
            bool e2star = verify_e2star_identity(id_order);
            json dq_checks = json::object();
            bool dq_all = true;
            for (long p : {2L, 3L, 5L, 7L, 13L}) {
                bool ok = verify_dq_phi_identity(p, std::min(id_order, 100L));
                dq_all = dq_all && ok;
                dq_checks["p" + std::to_string(p)] = ok;
            }
            bool all = theta.theta4_ok && theta.theta2_ok && kohler && e2star && dq_all;
            emit({{"order", id_order},
                  {"theta4_product", theta.theta4_ok},
                  {"theta2_product", theta.theta2_ok},
                  {"kohler", kohler},
                  {"e2_star_eta_quotients", e2star},
                  {"dq_phi_inverse", dq_checks},
                  {"pass", all}},
                 output_path);
            return all ? kExitPass : kExitFailure;
        }
    } catch (const truncation_error& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
