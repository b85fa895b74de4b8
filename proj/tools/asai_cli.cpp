// Command-line interface: exact Asai transfer of Hilbert eigenpackets,
// local Euler factors, slope and classicality reports, refinement tuples,
// Q-fiber comparison and the seeded property suite.
//
// Exit codes: 0 success, 1 input/diagnostic errors, 2 internal failures.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "asai/archimedean.hpp"
#include "asai/lfunction.hpp"
#include "asai/packet_io.hpp"
#include "asai/properties.hpp"
#include "asai/transfer.hpp"
#include "asai/valuation.hpp"
#include "asai/weights.hpp"

namespace {

using namespace asai;

TransferSign parse_sign(const std::string& text) {
    if (text == "plus")
        return TransferSign::Plus;
    if (text == "minus")
        return TransferSign::Minus;
    throw CLI::ValidationError("--sign", "expected 'plus' or 'minus'");
}

PRegime parse_regime(const std::string& text) {
    if (text == "split")
        return PRegime::SplitAtP;
    if (text == "inert")
        return PRegime::InertAtP;
    throw CLI::ValidationError("--regime", "expected 'split' or 'inert'");
}

HilbertWeight parse_weight_flag(const std::string& text) {
    std::stringstream in(text);
    long parts[4];
    char comma = ',';
    for (int i = 0; i < 4; ++i) {
        if (i && !(in >> comma && comma == ','))
            throw CLI::ValidationError("--weight", "expected n1,n2,v1,v2");
        if (!(in >> parts[i]))
            throw CLI::ValidationError("--weight", "expected n1,n2,v1,v2");
    }
    std::string rest;
    if (in >> rest)
        throw CLI::ValidationError("--weight", "trailing junk");
    HilbertWeight w{parts[0], parts[1], parts[2], parts[3]};
    auto violations = weight_violations(w);
    if (!violations.empty())
        throw CLI::ValidationError("--weight", violations.front());
    return w;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw std::runtime_error("cannot write '" + output_path + "'");
    out << text << "\n";
}

int run_transfer(const std::string& input, const std::string& sign_text,
                 const std::string& output) {
    HilbertEigenPacket pkt = parse_packet_file(input);
    Json report = render_report(pkt, parse_sign(sign_text));
    emit(report.dump(2), output);
    return 0;
}

int run_euler(const std::string& input, long ell, int order, const std::string& sign_text,
              long k_flag, long global_limit) {
    HilbertEigenPacket pkt = parse_packet_file(input);
    TransferSign sign = parse_sign(sign_text);
    long k = k_flag;
    if (k <= 0) {
        if (pkt.weight.n1 != pkt.weight.n2) {
            std::cerr << "error: --k is required unless the packet has parallel weight\n";
            return 1;
        }
        k = pkt.weight.n1 + 2;
    }
    std::cout << "ell = " << ell << " (" << splitting_str(splitting_type(pkt.field, ell))
              << "), k = " << k << ", sign = " << sign_text << "\n";

    GL4Local local = transfer_local_at(pkt, ell, sign);
    std::cout << "euler factor: " << local_euler_factor(local).poly.str("X", true) << "\n";

    LocalIdentityResult id = local_identity_check(pkt, ell, k, order, sign);
    if (id.ok)
        std::cout << "identity: OK to X^" << order << "\n";
    else
        std::cout << "identity: FAILS first at X^" << id.first_mismatch << "\n";

    if (global_limit > 0) {
        DirichletPrefix conv = global_dirichlet_coefficients(pkt, k, global_limit);
        DirichletPrefix euler = global_dirichlet_coefficients_euler(pkt, k, global_limit);
        std::cout << "global coefficients to m = " << global_limit
                  << " (m coprime to disc = " << pkt.field.discriminant << "):\n";
        bool all_match = true;
        for (const auto& [m, b] : conv.b) {
            bool match = b == euler.b.at(m);
            all_match = all_match && match;
            std::cout << "  b_" << m << " = " << b.str() << (match ? "" : "  [ROUTE MISMATCH]")
                      << "\n";
        }
        std::cout << "routes " << (all_match ? "agree" : "DISAGREE") << "\n";
        if (!all_match)
            return 2;
    }
    return id.ok ? 0 : 1;
}

int run_slope(const HilbertWeight& weight, const std::string& regime_text) {
    PRegime regime = parse_regime(regime_text);
    GL4Weight mu = weight_map_j(weight);
    Rational closed = small_slope_closed_form(weight, regime);
    Rational brute = weyl_slope_bound_bruteforce(mu, slope_context(regime));
    std::string h = rational_str(closed);
    std::cout << "h = " << h << " (bruteforce=" << rational_str(brute)
              << ", closed=" << rational_str(closed) << ")"
              << (brute == closed ? "" : "  [MISMATCH]") << "\n";
    std::cout << "mu = (" << mu.mu1 << "," << mu.mu2 << "," << mu.mu3 << "," << mu.mu4
              << "), w = " << mu.w << "\n";
    auto report = purity_dominance_check(mu);
    std::cout << "pure: " << (report.pure ? "yes" : "no")
              << ", dominant: " << (report.dominant ? "yes" : "no")
              << ", regular: " << (report.regular ? "yes" : "no") << "\n";
    std::cout << "classical weight (" << regime_text
              << "): " << (classical_weight_membership(weight, regime) ? "yes" : "no") << "\n";
    return brute == closed ? 0 : 2;
}

int run_classify(const std::string& input, const std::string& unit) {
    HilbertEigenPacket pkt = parse_packet_file(input);
    ClassicalityReport report = classicality_check(pkt);
    std::cout << "regime: " << regime_str(report.regime) << "\n";
    std::cout << (report.regime == PRegime::SplitAtP ? "v_p(alpha_p^4 alpha_pc^2) = "
                                                     : "v_p(alpha_p) = ")
              << rational_str(report.valuation) << "\n";
    std::cout << "threshold: " << rational_str(report.threshold) << "\n";
    std::cout << "classical: " << (report.classical ? "yes" : "no") << "\n";
    std::cout << "classical weight: "
              << (classical_weight_membership(pkt.weight, report.regime) ? "yes" : "no") << "\n";
    if (!unit.empty()) {
        std::stringstream in(unit);
        long x = 0, y = 0, w = 1;
        char c1 = 0, c2 = 0;
        in >> x >> c1 >> y;
        if (!in || c1 != ',') {
            std::cerr << "error: --unit expects x,y[,w]\n";
            return 1;
        }
        if (in >> c2 >> w && c2 != ',') {
            std::cerr << "error: --unit expects x,y[,w]\n";
            return 1;
        }
        long norm = unit_norm(pkt.field, x, y, w);
        std::cout << "unit norm: " << norm << ", kappa trivial on units: "
                  << (weight_unit_condition(pkt.weight, norm) ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_refine(const std::string& input, const std::string& sign_text) {
    HilbertEigenPacket pkt = parse_packet_file(input);
    TransferSign sign = parse_sign(sign_text);
    long m = pkt.weight.m();
    RefinementCharacter chi = pkt.refinement.regime == PRegime::SplitAtP
                                  ? refinement_split(pkt.refinement, pkt.p, m)
                                  : refinement_inert(pkt.refinement, pkt.p, m, sign);
    const char* names = pkt.refinement.regime == PRegime::SplitAtP ? "u" : "u~";
    std::cout << "regime: " << regime_str(pkt.refinement.regime) << ", sign: " << sign_text
              << "\n";
    for (int i = 0; i < 4; ++i)
        std::cout << names << "_" << (i + 1) << " = " << chi.u[i].str() << "\n";
    GL4PPart part = pkt.refinement.regime == PRegime::SplitAtP
                        ? sigma_p_split(pkt.refinement, pkt.p, m)
                        : sigma_p_inert(pkt.refinement, pkt.p, m, sign);
    std::cout << "controlling = " << part.controlling.str() << "\n";
    return 0;
}

int run_qfiber(const std::string& a_path, const std::string& b_path) {
    GL4EigenPacket a = parse_report_file(a_path);
    GL4EigenPacket b = parse_report_file(b_path);
    bool eq = q_equivalent(a, b);
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return 0;
}

int run_verify(std::uint64_t seed, int trials) {
    auto results = run_property_suite(seed, trials);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass)
            std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << " (seed=" << seed
              << ", trials=" << trials << ")\n";
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Asai transfer of Hilbert modular Hecke eigensystems"};
    app.require_subcommand(1);

    std::string input, output, a_path, b_path;
    std::string sign_text = "plus";
    std::string regime_text = "split";
    std::string weight_text, unit_text;
    long ell = 0, k_flag = 0, global_limit = 0;
    int order = 8, trials = 100;
    std::uint64_t seed = 42;

    auto* transfer = app.add_subcommand("transfer", "Transfer a packet to GL(4)/Q");
    transfer->add_option("--input", input, "packet file")->required();
    transfer->add_option("--sign", sign_text, "plus|minus");
    transfer->add_option("--output,-o", output, "report file (default: stdout)");

    auto* euler = app.add_subcommand("euler", "Local Euler factor and Dirichlet identity");
    euler->add_option("--input", input, "packet file")->required();
    euler->add_option("--prime", ell, "rational prime")->required();
    euler->add_option("--order", order, "truncation order (default 8)");
    euler->add_option("--sign", sign_text, "plus|minus");
    euler->add_option("--k", k_flag, "parallel weight of the classical profile");
    euler->add_option("--global-limit", global_limit, "also tabulate b_m to this bound");

    auto* slope = app.add_subcommand("slope", "Slope bounds for a weight");
    slope->add_option("--weight", weight_text, "n1,n2,v1,v2")->required();
    slope->add_option("--regime", regime_text, "split|inert");

    auto* classify = app.add_subcommand("classify", "Classicality of a packet's refinement");
    classify->add_option("--input", input, "packet file")->required();
    classify->add_option("--unit", unit_text, "fundamental unit x,y[,w] for (x+y sqrt d)/w");

    auto* refine = app.add_subcommand("refine", "Refinement character of a packet");
    refine->add_option("--input", input, "packet file")->required();
    refine->add_option("--sign", sign_text, "plus|minus");

    auto* qfiber = app.add_subcommand("qfiber", "Q-fiber equivalence of two reports");
    qfiber->add_option("--a", a_path, "first report")->required();
    qfiber->add_option("--b", b_path, "second report")->required();

    auto* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_option("--seed", seed, "RNG seed (default 42)");
    verify->add_option("--trials", trials, "trials per randomized check (default 100)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transfer->parsed())
            return run_transfer(input, sign_text, output);
        if (euler->parsed())
            return run_euler(input, ell, order, sign_text, k_flag, global_limit);
        if (slope->parsed())
            return run_slope(parse_weight_flag(weight_text), regime_text);
        if (classify->parsed())
            return run_classify(input, unit_text);
        if (refine->parsed())
            return run_refine(input, sign_text);
        if (qfiber->parsed())
            return run_qfiber(a_path, b_path);
        if (verify->parsed())
            return run_verify(seed, trials);
    } catch (const PacketParseError& e) {
        std::cerr << "error: invalid packet\n";
        for (const auto& d : e.diagnostics)
            std::cerr << "  - " << d << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
