// Command-line front door: generate the two sequence families, analyze
// arbitrary sequences (autocorrelation, 2-adic complexity, rational
// approximation), and run the full claim-verification suite.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adicseq/adic.hpp"
#include "adicseq/bitseq.hpp"
#include "adicseq/constructions.hpp"
#include "adicseq/fcsr.hpp"
#include "adicseq/seqio.hpp"
#include "adicseq/verify.hpp"

namespace {

using namespace adicseq;
using nlohmann::json;

struct GenOptions {
    std::string family;
    unsigned k = 2;
    std::uint64_t p = 3;
    std::string modulus_hex;
    std::string out = "-";
    std::string format = "text";
};

std::uint32_t parse_hex_modulus(const std::string& hex) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(hex, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("--modulus: not a hex polynomial bit-vector");
    }
    if (pos != hex.size() || v == 0 || v > 0xffffffffUL)
        throw std::invalid_argument("--modulus: not a hex polynomial bit-vector");
    return static_cast<std::uint32_t>(v);
}

int cmd_gen(const GenOptions& opt) {
    BitSequence seq = BitSequence::zeros(1);
    json info;
    if (opt.family == "gmw") {
        GmwParams params{.k = opt.k};
        if (!opt.modulus_hex.empty()) params.long_modulus = parse_hex_modulus(opt.modulus_hex);
        GmwResult r = build_gmw_modified(params);
        seq = std::move(r.sequence);
        char hexbuf[16];
        std::snprintf(hexbuf, sizeof hexbuf, "0x%x", r.provenance.long_modulus);
        info = {{"family", "gmw"},
                {"k", opt.k},
                {"period", seq.period()},
                {"modulus", hexbuf},
                {"constant_column", r.provenance.constant_column},
                {"shifts", r.provenance.shifts}};
    } else if (opt.family == "twoprime") {
        seq = build_two_prime_modified(TwoPrimeParams{opt.p});
        info = {{"family", "twoprime"},
                {"p", opt.p},
                {"q", opt.p + 2},
                {"period", seq.period()}};
    } else {
        throw std::invalid_argument("--family must be gmw or twoprime");
    }

    const bool as_json = opt.format == "json";
    const bool to_stdout = opt.out == "-";
    if (to_stdout) {
        if (as_json)
            std::cout << to_bits_json(seq).dump() << "\n";
        else
            std::cout << to_bits_text(seq);
        std::cerr << info.dump() << "\n";
    } else {
        save_sequence_file(opt.out, seq, as_json);
        std::cout << info.dump() << "\n";
    }
    return 0;
}

json profile_to_json(const adicseq::AdicProfile& prof) {
    json j = {{"n", prof.period},
              {"s2", adicseq::to_decimal(prof.s2)},
              {"modulus", adicseq::to_decimal(prof.modulus)},
              {"g", adicseq::to_decimal(prof.g)},
              {"qmin", adicseq::to_decimal(prof.qmin)},
              {"qmin_bits", prof.qmin_bits},
              {"phi2", prof.phi2}};
    if (prof.period <= 128) {  // factor decoration only at display-friendly sizes
        j["s2_factored"] = adicseq::trial_factor(prof.s2).to_string();
        j["qmin_factored"] = adicseq::trial_factor(prof.qmin).to_string();
    }
    return j;
}

int cmd_autocorr(const std::string& in, const std::string& format) {
    const BitSequence s = adicseq::load_sequence_file(in);
    const adicseq::AutocorrSpectrum sp = autocorrelation_spectrum(s);
    json hist = json::object();
    for (const auto& [value, count] : spectrum_histogram(sp)) hist[std::to_string(value)] = count;
    if (format == "text") {
        std::cout << "n " << sp.period << "\n";
        for (std::size_t tau = 0; tau < sp.period; ++tau)
            std::cout << tau << " " << sp.values[tau] << "\n";
    } else {
        std::cout << json{{"n", sp.period}, {"spectrum", sp.values}, {"histogram", hist}}.dump() << "\n";
    }
    return 0;
}

int cmd_complexity(const std::string& in, const std::string& format) {
    const BitSequence s = adicseq::load_sequence_file(in);
    const adicseq::AdicProfile prof = two_adic_profile(s);
    if (format == "text") {
        std::cout << "n " << prof.period << "\n"
                  << "s2 " << adicseq::to_decimal(prof.s2) << "\n"
                  << "g " << adicseq::to_decimal(prof.g) << "\n"
                  << "qmin " << adicseq::to_decimal(prof.qmin) << "\n"
                  << "qmin_bits " << prof.qmin_bits << "\n"
                  << "phi2 " << prof.phi2 << "\n";
    } else {
        std::cout << profile_to_json(prof).dump() << "\n";
    }
    return 0;
}

int cmd_approx(const std::string& in, std::size_t prefix_len, const std::string& format) {
    const BitSequence s = adicseq::load_sequence_file(in);
    if (prefix_len == 0) throw std::invalid_argument("--prefix-len must be >= 1");
    if (prefix_len > 16384) throw std::invalid_argument("--prefix-len above 16384 is not desk scale");
    std::vector<std::uint8_t> prefix(prefix_len);
    for (std::size_t i = 0; i < prefix_len; ++i) prefix[i] = s.at_cyclic(static_cast<long long>(i));
    const adicseq::RationalApprox ra = adicseq::approximate(prefix);
    const bool verified = adicseq::expand(ra.f, ra.q, prefix_len) == prefix;
    const json j = {{"f", adicseq::to_decimal(ra.f)},
                    {"q", adicseq::to_decimal(ra.q)},
                    {"phi_measure", ra.phi_measure},
                    {"verified", verified}};
    if (format == "text")
        std::cout << "f " << adicseq::to_decimal(ra.f) << "\nq " << adicseq::to_decimal(ra.q)
                  << "\nphi_measure " << ra.phi_measure << "\nverified " << (verified ? "yes" : "no") << "\n";
    else
        std::cout << j.dump() << "\n";
    return 0;
}

adicseq::VerifyConfig make_verify_config(const std::string& claim, const std::string& k_range,
                                         std::uint64_t p_limit, std::uint64_t seed, unsigned jobs) {
    adicseq::VerifyConfig cfg;
    cfg.claim = adicseq::claim_from_string(claim);
    if (!k_range.empty()) {
        const auto sep = k_range.find("..");
        if (sep == std::string::npos)
            throw std::invalid_argument("--k-range must look like A..B");
        try {
            cfg.k_lo = static_cast<unsigned>(std::stoul(k_range.substr(0, sep)));
            cfg.k_hi = static_cast<unsigned>(std::stoul(k_range.substr(sep + 2)));
        } catch (const std::exception&) {
            throw std::invalid_argument("--k-range must look like A..B");
        }
    }
    cfg.p_limit = p_limit;
    cfg.seed = seed;
    cfg.jobs = jobs;
    return cfg;
}

int cmd_verify(const adicseq::VerifyConfig& cfg, const std::string& format) {
    const std::vector<adicseq::VerificationReport> reports = adicseq::run_verification(cfg);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << json{{"seed", cfg.seed}, {"reports", arr}, {"all_pass", all_pass(reports)}}.dump()
                  << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.claim << " " << r.params.dump() << "\n";
        std::cout << (all_pass(reports) ? "all checks passed" : "FAILURES present") << " ("
                  << reports.size() << " reports, seed " << cfg.seed << ")\n";
    }
    return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interleaved binary sequence families, autocorrelation spectra, and 2-adic complexity"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* c_gen = app.add_subcommand("gen", "generate a sequence family instance");
    c_gen->add_option("--family", gen.family, "gmw | twoprime")->required();
    c_gen->add_option("--k", gen.k, "gmw parameter k (period 2^{2k}-1)");
    c_gen->add_option("--p", gen.p, "twoprime parameter p (period p(p+2))");
    c_gen->add_option("--modulus", gen.modulus_hex, "hex polynomial bit-vector overriding the degree-2k default");
    c_gen->add_option("--out", gen.out, "output path ('-' = stdout)");
    c_gen->add_option("--format", gen.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string in_path, format = "json";
    CLI::App* c_autocorr = app.add_subcommand("autocorr", "autocorrelation spectrum of a sequence file");
    c_autocorr->add_option("--in", in_path, "input .bits or JSON sequence file")->required();
    c_autocorr->add_option("--format", format, "json | text")->check(CLI::IsMember({"text", "json"}));

    std::string cx_in, cx_format = "json";
    CLI::App* c_complexity = app.add_subcommand("complexity", "2-adic complexity profile of a sequence file");
    c_complexity->add_option("--in", cx_in, "input .bits or JSON sequence file")->required();
    c_complexity->add_option("--format", cx_format, "json | text")->check(CLI::IsMember({"text", "json"}));

    std::string ap_in, ap_format = "json";
    std::size_t prefix_len = 0;
    CLI::App* c_approx = app.add_subcommand("approx", "rational approximation from a bit prefix");
    c_approx->add_option("--in", ap_in, "input .bits or JSON sequence file")->required();
    c_approx->add_option("--prefix-len", prefix_len, "number of leading stream bits to synthesize from")->required();
    c_approx->add_option("--format", ap_format, "json | text")->check(CLI::IsMember({"text", "json"}));

    std::string claim = "all", k_range, vf_format = "text";
    std::uint64_t p_limit = 71, seed = 12345;
    unsigned jobs = 0;
    bool claim_all = false;
    CLI::App* c_verify = app.add_subcommand("verify", "run the claim-verification suite");
    c_verify->add_option("--claim", claim,
                         "lemma1|lemma2|lemma3|eq1|eq2|cgcd|gmw-bound|twoprime-exact|example1|all");
    c_verify->add_flag("--all", claim_all, "run every claim (same as --claim all)");
    c_verify->add_option("--k-range", k_range, "gmw sweep range A..B within 2..6");
    c_verify->add_option("--p-limit", p_limit, "largest twin p (<= 71)");
    c_verify->add_option("--seed", seed, "seed for the random-sequence identity runs");
    c_verify->add_option("--jobs", jobs, "parallel verification cells (0 = all cores)");
    c_verify->add_option("--format", vf_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_gen->parsed()) return cmd_gen(gen);
        if (c_autocorr->parsed()) return cmd_autocorr(in_path, format);
        if (c_complexity->parsed()) return cmd_complexity(cx_in, cx_format);
        if (c_approx->parsed()) return cmd_approx(ap_in, prefix_len, ap_format);
        if (c_verify->parsed()) {
            if (claim_all) claim = "all";
            return cmd_verify(make_verify_config(claim, k_range, p_limit, seed, jobs), vf_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
