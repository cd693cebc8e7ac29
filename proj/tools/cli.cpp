#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "qlt/report_io.hpp"
#include "qlt/triple.hpp"
#include "qlt/verify.hpp"

namespace qlt::cli {

namespace {

struct Config {
    std::string field_spec;
    std::string q, a, b, c;
    int d = -1;
    std::string basis = "first";
    std::string mode = "verify";
    std::string checks;
    std::string format = "text";
    std::uint64_t seed = 0;
    int trials = 1;
    std::string out_path;
};

// trial i draws from the SplitMix64 stream at state seed + i * gamma
constexpr std::uint64_t kTrialStride = 0x9e3779b97f4a7c15ull;

BasisChoice parse_basis(const std::string& b) {
    return b == "second" ? BasisChoice::second : BasisChoice::first;
}

template <ExactField F>
VerificationReport run_suite(const QRacahParams<F>& params, BasisChoice basis, const std::string& glob) {
    return run_matching(build_triple(params, basis), glob);
}

// the two triple permutations plus all eight parameter inversions
std::vector<QRacahParams<Fp>> sweep_variants(const QRacahParams<Fp>& p) {
    std::vector<QRacahParams<Fp>> out;
    out.reserve(10);
    out.push_back(validate_params(p.q, p.b, p.c, p.a, p.d));
    out.push_back(validate_params(p.q.inv(), p.b, p.a, p.c, p.d));
    for (int mask = 0; mask < 8; ++mask)
        out.push_back(invert_huang_data(
            p, HuangFlips{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}));
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Builds Leonard triples of q-Racah type over exact fields and verifies the defining identities"};
    app.name("qlt");
    Config cfg;
    app.add_option("--field", cfg.field_spec, "field selection: \"rational\" or \"fp:<p>\"")->required();
    app.add_option("--q", cfg.q, "parameter q (field literal: \"n\", \"n/d\", or residue)");
    app.add_option("--a", cfg.a, "parameter a");
    app.add_option("--b", cfg.b, "parameter b");
    app.add_option("--c", cfg.c, "parameter c");
    app.add_option("--d", cfg.d, "diameter, a nonnegative integer");
    app.add_option("--basis", cfg.basis, "basis choice")->check(CLI::IsMember({"first", "second"}));
    app.add_option("--mode", cfg.mode, "verify explicit parameters, or sample/sweep a prime field")
        ->check(CLI::IsMember({"verify", "sample", "sweep"}));
    app.add_option("--checks", cfg.checks, "glob over check ids, e.g. \"prod.*\"");
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for sample/sweep modes");
    app.add_option("--trials", cfg.trials, "number of sampled tuples for sample/sweep modes");
    app.add_option("--out", cfg.out_path, "write the report to this path instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("qlt");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        const Field field = Field::parse(cfg.field_spec);
        std::vector<VerificationReport> reports;
        if (cfg.mode == "verify") {
            if (cfg.q.empty() || cfg.a.empty() || cfg.b.empty() || cfg.c.empty() || cfg.d < 0) {
                err << "mode=verify requires --q --a --b --c and --d\n";
                return 2;
            }
            if (field.kind() == FieldKind::rational) {
                const auto params = validate_params(Rat::parse(cfg.q), Rat::parse(cfg.a), Rat::parse(cfg.b),
                                                    Rat::parse(cfg.c), cfg.d);
                reports.push_back(run_suite(params, parse_basis(cfg.basis), cfg.checks));
            } else {
                const std::uint64_t p = field.modulus();
                const auto params = validate_params(Fp::parse(cfg.q, p), Fp::parse(cfg.a, p),
                                                    Fp::parse(cfg.b, p), Fp::parse(cfg.c, p), cfg.d);
                reports.push_back(run_suite(params, parse_basis(cfg.basis), cfg.checks));
            }
        } else {
            if (field.kind() != FieldKind::prime) {
                err << "mode=" << cfg.mode << " requires a prime field\n";
                return 2;
            }
            if (cfg.trials < 1) {
                err << "--trials must be at least 1\n";
                return 2;
            }
            if (cfg.d < 0) {
                err << "mode=" << cfg.mode << " requires --d\n";
                return 2;
            }
            for (int t = 0; t < cfg.trials; ++t) {
                const auto params =
                    sample_params(field, cfg.d, cfg.seed + static_cast<std::uint64_t>(t) * kTrialStride);
                if (cfg.mode == "sample") {
                    reports.push_back(run_suite(params, parse_basis(cfg.basis), cfg.checks));
                } else {
                    for (const auto& variant : sweep_variants(params))
                        reports.push_back(run_suite(variant, parse_basis(cfg.basis), cfg.checks));
                }
            }
        }
        const ReportFormat fmt = cfg.format == "json" ? ReportFormat::json : ReportFormat::text;
        const std::string payload =
            cfg.mode == "verify" ? emit_report(reports.front(), fmt) : emit_reports(reports, fmt);
        if (!cfg.out_path.empty()) {
            std::ofstream file(cfg.out_path, std::ios::binary);
            if (!file) {
                err << "cannot open output path: " << cfg.out_path << '\n';
                return 2;
            }
            file << payload;
        } else {
            out << payload;
        }
        for (const auto& r : reports)
            if (r.fail > 0) return 1;
        return 0;
    } catch (const qlt::error& e) {
        err << e.what() << '\n';
        return 2;
    }
}

} // namespace qlt::cli
