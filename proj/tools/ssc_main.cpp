// ssc: verify supersingularity of explicit superelliptic curves over F_p by
// exact point counting, L-polynomial reconstruction and Newton polygon
// analysis. Exit codes: 0 all checks pass, 1 any FAIL, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ssc/verify.hpp"

namespace {

ssc::OutputFormat parse_format(const std::string& s) {
    if (s == "table") return ssc::OutputFormat::Table;
    if (s == "jsonl") return ssc::OutputFormat::Jsonl;
    if (s == "csv") return ssc::OutputFormat::Csv;
    throw CLI::ValidationError("--format", "expected table, jsonl or csv");
}

// "m:c0,c1,..." with signed integer coefficients, low degree first.
std::pair<unsigned, std::vector<std::int64_t>> parse_curve_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--curve", "expected m:c0,c1,...");
    unsigned m = static_cast<unsigned>(std::stoul(s.substr(0, colon)));
    std::vector<std::int64_t> coeffs;
    std::stringstream rest(s.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) coeffs.push_back(std::stoll(tok));
    if (coeffs.empty()) throw CLI::ValidationError("--curve", "no coefficients given");
    return {m, std::move(coeffs)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersingular superelliptic curve verifier"};
    app.set_version_flag("--version", "ssc 1.0.0");
    app.require_subcommand(1);

    std::string format_str = "table";
    ssc::RunOptions run;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format: table, jsonl, csv")
            ->default_val("table");
        cmd->add_option("--budget", run.budget,
                        "max field elements enumerated per (curve, k) task")
            ->default_val(100'000'000ULL);
        cmd->add_option("--threads", run.threads, "worker threads (0 = auto)")
            ->default_val(0u);
    };

    // verify
    auto* verify = app.add_subcommand(
        "verify", "verify a curve family over all primes in a range");
    std::string family_str;
    std::string catalog_path;
    verify->add_option("family", family_str, "family label: M6, M8 or M16");
    verify->add_option("--pmin", run.pmin, "smallest prime to test")->default_val(2u);
    verify->add_option("--pmax", run.pmax, "largest prime to test")->required();
    verify->add_option("--catalog", catalog_path,
                       "JSON catalog file to verify instead of the embedded one");
    add_common(verify);

    // inspect
    auto* inspect = app.add_subcommand("inspect", "full report for one curve, no verdict");
    std::string curve_spec;
    std::uint32_t inspect_p = 0;
    inspect->add_option("--curve", curve_spec,
                        "curve as m:c0,c1,... (integer coefficients, low degree first)")
        ->required();
    inspect->add_option("-p,--prime", inspect_p, "prime p")->required();
    add_common(inspect);

    // galois
    auto* galois = app.add_subcommand(
        "galois", "Frobenius order, parity and splitting in the three cyclic fields");
    std::uint32_t gal_pmin = 2, gal_pmax = 0;
    galois->add_option("--pmin", gal_pmin, "smallest prime")->default_val(2u);
    galois->add_option("--pmax", gal_pmax, "largest prime")->required();
    add_common(galois);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        ssc::OutputFormat format = parse_format(format_str);

        if (verify->parsed()) {
            std::vector<ssc::CatalogEntry> entries;
            if (!catalog_path.empty()) {
                entries = ssc::load_catalog_file(catalog_path);
                if (!family_str.empty()) {
                    std::erase_if(entries, [&](const ssc::CatalogEntry& e) {
                        return ssc::family_name(e.label) != family_str && e.name != family_str;
                    });
                    if (entries.empty())
                        throw std::runtime_error("no catalog entry matches " + family_str);
                }
            } else {
                if (family_str.empty())
                    throw CLI::ValidationError("family", "required without --catalog");
                ssc::FamilyLabel label;
                if (family_str == "M6")
                    label = ssc::FamilyLabel::M6;
                else if (family_str == "M8")
                    label = ssc::FamilyLabel::M8;
                else if (family_str == "M16")
                    label = ssc::FamilyLabel::M16;
                else
                    throw CLI::ValidationError("family", "expected M6, M8 or M16");
                for (const auto& e : ssc::paper_catalog())
                    if (e.label == label) entries.push_back(e);
            }
            bool ok = true;
            for (const auto& entry : entries) {
                auto reports = ssc::verify_entry(entry, run);
                std::cout << ssc::render_reports(reports, format);
                ok = ok && ssc::all_pass(reports);
            }
            return ok ? 0 : 1;
        }

        if (inspect->parsed()) {
            auto [m, coeffs] = parse_curve_spec(curve_spec);
            auto report = ssc::inspect_curve(m, coeffs, inspect_p, run);
            std::cout << ssc::render_reports({report}, format);
            return report.error.empty() ? 0 : 1;
        }

        if (galois->parsed()) {
            auto rows = ssc::galois_scan(gal_pmin, gal_pmax);
            std::cout << ssc::render_galois(rows, format);
            for (const auto& row : rows)
                if (!row.violations.empty()) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
