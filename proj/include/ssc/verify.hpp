#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssc/count.hpp"
#include "ssc/curves.hpp"
#include "ssc/galois.hpp"
#include "ssc/newton.hpp"
#include "ssc/zeta.hpp"

namespace ssc {

enum class OutputFormat { Table, Jsonl, Csv };
enum class Verdict { Pass, Fail, Skipped };
enum class Expectation { Supersingular, NotSupersingular, None };

struct GaloisInfo {
    std::string field;
    unsigned frobenius_order = 0;
    bool even_order = false;
    unsigned splitting_count = 0;
};

struct PhaseTimings {
    double count_ms = 0;
    double zeta_ms = 0;
    double newton_ms = 0;
};

struct SlopeTriple {
    std::int64_t num = 0;
    std::int64_t den = 1;
    unsigned mult = 0;
};

/// Everything the CLI reports for one (curve, p) verification. Timings are
/// the only nondeterministic fields; canonical comparisons drop them.
struct VerificationReport {
    std::string family;
    std::string name;
    std::uint32_t p = 0;
    unsigned m = 0;
    std::vector<std::int64_t> f;  // integer coefficients used, low degree first
    bool model_valid = false;
    std::string error;
    unsigned genus = 0;
    std::vector<std::uint64_t> counts;
    std::vector<std::string> l_coefficients;  // decimal, low degree first
    std::vector<SlopeTriple> newton_slopes;
    bool supersingular = false;
    unsigned p_rank = 0;
    std::optional<GaloisInfo> galois;
    Expectation expected = Expectation::None;
    std::optional<Verdict> verdict;
    std::string skip_reason;
    std::string info;
    PhaseTimings timings;
};

struct RunOptions {
    std::uint32_t pmin = 2;
    std::uint32_t pmax = 2;
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;  // 0 = hardware concurrency
};

std::vector<VerificationReport> verify_entry(const CatalogEntry& entry,
                                             const RunOptions& opts);

// Looks the family up in the embedded catalog.
std::vector<VerificationReport> verify_family(FamilyLabel family, const RunOptions& opts);

VerificationReport inspect_curve(unsigned m, const std::vector<std::int64_t>& f,
                                 std::uint32_t p, const RunOptions& opts);

struct GaloisRow {
    std::uint32_t p = 0;
    // Congruence classes the equivalences are phrased in.
    std::uint32_t p_mod_3 = 0;
    std::uint32_t p_mod_4 = 0;
    std::uint32_t p_mod_5 = 0;
    struct Cell {
        bool ramified = false;
        unsigned order = 0;
        bool even = false;
        unsigned splits = 0;
    };
    std::array<Cell, 3> cells;  // field_specs() order
    std::vector<std::string> violations;
};

std::vector<GaloisRow> galois_scan(std::uint32_t pmin, std::uint32_t pmax);

std::string render_reports(const std::vector<VerificationReport>& reports,
                           OutputFormat format);
std::string render_galois(const std::vector<GaloisRow>& rows, OutputFormat format);

// JSONL with the timings field removed; byte-identical across runs.
std::string canonical_jsonl(const std::vector<VerificationReport>& reports);

bool all_pass(const std::vector<VerificationReport>& reports);

std::vector<CatalogEntry> load_catalog_file(const std::string& path);

}  // namespace ssc
