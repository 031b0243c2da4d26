#include "ssc/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ssc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const CyclicFieldSpec* spec_for(FamilyLabel label) {
    const auto& specs = field_specs();
    switch (label) {
        case FamilyLabel::M6: return &specs[0];
        case FamilyLabel::M8: return &specs[1];
        case FamilyLabel::M16: return &specs[2];
        default: return nullptr;
    }
}

std::vector<SlopeTriple> slope_triples(const NewtonPolygon& np) {
    std::vector<SlopeTriple> out;
    for (const auto& seg : np.slopes)
        out.push_back({seg.slope.numerator(), seg.slope.denominator(), seg.multiplicity});
    return out;
}

// The full pipeline for one model at one prime: count N_1..N_g, rebuild L,
// take the polygon, attach Galois data when p is unramified.
VerificationReport run_one(FamilyLabel label, const std::string& name, unsigned m,
                           const std::vector<std::int64_t>& f_int, std::uint32_t p,
                           Expectation expected, const CountOptions& copts) {
    VerificationReport rep;
    rep.family = family_name(label);
    rep.name = name;
    rep.p = p;
    rep.m = m;
    rep.f = f_int;
    rep.expected = expected;

    try {
        PrimeModulus pm(p);
        SuperellipticCurve curve = make_curve(pm, m, FpPoly::from_integers(pm, f_int));
        rep.model_valid = true;
        rep.genus = curve.genus();
        if (curve.genus() == 0)
            throw std::invalid_argument("genus 0: no L-polynomial to analyze");

        auto t0 = Clock::now();
        PointCounts counts = count_sequence(curve, curve.genus(), copts);
        rep.timings.count_ms = ms_since(t0);
        rep.counts = counts.counts;

        t0 = Clock::now();
        LPolynomial L = l_polynomial(counts);
        rep.timings.zeta_ms = ms_since(t0);
        for (const BigInt& a : L.a) rep.l_coefficients.push_back(a.str());

        t0 = Clock::now();
        NewtonPolygon np = newton_polygon(L);
        rep.newton_slopes = slope_triples(np);
        rep.supersingular = is_supersingular(L);
        rep.p_rank = p_rank(L);
        rep.timings.newton_ms = ms_since(t0);

        if (const CyclicFieldSpec* spec = spec_for(label)) {
            if (std::gcd(p, spec->conductor) == 1) {
                GaloisInfo gi;
                gi.field = spec->name;
                gi.frobenius_order = frobenius_order(p, *spec);
                gi.even_order = gi.frobenius_order % 2 == 0;
                gi.splitting_count = splitting_count(p, *spec);
                rep.galois = gi;
            }
        }

        if (expected == Expectation::None) {
            rep.verdict.reset();
        } else {
            bool want_ss = expected == Expectation::Supersingular;
            rep.verdict = (rep.supersingular == want_ss) ? Verdict::Pass : Verdict::Fail;
        }
    } catch (const BudgetExceeded& e) {
        rep.verdict = Verdict::Skipped;
        rep.skip_reason = e.what();
    } catch (const std::exception& e) {
        rep.error = e.what();
        rep.verdict = expected == Expectation::None ? std::optional<Verdict>{}
                                                    : std::optional<Verdict>{Verdict::Fail};
    }
    return rep;
}

struct Task {
    std::uint32_t p;
    Expectation expected;
};

}  // namespace

std::vector<VerificationReport> verify_entry(const CatalogEntry& entry,
                                             const RunOptions& opts) {
    std::vector<Task> tasks;
    for (std::uint32_t p : primes_up_to(opts.pmax)) {
        if (p < opts.pmin) continue;
        bool exceptional = false;
        for (const auto& [pe, poly] : entry.exceptional_primes) exceptional |= pe == p;
        if (entry.prime_condition.matches(p) || exceptional) {
            tasks.push_back({p, Expectation::Supersingular});
        } else if (entry.label == FamilyLabel::M6 && p % 3 == 1) {
            // The M(6) statement is an iff: p = 1 mod 3 must NOT be
            // supersingular (p = 3 has bad reduction and is skipped).
            tasks.push_back({p, Expectation::NotSupersingular});
        }
    }

    std::string disc_info;
    if (entry.label == FamilyLabel::M16) {
        BigInt d = integer_poly_discriminant(entry.f_integer);
        disc_info = "polynomial discriminant of the integer model = " + d.str() + " = " +
                    factored_string(d) + " (informational)";
    }

    unsigned pool = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (pool == 0) pool = 1;
    pool = std::min<std::size_t>(pool, tasks.size() ? tasks.size() : 1);
    // Per-prime tasks run in the pool; counting inside each task stays
    // single-threaded to avoid oversubscription.
    CountOptions copts{opts.budget, pool > 1 ? 1u : (opts.threads ? opts.threads : 0u),
                       ResidueStrategy::Auto};

    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            const auto& poly = entry.polynomial_for(tasks[i].p);
            reports[i] = run_one(entry.label, entry.name, entry.m, poly, tasks[i].p,
                                 tasks[i].expected, copts);
            bool main_poly = &poly == &entry.f_integer;
            if (main_poly && !disc_info.empty()) reports[i].info = disc_info;
        }
    };
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < pool; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return reports;  // already ordered by ascending p
}

std::vector<VerificationReport> verify_family(FamilyLabel family, const RunOptions& opts) {
    for (const CatalogEntry& entry : paper_catalog())
        if (entry.label == family) return verify_entry(entry, opts);
    throw std::invalid_argument("family not in the embedded catalog");
}

VerificationReport inspect_curve(unsigned m, const std::vector<std::int64_t>& f,
                                 std::uint32_t p, const RunOptions& opts) {
    CountOptions copts{opts.budget, opts.threads, ResidueStrategy::Auto};
    return run_one(FamilyLabel::Other, "inspect", m, f, p, Expectation::None, copts);
}

std::vector<GaloisRow> galois_scan(std::uint32_t pmin, std::uint32_t pmax) {
    const auto& specs = field_specs();
    std::vector<GaloisRow> rows;
    for (std::uint32_t p : primes_up_to(pmax)) {
        if (p < pmin) continue;
        GaloisRow row;
        row.p = p;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (std::gcd(p, specs[i].conductor) != 1) {
                row.cells[i].ramified = true;
                continue;
            }
            row.cells[i].order = frobenius_order(p, specs[i]);
            row.cells[i].even = row.cells[i].order % 2 == 0;
            row.cells[i].splits = splitting_count(p, specs[i]);
        }
        // The equivalences the library asserts for these fields.
        if (!row.cells[0].ramified) {
            if (row.cells[0].even != (p % 3 == 2))
                row.violations.push_back("n=9: even order <=> p=2 mod 3 failed");
            bool in13 = row.cells[0].splits == 1 || row.cells[0].splits == 3;
            if (in13 != (p % 3 != 1))
                row.violations.push_back("n=9: splits in {1,3} <=> p!=1 mod 3 failed");
        }
        if (!row.cells[2].ramified) {
            unsigned r5 = p % 5;
            if ((r5 >= 2 && r5 <= 4) && !row.cells[2].even)
                row.violations.push_back("n=45: p mod 5 in {2,3,4} => even order failed");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "SKIPPED";
    }
}

const char* expectation_name(Expectation e) {
    return e == Expectation::Supersingular ? "supersingular" : "not_supersingular";
}

std::string slopes_compact(const std::vector<SlopeTriple>& slopes) {
    std::ostringstream os;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (i) os << " ";
        os << slopes[i].num;
        if (slopes[i].den != 1) os << "/" << slopes[i].den;
        os << "x" << slopes[i].mult;
    }
    return slopes.empty() ? "-" : os.str();
}

std::string poly_string(const std::vector<std::int64_t>& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        std::int64_t c = f[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t ac = c < 0 ? -c : c;
        if (ac != 1 || i == 0) os << ac;
        if (i >= 1) {
            if (ac != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timings) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["name"] = r.name;
    j["p"] = r.p;
    j["m"] = r.m;
    j["f"] = r.f;
    j["model_valid"] = r.model_valid;
    if (!r.error.empty()) j["error"] = r.error;
    if (r.model_valid) j["genus"] = r.genus;
    if (!r.l_coefficients.empty()) {
        j["counts"] = r.counts;
        j["l_coefficients"] = r.l_coefficients;
        nlohmann::ordered_json slopes = nlohmann::ordered_json::array();
        for (const auto& s : r.newton_slopes)
            slopes.push_back({{"num", s.num}, {"den", s.den}, {"mult", s.mult}});
        j["newton_slopes"] = slopes;
        j["supersingular"] = r.supersingular;
        j["p_rank"] = r.p_rank;
    }
    if (r.galois) {
        j["galois"] = {{"field", r.galois->field},
                       {"frobenius_order", r.galois->frobenius_order},
                       {"even_order", r.galois->even_order},
                       {"splitting_count", r.galois->splitting_count}};
    }
    if (r.expected != Expectation::None) j["expected"] = expectation_name(r.expected);
    if (r.verdict) j["verdict"] = verdict_name(*r.verdict);
    if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
    if (!r.info.empty()) j["info"] = r.info;
    if (with_timings)
        j["timings_ms"] = {{"count", r.timings.count_ms},
                           {"zeta", r.timings.zeta_ms},
                           {"newton", r.timings.newton_ms}};
    return j;
}

std::string render_reports_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(7) << "family" << std::setw(7) << "p" << std::setw(3)
       << "g" << std::setw(15) << "supersingular" << std::setw(7) << "p-rank"
       << std::setw(12) << "frob-order" << std::setw(8) << "splits" << std::setw(16)
       << "slopes" << std::setw(9) << "verdict" << "note" << "\n";
    unsigned pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) {
        std::string frob = "-", splits = "-";
        if (r.galois) {
            frob = std::to_string(r.galois->frobenius_order) +
                   (r.galois->even_order ? " even" : " odd");
            splits = std::to_string(r.galois->splitting_count);
        }
        std::string note = !r.error.empty() ? r.error : r.skip_reason;
        const bool counted = !r.l_coefficients.empty();
        os << std::left << std::setw(7) << r.family << std::setw(7) << r.p << std::setw(3)
           << (r.model_valid ? std::to_string(r.genus) : "-") << std::setw(15)
           << (counted ? (r.supersingular ? "yes" : "no") : "-") << std::setw(7)
           << (counted ? std::to_string(r.p_rank) : "-") << std::setw(12) << frob
           << std::setw(8) << splits << std::setw(16) << slopes_compact(r.newton_slopes)
           << std::setw(9) << (r.verdict ? verdict_name(*r.verdict) : "-") << note << "\n";
        if (r.verdict == Verdict::Pass) ++pass;
        if (r.verdict == Verdict::Fail) ++fail;
        if (r.verdict == Verdict::Skipped) ++skipped;
    }
    os << "pass=" << pass << " fail=" << fail << " skipped=" << skipped << "\n";
    for (const auto& r : reports)
        if (!r.info.empty()) {
            os << "note: " << r.info << "\n";
            break;  // catalog-level note, identical on every report
        }
    if (!reports.empty()) {
        const auto& r = reports.front();
        os << "curve: y^" << r.m << " = " << poly_string(r.f) << " (reduced mod p)\n";
    }
    return os.str();
}

std::string render_reports_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "family,name,p,m,genus,supersingular,p_rank,frobenius_order,splitting_count,"
          "verdict,note\n";
    for (const auto& r : reports) {
        std::string note = !r.error.empty() ? r.error : r.skip_reason;
        for (auto& ch : note)
            if (ch == ',') ch = ';';
        const bool counted = !r.l_coefficients.empty();
        os << r.family << "," << r.name << "," << r.p << "," << r.m << ","
           << (r.model_valid ? std::to_string(r.genus) : "") << ","
           << (counted ? (r.supersingular ? "true" : "false") : "") << ","
           << (counted ? std::to_string(r.p_rank) : "") << ","
           << (r.galois ? std::to_string(r.galois->frobenius_order) : "") << ","
           << (r.galois ? std::to_string(r.galois->splitting_count) : "") << ","
           << (r.verdict ? verdict_name(*r.verdict) : "") << "," << note << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_reports(const std::vector<VerificationReport>& reports,
                           OutputFormat format) {
    if (format == OutputFormat::Table) return render_reports_table(reports);
    if (format == OutputFormat::Csv) return render_reports_csv(reports);
    std::ostringstream os;
    for (const auto& r : reports) os << report_to_json(r, true).dump() << "\n";
    return os.str();
}

std::string canonical_jsonl(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) os << report_to_json(r, false).dump() << "\n";
    return os.str();
}

std::string render_galois(const std::vector<GaloisRow>& rows, OutputFormat format) {
    const auto& specs = field_specs();
    if (format == OutputFormat::Jsonl) {
        std::ostringstream os;
        for (const auto& row : rows) {
            nlohmann::ordered_json j;
            j["p"] = row.p;
            for (std::size_t i = 0; i < specs.size(); ++i) {
                nlohmann::ordered_json c;
                if (row.cells[i].ramified) {
                    c["ramified"] = true;
                } else {
                    c["frobenius_order"] = row.cells[i].order;
                    c["even_order"] = row.cells[i].even;
                    c["splitting_count"] = row.cells[i].splits;
                }
                j[specs[i].name] = c;
            }
            if (!row.violations.empty()) j["violations"] = row.violations;
            os << j.dump() << "\n";
        }
        return os.str();
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "p";
        for (const auto& spec : specs)
            os << "," << spec.name << "_order," << spec.name << "_even," << spec.name
               << "_splits";
        os << ",violations\n";
        for (const auto& row : rows) {
            os << row.p;
            for (const auto& cell : row.cells) {
                if (cell.ramified)
                    os << ",ram,,";
                else
                    os << "," << cell.order << "," << (cell.even ? "true" : "false") << ","
                       << cell.splits;
            }
            os << "," << row.violations.size() << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    os << std::left << std::setw(8) << "p";
    for (const auto& spec : specs) {
        std::string head = spec.name + " (ord/par/spl)";
        os << std::setw(32) << head;
    }
    os << "flags\n";
    for (const auto& row : rows) {
        os << std::left << std::setw(8) << row.p;
        for (const auto& cell : row.cells) {
            std::ostringstream c;
            if (cell.ramified)
                c << "ramified";
            else
                c << cell.order << "/" << (cell.even ? "even" : "odd") << "/" << cell.splits;
            os << std::setw(32) << c.str();
        }
        for (const auto& v : row.violations) os << v << " ";
        os << "\n";
    }
    return os.str();
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<CatalogEntry> entries;
    for (const auto& e : doc) {
        CatalogEntry entry;
        std::string label = e.at("label").get<std::string>();
        entry.label = label == "M6"    ? FamilyLabel::M6
                      : label == "M8"  ? FamilyLabel::M8
                      : label == "M16" ? FamilyLabel::M16
                                       : FamilyLabel::Other;
        entry.name = e.at("name").get<std::string>();
        entry.m = e.at("m").get<unsigned>();
        entry.f_integer = e.at("f").get<std::vector<std::int64_t>>();
        entry.prime_condition.modulus = e.at("prime_condition").at("modulus").get<std::uint32_t>();
        entry.prime_condition.residues =
            e.at("prime_condition").at("residues").get<std::vector<std::uint32_t>>();
        if (e.contains("exceptional_primes"))
            for (const auto& x : e.at("exceptional_primes"))
                entry.exceptional_primes.emplace_back(
                    x.at("p").get<std::uint32_t>(),
                    x.at("f").get<std::vector<std::int64_t>>());
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace ssc
