// Command-line interface: matrix enumeration with prescribed characteristic
// polynomial, Fourier-coefficient magnitudes, the embedded reference table,
// cubic-form positivity, F4 root combinatorics, metaplectic self-tests, and
// Whittaker numerics.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "g2theta/checks.hpp"
#include "g2theta/qp_io.hpp"
#include "g2theta/table.hpp"
#include "g2theta/whittaker.hpp"

namespace fs = std::filesystem;
using namespace g2theta;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitMismatch = 4;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("G2THETA_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/g2theta";
    return ".g2theta-cache";
}

QpResult compute_qp(const MonicCubic& p, unsigned jobs, const std::string& cache_dir,
                    bool use_cache) {
    if (use_cache) {
        if (auto hit = cache_load(cache_dir, p)) return *hit;
    }
    QpResult res = orbit_decompose(enumerate_qp(p, jobs));
    if (use_cache) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        if (!ec) cache_store(cache_dir, res);
    }
    return res;
}

void print_qp(const QpResult& res, const std::string& format, bool list_matrices,
              bool show_orbits, bool count_only) {
    if (count_only) {
        std::cout << res.total << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "polynomial,total,orbits\n"
                  << '"' << format_monic_cubic(res.polynomial) << "\"," << res.total << ","
                  << res.orbits.size() << "\n";
        return;
    }
    json j = qp_result_to_json(res);
    if (!show_orbits) j.erase("orbits");
    if (list_matrices) {
        json ms = json::array();
        for (const auto& T : res.matrices) ms.push_back(sym_to_json(T));
        j["matrices"] = ms;
    }
    std::cout << j.dump(2) << "\n";
}

std::complex<double> parse_complex(std::string s) {
    // forms: "a", "a+bi", "a-bi", "bi"
    for (auto& c : s)
        if (c == 'I' || c == 'j') c = 'i';
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {std::stod(s), 0.0};
    s.pop_back();
    size_t split = s.find_last_of("+-");
    if (split == std::string::npos || split == 0)
        return {0.0, s.empty() || s == "+" ? 1.0 : (s == "-" ? -1.0 : std::stod(s))};
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(s.substr(0, split)), std::stod(im)};
}

BinaryCubic parse_form(const std::string& s) { return BinaryCubic::from_text(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for half-integral weight Fourier coefficients"};
    app.fallthrough();  // accept global options after a subcommand name
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string cache_flag, format = "json";
    unsigned jobs = 1;
    std::uint64_t seed = 20260826;
    app.add_option("--cache-dir", cache_flag, "cache directory (else $G2THETA_CACHE_DIR)");
    app.add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", jobs, "worker threads for enumeration");
    app.add_option("--seed", seed, "seed for randomized self-tests");

    // qp
    auto* qp = app.add_subcommand("qp", "enumerate integer symmetric matrices with char poly p");
    std::string qp_poly;
    bool qp_list = false, qp_orbits = false, qp_count = false, no_cache = false;
    qp->add_option("polynomial", qp_poly, "monic cubic, e.g. \"t^3-t^2-2t+1\"")->required();
    qp->add_flag("--list", qp_list, "include all matrices in the output");
    qp->add_flag("--orbits", qp_orbits, "include the orbit decomposition");
    qp->add_flag("--count", qp_count, "print the total only");
    qp->add_flag("--no-cache", no_cache, "skip the result cache");

    // coeff
    auto* coeff = app.add_subcommand("coeff", "Fourier-coefficient magnitude for a cubic form a,b,c,1");
    std::string coeff_form;
    coeff->add_option("form", coeff_form, "integer form \"a,b,c,1\"")->required();

    // table
    auto* table = app.add_subcommand("table", "recompute the embedded 15-row reference table");

    // psd
    auto* psd = app.add_subcommand("psd", "classify a binary cubic form as PSD / NOT_PSD");
    std::string psd_form;
    psd->add_option("form", psd_form, "integer form \"a,b,c,d\"")->required();

    // roots
    auto* roots = app.add_subcommand("roots", "F4 root-system combinatorics");
    bool r_lemmas = false, r_witness = false, r_nu = false;
    roots->add_flag("--check-lemmas", r_lemmas, "run the four closure checks");
    roots->add_flag("--weyl-witness", r_witness, "find the Weyl dot-action witness");
    roots->add_flag("--nu-exc", r_nu, "print the exceptional exponent pairings");

    // cover
    auto* cover = app.add_subcommand("cover", "metaplectic cocycle self-tests");
    bool c_selftest = false;
    std::string c_place = "2";
    std::uint64_t c_samples = 10000;
    cover->add_flag("--selftest", c_selftest, "run the relation suites");
    cover->add_option("--place", c_place, "place of Q: a prime or \"inf\"");
    cover->add_option("--samples", c_samples, "samples per suite");

    // whittaker
    auto* wh = app.add_subcommand("whittaker", "generalized Whittaker coefficients");
    std::string wh_n = "1/2", wh_alpha = "1";
    double wh_nu = 1.0;
    wh->add_option("--n", wh_n, "half-integer weight parameter, e.g. 1/2, 3/2");
    wh->add_option("--nu", wh_nu, "positive scale nu");
    wh->add_option("--alpha", wh_alpha, "nonzero complex alpha, e.g. \"0.3+0.4i\"");

    // batch
    auto* batch = app.add_subcommand("batch", "process a CSV of polynomials");
    std::string batch_file;
    batch->add_option("file", batch_file, "CSV with header \"polynomial\"")->required();

    // checks
    auto* checks = app.add_subcommand("checks", "run the full cross-module property suite");
    std::string checks_json;
    checks->add_option("--json", checks_json, "write a JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string cache_dir = resolve_cache_dir(cache_flag);

    try {
        if (*qp) {
            MonicCubic p;
            try {
                p = parse_monic_cubic(qp_poly);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            QpResult res = compute_qp(p, jobs, cache_dir, !no_cache);
            print_qp(res, format, qp_list, qp_orbits, qp_count);
            return kExitOk;
        }

        if (*coeff) {
            BinaryCubic f;
            try {
                f = parse_form(coeff_form);
                if (f.d != 1) {
                    std::cerr << "only forms with d = 1 are supported\n";
                    return kExitUsage;
                }
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            MonicCubic p = companion(f);
            QpResult res = compute_qp(p, jobs, cache_dir, true);
            json j;
            j["form"] = f.to_text();
            j["polynomial"] = format_monic_cubic(p);
            j["magnitude"] = res.total;  // the coefficient is this up to sign
            j["orbit_count"] = res.orbits.size();
            bool irreducible = detail::rational_roots(p.to_poly()).empty();
            if (irreducible && res.total > 0 && CubicRing(p).is_maximal())
                j["narrow_two_torsion"] = res.orbits.size();
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*table) {
            bool all_ok = true;
            json rows = json::array();
            for (const auto& row : reference_table()) {
                MonicCubic p = parse_monic_cubic(row.polynomial);
                QpResult res = compute_qp(p, jobs, cache_dir, false);
                bool ok = res.total == row.qp_count;
                bool irreducible = detail::rational_roots(p.to_poly()).empty();
                if (irreducible) {
                    ok = ok && res.total == 24 * static_cast<long>(res.orbits.size());
                    for (const auto& orb : res.orbits) ok = ok && orb.stabilizer_order == 1;
                    if (row.maximal && res.total > 0)
                        ok = ok && static_cast<long>(res.orbits.size()) ==
                                       two_torsion_order(row.narrow_class_group);
                } else {
                    for (const auto& orb : res.orbits) ok = ok && orb.stabilizer_order == 2;
                }
                ok = ok && CubicRing(p).is_maximal() == row.maximal;
                json r;
                r["polynomial"] = row.polynomial;
                r["expected"] = row.qp_count;
                r["computed"] = res.total;
                r["orbits"] = res.orbits.size();
                r["class_group"] = row.narrow_class_group;
                r["pass"] = ok;
                rows.push_back(r);
                all_ok = all_ok && ok;
            }
            if (format == "csv") {
                std::cout << "polynomial,expected,computed,orbits,class_group,pass\n";
                for (const auto& r : rows)
                    std::cout << '"' << r["polynomial"].get<std::string>() << "\","
                              << r["expected"] << "," << r["computed"] << "," << r["orbits"]
                              << ",\"" << r["class_group"].get<std::string>() << "\","
                              << (r["pass"].get<bool>() ? "yes" : "no") << "\n";
            } else {
                json j;
                j["rows"] = rows;
                j["pass"] = all_ok;
                std::cout << j.dump(2) << "\n";
            }
            return all_ok ? kExitOk : kExitMismatch;
        }

        if (*psd) {
            BinaryCubic f;
            try {
                f = parse_form(psd_form);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            std::cout << (psd_classify(f) == PsdClass::PSD ? "PSD" : "NOT_PSD") << "\n";
            return kExitOk;
        }

        if (*roots) {
            RootSystemF4 F;
            json j;
            if (r_lemmas || (!r_witness && !r_nu)) {
                json lemmas = json::array();
                bool ok = true;
                for (const auto& c : F.check_closure_lemmas()) {
                    json l;
                    l["id"] = c.id;
                    l["statement"] = c.statement;
                    l["verified"] = c.verified;
                    lemmas.push_back(l);
                    ok = ok && c.verified;
                }
                j["closure_checks"] = lemmas;
                if (!ok) {
                    std::cout << j.dump(2) << "\n";
                    return kExitMismatch;
                }
            }
            if (r_witness) {
                auto wit = F.find_dot_witnesses();
                j["weyl_order"] = F.weyl_group().size();
                j["witness_count"] = wit.size();
                if (!wit.empty()) {
                    json m = json::array();
                    for (const auto& row : wit.front()) {
                        json r = json::array();
                        for (const auto& x : row) r.push_back(x.get_str());
                        m.push_back(r);
                    }
                    j["witness"] = m;
                } else {
                    std::cout << j.dump(2) << "\n";
                    return kExitMismatch;
                }
            }
            if (r_nu) {
                Root4 nu = F.nu_exc();
                json coords = json::array(), pairings = json::array();
                for (int i = 0; i < 4; ++i) {
                    coords.push_back(nu[static_cast<size_t>(i)].get_str());
                    pairings.push_back(
                        inner(nu, F.coroot(F.simple()[static_cast<size_t>(i)])).get_str());
                }
                j["nu_exc"] = coords;
                j["coroot_pairings"] = pairings;
            }
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*cover) {
            if (!c_selftest) {
                std::cerr << "nothing to do: pass --selftest\n";
                return kExitUsage;
            }
            Place v = parse_place(c_place);
            json suites = json::array();
            std::uint64_t total_failures = 0;
            for (const auto& r : run_all_selftests(v, c_samples, seed)) {
                json s;
                s["test"] = r.test;
                s["samples"] = r.samples;
                s["failures"] = r.failures;
                suites.push_back(s);
                total_failures += r.failures;
            }
            json j;
            j["place"] = v.to_string();
            j["suites"] = suites;
            std::cout << j.dump(2) << "\n";
            return total_failures == 0 ? kExitOk : kExitMismatch;
        }

        if (*wh) {
            HalfInt n = parse_half_int(wh_n);
            std::complex<double> alpha = parse_complex(wh_alpha);
            WhittakerValue w = whittaker_value(n, wh_nu, alpha);
            json coeffs = json::object();
            for (const auto& t : w.terms) {
                std::ostringstream key;
                key << "x^" << t.i << " y^" << t.j;
                coeffs[key.str()] = {t.coeff.real(), t.coeff.imag()};
            }
            json j;
            j["n"] = wh_n;
            j["nu"] = wh_nu;
            j["coefficients"] = coeffs;
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*batch) {
            std::ifstream in(batch_file);
            if (!in) {
                std::cerr << "cannot open " << batch_file << "\n";
                return kExitUsage;
            }
            std::string line;
            bool saw_header = false;
            if (format == "csv") std::cout << "polynomial,total,orbits,error\n";
            json out = json::array();
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                if (line.empty()) continue;
                if (!saw_header) {
                    saw_header = true;
                    if (line == "polynomial") continue;
                    std::cerr << "missing \"polynomial\" header\n";
                    return kExitUsage;
                }
                std::string poly = line;
                if (poly.size() >= 2 && poly.front() == '"' && poly.back() == '"')
                    poly = poly.substr(1, poly.size() - 2);
                json row;
                row["polynomial"] = poly;
                try {
                    QpResult res = compute_qp(parse_monic_cubic(poly), jobs, cache_dir, true);
                    row["total"] = res.total;
                    row["orbits"] = res.orbits.size();
                } catch (const std::exception& e) {
                    row["error"] = e.what();
                }
                if (format == "csv") {
                    std::cout << '"' << poly << "\","
                              << (row.contains("total") ? row["total"].dump() : "") << ","
                              << (row.contains("orbits") ? row["orbits"].dump() : "") << ","
                              << (row.contains("error") ? row["error"].get<std::string>() : "")
                              << "\n";
                } else {
                    out.push_back(row);
                }
            }
            if (format != "csv") std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (*checks) {
            json report = json::array();
            bool all_ok = true;
            for (const auto& o : run_all_checks(seed)) {
                json r;
                r["id"] = o.id;
                r["samples"] = o.samples;
                r["failures"] = o.failures;
                r["seconds"] = o.seconds;
                r["pass"] = o.pass();
                report.push_back(r);
                all_ok = all_ok && o.pass();
                std::cerr << (o.pass() ? "ok   " : "FAIL ") << o.id << " (" << o.samples
                          << " samples)\n";
            }
            if (!checks_json.empty()) {
                std::ofstream out(checks_json);
                out << report.dump(2) << "\n";
            } else {
                std::cout << report.dump(2) << "\n";
            }
            return all_ok ? kExitOk : kExitMismatch;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
