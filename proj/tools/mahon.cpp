// mahon: exact q-series computations and verification scans for
// multiplicity-weighted partition detectors.
//
// Exit codes: 0 = computed/verified, 1 = an assertion failed (details in
// the report), 2 = usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahon/appendix.hpp"
#include "mahon/detect.hpp"
#include "mahon/detectors.hpp"
#include "mahon/eisenstein.hpp"
#include "mahon/expansion.hpp"
#include "mahon/macmahon.hpp"
#include "mahon/serialize.hpp"

namespace {

using mahon::Json;

struct Output {
    std::string format = "json";  // json | csv
    std::string path;             // empty = stdout

    void emit(const Json& doc, const std::vector<std::string>& csv_header,
              const std::vector<std::vector<std::string>>& csv_rows) const {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
            out = &file;
        }
        if (format == "json") {
            *out << doc.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < csv_header.size(); ++i)
                *out << (i ? "," : "") << csv_header[i];
            *out << "\n";
            for (const auto& row : csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    *out << (i ? "," : "") << row[i];
                *out << "\n";
            }
        }
    }
};

Json report_header(const std::string& command) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    return doc;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("MAHON_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write the report to a file instead of stdout");
}

std::vector<std::vector<std::string>> rows_to_csv(const Json& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& cell : row)
            line.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
        out.push_back(std::move(line));
    }
    return out;
}

// Parses "g:1,3" or "f:1,3,1,3" into a detector series factory.
mahon::QSeries<mahon::Rational> parse_form(const std::string& spec, std::size_t order) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("form", "expected g:K,L or f:K,L,R,T, got " + spec);
    const std::string kind = spec.substr(0, colon);
    std::vector<unsigned> nums;
    std::size_t pos = colon + 1;
    while (pos <= spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string item =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        nums.push_back(static_cast<unsigned>(std::stoul(item)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (kind == "g" && nums.size() == 2)
        return mahon::build_g({nums[0], nums[1], {}, {}}, order);
    if (kind == "f" && nums.size() == 4)
        return mahon::build_f({nums[0], nums[1], nums[2], nums[3]}, order);
    throw CLI::ValidationError("form", "expected g:K,L or f:K,L,R,T, got " + spec);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact prime-cube and progression-prime detector toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --jobs after a subcommand name
    unsigned jobs = default_jobs();
    app.add_option("--jobs", jobs, "Worker threads for scans (default: all cores)");

    // ---- macmahon ----
    std::string vector_csv;
    std::uint64_t max_n = 200;
    Output mac_out;
    auto* mac = app.add_subcommand("macmahon",
                                   "Multiplicity-weighted partition counts M_vec(n)");
    mac->add_option("--vector", vector_csv, "Exponent vector, e.g. 1,1,3")->required();
    mac->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    add_output_flags(mac, mac_out);

    // ---- form g / form f ----
    unsigned fk = 1, fl = 3, fr = 1, ft = 3;
    std::uint64_t form_max = 500;
    bool emit_series = false;
    Output form_out;
    auto* form = app.add_subcommand("form", "Detector form coefficients");
    form->require_subcommand(1);
    auto* form_g = form->add_subcommand("g", "Cube detector g");
    auto* form_f = form->add_subcommand("f", "Progression detector f");
    for (auto* sub : {form_g, form_f}) {
        sub->add_option("--k", fk, "Lower odd exponent")->capture_default_str();
        sub->add_option("--l", fl, "Upper odd exponent")->capture_default_str();
        sub->add_option("--max-n", form_max, "Largest n")->capture_default_str();
        sub->add_flag("--emit-series", emit_series,
                      "Emit the full series object instead of (n, coefficient) rows");
        add_output_flags(sub, form_out);
    }
    form_f->add_option("--r", fr, "Residue")->capture_default_str();
    form_f->add_option("--t", ft, "Modulus")->capture_default_str();

    // ---- scan cubes / scan ap ----
    unsigned sk = 1, sl = 3, sr = 1, st = 3;
    std::uint64_t scan_max = 2000;
    Output scan_out;
    auto* scan = app.add_subcommand("scan", "Detection scans against ground truth");
    scan->require_subcommand(1);
    auto* scan_cubes = scan->add_subcommand("cubes", "Prime-cube detection scan");
    auto* scan_ap_cmd = scan->add_subcommand("ap", "Progression-prime detection scan");
    for (auto* sub : {scan_cubes, scan_ap_cmd}) {
        sub->add_option("--k", sk, "Lower odd exponent")->capture_default_str();
        sub->add_option("--l", sl, "Upper odd exponent")->capture_default_str();
        sub->add_option("--max-n", scan_max, "Largest n")->capture_default_str();
        add_output_flags(sub, scan_out);
    }
    scan_ap_cmd->add_option("--r", sr, "Residue")->capture_default_str();
    scan_ap_cmd->add_option("--t", st, "Modulus")->capture_default_str();

    // ---- probe lemmas ----
    unsigned pk = 1, pl = 3;
    std::uint64_t probe_max = 1000;
    Output probe_out;
    auto* probe = app.add_subcommand("probe", "Termwise sign and bound probes");
    auto* probe_lemmas_cmd = probe->add_subcommand("lemmas", "Check per-divisor bounds");
    probe->require_subcommand(1);
    probe_lemmas_cmd->add_option("--k", pk, "Lower odd exponent")->capture_default_str();
    probe_lemmas_cmd->add_option("--l", pl, "Upper odd exponent")->capture_default_str();
    probe_lemmas_cmd->add_option("--max-n", probe_max, "Largest n")->capture_default_str();
    add_output_flags(probe_lemmas_cmd, probe_out);

    // ---- check ramanujan ----
    std::uint64_t ram_order = 200;
    Output ram_out;
    auto* check = app.add_subcommand("check", "Internal identity checks");
    check->require_subcommand(1);
    auto* ram = check->add_subcommand("ramanujan", "Derivative identities for G2, G4, G6");
    ram->add_option("--order", ram_order, "Truncation order")->capture_default_str();
    add_output_flags(ram, ram_out);

    // ---- verify appendix ----
    std::string which = "gstar";
    std::uint64_t verify_max = 200;
    Output verify_out;
    auto* verify = app.add_subcommand("verify", "Golden-table verification");
    verify->require_subcommand(1);
    auto* appendix = verify->add_subcommand("appendix", "Published expansion tables");
    appendix->add_option("--which", which, "Which table")
        ->check(CLI::IsMember({"gstar", "fstar"}))
        ->capture_default_str();
    appendix->add_option("--max-n", verify_max, "Largest n")->capture_default_str();
    add_output_flags(appendix, verify_out);

    // ---- fit ----
    std::string fit_target;
    std::string basis_file;
    std::uint64_t fit_k = 0, verify_k = 0;
    Output fit_out;
    auto* fit = app.add_subcommand("fit", "Exact expansion fitting over a basis file");
    fit->add_option("--target", fit_target, "Target form, g:K,L or f:K,L,R,T")->required();
    fit->add_option("--basis-file", basis_file, "JSON list of basis atoms")
        ->required()
        ->check(CLI::ExistingFile);
    fit->add_option("--fit-k", fit_k, "Fit window (default: basis size + 10)");
    fit->add_option("--verify-k", verify_k, "Verify window (default: 2 * fit window)");
    add_output_flags(fit, fit_out);

    // ---- rank ----
    std::vector<std::string> rank_forms;
    std::uint64_t rank_window = 60;
    Output rank_out;
    auto* rank = app.add_subcommand("rank", "Independence rank of detector forms");
    rank->add_option("--forms", rank_forms, "Forms, e.g. g:1,3 g:1,5")->required();
    rank->add_option("--window", rank_window, "Coefficient window")->capture_default_str();
    add_output_flags(rank, rank_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (mac->parsed()) {
        const auto vec = mahon::parse_exponent_vector(vector_csv);
        const auto values = mahon::macmahon_values(vec, max_n);
        Json doc = report_header("macmahon");
        doc["vector"] = vec.entries;
        Json rows = Json::array();
        for (std::uint64_t n = 1; n <= max_n; ++n)
            rows.push_back(Json::array({n, mahon::to_string(values[n])}));
        doc["rows"] = rows;
        mac_out.emit(doc, {"n", "value"}, rows_to_csv(rows));
        return 0;
    }

    if (form_g->parsed() || form_f->parsed()) {
        mahon::DetectorParams params{fk, fl, {}, {}};
        std::string name = "form g";
        if (form_f->parsed()) {
            params.residue = fr;
            params.modulus = ft;
            name = "form f";
        }
        const auto series = form_f->parsed() ? mahon::build_f(params, form_max)
                                             : mahon::build_g(params, form_max);
        Json doc = report_header(name);
        doc["k"] = fk;
        doc["l"] = fl;
        if (form_f->parsed()) {
            doc["r"] = fr;
            doc["t"] = ft;
        }
        if (emit_series) {
            doc["series"] = mahon::to_json(series);
            form_out.emit(doc, {"n", "coefficient"}, {});
            return 0;
        }
        Json rows = Json::array();
        for (std::uint64_t n = 1; n <= form_max; ++n)
            rows.push_back(Json::array({n, mahon::to_string(series[n])}));
        doc["rows"] = rows;
        form_out.emit(doc, {"n", "coefficient"}, rows_to_csv(rows));
        return 0;
    }

    if (scan_cubes->parsed()) {
        const auto report = mahon::scan_cube(sk, sl, scan_max, jobs);
        Json doc = report_header("scan cubes");
        doc["k"] = sk;
        doc["l"] = sl;
        doc["max_n"] = scan_max;
        doc["zero_set"] = report.zero_set;
        Json mism = Json::array();
        for (const auto& m : report.mismatches)
            mism.push_back({{"n", m.n},
                            {"expected_sign", m.expected_sign},
                            {"actual_sign", m.actual_sign}});
        doc["mismatches"] = mism;
        doc["ok"] = report.ok();
        scan_out.emit(doc, {"n", "expected_sign", "actual_sign"}, rows_to_csv(mism));
        return report.ok() ? 0 : 1;
    }

    if (scan_ap_cmd->parsed()) {
        const auto report = mahon::scan_ap(sk, sl, sr, st, scan_max, jobs);
        Json doc = report_header("scan ap");
        doc["k"] = sk;
        doc["l"] = sl;
        doc["r"] = sr;
        doc["t"] = st;
        doc["max_n"] = scan_max;
        doc["zero_set"] = report.zero_set;
        doc["negatives"] = report.negatives;
        doc["false_zeros"] = report.false_zeros;
        doc["missed_primes"] = report.missed_primes;
        doc["n1_zero"] = report.n1_zero;
        doc["ok"] = report.ok();
        std::vector<std::vector<std::string>> zero_rows;
        for (auto n : report.zero_set) zero_rows.push_back({std::to_string(n)});
        scan_out.emit(doc, {"zero_n"}, zero_rows);
        return report.ok() ? 0 : 1;
    }

    if (probe_lemmas_cmd->parsed()) {
        const auto report = mahon::probe_lemmas(pk, pl, probe_max, jobs);
        Json doc = report_header("probe lemmas");
        doc["k"] = pk;
        doc["l"] = pl;
        doc["max_n"] = probe_max;
        Json fails = Json::array();
        for (const auto& f : report.failures)
            fails.push_back({{"n", f.n}, {"d", f.d}, {"assertion", f.assertion}});
        doc["failures"] = fails;
        doc["ok"] = report.ok();
        probe_out.emit(doc, {"n", "d", "assertion"}, rows_to_csv(fails));
        return report.ok() ? 0 : 1;
    }

    if (ram->parsed()) {
        const auto report = mahon::ramanujan_check(ram_order);
        Json doc = report_header("check ramanujan");
        doc["order"] = ram_order;
        Json idents = Json::array();
        for (int i = 0; i < 3; ++i) {
            Json entry;
            entry["identity"] = i + 1;
            if (report.max_nonzero[i])
                entry["max_nonzero_index"] = *report.max_nonzero[i];
            else
                entry["residual"] = "all zero";
            idents.push_back(entry);
        }
        doc["identities"] = idents;
        doc["ok"] = report.all_zero;
        ram_out.emit(doc, {"identity", "status"}, {});
        return report.all_zero ? 0 : 1;
    }

    if (appendix->parsed()) {
        const auto report = which == "gstar" ? mahon::verify_gstar(verify_max)
                                             : mahon::verify_fstar(verify_max);
        Json doc = report_header("verify appendix");
        doc["which"] = which;
        doc["max_n"] = verify_max;
        doc["equal"] = report.equal;
        if (report.first_mismatch) {
            doc["first_mismatch_n"] = *report.first_mismatch;
            doc["expected"] = report.expected_at_mismatch;
            doc["actual"] = report.actual_at_mismatch;
        }
        doc["n1"] = {{"equal", report.n1_equal},
                     {"expected", report.n1_expected},
                     {"actual", report.n1_actual}};
        doc["zero_set"] = report.zero_set;
        std::vector<std::vector<std::string>> zero_rows;
        for (auto n : report.zero_set) zero_rows.push_back({std::to_string(n)});
        verify_out.emit(doc, {"zero_n"}, zero_rows);
        return report.equal ? 0 : 1;
    }

    if (fit->parsed()) {
        std::ifstream in(basis_file);
        nlohmann::json basis_doc = nlohmann::json::parse(in);
        const auto basis = mahon::basis_from_json(basis_doc);
        if (fit_k == 0) fit_k = basis.size() + 10;
        if (verify_k == 0) verify_k = 2 * fit_k;
        const unsigned conductor = basis.front().conductor;
        const auto target =
            mahon::embed_series(parse_form(fit_target, verify_k), conductor);
        const auto result = mahon::fit_expansion(target, basis, fit_k, verify_k);
        Json doc = report_header("fit");
        doc["target"] = fit_target;
        doc["fit_k"] = fit_k;
        doc["verify_k"] = verify_k;
        doc["consistent"] = result.consistent;
        doc["nullspace_dim"] = result.nullspace_dim;
        if (result.consistent) {
            doc["verified"] = result.verified;
            if (result.first_verify_mismatch)
                doc["first_verify_mismatch"] = *result.first_verify_mismatch;
            Json coeffs = Json::array();
            for (const auto& c : result.coefficients) coeffs.push_back(mahon::to_json(c));
            doc["coefficients"] = coeffs;
        }
        fit_out.emit(doc, {"consistent"}, {});
        return (result.consistent && result.verified) ? 0 : 1;
    }

    if (rank->parsed()) {
        std::vector<mahon::QSeries<mahon::Rational>> forms;
        for (const auto& spec : rank_forms) forms.push_back(parse_form(spec, rank_window));
        const std::size_t r = mahon::independence_rank(forms, rank_window);
        Json doc = report_header("rank");
        doc["forms"] = rank_forms;
        doc["window"] = rank_window;
        doc["rank"] = r;
        doc["independent"] = (r == forms.size());
        rank_out.emit(doc, {"rank"}, {{std::to_string(r)}});
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;  // CLI11_PARSE already printed usage, but rethrown paths land here
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
