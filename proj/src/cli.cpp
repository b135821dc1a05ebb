#include "jiso/cli.hpp"

#include "jiso/boundary.hpp"
#include "jiso/candidate_sets.hpp"
#include "jiso/closed_form.hpp"
#include "jiso/oracle.hpp"
#include "jiso/scan.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace jiso {

using json = nlohmann::json;

namespace {

json vertex_json(std::span<const int> elems) {
    return json(std::vector<int>(elems.begin(), elems.end()));
}

json set_json(const VertexSet& s) {
    json arr = json::array();
    for (i64 idx = 0; idx < s.size(); ++idx) arr.push_back(vertex_json(s.member(idx)));
    return arr;
}

std::string vertex_text(std::span<const int> elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems[i]);
    }
    out += '}';
    return out;
}

std::vector<u64> parse_ns_list(const std::string& text) {
    std::vector<u64> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ns.push_back(std::stoull(item));
    }
    if (ns.empty()) throw CLI::ValidationError("--ns", "needs at least one value");
    return ns;
}

int cmd_exact(i64 n, i64 k, const std::string& format, std::ostream& out) {
    const auto result = iso_exact(n, k);
    if (format == "json") {
        json j{{"n", n}, {"k", k}, {"iso", ratio_to_string(result.iso)},
               {"witness", set_json(result.witness)}};
        out << j.dump(2) << "\n";
    } else {
        out << "iso(J(" << n << "," << k << ")) = " << ratio_to_string(result.iso) << "\n";
        out << "witness (" << result.witness.size() << " vertices):";
        for (i64 idx = 0; idx < result.witness.size(); ++idx)
            out << ' ' << vertex_text(result.witness.member(idx));
        out << "\n";
    }
    return 0;
}

int cmd_bcurve(i64 n, i64 k, i64 m_max, const std::string& format, std::ostream& out) {
    if (m_max == 0) m_max = binomial(n, k).convert_to<i64>() / 2;
    const auto curve = b_curve(n, k, m_max);
    if (format == "json") {
        json rows = json::array();
        for (const auto& e : curve.values)
            rows.push_back({{"m", e.m}, {"b", e.b}, {"witness", set_json(curve.witness_set(e.m))}});
        out << json{{"n", n}, {"k", k}, {"values", rows}}.dump(2) << "\n";
    } else {
        out << "B_J(" << n << "," << k << ")(m) for m = 1.." << m_max << "\n";
        for (const auto& e : curve.values) {
            out << "m=" << e.m << " B=" << e.b << " witness:";
            const auto w = curve.witness_set(e.m);
            for (i64 idx = 0; idx < w.size(); ++idx) out << ' ' << vertex_text(w.member(idx));
            out << "\n";
        }
    }
    return 0;
}

int cmd_verify_ak(i64 n, const std::string& format, std::ostream& out) {
    const auto report = verify_ak(n);
    auto winner_name = [](AkWinner w) {
        return w == AkWinner::F ? "F" : w == AkWinner::L ? "L" : "tie";
    };
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"m", r.m},
                            {"b", r.b},
                            {"f_boundary", r.f_boundary},
                            {"l_boundary", r.l_boundary},
                            {"winner", winner_name(r.winner)},
                            {"violation", r.violation}});
        out << json{{"n", n}, {"rows", rows}, {"violations", report.violations}}.dump(2) << "\n";
    } else {
        out << "first/last extremality check, n=" << n << "\n";
        for (const auto& r : report.rows)
            out << "m=" << r.m << " B=" << r.b << " F=" << r.f_boundary << " L=" << r.l_boundary
                << " winner=" << winner_name(r.winner) << (r.violation ? " VIOLATION" : "")
                << "\n";
        out << (report.violations == 0 ? "no violations\n"
                                       : std::to_string(report.violations) + " violations\n");
    }
    return report.violations == 0 ? 0 : 1;
}

int cmd_verify_lemmas(i64 max_n, const std::string& format, std::ostream& out) {
    const auto report = verify_lemma_sweep(max_n);
    if (format == "json") {
        json fails = json::array();
        for (const auto& f : report.failures)
            fails.push_back(
                {{"lemma", f.lemma}, {"n", f.n}, {"params", f.params}, {"detail", f.detail}});
        out << json{{"max_n", report.n_max},
                    {"horizontal_tuples", report.horizontal_tuples},
                    {"column_tuples", report.column_tuples},
                    {"failures", fails}}
                   .dump(2)
            << "\n";
    } else {
        out << "extension-lemma sweep, 4 <= n <= " << report.n_max << "\n";
        out << "horizontal tuples: " << report.horizontal_tuples << "\n";
        out << "column tuples: " << report.column_tuples << "\n";
        for (const auto& f : report.failures) {
            out << "FAIL " << f.lemma << " n=" << f.n << " (";
            for (std::size_t i = 0; i < f.params.size(); ++i)
                out << (i ? "," : "") << f.params[i];
            out << "): " << f.detail << "\n";
        }
        out << (report.failures.empty() ? "no failures\n"
                                        : std::to_string(report.failures.size()) + " failures\n");
    }
    return report.failures.empty() ? 0 : 1;
}

int cmd_closed_form(u64 n, const std::string& format, std::ostream& out) {
    const auto row = closed_form_row(n);
    if (format == "json") {
        json j{{"n", row.n},
               {"n_star", row.n_star.str()},
               {"p", row.p},
               {"q", row.q},
               {"i", row.i},
               {"j", row.j},
               {"l_size", row.l_size.str()},
               {"l_boundary", row.l_boundary.str()},
               {"fp_size", row.fp_size.str()},
               {"fp_boundary", row.fp_boundary.str()},
               {"ratio_L", ratio_to_string(row.ratio_L)},
               {"ratio_Fp", ratio_to_string(row.ratio_Fp)},
               {"gap", ratio_to_string(row.gap)},
               {"deviation", row.deviation}};
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << row.n << "\n";
        out << "n_star = " << row.n_star << "\n";
        out << "p = " << row.p << "\n";
        out << "q = " << row.q << "\n";
        out << "i = " << row.i << "\n";
        out << "j = " << row.j << "\n";
        out << "l_size = " << row.l_size << "\n";
        out << "l_boundary = " << row.l_boundary << "\n";
        out << "fp_size = " << row.fp_size << "\n";
        out << "fp_boundary = " << row.fp_boundary << "\n";
        out << "ratio_L = " << ratio_to_string(row.ratio_L) << "\n";
        out << "ratio_Fp = " << ratio_to_string(row.ratio_Fp) << "\n";
        out << "gap = " << ratio_to_string(row.gap) << "\n";
        out << "deviation = " << row.deviation << "\n";
    }
    return 0;
}

int cmd_candidates(i64 n, const std::string& which, i64 m, const std::string& format,
                   std::ostream& out) {
    VertexSet s;
    if (which == "F") {
        if (m <= 0) throw CLI::ValidationError("--m", "required for --set F");
        s = first_m(n, m);
    } else if (which == "L") {
        if (m <= 0) throw CLI::ValidationError("--m", "required for --set L");
        s = last_m(n, m);
    } else {
        s = f_prime(n);
    }
    const BigInt bnd = boundary_lemma(s);
    const ExactRatio ratio = make_ratio(bnd, BigInt(s.size()));
    if (format == "json") {
        json j{{"n", n},        {"set", which},
               {"size", s.size()}, {"boundary", bnd.str()},
               {"ratio", ratio_to_string(ratio)}, {"members", set_json(s)}};
        out << j.dump(2) << "\n";
    } else {
        out << "set " << which << (which == "Fp" ? "" : " m=" + std::to_string(m)) << " of J(" << n
            << ",2)\n";
        out << "size = " << s.size() << "\n";
        out << "boundary = " << bnd << "\n";
        out << "ratio = " << ratio_to_string(ratio) << "\n";
        for (i64 idx = 0; idx < s.size(); ++idx) out << vertex_text(s.member(idx)) << "\n";
    }
    return 0;
}

int cmd_scan(u64 from, u64 to, const std::string& bound_text, const std::string& checkpoint,
             int workers, u64 chunk_size, u64 samples, bool progress, const std::string& format,
             std::ostream& out) {
    ScanOptions opts;
    opts.bound = parse_ratio(bound_text);
    opts.workers = workers;
    opts.checkpoint_path = checkpoint;
    opts.chunk_size = chunk_size;
    opts.slow_path_samples = samples;
    opts.progress = progress;
    if (const char* env = std::getenv("JOHNSON_ISO_CHECKPOINT_INTERVAL")) {
        const long long v = std::atoll(env);
        if (v < 1) throw CLI::ValidationError("JOHNSON_ISO_CHECKPOINT_INTERVAL",
                                              "must be a positive integer");
        opts.checkpoint_interval = static_cast<u64>(v);
    }

    const auto report = scan_conjecture(from, to, opts);
    if (format == "json") {
        out << scan_report_to_json(report) << "\n";
    } else {
        out << "scan [" << report.n_from << ", " << report.n_to << "] against gap <= "
            << bound_text << "\n";
        out << "max_gap = " << ratio_to_string(report.max_gap) << " at n = " << report.argmax_n
            << "\n";
        out << "violations = " << report.violations.size() << "\n";
        for (const auto& v : report.violations)
            out << "  n=" << v.n << " gap=" << ratio_to_string(v.gap) << "\n";
        out << "checksum = ";
        {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(report.checksum));
            out << buf << "\n";
        }
        out << "verified_samples = " << report.verified_samples << "\n";
        if (report.resumed_from) out << "resumed_from = " << report.resumed_from << "\n";
        out << "elapsed_seconds = " << report.elapsed_seconds << "\n";
        out << "rows_per_second = " << report.rows_per_second << "\n";
    }
    return report.violations.empty() ? 0 : 1;
}

int cmd_converge(const std::string& ns_text, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
    const auto rows = convergence_table(parse_ns_list(ns_text));
    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        sink = &file;
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"ratio_L", r.ratio_l},
                           {"ratio_Fp", r.ratio_fp},
                           {"deviation", r.deviation},
                           {"gap", r.gap}});
        *sink << arr.dump(2) << "\n";
    } else if (format == "text") {
        for (const auto& r : rows)
            *sink << "n=" << r.n << " ratio_L=" << r.ratio_l << " ratio_Fp=" << r.ratio_fp
                  << " deviation=" << r.deviation << " gap=" << r.gap << "\n";
    } else {
        convergence_csv(rows, *sink);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact isoperimetric toolkit for Johnson graphs J(n,2)"};
    app.require_subcommand(1);

    // exact
    auto* exact = app.add_subcommand("exact", "exhaustive iso(J(n,k)) with witness");
    i64 exact_n = 0, exact_k = 2;
    std::string exact_fmt = "text";
    exact->add_option("--n", exact_n, "Johnson parameter n")->required();
    exact->add_option("--k", exact_k, "subset size k");
    exact->add_option("--format", exact_fmt)->check(CLI::IsMember({"text", "json"}));

    // bcurve
    auto* bcurve_cmd = app.add_subcommand("bcurve", "exhaustive B(m) curve with witnesses");
    i64 bc_n = 0, bc_k = 2, bc_m = 0;
    std::string bc_fmt = "text";
    bcurve_cmd->add_option("--n", bc_n)->required();
    bcurve_cmd->add_option("--k", bc_k);
    bcurve_cmd->add_option("--m-max", bc_m, "default floor(C(n,k)/2)");
    bcurve_cmd->add_option("--format", bc_fmt)->check(CLI::IsMember({"text", "json"}));

    // verify-ak
    auto* ak = app.add_subcommand("verify-ak", "check B(m) = min(|dF_m|, |dL_m|) exhaustively");
    i64 ak_n = 0;
    std::string ak_fmt = "text";
    ak->add_option("--n", ak_n)->required();
    ak->add_option("--format", ak_fmt)->check(CLI::IsMember({"text", "json"}));

    // verify-lemmas
    auto* lem = app.add_subcommand("verify-lemmas", "sweep both extension lemmas exactly");
    i64 lem_n = 0;
    std::string lem_fmt = "text";
    lem->add_option("--max-n", lem_n)->required();
    lem->add_option("--format", lem_fmt)->check(CLI::IsMember({"text", "json"}));

    // closed-form
    auto* cf = app.add_subcommand("closed-form", "exact closed forms for one n");
    u64 cf_n = 0;
    std::string cf_fmt = "text";
    cf->add_option("--n", cf_n)->required();
    cf->add_option("--format", cf_fmt)->check(CLI::IsMember({"text", "json"}));

    // candidates
    auto* cand = app.add_subcommand("candidates", "materialize F_m / L_m / F'");
    i64 cand_n = 0, cand_m = 0;
    std::string cand_set, cand_fmt = "text";
    cand->add_option("--n", cand_n)->required();
    cand->add_option("--set", cand_set)->required()->check(CLI::IsMember({"F", "L", "Fp"}));
    cand->add_option("--m", cand_m);
    cand->add_option("--format", cand_fmt)->check(CLI::IsMember({"text", "json"}));

    // scan
    auto* scan = app.add_subcommand("scan", "exact conjecture scan over an n range");
    u64 scan_from = 0, scan_to = 0, scan_chunk = 1u << 20, scan_samples = 1000;
    int scan_workers = 0;
    bool scan_progress = false;
    std::string scan_bound = "3/2", scan_checkpoint, scan_fmt = "text";
    scan->add_option("--from", scan_from)->required();
    scan->add_option("--to", scan_to)->required();
    scan->add_option("--bound", scan_bound, "gap bound as NUM/DEN (default 3/2)");
    scan->add_option("--checkpoint", scan_checkpoint, "checkpoint file (resume if present)");
    scan->add_option("--workers", scan_workers, "0 = all available");
    scan->add_option("--chunk-size", scan_chunk, "values of n per work chunk");
    scan->add_option("--samples", scan_samples, "n re-verified on the BigInt path");
    scan->add_flag("--progress", scan_progress, "progress lines on stderr");
    scan->add_option("--format", scan_fmt)->check(CLI::IsMember({"text", "json"}));

    // converge
    auto* conv = app.add_subcommand("converge", "asymptotic convergence table");
    std::string conv_ns, conv_fmt = "csv", conv_out;
    conv->add_option("--ns", conv_ns, "comma-separated n values")->required();
    conv->add_option("--format", conv_fmt)->check(CLI::IsMember({"csv", "text", "json"}));
    conv->add_option("--out", conv_out, "write to a file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("johnson_iso");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*exact) return cmd_exact(exact_n, exact_k, exact_fmt, out);
        if (*bcurve_cmd) return cmd_bcurve(bc_n, bc_k, bc_m, bc_fmt, out);
        if (*ak) return cmd_verify_ak(ak_n, ak_fmt, out);
        if (*lem) return cmd_verify_lemmas(lem_n, lem_fmt, out);
        if (*cf) return cmd_closed_form(cf_n, cf_fmt, out);
        if (*cand) return cmd_candidates(cand_n, cand_set, cand_m, cand_fmt, out);
        if (*scan)
            return cmd_scan(scan_from, scan_to, scan_bound, scan_checkpoint, scan_workers,
                            scan_chunk, scan_samples, scan_progress, scan_fmt, out);
        if (*conv) return cmd_converge(conv_ns, conv_fmt, conv_out, out);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace jiso
