#include "ellsurf/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "ellsurf/error.hpp"
#include "ellsurf/family.hpp"
#include "ellsurf/mahler.hpp"
#include "ellsurf/mwlattice.hpp"
#include "ellsurf/report.hpp"
#include "ellsurf/twist.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf::cli {

namespace {

struct PairArgs {
    std::string A, B;
    unsigned m = 0, n = 0;
};

void add_pair_options(CLI::App* cmd, PairArgs& a) {
    cmd->add_option("--A", a.A, "A(t), e.g. \"4*t^3 + 27\"")->required()->allow_extra_args(false);
    cmd->add_option("--B", a.B, "B(t)")->required()->allow_extra_args(false);
    cmd->add_option("--m", a.m, "degree bound for A")->required();
    cmd->add_option("--n", a.n, "degree bound for B")->required();
}

WeierstrassPair make_pair(const PairArgs& a) {
    return WeierstrassPair::make(parse_poly(a.A), parse_poly(a.B), a.m, a.n);
}

json error_record(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}};
}

void emit(std::ostream& out, const json& report, bool as_json) {
    if (as_json) out << report.dump() << "\n";
    else out << human_readable(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of elliptic surfaces y^2 = x^3 + A(t) x + B(t) over Q(t)", "ellsurf"};
    app.require_subcommand(1);

    bool as_json = false;

    PairArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "fibers, lattices and rank bound of one pair");
    add_pair_options(analyze, analyze_args);
    analyze->add_flag("--json", as_json, "machine-readable report");

    PairArgs twist_args;
    std::string twist_d;
    std::vector<long> probe;
    auto* twist_cmd = app.add_subcommand("twist", "quadratic twist (d^2 A, d^3 B)");
    add_pair_options(twist_cmd, twist_args);
    twist_cmd->add_option("--d", twist_d, "nonzero rational twist parameter");
    twist_cmd->add_option("--probe", probe, "comma list of integers d to probe")->delimiter(',');
    twist_cmd->add_flag("--json", as_json);

    PairArgs detect_args;
    std::string A2, B2;
    auto* detect = app.add_subcommand("twist-detect", "is (A2, B2) a quadratic twist of (A, B)?");
    add_pair_options(detect, detect_args);
    detect->add_option("--A2", A2)->required();
    detect->add_option("--B2", B2)->required();
    detect->add_flag("--json", as_json);

    PairArgs height_args;
    std::string x_text, y_text;
    auto* height_cmd = app.add_subcommand("height", "Shioda height of a section (x, y)");
    add_pair_options(height_cmd, height_args);
    height_cmd->add_option("--x", x_text, "x(t) as a polynomial or \"(num)/(den)\"")->required();
    height_cmd->add_option("--y", y_text, "y(t) as a polynomial or \"(num)/(den)\"")->required();
    height_cmd->add_flag("--json", as_json);

    PairArgs torsion_args;
    std::string t0_text;
    std::vector<std::uint32_t> primes;
    auto* torsion_cmd = app.add_subcommand("torsion-bound", "torsion bound by specialization and point counting");
    add_pair_options(torsion_cmd, torsion_args);
    torsion_cmd->add_option("--t0", t0_text, "specialization point (rational)")->required();
    torsion_cmd->add_option("--primes", primes, "comma list of odd primes <= 10000")->required()->delimiter(',');
    torsion_cmd->add_flag("--json", as_json);

    BoxSpec box;
    std::string bound_text = "1";
    std::string measure_text = "naive";
    std::string out_path, records_path;
    int workers = 1;
    bool exhaustive = false, no_analysis = false;
    auto* sample = app.add_subcommand("sample", "density statistics over a coefficient box");
    sample->add_option("--m", box.m)->required();
    sample->add_option("--n", box.n)->required();
    sample->add_option("--bound", bound_text, "coefficient bound (rational)")->required();
    sample->add_option("--measure", measure_text, "naive | mahler")->check(CLI::IsMember({"naive", "mahler"}));
    sample->add_option("--count", box.count, "number of sampled pairs");
    sample->add_option("--seed", box.seed, "64-bit seed");
    sample->add_option("--out", out_path, "summary file (default: standard output)");
    sample->add_option("--workers", workers, "OpenMP worker count")->check(CLI::PositiveNumber);
    sample->add_flag("--exhaustive", exhaustive, "enumerate the whole box instead of sampling");
    sample->add_flag("--no-analysis", no_analysis, "skip configurations and rank bounds");
    sample->add_option("--records", records_path, "write one JSON record per pair to this file");

    std::string mahler_poly;
    double tol = kDefaultMahlerTol;
    auto* mahler_cmd = app.add_subcommand("mahler", "Mahler measure of an integer polynomial");
    mahler_cmd->add_option("--poly", mahler_poly)->required();
    mahler_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_record("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (*analyze) {
            emit(out, surface_report(make_pair(analyze_args)), as_json);
        } else if (*twist_cmd) {
            if (twist_d.empty() && probe.empty()) {
                err << error_record("usage", "twist needs --d or --probe").dump() << "\n";
                return 2;
            }
            WeierstrassPair p = make_pair(twist_args);
            json report;
            report["input"] = {{"A", coefficients_json(p.A)}, {"B", coefficients_json(p.B)}, {"m", p.m}, {"n", p.n}};
            if (!twist_d.empty()) {
                Rational d = parse_rational(twist_d);
                WeierstrassPair q = twist(p, d);
                report["d"] = to_string(d);
                report["class"] = twist_class(d).d.get_str();
                report["twisted"] = {{"A", coefficients_json(q.A)},
                                     {"B", coefficients_json(q.B)},
                                     {"A_text", q.A.to_string()},
                                     {"B_text", q.B.to_string()}};
            }
            if (!probe.empty()) report["twists"] = twist_probe_json(tw_probe(p, probe));
            if (as_json) {
                out << report.dump() << "\n";
            } else {
                if (report.contains("twisted"))
                    out << "A = " << report["twisted"]["A_text"].get<std::string>() << "\nB = "
                        << report["twisted"]["B_text"].get<std::string>() << "\n";
                if (report.contains("twists"))
                    for (const auto& t : report["twists"])
                        out << "d = " << t["d"] << ": in_U " << t["in_U"] << ", isomorphic " << t["isomorphic"] << "\n";
            }
        } else if (*detect) {
            WeierstrassPair p1 = make_pair(detect_args);
            WeierstrassPair p2 = WeierstrassPair::make(parse_poly(A2), parse_poly(B2), detect_args.m, detect_args.n);
            invariants(p1);
            invariants(p2);
            auto found = detect_twist(p1, p2);
            json report{{"twist", nullptr}};
            if (found)
                report["twist"] = {{"class", found->cls.d.get_str()},
                                   {"d", to_string(found->d)},
                                   {"sign_ambiguous", found->sign_ambiguous}};
            if (as_json) out << report.dump() << "\n";
            else out << (found ? "twist class " + found->cls.d.get_str() : std::string("not a quadratic twist")) << "\n";
        } else if (*height_cmd) {
            WeierstrassPair p = make_pair(height_args);
            Section P{parse_ratfunc(x_text), parse_ratfunc(y_text)};
            json report = surface_report(p);
            report["height"] = height_json(height(p, P));
            emit(out, report, as_json);
        } else if (*torsion_cmd) {
            WeierstrassPair p = make_pair(torsion_args);
            Rational t0 = parse_rational(t0_text);
            json report = surface_report(p);
            report["torsion"] = torsion_json(torsion_bound(p, t0, primes), t0);
            emit(out, report, as_json);
        } else if (*sample) {
            box.bound = parse_rational(bound_text);
            box.measure = measure_text == "mahler" ? Measure::Mahler : Measure::Naive;
            box.exhaustive = exhaustive;
            if (!exhaustive && box.count == 0) {
                err << error_record("usage", "sample needs --count or --exhaustive").dump() << "\n";
                return 2;
            }
            PairSource source(box);
            DensityReport r = density_report(source, !no_analysis, workers);
            json summary{{"spec", box_spec_json(box)}, {"report", density_json(r)}};
            if (out_path.empty()) {
                out << summary.dump(2) << "\n";
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw DomainError("io_error", "cannot open " + out_path);
                f << summary.dump(2) << "\n";
            }
            if (!records_path.empty()) {
                std::ofstream f(records_path, std::ios::binary);
                if (!f) throw DomainError("io_error", "cannot open " + records_path);
                for (std::uint64_t i = 0; i < source.size(); ++i) {
                    Candidate c = source.at(i);
                    if (c.admission != Admission::Admitted) continue;
                    json rec;
                    if (c.pair.D().is_zero()) {
                        rec["input"] = {{"A", coefficients_json(c.pair.A)},
                                        {"B", coefficients_json(c.pair.B)},
                                        {"m", c.pair.m},
                                        {"n", c.pair.n}};
                        rec["membership"] = {{"class", "not_in_S"}};
                    } else {
                        rec = surface_report(c.pair);
                    }
                    rec["index"] = i;
                    f << rec.dump() << "\n";
                }
            }
            err << "sample: " << r.total << " pairs classified\n";
        } else if (*mahler_cmd) {
            Poly f = parse_poly(mahler_poly);
            out << mahler_json(mahler_measure(f, tol), tol).dump() << "\n";
        }
    } catch (const ParseError& e) {
        json rec = error_record("parse_error", e.what());
        rec["offset"] = e.offset();
        err << rec.dump() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << error_record(e.code(), e.what()).dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ellsurf::cli
