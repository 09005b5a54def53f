#include "ellsurf/report.hpp"

#include <sstream>

#include "ellsurf/error.hpp"

namespace ellsurf {

json coefficients_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("coefficient list expected", 0);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError("coefficient must be a string", i);
        c.push_back(parse_rational(j[i].get<std::string>()));
    }
    return Poly(std::move(c));
}

json valuation_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

json place_json(const Place& p) {
    return json{{"place", p.at_infinity ? json("inf") : coefficients_json(p.pi)},
                {"residue_degree", p.residue_degree},
                {"v_c4", valuation_json(p.v_c4)},
                {"v_c6", valuation_json(p.v_c6)},
                {"v_disc", p.v_disc}};
}

json configuration_json(const Configuration& c) {
    json out = json::array();
    for (const auto& e : c.entries)
        out.push_back({{"type", e.fiber.label()},
                       {"multiplicity", e.multiplicity},
                       {"place", e.place.at_infinity ? json("inf") : coefficients_json(e.place.pi)}});
    return out;
}

json trivial_lattice_json(const TrivialLattice& t) {
    return json{{"rank", t.rank}, {"det", t.det_abs.get_str()}, {"summands", t.summands}, {"chi", t.chi}};
}

json surface_report(const WeierstrassPair& p) {
    Invariants inv = invariants(p);
    Frame fr = frame(p);
    MembershipResult mr = classify_membership(p);
    auto trivial = detect_trivial(p);
    auto places = classify_places(p);
    Configuration config = configuration_of(places);

    json report;
    report["input"] = {{"A", coefficients_json(p.A)},
                       {"B", coefficients_json(p.B)},
                       {"m", p.m},
                       {"n", p.n},
                       {"A_text", p.A.to_string()},
                       {"B_text", p.B.to_string()}};
    report["frame"] = {{"k", fr.k}, {"alpha", fr.alpha}, {"beta", fr.beta}, {"s_tr", fr.s_tr}};

    json membership = {{"class", to_string(mr.membership)},
                       {"deg_D", mr.deg_D ? json(*mr.deg_D) : json(nullptr)},
                       {"expected_deg_D", mr.expected_deg_D},
                       {"failed", mr.failed},
                       {"trivial", nullptr}};
    if (trivial)
        membership["trivial"] = {{"lambda", to_string(trivial->lambda)},
                                 {"mu", to_string(trivial->mu)},
                                 {"u", coefficients_json(trivial->u)}};
    report["membership"] = membership;

    report["invariants"] = {{"c4", coefficients_json(inv.c4)},       {"c6", coefficients_json(inv.c6)},
                            {"disc", coefficients_json(inv.disc)},   {"D", coefficients_json(inv.D)},
                            {"j_num", coefficients_json(inv.j_num)}, {"j_den", coefficients_json(inv.j_den)}};

    json place_list = json::array();
    for (const auto& cp : places) {
        json pj = place_json(cp.place);
        pj["fiber"] = cp.local.fiber.label();
        pj["reductions"] = cp.local.reductions;
        place_list.push_back(std::move(pj));
    }
    report["places"] = std::move(place_list);
    report["configuration"] = configuration_json(config);

    const unsigned euler = euler_number(config);
    if (euler % 12 == 0 && euler > 0) {
        json tl = trivial_lattice_json(trivial_lattice(config, euler / 12));
        tl["euler"] = euler;
        report["trivial_lattice"] = std::move(tl);
    } else {
        report["trivial_lattice"] = nullptr;
    }

    report["rank_bound"] = nullptr;
    if (!trivial) {
        try {
            report["rank_bound"] = rank_bound(p, config);
        } catch (const DomainError& e) {
            if (e.code() != "trivial_surface") throw;
        }
    }
    return report;
}

json height_json(const HeightResult& h) {
    json contributions = json::array();
    for (const auto& c : h.contributions)
        contributions.push_back({{"place", c.at_infinity ? json("inf") : coefficients_json(c.cluster)},
                                 {"degree", c.degree},
                                 {"fiber", c.fiber.label()},
                                 {"lower", to_string(c.lower)},
                                 {"upper", to_string(c.upper)}});
    return json{{"lower", to_string(h.lower)},
                {"upper", to_string(h.upper)},
                {"exact", h.exact},
                {"chi", h.chi},
                {"po_intersection", h.po_intersection},
                {"contributions", std::move(contributions)},
                {"non_torsion", h.lower > 0}};
}

json torsion_json(const TorsionBound& t, const Rational& t0) {
    json primes = json::array();
    for (const auto& pc : t.per_prime)
        primes.push_back({{"prime", pc.prime}, {"usable", pc.usable}, {"count", pc.count}});
    return json{{"t0", to_string(t0)}, {"bound", t.bound}, {"primes", std::move(primes)}};
}

json twist_probe_json(std::span<const TwistProbe> probes) {
    json out = json::array();
    for (const auto& p : probes) out.push_back({{"d", p.d}, {"in_U", p.in_U}, {"isomorphic", p.isomorphic}});
    return out;
}

json mahler_json(const MahlerResult& r, double tol) {
    return json{{"value", r.value}, {"tol", tol}, {"error", r.error}, {"iterations", r.iterations}};
}

json box_spec_json(const BoxSpec& spec) {
    json j{{"m", spec.m},
           {"n", spec.n},
           {"bound", to_string(spec.bound)},
           {"measure", to_string(spec.measure)},
           {"mode", spec.exhaustive ? "exhaustive" : "sample"}};
    if (!spec.exhaustive) {
        j["count"] = spec.count;
        j["seed"] = spec.seed;
    }
    return j;
}

json density_json(const DensityReport& r) {
    auto keyed = [](const std::map<unsigned, std::uint64_t>& m) {
        json j = json::object();
        for (const auto& [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };
    return json{{"drawn", r.drawn},
                {"rejected", r.rejected},
                {"boundary", r.boundary},
                {"total", r.total},
                {"not_in_S", r.not_in_S},
                {"S_only", r.S_only},
                {"in_U", r.in_U},
                {"in_Ztr", r.in_Ztr},
                {"rank_bound_unavailable", r.rank_bound_unavailable},
                {"config_histogram", r.config_histogram},
                {"u_config_histogram", r.u_config_histogram},
                {"u_lattice_histogram", r.u_lattice_histogram},
                {"rank_bound_histogram", keyed(r.rank_bound_histogram)},
                {"u_rank_bound_histogram", keyed(r.u_rank_bound_histogram)}};
}

namespace {

std::string poly_text(const json& coeffs) { return poly_from_json(coeffs).to_string(); }

std::string value_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string human_readable(const json& r) {
    std::ostringstream os;
    const json& in = r.at("input");
    os << "A(t) = " << poly_text(in.at("A")) << "    B(t) = " << poly_text(in.at("B")) << "    frame (m, n) = ("
       << in.at("m") << ", " << in.at("n") << ")\n";
    const json& fr = r.at("frame");
    os << "k = " << fr.at("k") << ", alpha = " << fr.at("alpha") << ", beta = " << fr.at("beta") << "\n";
    const json& mem = r.at("membership");
    os << "membership: " << mem.at("class").get<std::string>();
    if (!mem.at("failed").get<std::string>().empty()) os << " (failed: " << mem.at("failed").get<std::string>() << ")";
    if (!mem.at("trivial").is_null()) os << ", trivial (lambda u^4, mu u^6)";
    os << "\n";
    os << "D(t) = " << poly_text(r.at("invariants").at("D")) << "\n";
    os << "places:\n";
    for (const auto& p : r.at("places")) {
        std::string where = p.at("place").is_string() ? "inf" : poly_text(p.at("place"));
        os << "  " << where << "  deg " << p.at("residue_degree") << "  v(c4, c6, disc) = (" << value_text(p.at("v_c4"))
           << ", " << value_text(p.at("v_c6")) << ", " << p.at("v_disc") << ")  -> " << p.at("fiber").get<std::string>()
           << "\n";
    }
    os << "configuration:";
    if (r.at("configuration").empty()) os << " (none)";
    for (const auto& e : r.at("configuration"))
        os << " " << e.at("type").get<std::string>() << "x" << e.at("multiplicity");
    os << "\n";
    if (!r.at("trivial_lattice").is_null()) {
        const json& t = r.at("trivial_lattice");
        os << "trivial lattice: rank " << t.at("rank") << ", |det| " << t.at("det").get<std::string>() << ", chi "
           << t.at("chi") << "\n";
    }
    os << "rank bound: " << (r.at("rank_bound").is_null() ? std::string("n/a (trivial surface)") : r.at("rank_bound").dump())
       << "\n";
    if (r.contains("height")) {
        const json& h = r.at("height");
        os << "height: [" << h.at("lower").get<std::string>() << ", " << h.at("upper").get<std::string>() << "]"
           << (h.at("exact").get<bool>() ? " exact" : "") << ", (P.O) = " << h.at("po_intersection") << "\n";
    }
    if (r.contains("torsion")) os << "torsion bound: " << r.at("torsion").at("bound") << "\n";
    if (r.contains("twists"))
        for (const auto& t : r.at("twists"))
            os << "twist d = " << t.at("d") << ": in_U " << t.at("in_U") << ", isomorphic " << t.at("isomorphic") << "\n";
    return os.str();
}

}  // namespace ellsurf
