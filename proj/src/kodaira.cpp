#include "ellsurf/kodaira.hpp"

#include <algorithm>

#include "ellsurf/error.hpp"

namespace ellsurf {

Integer RootLattice::det() const {
    switch (family) {
        case Family::None: return 1;
        case Family::A: return Integer(rank + 1);
        case Family::D: return 4;
        case Family::E: return rank == 6 ? 3 : rank == 7 ? 2 : 1;
    }
    return 1;
}

std::string RootLattice::label() const {
    switch (family) {
        case Family::None: return "none";
        case Family::A: return "A" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
    }
    return "?";
}

std::string KodairaFiber::label() const {
    switch (kind_) {
        case FiberKind::I: return "I" + std::to_string(index_);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IStar: return "I" + std::to_string(index_) + "*";
        case FiberKind::IVStar: return "IV*";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IIStar: return "II*";
    }
    return "?";
}

RootLattice KodairaFiber::root_lattice() const {
    using F = RootLattice::Family;
    switch (kind_) {
        case FiberKind::I: return index_ >= 2 ? RootLattice{F::A, index_ - 1} : RootLattice{};
        case FiberKind::II: return {};
        case FiberKind::III: return {F::A, 1};
        case FiberKind::IV: return {F::A, 2};
        case FiberKind::IStar: return {F::D, 4 + index_};
        case FiberKind::IVStar: return {F::E, 6};
        case FiberKind::IIIStar: return {F::E, 7};
        case FiberKind::IIStar: return {F::E, 8};
    }
    return {};
}

unsigned KodairaFiber::euler() const {
    switch (kind_) {
        case FiberKind::I: return index_;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::IStar: return 6 + index_;
        case FiberKind::IVStar: return 8;
        case FiberKind::IIIStar: return 9;
        case FiberKind::IIStar: return 10;
    }
    return 0;
}

unsigned KodairaFiber::component_count() const {
    if (kind_ == FiberKind::I) return index_ == 0 ? 1 : index_;
    return lattice_rank() + 1;
}

LocalClassification classify_local(Valuation c4, Valuation c6, unsigned d) {
    unsigned reductions = 0;
    while (c4 >= 4 && c6 >= 6 && d >= 12) {
        c4 = c4.minus(4);
        c6 = c6.minus(6);
        d -= 12;
        ++reductions;
    }
    auto done = [&](KodairaFiber f) { return LocalClassification{f, reductions}; };

    if (d == 0) return done(KodairaFiber::I(0));
    if (c4 == 0) return done(KodairaFiber::I(d));
    if (c4 >= 1 && c6 == 1 && d == 2) return done(KodairaFiber::of(FiberKind::II));
    if (c4 == 1 && c6 >= 2 && d == 3) return done(KodairaFiber::of(FiberKind::III));
    if (c4 >= 2 && c6 == 2 && d == 4) return done(KodairaFiber::of(FiberKind::IV));
    if (d == 6 && c4 >= 2 && c6 >= 3) return done(KodairaFiber::I_star(0));
    if (c4 == 2 && c6 == 3 && d > 6) return done(KodairaFiber::I_star(d - 6));
    if (c4 >= 3 && c6 == 4 && d == 8) return done(KodairaFiber::of(FiberKind::IVStar));
    if (c4 == 3 && c6 >= 5 && d == 9) return done(KodairaFiber::of(FiberKind::IIIStar));
    if (c4 >= 4 && c6 == 5 && d == 10) return done(KodairaFiber::of(FiberKind::IIStar));

    throw DomainError("inconsistent_local_data", "valuation triple (" + c4.to_string() + ", " +
                                                     c6.to_string() + ", " + std::to_string(d) +
                                                     ") is outside the Kodaira table");
}

std::vector<Place> refine_places(const WeierstrassPair& p) {
    Poly D = p.D();
    if (D.is_zero()) throw DomainError("not_in_S", "4A^3 + 27B^2 = 0: not an elliptic surface");

    std::vector<Place> places;
    for (const auto& [g, mult] : squarefree_decompose(D)) {
        // c4 and c6 are constant multiples of A and B.
        for (auto& layer_a : valuation_layers(g, p.A)) {
            for (auto& layer_b : valuation_layers(layer_a.factor, p.B)) {
                Place pl;
                pl.residue_degree = static_cast<unsigned>(layer_b.factor.size() - 1);
                pl.pi = std::move(layer_b.factor);
                pl.v_c4 = layer_a.v;
                pl.v_c6 = layer_b.v;
                pl.v_disc = mult;
                places.push_back(std::move(pl));
            }
        }
    }
    std::sort(places.begin(), places.end(),
              [](const Place& a, const Place& b) { return canonical_less(a.pi, b.pi); });

    auto [A_inf, B_inf] = infinity_model(p);
    const Poly s = Poly::variable();
    Place inf;
    inf.at_infinity = true;
    inf.pi = s;
    inf.v_c4 = valuation(A_inf, s);
    inf.v_c6 = valuation(B_inf, s);
    inf.v_disc = valuation(reverse_pad(D, 12 * frame(p).k), s).value();
    places.push_back(std::move(inf));
    return places;
}

std::vector<ClassifiedPlace> classify_places(const WeierstrassPair& p) {
    std::vector<ClassifiedPlace> out;
    for (auto& pl : refine_places(p)) {
        LocalClassification lc = classify_local(pl.v_c4, pl.v_c6, pl.v_disc);
        out.push_back({std::move(pl), lc});
    }
    return out;
}

Configuration configuration_of(const std::vector<ClassifiedPlace>& places) {
    Configuration c;
    for (const auto& cp : places) {
        if (cp.local.fiber == KodairaFiber::I(0)) continue;
        c.entries.push_back({cp.local.fiber, cp.place.residue_degree, cp.place});
    }
    return c;
}

Configuration configuration(const WeierstrassPair& p) { return configuration_of(classify_places(p)); }

std::map<KodairaFiber, unsigned> Configuration::counts() const {
    std::map<KodairaFiber, unsigned> out;
    for (const auto& e : entries) out[e.fiber] += e.multiplicity;
    return out;
}

std::string Configuration::signature() const {
    std::string s;
    for (const auto& [fiber, count] : counts()) {
        if (!s.empty()) s += ' ';
        s += fiber.label() + "x" + std::to_string(count);
    }
    return s;
}

KodairaFiber infinity_fiber_from_table(const Frame& fr) {
    const unsigned a = fr.alpha, b = fr.beta;
    if (a == 0 || b == 0) return KodairaFiber::I(0);
    if (a >= 1 && b == 1) return KodairaFiber::of(FiberKind::II);
    if (a == 1 && b >= 2) return KodairaFiber::of(FiberKind::III);
    if (a >= 2 && b == 2) return KodairaFiber::of(FiberKind::IV);
    if ((a == 2 && b >= 3) || (a >= 2 && b == 3)) return KodairaFiber::I_star(0);
    if (a >= 3 && b == 4) return KodairaFiber::of(FiberKind::IVStar);
    if (a == 3 && b >= 5) return KodairaFiber::of(FiberKind::IIIStar);
    if (a >= 4 && b == 5) return KodairaFiber::of(FiberKind::IIStar);
    throw DomainError("bad_frame", "(alpha, beta) = (" + std::to_string(a) + ", " + std::to_string(b) +
                                       ") is outside the fiber-at-infinity table");
}

unsigned euler_number(const Configuration& c) {
    unsigned e = 0;
    for (const auto& entry : c.entries) e += entry.fiber.euler() * entry.multiplicity;
    return e;
}

}  // namespace ellsurf
