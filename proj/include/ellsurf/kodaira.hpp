#pragma once

// Singular fibers of y^2 = x^3 + A x + B over the places of Q(t).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ellsurf/poly.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

enum class FiberKind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

struct RootLattice {
    enum class Family { None, A, D, E };
    Family family = Family::None;
    unsigned rank = 0;

    /// |det| of the negative-definite root lattice; 1 for the empty lattice.
    Integer det() const;
    /// "A1", "D4", "E8", or "none".
    std::string label() const;

    auto operator<=>(const RootLattice&) const = default;
};

class KodairaFiber {
public:
    static KodairaFiber I(unsigned n) { return {FiberKind::I, n}; }
    static KodairaFiber I_star(unsigned n) { return {FiberKind::IStar, n}; }
    static KodairaFiber of(FiberKind k) { return {k, 0}; }

    FiberKind kind() const { return kind_; }
    /// n for I_n and I_n^*, otherwise 0.
    unsigned index() const { return index_; }

    /// "I0", "I3", "II", "I0*", "IV*", ...
    std::string label() const;
    RootLattice root_lattice() const;
    unsigned lattice_rank() const { return root_lattice().rank; }
    unsigned euler() const;
    unsigned component_count() const;

    auto operator<=>(const KodairaFiber&) const = default;

private:
    KodairaFiber(FiberKind k, unsigned n) : kind_(k), index_(n) {}
    FiberKind kind_;
    unsigned index_;
};

/// Fiber type plus the number of (4, 6, 12) minimality steps applied first.
struct LocalClassification {
    KodairaFiber fiber;
    unsigned reductions;
};

/// Residue characteristic 0 Tate table on (v(c4), v(c6), v(disc)).
/// Throws DomainError("inconsistent_local_data") for triples outside the table.
LocalClassification classify_local(Valuation v_c4, Valuation v_c6, unsigned v_disc);
inline KodairaFiber classify_valuations(Valuation v_c4, Valuation v_c6, unsigned v_disc) {
    return classify_local(v_c4, v_c6, v_disc).fiber;
}

/// A Galois-stable cluster of points of P^1 with constant local data. For the
/// place at infinity `pi` is the chart variable s.
struct Place {
    bool at_infinity = false;
    Poly pi;
    unsigned residue_degree = 1;
    Valuation v_c4;
    Valuation v_c6;
    unsigned v_disc = 0;
};

/// Finite places over the roots of D, split until (v_c4, v_c6, v_disc) is
/// constant on each, in canonical order, followed by the place at infinity
/// (always present, possibly with v_disc = 0). Throws DomainError("not_in_S").
std::vector<Place> refine_places(const WeierstrassPair& p);

struct ClassifiedPlace {
    Place place;
    LocalClassification local;
};

/// Every refined place with its fiber, including I_0 ones.
std::vector<ClassifiedPlace> classify_places(const WeierstrassPair& p);

struct ConfigEntry {
    KodairaFiber fiber;
    unsigned multiplicity;  // residue degree of the place
    Place place;
};

struct Configuration {
    std::vector<ConfigEntry> entries;  // I_0 omitted

    /// Fiber type -> total geometric multiplicity.
    std::map<KodairaFiber, unsigned> counts() const;
    /// Canonical text form, e.g. "I1x3 III*x1"; "" for no singular fibers.
    std::string signature() const;
};

Configuration configuration(const WeierstrassPair& p);
Configuration configuration_of(const std::vector<ClassifiedPlace>& places);

/// Fiber over t = infinity for U-members, read from (alpha, beta) alone.
KodairaFiber infinity_fiber_from_table(const Frame& fr);

unsigned euler_number(const Configuration& c);

}  // namespace ellsurf
