#pragma once

// Integer Weierstrass pairs in a coefficient box: exhaustive enumeration,
// counter-based sampling and S / U / Z^tr density statistics.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellsurf/poly.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

enum class Measure { Naive, Mahler };
std::string to_string(Measure m);

struct BoxSpec {
    unsigned m = 1;
    unsigned n = 1;
    Rational bound = 1;
    Measure measure = Measure::Naive;
    bool exhaustive = true;
    std::uint64_t count = 0;  // sample mode only
    std::uint64_t seed = 0;   // sample mode only
};

inline constexpr std::uint64_t kMaxExhaustiveBox = 1'000'000'000;

/// Throws DomainError("box_too_large") or ("bad_box") when the spec is unusable.
void validate(const BoxSpec& spec);

enum class Admission { Admitted, Rejected, Boundary };

struct Candidate {
    WeierstrassPair pair;
    Admission admission;
};

/// Measure filter: Mahler mode admits A with mu(A) < bound^2 and B with
/// mu(B) < bound^3 (mu(0) = 0); a pair within the error estimate of a cutoff
/// is Boundary. Naive mode admits everything in the box.
Admission admit(const WeierstrassPair& p, const BoxSpec& spec);

/// Random-access view of the pairs of a box. Pair i is a pure function of
/// (spec, i), so any partition of [0, size()) over workers sees the same pairs.
class PairSource {
public:
    explicit PairSource(BoxSpec spec);

    const BoxSpec& spec() const { return spec_; }
    std::uint64_t size() const { return size_; }

    /// Coefficients (a_0..a_m, b_0..b_n) of pair i.
    std::vector<long> coefficients(std::uint64_t i) const;
    Candidate at(std::uint64_t i) const;

private:
    BoxSpec spec_;
    long box_ = 0;  // |coefficient| <= box_
    std::uint64_t size_ = 0;
};

/// Every integer pair with |coefficients| <= bound in lexicographic order of
/// (a_0..a_m, b_0..b_n).
PairSource enumerate_box(BoxSpec spec);

/// `count` pairs with coefficients uniform on [-floor(bound), floor(bound)].
PairSource sample_box(BoxSpec spec);

/// Uniform draw in [-box, box] for coefficient j of pair i.
long sample_coefficient(std::uint64_t seed, std::uint64_t i, std::uint32_t j, long box);

struct DensityReport {
    std::uint64_t drawn = 0;     // pairs visited
    std::uint64_t rejected = 0;  // removed by the measure filter
    std::uint64_t boundary = 0;  // within the Mahler error band of a cutoff
    std::uint64_t total = 0;     // admitted pairs
    std::uint64_t not_in_S = 0;
    std::uint64_t S_only = 0;
    std::uint64_t in_U = 0;
    std::uint64_t in_Ztr = 0;
    std::uint64_t rank_bound_unavailable = 0;  // constant surfaces outside Z^tr
    std::map<std::string, std::uint64_t> config_histogram;     // analysed nontrivial S-members
    std::map<std::string, std::uint64_t> u_config_histogram;   // U-members only
    std::map<std::string, std::uint64_t> u_lattice_histogram;  // "rank/det" over U-members
    std::map<unsigned, std::uint64_t> rank_bound_histogram;    // nontrivial S-members
    std::map<unsigned, std::uint64_t> u_rank_bound_histogram;

    void add(const Candidate& c, bool with_analysis);
    void merge(const DensityReport& other);
    bool partition_holds() const { return not_in_S + S_only + in_U == total; }

    friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

/// Reference implementation: one pass in index order.
DensityReport density_report_serial(const PairSource& source, bool with_analysis);

/// OpenMP kernel: workers fold disjoint index ranges into partial reports that
/// are merged at the end. Equal to the serial result for every worker count.
DensityReport density_report(const PairSource& source, bool with_analysis, int workers);

}  // namespace ellsurf
