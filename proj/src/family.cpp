#include "ellsurf/family.hpp"

#include <exception>
#include <limits>

#include <omp.h>

#include "ellsurf/error.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/mahler.hpp"
#include "ellsurf/mwlattice.hpp"

namespace ellsurf {

std::string to_string(Measure m) { return m == Measure::Naive ? "naive" : "mahler"; }

namespace {

long box_of(const Rational& bound) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    if (!fl.fits_slong_p()) throw DomainError("bad_box", "bound too large");
    return fl.get_si();
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void validate(const BoxSpec& spec) {
    if (spec.m == 0 || spec.n == 0) throw DomainError("bad_box", "m and n must be positive");
    if (sgn(spec.bound) <= 0) throw DomainError("bad_box", "bound must be positive");
    if (spec.exhaustive) {
        if (spec.bound.get_den() != 1) throw DomainError("bad_box", "exhaustive mode needs an integer bound");
        Integer side = 2 * spec.bound.get_num() + 1;
        Integer size;
        mpz_pow_ui(size.get_mpz_t(), side.get_mpz_t(), spec.m + spec.n + 2);
        if (size > kMaxExhaustiveBox)
            throw DomainError("box_too_large", "box has " + size.get_str() + " pairs (limit 10^9)");
    } else if (spec.count == 0) {
        throw DomainError("bad_box", "sample mode needs a positive count");
    }
}

Admission admit(const WeierstrassPair& p, const BoxSpec& spec) {
    if (spec.measure == Measure::Naive) return Admission::Admitted;
    const double M = spec.bound.get_d();
    bool boundary = false;
    auto check = [&](const Poly& f, double cutoff) {
        if (f.is_zero()) return true;
        MahlerResult mu = mahler_measure(f);
        if (std::abs(mu.value - cutoff) <= mu.error) {
            boundary = true;
            return true;
        }
        return mu.value < cutoff;
    };
    const bool ok = check(p.A, M * M) && check(p.B, M * M * M);
    if (!ok) return Admission::Rejected;
    return boundary ? Admission::Boundary : Admission::Admitted;
}

PairSource::PairSource(BoxSpec spec) : spec_(std::move(spec)) {
    validate(spec_);
    box_ = box_of(spec_.bound);
    if (spec_.exhaustive) {
        const std::uint64_t side = 2 * static_cast<std::uint64_t>(box_) + 1;
        size_ = 1;
        for (unsigned i = 0; i < spec_.m + spec_.n + 2; ++i) size_ *= side;
    } else {
        size_ = spec_.count;
    }
}

long sample_coefficient(std::uint64_t seed, std::uint64_t i, std::uint32_t j, long box) {
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(box) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    const std::uint64_t key = splitmix(splitmix(seed) ^ i) ^ (static_cast<std::uint64_t>(j) << 32);
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t x = splitmix(key + attempt * 0x632be59bd9b4e019ULL);
        if (x < limit) return static_cast<long>(x % range) - box;
    }
}

std::vector<long> PairSource::coefficients(std::uint64_t i) const {
    const std::size_t len = spec_.m + spec_.n + 2;
    std::vector<long> c(len);
    if (spec_.exhaustive) {
        const std::uint64_t side = 2 * static_cast<std::uint64_t>(box_) + 1;
        for (std::size_t j = len; j-- > 0;) {
            c[j] = static_cast<long>(i % side) - box_;
            i /= side;
        }
    } else {
        for (std::size_t j = 0; j < len; ++j) c[j] = sample_coefficient(spec_.seed, i, static_cast<std::uint32_t>(j), box_);
    }
    return c;
}

Candidate PairSource::at(std::uint64_t i) const {
    std::vector<long> c = coefficients(i);
    std::vector<Rational> a(c.begin(), c.begin() + spec_.m + 1);
    std::vector<Rational> b(c.begin() + spec_.m + 1, c.end());
    WeierstrassPair p{Poly(std::move(a)), Poly(std::move(b)), spec_.m, spec_.n};
    Admission adm = admit(p, spec_);
    return {std::move(p), adm};
}

PairSource enumerate_box(BoxSpec spec) {
    spec.exhaustive = true;
    return PairSource(std::move(spec));
}

PairSource sample_box(BoxSpec spec) {
    spec.exhaustive = false;
    return PairSource(std::move(spec));
}

void DensityReport::add(const Candidate& c, bool with_analysis) {
    ++drawn;
    if (c.admission == Admission::Rejected) {
        ++rejected;
        return;
    }
    if (c.admission == Admission::Boundary) {
        ++boundary;
        return;
    }
    ++total;
    const WeierstrassPair& p = c.pair;
    MembershipResult mr = classify_membership(p);
    switch (mr.membership) {
        case Membership::NotInS: ++not_in_S; return;
        case Membership::SOnly: ++S_only; break;
        case Membership::U: ++in_U; break;
    }
    if (detect_trivial(p)) {
        ++in_Ztr;
        return;
    }
    if (!with_analysis) return;

    Configuration config = configuration(p);
    const std::string sig = config.signature();
    ++config_histogram[sig];
    try {
        const unsigned rb = rank_bound(p, config);
        ++rank_bound_histogram[rb];
        if (mr.membership == Membership::U) {
            ++u_config_histogram[sig];
            TrivialLattice t = trivial_lattice(config, frame(p).k);
            ++u_lattice_histogram[std::to_string(t.rank) + "/" + t.det_abs.get_str()];
            ++u_rank_bound_histogram[rb];
        }
    } catch (const DomainError& e) {
        if (e.code() != "trivial_surface") throw;
        ++rank_bound_unavailable;
    }
}

void DensityReport::merge(const DensityReport& o) {
    drawn += o.drawn;
    rejected += o.rejected;
    boundary += o.boundary;
    total += o.total;
    not_in_S += o.not_in_S;
    S_only += o.S_only;
    in_U += o.in_U;
    in_Ztr += o.in_Ztr;
    rank_bound_unavailable += o.rank_bound_unavailable;
    for (const auto& [k, v] : o.config_histogram) config_histogram[k] += v;
    for (const auto& [k, v] : o.u_config_histogram) u_config_histogram[k] += v;
    for (const auto& [k, v] : o.u_lattice_histogram) u_lattice_histogram[k] += v;
    for (const auto& [k, v] : o.rank_bound_histogram) rank_bound_histogram[k] += v;
    for (const auto& [k, v] : o.u_rank_bound_histogram) u_rank_bound_histogram[k] += v;
}

DensityReport density_report_serial(const PairSource& source, bool with_analysis) {
    DensityReport r;
    for (std::uint64_t i = 0; i < source.size(); ++i) r.add(source.at(i), with_analysis);
    return r;
}

DensityReport density_report(const PairSource& source, bool with_analysis, int workers) {
    if (workers < 1) throw DomainError("bad_workers", "worker count must be positive");
    DensityReport result;
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(source.size());

#pragma omp parallel num_threads(workers)
    {
        DensityReport local;
#pragma omp for schedule(dynamic, 512)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                local.add(source.at(static_cast<std::uint64_t>(i)), with_analysis);
            } catch (...) {
#pragma omp critical(ellsurf_density_failure)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(ellsurf_density_merge)
        result.merge(local);
    }
    if (failure) std::rethrow_exception(failure);
    return result;
}

}  // namespace ellsurf
