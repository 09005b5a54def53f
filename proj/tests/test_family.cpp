#include <doctest.h>

#include <cmath>

#include "ellsurf/error.hpp"
#include "ellsurf/family.hpp"
#include "ellsurf/mahler.hpp"

using namespace ellsurf;

namespace {

BoxSpec exhaustive(unsigned m, unsigned n, long H, Measure measure = Measure::Naive) {
    BoxSpec s;
    s.m = m;
    s.n = n;
    s.bound = H;
    s.measure = measure;
    s.exhaustive = true;
    return s;
}

BoxSpec sampled(unsigned m, unsigned n, long H, std::uint64_t count, std::uint64_t seed) {
    BoxSpec s = exhaustive(m, n, H);
    s.exhaustive = false;
    s.count = count;
    s.seed = seed;
    return s;
}

// 4(a0 + a1 t)^3 + 27(b0 + b1 t)^2 vanishes identically, coefficient by coefficient.
bool d_vanishes(long a0, long a1, long b0, long b1) {
    return 4 * a1 * a1 * a1 == 0 && 12 * a0 * a1 * a1 + 27 * b1 * b1 == 0 && 12 * a0 * a0 * a1 + 54 * b0 * b1 == 0 &&
           4 * a0 * a0 * a0 + 27 * b0 * b0 == 0;
}

std::string code_of(auto&& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("exhaustive (1,1) box of bound 1 streams 81 tuples") {
    PairSource src = enumerate_box(exhaustive(1, 1, 1));
    CHECK(src.size() == 81);
    std::uint64_t oracle = 0;
    for (long a0 = -1; a0 <= 1; ++a0)
        for (long a1 = -1; a1 <= 1; ++a1)
            for (long b0 = -1; b0 <= 1; ++b0)
                for (long b1 = -1; b1 <= 1; ++b1) oracle += d_vanishes(a0, a1, b0, b1);
    auto r = density_report_serial(src, true);
    CHECK(r.drawn == 81);
    CHECK(r.total == 81);
    CHECK(r.not_in_S == oracle);
    CHECK(oracle == 1);
    CHECK(r.partition_holds());
    CHECK(r.in_Ztr <= r.total);
}

TEST_CASE("exhaustive order is lexicographic with the last coefficient fastest") {
    PairSource src = enumerate_box(exhaustive(1, 1, 1));
    CHECK(src.coefficients(0) == std::vector<long>{-1, -1, -1, -1});
    CHECK(src.coefficients(1) == std::vector<long>{-1, -1, -1, 0});
    CHECK(src.coefficients(80) == std::vector<long>{1, 1, 1, 1});
    auto c = src.at(5);
    CHECK(c.pair.A == Poly::from_ints({-1, -1}));
    CHECK(c.pair.B == Poly::from_ints({0, 1}));
}

TEST_CASE("box validation") {
    CHECK(code_of([] { PairSource(exhaustive(6, 6, 20)); }) == "box_too_large");
    CHECK(code_of([] { PairSource(exhaustive(0, 1, 1)); }) == "bad_box");
    BoxSpec s = exhaustive(1, 1, 1);
    s.bound = Rational(3, 2);
    CHECK(code_of([&] { PairSource src(s); }) == "bad_box");
    CHECK(code_of([] { PairSource(sampled(1, 1, 5, 0, 1)); }) == "bad_box");
}

TEST_CASE("sampling is a pure function of (seed, i)") {
    PairSource a = sample_box(sampled(2, 3, 7, 3, 1)), b = sample_box(sampled(2, 3, 7, 3, 1));
    for (std::uint64_t i = 0; i < 3; ++i) CHECK(a.coefficients(i) == b.coefficients(i));
    PairSource c = sample_box(sampled(2, 3, 7, 3, 2));
    CHECK(a.coefficients(0) != c.coefficients(0));
    for (std::uint64_t i = 0; i < 3; ++i)
        for (long x : a.coefficients(i)) CHECK(std::labs(x) <= 7);
}

TEST_CASE("sampled coefficient mean is within 3 sigma of 0") {
    const long box = 10;
    const int N = 100000;
    double sum = 0;
    for (int i = 0; i < N; ++i) sum += sample_coefficient(12345, i, 0, box);
    // Uniform on [-10, 10]: variance (21^2 - 1)/12.
    double sigma = std::sqrt((21.0 * 21.0 - 1) / 12.0 / N);
    CHECK(std::fabs(sum / N) < 3 * sigma);
}

TEST_CASE("property: parallel reports equal the serial reference") {
    for (auto spec : {exhaustive(1, 1, 3), sampled(2, 2, 9, 3000, 7), sampled(3, 5, 4, 2000, 99)}) {
        PairSource src(spec);
        auto ref = density_report_serial(src, true);
        CHECK(ref.partition_holds());
        for (int w : {1, 4, 16}) CHECK(density_report(src, true, w) == ref);
    }
    CHECK(code_of([] { density_report(PairSource(exhaustive(1, 1, 1)), true, 0); }) == "bad_workers");
}

TEST_CASE("U-members share one configuration and rank bound") {
    auto r = density_report_serial(PairSource(exhaustive(1, 1, 3)), true);
    CHECK(r.u_config_histogram.size() == 1);
    CHECK(r.u_config_histogram.begin()->first == "I1x3 III*x1");
    CHECK(r.u_lattice_histogram.size() == 1);
    CHECK(r.u_rank_bound_histogram.size() == 1);
    CHECK(r.u_rank_bound_histogram.begin()->first == 1);
}

TEST_CASE("mahler filter semantics") {
    // A admitted iff mu(A) < M^2 and B iff mu(B) < M^3. Within |c| <= M the cutoffs only bite
    // once sqrt(deg + 1) > M, hence the wide frame.
    BoxSpec spec = sampled(4, 6, 2, 3000, 5);
    spec.measure = Measure::Mahler;
    PairSource src(spec);
    std::uint64_t admitted = 0, rejected = 0;
    auto mu = [](const Poly& f) { return f.is_zero() ? 0.0 : mahler_measure(f).value; };
    for (std::uint64_t i = 0; i < src.size(); ++i) {
        Candidate c = src.at(i);
        if (c.admission == Admission::Boundary) continue;
        bool expect = mu(c.pair.A) < 4 && mu(c.pair.B) < 8;
        CHECK((c.admission == Admission::Admitted) == expect);
        admitted += c.admission == Admission::Admitted;
        rejected += c.admission == Admission::Rejected;
    }
    CHECK(admitted > 0);
    CHECK(rejected > 0);

    // Bound 1: every nonzero integer polynomial has mu >= 1, so nothing nonzero passes outright.
    PairSource unit(exhaustive(1, 1, 1, Measure::Mahler));
    for (std::uint64_t i = 0; i < unit.size(); ++i) {
        Candidate c = unit.at(i);
        if (c.admission == Admission::Admitted) CHECK((c.pair.A.is_zero() && c.pair.B.is_zero()));
    }
}

TEST_CASE("property: a pair passing the Mahler filter at M passes at every larger M") {
    BoxSpec spec = sampled(4, 6, 2, 1000, 8);
    spec.measure = Measure::Mahler;
    PairSource src(spec);
    for (std::uint64_t i = 0; i < src.size(); ++i) {
        Candidate c = src.at(i);
        if (c.admission != Admission::Admitted) continue;
        for (long M : {3L, 4L, 9L}) {
            BoxSpec larger = sampled(4, 6, M, 1, 0);
            larger.measure = Measure::Mahler;
            CHECK(admit(c.pair, larger) == Admission::Admitted);
        }
    }
}
