// Acceptance suite: runs every identity over its full grid at the pinned
// bounds and prints one PASS/FAIL line per criterion. Exits with the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rcpoly/dedekind.hpp"
#include "rcpoly/geometry.hpp"
#include "rcpoly/sweep.hpp"

using namespace rcpoly;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::size_t count_holds(const std::vector<VerificationReport>& reports) {
    std::size_t n = 0;
    for (const VerificationReport& r : reports)
        if (r.holds) ++n;
    return n;
}

void report(int criterion, bool ok, double seconds, double limit, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("%s  %2d  %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str(), seconds, limit);
    std::fflush(stdout);
}

std::string ratio(const std::vector<VerificationReport>& reports) {
    return std::to_string(count_holds(reports)) + "/" + std::to_string(reports.size());
}

void criterion1_carlitz() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 40;
    options.cases = 0;
    const auto reports = sweep(IdentityId::carlitz, options);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 10.0;
    report(1, ok, s, 10.0,
           "Carlitz reciprocity holds for all coprime pairs <= 40: " + ratio(reports));
}

void criterion2_thm1() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 15;
    options.cases = 500;
    options.seed = 0;
    const auto reports = sweep(IdentityId::thm1, options);
    const double s = timer.seconds();
    std::size_t chi_one = 0;
    for (const VerificationReport& r : reports)
        if (r.notes.find("chi=1") != std::string::npos) ++chi_one;
    const bool ok =
        count_holds(reports) == reports.size() && chi_one >= 100 && s < 30.0;
    report(2, ok, s, 30.0,
           "polynomial reciprocity holds on the 49-point grid x coprime pairs <= 15 plus 500 "
           "seeded tuples: " +
               ratio(reports) + ", lattice-point branch exercised " + std::to_string(chi_one) +
               "x (>= 100 required)");
}

void criterion3_thm2() {
    Timer timer;
    SweepOptions options;
    options.cases = 200;
    options.seed = 0;
    const auto reports = sweep(IdentityId::thm2, options);
    const double s = timer.seconds();
    std::size_t differing = 0, mismatching = 0, unexpected = 0;
    for (const VerificationReport& r : reports) {
        if (r.notes.find("variant mismatches") != std::string::npos) {
            ++differing;
            ++mismatching;
        } else if (r.notes.find("unexpectedly matches") != std::string::npos) {
            ++differing;
            ++unexpected;
        }
    }
    const bool ok = count_holds(reports) == reports.size() && unexpected == 0 && s < 60.0;
    report(3, ok, s, 60.0,
           "right-triangle closed form (quadrant exponent ceil(e/f)) equals both Brion and the "
           "brute-force scan for 200 seeded tuples: " +
               ratio(reports) + "; the ceil(a/b) spelling disagrees in " +
               std::to_string(mismatching) + "/" + std::to_string(differing) +
               " cases where the ceilings differ");
}

void criterion4_thm3() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 30;
    options.cases = 0;
    const auto reports = sweep(IdentityId::thm3, options);
    bool zero_matches_dedekind = true;
    for (long b = 2; b <= 30; ++b)
        for (long a = 1; a < b; ++a) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            const VerificationReport t = verify_thm3(a, b, Rational(0));
            const VerificationReport d = verify_dedekind_reciprocity(a, b);
            zero_matches_dedekind = zero_matches_dedekind && t.rhs == d.rhs && t.lhs == d.lhs;
        }
    const double s = timer.seconds();
    const bool ok =
        count_holds(reports) == reports.size() && zero_matches_dedekind && s < 20.0;
    report(4, ok, s, 20.0,
           "Dedekind-Rademacher reciprocity holds for coprime a < b <= 30 with every integer t "
           "and 5 fractional t per pair: " +
               ratio(reports) +
               std::string(zero_matches_dedekind ? "; t=0 coincides with criterion 5's identity"
                                                 : "; t=0 mismatch"));
}

void criterion5_dedekind() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 100;
    options.cases = 0;
    const auto reports = sweep(IdentityId::dedekind, options);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 20.0;
    report(5, ok, s, 20.0,
           "Dedekind reciprocity holds for all coprime pairs <= 100: " + ratio(reports));
}

void criterion6_rademacher() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 20;
    options.cases = 0;
    const auto reports = sweep(IdentityId::rademacher, options);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 20.0;
    report(6, ok, s, 20.0,
           "Rademacher reciprocity holds for coprime pairs <= 20 x the 5x5 (x,y) grid minus "
           "integer-integer points: " +
               ratio(reports));
}

void criterion7_lemma4() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 30;
    options.cases = 0;
    const auto a = sweep(IdentityId::lemma4a, options);
    const auto b = sweep(IdentityId::lemma4b, options);
    const double s = timer.seconds();
    const bool ok =
        count_holds(a) == a.size() && count_holds(b) == b.size() && s < 10.0;
    report(7, ok, s, 10.0,
           "fractional-part lemmas (a) and (b) hold for coprime pairs <= 30 x the t grid: " +
               ratio(a) + " and " + ratio(b));
}

void criterion8_conic() {
    Timer timer;
    SweepOptions options;
    options.max_bound = 12;
    options.cases = 0;
    const auto reports = sweep(IdentityId::conic, options);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 20.0;
    report(8, ok, s, 20.0,
           "conic decomposition of the shifted quadrant holds for coprime pairs <= 12 x the "
           "25-point (p,q) grid: " +
               ratio(reports));
}

void criterion9_parallelogram() {
    Timer timer;
    const auto reports = sweep_parallelogram_cases(200, 0);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 5.0;
    report(9, ok, s, 5.0,
           "fundamental-parallelogram point count equals |det| for 200 seeded cones: " +
               ratio(reports));
}

void criterion10_polygon() {
    Timer timer;
    const auto reports = sweep_polygon_cases(50, 0);
    const double s = timer.seconds();
    const bool ok = count_holds(reports) == reports.size() && s < 60.0;
    report(10, ok, s, 60.0,
           "polygon pipeline equals the brute-force transform and count for 50 seeded convex "
           "polygons: " +
               ratio(reports));
}

}  // namespace

int main() {
    criterion1_carlitz();
    criterion2_thm1();
    criterion3_thm2();
    criterion4_thm3();
    criterion5_dedekind();
    criterion6_rademacher();
    criterion7_lemma4();
    criterion8_conic();
    criterion9_parallelogram();
    criterion10_polygon();
    std::printf("----  11  polynomial-time short-rational-function computation and "
                "quasipolynomial counting are out of scope by design; nothing to run\n");
    if (failures == 0)
        std::printf("all criteria pass\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
