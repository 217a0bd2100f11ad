/// Rank deciders and their certificates: moment, unitary, and recurrence
/// rank on frozen fixtures, the nullity profile, and the five-way
/// equivalence cross-check.

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "seqrank/analytic.hpp"
#include "seqrank/ranks.hpp"

using namespace seqrank;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(make_rat(n, d)); }

SequenceWindow fib8() {
    return {0, {q(1), q(1), q(2), q(3), q(5), q(8), q(13), q(21)}};
}

SequenceWindow n2n8() {
    std::vector<GaussianRational> c;
    for (long n = 0; n < 8; ++n) c.push_back(q(n) * q(1L << n));
    return {0, c};
}
}  // namespace

TEST_CASE("mrank certifies a geometric window exactly") {
    RankCertificate cert = mrank(SequenceWindow(0, {q(6), q(18), q(54), q(162)}));
    CHECK(cert.kind == RankKind::kMoment);
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 1);
    CHECK(cert.exact);
    CHECK(cert.residual == 0.0);
    REQUIRE(cert.atoms.size() == 1);
    CHECK(cert.atoms[0].exact == q(3));
    CHECK(cert.masses[0].exact == q(2));  // c_n = 2 * 3^(n+1)
    CHECK(cert.char_poly == ExactPoly{q(-3), q(1)});
    CHECK(cert.verified_shifts == 3);
}

TEST_CASE("mrank on the constant window") {
    RankCertificate cert = mrank(SequenceWindow(0, {q(1), q(1), q(1), q(1)}));
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 1);
    CHECK(cert.atoms[0].exact == q(1));
    CHECK(cert.masses[0].exact == q(1));
}

TEST_CASE("mrank walks the numeric path on Fibonacci") {
    RankCertificate cert = mrank(fib8());
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 2);
    CHECK(!cert.exact);
    CHECK(cert.residual <= kResidualTol);
    REQUIRE(cert.atoms.size() == 2);
    // (magnitude, phase) order: psi = -0.618... before phi = 1.618...
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double psi = (1.0 - std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(cert.atoms[0].approx - std::complex<double>(psi, 0)) < 1e-10);
    CHECK(std::abs(cert.atoms[1].approx - std::complex<double>(phi, 0)) < 1e-10);
    // c_n = alpha phi^(n+1) + beta psi^(n+1) with alpha = 1/sqrt(5).
    CHECK(std::abs(cert.masses[1].approx - std::complex<double>(1 / std::sqrt(5.0), 0)) < 1e-10);
    CHECK(std::abs(cert.masses[0].approx - std::complex<double>(-1 / std::sqrt(5.0), 0)) < 1e-10);
}

TEST_CASE("mrank reports repeated roots as not simple") {
    RankCertificate cert = mrank(n2n8());
    CHECK(cert.status == RankStatus::kErrorNotSimple);
    CHECK(cert.rank == 2);  // the recurrence order, kept as a diagnostic
    CHECK(cert.char_poly == ExactPoly{q(4), q(-4), q(1)});
    CHECK(cert.atoms.empty());
}

TEST_CASE("mrank rejects transient windows via the zero constant coefficient") {
    RankCertificate cert = mrank(SequenceWindow(0, {q(5), q(3), q(3), q(3), q(3), q(3)}));
    CHECK(cert.status == RankStatus::kNoFiniteRankWithinPrefix);
    CHECK(cert.rank == 0);
    CHECK(cert.char_poly == ExactPoly{q(0), q(-1), q(1)});
}

TEST_CASE("mrank degenerate windows") {
    RankCertificate zeros = mrank(SequenceWindow(0, {q(0), q(0), q(0), q(0)}));
    CHECK(zeros.status == RankStatus::kCertified);
    CHECK(zeros.rank == 0);
    CHECK(zeros.zero_sequence);
    CHECK(zeros.exact);

    // Too short for any recurrence order: nothing certifiable.
    RankCertificate generic = mrank(SequenceWindow(0, {q(1), q(2), q(3), q(5)}));
    CHECK(generic.status == RankStatus::kNoFiniteRankWithinPrefix);

    CHECK_THROWS_AS(mrank(SequenceWindow(1, {q(1), q(2), q(3)})), IndexConventionError);
}

TEST_CASE("rrank certifies orders that mrank refuses") {
    RankCertificate cert = rrank(n2n8());
    CHECK(cert.kind == RankKind::kRecurrence);
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 2);
    CHECK(cert.exact);
}

TEST_CASE("urank recovers multisets of distinct atoms") {
    RankCertificate cert = urank(SequenceWindow(1, {q(5), q(13), q(35), q(97), q(275)}));
    CHECK(cert.kind == RankKind::kUnitary);
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 2);
    CHECK(cert.exact);
    REQUIRE(cert.atoms.size() == 2);
    CHECK(cert.atoms[0].exact == q(2));
    CHECK(cert.atoms[1].exact == q(3));
    CHECK(cert.masses[0].exact == q(1));
    CHECK(cert.masses[1].exact == q(1));
}

TEST_CASE("urank counts multiplicity in the rank") {
    RankCertificate cert = urank(SequenceWindow(1, {q(2), q(2), q(2), q(2)}));
    CHECK(cert.status == RankStatus::kCertified);
    CHECK(cert.rank == 2);  // multiset {1, 1}
    REQUIRE(cert.atoms.size() == 1);
    CHECK(cert.atoms[0].exact == q(1));
    CHECK(cert.masses[0].exact == q(2));

    RankCertificate triple = urank(SequenceWindow(1, {q(6), q(12), q(24), q(48)}));
    CHECK(triple.status == RankStatus::kCertified);
    CHECK(triple.rank == 3);  // multiset {2, 2, 2}
    CHECK(triple.atoms[0].exact == q(2));
    CHECK(triple.masses[0].exact == q(3));
}

TEST_CASE("urank flags non-integer masses") {
    RankCertificate cert = urank(SequenceWindow(1, {q(3), q(6), q(12), q(24), q(48)}));
    CHECK(cert.status == RankStatus::kNonIntegerMasses);
    CHECK(cert.rank == 1);
    REQUIRE(cert.atoms.size() == 1);
    CHECK(cert.atoms[0].exact == q(2));
    CHECK(cert.masses[0].exact == q(3, 2));
    CHECK(cert.exact);
}

TEST_CASE("urank refuses windows with no power-sum structure") {
    RankCertificate cert = urank(SequenceWindow(1, {q(4), q(4), q(4), q(4)}));
    CHECK(cert.status == RankStatus::kNoFiniteRankWithinPrefix);

    RankCertificate two = urank(SequenceWindow(1, {q(2), q(2)}));
    CHECK(two.status == RankStatus::kNoFiniteRankWithinPrefix);
}

TEST_CASE("urank certifies short honest windows and complex atoms") {
    RankCertificate one = urank(SequenceWindow(1, {q(3), q(9)}));
    CHECK(one.status == RankStatus::kCertified);
    CHECK(one.rank == 1);
    CHECK(one.atoms[0].exact == q(3));

    RankCertificate pm = urank(SequenceWindow(1, {q(0), q(2), q(0), q(2)}));
    CHECK(pm.status == RankStatus::kCertified);
    CHECK(pm.rank == 2);
    CHECK(pm.atoms[0].exact == q(1));   // phase 0 sorts before phase pi
    CHECK(pm.atoms[1].exact == q(-1));

    RankCertificate zeros = urank(SequenceWindow(1, {q(0), q(0), q(0)}));
    CHECK(zeros.status == RankStatus::kCertified);
    CHECK(zeros.rank == 0);
    CHECK(zeros.zero_sequence);

    CHECK_THROWS_AS(urank(SequenceWindow(0, {q(1), q(2), q(3)})), IndexConventionError);
}

TEST_CASE("nullity profile matches the rank formula") {
    CHECK(nullity_profile(fib8(), 3) == std::vector<std::size_t>{0, 0, 1, 2});
    SequenceWindow geo(0, {q(6), q(18), q(54), q(162), q(486)});
    CHECK(nullity_profile(geo, 2) == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(nullity_profile(geo, 3), PrefixTooShort);
}

TEST_CASE("tfae: all five conditions agree on a simple finite-rank window") {
    TfaeReport rep = tfae_crosscheck(fib8());
    CHECK(rep.agree);
    CHECK(rep.entries.size() == 5);
    for (const auto& e : rep.entries) {
        CHECK(e.verdict == TfaeReport::Verdict::kRank);
        CHECK(e.has_rank);
        CHECK(e.rank == 2);
    }
    CHECK(rep.entries[0].condition == "minimal-recurrence simplicity");
    CHECK(rep.entries[1].condition == "hankel determinant profile");
    CHECK(rep.entries[2].condition == "generating-function poles");
    CHECK(rep.entries[3].condition == "recurrence-ideal radicality");
    CHECK(rep.entries[4].condition == "moment-rank algorithm");
}

TEST_CASE("tfae: repeated roots push every condition to not-simple") {
    TfaeReport rep = tfae_crosscheck(n2n8());
    CHECK(rep.agree);
    for (const auto& e : rep.entries) CHECK(e.verdict == TfaeReport::Verdict::kNotSimple);
}

TEST_CASE("tfae: zero sequence short-circuits to rank 0") {
    TfaeReport rep = tfae_crosscheck(SequenceWindow(0, {q(0), q(0), q(0), q(0)}));
    CHECK(rep.agree);
    CHECK(rep.zero_sequence);
    for (const auto& e : rep.entries) {
        CHECK(e.verdict == TfaeReport::Verdict::kRank);
        CHECK(e.rank == 0);
    }
}

TEST_CASE("tfae: transient windows split the conditions honestly") {
    TfaeReport rep = tfae_crosscheck(SequenceWindow(0, {q(5), q(3), q(3), q(3), q(3), q(3)}));
    CHECK(!rep.agree);
    CHECK(!rep.disagreement.empty());
    CHECK(rep.entries[0].verdict == TfaeReport::Verdict::kRank);          // recurrence is simple
    CHECK(rep.entries[1].verdict == TfaeReport::Verdict::kNoFiniteRank);  // det profile dies
    CHECK(rep.entries[2].verdict == TfaeReport::Verdict::kNoFiniteRank);  // improper G(z)
    CHECK(rep.entries[3].verdict == TfaeReport::Verdict::kRank);
    CHECK(rep.entries[4].verdict == TfaeReport::Verdict::kNoFiniteRank);
}

TEST_CASE("moment round trip on a frozen random sample") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 4);

    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = rank_dist(rng);
        std::set<std::string> seen;
        AtomicMeasure mu;
        while (mu.atoms.size() < r) {
            GaussianRational atom(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
            if (atom.is_zero() || !seen.insert(atom.str()).second) continue;
            mu.atoms.push_back(ComplexValue::from_exact(atom));
            GaussianRational mass;
            while (mass.is_zero()) mass = q(num(rng), den(rng));
            mu.masses.push_back(ComplexValue::from_exact(mass));
        }
        SequenceWindow seq = moments(mu, 2 * r + 4, MomentConvention::kMomentRank);
        RankCertificate cert = mrank(seq);
        REQUIRE(cert.status == RankStatus::kCertified);
        CHECK(cert.rank == r);
        CHECK(cert.exact);

        std::set<std::string> expected, got;
        for (std::size_t i = 0; i < r; ++i) {
            expected.insert(mu.atoms[i].exact->str() + "|" + mu.masses[i].exact->str());
            got.insert(cert.atoms[i].exact->str() + "|" + cert.masses[i].exact->str());
        }
        CHECK(expected == got);
    }
}

TEST_CASE("unitary round trip on a frozen random sample") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<std::size_t> count_dist(1, 4);

    for (int trial = 0; trial < 25; ++trial) {
        std::size_t distinct = count_dist(rng);
        std::set<std::string> seen;
        AtomicMeasure mu;
        std::size_t total = 0;
        while (mu.atoms.size() < distinct) {
            GaussianRational atom = q(num(rng), den(rng));
            if (atom.is_zero() || !seen.insert(atom.str()).second) continue;
            std::size_t mult = 1 + static_cast<std::size_t>(rng() % 3);
            mu.atoms.push_back(ComplexValue::from_exact(atom));
            mu.masses.push_back(ComplexValue::from_exact(q(static_cast<long>(mult))));
            total += mult;
        }
        SequenceWindow seq = moments(mu, 2 * total + 4, MomentConvention::kUnitaryRank);
        RankCertificate cert = urank(seq);
        REQUIRE(cert.status == RankStatus::kCertified);
        CHECK(cert.rank == total);

        std::set<std::string> expected, got;
        for (std::size_t i = 0; i < mu.atoms.size(); ++i)
            expected.insert(mu.atoms[i].exact->str() + "|" + mu.masses[i].exact->str());
        for (std::size_t i = 0; i < cert.atoms.size(); ++i)
            got.insert(cert.atoms[i].exact->str() + "|" + cert.masses[i].exact->str());
        CHECK(expected == got);
    }
}
