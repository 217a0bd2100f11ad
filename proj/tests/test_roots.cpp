/// Numeric root finding with exact-root recovery: Aberth iteration, Yun
/// multiplicities, continued-fraction snapping, and the dense solver.

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "seqrank/roots.hpp"

using namespace seqrank;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(make_rat(n, d)); }

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("find_roots on simple rational polynomials") {
    auto roots = find_roots(ExactPoly{q(-1), q(0), q(1)});  // x^2 - 1
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(),
              [](auto a, auto b) { return a.real() < b.real(); });
    CHECK(dist(roots[0], {-1.0, 0.0}) < 1e-12);
    CHECK(dist(roots[1], {1.0, 0.0}) < 1e-12);
    CHECK_THROWS_AS(find_roots(ExactPoly{q(3)}), DegenerateInput);
}

TEST_CASE("extract_roots recovers exact roots with multiplicity") {
    ExactPoly p = ExactPoly{q(-1), q(1)} * ExactPoly{q(-1), q(1)} * ExactPoly{q(2), q(1)};
    RootExtraction ex = extract_roots(p);
    REQUIRE(ex.roots.size() == 2);
    CHECK(ex.all_exact);
    CHECK(ex.roots[0].value.exact == q(1));  // magnitude 1 before magnitude 2
    CHECK(ex.roots[0].multiplicity == 2);
    CHECK(ex.roots[1].value.exact == q(-2));
    CHECK(ex.roots[1].multiplicity == 1);
}

TEST_CASE("extract_roots snaps Gaussian-rational roots") {
    ExactPoly p{q(1), q(0), q(1)};  // x^2 + 1
    RootExtraction ex = extract_roots(p);
    REQUIRE(ex.roots.size() == 2);
    CHECK(ex.all_exact);
    CHECK(ex.roots[0].value.exact == GaussianRational(make_rat(0, 1), make_rat(-1, 1)));
    CHECK(ex.roots[1].value.exact == GaussianRational::i());

    GaussianRational a(make_rat(1, 1), make_rat(2, 1));
    ExactPoly mixed = ExactPoly{GaussianRational(0) - a, q(1)} * ExactPoly{q(-3), q(1)};
    RootExtraction ex2 = extract_roots(mixed);
    CHECK(ex2.all_exact);
    bool found = false;
    for (const auto& r : ex2.roots)
        if (r.value.exact == a) found = true;
    CHECK(found);
}

TEST_CASE("irrational roots stay numeric but ordered") {
    RootExtraction ex = extract_roots(ExactPoly{q(-2), q(0), q(1)});  // x^2 - 2
    REQUIRE(ex.roots.size() == 2);
    CHECK(!ex.all_exact);
    CHECK(!ex.roots[0].value.exact);
    CHECK(dist(ex.roots[0].value.approx, {std::sqrt(2.0), 0.0}) < 1e-12);  // phase 0 first
    CHECK(dist(ex.roots[1].value.approx, {-std::sqrt(2.0), 0.0}) < 1e-12);
}

TEST_CASE("magnitude-phase order is total and deterministic") {
    CHECK(magnitude_phase_less({0.5, 0.0}, {1.0, 0.0}));
    CHECK(magnitude_phase_less({0.0, -1.0}, {0.0, 1.0}));  // equal magnitude, phase decides
    CHECK(!magnitude_phase_less({1.0, 0.0}, {1.0, 0.0}));
}

TEST_CASE("reconstruction property on a frozen sample") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int k = 0; k < 20; ++k) {
        std::vector<GaussianRational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = q(num(rng), den(rng));
        c.back() = q(1);
        ExactPoly p(std::move(c));
        if (!is_squarefree(p)) continue;

        auto roots = find_roots(p);
        REQUIRE(roots.size() == p.degree());

        // Multiply the linear factors back together and compare coefficients.
        std::vector<std::complex<double>> prod{1.0};
        for (std::complex<double> z : roots) {
            std::vector<std::complex<double>> next(prod.size() + 1);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i] -= z * prod[i];
                next[i + 1] += prod[i];
            }
            prod = std::move(next);
        }
        double scale = 0.0;
        for (std::size_t i = 0; i <= p.degree(); ++i)
            scale = std::max(scale, std::abs(p.coeff(i).to_complex()));
        for (std::size_t i = 0; i <= p.degree(); ++i)
            CHECK(std::abs(prod[i] - p.coeff(i).to_complex()) <= 1e-9 * scale);
    }
}

TEST_CASE("solve_dense") {
    std::vector<std::vector<std::complex<double>>> a{{1.0, 1.0}, {1.0, 2.0}};
    auto x = solve_dense(a, {3.0, 5.0});
    CHECK(dist(x[0], 1.0) < 1e-12);
    CHECK(dist(x[1], 2.0) < 1e-12);
    CHECK_THROWS_AS(solve_dense({{1.0, 2.0}, {2.0, 4.0}}, {1.0, 1.0}), SingularMatrix);
    CHECK_THROWS_AS(solve_dense({{1.0, 2.0}}, {1.0, 1.0}), ShapeError);
}
