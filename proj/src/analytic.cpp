/**
 * @file analytic.cpp
 * @brief Forward moments, measure recovery, Hankel factorizations, Waring
 *        forms, and generating-function reconstruction.
 */

#include "seqrank/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "seqrank/errors.hpp"
#include "seqrank/recurrence.hpp"

namespace seqrank {

bool AtomicMeasure::all_exact() const {
    auto has_literal = [](const ComplexValue& v) { return v.is_exact(); };
    return std::all_of(atoms.begin(), atoms.end(), has_literal) &&
           std::all_of(masses.begin(), masses.end(), has_literal);
}

SequenceWindow moments(const AtomicMeasure& mu, std::size_t count, MomentConvention convention) {
    if (mu.atoms.size() != mu.masses.size())
        throw ShapeError("measure atom and mass lists differ in length");
    if (count == 0) throw DegenerateInput("empty moment window");
    if (!mu.all_exact()) throw DegenerateInput("the moment oracle needs exact atoms and masses");
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        if (mu.atoms[i].exact->is_zero()) throw DegenerateInput("measure atom is zero");
        if (mu.masses[i].exact->is_zero()) throw DegenerateInput("measure mass is zero");
        for (std::size_t j = i + 1; j < mu.atoms.size(); ++j)
            if (*mu.atoms[i].exact == *mu.atoms[j].exact)
                throw DegenerateInput("measure atoms repeat");
    }

    // both conventions start the powers at beta^1: index 0 pairs with
    // exponent 1 on the moment route, index 1 with exponent 1 on the
    // power-sum route
    const long start = convention == MomentConvention::kMomentRank ? 0 : 1;
    std::vector<GaussianRational> power(mu.atoms.size());
    for (std::size_t i = 0; i < power.size(); ++i) power[i] = *mu.atoms[i].exact;

    std::vector<GaussianRational> terms;
    terms.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        GaussianRational sum;
        for (std::size_t i = 0; i < power.size(); ++i) {
            sum = sum + *mu.masses[i].exact * power[i];
            power[i] = power[i] * *mu.atoms[i].exact;
        }
        terms.push_back(std::move(sum));
    }
    return SequenceWindow(start, std::move(terms));
}

MeasureRecovery recover_measure(const SequenceWindow& seq, double tol) {
    RankCertificate cert;
    if (seq.start_index() == 0)
        cert = mrank(seq, tol);
    else if (seq.start_index() == 1)
        cert = urank(seq, tol);
    else
        throw IndexConventionError("measure recovery needs a window indexed from 0 or 1");

    MeasureRecovery out{std::move(cert), std::nullopt};
    if (out.certificate.status == RankStatus::kCertified)
        out.measure = AtomicMeasure{out.certificate.atoms, out.certificate.masses};
    return out;
}

namespace {

double entry_scale(const ExactMatrix& h) {
    double s = 1.0;
    for (const GaussianRational& g : h.entries()) s = std::max(s, std::abs(g.to_complex()));
    return s;
}

/// Max-entry error of (V^T diag(d) V) against the exact window.
double reconstruction_defect(const std::vector<std::vector<std::complex<double>>>& v,
                             const std::vector<std::complex<double>>& d, const ExactMatrix& h) {
    double worst = 0.0;
    for (std::size_t a = 0; a < h.rows(); ++a) {
        for (std::size_t b = 0; b < h.cols(); ++b) {
            std::complex<double> sum = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) sum += d[i] * v[i][a] * v[i][b];
            worst = std::max(worst, std::abs(sum - h.at(a, b).to_complex()));
        }
    }
    return worst;
}

}  // namespace

VandermondeFactor vandermonde_factor(const SequenceWindow& seq, std::size_t window, double tol) {
    VandermondeFactor out;
    out.certificate = mrank(seq, tol);
    if (out.certificate.status != RankStatus::kCertified) return out;

    const std::size_t r = out.certificate.rank;
    if (window < r) throw DegenerateInput("factorization window smaller than the certified rank");
    if (window == 0) throw DegenerateInput("empty factorization window");

    ExactMatrix h = hankel_window(seq, window - 1, 0);
    ModifiedVandermonde vdm(out.certificate.atoms);

    out.d_numeric.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        out.d_numeric.push_back(out.certificate.masses[i].approx *
                                out.certificate.atoms[i].approx);

    if (out.certificate.exact) {
        out.v = vdm.plain_exact(window);
        ExactMatrix d(r, r);
        for (std::size_t i = 0; i < r; ++i)
            d.at(i, i) = *out.certificate.masses[i].exact * *out.certificate.atoms[i].exact;
        out.d = d;
        if (out.v->transpose() * d * *out.v != h)
            throw CrossCheckDefect("exact Vandermonde factorization misses the window");
        out.v_numeric = vdm.plain_numeric(window);
        out.exact = true;
        out.defect = 0.0;
        return out;
    }

    out.v_numeric = vdm.plain_numeric(window);
    out.defect = reconstruction_defect(out.v_numeric, out.d_numeric, h);
    if (out.defect > tol * entry_scale(h)) {
        std::ostringstream os;
        os << "Vandermonde reconstruction defect " << out.defect << " exceeds tolerance";
        throw CrossCheckDefect(os.str());
    }
    return out;
}

GramianFactor gramian_factor(const SequenceWindow& seq, double tol) {
    GramianFactor out;
    out.certificate = urank(seq, tol);
    if (out.certificate.status != RankStatus::kCertified) {
        out.obstruction = std::string("unitary rank not certified: ") +
                          to_string(out.certificate.status);
        return out;
    }
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (!seq.nth(k).is_real()) {
            out.obstruction = "sequence is not real";
            return out;
        }
    }

    const std::size_t n = seq.size();
    const std::size_t m = n / 2;
    out.window = m + 1;

    std::vector<GaussianRational> augmented;
    augmented.reserve(n + 1);
    augmented.emplace_back(static_cast<long>(out.certificate.rank));
    for (std::size_t k = 0; k < n; ++k) augmented.push_back(seq.nth(k));
    SequenceWindow aug(0, std::move(augmented));

    ExactMatrix h = hankel_window(aug, m, 0);
    if (!psd_window_check(h)) {
        out.obstruction = "augmented Hankel window is not positive semidefinite";
        return out;
    }

    // multiset Vandermonde: one row per atom copy
    std::vector<ComplexValue> rows;
    rows.reserve(out.certificate.rank);
    for (std::size_t i = 0; i < out.certificate.atoms.size(); ++i) {
        const mpz_class copies = out.certificate.masses[i].exact->real().get_num();
        for (mpz_class c = 0; c < copies; ++c) rows.push_back(out.certificate.atoms[i]);
    }
    ModifiedVandermonde vdm(rows);

    if (out.certificate.exact) {
        out.v = vdm.plain_exact(out.window);
        if (out.v->transpose() * *out.v != h)
            throw CrossCheckDefect("exact Gramian factorization misses the augmented window");
        out.v_numeric = vdm.plain_numeric(out.window);
        out.exact = true;
    } else {
        out.v_numeric = vdm.plain_numeric(out.window);
        std::vector<std::complex<double>> ones(rows.size(), 1.0);
        out.defect = reconstruction_defect(out.v_numeric, ones, h);
        if (out.defect > tol * entry_scale(h)) {
            std::ostringstream os;
            os << "Gramian reconstruction defect " << out.defect << " exceeds tolerance";
            throw CrossCheckDefect(os.str());
        }
    }
    out.gramian = true;
    return out;
}

namespace {

GaussianRational binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return GaussianRational(Rat(b));
}

GaussianRational exact_signed_power(const GaussianRational& base, long e) {
    GaussianRational out(1);
    const GaussianRational b = e >= 0 ? base : GaussianRational(1) / base;
    for (long k = 0; k < std::abs(e); ++k) out = out * b;
    return out;
}

std::complex<double> numeric_signed_power(const std::complex<double>& base, long e) {
    std::complex<double> out = 1.0;
    const std::complex<double> b = e >= 0 ? base : 1.0 / base;
    for (long k = 0; k < std::abs(e); ++k) out *= b;
    return out;
}

}  // namespace

WaringForm waring_build(const SequenceWindow& seq, std::size_t r_prime, long t) {
    WaringForm form;
    form.r_prime = r_prime;
    form.t = t;
    const std::size_t deg = 2 * r_prime;
    form.coeff.reserve(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j)
        form.coeff.push_back(binomial(deg, j) * seq.term(t + static_cast<long>(j)));
    return form;
}

bool waring_verify(WaringForm& form, const AtomicMeasure& mu, double tol) {
    form.decomposition.clear();
    if (mu.atoms.size() != mu.masses.size())
        throw ShapeError("measure atom and mass lists differ in length");

    const std::size_t deg = 2 * form.r_prime;
    std::vector<GaussianRational> target(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j) target[j] = form.coeff[j] / binomial(deg, j);

    const std::size_t r = mu.atoms.size();
    if (r == 0) {
        return std::all_of(target.begin(), target.end(),
                           [](const GaussianRational& g) { return g.is_zero(); });
    }
    if (r > deg + 1) throw DegenerateInput("measure has more atoms than the form has coefficients");

    if (mu.all_exact()) {
        ModifiedVandermonde vdm(mu.atoms);
        ExactMatrix system = vdm.plain_exact(r).transpose();
        std::vector<GaussianRational> rhs(target.begin(), target.begin() + r);
        std::vector<GaussianRational> w = solve(system, rhs);

        std::vector<GaussianRational> power(r);
        for (std::size_t i = 0; i < r; ++i)
            power[i] = exact_signed_power(*mu.atoms[i].exact, static_cast<long>(r));
        for (std::size_t k = r; k <= deg; ++k) {
            GaussianRational sum;
            for (std::size_t i = 0; i < r; ++i) {
                sum = sum + w[i] * power[i];
                power[i] = power[i] * *mu.atoms[i].exact;
            }
            if (sum != target[k]) return false;
        }

        form.decomposition.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            GaussianRational lambda = w[i] * exact_signed_power(*mu.atoms[i].exact, -form.t);
            form.decomposition.push_back({ComplexValue::from_exact(std::move(lambda)),
                                          ComplexValue::from_exact(GaussianRational(1)),
                                          mu.atoms[i]});
        }
        return true;
    }

    ModifiedVandermonde vdm(mu.atoms);
    auto powers = vdm.plain_numeric(r);
    std::vector<std::vector<std::complex<double>>> system(r,
                                                          std::vector<std::complex<double>>(r));
    std::vector<std::complex<double>> rhs(r);
    for (std::size_t k = 0; k < r; ++k) {
        rhs[k] = target[k].to_complex();
        for (std::size_t i = 0; i < r; ++i) system[k][i] = powers[i][k];
    }
    std::vector<std::complex<double>> w = solve_dense(system, rhs);

    double scale = 1.0;
    for (const GaussianRational& g : target) scale = std::max(scale, std::abs(g.to_complex()));
    std::vector<std::complex<double>> power(r);
    for (std::size_t i = 0; i < r; ++i)
        power[i] = numeric_signed_power(mu.atoms[i].approx, static_cast<long>(r));
    for (std::size_t k = r; k <= deg; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            sum += w[i] * power[i];
            power[i] *= mu.atoms[i].approx;
        }
        if (std::abs(sum - target[k].to_complex()) > tol * scale) return false;
    }

    form.decomposition.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::complex<double> lambda = w[i] * numeric_signed_power(mu.atoms[i].approx, -form.t);
        form.decomposition.push_back({ComplexValue::numeric(lambda),
                                      ComplexValue::from_exact(GaussianRational(1)),
                                      mu.atoms[i]});
    }
    return true;
}

RationalGenFun genfun(const SequenceWindow& seq) {
    SequenceWindow base = seq.reindexed(0);
    RationalGenFun gf;

    RecurrenceSearch search = minimal_recurrence(base);
    if (search.outcome == RecurrenceSearch::Outcome::kZeroSequence) {
        gf.numerator = ExactPoly{};
        gf.denominator = ExactPoly{GaussianRational(1)};
        gf.proper = true;
        gf.poles_simple = true;
        return gf;
    }
    if (search.outcome == RecurrenceSearch::Outcome::kNoneFound) throw NoGeneratorWithinPrefix();

    const ExactPoly p = search.recurrence->char_poly();
    const std::size_t r = p.degree();
    gf.denominator = p.reciprocal();

    std::vector<GaussianRational> num(r);
    for (std::size_t k = 0; k < r; ++k) {
        GaussianRational sum;
        for (std::size_t i = 0; i <= std::min(k, gf.denominator.degree()); ++i)
            sum = sum + gf.denominator.coeff(i) * base.nth(k - i);
        num[k] = std::move(sum);
    }
    gf.numerator = ExactPoly{std::move(num)};

    // the series identity must keep holding past the numerator degree
    for (std::size_t k = r; k < base.size(); ++k) {
        GaussianRational sum;
        for (std::size_t i = 0; i <= std::min(k, gf.denominator.degree()); ++i)
            sum = sum + gf.denominator.coeff(i) * base.nth(k - i);
        if (!sum.is_zero())
            throw CrossCheckDefect("generating-function series disagrees with the window");
    }
    if (!gf.numerator.is_zero()) {
        ExactPoly common = poly_gcd(gf.numerator, gf.denominator);
        if (!common.is_zero() && common.degree() >= 1)
            throw CrossCheckDefect("generating function is not in lowest terms");
    }

    gf.proper = gf.numerator.is_zero() || gf.numerator.degree() < gf.denominator.degree();

    RootExtraction ext = extract_roots(p, kRootTol);
    gf.poles_simple = true;
    for (const LabeledRoot& root : ext.roots) {
        if (root.value.is_exact() && root.value.exact->is_zero()) continue;
        LabeledRoot pole;
        pole.multiplicity = root.multiplicity;
        if (root.value.is_exact())
            pole.value = ComplexValue::from_exact(GaussianRational(1) / *root.value.exact);
        else
            pole.value = ComplexValue::numeric(1.0 / root.value.approx);
        if (pole.multiplicity > 1) gf.poles_simple = false;
        gf.pole_list.push_back(std::move(pole));
    }
    std::sort(gf.pole_list.begin(), gf.pole_list.end(),
              [](const LabeledRoot& a, const LabeledRoot& b) {
                  return magnitude_phase_less(a.value.approx, b.value.approx);
              });
    return gf;
}

}  // namespace seqrank
