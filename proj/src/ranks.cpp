/**
 * @file ranks.cpp
 * @brief Recurrence, moment, and unitary rank with certificates; Hankel
 *        nullity profile; the five-way equivalence cross-check.
 */

#include "seqrank/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqrank/analytic.hpp"
#include "seqrank/errors.hpp"
#include "seqrank/recurrence.hpp"

namespace seqrank {

const char* to_string(RankKind kind) {
    switch (kind) {
        case RankKind::kRecurrence: return "recurrence";
        case RankKind::kMoment: return "moment";
        case RankKind::kUnitary: return "unitary";
    }
    return "?";
}

const char* to_string(RankStatus status) {
    switch (status) {
        case RankStatus::kCertified: return "Certified";
        case RankStatus::kErrorNotSimple: return "ErrorNotSimple";
        case RankStatus::kNoFiniteRankWithinPrefix: return "NoFiniteRankWithinPrefix";
        case RankStatus::kNonIntegerMasses: return "NonIntegerMasses";
    }
    return "?";
}

const char* to_string(TfaeReport::Verdict verdict) {
    switch (verdict) {
        case TfaeReport::Verdict::kRank: return "rank";
        case TfaeReport::Verdict::kNotSimple: return "not simple";
        case TfaeReport::Verdict::kNoFiniteRank: return "no finite rank";
    }
    return "?";
}

bool ModifiedVandermonde::all_exact() const {
    return std::all_of(b_.begin(), b_.end(), [](const ComplexValue& v) { return v.is_exact(); });
}

namespace {

ExactMatrix exact_powers(const std::vector<ComplexValue>& betas, std::size_t cols, bool from_one) {
    ExactMatrix m(betas.size(), cols);
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!betas[i].is_exact()) throw DegenerateInput("exact Vandermonde needs exact atoms");
        const GaussianRational& b = *betas[i].exact;
        GaussianRational p = from_one ? b : GaussianRational(1);
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = p;
            p = p * b;
        }
    }
    return m;
}

std::vector<std::vector<std::complex<double>>> numeric_powers(
    const std::vector<ComplexValue>& betas, std::size_t cols, bool from_one) {
    std::vector<std::vector<std::complex<double>>> m(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const std::complex<double> b = betas[i].approx;
        std::complex<double> p = from_one ? b : std::complex<double>(1.0);
        m[i].reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            m[i].push_back(p);
            p *= b;
        }
    }
    return m;
}

}  // namespace

ExactMatrix ModifiedVandermonde::primed_exact(std::size_t cols) const {
    return exact_powers(b_, cols, /*from_one=*/true);
}

ExactMatrix ModifiedVandermonde::plain_exact(std::size_t cols) const {
    return exact_powers(b_, cols, /*from_one=*/false);
}

std::vector<std::vector<std::complex<double>>> ModifiedVandermonde::primed_numeric(
    std::size_t cols) const {
    return numeric_powers(b_, cols, /*from_one=*/true);
}

std::vector<std::vector<std::complex<double>>> ModifiedVandermonde::plain_numeric(
    std::size_t cols) const {
    return numeric_powers(b_, cols, /*from_one=*/false);
}

namespace {

RankCertificate zero_sequence_certificate(RankKind kind, std::size_t n) {
    RankCertificate cert;
    cert.kind = kind;
    cert.status = RankStatus::kCertified;
    cert.zero_sequence = true;
    cert.exact = true;
    cert.verified_shifts = n;
    return cert;
}

double window_scale(const SequenceWindow& seq) {
    double s = 1.0;
    for (std::size_t k = 0; k < seq.size(); ++k) s = std::max(s, std::abs(seq.nth(k).to_complex()));
    return s;
}

/// Masses for certified exact atoms: solve the leading r terms, then replay
/// the representation across the whole window.
void certify_moment_exact(RankCertificate& cert, const SequenceWindow& seq,
                          const std::vector<ComplexValue>& atoms) {
    const std::size_t r = atoms.size();
    ModifiedVandermonde vdm(atoms);
    ExactMatrix system = vdm.primed_exact(r).transpose();
    std::vector<GaussianRational> rhs(r);
    for (std::size_t j = 0; j < r; ++j) rhs[j] = seq.nth(j);
    std::vector<GaussianRational> alpha = solve(system, rhs);

    for (const GaussianRational& a : alpha)
        if (a.is_zero())
            throw CrossCheckDefect("vanishing mass contradicts recurrence minimality");

    std::vector<GaussianRational> power(r);
    for (std::size_t i = 0; i < r; ++i) power[i] = *atoms[i].exact;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        GaussianRational sum;
        for (std::size_t i = 0; i < r; ++i) {
            sum = sum + alpha[i] * power[i];
            power[i] = power[i] * *atoms[i].exact;
        }
        if (sum != seq.nth(n)) {
            std::ostringstream os;
            os << "exact moment reconstruction fails at term " << n;
            throw CrossCheckDefect(os.str());
        }
    }

    cert.atoms = atoms;
    cert.masses.reserve(r);
    for (GaussianRational& a : alpha) cert.masses.push_back(ComplexValue::from_exact(std::move(a)));
    cert.exact = true;
    cert.residual = 0.0;
    cert.status = RankStatus::kCertified;
}

/// Numeric twin: dense solve for the masses, residual gate over every term.
void certify_moment_numeric(RankCertificate& cert, const SequenceWindow& seq,
                            const std::vector<ComplexValue>& atoms, double tol) {
    const std::size_t r = atoms.size();
    ModifiedVandermonde vdm(atoms);
    auto powers = vdm.primed_numeric(r);  // rows atoms, cols powers
    std::vector<std::vector<std::complex<double>>> system(r,
                                                          std::vector<std::complex<double>>(r));
    std::vector<std::complex<double>> rhs(r);
    for (std::size_t j = 0; j < r; ++j) {
        rhs[j] = seq.nth(j).to_complex();
        for (std::size_t i = 0; i < r; ++i) system[j][i] = powers[i][j];
    }
    std::vector<std::complex<double>> alpha = solve_dense(system, rhs);

    const double scale = window_scale(seq);
    std::vector<std::complex<double>> power(r);
    for (std::size_t i = 0; i < r; ++i) power[i] = atoms[i].approx;
    double worst = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            sum += alpha[i] * power[i];
            power[i] *= atoms[i].approx;
        }
        worst = std::max(worst, std::abs(sum - seq.nth(n).to_complex()));
    }
    const double residual = worst / scale;
    if (residual > tol) {
        std::ostringstream os;
        os << "moment reconstruction residual " << residual << " exceeds tolerance " << tol;
        throw RootFindingFailed(os.str());
    }
    double mass_scale = 0.0;
    for (const std::complex<double>& a : alpha) mass_scale = std::max(mass_scale, std::abs(a));
    for (const std::complex<double>& a : alpha)
        if (std::abs(a) <= tol * mass_scale)
            throw CrossCheckDefect("numerically vanishing mass contradicts recurrence minimality");

    cert.atoms = atoms;
    cert.masses.reserve(r);
    for (const std::complex<double>& a : alpha) cert.masses.push_back(ComplexValue::numeric(a));
    cert.exact = false;
    cert.residual = residual;
    cert.status = RankStatus::kCertified;
}

}  // namespace

RankCertificate rrank(const SequenceWindow& seq) {
    RankCertificate cert;
    cert.kind = RankKind::kRecurrence;

    RecurrenceSearch search = minimal_recurrence(seq);
    if (search.outcome == RecurrenceSearch::Outcome::kZeroSequence)
        return zero_sequence_certificate(RankKind::kRecurrence, seq.size());
    if (search.outcome == RecurrenceSearch::Outcome::kNoneFound) {
        cert.status = RankStatus::kNoFiniteRankWithinPrefix;
        return cert;
    }

    const Recurrence& rec = *search.recurrence;
    cert.status = RankStatus::kCertified;
    cert.rank = rec.order();
    cert.char_poly = rec.char_poly();
    cert.verified_shifts = seq.size() - rec.order();
    cert.exact = true;
    return cert;
}

RankCertificate mrank(const SequenceWindow& seq, double tol) {
    if (seq.start_index() != 0)
        throw IndexConventionError("moment rank is defined on windows indexed from 0");

    RankCertificate cert;
    cert.kind = RankKind::kMoment;

    RecurrenceSearch search = minimal_recurrence(seq);
    if (search.outcome == RecurrenceSearch::Outcome::kZeroSequence)
        return zero_sequence_certificate(RankKind::kMoment, seq.size());
    if (search.outcome == RecurrenceSearch::Outcome::kNoneFound) {
        cert.status = RankStatus::kNoFiniteRankWithinPrefix;
        return cert;
    }

    const Recurrence& rec = *search.recurrence;
    cert.char_poly = rec.char_poly();
    cert.verified_shifts = seq.size() - rec.order();

    if (!is_squarefree(cert.char_poly)) {
        cert.status = RankStatus::kErrorNotSimple;
        cert.rank = rec.order();
        return cert;
    }
    if (cert.char_poly.coeff(0).is_zero()) {
        // a vanishing characteristic root means the window shows a transient,
        // and no sum over nonzero atoms can reproduce one
        cert.status = RankStatus::kNoFiniteRankWithinPrefix;
        return cert;
    }

    RootExtraction ext = extract_roots(cert.char_poly, kRootTol);
    std::vector<ComplexValue> atoms;
    atoms.reserve(ext.roots.size());
    for (LabeledRoot& root : ext.roots) atoms.push_back(std::move(root.value));

    cert.rank = rec.order();
    if (ext.all_exact)
        certify_moment_exact(cert, seq, atoms);
    else
        certify_moment_numeric(cert, seq, atoms, tol);
    return cert;
}

namespace {

bool exact_positive_integer(const GaussianRational& g) {
    return g.is_integer() && g.real() > 0;
}

/// Nearest positive integer within the acceptance window, or nullopt.
std::optional<long> numeric_positive_integer(const std::complex<double>& z) {
    const long nearest = std::lround(z.real());
    if (nearest < 1) return std::nullopt;
    if (std::abs(z - std::complex<double>(static_cast<double>(nearest))) > kIntegerMassTol)
        return std::nullopt;
    return nearest;
}

bool values_match(const ComplexValue& a, const ComplexValue& b) {
    if (a.is_exact() && b.is_exact()) return *a.exact == *b.exact;
    return std::abs(a.approx - b.approx) <= kIntegerMassTol * std::max(1.0, std::abs(a.approx));
}

/// The moment route on the shifted window must reproduce the multiset: same
/// distinct atoms, masses equal to the multiplicities.
void match_cross_route(const RankCertificate& primary, const RankCertificate& cross) {
    if (cross.rank != primary.atoms.size())
        throw CrossCheckDefect("shifted moment rank differs from the distinct atom count");
    for (std::size_t i = 0; i < cross.rank; ++i) {
        if (!values_match(primary.atoms[i], cross.atoms[i]))
            throw CrossCheckDefect("shifted moment route found a different atom");
        if (!values_match(primary.masses[i], cross.masses[i]))
            throw CrossCheckDefect("shifted moment route mass differs from the multiplicity");
    }
}

}  // namespace

RankCertificate urank(const SequenceWindow& seq, double tol) {
    if (seq.start_index() != 1)
        throw IndexConventionError("unitary rank is defined on windows indexed from 1");
    if (seq.size() < 2) throw DegenerateInput("unitary rank needs at least two power sums");

    RankCertificate cert;
    cert.kind = RankKind::kUnitary;
    if (seq.all_zero()) return zero_sequence_certificate(RankKind::kUnitary, seq.size());

    const std::size_t n = seq.size();

    NewtonPoly np = power_sums_to_newton(seq);
    const std::size_t rstar = np.candidate_rank();
    const bool primary_ok = rstar >= 1 && rstar <= n - 1 && newton_tail_check(np, seq, rstar);

    // the cross route needs the moment algorithm's own minimum window
    std::optional<RankCertificate> cross;
    if (n >= 3) cross = mrank(seq.reindexed(0), tol);

    if (primary_ok) {
        cert.char_poly = np.char_poly(rstar);
        cert.rank = rstar;
        cert.verified_shifts = n - rstar;

        RootExtraction ext = extract_roots(cert.char_poly, kRootTol);
        cert.exact = ext.all_exact;
        cert.atoms.reserve(ext.roots.size());
        cert.masses.reserve(ext.roots.size());
        for (const LabeledRoot& root : ext.roots) {
            cert.atoms.push_back(root.value);
            cert.masses.push_back(
                ComplexValue::from_exact(GaussianRational(static_cast<long>(root.multiplicity))));
        }

        if (ext.all_exact) {
            // replay the power sums exactly from the multiset
            std::vector<GaussianRational> power(cert.atoms.size());
            for (std::size_t i = 0; i < cert.atoms.size(); ++i) power[i] = *cert.atoms[i].exact;
            for (std::size_t k = 0; k < n; ++k) {
                GaussianRational sum;
                for (std::size_t i = 0; i < cert.atoms.size(); ++i) {
                    sum = sum + *cert.masses[i].exact * power[i];
                    power[i] = power[i] * *cert.atoms[i].exact;
                }
                if (sum != seq.nth(k)) {
                    std::ostringstream os;
                    os << "multiset power sums fail at index " << k + 1;
                    throw CrossCheckDefect(os.str());
                }
            }
            cert.residual = 0.0;
        } else {
            const double scale = window_scale(seq);
            std::vector<std::complex<double>> power(cert.atoms.size());
            for (std::size_t i = 0; i < cert.atoms.size(); ++i) power[i] = cert.atoms[i].approx;
            double worst = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                std::complex<double> sum = 0.0;
                for (std::size_t i = 0; i < cert.atoms.size(); ++i) {
                    sum += cert.masses[i].approx * power[i];
                    power[i] *= cert.atoms[i].approx;
                }
                worst = std::max(worst, std::abs(sum - seq.nth(k).to_complex()));
            }
            cert.residual = worst / scale;
            if (cert.residual > tol) {
                std::ostringstream os;
                os << "power-sum reconstruction residual " << cert.residual
                   << " exceeds tolerance " << tol;
                throw RootFindingFailed(os.str());
            }
        }
        cert.status = RankStatus::kCertified;

        if (cross) {
            if (cross->status == RankStatus::kCertified) {
                match_cross_route(cert, *cross);
            } else if (cross->status == RankStatus::kNoFiniteRankWithinPrefix) {
                // legitimate only when the distinct atom count outruns the
                // order cap of the shifted search; anything else is a defect
                if (cert.atoms.size() <= (n - 1) / 2)
                    throw CrossCheckDefect(
                        "shifted moment route found no rank despite an admissible atom count");
            } else {
                throw CrossCheckDefect(
                    "shifted moment route rejected a window the multiset route certified");
            }
        }
        return cert;
    }

    // Newton route is under-determined on this prefix; the shifted moment
    // route can still classify the window
    if (cross && cross->status == RankStatus::kCertified) {
        bool integral = true;
        for (const ComplexValue& mass : cross->masses) {
            if (mass.is_exact() ? !exact_positive_integer(*mass.exact)
                                : !numeric_positive_integer(mass.approx).has_value()) {
                integral = false;
                break;
            }
        }
        if (integral) {
            // positive integer masses mean a genuine multiset whose power
            // sums simply need more terms than the window shows
            cert.status = RankStatus::kNoFiniteRankWithinPrefix;
            return cert;
        }
        cert.status = RankStatus::kNonIntegerMasses;
        cert.rank = cross->rank;
        cert.char_poly = cross->char_poly;
        cert.atoms = cross->atoms;
        cert.masses = cross->masses;
        cert.exact = cross->exact;
        cert.residual = cross->residual;
        return cert;
    }
    if (cross && cross->status == RankStatus::kErrorNotSimple) {
        // multisets always induce squarefree shifted recurrences, so a
        // repeated root rules every multiset out
        cert.status = RankStatus::kErrorNotSimple;
        cert.rank = cross->rank;
        cert.char_poly = cross->char_poly;
        return cert;
    }
    cert.status = RankStatus::kNoFiniteRankWithinPrefix;
    return cert;
}

std::vector<std::size_t> nullity_profile(const SequenceWindow& seq, std::size_t m_max) {
    SequenceWindow base = seq.reindexed(0);
    std::vector<std::size_t> out;
    out.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m)
        out.push_back(kernel_basis(hankel_window(base, m, 0)).size());
    return out;
}

namespace {

using Verdict = TfaeReport::Verdict;

TfaeReport::Entry simple_recurrence_condition(const SequenceWindow& base) {
    TfaeReport::Entry e;
    e.condition = "minimal-recurrence simplicity";
    RecurrenceSearch search = minimal_recurrence(base);
    if (search.outcome != RecurrenceSearch::Outcome::kFound) {
        e.verdict = Verdict::kNoFiniteRank;
        e.detail = "no recurrence order fits the prefix";
        return e;
    }
    const Recurrence& rec = *search.recurrence;
    e.rank = rec.order();
    e.has_rank = true;
    if (is_squarefree(rec.char_poly())) {
        e.verdict = Verdict::kRank;
        e.detail = "minimal recurrence has a squarefree characteristic polynomial";
    } else {
        e.verdict = Verdict::kNotSimple;
        e.detail = "minimal recurrence characteristic polynomial has a repeated root";
    }
    return e;
}

TfaeReport::Entry hankel_profile_condition(const SequenceWindow& base) {
    TfaeReport::Entry e;
    e.condition = "hankel determinant profile";
    const std::size_t n = base.size();
    for (std::size_t r = 1; 2 * r + 1 <= n; ++r) {
        bool dets_nonzero = true;
        for (long t = 0; 2 * (r - 1) + static_cast<std::size_t>(t) + 1 <= n; ++t) {
            if (exact_det(hankel_window(base, r - 1, t)).is_zero()) {
                dets_nonzero = false;
                break;
            }
        }
        if (!dets_nonzero) continue;

        std::vector<std::vector<GaussianRational>> kernel =
            kernel_basis(hankel_window(base, r, 0));
        if (kernel.size() != 1) continue;

        bool stable = true;
        for (long t = 1; 2 * r + static_cast<std::size_t>(t) + 1 <= n; ++t) {
            std::vector<std::vector<GaussianRational>> shifted =
                kernel_basis(hankel_window(base, r, t));
            if (shifted.size() != 1 || shifted.front() != kernel.front()) {
                stable = false;
                break;
            }
        }
        if (!stable) continue;

        // the leading determinant is nonzero, so the kernel vector's top
        // coordinate survives and the polynomial has degree exactly r
        ExactPoly kernel_poly{kernel.front()};
        e.rank = r;
        e.has_rank = true;
        // degree 1 cannot carry a repeated root and has no discriminant
        if (kernel_poly.degree() < 2 || !discriminant(kernel_poly).is_zero()) {
            e.verdict = Verdict::kRank;
            e.detail =
                "nonzero window determinants, stable one-dimensional kernel, kernel polynomial "
                "with nonzero discriminant";
        } else {
            e.verdict = Verdict::kNotSimple;
            e.detail = "stable kernel found but its polynomial has vanishing discriminant";
        }
        return e;
    }
    e.verdict = Verdict::kNoFiniteRank;
    e.detail = "no order yields nonzero determinants with a stable one-dimensional kernel";
    return e;
}

TfaeReport::Entry pole_structure_condition(const SequenceWindow& base) {
    TfaeReport::Entry e;
    e.condition = "generating-function poles";
    RationalGenFun gf;
    try {
        gf = genfun(base);
    } catch (const NoGeneratorWithinPrefix&) {
        e.verdict = Verdict::kNoFiniteRank;
        e.detail = "no rational generating function fits the prefix";
        return e;
    }
    if (!gf.proper) {
        e.verdict = Verdict::kNoFiniteRank;
        e.detail = "generating function carries a polynomial part";
        return e;
    }
    e.rank = gf.denominator.degree();
    e.has_rank = true;
    if (gf.poles_simple) {
        e.verdict = Verdict::kRank;
        e.detail = "proper rational generating function with simple poles";
    } else {
        e.verdict = Verdict::kNotSimple;
        e.detail = "proper rational generating function with a repeated pole";
    }
    return e;
}

TfaeReport::Entry radical_ideal_condition(const SequenceWindow& base) {
    TfaeReport::Entry e;
    e.condition = "recurrence-ideal radicality";
    ExactPoly gen;
    try {
        gen = ideal_generator(base);
    } catch (const NoGeneratorWithinPrefix&) {
        e.verdict = Verdict::kNoFiniteRank;
        e.detail = "the prefix certifies no recurrence-ideal generator";
        return e;
    }
    e.rank = gen.degree();
    e.has_rank = true;
    if (is_radical(base)) {
        e.verdict = Verdict::kRank;
        e.detail = "recurrence ideal is radical at the generator's degree";
    } else {
        e.verdict = Verdict::kNotSimple;
        e.detail = "recurrence ideal is not radical";
    }
    return e;
}

TfaeReport::Entry algorithm_condition(const SequenceWindow& base, double tol) {
    TfaeReport::Entry e;
    e.condition = "moment-rank algorithm";
    RankCertificate cert = mrank(base, tol);
    switch (cert.status) {
        case RankStatus::kCertified:
            e.verdict = Verdict::kRank;
            e.rank = cert.rank;
            e.has_rank = true;
            e.detail = cert.exact ? "certificate is exact" : "certificate is numeric";
            break;
        case RankStatus::kErrorNotSimple:
            e.verdict = Verdict::kNotSimple;
            e.rank = cert.rank;
            e.has_rank = true;
            e.detail = "algorithm rejected a repeated characteristic root";
            break;
        default:
            e.verdict = Verdict::kNoFiniteRank;
            e.detail = "algorithm exhausted the prefix";
            break;
    }
    return e;
}

std::string describe(const TfaeReport::Entry& e) {
    std::ostringstream os;
    os << to_string(e.verdict);
    if (e.has_rank) os << " (order " << e.rank << ")";
    return os.str();
}

}  // namespace

TfaeReport tfae_crosscheck(const SequenceWindow& seq, double tol) {
    TfaeReport report;
    SequenceWindow base = seq.reindexed(0);

    if (base.all_zero()) {
        report.zero_sequence = true;
        report.agree = true;
        for (const char* name :
             {"minimal-recurrence simplicity", "hankel determinant profile",
              "generating-function poles", "recurrence-ideal radicality",
              "moment-rank algorithm"}) {
            TfaeReport::Entry e;
            e.condition = name;
            e.verdict = Verdict::kRank;
            e.rank = 0;
            e.has_rank = true;
            e.detail = "zero sequence, rank 0 by convention";
            report.entries.push_back(std::move(e));
        }
        return report;
    }

    report.entries.push_back(simple_recurrence_condition(base));
    report.entries.push_back(hankel_profile_condition(base));
    report.entries.push_back(pole_structure_condition(base));
    report.entries.push_back(radical_ideal_condition(base));
    report.entries.push_back(algorithm_condition(base, tol));

    const TfaeReport::Entry& head = report.entries.front();
    report.agree = true;
    for (const TfaeReport::Entry& e : report.entries) {
        if (e.verdict != head.verdict || e.has_rank != head.has_rank ||
            (e.has_rank && e.rank != head.rank)) {
            report.agree = false;
            report.disagreement = "'" + head.condition + "' reports " + describe(head) + " but '" +
                                  e.condition + "' reports " + describe(e);
            break;
        }
    }
    return report;
}

}  // namespace seqrank
