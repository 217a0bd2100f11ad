#include "seqrank/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace seqrank {

bool magnitude_phase_less(const std::complex<double>& a, const std::complex<double>& b) {
    double ma = std::abs(a), mb = std::abs(b);
    double scale = std::max({1.0, ma, mb});
    if (std::abs(ma - mb) > 1e-12 * scale) return ma < mb;
    double pa = std::arg(a), pb = std::arg(b);
    if (std::abs(pa - pb) > 1e-12) return pa < pb;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

namespace {

constexpr double kDoubleEps = 2.220446049250313e-16;

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Backward-error scale sum_i |c_i| max(1,|z|)^i.
double error_scale(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    double t = std::max(1.0, std::abs(z));
    double pw = 1.0, s = 0.0;
    for (const auto& ci : c) {
        s += std::abs(ci) * pw;
        pw *= t;
    }
    return s;
}

/// Aberth–Ehrlich on a squarefree monic-normalizable polynomial given by
/// exact coefficients. Returns all roots (simple by assumption).
std::vector<std::complex<double>> aberth(const ExactPoly& f, double tol) {
    std::vector<std::complex<double>> out;
    ExactPoly g = f;
    // An exactly-zero constant term is an exact root at the origin; splitting
    // it off keeps the iteration away from a known zero divisor.
    while (!g.is_zero() && g.degree() >= 1 && g.coeff(0).is_zero()) {
        out.emplace_back(0.0, 0.0);
        std::vector<GaussianRational> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = ExactPoly(std::move(shifted));
    }
    std::size_t d = g.degree();
    if (d == 0) return out;
    if (d == 1) {
        out.push_back((-g.coeff(0) / g.coeff(1)).to_complex());
        return out;
    }

    std::vector<std::complex<double>> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = (g.coeff(i) / g.leading()).to_complex();
    std::vector<std::complex<double>> dc(d);
    for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * static_cast<double>(i);

    double cauchy = 0.0;
    for (std::size_t i = 0; i < d; ++i) cauchy = std::max(cauchy, std::abs(c[i]));
    cauchy = 1.0 + cauchy;
    // |c_0| is the product of the root moduli, so its d-th root sits at their
    // geometric mean — a far better starting circle than the Cauchy bound.
    double geometric = std::pow(std::abs(c[0]), 1.0 / static_cast<double>(d));

    constexpr int kMaxIterations = 200;
    const double start_radius[] = {geometric, cauchy, 3.0 * geometric};
    for (int attempt = 0; attempt < 3; ++attempt) {
        double radius = start_radius[attempt];
        std::vector<std::complex<double>> z(d);
        std::vector<bool> frozen(d, false);
        for (std::size_t k = 0; k < d; ++k) {
            double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(d) +
                           0.39 + 0.83 * attempt;
            double rk = radius * (0.9 + 0.2 * static_cast<double>((k * 7919u) % 7) / 7.0);
            z[k] = std::polar(rk, angle);
        }
        bool converged = false;
        for (int it = 0; it < kMaxIterations && !converged; ++it) {
            converged = true;
            for (std::size_t k = 0; k < d; ++k) {
                if (frozen[k]) continue;
                std::complex<double> pv = horner(c, z[k]);
                // Evaluation at the rounding noise floor: no double-precision
                // step can improve this root, stop asking for one.
                if (std::abs(pv) <= 4.0 * kDoubleEps * error_scale(c, z[k])) {
                    frozen[k] = true;
                    continue;
                }
                std::complex<double> dv = horner(dc, z[k]);
                if (dv == std::complex<double>(0.0, 0.0)) {
                    z[k] += std::complex<double>(1e-6 * radius, 1e-6 * radius);
                    converged = false;
                    continue;
                }
                std::complex<double> ratio = pv / dv;
                std::complex<double> repel = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == k) continue;
                    std::complex<double> diff = z[k] - z[j];
                    if (diff == std::complex<double>(0.0, 0.0)) diff = {1e-12 * radius, 0.0};
                    repel += 1.0 / diff;
                }
                std::complex<double> denom = 1.0 - ratio * repel;
                std::complex<double> step =
                    denom == std::complex<double>(0.0, 0.0) ? ratio : ratio / denom;
                z[k] -= step;
                if (std::abs(step) <= tol * std::max(1.0, std::abs(z[k])))
                    frozen[k] = true;
                else
                    converged = false;
            }
        }
        if (!converged) continue;
        // Newton polish, then the backward-error gate.
        bool certified = true;
        for (std::size_t k = 0; k < d; ++k) {
            for (int polish = 0; polish < 2; ++polish) {
                std::complex<double> dv = horner(dc, z[k]);
                if (dv == std::complex<double>(0.0, 0.0)) break;
                z[k] -= horner(c, z[k]) / dv;
            }
            if (std::abs(horner(c, z[k])) > tol * error_scale(c, z[k])) {
                certified = false;
                break;
            }
        }
        if (!certified) continue;
        out.insert(out.end(), z.begin(), z.end());
        return out;
    }
    throw RootFindingFailed("iteration budget exhausted on " + f.str());
}

/// Continued-fraction convergents of x with denominators capped; candidates
/// for the exact value of a numeric quantity, best-first is not needed —
/// every convergent is tested exactly by the caller.
std::vector<Rat> convergents(double x, long cap) {
    std::vector<Rat> out;
    if (!std::isfinite(x)) return out;
    mpz_class p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    mpz_class p = 0, q = 1;            // will hold p_0/q_0 after first step
    double rem = x;
    bool first = true;
    for (int step = 0; step < 64; ++step) {
        double fl = std::floor(rem);
        if (std::abs(fl) > 9e17) break;
        mpz_class a(static_cast<long>(fl));
        if (first) {
            p = a;
            q = 1;
            first = false;
        } else {
            mpz_class pn = a * p + p_prev;
            mpz_class qn = a * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
        }
        if (q > mpz_class(cap)) break;
        Rat r(p, q);
        r.canonicalize();
        out.push_back(r);
        double frac = rem - fl;
        if (frac < 1e-14) break;
        rem = 1.0 / frac;
    }
    return out;
}

/// Snap a numeric root of the squarefree factor f back to Q(i); accepted only
/// on exact vanishing.
std::optional<GaussianRational> snap_root(const ExactPoly& f, std::complex<double> z) {
    std::vector<Rat> re = convergents(z.real(), kReconstructDenCap);
    std::vector<Rat> im = convergents(z.imag(), kReconstructDenCap);
    constexpr std::size_t kMaxCandidates = 24;
    if (re.size() > kMaxCandidates) re.resize(kMaxCandidates);
    if (im.size() > kMaxCandidates) im.resize(kMaxCandidates);
    for (const Rat& a : re) {
        if (std::abs(a.get_d() - z.real()) > 1e-6) continue;
        for (const Rat& b : im) {
            if (std::abs(b.get_d() - z.imag()) > 1e-6) continue;
            GaussianRational g(a, b);
            if (f.eval(g).is_zero()) return g;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::complex<double>> find_roots(const ExactPoly& p, double tol) {
    if (p.is_zero() || p.degree() < 1) throw DegenerateInput("root finding needs degree >= 1");
    std::vector<std::complex<double>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<std::complex<double>> zs = aberth(factor, tol);
        for (const auto& z : zs)
            for (std::size_t k = 0; k < mult; ++k) out.push_back(z);
    }
    std::vector<std::complex<double>> c(p.degree() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i).to_complex();
    for (const auto& z : out)
        if (std::abs(horner(c, z)) > tol * error_scale(c, z))
            throw RootFindingFailed("residual gate failed on " + p.str());
    std::sort(out.begin(), out.end(), magnitude_phase_less);
    return out;
}

RootExtraction extract_roots(const ExactPoly& p, double tol) {
    if (p.is_zero() || p.degree() < 1) throw DegenerateInput("root extraction needs degree >= 1");
    RootExtraction ex;
    ex.all_exact = true;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<std::complex<double>> zs = aberth(factor, tol);
        std::vector<LabeledRoot> group;
        bool factor_exact = true;
        ExactPoly assembled = ExactPoly::constant(1);
        for (const auto& z : zs) {
            std::optional<GaussianRational> g = snap_root(factor, z);
            if (g) {
                assembled = assembled * ExactPoly{-*g, 1};
                group.push_back({ComplexValue::from_exact(std::move(*g)), mult});
            } else {
                factor_exact = false;
                group.push_back({ComplexValue::numeric(z), mult});
            }
        }
        // Guard against two numeric roots snapping onto one true rational
        // root: the reassembled product must be the factor itself.
        if (factor_exact && assembled != factor.monic()) {
            factor_exact = false;
            for (auto& lr : group) lr.value.exact.reset();
        }
        ex.all_exact = ex.all_exact && factor_exact;
        ex.roots.insert(ex.roots.end(), group.begin(), group.end());
    }
    std::sort(ex.roots.begin(), ex.roots.end(), [](const LabeledRoot& a, const LabeledRoot& b) {
        return magnitude_phase_less(a.value.approx, b.value.approx);
    });
    return ex;
}

std::vector<std::complex<double>> solve_dense(std::vector<std::vector<std::complex<double>>> a,
                                              std::vector<std::complex<double>> b) {
    std::size_t n = b.size();
    if (a.size() != n) throw ShapeError("dense solve dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw ShapeError("dense solve needs a square matrix");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) == 0.0) throw SingularMatrix();
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = a[i][k] / a[k][k];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<std::complex<double>> x(n);
    for (std::size_t i = n; i-- > 0;) {
        std::complex<double> acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace seqrank
