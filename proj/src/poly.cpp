#include "seqrank/poly.hpp"

#include <algorithm>
#include <utility>

namespace seqrank {

ExactPoly ExactPoly::monomial(std::size_t k, const GaussianRational& coeff) {
    std::vector<GaussianRational> c(k + 1);
    c[k] = coeff;
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::operator-() const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return ExactPoly(std::move(c));
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ExactPoly(std::move(c));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ExactPoly(std::move(c));
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::operator*(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::monic() const {
    const GaussianRational& lc = leading();
    if (lc == GaussianRational(1)) return *this;
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / lc;
    return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::reciprocal() const {
    if (is_zero()) throw DegenerateInput("reciprocal of the zero polynomial");
    std::vector<GaussianRational> c(c_.rbegin(), c_.rend());
    return ExactPoly(std::move(c));
}

GaussianRational ExactPoly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

GaussianRational eval_poly(const ExactPoly& p, const GaussianRational& z) { return p.eval(z); }

std::string ExactPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const GaussianRational& a = c_[k];
        if (a.is_zero()) continue;
        bool lead = out.empty();
        std::string mag;
        bool negated = false;
        bool pure_imag = a.real() == 0 && !a.is_zero();
        if (a.is_real() && a.real() < 0) {
            negated = true;
            mag = (-a).str();
        } else if (pure_imag && a.imag() < 0) {
            negated = true;
            mag = (-a).str();
        } else {
            mag = a.str();
        }
        if (!a.is_real() && !pure_imag) mag = "(" + mag + ")";
        if (lead)
            out += negated ? "-" : "";
        else
            out += negated ? " - " : " + ";
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<ExactPoly, ExactPoly> poly_divmod(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero() || a.degree() < b.degree()) return {ExactPoly{}, a};
    std::vector<GaussianRational> rem(a.coeffs());
    std::size_t db = b.degree();
    const GaussianRational& lb = b.leading();
    std::vector<GaussianRational> quot(a.degree() - db + 1);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        GaussianRational q = rem[k] / lb;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
    }
    return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

namespace {

/// Multiply every coefficient by the lcm of all re/im denominators, giving a
/// Gaussian-integer polynomial (still held in rational storage).
ExactPoly clear_denominators(const ExactPoly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.real().get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.imag().get_den().get_mpz_t());
    }
    return p * GaussianRational(Rat(l));
}

/// Pseudo-remainder: prem(a, b) = (lc(b)^{da-db+1} * a) mod b, all divisions exact.
ExactPoly pseudo_rem(const ExactPoly& a, const ExactPoly& b) {
    std::size_t da = a.degree(), db = b.degree();
    GaussianRational lb = b.leading();
    std::vector<GaussianRational> rem(a.coeffs());
    for (std::size_t k = da + 1; k-- > db;) {
        GaussianRational top = rem[k];
        for (std::size_t j = 0; j < rem.size(); ++j) rem[j] = rem[j] * lb;
        if (!top.is_zero())
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= top * b.coeff(j);
        rem[k] = GaussianRational{};  // cancellation is exact; force it
    }
    rem.resize(db);
    return ExactPoly(std::move(rem));
}

GaussianRational gr_pow(const GaussianRational& z, std::size_t e) {
    GaussianRational acc(1);
    for (std::size_t k = 0; k < e; ++k) acc *= z;
    return acc;
}

}  // namespace

ExactPoly poly_gcd(const ExactPoly& p, const ExactPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();

    ExactPoly a = clear_denominators(p);
    ExactPoly b = clear_denominators(q);
    if (a.degree() < b.degree()) std::swap(a, b);

    // Subresultant PRS (Brown/Traub): divide each pseudo-remainder by g*h^d,
    // an exact division over the Gaussian integers, to tame growth.
    GaussianRational g(1), h(1);
    while (true) {
        if (b.degree() == 0) return ExactPoly::constant(1);
        std::size_t d = a.degree() - b.degree();
        ExactPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return b.monic();
        GaussianRational divisor = g * gr_pow(h, d);
        a = b;
        b = r * (GaussianRational(1) / divisor);
        g = a.leading();
        // h = g^d * h^{1-d}
        h = (d == 0) ? h : gr_pow(g, d) / gr_pow(h, d - 1);
    }
}

bool is_squarefree(const ExactPoly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree test on the zero polynomial");
    if (p.degree() < 1) throw DegenerateInput("squarefree test on a constant");
    if (p.degree() == 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

GaussianRational resultant(const ExactPoly& p, const ExactPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant with a zero polynomial");
    // Classical Euclidean recursion over the field:
    //   res(f, g) = (-1)^{df*dg} lc(g)^{df-dr} res(g, r),  r = f mod g.
    ExactPoly f = p, g = q;
    GaussianRational acc(1);
    bool flip = false;
    while (true) {
        std::size_t df = f.degree(), dg = g.degree();
        if (dg == 0) {
            acc *= gr_pow(g.coeff(0), df);
            break;
        }
        ExactPoly r = poly_divmod(f, g).second;
        if (r.is_zero()) return GaussianRational{};  // common factor
        std::size_t dr = r.degree();
        acc *= gr_pow(g.leading(), df - dr);
        if ((df % 2) == 1 && (dg % 2) == 1) flip = !flip;
        f = g;
        g = r;
    }
    return flip ? -acc : acc;
}

GaussianRational discriminant(const ExactPoly& p) {
    if (p.is_zero() || p.degree() < 2) throw DegenerateInput("discriminant needs degree >= 2");
    std::size_t n = p.degree();
    ExactPoly dp = p.derivative();
    if (dp.is_zero()) throw DegenerateInput("discriminant of a constant derivative");
    GaussianRational res = resultant(p, dp) / p.leading();
    return ((n * (n - 1) / 2) % 2 == 1) ? -res : res;
}

std::vector<std::pair<ExactPoly, std::size_t>> squarefree_decomposition(const ExactPoly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<ExactPoly, std::size_t>> out;
    if (p.degree() == 0) return out;
    ExactPoly f = p.monic();
    if (f.degree() == 1) {
        out.emplace_back(f, 1);
        return out;
    }
    // Yun's algorithm: works over any field of characteristic zero.
    ExactPoly df = f.derivative();
    ExactPoly a0 = poly_gcd(f, df);
    ExactPoly b = poly_divmod(f, a0).first;
    ExactPoly c = poly_divmod(df, a0).first;
    ExactPoly d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        ExactPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = poly_divmod(b, a).first;
        c = poly_divmod(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

}  // namespace seqrank
