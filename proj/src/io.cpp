/**
 * @file io.cpp
 * @brief Input-file parsing, certificate rendering, and the CLI command
 *        bodies. Everything here is presentation and plumbing; the math
 *        lives behind ranks.hpp and analytic.hpp.
 */

#include "seqrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "seqrank/poly.hpp"
#include "seqrank/roots.hpp"

namespace seqrank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Strip a `#` comment; no valid scalar contains the character, so this is
/// safe mid-line as well as at the start.
std::string_view strip_comment(std::string_view s) {
    return s.substr(0, std::min(s.size(), s.find('#')));
}

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        std::size_t b = k;
        while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k > b) out.emplace_back(s.substr(b, k - b));
    }
    return out;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

/// Nested ParseErrors would otherwise stack "parse error:" prefixes.
std::string inner_message(const char* what) {
    std::string s = what;
    constexpr std::string_view kPrefix = "parse error: ";
    if (s.rfind(kPrefix, 0) == 0) s.erase(0, kPrefix.size());
    return s;
}

GaussianRational parse_scalar(const std::string& token, std::size_t line_no) {
    try {
        return GaussianRational::parse(token);
    } catch (const ParseError& e) {
        fail_line(line_no, inner_message(e.what()));
    }
}

}  // namespace

SequenceWindow InputDocument::sequence() const {
    if (kind != Kind::kSequence) throw DegenerateInput("document does not hold a sequence");
    return {convention, payload};
}

ExactMatrix InputDocument::matrix() const {
    if (kind != Kind::kMatrix) throw DegenerateInput("document does not hold a matrix");
    return {matrix_dim, matrix_dim, payload};
}

InputDocument parse_sequence_document(std::istream& in) {
    InputDocument doc;
    doc.kind = InputDocument::Kind::kSequence;

    bool saw_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(strip_comment(line));
        if (body.empty()) continue;

        if (body.front() == '@') {
            std::vector<std::string> tokens = split_tokens(body);
            if (tokens[0] != "@index") fail_line(line_no, "unknown directive '" + tokens[0] + "'");
            if (saw_header) fail_line(line_no, "duplicate @index header");
            if (!doc.payload.empty())
                fail_line(line_no, "@index header must precede the sequence values");
            if (tokens.size() != 2 || (tokens[1] != "0" && tokens[1] != "1"))
                fail_line(line_no, "@index takes a single value, 0 or 1");
            doc.convention = tokens[1] == "1" ? 1 : 0;
            saw_header = true;
            continue;
        }

        // One scalar per line; rejecting extra tokens here keeps "3 5" from
        // silently concatenating under the whitespace-blind literal parser.
        std::vector<std::string> tokens = split_tokens(body);
        if (tokens.size() != 1) fail_line(line_no, "expected one scalar per line");
        doc.payload.push_back(parse_scalar(tokens[0], line_no));
    }
    if (doc.payload.empty()) throw ParseError("no sequence values in input");
    return doc;
}

InputDocument parse_matrix_document(std::istream& in) {
    InputDocument doc;
    doc.kind = InputDocument::Kind::kMatrix;

    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '@') fail_line(line_no, "matrix files take no directives");

        std::vector<std::string> tokens = split_tokens(body);
        if (rows == 0)
            width = tokens.size();
        else if (tokens.size() != width)
            fail_line(line_no, "row has " + std::to_string(tokens.size()) + " entries, expected " +
                                   std::to_string(width));
        for (const std::string& tok : tokens) doc.payload.push_back(parse_scalar(tok, line_no));
        ++rows;
    }
    if (rows == 0) throw ParseError("no matrix rows in input");
    if (rows != width)
        throw ParseError("matrix is " + std::to_string(rows) + " x " + std::to_string(width) +
                         ", expected square");
    doc.matrix_dim = width;
    return doc;
}

std::string decimal17(double v) {
    if (v == 0.0) return "0";  // folds -0 as well
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string value_str(const ComplexValue& v) {
    if (v.exact) return v.exact->str();
    double re = v.approx.real();
    double im = v.approx.imag();
    if (im == 0.0) return decimal17(re);
    std::string imag = decimal17(std::abs(im)) + "i";
    if (re == 0.0) return (im < 0 ? "-" : "") + imag;
    return decimal17(re) + (im < 0 ? "-" : "+") + imag;
}

namespace {

bool plain_integer(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

/// Multiplying coefficient in front of z^k, k >= 1: 1 is elided, bare
/// integers and i attach directly, anything fractional or mixed gets parens.
std::string coeff_factor(const std::string& mag) {
    if (mag == "1") return "";
    if (mag == "i" || plain_integer(mag)) return mag;
    return "(" + mag + ")";
}

}  // namespace

std::string series_str(const ExactPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        const GaussianRational& c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string s = c.str();
        bool neg = s.front() == '-';
        std::string mag = neg ? (GaussianRational(0) - c).str() : s;

        std::string term;
        if (k == 0) {
            bool mixed = mag.find('+') != std::string::npos || mag.find('-') != std::string::npos;
            term = mixed ? "(" + mag + ")" : mag;
        } else {
            term = coeff_factor(mag) + var;
            if (k >= 2) term += "^" + std::to_string(k);
        }

        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

ordered_json value_json(const ComplexValue& v) {
    ordered_json j;
    j["re"] = decimal17(v.approx.real());
    j["im"] = decimal17(v.approx.imag());
    if (v.exact) j["exact"] = v.exact->str();
    return j;
}

ordered_json values_json(const std::vector<ComplexValue>& vs) {
    ordered_json arr = ordered_json::array();
    for (const ComplexValue& v : vs) arr.push_back(value_json(v));
    return arr;
}

ordered_json certificate_obj(const RankCertificate& cert) {
    ordered_json j;
    j["kind"] = to_string(cert.kind);
    j["status"] = to_string(cert.status);
    j["rank"] = cert.rank;
    j["zero_sequence"] = cert.zero_sequence;
    ordered_json coeffs = ordered_json::array();
    if (!cert.char_poly.is_zero())
        for (std::size_t k = 0; k <= cert.char_poly.degree(); ++k)
            coeffs.push_back(cert.char_poly.coeff(k).str());
    j["char_poly"] = std::move(coeffs);
    j["atoms"] = values_json(cert.atoms);
    j["masses"] = values_json(cert.masses);
    j["exact"] = cert.exact;
    j["residual"] = decimal17(cert.residual);
    j["verified_shifts"] = cert.verified_shifts;
    return j;
}

void value_lines(std::ostringstream& os, const std::string& label,
                 const std::vector<ComplexValue>& vs) {
    if (vs.empty()) return;
    os << label << ":\n";
    for (std::size_t i = 0; i < vs.size(); ++i)
        os << "  [" << i << "] " << value_str(vs[i]) << "\n";
}

}  // namespace

std::string certificate_text(const RankCertificate& cert) {
    std::ostringstream os;
    os << "kind: " << to_string(cert.kind) << " rank\n";
    os << "status: " << to_string(cert.status) << "\n";
    os << "rank: " << cert.rank << "\n";
    if (cert.zero_sequence) os << "zero sequence: rank 0 by convention\n";
    if (!cert.char_poly.is_zero())
        os << "characteristic polynomial: " << cert.char_poly.str("x") << "\n";
    value_lines(os, "atoms", cert.atoms);
    value_lines(os, "masses", cert.masses);
    os << "exact: " << (cert.exact ? "yes" : "no") << "\n";
    os << "residual: " << decimal17(cert.residual) << "\n";
    os << "verified shifts: " << cert.verified_shifts << "\n";
    return os.str();
}

std::string certificate_json(const RankCertificate& cert) {
    return certificate_obj(cert).dump(2) + "\n";
}

double reverify_measure(const SequenceWindow& seq, const AtomicMeasure& mu) {
    if (seq.start_index() != 0 && seq.start_index() != 1)
        throw IndexConventionError("re-verification needs a window indexed from 0 or 1");
    MomentConvention convention = seq.start_index() == 1 ? MomentConvention::kUnitaryRank
                                                         : MomentConvention::kMomentRank;

    if (mu.all_exact()) {
        SequenceWindow forward = moments(mu, seq.size(), convention);
        for (std::size_t k = 0; k < seq.size(); ++k)
            if (!(forward.nth(k) == seq.nth(k)))
                throw CrossCheckDefect("recovered measure fails to reproduce term " +
                                       std::to_string(seq.front_index() + static_cast<long>(k)));
        return 0.0;
    }

    // Under either convention the k-th stored term carries exponent k+1.
    double scale = 1.0;
    for (std::size_t k = 0; k < seq.size(); ++k)
        scale = std::max(scale, std::abs(seq.nth(k).to_complex()));
    std::vector<std::complex<double>> power(mu.atoms.size());
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) power[i] = mu.atoms[i].approx;
    double worst = 0.0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
            sum += mu.masses[i].approx * power[i];
            power[i] *= mu.atoms[i].approx;
        }
        worst = std::max(worst, std::abs(sum - seq.nth(k).to_complex()));
    }
    return worst / scale;
}

std::string recovery_text(const SequenceWindow& seq, const MeasureRecovery& rec) {
    std::ostringstream os;
    os << certificate_text(rec.certificate);
    if (!rec.measure) {
        os << "measure: none recovered\n";
        return os.str();
    }
    const AtomicMeasure& mu = *rec.measure;
    os << "measure:\n";
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        os << "  [" << i << "] atom " << value_str(mu.atoms[i]) << ", mass "
           << value_str(mu.masses[i]) << "\n";
    if (mu.atoms.empty()) os << "  (empty: zero sequence)\n";
    os << "re-verification residual: " << decimal17(reverify_measure(seq, mu)) << "\n";
    return os.str();
}

std::string recovery_json(const SequenceWindow& seq, const MeasureRecovery& rec) {
    ordered_json j;
    j["certificate"] = certificate_obj(rec.certificate);
    if (rec.measure) {
        ordered_json m;
        m["atoms"] = values_json(rec.measure->atoms);
        m["masses"] = values_json(rec.measure->masses);
        j["measure"] = std::move(m);
        j["reverification_residual"] = decimal17(reverify_measure(seq, *rec.measure));
    } else {
        j["measure"] = nullptr;
        j["reverification_residual"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string genfun_display(const RationalGenFun& gf) {
    std::string num = series_str(gf.numerator);
    const ExactPoly& den = gf.denominator;
    if (den.degree() == 0) return num;
    if (gf.poles_simple) return num + " / (" + series_str(den) + ")";

    // Repeated poles: show the denominator factored, each squarefree factor
    // rescaled to constant term 1 so the product still multiplies out to den.
    std::string out = num + " / ";
    for (const auto& [factor, mult] : squarefree_decomposition(den)) {
        ExactPoly scaled = factor * (GaussianRational(1) / factor.coeff(0));
        out += "(" + series_str(scaled) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::string genfun_text(const RationalGenFun& gf) {
    std::ostringstream os;
    os << "G(z) = " << genfun_display(gf) << "\n";
    os << "numerator: " << series_str(gf.numerator) << "\n";
    os << "denominator: " << series_str(gf.denominator) << "\n";
    os << "proper: " << (gf.proper ? "yes" : "no") << "\n";
    if (gf.pole_list.empty()) {
        os << "poles: none\n";
    } else {
        os << "poles:\n";
        for (const LabeledRoot& p : gf.pole_list)
            os << "  " << value_str(p.value) << " (multiplicity " << p.multiplicity << ")\n";
    }
    if (!gf.poles_simple) os << "warning: repeated pole; the sequence is not simple\n";
    return os.str();
}

std::string tfae_text(const TfaeReport& report) {
    std::ostringstream os;
    os << "cross-check over " << report.entries.size() << " conditions\n";
    if (report.zero_sequence) os << "zero sequence: rank 0 by convention\n";
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
        const TfaeReport::Entry& e = report.entries[k];
        const TfaeReport::Entry& ref = report.entries.front();
        bool diverges = e.verdict != ref.verdict || e.has_rank != ref.has_rank ||
                        (e.has_rank && e.rank != ref.rank);
        os << (diverges ? "* [" : "  [") << k + 1 << "] " << e.condition << ": "
           << to_string(e.verdict);
        if (e.has_rank) os << " = " << e.rank;
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << "\n";
    }
    if (report.agree)
        os << "agreement: all conditions concur\n";
    else
        os << "agreement: DISAGREEMENT\n  " << report.disagreement << "\n";
    return os.str();
}

WalkReport walk_spectrum(const ExactMatrix& a, double tol) {
    if (!a.is_square()) throw ShapeError("walk analysis needs a square matrix");
    if (a.rows() == 0) throw DegenerateInput("empty matrix");

    WalkReport report;
    const std::size_t n = a.rows();
    report.dim = n;

    ExactMatrix p = a;
    for (std::size_t k = 1; k <= 2 * n; ++k) {
        if (k > 1) p = p * a;
        GaussianRational t;
        for (std::size_t i = 0; i < n; ++i) t = t + p.at(i, i);
        report.traces.push_back(t);
    }

    report.certificate = urank(SequenceWindow(1, report.traces), tol);

    bool real_entries = std::all_of(a.entries().begin(), a.entries().end(),
                                    [](const GaussianRational& g) { return g.is_real(); });
    report.symmetric = real_entries && a == a.transpose();
    if (report.symmetric) report.rank_by_elimination = elimination_rank(a);

    if (report.certificate.status == RankStatus::kCertified) {
        report.nonzero_eigenvalues = report.certificate.rank;
        report.zero_multiplicity = n - std::min(report.certificate.rank, n);
        if (report.rank_by_elimination && *report.rank_by_elimination != report.certificate.rank)
            throw CrossCheckDefect(
                "trace spectrum counts " + std::to_string(report.certificate.rank) +
                " nonzero eigenvalues but elimination rank is " +
                std::to_string(*report.rank_by_elimination));
    }
    return report;
}

std::string walk_text(const WalkReport& report) {
    std::ostringstream os;
    os << "matrix: " << report.dim << " x " << report.dim
       << (report.symmetric ? " (real symmetric)" : "") << "\n";
    os << "traces tr(A^n), n = 1.." << report.traces.size() << ":";
    for (std::size_t k = 0; k < report.traces.size(); ++k)
        os << (k == 0 ? " " : ", ") << report.traces[k].str();
    os << "\n";
    os << "unitary rank status: " << to_string(report.certificate.status) << "\n";
    if (report.certificate.status == RankStatus::kCertified) {
        os << "nonzero eigenvalues (with algebraic multiplicity): " << report.nonzero_eigenvalues
           << "\n";
        os << "zero eigenvalue multiplicity: " << report.zero_multiplicity << "\n";
        if (!report.certificate.atoms.empty()) {
            os << "eigenvalues:\n";
            for (std::size_t i = 0; i < report.certificate.atoms.size(); ++i)
                os << "  " << value_str(report.certificate.atoms[i]) << " (multiplicity "
                   << value_str(report.certificate.masses[i]) << ")\n";
        }
    }
    if (report.rank_by_elimination) {
        os << "elimination rank: " << *report.rank_by_elimination;
        if (report.certificate.status == RankStatus::kCertified) os << " (matches)";
        os << "\n";
    }
    return os.str();
}

namespace {

int exit_for(RankStatus status) {
    switch (status) {
        case RankStatus::kCertified: return 0;
        case RankStatus::kErrorNotSimple: return 2;
        case RankStatus::kNoFiniteRankWithinPrefix: return 3;
        case RankStatus::kNonIntegerMasses: return 4;
    }
    return 1;
}

InputDocument load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_sequence_document(in);
}

InputDocument load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_matrix_document(in);
}

int report_error(std::ostream& err, const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
}

}  // namespace

int cmd_rank(const std::string& path, const std::string& kind, bool json, std::ostream& out,
             std::ostream& err, double tol) {
    try {
        InputDocument doc = load_sequence(path);
        std::string effective = kind;
        if (effective.empty()) effective = doc.convention == 1 ? "urank" : "mrank";

        SequenceWindow seq = doc.sequence();
        RankCertificate cert;
        if (effective == "rrank")
            cert = rrank(seq.start_index() == 0 ? seq : seq.reindexed(0));
        else if (effective == "mrank")
            cert = mrank(seq, tol);
        else if (effective == "urank")
            cert = urank(seq, tol);
        else
            throw DegenerateInput("unknown rank kind '" + effective + "'");

        out << (json ? certificate_json(cert) : certificate_text(cert));
        return exit_for(cert.status);
    } catch (const Error& e) {
        return report_error(err, e);
    }
}

int cmd_recover(const std::string& path, bool json, std::ostream& out, std::ostream& err,
                double tol) {
    try {
        InputDocument doc = load_sequence(path);
        SequenceWindow seq = doc.sequence();
        MeasureRecovery rec = recover_measure(seq, tol);
        out << (json ? recovery_json(seq, rec) : recovery_text(seq, rec));
        return exit_for(rec.certificate.status);
    } catch (const Error& e) {
        return report_error(err, e);
    }
}

int cmd_genfun(const std::string& path, std::ostream& out, std::ostream& err, double tol) {
    (void)tol;  // construction is exact; poles come off the exact char poly
    try {
        InputDocument doc = load_sequence(path);
        RationalGenFun gf = genfun(doc.sequence());
        out << genfun_text(gf);
        return 0;
    } catch (const NoGeneratorWithinPrefix& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        return report_error(err, e);
    }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err, double tol) {
    try {
        InputDocument doc = load_sequence(path);
        TfaeReport report = tfae_crosscheck(doc.sequence(), tol);
        out << tfae_text(report);
        return report.agree ? 0 : 5;
    } catch (const Error& e) {
        return report_error(err, e);
    }
}

int cmd_walks(const std::string& path, std::ostream& out, std::ostream& err, double tol) {
    try {
        InputDocument doc = load_matrix(path);
        WalkReport report = walk_spectrum(doc.matrix(), tol);
        out << walk_text(report);
        return exit_for(report.certificate.status);
    } catch (const Error& e) {
        return report_error(err, e);
    }
}

}  // namespace seqrank
