#pragma once

/**
 * @file io.hpp
 * @brief File parsing, certificate rendering (text and JSON), and the
 *        command entry points behind the CLI.
 *
 * Input files carry one exact scalar per line; `#` starts a comment and an
 * optional `@index 0|1` header picks the window origin (0, the moment
 * convention, is the default). Matrix files hold whitespace-separated rows.
 * Machine-readable output is deterministic: fields in fixed order, numerics
 * rendered to 17 significant digits, exact literals attached when known.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqrank/analytic.hpp"
#include "seqrank/matrix.hpp"
#include "seqrank/ranks.hpp"
#include "seqrank/sequence.hpp"

namespace seqrank {

struct InputDocument {
    enum class Kind { kSequence, kMatrix };
    Kind kind = Kind::kSequence;
    long convention = 0;  // @index header value
    std::vector<GaussianRational> payload;
    std::size_t matrix_dim = 0;  // side length when kind == kMatrix

    /// @throws DegenerateInput when the document is not of the matching kind
    SequenceWindow sequence() const;
    ExactMatrix matrix() const;
};

/// @throws ParseError on malformed text, empty payload, or a non-square matrix
InputDocument parse_sequence_document(std::istream& in);
InputDocument parse_matrix_document(std::istream& in);

/// Shortest round-trippable decimal (printed via %.17g), with -0 folded to 0.
std::string decimal17(double v);

/// Exact literal when available, otherwise "re ± im i" at 17 digits.
std::string value_str(const ComplexValue& v);

/// Ascending-power series rendering: "1 - z - z^2".
std::string series_str(const ExactPoly& p, const std::string& var = "z");

std::string certificate_text(const RankCertificate& cert);
std::string certificate_json(const RankCertificate& cert);

/// Max relative error of the measure's forward moments against the window
/// (exactly 0.0 on the exact path, where any mismatch throws instead).
/// @throws CrossCheckDefect when exact moments disagree with the window
double reverify_measure(const SequenceWindow& seq, const AtomicMeasure& mu);

std::string recovery_text(const SequenceWindow& seq, const MeasureRecovery& rec);
std::string recovery_json(const SequenceWindow& seq, const MeasureRecovery& rec);

/// "num / (den)" with the denominator factored when a pole repeats.
std::string genfun_display(const RationalGenFun& gf);
std::string genfun_text(const RationalGenFun& gf);

std::string tfae_text(const TfaeReport& report);

/// Trace sequence t_n = tr(A^n) for n = 1..2*dim, its unitary rank, and the
/// eigenvalue-multiplicity bookkeeping; real symmetric inputs also carry the
/// exact elimination rank, which must match the certified rank.
struct WalkReport {
    std::size_t dim = 0;
    std::vector<GaussianRational> traces;
    RankCertificate certificate;
    std::size_t nonzero_eigenvalues = 0;  // algebraic multiplicity, when certified
    std::size_t zero_multiplicity = 0;
    bool symmetric = false;
    std::optional<std::size_t> rank_by_elimination;
};

/// @throws ShapeError on a non-square matrix
/// @throws CrossCheckDefect when a symmetric input's elimination rank
///         disagrees with the certified unitary rank
WalkReport walk_spectrum(const ExactMatrix& a, double tol = kResidualTol);
std::string walk_text(const WalkReport& report);

/// Command entry points. Each returns the process exit status: 0 certified /
/// agreeing, 2 ErrorNotSimple, 3 NoFiniteRankWithinPrefix, 4
/// NonIntegerMasses, 5 cross-check disagreement (cmd_verify), 1 parse, IO,
/// or internal errors. `kind` is one of "rrank", "mrank", "urank", or ""
/// to follow the file's @index convention.
int cmd_rank(const std::string& path, const std::string& kind, bool json, std::ostream& out,
             std::ostream& err, double tol = kResidualTol);
int cmd_recover(const std::string& path, bool json, std::ostream& out, std::ostream& err,
                double tol = kResidualTol);
int cmd_genfun(const std::string& path, std::ostream& out, std::ostream& err,
               double tol = kResidualTol);
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err,
               double tol = kResidualTol);
int cmd_walks(const std::string& path, std::ostream& out, std::ostream& err,
              double tol = kResidualTol);

}  // namespace seqrank
