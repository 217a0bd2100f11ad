#include "seqrank/rational.hpp"

#include <cctype>
#include <ostream>

namespace seqrank {

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

/// Rational magnitude with the sign stripped, for the `a-ci` print form.
Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// `c` or `ci`-style imaginary part without a leading `+`.
std::string imag_str(const Rat& q) {
    Rat a = rat_abs(q);
    if (a == 1) return "i";
    return rat_str(a) + "i";
}

bool valid_int_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Parse `a` or `a/b` with optional leading sign.
Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_int_token(num)) throw ParseError("bad integer '" + std::string(num) + "'");
    if (num.front() == '+') num.remove_prefix(1);  // mpz_set_str takes '-' but not '+'
    Int n(std::string(num), 10);
    if (slash == std::string_view::npos) return Rat(n);
    std::string_view den = s.substr(slash + 1);
    if (!valid_int_token(den) || den.front() == '+' || den.front() == '-')
        throw ParseError("bad denominator '" + std::string(den) + "'");
    Int d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return make_rat(n, d);
}

/// Parse the part before the trailing `i`: empty / `+` / `-` mean +-1.
Rat parse_imag_coeff(std::string_view s) {
    if (s.empty() || s == "+") return Rat(1);
    if (s == "-") return Rat(-1);
    return parse_rat(s);
}

}  // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag_str(im_);
    return rat_str(re_) + (im_ < 0 ? "-" : "+") + imag_str(im_);
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    if (s.back() != 'i') return GaussianRational(parse_rat(s));

    std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that starts the imaginary part: not the leading
    // sign and not a sign directly after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {Rat(0), parse_imag_coeff(body)};
    Rat re = parse_rat(body.substr(0, split));
    std::string_view imag = body.substr(split);  // keeps the sign
    Rat im = (imag.size() == 1) ? (imag[0] == '-' ? Rat(-1) : Rat(1)) : parse_rat(imag);
    return {std::move(re), std::move(im)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

}  // namespace seqrank
