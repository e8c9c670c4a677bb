#include "tropenum/tropoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "tropenum/errors.hpp"

namespace tropenum {

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

TropicalPolynomial::TropicalPolynomial(const std::vector<Term>& terms) {
  if (terms.empty()) throw EmptySupport();
  for (const auto& [point, coeff] : terms) {
    if (!terms_.emplace(point, coeff).second)
      throw DuplicateTerm("exponent " + to_string(point) + " appears more than once");
  }
}

std::vector<LatticePoint> TropicalPolynomial::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Rational TropicalPolynomial::evaluate(const Rational& x, const Rational& y) const {
  auto it = terms_.begin();
  Rational best = x * it->first.i + y * it->first.j + it->second;
  for (++it; it != terms_.end(); ++it) {
    Rational v = x * it->first.i + y * it->first.j + it->second;
    if (v > best) best = std::move(v);
  }
  return best;
}

std::vector<LatticePoint> TropicalPolynomial::argmax_terms(const Rational& x,
                                                           const Rational& y) const {
  std::vector<LatticePoint> winners;
  Rational best;
  for (const auto& [p, c] : terms_) {
    Rational v = x * p.i + y * p.j + c;
    if (winners.empty() || v > best) {
      best = std::move(v);
      winners.assign(1, p);
    } else if (v == best) {
      winners.push_back(p);
    }
  }
  return winners;
}

TropicalPolynomial TropicalPolynomial::translated(const Rational& k) const {
  std::vector<Term> shifted;
  shifted.reserve(terms_.size());
  for (const auto& [p, c] : terms_) shifted.emplace_back(p, c + k);
  return TropicalPolynomial(shifted);
}

TropicalPolynomial make_polynomial(const std::vector<TropicalPolynomial::Term>& terms) {
  return TropicalPolynomial(terms);
}

// ---------------------------------------------------------------------------
// Term table

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  bool ok = !tok.empty();
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    ok = false;
  }
  if (!ok || pos != tok.size() || tok.front() == '+')
    throw SyntaxError("expected integer exponent, got '" + tok + "'", line);
  return value;
}

}  // namespace

TropicalPolynomial parse_term_table(std::string_view text) {
  std::vector<TropicalPolynomial::Term> terms;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw SyntaxError("expected '<i> <j> <c>', got " + std::to_string(toks.size()) + " fields",
                        line_no);
    const LatticePoint p{parse_int(toks[0], line_no), parse_int(toks[1], line_no)};
    Rational c;
    try {
      c = parse_rational(toks[2]);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), line_no);
    }
    terms.emplace_back(p, std::move(c));
  }
  return TropicalPolynomial(terms);
}

std::string render(const TropicalPolynomial& poly) {
  std::string out;
  for (const auto& [p, c] : poly.terms()) {
    if (!out.empty()) out += '\n';
    out += std::to_string(p.i) + " " + std::to_string(p.j) + " " + to_string(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression grammar
//
//   expr := "max" "(" term { "," term } ")"
//   term := part { ("+"|"-") part }
//   part := rat | [rat "*"?] ("x"|"y")
//   rat  := ["-"] digits ["/" digits]

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  TropicalPolynomial parse() {
    expect_word("max");
    expect('(');
    std::vector<TropicalPolynomial::Term> terms;
    terms.push_back(term());
    while (accept(',')) terms.push_back(term());
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return TropicalPolynomial(terms);
  }

 private:
  struct Affine {
    BigInt sx = 0;
    BigInt sy = 0;
    Rational c = 0;
  };

  TropicalPolynomial::Term term() {
    Affine acc;
    // A sign in front of the first part is accepted as a convenience.
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    part(acc, sign);
    for (;;) {
      if (accept('+')) part(acc, 1);
      else if (accept('-')) part(acc, -1);
      else break;
    }
    const auto narrow = [&](const BigInt& v) {
      if (v > std::numeric_limits<std::int64_t>::max() ||
          v < std::numeric_limits<std::int64_t>::min())
        fail("slope out of range");
      return v.convert_to<std::int64_t>();
    };
    return {LatticePoint{narrow(acc.sx), narrow(acc.sy)}, acc.c};
  }

  void part(Affine& acc, int sign) {
    skip_ws();
    Rational coeff = 1;
    bool has_coeff = false;
    if (pos_ < text_.size() && (std::isdigit(peek()) || peek() == '-')) {
      coeff = rat();
      has_coeff = true;
      accept('*');
    }
    skip_ws();
    if (pos_ < text_.size() && (peek() == 'x' || peek() == 'y')) {
      const char var = text_[pos_++];
      if (boost::multiprecision::denominator(coeff) != 1) fail("slopes must be integers");
      const BigInt slope = boost::multiprecision::numerator(coeff) * sign;
      (var == 'x' ? acc.sx : acc.sy) += slope;
      return;
    }
    if (!has_coeff) fail("expected a number, 'x' or 'y'");
    acc.c += coeff * sign;
  }

  Rational rat() {
    skip_ws();
    const std::size_t begin = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
    }
    return parse_rational(text_.substr(begin, pos_ - begin));
  }

  void digits() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == begin) fail("expected digits");
  }

  unsigned char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at column " + std::to_string(pos_ + 1), 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TropicalPolynomial parse_expression(std::string_view text) {
  return ExpressionParser(text).parse();
}

// ---------------------------------------------------------------------------
// Geometry of the support

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;

  // Andrew's monotone chain, strict turns only.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<LatticePoint> newton_polygon(const TropicalPolynomial& poly) {
  return convex_hull(poly.support());
}

std::optional<int> standard_degree(const TropicalPolynomial& poly) {
  const auto hull = newton_polygon(poly);
  if (hull.size() != 3) return std::nullopt;
  const std::int64_t d = hull[1].i;
  if (d < 1 || hull[0] != LatticePoint{0, 0} || hull[1] != LatticePoint{d, 0} ||
      hull[2] != LatticePoint{0, d})
    return std::nullopt;
  return static_cast<int>(d);
}

std::int64_t doubled_area(const std::vector<LatticePoint>& polygon) {
  std::int64_t twice = 0;
  for (std::size_t k = 0; k < polygon.size(); ++k)
    twice += cross(polygon[k], polygon[(k + 1) % polygon.size()]);
  return twice;
}

std::int64_t interior_points(LatticePoint a, LatticePoint b, LatticePoint c) {
  const auto steps = [](LatticePoint u, LatticePoint v) { return std::gcd(v.i - u.i, v.j - u.j); };
  const std::int64_t twice_area = std::abs(orient(a, b, c));
  const std::int64_t boundary = steps(a, b) + steps(b, c) + steps(c, a);
  // Pick: A = i + b/2 - 1.
  return (twice_area - boundary + 2) / 2;
}

}  // namespace tropenum
