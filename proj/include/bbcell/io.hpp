#pragma once

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/dual.hpp"
#include "bbcell/errors.hpp"
#include "bbcell/groebner.hpp"
#include "bbcell/order.hpp"
#include "bbcell/polynomial.hpp"
#include "bbcell/staircase.hpp"

namespace bbcell {

namespace io {

/// Character scanner with 1-based line/column error positions.
class Scanner {
 public:
  Scanner(std::string text, int line = 1) : s_(std::move(text)), line_(line) {}

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  int col() {
    skip_ws();
    return static_cast<int>(pos_) + 1;
  }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line_, static_cast<int>(pos_) + 1, msg);
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoll(s_.substr(start, pos_ - start));
  }

  BigInt big_integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return BigInt(s_.substr(start, pos_ - start));
  }

  std::string word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a word");
    return s_.substr(start, pos_ - start);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  std::string s_;
  size_t pos_ = 0;
  int line_;
};

inline Rational rational_literal(Scanner& sc) {
  BigInt num = sc.big_integer();
  if (sc.accept('/')) {
    BigInt den = sc.big_integer();
    if (den == 0) sc.fail("zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

inline Exponent exponent_tuple(Scanner& sc, int dim) {
  sc.expect('(');
  Exponent e;
  if (!sc.accept(')')) {
    do {
      long long v = sc.integer();
      if (v < 0) sc.fail("exponent entries must be nonnegative");
      e.push_back(static_cast<int>(v));
    } while (sc.accept(','));
    sc.expect(')');
  }
  if (dim > 0 && static_cast<int>(e.size()) != dim)
    sc.fail("expected a tuple of length " + std::to_string(dim));
  return e;
}

inline StandardSet delta_spec(const std::string& text, int dim, int line = 1) {
  Scanner sc(text, line);
  sc.expect('{');
  std::vector<Exponent> elems;
  if (!sc.accept('}')) {
    do {
      elems.push_back(exponent_tuple(sc, dim));
    } while (sc.accept(','));
    sc.expect('}');
  }
  if (!sc.eof()) sc.fail("trailing input after staircase");
  return StandardSet::validate(dim, std::move(elems));
}

/// Weight entries may be rationals; they are cleared to integers by the
/// common denominator.
inline WeightVector weight_spec(const std::string& text, int dim, int line = 1) {
  Scanner sc(text, line);
  sc.expect('(');
  std::vector<Rational> entries;
  do {
    entries.push_back(rational_literal(sc));
  } while (sc.accept(','));
  sc.expect(')');
  if (!sc.eof()) sc.fail("trailing input after weight");
  if (dim > 0 && static_cast<int>(entries.size()) != dim)
    sc.fail("expected " + std::to_string(dim) + " weight entries");
  BigInt lcm_den = 1;
  for (const Rational& r : entries)
    lcm_den = boost::multiprecision::lcm(lcm_den, r.den());
  WeightVector w;
  for (const Rational& r : entries) {
    BigInt v = r.num() * (lcm_den / r.den());
    w.xi.push_back(v.convert_to<long long>());
  }
  return w;
}

/// `+1,+2` style: signed variable positions in priority order.
inline SignedOrder tiebreak_spec(const std::string& text, int dim, int line = 1) {
  Scanner sc(text, line);
  SignedOrder so;
  so.sign.assign(static_cast<size_t>(dim), 1);
  do {
    int sgn = 1;
    if (sc.accept('-'))
      sgn = -1;
    else
      sc.accept('+');
    long long v = sc.integer();
    if (v < 1 || v > dim) sc.fail("variable position out of range");
    so.sign[static_cast<size_t>(v - 1)] = sgn;
    so.perm.push_back(static_cast<int>(v - 1));
  } while (sc.accept(','));
  if (!sc.eof()) sc.fail("trailing input after tie-break");
  if (!so.valid() || static_cast<int>(so.perm.size()) != dim)
    sc.fail("tie-break must list every variable exactly once");
  return so;
}

struct OrderSpec {
  std::optional<WeightVector> weight;
  std::optional<SignedOrder> tiebreak;
  std::optional<Polarity> polarity;
};

/// `w=(1,-1);tiebreak=+1,+2;polarity=+`; every part optional.
inline OrderSpec order_spec(const std::string& text, int dim, int line = 1) {
  OrderSpec spec;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError(line, 1, "order spec parts look like key=value");
    std::string key = part.substr(0, eq);
    std::string value = part.substr(eq + 1);
    if (key == "w")
      spec.weight = weight_spec(value, dim, line);
    else if (key == "tiebreak")
      spec.tiebreak = tiebreak_spec(value, dim, line);
    else if (key == "polarity") {
      Scanner sc(value, line);
      char c = sc.get();
      if (c != '+' && c != '-') sc.fail("polarity is '+' or '-'");
      if (!sc.eof()) sc.fail("trailing input after polarity");
      spec.polarity = c == '+' ? Polarity::kPlus : Polarity::kMinus;
    } else {
      throw ParseError(line, 1, "unknown order spec key '" + key + "'");
    }
  }
  return spec;
}

namespace detail {

struct RawTerm {
  Rational coeff;
  int eps_power = 0;
  Exponent expo;
};

/// term := factor (['*'] factor)* where factor is a rational literal,
/// eps[^k], or x<i>[^k]. Terms are joined by '+'/'-'.
inline std::vector<RawTerm> raw_terms(Scanner& sc, int dim, bool allow_eps) {
  std::vector<RawTerm> out;
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-' between terms");
    first = false;
    RawTerm term{Rational(sign), 0, zero_exponent(dim)};
    bool has_factor = false;
    while (true) {
      bool star = sc.accept('*');
      char c = sc.peek();
      if (star && c != 'e' && c != 'x' &&
          !std::isdigit(static_cast<unsigned char>(c)))
        sc.fail("expected a factor after '*'");
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= rational_literal(sc);
        has_factor = true;
        continue;
      }
      if (c == 'e' || c == 'x') {
        std::string w = sc.word();
        long long pow = 1;
        if (sc.accept('^')) {
          pow = sc.integer();
          if (pow < 0) sc.fail("exponents must be nonnegative");
        }
        if (w == "eps") {
          if (!allow_eps)
            sc.fail("eps is only legal over a dual-number base ring");
          term.eps_power += static_cast<int>(pow);
        } else if (w.size() > 1 && w[0] == 'x') {
          int idx = 0;
          for (size_t k = 1; k < w.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(w[k])))
              sc.fail("unknown symbol '" + w + "'");
            idx = idx * 10 + (w[k] - '0');
          }
          if (idx < 1 || idx > dim)
            sc.fail("variable x" + std::to_string(idx) + " out of range (d=" +
                    std::to_string(dim) + ")");
          term.expo[static_cast<size_t>(idx - 1)] += static_cast<int>(pow);
        } else {
          sc.fail("unknown symbol '" + w + "'");
        }
        has_factor = true;
        continue;
      }
      break;
    }
    if (!has_factor) sc.fail("empty term");
    out.push_back(std::move(term));
    if (sc.eof()) break;
    const char next = sc.peek();
    if (next != '+' && next != '-') sc.fail("expected '+' or '-' between terms");
  }
  if (out.empty()) sc.fail("empty polynomial");
  return out;
}

}  // namespace detail

inline PolyQ poly_q(const std::string& text, int dim, int line = 1) {
  Scanner sc(text, line);
  std::vector<PolyQ::Term> terms;
  for (auto& t : detail::raw_terms(sc, dim, false))
    terms.emplace_back(std::move(t.expo), std::move(t.coeff));
  return PolyQ::from_terms(dim, CoeffRing::rational(), std::move(terms));
}

inline PolyD poly_d(const std::string& text, int dim, int eps_order, int line = 1) {
  Scanner sc(text, line);
  CoeffRing ring = CoeffRing::dual(eps_order);
  std::vector<PolyD::Term> terms;
  for (auto& t : detail::raw_terms(sc, dim, true)) {
    DualNumber c(eps_order);
    if (t.eps_power < eps_order) c.set_coeff(t.eps_power, t.coeff);
    terms.emplace_back(std::move(t.expo), std::move(c));
  }
  return PolyD::from_terms(dim, ring, std::move(terms));
}

/// A parsed problem file: header fields, then one generator per line.
struct IdealFile {
  int dim = 0;
  CoeffRing ring = CoeffRing::rational();
  std::optional<WeightVector> weight;
  std::optional<SignedOrder> tiebreak;
  std::optional<Polarity> polarity;
  std::optional<StandardSet> delta;
  std::optional<std::vector<int>> bounds;
  std::vector<PolyQ> gens_q;
  std::vector<PolyD> gens_d;
};

inline IdealFile parse_ideal_file(const std::string& content) {
  IdealFile file;
  std::stringstream ss(content);
  std::string raw;
  int lineno = 0;
  bool in_gens = false;
  bool have_dim = false;
  std::string pending_delta, pending_tiebreak;
  int pending_delta_line = 0, pending_tiebreak_line = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    std::string text = raw;
    size_t hash = text.find('#');
    if (hash != std::string::npos) text = text.substr(0, hash);
    bool blank = true;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    if (in_gens) {
      if (file.ring.is_dual())
        file.gens_d.push_back(poly_d(text, file.dim, file.ring.eps_order, lineno));
      else
        file.gens_q.push_back(poly_q(text, file.dim, lineno));
      continue;
    }

    size_t colon = text.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, 1, "expected 'key: value' or 'gens:'");
    std::string key;
    for (char c : text.substr(0, colon))
      if (!std::isspace(static_cast<unsigned char>(c))) key += c;
    std::string value = text.substr(colon + 1);
    if (key == "gens") {
      if (!have_dim) throw ParseError(lineno, 1, "dim must come before gens");
      in_gens = true;
    } else if (key == "dim") {
      Scanner sc(value, lineno);
      long long d = sc.integer();
      if (!sc.eof()) sc.fail("trailing input after dim");
      if (d < 1 || d > 16) sc.fail("dim out of range");
      file.dim = static_cast<int>(d);
      have_dim = true;
    } else if (key == "ring") {
      Scanner sc(value, lineno);
      std::string kind = sc.word();
      if (kind == "rational") {
        file.ring = CoeffRing::rational();
      } else if (kind == "dual") {
        long long n = sc.integer();
        if (n < 1 || n > DualNumber::kMaxOrder) sc.fail("dual order out of range");
        file.ring = CoeffRing::dual(static_cast<int>(n));
      } else {
        sc.fail("ring is 'rational' or 'dual N'");
      }
      if (!sc.eof()) sc.fail("trailing input after ring");
    } else if (key == "weight") {
      if (!have_dim) throw ParseError(lineno, 1, "dim must come before weight");
      file.weight = weight_spec(value, file.dim, lineno);
    } else if (key == "tiebreak") {
      pending_tiebreak = value;
      pending_tiebreak_line = lineno;
    } else if (key == "polarity") {
      Scanner sc(value, lineno);
      char c = sc.get();
      if (c != '+' && c != '-') sc.fail("polarity is '+' or '-'");
      if (!sc.eof()) sc.fail("trailing input after polarity");
      file.polarity = c == '+' ? Polarity::kPlus : Polarity::kMinus;
    } else if (key == "delta") {
      pending_delta = value;
      pending_delta_line = lineno;
    } else if (key == "bounds") {
      if (!have_dim) throw ParseError(lineno, 1, "dim must come before bounds");
      Scanner sc(value, lineno);
      Exponent e = exponent_tuple(sc, file.dim);
      if (!sc.eof()) sc.fail("trailing input after bounds");
      file.bounds = std::vector<int>(e.begin(), e.end());
    } else {
      throw ParseError(lineno, 1, "unknown header key '" + key + "'");
    }
    if (have_dim && !pending_delta.empty()) {
      file.delta = delta_spec(pending_delta, file.dim, pending_delta_line);
      pending_delta.clear();
    }
    if (have_dim && !pending_tiebreak.empty()) {
      file.tiebreak = tiebreak_spec(pending_tiebreak, file.dim, pending_tiebreak_line);
      pending_tiebreak.clear();
    }
  }
  if (!have_dim) throw ParseError(lineno, 1, "missing dim header");
  if (!in_gens) throw ParseError(lineno, 1, "missing gens: section");
  if (file.gens_q.empty() && file.gens_d.empty())
    throw ParseError(lineno, 1, "no generators given");
  return file;
}

}  // namespace io

}  // namespace bbcell
