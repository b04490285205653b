#include "hyperloci/textio.hpp"

#include <cctype>

#include "hyperloci/error.hpp"

namespace hyperloci {

namespace {

bool try_rational_multiple(const CycNum& v, const CycNum& unit, Rat& q) {
  CycNum ratio = (v / unit).reduce();
  if (!ratio.is_rational()) return false;
  q = ratio.as_rational();
  return true;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace

std::string cyc_to_string(const CycNum& value) {
  CycNum v = value.reduce();
  if (v.is_rational()) return rat_str(v.as_rational());
  Rat q;
  auto with_unit = [&](const std::string& unit) {
    if (q == 1) return unit;
    if (q == -1) return "-" + unit;
    return rat_str(q) + "*" + unit;
  };
  if (try_rational_multiple(v, CycNum::i(), q)) return with_unit("I");
  if (try_rational_multiple(v, CycNum::sqrt3(), q)) return with_unit("sqrt3");
  if (try_rational_multiple(v, CycNum::sqrt5(), q)) return with_unit("sqrt5");
  if (try_rational_multiple(v, CycNum::i() * CycNum::sqrt3(), q)) return with_unit("I*sqrt3");
  if (try_rational_multiple(v, CycNum::i() * CycNum::sqrt5(), q)) return with_unit("I*sqrt5");
  std::string out;
  const auto& c = v.coeffs();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rat coef = c[k];
    std::string term;
    if (k == 0) {
      term = rat_str(coef);
    } else {
      std::string base = "z" + std::to_string(v.conductor()) + (k == 1 ? "" : "^" + std::to_string(k));
      if (coef == 1)
        term = base;
      else if (coef == -1)
        term = "-" + base;
      else
        term = rat_str(coef) + "*" + base;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    CycNum c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string cs = cyc_to_string(c);
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = !composite && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    std::string term;
    if (k == 0) {
      term = composite ? "(" + cs + ")" : mag;
      if (composite) negative = false;
    } else {
      std::string xs = var + (k == 1 ? "" : "^" + std::to_string(k));
      if (composite)
        term = "(" + cs + ")*" + xs, negative = false;
      else if (mag == "1")
        term = xs;
      else
        term = mag + "*" + xs;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

// Rational functions form the value domain of the expression parser.
struct RF {
  Poly num, den;
};

RF rf_const(const CycNum& c) { return {Poly(c), Poly::one()}; }

RF rf_add(const RF& a, const RF& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
RF rf_sub(const RF& a, const RF& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
RF rf_mul(const RF& a, const RF& b) { return {a.num * b.num, a.den * b.den}; }
RF rf_div(const RF& a, const RF& b) {
  if (b.num.is_zero()) throw DivisionByZero("division by zero in expression");
  return {a.num * b.den, a.den * b.num};
}
RF rf_neg(const RF& a) { return {-a.num, a.den}; }
RF rf_pow(const RF& a, long e) {
  if (e >= 0) return {a.num.pow(e), a.den.pow(e)};
  if (a.num.is_zero()) throw DivisionByZero("zero to negative power");
  return {a.den.pow(-e), a.num.pow(-e)};
}

class Parser {
 public:
  Parser(const std::string& text, std::string var) : s_(text), var_(std::move(var)) {}

  RF parse() {
    RF v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw Error("trailing characters in expression: " + s_.substr(pos_));
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RF expr() {
    RF v = term();
    while (true) {
      if (eat('+'))
        v = rf_add(v, term());
      else if (eat('-'))
        v = rf_sub(v, term());
      else
        return v;
    }
  }

  RF term() {
    RF v = factor();
    while (true) {
      if (eat('*'))
        v = rf_mul(v, factor());
      else if (eat('/'))
        v = rf_div(v, factor());
      else
        return v;
    }
  }

  RF factor() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    RF v = atom();
    if (eat('^')) {
      long e = read_int();
      v = rf_pow(v, e);
    }
    return neg ? rf_neg(v) : v;
  }

  long read_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw Error("expected integer at position " + std::to_string(pos_));
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  RF atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw Error("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RF v = expr();
      if (!eat(')')) throw Error("missing closing parenthesis");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return rf_const(CycNum(rat_from_string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string word = s_.substr(start, pos_ - start);
      if (word == var_) return {Poly::x(), Poly::one()};
      if (word == "I") return rf_const(CycNum::i());
      if (word == "sqrt3") return rf_const(CycNum::sqrt3());
      if (word == "sqrt5") return rf_const(CycNum::sqrt5());
      if (word.size() > 1 && word[0] == 'z') {
        unsigned long m = std::stoul(word.substr(1));
        long k = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          k = read_int();
        }
        return rf_const(CycNum::zeta(m, k));
      }
      throw Error("unknown symbol '" + word + "' in expression");
    }
    throw Error(std::string("unexpected character '") + c + "' in expression");
  }

  const std::string& s_;
  std::string var_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::string& var) {
  Parser p(text, var);
  RF v = p.parse();
  if (v.den.degree() != 0) throw Error("expression is not a polynomial: " + text);
  return v.num * v.den.lc().inv();
}

std::pair<Poly, Poly> parse_ratfunc(const std::string& text, const std::string& var) {
  Parser p(text, var);
  RF v = p.parse();
  return {v.num, v.den};
}

CycNum parse_cyc(const std::string& text) {
  Poly p = parse_poly(text, "x");
  if (p.degree() > 0) throw Error("expected a constant: " + text);
  return p.is_zero() ? CycNum::zero() : p.coeff(0);
}

}  // namespace hyperloci
