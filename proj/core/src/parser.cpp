#include "liouville/parser.hpp"

#include <cctype>
#include <optional>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

constexpr int kMaxExponent = 1000;

enum class Tok { number, ident, derivative, plus, minus, star, slash, caret, lparen, rparen, equals, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
        throw NonRationalError("floating-point literal", i);
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '.') throw NonRationalError("floating-point literal", i);
    if (s.substr(i, 5) == "dy/dx") {
      out.push_back({Tok::derivative, "dy/dx", start});
      i += 5;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '=': k = Tok::equals; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

// a * dy/dx + b
struct Affine {
  RatFunc a;
  RatFunc b;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : toks_(tokenize(text)) {
    if (opts.params.size() > 1) throw Error("at most one named parameter is supported");
    if (!opts.params.empty()) {
      param_ = opts.params.front();
      if (param_ == "x" || param_ == "y" || param_ == "exp")
        throw Error("parameter name '" + param_ + "' is reserved");
    }
  }

  FOODE equation() {
    Affine lhs = expr(true);
    expect(Tok::equals, "'='");
    Affine rhs = expr(true);
    expect(Tok::end, "end of input");
    RatFunc a = lhs.a - rhs.a;
    RatFunc b = lhs.b - rhs.b;
    if (a.is_zero()) {
      if (!saw_derivative_) throw SyntaxError("equation does not contain dy/dx", 0);
      throw ZeroDenominatorError("coefficient of dy/dx normalizes to zero");
    }
    RatFunc slope = -b / a;
    return FOODE(slope);
  }

  RatFunc rational() {
    Affine v = expr(false);
    expect(Tok::end, "end of input");
    return v.b;
  }

  IntegratingFactor integrating_factor() {
    IntegratingFactor out;
    bool divide = false;
    while (true) {
      if (is_ident("exp")) {
        const std::size_t at = peek().pos;
        advance();
        expect(Tok::lparen, "'(' after exp");
        Affine arg = expr(false);
        expect(Tok::rparen, "')'");
        if (peek().kind == Tok::caret) throw SyntaxError("exponent on exp(...) is not supported", at);
        out.r0 = divide ? out.r0 - arg.b : out.r0 + arg.b;
      } else {
        RatFunc base = if_base();
        Coeff e(1);
        if (peek().kind == Tok::caret) {
          advance();
          e = rational_exponent();
        }
        if (divide) e = -e;
        if (!base.num().is_constant()) out.factors.push_back({base.num(), e});
        if (!base.den().is_constant()) out.factors.push_back({base.den(), -e});
      }
      if (peek().kind == Tok::star) {
        advance();
        divide = false;
      } else if (peek().kind == Tok::slash) {
        advance();
        divide = true;
      } else {
        break;
      }
    }
    expect(Tok::end, "end of input");
    out.canonicalize();
    return out;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  void advance() {
    if (toks_[idx_].kind != Tok::end) ++idx_;
  }
  bool is_ident(std::string_view name) const { return peek().kind == Tok::ident && peek().text == name; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail_unexpected(what);
    advance();
  }
  [[noreturn]] void fail_unexpected(const char* wanted) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(std::string("expected ") + wanted + ", found " + got, t.pos);
  }

  Affine expr(bool allow_derivative) {
    Affine acc = term(allow_derivative);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool sub = peek().kind == Tok::minus;
      advance();
      Affine rhs = term(allow_derivative);
      if (sub) {
        acc.a -= rhs.a;
        acc.b -= rhs.b;
      } else {
        acc.a += rhs.a;
        acc.b += rhs.b;
      }
    }
    return acc;
  }

  Affine term(bool allow_derivative) {
    Affine acc = unary(allow_derivative);
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const bool div = peek().kind == Tok::slash;
      const std::size_t at = peek().pos;
      advance();
      Affine rhs = unary(allow_derivative);
      if (div) {
        if (!rhs.a.is_zero()) throw NonRationalError("division by an expression containing dy/dx", at);
        if (rhs.b.is_zero()) throw ZeroDenominatorError("division by zero at position " + std::to_string(at));
        acc.a = acc.a / rhs.b;
        acc.b = acc.b / rhs.b;
      } else {
        if (!acc.a.is_zero() && !rhs.a.is_zero()) throw NonRationalError("equation is not linear in dy/dx", at);
        RatFunc a = acc.a * rhs.b + rhs.a * acc.b;
        acc.b = acc.b * rhs.b;
        acc.a = a;
      }
    }
    return acc;
  }

  Affine unary(bool allow_derivative) {
    if (peek().kind == Tok::minus) {
      advance();
      Affine v = unary(allow_derivative);
      return {-v.a, -v.b};
    }
    if (peek().kind == Tok::plus) {
      advance();
      return unary(allow_derivative);
    }
    return power(allow_derivative);
  }

  Affine power(bool allow_derivative) {
    Affine base = primary(allow_derivative);
    if (peek().kind != Tok::caret) return base;
    const std::size_t at = peek().pos;
    advance();
    const int e = integer_exponent();
    if (!base.a.is_zero()) {
      if (e == 1) return base;
      throw NonRationalError("power of dy/dx", at);
    }
    if (e == 0) {
      if (base.b.is_zero()) throw NonRationalError("0^0 is undefined", at);
      return {RatFunc(), RatFunc(1)};
    }
    RatFunc r = RatFunc(base.b.num().pow(static_cast<unsigned>(e)), base.b.den().pow(static_cast<unsigned>(e)));
    if (peek().kind == Tok::caret) throw SyntaxError("chained '^' requires parentheses", peek().pos);
    return {RatFunc(), r};
  }

  int integer_exponent() {
    bool paren = false;
    if (peek().kind == Tok::lparen) {
      paren = true;
      advance();
    }
    if (peek().kind == Tok::minus) throw NonRationalError("negative exponent", peek().pos);
    if (peek().kind != Tok::number) {
      if (peek().kind == Tok::ident || peek().kind == Tok::lparen)
        throw NonRationalError("exponent must be an integer literal", peek().pos);
      fail_unexpected("integer exponent");
    }
    const Token t = peek();
    advance();
    if (paren) {
      if (peek().kind == Tok::slash) throw NonRationalError("fractional exponent", peek().pos);
      expect(Tok::rparen, "')'");
    }
    if (t.text.size() > 4 || std::stoi(t.text) > kMaxExponent) throw NonRationalError("exponent too large", t.pos);
    return std::stoi(t.text);
  }

  Coeff rational_exponent() {
    bool paren = false;
    if (peek().kind == Tok::lparen) {
      paren = true;
      advance();
    }
    bool neg = false;
    if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
      neg = peek().kind == Tok::minus;
      advance();
    }
    if (peek().kind != Tok::number) fail_unexpected("exponent");
    Rat e(Integer(peek().text));
    advance();
    if (peek().kind == Tok::slash && (paren || toks_[idx_ + 1].kind == Tok::number)) {
      advance();
      if (peek().kind != Tok::number) fail_unexpected("exponent denominator");
      Integer d(peek().text);
      if (d == 0) throw ZeroDenominatorError("zero exponent denominator");
      e /= Rat(d);
      advance();
    }
    if (paren) expect(Tok::rparen, "')'");
    return Coeff(neg ? Rat(-e) : e);
  }

  RatFunc if_base() {
    const Token t = peek();
    if (t.kind == Tok::lparen) {
      advance();
      Affine v = expr(false);
      expect(Tok::rparen, "')'");
      return v.b;
    }
    if (t.kind == Tok::number) {
      advance();
      return RatFunc(Coeff(Rat(Integer(t.text))));
    }
    if (t.kind == Tok::ident) return primary(false).b;
    fail_unexpected("factor");
  }

  Affine primary(bool allow_derivative) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::number: {
        advance();
        reject_implicit_product();
        return {RatFunc(), RatFunc(Coeff(Rat(Integer(t.text))))};
      }
      case Tok::derivative: {
        if (!allow_derivative) throw NonRationalError("dy/dx is not allowed here", t.pos);
        advance();
        saw_derivative_ = true;
        reject_implicit_product();
        return {RatFunc(1), RatFunc()};
      }
      case Tok::ident: {
        advance();
        if (peek().kind == Tok::lparen) throw NonRationalError("function '" + t.text + "' is outside the grammar", t.pos);
        RatFunc v;
        if (t.text == "x") {
          v = RatFunc(MPoly::x());
        } else if (t.text == "y") {
          v = RatFunc(MPoly::y());
        } else if (!param_.empty() && t.text == param_) {
          v = RatFunc(Coeff::parameter());
        } else {
          throw NonRationalError("unknown symbol '" + t.text + "'", t.pos);
        }
        reject_implicit_product();
        return {RatFunc(), v};
      }
      case Tok::lparen: {
        advance();
        Affine v = expr(allow_derivative);
        expect(Tok::rparen, "')'");
        reject_implicit_product();
        return v;
      }
      default:
        fail_unexpected("operand");
    }
  }

  void reject_implicit_product() const {
    const Tok k = peek().kind;
    if (k == Tok::number || k == Tok::ident || k == Tok::lparen || k == Tok::derivative)
      throw SyntaxError("implicit multiplication is not allowed; use '*'", peek().pos);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  std::string param_;
  bool saw_derivative_ = false;
};

}  // namespace

FOODE parse_foode(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).equation(); }

RatFunc parse_rational(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).rational(); }

IntegratingFactor parse_integrating_factor(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).integrating_factor();
}

}  // namespace liouville
