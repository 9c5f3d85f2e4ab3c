#include "slq/textio.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

namespace slq {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

constexpr int max_exponent = 10000;

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { integer, name, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind;
  std::size_t position;
  std::string text;
};

std::optional<std::string> greek_letter(std::string_view text, std::size_t i) {
  if (i + 1 >= text.size() || static_cast<unsigned char>(text[i]) != 0xCE) return std::nullopt;
  switch (static_cast<unsigned char>(text[i + 1])) {
    case 0xB1: return "alpha";
    case 0xB2: return "beta";
    case 0xB3: return "gamma";
    case 0xB4: return "delta";
    default: return std::nullopt;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::integer, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::name, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (auto g = greek_letter(text, i)) {
      out.push_back({Token::Kind::name, i, *g});
      i += 2;
      continue;
    }
    Token::Kind kind;
    switch (ch) {
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '*': kind = Token::Kind::star; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back({kind, i, std::string(1, ch)});
    ++i;
  }
  out.push_back({Token::Kind::end, text.size(), ""});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  std::unique_ptr<ExprAst> parse() {
    auto e = expr();
    if (peek().kind != Token::Kind::end) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  static std::unique_ptr<ExprAst> node(ExprAst::Kind kind, std::size_t position) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    n->position = position;
    return n;
  }

  static std::unique_ptr<ExprAst> binary(ExprAst::Kind kind, std::size_t position,
                                         std::unique_ptr<ExprAst> l, std::unique_ptr<ExprAst> r) {
    auto n = node(kind, position);
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    std::unique_ptr<ExprAst> left;
    if (peek().kind == Token::Kind::minus) {
      const std::size_t at = next().position;
      auto n = node(ExprAst::Kind::negate, at);
      n->children.push_back(term());
      left = std::move(n);
    } else {
      left = term();
    }
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      const Token& op = next();
      const auto kind = op.kind == Token::Kind::plus ? ExprAst::Kind::sum : ExprAst::Kind::difference;
      left = binary(kind, op.position, std::move(left), term());
    }
    return left;
  }

  std::unique_ptr<ExprAst> term() {
    auto left = factor();
    while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
      const Token& op = next();
      const auto kind = op.kind == Token::Kind::star ? ExprAst::Kind::product : ExprAst::Kind::quotient;
      left = binary(kind, op.position, std::move(left), factor());
    }
    if (peek().kind == Token::Kind::name || peek().kind == Token::Kind::integer ||
        peek().kind == Token::Kind::lparen)
      throw ParseError("implicit multiplication is not allowed; use '*'", peek().position);
    return left;
  }

  std::unique_ptr<ExprAst> factor() {
    auto b = base();
    if (peek().kind != Token::Kind::caret) return b;
    const std::size_t at = next().position;
    const bool negative = accept(Token::Kind::minus);
    if (peek().kind != Token::Kind::integer) throw ParseError("expected an integer exponent", peek().position);
    const Token& digits = next();
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.text.data(), digits.text.data() + digits.text.size(), value);
    if (ec != std::errc() || value > max_exponent) throw ParseError("exponent too large", digits.position);
    auto n = node(ExprAst::Kind::power, at);
    n->exponent = negative ? -value : value;
    n->children.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<ExprAst> base() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::integer: {
        next();
        auto n = node(ExprAst::Kind::integer, t.position);
        n->text = t.text;
        return n;
      }
      case Token::Kind::name: {
        next();
        if (t.text == "q") return node(ExprAst::Kind::q, t.position);
        auto n = node(ExprAst::Kind::symbol, t.position);
        n->text = t.text;
        return n;
      }
      case Token::Kind::lparen: {
        next();
        auto e = expr();
        if (!accept(Token::Kind::rparen)) throw ParseError("expected ')'", peek().position);
        return e;
      }
      case Token::Kind::end:
        throw ParseError("unexpected end of input", t.position);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- evaluation

enum class Target { scalar, algebra, h };

template <class Element>
struct Value {
  std::optional<QScalar> scalar;  // set while the value is q-only
  Element element;
};

std::optional<Generator> algebra_symbol(const std::string& s) {
  if (s == "a" || s == "alpha") return Generator::A;
  if (s == "b" || s == "beta") return Generator::B;
  if (s == "c" || s == "gamma") return Generator::C;
  if (s == "d" || s == "delta") return Generator::D;
  return std::nullopt;
}

template <class Element>
Element promote(const QScalar& c);
template <>
AlgebraElement promote<AlgebraElement>(const QScalar& c) {
  return unit_element(c);
}
template <>
HElement promote<HElement>(const QScalar& c) {
  return z_power(0, c);
}

template <class Element>
Element as_element(const Value<Element>& v) {
  return v.scalar ? promote<Element>(*v.scalar) : v.element;
}

template <class Element>
Element element_power(const Element& x, int e, std::size_t position) {
  if (e < 0) {
    if constexpr (std::is_same_v<Element, HElement>) {
      if (x.size() != 1) throw ParseError("negative power of a non-monomial in z", position);
      const auto& [n, c] = *x.terms().begin();
      return element_power(z_power(-n, inverse(c)), -e, position);
    } else {
      throw ParseError("negative powers are only allowed on q and z", position);
    }
  }
  Element out = promote<Element>(QScalar(1));
  for (int i = 0; i < e; ++i) out = out * x;
  return out;
}

QScalar scalar_power(const QScalar& x, int e, std::size_t position) {
  if (x.is_zero() && e < 0) throw ParseError("division by zero", position);
  if (x == QScalar::q_power(1)) return QScalar::q_power(e);
  QScalar base = e < 0 ? inverse(x) : x;
  QScalar out(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

template <class Element>
Value<Element> evaluate(const ExprAst& n, Target target) {
  using V = Value<Element>;
  switch (n.kind) {
    case ExprAst::Kind::integer:
      return V{QScalar(mpq_class(mpz_class(n.text))), {}};
    case ExprAst::Kind::q:
      return V{QScalar::q_power(1), {}};
    case ExprAst::Kind::symbol: {
      if constexpr (std::is_same_v<Element, AlgebraElement>) {
        if (target == Target::algebra) {
          if (auto g = algebra_symbol(n.text)) return V{std::nullopt, generator_element(*g)};
        }
      } else {
        if (target == Target::h && n.text == "z") return V{std::nullopt, z_power(1)};
      }
      throw ParseError("unknown symbol '" + n.text + "'", n.position);
    }
    case ExprAst::Kind::negate: {
      V v = evaluate<Element>(*n.children[0], target);
      if (v.scalar) return V{-*v.scalar, {}};
      return V{std::nullopt, -v.element};
    }
    case ExprAst::Kind::sum:
    case ExprAst::Kind::difference: {
      V l = evaluate<Element>(*n.children[0], target);
      V r = evaluate<Element>(*n.children[1], target);
      const bool plus = n.kind == ExprAst::Kind::sum;
      if (l.scalar && r.scalar) return V{plus ? *l.scalar + *r.scalar : *l.scalar - *r.scalar, {}};
      return V{std::nullopt, plus ? as_element(l) + as_element(r) : as_element(l) - as_element(r)};
    }
    case ExprAst::Kind::product: {
      V l = evaluate<Element>(*n.children[0], target);
      V r = evaluate<Element>(*n.children[1], target);
      if (l.scalar && r.scalar) return V{*l.scalar * *r.scalar, {}};
      if (l.scalar) return V{std::nullopt, *l.scalar * r.element};
      if (r.scalar) return V{std::nullopt, *r.scalar * l.element};
      return V{std::nullopt, l.element * r.element};
    }
    case ExprAst::Kind::quotient: {
      V l = evaluate<Element>(*n.children[0], target);
      V r = evaluate<Element>(*n.children[1], target);
      if (!r.scalar) throw ParseError("division is only allowed by scalars", n.position);
      if (r.scalar->is_zero()) throw ParseError("division by zero", n.position);
      const QScalar inv = inverse(*r.scalar);
      if (l.scalar) return V{*l.scalar * inv, {}};
      return V{std::nullopt, inv * l.element};
    }
    case ExprAst::Kind::power: {
      V b = evaluate<Element>(*n.children[0], target);
      if (b.scalar) return V{scalar_power(*b.scalar, n.exponent, n.position), {}};
      return V{std::nullopt, element_power(b.element, n.exponent, n.position)};
    }
  }
  throw ParseError("malformed expression", n.position);
}

// ---------------------------------------------------------------- printing

// A signed addend: the sign is printed by the joiner.
struct Addend {
  bool negative = false;
  std::string body;
};

std::string join(const std::vector<Addend>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      out += parts[i].negative ? "-" : "";
    else
      out += parts[i].negative ? " - " : " + ";
    out += parts[i].body;
  }
  return out;
}

std::string power_text(const std::string& base, int e, Format f) {
  if (e == 1) return base;
  if (f == Format::latex) return base + "^{" + std::to_string(e) + "}";
  return base + "^" + std::to_string(e);
}

std::string rational_text(const mpq_class& c, Format f) {
  if (f == Format::latex && c.get_den() != 1)
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  return c.get_str();
}

// |c| q^e times `rest` (rest may be empty).
Addend monomial_addend(const mpq_class& c, int e, const std::string& rest, Format f) {
  const std::string star = f == Format::latex ? "" : "*";
  const mpq_class a = abs(c);
  std::vector<std::string> factors;
  if (a != 1 || (e == 0 && rest.empty())) factors.push_back(rational_text(a, f));
  if (e != 0) factors.push_back(power_text("q", e, f));
  if (!rest.empty()) factors.push_back(rest);
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? star : "") + factors[i];
  return {sgn(c) < 0, body};
}

std::vector<Addend> laurent_addends(const LaurentQ& p, const std::string& rest, Format f) {
  std::vector<Addend> out;
  for (const auto& [e, c] : p.terms()) out.push_back(monomial_addend(c, e, rest, f));
  return out;
}

std::string grouped(const std::string& inner, Format f) {
  return f == Format::latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
}

// Addends for c * rest, where rest is a printed basis element ("" for the unit).
std::vector<Addend> coefficient_addends(const QScalar& c, const std::string& rest, Format f) {
  const std::string star = f == Format::latex ? "" : "*";
  const std::string tail = rest.empty() ? "" : star + rest;
  if (c.is_laurent()) {
    const LaurentQ& p = c.numerator();
    if (p.size() == 1 || rest.empty()) return laurent_addends(p, rest, f);
    const bool negative = sgn(p.terms().front().second) < 0;
    const LaurentQ shown = negative ? -p : p;
    return {{negative, grouped(join(laurent_addends(shown, "", f)), f) + tail}};
  }
  const bool negative = sgn(c.numerator().terms().front().second) < 0;
  const LaurentQ num = negative ? -c.numerator() : c.numerator();
  const std::string n = join(laurent_addends(num, "", f));
  const std::string d = join(laurent_addends(c.denominator(), "", f));
  if (f == Format::latex) return {{negative, "\\frac{" + n + "}{" + d + "}" + tail}};
  return {{negative, "(" + n + ")/(" + d + ")" + tail}};
}

std::string monomial_text(const PbwMonomial& x, Format f) {
  static const char* ascii[] = {"a", "b", "c", "d"};
  static const char* latex[] = {"\\alpha", "\\beta", "\\gamma", "\\delta"};
  const int exps[] = {x.k, x.l, x.m, x.s};
  std::string out;
  for (int g = 0; g < 4; ++g) {
    if (exps[g] == 0) continue;
    if (f == Format::latex) {
      out += power_text(latex[g], exps[g], f);
    } else {
      if (!out.empty()) out += "*";
      out += power_text(ascii[g], exps[g], f);
    }
  }
  return out;
}

std::string z_text(int n, Format f) { return n == 0 ? "" : power_text("z", n, f); }

template <class Leg>
std::string leg_text(const typename Leg::Index& i, Format f) {
  if constexpr (std::is_same_v<Leg, LegA>) {
    std::string s = monomial_text(i, f);
    return s.empty() ? "1" : s;
  } else {
    std::string s = z_text(i, f);
    return s.empty() ? "1" : s;
  }
}

template <class L, class R>
std::string tensor_text(const Tensor2<L, R>& t, Format f) {
  const std::string otimes = f == Format::latex ? " \\otimes " : " (x) ";
  std::vector<Addend> parts;
  for (const auto& [key, c] : t.terms()) {
    const std::string body = leg_text<L>(std::get<0>(key), f) + otimes + leg_text<R>(std::get<1>(key), f);
    const std::string rest = f == Format::latex ? body : "(" + body + ")";
    for (auto& a : coefficient_addends(c, rest, f)) parts.push_back(std::move(a));
  }
  return join(parts);
}

std::string as_json(const std::string& plain) { return nlohmann::json(plain).dump(); }

}  // namespace

std::unique_ptr<ExprAst> parse_expression(std::string_view text) { return Parser(text).parse(); }

QScalar parse_scalar(std::string_view text) {
  auto ast = parse_expression(text);
  auto v = evaluate<AlgebraElement>(*ast, Target::scalar);
  return *v.scalar;
}

AlgebraElement parse_algebra(std::string_view text) {
  auto ast = parse_expression(text);
  return as_element(evaluate<AlgebraElement>(*ast, Target::algebra));
}

HElement parse_h(std::string_view text) {
  auto ast = parse_expression(text);
  return as_element(evaluate<HElement>(*ast, Target::h));
}

std::string print_scalar(const QScalar& x, Format format) {
  if (format == Format::json) return as_json(print_scalar(x));
  return join(coefficient_addends(x, "", format));
}

std::string print_monomial(const PbwMonomial& x, Format format) {
  if (format == Format::json) return as_json(print_monomial(x));
  std::string s = monomial_text(x, format);
  return s.empty() ? "1" : s;
}

std::string print_algebra(const AlgebraElement& x, Format format) {
  if (format == Format::json) return as_json(print_algebra(x));
  std::vector<Addend> parts;
  for (const auto& [mono, c] : x.terms())
    for (auto& a : coefficient_addends(c, monomial_text(mono, format), format)) parts.push_back(std::move(a));
  return join(parts);
}

std::string print_h(const HElement& x, Format format) {
  if (format == Format::json) return as_json(print_h(x));
  std::vector<Addend> parts;
  for (const auto& [n, c] : x.terms())
    for (auto& a : coefficient_addends(c, z_text(n, format), format)) parts.push_back(std::move(a));
  return join(parts);
}

std::string print_tensor(const TensorAA& t, Format format) {
  return format == Format::json ? as_json(tensor_text(t, Format::plain)) : tensor_text(t, format);
}
std::string print_tensor(const TensorAH& t, Format format) {
  return format == Format::json ? as_json(tensor_text(t, Format::plain)) : tensor_text(t, format);
}
std::string print_tensor(const TensorHA& t, Format format) {
  return format == Format::json ? as_json(tensor_text(t, Format::plain)) : tensor_text(t, format);
}
std::string print_tensor(const TensorHH& t, Format format) {
  return format == Format::json ? as_json(tensor_text(t, Format::plain)) : tensor_text(t, format);
}

}  // namespace slq
