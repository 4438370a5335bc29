#include "gstar/expr.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace gstar {

ParseError::ParseError(unsigned line, unsigned column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok : std::uint8_t {
  number,
  fermion,
  boson,
  exp,
  lparen,
  rparen,
  plus,
  minus,
  times,
  star,
  star_symmetric,
  star_super,
  end,
};

struct Token {
  Tok kind = Tok::end;
  Complex value{};
  GeneratorIndex generator{};
  bool conjugate = false;
  unsigned line = 1;
  unsigned column = 1;
  std::string text;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view src, unsigned n) : src_(src), n_(n) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::end;
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance(std::size_t count = 1) {
    for (std::size_t k = 0; k < count && pos_ < src_.size(); ++k) {
      const auto c = static_cast<unsigned char>(src_[pos_++]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(peek())) != 0) advance();
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  unsigned site_index(const Token& t) {
    const std::size_t start = pos_;
    while (is_digit(peek())) advance();
    if (pos_ == start) fail(t, "fermionic generator needs a site index");
    if (is_alnum(peek())) fail(t, "unexpected character after generator");
    unsigned site = 0;
    const auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, site);
    if (ec != std::errc{} || site < 1 || site > n_) {
      fail(t, "site index " + std::string(src_.substr(start, pos_ - start)) + " outside 1.." +
                  std::to_string(n_));
    }
    return site;
  }

  void lex_number(Token& t) {
    const std::size_t start = pos_;
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      advance(2);
      while (is_digit(peek())) advance();
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    double x = 0.0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), x);
    if (ec != std::errc{} || p != t.text.data() + t.text.size() || !std::isfinite(x)) {
      fail(t, "invalid number '" + t.text + "'");
    }
    t.kind = Tok::number;
    t.value = {x, 0.0};
    if (peek() == 'i' && !is_alnum(peek(1)) && peek(1) != '_') {
      advance();
      t.value = {0.0, x};
      t.text += 'i';
    }
  }

  void lex_word(Token& t) {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek())) != 0) advance();
    const std::string word(src_.substr(start, pos_ - start));
    t.text = word;
    if (word == "t" || word == "tb") {
      t.kind = Tok::fermion;
      t.generator = {word == "tb" ? GeneratorKind::bar : GeneratorKind::unbar, site_index(t)};
    } else if ((word == "z" || word == "zb") && !is_alnum(peek())) {
      t.kind = Tok::boson;
      t.conjugate = word == "zb";
    } else if (word == "i" && !is_alnum(peek())) {
      t.kind = Tok::number;
      t.value = {0.0, 1.0};
    } else if (word == "exp" && !is_alnum(peek())) {
      t.kind = Tok::exp;
    } else {
      while (is_alnum(peek())) advance();
      fail(t, "unknown identifier '" + std::string(src_.substr(start, pos_ - start)) + "'");
    }
  }

  // θ is U+03B8; a following U+0304 or U+0305 marks θ̄.
  void lex_theta(Token& t) {
    advance(2);
    GeneratorKind kind = GeneratorKind::unbar;
    if (peek() == '\xCC' && (peek(1) == '\x84' || peek(1) == '\x85')) {
      advance(2);
      kind = GeneratorKind::bar;
    }
    t.kind = Tok::fermion;
    t.generator = {kind, site_index(t)};
  }

  void lex_one(Token& t) {
    const char c = peek();
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return lex_number(t);
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) return lex_word(t);
    if (c == '\xCE' && peek(1) == '\xB8') return lex_theta(t);
    t.text = std::string(1, c);
    switch (c) {
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::times; break;
      case '@':
        if (peek(1) == '@') {
          t.kind = Tok::star_symmetric;
          t.text = "@@";
          advance();
        } else if (peek(1) == 's' && !is_alnum(peek(2))) {
          t.kind = Tok::star_super;
          t.text = "@s";
          advance();
        } else {
          t.kind = Tok::star;
        }
        break;
      default: fail(t, "unexpected character '" + t.text + "'");
    }
    advance();
  }

  std::string_view src_;
  unsigned n_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Node run() {
    Node root = expr();
    if (cur().kind != Tok::end) fail("unexpected '" + cur().text + "'");
    return root;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().column, msg);
  }

  static Node binary(NodeKind kind, Node lhs, Node rhs, const Token& op) {
    Node n;
    n.kind = kind;
    n.line = op.line;
    n.column = op.column;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  Node expr() {
    Node lhs = star();
    while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
      const Token op = toks_[pos_++];
      lhs = binary(op.kind == Tok::plus ? NodeKind::add : NodeKind::sub, std::move(lhs), star(), op);
    }
    return lhs;
  }

  Node star() {
    Node lhs = product();
    for (;;) {
      NodeKind kind;
      switch (cur().kind) {
        case Tok::star: kind = NodeKind::star; break;
        case Tok::star_symmetric: kind = NodeKind::star_symmetric; break;
        case Tok::star_super: kind = NodeKind::star_super; break;
        default: return lhs;
      }
      const Token op = toks_[pos_++];
      lhs = binary(kind, std::move(lhs), product(), op);
    }
  }

  bool starts_primary() const {
    switch (cur().kind) {
      case Tok::number:
      case Tok::fermion:
      case Tok::boson:
      case Tok::exp:
      case Tok::lparen: return true;
      default: return false;
    }
  }

  Node product() {
    Node lhs = unary();
    for (;;) {
      if (cur().kind == Tok::times) {
        const Token op = toks_[pos_++];
        lhs = binary(NodeKind::mul, std::move(lhs), unary(), op);
      } else if (starts_primary()) {
        const Token op = cur();
        lhs = binary(NodeKind::mul, std::move(lhs), unary(), op);
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (cur().kind != Tok::minus) return primary();
    const Token op = toks_[pos_++];
    Node n;
    n.kind = NodeKind::neg;
    n.line = op.line;
    n.column = op.column;
    n.children.push_back(unary());
    return n;
  }

  void expect(Tok kind, const char* what) {
    if (cur().kind != kind) {
      fail(std::string("expected ") + what +
           (cur().kind == Tok::end ? " at end of input" : " before '" + cur().text + "'"));
    }
    ++pos_;
  }

  Node primary() {
    const Token t = cur();
    Node n;
    n.line = t.line;
    n.column = t.column;
    switch (t.kind) {
      case Tok::number:
        ++pos_;
        n.kind = NodeKind::literal;
        n.value = t.value;
        return n;
      case Tok::fermion:
        ++pos_;
        n.kind = NodeKind::fermion;
        n.generator = t.generator;
        return n;
      case Tok::boson:
        ++pos_;
        n.kind = NodeKind::boson;
        n.conjugate = t.conjugate;
        return n;
      case Tok::exp:
        ++pos_;
        expect(Tok::lparen, "'(' after exp");
        n.kind = NodeKind::exp;
        n.children.push_back(expr());
        expect(Tok::rparen, "')'");
        return n;
      case Tok::lparen: {
        ++pos_;
        Node inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::end: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const char* operator_text(NodeKind k) {
  switch (k) {
    case NodeKind::add: return " + ";
    case NodeKind::sub: return " - ";
    case NodeKind::mul: return " * ";
    case NodeKind::star: return " @ ";
    case NodeKind::star_symmetric: return " @@ ";
    case NodeKind::star_super: return " @s ";
    default: return "";
  }
}

std::string print_literal(Complex c) {
  const bool re_ok = !std::signbit(c.real());
  const bool im_ok = !std::signbit(c.imag());
  if (c.imag() == 0.0 && re_ok) return format_real(c.real());
  if (c.real() == 0.0 && im_ok) return format_real(c.imag()) + "i";
  // Not produced by the parser; printed as an equivalent expression.
  return "(" + format_real(c.real()) + " + " + format_real(c.imag()) + "i)";
}

// Super sector ---------------------------------------------------------------

SuperPolynomial super_scalar(Complex c) {
  return super_from(BosonPolynomial::constant(c), GrassmannElement::scalar(1, 1.0));
}

GrassmannElement exp_with_scalar(const GrassmannElement& a) {
  const Complex c = a.scalar_part();
  return exp_nilpotent(a - GrassmannElement::scalar(a.modes(), c)) * std::exp(c);
}

class Evaluator {
 public:
  Evaluator(const EvalConfig& cfg, bool super) : cfg_(cfg), super_(super) {}

  GrassmannElement fermionic(const Node& n) const {
    auto bin = [&](auto&& f) { return f(fermionic(n.children[0]), fermionic(n.children[1])); };
    switch (n.kind) {
      case NodeKind::literal: return GrassmannElement::scalar(cfg_.n, n.value);
      case NodeKind::fermion: return GrassmannElement::generator(cfg_.n, n.generator);
      case NodeKind::boson:
        throw_at(n, "bosonic generator in a fermionic session");
      case NodeKind::star_super:
        throw_at(n, "'@s' needs the super sector");
      case NodeKind::neg: return -fermionic(n.children[0]);
      case NodeKind::add: return bin([](const auto& a, const auto& b) { return a + b; });
      case NodeKind::sub: return bin([](const auto& a, const auto& b) { return a - b; });
      case NodeKind::mul: return bin([](const auto& a, const auto& b) { return multiply(a, b); });
      case NodeKind::star:
        return bin([&](const auto& a, const auto& b) {
          return gstar::star(a, b, StarKind{ProductKind::coherent, cfg_.hbar});
        });
      case NodeKind::star_symmetric:
        return bin([&](const auto& a, const auto& b) {
          return gstar::star(a, b, StarKind{ProductKind::symmetric, cfg_.hbar});
        });
      case NodeKind::exp: return exp_with_scalar(fermionic(n.children[0]));
    }
    throw Error("evaluate: unknown node");
  }

  SuperPolynomial super(const Node& n) const {
    auto bin = [&](auto&& f) { return f(super(n.children[0]), super(n.children[1])); };
    switch (n.kind) {
      case NodeKind::literal: return super_scalar(n.value);
      case NodeKind::fermion:
        if (n.generator.site != 1) throw_at(n, "the super sector has a single fermionic mode");
        return super_from(BosonPolynomial::constant(1.0), GrassmannElement::generator(1, n.generator));
      case NodeKind::boson:
        return super_from(n.conjugate ? BosonPolynomial::zbar() : BosonPolynomial::z(),
                          GrassmannElement::scalar(1, 1.0));
      case NodeKind::neg: return super(n.children[0]) * Complex(-1.0);
      case NodeKind::add: return bin([](const auto& a, const auto& b) { return a + b; });
      case NodeKind::sub: return bin([](const auto& a, const auto& b) { return a - b; });
      case NodeKind::mul: return bin([](const auto& a, const auto& b) { return multiply(a, b); });
      case NodeKind::star_super:
        return bin([](const auto& a, const auto& b) { return super_star(a, b); });
      case NodeKind::star:
      case NodeKind::star_symmetric:
        throw_at(n, "use '@s' for products in the super sector");
      case NodeKind::exp: {
        const SuperPolynomial arg = super(n.children[0]);
        GrassmannElement f(1);
        for (unsigned m = 0; m < 4; ++m) {
          for (const auto& [key, c] : arg[m].terms()) {
            if (key != BosonPolynomial::Key{0, 0}) {
              throw_at(n, "exp of a non-constant bosonic polynomial is not a polynomial");
            }
            f.add_term(Monomial{m}, c);
          }
        }
        return super_from(BosonPolynomial::constant(1.0), exp_with_scalar(f));
      }
    }
    throw Error("evaluate: unknown node");
  }

  Value run(const Node& ast) const {
    if (super_) return SuperSymbol{super(ast)};
    return fermionic(ast);
  }

 private:
  [[noreturn]] static void throw_at(const Node& n, const std::string& msg) {
    throw DomainError(std::to_string(n.line) + ":" + std::to_string(n.column) + ": " + msg);
  }

  const EvalConfig& cfg_;
  bool super_;
};

}  // namespace

bool same_structure(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case NodeKind::literal:
      if (a.value != b.value) return false;
      break;
    case NodeKind::fermion:
      if (!(a.generator == b.generator)) return false;
      break;
    case NodeKind::boson:
      if (a.conjugate != b.conjugate) return false;
      break;
    default: break;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k)
    if (!same_structure(a.children[k], b.children[k])) return false;
  return true;
}

Node parse(std::string_view source, unsigned n) {
  if (n < 1 || n > kMaxModes) throw DomainError("parse: mode count outside 1.." + std::to_string(kMaxModes));
  return Parser(Lexer(source, n).run()).run();
}

std::string print(const Node& ast) {
  switch (ast.kind) {
    case NodeKind::literal: return print_literal(ast.value);
    case NodeKind::fermion:
      return (ast.generator.kind == GeneratorKind::bar ? "tb" : "t") + std::to_string(ast.generator.site);
    case NodeKind::boson: return ast.conjugate ? "zb" : "z";
    case NodeKind::neg: return "(-" + print(ast.children[0]) + ")";
    case NodeKind::exp: return "exp(" + print(ast.children[0]) + ")";
    default:
      return "(" + print(ast.children[0]) + operator_text(ast.kind) + print(ast.children[1]) + ")";
  }
}

bool uses_super_sector(const Node& ast) {
  if (ast.kind == NodeKind::boson || ast.kind == NodeKind::star_super) return true;
  for (const auto& c : ast.children)
    if (uses_super_sector(c)) return true;
  return false;
}

Value evaluate(const Node& ast, const EvalConfig& config) {
  bool super = false;
  switch (config.sector) {
    case Sector::automatic: super = uses_super_sector(ast); break;
    case Sector::fermionic: super = false; break;
    case Sector::super: super = true; break;
  }
  if (super && config.n != 1) {
    throw DomainError("the super sector has one fermionic mode; got n = " + std::to_string(config.n));
  }
  return Evaluator(config, super).run(ast);
}

Value evaluate(std::string_view source, const EvalConfig& config) {
  return evaluate(parse(source, config.n), config);
}

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

nlohmann::json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

}  // namespace gstar
