// Expression language for symbols.
//
//   expr    := star (('+' | '-') star)*
//   star    := product (('@' | '@@' | '@s') product)*
//   product := unary (['*'] unary)*          juxtaposition multiplies
//   unary   := '-' unary | primary
//   primary := number | number 'i' | 'i' | generator | 'exp' '(' expr ')' | '(' expr ')'
//
// Generators: t<k>, tb<k>, z, zb; θ<k> and θ̄<k> are accepted as aliases.
// '@' is ⋆, '@@' is ⋆̂, '@s' is ⋆_susy; '*' and juxtaposition are the
// pointwise product. All binary operators are left-associative.
#pragma once

#include <variant>
#include <vector>

#include "gstar/star.hpp"
#include "gstar/super.hpp"

namespace gstar {

class ParseError : public Error {
 public:
  ParseError(unsigned line, unsigned column, const std::string& message);

  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

enum class NodeKind : std::uint8_t {
  literal,
  fermion,  // θ_k or θ̄_k
  boson,    // z or z̄
  neg,
  add,
  sub,
  mul,
  star,
  star_symmetric,
  star_super,
  exp,
};

struct Node {
  NodeKind kind = NodeKind::literal;
  Complex value{};
  GeneratorIndex generator{};
  bool conjugate = false;  // z̄ for boson nodes
  std::vector<Node> children;
  unsigned line = 1;
  unsigned column = 1;
};

/// Structural equality, ignoring source positions.
bool same_structure(const Node& a, const Node& b);

/// Parses `source`; fermionic indices must lie in 1..n.
Node parse(std::string_view source, unsigned n);

/// Fully parenthesized text that parses back to the same structure.
std::string print(const Node& ast);

enum class Sector : std::uint8_t { automatic, fermionic, super };

struct EvalConfig {
  unsigned n = 1;
  double hbar = 1.0;  // fermionic products only
  Sector sector = Sector::automatic;
};

using Value = std::variant<GrassmannElement, SuperSymbol>;

/// True if the tree mentions z, z̄ or '@s'.
bool uses_super_sector(const Node& ast);

/// Evaluates in the Grassmann algebra with config.n modes, or in the super
/// algebra (one bosonic and one fermionic mode, polynomial representation).
/// Throws DomainError when bosonic tokens appear in a fermionic session.
Value evaluate(const Node& ast, const EvalConfig& config);
Value evaluate(std::string_view source, const EvalConfig& config);

std::string to_string(const Value& v);
nlohmann::json to_json(const Value& v);

}  // namespace gstar
