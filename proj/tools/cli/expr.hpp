#pragma once

// Expressions over Chow classes, as typed on the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' nat)?
//   atom   := nat | sigma[...] | e<i> | h<i> | c<i> | ct<i> | cT<i> | sT<i> | H
//           | push '(' expr ')' | '(' expr ')'

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/chowprod.hpp"

namespace motive {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& what);
  /// 0-based offset into the input.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Raised when an atom is not available in the chosen ring.
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeKind {
  integer,
  sigma,
  e,       // sigma_(1^i)
  h,       // sigma_(i)
  c,       // (-1)^i sigma_(i)
  ct,      // sigma_(1^i), the dual special class
  cT,      // c_i(T)
  sT,      // c_i(-T)
  hyperplane,
  push,
  negate,
  add,
  subtract,
  multiply,
  power,
};

struct Expr {
  NodeKind kind = NodeKind::integer;
  /// Literal value, generator index or exponent.
  std::int64_t value = 0;
  motivic::Partition parts;
  std::vector<Expr> children;
  /// Source offset, for error messages; ignored by ==.
  std::size_t column = 0;

  friend bool operator==(const Expr& a, const Expr& b);
};

Expr parse_expression(std::string_view text);

/// Minimal-parenthesis form that parses back to an equal tree.
std::string to_string(const Expr& expr);

/// An inhomogeneous value: one class per codegree, zero components dropped.
using Graded = std::map<int, motivic::ProdClass>;

/// Evaluates expressions in Ch(P^d x G) for a Severi-Brauer geometry, or in
/// Ch(G) alone (the product with d = 0, where cT, sT, H and push are refused).
class Evaluator {
 public:
  explicit Evaluator(const motivic::GeometrySpec& spec);
  /// Ch(G(k, n)) over F_p.
  Evaluator(int k, int n, int p);

  bool product_mode() const noexcept { return product_mode_; }
  const motivic::ChowProduct& ring() const noexcept { return *ring_; }

  Graded evaluate(const Expr& expr) const;
  Graded evaluate(std::string_view text) const { return evaluate(parse_expression(text)); }

  /// The degree-j part of a value (zero when absent).
  motivic::ProdClass component(const Graded& value, int j) const;
  /// Components in ascending codegree joined by " + "; "0" for zero.
  std::string format(const Graded& value) const;

 private:
  Graded add(const Graded& a, const Graded& b, bool negate_b) const;
  Graded multiply(const Graded& a, const Graded& b) const;
  Graded single(motivic::ProdClass u) const;

  std::shared_ptr<const motivic::ChowProduct> ring_;
  bool product_mode_;
};

}  // namespace motive
