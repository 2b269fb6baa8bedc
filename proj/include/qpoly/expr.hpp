#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpoly/map_poly.hpp"
#include "qpoly/quaternion.hpp"

namespace qpoly {

enum class NodeKind { Const, Var, Add, Sub, Mul };

struct ExprNode {
  NodeKind kind = NodeKind::Const;
  Quaternion value;  // Const only
  int left = -1;
  int right = -1;
  /// Set on the root of a parenthesized sub-expression.
  bool bracketed = false;
};

/// Expression tree over +, -, *, constants and X, stored in an arena;
/// children always precede their parent.
class Expr {
 public:
  static Expr constant(const Quaternion& a);
  static Expr variable();
  static Expr binary(NodeKind kind, const Expr& l, const Expr& r);

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  int root() const { return root_; }
  const ExprNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

  /// Number of lexical tokens in the source (or of a canonical rendering
  /// for built trees).
  std::size_t token_count() const { return tokens_; }
  bool has_brackets() const;

  /// Text that parses back to an equivalent tree; brackets appear only
  /// where precedence or a multi-term constant requires them.
  std::string to_string() const;

  Expr operator+(const Expr& o) const { return binary(NodeKind::Add, *this, o); }
  Expr operator-(const Expr& o) const { return binary(NodeKind::Sub, *this, o); }
  Expr operator*(const Expr& o) const { return binary(NodeKind::Mul, *this, o); }

 private:
  friend class ExprParser;
  int append(const Expr& other);

  std::vector<ExprNode> nodes_;
  int root_ = -1;
  std::size_t tokens_ = 0;
};

/// Grammar: expr := ['-'] prod (('+'|'-') prod)*, prod := atom (('*'|'·') atom)*,
/// atom := 'X' | literal term | '(' expr ')'. A literal is a single unsigned
/// term such as `2`, `2.5i` or `k`. Leading unary minus becomes
/// Sub(Const 0, prod). Throws SyntaxError / PowerNotSupported.
Expr parse(std::string_view text);

/// Bottom-up evaluation; `visited`, when given, receives the number of
/// nodes evaluated.
Quaternion eval_at(const Expr& e, const Quaternion& x, std::size_t* visited = nullptr);

/// Value together with a bound on the size of every partial result:
/// |a| for constants, |x| for X, l + r for sums and differences, l * r for
/// products.
struct BoundedValue {
  Quaternion value;
  double magnitude = 0.0;
};
BoundedValue eval_with_bound(const Expr& e, const Quaternion& x);

/// p_1 p_2 ... p_m in this order by balanced splitting. Requires m >= 1.
QuadruplePoly ordered_product(std::span<const QuadruplePoly> ps);

/// Quadruple form of a bracket-free expression: every product term is
/// expanded by ordered_product and the terms are summed by increasing
/// degree. Throws BracketsNotAllowed.
QuadruplePoly expand(const Expr& e);

enum class Verdict { Zero, NonZero };

/// {0, 1, ..., 2N - 1} with N = e.token_count().
std::vector<double> zero_test_samples(const Expr& e);

/// One round: true when e is visibly non-zero at a random point of A^4.
bool zero_test_round(const Expr& e, std::span<const double> samples, std::mt19937_64& rng);

/// ceil(log2(1/epsilon)) rounds; NonZero is always right, Zero errs with
/// probability at most epsilon. Throws DomainError unless 0 < epsilon < 1.
Verdict zero_test(const Expr& e, double epsilon, std::mt19937_64& rng);

}  // namespace qpoly
