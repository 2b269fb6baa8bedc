#include "qpoly/expr.hpp"

#include <algorithm>
#include <cmath>

#include "qpoly/errors.hpp"

namespace qpoly {

Expr Expr::constant(const Quaternion& a) {
  Expr e;
  e.nodes_.push_back({NodeKind::Const, a, -1, -1, false});
  e.root_ = 0;
  e.tokens_ = 1;
  return e;
}

Expr Expr::variable() {
  Expr e;
  e.nodes_.push_back({NodeKind::Var, {}, -1, -1, false});
  e.root_ = 0;
  e.tokens_ = 1;
  return e;
}

int Expr::append(const Expr& other) {
  const int offset = static_cast<int>(nodes_.size());
  for (ExprNode n : other.nodes_) {
    if (n.left >= 0) n.left += offset;
    if (n.right >= 0) n.right += offset;
    nodes_.push_back(n);
  }
  return other.root_ + offset;
}

Expr Expr::binary(NodeKind kind, const Expr& l, const Expr& r) {
  Expr e;
  const int a = e.append(l);
  const int b = e.append(r);
  e.nodes_.push_back({kind, {}, a, b, false});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.tokens_ = l.tokens_ + r.tokens_ + 1;
  return e;
}

bool Expr::has_brackets() const {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const ExprNode& n) { return n.bracketed; });
}

namespace {

bool single_term(const Quaternion& a) {
  int nonzero = 0;
  for (int m = 0; m < 4; ++m) {
    if (a[m] < 0.0) return false;
    if (a[m] != 0.0) ++nonzero;
  }
  return nonzero <= 1;
}

void render(const Expr& e, int id, std::string& out) {
  const ExprNode& n = e.node(id);
  const bool paren = n.bracketed;
  if (paren) out += '(';
  switch (n.kind) {
    case NodeKind::Const:
      if (single_term(n.value)) {
        out += format_quaternion(n.value);
      } else {
        out += '(' + format_quaternion(n.value) + ')';
      }
      break;
    case NodeKind::Var:
      out += 'X';
      break;
    case NodeKind::Add:
    case NodeKind::Sub: {
      render(e, n.left, out);
      out += n.kind == NodeKind::Add ? " + " : " - ";
      const NodeKind rk = e.node(n.right).kind;
      const bool wrap = (rk == NodeKind::Add || rk == NodeKind::Sub) && !e.node(n.right).bracketed;
      if (wrap) out += '(';
      render(e, n.right, out);
      if (wrap) out += ')';
      break;
    }
    case NodeKind::Mul: {
      for (const int child : {n.left, n.right}) {
        const ExprNode& c = e.node(child);
        const bool sum = (c.kind == NodeKind::Add || c.kind == NodeKind::Sub) && !c.bracketed;
        const bool wrap = sum || (child == n.right && c.kind == NodeKind::Mul && !c.bracketed);
        if (child == n.right) out += '*';
        if (wrap) out += '(';
        render(e, child, out);
        if (wrap) out += ')';
      }
      break;
    }
  }
  if (paren) out += ')';
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  if (root_ >= 0) render(*this, root_, out);
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr run() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    const int root = expr();
    skip();
    if (pos_ < text_.size()) fail_here();
    out_.root_ = root;
    out_.tokens_ = tokens_;
    return std::move(out_);
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail_here() {
    if (text_[pos_] == '^') throw PowerNotSupported(pos_);
    throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  int push(NodeKind kind, Quaternion value, int l, int r) {
    out_.nodes_.push_back({kind, value, l, r, false});
    return static_cast<int>(out_.nodes_.size()) - 1;
  }

  bool at_mul() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  int expr() {
    skip();
    int acc;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      ++tokens_;
      const int zero = push(NodeKind::Const, Quaternion{}, -1, -1);
      acc = push(NodeKind::Sub, {}, zero, prod());
    } else {
      acc = prod();
    }
    for (;;) {
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) return acc;
      const NodeKind kind = text_[pos_] == '+' ? NodeKind::Add : NodeKind::Sub;
      ++pos_;
      ++tokens_;
      acc = push(kind, {}, acc, prod());
    }
  }

  int prod() {
    int acc = atom();
    while (at_mul()) {
      ++tokens_;
      acc = push(NodeKind::Mul, {}, acc, atom());
    }
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') throw PowerNotSupported(pos_);
    return acc;
  }

  int atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == 'X') {
      ++pos_;
      ++tokens_;
      return push(NodeKind::Var, {}, -1, -1);
    }
    if (c == '(') {
      ++pos_;
      ++tokens_;
      const int inner = expr();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        if (pos_ < text_.size()) fail_here();
        throw SyntaxError("missing ')'", pos_);
      }
      ++pos_;
      ++tokens_;
      out_.nodes_[static_cast<std::size_t>(inner)].bracketed = true;
      return inner;
    }
    if (c == '+' || c == '-') throw SyntaxError("sign not allowed here", pos_);
    Quaternion value;
    if (scan_quaternion_term(text_, pos_, value)) {
      ++tokens_;
      return push(NodeKind::Const, value, -1, -1);
    }
    fail_here();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t tokens_ = 0;
  Expr out_;
};

Expr parse(std::string_view text) { return ExprParser(text).run(); }

Quaternion eval_at(const Expr& e, const Quaternion& x, std::size_t* visited) {
  std::vector<Quaternion> v(e.size());
  for (std::size_t id = 0; id < e.size(); ++id) {
    const ExprNode& n = e.nodes()[id];
    const auto l = static_cast<std::size_t>(n.left);
    const auto r = static_cast<std::size_t>(n.right);
    switch (n.kind) {
      case NodeKind::Const: v[id] = n.value; break;
      case NodeKind::Var: v[id] = x; break;
      case NodeKind::Add: v[id] = v[l] + v[r]; break;
      case NodeKind::Sub: v[id] = v[l] - v[r]; break;
      case NodeKind::Mul: v[id] = v[l] * v[r]; break;
    }
  }
  if (visited) *visited = e.size();
  return e.root() < 0 ? Quaternion{} : v[static_cast<std::size_t>(e.root())];
}

BoundedValue eval_with_bound(const Expr& e, const Quaternion& x) {
  std::vector<BoundedValue> v(e.size());
  const double xn = norm(x);
  for (std::size_t id = 0; id < e.size(); ++id) {
    const ExprNode& n = e.nodes()[id];
    const auto l = static_cast<std::size_t>(n.left);
    const auto r = static_cast<std::size_t>(n.right);
    switch (n.kind) {
      case NodeKind::Const: v[id] = {n.value, norm(n.value)}; break;
      case NodeKind::Var: v[id] = {x, xn}; break;
      case NodeKind::Add: v[id] = {v[l].value + v[r].value, v[l].magnitude + v[r].magnitude}; break;
      case NodeKind::Sub: v[id] = {v[l].value - v[r].value, v[l].magnitude + v[r].magnitude}; break;
      case NodeKind::Mul: v[id] = {v[l].value * v[r].value, v[l].magnitude * v[r].magnitude}; break;
    }
  }
  return e.root() < 0 ? BoundedValue{} : v[static_cast<std::size_t>(e.root())];
}

QuadruplePoly ordered_product(std::span<const QuadruplePoly> ps) {
  if (ps.empty()) throw DomainError("ordered_product needs at least one factor");
  if (ps.size() == 1) return ps[0];
  const std::size_t mid = ps.size() / 2;
  return mul_fast(ordered_product(ps.subspan(0, mid)), ordered_product(ps.subspan(mid)));
}

namespace {

struct Term {
  double sign = 1.0;
  int node = -1;
};

void collect_terms(const Expr& e, int id, double sign, std::vector<Term>& out) {
  const ExprNode& n = e.node(id);
  if (n.kind == NodeKind::Add || n.kind == NodeKind::Sub) {
    collect_terms(e, n.left, sign, out);
    collect_terms(e, n.right, n.kind == NodeKind::Add ? sign : -sign, out);
    return;
  }
  out.push_back({sign, id});
}

void collect_factors(const Expr& e, int id, std::vector<QuadruplePoly>& out, std::size_t& tokens) {
  const ExprNode& n = e.node(id);
  switch (n.kind) {
    case NodeKind::Mul:
      collect_factors(e, n.left, out, tokens);
      ++tokens;
      collect_factors(e, n.right, out, tokens);
      return;
    case NodeKind::Const:
      // Neighbouring constants fold into one factor.
      if (!out.empty() && degree(out.back()) <= 0) {
        const QuadruplePoly& prev = out.back();
        const Quaternion a{prev.component(0).coeff({0, 0, 0, 0}), prev.component(1).coeff({0, 0, 0, 0}),
                           prev.component(2).coeff({0, 0, 0, 0}), prev.component(3).coeff({0, 0, 0, 0})};
        out.back() = QuadruplePoly::constant(a * n.value);
      } else {
        out.push_back(QuadruplePoly::constant(n.value));
      }
      ++tokens;
      return;
    case NodeKind::Var:
      out.push_back(QuadruplePoly::variable());
      ++tokens;
      return;
    default:
      throw BracketsNotAllowed("sum nested inside a product");
  }
}

}  // namespace

QuadruplePoly expand(const Expr& e) {
  if (e.has_brackets()) throw BracketsNotAllowed("expand accepts bracket-free expressions only");
  if (e.root() < 0) return QuadruplePoly();
  std::vector<Term> terms;
  collect_terms(e, e.root(), 1.0, terms);

  struct Expanded {
    QuadruplePoly poly;
    int degree;
    std::size_t tokens;
  };
  std::vector<Expanded> parts;
  double magnitude = 0.0;
  for (const Term& t : terms) {
    std::vector<QuadruplePoly> factors;
    std::size_t tokens = 0;
    collect_factors(e, t.node, factors, tokens);
    QuadruplePoly p = ordered_product(factors);
    if (t.sign < 0) p = QuadruplePoly() - p;
    magnitude += p.max_abs();
    const int d = degree(p);
    parts.push_back({std::move(p), d, tokens});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Expanded& a, const Expanded& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.tokens < b.tokens;
  });
  QuadruplePoly sum;
  for (const Expanded& part : parts) sum += part.poly;
  sum.snap(1e-12 * magnitude);
  return sum;
}

std::vector<double> zero_test_samples(const Expr& e) {
  const std::size_t n = std::max<std::size_t>(e.token_count(), 1);
  std::vector<double> a(2 * n);
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = static_cast<double>(v);
  return a;
}

bool zero_test_round(const Expr& e, std::span<const double> samples, std::mt19937_64& rng) {
  if (samples.empty()) throw EmptySampleSet("sample set is empty");
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  const Quaternion x{samples[pick(rng)], samples[pick(rng)], samples[pick(rng)], samples[pick(rng)]};
  const BoundedValue v = eval_with_bound(e, x);
  return norm(v.value) > 1e-12 * v.magnitude;
}

Verdict zero_test(const Expr& e, double epsilon, std::mt19937_64& rng) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  const int rounds = static_cast<int>(std::ceil(std::log2(1.0 / epsilon)));
  const std::vector<double> samples = zero_test_samples(e);
  for (int r = 0; r < std::max(rounds, 1); ++r) {
    if (zero_test_round(e, samples, rng)) return Verdict::NonZero;
  }
  return Verdict::Zero;
}

}  // namespace qpoly
