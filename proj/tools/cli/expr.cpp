#include "cli/expr.hpp"

#include <cctype>
#include <limits>

namespace motive {

using motivic::ChowProduct;
using motivic::GeometrySpec;
using motivic::Partition;
using motivic::PrimeField;
using motivic::ProdClass;

ParseError::ParseError(std::size_t column, const std::string& what)
    : std::runtime_error("parse error at column " + std::to_string(column + 1) + ": " + what),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.value == b.value && a.parts == b.parts && a.children == b.children;
}

namespace {

constexpr std::int64_t kMaxNat = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t natural() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a nonnegative integer");
    std::int64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
      if (v > kMaxNat) {
        pos_ = start;
        fail("integer larger than " + std::to_string(kMaxNat));
      }
    }
    return v;
  }

  static Expr node(NodeKind kind, std::size_t column, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = kind;
    e.column = column;
    e.children = std::move(children);
    return e;
  }

  Expr expression() {
    Expr left = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        left = node(NodeKind::add, at, {std::move(left), term()});
      } else if (accept('-')) {
        left = node(NodeKind::subtract, at, {std::move(left), term()});
      } else {
        return left;
      }
    }
  }

  Expr term() {
    Expr left = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return left;
      left = node(NodeKind::multiply, at, {std::move(left), unary()});
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return node(NodeKind::negate, at, {unary()});
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr e = node(NodeKind::power, at, {std::move(base)});
    e.value = natural();
    return e;
  }

  Expr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(NodeKind::integer, at);
      e.value = natural();
      return e;
    }
    if (accept('(')) {
      Expr inner = expression();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view name = text_.substr(pos_, end - pos_);
    pos_ = end;

    if (name == "H") return node(NodeKind::hyperplane, at);
    if (name == "sigma") return sigma(at);
    if (name == "push") {
      expect('(');
      Expr e = node(NodeKind::push, at, {expression()});
      expect(')');
      return e;
    }
    static const std::pair<std::string_view, NodeKind> indexed[] = {
        {"e", NodeKind::e},   {"h", NodeKind::h},   {"c", NodeKind::c},
        {"ct", NodeKind::ct}, {"cT", NodeKind::cT}, {"sT", NodeKind::sT},
    };
    for (const auto& [symbol, kind] : indexed) {
      if (name != symbol) continue;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("'" + std::string(name) + "' needs an index, e.g. " + std::string(name) + "1");
      Expr e = node(kind, at);
      e.value = natural();
      return e;
    }
    pos_ = at;
    fail("unknown symbol '" + std::string(name) + "'");
  }

  Expr sigma(std::size_t at) {
    skip_space();
    const std::size_t open = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after sigma");
    const auto close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated partition");
    Expr e = node(NodeKind::sigma, at);
    try {
      e.parts = Partition::parse(text_.substr(open, close - open + 1));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    pos_ = close + 1;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case NodeKind::add:
    case NodeKind::subtract: return 1;
    case NodeKind::multiply: return 2;
    case NodeKind::negate: return 3;
    case NodeKind::power: return 4;
    default: return 5;
  }
}

std::string wrapped(const Expr& e, int min_precedence) {
  std::string s = to_string(e);
  return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  const auto index = std::to_string(e.value);
  switch (e.kind) {
    case NodeKind::integer: return index;
    case NodeKind::sigma: return "sigma" + e.parts.to_string();
    case NodeKind::e: return "e" + index;
    case NodeKind::h: return "h" + index;
    case NodeKind::c: return "c" + index;
    case NodeKind::ct: return "ct" + index;
    case NodeKind::cT: return "cT" + index;
    case NodeKind::sT: return "sT" + index;
    case NodeKind::hyperplane: return "H";
    case NodeKind::push: return "push(" + to_string(e.children[0]) + ")";
    case NodeKind::negate: return "-" + wrapped(e.children[0], 3);
    case NodeKind::add: return wrapped(e.children[0], 1) + " + " + wrapped(e.children[1], 2);
    case NodeKind::subtract: return wrapped(e.children[0], 1) + " - " + wrapped(e.children[1], 2);
    case NodeKind::multiply: return wrapped(e.children[0], 2) + "*" + wrapped(e.children[1], 3);
    case NodeKind::power: return wrapped(e.children[0], 5) + "^" + index;
  }
  return {};
}

Evaluator::Evaluator(const GeometrySpec& spec)
    : ring_(std::make_shared<const ChowProduct>(spec)), product_mode_(true) {}

Evaluator::Evaluator(int k, int n, int p) : product_mode_(false) {
  if (k < 1 || k > n) throw std::invalid_argument("Grassmannian G(k, n) needs 1 <= k <= n");
  ring_ = std::make_shared<const ChowProduct>(PrimeField(static_cast<std::uint32_t>(p)), 0,
                                              motivic::Box{k, n - k});
}

Graded Evaluator::single(ProdClass u) const {
  if (u.is_zero()) return {};
  const int j = u.codegree();
  return {{j, std::move(u)}};
}

ProdClass Evaluator::component(const Graded& value, int j) const {
  auto it = value.find(j);
  return it == value.end() ? ProdClass(j) : it->second;
}

Graded Evaluator::add(const Graded& a, const Graded& b, bool negate_b) const {
  Graded out = a;
  for (const auto& [j, v] : b) {
    const ProdClass term = negate_b ? ring_->scale(v, ring_->field().neg(1)) : v;
    auto it = out.find(j);
    if (it == out.end()) {
      out.emplace(j, term);
      continue;
    }
    it->second = ring_->add(it->second, term);
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

Graded Evaluator::multiply(const Graded& a, const Graded& b) const {
  Graded out;
  for (const auto& [i, u] : a)
    for (const auto& [j, v] : b) {
      if (i + j > ring_->top_codegree()) continue;
      out = add(out, single(ring_->multiply(u, v)), false);
    }
  return out;
}

Graded Evaluator::evaluate(const Expr& e) const {
  const auto& schur = ring_->schur();
  const auto& field = ring_->field();
  auto product_only = [&](const char* what) {
    if (!product_mode_)
      throw ModeError(std::string(what) + " at column " + std::to_string(e.column + 1) +
                      " needs a product ring (--p --n --m), not a Grassmannian");
  };
  const int index = static_cast<int>(e.value);

  switch (e.kind) {
    case NodeKind::integer:
      return single(ring_->scale(ring_->unit(), static_cast<motivic::Scalar>(e.value % field.modulus())));
    case NodeKind::sigma:
      if (!schur.box().contains(e.parts)) return {};
      return single(ring_->lift(schur.sigma(e.parts)));
    case NodeKind::e:
    case NodeKind::ct:
      return single(ring_->lift(schur.elementary(index)));
    case NodeKind::h: return single(ring_->lift(schur.complete(index)));
    case NodeKind::c: return single(ring_->lift(ring_->special_class(index)));
    case NodeKind::cT:
      product_only("cT");
      return index > ring_->rank_T() ? Graded{} : single(ring_->chern_T(index));
    case NodeKind::sT:
      product_only("sT");
      return index > ring_->top_codegree() ? Graded{} : single(ring_->inverse_chern_T(index).back());
    case NodeKind::hyperplane:
      product_only("H");
      return single(ring_->h_power(1));
    case NodeKind::push: {
      product_only("push");
      Graded out;
      for (const auto& [j, u] : evaluate(e.children[0])) {
        if (j < ring_->d()) continue;
        out = add(out, single(ring_->lift(ring_->pushforward(u))), false);
      }
      return out;
    }
    case NodeKind::negate: return add({}, evaluate(e.children[0]), true);
    case NodeKind::add: return add(evaluate(e.children[0]), evaluate(e.children[1]), false);
    case NodeKind::subtract: return add(evaluate(e.children[0]), evaluate(e.children[1]), true);
    case NodeKind::multiply: return multiply(evaluate(e.children[0]), evaluate(e.children[1]));
    case NodeKind::power: {
      Graded base = evaluate(e.children[0]);
      Graded out = single(ring_->unit());
      for (auto n = e.value; n > 0; n >>= 1) {
        if (n & 1) out = multiply(out, base);
        if (n > 1) base = multiply(base, base);
      }
      return out;
    }
  }
  return {};
}

std::string Evaluator::format(const Graded& value) const {
  if (value.empty()) return "0";
  std::string out;
  for (const auto& [j, u] : value) {
    if (!out.empty()) out += " + ";
    out += ring_->to_string(u);
  }
  return out;
}

}  // namespace motive
