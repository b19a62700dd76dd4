#pragma once

// Expression trees over exact rationals, a few named constants and named
// variables, with outward-rounded interval evaluation.

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trispec/rigor/constants.hpp"
#include "trispec/rigor/interval.hpp"

namespace trispec::rigor {

enum class Op { Rational, Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Cbrt };
enum class ConstId { Pi, Sqrt3, Sqrt91, Sqrt1729, Cbrt2, Cbrt4 };

inline const char* const_name(ConstId c) {
  switch (c) {
    case ConstId::Pi: return "pi";
    case ConstId::Sqrt3: return "sqrt3";
    case ConstId::Sqrt91: return "sqrt91";
    case ConstId::Sqrt1729: return "sqrt1729";
    case ConstId::Cbrt2: return "cbrt2";
    case ConstId::Cbrt4: return "cbrt4";
  }
  return "?";
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  mpq_class value;       // Rational
  ConstId cid{};         // Const
  std::string name;      // Var
  unsigned exponent = 0; // Pow
  std::vector<NodePtr> args;
};

using Assignment = std::map<std::string, Interval>;

class Expr {
 public:
  Expr() : Expr(num(0)) {}
  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static Expr num(const mpq_class& v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Rational;
    n->value = v;
    return Expr(n);
  }
  static Expr num(long v) { return num(mpq_class(v)); }
  static Expr decimal(std::string_view text) { return num(parse_decimal(text)); }
  static Expr constant(ConstId c) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->cid = c;
    return Expr(n);
  }
  static Expr var(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->name = std::move(name);
    return Expr(n);
  }
  static Expr make(Op op, std::vector<NodePtr> args, unsigned exponent = 0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    n->exponent = exponent;
    return Expr(n);
  }

  const Node& node() const { return *node_; }
  const NodePtr& ptr() const { return node_; }

  bool is_rational() const { return node_->op == Op::Rational; }
  bool is_zero() const { return is_rational() && node_->value == 0; }
  bool is_one() const { return is_rational() && node_->value == 1; }

  std::string to_string() const { return render(*node_, 0); }

  std::set<std::string> free_vars() const {
    std::set<std::string> out;
    collect(*node_, out);
    return out;
  }

 private:
  static void collect(const Node& n, std::set<std::string>& out) {
    if (n.op == Op::Var) out.insert(n.name);
    for (const auto& a : n.args) collect(*a, out);
  }

  // Precedence: 1 additive, 2 multiplicative, 3 unary, 4 power, 5 atom.
  static std::string render(const Node& n, int outer) {
    auto wrap = [&](std::string s, int prec) { return prec < outer ? "(" + s + ")" : s; };
    switch (n.op) {
      case Op::Rational: {
        std::string s = n.value.get_str();
        if (n.value < 0 || n.value.get_den() != 1) return wrap(s, n.value < 0 ? 3 : 2);
        return s;
      }
      case Op::Const: return const_name(n.cid);
      case Op::Var: return n.name;
      case Op::Add: return wrap(render(*n.args[0], 1) + " + " + render(*n.args[1], 1), 1);
      case Op::Sub: return wrap(render(*n.args[0], 1) + " - " + render(*n.args[1], 2), 1);
      case Op::Mul: return wrap(render(*n.args[0], 2) + "*" + render(*n.args[1], 3), 2);
      case Op::Div: return wrap(render(*n.args[0], 2) + "/" + render(*n.args[1], 3), 2);
      case Op::Neg: return wrap("-" + render(*n.args[0], 3), 3);
      case Op::Pow: return wrap(render(*n.args[0], 5) + "^" + std::to_string(n.exponent), 4);
      case Op::Sqrt: return "sqrt(" + render(*n.args[0], 0) + ")";
      case Op::Cbrt: return "cbrt(" + render(*n.args[0], 0) + ")";
    }
    return "?";
  }

  NodePtr node_;
};

// Builders fold the trivial cases that symbolic differentiation produces.
inline Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_rational() && b.is_rational()) return Expr::num(a.node().value + b.node().value);
  return Expr::make(Op::Add, {a.ptr(), b.ptr()});
}
inline Expr operator-(const Expr& a) {
  if (a.is_rational()) return Expr::num(-a.node().value);
  return Expr::make(Op::Neg, {a.ptr()});
}
inline Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.is_rational() && b.is_rational()) return Expr::num(a.node().value - b.node().value);
  return Expr::make(Op::Sub, {a.ptr(), b.ptr()});
}
inline Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr::num(0);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_rational() && b.is_rational()) return Expr::num(a.node().value * b.node().value);
  return Expr::make(Op::Mul, {a.ptr(), b.ptr()});
}
inline Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_one()) return a;
  if (a.is_zero()) return Expr::num(0);
  if (a.is_rational() && b.is_rational() && b.node().value != 0) {
    return Expr::num(a.node().value / b.node().value);
  }
  return Expr::make(Op::Div, {a.ptr(), b.ptr()});
}
inline Expr operator+(const Expr& a, long b) { return a + Expr::num(b); }
inline Expr operator+(long a, const Expr& b) { return Expr::num(a) + b; }
inline Expr operator-(const Expr& a, long b) { return a - Expr::num(b); }
inline Expr operator-(long a, const Expr& b) { return Expr::num(a) - b; }
inline Expr operator*(const Expr& a, long b) { return a * Expr::num(b); }
inline Expr operator*(long a, const Expr& b) { return Expr::num(a) * b; }
inline Expr operator/(const Expr& a, long b) { return a / Expr::num(b); }
inline Expr operator/(long a, const Expr& b) { return Expr::num(a) / b; }

inline Expr pow(const Expr& a, unsigned k) {
  if (k == 0) return Expr::num(1);
  if (k == 1) return a;
  if (a.is_rational()) {
    mpq_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a.node().value;
    return Expr::num(r);
  }
  return Expr::make(Op::Pow, {a.ptr()}, k);
}
inline Expr sqrt(const Expr& a) { return Expr::make(Op::Sqrt, {a.ptr()}); }
inline Expr cbrt(const Expr& a) { return Expr::make(Op::Cbrt, {a.ptr()}); }

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace ignored):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := atom ('^' integer)?
//   atom    := number | name | name '(' sum ')' | '(' sum ')'
// Names pi, sqrt3, sqrt91, sqrt1729, cbrt2, cbrt4 are constants; sqrt and
// cbrt are functions; anything else is a variable.

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + msg + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) {
        e = e + product();
      } else if (eat('-')) {
        e = e - product();
      } else {
        return e;
      }
    }
  }
  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }
  Expr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      skip();
      bool paren = eat('(');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned k = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      if (paren && !eat(')')) fail("expected ')'");
      return pow(base, k);
    }
    return base;
  }
  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t save = pos_++;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        } else {
          pos_ = save;
        }
      }
      return Expr::decimal(s_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "sqrt" || name == "cbrt") {
        if (!eat('(')) fail("expected '(' after " + name);
        Expr arg = sum();
        if (!eat(')')) fail("expected ')'");
        return name == "sqrt" ? sqrt(arg) : cbrt(arg);
      }
      static const std::map<std::string, ConstId> consts = {
          {"pi", ConstId::Pi},         {"sqrt3", ConstId::Sqrt3}, {"sqrt91", ConstId::Sqrt91},
          {"sqrt1729", ConstId::Sqrt1729}, {"cbrt2", ConstId::Cbrt2}, {"cbrt4", ConstId::Cbrt4}};
      auto it = consts.find(name);
      if (it != consts.end()) return Expr::constant(it->second);
      return Expr::var(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline Interval eval_node(const Node& n, const Assignment& env, Precision prec) {
  switch (n.op) {
    case Op::Rational: return Interval::from_rational(n.value, prec);
    case Op::Const: {
      const ConstantTable& c = constants(prec);
      switch (n.cid) {
        case ConstId::Pi: return c.pi;
        case ConstId::Sqrt3: return c.sqrt3;
        case ConstId::Sqrt91: return c.sqrt91;
        case ConstId::Sqrt1729: return c.sqrt1729;
        case ConstId::Cbrt2: return c.cbrt2;
        case ConstId::Cbrt4: return c.cbrt4;
      }
      break;
    }
    case Op::Var: {
      auto it = env.find(n.name);
      if (it == env.end()) throw Error("unassigned variable '" + n.name + "'");
      return it->second.precision() < prec ? it->second.with_precision(prec) : it->second;
    }
    case Op::Add: return eval_node(*n.args[0], env, prec) + eval_node(*n.args[1], env, prec);
    case Op::Sub: return eval_node(*n.args[0], env, prec) - eval_node(*n.args[1], env, prec);
    case Op::Mul: return eval_node(*n.args[0], env, prec) * eval_node(*n.args[1], env, prec);
    case Op::Div: return eval_node(*n.args[0], env, prec) / eval_node(*n.args[1], env, prec);
    case Op::Neg: return -eval_node(*n.args[0], env, prec);
    case Op::Pow: return pow(eval_node(*n.args[0], env, prec), n.exponent);
    case Op::Sqrt: return sqrt(eval_node(*n.args[0], env, prec));
    case Op::Cbrt: return cbrt(eval_node(*n.args[0], env, prec));
  }
  throw Error("corrupt expression node");
}

}  // namespace detail

inline Interval iv_eval(const Expr& e, const Assignment& env, Precision prec = kDefaultPrecision) {
  return detail::eval_node(e.node(), env, prec);
}

// ---------------------------------------------------------------------------
// Symbolic differentiation and substitution

inline Expr derivative(const Expr& e, const std::string& var) {
  const Node& n = e.node();
  auto arg = [&](std::size_t i) { return Expr(n.args[i]); };
  switch (n.op) {
    case Op::Rational:
    case Op::Const: return Expr::num(0);
    case Op::Var: return Expr::num(n.name == var ? 1 : 0);
    case Op::Add: return derivative(arg(0), var) + derivative(arg(1), var);
    case Op::Sub: return derivative(arg(0), var) - derivative(arg(1), var);
    case Op::Mul: return derivative(arg(0), var) * arg(1) + arg(0) * derivative(arg(1), var);
    case Op::Div:
      return (derivative(arg(0), var) * arg(1) - arg(0) * derivative(arg(1), var)) / pow(arg(1), 2);
    case Op::Neg: return -derivative(arg(0), var);
    case Op::Pow:
      return Expr::num(static_cast<long>(n.exponent)) * pow(arg(0), n.exponent - 1) * derivative(arg(0), var);
    case Op::Sqrt: return derivative(arg(0), var) / (Expr::num(2) * e);
    case Op::Cbrt: return derivative(arg(0), var) / (Expr::num(3) * pow(e, 2));
  }
  throw Error("corrupt expression node");
}

inline Expr derivative(const Expr& e, const std::string& var, unsigned order) {
  Expr d = e;
  for (unsigned i = 0; i < order; ++i) d = derivative(d, var);
  return d;
}

inline Expr substitute(const Expr& e, const std::string& var, const Expr& replacement) {
  const Node& n = e.node();
  if (n.op == Op::Var) return n.name == var ? replacement : e;
  if (n.args.empty()) return e;
  std::vector<NodePtr> args;
  args.reserve(n.args.size());
  bool changed = false;
  for (const auto& a : n.args) {
    Expr s = substitute(Expr(a), var, replacement);
    changed = changed || s.ptr() != a;
    args.push_back(s.ptr());
  }
  if (!changed) return e;
  return Expr::make(n.op, std::move(args), n.exponent);
}

}  // namespace trispec::rigor
