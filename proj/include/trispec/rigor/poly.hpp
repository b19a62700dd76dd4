#pragma once

// Exact multivariate polynomials over Q and quotients of them, used to check
// transcribed identities (substitutions, derivatives, discriminants) by
// expansion. pi is treated as a formal variable; radicals are replaced by
// symbols subject to relations symbol^k = radicand, which are applied by
// division with remainder. Equality after reduction proves the identity;
// inequality only means the test could not prove it.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trispec/rigor/expr.hpp"

namespace trispec::rigor {

using Monomial = std::map<std::string, unsigned>;

class Poly {
 public:
  Poly() = default;
  static Poly constant(const mpq_class& c) {
    Poly r;
    if (c != 0) r.terms_[{}] = c;
    return r;
  }
  static Poly variable(const std::string& name, unsigned exponent = 1) {
    Poly r;
    if (exponent == 0) return constant(1);
    r.terms_[{{name, exponent}}] = 1;
    return r;
  }

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  mpq_class constant_value() const {
    auto it = terms_.find({});
    return it == terms_.end() ? mpq_class(0) : it->second;
  }
  std::size_t size() const { return terms_.size(); }

  unsigned degree(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
  }

  // Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coeff(const std::string& var, unsigned k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      unsigned e = it == m.end() ? 0 : it->second;
      if (e != k) continue;
      Monomial rest = m;
      rest.erase(var);
      r.add_term(rest, c);
    }
    return r;
  }

  Poly derivative(const std::string& var) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it == m.end()) continue;
      Monomial dm = m;
      mpq_class dc = c * it->second;
      if (it->second == 1) {
        dm.erase(var);
      } else {
        dm[var] = it->second - 1;
      }
      r.add_term(dm, dc);
    }
    return r;
  }

  Poly substitute(const std::string& var, const Poly& value) const {
    Poly r;
    std::map<unsigned, Poly> powers;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it == m.end()) {
        r.add_term(m, c);
        continue;
      }
      unsigned e = it->second;
      if (!powers.count(e)) powers[e] = value.pow(e);
      Monomial rest = m;
      rest.erase(var);
      Poly t;
      t.add_term(rest, c);
      r = r + t * powers[e];
    }
    return r;
  }

  Poly pow(unsigned k) const {
    Poly r = constant(1);
    Poly b = *this;
    while (k) {
      if (k & 1u) r = r * b;
      k >>= 1u;
      if (k) b = b * b;
    }
    return r;
  }

  // Expression with pi mapped back to the constant and other names mapped
  // through `names` when present (e.g. a radical symbol to its definition).
  Expr to_expr(const std::map<std::string, Expr>& names = {}) const {
    Expr sum = Expr::num(0);
    for (const auto& [m, c] : terms_) {
      Expr t = Expr::num(c);
      for (const auto& [v, e] : m) {
        Expr base;
        auto it = names.find(v);
        if (it != names.end()) {
          base = it->second;
        } else if (v == "pi") {
          base = Expr::constant(ConstId::Pi);
        } else {
          base = Expr::var(v);
        }
        t = t * rigor::pow(base, e);
      }
      sum = sum + t;
    }
    return sum;
  }

  void add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const { return to_expr().to_string(); }

 private:
  std::map<Monomial, mpq_class> terms_;
};

struct RationalFunction {
  Poly num;
  Poly den = Poly::constant(1);
};

struct Relation {
  std::string symbol;
  unsigned index;  // symbol^index = value
  Poly value;
};

class PolyContext {
 public:
  PolyContext() {
    add_relation("sqrt3", 2, Poly::constant(3));
    add_relation("sqrt91", 2, Poly::constant(91));
    add_relation("sqrt1729", 2, Poly::constant(1729));
    add_relation("cbrt2", 3, Poly::constant(2));
  }

  void add_relation(const std::string& symbol, unsigned index, const Poly& value) {
    relations_.push_back({symbol, index, value});
  }

  // Declares that sqrt(radicand) (index 2) or cbrt(radicand) (index 3) is the
  // symbol `symbol`. The radicand is matched after expansion and reduction.
  void add_radical(const std::string& symbol, unsigned index, const Poly& radicand) {
    Poly r = reduce(radicand);
    radicals_.push_back({symbol, index, r});
    add_relation(symbol, index, r);
  }
  void add_radical(const std::string& symbol, unsigned index, const Expr& radicand) {
    RationalFunction rf = to_rational(radicand);
    if (!rf.den.is_constant()) throw Error("radicand must be polynomial");
    add_radical(symbol, index, rf.num * Poly::constant(1 / rf.den.constant_value()));
  }

  const std::vector<Relation>& relations() const { return relations_; }

  Poly reduce(const Poly& p) const {
    Poly cur = p;
    for (int guard = 0; guard < 64; ++guard) {
      bool changed = false;
      Poly next;
      for (const auto& [m, c] : cur.terms()) {
        const Relation* hit = nullptr;
        unsigned e = 0;
        for (const auto& rel : relations_) {
          auto it = m.find(rel.symbol);
          if (it != m.end() && it->second >= rel.index) {
            hit = &rel;
            e = it->second;
            break;
          }
        }
        if (!hit) {
          next.add_term(m, c);
          continue;
        }
        changed = true;
        Monomial rest = m;
        unsigned keep = e % hit->index;
        if (keep == 0) {
          rest.erase(hit->symbol);
        } else {
          rest[hit->symbol] = keep;
        }
        Poly t;
        t.add_term(rest, c);
        next = next + t * hit->value.pow(e / hit->index);
      }
      cur = std::move(next);
      if (!changed) return cur;
    }
    throw Error("relation reduction did not terminate");
  }

  RationalFunction to_rational(const Expr& e) const { return convert(e.node()); }

  // Polynomial form; throws if the expression has a nonconstant denominator.
  Poly to_poly(const Expr& e) const {
    RationalFunction rf = to_rational(e);
    Poly den = reduce(rf.den);
    if (!den.is_constant() || den.is_zero()) throw Error("expression is not polynomial");
    return reduce(rf.num * Poly::constant(1 / den.constant_value()));
  }

  // Proves a == b by reducing a.num * b.den - b.num * a.den to zero.
  bool identical(const Expr& a, const Expr& b) const {
    RationalFunction ra = to_rational(a);
    RationalFunction rb = to_rational(b);
    if (reduce(ra.den).is_zero() || reduce(rb.den).is_zero()) return false;
    return reduce(ra.num * rb.den - rb.num * ra.den).is_zero();
  }

 private:
  struct Radical {
    std::string symbol;
    unsigned index;
    Poly radicand;
  };

  static bool perfect_power(const mpz_class& n, unsigned k, mpz_class& root) {
    if (n < 0) return false;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    root = r;
    return exact != 0;
  }

  Poly radical_symbol(unsigned index, const Poly& radicand) const {
    Poly r = reduce(radicand);
    for (const auto& rad : radicals_) {
      if (rad.index == index && rad.radicand == r) return Poly::variable(rad.symbol);
    }
    if (r.is_constant()) {
      mpq_class c = r.constant_value();
      if (c.get_den() == 1) {
        mpz_class root;
        if (perfect_power(c.get_num(), index, root)) return Poly::constant(root);
        if (index == 2 && c == 3) return Poly::variable("sqrt3");
        if (index == 2 && c == 91) return Poly::variable("sqrt91");
        if (index == 2 && c == 1729) return Poly::variable("sqrt1729");
        if (index == 3 && c == 2) return Poly::variable("cbrt2");
        if (index == 3 && c == 4) return Poly::variable("cbrt2", 2);
      }
    }
    throw Error("no symbol registered for radical of index " + std::to_string(index) + " of " + r.to_string());
  }

  RationalFunction convert(const Node& n) const {
    auto arg = [&](std::size_t i) { return convert(*n.args[i]); };
    switch (n.op) {
      case Op::Rational: return {Poly::constant(n.value)};
      case Op::Const:
        switch (n.cid) {
          case ConstId::Pi: return {Poly::variable("pi")};
          case ConstId::Sqrt3: return {Poly::variable("sqrt3")};
          case ConstId::Sqrt91: return {Poly::variable("sqrt91")};
          case ConstId::Sqrt1729: return {Poly::variable("sqrt1729")};
          case ConstId::Cbrt2: return {Poly::variable("cbrt2")};
          case ConstId::Cbrt4: return {Poly::variable("cbrt2", 2)};
        }
        break;
      case Op::Var: return {Poly::variable(n.name)};
      case Op::Add: {
        auto a = arg(0), b = arg(1);
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
      }
      case Op::Sub: {
        auto a = arg(0), b = arg(1);
        if (a.den == b.den) return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
      }
      case Op::Mul: {
        auto a = arg(0), b = arg(1);
        return {a.num * b.num, a.den * b.den};
      }
      case Op::Div: {
        auto a = arg(0), b = arg(1);
        if (b.num.is_zero()) throw Error("division by the zero polynomial");
        if (b.num.is_constant()) {
          mpq_class c = b.num.constant_value();
          return {a.num * b.den * Poly::constant(1 / c), a.den};
        }
        return {a.num * b.den, a.den * b.num};
      }
      case Op::Neg: {
        auto a = arg(0);
        return {-a.num, a.den};
      }
      case Op::Pow: {
        auto a = arg(0);
        return {a.num.pow(n.exponent), a.den.pow(n.exponent)};
      }
      case Op::Sqrt:
      case Op::Cbrt: {
        auto a = arg(0);
        Poly den = reduce(a.den);
        if (!den.is_constant()) throw Error("radical of a non-polynomial");
        Poly radicand = a.num * Poly::constant(1 / den.constant_value());
        return {radical_symbol(n.op == Op::Sqrt ? 2 : 3, radicand)};
      }
    }
    throw Error("corrupt expression node");
  }

  std::vector<Relation> relations_;
  std::vector<Radical> radicals_;
};

}  // namespace trispec::rigor
