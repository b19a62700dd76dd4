#pragma once

// Adaptive bisection over boxes. The engine is generic: a predicate looks at
// one sub-box and answers HOLDS, FAILS (certainly violated somewhere on it) or
// SPLIT. The box is split along its widest dimension, normalized by the
// initial width, so that p and alpha ranges of different scales bisect evenly.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "trispec/rigor/expr.hpp"

namespace trispec::rigor {

using Box = Assignment;

enum class BoxVerdict { HOLDS, FAILS, SPLIT };

struct BisectOutcome {
  bool proven = false;
  bool refuted = false;       // some sub-box certainly violates the claim
  std::optional<Box> witness; // first offending or undecided box
  std::size_t boxes = 0;
  unsigned depth = 0;         // deepest level visited
};

inline std::string box_to_string(const Box& box) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : box) {
    if (!first) s += ", ";
    first = false;
    s += k + " in " + v.to_string(10);
  }
  return s + "}";
}

template <class Pred>
BisectOutcome bisect_prove(const Box& box, Pred&& pred, unsigned max_depth = 40) {
  BisectOutcome out;
  std::map<std::string, double> scale;
  for (const auto& [k, v] : box) {
    double w = v.width();
    scale[k] = w > 0 ? w : 1.0;
  }
  struct Item {
    Box box;
    unsigned depth;
  };
  std::vector<Item> stack;
  stack.push_back({box, 0});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    ++out.boxes;
    out.depth = std::max(out.depth, it.depth);
    BoxVerdict v;
    try {
      v = pred(static_cast<const Box&>(it.box));
    } catch (const EvaluationError&) {
      v = BoxVerdict::SPLIT;
    }
    if (v == BoxVerdict::HOLDS) continue;
    if (v == BoxVerdict::FAILS) {
      out.refuted = true;
      out.witness = it.box;
      return out;
    }
    if (it.depth >= max_depth) {
      out.witness = it.box;
      return out;
    }
    std::string widest;
    double best = -1;
    for (const auto& [k, iv] : it.box) {
      double w = iv.width() / scale[k];
      if (w > best) {
        best = w;
        widest = k;
      }
    }
    if (best <= 0) {
      out.witness = it.box;
      return out;
    }
    auto [left, right] = it.box.at(widest).bisect();
    Box b1 = it.box, b2 = std::move(it.box);
    b1.insert_or_assign(widest, std::move(left));
    b2.insert_or_assign(widest, std::move(right));
    // Depth-first, left half first, for a deterministic visiting order.
    stack.push_back({std::move(b2), it.depth + 1});
    stack.push_back({std::move(b1), it.depth + 1});
  }
  out.proven = true;
  return out;
}

enum class Sign { NEGATIVE, POSITIVE, UNKNOWN };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::NEGATIVE: return "NEGATIVE";
    case Sign::POSITIVE: return "POSITIVE";
    case Sign::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

enum class Claim { POSITIVE, NEGATIVE, NONNEGATIVE, NONPOSITIVE };

inline const char* to_string(Claim c) {
  switch (c) {
    case Claim::POSITIVE: return "> 0";
    case Claim::NEGATIVE: return "< 0";
    case Claim::NONNEGATIVE: return ">= 0";
    case Claim::NONPOSITIVE: return "<= 0";
  }
  return "?";
}

inline Claim negate(Claim c) {
  switch (c) {
    case Claim::POSITIVE: return Claim::NONPOSITIVE;
    case Claim::NEGATIVE: return Claim::NONNEGATIVE;
    case Claim::NONNEGATIVE: return Claim::NEGATIVE;
    case Claim::NONPOSITIVE: return Claim::POSITIVE;
  }
  return c;
}

inline BoxVerdict judge(const Interval& v, Claim c) {
  switch (c) {
    case Claim::POSITIVE:
      if (v.certainly_positive()) return BoxVerdict::HOLDS;
      if (v.certainly_nonpositive()) return BoxVerdict::FAILS;
      break;
    case Claim::NEGATIVE:
      if (v.certainly_negative()) return BoxVerdict::HOLDS;
      if (v.certainly_nonnegative()) return BoxVerdict::FAILS;
      break;
    case Claim::NONNEGATIVE:
      if (v.certainly_nonnegative()) return BoxVerdict::HOLDS;
      if (v.certainly_negative()) return BoxVerdict::FAILS;
      break;
    case Claim::NONPOSITIVE:
      if (v.certainly_nonpositive()) return BoxVerdict::HOLDS;
      if (v.certainly_positive()) return BoxVerdict::FAILS;
      break;
  }
  return BoxVerdict::SPLIT;
}

// Proves `expr claim` everywhere on the box.
inline BisectOutcome prove_over(const Expr& expr, const Box& box, Claim claim, unsigned max_depth = 40,
                                Precision prec = kDefaultPrecision) {
  return bisect_prove(
      box, [&](const Box& b) { return judge(iv_eval(expr, b, prec), claim); }, max_depth);
}

struct SignResult {
  Sign sign = Sign::UNKNOWN;
  std::optional<Box> witness;
  std::size_t boxes = 0;
};

inline SignResult sign_over_detail(const Expr& expr, const Box& box, unsigned max_depth = 40,
                                   Precision prec = kDefaultPrecision) {
  SignResult r;
  Box mid;
  for (const auto& [k, v] : box) mid.insert_or_assign(k, v.midpoint());
  Interval m(prec);
  try {
    m = iv_eval(expr, mid, prec);
  } catch (const EvaluationError&) {
    return r;
  }
  Claim target;
  if (m.certainly_positive()) {
    target = Claim::POSITIVE;
  } else if (m.certainly_negative()) {
    target = Claim::NEGATIVE;
  } else {
    r.witness = mid;
    return r;
  }
  BisectOutcome o = prove_over(expr, box, target, max_depth, prec);
  r.boxes = o.boxes;
  if (o.proven) {
    r.sign = target == Claim::POSITIVE ? Sign::POSITIVE : Sign::NEGATIVE;
  } else {
    r.witness = o.witness;
  }
  return r;
}

inline Sign sign_over(const Expr& expr, const Box& box, unsigned max_depth = 40, Precision prec = kDefaultPrecision) {
  return sign_over_detail(expr, box, max_depth, prec).sign;
}

}  // namespace trispec::rigor
