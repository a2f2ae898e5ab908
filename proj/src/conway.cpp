#include "tanglelab/conway.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "tanglelab/errors.hpp"

namespace tanglelab {

TangleExpr TangleExpr::integer(std::int64_t k) { return TangleExpr(expr::Integer{k}); }
TangleExpr TangleExpr::infinity() { return TangleExpr(expr::Infinity{}); }
TangleExpr TangleExpr::rot(const TangleExpr& child) {
  return TangleExpr(expr::Rot{std::make_shared<const TangleExpr>(child)});
}
TangleExpr TangleExpr::compose(const TangleExpr& left, const TangleExpr& right) {
  return TangleExpr(expr::Compose{std::make_shared<const TangleExpr>(left),
                                  std::make_shared<const TangleExpr>(right)});
}
TangleExpr TangleExpr::rational(std::vector<std::int64_t> terms) {
  if (terms.empty()) throw InputError("T(...) needs at least one term");
  return TangleExpr(expr::Rational{std::move(terms)});
}

int TangleExpr::child_count() const noexcept {
  if (as<expr::Rot>()) return 1;
  if (as<expr::Compose>()) return 2;
  return 0;
}

const TangleExpr& TangleExpr::child(int index) const {
  if (auto r = as<expr::Rot>(); r && index == 0) return *r->child;
  if (auto c = as<expr::Compose>()) {
    if (index == 0) return *c->left;
    if (index == 1) return *c->right;
  }
  throw InputError("expression has no child " + std::to_string(index));
}

bool operator==(const TangleExpr& a, const TangleExpr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (auto x = a.as<expr::Integer>()) return x->twists == b.as<expr::Integer>()->twists;
  if (a.as<expr::Infinity>()) return true;
  if (auto x = a.as<expr::Rational>()) return x->terms == b.as<expr::Rational>()->terms;
  for (int i = 0; i < a.child_count(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  TangleExpr parse() {
    TangleExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) throw ParseError("expected '" + tok + "'", pos_);
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected integer", start);
    }
    // Accumulate as a negative number so INT64_MIN parses.
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int digit = s_[pos_] - '0';
      if (v < (std::numeric_limits<std::int64_t>::min() + digit) / 10) {
        throw ParseError("integer overflow", start);
      }
      v = v * 10 - digit;
      ++pos_;
    }
    if (!negative) {
      if (v == std::numeric_limits<std::int64_t>::min()) throw ParseError("integer overflow", start);
      v = -v;
    }
    return v;
  }

  TangleExpr expr() {
    skip_ws();
    if (accept("inf")) return TangleExpr::infinity();
    if (accept("r(")) {
      TangleExpr child = expr();
      expect(")");
      return TangleExpr::rot(child);
    }
    if (accept("T(")) {
      std::vector<std::int64_t> terms{integer()};
      while (accept(",")) terms.push_back(integer());
      expect(")");
      return TangleExpr::rational(std::move(terms));
    }
    if (accept("(")) {
      TangleExpr left = expr();
      expect("*");
      TangleExpr right = expr();
      expect(")");
      return TangleExpr::compose(left, right);
    }
    return TangleExpr::integer(integer());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

TangleExpr parse_conway(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const TangleExpr& e) {
  if (auto x = e.as<expr::Integer>()) return std::to_string(x->twists);
  if (e.as<expr::Infinity>()) return "inf";
  if (auto x = e.as<expr::Rot>()) return "r(" + to_string(*x->child) + ")";
  if (auto x = e.as<expr::Compose>()) {
    return "(" + to_string(*x->left) + "*" + to_string(*x->right) + ")";
  }
  const auto& terms = e.as<expr::Rational>()->terms;
  std::string out = "T(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(terms[i]);
  }
  return out + ")";
}

TangleExpr rotate(const TangleExpr& e) { return TangleExpr::rot(e); }
TangleExpr compose(const TangleExpr& a, const TangleExpr& b) { return TangleExpr::compose(a, b); }

TangleExpr expand_rational(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw InputError("T(...) needs at least one term");
  TangleExpr v = TangleExpr::integer(terms[0]);
  TangleExpr n = TangleExpr::integer(checked_mul(terms[0], -1));
  for (std::size_t j = 1; j < terms.size(); ++j) {
    TangleExpr v_next = TangleExpr::compose(TangleExpr::integer(terms[j]), TangleExpr::rot(n));
    TangleExpr n_next =
        TangleExpr::compose(TangleExpr::integer(checked_mul(terms[j], -1)), TangleExpr::rot(v));
    v = std::move(v_next);
    n = std::move(n_next);
  }
  return v;
}

TangleExpr expand(const TangleExpr& e) {
  if (auto x = e.as<expr::Rational>()) return expand_rational(x->terms);
  if (auto x = e.as<expr::Rot>()) return TangleExpr::rot(expand(*x->child));
  if (auto x = e.as<expr::Compose>()) return TangleExpr::compose(expand(*x->left), expand(*x->right));
  return e;
}

TangleDiagram compile(const TangleExpr& e) {
  if (auto x = e.as<expr::Integer>()) {
    if (x->twists == 0) return zero_tangle();
    const int sign = x->twists > 0 ? 1 : -1;
    const TangleDiagram unit = unit_twist(sign);
    TangleDiagram d = unit;
    for (std::int64_t i = 1; i < (x->twists > 0 ? x->twists : -x->twists); ++i) {
      d = compose_diagrams(d, unit);
    }
    return d;
  }
  if (e.as<expr::Infinity>()) return infinity_tangle();
  if (auto x = e.as<expr::Rot>()) return rotate_diagram(compile(*x->child), 1);
  if (auto x = e.as<expr::Compose>()) return compose_diagrams(compile(*x->left), compile(*x->right));
  return compile(expand_rational(e.as<expr::Rational>()->terms));
}

Fraction continued_fraction_value(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw InputError("empty continued fraction");
  Fraction v(terms[0]);
  for (std::size_t j = 1; j < terms.size(); ++j) v = Fraction(terms[j]) + v.reciprocal();
  return v;
}

std::vector<std::int64_t> continued_fraction_terms(const Fraction& f) {
  if (f.is_infinite()) throw InputError("infinity has no continued fraction expansion");
  std::vector<std::int64_t> outer_first;
  std::int64_t p = f.num(), q = f.den();
  while (true) {
    std::int64_t a = p / q;
    std::int64_t r = p % q;
    if (r < 0) {
      --a;
      r += q;
    }
    outer_first.push_back(a);
    if (r == 0) break;
    p = q;
    q = r;
  }
  return {outer_first.rbegin(), outer_first.rend()};
}

bool is_rational(const TangleExpr& e) {
  if (e.as<expr::Integer>() || e.as<expr::Infinity>() || e.as<expr::Rational>()) return true;
  if (auto x = e.as<expr::Rot>()) return is_rational(*x->child);
  const auto& c = *e.as<expr::Compose>();
  if (c.left->as<expr::Integer>()) return is_rational(*c.right);
  if (c.right->as<expr::Integer>()) return is_rational(*c.left);
  return false;
}

Fraction slope(const TangleExpr& e) {
  if (auto x = e.as<expr::Integer>()) return Fraction(x->twists);
  if (e.as<expr::Infinity>()) return Fraction::infinity();
  if (auto x = e.as<expr::Rational>()) return continued_fraction_value(x->terms);
  if (auto x = e.as<expr::Rot>()) return -slope(*x->child).reciprocal();
  const auto& c = *e.as<expr::Compose>();
  if (c.left->as<expr::Integer>() || c.right->as<expr::Integer>()) {
    return slope(*c.left) + slope(*c.right);
  }
  throw NotRational("expression " + to_string(e) + " is not rational");
}

TangleExpr subtree(const TangleExpr& root, const std::vector<int>& path) {
  const TangleExpr* cur = &root;
  for (int i : path) cur = &cur->child(i);
  return *cur;
}

namespace {
TangleExpr replace_at(const TangleExpr& node, const std::vector<int>& path, std::size_t depth,
                      const TangleExpr& replacement) {
  if (depth == path.size()) return replacement;
  const int i = path[depth];
  if (auto x = node.as<expr::Rot>(); x && i == 0) {
    return TangleExpr::rot(replace_at(*x->child, path, depth + 1, replacement));
  }
  if (auto x = node.as<expr::Compose>()) {
    if (i == 0) return TangleExpr::compose(replace_at(*x->left, path, depth + 1, replacement), *x->right);
    if (i == 1) return TangleExpr::compose(*x->left, replace_at(*x->right, path, depth + 1, replacement));
  }
  throw InputError("path " + format_path(path) + " does not address a subtree");
}
}  // namespace

TangleExpr replace_subtree(const TangleExpr& root, const std::vector<int>& path,
                           const TangleExpr& replacement) {
  return replace_at(root, path, 0, replacement);
}

std::string format_path(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::vector<int> parse_path(const std::string& text) {
  if (text == "root" || text.empty()) return {};
  std::vector<int> path;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '.')) {
    if (tok != "0" && tok != "1") throw InputError("bad path component '" + tok + "'");
    path.push_back(tok[0] - '0');
  }
  return path;
}

std::int64_t crossing_count(const TangleExpr& e) {
  if (auto x = e.as<expr::Integer>()) return std::llabs(x->twists);
  if (e.as<expr::Infinity>()) return 0;
  if (auto x = e.as<expr::Rational>()) {
    std::int64_t total = 0;
    for (auto t : x->terms) total = checked_add(total, std::llabs(t));
    return total;
  }
  std::int64_t total = 0;
  for (int i = 0; i < e.child_count(); ++i) total = checked_add(total, crossing_count(e.child(i)));
  return total;
}

}  // namespace tanglelab
