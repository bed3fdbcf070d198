#include "ehpcalc/expressions.hpp"

#include <cctype>
#include <optional>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/james.hpp"

namespace ehpcalc {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::optional<long> integer() {
    skip();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) return std::nullopt;
    if (end - pos_ > 12) fail("integer too large");
    long v = std::stol(std::string(text_.substr(pos_, end - pos_)));
    pos_ = end;
    return v;
  }
  long require_integer() {
    auto v = integer();
    if (!v) fail("expected an integer");
    return *v;
  }
  // Raw text up to (not including) the closing delimiter.
  std::string until(char close) {
    skip();
    auto end = text_.find(close, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    std::string out(text_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Space grammar ------------------------------------------------------------------------------

SSet space_wedge(Cursor& c);

SSet space_atom(Cursor& c) {
  if (c.accept("(")) {
    SSet inner = space_wedge(c);
    c.expect(")");
    return inner;
  }
  if (c.accept("pt")) return point();
  if (c.accept("S")) {
    const long n = c.require_integer();
    if (n > 64) c.fail("sphere dimension too large");
    return build_sphere(static_cast<int>(n));
  }
  if (c.accept("G")) throw Unsupported("G_m has no finite simplicial model; use the ehp sphere syntax S[i+ja]");
  c.fail("expected a space");
}

SSet space_primary(Cursor& c) {
  const bool james = c.accept("J(");
  const bool filtration = !james && c.accept("Q(");
  if (!james && !filtration) return space_atom(c);
  SSet k = space_wedge(c);
  c.expect(",");
  const long n = c.require_integer();
  c.expect(")");
  if (n < 1 || n > 16) throw IndexOutOfRange("James level must be between 1 and 16");
  if (james) return james_truncation(k, static_cast<int>(n));
  return james_quotient(k, static_cast<int>(n)).sset;
}

SSet space_smash(Cursor& c) {
  std::vector<SSet> factors{space_primary(c)};
  while (c.accept("^")) factors.push_back(space_primary(c));
  if (factors.size() == 1) return std::move(factors.front());
  return SmashComplex(std::move(factors)).sset();
}

SSet space_product(Cursor& c) {
  std::vector<SSet> factors{space_smash(c)};
  while (c.accept("x")) factors.push_back(space_smash(c));
  if (factors.size() == 1) return std::move(factors.front());
  return ProductComplex(std::move(factors)).sset();
}

SSet space_wedge(Cursor& c) {
  SSet out = space_product(c);
  while (c.accept("+")) out = wedge(out, space_product(c));
  return out;
}

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s.size() > 40) throw ParseError("malformed rational '" + std::string(text) + "'");
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit_before = false, digit_after = false;
  for (; k < s.size(); ++k) {
    if (s[k] == '/' && !slash) {
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      (slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digit_before || (slash && !digit_after)) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class v;
  try {
    v = mpq_class(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return v;
}

// GW grammar ---------------------------------------------------------------------------------

GWElement gw_atom(const Field& f, Cursor& c) {
  if (c.accept("<")) return gw_angle(f, parse_unit(f, c.until('>')));
  if (c.accept("eps")) return gw_epsilon(f);
  if (c.accept("h")) return gw_hyperbolic(f);
  c.fail("expected <a>, h, eps or an integer");
}

GWElement gw_term(const Field& f, Cursor& c) {
  auto coeff = c.integer();
  if (coeff) {
    c.accept("*");
    const char next = c.peek();
    if (next == '<' || next == 'h' || next == 'e') return gw_atom(f, c) * *coeff;
    return gw_integer(f, *coeff);
  }
  return gw_atom(f, c);
}

// KMW grammar --------------------------------------------------------------------------------

KMWSymbol kmw_sum(const Field& f, Cursor& c);

KMWSymbol kmw_factor(const Field& f, Cursor& c) {
  if (c.accept("(")) {
    KMWSymbol inner = kmw_sum(f, c);
    c.expect(")");
    return inner;
  }
  if (c.accept("-")) return -kmw_factor(f, c);
  if (c.accept("[")) return kmw_bracket(f, parse_unit(f, c.until(']')));
  if (c.accept("<")) return kmw_angle(f, parse_unit(f, c.until('>')));
  if (c.accept("eta")) return kmw_eta(f);
  if (c.accept("eps")) return kmw_epsilon(f);
  if (c.accept("h")) return kmw_hyperbolic(f);
  if (auto n = c.integer()) return kmw_integer(f, *n);
  c.fail("expected [a], <a>, eta, h, eps or an integer");
}

KMWSymbol kmw_product(const Field& f, Cursor& c) {
  KMWSymbol out = kmw_factor(f, c);
  for (;;) {
    if (c.accept("*")) {
      out = out * kmw_factor(f, c);
      continue;
    }
    // Juxtaposition: "2[a]" or "eta[a]".
    const char next = c.peek();
    if (next == '[' || next == '<' || next == '(' || next == 'e' || next == 'h') {
      out = out * kmw_factor(f, c);
      continue;
    }
    return out;
  }
}

KMWSymbol kmw_sum(const Field& f, Cursor& c) {
  KMWSymbol out = kmw_product(f, c);
  for (;;) {
    if (c.accept("+"))
      out = out + kmw_product(f, c);
    else if (c.accept("-"))
      out = out - kmw_product(f, c);
    else
      return out;
  }
}

}  // namespace

SSet parse_space(std::string_view text) {
  Cursor c(text);
  SSet out = space_wedge(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return out;
}

Unit parse_unit(const Field& f, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "g") return nonsquare_unit(f);
  const mpq_class v = parse_rational(s);
  if (v == 0) throw FieldError("0 is not a unit");
  return make_unit(f, v);
}

GWElement parse_gw(const Field& f, std::string_view text) {
  Cursor c(text);
  GWElement out(f);
  bool first = true;
  while (first || !c.done()) {
    long sign = 1;
    if (c.accept("-"))
      sign = -1;
    else if (!c.accept("+") && !first)
      c.fail("expected '+' or '-'");
    out = out + gw_term(f, c) * sign;
    first = false;
  }
  return out;
}

KMWSymbol parse_kmw(const Field& f, std::string_view text) {
  Cursor c(text);
  KMWSymbol out = kmw_sum(f, c);
  if (!c.done()) c.fail("unexpected trailing input");
  return out;
}

std::vector<std::string> parse_word_letters(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = trim(body.substr(1, body.size() - 2));
  std::vector<std::string> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto bar = body.find('|', start);
    auto letter = trim(body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (letter.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
    out.emplace_back(letter);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace ehpcalc
