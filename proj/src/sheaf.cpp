#include "ehpcalc/sheaf.hpp"

#include <cctype>
#include <optional>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

SheafExpr SheafExpr::kmw(int n) { return {Tag::KMW, n, 0}; }
SheafExpr SheafExpr::km(int n) { return {Tag::KM, n, 0}; }
SheafExpr SheafExpr::km_mod(int n, long r) {
  if (r < 0) throw IndexOutOfRange("modulus must be non-negative");
  if (r == 0) return km(n);
  return {Tag::KMMod, n, r};
}
SheafExpr SheafExpr::ideal(int n) { return {Tag::I, n, 0}; }
SheafExpr SheafExpr::witt() { return {Tag::W, 0, 0}; }
SheafExpr SheafExpr::integers() { return {Tag::Z, 0, 0}; }
SheafExpr SheafExpr::integers_mod(long m) {
  if (m < 0) throw IndexOutOfRange("modulus must be non-negative");
  if (m == 0) return integers();
  if (m == 1) return zero();
  return {Tag::ZMod, 0, m};
}
SheafExpr SheafExpr::zero() { return {Tag::Zero, 0, 0}; }

SheafExpr SheafExpr::tensor(SheafExpr a, SheafExpr b) {
  SheafExpr out(Tag::Tensor, 0, 0);
  out.left_ = std::make_shared<const SheafExpr>(std::move(a));
  out.right_ = std::make_shared<const SheafExpr>(std::move(b));
  return out;
}

SheafExpr SheafExpr::contraction(SheafExpr e, int j) {
  if (j < 0) throw IndexOutOfRange("contraction index must be non-negative");
  SheafExpr out(Tag::Contraction, j, 0);
  out.left_ = std::make_shared<const SheafExpr>(std::move(e));
  return out;
}

std::string SheafExpr::to_string() const {
  switch (tag_) {
    case Tag::KMW:
      return "KMW(" + std::to_string(degree_) + ")";
    case Tag::KM:
      return "KM(" + std::to_string(degree_) + ")";
    case Tag::KMMod:
      return "KM(" + std::to_string(degree_) + ")/" + std::to_string(modulus_);
    case Tag::I:
      return "I(" + std::to_string(degree_) + ")";
    case Tag::W:
      return "W";
    case Tag::Z:
      return "Z";
    case Tag::ZMod:
      return "Z/" + std::to_string(modulus_);
    case Tag::Zero:
      return "0";
    case Tag::Tensor: {
      auto side = [](const SheafExpr& e) {
        return e.tag() == Tag::Tensor ? "(" + e.to_string() + ")" : e.to_string();
      };
      return side(*left_) + " (x) " + side(*right_);
    }
    case Tag::Contraction: {
      const bool wrap = left_->tag() == Tag::Tensor || left_->tag() == Tag::KMMod || left_->tag() == Tag::ZMod;
      return (wrap ? "(" + left_->to_string() + ")" : left_->to_string()) + "_{-" + std::to_string(degree_) + "}";
    }
  }
  return {};
}

bool SheafExpr::operator==(const SheafExpr& o) const {
  if (tag_ != o.tag_ || degree_ != o.degree_ || modulus_ != o.modulus_) return false;
  if (left_ && !(*left_ == *o.left_)) return false;
  if (right_ && !(*right_ == *o.right_)) return false;
  return true;
}

SheafExpr canonical(const SheafExpr& e) {
  switch (e.tag()) {
    case SheafExpr::Tag::KMW:
      return e.degree() < 0 ? SheafExpr::witt() : e;
    case SheafExpr::Tag::I:
      return e.degree() <= 0 ? SheafExpr::witt() : e;
    case SheafExpr::Tag::KM:
      if (e.degree() < 0) return SheafExpr::zero();
      return e.degree() == 0 ? SheafExpr::integers() : e;
    case SheafExpr::Tag::KMMod:
      if (e.degree() < 0) return SheafExpr::zero();
      return e.degree() == 0 ? SheafExpr::integers_mod(e.modulus()) : e;
    default:
      return e;
  }
}

SheafExpr evaluate(const SheafExpr& e) {
  switch (e.tag()) {
    case SheafExpr::Tag::Tensor:
      return aone_tensor(e.left(), e.right());
    case SheafExpr::Tag::Contraction:
      return contraction(e.left(), e.shift());
    default:
      return canonical(e);
  }
}

SheafExpr contraction(const SheafExpr& input, int j) {
  if (j < 0) throw IndexOutOfRange("contraction index must be non-negative");
  const SheafExpr e = evaluate(input);
  switch (e.tag()) {
    case SheafExpr::Tag::KMW:
      return canonical(SheafExpr::kmw(e.degree() - j));
    case SheafExpr::Tag::KM:
      return canonical(SheafExpr::km(e.degree() - j));
    case SheafExpr::Tag::KMMod:
      return canonical(SheafExpr::km_mod(e.degree() - j, e.modulus()));
    case SheafExpr::Tag::I:
      return canonical(SheafExpr::ideal(e.degree() - j));
    case SheafExpr::Tag::W:
    case SheafExpr::Tag::Z:
    case SheafExpr::Tag::ZMod:
    case SheafExpr::Tag::Zero:
      return e;
    default:
      throw NoRule("no contraction rule for " + e.to_string());
  }
}

namespace {

// KM(n)/r with r = 0 for plain KM; nullopt for other tags.
std::optional<std::pair<int, long>> milnor_quotient(const SheafExpr& e) {
  if (e.tag() == SheafExpr::Tag::KM) return std::make_pair(e.degree(), 0L);
  if (e.tag() == SheafExpr::Tag::KMMod) return std::make_pair(e.degree(), e.modulus());
  return std::nullopt;
}

}  // namespace

SheafExpr aone_tensor(const SheafExpr& x, const SheafExpr& y) {
  const SheafExpr a = evaluate(x), b = evaluate(y);
  using Tag = SheafExpr::Tag;
  if (a.tag() == Tag::Z) return b;
  if (b.tag() == Tag::Z) return a;
  if (a.tag() == Tag::Zero || b.tag() == Tag::Zero) return SheafExpr::zero();
  if (a.tag() == Tag::KMW && b.tag() == Tag::KMW && a.degree() >= 1 && b.degree() >= 1)
    return SheafExpr::kmw(a.degree() + b.degree());
  const auto ma = milnor_quotient(a), mb = milnor_quotient(b);
  if (a.tag() == Tag::KMW && a.degree() >= 1 && mb && mb->first >= 1)
    return SheafExpr::km_mod(a.degree() + mb->first, mb->second);
  if (b.tag() == Tag::KMW && b.degree() >= 1 && ma && ma->first >= 1)
    return SheafExpr::km_mod(ma->first + b.degree(), ma->second);
  if (ma && mb && ma->first >= 1 && mb->first >= 1 && ma->second == mb->second)
    return SheafExpr::km_mod(ma->first + mb->first, ma->second);
  throw NoRule("no tensor rule for " + a.to_string() + " (x) " + b.to_string());
}

namespace {

class SheafParser {
 public:
  explicit SheafParser(std::string_view text) : s_(text) {}

  SheafExpr parse() {
    SheafExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("sheaf expression: " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+" || digits.size() > 10) fail("expected an integer");
    return std::stol(digits);
  }

  SheafExpr expr() {
    SheafExpr e = postfix();
    while (accept("(x)")) e = SheafExpr::tensor(std::move(e), postfix());
    return e;
  }

  SheafExpr postfix() {
    SheafExpr e = atom();
    while (accept("_{")) {
      expect("-");
      const long j = integer();
      expect("}");
      if (j < 0) fail("contraction index must be non-negative");
      e = SheafExpr::contraction(std::move(e), static_cast<int>(j));
    }
    return e;
  }

  SheafExpr atom() {
    skip();
    if (accept("KMW(")) {
      const long n = integer();
      expect(")");
      return SheafExpr::kmw(static_cast<int>(n));
    }
    if (accept("KM(")) {
      const long n = integer();
      expect(")");
      if (accept("/")) return SheafExpr::km_mod(static_cast<int>(n), integer());
      return SheafExpr::km(static_cast<int>(n));
    }
    if (accept("I(")) {
      const long n = integer();
      expect(")");
      return SheafExpr::ideal(static_cast<int>(n));
    }
    if (accept("W")) return SheafExpr::witt();
    if (accept("Z")) {
      if (accept("/")) return SheafExpr::integers_mod(integer());
      return SheafExpr::integers();
    }
    if (accept("0")) return SheafExpr::zero();
    if (accept("(")) {
      SheafExpr e = expr();
      expect(")");
      return e;
    }
    fail("expected a sheaf name");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SheafExpr parse_sheaf(std::string_view text) { return SheafParser(text).parse(); }

}  // namespace ehpcalc
