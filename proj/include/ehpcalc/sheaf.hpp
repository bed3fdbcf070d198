#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace ehpcalc {

// Symbolic name of a strictly A^1-invariant sheaf, used for bookkeeping only.
class SheafExpr {
 public:
  enum class Tag { KMW, KM, KMMod, I, W, Z, ZMod, Zero, Tensor, Contraction };

  static SheafExpr kmw(int n);
  static SheafExpr km(int n);
  static SheafExpr km_mod(int n, long r);
  static SheafExpr ideal(int n);
  static SheafExpr witt();
  static SheafExpr integers();
  static SheafExpr integers_mod(long m);
  static SheafExpr zero();
  // Unevaluated nodes.
  static SheafExpr tensor(SheafExpr a, SheafExpr b);
  static SheafExpr contraction(SheafExpr e, int j);

  Tag tag() const { return tag_; }
  int degree() const { return degree_; }
  long modulus() const { return modulus_; }
  int shift() const { return degree_; }
  const SheafExpr& left() const { return *left_; }
  const SheafExpr& right() const { return *right_; }

  // "KMW(5)", "KM(5)/24", "I(3)", "W", "Z/24", "0", "KMW(2) (x) KMW(3)", "KMW(5)_{-6}"
  std::string to_string() const;
  bool operator==(const SheafExpr& o) const;

 private:
  SheafExpr(Tag tag, int degree, long modulus) : tag_(tag), degree_(degree), modulus_(modulus) {}
  Tag tag_;
  int degree_ = 0;  // contraction index for Contraction nodes
  long modulus_ = 0;
  std::shared_ptr<const SheafExpr> left_, right_;
};

// Canonical names: KMW(n<0) = W, I(n<=0) = W, KM(n<0) = 0, KM(0) = Z, KM(0)/r = Z/r.
SheafExpr canonical(const SheafExpr& e);

// (M)_{-j}. KMW, KM, KM/r and I shift their index by -j; W, Z, Z/m and 0 are left unchanged.
SheafExpr contraction(const SheafExpr& e, int j);

// A^1-tensor product on the closed table
//   KMW(m) (x) KMW(n) = KMW(m+n), KMW(m) (x) KM(n)/r = KM(m+n)/r, KM(m)/r (x) KM(n)/r = KM(m+n)/r
// (m, n >= 1, r >= 0 with KM/0 = KM), Z (x) X = X and 0 (x) X = 0. Anything else throws NoRule.
SheafExpr aone_tensor(const SheafExpr& a, const SheafExpr& b);

// Resolves every Tensor and Contraction node.
SheafExpr evaluate(const SheafExpr& e);

// Grammar: "KMW(5)", "KM(5)/24", "I(3)", "W", "Z", "Z/24", "0", "X (x) Y", "X_{-j}", parentheses.
SheafExpr parse_sheaf(std::string_view text);

}  // namespace ehpcalc
