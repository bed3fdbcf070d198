#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ehpcalc/forms.hpp"

namespace ehpcalc {

// eta^s [a_1] ... [a_m]; eta is central so it is collected on the left.
struct Monomial {
  int eta = 0;
  std::vector<Unit> brackets;

  int degree() const { return static_cast<int>(brackets.size()) - eta; }
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    if (eta != o.eta) return eta < o.eta;
    return brackets < o.brackets;
  }
};

// Homogeneous element of K^MW_*(field) as a formal integer combination of monomials.
class KMWSymbol {
 public:
  KMWSymbol(Field f, int degree) : field_(f), degree_(degree) {}

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  const std::map<Monomial, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Monomials containing [1] vanish; the degree must match.
  void add_term(Monomial m, long coefficient);

  KMWSymbol operator+(const KMWSymbol& o) const;
  KMWSymbol operator-(const KMWSymbol& o) const;
  KMWSymbol operator-() const;
  KMWSymbol operator*(const KMWSymbol& o) const;
  KMWSymbol operator*(long k) const;
  bool operator==(const KMWSymbol&) const = default;

  // "2 + eta[-1]", "[2][3] - eta[2][2][3]", "0"
  std::string to_string() const;

 private:
  Field field_;
  int degree_;
  std::map<Monomial, long> terms_;
};

KMWSymbol kmw_bracket(const Field& f, const Unit& a);
KMWSymbol kmw_eta(const Field& f);
KMWSymbol kmw_integer(const Field& f, long n);
KMWSymbol kmw_angle(const Field& f, const Unit& a);  // 1 + eta[a]
KMWSymbol kmw_epsilon(const Field& f);               // -<-1>
KMWSymbol kmw_hyperbolic(const Field& f);            // 2 + eta[-1]
KMWSymbol kmw_add(const KMWSymbol& x, const KMWSymbol& y);
KMWSymbol kmw_mul(const KMWSymbol& x, const KMWSymbol& y);

// Element of K^M_n(field) in the groups used here: Z/m (finite prime fields in degree 1,
// real closed fields on the sign subring), the multiplicative group (quadratically closed,
// degree 1) or 0.
struct MilnorElement {
  enum class Group { Trivial, Cyclic, Multiplicative };
  Group group = Group::Trivial;
  long order = 0;
  long residue = 0;
  mpq_class value = 1;

  bool is_zero() const;
  // Image in K^M_n / 2.
  long mod2() const;
  bool operator==(const MilnorElement& o) const;
  std::string to_string() const;
};

struct KMWNormalForm {
  int degree = 0;
  std::optional<GWElement> gw;          // degree 0
  std::optional<WittClass> witt;        // degree < 0: W; degree >= 1: the I^n component
  std::optional<MilnorElement> milnor;  // degree >= 1

  bool operator==(const KMWNormalForm& o) const;
  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
};

// Throws Unsupported where the field has no finite description of K^M_n or I^n
// (Q and F_{p^k}, k > 1, in positive degree; real closed units other than +-1;
// quadratically closed degree >= 2).
KMWNormalForm kmw_normal_form(const KMWSymbol& x);

// Milnor and Witt components have equal images in K^M_n/2 = I^n/I^{n+1}, and the Witt
// component lies in I^n.
bool compatible(const KMWNormalForm& nf);

// Normal forms when available; otherwise bounded rewriting with the defining relations,
// which can only prove equality.
Verdict kmw_equal(const KMWSymbol& x, const KMWSymbol& y);

// sum c <a>  ->  sum c (1 + eta[a])
KMWSymbol gw_to_kmw(const GWElement& x);

struct RationalDecomposition {
  bool milnor_nontrivial = false;
  bool witt_nontrivial = false;
};

// K^MW_n (x) Q = K^M_n (x) Q  x  I^n (x) Q as sheaves over the field.
RationalDecomposition rational_decomposition(int n, const Field& f);

}  // namespace ehpcalc
