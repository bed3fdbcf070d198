#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace ehpcalc {

class Field {
 public:
  enum class Kind { QuadraticallyClosed, RealClosed, FiniteOdd, Rationals };

  static Field quadratically_closed() { return Field(Kind::QuadraticallyClosed, 0, 0, 0); }
  static Field real_closed() { return Field(Kind::RealClosed, 0, 0, 0); }
  static Field rationals() { return Field(Kind::Rationals, 0, 0, 0); }
  // q = p^k with p an odd prime; characteristic 2 and non prime powers are rejected.
  static Field finite(long q);

  Kind kind() const { return kind_; }
  long order() const { return q_; }
  long characteristic() const { return p_; }
  int degree() const { return k_; }
  bool is_finite() const { return kind_ == Kind::FiniteOdd; }
  bool is_prime_field() const { return kind_ == Kind::FiniteOdd && k_ == 1; }
  bool formally_real() const { return kind_ == Kind::RealClosed || kind_ == Kind::Rationals; }

  // "quadratically-closed", "real-closed", "F7", "Q"
  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, long q, long p, int k) : kind_(kind), q_(q), p_(p), k_(k) {}
  Kind kind_;
  long q_;
  long p_;
  int k_;
};

// Accepts the names printed by Field::name() plus "C", "R", "rationals", "F_q".
Field parse_field(std::string_view text);

// A nonzero field element. Rational values cover every field here except the nonsquare of
// F_{p^k} with k even, which has no representative in the prime field and is kept symbolic.
struct Unit {
  mpq_class value = 1;
  bool symbolic_nonsquare = false;

  bool operator==(const Unit& o) const { return symbolic_nonsquare == o.symbolic_nonsquare && value == o.value; }
  bool operator<(const Unit& o) const {
    if (symbolic_nonsquare != o.symbolic_nonsquare) return symbolic_nonsquare < o.symbolic_nonsquare;
    return value < o.value;
  }
};

// Reduces to canonical form for the field (residues in 1..p-1 for finite fields).
Unit make_unit(const Field& f, const mpq_class& value);
Unit nonsquare_unit(const Field& f);
std::string unit_to_string(const Unit& u);

// Canonical square-class representative: 1 (quadratically closed), +-1 (real closed),
// 1 or g (finite, g the smallest non-residue; 0 stands for a symbolic g), squarefree integer (Q).
struct SquareClass {
  long rep = 1;
  auto operator<=>(const SquareClass&) const = default;
};

SquareClass square_class(const Field& f, const Unit& u);
SquareClass square_class(const Field& f, const mpq_class& value);
SquareClass nonsquare_class(const Field& f);  // throws FieldError where every unit is a square
SquareClass square_class_mul(const Field& f, SquareClass a, SquareClass b);
Unit class_unit(const Field& f, SquareClass c);
std::string square_class_to_string(const Field& f, SquareClass c);

// Element of GW(field) in normal form: a coefficient per square class.
class GWElement {
 public:
  explicit GWElement(Field f) : field_(f) {}
  GWElement(Field f, std::map<SquareClass, long> terms);

  const Field& field() const { return field_; }
  const std::map<SquareClass, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long coefficient(SquareClass c) const;

  GWElement operator+(const GWElement& o) const;
  GWElement operator-(const GWElement& o) const;
  GWElement operator-() const;
  GWElement operator*(const GWElement& o) const;
  GWElement operator*(long k) const;
  bool operator==(const GWElement&) const = default;

  // "<1> + <-1>", "2<1> - <3>", "0"
  std::string to_string() const;

 private:
  void normalize();
  Field field_;
  std::map<SquareClass, long> terms_;
};

// Signed sum of rank-one forms <a_i>; coefficients must be nonzero.
GWElement gw_make(const Field& f, const std::vector<std::pair<long, Unit>>& terms);
GWElement gw_angle(const Field& f, const Unit& a);
GWElement gw_integer(const Field& f, long n);
GWElement gw_epsilon(const Field& f);     // -<-1>
GWElement gw_hyperbolic(const Field& f);  // <1> + <-1>
GWElement gw_add(const GWElement& x, const GWElement& y);
GWElement gw_mul(const GWElement& x, const GWElement& y);

struct GWInvariants {
  long rank = 0;
  SquareClass disc;
  std::optional<long> signature;  // real closed and rational fields only
};

GWInvariants gw_invariants(const GWElement& x);

enum class Verdict { False, True, Undecided };
std::string verdict_to_string(Verdict v);

// Exact for quadratically closed, real closed and finite fields. Over Q, equal reduced forms are
// equal and differing invariants are unequal; anything else is undecided.
Verdict gw_equal(const GWElement& x, const GWElement& y);

class WittClass {
 public:
  const Field& field() const { return rep_.field(); }
  // Canonical anisotropic representative; over Q an unreduced positive representative.
  const GWElement& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  long rank_parity() const;
  std::optional<long> signature() const;
  // Finite fields: position in the table order [0, <1>, <g>, anisotropic plane].
  std::optional<int> table_index() const;
  bool operator==(const WittClass&) const = default;
  std::string to_string() const;

 private:
  friend WittClass witt_class(const GWElement& x);
  explicit WittClass(GWElement rep) : rep_(std::move(rep)) {}
  GWElement rep_;
};

WittClass witt_class(const GWElement& x);
Verdict witt_equal(const WittClass& x, const WittClass& y);

struct WittRingTable {
  Field field;
  std::vector<WittClass> elements;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  bool cyclic = false;  // additive group
};

// Finite and quadratically closed fields only.
WittRingTable witt_ring_table(const Field& f);

// <<a_1, ..., a_n>> = <1, -a_1> (x) ... (x) <1, -a_n>
GWElement pfister_form(const Field& f, const std::vector<Unit>& units);

class IdealPower {
 public:
  IdealPower(Field f, int n);
  const Field& field() const { return field_; }
  int power() const { return n_; }
  std::string description() const;
  bool contains(const WittClass& x) const;

 private:
  Field field_;
  int n_;
};

// I^n in W(field); W itself for n <= 0.
IdealPower fundamental_ideal_power(const Field& f, int n);

nlohmann::ordered_json gw_to_json(const GWElement& x);

// Helpers for finite prime fields.
long mod_pow(long base, long exp, long mod);
long primitive_root(long p);
long discrete_log(long a, long p);  // relative to primitive_root(p)

}  // namespace ehpcalc
