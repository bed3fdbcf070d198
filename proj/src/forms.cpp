#include "ehpcalc/forms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

Field Field::finite(long q) {
  if (q < 3) throw FieldError("finite field order must be at least 3, got " + std::to_string(q));
  if (q % 2 == 0) throw FieldError("characteristic 2 is not supported");
  long p = 3;
  while (p * p <= q && q % p != 0) p += 2;
  if (q % p != 0) p = q;
  long rest = q;
  int k = 0;
  while (rest % p == 0) rest /= p, ++k;
  if (rest != 1) throw FieldError(std::to_string(q) + " is not a prime power");
  return Field(Kind::FiniteOdd, q, p, k);
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::QuadraticallyClosed:
      return "quadratically-closed";
    case Kind::RealClosed:
      return "real-closed";
    case Kind::FiniteOdd:
      return "F" + std::to_string(q_);
    case Kind::Rationals:
      return "Q";
  }
  return {};
}

Field parse_field(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "quadratically-closed" || t == "qc" || t == "c") return Field::quadratically_closed();
  if (t == "real-closed" || t == "rc" || t == "r") return Field::real_closed();
  if (t == "q" || t == "rationals") return Field::rationals();
  std::string digits;
  if (t.size() > 1 && t[0] == 'f') digits = t.substr(t[1] == '_' ? 2 : 1);
  if (!digits.empty() && digits.size() < 12 &&
      std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return Field::finite(std::stol(digits));
  throw ParseError("unknown field '" + std::string(text) + "'");
}

long mod_pow(long base, long exp, long mod) {
  __int128 result = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

namespace {

long residue_mod(const mpz_class& v, long p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

bool is_residue(long a, long p) { return mod_pow(a, (p - 1) / 2, p) == 1; }

long smallest_nonresidue(long p) {
  for (long a = 2;; ++a)
    if (!is_residue(a, p)) return a;
}

long squarefree_part(const mpq_class& v) {
  mpz_class n = v.get_num() * v.get_den();
  if (abs(n) > mpz_class(1000000000000L))
    throw Unsupported("rational square classes are limited to |numerator * denominator| <= 10^12");
  long m = n.get_si();
  const long sign = m < 0 ? -1 : 1;
  m *= sign;
  long out = 1;
  for (long d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) m /= d, ++e;
    if (e % 2) out *= d;
  }
  return sign * out * m;
}

}  // namespace

long primitive_root(long p) {
  std::vector<long> primes;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (long g = 2;; ++g) {
    if (g % p == 0) continue;
    if (std::all_of(primes.begin(), primes.end(), [&](long r) { return mod_pow(g, (p - 1) / r, p) != 1; }))
      return g;
  }
}

long discrete_log(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) throw FieldError("0 has no discrete logarithm");
  const long g = primitive_root(p);
  long x = 1;
  for (long k = 0; k < p - 1; ++k) {
    if (x == a) return k;
    x = static_cast<long>(static_cast<__int128>(x) * g % p);
  }
  throw FieldError("discrete logarithm not found");
}

Unit make_unit(const Field& f, const mpq_class& value) {
  if (value == 0) throw FieldError("0 is not a unit");
  if (!f.is_finite()) return {value, false};
  const long p = f.characteristic();
  const long num = residue_mod(value.get_num(), p);
  const long den = residue_mod(value.get_den(), p);
  if (num == 0) throw FieldError(value.get_str() + " is 0 in " + f.name());
  if (den == 0) throw FieldError(value.get_str() + " is not defined in " + f.name());
  return {mpq_class(static_cast<long>(static_cast<__int128>(num) * mod_pow(den, p - 2, p) % p)), false};
}

Unit nonsquare_unit(const Field& f) {
  if (!f.is_finite()) throw FieldError("g names the fixed non-residue of a finite field");
  if (f.degree() % 2 == 0) return {1, true};
  return {mpq_class(smallest_nonresidue(f.characteristic())), false};
}

std::string unit_to_string(const Unit& u) { return u.symbolic_nonsquare ? "g" : u.value.get_str(); }

SquareClass nonsquare_class(const Field& f) {
  switch (f.kind()) {
    case Field::Kind::FiniteOdd:
      return {f.degree() % 2 == 0 ? 0 : smallest_nonresidue(f.characteristic())};
    case Field::Kind::RealClosed:
      return {-1};
    default:
      throw FieldError("no distinguished non-square in " + f.name());
  }
}

SquareClass square_class(const Field& f, const Unit& u) {
  if (u.symbolic_nonsquare) {
    if (!f.is_finite() || f.degree() % 2 != 0) throw FieldError("symbolic non-square outside F_{p^even}");
    return {0};
  }
  if (u.value == 0) throw FieldError("0 is not a unit");
  switch (f.kind()) {
    case Field::Kind::QuadraticallyClosed:
      return {1};
    case Field::Kind::RealClosed:
      return {u.value > 0 ? 1 : -1};
    case Field::Kind::FiniteOdd: {
      const Unit r = make_unit(f, u.value);
      if (f.degree() % 2 == 0) return {1};
      return is_residue(r.value.get_num().get_si(), f.characteristic()) ? SquareClass{1} : nonsquare_class(f);
    }
    case Field::Kind::Rationals:
      return {squarefree_part(u.value)};
  }
  return {1};
}

SquareClass square_class(const Field& f, const mpq_class& value) { return square_class(f, make_unit(f, value)); }

SquareClass square_class_mul(const Field& f, SquareClass a, SquareClass b) {
  switch (f.kind()) {
    case Field::Kind::QuadraticallyClosed:
      return {1};
    case Field::Kind::RealClosed:
      return {a.rep * b.rep};
    case Field::Kind::FiniteOdd:
      if (a.rep == 1) return b;
      if (b.rep == 1) return a;
      return {1};
    case Field::Kind::Rationals: {
      const long g = std::gcd(a.rep, b.rep);
      return {(a.rep / g) * (b.rep / g)};
    }
  }
  return {1};
}

Unit class_unit(const Field& f, SquareClass c) {
  if (f.is_finite() && c.rep == 0) return {1, true};
  return {mpq_class(c.rep), false};
}

std::string square_class_to_string(const Field& f, SquareClass c) {
  if (f.is_finite() && c.rep != 1) return "g";
  return std::to_string(c.rep);
}

GWElement::GWElement(Field f, std::map<SquareClass, long> terms) : field_(f), terms_(std::move(terms)) { normalize(); }

void GWElement::normalize() {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  switch (field_.kind()) {
    case Field::Kind::QuadraticallyClosed: {
      long n = 0;
      for (const auto& [c, k] : terms_) n += k;
      terms_.clear();
      if (n) terms_[{1}] = n;
      break;
    }
    case Field::Kind::RealClosed:
      break;
    case Field::Kind::FiniteOdd: {
      const SquareClass g = nonsquare_class(field_);
      long n = 0, e = 0;
      for (const auto& [c, k] : terms_) {
        n += k;
        if (c.rep != 1) e += k;
      }
      e = ((e % 2) + 2) % 2;
      terms_.clear();
      if (n - e) terms_[{1}] = n - e;
      if (e) terms_[g] = e;
      break;
    }
    case Field::Kind::Rationals: {
      // <a> + <-a> = <1> + <-1>
      std::vector<long> positive;
      for (const auto& [c, k] : terms_)
        if (c.rep > 1) positive.push_back(c.rep);
      for (long a : positive) {
        auto pa = terms_.find({a});
        auto na = terms_.find({-a});
        if (pa == terms_.end() || na == terms_.end()) continue;
        if ((pa->second > 0) != (na->second > 0)) continue;
        const long m = pa->second > 0 ? std::min(pa->second, na->second) : std::max(pa->second, na->second);
        pa->second -= m;
        na->second -= m;
        terms_[{1}] += m;
        terms_[{-1}] += m;
      }
      std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
      break;
    }
  }
}

long GWElement::coefficient(SquareClass c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("elements over " + a.name() + " and " + b.name());
}

}  // namespace

GWElement GWElement::operator+(const GWElement& o) const {
  require_same_field(field_, o.field_);
  auto t = terms_;
  for (const auto& [c, k] : o.terms_) t[c] += k;
  return GWElement(field_, std::move(t));
}

GWElement GWElement::operator-() const {
  auto t = terms_;
  for (auto& [c, k] : t) k = -k;
  return GWElement(field_, std::move(t));
}

GWElement GWElement::operator-(const GWElement& o) const { return *this + (-o); }

GWElement GWElement::operator*(const GWElement& o) const {
  require_same_field(field_, o.field_);
  std::map<SquareClass, long> t;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) t[square_class_mul(field_, a, b)] += x * y;
  return GWElement(field_, std::move(t));
}

GWElement GWElement::operator*(long k) const {
  auto t = terms_;
  for (auto& [c, v] : t) v *= k;
  return GWElement(field_, std::move(t));
}

std::string GWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<SquareClass, long>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    auto key = [](long r) { return std::make_tuple(r != 1, r == 0 ? 0 : std::labs(r), r < 0); };
    return key(x.first.rep) < key(y.first.rep);
  });
  std::string out;
  for (const auto& [c, k] : order) {
    const long mag = std::labs(k);
    if (out.empty())
      out += k < 0 ? "-" : "";
    else
      out += k < 0 ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag);
    out += "<" + square_class_to_string(field_, c) + ">";
  }
  return out;
}

GWElement gw_make(const Field& f, const std::vector<std::pair<long, Unit>>& terms) {
  std::map<SquareClass, long> t;
  for (const auto& [k, u] : terms) {
    if (k == 0) throw FieldError("zero coefficient in a diagonal form");
    t[square_class(f, u)] += k;
  }
  return GWElement(f, std::move(t));
}

GWElement gw_angle(const Field& f, const Unit& a) { return gw_make(f, {{1, a}}); }

GWElement gw_integer(const Field& f, long n) { return GWElement(f, {{SquareClass{1}, n}}); }

GWElement gw_epsilon(const Field& f) { return -gw_angle(f, {-1, false}); }

GWElement gw_hyperbolic(const Field& f) { return gw_integer(f, 1) + gw_angle(f, {-1, false}); }

GWElement gw_add(const GWElement& x, const GWElement& y) { return x + y; }

GWElement gw_mul(const GWElement& x, const GWElement& y) { return x * y; }

GWInvariants gw_invariants(const GWElement& x) {
  const Field& f = x.field();
  GWInvariants out;
  for (const auto& [c, k] : x.terms()) {
    out.rank += k;
    if (k % 2) out.disc = square_class_mul(f, out.disc, c);
  }
  if (f.formally_real()) {
    long s = 0;
    for (const auto& [c, k] : x.terms()) s += c.rep > 0 ? k : -k;
    out.signature = s;
  }
  return out;
}

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Undecided:
      return "undecided";
  }
  return {};
}

Verdict gw_equal(const GWElement& x, const GWElement& y) {
  require_same_field(x.field(), y.field());
  if (x == y || (x - y).is_zero()) return Verdict::True;
  if (x.field().kind() != Field::Kind::Rationals) return Verdict::False;
  const auto a = gw_invariants(x), b = gw_invariants(y);
  if (a.rank != b.rank || a.disc != b.disc || a.signature != b.signature) return Verdict::False;
  return Verdict::Undecided;
}

WittClass witt_class(const GWElement& x) {
  const Field& f = x.field();
  const auto inv = gw_invariants(x);
  switch (f.kind()) {
    case Field::Kind::QuadraticallyClosed:
      return WittClass(gw_integer(f, ((inv.rank % 2) + 2) % 2));
    case Field::Kind::RealClosed: {
      const long s = *inv.signature;
      return WittClass(s >= 0 ? gw_integer(f, s) : GWElement(f, {{SquareClass{-1}, -s}}));
    }
    case Field::Kind::FiniteOdd: {
      const SquareClass g = nonsquare_class(f);
      const long n = inv.rank, e = x.coefficient(g);
      const GWElement one = gw_integer(f, 1), gg = GWElement(f, {{g, 1}});
      if (f.order() % 4 == 1) {
        GWElement rep(f);
        if (((n - e) % 2 + 2) % 2) rep = rep + one;
        if ((e % 2 + 2) % 2) rep = rep + gg;
        return WittClass(rep);
      }
      switch (((n - 2 * e) % 4 + 4) % 4) {
        case 0:
          return WittClass(GWElement(f));
        case 1:
          return WittClass(one);
        case 2:
          return WittClass(one * 2);
        default:
          return WittClass(gg);
      }
    }
    case Field::Kind::Rationals: {
      // -<a> = <-a> in W, then cancel <a> + <-a>.
      std::map<SquareClass, long> t;
      for (const auto& [c, k] : x.terms()) {
        if (k > 0)
          t[c] += k;
        else
          t[{-c.rep}] += -k;
      }
      for (auto& [c, k] : t) {
        if (c.rep <= 0) continue;
        auto it = t.find({-c.rep});
        if (it == t.end()) continue;
        const long m = std::min(k, it->second);
        k -= m;
        it->second -= m;
      }
      return WittClass(GWElement(f, std::move(t)));
    }
  }
  throw FieldError("unknown field");
}

long WittClass::rank_parity() const {
  long n = 0;
  for (const auto& [c, k] : rep_.terms()) n += k;
  return ((n % 2) + 2) % 2;
}

std::optional<long> WittClass::signature() const { return gw_invariants(rep_).signature; }

std::optional<int> WittClass::table_index() const {
  const Field& f = field();
  if (f.kind() == Field::Kind::QuadraticallyClosed) return static_cast<int>(rank_parity());
  if (!f.is_finite()) return std::nullopt;
  if (rep_.is_zero()) return 0;
  if (rep_ == gw_integer(f, 1)) return 1;
  if (rep_ == GWElement(f, {{nonsquare_class(f), 1}})) return 2;
  return 3;
}

std::string WittClass::to_string() const { return rep_.to_string(); }

Verdict witt_equal(const WittClass& x, const WittClass& y) {
  require_same_field(x.field(), y.field());
  if (x == y || witt_class(x.representative() - y.representative()).is_zero()) return Verdict::True;
  if (x.field().kind() != Field::Kind::Rationals) return Verdict::False;
  auto signed_disc = [](const WittClass& w) {
    const auto inv = gw_invariants(w.representative());
    const long r = inv.rank;
    return (r * (r - 1) / 2) % 2 ? -inv.disc.rep : inv.disc.rep;
  };
  if (x.rank_parity() != y.rank_parity() || x.signature() != y.signature() ||
      squarefree_part(mpq_class(signed_disc(x))) != squarefree_part(mpq_class(signed_disc(y))))
    return Verdict::False;
  return Verdict::Undecided;
}

WittRingTable witt_ring_table(const Field& f) {
  WittRingTable t{f, {}, {}, {}, false};
  if (f.kind() == Field::Kind::QuadraticallyClosed) {
    t.elements = {witt_class(GWElement(f)), witt_class(gw_integer(f, 1))};
  } else if (f.is_finite()) {
    const GWElement one = gw_integer(f, 1), g(f, {{nonsquare_class(f), 1}});
    const GWElement plane = f.order() % 4 == 1 ? one + g : one * 2;
    t.elements = {witt_class(GWElement(f)), witt_class(one), witt_class(g), witt_class(plane)};
  } else {
    throw Unsupported("Witt ring table of " + f.name() + " is infinite");
  }
  const std::size_t n = t.elements.size();
  auto index = [&](const WittClass& w) {
    for (std::size_t i = 0; i < n; ++i)
      if (t.elements[i] == w) return static_cast<int>(i);
    throw InvalidComplex("Witt class outside the table");
  };
  t.add.assign(n, std::vector<int>(n));
  t.mul.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = t.elements[i].representative();
      const auto& b = t.elements[j].representative();
      t.add[i][j] = index(witt_class(a + b));
      t.mul[i][j] = index(witt_class(a * b));
    }
  for (std::size_t i = 0; i < n && !t.cyclic; ++i) {
    std::size_t order = 1;
    int x = static_cast<int>(i);
    while (x != 0) x = t.add[x][i], ++order;
    t.cyclic = order == n;
  }
  return t;
}

GWElement pfister_form(const Field& f, const std::vector<Unit>& units) {
  GWElement out = gw_integer(f, 1);
  for (const auto& a : units) {
    Unit neg = a;
    if (neg.symbolic_nonsquare) {
      // -g has the class of g exactly when -1 is a square
      neg = f.order() % 4 == 1 ? a : Unit{1, false};
    } else {
      neg.value = -neg.value;
    }
    out = out * (gw_integer(f, 1) + gw_angle(f, neg));
  }
  return out;
}

IdealPower::IdealPower(Field f, int n) : field_(f), n_(n) {}

IdealPower fundamental_ideal_power(const Field& f, int n) { return IdealPower(f, n); }

std::string IdealPower::description() const {
  const std::string head = "I^" + std::to_string(n_) + "(" + field_.name() + ")";
  if (n_ <= 0) return head + " = W";
  switch (field_.kind()) {
    case Field::Kind::QuadraticallyClosed:
      return head + " = 0";
    case Field::Kind::RealClosed:
      return head + " = " + std::to_string(1L << std::min(n_, 62)) + "Z under the signature";
    case Field::Kind::FiniteOdd:
      return n_ == 1 ? head + " = even-rank classes, order 2" : head + " = 0";
    case Field::Kind::Rationals:
      return n_ == 1 ? head + " = even-rank classes" : head + ", membership unsupported";
  }
  return head;
}

bool IdealPower::contains(const WittClass& x) const {
  require_same_field(field_, x.field());
  if (n_ <= 0) return true;
  switch (field_.kind()) {
    case Field::Kind::QuadraticallyClosed:
      return x.is_zero();
    case Field::Kind::RealClosed: {
      if (n_ >= 62) return x.is_zero();
      return *x.signature() % (1L << n_) == 0;
    }
    case Field::Kind::FiniteOdd:
      return n_ == 1 ? x.rank_parity() == 0 : x.is_zero();
    case Field::Kind::Rationals:
      if (n_ == 1) return x.rank_parity() == 0;
      throw Unsupported("membership in I^" + std::to_string(n_) + " over Q");
  }
  return false;
}

nlohmann::ordered_json gw_to_json(const GWElement& x) {
  const auto inv = gw_invariants(x);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [c, k] : x.terms())
    terms.push_back({{"class", square_class_to_string(x.field(), c)}, {"coefficient", k}});
  nlohmann::ordered_json out;
  out["field"] = x.field().name();
  out["element"] = x.to_string();
  out["terms"] = terms;
  out["rank"] = inv.rank;
  out["disc"] = square_class_to_string(x.field(), inv.disc);
  if (inv.signature)
    out["signature"] = *inv.signature;
  else
    out["signature"] = nullptr;
  return out;
}

}  // namespace ehpcalc
