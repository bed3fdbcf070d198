#include "ehpcalc/milnor_witt.hpp"

#include <algorithm>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("symbols over " + a.name() + " and " + b.name());
}

bool is_one(const Unit& u) { return !u.symbolic_nonsquare && u.value == 1; }

}  // namespace

void KMWSymbol::add_term(Monomial m, long coefficient) {
  if (m.degree() != degree_)
    throw DegreeMismatch("monomial of degree " + std::to_string(m.degree()) + " in a symbol of degree " +
                         std::to_string(degree_));
  if (coefficient == 0 || std::any_of(m.brackets.begin(), m.brackets.end(), is_one)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), coefficient);
  } else if ((it->second += coefficient) == 0) {
    terms_.erase(it);
  }
}

KMWSymbol KMWSymbol::operator+(const KMWSymbol& o) const {
  require_same_field(field_, o.field_);
  if (degree_ != o.degree_)
    throw DegreeMismatch("cannot add symbols of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(o.degree_));
  KMWSymbol out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

KMWSymbol KMWSymbol::operator-() const { return *this * -1L; }

KMWSymbol KMWSymbol::operator-(const KMWSymbol& o) const { return *this + (-o); }

KMWSymbol KMWSymbol::operator*(const KMWSymbol& o) const {
  require_same_field(field_, o.field_);
  KMWSymbol out(field_, degree_ + o.degree_);
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      Monomial m{a.eta + b.eta, a.brackets};
      m.brackets.insert(m.brackets.end(), b.brackets.begin(), b.brackets.end());
      out.add_term(std::move(m), x * y);
    }
  return out;
}

KMWSymbol KMWSymbol::operator*(long k) const {
  KMWSymbol out(field_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * k);
  return out;
}

std::string KMWSymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const long mag = std::labs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string body;
    if (m.eta == 1) body += "eta";
    if (m.eta > 1) body += "eta^" + std::to_string(m.eta);
    for (const auto& a : m.brackets) body += "[" + unit_to_string(a) + "]";
    if (body.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag)) + body;
  }
  return out;
}

KMWSymbol kmw_bracket(const Field& f, const Unit& a) {
  KMWSymbol out(f, 1);
  out.add_term({0, {a.symbolic_nonsquare ? a : make_unit(f, a.value)}}, 1);
  return out;
}

KMWSymbol kmw_eta(const Field& f) {
  KMWSymbol out(f, -1);
  out.add_term({1, {}}, 1);
  return out;
}

KMWSymbol kmw_integer(const Field& f, long n) {
  KMWSymbol out(f, 0);
  out.add_term({0, {}}, n);
  return out;
}

KMWSymbol kmw_angle(const Field& f, const Unit& a) { return kmw_integer(f, 1) + kmw_eta(f) * kmw_bracket(f, a); }

KMWSymbol kmw_epsilon(const Field& f) { return -kmw_angle(f, {-1, false}); }

KMWSymbol kmw_hyperbolic(const Field& f) { return kmw_integer(f, 2) + kmw_eta(f) * kmw_bracket(f, {-1, false}); }

KMWSymbol kmw_add(const KMWSymbol& x, const KMWSymbol& y) { return x + y; }

KMWSymbol kmw_mul(const KMWSymbol& x, const KMWSymbol& y) { return x * y; }

bool MilnorElement::is_zero() const {
  switch (group) {
    case Group::Trivial:
      return true;
    case Group::Cyclic:
      return residue == 0;
    case Group::Multiplicative:
      return value == 1;
  }
  return true;
}

long MilnorElement::mod2() const {
  if (group == Group::Cyclic && order % 2 == 0) return residue % 2;
  return 0;
}

bool MilnorElement::operator==(const MilnorElement& o) const {
  return group == o.group && order == o.order && residue == o.residue && value == o.value;
}

std::string MilnorElement::to_string() const {
  switch (group) {
    case Group::Trivial:
      return "0";
    case Group::Cyclic:
      return std::to_string(residue) + " mod " + std::to_string(order);
    case Group::Multiplicative:
      return "{" + value.get_str() + "}";
  }
  return {};
}

bool KMWNormalForm::operator==(const KMWNormalForm& o) const {
  return degree == o.degree && gw == o.gw && witt == o.witt && milnor == o.milnor;
}

std::string KMWNormalForm::to_string() const {
  if (gw) return "GW: " + gw->to_string();
  if (degree < 0) return "W: " + witt->to_string();
  return "K^M: " + milnor->to_string() + ", I^" + std::to_string(degree) + ": " + witt->to_string();
}

nlohmann::ordered_json KMWNormalForm::to_json() const {
  nlohmann::ordered_json out;
  out["degree"] = degree;
  if (gw) out["gw"] = gw_to_json(*gw);
  if (witt) out["witt"] = witt->to_string();
  if (milnor) out["milnor"] = milnor->to_string();
  return out;
}

namespace {

// prod (<a_i> - 1), the image of a monomial in GW or W.
GWElement quadratic_image(const Field& f, const Monomial& m) {
  GWElement out = gw_integer(f, 1);
  for (const auto& a : m.brackets) out = out * (gw_angle(f, a) - gw_integer(f, 1));
  return out;
}

MilnorElement milnor_image(const KMWSymbol& x) {
  const Field& f = x.field();
  const int n = x.degree();
  MilnorElement out;
  switch (f.kind()) {
    case Field::Kind::FiniteOdd: {
      if (!f.is_prime_field())
        throw Unsupported("K^M_" + std::to_string(n) + " of " + f.name() + " is not implemented");
      if (n >= 2) return out;
      const long p = f.characteristic();
      out.group = MilnorElement::Group::Cyclic;
      out.order = p - 1;
      for (const auto& [m, c] : x.terms()) {
        if (m.eta != 0) continue;
        const long log = discrete_log(m.brackets[0].value.get_num().get_si(), p);
        out.residue = ((out.residue + (c % out.order) * log) % out.order + out.order) % out.order;
      }
      return out;
    }
    case Field::Kind::RealClosed: {
      out.group = MilnorElement::Group::Cyclic;
      out.order = 2;
      for (const auto& [m, c] : x.terms()) {
        for (const auto& a : m.brackets)
          if (a.symbolic_nonsquare || (a.value != 1 && a.value != -1))
            throw Unsupported("real closed symbols are evaluated on the units +-1 only");
        if (m.eta == 0) out.residue = (out.residue + ((c % 2) + 2) % 2) % 2;
      }
      return out;
    }
    case Field::Kind::QuadraticallyClosed: {
      bool pure = false;
      for (const auto& [m, c] : x.terms()) pure = pure || m.eta == 0;
      if (!pure) return out;
      if (n >= 2) throw Unsupported("K^M_" + std::to_string(n) + " of a quadratically closed field");
      out.group = MilnorElement::Group::Multiplicative;
      for (const auto& [m, c] : x.terms()) {
        if (m.eta != 0) continue;
        const Unit& a = m.brackets[0];
        if (a.symbolic_nonsquare) throw Unsupported("symbolic unit");
        mpq_class power = 1;
        mpq_class base = c > 0 ? a.value : mpq_class(1) / a.value;
        for (long k = 0; k < std::labs(c); ++k) power *= base;
        out.value *= power;
      }
      return out;
    }
    case Field::Kind::Rationals:
      throw Unsupported("K^M_" + std::to_string(n) + "(Q) is not implemented");
  }
  return out;
}

}  // namespace

KMWNormalForm kmw_normal_form(const KMWSymbol& x) {
  const Field& f = x.field();
  KMWNormalForm out;
  out.degree = x.degree();
  MilnorElement milnor;
  if (out.degree >= 1) milnor = milnor_image(x);
  GWElement sum(f);
  for (const auto& [m, c] : x.terms()) sum = sum + quadratic_image(f, m) * c;
  if (out.degree == 0) {
    out.gw = sum;
  } else {
    out.witt = witt_class(sum);
    if (out.degree >= 1) out.milnor = milnor;
  }
  return out;
}

bool compatible(const KMWNormalForm& nf) {
  if (nf.degree <= 0) return true;
  const Field& f = nf.witt->field();
  if (!fundamental_ideal_power(f, nf.degree).contains(*nf.witt)) return false;
  const long witt_mod2 = fundamental_ideal_power(f, nf.degree + 1).contains(*nf.witt) ? 0 : 1;
  return witt_mod2 == nf.milnor->mod2();
}

namespace {

// One pass of the defining relations applied left to right: [a][1-a] -> 0 and
// eta^2[-1] -> -2 eta. Returns true if something changed.
bool rewrite_pass(KMWSymbol& x) {
  const Field& f = x.field();
  const Unit minus_one = make_unit(f, -1);
  KMWSymbol out(f, x.degree());
  bool changed = false;
  for (const auto& [m, c] : x.terms()) {
    bool steinberg = false;
    for (std::size_t i = 0; i + 1 < m.brackets.size() && !steinberg; ++i) {
      const Unit& a = m.brackets[i];
      const Unit& b = m.brackets[i + 1];
      if (a.symbolic_nonsquare || b.symbolic_nonsquare) continue;
      if (f.is_finite()) {
        steinberg = make_unit(f, a.value + b.value) == make_unit(f, 1);
      } else {
        steinberg = a.value + b.value == 1;
      }
    }
    if (steinberg) {
      changed = true;
      continue;
    }
    if (m.eta >= 2) {
      auto it = std::find(m.brackets.begin(), m.brackets.end(), minus_one);
      if (it != m.brackets.end()) {
        Monomial r{m.eta - 1, {}};
        for (auto jt = m.brackets.begin(); jt != m.brackets.end(); ++jt)
          if (jt != it) r.brackets.push_back(*jt);
        out.add_term(std::move(r), -2 * c);
        changed = true;
        continue;
      }
    }
    out.add_term(m, c);
  }
  x = std::move(out);
  return changed;
}

}  // namespace

Verdict kmw_equal(const KMWSymbol& x, const KMWSymbol& y) {
  require_same_field(x.field(), y.field());
  if (x.degree() != y.degree())
    throw DegreeMismatch("symbols of degrees " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()));
  std::optional<KMWNormalForm> nx, ny;
  try {
    nx = kmw_normal_form(x);
    ny = kmw_normal_form(y);
  } catch (const Unsupported&) {
    nx.reset();
  }
  if (nx) {
    if (nx->gw) return gw_equal(*nx->gw, *ny->gw);
    if (x.degree() < 0) return witt_equal(*nx->witt, *ny->witt);
    return *nx == *ny ? Verdict::True : Verdict::False;
  }
  KMWSymbol d = x - y;
  for (int pass = 0; pass < 64 && !d.is_zero(); ++pass)
    if (!rewrite_pass(d)) break;
  return d.is_zero() ? Verdict::True : Verdict::Undecided;
}

KMWSymbol gw_to_kmw(const GWElement& x) {
  const Field& f = x.field();
  KMWSymbol out = kmw_integer(f, 0);
  for (const auto& [c, k] : x.terms()) out = out + kmw_angle(f, class_unit(f, c)) * k;
  return out;
}

RationalDecomposition rational_decomposition(int n, const Field& f) {
  return {n >= 0, f.formally_real()};
}

}  // namespace ehpcalc
