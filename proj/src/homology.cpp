#include "ehpcalc/homology.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidComplex("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw DegreeMismatch("matrix shapes do not compose");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

mpz_class determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw DegreeMismatch("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix a = input;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const IntegerMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      u_ = IntegerMatrix::identity(m.rows());
      v_ = IntegerMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    SmithForm out;
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t k = 0; k < limit; ++k) {
      if (!reduce_at(k)) break;
      out.factors.push_back(a_.at(k, k));
    }
    out.u = std::move(u_);
    out.v = std::move(v_);
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t k) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = k; i < a_.rows(); ++i)
      for (std::size_t j = k; j < a_.cols(); ++j) {
        const mpz_class& v = a_.at(i, j);
        if (v == 0) continue;
        mpz_class av = abs(v);
        if (!best || av < best_abs) {
          best = {i, j};
          best_abs = av;
        }
      }
    return best;
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(r, j), a_.at(s, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(r, j), u_.at(s, j));
  }

  void swap_cols(std::size_t c, std::size_t d) {
    if (c == d) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_.at(i, c), a_.at(i, d));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_.at(i, c), v_.at(i, d));
  }

  // row_r += q * row_s
  void add_row(std::size_t r, std::size_t s, const mpz_class& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(r, j) += q * a_.at(s, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(r, j) += q * u_.at(s, j);
  }

  // col_c += q * col_d
  void add_col(std::size_t c, std::size_t d, const mpz_class& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_.at(i, c) += q * a_.at(i, d);
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) v_.at(i, c) += q * v_.at(i, d);
  }

  bool reduce_at(std::size_t k) {
    for (;;) {
      auto pivot = smallest(k);
      if (!pivot) return false;
      swap_rows(k, pivot->first);
      swap_cols(k, pivot->second);
      const mpz_class p = a_.at(k, k);
      bool clear = true;
      for (std::size_t i = k + 1; i < a_.rows(); ++i) {
        if (a_.at(i, k) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_.at(i, k).get_mpz_t(), p.get_mpz_t());
        add_row(i, k, -q);
        if (a_.at(i, k) != 0) clear = false;
      }
      for (std::size_t j = k + 1; j < a_.cols(); ++j) {
        if (a_.at(k, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_.at(k, j).get_mpz_t(), p.get_mpz_t());
        add_col(j, k, -q);
        if (a_.at(k, j) != 0) clear = false;
      }
      if (!clear) continue;
      bool divides_rest = true;
      for (std::size_t i = k + 1; i < a_.rows() && divides_rest; ++i)
        for (std::size_t j = k + 1; j < a_.cols(); ++j)
          if (a_.at(i, j) % p != 0) {
            add_row(k, i, 1);
            divides_rest = false;
            break;
          }
      if (!divides_rest) continue;
      if (p < 0) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(k, j) = -a_.at(k, j);
        if (track_)
          for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(k, j) = -u_.at(k, j);
      }
      return true;
    }
  }

  IntegerMatrix a_;
  bool track_;
  IntegerMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) { return SmithReducer(m, true).run(); }

std::vector<mpz_class> invariant_factors(const IntegerMatrix& m) { return SmithReducer(m, false).run().factors; }

ChainComplex::ChainComplex(std::vector<std::vector<GeneratorId>> bases, std::vector<IntegerMatrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != bases_.size()) throw InvalidComplex("one boundary matrix per degree expected");
  for (int n = 1; n <= top_degree(); ++n) {
    const auto& d = boundaries_[n];
    if (d.rows() != rank(n - 1) || d.cols() != rank(n)) throw InvalidComplex("boundary matrix has the wrong shape");
  }
  for (int n = 2; n <= top_degree(); ++n)
    if (!(boundaries_[n - 1] * boundaries_[n]).is_zero())
      throw InvalidComplex("boundary does not square to zero in degree " + std::to_string(n));
}

const std::vector<GeneratorId>& ChainComplex::basis(int n) const {
  static const std::vector<GeneratorId> empty;
  if (n < 0 || n > top_degree()) return empty;
  return bases_[n];
}

IntegerMatrix ChainComplex::boundary(int n) const {
  if (n >= 1 && n <= top_degree()) return boundaries_[n];
  return IntegerMatrix(rank(n - 1), rank(n));
}

ChainComplex normalized_chain_complex(const SSet& k, bool reduced) {
  const int top = k.max_dim();
  std::vector<std::vector<GeneratorId>> bases(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> position(k.size(), 0);
  for (std::size_t g = 0; g < k.size(); ++g) {
    if (reduced && static_cast<GeneratorId>(g) == k.basepoint()) continue;
    auto& b = bases[k.generators()[g].dim];
    position[g] = b.size();
    b.push_back(static_cast<GeneratorId>(g));
  }
  std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    IntegerMatrix d(bases[n - 1].size(), bases[n].size());
    for (std::size_t col = 0; col < bases[n].size(); ++col) {
      const auto& gen = k.generator(bases[n][col]);
      for (int i = 0; i <= n; ++i) {
        const Simplex& f = gen.faces[i];
        if (f.is_degenerate()) continue;
        if (reduced && f.generator == k.basepoint()) continue;
        d.at(position[f.generator], col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    boundaries[n] = std::move(d);
  }
  return ChainComplex(std::move(bases), std::move(boundaries));
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

HomologyGroup operator+(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  const std::size_t n = a.torsion.size() + b.torsion.size();
  IntegerMatrix diag(n, n);
  std::size_t k = 0;
  for (const auto& t : a.torsion) diag.at(k, k) = t, ++k;
  for (const auto& t : b.torsion) diag.at(k, k) = t, ++k;
  for (auto& f : invariant_factors(diag))
    if (f > 1) out.torsion.push_back(f);
  return out;
}

HomologyMap homology(const ChainComplex& c) {
  HomologyMap out;
  std::vector<std::vector<mpz_class>> factors(static_cast<std::size_t>(c.top_degree()) + 2);
  for (int n = 1; n <= c.top_degree(); ++n) factors[n] = invariant_factors(c.boundary(n));
  for (int n = 0; n <= c.top_degree(); ++n) {
    HomologyGroup h;
    const std::size_t r_in = factors[n].size();
    const std::size_t r_out = factors[n + 1].size();
    h.free_rank = c.rank(n) - r_in - r_out;
    for (const auto& f : factors[n + 1])
      if (f > 1) h.torsion.push_back(f);
    if (!h.trivial()) out.emplace(n, std::move(h));
  }
  return out;
}

HomologyMap reduced_homology(const SSet& k) { return homology(normalized_chain_complex(k, true)); }

HomologyMap integral_homology(const SSet& k) { return homology(normalized_chain_complex(k, false)); }

HomologyMap direct_sum(const HomologyMap& a, const HomologyMap& b) {
  HomologyMap out = a;
  for (const auto& [n, h] : b) {
    auto it = out.find(n);
    if (it == out.end())
      out.emplace(n, h);
    else
      it->second = it->second + h;
  }
  return out;
}

long euler_characteristic(const HomologyMap& h) {
  long chi = 0;
  for (const auto& [n, g] : h) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(g.free_rank);
  return chi;
}

long euler_characteristic(const SSet& k) {
  long chi = 0;
  const auto counts = k.counts();
  for (std::size_t n = 0; n < counts.size(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(counts[n]);
  return chi;
}

namespace {

nlohmann::ordered_json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

nlohmann::ordered_json homology_to_json(const HomologyMap& h) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [n, g] : h) {
    auto torsion = nlohmann::ordered_json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
    out.push_back({{"degree", n}, {"free_rank", g.free_rank}, {"torsion", torsion}});
  }
  return out;
}

std::string homology_to_text(const HomologyMap& h) {
  if (h.empty()) return "0";
  std::string out;
  for (const auto& [n, g] : h) {
    if (!out.empty()) out += '\n';
    out += "H" + std::to_string(n) + " = " + g.to_string();
  }
  return out;
}

}  // namespace ehpcalc
