#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace oracle {

std::vector<std::vector<int>> increasing_tuples(int q, int r) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<int> t;
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i)) t.push_back(i);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> hopf_word(const std::vector<std::string>& letters, int r) {
  std::vector<std::string> out;
  for (const auto& t : increasing_tuples(static_cast<int>(letters.size()), r)) {
    std::string s;
    bool base = false;
    for (int i : t) {
      if (letters[i] == "*") base = true;
      s += (s.empty() ? "" : "^") + letters[i];
    }
    if (!base) out.push_back(s);
  }
  return out;
}

namespace {

// m-simplices of a minimal S^d other than the degenerate basepoint, as degeneracy masks on
// positions 0..m-1. The basepoint itself is reported with the full mask.
std::vector<std::uint32_t> sphere_masks(int d, int m, bool include_base) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (m == 0) ? 0 : ((1u << m) - 1);
  if (include_base) out.push_back(full);
  if (d == 0 && m >= 0) {
    out.push_back(full);  // the free vertex of S^0 and its degeneracies
    return out;
  }
  if (m < d) return out;
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    if (std::popcount(mask) == m - d) out.push_back(mask);
  return out;
}

std::size_t count_tuples(const std::vector<int>& dims, int m, bool include_base) {
  std::size_t count = 0;
  const std::uint32_t full = (m == 0) ? 0 : ((1u << m) - 1);
  std::vector<std::vector<std::uint32_t>> options;
  for (int d : dims) options.push_back(sphere_masks(d, m, include_base));
  std::vector<std::size_t> idx(dims.size(), 0);
  if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) return 0;
  for (;;) {
    std::uint32_t common = full;
    for (std::size_t k = 0; k < dims.size(); ++k) common &= options[k][idx[k]];
    if (common == 0) ++count;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return count;
}

}  // namespace

std::size_t sphere_product_count(const std::vector<int>& dims, int m) { return count_tuples(dims, m, true); }

std::size_t sphere_smash_count(const std::vector<int>& dims, int m) {
  return count_tuples(dims, m, false) + (m == 0 ? 1 : 0);
}

std::size_t james_sphere_count(int d, int n, int m) {
  if (m == 0 && d > 0) return 1;
  std::size_t total = m == 0 ? 1 : 0;
  for (int len = 1; len <= n; ++len) total += count_tuples(std::vector<int>(static_cast<std::size_t>(len), d), m, false);
  return total;
}

namespace {

mpz_class det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      out.push_back(s);
    }
}

}  // namespace

std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<mpz_class> out;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<mpz_class>> minor(k, std::vector<mpz_class>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        mpz_class d = det(std::move(minor));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

std::vector<mpz_class> invariant_factors(const std::vector<std::vector<long>>& m) {
  const auto d = determinantal_divisors(m);
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (const auto& x : d) {
    out.push_back(x / prev);
    prev = x;
  }
  return out;
}

std::vector<long> representation_numbers(const std::vector<long>& diagonal, long p) {
  std::vector<long> counts(static_cast<std::size_t>(p), 0);
  const std::size_t n = diagonal.size();
  std::vector<long> x(n, 0);
  for (;;) {
    long v = 0;
    for (std::size_t i = 0; i < n; ++i) v = (v + diagonal[i] * x[i] * x[i]) % p;
    ++counts[static_cast<std::size_t>(((v % p) + p) % p)];
    std::size_t k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  return counts;
}

bool isometric_mod_p(const std::vector<long>& a, const std::vector<long>& b, long p) {
  return a.size() == b.size() && representation_numbers(a, p) == representation_numbers(b, p);
}

long signature(const std::vector<long>& diagonal) {
  long s = 0;
  for (long v : diagonal) s += v > 0 ? 1 : (v < 0 ? -1 : 0);
  return s;
}

std::vector<long> pfister_diagonal(const std::vector<long>& a) {
  std::vector<long> out{1};
  for (long x : a) {
    std::vector<long> next;
    for (long v : out) {
      next.push_back(v);
      next.push_back(-x * v);
    }
    out = next;
  }
  return out;
}

}  // namespace oracle
