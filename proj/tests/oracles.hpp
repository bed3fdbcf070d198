#pragma once

// Brute-force reference computations. None of these call into the library.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Strictly increasing r-subsets of {0..q-1}, lexicographic, by scanning all bitmasks.
std::vector<std::vector<int>> increasing_tuples(int q, int r);

// H_r of a word of distinct symbolic letters: smashes joined by '^', basepoint letters "*".
std::vector<std::string> hopf_word(const std::vector<std::string>& letters, int r);

// Nondegenerate m-simplices of the product of minimal spheres S^{d_1} x ... x S^{d_k}.
std::size_t sphere_product_count(const std::vector<int>& dims, int m);
// Same for the smash product (tuples with no component at the basepoint, plus the basepoint).
std::size_t sphere_smash_count(const std::vector<int>& dims, int m);
// Nondegenerate m-simplices of J_n(S^d): nonempty words of length <= n in degenerate copies of
// the top cell sharing no degeneracy, plus the basepoint in dimension 0.
std::size_t james_sphere_count(int d, int n, int m);

// gcd of all k x k minors, k = 1..min(rows, cols); stops at the first zero.
std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<long>>& m);
// Invariant factors d_k / d_{k-1}.
std::vector<mpz_class> invariant_factors(const std::vector<std::vector<long>>& m);

// Number of x in F_p^n with sum a_i x_i^2 = c, for each c in F_p.
std::vector<long> representation_numbers(const std::vector<long>& diagonal, long p);
// Isometry of nondegenerate diagonal forms over F_p: equal rank and representation numbers.
bool isometric_mod_p(const std::vector<long>& a, const std::vector<long>& b, long p);

// Signature of a real diagonal form.
long signature(const std::vector<long>& diagonal);
// Diagonal entries of <<a_1..a_n>> = prod <1, -a_i> over the integers.
std::vector<long> pfister_diagonal(const std::vector<long>& a);

}  // namespace oracle
