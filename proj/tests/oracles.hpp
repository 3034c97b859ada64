#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms; only its value types.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "hilbk3/linalg.hpp"

namespace oracle {

using hilbk3::Matrix;
using hilbk3::Rational;
using hilbk3::Vector;

// Betti numbers of S^[n] for a surface with b1 = b3 = 0, read off the
// two-variable product prod_k (1-z^{2k-2}q^k)^{-b0} (1-z^{2k}q^k)^{-b2} (1-z^{2k+2}q^k)^{-b4}.
inline std::vector<std::int64_t> goettsche(std::int64_t b0, std::int64_t b2, std::int64_t b4, int n) {
  const int zmax = 4 * n;
  // series[q][z]
  std::vector<std::vector<mpz_class>> series(n + 1, std::vector<mpz_class>(zmax + 1));
  series[0][0] = 1;
  auto multiply_inverse_power = [&](int zexp, int qexp, std::int64_t b) {
    if (b == 0) return;
    // (1 - z^a q^k)^{-b} = sum_m binom(b+m-1, m) z^{am} q^{km}
    std::vector<std::vector<mpz_class>> out(n + 1, std::vector<mpz_class>(zmax + 1));
    for (int m = 0; m * qexp <= n; ++m) {
      mpz_class coeff;
      mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(b + m - 1), static_cast<unsigned long>(m));
      if (m == 0) coeff = 1;
      for (int q = 0; q + m * qexp <= n; ++q)
        for (int z = 0; z + m * zexp <= zmax; ++z)
          if (series[q][z] != 0) out[q + m * qexp][z + m * zexp] += coeff * series[q][z];
    }
    series = std::move(out);
  };
  for (int k = 1; k <= n; ++k) {
    multiply_inverse_power(2 * k - 2, k, b0);
    multiply_inverse_power(2 * k, k, b2);
    multiply_inverse_power(2 * k + 2, k, b4);
  }
  std::vector<std::int64_t> betti;
  for (int z = 0; z <= zmax; ++z) betti.push_back(series[n][z].get_si());
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

// Coefficients of prod_m (1 - q^m)^{-24} up to q^n.
inline std::vector<mpz_class> eta_inverse_24(int n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (int k = m; k <= n; ++k) c[k] += c[k - m];  // multiply by 1/(1 - q^m)
  return c;
}

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<long long> partition_numbers(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  return p;
}

// Betti numbers of the n-th symmetric power by listing multisets of basis vectors.
inline std::vector<std::int64_t> symmetric_power_brute(std::int64_t b0, std::int64_t b2, std::int64_t b4, int n) {
  std::vector<int> degrees;
  for (int k = 0; k < b0; ++k) degrees.push_back(0);
  for (int k = 0; k < b2; ++k) degrees.push_back(2);
  for (int k = 0; k < b4; ++k) degrees.push_back(4);
  std::vector<std::int64_t> betti(4 * n + 1, 0);
  std::function<void(std::size_t, int, int)> go = [&](std::size_t start, int left, int degree) {
    if (left == 0) {
      ++betti[degree];
      return;
    }
    for (std::size_t i = start; i < degrees.size(); ++i) go(i, left - 1, degree + degrees[i]);
  };
  go(0, n, 0);
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

// Stirling numbers of the second kind.
inline long long stirling2(int n, int k) {
  std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return (k <= n) ? s[n][k] : 0;
}

inline bool triangular(long long m) {
  for (long long l = 1; l * (l + 1) / 2 <= m; ++l)
    if (l * (l + 1) / 2 == m) return true;
  return false;
}

inline Rational random_rational(std::mt19937_64& rng, int span = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Random symmetric nondegenerate rational matrix.
inline Matrix random_gram(std::mt19937_64& rng, std::size_t d) {
  for (;;) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        m(i, j) = random_rational(rng);
        m(j, i) = m(i, j);
      }
    Matrix copy = m;
    if (hilbk3::determinant(copy) != 0) return m;
  }
}

// Random integer matrix with nonzero determinant.
inline Matrix random_invertible(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> e(-2, 2);
  for (;;) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = e(rng);
    if (hilbk3::determinant(m) != 0) return m;
  }
}

// Element of SO(G) by the Cayley transform of K = G^{-1} S, S skew.
inline Matrix cayley_orthogonal(const Matrix& gram, std::mt19937_64& rng) {
  const std::size_t d = gram.rows();
  const Matrix ginv = *hilbk3::inverse(gram);
  for (;;) {
    Matrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        s(i, j) = random_rational(rng, 2, 2);
        s(j, i) = -s(i, j);
      }
    const Matrix k = ginv * s;
    const auto inv = hilbk3::inverse(Matrix::identity(d) - k);
    if (!inv) continue;
    return *inv * (Matrix::identity(d) + k);
  }
}

}  // namespace oracle
