// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "kspectrum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace brt {

namespace {

using Rational = boost::multiprecision::cpp_rational;

SignedLogValue spectral_constant(int n) {
  return {std::log(2.0) + (2.0 * n - 0.5) * std::log(std::numbers::pi), 1, false};
}

void require_rank(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "rank n must be a positive integer");
}

Rational rising(Rational a, std::int64_t k) {
  Rational product = 1;
  for (std::int64_t i = 0; i < k; ++i) product *= a + i;
  return product;
}

BigInt factorial(std::int64_t k) {
  BigInt product = 1;
  for (std::int64_t i = 2; i <= k; ++i) product *= i;
  return product;
}

std::complex<double> integer_power(std::complex<double> base, int exponent) {
  std::complex<double> result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

using Exponents = std::vector<int>;

void enumerate_monomials(int vars, int degree, Exponents& current, std::vector<Exponents>& out) {
  if (static_cast<int>(current.size()) == vars - 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.push_back(e);
    enumerate_monomials(vars, degree - e, current, out);
    current.pop_back();
  }
}

std::vector<Exponents> monomials(int vars, int degree) {
  std::vector<Exponents> out;
  Exponents current;
  enumerate_monomials(vars, degree, current, out);
  return out;
}

// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

void validate(const SpectralQuery& q) {
  require_rank(q.n);
  std::ostringstream msg;
  if (q.l_prime < 0 || q.l < q.l_prime) {
    msg << "K-type needs l >= l' >= 0, got l=" << q.l << " l'=" << q.l_prime;
  } else if ((q.l - q.l_prime) % 2 != 0) {
    msg << "K-type needs l = l' mod 2, got l=" << q.l << " l'=" << q.l_prime;
  } else if (q.n == 1 && q.l_prime != 0) {
    msg << "for n = 1 only l' = 0 occurs, got l'=" << q.l_prime;
  } else {
    return;
  }
  throw Error(ErrorCode::invalid_argument, msg.str());
}

SignedLogValue eigenvalue_A(const SpectralQuery& q) {
  validate(q);
  const double n = q.n;
  const double k = q.l + q.l_prime;
  const double lambda = q.lambda;
  // Pair the Gamma factors so that coincident poles of Gamma((k+lambda)/2+n)
  // and Gamma(lambda/2+n) cancel as residues.
  return spectral_constant(q.n) * gamma_ratio((1.0 - lambda) / 2.0 - n, (k - lambda) / 2.0 + n) *
         gamma_ratio((k + lambda) / 2.0 + n, lambda / 2.0 + n);
}

SignedLogValue eigenvalue_A0(int n, double mu) {
  require_rank(n);
  return spectral_constant(n) * gamma_ratio((1.0 - mu) / 2.0 - n, n - mu / 2.0);
}

SignedLogValue eigenvalue_A2m(int n, std::int64_t m, double mu) {
  require_rank(n);
  if (m < 0) throw Error(ErrorCode::invalid_argument, "A_2m needs m >= 0");
  const double up = n + mu / 2.0;
  const double down = n - mu / 2.0;
  if (is_nonpositive_integer(down)) {
    // A_0 vanishes here while (down)_m can vanish too; use the Gamma form,
    // which has no 0/0.
    return spectral_constant(n) *
           gamma_ratio((1.0 - mu) / 2.0 - n, down + static_cast<double>(m)) *
           gamma_ratio(up + static_cast<double>(m), up);
  }
  return pochhammer_signed(up, m) / pochhammer_signed(down, m) * eigenvalue_A0(n, mu);
}

BigInt dim_sum(int n, std::int64_t m) {
  require_rank(n);
  if (m < 0) throw Error(ErrorCode::invalid_argument, "dim_sum needs m >= 0");
  BigInt rising_product = 1;  // (m+1)_{2n-2}
  for (int i = 0; i < 2 * n - 2; ++i) rising_product *= m + 1 + i;
  const BigInt numerator = BigInt(2 * m + 2 * n - 1) * rising_product * rising_product;
  const BigInt denominator = factorial(2 * n - 1) * factorial(2 * n - 2);
  return numerator / denominator;
}

BigInt dim_ktype(int n, int l, int l_prime) {
  validate(SpectralQuery{n, l, l_prime, 0.0});
  // Weyl dimension formula for Sp(n), highest weight (l, l', 0, ..., 0),
  // rho = (n, n-1, ..., 1).
  std::vector<std::int64_t> shifted(n), rho(n);
  for (int i = 0; i < n; ++i) {
    rho[i] = n - i;
    shifted[i] = rho[i] + (i == 0 ? l : i == 1 ? l_prime : 0);
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= shifted[i];
    den *= rho[i];
    for (int j = i + 1; j < n; ++j) {
      num *= BigInt(shifted[i] - shifted[j]) * (shifted[i] + shifted[j]);
      den *= BigInt(rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
  }
  return num / den;
}

BigInt signed_dim_sum(int n, std::int64_t m) {
  require_rank(n);
  if (m < 0) throw Error(ErrorCode::invalid_argument, "signed_dim_sum needs m >= 0");
  BigInt total = 0;
  const int max_lp = n == 1 ? 0 : static_cast<int>(m);
  for (int lp = 0; lp <= max_lp; ++lp) {
    const BigInt d = dim_ktype(n, static_cast<int>(2 * m) - lp, lp);
    total += lp % 2 == 0 ? d : BigInt(-d);
  }
  return total;
}

std::int64_t dim_hmm_bruteforce(int n, int m) {
  require_rank(n);
  if (m < 0) throw Error(ErrorCode::invalid_argument, "bidegree must be nonnegative");
  if (n > kBruteForceMaxN || m > kBruteForceMaxM) {
    std::ostringstream msg;
    msg << "brute-force dimension limited to n <= " << kBruteForceMaxN
        << ", m <= " << kBruteForceMaxM << "; got n=" << n << " m=" << m;
    throw Error(ErrorCode::size_limit, msg.str());
  }
  const int vars = 2 * n;
  const auto top = monomials(vars, m);
  const auto total = static_cast<std::int64_t>(top.size() * top.size());
  if (m == 0) return total;

  const auto weight = [](const Exponents& a, const Exponents& b) {
    Exponents w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] - b[i];
    return w;
  };

  // The Laplacian preserves the weight a - b, so it is block diagonal.
  std::map<Exponents, std::vector<std::pair<Exponents, Exponents>>> domain;
  for (const auto& a : top)
    for (const auto& b : top) domain[weight(a, b)].emplace_back(a, b);
  std::map<Exponents, std::map<std::pair<Exponents, Exponents>, std::size_t>> codomain;
  const auto lower = monomials(vars, m - 1);
  for (const auto& a : lower) {
    for (const auto& b : lower) {
      auto& block = codomain[weight(a, b)];
      block.emplace(std::make_pair(a, b), block.size());
    }
  }

  std::int64_t rank = 0;
  for (const auto& [w, columns] : domain) {
    const auto it = codomain.find(w);
    if (it == codomain.end()) continue;
    const auto& rows_index = it->second;
    std::vector<std::vector<Rational>> matrix(rows_index.size(),
                                              std::vector<Rational>(columns.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& [a, b] = columns[c];
      for (int j = 0; j < vars; ++j) {
        if (a[j] == 0 || b[j] == 0) continue;
        Exponents a2 = a;
        Exponents b2 = b;
        --a2[j];
        --b2[j];
        matrix[rows_index.at({a2, b2})][c] += a[j] * b[j];
      }
    }
    rank += static_cast<std::int64_t>(exact_rank(std::move(matrix)));
  }
  return total - rank;
}

FactorizationReport pochhammer_factorizations_check(int n, std::int64_t m) {
  require_rank(n);
  if (m < 0) throw Error(ErrorCode::invalid_argument, "m must be nonnegative");
  const Rational half(1, 2);
  const Rational nn = n;
  FactorizationReport report;

  const Rational ratio(2 * m + 2 * n - 1, 2 * n - 1);
  const Rational doubled = rising(2 * nn, 2 * m) / rising(2 * nn - 1, 2 * m);
  const Rational halved = rising(nn + half, m) / rising(nn - half, m);
  report.fact1 = ratio == doubled && doubled == halved;

  const Rational fact_2n2 = Rational(factorial(2 * n - 2));
  const Rational fact_m = Rational(factorial(m));
  const Rational lhs2 = rising(Rational(m + 1), 2 * n - 2) / fact_2n2;
  const Rational mid2 = Rational(factorial(m + 2 * n - 2)) / (fact_m * fact_2n2);
  const Rational rhs2 = rising(2 * nn - 1, m) / fact_m;
  report.fact2 = lhs2 == mid2 && mid2 == rhs2;

  const Rational p = rising(2 * nn - 1, m);
  const Rational form = p * p * rising(nn + half, m) /
                        (fact_m * rising(Rational(1), m) * rising(nn - half, m));
  report.dimsum_value = dim_sum(n, m);
  report.dimsum = form == Rational(report.dimsum_value);
  return report;
}

std::complex<double> hw_polynomial_eval(int n, int l, int l_prime,
                                        std::span<const std::complex<double>> point) {
  validate(SpectralQuery{n, l, l_prime, 0.0});
  if (point.size() != static_cast<std::size_t>(2 * n)) {
    std::ostringstream msg;
    msg << "point must have 2n = " << 2 * n << " complex coordinates, got " << point.size();
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
  const auto z = point.subspan(0, n);
  const auto w = point.subspan(n, n);
  std::complex<double> value = integer_power(z[0] * std::conj(w[0]), (l - l_prime) / 2);
  if (l_prime > 0) {
    value *= integer_power(z[1] * std::conj(w[0]) - z[0] * std::conj(w[1]), l_prime);
  }
  return value;
}

std::pair<int, int> spectral_phase(int k) {
  if (k < 0 || k % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "spectral phase is defined for even k >= 0");
  }
  // Gaussian-integer powers of -i = i^-1.
  int re = 1;
  int im = 0;
  for (int i = 0; i < k; ++i) {
    const int next_re = im;
    im = -re;
    re = next_re;
  }
  const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
  return {sign * re, sign * im};
}

}  // namespace brt
