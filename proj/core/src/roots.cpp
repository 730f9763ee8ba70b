#include "crystalfold/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crystalfold {

std::vector<Coeffs> positive_roots(const CartanDatum& cd) {
  if (!cd.finite_type())
    throw std::invalid_argument("positive_roots: datum is not of finite type");
  int n = cd.rank();
  std::set<Coeffs> roots;
  std::vector<Coeffs> frontier;
  for (int i = 0; i < n; ++i) {
    Coeffs alpha(n, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    frontier.push_back(alpha);
  }
  // Close under root strings: beta + alpha_i is a root iff the string length
  // below, p = max{k : beta - k alpha_i is a root}, exceeds <h_i, beta> - ... ,
  // i.e. q = p - <h_i, beta> >= 1.
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        long long p = 0;
        Coeffs down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = down[i] >= 0;
          if (!nonneg || !roots.count(down)) break;
          ++p;
        }
        long long q = p - cd.pairing_root(i, beta);
        if (q >= 1) {
          Coeffs up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Coeffs> out(roots.begin(), roots.end());
  // By increasing height, lexicographic within a height.
  std::stable_sort(out.begin(), out.end(), [](const Coeffs& x, const Coeffs& y) {
    long long hx = 0, hy = 0;
    for (long long v : x) hx += v;
    for (long long v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

static long long kostant_rec(const std::vector<Coeffs>& roots, size_t idx,
                             Coeffs& remaining) {
  bool zero = true;
  for (long long v : remaining)
    if (v != 0) {
      zero = false;
      break;
    }
  if (zero) return 1;
  if (idx == roots.size()) return 0;
  const Coeffs& r = roots[idx];
  long long total = 0;
  int k = 0;
  while (true) {
    total += kostant_rec(roots, idx + 1, remaining);
    bool fits = true;
    for (size_t j = 0; j < remaining.size(); ++j)
      if (remaining[j] < r[j]) {
        fits = false;
        break;
      }
    if (!fits) break;
    for (size_t j = 0; j < remaining.size(); ++j) remaining[j] -= r[j];
    ++k;
  }
  for (int u = 0; u < k; ++u)
    for (size_t j = 0; j < remaining.size(); ++j) remaining[j] += r[j];
  return total;
}

long long kostant_count(const CartanDatum& cd, const std::vector<Coeffs>& roots,
                        const Coeffs& beta) {
  for (long long v : beta)
    if (v < 0) return 0;
  Coeffs remaining = beta;
  return kostant_rec(roots, 0, remaining);
}

long long kostant_count(const CartanDatum& cd, const Coeffs& beta) {
  return kostant_count(cd, positive_roots(cd), beta);
}

std::map<Coeffs, long long> freudenthal(const CartanDatum& cd, const Weight& lambda) {
  if (!cd.finite_type())
    throw std::invalid_argument("freudenthal: datum is not of finite type");
  for (long long v : lambda.drop)
    if (v != 0)
      throw std::invalid_argument("freudenthal: lambda must be given in omega coordinates");
  if (!cd.is_dominant(lambda))
    throw std::invalid_argument("freudenthal: lambda is not dominant");

  int n = cd.rank();
  std::vector<Coeffs> proots = positive_roots(cd);

  // Inner products under the M-form. For a weight mu = lambda - beta (beta in
  // alpha coordinates) one has (mu, alpha_j) = d_j <h_j, mu>, and
  // (omega_k, alpha_j) = d_j delta_kj, so everything below is integral.
  auto lam_dot = [&](const Coeffs& x) {
    BigInt s(0);
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) s += big(cd.d[j] * lambda.base[j]) * big(x[j]);
    return s;
  };
  auto rho_dot = [&](const Coeffs& x) {
    BigInt s(0);
    for (int j = 0; j < n; ++j) s += big(cd.d[j]) * big(x[j]);
    return s;
  };
  auto form = [&](const Coeffs& x, const Coeffs& y) {
    BigInt s(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x[i] != 0 && y[j] != 0) s += big(cd.m(i, j)) * big(x[i]) * big(y[j]);
    return s;
  };

  std::map<Coeffs, long long> mult;
  Coeffs zero(n, 0);
  mult[zero] = 1;

  // Breadth-first by height of beta; every weight of V(lambda) below lambda is
  // reachable from a weight one alpha up, so expanding only positive
  // multiplicities finds the whole support.
  std::vector<Coeffs> level{zero};
  while (!level.empty()) {
    std::set<Coeffs> candidates;
    for (const Coeffs& beta : level)
      for (int i = 0; i < n; ++i) {
        Coeffs c = beta;
        c[i] += 1;
        candidates.insert(c);
      }
    std::vector<Coeffs> next;
    for (const Coeffs& beta : candidates) {
      // Freudenthal: (|lambda+rho|^2 - |mu+rho|^2) m_mu
      //   = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m_{mu+k alpha},
      // with mu = lambda - beta, so the coefficient is 2(lambda+rho, beta) - (beta, beta).
      BigInt coeff = 2 * (lam_dot(beta) + rho_dot(beta)) - form(beta, beta);
      if (coeff <= 0) continue;  // weights of V(lambda) have |mu+rho| < |lambda+rho|
      BigInt rhs(0);
      for (const Coeffs& alpha : proots) {
        for (long long k = 1;; ++k) {
          Coeffs up = beta;  // beta - k alpha indexes mu + k alpha
          bool ok = true;
          for (int j = 0; j < n; ++j) {
            up[j] -= k * alpha[j];
            if (up[j] < 0) ok = false;
          }
          if (!ok) break;
          auto it = mult.find(up);
          if (it == mult.end() || it->second == 0) continue;
          // (mu + k alpha, alpha) with mu + k alpha = lambda - up
          BigInt term = lam_dot(alpha) - form(up, alpha);
          rhs += 2 * term * big(it->second);
        }
      }
      if (rhs == 0) continue;
      BigInt q;
      mpz_divexact(q.get_mpz_t(), rhs.get_mpz_t(), coeff.get_mpz_t());
      if (q.fits_slong_p() == 0)
        throw std::logic_error("freudenthal: multiplicity overflow");
      long long mv = q.get_si();
      if (mv > 0) {
        mult[beta] = mv;
        next.push_back(beta);
      }
    }
    level = std::move(next);
  }
  return mult;
}

BigInt weyl_dim(const CartanDatum& cd, const Weight& lambda) {
  if (!cd.finite_type())
    throw std::invalid_argument("weyl_dim: datum is not of finite type");
  if (!cd.is_dominant(lambda) || lambda.height() != 0)
    throw std::invalid_argument("weyl_dim: lambda is not dominant");
  int n = cd.rank();
  BigInt num(1), den(1);
  for (const Coeffs& alpha : positive_roots(cd)) {
    BigInt lp(0), rp(0);
    for (int j = 0; j < n; ++j) {
      lp += big(cd.d[j] * (lambda.base[j] + 1) * alpha[j]);
      rp += big(cd.d[j] * alpha[j]);
    }
    num *= lp;
    den *= rp;
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace crystalfold
