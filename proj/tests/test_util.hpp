#pragma once

#include "fg/error.hpp"
#include "fg/projective.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace fg::test {

// Code of the fg::Error thrown by f, or nothing if f returns normally.
inline std::optional<Errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Calls f on every m-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t m, F&& f) {
  if (m > n) return;
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    f(idx);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Three points of PG(r,p), p prime, are collinear iff every 3x3 minor of
// their coordinate matrix vanishes mod p.
inline bool collinear_by_minors(const ProjSpace& pg, PointId a, PointId b, PointId c) {
  const long long p = pg.q();
  std::vector<long long> x(pg.coords(a).begin(), pg.coords(a).end());
  std::vector<long long> y(pg.coords(b).begin(), pg.coords(b).end());
  std::vector<long long> z(pg.coords(c).begin(), pg.coords(c).end());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      for (std::size_t k = j + 1; k < x.size(); ++k) {
        const long long d = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                            x[k] * (y[i] * z[j] - y[j] * z[i]);
        if (d % p) return false;
      }
  return true;
}

}  // namespace fg::test
