#include "hrhlab/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

namespace hrhlab {

HodgeDiamond::HodgeDiamond(long n,
                           const std::vector<std::tuple<long, long, long long>>& entries)
    : n_(n) {
  if (n_ < 0) throw DomainError(Errc::Domain, "Hodge diamond needs n >= 0");
  auto side = static_cast<std::size_t>(n_) + 1;
  h_.assign(side * side, -1);  // -1 marks an unset cell
  auto at = [&](long p, long q) -> long long& {
    return h_[static_cast<std::size_t>(p) * side + static_cast<std::size_t>(q)];
  };
  auto put = [&](long p, long q, long long v) {
    long long& cell = at(p, q);
    if (cell >= 0 && cell != v) {
      std::ostringstream out;
      out << "conflicting Hodge number at (" << p << "," << q << ")";
      throw DomainError(Errc::Domain, out.str());
    }
    cell = v;
  };
  for (const auto& [p, q, v] : entries) {
    if (p < 0 || p > n_ || q < 0 || q > n_)
      throw DomainError(Errc::Domain, "Hodge index outside the diamond");
    if (v < 0) throw DomainError(Errc::Domain, "Hodge numbers must be >= 0");
    put(p, q, v);
    put(q, p, v);
    put(n_ - p, n_ - q, v);
    put(n_ - q, n_ - p, v);
  }
  for (auto& cell : h_)
    if (cell < 0) cell = 0;
  if (h(0, 0) < 1)
    throw DomainError(Errc::Domain, "Hodge diamond needs h^{0,0} >= 1");
}

long long HodgeDiamond::h(long p, long q) const {
  if (p < 0 || p > n_ || q < 0 || q > n_) return 0;
  auto side = static_cast<std::size_t>(n_) + 1;
  return h_[static_cast<std::size_t>(p) * side + static_cast<std::size_t>(q)];
}

std::vector<std::tuple<long, long, long long>> HodgeDiamond::canonical_entries() const {
  std::vector<std::tuple<long, long, long long>> out;
  for (long p = 0; p <= n_; ++p)
    for (long q = p; q <= n_; ++q)
      if (h(p, q) != 0) out.emplace_back(p, q, h(p, q));
  return out;
}

long long HodgeDiamond::betti(long i) const {
  if (i < 0 || i > 2 * n_) return 0;
  long long b = 0;
  for (long p = 0; p <= n_; ++p) b += h(p, i - p);
  return b;
}

HRHValue cone_hrh(const HodgeDiamond& base) {
  long n = base.n();
  if (base.h(0, 0) != 1)
    throw DomainError(Errc::Domain, "cone_hrh needs a connected base (h^{0,0} = 1)");
  // Rows 0..k of the diamond must match projective space exactly.
  auto row_ok = [&](long k) {
    for (long q = 0; q <= n; ++q)
      if (base.h(k, q) != (q == k ? 1 : 0)) return false;
    return true;
  };
  long kmax = (n + 1) / 2;
  long k0 = -1;
  for (long k = 0; k <= kmax; ++k) {
    if (!row_ok(k)) break;
    k0 = k;
  }
  if (k0 < 0) return HRHValue::exact(-1);
  // The cone is (n+1)-dimensional, so levels past (n - 2) / 2 promote.
  if (2 * k0 > n - 2) return HRHValue::infinity();
  return HRHValue::exact(k0);
}

long cone_lcdef(const HodgeDiamond& base) {
  long n = base.n();
  auto b = [&](long i) { return i < 0 ? 0LL : base.betti(i); };
  for (long c = 0;; ++c) {
    bool ok = true;
    for (long i = -1; i <= n - 3 - c; ++i)
      if (b(i) != b(i + 2)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
}

ToricCone make_toric_cone(const std::vector<std::vector<Int>>& rays) {
  if (rays.empty()) throw DomainError(Errc::Domain, "toric cone needs at least one ray");
  std::size_t dim = rays.front().size();
  if (dim == 0) throw DomainError(Errc::Domain, "toric rays need at least one coordinate");
  ToricCone cone;
  std::set<std::vector<Int>> seen;
  for (const auto& ray : rays) {
    if (ray.size() != dim)
      throw DomainError(Errc::Domain, "toric rays must share one dimension");
    Int g = 0;
    for (const Int& c : ray) g = boost::multiprecision::gcd(g, c);
    if (g == 0) throw DomainError(Errc::Domain, "zero vector is not a ray");
    std::vector<Int> prim = ray;
    for (Int& c : prim) c /= g;
    if (seen.insert(prim).second) cone.rays.push_back(std::move(prim));
  }
  return cone;
}

long toric_rank(const ToricCone& cone) {
  // Fraction-free Gaussian elimination over the integers.
  std::vector<std::vector<Int>> m = cone.rays;
  std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Int a = m[rank][col], b = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

HRHValue toric_hrh(const ToricCone& cone) {
  bool simplicial = static_cast<long>(cone.rays.size()) == toric_rank(cone);
  return simplicial ? HRHValue::infinity() : HRHValue::exact(0);
}

HRHValue secant_hrh(bool is_p1, bool has_vanishing) {
  if (is_p1) return HRHValue::infinity();
  return has_vanishing ? HRHValue::exact(0) : HRHValue::exact(-1);
}

}  // namespace hrhlab
