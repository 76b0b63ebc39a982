#include "eqloc/chambers.hpp"

#include "eqloc/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace eqloc {

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<long> primitive(std::vector<long> v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Primitive integer vector spanning the one-dimensional kernel of rows.
std::vector<long> kernel_ray(const std::vector<std::vector<long>>& rows, std::size_t dim) {
  Matrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  Matrix ns = nullspace(m, dim);
  Integer l = 1;
  for (const auto& x : ns[0]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<long> v;
  for (const auto& x : ns[0]) v.push_back(Rational(x * l).get_num().get_si());
  return primitive(std::move(v));
}

std::vector<int> signs(const std::vector<std::vector<long>>& normals, const std::vector<long>& x) {
  std::vector<int> s;
  for (const auto& a : normals) {
    long d = dot(a, x);
    s.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> chamber_representatives(const std::vector<std::vector<long>>& normals_in,
                                                       std::size_t dim) {
  // distinct primitive normals up to sign
  std::set<std::vector<long>> unique;
  for (const auto& a : normals_in) {
    auto p = primitive(a);
    auto first = std::find_if(p.begin(), p.end(), [](long x) { return x != 0; });
    if (first == p.end()) throw std::invalid_argument("zero normal in arrangement");
    if (*first < 0)
      for (auto& x : p) x = -x;
    unique.insert(p);
  }
  std::vector<std::vector<long>> normals(unique.begin(), unique.end());
  if (normals.empty()) {
    std::vector<long> e(dim, 0);
    e[0] = 1;
    return {e};
  }
  Matrix m;
  for (const auto& a : normals) m.emplace_back(a.begin(), a.end());
  Echelon e = rref(m, dim);
  std::vector<std::vector<long>> candidates;
  if (e.pivots.size() < dim) {
    // restrict to the pivot coordinates, a complement of the common kernel
    std::vector<std::vector<long>> restricted;
    for (const auto& a : normals) {
      std::vector<long> r;
      for (std::size_t p : e.pivots) r.push_back(a[p]);
      restricted.push_back(r);
    }
    for (const auto& v : chamber_representatives(restricted, e.pivots.size())) {
      std::vector<long> x(dim, 0);
      for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = v[i];
      candidates.push_back(x);
    }
  } else if (dim == 1) {
    candidates = {{1}, {-1}};
  } else {
    std::set<std::vector<long>> rays;
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    subsets(normals.size(), dim - 1, 0, cur, subs);
    for (const auto& s : subs) {
      std::vector<std::vector<long>> rows;
      Matrix rm;
      for (std::size_t i : s) {
        rows.push_back(normals[i]);
        rm.emplace_back(normals[i].begin(), normals[i].end());
      }
      if (rank(rm, dim) != dim - 1) continue;
      auto r = kernel_ray(rows, dim);
      rays.insert(r);
      for (auto& x : r) x = -x;
      rays.insert(r);
    }
    for (const auto& r : rays) {
      // local arrangement at r, in the coordinates other than p
      std::size_t p = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](long x) { return x != 0; }) - r.begin());
      std::vector<std::vector<long>> local;
      for (const auto& a : normals) {
        if (dot(a, r) != 0) continue;
        std::vector<long> reduced;
        for (std::size_t j = 0; j < dim; ++j)
          if (j != p) reduced.push_back(a[j]);
        local.push_back(reduced);
      }
      for (const auto& w : chamber_representatives(local, dim - 1)) {
        std::vector<long> v(dim, 0);
        for (std::size_t j = 0, k = 0; j < dim; ++j)
          if (j != p) v[j] = w[k++];
        long big = 0;
        for (const auto& a : normals)
          if (dot(a, r) != 0) big = std::max(big, std::labs(dot(a, v)));
        std::vector<long> x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = (big + 1) * r[j] + v[j];
        candidates.push_back(primitive(x));
      }
    }
  }
  std::map<std::vector<int>, std::vector<long>> by_pattern;
  for (auto& x : candidates) {
    auto s = signs(normals, x);
    if (std::find(s.begin(), s.end(), 0) != s.end()) continue;
    auto it = by_pattern.find(s);
    auto smaller = [](const std::vector<long>& a, const std::vector<long>& b) {
      long na = 0, nb = 0;
      for (long y : a) na += std::labs(y);
      for (long y : b) nb += std::labs(y);
      return na != nb ? na < nb : a > b;
    };
    if (it == by_pattern.end() || smaller(x, it->second)) by_pattern[s] = x;
  }
  std::vector<std::vector<long>> out;
  for (auto& [s, x] : by_pattern) out.push_back(x);
  return out;
}

std::vector<int> sign_pattern(const HamiltonianSpace& space, const std::vector<long>& xi) {
  std::vector<int> s;
  for (const auto& c : space.components()) {
    Rational d = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) d += c.moment[i] * xi[i];
    s.push_back(sgn(d));
  }
  for (const auto& c : space.components())
    for (const auto& l : c.normal_lines) {
      long d = dot(l.weight, xi);
      s.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
    }
  return s;
}

ChamberEnumeration enumerate_generic_directions(const HamiltonianSpace& space, ChamberStrategy strategy, long box) {
  const std::size_t n = space.nvars();
  ChamberEnumeration out;
  std::vector<std::vector<long>> normals;
  for (const auto& c : space.components()) {
    Integer l = 1;
    for (const auto& x : c.moment) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<long> a;
    bool zero = true;
    for (const auto& x : c.moment) {
      a.push_back(Rational(x * l).get_num().get_si());
      zero = zero && x == 0;
    }
    if (zero) {
      out.warnings.push_back("component " + c.name + " has moment 0; no circle is generic");
      return out;
    }
    normals.push_back(a);
    for (const auto& line : c.normal_lines) normals.push_back(line.weight);
  }
  bool exact = strategy == ChamberStrategy::Exact || (strategy == ChamberStrategy::Auto && n <= 3);
  std::vector<std::vector<long>> reps;
  if (exact) {
    reps = chamber_representatives(normals, n);
  } else {
    out.exact = false;
    out.warnings.push_back("lattice search in the box of radius " + std::to_string(box) +
                           " may miss chambers; the enumeration is possibly incomplete");
    std::set<std::vector<int>> seen;
    for (long r = 1; r <= box; ++r) {
      std::vector<long> v(n, -r);
      while (true) {
        long mx = 0, g = 0;
        for (long x : v) {
          mx = std::max(mx, std::labs(x));
          g = std::gcd(g, x);
        }
        if (mx == r && g == 1) {
          auto s = signs(normals, v);
          if (std::find(s.begin(), s.end(), 0) == s.end() && seen.insert(s).second) reps.push_back(v);
        }
        std::size_t i = 0;
        while (i < n && v[i] == r) v[i++] = -r;
        if (i == n) break;
        ++v[i];
      }
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    long na = 0, nb = 0;
    for (long y : a) na += std::labs(y);
    for (long y : b) nb += std::labs(y);
    return na != nb ? na < nb : a > b;
  });
  for (const auto& r : reps) {
    out.directions.emplace_back(r);
    out.patterns.push_back(sign_pattern(space, r));
  }
  return out;
}

}  // namespace eqloc
