#include "mingen/fpmodule.hpp"

#include <algorithm>

namespace mingen {

FpModule build_fp_module(const PermGroup& ambient, const PermGroup& lower,
                         const PermGroup& upper, long long p) {
  return build_fp_module_from_table(
      ambient, enumerate_cosets(lower, upper, config().factor_enum_budget), p);
}

FpModule build_fp_module_from_table(const PermGroup& ambient, CosetTable table,
                                    long long p) {
  FpModule m;
  m.p = p;
  m.table = std::move(table);
  const int sz = m.table.size();
  m.identity_point = m.table.find(Perm(ambient.degree()));
  m.coords.assign(sz, {});
  std::vector<int> known{m.identity_point};
  for (int pt = 0; pt < sz; ++pt) {
    if (pt == m.identity_point || !m.coords[pt].empty()) continue;
    int bi = static_cast<int>(m.basis_points.size());
    m.basis_points.push_back(pt);
    std::vector<int> snapshot = known;
    for (int k : snapshot) {
      Perm acc = m.table.reps[k];
      for (long long t = 1; t < p; ++t) {
        acc = acc * m.table.reps[pt];
        int q = m.table.find(acc);
        if (q != m.identity_point && m.coords[q].empty()) {
          m.coords[q] = m.coords[k];
          m.coords[q].resize(bi + 1, 0);
          m.coords[q][bi] = static_cast<int>(t);
          known.push_back(q);
        }
      }
    }
  }
  m.dim = static_cast<int>(m.basis_points.size());
  for (auto& v : m.coords) v.resize(m.dim, 0);
  for (int pt = 0; pt < sz; ++pt) m.point_of[m.pack(m.coords[pt])] = pt;
  for (const Perm& gen : ambient.generators()) {
    Perm gi = gen.inverse();
    std::vector<std::vector<int>> mat(m.dim, std::vector<int>(m.dim));
    for (int b = 0; b < m.dim; ++b) {
      int img = m.table.find(gi * m.table.reps[m.basis_points[b]] * gen);
      for (int i = 0; i < m.dim; ++i) mat[i][b] = m.coords[img][i];
    }
    m.action.push_back(std::move(mat));
  }
  return m;
}

bool Echelon::reduce(std::vector<int>& v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int pc = pivots[r];
    if (v[pc] == 0) continue;
    long long f = v[pc];
    for (int i = 0; i < dim; ++i)
      v[i] = static_cast<int>(((v[i] - f * rows[r][i]) % p + p * p) % p);
  }
  for (int x : v)
    if (x) return false;
  return true;
}

bool Echelon::insert(std::vector<int> v) {
  if (reduce(v)) return false;
  int pc = 0;
  while (v[pc] == 0) ++pc;
  long long inv = 1, b = v[pc], e = p - 2;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) inv = inv * b % p;
  for (int i = 0; i < dim; ++i) v[i] = static_cast<int>(v[i] * inv % p);
  rows.push_back(std::move(v));
  pivots.push_back(pc);
  for (std::size_t r = 0; r + 1 < rows.size(); ++r)
    for (std::size_t s = r + 1; s < rows.size(); ++s)
      if (pivots[s] < pivots[r]) {
        std::swap(pivots[r], pivots[s]);
        std::swap(rows[r], rows[s]);
      }
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (r == s) continue;
      long long f = rows[s][pivots[r]];
      if (!f) continue;
      for (int i = 0; i < dim; ++i)
        rows[s][i] = static_cast<int>(((rows[s][i] - f * rows[r][i]) % p + p * p) % p);
    }
  return true;
}

std::vector<int> Echelon::canonical_key() const {
  std::vector<int> key{static_cast<int>(rows.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    key.push_back(pivots[r]);
    key.insert(key.end(), rows[r].begin(), rows[r].end());
  }
  return key;
}

Echelon spin(const FpModule& m, const std::vector<int>& v0) {
  Echelon e{m.p, m.dim, {}, {}};
  e.insert(v0);
  // worklist of immutable vectors; echelon rows mutate under insertion and
  // cannot be iterated for closure
  std::vector<std::vector<int>> work{v0};
  for (std::size_t r = 0; r < work.size(); ++r) {
    for (const auto& mat : m.action) {
      std::vector<int> w(m.dim, 0);
      for (int i = 0; i < m.dim; ++i) {
        long long acc = 0;
        for (int j = 0; j < m.dim; ++j) acc += 1LL * mat[i][j] * work[r][j];
        w[i] = static_cast<int>(acc % m.p);
      }
      if (e.insert(w)) work.push_back(std::move(w));
    }
  }
  return e;
}

bool module_irreducible(const FpModule& m) {
  if (m.dim == 0) return false;
  for (std::size_t pt = 0; pt < m.coords.size(); ++pt) {
    if (static_cast<int>(pt) == m.identity_point) continue;
    if (static_cast<int>(spin(m, m.coords[pt]).rows.size()) != m.dim) return false;
  }
  return true;
}

std::vector<Echelon> minimal_submodules(const FpModule& m) {
  std::vector<Echelon> best;
  std::vector<std::vector<int>> keys;
  int best_dim = m.dim + 1;
  for (std::size_t pt = 0; pt < m.coords.size(); ++pt) {
    if (static_cast<int>(pt) == m.identity_point) continue;
    Echelon e = spin(m, m.coords[pt]);
    int d = static_cast<int>(e.rows.size());
    if (d > best_dim) continue;
    if (d < best_dim) {
      best.clear();
      keys.clear();
      best_dim = d;
    }
    auto key = e.canonical_key();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(std::move(key));
      best.push_back(std::move(e));
    }
  }
  return best;
}

Mat mat_mul(const Mat& a, const Mat& b, long long p) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int c = k ? static_cast<int>(b[0].size()) : 0;
  Mat r(n, std::vector<int>(c, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) {
      long long acc = 0;
      for (int t = 0; t < k; ++t) acc += 1LL * a[i][t] * b[t][j];
      r[i][j] = static_cast<int>(acc % p);
    }
  return r;
}

bool mat_invertible(Mat a, long long p) {
  const int n = static_cast<int>(a.size());
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] % p) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[rank], a[piv]);
    long long inv = 1, b = ((a[rank][col] % p) + p) % p, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (int j = 0; j < n; ++j)
      a[rank][j] = static_cast<int>(((a[rank][j] * inv) % p + p) % p);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      long long f = a[r][col];
      for (int j = 0; j < n; ++j)
        a[r][j] = static_cast<int>(((a[r][j] - f * a[rank][j]) % p + p * p) % p);
    }
    ++rank;
  }
  return rank == n;
}

std::vector<std::vector<int>> nullspace_basis(Mat a, int cols, long long p) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long long inv = 1, b = a[rank][col], e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (int j = 0; j < cols; ++j)
      a[rank][j] = static_cast<int>(a[rank][j] * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      long long f = a[r][col];
      for (int j = 0; j < cols; ++j)
        a[r][j] = static_cast<int>(((a[r][j] - f * a[rank][j]) % p + p * p) % p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = static_cast<int>(((-a[r][free]) % p + p) % p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mingen
