#include "mingen/products.hpp"

#include <numeric>

namespace mingen {

namespace {

Perm extend(const Perm& p, int degree, int offset) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm::from_images(std::move(img));
}

}  // namespace

PermGroup symmetric_group(int n) {
  if (n < 1) throw input_error("Sym(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return PermGroup::from_generators_known_order(n, gens, factorial(n));
}

PermGroup alternating_group(int n) {
  if (n < 3) throw input_error("Alt(n) needs n >= 3");
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup::from_generators_known_order(n, gens, factorial(n) / 2);
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw input_error("Cyc(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 0);
  return PermGroup::from_generators_known_order(n, {Perm::from_cycles(n, {full})}, n);
}

PermGroup dihedral_group(int n) {
  if (n < 1) throw input_error("Dih(n) needs n >= 1");
  if (n == 1) return cyclic_group(2);
  if (n == 2)
    return PermGroup::from_generators_known_order(
        4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, 4);
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::from_generators_known_order(
      n, {Perm::from_images(rot), Perm::from_images(refl)}, 2 * n);
}

PermGroup quaternion_group() {
  // right-regular action on 1, i, j, k, -1, -i, -j, -k (indices 0..7)
  Perm a = Perm::from_cycles(8, {{0, 1, 4, 5}, {2, 7, 6, 3}});  // * i
  Perm b = Perm::from_cycles(8, {{0, 2, 4, 6}, {1, 3, 5, 7}});  // * j
  return PermGroup::from_generators_known_order(8, {a, b}, 8);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(extend(g, n, 0));
  for (const Perm& g : b.generators()) gens.push_back(extend(g, n, a.degree()));
  return PermGroup::from_generators_known_order(n, gens, a.order() * b.order());
}

Perm plant(const Perm& g, int blocks, int coord) {
  return extend(g, g.degree() * blocks, coord * g.degree());
}

Perm plant_diagonal(const Perm& g, int blocks) {
  const int d = g.degree();
  std::vector<int> img(d * blocks);
  for (int c = 0; c < blocks; ++c)
    for (int i = 0; i < d; ++i) img[c * d + i] = c * d + g[i];
  return Perm::from_images(std::move(img));
}

WreathProduct wreath_product(const PermGroup& e, int t) {
  if (t < 2) throw input_error("wreath product needs t >= 2");
  const int d = e.degree();
  const int n = d * t;
  WreathProduct w;
  w.block_size = d;
  w.blocks = t;

  std::vector<Perm> base_gens;
  for (int c = 0; c < t; ++c)
    for (const Perm& g : e.generators()) base_gens.push_back(extend(g, n, c * d));

  auto block_perm = [&](const Perm& s) {
    std::vector<int> img(n);
    for (int c = 0; c < t; ++c)
      for (int i = 0; i < d; ++i) img[c * d + i] = s[c] * d + i;
    return Perm::from_images(std::move(img));
  };
  std::vector<Perm> top_gens;
  PermGroup sym_t = symmetric_group(t);
  for (const Perm& s : sym_t.generators()) top_gens.push_back(block_perm(s));

  std::vector<Perm> gens = base_gens;
  gens.insert(gens.end(), top_gens.begin(), top_gens.end());

  BigNat order = bignat_pow(e.order(), t) * factorial(t);
  w.group = PermGroup::from_generators_known_order(n, gens, order);
  w.base = PermGroup::from_generators_known_order(n, base_gens, bignat_pow(e.order(), t));
  w.top = PermGroup::from_generators_known_order(n, top_gens, factorial(t));
  return w;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

AffineGroup affine_group(long long p, int m,
                         const std::vector<std::vector<std::vector<long long>>>& matrices) {
  if (!is_prime(p)) throw input_error("affine group: p must be prime");
  if (m < 1) throw input_error("affine group: m must be >= 1");
  long long npoints = 1;
  for (int i = 0; i < m; ++i) {
    npoints *= p;
    if (npoints > config().degree_budget)
      throw resource_error("affine group: p^m exceeds the degree budget");
  }
  const int n = static_cast<int>(npoints);

  auto vec_of = [&](int idx) {
    std::vector<long long> v(m);
    for (int i = 0; i < m; ++i) {
      v[i] = idx % p;
      idx = static_cast<int>(idx / p);
    }
    return v;
  };
  auto idx_of = [&](const std::vector<long long>& v) {
    long long idx = 0;
    for (int i = m - 1; i >= 0; --i) idx = idx * p + ((v[i] % p) + p) % p;
    return static_cast<int>(idx);
  };

  std::vector<Perm> trans_gens;
  for (int i = 0; i < m; ++i) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
      auto v = vec_of(x);
      v[i] = (v[i] + 1) % p;
      img[x] = idx_of(v);
    }
    trans_gens.push_back(Perm::from_images(std::move(img)));
  }

  std::vector<Perm> lin_gens;
  for (const auto& mat : matrices) {
    if (static_cast<int>(mat.size()) != m)
      throw input_error("affine group: matrix is not m x m");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != m)
        throw input_error("affine group: matrix is not m x m");
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
      auto v = vec_of(x);
      std::vector<long long> w(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) w[i] += mat[i][j] * v[j];
      img[x] = idx_of(w);
    }
    // a singular matrix is not injective on vectors
    std::vector<char> seen(n, 0);
    for (int x : img) {
      if (seen[x]) throw input_error("affine group: singular matrix mod p");
      seen[x] = 1;
    }
    lin_gens.push_back(Perm::from_images(std::move(img)));
  }

  AffineGroup a;
  a.linear_part = PermGroup::from_generators(n, lin_gens);
  a.translations = PermGroup::from_generators_known_order(n, trans_gens, npoints);
  std::vector<Perm> gens = trans_gens;
  gens.insert(gens.end(), lin_gens.begin(), lin_gens.end());
  a.group = PermGroup::from_generators_known_order(n, gens,
                                                   BigNat(npoints) * a.linear_part.order());
  return a;
}

}  // namespace mingen
