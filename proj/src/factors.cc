#include "mingen/factors.hpp"

#include <algorithm>

#include "mingen/kernels.hpp"

namespace mingen {

namespace {

bool layer_abelian(const PermGroup& lower, const PermGroup& upper) {
  const auto& gens = upper.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!lower.contains(c)) return false;
    }
  return true;
}

}  // namespace

ChiefFactor classify_factor(const PermGroup& g, const PermGroup& upper,
                            const PermGroup& lower) {
  if (!is_normal_in(lower, g) || !is_normal_in(upper, g))
    throw input_error("classify_factor: upper and lower must be normal in G");
  if (!lower.is_subgroup_of(upper) || lower.order() >= upper.order())
    throw input_error("classify_factor: need lower < upper");

  ChiefFactor f;
  f.ambient = g;
  f.upper = upper;
  f.lower = lower;
  f.order = upper.order() / lower.order();
  f.abelian = layer_abelian(lower, upper);
  f.ctx = std::make_shared<FactorContext>();

  auto [table, hom] = conjugation_action(g, upper, lower, config().factor_enum_budget);
  f.centralizer = hom.kernel();
  f.ctx->qgroup = hom.image();
  f.ctx->conj_images = hom.gen_images();
  f.central = f.centralizer.order() == g.order();
  f.ctx->identity_point = table.find(Perm(g.degree()));

  // the factor as a group: right multiplication of upper on its own cosets
  {
    std::vector<Perm> imgs;
    for (const Perm& u : upper.generators()) {
      std::vector<int> img(table.size());
      for (int i = 0; i < table.size(); ++i) img[i] = table.find(table.reps[i] * u);
      imgs.push_back(Perm::from_images(std::move(img)));
    }
    f.ctx->factor_group =
        PermGroup::from_generators_known_order(table.size(), imgs, f.order);
  }

  if (f.abelian) {
    auto fac = factor_integer(f.order);
    if (fac.size() != 1)
      throw invariant_violation("abelian chief factor of non-prime-power order " +
                                f.order.str());
    f.p = fac[0].first;
    f.m = fac[0].second;
    f.ctx->module = std::make_shared<FpModule>(
        build_fp_module_from_table(g, std::move(table), f.p));
    if (f.ctx->module->dim != f.m)
      throw invariant_violation("factor is not elementary abelian");
    if (!module_irreducible(*f.ctx->module))
      throw invariant_violation("chief factor is a reducible module");
  } else {
    if (factor_integer(f.order).size() == 1)
      throw invariant_violation("nonabelian factor of prime-power order");
    f.ctx->nonabelian_table = std::move(table);
    auto mins = minimal_normal_subgroups(f.ctx->factor_group);
    f.n_simple = static_cast<int>(mins.size());
    // |A| = |S|^n exactly
    BigNat s = mins.front().order();
    if (bignat_pow(s, f.n_simple) != f.order)
      throw invariant_violation("nonabelian factor is not a power of a simple group");
    f.simple_order = s;
    if (s == 20160) {
      // two simple groups share this order; tell them apart by element orders
      mins.front().for_each_element(config().factor_enum_budget, [&](const Perm& x) {
        if (x.order() == 15) {
          f.simple_has_order15 = true;
          return false;
        }
        return true;
      });
    }
  }
  return f;
}

bool is_frattini(ChiefFactor& f) {
  if (f.frattini != FrattiniFlag::unknown) return f.frattini == FrattiniFlag::frattini;
  if (!f.abelian) {
    f.frattini = FrattiniFlag::non_frattini;
    return false;
  }
  // top factor: the subgroup `lower` itself is a complement
  if (f.upper.order() == f.ambient.order()) {
    f.complement_witness = f.lower;
    f.frattini = FrattiniFlag::non_frattini;
    return false;
  }

  const PermGroup& g = f.ambient;
  // minimize a generating set of G modulo `upper`
  std::vector<Perm> lifts;
  {
    Rng rng(0xf7a77141ULL);
    std::vector<Perm> upper_gens = f.upper.generators();
    bool found = false;
    for (int k = 1; k <= 8 && !found; ++k) {
      for (int trial = 0; trial < config().gen_minimize_trials && !found; ++trial) {
        std::vector<Perm> cand;
        for (int i = 0; i < k; ++i) cand.push_back(g.random_element(rng));
        std::vector<Perm> probe = upper_gens;
        probe.insert(probe.end(), cand.begin(), cand.end());
        if (PermGroup::from_generators(g.degree(), probe).order() == g.order()) {
          lifts = std::move(cand);
          found = true;
        }
      }
    }
    if (!found) lifts = g.generators();  // always generates modulo upper
  }

  const auto& table = f.ctx->table();
  const long long msize = table.size();
  double tuple_count = 1;
  for (std::size_t i = 0; i < lifts.size(); ++i) tuple_count *= double(msize);
  if (tuple_count > double(config().complement_tuple_budget))
    throw resource_error("complement search space |M|^g too large");

  BigNat target = g.order() * f.lower.order() / f.upper.order();
  ComplementSearch in;
  in.degree = g.degree();
  in.lower_gens = f.lower.generators();
  in.lifts = lifts;
  in.factor_reps = &table.reps;
  in.target = target;
  auto witness = find_complement(in);
  if (!witness) {
    f.frattini = FrattiniFlag::frattini;
    return true;
  }
  std::vector<Perm> ugens = f.lower.generators();
  for (std::size_t i = 0; i < lifts.size(); ++i)
    ugens.push_back(lifts[i] * table.reps[(*witness)[i]]);
  PermGroup u = PermGroup::from_generators(g.degree(), ugens);
  // complement assertions: U*upper = G and |U meet upper| = |lower|
  std::vector<Perm> join_gens = ugens;
  join_gens.insert(join_gens.end(), f.upper.generators().begin(),
                   f.upper.generators().end());
  PermGroup join = PermGroup::from_generators(g.degree(), join_gens);
  if (u.order() != target || join.order() != g.order() ||
      u.order() * f.upper.order() / join.order() != f.lower.order())
    throw invariant_violation("complement witness failed the order assertions");
  f.complement_witness = std::move(u);
  f.frattini = FrattiniFlag::non_frattini;
  return false;
}

namespace {

bool same_ambient(const ChiefFactor& a, const ChiefFactor& b) {
  if (a.ambient.degree() != b.ambient.degree() ||
      a.ambient.order() != b.ambient.order())
    return false;
  return a.ambient.generators() == b.ambient.generators();
}

// Linear system rows for T*rho_a(g) - rho_b(g)*T = 0 over all generators.
std::vector<std::vector<int>> intertwiner_system(const ChiefFactor& a,
                                                 const ChiefFactor& b) {
  const int m = a.m;
  const long long p = a.p;
  std::vector<std::vector<int>> rows;
  const auto& ra = a.action();
  const auto& rb = b.action();
  for (std::size_t gidx = 0; gidx < ra.size(); ++gidx) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<int> row(m * m, 0);
        for (int k = 0; k < m; ++k) {
          row[i * m + k] = static_cast<int>((row[i * m + k] + ra[gidx][k][j]) % p);
          row[k * m + j] =
              static_cast<int>(((row[k * m + j] - rb[gidx][i][k]) % p + p) % p);
        }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

Mat unflatten(const std::vector<int>& v, int m) {
  Mat t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = v[i * m + j];
  return t;
}

}  // namespace

std::optional<ModuleIso> g_isomorphic(const ChiefFactor& a, const ChiefFactor& b) {
  if (!a.abelian || !b.abelian)
    throw input_error("g_isomorphic: both factors must be abelian");
  if (!same_ambient(a, b)) throw input_error("g_isomorphic: different ambient groups");
  if (a.p != b.p || a.m != b.m) return std::nullopt;
  const int m = a.m;
  const long long p = a.p;
  auto basis = nullspace_basis(intertwiner_system(a, b), m * m, p);
  if (basis.empty()) return std::nullopt;

  auto check = [&](const Mat& t) {
    if (!mat_invertible(t, p)) return false;
    for (std::size_t g = 0; g < a.action().size(); ++g)
      if (mat_mul(t, a.action()[g], p) != mat_mul(b.action()[g], t, p)) return false;
    return true;
  };
  for (const auto& v : basis) {
    Mat t = unflatten(v, m);
    if (check(t)) return ModuleIso{std::move(t)};
  }
  // random combinations, then an exhaustive scan within budget
  Rng rng(0x150150ULL);
  const int dim = static_cast<int>(basis.size());
  for (int trial = 0; trial < 128; ++trial) {
    std::vector<int> v(m * m, 0);
    for (int bi = 0; bi < dim; ++bi) {
      long long c = static_cast<long long>(rng() % p);
      for (int i = 0; i < m * m; ++i)
        v[i] = static_cast<int>((v[i] + c * basis[bi][i]) % p);
    }
    Mat t = unflatten(v, m);
    if (check(t)) return ModuleIso{std::move(t)};
  }
  double total = 1;
  for (int i = 0; i < dim; ++i) total *= double(p);
  if (total <= double(config().intertwiner_scan_budget)) {
    std::vector<int> digit(dim, 0);
    while (true) {
      std::vector<int> v(m * m, 0);
      for (int bi = 0; bi < dim; ++bi)
        for (int i = 0; i < m * m; ++i)
          v[i] = static_cast<int>((v[i] + 1LL * digit[bi] * basis[bi][i]) % p);
      Mat t = unflatten(v, m);
      if (check(t)) return ModuleIso{std::move(t)};
      int pos = 0;
      while (pos < dim && ++digit[pos] == p) digit[pos++] = 0;
      if (pos == dim) break;
    }
  }
  return std::nullopt;
}

int endomorphism_field_degree(const ChiefFactor& f) {
  if (!f.abelian) throw input_error("endomorphism field: abelian factors only");
  auto basis = nullspace_basis(intertwiner_system(f, f), f.m * f.m, f.p);
  return static_cast<int>(basis.size());
}

int fixed_subspace_dim(const ChiefFactor& f) {
  if (!f.abelian) throw input_error("fixed subspace: abelian factors only");
  const int m = f.m;
  const long long p = f.p;
  std::vector<std::vector<int>> rows;
  for (const auto& mat : f.action())
    for (int i = 0; i < m; ++i) {
      std::vector<int> row(m);
      for (int j = 0; j < m; ++j)
        row[j] = static_cast<int>(((mat[i][j] - (i == j ? 1 : 0)) % p + p) % p);
      rows.push_back(std::move(row));
    }
  return static_cast<int>(nullspace_basis(rows, m, p).size());
}

bool g_equivalent(const ChiefFactor& a, const ChiefFactor& b) {
  if (!same_ambient(a, b)) throw input_error("g_equivalent: different ambient groups");
  if (a.abelian != b.abelian) return false;
  if (a.abelian) return g_isomorphic(a, b).has_value();
  if (a.order != b.order) return false;
  if (a.centralizer.order() != b.centralizer.order()) return false;
  if (a.centralizer.same_group(b.centralizer)) return true;
  // distinct centralizers: equivalent iff the two monolithic quotients glue
  // along a diagonal, i.e. |G : C_a meet C_b| = |A| * |G : C_a|, and the
  // factors are abstractly isomorphic
  if (a.n_simple != b.n_simple || a.simple_order != b.simple_order) return false;
  if (a.simple_order == 20160 && a.simple_has_order15 != b.simple_has_order15)
    return false;
  std::vector<Perm> joint = a.centralizer.generators();
  const auto& bg = b.centralizer.generators();
  joint.insert(joint.end(), bg.begin(), bg.end());
  PermGroup cc = PermGroup::from_generators(a.ambient.degree(), joint);
  return cc.order() == a.order * b.centralizer.order();
}

AnnotatedSeries annotated_chief_series(const PermGroup& g, std::uint64_t seed,
                                       const std::vector<PermGroup>& through) {
  AnnotatedSeries out;
  out.series = chief_series(g, seed, through);
  for (std::size_t i = 0; i + 1 < out.series.terms.size(); ++i)
    out.factors.push_back(
        classify_factor(g, out.series.terms[i + 1], out.series.terms[i]));
  return out;
}

}  // namespace mingen
