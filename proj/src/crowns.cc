#include "mingen/crowns.hpp"

#include <algorithm>
#include <unordered_map>

#include "mingen/kernels.hpp"
#include "mingen/products.hpp"

namespace mingen {

MonolithicPrimitive monolithic_primitive(const ChiefFactor& f) {
  MonolithicPrimitive out;
  if (f.abelian) {
    std::vector<std::vector<std::vector<long long>>> mats;
    for (const Mat& a : f.action()) {
      bool identity = true;
      for (int i = 0; i < f.m && identity; ++i)
        for (int j = 0; j < f.m && identity; ++j)
          identity = a[i][j] == (i == j ? 1 : 0);
      if (identity) continue;
      std::vector<std::vector<long long>> m(f.m, std::vector<long long>(f.m));
      for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.m; ++j) m[i][j] = a[i][j];
      if (std::find(mats.begin(), mats.end(), m) == mats.end())
        mats.push_back(std::move(m));
    }
    AffineGroup a = affine_group(f.p, f.m, mats);
    out.group = a.group;
    out.socle = a.translations;
  } else {
    out.group = f.ctx->qgroup;
    const CosetTable& t = f.ctx->table();
    std::vector<Perm> socle_gens;
    for (const Perm& u : f.upper.generators()) {
      Perm ui = u.inverse();
      std::vector<int> img(t.size());
      for (int i = 0; i < t.size(); ++i) img[i] = t.find(ui * t.reps[i] * u);
      socle_gens.push_back(Perm::from_images(std::move(img)));
    }
    out.socle =
        PermGroup::from_generators_known_order(t.size(), socle_gens, f.order);
  }
  return out;
}

PermGroup crown_based_power(const PermGroup& l, const PermGroup& socle, int k) {
  if (k < 1) throw input_error("crown-based power: k must be >= 1");
  if (!is_normal_in(socle, l) || socle.is_trivial())
    throw input_error("crown-based power: socle must be a nontrivial normal subgroup");
  auto mins = minimal_normal_subgroups(l);
  if (mins.size() != 1 || !mins.front().same_group(socle))
    throw input_error("crown-based power: L is not monolithic with the given socle");
  if (k == 1) return l;
  std::vector<Perm> gens;
  for (const Perm& g : l.generators()) gens.push_back(plant_diagonal(g, k));
  for (int c = 0; c + 1 < k; ++c)
    for (const Perm& a : socle.generators()) gens.push_back(plant(a, k, c));
  BigNat order = bignat_pow(socle.order(), k - 1) * l.order();
  return PermGroup::from_generators_known_order(l.degree() * k, gens, order);
}

int h_value(int delta, int s, int r, int theta) {
  if (delta < 1 || s < 0 || r < 1) throw input_error("h_value: bad crown data");
  return theta + static_cast<int>((static_cast<long long>(delta) + s + r - 1) / r);
}

namespace {

// minimal generating tuple of Q, as permutations of the factor points
std::vector<Perm> minimize_generators(const PermGroup& q) {
  if (q.is_trivial()) return {};
  Rng rng(0x9e37c0cULL);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < config().gen_minimize_trials; ++trial) {
      std::vector<Perm> cand;
      for (int i = 0; i < k; ++i) cand.push_back(q.random_element(rng));
      if (generates(q, cand)) return cand;
    }
    // deterministic sweep over single generators and generator pairs
    if (k == 1) {
      for (const Perm& a : q.generators())
        if (generates(q, {a})) return {a};
    }
  }
  return q.generators();
}

}  // namespace

CocycleCayley build_cocycle_cayley(const ChiefFactor& f,
                                   const std::vector<Perm>& qgens) {
  const int ng = static_cast<int>(qgens.size());
  const CosetTable& table = f.ctx->table();
  const int asize = table.size();

  // |A|^g within budget; the multiplication table needs |A|^2 entries
  double tuples = 1;
  for (int i = 0; i < ng; ++i) tuples *= asize;
  if (tuples > double(config().cocycle_tuple_budget))
    throw resource_error("cocycle space |A|^g exceeds budget");
  if (static_cast<long long>(asize) * asize > 64LL * 1024 * 1024)
    throw resource_error("factor too large for a multiplication table");

  CocycleCayley c;
  c.ng = ng;
  c.asize = asize;
  c.identity_point = f.ctx->identity_point;
  c.mult.resize(static_cast<std::size_t>(asize) * asize);
  for (int i = 0; i < asize; ++i)
    for (int j = 0; j < asize; ++j)
      c.mult[static_cast<std::size_t>(i) * asize + j] =
          table.find(table.reps[i] * table.reps[j]);
  for (const Perm& s : qgens) c.act.push_back(s.images());

  // breadth-first closure of Q over the chosen generators
  std::unordered_map<Perm, int, PermHash> index;
  std::vector<Perm> elems{Perm(asize)};
  index.emplace(elems[0], 0);
  c.order.push_back(0);
  c.tree_parent.push_back(-1);
  c.tree_gen.push_back(-1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s = 0; s < ng; ++s) {
      Perm nxt = elems[i] * qgens[s];
      auto [it, fresh] = index.emplace(nxt, static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(std::move(nxt));
        c.order.push_back(it->second);
        c.tree_parent.push_back(static_cast<int>(i));
        c.tree_gen.push_back(s);
      }
    }
  }
  c.nq = static_cast<int>(elems.size());
  c.next.resize(static_cast<std::size_t>(c.nq) * ng);
  for (int x = 0; x < c.nq; ++x)
    for (int s = 0; s < ng; ++s)
      c.next[static_cast<std::size_t>(x) * ng + s] = index.at(elems[x] * qgens[s]);
  return c;
}

int s_value(const ChiefFactor& f) {
  if (!f.abelian) throw input_error("s_value: abelian factors only");
  const PermGroup& q = f.ctx->qgroup;
  if (q.is_trivial()) return 0;  // H^1(1, A) = 0

  std::vector<Perm> qgens = minimize_generators(q);
  CocycleCayley c = build_cocycle_cayley(f, qgens);
  if (BigNat(c.nq) != q.order())
    throw invariant_violation("minimized tuple does not generate Q");

  long long z1 = count_cocycles(c);

  // |B^1| = |A| / |C_A(Q)| = p^(m - fixed dim)
  int fix = fixed_subspace_dim(f);
  long long b1 = 1;
  for (int i = 0; i < f.m - fix; ++i) b1 *= f.p;
  if (z1 % b1 != 0)
    throw invariant_violation("|B^1| does not divide |Z^1| in s(A)");
  int log = exact_log(BigNat(z1 / b1), f.p);
  if (log < 0) throw invariant_violation("|H^1| is not a power of p in s(A)");
  int e = endomorphism_field_degree(f);
  if (log % e != 0)
    throw invariant_violation("dim H^1 is not divisible by the field degree");
  return log / e;
}

CrownDecomposition crown_decomposition(const PermGroup& g, std::uint64_t seed,
                                       bool with_values) {
  if (g.order() == 1) throw input_error("crown decomposition: trivial group");
  CrownDecomposition out;
  out.series = annotated_chief_series(g, seed);
  auto& factors = out.series.factors;

  std::vector<int> nonfrattini;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!is_frattini(factors[i])) nonfrattini.push_back(static_cast<int>(i));

  std::vector<int> cls(factors.size(), -1);
  for (int i : nonfrattini) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(out.records.size());
    CrownRecord rec;
    rec.representative = factors[i];
    rec.abelian = factors[i].abelian;
    cls[i] = id;
    rec.members.push_back(i);
    for (int j : nonfrattini) {
      if (j <= i || cls[j] >= 0) continue;
      if (g_equivalent(factors[i], factors[j])) {
        cls[j] = id;
        rec.members.push_back(j);
      }
    }
    out.records.push_back(std::move(rec));
  }

  for (CrownRecord& rec : out.records) {
    rec.delta = static_cast<int>(rec.members.size());
    rec.theta = rec.representative.central ? 0 : 1;
    if (!with_values) continue;
    MonolithicPrimitive mp = monolithic_primitive(rec.representative);
    rec.monolith = std::move(mp.group);
    rec.monolith_socle = std::move(mp.socle);
    if (rec.abelian) {
      int e = endomorphism_field_degree(rec.representative);
      if (rec.representative.m % e != 0)
        throw invariant_violation("endomorphism field degree does not divide m");
      rec.r = rec.representative.m / e;
      rec.s = s_value(rec.representative);
      rec.h = h_value(rec.delta, rec.s, rec.r, rec.theta);
    }
  }
  return out;
}

std::optional<long long> max_out_order_for_simple_order(const BigNat& order) {
  struct Entry {
    long long order;
    long long out;
  };
  // nonabelian simple groups of order < 10^7 (largest |Out| on collisions),
  // plus a few beyond that show up in slightly larger socles
  static const Entry table[] = {
      {60, 2},      {168, 2},     {360, 4},     {504, 3},     {660, 2},
      {1092, 2},    {2448, 2},    {2520, 2},    {3420, 2},    {4080, 4},
      {5616, 2},    {6048, 2},    {6072, 2},    {7800, 4},    {7920, 1},
      {9828, 6},    {12180, 2},   {14880, 2},   {20160, 12},  {25308, 2},
      {25920, 2},   {29120, 3},   {32736, 5},   {34440, 2},   {39732, 2},
      {51888, 2},   {58800, 4},   {62400, 4},   {74412, 2},   {95040, 2},
      {102660, 2},  {113460, 2},  {126000, 6},  {150348, 2},  {175560, 1},
      {178920, 2},  {181440, 2},  {194472, 2},  {246480, 2},  {262080, 6},
      {265680, 8},  {285852, 2},  {352440, 2},  {372000, 2},  {443520, 2},
      {456288, 2},  {515100, 2},  {546312, 2},  {604800, 2},  {612468, 2},
      {647460, 2},  {721392, 2},  {885720, 4},  {976500, 6},  {979200, 4},
      {1024128, 1}, {1814400, 2}, {1876896, 2}, {2097024, 7}, {2328648, 2},
      {2413320, 2}, {2588772, 2}, {3265920, 8}, {3594432, 2}, {3822588, 2},
      {4245696, 2}, {4680000, 2}, {5515776, 18}, {5544672, 2}, {5663616, 6},
      {6065280, 2}, {6261180, 2}, {6998640, 2}, {9999360, 2}, {10200960, 1},
  };
  long long best = -1;
  for (const Entry& e : table)
    if (BigNat(e.order) == order) best = std::max(best, e.out);
  // alternating groups up to degree 16: Out = 2 (4 for degree 6)
  BigNat half_fact = 1;
  for (int n = 2; n <= 16; ++n) {
    half_fact *= n;
    if (n >= 5 && half_fact / 2 == order) best = std::max(best, n == 6 ? 4LL : 2LL);
  }
  if (best < 0) return std::nullopt;
  return best;
}

NonabelianCondition nonabelian_condition(const CrownRecord& rec) {
  NonabelianCondition out;
  if (rec.abelian) throw input_error("nonabelian_condition: nonabelian records only");
  const ChiefFactor& f = rec.representative;
  auto outorder = max_out_order_for_simple_order(f.simple_order);
  if (!outorder) return out;  // unknown
  out.known = true;
  BigNat lhs = BigNat(rec.delta) * 2 * f.n_simple * *outorder;
  out.holds = lhs <= f.order;
  return out;
}

}  // namespace mingen
