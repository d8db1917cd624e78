#include "mh/group_structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

std::vector<Point> orbit(PermGroup const &G, Point x)
{
  std::vector<bool> seen(G.degree(), false);
  std::vector<Point> result{x};
  seen[x] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (auto const &g : G.generators()) {
      Point const y = g[result[i]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  return result;
}

std::vector<std::vector<Point>> orbits(PermGroup const &G)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(G.degree(), false);
  for (std::size_t x = 0; x < G.degree(); ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(G, static_cast<Point>(x));
    for (Point y : orb)
      seen[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool is_transitive(PermGroup const &G)
{
  return G.degree() <= 1 || orbit(G, 0).size() == G.degree();
}

PermGroup subgroup_generated(std::size_t degree, std::vector<Perm> const &elements)
{
  return PermGroup(degree, elements);
}

PermGroup filter_subgroup(PermGroup const &G,
                          std::function<bool(Perm const &)> const &pred,
                          Limits const &limits)
{
  PermGroup H = PermGroup::trivial(G.degree());
  G.for_each_element(
    [&](std::uint64_t, Perm const &g) {
      if (!g.is_identity() && pred(g) && !H.contains(g))
        H = H.extended_by({g});
    },
    limits);
  return H;
}

PermGroup setwise_stabilizer(PermGroup const &G, std::vector<Point> const &set,
                             Limits const &limits)
{
  std::vector<bool> in_set(G.degree(), false);
  for (Point x : set)
    in_set[x] = true;
  return filter_subgroup(
    G,
    [&](Perm const &g) {
      return std::all_of(set.begin(), set.end(),
                         [&](Point x) { return in_set[g[x]]; });
    },
    limits);
}

PermGroup centralizer(PermGroup const &G, std::vector<Perm> const &elements,
                      Limits const &limits)
{
  return filter_subgroup(
    G,
    [&](Perm const &g) {
      return std::all_of(elements.begin(), elements.end(),
                         [&](Perm const &x) { return g * x == x * g; });
    },
    limits);
}

PermGroup centralizer(PermGroup const &G, PermGroup const &H, Limits const &limits)
{
  return centralizer(G, H.generators(), limits);
}

PermGroup normalizer(PermGroup const &G, PermGroup const &H, Limits const &limits)
{
  return filter_subgroup(
    G,
    [&](Perm const &g) {
      return std::all_of(H.generators().begin(), H.generators().end(),
                         [&](Perm const &h) { return H.contains(h.conjugate(g)); });
    },
    limits);
}

PermGroup center(PermGroup const &G, Limits const &limits)
{
  return centralizer(G, G.generators(), limits);
}

PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &elements)
{
  PermGroup H(G.degree(), elements);
  std::vector<Perm> todo = H.generators();
  for (std::size_t i = 0; i < todo.size(); ++i) {
    for (auto const &s : G.generators()) {
      Perm c = todo[i].conjugate(s);
      if (!H.contains(c)) {
        H = H.extended_by({c});
        todo.push_back(std::move(c));
      }
    }
  }
  return H;
}

PermGroup derived_subgroup(PermGroup const &G)
{
  std::vector<Perm> commutators;
  auto const &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  }
  return normal_closure(G, commutators);
}

bool is_abelian(PermGroup const &G)
{
  auto const &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

bool is_solvable(PermGroup const &G)
{
  PermGroup H = G;
  while (!H.is_trivial()) {
    PermGroup D = derived_subgroup(H);
    if (D.order() == H.order())
      return false;
    H = D;
  }
  return true;
}

bool is_p_group(PermGroup const &G, std::uint64_t p)
{
  mpz_class n = G.order();
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0)
    n /= p;
  return n == 1;
}

bool is_normal(PermGroup const &G, PermGroup const &N)
{
  if (!N.is_subgroup_of(G))
    return false;
  for (auto const &n : N.generators()) {
    for (auto const &s : G.generators()) {
      if (!N.contains(n.conjugate(s)))
        return false;
    }
  }
  return true;
}

// --- conjugacy classes ------------------------------------------------------

ConjugacyClasses::ConjugacyClasses(PermGroup G, Limits const &limits)
  : group_(std::move(G))
{
  check_enumerable(group_, limits);
  auto const &b = group_.bsgs();
  auto const n = group_.order_u64();
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  class_of_rank_.assign(n, unassigned);

  std::vector<Perm> stack;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (class_of_rank_[r] != unassigned)
      continue;
    auto const c = static_cast<std::uint32_t>(representatives_.size());
    Perm rep = b.unrank(r);
    class_of_rank_[r] = c;
    std::uint64_t size = 1;
    stack.push_back(rep);
    while (!stack.empty()) {
      Perm x = std::move(stack.back());
      stack.pop_back();
      for (auto const &s : group_.generators()) {
        Perm y = x.conjugate(s);
        auto const ry = b.rank(y);
        if (class_of_rank_[ry] == unassigned) {
          class_of_rank_[ry] = c;
          ++size;
          stack.push_back(std::move(y));
        }
      }
    }
    orders_.push_back(rep.order());
    representatives_.push_back(std::move(rep));
    sizes_.push_back(size);
  }

  inverse_.resize(size());
  for (std::size_t i = 0; i < size(); ++i)
    inverse_[i] = class_of(representatives_[i].inverse());
}

std::size_t ConjugacyClasses::class_of(Perm const &g) const
{
  return class_of_rank_[group_.bsgs().rank(g)];
}

std::size_t ConjugacyClasses::power_class(std::size_t i, std::int64_t k) const
{
  return class_of(representatives_[i].pow(k));
}

std::uint64_t ConjugacyClasses::centralizer_order(std::size_t i) const
{
  return group_.order_u64() / sizes_[i];
}

std::uint64_t ConjugacyClasses::exponent() const
{
  std::uint64_t e = 1;
  for (auto o : orders_)
    e = std::lcm(e, o);
  return e;
}

// --- Sylow ------------------------------------------------------------------

PermGroup sylow(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not a prime");
  mpz_class target = 1;
  for (unsigned i = p_valuation(G.order(), p); i > 0; --i)
    target *= p;

  // A p-subgroup P below a Sylow subgroup has N_G(P)/P of order divisible by
  // p, so some g in N_G(P) \ P has g^p in P; adjoining it grows P by p.
  PermGroup P = PermGroup::trivial(G.degree());
  while (P.order() < target) {
    PermGroup N = P.is_trivial() ? G : normalizer(G, P, limits);
    std::optional<Perm> step;
    check_enumerable(N, limits);
    auto const &b = N.bsgs();
    auto const n = N.order_u64();
    for (std::uint64_t r = 1; r < n && !step; ++r) {
      Perm g = b.unrank(r);
      if (!P.contains(g) && P.contains(g.pow(static_cast<long long>(p))))
        step = std::move(g);
    }
    if (!step)
      throw std::logic_error("sylow: no p-element in normalizer quotient");
    P = P.extended_by({*step});
  }
  return P;
}

// --- normal subgroups -------------------------------------------------------

std::vector<bool> class_mask(ConjugacyClasses const &classes, PermGroup const &N)
{
  std::vector<bool> mask(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    mask[i] = N.contains(classes.representatives()[i]);
  return mask;
}

std::optional<std::size_t>
NormalSubgroupLattice::find(std::vector<bool> const &mask) const
{
  for (std::size_t i = 0; i < class_masks.size(); ++i) {
    if (class_masks[i] == mask)
      return i;
  }
  return std::nullopt;
}

std::size_t NormalSubgroupLattice::index_of(PermGroup const &N,
                                            ConjugacyClasses const &classes) const
{
  auto idx = find(class_mask(classes, N));
  if (!idx)
    throw NotNormal("subgroup is not normal");
  return *idx;
}

bool NormalSubgroupLattice::contains(std::size_t big, std::size_t small) const
{
  auto const &a = class_masks[big];
  auto const &b = class_masks[small];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] && !a[i])
      return false;
  }
  return true;
}

NormalSubgroupLattice normal_subgroup_lattice(ConjugacyClasses const &classes)
{
  auto const &G = classes.group();
  auto const k = classes.size();

  auto order_of_mask = [&](std::vector<bool> const &mask) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < k; ++i)
      n += mask[i] ? classes.sizes()[i] : 0;
    return n;
  };

  std::map<std::vector<bool>, PermGroup> found;
  std::vector<std::vector<bool>> queue;

  auto add = [&](PermGroup N) {
    auto mask = class_mask(classes, N);
    if (found.count(mask))
      return;
    found.emplace(mask, std::move(N));
    queue.push_back(std::move(mask));
  };

  add(PermGroup::trivial(G.degree()));
  std::vector<std::vector<bool>> closures;
  for (std::size_t c = 1; c < k; ++c) {
    auto N = normal_closure(G, {classes.representatives()[c]});
    auto mask = class_mask(classes, N);
    if (std::find(closures.begin(), closures.end(), mask) == closures.end())
      closures.push_back(mask);
    add(std::move(N));
  }

  // Every normal subgroup is a join of class closures.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto const mask = queue[i];
    for (auto const &cm : closures) {
      bool inside = true;
      for (std::size_t j = 0; j < k && inside; ++j)
        inside = !cm[j] || mask[j];
      if (inside)
        continue;
      auto const &M = found.at(mask);
      auto const &C = found.at(cm);
      add(M.extended_by(C.generators()));
    }
  }

  std::vector<std::vector<bool>> masks;
  for (auto const &[mask, N] : found)
    masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [&](auto const &a, auto const &b) {
                     return order_of_mask(a) < order_of_mask(b);
                   });

  NormalSubgroupLattice lattice;
  for (auto &mask : masks) {
    lattice.orders.push_back(order_of_mask(mask));
    lattice.subgroups.push_back(found.at(mask));
    lattice.class_masks.push_back(std::move(mask));
  }
  return lattice;
}

std::vector<PermGroup> normal_subgroups(PermGroup const &G, Limits const &limits)
{
  ConjugacyClasses classes(G, limits);
  return normal_subgroup_lattice(classes).subgroups;
}

std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &G,
                                                Limits const &limits)
{
  ConjugacyClasses classes(G, limits);
  auto lattice = normal_subgroup_lattice(classes);
  std::vector<PermGroup> result;
  for (std::size_t i = 1; i < lattice.subgroups.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < lattice.subgroups.size() && minimal; ++j) {
      if (j != i && lattice.orders[j] < lattice.orders[i] && lattice.contains(i, j))
        minimal = false;
    }
    if (minimal)
      result.push_back(lattice.subgroups[i]);
  }
  return result;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

// Largest normal subgroup M >= K of G with |M:K| a p-power (kind p) or prime
// to p (kind p'). Such subgroups are closed under products, so the largest is
// unique.
std::size_t largest_above(NormalSubgroupLattice const &lattice, std::size_t K,
                          std::uint64_t p, FactorKind kind)
{
  std::size_t best = K;
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    if (!lattice.contains(i, K))
      continue;
    auto const index = lattice.orders[i] / lattice.orders[K];
    bool const ok = kind == FactorKind::p ? is_power_of(index, p) : index % p != 0;
    if (ok && lattice.orders[i] > lattice.orders[best])
      best = i;
  }
  return best;
}

} // namespace

PermGroup p_core(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  ConjugacyClasses classes(G, limits);
  auto lattice = normal_subgroup_lattice(classes);
  return lattice.subgroups[largest_above(lattice, 0, p, FactorKind::p)];
}

PermGroup p_prime_core(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  ConjugacyClasses classes(G, limits);
  auto lattice = normal_subgroup_lattice(classes);
  return lattice.subgroups[largest_above(lattice, 0, p, FactorKind::p_prime)];
}

PermGroup p_residual(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  return normal_closure(G, sylow(G, p, limits).generators());
}

SubnormalSeries pp_series(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  ConjugacyClasses classes(G, limits);
  auto lattice = normal_subgroup_lattice(classes);
  auto const top = lattice.subgroups.size() - 1;

  SubnormalSeries series;
  std::size_t K = 0;
  series.terms.push_back(lattice.subgroups[K]);
  FactorKind kind = FactorKind::p;
  unsigned trivial_steps = 0;
  while (K != top && trivial_steps < 2) {
    auto const M = largest_above(lattice, K, p, kind);
    if (M == K) {
      ++trivial_steps;
    } else {
      trivial_steps = 0;
      series.terms.push_back(lattice.subgroups[M]);
      series.kinds.push_back(kind);
      if (kind == FactorKind::p)
        ++series.p_length;
      K = M;
    }
    kind = kind == FactorKind::p ? FactorKind::p_prime : FactorKind::p;
  }
  series.reaches_group = K == top;
  return series;
}

bool is_p_solvable(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  if (p_valuation(G.order(), p) == 0)
    return true;
  return pp_series(G, p, limits).reaches_group;
}

// --- coset action -----------------------------------------------------------

std::size_t CosetAction::coset_of(Perm const &g) const
{
  return coset_of_rank[source.bsgs().rank(g)];
}

Perm CosetAction::image_of(Perm const &g) const
{
  std::vector<Point> images(coset_representatives.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    images[c] = static_cast<Point>(coset_of(coset_representatives[c] * g));
  return Perm(std::move(images));
}

CosetAction coset_action(PermGroup const &G, PermGroup const &N, Limits const &limits)
{
  if (!is_normal(G, N))
    throw NotNormal("coset_action: subgroup is not normal");
  check_enumerable(G, limits);

  CosetAction result;
  result.source = G;
  auto const &b = G.bsgs();
  auto const n = G.order_u64();
  auto const index = n / N.order_u64();
  if (index > 65536)
    throw BoundExceeded("coset_action: index exceeds 65536");

  auto const kernel = N.elements(limits);
  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  result.coset_of_rank.assign(n, unassigned);
  for (std::uint64_t r = 0; r < n; ++r) {
    if (result.coset_of_rank[r] != unassigned)
      continue;
    auto const c = static_cast<std::uint32_t>(result.coset_representatives.size());
    Perm g = b.unrank(r);
    for (auto const &x : kernel)
      result.coset_of_rank[b.rank(x * g)] = c;
    result.coset_representatives.push_back(std::move(g));
  }

  for (auto const &s : G.generators())
    result.generator_images.push_back(result.image_of(s));
  result.image = PermGroup(index, result.generator_images);
  return result;
}

} // namespace mh

namespace mh {

std::vector<PermGroup> all_subgroups(PermGroup const &G, Limits const &limits)
{
  check_enumerable(G, limits);
  auto const &chain = G.bsgs();
  auto const n = G.order_u64();
  auto const mask_of = [&](PermGroup const &H) {
    std::vector<bool> mask(n, false);
    H.for_each_element([&](std::uint64_t, Perm const &x) { mask[chain.rank(x)] = true; });
    return mask;
  };

  std::map<std::vector<bool>, std::vector<Perm>> found;
  std::vector<std::vector<bool>> cyclic_masks;
  std::vector<Perm> cyclic_gens;
  G.for_each_element([&](std::uint64_t, Perm const &g) {
    PermGroup C(G.degree(), {g});
    auto mask = mask_of(C);
    if (found.emplace(mask, std::vector<Perm>{g}).second) {
      cyclic_masks.push_back(std::move(mask));
      cyclic_gens.push_back(g);
    }
  });

  std::vector<std::vector<bool>> queue;
  for (auto const &[mask, gens] : found)
    queue.push_back(mask);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto const mask = queue[i];
    auto const gens = found.at(mask);
    for (std::size_t c = 0; c < cyclic_masks.size(); ++c) {
      bool inside = true;
      for (std::uint64_t r = 0; r < n && inside; ++r)
        inside = !cyclic_masks[c][r] || mask[r];
      if (inside)
        continue;
      auto joined = gens;
      joined.push_back(cyclic_gens[c]);
      auto jm = mask_of(PermGroup(G.degree(), joined));
      if (found.emplace(jm, std::move(joined)).second)
        queue.push_back(std::move(jm));
    }
  }

  std::vector<std::pair<std::vector<bool>, std::vector<Perm>>> sorted(found.begin(), found.end());
  auto const count = [](std::vector<bool> const &m) { return std::count(m.begin(), m.end(), true); };
  std::stable_sort(sorted.begin(), sorted.end(), [&](auto const &x, auto const &y) {
    auto const cx = count(x.first), cy = count(y.first);
    if (cx != cy)
      return cx < cy;
    return x.first > y.first;
  });
  std::vector<PermGroup> out;
  for (auto &[mask, gens] : sorted) {
    std::erase_if(gens, [](Perm const &g) { return g.is_identity(); });
    out.emplace_back(G.degree(), std::move(gens));
  }
  return out;
}

} // namespace mh
