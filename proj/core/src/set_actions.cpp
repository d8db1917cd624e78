#include "mh/set_actions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

/// Action of one permutation on bitmasks, one lookup table per byte.
class MaskAction
{
public:
  explicit MaskAction(Perm const &g)
  {
    auto const n = g.degree();
    for (std::size_t byte = 0; byte < tables_.size(); ++byte)
      for (unsigned bits = 0; bits < 256; ++bits) {
        Subset img = 0;
        for (unsigned i = 0; i < 8; ++i) {
          auto const x = byte * 8 + i;
          if (x < n && (bits >> i & 1u))
            img |= Subset{1} << g[x];
        }
        tables_[byte][bits] = img;
      }
  }

  Subset operator()(Subset s) const
  {
    return tables_[0][s & 0xffu] | tables_[1][s >> 8 & 0xffu] | tables_[2][s >> 16 & 0xffu];
  }

private:
  std::array<std::array<Subset, 256>, 3> tables_;
};

std::vector<MaskAction> mask_actions(PermGroup const &H)
{
  if (H.degree() > max_power_set_degree)
    throw BoundExceeded("power-set orbits need degree at most 24, got " +
                        std::to_string(H.degree()));
  std::vector<MaskAction> acts;
  for (auto const &g : H.generators())
    acts.emplace_back(g);
  return acts;
}

/// Calls f(smallest subset, orbit size) for each orbit in order; stops when
/// f returns false.
template <class F>
void walk_power_set_orbits(PermGroup const &H, F &&f)
{
  auto const acts = mask_actions(H);
  auto const total = std::uint64_t{1} << H.degree();
  std::vector<bool> seen(total, false);
  std::vector<Subset> stack;
  for (std::uint64_t s0 = 0; s0 < total; ++s0) {
    if (seen[s0])
      continue;
    seen[s0] = true;
    stack.assign(1, static_cast<Subset>(s0));
    std::uint64_t size = 0;
    while (!stack.empty()) {
      auto const s = stack.back();
      stack.pop_back();
      ++size;
      for (auto const &a : acts) {
        auto const t = a(s);
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    if (!f(static_cast<Subset>(s0), size))
      return;
  }
}

} // namespace

ConcealedReport is_p_concealed(PermGroup const &H, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument("p must be prime");
  ConcealedReport r;
  r.p_divides_order = mpz_divisible_ui_p(H.order().get_mpz_t(), p) != 0;
  walk_power_set_orbits(H, [&](Subset s, std::uint64_t size) {
    ++r.orbit_count;
    if (size % p == 0) {
      r.offending = s;
      r.offending_orbit_size = size;
      return false;
    }
    return true;
  });
  r.holds = r.p_divides_order && !r.offending;
  return r;
}

std::vector<std::uint64_t> power_set_orbit_sizes(PermGroup const &H)
{
  std::vector<std::uint64_t> sizes;
  walk_power_set_orbits(H, [&](Subset, std::uint64_t size) {
    sizes.push_back(size);
    return true;
  });
  return sizes;
}

std::vector<unsigned> OrderedSetPartition::labels() const
{
  std::vector<unsigned> out(degree, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Point x : parts[i])
      out[x] = static_cast<unsigned>(i);
  return out;
}

OrderedSetPartition OrderedSetPartition::from_labels(std::vector<unsigned> const &labels,
                                                     unsigned k)
{
  OrderedSetPartition part;
  part.degree = labels.size();
  part.parts.resize(k);
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] >= k)
      throw InvalidArgument("label out of range");
    part.parts[labels[x]].push_back(static_cast<Point>(x));
  }
  return part;
}

std::string OrderedSetPartition::to_string(bool one_based) const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    os << (i ? ",{" : "{");
    for (std::size_t j = 0; j < parts[i].size(); ++j)
      os << (j ? "," : "") << parts[i][j] + (one_based ? 1 : 0);
    os << '}';
  }
  os << ')';
  return os.str();
}

std::optional<OrderedSetPartition>
regular_orbit_on_partitions(PermGroup const &P, unsigned k, std::uint64_t max_labelings)
{
  if (k == 0)
    throw InvalidArgument("number of parts must be positive");
  auto const n = P.degree();
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), k, static_cast<unsigned long>(n));
  if (count > max_labelings)
    throw BoundExceeded("too many ordered partitions to enumerate: " + count.get_str());
  auto const total = to_u64(count);

  // A nontrivial stabilizer contains an element of prime order.
  std::vector<Perm> prime_order;
  P.for_each_element([&](std::uint64_t, Perm const &g) {
    auto const o = g.order();
    if (o > 1 && is_prime(o))
      prime_order.push_back(g);
  });

  std::vector<unsigned> labels(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = static_cast<unsigned>(c % k);
      c /= k;
    }
    bool regular = true;
    for (auto const &g : prime_order) {
      bool fixes = true;
      for (std::size_t x = 0; x < n && fixes; ++x)
        fixes = labels[g[x]] == labels[x];
      if (fixes) {
        regular = false;
        break;
      }
    }
    if (regular)
      return OrderedSetPartition::from_labels(labels, k);
  }
  return std::nullopt;
}

bool is_regular_partition(PermGroup const &G, OrderedSetPartition const &part,
                          Limits const &limits)
{
  auto const labels = part.labels();
  std::uint64_t stabilizer = 0;
  G.for_each_element(
    [&](std::uint64_t, Perm const &g) {
      for (std::size_t x = 0; x < labels.size(); ++x)
        if (labels[g[x]] != labels[x])
          return;
      ++stabilizer;
    },
    limits);
  return stabilizer == 1;
}

} // namespace mh
