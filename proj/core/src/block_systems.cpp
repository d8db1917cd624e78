#include "mh/block_systems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mh/errors.hpp"
#include "mh/group_structure.hpp"
#include "mh/set_actions.hpp"

namespace mh {

namespace {

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a > b)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

/// Smallest block containing all the given points.
std::vector<Point> block_closure(PermGroup const &G, std::vector<Point> const &points)
{
  auto const n = G.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (uf.unite(points[0], points[i]))
      queue.emplace_back(points[0], points[i]);
  while (!queue.empty()) {
    auto const [x, y] = queue.back();
    queue.pop_back();
    for (auto const &g : G.generators()) {
      auto const u = uf.find(g[x]);
      auto const v = uf.find(g[y]);
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
      }
    }
  }
  std::vector<Point> block;
  auto const root = uf.find(points[0]);
  for (std::size_t x = 0; x < n; ++x)
    if (uf.find(x) == root)
      block.push_back(static_cast<Point>(x));
  return block;
}

void require_transitive(PermGroup const &G)
{
  if (!is_transitive(G))
    throw InvalidArgument("group is not transitive");
}

} // namespace

std::vector<Point> minimal_block(PermGroup const &G, Point a, Point b)
{
  return block_closure(G, {a, b});
}

bool is_primitive(PermGroup const &G)
{
  require_transitive(G);
  for (std::size_t b = 1; b < G.degree(); ++b)
    if (minimal_block(G, 0, static_cast<Point>(b)).size() != G.degree())
      return false;
  return true;
}

BlockSystem maximal_block_system(PermGroup const &G, Limits const &limits)
{
  require_transitive(G);
  auto const n = G.degree();

  // Every block through 0 is a join of minimal blocks through 0.
  std::set<std::vector<Point>> blocks;
  for (std::size_t b = 1; b < n; ++b)
    blocks.insert(minimal_block(G, 0, static_cast<Point>(b)));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<Point>> current(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Point> both;
        std::set_union(current[i].begin(), current[i].end(), current[j].begin(),
                       current[j].end(), std::back_inserter(both));
        if (blocks.insert(block_closure(G, both)).second)
          grew = true;
      }
  }

  std::vector<Point> best;
  for (auto const &b : blocks)
    if (b.size() < n && b.size() > best.size())
      best = b;
  if (best.size() <= 1)
    throw InvalidArgument("group is primitive");

  BlockSystem sys;
  std::vector<int> block_of(n, -1);
  auto add_block = [&](std::vector<Point> b) {
    for (Point x : b)
      block_of[x] = static_cast<int>(sys.blocks.size());
    sys.blocks.push_back(std::move(b));
  };
  add_block(best);
  for (std::size_t i = 0; i < sys.blocks.size(); ++i)
    for (auto const &g : G.generators()) {
      Point const y = g[sys.blocks[i][0]];
      if (block_of[y] >= 0)
        continue;
      std::vector<Point> img;
      for (Point x : sys.blocks[i])
        img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      add_block(std::move(img));
    }
  std::sort(sys.blocks.begin() + 1, sys.blocks.end());
  for (std::size_t i = 0; i < sys.blocks.size(); ++i)
    for (Point x : sys.blocks[i])
      block_of[x] = static_cast<int>(i);

  auto const r = sys.blocks.size();
  std::vector<Perm> induced;
  for (auto const &g : G.generators()) {
    std::vector<Point> images(r);
    for (std::size_t i = 0; i < r; ++i)
      images[i] = static_cast<Point>(block_of[g[sys.blocks[i][0]]]);
    induced.push_back(Perm(std::move(images)));
  }
  sys.induced = PermGroup(r, std::move(induced));
  sys.kernel = filter_subgroup(
    G,
    [&](Perm const &g) {
      for (std::size_t i = 0; i < r; ++i)
        if (block_of[g[sys.blocks[i][0]]] != static_cast<int>(i))
          return false;
      return true;
    },
    limits);
  sys.induced_primitive = is_primitive(sys.induced);
  return sys;
}

BlockQuotientResult block_quotient_check(PermGroup const &G, std::uint64_t p, Limits const &limits)
{
  BlockQuotientResult res;
  res.system = maximal_block_system(G, limits);
  res.group_concealed = is_p_concealed(G, p).holds;
  res.induced_concealed = is_p_concealed(res.system.induced, p).holds;
  res.implication_holds = !res.group_concealed || res.induced_concealed;
  return res;
}

} // namespace mh
