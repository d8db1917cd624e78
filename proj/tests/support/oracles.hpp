#pragma once

// Brute-force reference computations. Nothing here touches the stabilizer
// chain, the class machinery or the character table code of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mh/perm.hpp"

namespace oracle {

using Images = std::vector<mh::Point>;

inline Images compose(Images const &a, Images const &b)
{
  Images c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[x] = b[a[x]];
  return c;
}

inline Images invert(Images const &a)
{
  Images c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[a[x]] = static_cast<mh::Point>(x);
  return c;
}

/// All elements of the group generated by gens, by breadth-first closure.
inline std::set<Images> closure(std::size_t degree, std::vector<mh::Perm> const &gens)
{
  Images id(degree);
  std::iota(id.begin(), id.end(), mh::Point{0});
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (auto const &g : frontier)
      for (auto const &s : gens) {
        Images s_img(s.images().begin(), s.images().end());
        auto h = compose(g, s_img);
        if (seen.insert(h).second)
          next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Conjugacy class sizes, ascending.
inline std::vector<std::uint64_t> class_sizes(std::set<Images> const &G)
{
  std::set<Images> done;
  std::vector<std::uint64_t> sizes;
  for (auto const &x : G) {
    if (done.count(x))
      continue;
    std::set<Images> cls;
    for (auto const &h : G)
      cls.insert(compose(compose(invert(h), x), h));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::uint64_t element_order(Images const &g)
{
  Images id(g.size());
  std::iota(id.begin(), id.end(), mh::Point{0});
  std::uint64_t k = 1;
  for (auto h = g; h != id; h = compose(h, g))
    ++k;
  return k;
}

/// #{(x, y) in K_i x K_j : xy = z}, classes given as element sets.
inline std::uint64_t class_product_count(std::set<Images> const &Ki, std::set<Images> const &Kj,
                                         Images const &z)
{
  std::uint64_t n = 0;
  for (auto const &x : Ki)
    if (Kj.count(compose(invert(x), z)))
      ++n;
  return n;
}

inline std::set<Images> conjugacy_class(std::set<Images> const &G, Images const &x)
{
  std::set<Images> cls;
  for (auto const &h : G)
    cls.insert(compose(compose(invert(h), x), h));
  return cls;
}

/// Number of standard Young tableaux of the given shape, by removing each
/// corner cell in turn.
inline std::uint64_t count_standard_tableaux(std::vector<unsigned> shape)
{
  static std::map<std::vector<unsigned>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0)
    shape.pop_back();
  if (shape.empty())
    return 1;
  if (auto it = memo.find(shape); it != memo.end())
    return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (i + 1 == shape.size() || shape[i + 1] < shape[i]) {
      auto smaller = shape;
      --smaller[i];
      total += count_standard_tableaux(smaller);
    }
  memo[shape] = total;
  return total;
}

/// All partitions of n, parts weakly decreasing.
inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned> &cur,
                       std::vector<std::vector<unsigned>> &out)
{
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> partitions(unsigned n)
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions(n, n, cur, out);
  return out;
}

/// Blocks of a rational character table from central characters
/// omega(K) = |K| chi(g) / chi(1), compared modulo p. Rows are degrees-first
/// integer vectors, sizes the class sizes. Returns a block label per row.
inline std::vector<int> rational_blocks(std::vector<std::vector<long>> const &table,
                                        std::vector<long> const &sizes, long p)
{
  auto omega_mod_p = [&](std::size_t r) {
    std::vector<long> w;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      long num = sizes[k] * table[r][k];
      long d = table[r][0];
      // num / d is an integer; reduce mod p
      w.push_back((((num / d) % p) + p) % p);
    }
    return w;
  };
  std::vector<std::vector<long>> seen;
  std::vector<int> label;
  for (std::size_t r = 0; r < table.size(); ++r) {
    auto w = omega_mod_p(r);
    auto it = std::find(seen.begin(), seen.end(), w);
    if (it == seen.end()) {
      label.push_back(static_cast<int>(seen.size()));
      seen.push_back(w);
    } else {
      label.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  return label;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

} // namespace oracle
