#include "mh/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

unsigned euler_phi(unsigned n)
{
  unsigned result = n;
  for (auto const &[q, e] : factorize(n))
    result = result / static_cast<unsigned>(q) * static_cast<unsigned>(q - 1);
  return result;
}

unsigned prime_free_part(unsigned e, std::uint64_t p)
{
  while (e % p == 0)
    e /= static_cast<unsigned>(p);
  return e;
}

} // namespace

PReduction::PReduction(unsigned conductor, std::uint64_t p, unsigned variant)
  : p_(p), e_(conductor),
    field_(p, static_cast<unsigned>(multiplicative_order(p % prime_free_part(conductor, p),
                                                         prime_free_part(conductor, p))))
{
  if (!is_prime(p))
    throw InvalidArgument("reduction needs a prime");
  auto const ep = prime_free_part(conductor, p);
  auto z = field_.element_of_order(ep);
  if (variant == 1) {
    std::vector<bool> in_p_subgroup(ep, false);
    std::uint64_t x = 1 % ep;
    do {
      in_p_subgroup[x] = true;
      x = x * p % ep;
    } while (x != 1 % ep);
    for (unsigned r = 2; r < ep; ++r)
      if (std::gcd(r, ep) == 1 && !in_p_subgroup[r]) {
        z = field_.pow(z, std::uint64_t{r});
        distinct_ = true;
        break;
      }
  }
  auto const phi = euler_phi(conductor);
  auto cur = field_.one();
  for (unsigned i = 0; i < phi; ++i) {
    basis_images_.push_back(cur);
    cur = field_.mul(cur, z);
  }
}

GaloisField::Element PReduction::reduce(Cyclotomic const &x) const
{
  auto const y = x.embed(e_);
  auto out = field_.zero();
  mpz_class r;
  for (std::size_t i = 0; i < y.coefficients().size(); ++i) {
    auto const &c = y.coefficients()[i];
    if (c.get_den() != 1)
      throw std::logic_error("central character value is not an algebraic integer");
    if (c == 0)
      continue;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p_));
    if (r != 0)
      out = field_.add(out, field_.scale(basis_images_[i], r.get_ui()));
  }
  return out;
}

BlockPartition block_distribution(CharacterTable const &table, std::uint64_t p,
                                  unsigned reduction_variant)
{
  PReduction const red(table.conductor(), p, reduction_variant);
  auto const k = table.classes().size();
  BlockPartition part;
  part.p = p;
  part.a = p_valuation(table.group().order(), p);

  std::map<std::vector<GaloisField::Element>, std::size_t> key_to_block;
  part.block_of.resize(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    mpq_class const inv_deg(1, static_cast<unsigned long>(table.degree(r)));
    std::vector<GaloisField::Element> key;
    key.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      auto const omega = table.value(r, j) *
                         (mpq_class(static_cast<unsigned long>(table.classes().sizes()[j])) * inv_deg);
      key.push_back(red.reduce(omega));
    }
    auto [it, inserted] = key_to_block.emplace(std::move(key), part.blocks.size());
    if (inserted)
      part.blocks.emplace_back();
    part.blocks[it->second].push_back(r);
    part.block_of[r] = it->second;
  }
  // row 0 is trivial, so block 0 is principal and blocks are ordered by first row
  part.principal_id = part.block_of[0];
  for (auto const &b : part.blocks) {
    unsigned min_v = part.a;
    for (auto r : b)
      min_v = std::min(min_v, p_valuation(table.degree(r), p));
    part.defect.push_back(part.a - min_v);
  }
  return part;
}

std::optional<unsigned> minimal_nonlinear_height(CharacterTable const &p_group_table,
                                                 std::uint64_t p)
{
  std::optional<unsigned> best;
  for (auto d : p_group_table.degrees())
    if (d > 1) {
      auto const v = p_valuation(d, p);
      if (!best || v < *best)
        best = v;
    }
  return best;
}

HeightProfile height_profile(CharacterTable const &table, BlockPartition const &partition,
                             CharacterTable const &sylow_table)
{
  HeightProfile h;
  for (std::size_t r = 0; r < table.size(); ++r) {
    auto const B = partition.block_of[r];
    h.heights.push_back(p_valuation(table.degree(r), partition.p) -
                        (partition.a - partition.defect[B]));
  }
  for (auto r : partition.principal())
    if (h.heights[r] > 0 && (!h.mh_B0 || h.heights[r] < *h.mh_B0))
      h.mh_B0 = h.heights[r];
  h.mh_D = minimal_nonlinear_height(sylow_table, partition.p);
  return h;
}

std::vector<std::vector<bool>> covering_blocks(CharacterTable const &table_G,
                                               BlockPartition const &blocks_G,
                                               CharacterTable const &table_N,
                                               BlockPartition const &blocks_N)
{
  auto const m = restriction_constituents(table_G, table_N);
  std::vector<std::vector<bool>> covers(blocks_G.count(),
                                        std::vector<bool>(blocks_N.count(), false));
  for (std::size_t x = 0; x < table_G.size(); ++x)
    for (std::size_t t = 0; t < table_N.size(); ++t)
      if (m[x][t] > 0)
        covers[blocks_G.block_of[x]][blocks_N.block_of[t]] = true;
  return covers;
}

PrincipalCoverResult principal_cover_check(CharacterTable const &table_G, CharacterTable const &table_N,
                            std::uint64_t p)
{
  auto const &G = table_G.group();
  auto const &N = table_N.group();
  PrincipalCoverResult res;
  auto const Q = sylow(N, p);
  res.hypothesis = centralizer(G, Q).is_subgroup_of(N);

  auto const bg = block_distribution(table_G, p);
  auto const bn = block_distribution(table_N, p);
  auto const covers = covering_blocks(table_G, bg, table_N, bn);
  for (std::size_t B = 0; B < bg.count(); ++B)
    if (covers[B][bn.principal_id])
      res.covering_principal.push_back(B);
  res.unique_principal_cover =
    res.covering_principal.size() == 1 && res.covering_principal[0] == bg.principal_id;
  res.quotient_in_principal = true;
  for (auto r : characters_with_kernel_containing(table_G, N))
    if (bg.block_of[r] != bg.principal_id)
      res.quotient_in_principal = false;
  res.implication_holds =
    !res.hypothesis || (res.unique_principal_cover && res.quotient_in_principal);
  return res;
}

ConstrainedResult is_p_constrained_single_block(CharacterTable const &table, std::uint64_t p)
{
  auto const &G = table.group();
  ConstrainedResult res;
  auto const Opp = p_prime_core(G, p);
  if (Opp.is_trivial()) {
    auto const Op = p_core(G, p);
    res.hypothesis = centralizer(G, Op).is_subgroup_of(Op);
  }
  res.block_count = block_distribution(table, p).count();
  if (res.hypothesis)
    res.single_block = res.block_count == 1;
  return res;
}

std::string blocks_to_json(CharacterTable const &table, BlockPartition const &partition,
                           HeightProfile const &heights, int indent)
{
  using nlohmann::json;
  auto opt = [](std::optional<unsigned> v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["p"] = partition.p;
  j["a"] = partition.a;
  j["order"] = table.group().order().get_str();
  j["principal"] = partition.principal_id;
  json blocks = json::array();
  for (std::size_t b = 0; b < partition.count(); ++b) {
    json rows = json::array(), degrees = json::array(), hs = json::array();
    for (auto r : partition.blocks[b]) {
      rows.push_back(r);
      degrees.push_back(table.degree(r));
      hs.push_back(heights.heights[r]);
    }
    blocks.push_back({{"rows", rows},
                      {"degrees", degrees},
                      {"defect", partition.defect[b]},
                      {"heights", hs}});
  }
  j["blocks"] = blocks;
  j["mh_B0"] = opt(heights.mh_B0);
  j["mh_P"] = opt(heights.mh_D);
  return j.dump(indent);
}

} // namespace mh
