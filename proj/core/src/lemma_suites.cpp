#include "mh/lemma_suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mh/block_systems.hpp"
#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/group_io.hpp"
#include "mh/harness.hpp"
#include "mh/numtheory.hpp"
#include "mh/partition.hpp"
#include "mh/set_actions.hpp"

namespace mh {

bool SuiteResult::passed() const
{
  return failures() == 0;
}

std::size_t SuiteResult::failures() const
{
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](CaseResult const &c) { return !c.passed; }));
}

namespace {

using Suite = std::function<void(SuiteResult &, SuiteOptions const &)>;

std::string join(std::vector<std::uint64_t> const &v)
{
  std::string out;
  for (auto x : v)
    out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::string with_p(std::string const &name, std::uint64_t p)
{
  return name + "/p" + std::to_string(p);
}

std::filesystem::path fixtures_of(SuiteOptions const &o)
{
  return o.fixtures.empty() ? fixture_dir() : o.fixtures;
}

class Catalog
{
public:
  Catalog() : entries_(builtin_catalog()) {}

  PermGroup get(std::string const &name) const
  {
    for (auto const &e : entries_)
      if (e.name == name)
        return build_validated(e);
    throw std::logic_error("no catalog entry " + name);
  }

  /// Built entries with order at most the bound.
  std::vector<std::pair<std::string, PermGroup>> up_to(std::uint64_t max_order) const
  {
    std::vector<std::pair<std::string, PermGroup>> out;
    for (auto const &e : entries_)
      if (e.expected_order && *e.expected_order <= max_order)
        out.emplace_back(e.name, build_validated(e));
    return out;
  }

private:
  std::vector<CatalogEntry> entries_;
};

std::vector<std::uint64_t> orbit_sizes(MatGroup const &M, SpaceLimits const &limits)
{
  std::vector<std::uint64_t> out;
  for (auto const &o : vector_orbits(M, limits))
    out.push_back(o.size);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_degree_with_p_part(CharacterTable const &t, std::uint64_t p, std::uint64_t part)
{
  return std::any_of(t.degrees().begin(), t.degrees().end(),
                     [&](std::uint64_t d) { return p_part(d, p) == part; });
}

bool is_abelian_sylow(PermGroup const &G, std::uint64_t p)
{
  return is_abelian(sylow(G, p));
}

// --- linear groups ----------------------------------------------------------

void exceptional_modules(SuiteResult &out, SuiteOptions const &o)
{
  struct Row
  {
    char const *file;
    std::vector<std::uint64_t> orbits;
    bool large;
  };
  std::vector<Row> const rows = {
      {"sl2_5_gl4_3", {1, 40, 40}, false},
      {"psl2_11_gl5_3", {1, 22, 110, 110}, false},
      {"m11_gl5_3", {1, 22, 220}, false},
      {"m23_gl11_2", {1, 23, 253, 1771}, true},
  };
  for (auto const &row : rows) {
    if (row.large && !o.large)
      continue;
    SpaceLimits const limits{row.large ? 2048u : 729u};
    CaseResult c{row.file, false, ""};
    try {
      auto const M = load_mat_group(fixtures_of(o) / (std::string(row.file) + ".mgrp"),
                                    MatParseOptions{true, limits});
      auto const sizes = orbit_sizes(M, limits);
      auto const exc = is_p_exceptional(M, limits);
      auto const irr = is_irreducible(M, limits);
      c.passed = sizes == row.orbits && exc.holds && irr;
      c.detail = "orbits " + join(sizes) + ", order " + exc.order.get_str() +
                 (exc.holds ? ", exceptional" : ", not exceptional") +
                 (irr ? ", irreducible" : ", reducible");
    } catch (std::exception const &e) {
      c.detail = e.what();
    }
    out.cases.push_back(c);
  }

  auto const gl23 = groups::gl_mat(2, 3);
  auto const e1 = is_p_exceptional(gl23);
  out.cases.push_back({"gl2_3 exceptional", e1.holds, "orbits " + join(orbit_sizes(gl23, {}))});
  MatGroup const transvection(2, 3, {FpMatrix(3, {{1, 1}, {0, 1}})});
  auto const e2 = is_p_exceptional(transvection);
  out.cases.push_back({"transvection not exceptional", !e2.holds && e2.offending.has_value(),
                       "orbits " + join(orbit_sizes(transvection, {}))});
}

MatGroup load_fixture_mat(SuiteOptions const &o, std::string const &name)
{
  return load_mat_group(fixtures_of(o) / (name + ".mgrp"));
}

std::vector<std::uint64_t> coordinate_span(unsigned p, unsigned first, unsigned count)
{
  std::vector<std::uint64_t> out;
  for (unsigned i = first; i < first + count; ++i)
    out.push_back(ipow(p, i));
  return out;
}

void imprimitive_modules(SuiteResult &out, SuiteOptions const &o)
{
  {
    auto const M = load_fixture_mat(o, "gl2_2_wr_s3_gl6_2");
    CaseResult c{"gl2_2_wr_s3_gl6_2/p2", false, ""};
    auto const G = M.as_perm_group();
    bool const hypothesis = is_irreducible(M) && is_p_exceptional(M).holds &&
                            p_residual(G, 2).order() == G.order();
    auto const r = check_imprimitive_decomposition(
        M, {coordinate_span(2, 0, 2), coordinate_span(2, 2, 2), coordinate_span(2, 4, 2)});
    c.passed = hypothesis && r.stabilizer_transitive && r.induced_primitive &&
               r.induced_p_concealed;
    c.detail = std::string(hypothesis ? "hypothesis holds" : "hypothesis fails") +
               ", induced order " + r.induced.order().get_str();
    out.cases.push_back(c);
  }
  {
    auto const M = load_fixture_mat(o, "gl1_3_wr_s2_gl2_3");
    auto const r =
        check_imprimitive_decomposition(M, {coordinate_span(3, 0, 1), coordinate_span(3, 1, 1)});
    out.cases.push_back({"gl1_3_wr_s2_gl2_3 permutes lines", r.stabilizer_transitive &&
                                                                  r.induced_transitive,
                         "not 3-exceptional, report only"});
  }
  {
    CaseResult c{"gl2_3 has no coordinate decomposition", false, ""};
    try {
      check_imprimitive_decomposition(groups::gl_mat(2, 3),
                                      {coordinate_span(3, 0, 1), coordinate_span(3, 1, 1)});
    } catch (InvalidArgument const &e) {
      c.passed = true;
      c.detail = e.what();
    }
    out.cases.push_back(c);
  }
}

void abelian_regular_orbits(SuiteResult &out, SuiteOptions const &o)
{
  std::vector<std::pair<std::string, MatGroup>> const fixtures = {
      {"gl2_2", groups::gl_mat(2, 2)},
      {"gl2_3", groups::gl_mat(2, 3)},
      {"sl2_3", groups::sl_mat(2, 3)},
      {"gl2_2_wr_s3_gl6_2", load_fixture_mat(o, "gl2_2_wr_s3_gl6_2")},
  };
  for (auto const &[name, M] : fixtures) {
    auto const p = M.prime();
    auto const G = M.as_perm_group();
    bool const hypothesis = is_solvable(G) && p_core(G, p).is_trivial();
    auto const P = sylow(G, p);

    std::size_t abelian = 0, regular = 0;
    for (auto const &A : all_subgroups(P)) {
      if (!is_abelian(A))
        continue;
      ++abelian;
      auto const target = A.order_u64();
      for (auto const &orb : orbits(A))
        if (orb.size() == target) {
          ++regular;
          break;
        }
    }
    out.cases.push_back({with_p(name, p) + " regular orbits of abelian p-subgroups",
                         hypothesis && abelian == regular,
                         std::to_string(regular) + " of " + std::to_string(abelian)});

    if (is_abelian(P) && !P.is_trivial()) {
      bool short_orbit = false;
      for (auto const &orb : orbits(P))
        short_orbit = short_orbit || orb.size() == p;
      out.cases.push_back({with_p(name, p) + " Sylow orbit of size p",
                           hypothesis && is_irreducible(M) && short_orbit, ""});
    }
  }
}

// --- permutation groups ---------------------------------------------------

void concealed_groups(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  struct Row
  {
    char const *name;
    std::uint64_t p;
    bool concealed;
    bool character;   // some chi(1)_p = p
  };
  std::vector<Row> const rows = {
      {"dihedral10", 2, true, true},  {"agl3_2", 3, true, true}, {"agammal1_8", 3, true, true},
      {"alt5", 3, true, false},       {"sym5", 3, true, false},  {"alt8", 3, true, false},
      {"sym8", 3, true, false},       {"sym5", 2, false, false},
  };
  for (auto const &row : rows) {
    auto const H = cat.get(row.name);
    auto const r = is_p_concealed(H, row.p);
    CaseResult c{with_p(row.name, row.p), r.holds == row.concealed,
                 std::string(r.holds ? "concealed" : "not concealed") + ", " +
                     std::to_string(r.orbit_count) + " orbits on subsets"};
    if (row.character) {
      auto const t = character_table(H);
      bool const found = has_degree_with_p_part(t, row.p, row.p);
      c.passed = c.passed && found;
      c.detail += found ? ", degree with p-part p found" : ", no degree with p-part p";
    }
    out.cases.push_back(c);
  }

  // both directions of the classification on every small primitive catalog group
  for (auto const &[name, H] : cat.up_to(1'000'000)) {
    if (H.degree() > 16 || !is_transitive(H) || !is_primitive(H))
      continue;
    for (auto p : prime_divisors(H.order_u64())) {
      bool const computed = is_p_concealed(H, p).holds;
      bool const listed = concealed_by_classification(H, p);
      out.cases.push_back({with_p(name, p) + " matches classification", computed == listed,
                           computed ? "concealed" : "not concealed"});
    }
  }
}

void block_quotients(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  for (auto const &[name, G] : cat.up_to(20000)) {
    if (G.degree() > 20 || !is_transitive(G) || is_primitive(G))
      continue;
    for (auto p : prime_divisors(G.order_u64())) {
      auto const r = block_quotient_check(G, p);
      auto const &sys = r.system;
      std::set<Point> covered;
      bool equal_sizes = true;
      for (auto const &b : sys.blocks) {
        covered.insert(b.begin(), b.end());
        equal_sizes = equal_sizes && b.size() == sys.blocks[0].size();
      }
      bool const partition = covered.size() == G.degree() && equal_sizes &&
                             sys.blocks.size() > 1 && sys.blocks[0].size() > 1;
      bool const index = sys.induced.order() * sys.kernel.order() == G.order();
      out.cases.push_back({with_p(name, p),
                           partition && index && sys.induced_primitive && r.implication_holds,
                           std::to_string(sys.blocks.size()) + " blocks of size " +
                               std::to_string(sys.blocks[0].size()) +
                               (r.group_concealed ? ", concealed" : ", not concealed")});
    }
  }
}

void regular_partitions(SuiteResult &out, SuiteOptions const &)
{
  for (unsigned n = 2; n <= 6; ++n) {
    auto const S = groups::sym(n);
    for (auto p : prime_divisors(S.order_u64())) {
      auto const P = sylow(S, p);
      std::size_t total = 0, ok = 0;
      for (auto const &Q : all_subgroups(P)) {
        ++total;
        std::vector<unsigned> ks = p == 2 ? std::vector<unsigned>{3, 4} : std::vector<unsigned>{2};
        bool good = true;
        for (auto k : ks) {
          auto const part = regular_orbit_on_partitions(Q, k);
          good = good && part && is_regular_partition(Q, *part);
        }
        ok += good;
      }
      out.cases.push_back({"subgroups of a Sylow " + std::to_string(p) + " of S" +
                               std::to_string(n),
                           ok == total, std::to_string(ok) + " of " + std::to_string(total)});
    }
  }
  auto const d8 = groups::dihedral(8);
  out.cases.push_back({"D8 on 4 points, two parts", !regular_orbit_on_partitions(d8, 2),
                       "no regular orbit on the power set"});
}

// --- solvable groups --------------------------------------------------------

void solvable_witness(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  for (auto const &[name, G] : cat.up_to(2000)) {
    if (!is_solvable(G))
      continue;
    auto const table = character_table(G);
    for (auto p : prime_divisors(G.order_u64())) {
      auto const r = check_minimal_heights(name, table, p);
      if (!r.hypothesis_holds)
        continue;
      auto const blocks = block_distribution(table, p);
      auto principal = blocks.principal();
      auto quotient = characters_with_kernel_containing(table, p_prime_core(G, p));
      std::sort(principal.begin(), principal.end());
      std::sort(quotient.begin(), quotient.end());
      bool const same = principal == quotient;
      out.cases.push_back({with_p(name, p),
                           r.theorem_holds == true && r.witness_in_p_prime_quotient == true && same,
                           "witness degree " + std::to_string(r.witness_degree.value_or(0)) +
                               (same ? "" : ", principal block differs from Irr(G/O_p')")});
    }
  }
}

struct SplitFixture
{
  std::string name;
  PermGroup G, H, N;
};

std::vector<SplitFixture> split_fixtures()
{
  auto const P = [](std::size_t n, std::vector<std::vector<Point>> const &c) {
    return Perm::from_cycles(n, c);
  };
  auto const group = [](std::size_t n, std::vector<Perm> gens) { return PermGroup(n, gens); };
  std::vector<SplitFixture> out;

  out.push_back({"S4 = V4:S3", groups::sym(4), group(4, {P(4, {{0, 1}}), P(4, {{0, 1, 2}})}),
                 group(4, {P(4, {{0, 1}, {2, 3}}), P(4, {{0, 2}, {1, 3}})})});
  {
    std::vector<Point> c(12);
    for (unsigned i = 0; i < 12; ++i)
      c[i] = static_cast<Point>((i + 1) % 12);
    Perm const g(c);
    out.push_back({"C12 = C3 x C4", group(12, {g}), group(12, {g.pow(3)}), group(12, {g.pow(4)})});
  }
  {
    auto const t = P(5, {{0, 1}}), r = P(5, {{0, 1, 2}}), z = P(5, {{3, 4}});
    out.push_back({"S3 x C2", group(5, {t, r, z}), group(5, {t, r}), group(5, {z})});
  }
  {
    auto const a = P(7, {{0, 1, 2}}), b = P(7, {{0, 1}, {2, 3}}), z = P(7, {{4, 5, 6}});
    out.push_back({"A4 x C3", group(7, {a, b, z}), group(7, {a, b}), group(7, {z})});
  }
  {
    auto const r = P(4, {{0, 1, 2, 3}}), s = P(4, {{1, 3}});
    out.push_back({"D8 = C4:C2", group(4, {r, s}), group(4, {s}), group(4, {r})});
  }
  {
    auto const t = P(7, {{0, 1, 2, 3, 4, 5, 6}}), m = P(7, {{1, 3, 2, 6, 4, 5}});
    out.push_back({"AGL1(7) = C7:C6", group(7, {t, m}), group(7, {m}), group(7, {t})});
  }
  {
    auto const c = P(7, {{0, 1, 2}}), q = P(7, {{1, 2}, {3, 4, 5, 6}});
    out.push_back({"C3:C4", group(7, {c, q}), group(7, {q}), group(7, {c})});
  }
  return out;
}

void linear_extensions(SuiteResult &out, SuiteOptions const &)
{
  for (auto const &f : split_fixtures()) {
    auto const tG = character_table(f.G);
    auto const tN = character_table(f.N);
    auto const &cN = tN.classes();
    bool const split = is_normal(f.G, f.N) && f.H.order() * f.N.order() == f.G.order() &&
                       f.H.is_subgroup_of(f.G) && f.N.is_subgroup_of(f.G);
    auto const hs = f.H.elements();
    auto const gs = f.G.elements();
    auto const &chain = f.G.bsgs();

    std::size_t invariant = 0, extended = 0;
    for (std::size_t row = 0; row < tN.size(); ++row) {
      if (tN.degree(row) != 1)
        continue;
      bool inv = true;
      for (auto const &g : f.G.generators())
        for (std::size_t k = 0; k < cN.size() && inv; ++k)
          inv = tN.value(row, cN.class_of(cN.representatives()[k].conjugate(g))) ==
                tN.value(row, k);
      if (!inv)
        continue;
      ++invariant;

      // lambda~(hn) = lambda(n)
      std::vector<Cyclotomic> ext(gs.size());
      for (auto const &x : gs) {
        for (auto const &h : hs) {
          auto const n = h.inverse() * x;
          if (f.N.contains(n)) {
            ext[chain.rank(x)] = tN.value(row, cN.class_of(n));
            break;
          }
        }
      }
      bool hom = true;
      for (std::size_t i = 0; i < gs.size() && hom; ++i)
        for (std::size_t j = 0; j < gs.size() && hom; ++j)
          hom = ext[chain.rank(gs[i] * gs[j])] == ext[chain.rank(gs[i])] * ext[chain.rank(gs[j])];
      bool in_table = false;
      for (std::size_t r = 0; r < tG.size() && !in_table; ++r) {
        bool same = tG.degree(r) == 1;
        for (std::size_t k = 0; k < tG.classes().size() && same; ++k)
          same = tG.value(r, k) == ext[chain.rank(tG.classes().representatives()[k])];
        in_table = same;
      }
      extended += hom && in_table;
    }
    out.cases.push_back({f.name, split && invariant > 0 && extended == invariant,
                         std::to_string(invariant) + " invariant linear characters, " +
                             std::to_string(extended) + " extended"});
  }
}

// --- almost simple groups ---------------------------------------------------

void sylow_intersections(SuiteResult &out, SuiteOptions const &)
{
  std::vector<std::pair<std::string, unsigned>> instances;
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u})
    instances.emplace_back("psl2_" + std::to_string(q), q);
  for (unsigned q : {4u, 5u, 7u, 8u, 9u})
    instances.emplace_back("sl2_" + std::to_string(q), q);

  for (auto const &[name, q] : instances) {
    auto const S = name.starts_with("psl") ? groups::psl2(q) : groups::sl2(q);
    auto const p = prime_divisors(q).front();
    auto const R = sylow(S, p);
    auto const &chain = S.bsgs();
    auto const rs = R.elements();
    auto const gs = S.elements();

    std::set<std::vector<std::uint64_t>> conjugates;
    for (auto const &g : gs) {
      std::vector<std::uint64_t> ranks;
      for (auto const &r : rs)
        ranks.push_back(chain.rank(r.conjugate(g)));
      std::sort(ranks.begin(), ranks.end());
      conjugates.insert(std::move(ranks));
    }
    bool trivial_intersections = true;
    for (auto a = conjugates.begin(); a != conjugates.end(); ++a)
      for (auto b = std::next(a); b != conjugates.end(); ++b) {
        std::vector<std::uint64_t> common;
        std::set_intersection(a->begin(), a->end(), b->begin(), b->end(),
                              std::back_inserter(common));
        trivial_intersections = trivial_intersections && common.size() == 1;
      }

    auto const N = normalizer(S, R);
    std::size_t outside = 0, generating = 0;
    for (auto const &g : gs) {
      if (N.contains(g))
        continue;
      ++outside;
      generating += R.extended_by({g}).order() == S.order();
    }
    out.cases.push_back({with_p(name, p), trivial_intersections && outside == generating,
                         std::to_string(conjugates.size()) + " Sylow subgroups, " +
                             std::to_string(generating) + " of " + std::to_string(outside) +
                             " elements outside N(R) generate"});
  }
}

void hook_partitions(SuiteResult &out, SuiteOptions const &)
{
  for (unsigned p : {3u, 5u, 7u}) {
    for (unsigned n = p; n < p * p; ++n) {
      if (n <= 4 || (n == 6 && p == 3))
        continue;
      auto const lambda = partition_with_p_part_p(n, p);
      auto const d = lambda.hook_degree();
      bool ok = p_valuation(d, p) == 1;
      std::string detail = lambda.to_string() + " degree " + d.get_str();
      if (n <= 8) {
        ChartabLimits const limits{20160, ChartabLimits{}.max_classes};
        auto const t = character_table(groups::alt(n), limits);
        auto const target = to_u64(d);
        bool const split = lambda == lambda.conjugate();
        bool const present = std::count(t.degrees().begin(), t.degrees().end(),
                                        split ? target / 2 : target) > 0;
        ok = ok && present;
        detail += present ? ", in the table of A_n" : ", missing from the table of A_n";
      }
      out.cases.push_back({"n=" + std::to_string(n) + " p=" + std::to_string(p), ok, detail});
    }
  }
}

void concealed_characters(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  std::vector<std::pair<char const *, std::uint64_t>> const rows = {
      {"alt5", 3}, {"alt8", 3}, {"agammal1_8", 3}, {"agl3_2", 3}, {"dihedral10", 2}, {"sym3", 2},
  };
  for (auto const &[name, p] : rows) {
    auto const H = cat.get(name);
    bool const hypothesis = is_primitive(H) && H.order() % p == 0 && is_abelian_sylow(H, p) &&
                            p_residual(H, p).order() == H.order() && is_p_concealed(H, p).holds;
    auto const t = character_table(H, ChartabLimits{20160, ChartabLimits{}.max_classes});
    bool const found = has_degree_with_p_part(t, p, p);
    out.cases.push_back({with_p(name, p), hypothesis && found,
                         hypothesis ? "hypothesis holds" : "hypothesis fails"});
  }
}

// --- blocks -----------------------------------------------------------------

void block_fixtures(SuiteResult &out, SuiteOptions const &)
{
  auto const s3 = character_table(groups::sym(3));
  auto const b2 = block_distribution(s3, 2);
  bool degree_two_alone = false;
  for (std::size_t b = 0; b < b2.count(); ++b)
    if (b2.blocks[b].size() == 1 && s3.degree(b2.blocks[b][0]) == 2 && b2.defect[b] == 0)
      degree_two_alone = true;
  out.cases.push_back({"sym3/p2", b2.count() == 2 && degree_two_alone,
                       std::to_string(b2.count()) + " blocks"});
  auto const b3 = block_distribution(s3, 3);
  out.cases.push_back({"sym3/p3", b3.count() == 1, std::to_string(b3.count()) + " blocks"});
  auto const s4 = block_distribution(character_table(groups::sym(4)), 2);
  out.cases.push_back({"sym4/p2", s4.count() == 1, std::to_string(s4.count()) + " blocks"});
}

void principal_cover(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  for (auto const &[name, G] : cat.up_to(1500)) {
    auto const tG = character_table(G);
    for (auto const &N : normal_subgroups(G)) {
      if (N.is_trivial() || N.order() == G.order())
        continue;
      auto const tN = character_table(N);
      for (auto p : prime_divisors(N.order_u64())) {
        auto const r = principal_cover_check(tG, tN, p);
        if (!r.hypothesis)
          continue;
        out.cases.push_back({with_p(name + " over N of order " + N.order().get_str(), p),
                             r.implication_holds && r.unique_principal_cover &&
                                 r.quotient_in_principal,
                             std::to_string(r.covering_principal.size()) +
                                 " block(s) cover B0(N)"});
      }
    }
  }
}

void constrained_blocks(SuiteResult &out, SuiteOptions const &)
{
  Catalog const cat;
  for (auto const &[name, G] : cat.up_to(2000)) {
    auto const t = character_table(G);
    for (auto p : prime_divisors(G.order_u64())) {
      auto const r = is_p_constrained_single_block(t, p);
      if (!r.hypothesis)
        continue;
      out.cases.push_back({with_p(name, p), r.single_block == true,
                           std::to_string(r.block_count) + " block(s)"});
    }
  }
}

std::map<std::string, Suite> const &registry()
{
  static std::map<std::string, Suite> const suites = {
      {"exceptional_modules", exceptional_modules},
      {"concealed_groups", concealed_groups},
      {"imprimitive_modules", imprimitive_modules},
      {"block_quotients", block_quotients},
      {"regular_partitions", regular_partitions},
      {"solvable_witness", solvable_witness},
      {"linear_extensions", linear_extensions},
      {"abelian_regular_orbits", abelian_regular_orbits},
      {"sylow_intersections", sylow_intersections},
      {"hook_partitions", hook_partitions},
      {"concealed_characters", concealed_characters},
      {"principal_cover", principal_cover},
      {"constrained_blocks", constrained_blocks},
      {"blocks", block_fixtures},
  };
  return suites;
}

} // namespace

std::vector<std::string> const &suite_names()
{
  static std::vector<std::string> const names = {
      "exceptional_modules",
      "concealed_groups",
      "imprimitive_modules",
      "block_quotients",
      "regular_partitions",
      "solvable_witness",
      "linear_extensions",
      "abelian_regular_orbits",
      "sylow_intersections",
      "hook_partitions",
      "concealed_characters",
      "principal_cover",
      "constrained_blocks",
      "blocks",
  };
  return names;
}

SuiteResult run_suite(std::string const &name, SuiteOptions const &options)
{
  auto const it = registry().find(name);
  if (it == registry().end())
    throw InvalidArgument("unknown suite '" + name + "'");
  SuiteResult result{name, {}};
  it->second(result, options);
  if (result.cases.empty())
    result.cases.push_back({"no applicable instances", false, ""});
  return result;
}

bool concealed_by_classification(PermGroup const &H, std::uint64_t p)
{
  auto const n = H.degree();
  auto const order = H.order();
  mpz_class half_factorial = factorial(static_cast<unsigned>(n));
  half_factorial /= 2;
  if (order >= half_factorial && !(n == 3 && p == 2 && order == 3)) {
    // n + 1 = a p^s with s >= 1, 1 <= a < p, (a,s) != (1,1)
    auto m = n + 1;
    unsigned s = 0;
    while (m % p == 0) {
      m /= p;
      ++s;
    }
    if (s >= 1 && m < p && !(m == 1 && s == 1))
      return true;
  }
  if (n == 8 && p == 3) {
    if (order == 1344)
      return true;
    if (order == 168 && p_core(H, 2).order() == 8)
      return true;
  }
  return n == 5 && p == 2 && order == 10;
}

} // namespace mh
