#include "mh/catalog.hpp"

#include <algorithm>
#include <cstdlib>

#include "mh/errors.hpp"
#include "mh/group_io.hpp"

#ifndef MH_DEFAULT_FIXTURE_DIR
#define MH_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace mh {

bool CatalogEntry::has_tag(std::string const &t) const
{
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

PermGroup build_validated(CatalogEntry const &entry)
{
  auto G = entry.build();
  if (entry.expected_order && G.order() != *entry.expected_order)
    throw Error(entry.name + ": order " + G.order().get_str() + " differs from expected " +
                std::to_string(*entry.expected_order));
  return G;
}

std::filesystem::path fixture_dir()
{
  if (char const *env = std::getenv("MH_FIXTURE_DIR"); env && *env)
    return env;
  return MH_DEFAULT_FIXTURE_DIR;
}

std::vector<CatalogEntry> builtin_catalog()
{
  using namespace groups;
  using ET = ExtraspecialType;
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::function<PermGroup()> f, std::uint64_t order,
                 std::vector<std::string> tags = {}) {
    c.push_back({std::move(name), std::move(f), order, std::move(tags)});
  };

  for (unsigned n = 3; n <= 8; ++n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i)
      f *= i;
    add("sym" + std::to_string(n), [n] { return sym(n); }, f);
    if (n >= 4)
      add("alt" + std::to_string(n), [n] { return alt(n); }, f / 2);
  }

  add("cyclic2", [] { return cyclic(2); }, 2);
  add("cyclic6", [] { return cyclic(6); }, 6);
  add("cyclic12", [] { return cyclic(12); }, 12);
  add("elementary_abelian_2_2", [] { return elementary_abelian(2, 2); }, 4);
  add("elementary_abelian_2_3", [] { return elementary_abelian(2, 3); }, 8);
  add("elementary_abelian_3_2", [] { return elementary_abelian(3, 2); }, 9);

  for (unsigned n : {8u, 10u, 12u, 16u, 18u})
    add("dihedral" + std::to_string(n), [n] { return dihedral(n); }, n);
  add("quaternion8", [] { return quaternion(8); }, 8);
  add("quaternion16", [] { return quaternion(16); }, 16);
  add("dicyclic12", [] { return dicyclic(12); }, 12);

  add("extraspecial_3_plus", [] { return extraspecial(3, ET::plus); }, 27, {"p-group"});
  add("extraspecial_3_minus", [] { return extraspecial(3, ET::minus); }, 27, {"p-group"});
  add("extraspecial_5_plus", [] { return extraspecial(5, ET::plus); }, 125, {"p-group"});
  add("extraspecial_5_minus", [] { return extraspecial(5, ET::minus); }, 125, {"p-group"});

  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u})
    add("sl2_" + std::to_string(q), [q] { return sl2(q); }, std::uint64_t{q} * (q * q - 1));
  for (unsigned q : {7u, 8u, 11u, 13u})
    add("psl2_" + std::to_string(q), [q] { return psl2(q); },
        std::uint64_t{q} * (q * q - 1) / (q % 2 == 0 ? 1 : 2));
  add("gl2_3", [] { return gl_mat(2, 3).as_perm_group(); }, 48);

  add("agl1_5", [] { return agl1(5); }, 20);
  add("agl1_7", [] { return agl1(7); }, 42);
  add("agl1_8", [] { return agl1(8); }, 56);
  add("agl1_9", [] { return agl1(9); }, 72);
  add("agammal1_8", [] { return agammal1(8); }, 168);
  add("agl2_3", [] { return agl(2, 3); }, 432);
  add("asl2_3", [] { return asl(2, 3); }, 216);
  add("agl3_2", [] { return agl(3, 2); }, 1344);
  add("frobenius21", [] {
        return PermGroup(7, {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                             Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}})});
      },
      21);

  add("c2_wr_c3", [] { return wreath(cyclic(2), cyclic(3)); }, 24);
  add("c3_wr_c2", [] { return wreath(cyclic(3), cyclic(2)); }, 18);
  add("s3_wr_c2", [] { return wreath(sym(3), cyclic(2)); }, 72);
  add("c2_wr_s3", [] { return wreath(cyclic(2), sym(3)); }, 48);
  add("c3_wr_c3", [] { return wreath(cyclic(3), cyclic(3)); }, 81, {"p-group"});
  add("c2_wr_d10", [] { return wreath(cyclic(2), dihedral(10)); }, 320);
  add("s4_wr_c2", [] { return wreath(sym(4), cyclic(2)); }, 1152);

  add("d8_x_c3", [] { return direct_product(dihedral(8), cyclic(3)); }, 24);
  add("q8_x_c3", [] { return direct_product(quaternion(8), cyclic(3)); }, 24);
  add("s4_x_c2", [] { return direct_product(sym(4), cyclic(2)); }, 48);
  add("a4_x_c3", [] { return direct_product(alt(4), cyclic(3)); }, 36);
  add("s3_x_c2", [] { return direct_product(sym(3), cyclic(2)); }, 12);
  add("s3_x_s3", [] { return direct_product(sym(3), sym(3)); }, 36);
  add("a5_x_c2", [] { return direct_product(alt(5), cyclic(2)); }, 120);

  add("mathieu11", [] { return mathieu11(); }, 7920);

  std::sort(c.begin(), c.end(),
            [](CatalogEntry const &a, CatalogEntry const &b) { return a.name < b.name; });
  return c;
}

std::vector<CatalogEntry> directory_catalog(std::filesystem::path const &dir)
{
  if (!std::filesystem::is_directory(dir))
    throw InvalidArgument("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (auto const &e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".pgrp")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (auto const &f : files)
    out.push_back({f.stem().string(), [f] { return load_perm_group(f); }, std::nullopt, {"file"}});
  return out;
}

} // namespace mh
