// Regenerates the shipped group files in fixtures/.
//
//   make_fixtures OUTDIR
//
// M23 acts on F_2[x]/(g) with g generating the cyclic binary Golay code.
// M11 acts on a 5-dimensional section of a monomial module over F_3, and
// PSL2(11) is found inside it by search. SL2(5) is found inside SL2(9)
// written over F_3. Every file carries `order` and `orbits` lines that the loader
// checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mh/catalog.hpp"
#include "mh/group_io.hpp"
#include "mh/group_structure.hpp"
#include "mh/mat_group.hpp"
#include "mh/numtheory.hpp"

using namespace mh;

namespace {

using Poly = std::vector<unsigned>;   // coefficient i of x^i

Poly poly_mod(Poly a, Poly const &g, unsigned p)
{
  auto const d = g.size() - 1;
  while (a.size() > d) {
    auto const lead = a.back();
    if (lead != 0) {
      auto const shift = a.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i)
        a[shift + i] = (a[shift + i] + (p - lead) * g[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

Poly monomial(std::size_t k)
{
  Poly m(k + 1, 0);
  m[k] = 1;
  return m;
}

bool divides(Poly const &g, std::size_t n, unsigned p)
{
  auto f = monomial(n);
  f[0] = (f[0] + p - 1) % p;
  auto const r = poly_mod(f, g, p);
  return std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; });
}

/// Matrix of a point permutation on F_p^n / (multiples of g), basis x^0..x^{d-1}.
FpMatrix quotient_matrix(Perm const &pi, Poly const &g, unsigned p)
{
  auto const d = static_cast<unsigned>(g.size() - 1);
  std::vector<std::vector<unsigned>> rows;
  for (unsigned j = 0; j < d; ++j) {
    auto r = poly_mod(monomial(pi[j]), g, p);
    r.resize(d, 0);
    rows.push_back(r);
  }
  return FpMatrix(p, rows);
}

bool code_invariant(Perm const &pi, Poly const &g, unsigned p)
{
  auto const n = pi.degree();
  auto const d = g.size() - 1;
  for (std::size_t i = 0; i + d < n; ++i) {
    // x^i g(x) permuted
    Poly v(n, 0);
    for (std::size_t t = 0; t <= d; ++t)
      v[pi[i + t]] = g[t];
    auto const r = poly_mod(v, g, p);
    if (!std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; }))
      return false;
  }
  return true;
}

/// Monic degree-d divisor of x^n - 1 whose cyclic code the group preserves.
Poly invariant_code(PermGroup const &G, unsigned d, unsigned p)
{
  auto const n = G.degree();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i)
    count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly g(d + 1, 0);
    g[d] = 1;
    for (unsigned i = 0, x = static_cast<unsigned>(c); i < d; ++i, x /= p)
      g[i] = x % p;
    if (g[0] == 0 || !divides(g, n, p))
      continue;
    bool ok = true;
    for (auto const &gen : G.generators())
      ok = ok && code_invariant(gen, g, p);
    if (ok)
      return g;
  }
  throw std::runtime_error("no invariant cyclic code");
}

MatGroup quotient_group(PermGroup const &G, Poly const &g, unsigned p)
{
  std::vector<FpMatrix> gens;
  for (auto const &x : G.generators())
    gens.push_back(quotient_matrix(x, g, p));
  return MatGroup(static_cast<unsigned>(g.size() - 1), p, gens);
}

FpMatrix matrix_from_vector_perm(Perm const &x, unsigned dim, unsigned p)
{
  std::vector<std::vector<unsigned>> rows;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < dim; ++i, e *= p)
    rows.push_back(decode_vector(x[e], dim, p));
  return FpMatrix(p, rows);
}

// Subspace of F_p^n in reduced row echelon form.
struct Subspace
{
  unsigned n, p;
  std::vector<std::vector<unsigned>> rows;
  std::vector<unsigned> pivots;

  std::vector<unsigned> reduce(std::vector<unsigned> v) const
  {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto const c = v[pivots[r]];
      if (c != 0)
        for (unsigned j = 0; j < n; ++j)
          v[j] = (v[j] + (p - c) * rows[r][j]) % p;
    }
    return v;
  }

  bool add(std::vector<unsigned> v)
  {
    v = reduce(std::move(v));
    auto const it = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
    if (it == v.end())
      return false;
    auto const piv = static_cast<unsigned>(it - v.begin());
    auto const inv = static_cast<unsigned>(powmod(v[piv], p - 2, p));
    for (auto &c : v)
      c = c * inv % p;
    for (auto &row : rows)
      if (auto const c = row[piv]; c != 0)
        for (unsigned j = 0; j < n; ++j)
          row[j] = (row[j] + (p - c) * v[j]) % p;
    auto const pos = std::lower_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
    pivots.insert(pivots.begin() + pos, piv);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
  }
};

std::vector<unsigned> times(std::vector<unsigned> const &v, FpMatrix const &A)
{
  std::vector<unsigned> out(A.dim(), 0);
  for (unsigned i = 0; i < A.dim(); ++i)
    if (v[i] != 0)
      for (unsigned j = 0; j < A.dim(); ++j)
        out[j] = (out[j] + v[i] * A.at(i, j)) % A.prime();
  return out;
}

Subspace spin(std::vector<unsigned> const &v, std::vector<FpMatrix> const &gens)
{
  Subspace S{gens[0].dim(), gens[0].prime(), {}, {}};
  S.add(v);
  std::vector<std::vector<unsigned>> queue{v};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &A : gens) {
      auto w = times(queue[i], A);
      if (S.add(w))
        queue.push_back(std::move(w));
    }
  return S;
}

/// Action of A on an invariant subspace, in the basis of its echelon rows.
FpMatrix on_subspace(Subspace const &S, FpMatrix const &A)
{
  std::vector<std::vector<unsigned>> rows;
  for (auto const &b : S.rows) {
    auto const w = times(b, A);
    std::vector<unsigned> coords;
    for (auto piv : S.pivots)
      coords.push_back(w[piv]);
    rows.push_back(coords);
  }
  return FpMatrix(S.p, rows);
}

/// Action of A on V/S in the basis of standard vectors off the pivots.
FpMatrix on_quotient(Subspace const &S, FpMatrix const &A)
{
  std::vector<unsigned> free;
  for (unsigned j = 0; j < S.n; ++j)
    if (!std::binary_search(S.pivots.begin(), S.pivots.end(), j))
      free.push_back(j);
  std::vector<std::vector<unsigned>> rows;
  for (auto j : free) {
    std::vector<unsigned> e(S.n, 0);
    e[j] = 1;
    auto const w = S.reduce(times(e, A));
    std::vector<unsigned> coords;
    for (auto f : free)
      coords.push_back(w[f]);
    rows.push_back(coords);
  }
  return FpMatrix(S.p, rows);
}

/// Monomial representation of G induced from a linear character of order 2
/// of H0, with kernel H: basis vectors are the cosets of H0, and an element
/// sends a basis vector to minus another one when it lands on the second
/// coset of H inside that coset of H0.
class SignedCosetAction
{
public:
  SignedCosetAction(PermGroup const &G, PermGroup const &H, Perm const &sigma) : G_(G)
  {
    auto const hs = H.elements();
    auto const &chain = G.bsgs();
    coset_of_.assign(G.order_u64(), UINT32_MAX);
    std::vector<Perm> reps;
    auto const add = [&](Perm const &base) {
      auto const id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(base);
      for (auto const &h : hs)
        coset_of_[chain.rank(h * base)] = id;
    };
    G.for_each_element([&](std::uint64_t r, Perm const &g) {
      if (coset_of_[r] != UINT32_MAX)
        return;
      add(g);
      add(sigma * g);
    });
    reps_ = std::move(reps);
  }

  unsigned dim() const { return static_cast<unsigned>(reps_.size() / 2); }

  FpMatrix matrix(Perm const &x) const
  {
    std::vector<std::vector<unsigned>> rows(dim(), std::vector<unsigned>(dim(), 0));
    for (unsigned i = 0; i < dim(); ++i) {
      auto const c = coset_of_[G_.bsgs().rank(reps_[2 * i] * x)];
      rows[i][c / 2] = c % 2 == 0 ? 1 : 2;
    }
    return FpMatrix(3, rows);
  }

private:
  PermGroup G_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Perm> reps_;
};

bool has_orbits(MatGroup const &M, std::vector<std::uint64_t> const &want)
{
  std::vector<std::uint64_t> got;
  for (auto const &o : vector_orbits(M, SpaceLimits{4096}))
    got.push_back(o.size);
  std::sort(got.begin(), got.end());
  return got == want;
}

/// A section (submodule or quotient) of the module given by gens whose
/// orbit sizes are want. Returns the function mapping a big matrix to the
/// section's matrix.
std::function<FpMatrix(FpMatrix const &)> find_section(std::vector<FpMatrix> const &gens,
                                                       unsigned dim,
                                                       std::vector<std::uint64_t> const &want)
{
  auto const n = gens[0].dim();
  auto const p = gens[0].prime();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i)
    total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    auto const S = spin(decode_vector(code, n, p), gens);
    auto const k = static_cast<unsigned>(S.rows.size());
    if (k == dim) {
      std::vector<FpMatrix> section;
      for (auto const &A : gens)
        section.push_back(on_subspace(S, A));
      if (has_orbits(MatGroup(dim, p, section), want))
        return [S](FpMatrix const &A) { return on_subspace(S, A); };
    }
    if (n - k == dim) {
      std::vector<FpMatrix> section;
      for (auto const &A : gens)
        section.push_back(on_quotient(S, A));
      if (has_orbits(MatGroup(dim, p, section), want))
        return [S](FpMatrix const &A) { return on_quotient(S, A); };
    }
  }
  throw std::runtime_error("no section with the requested orbits");
}

// F_9 = F_3[i]/(i^2 + 1); the entry a0 + a1 i becomes the block [[a0,a1],[-a1,a0]].
FpMatrix over_f3(std::array<std::array<std::pair<unsigned, unsigned>, 2>, 2> const &m)
{
  std::vector<std::vector<unsigned>> rows(4, std::vector<unsigned>(4, 0));
  for (unsigned r = 0; r < 2; ++r)
    for (unsigned c = 0; c < 2; ++c) {
      auto const [a0, a1] = m[r][c];
      rows[2 * r][2 * c] = a0;
      rows[2 * r][2 * c + 1] = a1;
      rows[2 * r + 1][2 * c] = (3 - a1) % 3;
      rows[2 * r + 1][2 * c + 1] = a0;
    }
  return FpMatrix(3, rows);
}

std::string orbit_line(MatGroup const &M, SpaceLimits const &limits)
{
  std::string out;
  for (auto const &o : vector_orbits(M, limits))
    out += (out.empty() ? "" : ",") + std::to_string(o.size);
  return out;
}

void write(std::filesystem::path const &path, std::string const &header, std::string const &body)
{
  std::ofstream out(path);
  out << header << body;
  std::cout << "wrote " << path.string() << '\n';
}

void write_mat(std::filesystem::path const &dir, std::string const &name, std::string const &comment,
               MatGroup const &M, SpaceLimits const &limits = {4096})
{
  std::ostringstream os;
  os << comment << serialize_mat_group(M) << "order " << M.order(limits).get_str() << '\n'
     << "orbits " << orbit_line(M, limits) << '\n';
  write(dir / (name + ".mgrp"), "", os.str());
}

void write_perm(std::filesystem::path const &dir, std::string const &name,
                std::string const &comment, PermGroup const &G)
{
  write(dir / (name + ".pgrp"), comment,
        serialize_perm_group(G) + "order " + G.order().get_str() + "\n");
}

std::optional<PermGroup> find_subgroup(PermGroup const &G, Perm const &x, std::uint64_t order,
                                       std::function<bool(PermGroup const &)> const &accept)
{
  std::optional<PermGroup> found;
  G.for_each_element([&](std::uint64_t, Perm const &y) {
    if (found)
      return;
    PermGroup H(G.degree(), {x, y});
    if (H.order() == order && accept(H))
      found = H;
  });
  return found;
}

Perm first_of_order(PermGroup const &G, std::uint64_t order)
{
  std::optional<Perm> out;
  G.for_each_element([&](std::uint64_t, Perm const &g) {
    if (!out && g.order() == order)
      out = g;
  });
  return *out;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc != 2) {
    std::cerr << "usage: make_fixtures OUTDIR\n";
    return 2;
  }
  std::filesystem::path const dir = argv[1];
  std::filesystem::create_directories(dir);

  // M11 and PSL2(11): 5-dimensional section of the monomial module induced
  // from the sign character of M10 (kernel A6)
  auto const m11 = groups::mathieu11();
  auto const m10 = filter_subgroup(m11, [](Perm const &g) { return g[0] == 0; });
  auto const a6 = derived_subgroup(m10);
  std::optional<Perm> odd;
  m10.for_each_element([&](std::uint64_t, Perm const &g) {
    if (!odd && !a6.contains(g))
      odd = g;
  });
  SignedCosetAction const induced(m11, a6, *odd);
  std::vector<FpMatrix> big;
  for (auto const &g : m11.generators())
    big.push_back(induced.matrix(g));
  auto const section = find_section(big, 5, {1, 22, 220});
  auto const represent = [&](PermGroup const &H) {
    std::vector<FpMatrix> gens;
    for (auto const &g : H.generators())
      gens.push_back(section(induced.matrix(g)));
    return MatGroup(5, 3, gens);
  };
  write_mat(dir, "m11_gl5_3", "# M11, from the sign character of M10 induced to M11 over F_3\n",
            represent(m11));

  auto const eleven = m11.generators()[0];
  auto const psl = find_subgroup(m11, eleven, 660, [](PermGroup const &) { return true; });
  auto with_minus_one = represent(*psl).generators();
  with_minus_one.push_back(FpMatrix(3, {{2, 0, 0, 0, 0},
                                        {0, 2, 0, 0, 0},
                                        {0, 0, 2, 0, 0},
                                        {0, 0, 0, 2, 0},
                                        {0, 0, 0, 0, 2}}));
  write_mat(dir, "psl2_11_gl5_3", "# PSL2(11) from the M11 module above, times the scalar -1\n",
            MatGroup(5, 3, with_minus_one));

  // SL2(9) as 4x4 matrices over F_3, then an SL2(5) with orbits 1,40,40
  using E = std::pair<unsigned, unsigned>;
  MatGroup const sl29(4, 3,
                      {over_f3({{{E{1, 0}, E{1, 0}}, {E{0, 0}, E{1, 0}}}}),
                       over_f3({{{E{1, 0}, E{0, 0}}, {E{1, 0}, E{1, 0}}}}),
                       over_f3({{{E{1, 1}, E{0, 0}}, {E{0, 0}, E{2, 1}}}})});
  auto const sl29_perm = sl29.as_perm_group();
  if (sl29_perm.order() != 720)
    throw std::logic_error("SL2(9) has the wrong order");
  auto const five = first_of_order(sl29_perm, 5);
  auto const sl25 = find_subgroup(sl29_perm, five, 120, [](PermGroup const &H) {
    std::vector<std::size_t> sizes;
    for (auto const &o : orbits(H))
      sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes == std::vector<std::size_t>{1, 40, 40};
  });
  std::vector<FpMatrix> sl25_gens;
  for (auto const &x : sl25->generators())
    sl25_gens.push_back(matrix_from_vector_perm(x, 4, 3));
  write_mat(dir, "sl2_5_gl4_3", "# SL2(5) inside SL2(9) < GL_4(3), F_9 = F_3[i]/(i^2+1)\n",
            MatGroup(4, 3, sl25_gens));

  // M23 on F_2^23 modulo the binary Golay code; 2048 vectors
  PermGroup const m23(23, {Perm::from_cycles(23, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                                   13, 14, 15, 16, 17, 18, 19, 20, 21, 22}}),
                           Perm::from_cycles(23, {{2, 16, 9, 6, 8},
                                                  {3, 12, 13, 18, 4},
                                                  {7, 17, 10, 11, 22},
                                                  {14, 19, 21, 20, 15}})});
  if (m23.order() != 10200960)
    throw std::logic_error("M23 has the wrong order");
  auto const g2 = invariant_code(m23, 11, 2);
  write_mat(dir, "m23_gl11_2", "# M23 on F_2^23 modulo the binary Golay code\n",
            quotient_group(m23, g2, 2), SpaceLimits{2048});

  // imprimitive linear groups with coordinate block decompositions
  write_mat(dir, "gl1_3_wr_s2_gl2_3", "# GL1(3) wr S2 on F_3 + F_3\n",
            MatGroup(2, 3, {FpMatrix(3, {{2, 0}, {0, 1}}), FpMatrix(3, {{0, 1}, {1, 0}})}));
  auto const block_perm = [](std::vector<unsigned> const &images) {
    std::vector<std::vector<unsigned>> rows(6, std::vector<unsigned>(6, 0));
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned i = 0; i < 2; ++i)
        rows[2 * b + i][2 * images[b] + i] = 1;
    return FpMatrix(2, rows);
  };
  auto const in_first_block = [](std::vector<std::vector<unsigned>> const &a) {
    std::vector<std::vector<unsigned>> rows(6, std::vector<unsigned>(6, 0));
    for (unsigned i = 0; i < 6; ++i)
      rows[i][i] = 1;
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j)
        rows[i][j] = a[i][j];
    return FpMatrix(2, rows);
  };
  write_mat(dir, "gl2_2_wr_s3_gl6_2", "# GL2(2) wr S3 on F_2^2 + F_2^2 + F_2^2\n",
            MatGroup(6, 2,
                     {in_first_block({{1, 1}, {0, 1}}), in_first_block({{0, 1}, {1, 1}}),
                      block_perm({1, 0, 2}), block_perm({1, 2, 0})}));
  write_mat(dir, "gl2_3", "# GL2(3), transitive on nonzero vectors\n", groups::gl_mat(2, 3));
  write_mat(dir, "transvection_gl2_3", "# one transvection in GL2(3)\n",
            MatGroup(2, 3, {FpMatrix(3, {{1, 1}, {0, 1}})}));

  write_perm(dir, "d10", "# D10 on 5 points\n", groups::dihedral(10));
  write_perm(dir, "sym5", "# Sym(5) natural action\n", groups::sym(5));
  write_perm(dir, "sym4", "", groups::sym(4));
  write_perm(dir, "alt5", "", groups::alt(5));
  write_perm(dir, "agl3_2", "# AGL3(2) on the 8 vectors of F_2^3\n", groups::agl(3, 2));
  write_perm(dir, "agammal1_8", "# x -> ax^s + b on F_8\n", groups::agammal1(8));
  write_perm(dir, "psl2_7", "# PSL2(7) on the projective line\n", groups::psl2(7));
  write_perm(dir, "sl2_3", "# SL2(3) on the 8 nonzero vectors of F_3^2\n", groups::sl2(3));
  write_perm(dir, "mathieu11", "", m11);
  return 0;
}
