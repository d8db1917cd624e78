#include "mh/char_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

using Row = std::vector<std::uint64_t>;

u64 addm(u64 a, u64 b, u64 l) { return (a + b) % l; }
u64 subm(u64 a, u64 b, u64 l) { return (a + l - b) % l; }

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row> &rows, u64 l)
{
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  auto const ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    auto const inv = invmod(rows[r][c], l);
    for (auto &x : rows[r])
      x = x * inv % l;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      auto const f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = subm(rows[i][j], f * rows[r][j] % l, l);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {c : A c = 0} for a square matrix A.
std::vector<Row> null_space(std::vector<Row> a, u64 l)
{
  auto const n = a.size();
  auto const pivots = rref(a, l);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    Row v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (l - a[r][f]) % l;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial (constant term first) via Hessenberg form.
Row charpoly(std::vector<Row> h, u64 l)
{
  auto const n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto &row : h)
        std::swap(row[i], row[m]);
    }
    auto const inv = invmod(h[m][m - 1], l);
    for (std::size_t r = m + 1; r < n; ++r) {
      auto const u = h[r][m - 1] * inv % l;
      if (u == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        h[r][j] = subm(h[r][j], u * h[m][j] % l, l);
      for (std::size_t j = 0; j < n; ++j)
        h[j][m] = addm(h[j][m], u * h[j][r] % l, l);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i=1}^{m-1} h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}
  // (1-based indices)
  std::vector<Row> p(n + 1);
  p[0] = Row{1};
  auto H = [&](std::size_t i, std::size_t j) { return h[i - 1][j - 1]; };
  for (std::size_t m = 1; m <= n; ++m) {
    Row next(m + 1, 0);
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      next[d + 1] = addm(next[d + 1], p[m - 1][d], l);
      next[d] = subm(next[d], H(m, m) * p[m - 1][d] % l, l);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * H(m - i + 1, m - i) % l;
      auto const c = H(m - i, m) * t % l;
      if (c == 0)
        continue;
      for (std::size_t d = 0; d < p[m - i - 1].size(); ++d)
        next[d] = subm(next[d], c * p[m - i - 1][d] % l, l);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(Row const &poly, u64 l)
{
  std::vector<u64> out;
  for (u64 x = 0; x < l; ++x) {
    u64 v = 0;
    for (std::size_t d = poly.size(); d-- > 0;)
      v = (v * x + poly[d]) % l;
    if (v == 0)
      out.push_back(x);
  }
  return out;
}

struct Subspace
{
  std::vector<Row> basis;            // RREF rows, each of length k
  std::vector<std::size_t> pivots;
};

/// Splits the common eigenspaces of the class matrices (column action) into
/// lines.
std::vector<Row> split_eigenspaces(ClassMultiplication const &a, u64 l)
{
  auto const k = a.size();
  std::vector<Subspace> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    Row v(k, 0);
    v[i] = 1;
    spaces[0].basis.push_back(std::move(v));
    spaces[0].pivots.push_back(i);
  }

  auto apply = [&](std::size_t i, Row const &v) {
    Row out(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      u64 s = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (v[c] != 0)
          s = (s + static_cast<u64>(a(i, j, c)) % l * v[c]) % l;
      out[j] = s;
    }
    return out;
  };

  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Subspace> next;
    for (auto &S : spaces) {
      auto const d = S.basis.size();
      if (d == 1) {
        next.push_back(std::move(S));
        continue;
      }
      // restricted matrix R with M_i b_s = sum_t R[t][s] b_t
      std::vector<Row> R(d, Row(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        auto const img = apply(i, S.basis[s]);
        for (std::size_t t = 0; t < d; ++t)
          R[t][s] = img[S.pivots[t]];
      }
      auto const eig = roots(charpoly(R, l), l);
      std::size_t total = 0;
      for (auto lambda : eig) {
        auto shifted = R;
        for (std::size_t t = 0; t < d; ++t)
          shifted[t][t] = subm(shifted[t][t], lambda, l);
        Subspace E;
        for (auto const &c : null_space(shifted, l)) {
          Row v(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (c[s] != 0)
              for (std::size_t j = 0; j < k; ++j)
                v[j] = (v[j] + c[s] * S.basis[s][j]) % l;
          E.basis.push_back(std::move(v));
        }
        E.pivots = rref(E.basis, l);
        total += E.basis.size();
        next.push_back(std::move(E));
      }
      if (total != d)
        throw std::logic_error("class matrices are not diagonalizable over the working prime");
    }
    spaces = std::move(next);
    if (spaces.size() == k)
      break;
  }
  if (spaces.size() != k)
    throw std::logic_error("eigenspaces of the class matrices did not split into lines");

  std::vector<Row> lines;
  for (auto &S : spaces) {
    if (S.basis[0][0] == 0)
      throw std::logic_error("central character vanishes on the identity class");
    lines.push_back(std::move(S.basis[0]));
  }
  return lines;
}

std::uint64_t ceil_sqrt(std::uint64_t n)
{
  auto s = isqrt(n);
  return s * s < n ? s + 1 : s;
}

} // namespace

std::vector<std::uint32_t> class_mult_column(ConjugacyClasses const &classes, Perm const &z)
{
  auto const k = classes.size();
  auto const &G = classes.group();
  auto const &b = G.bsgs();
  std::vector<std::uint32_t> out(k * k, 0);
  G.for_each_element([&](std::uint64_t r, Perm const &x) {
    auto const y = x.inverse() * z;
    out[classes.class_of_rank(r) * k + classes.class_of_rank(b.rank(y))]++;
  });
  return out;
}

ClassMultiplication class_mult_coefficients(ConjugacyClasses const &classes)
{
  auto const k = classes.size();
  auto const &G = classes.group();
  auto const &b = G.bsgs();
  auto const n = G.order_u64();
  std::vector<Perm> inverses;
  std::vector<std::uint32_t> cls;
  inverses.reserve(n);
  cls.reserve(n);
  G.for_each_element([&](std::uint64_t r, Perm const &x) {
    inverses.push_back(x.inverse());
    cls.push_back(static_cast<std::uint32_t>(classes.class_of_rank(r)));
  });
  ClassMultiplication a(k);
  for (std::size_t c = 0; c < k; ++c) {
    auto const &z = classes.representatives()[c];
    for (std::uint64_t r = 0; r < n; ++r) {
      a.at(cls[r], classes.class_of_rank(b.rank(inverses[r] * z)), c)++;
    }
  }
  return a;
}

CharacterTable character_table(PermGroup const &G, ChartabLimits const &limits)
{
  if (G.order() > limits.max_order)
    throw BoundExceeded("group order " + G.order().get_str() +
                        " exceeds the character table bound " +
                        std::to_string(limits.max_order));
  return character_table(ConjugacyClasses(G, Limits{limits.max_order}), limits);
}

CharacterTable character_table(ConjugacyClasses classes, ChartabLimits const &limits)
{
  auto const k = classes.size();
  if (k > limits.max_classes)
    throw BoundExceeded("class count " + std::to_string(k) + " exceeds the bound " +
                        std::to_string(limits.max_classes));
  auto const order = classes.group().order_u64();
  if (order > limits.max_order)
    throw BoundExceeded("group order exceeds the character table bound");
  auto const e = classes.exponent();
  auto const l = smallest_prime_congruent_one(e, 2 * ceil_sqrt(order));

  auto const a = class_mult_coefficients(classes);
  auto const lines = split_eigenspaces(a, l);

  // z generates the order-e subgroup of F_l^*
  auto const z = powmod(primitive_root(l), (l - 1) / e, l);

  // power maps: pm[j][t] = class of rep_j^t
  std::vector<std::vector<std::size_t>> pm(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto const o = classes.element_orders()[j];
    for (std::uint64_t t = 0; t < o; ++t)
      pm[j].push_back(classes.power_class(j, static_cast<std::int64_t>(t)));
  }

  struct Lifted
  {
    std::uint64_t degree;
    std::vector<std::vector<std::uint32_t>> spectra;
    bool trivial;
  };
  std::vector<Lifted> lifted;

  for (auto const &w : lines) {
    auto const norm = invmod(w[0], l);
    std::vector<u64> omega(k);
    for (std::size_t j = 0; j < k; ++j)
      omega[j] = w[j] * norm % l;

    // sum_j omega_j omega_j' / |K_j| = |G| / chi(1)^2
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = (s + omega[j] * omega[classes.inverse_class(j)] % l *
                 invmod(classes.sizes()[j] % l, l)) % l;
    if (s == 0)
      throw std::logic_error("degree equation degenerate modulo the working prime");
    auto const target = order % l * invmod(s, l) % l;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (d * d % l == target) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw std::logic_error("no character degree satisfies the degree equation");

    std::vector<u64> chi(k);
    for (std::size_t j = 0; j < k; ++j)
      chi[j] = omega[j] * (degree % l) % l * invmod(classes.sizes()[j] % l, l) % l;

    Lifted L{degree, {}, true};
    for (std::size_t j = 0; j < k; ++j) {
      auto const o = classes.element_orders()[j];
      auto const zo = powmod(z, e / o, l);
      auto const zo_inv = invmod(zo, l);
      auto const o_inv = invmod(o % l, l);
      std::vector<std::uint32_t> m(o);
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        // m_t = (1/o) sum_s chi(g^s) zo^(-s t)
        u64 acc = 0;
        auto const step = powmod(zo_inv, t, l);
        u64 f = 1;
        for (std::uint64_t s2 = 0; s2 < o; ++s2) {
          acc = (acc + chi[pm[j][s2]] * f) % l;
          f = f * step % l;
        }
        auto const mt = acc * o_inv % l;
        if (mt > degree)
          throw std::logic_error("eigenvalue multiplicity out of range while lifting");
        m[t] = static_cast<std::uint32_t>(mt);
        total += mt;
      }
      if (total != degree)
        throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      if (m[0] != degree)
        L.trivial = false;
      L.spectra.push_back(std::move(m));
    }
    lifted.push_back(std::move(L));
  }

  std::sort(lifted.begin(), lifted.end(), [](Lifted const &x, Lifted const &y) {
    if (x.trivial != y.trivial)
      return x.trivial;
    if (x.degree != y.degree)
      return x.degree < y.degree;
    return x.spectra < y.spectra;
  });

  CharacterTable T(std::move(classes));
  T.conductor_ = static_cast<unsigned>(e);
  T.prime_ = l;
  for (auto &L : lifted) {
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < k; ++j) {
      auto const o = T.classes_.element_orders()[j];
      std::vector<mpz_class> ring(e, 0);
      for (std::uint64_t t = 0; t < o; ++t)
        ring[t * (e / o)] += L.spectra[j][t];
      row.push_back(Cyclotomic::from_group_ring(static_cast<unsigned>(e), ring));
    }
    T.values_.push_back(std::move(row));
    T.degrees_.push_back(L.degree);
    T.spectra_.push_back(std::move(L.spectra));
  }
  return T;
}

namespace {

/// Integer power-basis coordinates of a character value.
std::vector<mpz_class> integral_coords(Cyclotomic const &c)
{
  std::vector<mpz_class> out;
  out.reserve(c.coefficients().size());
  for (auto const &q : c.coefficients()) {
    if (q.get_den() != 1)
      throw std::logic_error("character value is not an algebraic integer");
    out.push_back(q.get_num());
  }
  return out;
}

/// Reduces a polynomial in zeta (length up to 2 phi - 1) to power-basis
/// coordinates.
std::vector<mpz_class> reduce(CyclotomicField const &F, std::vector<mpz_class> const &poly)
{
  auto const phi = F.degree();
  std::vector<mpz_class> out(poly.begin(), poly.begin() + std::min<std::size_t>(phi, poly.size()));
  out.resize(phi, 0);
  for (std::size_t d = phi; d < poly.size(); ++d) {
    if (poly[d] == 0)
      continue;
    auto const &pw = F.power(static_cast<unsigned>(d));
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i] != 0)
        mpz_addmul(out[i].get_mpz_t(), poly[d].get_mpz_t(), pw[i].get_mpz_t());
  }
  return out;
}

/// acc += w * x * y as polynomials in zeta.
void accumulate_product(std::vector<mpz_class> &acc, mpz_class const &w,
                        std::vector<mpz_class> const &x, std::vector<mpz_class> const &y)
{
  mpz_class t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    t = w * x[i];
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0)
        mpz_addmul(acc[i + j].get_mpz_t(), t.get_mpz_t(), y[j].get_mpz_t());
  }
}

bool equals_integer(std::vector<mpz_class> const &coords, mpz_class const &v)
{
  if (coords[0] != v)
    return false;
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0)
      return false;
  return true;
}

} // namespace

OrthogonalityReport verify_orthogonality(CharacterTable const &table)
{
  OrthogonalityReport rep;
  auto const k = table.classes().size();
  auto const n = table.size();
  mpz_class const order = table.group().order();
  rep.square = n == k;

  mpz_class sum_sq = 0;
  for (auto d : table.degrees())
    sum_sq += mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
  rep.degree_squares = sum_sq == order;

  rep.trivial_first = n > 0;
  if (n > 0)
    for (std::size_t j = 0; j < k; ++j)
      if (!(table.value(0, j) == Cyclotomic(1)))
        rep.trivial_first = false;
  if (!rep.square)
    return rep;

  auto const F = CyclotomicField::get(table.conductor());
  auto const phi = F->degree();
  std::vector<std::vector<std::vector<mpz_class>>> val(n), conj(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      auto const v = table.value(r, j).embed(table.conductor());
      val[r].push_back(integral_coords(v));
      conj[r].push_back(integral_coords(v.conj()));
    }

  rep.rows = true;
  for (std::size_t x = 0; x < n && rep.rows; ++x)
    for (std::size_t y = x; y < n && rep.rows; ++y) {
      std::vector<mpz_class> acc(2 * phi - 1, 0);
      for (std::size_t j = 0; j < k; ++j)
        accumulate_product(acc, mpz_class(static_cast<unsigned long>(table.classes().sizes()[j])),
                           val[x][j], conj[y][j]);
      rep.rows = equals_integer(reduce(*F, acc), x == y ? order : mpz_class(0));
    }

  rep.columns = true;
  for (std::size_t i = 0; i < k && rep.columns; ++i)
    for (std::size_t j = i; j < k && rep.columns; ++j) {
      std::vector<mpz_class> acc(2 * phi - 1, 0);
      mpz_class const one = 1;
      for (std::size_t r = 0; r < n; ++r)
        accumulate_product(acc, one, val[r][i], conj[r][j]);
      mpz_class const expect =
        i == j ? mpz_class(static_cast<unsigned long>(table.classes().centralizer_order(i)))
               : mpz_class(0);
      rep.columns = equals_integer(reduce(*F, acc), expect);
    }
  return rep;
}

mpq_class inner_product(CharacterTable const &table, std::vector<Cyclotomic> const &a,
                        std::vector<Cyclotomic> const &b)
{
  Cyclotomic sum;
  auto const &sizes = table.classes().sizes();
  for (std::size_t j = 0; j < sizes.size(); ++j)
    sum += a[j] * b[j].conj() * mpq_class(static_cast<unsigned long>(sizes[j]));
  if (!sum.is_rational())
    throw std::logic_error("inner product of characters is not rational");
  return sum.rational_value() / mpq_class(table.group().order());
}

CharDegrees char_degrees(CharacterTable const &table)
{
  CharDegrees d;
  d.multiset = table.degrees();
  std::sort(d.multiset.begin(), d.multiset.end());
  d.cd.insert(d.multiset.begin(), d.multiset.end());
  d.b = d.multiset.empty() ? 1 : d.multiset.back();
  return d;
}

std::vector<std::size_t> class_fusion(CharacterTable const &table_N,
                                      CharacterTable const &table_G)
{
  std::vector<std::size_t> fusion;
  for (auto const &rep : table_N.classes().representatives()) {
    if (!table_G.group().contains(rep))
      throw InvalidArgument("class fusion needs a subgroup");
    fusion.push_back(table_G.classes().class_of(rep));
  }
  return fusion;
}

std::vector<std::vector<std::uint64_t>>
restriction_constituents(CharacterTable const &table_G, CharacterTable const &table_N)
{
  if (!is_normal(table_G.group(), table_N.group()))
    throw NotNormal("restriction needs a normal subgroup");
  auto const fusion = class_fusion(table_N, table_G);
  std::vector<std::vector<std::uint64_t>> m(table_G.size());
  for (std::size_t x = 0; x < table_G.size(); ++x) {
    std::vector<Cyclotomic> res;
    for (auto c : fusion)
      res.push_back(table_G.value(x, c));
    std::uint64_t check = 0;
    for (std::size_t t = 0; t < table_N.size(); ++t) {
      auto const ip = inner_product(table_N, res, table_N.row(t));
      if (ip.get_den() != 1 || ip < 0)
        throw std::logic_error("restriction multiplicity is not a non-negative integer");
      auto const v = to_u64(ip.get_num());
      m[x].push_back(v);
      check += v * table_N.degree(t);
    }
    if (check != table_G.degree(x))
      throw std::logic_error("restricted degrees do not add up");
  }
  return m;
}

std::vector<std::size_t> characters_trivial_on(CharacterTable const &table,
                                               std::vector<bool> const &class_mask)
{
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    Cyclotomic const deg(mpq_class(static_cast<unsigned long>(table.degree(r))));
    bool ok = true;
    for (std::size_t j = 0; j < class_mask.size() && ok; ++j)
      if (class_mask[j])
        ok = table.value(r, j) == deg;
    if (ok)
      out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> characters_with_kernel_containing(CharacterTable const &table,
                                                           PermGroup const &N)
{
  if (!N.is_subgroup_of(table.group()))
    throw InvalidArgument("kernel test needs a subgroup");
  std::vector<bool> mask(table.classes().size(), false);
  N.for_each_element([&](std::uint64_t, Perm const &g) { mask[table.classes().class_of(g)] = true; });
  return characters_trivial_on(table, mask);
}

std::string format_table(CharacterTable const &table)
{
  auto const k = table.classes().size();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, sizes{"size"}, orders{"order"};
  for (std::size_t j = 0; j < k; ++j) {
    head.push_back(std::to_string(table.classes().element_orders()[j]) +
                   static_cast<char>('a' + std::min<std::size_t>(j, 25)));
    sizes.push_back(std::to_string(table.classes().sizes()[j]));
    orders.push_back(std::to_string(table.classes().element_orders()[j]));
  }
  // class labels: order plus running letter within that order
  std::vector<unsigned> seen(table.classes().exponent() + 1, 0);
  for (std::size_t j = 0; j < k; ++j) {
    auto const o = table.classes().element_orders()[j];
    std::string label = std::to_string(o);
    auto n = seen[o]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
      n /= 26;
    } while (n-- > 0);
    head[j + 1] = label + suffix;
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::vector<std::string> row{"X." + std::to_string(r + 1)};
    for (std::size_t j = 0; j < k; ++j)
      row.push_back(table.value(r, j).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (auto const &row : cells)
    for (std::size_t j = 0; j <= k; ++j)
      width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  os << "order " << table.group().order().get_str() << ", " << k << " classes\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j <= k; ++j) {
      auto const &s = cells[i][j];
      if (j == 0)
        os << s << std::string(width[0] - s.size(), ' ');
      else
        os << "  " << std::string(width[j] - s.size(), ' ') << s;
    }
    os << '\n';
    if (i == 1)
      os << '\n';
  }
  return os.str();
}

std::string table_to_json(CharacterTable const &table, int indent)
{
  using nlohmann::json;
  json j;
  auto const &cls = table.classes();
  j["order"] = table.group().order().get_str();
  j["conductor"] = table.conductor();
  json classes = json::array();
  for (std::size_t c = 0; c < cls.size(); ++c)
    classes.push_back({{"representative", cls.representatives()[c].to_string()},
                       {"size", cls.sizes()[c]},
                       {"element_order", cls.element_orders()[c]}});
  j["classes"] = classes;
  j["degrees"] = table.degrees();
  json rows = json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      auto const v = table.value(r, c).embed(table.conductor());
      json coeffs = json::array();
      for (auto const &q : v.coefficients()) {
        if (q.get_den() == 1 && q.get_num().fits_slong_p())
          coeffs.push_back(q.get_num().get_si());
        else
          coeffs.push_back(q.get_str());
      }
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  j["values"] = rows;
  return j.dump(indent);
}

} // namespace mh
