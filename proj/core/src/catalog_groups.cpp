#include <algorithm>

#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/galois_field.hpp"
#include "mh/numtheory.hpp"

namespace mh::groups {

namespace {

Perm images(std::vector<Point> img)
{
  return Perm(std::move(img));
}

PermGroup checked(PermGroup G, mpz_class const &expected, char const *what)
{
  if (G.order() != expected)
    throw std::logic_error(std::string(what) + ": built group has order " +
                           G.order().get_str() + ", expected " + expected.get_str());
  return G;
}

/// Prime power decomposition q = p^m; throws for other q.
std::pair<unsigned, unsigned> prime_power(unsigned q)
{
  auto const f = factorize(q);
  if (f.size() != 1)
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(f[0].first), f[0].second};
}

struct Mat2
{
  GaloisField::Element a, b, c, d;   // [[a,b],[c,d]]
};

} // namespace

PermGroup sym(unsigned n)
{
  if (n <= 1)
    return PermGroup::trivial(std::max(n, 1u));
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), images(cycle)});
}

PermGroup alt(unsigned n)
{
  if (n <= 2)
    return PermGroup::trivial(std::max(n, 1u));
  std::vector<Perm> gens;
  for (unsigned i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(unsigned n)
{
  if (n == 0)
    throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<Point> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {images(img)});
}

PermGroup dihedral(unsigned order)
{
  if (order % 2 != 0 || order < 6)
    throw InvalidArgument("dihedral group order must be even and at least 6");
  auto const n = order / 2;
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return checked(PermGroup(n, {images(rot), images(refl)}), order, "dihedral");
}

PermGroup dicyclic(unsigned order)
{
  if (order % 4 != 0 || order < 8)
    throw InvalidArgument("dicyclic group order must be a multiple of 4, at least 8");
  auto const m = order / 4;
  auto const two_m = 2 * m;
  // element a^i x^j has index i + 2m j; generators act by right multiplication
  std::vector<Point> by_a(order), by_x(order);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < two_m; ++i) {
      auto const idx = i + two_m * j;
      auto const ia = j == 0 ? (i + 1) % two_m : (i + two_m - 1) % two_m;
      by_a[idx] = static_cast<Point>(ia + two_m * j);
      by_x[idx] = static_cast<Point>(j == 0 ? i + two_m : (i + m) % two_m);
    }
  return checked(PermGroup(order, {images(by_a), images(by_x)}), order, "dicyclic");
}

PermGroup quaternion(unsigned order)
{
  if (order < 8 || (order & (order - 1)) != 0)
    throw InvalidArgument("generalized quaternion order must be a power of 2, at least 8");
  return dicyclic(order);
}

PermGroup elementary_abelian(unsigned p, unsigned k)
{
  if (!is_prime(p))
    throw InvalidArgument("elementary abelian group needs a prime");
  auto const n = static_cast<unsigned>(ipow(p, k));
  std::vector<Perm> gens;
  for (unsigned i = 0; i < k; ++i) {
    auto const w = static_cast<unsigned>(ipow(p, i));
    std::vector<Point> img(n);
    for (unsigned v = 0; v < n; ++v) {
      auto const digit = v / w % p;
      img[v] = static_cast<Point>(v - digit * w + ((digit + 1) % p) * w);
    }
    gens.push_back(images(img));
  }
  if (k == 0)
    return PermGroup::trivial(1);
  return PermGroup(n, std::move(gens));
}

PermGroup extraspecial(unsigned p, ExtraspecialType type)
{
  if (!is_prime(p))
    throw InvalidArgument("extraspecial group needs a prime");
  mpz_class const order = p * p * p;
  if (p == 2)
    return type == ExtraspecialType::plus ? dihedral(8) : quaternion(8);
  if (type == ExtraspecialType::plus) {
    MatGroup const heis(3, p,
                        {FpMatrix(p, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                         FpMatrix(p, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})});
    return checked(heis.as_perm_group(SpaceLimits{std::uint64_t{1} << 16}), order,
                   "extraspecial");
  }
  auto const n = p * p;
  std::vector<Point> add(n), mul(n);
  for (unsigned x = 0; x < n; ++x) {
    add[x] = static_cast<Point>((x + 1) % n);
    mul[x] = static_cast<Point>(x * (1 + p) % n);
  }
  return checked(PermGroup(n, {images(add), images(mul)}), order, "extraspecial");
}

PermGroup wreath(PermGroup const &A, PermGroup const &B)
{
  auto const a = A.degree();
  auto const b = B.degree();
  auto const n = a * b;
  std::vector<Perm> gens;
  for (auto const &g : A.generators()) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<Point>(x < a ? g[x] : x);
    gens.push_back(images(img));
  }
  for (auto const &h : B.generators()) {
    std::vector<Point> img(n);
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t i = 0; i < a; ++i)
        img[i + a * j] = static_cast<Point>(i + a * h[j]);
    gens.push_back(images(img));
  }
  mpz_class expected;
  mpz_pow_ui(expected.get_mpz_t(), A.order().get_mpz_t(), b);
  expected *= B.order();
  return checked(PermGroup(n, std::move(gens)), expected, "wreath");
}

PermGroup direct_product(PermGroup const &A, PermGroup const &B)
{
  auto const a = A.degree();
  auto const n = a + B.degree();
  std::vector<Perm> gens;
  for (auto const &g : A.generators()) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<Point>(x < a ? g[x] : x);
    gens.push_back(images(img));
  }
  for (auto const &h : B.generators()) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<Point>(x < a ? x : a + h[x - a]);
    gens.push_back(images(img));
  }
  return checked(PermGroup(n, std::move(gens)), A.order() * B.order(), "direct product");
}

MatGroup sl_mat(unsigned n, unsigned p)
{
  std::vector<FpMatrix> gens;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) {
        auto t = FpMatrix::identity(n, p);
        t.set(i, j, 1);
        gens.push_back(t);
      }
  return MatGroup(n, p, std::move(gens));
}

MatGroup gl_mat(unsigned n, unsigned p)
{
  auto gens = sl_mat(n, p).generators();
  if (p > 2) {
    auto d = FpMatrix::identity(n, p);
    d.set(0, 0, static_cast<unsigned>(primitive_root(p)));
    gens.push_back(d);
  }
  return MatGroup(n, p, std::move(gens));
}

namespace {

/// Matrix of y -> c y on F_{p^m} in the polynomial basis (rows are images of
/// basis vectors).
FpMatrix multiplication_matrix(GaloisField const &F, GaloisField::Element const &c)
{
  auto const m = F.degree();
  auto const p = static_cast<unsigned>(F.characteristic());
  FpMatrix out(m, p);
  for (unsigned i = 0; i < m; ++i) {
    auto const img = F.mul(F.element(ipow(p, i)), c);
    for (unsigned j = 0; j < m; ++j)
      out.set(i, j, img[j]);
  }
  return out;
}

FpMatrix frobenius_matrix(GaloisField const &F)
{
  auto const m = F.degree();
  auto const p = static_cast<unsigned>(F.characteristic());
  FpMatrix out(m, p);
  for (unsigned i = 0; i < m; ++i) {
    auto const img = F.pow(F.element(ipow(p, i)), std::uint64_t{p});
    for (unsigned j = 0; j < m; ++j)
      out.set(i, j, img[j]);
  }
  return out;
}

} // namespace

MatGroup gl1_mat(unsigned p, unsigned m)
{
  GaloisField const F(p, m);
  return MatGroup(m, p, {multiplication_matrix(F, F.primitive_element())});
}

MatGroup gammal1_mat(unsigned p, unsigned m)
{
  GaloisField const F(p, m);
  std::vector<FpMatrix> gens{multiplication_matrix(F, F.primitive_element())};
  if (m > 1)
    gens.push_back(frobenius_matrix(F));
  return MatGroup(m, p, std::move(gens));
}

PermGroup affine(MatGroup const &M)
{
  auto const lin = M.as_perm_group(SpaceLimits{std::uint64_t{1} << 16});
  auto const n = lin.degree();
  auto const p = M.prime();
  std::vector<Perm> gens = lin.generators();
  std::vector<Point> shift(n);
  for (std::size_t v = 0; v < n; ++v)
    shift[v] = static_cast<Point>(v - v % p + (v % p + 1) % p);   // add e_0
  gens.push_back(images(shift));
  return PermGroup(n, std::move(gens));
}

PermGroup agl(unsigned n, unsigned p)
{
  return affine(gl_mat(n, p));
}

PermGroup asl(unsigned n, unsigned p)
{
  return affine(sl_mat(n, p));
}

PermGroup agl1(unsigned q)
{
  auto const [p, m] = prime_power(q);
  GaloisField const F(p, m);
  auto const w = F.primitive_element();
  std::vector<Point> mul(q), add(q);
  for (unsigned x = 0; x < q; ++x) {
    auto const e = F.element(x);
    mul[x] = static_cast<Point>(F.index(F.mul(e, w)));
    add[x] = static_cast<Point>(F.index(F.add(e, F.one())));
  }
  return checked(PermGroup(q, {images(mul), images(add)}), q * (q - 1), "AGL1");
}

PermGroup agammal1(unsigned q)
{
  auto const [p, m] = prime_power(q);
  GaloisField const F(p, m);
  auto G = agl1(q);
  std::vector<Point> frob(q);
  for (unsigned x = 0; x < q; ++x)
    frob[x] = static_cast<Point>(F.index(F.pow(F.element(x), std::uint64_t{p})));
  auto gens = G.generators();
  gens.push_back(images(frob));
  return checked(PermGroup(q, std::move(gens)), q * (q - 1) * m, "AGammaL1");
}

namespace {

std::vector<Mat2> sl2_generators(GaloisField const &F)
{
  auto const one = F.one(), zero = F.zero();
  auto const w = F.primitive_element();
  return {Mat2{one, one, zero, one}, Mat2{one, zero, one, one}, Mat2{w, zero, zero, F.inv(w)}};
}

void check_sl2_range(unsigned q)
{
  if (q < 2 || q > 13)
    throw InvalidArgument("SL2/PSL2 builders support prime powers q <= 13");
}

} // namespace

PermGroup sl2(unsigned q)
{
  check_sl2_range(q);
  auto const [p, m] = prime_power(q);
  GaloisField const F(p, m);
  auto const n = q * q - 1;
  std::vector<Perm> gens;
  for (auto const &A : sl2_generators(F)) {
    std::vector<Point> img(n);
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y) {
        if (x == 0 && y == 0)
          continue;
        auto const ex = F.element(x), ey = F.element(y);
        auto const u = F.add(F.mul(ex, A.a), F.mul(ey, A.c));
        auto const v = F.add(F.mul(ex, A.b), F.mul(ey, A.d));
        img[x + q * y - 1] = static_cast<Point>(F.index(u) + q * F.index(v) - 1);
      }
    gens.push_back(images(img));
  }
  return checked(PermGroup(n, std::move(gens)), q * (q * q - 1), "SL2");
}

PermGroup psl2(unsigned q)
{
  check_sl2_range(q);
  auto const [p, m] = prime_power(q);
  GaloisField const F(p, m);
  // point x < q is [1 : x], point q is [0 : 1]
  auto const point = [&](GaloisField::Element const &u, GaloisField::Element const &v) {
    if (F.is_zero(u))
      return static_cast<Point>(q);
    return static_cast<Point>(F.index(F.mul(v, F.inv(u))));
  };
  std::vector<Perm> gens;
  for (auto const &A : sl2_generators(F)) {
    std::vector<Point> img(q + 1);
    for (unsigned x = 0; x <= q; ++x) {
      auto const ex = x < q ? F.one() : F.zero();
      auto const ey = x < q ? F.element(x) : F.one();
      img[x] = point(F.add(F.mul(ex, A.a), F.mul(ey, A.c)),
                     F.add(F.mul(ex, A.b), F.mul(ey, A.d)));
    }
    gens.push_back(images(img));
  }
  return checked(PermGroup(q + 1, std::move(gens)), q * (q * q - 1) / (p == 2 ? 1 : 2),
                 "PSL2");
}

PermGroup mathieu11()
{
  std::vector<Point> c11(11);
  for (unsigned i = 0; i < 11; ++i)
    c11[i] = static_cast<Point>((i + 1) % 11);
  auto const b = Perm::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}});
  return checked(PermGroup(11, {images(c11), b}), 7920, "M11");
}

} // namespace mh::groups
