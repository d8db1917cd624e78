#include "mh/mat_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mh/block_systems.hpp"
#include "mh/errors.hpp"
#include "mh/group_structure.hpp"
#include "mh/numtheory.hpp"
#include "mh/set_actions.hpp"

namespace mh {

namespace {

void check_prime(unsigned p)
{
  if (p >= 256 || !is_prime(p))
    throw InvalidArgument("matrix field order must be a prime below 256");
}

unsigned inv_mod(unsigned a, unsigned p)
{
  return static_cast<unsigned>(invmod(a, p));
}

/// Row-reduced basis of a subspace of F_p^n, built incrementally.
class Echelon
{
public:
  Echelon(unsigned dim, unsigned p) : dim_(dim), p_(p) {}

  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

  /// Adds v; returns false when v already lies in the span.
  bool add(std::vector<unsigned> v)
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto const c = v[pivots_[r]];
      if (c == 0)
        continue;
      for (unsigned j = 0; j < dim_; ++j)
        v[j] = (v[j] + (p_ - c) * rows_[r][j]) % p_;
    }
    auto const it = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
    if (it == v.end())
      return false;
    auto const piv = static_cast<unsigned>(it - v.begin());
    auto const s = inv_mod(v[piv], p_);
    for (auto &c : v)
      c = c * s % p_;
    for (auto &row : rows_) {
      auto const c = row[piv];
      if (c == 0)
        continue;
      for (unsigned j = 0; j < dim_; ++j)
        row[j] = (row[j] + (p_ - c) * v[j]) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::vector<std::vector<unsigned>> const &rows() const { return rows_; }

private:
  unsigned dim_;
  unsigned p_;
  std::vector<std::vector<unsigned>> rows_;
  std::vector<unsigned> pivots_;
};

/// All vectors in the span of the given basis, as sorted codes.
std::vector<std::uint64_t> span_codes(std::vector<std::vector<unsigned>> const &basis,
                                      unsigned dim, unsigned p)
{
  std::vector<std::uint64_t> out{0};
  for (auto const &b : basis) {
    std::vector<std::uint64_t> next;
    next.reserve(out.size() * p);
    for (auto code : out) {
      auto v = decode_vector(code, dim, p);
      for (unsigned c = 0; c < p; ++c) {
        std::vector<unsigned> w(dim);
        for (unsigned j = 0; j < dim; ++j)
          w[j] = (v[j] + c * b[j]) % p;
        next.push_back(encode_vector(w, p));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t checked_space_size(MatGroup const &M, SpaceLimits const &limits)
{
  auto const size = M.space_size();
  if (size > limits.max_vectors || size > 65536)
    throw BoundExceeded("natural module has " + size.get_str() +
                        " vectors, above the configured bound");
  return to_u64(size);
}

} // namespace

std::vector<unsigned> decode_vector(std::uint64_t code, unsigned dim, unsigned p)
{
  std::vector<unsigned> v(dim);
  for (unsigned i = 0; i < dim; ++i) {
    v[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t encode_vector(std::vector<unsigned> const &coords, unsigned p)
{
  std::uint64_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;)
    code = code * p + coords[i];
  return code;
}

// --- FpMatrix ---------------------------------------------------------------

FpMatrix::FpMatrix(unsigned dim, unsigned p) : dim_(dim), p_(p), entries_(dim * dim, 0)
{
  check_prime(p);
}

FpMatrix::FpMatrix(unsigned p, std::vector<std::vector<unsigned>> const &rows)
  : FpMatrix(static_cast<unsigned>(rows.size()), p)
{
  for (unsigned i = 0; i < dim_; ++i) {
    if (rows[i].size() != dim_)
      throw InvalidArgument("matrix is not square");
    for (unsigned j = 0; j < dim_; ++j)
      set(i, j, rows[i][j]);
  }
}

FpMatrix FpMatrix::identity(unsigned dim, unsigned p)
{
  FpMatrix m(dim, p);
  for (unsigned i = 0; i < dim; ++i)
    m.set(i, i, 1);
  return m;
}

void FpMatrix::set(unsigned i, unsigned j, unsigned v)
{
  if (v >= p_)
    throw InvalidArgument("matrix entry " + std::to_string(v) + " not in 0.." +
                          std::to_string(p_ - 1));
  entries_[i * dim_ + j] = static_cast<std::uint8_t>(v);
}

std::vector<std::vector<unsigned>> FpMatrix::rows() const
{
  std::vector<std::vector<unsigned>> out(dim_, std::vector<unsigned>(dim_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      out[i][j] = at(i, j);
  return out;
}

FpMatrix FpMatrix::operator*(FpMatrix const &rhs) const
{
  if (rhs.dim_ != dim_ || rhs.p_ != p_)
    throw InvalidArgument("matrix shape or field mismatch");
  FpMatrix out(dim_, p_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      unsigned s = 0;
      for (unsigned k = 0; k < dim_; ++k)
        s = (s + at(i, k) * rhs.at(k, j)) % p_;
      out.entries_[i * dim_ + j] = static_cast<std::uint8_t>(s);
    }
  return out;
}

unsigned FpMatrix::determinant() const
{
  auto a = rows();
  unsigned det = 1;
  for (unsigned c = 0; c < dim_; ++c) {
    unsigned piv = c;
    while (piv < dim_ && a[piv][c] == 0)
      ++piv;
    if (piv == dim_)
      return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p_ - det) % p_;
    }
    det = det * a[c][c] % p_;
    auto const inv = inv_mod(a[c][c], p_);
    for (unsigned r = c + 1; r < dim_; ++r) {
      auto const f = a[r][c] * inv % p_;
      if (f == 0)
        continue;
      for (unsigned j = c; j < dim_; ++j)
        a[r][j] = (a[r][j] + (p_ - f) * a[c][j]) % p_;
    }
  }
  return det;
}

FpMatrix FpMatrix::inverse() const
{
  auto a = rows();
  auto b = identity(dim_, p_).rows();
  for (unsigned c = 0; c < dim_; ++c) {
    unsigned piv = c;
    while (piv < dim_ && a[piv][c] == 0)
      ++piv;
    if (piv == dim_)
      throw InvalidArgument("matrix is singular");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    auto const inv = inv_mod(a[c][c], p_);
    for (unsigned j = 0; j < dim_; ++j) {
      a[c][j] = a[c][j] * inv % p_;
      b[c][j] = b[c][j] * inv % p_;
    }
    for (unsigned r = 0; r < dim_; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      auto const f = a[r][c];
      for (unsigned j = 0; j < dim_; ++j) {
        a[r][j] = (a[r][j] + (p_ - f) * a[c][j]) % p_;
        b[r][j] = (b[r][j] + (p_ - f) * b[c][j]) % p_;
      }
    }
  }
  return FpMatrix(p_, b);
}

FpMatrix FpMatrix::transpose() const
{
  FpMatrix out(dim_, p_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      out.entries_[j * dim_ + i] = entries_[i * dim_ + j];
  return out;
}

std::uint64_t FpMatrix::apply(std::uint64_t v) const
{
  auto const x = decode_vector(v, dim_, p_);
  std::vector<unsigned> y(dim_, 0);
  for (unsigned i = 0; i < dim_; ++i) {
    if (x[i] == 0)
      continue;
    for (unsigned j = 0; j < dim_; ++j)
      y[j] = (y[j] + x[i] * at(i, j)) % p_;
  }
  return encode_vector(y, p_);
}

std::string FpMatrix::to_string() const
{
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < dim_; ++j)
      os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// --- MatGroup ---------------------------------------------------------------

MatGroup::MatGroup(unsigned dim, unsigned p, std::vector<FpMatrix> generators)
  : dim_(dim), p_(p), generators_(std::move(generators))
{
  check_prime(p);
  if (dim == 0)
    throw InvalidArgument("matrix dimension must be positive");
  for (auto const &g : generators_) {
    if (g.dim() != dim || g.prime() != p)
      throw InvalidArgument("generator does not match dimension " + std::to_string(dim) +
                            " over F_" + std::to_string(p));
    if (!g.is_invertible())
      throw InvalidArgument("generator " + g.to_string() + " is singular");
  }
}

mpz_class MatGroup::space_size() const
{
  mpz_class s;
  mpz_ui_pow_ui(s.get_mpz_t(), p_, dim_);
  return s;
}

PermGroup MatGroup::as_perm_group(SpaceLimits const &limits) const
{
  auto const n = checked_space_size(*this, limits);
  std::vector<Perm> perms;
  for (auto const &g : generators_) {
    std::vector<Point> images(n);
    for (std::uint64_t v = 0; v < n; ++v)
      images[v] = static_cast<Point>(g.apply(v));
    perms.push_back(Perm::from_images_unchecked(std::move(images)));
  }
  return PermGroup(n, std::move(perms));
}

mpz_class MatGroup::order(SpaceLimits const &limits) const
{
  return as_perm_group(limits).order();
}

std::vector<VectorOrbit> vector_orbits(MatGroup const &M, SpaceLimits const &limits)
{
  auto const G = M.as_perm_group(limits);
  std::vector<VectorOrbit> out;
  for (auto const &orb : orbits(G))
    out.push_back({*std::min_element(orb.begin(), orb.end()), orb.size()});
  std::sort(out.begin(), out.end(), [](VectorOrbit const &a, VectorOrbit const &b) {
    return std::tie(a.size, a.representative) < std::tie(b.size, b.representative);
  });
  return out;
}

ExceptionalReport is_p_exceptional(MatGroup const &M, SpaceLimits const &limits)
{
  ExceptionalReport r;
  auto const G = M.as_perm_group(limits);
  r.order = G.order();
  r.p_divides_order = mpz_divisible_ui_p(r.order.get_mpz_t(), M.prime()) != 0;
  r.orbits = vector_orbits(M, limits);
  for (auto const &o : r.orbits)
    if (o.size % M.prime() == 0) {
      r.offending = o.representative;
      break;
    }
  r.holds = r.p_divides_order && !r.offending;
  return r;
}

unsigned spin_dimension(MatGroup const &M, std::vector<std::uint64_t> const &vectors)
{
  Echelon basis(M.dim(), M.prime());
  std::vector<std::uint64_t> queue;
  for (auto v : vectors)
    if (basis.add(decode_vector(v, M.dim(), M.prime())))
      queue.push_back(v);
  for (std::size_t i = 0; i < queue.size() && basis.rank() < M.dim(); ++i)
    for (auto const &g : M.generators()) {
      auto const w = g.apply(queue[i]);
      if (basis.add(decode_vector(w, M.dim(), M.prime())))
        queue.push_back(w);
    }
  return basis.rank();
}

bool is_irreducible(MatGroup const &M, SpaceLimits const &limits)
{
  auto const n = checked_space_size(M, limits);
  auto const p = M.prime();
  for (std::uint64_t v = 1; v < n; ++v) {
    // one representative per line: leading (highest) nonzero coordinate 1
    auto const coords = decode_vector(v, M.dim(), p);
    auto const lead = std::find_if(coords.rbegin(), coords.rend(),
                                   [](unsigned c) { return c != 0; });
    if (*lead != 1)
      continue;
    if (spin_dimension(M, {v}) < M.dim())
      return false;
  }
  return true;
}

ImprimitivityReport check_imprimitive_decomposition(
  MatGroup const &M, std::vector<std::vector<std::uint64_t>> const &parts,
  SpaceLimits const &limits)
{
  auto const dim = M.dim();
  auto const p = M.prime();
  if (parts.size() < 2)
    throw InvalidArgument("a decomposition needs at least two parts");

  ImprimitivityReport rep;
  Echelon total(dim, p);
  unsigned dim_sum = 0;
  for (auto const &part : parts) {
    Echelon own(dim, p);
    for (auto v : part) {
      auto const coords = decode_vector(v, dim, p);
      own.add(coords);
      total.add(coords);
    }
    if (own.rank() == 0)
      throw InvalidArgument("decomposition has a zero part");
    dim_sum += own.rank();
    rep.part_vectors.push_back(span_codes(own.rows(), dim, p));
  }
  if (dim_sum != dim || total.rank() != dim)
    throw InvalidArgument("parts do not form a direct sum decomposition of the module");

  auto const r = parts.size();
  auto part_of = [&](std::uint64_t v) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < r; ++j)
      if (std::binary_search(rep.part_vectors[j].begin(), rep.part_vectors[j].end(), v))
        return j;
    return std::nullopt;
  };

  std::vector<Perm> induced_gens;
  for (auto const &g : M.generators()) {
    std::vector<Point> images(r);
    for (std::size_t i = 0; i < r; ++i) {
      auto const &vecs = rep.part_vectors[i];
      std::optional<std::size_t> target;
      for (auto v : vecs) {
        if (v == 0)
          continue;
        auto const j = part_of(g.apply(v));
        if (!j || (target && *j != *target) ||
            rep.part_vectors[*j].size() != vecs.size())
          throw InvalidArgument("the group does not permute the given parts");
        target = j;
      }
      images[i] = static_cast<Point>(*target);
    }
    std::vector<Point> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("the group does not permute the given parts");
    induced_gens.push_back(Perm(std::move(images)));
  }
  rep.induced = PermGroup(r, std::move(induced_gens));

  auto const G = M.as_perm_group(limits);
  auto const &first = rep.part_vectors[0];
  std::vector<Point> first_points(first.begin(), first.end());
  auto const stab = setwise_stabilizer(G, first_points);
  rep.stabilizer_transitive = orbit(stab, static_cast<Point>(first[1])).size() == first.size() - 1;

  rep.induced_transitive = is_transitive(rep.induced);
  rep.induced_primitive = rep.induced_transitive && is_primitive(rep.induced);
  rep.induced_p_concealed = is_p_concealed(rep.induced, p).holds;
  return rep;
}

} // namespace mh
