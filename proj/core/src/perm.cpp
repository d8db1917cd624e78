#include "mh/perm.hpp"

#include <numeric>
#include <sstream>

#include "mh/errors.hpp"

namespace mh {

Perm::Perm(std::size_t degree) : images_(degree)
{
  if (degree > 65536)
    throw BoundExceeded("permutation degree exceeds 65536");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image list is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  Perm result(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x + 1) +
                              " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x + 1) +
                              " occurs in more than one cycle");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return result;
}

Perm Perm::from_images_unchecked(std::vector<Point> images)
{
  Perm result;
  result.images_ = std::move(images);
  return result;
}

void multiply_into(Perm const &a, Perm const &b, std::vector<Point> &out)
{
  auto const n = a.degree();
  out.resize(n);
  auto const ai = a.images();
  auto const bi = b.images();
  for (std::size_t x = 0; x < n; ++x)
    out[x] = bi[ai[x]];
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    result.images_[x] = rhs.images_[images_[x]];
  return result;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  for (auto &y : images_)
    y = rhs.images_[y];
  return *this;
}

Perm Perm::inverse() const
{
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    result.images_[images_[x]] = static_cast<Point>(x);
  return result;
}

Perm Perm::pow(long long k) const
{
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Perm result(degree());
  while (e > 0) {
    if (e & 1u)
      result *= base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Perm Perm::conjugate(Perm const &h) const
{
  // (h^-1 x h)[y] = h[x[h^-1[y]]]
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t y = 0; y < images_.size(); ++y)
    result.images_[h.images_[y]] = h.images_[images_[y]];
  return result;
}

bool Perm::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

std::uint64_t Perm::order() const
{
  std::uint64_t result = 1;
  for (auto const &c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::optional<Point> Perm::smallest_moved_point() const
{
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return static_cast<Point>(x);
  }
  return std::nullopt;
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (done[x] || images_[x] == x)
      continue;
    std::vector<Point> cycle;
    for (auto y = static_cast<Point>(x); !done[y]; y = images_[y]) {
      done[y] = true;
      cycle.push_back(y);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_string(bool one_based) const
{
  auto const cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i] + (one_based ? 1 : 0);
    os << ')';
  }
  return os.str();
}

std::size_t Perm::hash() const
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : images_) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace mh
