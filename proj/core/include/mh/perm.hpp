#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mh {

using Point = std::uint16_t;

/// A permutation of {0, ..., degree - 1}, stored as its image list.
///
/// Products compose left to right: (a * b)[x] == b[a[x]], so the group acts
/// on points from the right and conjugation is x^h = h^-1 * x * h.
class Perm
{
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree);

  /// Throws InvalidArgument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Cycles are 0-based point lists; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  /// Skips the bijection check; for images produced by composing permutations.
  static Perm from_images_unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);

  Perm inverse() const;
  Perm pow(long long k) const;

  /// h^-1 * this * h
  Perm conjugate(Perm const &h) const;

  bool is_identity() const;
  std::uint64_t order() const;

  std::optional<Point> smallest_moved_point() const;

  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, e.g. "(1,2,3)(4,5)"; "()" for the identity.
  std::string to_string(bool one_based = true) const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &a, Perm const &b)
  {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

private:
  std::vector<Point> images_;
};

/// Writes a * b into out without allocating when out already has the degree.
void multiply_into(Perm const &a, Perm const &b, std::vector<Point> &out);

} // namespace mh

template <>
struct std::hash<mh::Perm>
{
  std::size_t operator()(mh::Perm const &p) const noexcept { return p.hash(); }
};
