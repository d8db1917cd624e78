#include "mh/bsgs.hpp"

#include <algorithm>

#include "mh/errors.hpp"

namespace mh {

namespace {

StabilizerLevel make_level(std::size_t degree, Point base_point)
{
  StabilizerLevel level;
  level.base_point = base_point;
  level.position.assign(degree, -1);
  level.orbit.push_back(base_point);
  level.position[base_point] = 0;
  level.transversal.emplace_back(degree);
  level.inverse_transversal.emplace_back(degree);
  return level;
}

// Extends the basic orbit after generators were appended. Existing transversal
// entries never change, so earlier strip results stay valid.
void extend_orbit(StabilizerLevel &level)
{
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    Point const beta = level.orbit[idx];
    for (auto const &g : level.generators) {
      Point const img = g[beta];
      if (level.position[img] >= 0)
        continue;
      level.position[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Perm u = level.transversal[idx] * g;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

} // namespace

Bsgs Bsgs::build(std::size_t degree, std::vector<Perm> const &generators)
{
  Bsgs b;
  b.degree_ = degree;

  std::vector<Perm> gens;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " differs from group degree " +
                            std::to_string(degree));
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  std::vector<Point> base;
  for (auto const &g : gens) {
    bool fixes_base = std::all_of(base.begin(), base.end(),
                                  [&](Point x) { return g[x] == x; });
    if (fixes_base)
      base.push_back(*g.smallest_moved_point());
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    auto level = make_level(degree, base[i]);
    for (auto const &g : gens) {
      bool fixes_prefix = std::all_of(base.begin(), base.begin() + i,
                                      [&](Point x) { return g[x] == x; });
      if (fixes_prefix)
        level.generators.push_back(g);
    }
    extend_orbit(level);
    b.levels_.push_back(std::move(level));
  }

  // tested[i][j][idx]: Schreier generator for generator j and orbit point idx
  // at level i already strips to the identity.
  std::vector<std::vector<std::vector<bool>>> tested(b.levels_.size());

  auto ensure_marks = [&](std::size_t i) {
    auto &marks = tested[i];
    auto const &level = b.levels_[i];
    marks.resize(level.generators.size());
    for (auto &m : marks)
      m.resize(level.orbit.size(), false);
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(b.levels_.size()) - 1;
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    ensure_marks(li);
    bool descended = false;

    for (std::size_t j = 0; j < b.levels_[li].generators.size() && !descended; ++j) {
      for (std::size_t idx = 0; idx < b.levels_[li].orbit.size(); ++idx) {
        if (tested[li][j][idx])
          continue;

        auto const &level = b.levels_[li];
        Point const beta = level.orbit[idx];
        auto const &x = level.generators[j];
        Point const img = x[beta];
        Perm h = level.transversal[idx] * x *
                 level.inverse_transversal[level.position[img]];

        auto [y, stop] = b.strip(std::move(h), li + 1);
        if (stop == b.levels_.size() && y.is_identity()) {
          tested[li][j][idx] = true;
          continue;
        }

        if (stop == b.levels_.size()) {
          b.levels_.push_back(make_level(degree, *y.smallest_moved_point()));
          tested.emplace_back();
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          b.levels_[l].generators.push_back(y);
          extend_orbit(b.levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        descended = true;
        break;
      }
    }

    if (!descended)
      --i;
  }

  b.order_ = 1;
  for (auto const &level : b.levels_)
    b.order_ *= static_cast<unsigned long>(level.orbit.size());
  b.enumerable_ = mpz_sizeinbase(b.order_.get_mpz_t(), 2) <= 63;
  return b;
}

std::vector<Point> Bsgs::base() const
{
  std::vector<Point> result;
  for (auto const &level : levels_)
    result.push_back(level.base_point);
  return result;
}

std::vector<Perm> Bsgs::strong_generators() const
{
  std::vector<Perm> result;
  for (auto const &level : levels_) {
    for (auto const &g : level.generators) {
      if (std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(g);
    }
  }
  return result;
}

std::pair<Perm, std::size_t> Bsgs::strip(Perm g, std::size_t from) const
{
  std::vector<Point> scratch;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    auto const &level = levels_[l];
    auto const pos = level.position[g[level.base_point]];
    if (pos < 0)
      return {std::move(g), l};
    multiply_into(g, level.inverse_transversal[pos], scratch);
    g = Perm::from_images_unchecked(std::move(scratch));
    scratch = {};
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::contains(Perm const &g) const
{
  if (g.degree() != degree_)
    return false;
  auto [residue, stop] = strip(g);
  return stop == levels_.size() && residue.is_identity();
}

std::optional<std::uint64_t> Bsgs::try_rank(Perm const &g) const
{
  if (!enumerable_)
    throw BoundExceeded("group order too large to enumerate");
  if (g.degree() != degree_)
    return std::nullopt;
  std::vector<Point> cur(g.images().begin(), g.images().end());
  std::vector<Point> next(degree_);
  std::uint64_t r = 0, stride = 1;
  for (auto const &level : levels_) {
    auto const pos = level.position[cur[level.base_point]];
    if (pos < 0)
      return std::nullopt;
    r += static_cast<std::uint64_t>(pos) * stride;
    stride *= level.orbit.size();
    auto const inv = level.inverse_transversal[pos].images();
    for (std::size_t x = 0; x < degree_; ++x)
      next[x] = inv[cur[x]];
    cur.swap(next);
  }
  for (std::size_t x = 0; x < degree_; ++x) {
    if (cur[x] != x)
      return std::nullopt;
  }
  return r;
}

std::uint64_t Bsgs::rank(Perm const &g) const
{
  auto r = try_rank(g);
  if (!r)
    throw InvalidArgument("element " + g.to_string() + " is not in the group");
  return *r;
}

Perm Bsgs::unrank(std::uint64_t r) const
{
  if (!enumerable_)
    throw BoundExceeded("group order too large to enumerate");
  // g = u_{k-1} ... u_1 u_0
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    digits[l] = r % levels_[l].orbit.size();
    r /= levels_[l].orbit.size();
  }
  Perm g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;)
    g *= levels_[l].transversal[digits[l]];
  return g;
}

} // namespace mh
