#include "mh/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

struct PermGroup::Lazy
{
  std::once_flag once;
  std::unique_ptr<Bsgs> bsgs;
};

PermGroup::PermGroup() : lazy_(std::make_shared<Lazy>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
  : degree_(degree), lazy_(std::make_shared<Lazy>())
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

Bsgs const &PermGroup::bsgs() const
{
  std::call_once(lazy_->once, [this] {
    lazy_->bsgs = std::make_unique<Bsgs>(Bsgs::build(degree_, generators_));
  });
  return *lazy_->bsgs;
}

std::uint64_t PermGroup::order_u64() const { return to_u64(order()); }

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (degree_ != other.degree_)
    return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](Perm const &g) { return other.contains(g); });
}

bool PermGroup::same_elements(PermGroup const &other) const
{
  return order() == other.order() && is_subgroup_of(other);
}

void check_enumerable(PermGroup const &G, Limits const &limits)
{
  if (G.order() > limits.max_order)
    throw BoundExceeded("group order " + G.order().get_str() +
                        " exceeds the enumeration bound " +
                        std::to_string(limits.max_order));
}

void PermGroup::for_each_element(
  std::function<void(std::uint64_t, Perm const &)> const &f,
  Limits const &limits) const
{
  check_enumerable(*this, limits);
  auto const &b = bsgs();
  auto const n = order_u64();
  for (std::uint64_t r = 0; r < n; ++r)
    f(r, b.unrank(r));
}

std::vector<Perm> PermGroup::elements(Limits const &limits) const
{
  std::vector<Perm> result;
  for_each_element([&](std::uint64_t, Perm const &g) { result.push_back(g); },
                   limits);
  return result;
}

PermGroup PermGroup::extended_by(std::vector<Perm> const &extra) const
{
  auto gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(degree_, std::move(gens));
}

std::string PermGroup::to_string() const
{
  std::ostringstream os;
  os << "Group([";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    os << (i ? ", " : "") << generators_[i].to_string();
  os << "]) on " << degree_ << " points";
  return os.str();
}

} // namespace mh
