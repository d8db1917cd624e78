#include "mh/partition.hpp"

#include <algorithm>
#include <sstream>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw InvalidArgument("partition parts must be positive and weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::conjugate() const
{
  std::vector<unsigned> cols(parts_.empty() ? 0 : parts_[0], 0);
  for (auto r : parts_)
    for (unsigned j = 0; j < r; ++j)
      ++cols[j];
  return Partition(std::move(cols));
}

std::vector<std::vector<unsigned>> Partition::hook_lengths() const
{
  auto const cols = conjugate().parts();
  std::vector<std::vector<unsigned>> hooks(parts_.size());
  for (unsigned i = 0; i < parts_.size(); ++i)
    for (unsigned j = 0; j < parts_[i]; ++j)
      hooks[i].push_back((parts_[i] - j - 1) + (cols[j] - i - 1) + 1);
  return hooks;
}

mpz_class Partition::hook_degree() const
{
  mpz_class prod = 1;
  for (auto const &row : hook_lengths())
    for (auto h : row)
      prod *= h;
  return factorial(n_) / prod;
}

std::string Partition::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned> &cur,
                    std::vector<Partition> &out)
{
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n)
{
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition partition_with_p_part_p(unsigned n, unsigned p)
{
  if (p % 2 == 0 || !is_prime(p))
    throw InvalidArgument("p must be an odd prime");
  if (n < p || n >= p * p)
    throw InvalidArgument("n must satisfy p <= n < p^2");
  if (n <= 4)
    throw InvalidArgument("n must exceed 4");
  if (n == 6 && p == 3)
    throw InvalidArgument("(n,p) = (6,3) is excluded");
  auto const a = n / p;
  auto const b = n % p;
  if (b != 0) {
    std::vector<unsigned> parts{a * p};
    parts.insert(parts.end(), b, 1u);
    return Partition(std::move(parts));
  }
  return Partition({a * p - 2, 2});
}

} // namespace mh
