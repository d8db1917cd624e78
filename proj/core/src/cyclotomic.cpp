#include "mh/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mh/errors.hpp"

namespace mh {

namespace {

std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, std::vector<mpz_class> const &den)
{
  // den is monic
  auto const dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    auto const c = num[i];
    q[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  return q;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned e)
{
  if (e == 0)
    throw InvalidArgument("conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(e); it != cache.end())
      return it->second;
  }
  std::vector<mpz_class> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0)
      poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  cache.emplace(e, poly);
  return poly;
}

CyclotomicField::CyclotomicField(unsigned conductor)
  : e_(conductor), poly_(cyclotomic_polynomial(conductor))
{
  phi_ = static_cast<unsigned>(poly_.size() - 1);
  powers_.resize(e_);
  std::vector<mpz_class> cur(phi_, 0);
  cur[0] = 1;
  for (unsigned j = 0; j < e_; ++j) {
    powers_[j] = cur;
    // multiply by z and reduce with z^phi = -(poly_0 + ... + poly_{phi-1} z^{phi-1})
    mpz_class const top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i)
      cur[i] = cur[i - 1] - top * poly_[i];
    cur[0] = -top * poly_[0];
  }
}

std::shared_ptr<CyclotomicField const> CyclotomicField::get(unsigned conductor)
{
  if (conductor == 0)
    throw InvalidArgument("conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<CyclotomicField const>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(conductor); it != cache.end())
      return it->second;
  }
  auto field = std::make_shared<CyclotomicField const>(conductor);
  std::lock_guard lock(mutex);
  return cache.emplace(conductor, field).first->second;
}

unsigned common_conductor(unsigned a, unsigned b)
{
  return std::lcm(a, b);
}

Cyclotomic::Cyclotomic() : Cyclotomic(mpq_class(0), 1) {}

Cyclotomic::Cyclotomic(mpq_class const &r, unsigned conductor)
  : field_(CyclotomicField::get(conductor)), c_(field_->degree(), 0)
{
  c_[0] = r;
}

Cyclotomic::Cyclotomic(std::shared_ptr<CyclotomicField const> field, std::vector<mpq_class> c)
  : field_(std::move(field)), c_(std::move(c))
{}

Cyclotomic Cyclotomic::zeta_power(unsigned conductor, std::int64_t k)
{
  auto field = CyclotomicField::get(conductor);
  auto const e = static_cast<std::int64_t>(conductor);
  auto const &pw = field->power(static_cast<unsigned>(((k % e) + e) % e));
  std::vector<mpq_class> c(pw.begin(), pw.end());
  return Cyclotomic(std::move(field), std::move(c));
}

Cyclotomic Cyclotomic::from_group_ring(unsigned conductor, std::vector<mpz_class> const &coeffs)
{
  auto field = CyclotomicField::get(conductor);
  std::vector<mpz_class> acc(field->degree(), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0)
      continue;
    auto const &pw = field->power(static_cast<unsigned>(j));
    for (unsigned i = 0; i < field->degree(); ++i)
      if (pw[i] != 0)
        mpz_addmul(acc[i].get_mpz_t(), coeffs[j].get_mpz_t(), pw[i].get_mpz_t());
  }
  std::vector<mpq_class> c(acc.begin(), acc.end());
  return Cyclotomic(std::move(field), std::move(c));
}

Cyclotomic Cyclotomic::from_coefficients(unsigned conductor, std::vector<mpq_class> coeffs)
{
  auto field = CyclotomicField::get(conductor);
  if (coeffs.size() != field->degree())
    throw InvalidArgument("coefficient vector length must equal phi(conductor)");
  for (auto &c : coeffs)
    c.canonicalize();
  return Cyclotomic(std::move(field), std::move(coeffs));
}

Cyclotomic Cyclotomic::embed(unsigned conductor) const
{
  auto const e = this->conductor();
  if (conductor == e)
    return *this;
  if (conductor % e != 0)
    throw InvalidArgument("embedding needs a multiple of the conductor");
  auto field = CyclotomicField::get(conductor);
  auto const step = conductor / e;
  std::vector<mpq_class> out(field->degree(), 0);
  for (unsigned j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0)
      continue;
    auto const &pw = field->power(j * step);
    for (unsigned i = 0; i < field->degree(); ++i)
      if (pw[i] != 0)
        out[i] += c_[j] * pw[i];
  }
  return Cyclotomic(std::move(field), std::move(out));
}

Cyclotomic Cyclotomic::operator+(Cyclotomic const &rhs) const
{
  auto const e = common_conductor(conductor(), rhs.conductor());
  if (e != conductor() || e != rhs.conductor())
    return embed(e) + rhs.embed(e);
  auto out = c_;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += rhs.c_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const
{
  auto out = c_;
  for (auto &c : out)
    c = -c;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(Cyclotomic const &rhs) const
{
  return *this + (-rhs);
}

Cyclotomic Cyclotomic::operator*(mpq_class const &r) const
{
  auto out = c_;
  for (auto &c : out)
    c *= r;
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(Cyclotomic const &rhs) const
{
  auto const e = common_conductor(conductor(), rhs.conductor());
  if (e != conductor() || e != rhs.conductor())
    return embed(e) * rhs.embed(e);
  auto const phi = field_->degree();
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  for (unsigned i = 0; i < phi; ++i) {
    if (c_[i] == 0)
      continue;
    for (unsigned j = 0; j < phi; ++j)
      if (rhs.c_[j] != 0)
        prod[i + j] += c_[i] * rhs.c_[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + phi);
  for (unsigned k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0)
      continue;
    auto const &pw = field_->power(k);
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i] != 0)
        out[i] += prod[k] * pw[i];
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const
{
  auto const e = conductor();
  auto const phi = field_->degree();
  std::vector<mpq_class> out(phi, 0);
  for (unsigned j = 0; j < phi; ++j) {
    if (c_[j] == 0)
      continue;
    auto const &pw = field_->power((e - j) % e);
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i] != 0)
        out[i] += c_[j] * pw[i];
  }
  return Cyclotomic(field_, std::move(out));
}

bool Cyclotomic::is_zero() const
{
  for (auto const &c : c_)
    if (c != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0)
      return false;
  return true;
}

bool Cyclotomic::is_integer() const
{
  return is_rational() && c_[0].get_den() == 1;
}

bool Cyclotomic::is_algebraic_integer() const
{
  for (auto const &c : c_)
    if (c.get_den() != 1)
      return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const
{
  if (!is_rational())
    throw InvalidArgument("cyclotomic number is not rational");
  return c_[0];
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.conductor() != b.conductor()) {
    auto const e = common_conductor(a.conductor(), b.conductor());
    return a.embed(e) == b.embed(e);
  }
  return a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const
{
  if (is_rational())
    return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  auto const e = conductor();
  for (unsigned j = 0; j < c_.size(); ++j) {
    auto c = c_[j];
    if (c == 0)
      continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (j == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1)
      os << c.get_str() << '*';
    os << "E(" << e << ')';
    if (j > 1)
      os << '^' << j;
  }
  return os.str();
}

} // namespace mh
