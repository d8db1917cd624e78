#include "mh/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

struct Line
{
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::string trim(std::string s)
{
  auto const not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<Line> split_lines(std::string const &text)
{
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    auto const s = trim(raw);
    if (s.empty())
      continue;
    auto const sp = s.find_first_of(" \t");
    Line l{number, s.substr(0, sp), sp == std::string::npos ? "" : trim(s.substr(sp))};
    out.push_back(std::move(l));
  }
  return out;
}

/// Reads a non-negative integer at pos, skipping spaces.
class Cursor
{
public:
  Cursor(std::string s, std::size_t line) : s_(std::move(s)), line_(line) {}

  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done()
  {
    skip();
    return pos_ == s_.size();
  }
  char peek()
  {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  unsigned long number()
  {
    skip();
    auto const start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    if (pos_ - start > 9)
      fail("number too large");
    return std::stoul(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(std::string const &what) const { throw ParseError(line_, what); }

private:
  std::string s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<unsigned long> number_list(Cursor &c)
{
  std::vector<unsigned long> out;
  c.expect('[');
  if (c.accept(']'))
    return out;
  do
    out.push_back(c.number());
  while (c.accept(','));
  c.expect(']');
  return out;
}

Perm parse_generator(Line const &l, std::size_t degree)
{
  Cursor c(l.rest, l.number);
  if (c.peek() == '[') {
    auto const list = number_list(c);
    if (!c.done())
      c.fail("trailing characters after image list");
    if (list.size() != degree)
      c.fail("image list has " + std::to_string(list.size()) + " entries, degree is " +
             std::to_string(degree));
    std::vector<Point> img(degree);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (list[i] < 1 || list[i] > degree)
        c.fail("image " + std::to_string(list[i]) + " out of range");
      if (hit[list[i] - 1])
        c.fail("image list is not a bijection");
      hit[list[i] - 1] = true;
      img[i] = static_cast<Point>(list[i] - 1);
    }
    return Perm(std::move(img));
  }
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  while (!c.done()) {
    c.expect('(');
    std::vector<Point> cyc;
    if (!c.accept(')')) {
      do {
        auto const x = c.number();
        if (x < 1 || x > degree)
          c.fail("point " + std::to_string(x) + " out of range 1.." + std::to_string(degree));
        if (used[x - 1])
          c.fail("point " + std::to_string(x) + " repeated in cycles");
        used[x - 1] = true;
        cyc.push_back(static_cast<Point>(x - 1));
      } while (c.accept(','));
      c.expect(')');
    }
    cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(degree, cycles);
}

unsigned long single_number(Line const &l)
{
  Cursor c(l.rest, l.number);
  auto const v = c.number();
  if (!c.done())
    c.fail("trailing characters");
  return v;
}

mpz_class big_number(Line const &l)
{
  auto const s = trim(l.rest);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw ParseError(l.number, "expected a number");
  return mpz_class(s);
}

} // namespace

PermGroup parse_perm_group(std::string const &text)
{
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  std::optional<std::pair<std::size_t, mpz_class>> order;
  for (auto const &l : split_lines(text)) {
    if (l.keyword == "degree") {
      if (degree)
        throw ParseError(l.number, "degree given twice");
      auto const n = single_number(l);
      if (n < 1 || n > 65536)
        throw ParseError(l.number, "degree must lie in 1..65536");
      degree = n;
    } else if (l.keyword == "gen") {
      if (!degree)
        throw ParseError(l.number, "gen before degree");
      gens.push_back(parse_generator(l, *degree));
    } else if (l.keyword == "order") {
      order.emplace(l.number, big_number(l));
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!degree)
    throw ParseError(0, "missing degree line");
  PermGroup G(*degree, std::move(gens));
  if (order && G.order() != order->second)
    throw ParseError(order->first, "group has order " + G.order().get_str() + ", file says " +
                                     order->second.get_str());
  return G;
}

MatGroup parse_mat_group(std::string const &text, MatParseOptions const &options)
{
  std::optional<unsigned> dim, prime;
  std::vector<std::pair<std::size_t, std::vector<std::vector<unsigned long>>>> raw;
  std::optional<std::pair<std::size_t, mpz_class>> order;
  std::optional<std::pair<std::size_t, std::vector<unsigned long>>> orbit_sizes;
  for (auto const &l : split_lines(text)) {
    if (l.keyword == "dim") {
      auto const n = single_number(l);
      if (n < 1 || n > 64)
        throw ParseError(l.number, "dimension must lie in 1..64");
      dim = static_cast<unsigned>(n);
    } else if (l.keyword == "prime") {
      auto const p = single_number(l);
      if (p >= 256 || !is_prime(p))
        throw ParseError(l.number, std::to_string(p) + " is not a prime below 256");
      prime = static_cast<unsigned>(p);
    } else if (l.keyword == "gen") {
      Cursor c(l.rest, l.number);
      std::vector<std::vector<unsigned long>> rows;
      c.expect('[');
      do
        rows.push_back(number_list(c));
      while (c.accept(','));
      c.expect(']');
      if (!c.done())
        c.fail("trailing characters after matrix");
      raw.emplace_back(l.number, std::move(rows));
    } else if (l.keyword == "order") {
      order.emplace(l.number, big_number(l));
    } else if (l.keyword == "orbits") {
      Cursor c("[" + l.rest + "]", l.number);
      orbit_sizes.emplace(l.number, number_list(c));
    } else {
      throw ParseError(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!dim)
    throw ParseError(0, "missing dim line");
  if (!prime)
    throw ParseError(0, "missing prime line");
  std::vector<FpMatrix> gens;
  for (auto const &[line, rows] : raw) {
    if (rows.size() != *dim)
      throw ParseError(line, "matrix has " + std::to_string(rows.size()) + " rows, dim is " +
                               std::to_string(*dim));
    std::vector<std::vector<unsigned>> entries;
    for (auto const &r : rows) {
      if (r.size() != *dim)
        throw ParseError(line, "matrix row length differs from dim");
      std::vector<unsigned> row;
      for (auto v : r) {
        if (v >= *prime)
          throw ParseError(line, "entry " + std::to_string(v) + " not in 0.." +
                                   std::to_string(*prime - 1));
        row.push_back(static_cast<unsigned>(v));
      }
      entries.push_back(std::move(row));
    }
    FpMatrix m(*prime, entries);
    if (!m.is_invertible())
      throw ParseError(line, "singular matrix");
    gens.push_back(std::move(m));
  }
  MatGroup M(*dim, *prime, std::move(gens));
  if (options.validate && (order || orbit_sizes)) {
    if (M.space_size() > options.limits.max_vectors)
      throw BoundExceeded("validating this group needs " + M.space_size().get_str() +
                          " vectors; raise the space bound");
    if (order && M.order(options.limits) != order->second)
      throw ParseError(order->first, "group has order " + M.order(options.limits).get_str() +
                                       ", file says " + order->second.get_str());
    if (orbit_sizes) {
      std::vector<unsigned long> got;
      for (auto const &o : vector_orbits(M, options.limits))
        got.push_back(o.size);
      auto want = orbit_sizes->second;
      std::sort(want.begin(), want.end());
      if (got != want)
        throw ParseError(orbit_sizes->first, "orbit sizes on the module differ from the file");
    }
  }
  return M;
}

std::string serialize_perm_group(PermGroup const &G)
{
  std::ostringstream os;
  os << "degree " << G.degree() << '\n';
  for (auto const &g : G.generators())
    os << "gen " << g.to_string(true) << '\n';
  return os.str();
}

std::string serialize_mat_group(MatGroup const &M)
{
  std::ostringstream os;
  os << "dim " << M.dim() << "\nprime " << M.prime() << '\n';
  for (auto const &g : M.generators())
    os << "gen " << g.to_string() << '\n';
  return os.str();
}

std::string read_text_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PermGroup load_perm_group(std::filesystem::path const &path)
{
  return parse_perm_group(read_text_file(path));
}

MatGroup load_mat_group(std::filesystem::path const &path, MatParseOptions const &options)
{
  return parse_mat_group(read_text_file(path), options);
}

} // namespace mh
