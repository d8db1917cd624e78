#include "mh/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "mh/errors.hpp"

namespace mh {

using nlohmann::ordered_json;

bool EmReport::mh_inequality() const
{
  if (!mh_B0)
    return !mh_P;
  return !mh_P || *mh_B0 <= *mh_P;
}

bool EmReport::passed() const
{
  if (hypothesis_holds && theorem_holds != true)
    return false;
  if (!mh_inequality())
    return false;
  if (witness_in_p_prime_quotient == false || abelian_sylow_heights_zero == false)
    return false;
  return true;
}

void sort_reports(std::vector<EmReport> &reports)
{
  std::sort(reports.begin(), reports.end(), [](EmReport const &x, EmReport const &y) {
    return std::tie(x.name, x.p) < std::tie(y.name, y.p);
  });
}

namespace {

template <typename T>
ordered_json opt(std::optional<T> const &v)
{
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> get_opt(ordered_json const &j, char const *key)
{
  auto const &v = j.at(key);
  if (v.is_null())
    return std::nullopt;
  return v.get<T>();
}

ordered_json to_json(EmReport const &r, bool with_timings)
{
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["p"] = r.p;
  j["sylow_order"] = r.sylow_order;
  j["cd_P"] = r.cd_P;
  j["solvable"] = r.solvable;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["a"] = opt(r.a);
  j["mh_B0"] = opt(r.mh_B0);
  j["mh_P"] = opt(r.mh_P);
  j["witness_degree"] = opt(r.witness_degree);
  j["theorem_holds"] = opt(r.theorem_holds);
  j["em_equality_observed"] = r.em_equality_observed;
  j["witness_in_p_prime_quotient"] = opt(r.witness_in_p_prime_quotient);
  j["abelian_sylow_heights_zero"] = opt(r.abelian_sylow_heights_zero);
  j["block_count"] = r.block_count;
  j["principal_block_size"] = r.principal_block_size;
  if (with_timings)
    j["elapsed_ms"] = opt(r.elapsed_ms);
  return j;
}

std::string csv_opt(auto const &v)
{
  if (!v)
    return "";
  std::ostringstream os;
  os << std::boolalpha << *v;
  return os.str();
}

} // namespace

std::string reports_to_json(std::vector<EmReport> const &reports, bool with_timings)
{
  ordered_json doc;
  doc["schema_version"] = report_schema_version;
  doc["reports"] = ordered_json::array();
  for (auto const &r : reports)
    doc["reports"].push_back(to_json(r, with_timings));
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(std::vector<EmReport> const &reports, bool with_timings)
{
  std::ostringstream os;
  os << std::boolalpha;
  os << "name,order,p,sylow_order,cd_P,solvable,hypothesis_holds,a,mh_B0,mh_P,witness_degree,"
        "theorem_holds,em_equality_observed,witness_in_p_prime_quotient,"
        "abelian_sylow_heights_zero,block_count,principal_block_size";
  if (with_timings)
    os << ",elapsed_ms";
  os << '\n';
  for (auto const &r : reports) {
    std::string cd;
    for (auto d : r.cd_P)
      cd += (cd.empty() ? "" : ";") + std::to_string(d);
    // an empty mh field means infinity
    os << r.name << ',' << r.order << ',' << r.p << ',' << r.sylow_order << ',' << cd << ','
       << r.solvable << ',' << r.hypothesis_holds << ',' << csv_opt(r.a) << ','
       << csv_opt(r.mh_B0) << ',' << csv_opt(r.mh_P) << ',' << csv_opt(r.witness_degree) << ','
       << csv_opt(r.theorem_holds) << ',' << r.em_equality_observed << ','
       << csv_opt(r.witness_in_p_prime_quotient) << ',' << csv_opt(r.abelian_sylow_heights_zero)
       << ',' << r.block_count << ',' << r.principal_block_size;
    if (with_timings)
      os << ',' << csv_opt(r.elapsed_ms);
    os << '\n';
  }
  return os.str();
}

std::vector<EmReport> reports_from_json(std::string const &text)
{
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw InvalidArgument(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema_version", 0) != report_schema_version)
    throw InvalidArgument("unsupported report schema version");
  std::vector<EmReport> out;
  try {
    for (auto const &j : doc.at("reports")) {
      EmReport r;
      r.name = j.at("name").get<std::string>();
      r.order = j.at("order").get<std::uint64_t>();
      r.p = j.at("p").get<std::uint64_t>();
      r.sylow_order = j.at("sylow_order").get<std::uint64_t>();
      r.cd_P = j.at("cd_P").get<std::vector<std::uint64_t>>();
      r.solvable = j.at("solvable").get<bool>();
      r.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
      r.a = get_opt<unsigned>(j, "a");
      r.mh_B0 = get_opt<unsigned>(j, "mh_B0");
      r.mh_P = get_opt<unsigned>(j, "mh_P");
      r.witness_degree = get_opt<std::uint64_t>(j, "witness_degree");
      r.theorem_holds = get_opt<bool>(j, "theorem_holds");
      r.em_equality_observed = j.at("em_equality_observed").get<bool>();
      r.witness_in_p_prime_quotient = get_opt<bool>(j, "witness_in_p_prime_quotient");
      r.abelian_sylow_heights_zero = get_opt<bool>(j, "abelian_sylow_heights_zero");
      r.block_count = j.at("block_count").get<std::size_t>();
      r.principal_block_size = j.at("principal_block_size").get<std::size_t>();
      if (j.contains("elapsed_ms"))
        r.elapsed_ms = get_opt<double>(j, "elapsed_ms");
      out.push_back(std::move(r));
    }
  } catch (nlohmann::json::exception const &e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
  return out;
}

} // namespace mh
