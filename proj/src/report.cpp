#include "reslat/report.hpp"

#include <algorithm>

#include "json.hpp"

#include "reslat/filters.hpp"
#include "reslat/gelfand.hpp"
#include "reslat/pure.hpp"

namespace reslat {

namespace {

std::vector<std::string> format_all(const ResiduatedLattice& a, std::span<const ElementSet> sets) {
  std::vector<std::string> out;
  for (ElementSet s : sets) out.push_back(format_set(a, s));
  return out;
}

BatteryVerdict make_battery(std::string name, Battery criteria) {
  BatteryVerdict b;
  b.name = std::move(name);
  b.verdict = criteria.front().holds;
  b.unanimous = unanimous(criteria);
  b.criteria = std::move(criteria);
  return b;
}

}  // namespace

bool BatteryVerdict::operator==(const BatteryVerdict& o) const {
  auto same = [](const Criterion& x, const Criterion& y) {
    return x.group == y.group && x.key == y.key && x.holds == y.holds && x.witness == y.witness;
  };
  return name == o.name && verdict == o.verdict && unanimous == o.unanimous &&
         std::equal(criteria.begin(), criteria.end(), o.criteria.begin(), o.criteria.end(), same);
}

bool AnalysisReport::unanimous() const {
  return std::all_of(batteries.begin(), batteries.end(),
                     [](const BatteryVerdict& b) { return b.unanimous; });
}

const BatteryVerdict* AnalysisReport::battery(std::string_view n) const {
  for (const auto& b : batteries) {
    if (b.name == n) return &b;
  }
  return nullptr;
}

AnalysisReport analyze(const ResiduatedLattice& a) {
  const FilterLattice fl(a);
  const PureStructure ps(fl);
  AnalysisReport r;
  r.name = a.name();
  r.size = a.size();
  r.filters = format_all(a, fl.filters());
  r.primes = format_all(a, fl.primes());
  r.maximals = format_all(a, fl.maximals());
  r.pure_filters = format_all(a, ps.pure_filters());
  r.spp = format_all(a, ps.spp());

  const GelfandVerdict gv = gelfand_verdict(ps);
  const SoftConditions sc = soft_conditions(fl);
  const LocalConditions lc = local_conditions(fl);
  const CoannihilatorFamilies co = coannihilators(fl);

  r.flags.gelfand = gv.gelfand();
  r.flags.soft = sc.definition;
  r.flags.local = lc.one_maximal;
  r.flags.semisimple = is_semisimple(fl);
  r.flags.rickart = co.rickart;
  r.flags.baer = co.baer;
  r.flags.prelinear = is_prelinear(a);

  r.batteries.push_back(make_battery("gelfand", gv.criteria));
  r.batteries.push_back(make_battery(
      "soft", {{"soft", "definition", sc.definition, {}},
               {"soft", "hausdorff-dense", sc.hausdorff_dense, {}},
               {"soft", "gelfand-semisimple", sc.gelfand_semisimple, {}}}));
  r.batteries.push_back(make_battery(
      "local", {{"local", "one-maximal", lc.one_maximal, {}},
                {"local", "in-is-filter", lc.in_is_filter, {}},
                {"local", "in-is-proper-filter", lc.in_is_proper_filter, {}},
                {"local", "in-is-unique-maximal", lc.in_is_unique_maximal, {}},
                {"local", "ni-is-prime", lc.ni_is_prime, {}}}));
  r.batteries.push_back(make_battery("max-hausdorff", hausnorm_battery(fl)));

  if (gv.witness_prime) {
    r.witnesses["gelfand.prime"] = format_set(a, *gv.witness_prime);
    std::string ms;
    for (ElementSet m : gv.witness_maximals) ms += (ms.empty() ? "" : " ") + format_set(a, m);
    r.witnesses["gelfand.maximals"] = ms;
  }
  if (gv.contessa_pair) {
    r.witnesses["contessa.pair"] =
        a.name_of(gv.contessa_pair->first) + "," + a.name_of(gv.contessa_pair->second);
  }

  const auto primes = fl.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (fl.is_maximal(primes[i])) continue;
    if (ps.sigma(primes[i]) != fl.d_part_at(i)) {
      r.observations.push_back("sigma(" + format_set(a, primes[i]) + ")=" +
                               format_set(a, ps.sigma(primes[i])) + " differs from D=" +
                               format_set(a, fl.d_part_at(i)));
    }
  }
  return r;
}

namespace {

using nlohmann::json;

json criterion_json(const Criterion& c) {
  return json{{"group", c.group}, {"key", c.key}, {"holds", c.holds}, {"witness", c.witness}};
}

}  // namespace

std::string report_json(const AnalysisReport& r) {
  json doc;
  doc["name"] = r.name;
  doc["size"] = r.size;
  doc["filter_count"] = r.filters.size();
  doc["filters"] = r.filters;
  doc["primes"] = r.primes;
  doc["maximals"] = r.maximals;
  doc["pure_filters"] = r.pure_filters;
  doc["spp"] = r.spp;
  doc["flags"] = json{{"gelfand", r.flags.gelfand},       {"soft", r.flags.soft},
                      {"local", r.flags.local},           {"semisimple", r.flags.semisimple},
                      {"rickart", r.flags.rickart},       {"baer", r.flags.baer},
                      {"prelinear", r.flags.prelinear}};
  json batteries = json::array();
  for (const auto& b : r.batteries) {
    json criteria = json::array();
    for (const auto& c : b.criteria) criteria.push_back(criterion_json(c));
    batteries.push_back(json{{"name", b.name},
                             {"verdict", b.verdict},
                             {"unanimous", b.unanimous},
                             {"criteria", criteria}});
  }
  doc["batteries"] = batteries;
  doc["witnesses"] = r.witnesses;
  doc["observations"] = r.observations;
  doc["unanimous"] = r.unanimous();
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text.begin(), text.end());
    AnalysisReport r;
    r.name = doc.at("name").get<std::string>();
    r.size = doc.at("size").get<std::size_t>();
    r.filters = doc.at("filters").get<std::vector<std::string>>();
    r.primes = doc.at("primes").get<std::vector<std::string>>();
    r.maximals = doc.at("maximals").get<std::vector<std::string>>();
    r.pure_filters = doc.at("pure_filters").get<std::vector<std::string>>();
    r.spp = doc.at("spp").get<std::vector<std::string>>();
    const json& f = doc.at("flags");
    r.flags.gelfand = f.at("gelfand").get<bool>();
    r.flags.soft = f.at("soft").get<bool>();
    r.flags.local = f.at("local").get<bool>();
    r.flags.semisimple = f.at("semisimple").get<bool>();
    r.flags.rickart = f.at("rickart").get<bool>();
    r.flags.baer = f.at("baer").get<bool>();
    r.flags.prelinear = f.at("prelinear").get<bool>();
    for (const json& b : doc.at("batteries")) {
      BatteryVerdict v;
      v.name = b.at("name").get<std::string>();
      v.verdict = b.at("verdict").get<bool>();
      v.unanimous = b.at("unanimous").get<bool>();
      for (const json& c : b.at("criteria")) {
        v.criteria.push_back({c.at("group").get<std::string>(), c.at("key").get<std::string>(),
                              c.at("holds").get<bool>(), c.at("witness").get<std::string>()});
      }
      r.batteries.push_back(std::move(v));
    }
    r.witnesses = doc.at("witnesses").get<std::map<std::string, std::string>>();
    r.observations = doc.at("observations").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("report: ") + e.what());
  }
}

}  // namespace reslat
