#include "numsg/serialize.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "numsg/error.hpp"

namespace numsg {

namespace {

using nlohmann::json;

json int_map(const std::map<int, std::vector<Int>>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::map<int, std::vector<Int>> int_map_from(const json& j) {
  std::map<int, std::vector<Int>> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<std::vector<Int>>();
  return out;
}

}  // namespace

std::vector<Int> parse_generators(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw Error(ErrorCode::Parse, "empty generator list");
  if (compact.front() == '[') {
    try {
      const auto j = json::parse(compact);
      if (!j.is_array()) throw Error(ErrorCode::Parse, "expected a JSON array");
      std::vector<Int> out;
      for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "non-integer entry " + v.dump());
        out.push_back(v.get<Int>());
      }
      return out;
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::Parse, ex.what());
    }
  }
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t comma = std::min(compact.find(',', pos), compact.size());
    const std::string_view field(compact.data() + pos, comma - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::Parse, "bad integer '" + std::string(field) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string format_generators(const std::vector<Int>& gens) {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
  return os.str();
}

std::string format_hilbert(const HilbertFunction& hf) {
  std::ostringstream os;
  os << '[';
  const int last = hf.stable() ? *hf.stable_from : hf.h_max();
  for (int h = 0; h <= last; ++h) os << (h ? "," : "") << hf.values[static_cast<std::size_t>(h)];
  os << (hf.stable() ? " ->]" : ", ...]");
  return os.str();
}

json to_json(const HilbertFunction& hf) {
  return {{"values", hf.values},
          {"stable_from", hf.stable_from ? json(*hf.stable_from) : json(nullptr)}};
}

HilbertFunction hilbert_from_json(const json& j) {
  HilbertFunction hf;
  hf.values = j.at("values").get<std::vector<Int>>();
  if (!j.at("stable_from").is_null()) hf.stable_from = j.at("stable_from").get<int>();
  return hf;
}

json to_json(const RelativeIdeal& ideal) {
  return {{"small", ideal.small()}, {"threshold", ideal.threshold()}};
}

RelativeIdeal ideal_from_json(const NumericalSemigroup& ambient, const json& j) {
  return RelativeIdeal(ambient, j.at("small").get<std::vector<Int>>(), j.at("threshold").get<Int>());
}

json to_json(const LayerSets& layers) {
  json refined = json::object();
  for (const auto& [k, by_t] : layers.d_refined) refined[std::to_string(k)] = int_map(by_t);
  return {{"k_max", layers.k_max},
          {"C", int_map(layers.c)},
          {"D", int_map(layers.d)},
          {"D_refined", refined}};
}

LayerSets layer_sets_from_json(const json& j) {
  LayerSets layers;
  layers.k_max = j.at("k_max").get<int>();
  layers.c = int_map_from(j.at("C"));
  layers.d = int_map_from(j.at("D"));
  for (const auto& [k, v] : j.at("D_refined").items()) {
    layers.d_refined[std::stoi(k)] = int_map_from(v);
  }
  return layers;
}

json to_json(const AperyTable& table) {
  return {{"elements", table.elements}, {"strata", int_map(table.strata)}};
}

json to_json(const NariPartition& part) { return {{"A", part.a}, {"B", part.b}}; }

json to_json(const Certificate& cert) {
  json claims = json::array();
  for (const auto& c : cert.claims) {
    claims.push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"ell", cert.ell}, {"all_pass", cert.all_pass()}, {"claims", claims}};
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.ell = j.at("ell").get<int>();
  for (const auto& c : j.at("claims")) {
    cert.claims.push_back({c.at("name").get<std::string>(), c.at("expected"), c.at("actual"),
                           c.at("pass").get<bool>()});
  }
  return cert;
}

json to_json(const ConstructionData& d) {
  json s = json::array();
  for (const auto& [pq, v] : d.s_family) s.push_back({{"p", pq.first}, {"q", pq.second}, {"value", v}});
  json r = json::array();
  for (const auto& [pq, v] : d.r_family) r.push_back({{"p", pq.first}, {"q", pq.second}, {"value", v}});
  return {{"ell", d.ell},   {"e", d.e},   {"n1", d.n1},         {"n2", d.n2},
          {"F", d.f_offset}, {"G", d.g_offset}, {"t1", d.t1}, {"t2", d.t2},
          {"s_family", s},  {"r_family", r}, {"gamma", d.gamma},
          {"embedding_dimension", d.gamma.size()}, {"frobenius", d.semigroup.frobenius()}};
}

json to_json(const WitnessReport& report, bool emit_generators) {
  json chain = json::array();
  for (const auto& step : report.chain) {
    json item = {{"kind", step.kind},
                 {"b", step.b},
                 {"multiplicity", step.semigroup.multiplicity()},
                 {"embedding_dimension", step.semigroup.embedding_dimension()},
                 {"frobenius", step.semigroup.frobenius()},
                 {"type", step.type},
                 {"hilbert", to_json(step.hilbert)}};
    if (emit_generators) item["generators"] = step.semigroup.min_gens();
    chain.push_back(std::move(item));
  }
  return {{"level", report.level},
          {"drop_target", report.drop_target},
          {"seed", report.seed},
          {"seed_drop", report.seed_drop},
          {"maximal_steps", report.maximal_steps},
          {"chain", chain},
          {"final_symmetric", report.final_symmetric},
          {"achieved_drop", report.achieved_drop}};
}

}  // namespace numsg
