#include "numsg_cli/fixtures.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "numsg/apery_hilbert.hpp"
#include "numsg/error.hpp"
#include "numsg/ideals.hpp"
#include "numsg/serialize.hpp"

namespace numsg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

bool FixtureCheck::pass() const {
  if (!checksum_ok || !error.empty()) return false;
  for (const auto& f : fields)
    if (!f.pass) return false;
  return true;
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

fs::path default_fixture_dir() {
  if (const char* env = std::getenv("SEMIGROUP_FIXTURES"); env && *env) return env;
#ifdef NUMSG_FIXTURE_DIR
  if (fs::exists(fs::path(NUMSG_FIXTURE_DIR) / "index.json")) return NUMSG_FIXTURE_DIR;
#endif
#ifdef NUMSG_INSTALLED_FIXTURE_DIR
  return NUMSG_INSTALLED_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::UnknownFixture, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const fs::path& p) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, p.string() + ": " + e.what());
  }
}

}  // namespace

FixtureRegistry FixtureRegistry::load(const fs::path& dir) {
  FixtureRegistry reg;
  reg.dir_ = dir;
  const fs::path index_path = dir / "index.json";
  const json index = parse_json(slurp(index_path), index_path);
  try {
    for (const auto& entry : index.at("fixtures")) {
      Fixture fx;
      fx.name = entry.at("name").get<std::string>();
      fx.file = dir / entry.at("file").get<std::string>();
      fx.checksum = entry.at("checksum").get<std::string>();
      const std::string text = slurp(fx.file);
      fx.actual_checksum = fnv1a64(text);
      const json doc = parse_json(text, fx.file);
      fx.description = doc.value("description", "");
      fx.generators = doc.at("generators").get<std::vector<Int>>();
      fx.expected = doc.value("expected", json::object());
      reg.fixtures_.push_back(std::move(fx));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, index_path.string() + ": " + e.what());
  }
  return reg;
}

const FixtureRegistry& FixtureRegistry::instance() {
  static const FixtureRegistry reg = load(default_fixture_dir());
  return reg;
}

const Fixture& FixtureRegistry::get(const std::string& name) const {
  for (const auto& fx : fixtures_)
    if (fx.name == name) return fx;
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "' in " + dir_.string());
}

std::vector<std::string> FixtureRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& fx : fixtures_) out.push_back(fx.name);
  return out;
}

FixtureCheck check_fixture(const Fixture& fx) {
  FixtureCheck check;
  check.name = fx.name;
  check.checksum_ok = fx.checksum == fx.actual_checksum;
  try {
    const auto s = NumericalSemigroup::from_generators(fx.generators);
    auto add = [&](const std::string& field, json actual) {
      const json& want = fx.expected.at(field);
      check.fields.push_back({field, want, actual, want == actual});
    };
    const json& exp = fx.expected;
    if (exp.contains("multiplicity")) add("multiplicity", s.multiplicity());
    if (exp.contains("embedding_dimension")) add("embedding_dimension", s.embedding_dimension());
    if (exp.contains("frobenius")) add("frobenius", s.frobenius());
    if (exp.contains("genus")) add("genus", s.genus());
    if (exp.contains("type")) add("type", type(s));
    if (exp.contains("pseudo_frobenius")) add("pseudo_frobenius", pseudo_frobenius(s));
    if (exp.contains("symmetric")) add("symmetric", is_symmetric(s));
    if (exp.contains("almost_symmetric")) {
      add("almost_symmetric", is_almost_symmetric(s, AlmostSymmetryMethod::Definition));
      const bool nari = is_almost_symmetric(s, AlmostSymmetryMethod::Nari);
      check.fields.push_back({"almost_symmetric_nari", exp.at("almost_symmetric"), nari,
                              exp.at("almost_symmetric") == json(nari)});
    }
    if (exp.contains("hilbert")) {
      // The stated prefix ends once the function is constant, i.e. at the value e.
      const auto want = exp.at("hilbert").get<std::vector<Int>>();
      const auto hf = hilbert_function(s, static_cast<int>(want.size()) - 1);
      add("hilbert", hf.values);
      check.fields.push_back({"hilbert_stable", true, hf.stable(), hf.stable()});
    }
    if (exp.contains("apery_strata")) {
      const auto table = apery_table(s);
      json actual = json::object();
      for (const auto& [k, _] : exp.at("apery_strata").items())
        actual[k] = table.stratum(std::stoi(k));
      add("apery_strata", actual);
    }
  } catch (const std::exception& e) {
    check.error = e.what();
  }
  return check;
}

std::vector<FixtureCheck> check_all(const FixtureRegistry& registry, bool parallel) {
  std::vector<FixtureCheck> out;
  if (!parallel) {
    for (const auto& fx : registry.all()) out.push_back(check_fixture(fx));
    return out;
  }
  std::vector<std::future<FixtureCheck>> jobs;
  for (const auto& fx : registry.all())
    jobs.push_back(std::async(std::launch::async, [&fx] { return check_fixture(fx); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

json to_json(const FixtureCheck& check) {
  json fields = json::array();
  for (const auto& f : check.fields)
    fields.push_back({{"field", f.field}, {"expected", f.expected}, {"actual", f.actual},
                      {"pass", f.pass}});
  json j = {{"name", check.name}, {"pass", check.pass()}, {"checksum_ok", check.checksum_ok},
            {"fields", fields}};
  if (!check.error.empty()) j["error"] = check.error;
  return j;
}

}  // namespace numsg::cli
