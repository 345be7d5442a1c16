#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/semigroup.hpp"

namespace numsg::cli {

struct Fixture {
  std::string name;
  std::string description;
  std::filesystem::path file;
  std::string checksum;  // as pinned in index.json
  std::string actual_checksum;
  std::vector<Int> generators;
  nlohmann::json expected;
};

struct FieldCheck {
  std::string field;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

struct FixtureCheck {
  std::string name;
  bool checksum_ok = false;
  std::string error;  // set when the fixture could not be evaluated at all
  std::vector<FieldCheck> fields;
  bool pass() const;
};

/// "fnv1a64:<16 hex digits>" of the raw bytes.
std::string fnv1a64(std::string_view bytes);

/// $SEMIGROUP_FIXTURES, else the build-tree directory, else the install one.
std::filesystem::path default_fixture_dir();

class FixtureRegistry {
 public:
  /// Reads index.json and every fixture it lists. Throws Error(UnknownFixture)
  /// when the index is missing and Error(Parse) on malformed files.
  static FixtureRegistry load(const std::filesystem::path& dir);
  static const FixtureRegistry& instance();

  const Fixture& get(const std::string& name) const;
  const std::vector<Fixture>& all() const noexcept { return fixtures_; }
  std::vector<std::string> names() const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::vector<Fixture> fixtures_;
};

FixtureCheck check_fixture(const Fixture& fixture);

/// Checks every fixture, concurrently when `parallel` is set. Order follows the index.
std::vector<FixtureCheck> check_all(const FixtureRegistry& registry, bool parallel = true);

nlohmann::json to_json(const FixtureCheck& check);

}  // namespace numsg::cli
