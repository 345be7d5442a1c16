#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "numsg/ideals.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInternal = 4;

/// "@name" looks up a fixture, "asd:L" builds the ell = L family member,
/// anything else is a generator list.
NumericalSemigroup resolve_semigroup(const std::string& text);

/// canonical, canonical+z, canonical-z, maximal, whole, or an ideal generator list.
RelativeIdeal resolve_ideal(const NumericalSemigroup& s, const std::string& text);

/// Runs one invocation (args exclude the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli
