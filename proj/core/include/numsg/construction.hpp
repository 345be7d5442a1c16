#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/semigroup.hpp"

namespace numsg {

/// The almost symmetric semigroup of multiplicity ell^2 + 3 ell + 4 whose
/// Hilbert function decreases exactly at level ell, with every intermediate
/// quantity of its definition.
struct ConstructionData {
  int ell = 0;
  Int e = 0;
  Int n1 = 0;
  Int n2 = 0;
  Int f_offset = 0;  // n1 - e
  Int g_offset = 0;  // n2 - e
  Int t1 = 0;
  Int t2 = 0;
  std::map<std::pair<int, int>, Int> s_family;  // (p, q) -> p n1 + q n2 - (p + q - 2) e
  std::map<std::pair<int, int>, Int> r_family;  // (p, q) -> ell n1 + e - s_{p,q}
  std::vector<Int> gamma;                       // sorted generating set
  NumericalSemigroup semigroup;
};

struct GcdValidity {
  bool valid = false;
  Int gcd = 0;
};

/// gcd(e, n1, n2) for the given ell. Throws EllTooSmall for ell < 4.
GcdValidity gcd_validity(int ell);

/// Throws EllTooSmall (ell < 4) or ExcludedEll (ell in {14+22k, 35+46k}).
ConstructionData construct_asd(int ell);

struct Claim {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
};

struct Certificate {
  int ell = 0;
  std::vector<Claim> claims;

  bool all_pass() const;
  const Claim* find(const std::string& name) const;
};

/// Re-derives every structural claim about construct_asd(ell) by direct
/// computation. Failed claims are recorded, not thrown.
Certificate verify_construction(int ell);

}  // namespace numsg
