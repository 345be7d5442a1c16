#pragma once

#include <functional>
#include <string>
#include <vector>

#include "numsg/apery_hilbert.hpp"
#include "numsg/ideals.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// S join^b E = 2*S  union  2*E + b.
///
/// Requires b odd, b in S and E + E + b contained in S (the last is checked
/// even for proper E). Throws EvenB, BNotInS or IdealSumViolation.
NumericalSemigroup numerical_duplication(const NumericalSemigroup& s, const RelativeIdeal& e,
                                         Int b);

/// Hilbert function of a duplication by a proper canonical ideal of an almost
/// symmetric S: [1, H(1) + t, H(2) + H(1), ..., H(h) + H(h-1)]. No validity
/// checks; the caller decides whether the formula applies.
HilbertFunction predicted_duplication_hilbert(const HilbertFunction& hs, Int type_s, int h_max);

/// The hypotheses under which the prediction holds: S almost symmetric and E a
/// canonical ideal inside M(S). E = S (symmetric S, E = K) is excluded, it is
/// not a proper ideal of the ring.
bool prediction_applies(const NumericalSemigroup& s, const RelativeIdeal& e);

using BRule = std::function<Int(const NumericalSemigroup&)>;

/// S^(0) = s0, S^(i+1) = S^(i) join^{b_i} M(S^(i)) with b_i = b_rule(S^(i)).
/// Returns steps + 1 semigroups. Throws TrivialSemigroup when s0 = N.
std::vector<NumericalSemigroup> duplication_chain(const NumericalSemigroup& s0, int steps,
                                                  const BRule& b_rule = smallest_odd_element);

struct WitnessStep {
  std::string kind;  // "seed", "maximal", "canonical"
  Int b = 0;         // 0 for the seed
  NumericalSemigroup semigroup;
  Int type = 0;
  HilbertFunction hilbert;
};

struct WitnessReport {
  int level = 0;
  Int drop_target = 0;
  std::string seed;     // description of the starting semigroup
  Int seed_drop = 0;    // H(h-2) - H(h) of the seed (for h >= 3), or its analogue for h = 2
  int maximal_steps = 0;  // i_0
  std::vector<WitnessStep> chain;  // seed, maximal-ideal duplications, final canonical one
  bool final_symmetric = false;
  Int achieved_drop = 0;  // H(h-1) - H(h) of the final semigroup

  const WitnessStep& final_step() const { return chain.back(); }
};

/// Builds a symmetric semigroup whose Hilbert function drops at level `level`
/// by more than `drop`, and certifies it by direct computation.
/// Throws LevelTooSmall, ExcludedLevel or InvalidArgument (drop < 1).
WitnessReport gorenstein_witness(int level, Int drop);

/// True for levels in {14 + 22k, 35 + 46k}.
bool is_excluded_level(Int level);

}  // namespace numsg
