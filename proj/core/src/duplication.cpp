#include "numsg/duplication.hpp"

#include <algorithm>
#include <string>

#include "numsg/construction.hpp"
#include "numsg/error.hpp"
#include "numsg/seeds.hpp"

namespace numsg {

NumericalSemigroup numerical_duplication(const NumericalSemigroup& s, const RelativeIdeal& e,
                                         Int b) {
  if (b % 2 == 0) throw Error(ErrorCode::EvenB, "b = " + std::to_string(b) + " is even");
  if (!s.contains(b)) {
    throw Error(ErrorCode::BNotInS, "b = " + std::to_string(b) + " is not in the semigroup");
  }
  if (!(e.ambient() == s)) {
    throw Error(ErrorCode::AmbientMismatch, "ideal is not over the given semigroup");
  }
  if (!shift(ideal_sum(e, e), b).is_subset_of(RelativeIdeal::whole(s))) {
    throw Error(ErrorCode::IdealSumViolation,
                "E + E + " + std::to_string(b) + " is not contained in S");
  }

  std::vector<Int> gens;
  for (Int n : s.min_gens()) gens.push_back(2 * n);
  for (Int m : ideal_minimal_generators(e)) gens.push_back(2 * m + b);
  auto dup = NumericalSemigroup::from_generators(gens);

  const Int limit =
      std::max({dup.conductor(), 2 * s.conductor(), 2 * e.threshold() + b}) + 1;
  for (Int x = 0; x <= limit; ++x) {
    const bool expected = x % 2 == 0 ? s.contains(x / 2) : e.contains((x - b) / 2);
    ensure(dup.contains(x) == expected,
           "duplication differs from 2*S u (2*E + b) at " + std::to_string(x));
  }
  return dup;
}

HilbertFunction predicted_duplication_hilbert(const HilbertFunction& hs, Int type_s, int h_max) {
  if (h_max < 1) throw Error(ErrorCode::InvalidArgument, "h_max must be at least 1");
  HilbertFunction out;
  out.values.push_back(1);
  out.values.push_back(hs.at(1) + type_s);
  for (int h = 2; h <= h_max; ++h) out.values.push_back(hs.at(h) + hs.at(h - 1));

  if (hs.stable() && h_max >= *hs.stable_from + 1) {
    const Int limit_value = 2 * hs.at(*hs.stable_from);
    int p = h_max;
    while (p > 0 && out.values[static_cast<std::size_t>(p - 1)] == limit_value) --p;
    out.stable_from = p;
  }
  return out;
}

bool prediction_applies(const NumericalSemigroup& s, const RelativeIdeal& e) {
  return e.is_proper() && e.min() > 0 && is_canonical_ideal(e) && is_almost_symmetric(s);
}

std::vector<NumericalSemigroup> duplication_chain(const NumericalSemigroup& s0, int steps,
                                                  const BRule& b_rule) {
  if (s0.is_trivial()) {
    throw Error(ErrorCode::TrivialSemigroup, "maximal-ideal chains need S != N");
  }
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "negative number of steps");
  std::vector<NumericalSemigroup> chain{s0};
  for (int i = 0; i < steps; ++i) {
    const auto& cur = chain.back();
    chain.push_back(numerical_duplication(cur, RelativeIdeal::maximal(cur), b_rule(cur)));
  }
  return chain;
}

bool is_excluded_level(Int level) {
  return (level >= 14 && (level - 14) % 22 == 0) || (level >= 35 && (level - 35) % 46 == 0);
}

namespace {

WitnessStep make_step(std::string kind, Int b, NumericalSemigroup s) {
  WitnessStep step{std::move(kind), b, s, type(s), hilbert_until_stable(s)};
  return step;
}

}  // namespace

WitnessReport gorenstein_witness(int level, Int drop) {
  if (level < 2) {
    throw Error(ErrorCode::LevelTooSmall, "level must be at least 2, got " + std::to_string(level));
  }
  if (is_excluded_level(level)) {
    throw Error(ErrorCode::ExcludedLevel,
                "level " + std::to_string(level) + " lies in {14+22k, 35+46k}");
  }
  if (drop < 1) throw Error(ErrorCode::InvalidArgument, "drop must be positive");

  WitnessReport report;
  report.level = level;
  report.drop_target = drop;

  NumericalSemigroup seed = [&] {
    if (level == 2) {
      report.seed = "level-2 seed (type 53, H = [1,54,52,50,54,64,68])";
      return seeds::level2_seed();
    }
    if (level == 3) {
      report.seed = "level-3 seed (H = [1,28,28,27,27,29,30,31,32])";
      return seeds::level3_seed();
    }
    report.seed = "construct_asd(" + std::to_string(level) + ")";
    return construct_asd(level).semigroup;
  }();
  report.chain.push_back(make_step("seed", 0, seed));
  const auto& h0 = report.chain.front().hilbert;
  const Int t0 = report.chain.front().type;
  ensure(is_almost_symmetric(seed), "witness seed is not almost symmetric");

  // Drop after i maximal-ideal duplications followed by the canonical one:
  //   level 2:  t_i - H_i(2) = 2^i (t - H(2) + 1) - 1
  //   level >= 3: H_i(h-2) - H_i(h) = 2^i (H(h-2) - H(h))
  Int unit = 0;
  if (level == 2) {
    unit = t0 - h0.at(2) + 1;
    report.seed_drop = t0 - h0.at(2);
  } else {
    unit = h0.at(level - 2) - h0.at(level);
    report.seed_drop = unit;
  }
  ensure(unit > 0, "seed Hilbert function does not drop as required");
  auto predicted_drop = [&](int i) { return level == 2 ? (unit << i) - 1 : unit << i; };
  int i0 = 0;
  while (predicted_drop(i0) <= drop) {
    ++i0;
    ensure(i0 < 48, "requested drop too large");
  }
  report.maximal_steps = i0;

  for (int i = 0; i < i0; ++i) {
    const auto& prev = report.chain.back();
    const Int b = smallest_odd_element(prev.semigroup);
    auto next = numerical_duplication(prev.semigroup, RelativeIdeal::maximal(prev.semigroup), b);
    report.chain.push_back(make_step("maximal", b, std::move(next)));
    const auto& cur = report.chain.back();
    ensure(cur.type == 2 * prev.type + 1, "maximal duplication did not map t to 2t + 1");
    for (int h = 1; h <= std::max(*prev.hilbert.stable_from, *cur.hilbert.stable_from); ++h) {
      ensure(cur.hilbert.at(h) == 2 * prev.hilbert.at(h),
             "maximal duplication did not double the Hilbert function");
    }
  }

  const auto& last = report.chain.back().semigroup;
  const auto canonical = shift(standard_canonical_ideal(last), last.frobenius() + 1);
  const Int b = smallest_odd_element(last);
  report.chain.push_back(make_step("canonical", b, numerical_duplication(last, canonical, b)));

  const auto& fin = report.chain.back();
  report.final_symmetric = is_symmetric(fin.semigroup);
  report.achieved_drop = fin.hilbert.at(level - 1) - fin.hilbert.at(level);
  ensure(report.final_symmetric, "witness output is not symmetric");
  ensure(report.achieved_drop > drop, "witness output does not drop by more than requested");
  ensure(report.achieved_drop == predicted_drop(i0), "witness drop differs from the prediction");
  return report;
}

}  // namespace numsg
