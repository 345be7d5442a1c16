#pragma once

#include <map>
#include <optional>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// Apery set of S with respect to its multiplicity, stratified by order.
struct AperyTable {
  std::vector<Int> elements;           // sorted, 0 included, size e
  std::map<Int, int> orders;           // element -> ord(element)
  std::map<int, std::vector<Int>> strata;  // k -> Ap_k (k >= 1, nonempty only)

  /// Ap_k, empty when no element has order k.
  std::vector<Int> stratum(int k) const;
  /// Largest order of an Apery element.
  int max_order() const;
};

/// H(0), ..., H(h_max). `stable_from` is the least index h with H(h) = e; the
/// function is constant from there on.
struct HilbertFunction {
  std::vector<Int> values;
  std::optional<int> stable_from;

  bool stable() const noexcept { return stable_from.has_value(); }
  int h_max() const noexcept { return static_cast<int>(values.size()) - 1; }
  /// H(h) for any h >= 0; beyond h_max only when stable.
  Int at(int h) const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// C_k, D_k and D_k^t for 2 <= k <= k_max.
struct LayerSets {
  int k_max = 0;
  std::map<int, std::vector<Int>> c;
  std::map<int, std::vector<Int>> d;
  std::map<int, std::map<int, std::vector<Int>>> d_refined;  // k -> t -> D_k^t

  friend bool operator==(const LayerSets&, const LayerSets&) = default;
};

/// ord(s) for every s in [0, bound]; -1 marks non-members.
std::vector<int> order_table(const NumericalSemigroup& s, Int bound);

/// Maximal number of nonzero summands of S writing `element`.
/// Throws NotMember when element is not in S.
int element_order(const NumericalSemigroup& s, Int element);

AperyTable apery_table(const NumericalSemigroup& s);

/// Hilbert function through h_max. Computed by order counting and by explicit
/// sumsets hM \ (h+1)M; a disagreement throws InvariantViolation.
HilbertFunction hilbert_function(const NumericalSemigroup& s, int h_max);

/// Hilbert function with h_max grown until the stabilization marker is set.
HilbertFunction hilbert_until_stable(const NumericalSemigroup& s);

// The two routes used by hilbert_function, exposed for cross-checking.
HilbertFunction hilbert_by_orders(const NumericalSemigroup& s, int h_max);
HilbertFunction hilbert_by_sumsets(const NumericalSemigroup& s, int h_max);

/// Levels h with H(h-1) > H(h), ascending. Throws NotStabilized unless the
/// stabilization marker is set.
std::vector<int> decrease_levels(const HilbertFunction& hf);

LayerSets layer_sets(const NumericalSemigroup& s, int k_max);

}  // namespace numsg
