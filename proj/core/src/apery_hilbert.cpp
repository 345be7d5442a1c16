#include "numsg/apery_hilbert.hpp"

#include <algorithm>
#include <string>

#include "numsg/detail/bitset.hpp"
#include "numsg/error.hpp"

namespace numsg {

namespace {

// Every element of order exactly h lies below c + (h + 1) e.
Int hilbert_bound(const NumericalSemigroup& s, int h_max) {
  return s.conductor() + (static_cast<Int>(h_max) + 2) * s.multiplicity();
}

void mark_stable(HilbertFunction& hf, Int e) {
  hf.stable_from.reset();
  for (std::size_t h = 0; h < hf.values.size(); ++h) {
    if (hf.values[h] == e) {
      hf.stable_from = static_cast<int>(h);
      return;
    }
  }
}

}  // namespace

std::vector<Int> AperyTable::stratum(int k) const {
  auto it = strata.find(k);
  return it == strata.end() ? std::vector<Int>{} : it->second;
}

int AperyTable::max_order() const { return strata.empty() ? 0 : strata.rbegin()->first; }

Int HilbertFunction::at(int h) const {
  if (h < 0) throw Error(ErrorCode::InvalidArgument, "negative Hilbert index");
  if (h <= h_max()) return values[static_cast<std::size_t>(h)];
  if (!stable()) {
    throw Error(ErrorCode::NotStabilized,
                "H(" + std::to_string(h) + ") requested beyond h_max without stabilization");
  }
  return values[static_cast<std::size_t>(*stable_from)];
}

std::vector<int> order_table(const NumericalSemigroup& s, Int bound) {
  const auto& gens = s.min_gens();
  std::vector<int> ord(static_cast<std::size_t>(bound) + 1, -1);
  ord[0] = 0;
  for (Int x = 1; x <= bound; ++x) {
    if (!s.contains(x)) continue;
    int best = -1;
    for (Int g : gens) {
      if (g > x) break;
      best = std::max(best, ord[static_cast<std::size_t>(x - g)]);
    }
    ord[static_cast<std::size_t>(x)] = best + 1;
  }
  return ord;
}

int element_order(const NumericalSemigroup& s, Int element) {
  if (!s.contains(element)) {
    throw Error(ErrorCode::NotMember, std::to_string(element) + " is not in the semigroup");
  }
  return order_table(s, element)[static_cast<std::size_t>(element)];
}

AperyTable apery_table(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  AperyTable table;
  for (Int x = 0; static_cast<Int>(table.elements.size()) < e; ++x) {
    if (s.contains(x) && !s.contains(x - e)) table.elements.push_back(x);
  }
  const auto ord = order_table(s, table.elements.back());
  for (Int a : table.elements) {
    const int k = ord[static_cast<std::size_t>(a)];
    table.orders[a] = k;
    if (k > 0) table.strata[k].push_back(a);
  }
  return table;
}

HilbertFunction hilbert_by_orders(const NumericalSemigroup& s, int h_max) {
  if (h_max < 1) throw Error(ErrorCode::InvalidArgument, "h_max must be at least 1");
  const auto ord = order_table(s, hilbert_bound(s, h_max));
  HilbertFunction hf;
  hf.values.assign(static_cast<std::size_t>(h_max) + 1, 0);
  for (int k : ord) {
    if (k >= 0 && k <= h_max) ++hf.values[static_cast<std::size_t>(k)];
  }
  mark_stable(hf, s.multiplicity());
  return hf;
}

HilbertFunction hilbert_by_sumsets(const NumericalSemigroup& s, int h_max) {
  if (h_max < 1) throw Error(ErrorCode::InvalidArgument, "h_max must be at least 1");
  const auto size = static_cast<std::size_t>(hilbert_bound(s, h_max)) + 1;
  detail::Bitset maximal(size);
  for (std::size_t x = 1; x < size; ++x) {
    if (s.contains(static_cast<Int>(x))) maximal.set(x);
  }
  std::vector<std::size_t> shifts;
  maximal.for_each_set([&](std::size_t m) { shifts.push_back(m); });

  HilbertFunction hf;
  hf.values.push_back(1);  // S \ M = {0}
  detail::Bitset level = maximal;  // hM
  for (int h = 1; h <= h_max; ++h) {
    detail::Bitset next(size);  // (h+1)M = hM + M
    for (std::size_t m : shifts) next.or_shifted(level, m);
    hf.values.push_back(static_cast<Int>(level.count_minus(next)));
    level = std::move(next);
  }
  mark_stable(hf, s.multiplicity());
  return hf;
}

HilbertFunction hilbert_function(const NumericalSemigroup& s, int h_max) {
  auto by_orders = hilbert_by_orders(s, h_max);
  const auto by_sumsets = hilbert_by_sumsets(s, h_max);
  ensure(by_orders == by_sumsets,
         "Hilbert function by order counting disagrees with the sumset computation");
  return by_orders;
}

HilbertFunction hilbert_until_stable(const NumericalSemigroup& s) {
  // The reduction number of a numerical semigroup is at most e - 1.
  const int cap = static_cast<int>(std::max<Int>(s.multiplicity(), 2));
  for (int h_max = std::min(8, cap);; h_max = std::min(2 * h_max, cap)) {
    auto hf = hilbert_function(s, h_max);
    if (hf.stable()) return hf;
    ensure(h_max < cap, "Hilbert function did not stabilize by level e");
  }
}

std::vector<int> decrease_levels(const HilbertFunction& hf) {
  if (!hf.stable()) {
    throw Error(ErrorCode::NotStabilized,
                "Hilbert function not computed through stabilization; raise h_max");
  }
  std::vector<int> levels;
  for (int h = 1; h <= *hf.stable_from; ++h) {
    if (hf.values[static_cast<std::size_t>(h - 1)] > hf.values[static_cast<std::size_t>(h)]) {
      levels.push_back(h);
    }
  }
  return levels;
}

LayerSets layer_sets(const NumericalSemigroup& s, int k_max) {
  if (k_max < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 2");
  const Int e = s.multiplicity();
  // D_k needs ord(s + e) for ord(s) = k - 1, i.e. up to c + (k_max + 1) e.
  const Int bound = s.conductor() + (static_cast<Int>(k_max) + 2) * e;
  const auto ord = order_table(s, bound);
  auto order_of = [&](Int x) { return x < 0 || x > bound ? -1 : ord[static_cast<std::size_t>(x)]; };

  LayerSets layers;
  layers.k_max = k_max;
  for (int k = 2; k <= k_max; ++k) {
    layers.c[k];
    layers.d[k];
  }
  for (Int x = 0; x <= bound; ++x) {
    const int k = order_of(x);
    if (k < 0) continue;
    // C_k: ord(x) = k and x - e not in (k-1)M.
    if (k >= 2 && k <= k_max && order_of(x - e) < k - 1) layers.c[k].push_back(x);
    // D_h with h = k + 1: ord(x) = h - 1 and ord(x + e) > h.
    const int h = k + 1;
    if (h >= 2 && h <= k_max) {
      const int t = order_of(x + e);
      if (t > h) {
        layers.d[h].push_back(x);
        layers.d_refined[h][t].push_back(x);
      }
    }
  }
  return layers;
}

}  // namespace numsg
