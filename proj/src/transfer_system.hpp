#pragma once

#include <hexanimals/rational_function.hpp>
#include <hexanimals/transfer_grammar.hpp>

#include <cstdint>
#include <vector>

namespace hexanimals::detail {

// F_v = [accepting] z^w(v) + z^w(v) sum_e mult(e) F_target(e); the answer is
// sum_v start_count(v) F_v.
struct TransferSystem {
  std::vector<int> weights;
  std::vector<std::vector<CmpEdge>> edges;
  std::vector<bool> accepting;
  std::vector<std::uint64_t> start_count;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
};

// Quotient of a pruned CMP by its forward lumping.
TransferSystem lumped_system(const Cmp& pruned);

RatFn solve_fraction_free(const TransferSystem& sys);
RatFn solve_modular(const TransferSystem& sys);

}  // namespace hexanimals::detail
