#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbd/cycles.hpp"
#include "bbd/digraph.hpp"

namespace bbd {

// Theorems checked on individual instances:
//   T12  strong, every dominating pair has degrees (>= 2a-1, >= a+1)  => Hamiltonian
//   T13  a >= 4, strong, B_1                                         => Hamiltonian or ~ D(8)
//   T14  2a >= 8, strong, not a directed 2a-cycle, B_1                => even pancyclic or ~ D(8)
//   T15  2a >= 8, strong, B_0, has a (2a-2)-cycle                     => cycles of lengths 2..2a-2
//   T16  2a >= 10, strong, underlying graph not 2-connected, B_0      => (2a-2)-cycle or ~ D(10)
//   COR  2a >= 8, strong, not 2-connected, dominating-pair sums >= 4a-3 => lengths 2..2a-2 or ~ D(10)
enum class TheoremId { T12, T13, T14, T15, T16, COR };

std::string_view to_string(TheoremId id);
/// Accepts "t12".."t16", "cor" (any case). Throws std::invalid_argument otherwise.
TheoremId parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

struct TheoremVerdict {
  TheoremId theorem = TheoremId::T16;
  bool hypotheses_met = false;
  // Named reasons, e.g. "order_too_small", "b0_violated_by_pair(x2,x3)".
  std::vector<std::string> failed_hypotheses;
  // Empty when hypotheses are not met.
  std::optional<bool> conclusion_holds;
  std::optional<std::string> escape_clause;
  std::optional<CycleWitness> witness;
  std::optional<std::vector<int>> spectrum;
  std::optional<std::string> note;
  bool counterexample = false;
};

/// Failure name without its pair argument, e.g. "b0_violated_by_pair".
std::string hypothesis_kind(std::string_view failure);

TheoremVerdict verify(TheoremId id, const BipartiteDigraph& d);

TheoremVerdict verify_t12(const BipartiteDigraph& d);
TheoremVerdict verify_t13(const BipartiteDigraph& d);
TheoremVerdict verify_t14(const BipartiteDigraph& d);
TheoremVerdict verify_t15(const BipartiteDigraph& d);
TheoremVerdict verify_t16(const BipartiteDigraph& d);
TheoremVerdict verify_cor(const BipartiteDigraph& d);

}  // namespace bbd
