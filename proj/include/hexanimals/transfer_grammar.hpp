#pragma once

#include <hexanimals/letter.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hexanimals {

/// A column letter plus which of its blocks are already joined through the
/// columns scanned so far.
///
/// `partition[i]` is the block label of interval i in restricted-growth form:
/// labels appear in first-use order, so equal connectivity means equal
/// vectors.
struct TransferState {
  Letter letter;
  std::vector<std::uint8_t> partition;
  /// Lowest row of the letter in the ambient frame; 0 for base-normalized
  /// free-mode states.
  int base = 0;

  [[nodiscard]] std::size_t block_count() const;
  [[nodiscard]] bool single_block() const { return block_count() == 1; }
  [[nodiscard]] bool discrete() const { return block_count() == letter.size(); }

  friend auto operator<=>(const TransferState&, const TransferState&) = default;
  friend bool operator==(const TransferState&, const TransferState&) = default;
};

/// State for a first column: every interval its own component.
TransferState discrete_state(const Letter& l, int base = 0);

/// True iff the two blocks share at least one row.
bool intervals_adjacent(const Interval& a, const Interval& b);

/// Appends the column `next` (same row frame as `s.letter`). Returns nullopt
/// when some component of `s` touches no block of `next`, since that
/// component could never be reconnected.
std::optional<TransferState> step(const TransferState& s, const Letter& next);

/// Consecutive parity letters must start on different parities. Throws
/// std::invalid_argument for non-parity letters.
bool step_parity_ok(const Letter& prev, const Letter& next);

struct CmpEdge {
  std::size_t target = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const CmpEdge&, const CmpEdge&) = default;
};

/// Weighted directed multigraph with start and accept vertex sets.
///
/// `states` is filled for grammars built here and empty for graphs read from
/// a file. Edge lists are sorted by target and carry no duplicate targets.
struct Cmp {
  std::vector<TransferState> states;
  std::vector<int> weights;
  std::vector<std::vector<CmpEdge>> edges;
  std::vector<std::size_t> start;
  std::vector<std::size_t> accept;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
  [[nodiscard]] std::size_t edge_count() const;
};

/// Throws std::invalid_argument when sizes disagree, an index is out of
/// range, an edge multiplicity is zero or an edge list is unsorted.
void validate(const Cmp& c);

/// Keeps only vertices on some start-to-accept path whose cheapest such path
/// weighs at most `weight_budget` (when given), reindexing in the existing
/// vertex order.
Cmp prune(const Cmp& c, std::optional<int> weight_budget = std::nullopt);

/// Coarsest partition of the vertices in which every class has one weight,
/// one acceptance flag and, for every class, one total edge multiplicity into
/// it. Vertices in a class have equal path generating functions. Classes are
/// numbered by first vertex.
std::vector<std::size_t> forward_lumping(const Cmp& c);

struct StripSpec {
  /// Strip height in square rows.
  int rows = 1;
  Lattice lattice = Lattice::hex;
};

/// Entry j-1 bounds the span, in native cells, of a column with exactly j
/// blocks. Columns with more blocks than entries are forbidden.
struct BoardBounds {
  std::vector<int> bounds;
};

/// Grammar of animals placed absolutely inside rows [0, rows-1].
///
/// Vertices are ordered by TransferState. With a weight budget, vertices that
/// cannot lie on a path of total weight <= budget are left out; series up to
/// the budget are unaffected.
Cmp build_strip_cmp(const StripSpec& spec, std::optional<int> weight_budget = std::nullopt);

/// Multi-edge grammar of column-constrained animals with base-normalized
/// letters; each edge multiplicity counts the vertical offsets that lead to
/// the same successor state. In hex mode the bounds are doubled into square
/// rows and only odd offsets are legal.
Cmp build_free_cmp(const BoardBounds& bounds, Lattice lattice, std::optional<int> weight_budget = std::nullopt);

}  // namespace hexanimals
