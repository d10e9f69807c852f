#pragma once

#include <hexanimals/hexmap.hpp>
#include <hexanimals/letter.hpp>
#include <hexanimals/transfer_grammar.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexanimals {

/// Largest cell counts the brute-force search accepts.
inline constexpr int kOracleHexLimit = 10;
inline constexpr int kOracleSquareLimit = 12;

/// Raised for cell counts outside the supported envelope.
class OutOfEnvelope : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// At most one of strip_rows and board may be set.
struct Constraint {
  Lattice lattice = Lattice::hex;
  /// Height bound in square rows; a hex cell occupies two rows.
  std::optional<int> strip_rows;
  /// Per-column bound on the span, in native cells, by block count.
  std::optional<BoardBounds> board;
};

/// Translation representative with min x = 0 and min y = 0. Square cells are
/// the unit squares themselves; a hex cell is stored as the lower of its two
/// embedded squares.
struct CanonicalAnimal {
  Lattice lattice = Lattice::square;
  std::vector<Square> cells;  // sorted
  friend auto operator<=>(const CanonicalAnimal&, const CanonicalAnimal&) = default;
};

/// Shifts to min x = min y = 0 and sorts.
CanonicalAnimal canonicalize(Lattice lattice, std::vector<Square> cells);

/// Throws std::invalid_argument for square input.
HexAnimal to_hex_animal(const CanonicalAnimal& a);

/// Hexmap text format: a cell set for square animals, a hexanimal otherwise.
std::string to_string(const CanonicalAnimal& a);

/// Throws std::invalid_argument for n < 1 or conflicting constraints and
/// OutOfEnvelope beyond the supported cell count.
std::uint64_t oracle_count(int n, const Constraint& c);

/// Sorted list of all translation classes counted by oracle_count.
std::vector<CanonicalAnimal> oracle_enumerate(int n, const Constraint& c);

}  // namespace hexanimals
