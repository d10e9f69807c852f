#pragma once

#include <hexanimals/letter.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hexanimals {

/// Hex cell addressed by column x and index j within the column.
struct HexCell {
  int x = 0;
  int j = 0;
  friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

/// Unit square with bottom-left corner (x, y).
struct Square {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

/// A hexanimal. In the square embedding, cell (x, j) covers rows y and y+1
/// of column x with y = 2j + ((x + p) mod 2), where p is 0 for even parity.
/// Normalized: min x = 0 and the embedding touches row 0.
struct HexAnimal {
  std::vector<HexCell> cells;  // sorted, unique
  Parity parity = Parity::even;
  friend bool operator==(const HexAnimal&, const HexAnimal&) = default;
};

/// Sorted unique unit squares.
struct CellSet {
  std::vector<Square> cells;
  friend bool operator==(const CellSet&, const CellSet&) = default;
};

/// Column letters x = 0, 1, 2, ...
using Word = std::vector<Letter>;

/// First violated parity-polyomino property, checked in declaration order.
enum class ParityDefect {
  none,
  empty,
  not_normalized,
  odd_block,
  mixed_column_parity,
  adjacent_column_parity,
  disconnected,
};

std::string describe(ParityDefect d);

struct ParityCheck {
  bool ok = false;
  ParityDefect defect = ParityDefect::none;
  /// Column where the defect shows, -1 when not column specific.
  int column = -1;
};

/// Row of the lower embedded square of a hex cell.
int embedding_row(const HexCell& c, Parity parity);

/// Edge adjacency on the hexagonal lattice under the column embedding.
bool hex_adjacent(const HexCell& a, const HexCell& b, Parity parity);

/// Throws std::invalid_argument unless h is nonempty, duplicate free,
/// connected and normalized.
void validate(const HexAnimal& h);

/// Sorts the cells and shifts to min x = 0 with the embedding on row 0,
/// adjusting the parity bit when the shift is odd.
HexAnimal normalize(std::vector<HexCell> cells, Parity parity);

CellSet hex_to_parity(const HexAnimal& h);

/// Throws std::invalid_argument naming the defect for non-parity input.
HexAnimal parity_to_hex(const CellSet& c);

ParityCheck is_parity_polyomino(const CellSet& c);

/// Column-wise maximal blocks. Throws std::invalid_argument for empty input,
/// input off the origin or an empty interior column.
Word encode_word(const CellSet& c);
CellSet decode_word(const Word& w);

/// "{(0,2),(0,3),...}".
std::string to_string(const CellSet& c);
/// "{[2,3]},{[1,2],[5,6]},..." as a comma-separated letter list.
std::string to_string(const Word& w);
/// "parity=even {(0,1),(1,0),...}" with (x,j) pairs.
std::string to_string(const HexAnimal& h);

CellSet parse_cell_set(std::string_view text);
Word parse_word(std::string_view text);
HexAnimal parse_hex_animal(std::string_view text);

/// Connectivity of unit squares under edge adjacency.
bool connected(const CellSet& c);

}  // namespace hexanimals
