#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hexanimals {

/// Square lattice, or the hexagonal lattice seen through its parity-polyomino
/// embedding (every hex cell occupies two vertically stacked unit squares).
enum class Lattice { square, hex };

enum class Parity { even, odd };

/// Contiguous block of rows lo..hi inclusive.
struct Interval {
  int lo = 0;
  int hi = 0;

  [[nodiscard]] int size() const { return hi - lo + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// One column cross-section: ascending maximal blocks separated by at least
/// one empty row. Ordered lexicographically on the interval sequence.
class Letter {
 public:
  Letter() = default;
  /// Throws std::invalid_argument unless the intervals are well formed,
  /// ascending and separated by a gap row.
  explicit Letter(std::vector<Interval> intervals);

  [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }
  [[nodiscard]] bool empty() const { return intervals_.empty(); }
  [[nodiscard]] std::size_t size() const { return intervals_.size(); }
  [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  [[nodiscard]] int min_row() const { return intervals_.front().lo; }
  [[nodiscard]] int max_row() const { return intervals_.back().hi; }
  [[nodiscard]] int cell_count() const;
  [[nodiscard]] Letter shifted(int rows) const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// All letters inside rows [lo, hi], the empty one included, sorted.
std::vector<Letter> gen_square_letters(int lo, int hi);

/// Letters inside rows [lo, hi] whose blocks all have even size and share the
/// parity of their start row (either parity), the empty one included, sorted.
std::vector<Letter> gen_parity_letters(int lo, int hi);

/// The members of the matching generator with exactly `blocks` intervals.
std::vector<Letter> gen_letters_boarded(int lo, int hi, int blocks, Lattice lattice);

/// Same as gen_square_letters / gen_parity_letters by lattice.
std::vector<Letter> gen_letters(int lo, int hi, Lattice lattice);

/// Even block sizes and one common start parity; the empty letter qualifies.
bool is_parity_letter(const Letter& l);

/// Common start parity; throws std::invalid_argument for an empty or
/// non-parity letter.
Parity parity_class(const Letter& l);

/// Cells in native units: unit squares, or hex cells (half the squares).
int letter_weight(const Letter& l, Lattice lattice);

/// Vertical extent including gap rows, in native units.
int letter_span(const Letter& l, Lattice lattice);

/// "{[a,b],[c,d]}".
std::string to_string(const Letter& l);
std::string to_string(const Interval& i);

/// Inverse of to_string; whitespace is ignored.
Letter parse_letter(std::string_view text);

}  // namespace hexanimals
