#include <hexanimals/letter.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace hexanimals {

Letter::Letter(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].lo > intervals_[i].hi) {
      throw std::invalid_argument("interval " + to_string(intervals_[i]) + " has lo > hi");
    }
    if (i > 0 && intervals_[i].lo < intervals_[i - 1].hi + 2) {
      throw std::invalid_argument("intervals " + to_string(intervals_[i - 1]) + " and " +
                                  to_string(intervals_[i]) + " are not separated by an empty row");
    }
  }
}

int Letter::cell_count() const {
  int n = 0;
  for (const auto& iv : intervals_) n += iv.size();
  return n;
}

Letter Letter::shifted(int rows) const {
  Letter out = *this;
  for (auto& iv : out.intervals_) {
    iv.lo += rows;
    iv.hi += rows;
  }
  return out;
}

namespace {

// Depth-first over interval choices. `parity` pins the start parity once the
// first block is placed; `need` is an exact block count or -1.
void extend(std::vector<Interval>& prefix, int from, int hi, Lattice lattice, std::optional<int> parity,
            int need, std::vector<Letter>& out) {
  const int have = static_cast<int>(prefix.size());
  if (need < 0 || have == need) out.emplace_back(prefix);
  if (need >= 0 && have == need) return;
  for (int start = from; start <= hi; ++start) {
    if (parity && (start & 1) != *parity) continue;
    const int step = lattice == Lattice::hex ? 2 : 1;
    for (int end = start + step - 1; end <= hi; end += step) {
      prefix.push_back({start, end});
      extend(prefix, end + 2, hi, lattice, lattice == Lattice::hex ? std::optional<int>(start & 1) : parity,
             need, out);
      prefix.pop_back();
    }
  }
}

std::vector<Letter> generate(int lo, int hi, Lattice lattice, int need) {
  if (lo > hi) throw std::invalid_argument("letter row range has lo > hi");
  std::vector<Letter> out;
  std::vector<Interval> prefix;
  extend(prefix, lo, hi, lattice, std::nullopt, need, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Letter> gen_square_letters(int lo, int hi) { return generate(lo, hi, Lattice::square, -1); }

std::vector<Letter> gen_parity_letters(int lo, int hi) { return generate(lo, hi, Lattice::hex, -1); }

std::vector<Letter> gen_letters(int lo, int hi, Lattice lattice) { return generate(lo, hi, lattice, -1); }

std::vector<Letter> gen_letters_boarded(int lo, int hi, int blocks, Lattice lattice) {
  if (blocks < 1) throw std::invalid_argument("block count must be at least 1");
  return generate(lo, hi, lattice, blocks);
}

bool is_parity_letter(const Letter& l) {
  for (const auto& iv : l.intervals()) {
    if (iv.size() % 2 != 0) return false;
    if ((iv.lo & 1) != (l[0].lo & 1)) return false;
  }
  return true;
}

Parity parity_class(const Letter& l) {
  if (l.empty()) throw std::invalid_argument("the empty letter has no parity class");
  if (!is_parity_letter(l)) throw std::invalid_argument(to_string(l) + " is not a parity letter");
  return (l.min_row() & 1) == 0 ? Parity::even : Parity::odd;
}

int letter_weight(const Letter& l, Lattice lattice) {
  if (lattice == Lattice::square) return l.cell_count();
  if (!is_parity_letter(l)) throw std::invalid_argument(to_string(l) + " is not a parity letter");
  return l.cell_count() / 2;
}

int letter_span(const Letter& l, Lattice lattice) {
  if (l.empty()) throw std::invalid_argument("the empty letter has no span");
  const int rows = l.max_row() - l.min_row() + 1;
  if (lattice == Lattice::square) return rows;
  if (!is_parity_letter(l)) throw std::invalid_argument(to_string(l) + " is not a parity letter");
  return rows / 2;
}

std::string to_string(const Interval& i) {
  return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
}

std::string to_string(const Letter& l) {
  std::string out = "{";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += to_string(l[i]);
  }
  return out + "}";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse letter '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Letter parse_letter(std::string_view text) {
  Cursor in(text);
  in.expect('{');
  std::vector<Interval> ivs;
  if (!in.peek('}')) {
    do {
      in.expect('[');
      const int lo = in.integer();
      in.expect(',');
      const int hi = in.integer();
      in.expect(']');
      ivs.push_back({lo, hi});
    } while (in.peek(',') && (in.expect(','), true));
  }
  in.expect('}');
  if (!in.done()) in.fail("trailing characters");
  return Letter(std::move(ivs));
}

}  // namespace hexanimals
