#include <hexanimals/oracle.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_set>

namespace hexanimals {

namespace {

using Key = std::string;

struct Search {
  Lattice lattice;
  int stride;  // packs a cell as x * stride + y into one byte

  Key pack(const std::vector<Square>& cells) const {
    Key k;
    k.reserve(cells.size());
    for (const auto& s : cells) k.push_back(static_cast<char>(s.x * stride + s.y));
    return k;
  }

  std::vector<Square> unpack(const Key& k) const {
    std::vector<Square> cells;
    cells.reserve(k.size());
    for (char ch : k) {
      const int v = static_cast<unsigned char>(ch);
      cells.push_back({v / stride, v % stride});
    }
    return cells;
  }

  std::array<Square, 6> neighbours(const Square& s, int& count) const {
    if (lattice == Lattice::square) {
      count = 4;
      return {Square{s.x + 1, s.y}, {s.x - 1, s.y}, {s.x, s.y + 1}, {s.x, s.y - 1}, {}, {}};
    }
    count = 6;
    return {Square{s.x, s.y + 2}, {s.x, s.y - 2}, {s.x + 1, s.y + 1},
            {s.x + 1, s.y - 1},   {s.x - 1, s.y + 1}, {s.x - 1, s.y - 1}};
  }
};

// Rows covered by a cell in the square picture, and rows per native cell.
int cell_rows(Lattice l) { return l == Lattice::hex ? 2 : 1; }

int height(const CanonicalAnimal& a) {
  int top = 0;
  for (const auto& s : a.cells) top = std::max(top, s.y + cell_rows(a.lattice));
  return top;
}

// Column x -> sorted y values.
std::map<int, std::vector<int>> columns(const CanonicalAnimal& a) {
  std::map<int, std::vector<int>> out;
  for (const auto& s : a.cells) out[s.x].push_back(s.y);
  for (auto& [x, ys] : out) std::sort(ys.begin(), ys.end());
  return out;
}

int max_bound(const BoardBounds& b) { return *std::max_element(b.bounds.begin(), b.bounds.end()); }

int span(const std::vector<int>& ys, Lattice l) { return (ys.back() - ys.front()) / cell_rows(l) + 1; }

// Holds for every sub-animal of an animal that satisfies the constraint.
bool passes_monotone(const CanonicalAnimal& a, const Constraint& c) {
  if (c.strip_rows && height(a) > *c.strip_rows) return false;
  if (c.board) {
    const int limit = max_bound(*c.board);
    for (const auto& [x, ys] : columns(a)) {
      if (span(ys, a.lattice) > limit) return false;
    }
  }
  return true;
}

bool passes(const CanonicalAnimal& a, const Constraint& c) {
  if (!passes_monotone(a, c)) return false;
  if (!c.board) return true;
  const auto& bounds = c.board->bounds;
  for (const auto& [x, ys] : columns(a)) {
    std::size_t blocks = 1;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      if (ys[i] - ys[i - 1] > cell_rows(a.lattice)) ++blocks;
    }
    if (blocks > bounds.size() || span(ys, a.lattice) > bounds[blocks - 1]) return false;
  }
  return true;
}

void check_query(int n, const Constraint& c) {
  if (n < 1) throw std::invalid_argument("cell count must be at least 1");
  const int limit = c.lattice == Lattice::hex ? kOracleHexLimit : kOracleSquareLimit;
  if (n > limit) {
    throw OutOfEnvelope("brute-force search supports at most " + std::to_string(limit) + " cells on this lattice, got " +
                        std::to_string(n));
  }
  if (c.strip_rows && c.board) throw std::invalid_argument("strip and board constraints cannot be combined");
  if (c.strip_rows && *c.strip_rows < 1) throw std::invalid_argument("strip height must be at least 1");
  if (c.board) {
    if (c.board->bounds.empty()) throw std::invalid_argument("board bounds must not be empty");
    for (int b : c.board->bounds) {
      if (b < 1) throw std::invalid_argument("board bounds must be at least 1");
    }
  }
}

std::vector<Key> grow(int n, const Constraint& c, const Search& search) {
  std::unordered_set<Key> level;
  const CanonicalAnimal seed = canonicalize(c.lattice, {Square{0, 0}});
  if (passes_monotone(seed, c)) level.insert(search.pack(seed.cells));
  for (int size = 1; size < n; ++size) {
    std::unordered_set<Key> next;
    for (const Key& k : level) {
      const auto cells = search.unpack(k);
      for (const auto& s : cells) {
        int count = 0;
        const auto around = search.neighbours(s, count);
        for (int i = 0; i < count; ++i) {
          if (std::find(cells.begin(), cells.end(), around[i]) != cells.end()) continue;
          auto grown = cells;
          grown.push_back(around[i]);
          const CanonicalAnimal a = canonicalize(c.lattice, std::move(grown));
          if (passes_monotone(a, c)) next.insert(search.pack(a.cells));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Key> out;
  for (const Key& k : level) {
    if (passes(CanonicalAnimal{c.lattice, search.unpack(k)}, c)) out.push_back(k);
  }
  return out;
}

Search make_search(int n, Lattice lattice) { return Search{lattice, lattice == Lattice::hex ? 2 * n : n}; }

}  // namespace

CanonicalAnimal canonicalize(Lattice lattice, std::vector<Square> cells) {
  if (!cells.empty()) {
    int min_x = cells.front().x;
    int min_y = cells.front().y;
    for (const auto& s : cells) {
      min_x = std::min(min_x, s.x);
      min_y = std::min(min_y, s.y);
    }
    for (auto& s : cells) s = {s.x - min_x, s.y - min_y};
  }
  std::sort(cells.begin(), cells.end());
  return {lattice, std::move(cells)};
}

HexAnimal to_hex_animal(const CanonicalAnimal& a) {
  if (a.lattice != Lattice::hex) throw std::invalid_argument("not a hexagonal animal");
  if (a.cells.empty()) throw std::invalid_argument("empty animal");
  const Square& first = a.cells.front();
  const int p = ((first.y - first.x) % 2 + 2) % 2;
  HexAnimal h{{}, p == 0 ? Parity::even : Parity::odd};
  for (const auto& s : a.cells) h.cells.push_back({s.x, (s.y - ((s.x + p) & 1)) / 2});
  std::sort(h.cells.begin(), h.cells.end());
  return h;
}

std::string to_string(const CanonicalAnimal& a) {
  if (a.lattice == Lattice::hex) return to_string(to_hex_animal(a));
  return to_string(CellSet{a.cells});
}

std::uint64_t oracle_count(int n, const Constraint& c) {
  check_query(n, c);
  return grow(n, c, make_search(n, c.lattice)).size();
}

std::vector<CanonicalAnimal> oracle_enumerate(int n, const Constraint& c) {
  check_query(n, c);
  const Search search = make_search(n, c.lattice);
  std::vector<CanonicalAnimal> out;
  for (const Key& k : grow(n, c, search)) out.push_back({c.lattice, search.unpack(k)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hexanimals
