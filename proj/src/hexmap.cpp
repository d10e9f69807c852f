#include <hexanimals/hexmap.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace hexanimals {

namespace {

int parity_bit(Parity p) { return p == Parity::even ? 0 : 1; }
int mod2(int v) { return ((v % 2) + 2) % 2; }

std::map<int, std::vector<int>> rows_by_column(const std::vector<Square>& cells) {
  std::map<int, std::vector<int>> out;
  for (const auto& s : cells) out[s.x].push_back(s.y);
  for (auto& [x, ys] : out) std::sort(ys.begin(), ys.end());
  return out;
}

std::vector<Interval> blocks_of(const std::vector<int>& sorted_rows) {
  std::vector<Interval> out;
  for (int y : sorted_rows) {
    if (!out.empty() && out.back().hi + 1 == y) {
      out.back().hi = y;
    } else if (out.empty() || out.back().hi != y) {
      out.push_back({y, y});
    }
  }
  return out;
}

CellSet canonical(std::vector<Square> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return CellSet{std::move(cells)};
}

// Pulls every "(a,b)" pair out of the text in order.
std::vector<std::pair<int, int>> parse_pairs(std::string_view text, std::string_view what) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse " + std::string(what) + ": " + why + " at offset " +
                                std::to_string(pos));
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    skip();
    int v = 0;
    const char* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos += static_cast<std::size_t>(ptr - first);
    return v;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  skip();
  const bool braced = pos < text.size() && text[pos] == '{';
  if (braced) ++pos;
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != '(') break;
    ++pos;
    const int a = number();
    expect(',');
    const int b = number();
    expect(')');
    out.emplace_back(a, b);
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (braced) expect('}');
  skip();
  if (pos != text.size()) fail("trailing characters");
  return out;
}

}  // namespace

std::string describe(ParityDefect d) {
  switch (d) {
    case ParityDefect::none: return "parity polyomino";
    case ParityDefect::empty: return "empty cell set";
    case ParityDefect::not_normalized: return "not normalized to min x = 0 and min y = 0";
    case ParityDefect::odd_block: return "block of odd size";
    case ParityDefect::mixed_column_parity: return "blocks in one column start on different parities";
    case ParityDefect::adjacent_column_parity: return "adjacent columns share a start parity";
    case ParityDefect::disconnected: return "disconnected";
  }
  return "unknown";
}

int embedding_row(const HexCell& c, Parity parity) { return 2 * c.j + mod2(c.x + parity_bit(parity)); }

bool hex_adjacent(const HexCell& a, const HexCell& b, Parity parity) {
  if (a.x == b.x) return std::abs(a.j - b.j) == 1;
  if (std::abs(a.x - b.x) != 1) return false;
  return std::abs(embedding_row(a, parity) - embedding_row(b, parity)) == 1;
}

HexAnimal normalize(std::vector<HexCell> cells, Parity parity) {
  if (cells.empty()) return {{}, parity};
  int min_x = cells.front().x;
  int min_y = embedding_row(cells.front(), parity);
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, embedding_row(c, parity));
  }
  std::vector<Square> squares;
  for (const auto& c : cells) squares.push_back({c.x - min_x, embedding_row(c, parity) - min_y});
  const int p = mod2(squares.front().y - squares.front().x);
  HexAnimal out{{}, p == 0 ? Parity::even : Parity::odd};
  for (const auto& s : squares) out.cells.push_back({s.x, (s.y - mod2(s.x + p)) / 2});
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

void validate(const HexAnimal& h) {
  if (h.cells.empty()) throw std::invalid_argument("hexanimal has no cells");
  std::set<HexCell> seen(h.cells.begin(), h.cells.end());
  if (seen.size() != h.cells.size()) throw std::invalid_argument("hexanimal has duplicate cells");
  int min_x = h.cells.front().x;
  int min_y = embedding_row(h.cells.front(), h.parity);
  for (const auto& c : h.cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, embedding_row(c, h.parity));
  }
  if (min_x != 0 || min_y != 0) throw std::invalid_argument("hexanimal is not normalized");
  std::set<HexCell> reached{h.cells.front()};
  std::queue<HexCell> todo;
  todo.push(h.cells.front());
  while (!todo.empty()) {
    const HexCell c = todo.front();
    todo.pop();
    for (const auto& d : seen) {
      if (!reached.contains(d) && hex_adjacent(c, d, h.parity)) {
        reached.insert(d);
        todo.push(d);
      }
    }
  }
  if (reached.size() != seen.size()) throw std::invalid_argument("hexanimal is not connected");
}

CellSet hex_to_parity(const HexAnimal& h) {
  validate(h);
  std::vector<Square> squares;
  for (const auto& c : h.cells) {
    const int y = embedding_row(c, h.parity);
    squares.push_back({c.x, y});
    squares.push_back({c.x, y + 1});
  }
  return canonical(std::move(squares));
}

bool connected(const CellSet& c) {
  if (c.cells.empty()) return true;
  std::set<Square> all(c.cells.begin(), c.cells.end());
  std::set<Square> reached{c.cells.front()};
  std::queue<Square> todo;
  todo.push(c.cells.front());
  while (!todo.empty()) {
    const Square s = todo.front();
    todo.pop();
    for (const Square n : {Square{s.x + 1, s.y}, Square{s.x - 1, s.y}, Square{s.x, s.y + 1}, Square{s.x, s.y - 1}}) {
      if (all.contains(n) && reached.insert(n).second) todo.push(n);
    }
  }
  return reached.size() == all.size();
}

ParityCheck is_parity_polyomino(const CellSet& input) {
  const CellSet c = canonical(input.cells);
  if (c.cells.empty()) return {false, ParityDefect::empty, -1};
  int min_x = c.cells.front().x;
  int min_y = c.cells.front().y;
  for (const auto& s : c.cells) {
    min_x = std::min(min_x, s.x);
    min_y = std::min(min_y, s.y);
  }
  if (min_x != 0 || min_y != 0) return {false, ParityDefect::not_normalized, -1};

  const auto columns = rows_by_column(c.cells);
  std::map<int, int> start_parity;
  for (const auto& [x, rows] : columns) {
    for (const auto& b : blocks_of(rows)) {
      if (b.size() % 2 != 0) return {false, ParityDefect::odd_block, x};
    }
  }
  for (const auto& [x, rows] : columns) {
    const auto blocks = blocks_of(rows);
    for (const auto& b : blocks) {
      if (mod2(b.lo) != mod2(blocks.front().lo)) return {false, ParityDefect::mixed_column_parity, x};
    }
    start_parity[x] = mod2(blocks.front().lo);
  }
  for (const auto& [x, parity] : start_parity) {
    auto next = start_parity.find(x + 1);
    if (next != start_parity.end() && next->second == parity) {
      return {false, ParityDefect::adjacent_column_parity, x + 1};
    }
  }
  if (!connected(c)) return {false, ParityDefect::disconnected, -1};
  return {true, ParityDefect::none, -1};
}

HexAnimal parity_to_hex(const CellSet& input) {
  const auto check = is_parity_polyomino(input);
  if (!check.ok) {
    std::string where = check.column >= 0 ? " (column " + std::to_string(check.column) + ")" : "";
    throw std::invalid_argument("not a parity polyomino: " + describe(check.defect) + where);
  }
  const CellSet c = canonical(input.cells);
  const auto columns = rows_by_column(c.cells);
  const int p = mod2(blocks_of(columns.at(0)).front().lo);
  HexAnimal out{{}, p == 0 ? Parity::even : Parity::odd};
  for (const auto& [x, rows] : columns) {
    for (const auto& b : blocks_of(rows)) {
      for (int y = b.lo; y < b.hi; y += 2) out.cells.push_back({x, (y - mod2(x + p)) / 2});
    }
  }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

Word encode_word(const CellSet& input) {
  const CellSet c = canonical(input.cells);
  if (c.cells.empty()) throw std::invalid_argument("cannot encode an empty cell set");
  const auto columns = rows_by_column(c.cells);
  int min_y = c.cells.front().y;
  for (const auto& s : c.cells) min_y = std::min(min_y, s.y);
  if (columns.begin()->first != 0 || min_y != 0) throw std::invalid_argument("cell set is not normalized");
  Word w;
  int expected = 0;
  for (const auto& [x, rows] : columns) {
    if (x != expected) throw std::invalid_argument("column " + std::to_string(expected) + " is empty");
    w.emplace_back(blocks_of(rows));
    ++expected;
  }
  return w;
}

CellSet decode_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cannot decode an empty word");
  std::vector<Square> squares;
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (w[x].empty()) throw std::invalid_argument("word contains the empty letter");
    for (const auto& iv : w[x].intervals()) {
      for (int y = iv.lo; y <= iv.hi; ++y) squares.push_back({static_cast<int>(x), y});
    }
  }
  return canonical(std::move(squares));
}

std::string to_string(const CellSet& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(c.cells[i].x) + "," + std::to_string(c.cells[i].y) + ")";
  }
  return out + "}";
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

std::string to_string(const HexAnimal& h) {
  std::string out = h.parity == Parity::even ? "parity=even {" : "parity=odd {";
  for (std::size_t i = 0; i < h.cells.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(h.cells[i].x) + "," + std::to_string(h.cells[i].j) + ")";
  }
  return out + "}";
}

CellSet parse_cell_set(std::string_view text) {
  std::vector<Square> squares;
  for (const auto& [x, y] : parse_pairs(text, "cell set")) squares.push_back({x, y});
  return canonical(std::move(squares));
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '{') throw std::invalid_argument("cannot parse word: expected '{' at offset " + std::to_string(pos));
    const std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("cannot parse word: unterminated letter");
    w.push_back(parse_letter(text.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  if (w.empty()) throw std::invalid_argument("cannot parse word: no letters");
  return w;
}

HexAnimal parse_hex_animal(std::string_view text) {
  Parity parity = Parity::even;
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  constexpr std::string_view key = "parity=";
  if (text.substr(pos, key.size()) == key) {
    pos += key.size();
    if (text.substr(pos, 4) == "even") {
      pos += 4;
    } else if (text.substr(pos, 3) == "odd") {
      parity = Parity::odd;
      pos += 3;
    } else {
      throw std::invalid_argument("cannot parse hexanimal: parity must be even or odd");
    }
  }
  std::vector<HexCell> cells;
  for (const auto& [x, j] : parse_pairs(text.substr(pos), "hexanimal")) cells.push_back({x, j});
  std::sort(cells.begin(), cells.end());
  HexAnimal h{std::move(cells), parity};
  validate(h);
  return h;
}

}  // namespace hexanimals
