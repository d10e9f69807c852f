#include "support.hpp"

#include <hexanimals/enumerate.hpp>
#include <hexanimals/oracle.hpp>
#include <hexanimals/transfer_grammar.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

using namespace hexanimals;

namespace {

bool restricted_growth(const std::vector<std::uint8_t>& p) {
  int next = 0;
  for (auto label : p) {
    if (label > next) return false;
    if (label == next) ++next;
  }
  return true;
}

std::vector<bool> reachable(std::size_t n, const std::vector<std::size_t>& from,
                            const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  for (auto v : from) {
    seen[v] = true;
    todo.push(v);
  }
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (auto u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        todo.push(u);
      }
    }
  }
  return seen;
}

void check_well_formed(const Cmp& c) {
  validate(c);
  REQUIRE(c.states.size() == c.size());
  std::vector<std::vector<std::size_t>> fwd(c.size()), bwd(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    CHECK(restricted_growth(c.states[v].partition));
    CHECK(c.states[v].partition.size() == c.states[v].letter.size());
    for (const auto& e : c.edges[v]) {
      CHECK(e.multiplicity >= 1);
      fwd[v].push_back(e.target);
      bwd[e.target].push_back(v);
    }
  }
  for (auto v : c.start) CHECK(c.states[v].discrete());
  for (auto v : c.accept) CHECK(c.states[v].single_block());
  const auto from_start = reachable(c.size(), c.start, fwd);
  const auto to_accept = reachable(c.size(), c.accept, bwd);
  for (std::size_t v = 0; v < c.size(); ++v) {
    CHECK(from_start[v]);
    CHECK(to_accept[v]);
  }
}

// Free-mode counts with one path per vertical offset, without aggregation.
class OffsetExplicit {
 public:
  OffsetExplicit(const BoardBounds& b, Lattice lattice) : lattice_(lattice) {
    const int cell_rows = lattice == Lattice::hex ? 2 : 1;
    const int top = *std::max_element(b.bounds.begin(), b.bounds.end()) * cell_rows - 1;
    for (const auto& l : gen_letters(0, top, lattice)) {
      if (l.empty() || l.min_row() != 0 || l.size() > b.bounds.size()) continue;
      if (letter_span(l, lattice) <= b.bounds[l.size() - 1]) alphabet_.push_back(l);
    }
  }

  Series series(int terms) {
    Series out(static_cast<std::size_t>(terms));
    for (const auto& l : alphabet_) {
      const TransferState s = discrete_state(l);
      const int w = letter_weight(l, lattice_);
      for (int n = w; n <= terms; ++n) out[static_cast<std::size_t>(n - 1)] += paths(s, n - w);
    }
    return out;
  }

 private:
  BigInt paths(const TransferState& s, int remaining) {
    const auto key = std::make_tuple(s.letter, s.partition, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = (remaining == 0 && s.single_block()) ? 1 : 0;
    for (const auto& next : alphabet_) {
      const int w = letter_weight(next, lattice_);
      if (w > remaining) continue;
      for (int d = -12; d <= 12; ++d) {
        if (lattice_ == Lattice::hex && (d & 1) == 0) continue;
        auto stepped = step(s, next.shifted(d));
        if (!stepped) continue;
        total += paths(TransferState{next, stepped->partition, 0}, remaining - w);
      }
    }
    memo_.emplace(key, total);
    return total;
  }

  Lattice lattice_;
  std::vector<Letter> alphabet_;
  std::map<std::tuple<Letter, std::vector<std::uint8_t>, int>, BigInt> memo_;
};

struct Cell {
  int x, y;
  auto operator<=>(const Cell&) const = default;
};

// Union-find over the cells of a word; returns the component id of each cell.
std::map<Cell, int> components(const std::vector<Letter>& word) {
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < word.size(); ++x) {
    for (const auto& iv : word[x].intervals()) {
      for (int y = iv.lo; y <= iv.hi; ++y) cells.push_back({static_cast<int>(x), y});
    }
  }
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<Cell, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Cell n : {Cell{cells[i].x + 1, cells[i].y}, Cell{cells[i].x, cells[i].y + 1}}) {
      if (auto it = index.find(n); it != index.end()) parent[find(static_cast<int>(i))] = find(it->second);
    }
  }
  std::map<Cell, int> out;
  for (std::size_t i = 0; i < cells.size(); ++i) out[cells[i]] = find(static_cast<int>(i));
  return out;
}

}  // namespace

TEST_CASE("intervals_adjacent") {
  CHECK(intervals_adjacent({0, 1}, {1, 2}));
  CHECK_FALSE(intervals_adjacent({0, 1}, {2, 3}));
  CHECK(intervals_adjacent({0, 5}, {2, 3}));
}

TEST_CASE("step") {
  const TransferState two{test::letter("{[0,0],[2,2]}"), {0, 1}, 0};
  const auto bridged = step(two, test::letter("{[0,2]}"));
  REQUIRE(bridged);
  CHECK(bridged->letter == test::letter("{[0,2]}"));
  CHECK(bridged->partition == std::vector<std::uint8_t>{0});

  CHECK_FALSE(step(two, test::letter("{[0,0]}")));

  const auto split = step(discrete_state(test::letter("{[0,5]}")), test::letter("{[0,1],[4,5]}"));
  REQUIRE(split);
  CHECK(split->partition == std::vector<std::uint8_t>{0, 0});

  const auto apart = step(discrete_state(test::letter("{[0,0],[4,4]}")), test::letter("{[0,0],[2,2],[4,4]}"));
  REQUIRE(apart);
  CHECK(apart->partition == std::vector<std::uint8_t>{0, 1, 2});

  CHECK_THROWS_AS(step(two, Letter{}), std::invalid_argument);
}

TEST_CASE("step_parity_ok") {
  CHECK(step_parity_ok(test::letter("{[0,1]}"), test::letter("{[1,2]}")));
  CHECK_FALSE(step_parity_ok(test::letter("{[0,1]}"), test::letter("{[2,3]}")));
  CHECK(step_parity_ok(test::letter("{[1,2],[5,6]}"), test::letter("{[0,5]}")));
  CHECK_THROWS_AS(step_parity_ok(test::letter("{[0,0]}"), test::letter("{[1,2]}")), std::invalid_argument);
}

TEST_CASE("incremental stepping agrees with brute-force connectivity") {
  std::mt19937 rng(17);
  std::vector<Letter> alphabet;
  for (const auto& l : gen_square_letters(0, 5)) {
    if (!l.empty()) alphabet.push_back(l);
  }
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int valid_words = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Letter> word(2 + trial % 3);
    for (auto& l : word) l = alphabet[pick(rng)];

    std::optional<TransferState> s = discrete_state(word[0]);
    std::size_t last = 0;
    for (std::size_t i = 1; i < word.size() && s; ++i) {
      s = step(*s, word[i]);
      if (s) last = i;
    }

    // A prefix is extendable iff every component touches its last column.
    std::size_t brute_last = 0;
    for (std::size_t i = 1; i < word.size(); ++i) {
      const std::vector<Letter> prefix(word.begin(), word.begin() + static_cast<long>(i) + 1);
      const auto comp = components(prefix);
      std::set<int> all, touching;
      for (const auto& [cell, c] : comp) {
        all.insert(c);
        if (cell.x == static_cast<int>(i)) touching.insert(c);
      }
      if (all != touching) break;
      brute_last = i;
    }
    CHECK(last == brute_last);
    if (!s) continue;
    ++valid_words;

    const auto comp = components(word);
    const int x = static_cast<int>(word.size()) - 1;
    std::vector<std::uint8_t> expected;
    std::map<int, std::uint8_t> label;
    for (const auto& iv : word.back().intervals()) {
      const int c = comp.at({x, iv.lo});
      expected.push_back(label.try_emplace(c, static_cast<std::uint8_t>(label.size())).first->second);
    }
    CHECK(s->partition == expected);
  }
  CHECK(valid_words > 200);
}

TEST_CASE("strip grammars") {
  const Cmp one = build_strip_cmp({1, Lattice::hex});
  CHECK(one.size() == 0);

  const Cmp two = build_strip_cmp({2, Lattice::hex});
  REQUIRE(two.size() == 1);
  CHECK(two.states[0].letter == test::letter("{[0,1]}"));
  CHECK(two.start == std::vector<std::size_t>{0});
  CHECK(two.accept == std::vector<std::size_t>{0});
  CHECK(two.edge_count() == 0);

  for (int rows = 2; rows <= 8; ++rows) {
    const Cmp c = build_strip_cmp({rows, Lattice::hex});
    check_well_formed(c);
    for (std::size_t v = 0; v < c.size(); ++v) {
      for (const auto& e : c.edges[v]) {
        CHECK(step_parity_ok(c.states[v].letter, c.states[e.target].letter));
        CHECK(e.multiplicity == 1);
      }
    }
  }
  for (int rows = 1; rows <= 5; ++rows) check_well_formed(build_strip_cmp({rows, Lattice::square}));
}

TEST_CASE("square strip of height two matches the oracle") {
  const Series s = strip_series(2, 8, Lattice::square);
  for (int n = 1; n <= 8; ++n) CHECK(s[static_cast<std::size_t>(n - 1)] == oracle_count(n, {Lattice::square, 2, {}}));
}

TEST_CASE("construction is deterministic") {
  const Cmp a = build_strip_cmp({6, Lattice::hex});
  const Cmp b = build_strip_cmp({6, Lattice::hex});
  CHECK(a.states == b.states);
  CHECK(a.edges == b.edges);
  CHECK(std::is_sorted(a.states.begin(), a.states.end()));
  const Cmp f = build_free_cmp({{3, 2}}, Lattice::hex);
  CHECK(f.states == build_free_cmp({{3, 2}}, Lattice::hex).states);
}

TEST_CASE("free grammars") {
  CHECK(free_series({{1}}, 4, Lattice::square) == test::series({1, 1, 1, 1}));
  CHECK(free_series({{1}}, 5, Lattice::hex) == test::series({1, 2, 4, 8, 16}));
  const Cmp single = build_free_cmp({{1}}, Lattice::hex);
  REQUIRE(single.size() == 1);
  REQUIRE(single.edges[0].size() == 1);
  CHECK(single.edges[0][0].multiplicity == 2);

  for (Lattice lattice : {Lattice::square, Lattice::hex}) {
    for (const auto& bounds : {BoardBounds{{2}}, BoardBounds{{3}}, BoardBounds{{3, 3}}, BoardBounds{{2, 4}}}) {
      const Cmp c = build_free_cmp(bounds, lattice);
      check_well_formed(c);
      for (const auto& s : c.states) CHECK(s.letter.min_row() == 0);
    }
  }
}

TEST_CASE("offset aggregation matches an offset-explicit construction") {
  for (Lattice lattice : {Lattice::square, Lattice::hex}) {
    for (const auto& bounds : {BoardBounds{{1}}, BoardBounds{{2}}, BoardBounds{{3}}, BoardBounds{{2, 3}}}) {
      OffsetExplicit reference(bounds, lattice);
      CHECK(free_series(bounds, 6, lattice) == reference.series(6));
    }
  }
}

TEST_CASE("pruning and lumping") {
  const Cmp c = build_strip_cmp({10, Lattice::hex});
  const Cmp budgeted = prune(c, 4);
  CHECK(budgeted.size() < c.size());
  CHECK(cmp_series(budgeted, 4) == cmp_series(c, 4));
  CHECK(prune(c).size() == c.size());

  const auto cls = forward_lumping(c);
  REQUIRE(cls.size() == c.size());
  const std::size_t classes = *std::max_element(cls.begin(), cls.end()) + 1;
  CHECK(classes < c.size());
  std::vector<bool> accepting(c.size(), false);
  for (auto v : c.accept) accepting[v] = true;
  std::vector<std::optional<std::pair<int, bool>>> label(classes);
  std::vector<std::optional<std::map<std::size_t, std::uint64_t>>> signature(classes);
  for (std::size_t v = 0; v < c.size(); ++v) {
    std::map<std::size_t, std::uint64_t> into;
    for (const auto& e : c.edges[v]) into[cls[e.target]] += e.multiplicity;
    const std::pair<int, bool> mine{c.weights[v], accepting[v]};
    if (!label[cls[v]]) {
      label[cls[v]] = mine;
      signature[cls[v]] = into;
    }
    CHECK(*label[cls[v]] == mine);
    CHECK(*signature[cls[v]] == into);
  }
}
