#include <hexanimals/transfer_grammar.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace hexanimals {

std::size_t TransferState::block_count() const {
  std::size_t n = 0;
  for (auto label : partition) n = std::max<std::size_t>(n, label + 1u);
  return n;
}

TransferState discrete_state(const Letter& l, int base) {
  TransferState s{l, std::vector<std::uint8_t>(l.size()), base};
  std::iota(s.partition.begin(), s.partition.end(), std::uint8_t{0});
  return s;
}

bool intervals_adjacent(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

bool step_parity_ok(const Letter& prev, const Letter& next) { return parity_class(prev) != parity_class(next); }

namespace {

constexpr std::size_t kMaxBlocks = 16;

// Union-find over old components [0, blocks) and new intervals
// [blocks, blocks + m), sized for the packed-partition limit.
class Components {
 public:
  explicit Components(std::size_t n) : n_(n) { std::iota(parent_.begin(), parent_.begin() + n, std::uint8_t{0}); }
  std::uint8_t find(std::uint8_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint8_t a, std::uint8_t b) { parent_[find(a)] = find(b); }

 private:
  std::size_t n_;
  std::array<std::uint8_t, 2 * kMaxBlocks> parent_{};
};

// Connectivity update for `next` shifted down by `offset` rows relative to
// the frame of `letter`. Writes the new restricted-growth partition.
bool step_into(const Letter& letter, const std::vector<std::uint8_t>& partition, const Letter& next, int offset,
               std::vector<std::uint8_t>& out) {
  std::size_t blocks = 0;
  for (auto label : partition) blocks = std::max<std::size_t>(blocks, label + 1u);
  const std::size_t m = next.size();
  if (blocks > kMaxBlocks || m > kMaxBlocks) throw std::length_error("letter has too many blocks");

  Components uf(blocks + m);
  std::array<bool, kMaxBlocks> touched{};
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < letter.size() && j < m) {
    const Interval& a = letter[i];
    const Interval b{next[j].lo + offset, next[j].hi + offset};
    if (intervals_adjacent(a, b)) {
      uf.unite(partition[i], static_cast<std::uint8_t>(blocks + j));
      touched[partition[i]] = true;
    }
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    if (!touched[b]) return false;
  }

  std::array<std::uint8_t, 2 * kMaxBlocks> label;
  label.fill(0xff);
  std::uint8_t next_label = 0;
  out.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::uint8_t root = uf.find(static_cast<std::uint8_t>(blocks + k));
    if (label[root] == 0xff) label[root] = next_label++;
    out[k] = label[root];
  }
  return true;
}

std::uint64_t pack(const std::vector<std::uint8_t>& partition) {
  std::uint64_t key = 0;
  for (auto label : partition) key = key << 4 | label;
  return key;
}

struct StateKey {
  std::uint32_t letter;
  std::uint64_t partition;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.partition * 0x9e3779b97f4a7c15ULL ^ k.letter);
  }
};

struct Successor {
  std::uint32_t letter;
  std::vector<std::uint8_t> partition;
  std::uint64_t multiplicity;
};

// Budgeted Dijkstra over (letter, partition) states. `successors` lists the
// legal transitions out of a state.
template <typename SuccessorFn>
Cmp explore(const std::vector<Letter>& letters, const std::vector<int>& weights, bool absolute_base,
            std::optional<int> budget, SuccessorFn&& successors) {
  struct Node {
    std::uint32_t letter;
    std::vector<std::uint8_t> partition;
    int dist;
    std::map<std::size_t, std::uint64_t> out;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
  using Entry = std::pair<int, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  auto intern = [&](std::uint32_t letter, const std::vector<std::uint8_t>& partition, int dist) {
    const StateKey key{letter, pack(partition)};
    auto [it, inserted] = index.try_emplace(key, nodes.size());
    if (inserted) {
      nodes.push_back({letter, partition, dist, {}});
      queue.emplace(dist, it->second);
    } else if (dist < nodes[it->second].dist) {
      nodes[it->second].dist = dist;
      queue.emplace(dist, it->second);
    }
    return it->second;
  };

  std::vector<std::size_t> starts;
  for (std::uint32_t l = 0; l < letters.size(); ++l) {
    if (budget && weights[l] > *budget) continue;
    starts.push_back(intern(l, discrete_state(letters[l]).partition, weights[l]));
  }

  std::vector<bool> expanded;
  std::vector<Successor> buffer;
  while (!queue.empty()) {
    const auto [dist, v] = queue.top();
    queue.pop();
    if (dist != nodes[v].dist) continue;
    if (expanded.size() < nodes.size()) expanded.resize(nodes.size(), false);
    if (expanded[v]) continue;
    expanded[v] = true;
    buffer.clear();
    successors(nodes[v].letter, nodes[v].partition, buffer);
    for (const auto& s : buffer) {
      const int d = dist + weights[s.letter];
      if (budget && d > *budget) continue;
      const std::size_t t = intern(s.letter, s.partition, d);
      nodes[v].out[t] += s.multiplicity;
    }
  }

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto state_of = [&](std::size_t id) {
    const Letter& l = letters[nodes[id].letter];
    return TransferState{l, nodes[id].partition, absolute_base ? l.min_row() : 0};
  };
  std::vector<TransferState> states;
  states.reserve(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) states.push_back(state_of(id));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return states[a] < states[b]; });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  Cmp c;
  c.states.resize(nodes.size());
  c.weights.resize(nodes.size());
  c.edges.resize(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const std::size_t r = rank[id];
    c.states[r] = std::move(states[id]);
    c.weights[r] = weights[nodes[id].letter];
    for (const auto& [t, mult] : nodes[id].out) c.edges[r].push_back({rank[t], mult});
    std::sort(c.edges[r].begin(), c.edges[r].end(),
              [](const CmpEdge& a, const CmpEdge& b) { return a.target < b.target; });
  }
  for (auto s : starts) c.start.push_back(rank[s]);
  std::sort(c.start.begin(), c.start.end());
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c.states[r].single_block()) c.accept.push_back(r);
  }
  return prune(c, budget);
}

}  // namespace

std::optional<TransferState> step(const TransferState& s, const Letter& next) {
  if (next.empty()) throw std::invalid_argument("cannot step to the empty letter");
  TransferState out{next, {}, next.min_row()};
  if (!step_into(s.letter, s.partition, next, 0, out.partition)) return std::nullopt;
  return out;
}

std::size_t Cmp::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.size();
  return n;
}

void validate(const Cmp& c) {
  const std::size_t n = c.size();
  if (c.edges.size() != n) throw std::invalid_argument("edge table size differs from vertex count");
  if (!c.states.empty() && c.states.size() != n) throw std::invalid_argument("state table size differs");
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < c.edges[v].size(); ++k) {
      const auto& e = c.edges[v][k];
      if (e.target >= n) throw std::invalid_argument("edge target out of range");
      if (e.multiplicity == 0) throw std::invalid_argument("edge multiplicity must be at least 1");
      if (k > 0 && c.edges[v][k - 1].target >= e.target) throw std::invalid_argument("edge list not sorted");
    }
  }
  for (auto v : c.start) {
    if (v >= n) throw std::invalid_argument("start vertex out of range");
  }
  for (auto v : c.accept) {
    if (v >= n) throw std::invalid_argument("accept vertex out of range");
  }
}

Cmp prune(const Cmp& c, std::optional<int> weight_budget) {
  const std::size_t n = c.size();
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  using Entry = std::pair<long, std::size_t>;

  auto shortest = [&](const std::vector<std::size_t>& sources, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<long> dist(n, kInf);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (auto s : sources) {
      if (c.weights[s] < dist[s]) {
        dist[s] = c.weights[s];
        queue.emplace(dist[s], s);
      }
    }
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d != dist[v]) continue;
      for (auto u : adj[v]) {
        const long nd = d + c.weights[u];
        if (nd < dist[u]) {
          dist[u] = nd;
          queue.emplace(nd, u);
        }
      }
    }
    return dist;
  };

  std::vector<std::vector<std::size_t>> forward(n), backward(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : c.edges[v]) {
      forward[v].push_back(e.target);
      backward[e.target].push_back(v);
    }
  }
  const auto from_start = shortest(c.start, forward);
  const auto to_accept = shortest(c.accept, backward);

  std::vector<std::size_t> rank(n, n);
  Cmp out;
  for (std::size_t v = 0; v < n; ++v) {
    if (from_start[v] >= kInf || to_accept[v] >= kInf) continue;
    if (weight_budget && from_start[v] + to_accept[v] - c.weights[v] > *weight_budget) continue;
    rank[v] = out.weights.size();
    out.weights.push_back(c.weights[v]);
    if (!c.states.empty()) out.states.push_back(c.states[v]);
  }
  out.edges.resize(out.weights.size());
  for (std::size_t v = 0; v < n; ++v) {
    if (rank[v] == n) continue;
    for (const auto& e : c.edges[v]) {
      if (rank[e.target] != n) out.edges[rank[v]].push_back({rank[e.target], e.multiplicity});
    }
  }
  for (auto v : c.start) {
    if (rank[v] != n) out.start.push_back(rank[v]);
  }
  for (auto v : c.accept) {
    if (rank[v] != n) out.accept.push_back(rank[v]);
  }
  return out;
}

std::vector<std::size_t> forward_lumping(const Cmp& c) {
  const std::size_t n = c.size();
  std::vector<bool> accepting(n, false);
  for (auto a : c.accept) accepting[a] = true;

  std::vector<std::size_t> cls(n);
  std::size_t count = 0;
  {
    std::map<std::pair<int, bool>, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) {
      cls[v] = ids.try_emplace({c.weights[v], accepting[v]}, ids.size()).first->second;
    }
    count = ids.size();
  }
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::uint64_t>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::map<std::size_t, std::uint64_t> row;
      for (const auto& e : c.edges[v]) row[cls[e.target]] += e.multiplicity;
      Signature sig{cls[v], {row.begin(), row.end()}};
      next[v] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return cls;
}

Cmp build_strip_cmp(const StripSpec& spec, std::optional<int> weight_budget) {
  if (spec.rows < 1) throw std::invalid_argument("strip height must be at least 1 row");
  std::vector<Letter> letters = gen_letters(0, spec.rows - 1, spec.lattice);
  letters.erase(letters.begin());  // the empty letter sorts first
  std::vector<int> weights;
  std::vector<int> parity;
  for (const auto& l : letters) {
    weights.push_back(letter_weight(l, spec.lattice));
    parity.push_back(l.min_row() & 1);
  }
  const bool hex = spec.lattice == Lattice::hex;

  std::vector<std::uint8_t> scratch;
  return explore(letters, weights, true, weight_budget,
                 [&](std::uint32_t from, const std::vector<std::uint8_t>& partition, std::vector<Successor>& out) {
                   for (std::uint32_t to = 0; to < letters.size(); ++to) {
                     if (hex && parity[to] == parity[from]) continue;
                     if (step_into(letters[from], partition, letters[to], 0, scratch)) {
                       out.push_back({to, scratch, 1});
                     }
                   }
                 });
}

Cmp build_free_cmp(const BoardBounds& bounds, Lattice lattice, std::optional<int> weight_budget) {
  if (bounds.bounds.empty()) throw std::invalid_argument("board bounds must not be empty");
  const int scale = lattice == Lattice::hex ? 2 : 1;
  std::vector<Letter> letters;
  for (std::size_t k = 1; k <= bounds.bounds.size(); ++k) {
    const int span = bounds.bounds[k - 1];
    if (span < 1) throw std::invalid_argument("board bounds must be at least 1");
    for (auto& l : gen_letters_boarded(0, scale * span - 1, static_cast<int>(k), lattice)) {
      if (l.min_row() == 0) letters.push_back(std::move(l));
    }
  }
  std::sort(letters.begin(), letters.end());
  std::vector<int> weights;
  for (const auto& l : letters) weights.push_back(letter_weight(l, lattice));
  const int offset_step = lattice == Lattice::hex ? 2 : 1;

  std::vector<std::uint8_t> scratch;
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::size_t> slot;
  return explore(letters, weights, false, weight_budget,
                 [&](std::uint32_t from, const std::vector<std::uint8_t>& partition, std::vector<Successor>& out) {
                   slot.clear();
                   const int top = letters[from].max_row();
                   for (std::uint32_t to = 0; to < letters.size(); ++to) {
                     const int height = letters[to].max_row();
                     // Hex: odd offsets only, the lowest one being -height or -height+1.
                     int first = -height;
                     if (lattice == Lattice::hex && (first & 1) == 0) ++first;
                     for (int d = first; d <= top; d += offset_step) {
                       if (!step_into(letters[from], partition, letters[to], d, scratch)) continue;
                       auto [it, inserted] = slot.try_emplace({to, pack(scratch)}, out.size());
                       if (inserted) {
                         out.push_back({to, scratch, 1});
                       } else {
                         ++out[it->second].multiplicity;
                       }
                     }
                   }
                 });
}

}  // namespace hexanimals
