#include <hexanimals/enumerate.hpp>
#include <hexanimals/fraction_free.hpp>

#include "transfer_system.hpp"

#include <stdexcept>

namespace hexanimals {

namespace {

// Lumped systems up to this size go through Bareiss elimination.
constexpr std::size_t kFractionFreeLimit = 40;

}  // namespace

Series operator-(const Series& a, const Series& b) {
  if (a.size() != b.size()) throw std::invalid_argument("series lengths differ");
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Series cmp_series(const Cmp& c, std::size_t max_weight) {
  validate(c);
  for (int w : c.weights) {
    if (w < 1) throw std::invalid_argument("vertex weights must be at least 1");
  }
  const std::size_t n = c.size();
  // layer[v][j]: paths from a start vertex ending at v with weight j.
  std::vector<std::vector<BigInt>> layer(n, std::vector<BigInt>(max_weight + 1));
  for (auto s : c.start) {
    if (static_cast<std::size_t>(c.weights[s]) <= max_weight) layer[s][c.weights[s]] += 1;
  }
  std::vector<bool> accepting(n, false);
  for (auto a : c.accept) accepting[a] = true;

  Series out(max_weight);
  for (std::size_t j = 1; j <= max_weight; ++j) {
    for (std::size_t v = 0; v < n; ++v) {
      const BigInt& count = layer[v][j];
      if (count == 0) continue;
      if (accepting[v]) out[j - 1] += count;
      for (const auto& e : c.edges[v]) {
        const std::size_t next = j + static_cast<std::size_t>(c.weights[e.target]);
        if (next > max_weight) continue;
        if (e.multiplicity == 1) {
          layer[e.target][next] += count;
        } else {
          layer[e.target][next] += count * e.multiplicity;
        }
      }
    }
  }
  return out;
}

GfResult cmp_gf(const Cmp& raw, GfMethod method) {
  validate(raw);
  for (int w : raw.weights) {
    if (w < 1) throw std::invalid_argument("vertex weights must be at least 1");
  }
  const Cmp c = prune(raw);
  if (c.size() == 0 || c.start.empty()) return {};
  const auto sys = detail::lumped_system(c);
  if (method == GfMethod::automatic) {
    method = sys.size() <= kFractionFreeLimit ? GfMethod::fraction_free : GfMethod::modular;
  }
  try {
    return method == GfMethod::fraction_free ? detail::solve_fraction_free(sys) : detail::solve_modular(sys);
  } catch (const SingularSystem&) {
    throw std::logic_error("transfer system is singular; vertex weights must be positive");
  }
}

namespace {

Series strip_placements(int rows, std::size_t terms, Lattice lattice) {
  if (rows <= 0) return Series(terms);
  return cmp_series(build_strip_cmp({rows, lattice}, static_cast<int>(terms)), terms);
}

GfResult strip_placements_gf(int rows, Lattice lattice) {
  if (rows <= 0) return {};
  return cmp_gf(build_strip_cmp({rows, lattice}));
}

void require_rows(int rows) {
  if (rows < 1) throw std::invalid_argument("strip height must be at least 1 row");
}

}  // namespace

Series strip_series(int rows, std::size_t terms, Lattice lattice) {
  require_rows(rows);
  return strip_placements(rows, terms, lattice) - strip_placements(rows - 1, terms, lattice);
}

GfResult strip_gf(int rows, Lattice lattice) {
  require_rows(rows);
  return strip_placements_gf(rows, lattice) - strip_placements_gf(rows - 1, lattice);
}

Series exact_strip_series(int rows, std::size_t terms, Lattice lattice) {
  require_rows(rows);
  if (rows == 1) return strip_series(rows, terms, lattice);
  return strip_series(rows, terms, lattice) - strip_series(rows - 1, terms, lattice);
}

GfResult exact_strip_gf(int rows, Lattice lattice) {
  require_rows(rows);
  if (rows == 1) return strip_gf(rows, lattice);
  return strip_gf(rows, lattice) - strip_gf(rows - 1, lattice);
}

Series khaya(std::size_t terms) {
  if (terms < 1) throw std::invalid_argument("khaya needs at least one term");
  return strip_series(2 * static_cast<int>(terms), terms, Lattice::hex);
}

Series free_series(const BoardBounds& bounds, std::size_t terms, Lattice lattice) {
  return cmp_series(build_free_cmp(bounds, lattice, static_cast<int>(terms)), terms);
}

GfResult free_gf(const BoardBounds& bounds, Lattice lattice) { return cmp_gf(build_free_cmp(bounds, lattice)); }

}  // namespace hexanimals
