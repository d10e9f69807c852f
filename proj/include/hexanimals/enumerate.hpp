#pragma once

#include <hexanimals/big_int.hpp>
#include <hexanimals/rational_function.hpp>
#include <hexanimals/transfer_grammar.hpp>

#include <cstddef>
#include <vector>

namespace hexanimals {

/// terms[i] counts animals (paths) of weight i + 1.
using Series = std::vector<BigInt>;

/// Generating function in z; the constant term of the numerator is zero.
using GfResult = RatFn;

/// Path counts by total vertex weight 1..max_weight, by forward dynamic
/// programming over weight layers. Throws std::invalid_argument when a vertex
/// has weight below 1.
Series cmp_series(const Cmp& c, std::size_t max_weight);

/// How cmp_gf solves its linear system. Both are exact.
enum class GfMethod {
  /// Fraction-free for small systems, modular otherwise.
  automatic,
  /// Bareiss elimination over Z[z].
  fraction_free,
  /// Evaluation at points modulo word-size primes, rational reconstruction
  /// and Chinese remaindering until the integer coefficients stabilize.
  modular,
};

/// Weight enumerator of start-to-accept paths: solves
///   F_v = [v accepting] z^wt(v) + z^wt(v) * sum_u mult(v,u) F_u
/// and sums F_v over the start vertices. The system is first restricted to
/// vertices on start-to-accept paths and merged along forward_lumping.
GfResult cmp_gf(const Cmp& c, GfMethod method = GfMethod::automatic);

/// Counts translation classes of animals fitting a strip of `rows` square
/// rows, as W(rows) - W(rows-1) where W counts absolute placements.
Series strip_series(int rows, std::size_t terms, Lattice lattice);
GfResult strip_gf(int rows, Lattice lattice);

/// Animals whose embedding is exactly `rows` rows tall.
Series exact_strip_series(int rows, std::size_t terms, Lattice lattice);
GfResult exact_strip_gf(int rows, Lattice lattice);

/// All fixed hexanimals with 1..terms cells.
Series khaya(std::size_t terms);

/// Column-constrained animals under board bounds given in native cells.
Series free_series(const BoardBounds& bounds, std::size_t terms, Lattice lattice);
GfResult free_gf(const BoardBounds& bounds, Lattice lattice);

Series operator-(const Series& a, const Series& b);

}  // namespace hexanimals
