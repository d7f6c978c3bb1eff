#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgrass/scalars.hpp"

namespace resgrass {

/// Sorted subset of hyperplane labels.
using IndexSet = std::vector<int>;

/// Integer normal vectors, one column per hyperplane (ℓ rows, n columns).
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A central arrangement of n distinct hyperplanes, described by its rank-2
/// flats (maximal sets of at least three hyperplanes through a common
/// codimension-2 subspace) and optionally by a realization.
struct Arrangement {
  std::string name;
  int n = 0;
  std::optional<IntMatrix> realization;
  std::vector<IndexSet> rank2_flats;

  /// Rank of the realization over `field`. Combinatorial input is read as a
  /// line arrangement: rank 2 for a single pencil, else min(n, 3).
  int rank(const PrimeField& field) const;

  /// Every 3-subset of every flat, sorted.
  std::vector<IndexSet> dependent_triples() const;
};

/// Column-reduced copy of the realization over `field`.
Matrix realization_matrix(const IntMatrix& m, const PrimeField& field);

/// Rank over `field` of the columns `cols` of `m`.
std::size_t column_rank(const IntMatrix& m, const IndexSet& cols, const PrimeField& field);

/// Maximal sets (size ≥ 3) of columns spanning a common 2-dimensional space.
/// Throws InputError on zero or proportional columns.
std::vector<IndexSet> rank2_flats_from_realization(const IntMatrix& m, const PrimeField& field);

/// Throws InputError unless flats are sorted, in range, of size ≥ 3 and
/// pairwise share at most one index; also checks flats against the realization.
void validate(const Arrangement& a, const PrimeField& field);

/// Parse the text (`matrix` / `flats n=N`) or JSON arrangement formats.
Arrangement load_arrangement(std::string_view source, const PrimeField& field,
                             std::string name = "input");
Arrangement load_arrangement_file(const std::string& path, const PrimeField& field);

/// All S with |S| ≤ max_size and rank(S) < |S|, sorted by size then lex.
/// Without a realization only max_size ≤ 3 is answerable.
std::vector<IndexSet> dependent_sets(const Arrangement& a, int max_size, const PrimeField& field);

/// "A3" (braid arrangement, with realization) or "Hessian" (lines of AG(2,3)).
Arrangement fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// All k-subsets of {0..n-1} in lex order.
std::vector<IndexSet> subsets(int n, int k);

}  // namespace resgrass
