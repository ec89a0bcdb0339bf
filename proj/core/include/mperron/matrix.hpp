#pragma once

// Exact integer matrices, the family's companion matrix, digraph strong
// connectivity and Perron-Frobenius power iteration.

#include <cstddef>
#include <vector>

#include "mperron/integer.hpp"
#include "mperron/poly.hpp"
#include "mperron/real.hpp"

namespace mperron {

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Integer trace() const;
  bool is_nonnegative() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// p in the top-right corner, ones on the subdiagonal, a in the bottom-right.
/// Its characteristic polynomial is x^n - a x^(n-1) - p.
/// Throws InvalidInput unless n >= 2, a >= 1, p >= 2.
IntMatrix companion_matrix(unsigned n, const Integer& a, const Integer& p);

/// det(xI - M), exactly, by Faddeev-LeVerrier.
IntPoly characteristic_polynomial(const IntMatrix& m);

/// P M P^T for the permutation matrix with P(i, perm[i]) = 1, i.e.
/// entry (i, j) of the result is M(perm[i], perm[j]).
IntMatrix permute_similar(const IntMatrix& m, const std::vector<std::size_t>& perm);

struct DiGraph {
  std::size_t vertices = 0;
  // adjacency[i] lists j with an edge i -> j, increasing.
  std::vector<std::vector<std::size_t>> adjacency;

  // Edge (i, j) iff M(i, j) != 0.
  static DiGraph from_matrix(const IntMatrix& m);
  bool has_edge(std::size_t i, std::size_t j) const;
};

// Tarjan's algorithm; components in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const DiGraph& g);

/// Exactly one strongly connected component. A single vertex counts only
/// with a self-loop; the empty graph is not strongly connected.
bool digraph_strongly_connected(const IntMatrix& m);

/// Irreducibility of a nonnegative matrix (strong connectivity of its
/// digraph). Throws InvalidInput for a negative entry.
bool matrix_irreducible(const IntMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-10;
  unsigned max_iterations = 2'000'000;
  unsigned precision_bits = 128;
};

/// Perron root of a nonnegative irreducible matrix by power iteration from
/// the all-ones vector. Stops once the relative change of the estimate has
/// stayed below tolerance/100 for three consecutive steps.
/// Throws InvalidInput if M is not nonnegative irreducible and
/// NonConvergence at the iteration cap.
Real dominant_eigenvalue(const IntMatrix& m, const PowerIterationOptions& options = {});

}  // namespace mperron
