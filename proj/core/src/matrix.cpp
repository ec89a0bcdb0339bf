#include "mperron/matrix.hpp"

#include <algorithm>
#include <functional>

#include "mperron/errors.hpp"

namespace mperron {

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidInput("IntMatrix: rows must form a square matrix");
    std::size_t j = 0;
    for (long v : row) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v >= 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix product: size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

IntMatrix companion_matrix(unsigned n, const Integer& a, const Integer& p) {
  if (n < 2) throw InvalidInput("companion_matrix: n must be at least 2");
  if (a < 1) throw InvalidInput("companion_matrix: a must be at least 1");
  if (p < 2) throw InvalidInput("companion_matrix: p must be at least 2");
  IntMatrix m(n);
  m.at(0, n - 1) = p;
  for (unsigned i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  m.at(n - 1, n - 1) += a;
  return m;
}

IntPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix acc(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c[n - k + 1];
    const Integer t = (m * acc).trace();
    if (!mpz_divisible_ui_p(t.get_mpz_t(), k)) throw OracleViolation("Faddeev-LeVerrier trace not divisible");
    c[n - k] = -t / static_cast<unsigned long>(k);
  }
  return IntPoly(std::move(c));
}

IntMatrix permute_similar(const IntMatrix& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  if (perm.size() != n) throw InvalidInput("permute_similar: permutation size mismatch");
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw InvalidInput("permute_similar: not a permutation");
    seen[v] = true;
  }
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = m.at(perm[i], perm[j]);
  }
  return out;
}

DiGraph DiGraph::from_matrix(const IntMatrix& m) {
  DiGraph g;
  g.vertices = m.size();
  g.adjacency.resize(g.vertices);
  for (std::size_t i = 0; i < g.vertices; ++i) {
    for (std::size_t j = 0; j < g.vertices; ++j) {
      if (m.at(i, j) != 0) g.adjacency[i].push_back(j);
    }
  }
  return g;
}

bool DiGraph::has_edge(std::size_t i, std::size_t j) const {
  return std::binary_search(adjacency[i].begin(), adjacency[i].end(), j);
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const DiGraph& g) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(g.vertices, unvisited), low(g.vertices, 0);
  std::vector<bool> on_stack(g.vertices, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : g.adjacency[v]) {
      if (index[w] == unvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < g.vertices; ++v) {
    if (index[v] == unvisited) visit(v);
  }
  return components;
}

bool digraph_strongly_connected(const IntMatrix& m) {
  const DiGraph g = DiGraph::from_matrix(m);
  if (g.vertices == 0) return false;
  if (g.vertices == 1) return g.has_edge(0, 0);
  return strongly_connected_components(g).size() == 1;
}

bool matrix_irreducible(const IntMatrix& m) {
  if (!m.is_nonnegative()) throw InvalidInput("matrix_irreducible: entries must be nonnegative");
  return digraph_strongly_connected(m);
}

Real dominant_eigenvalue(const IntMatrix& m, const PowerIterationOptions& options) {
  if (!matrix_irreducible(m)) throw InvalidInput("dominant_eigenvalue: matrix is not irreducible");
  const std::size_t n = m.size();
  const auto prec = static_cast<mpfr_prec_t>(options.precision_bits);

  struct Entry {
    std::size_t row, col;
    Real value;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(i, j) != 0) entries.push_back({i, j, Real(m.at(i, j), prec)});
    }
  }

  std::vector<Real> x(n, Real(1.0, prec)), y(n, Real(prec));
  Real estimate(prec);
  Real previous(prec);
  const Real threshold(options.tolerance / 100.0, prec);
  unsigned calm = 0;
  for (unsigned iter = 0; iter < options.max_iterations; ++iter) {
    for (auto& v : y) mpfr_set_zero(v.get(), 1);
    for (const auto& e : entries) y[e.row] += e.value * x[e.col];
    // x has max-norm 1, so the max-norm of y estimates the eigenvalue.
    estimate = y[0];
    for (std::size_t i = 1; i < n; ++i) {
      if (y[i] > estimate) estimate = y[i];
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / estimate;
    if (iter > 0 && abs(estimate - previous) <= threshold * estimate) {
      if (++calm == 3) return estimate;
    } else {
      calm = 0;
    }
    previous = estimate;
  }
  throw NonConvergence("power iteration did not converge in " + std::to_string(options.max_iterations) +
                       " iterations");
}

}  // namespace mperron
