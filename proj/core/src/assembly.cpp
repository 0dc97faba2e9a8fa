#include "csrbf/assembly.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "csrbf/errors.hpp"
#include "csrbf/grid.hpp"
#include "parallel.hpp"

namespace csrbf {

namespace {

struct RowEntries {
  std::vector<std::int32_t> cols;  // ascending (neighbors_within sorts)
  std::vector<double> vals;
};

}  // namespace

SaddleSystem assemble(const InterpolationProblem& problem, unsigned threads) {
  validate_problem(problem);
  const Index n = problem.size();
  const int l = problem.poly_terms();
  const double radius = problem.basis.support_radius;
  const GridIndex grid = build_grid(problem.sites, radius);

  std::vector<RowEntries> rows(static_cast<std::size_t>(n));
  // First duplicate pair found per row; reduced to the smallest afterwards
  // so the diagnostic does not depend on the thread partition.
  std::vector<std::int32_t> duplicate_of(static_cast<std::size_t>(n), -1);

  detail::parallel_chunks(static_cast<std::size_t>(n), threads,
                          [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Point& site = problem.sites[i];
      const auto neighbors = grid.neighbors_within(site, radius);
      auto& row = rows[i];
      row.cols.reserve(neighbors.size());
      row.vals.reserve(neighbors.size());
      for (const std::int32_t j : neighbors) {
        const double dist = distance(site, problem.sites[j]);
        if (j != static_cast<std::int32_t>(i) && dist < kDuplicateSiteTolerance &&
            duplicate_of[i] < 0)
          duplicate_of[i] = j;
        const double value = phi_eval(problem.basis, dist);
        if (std::abs(value) >= kSparseDropTolerance) {
          row.cols.push_back(j);
          row.vals.push_back(value);
        }
      }
    }
  });

  for (Index i = 0; i < n; ++i) {
    if (duplicate_of[i] >= 0) {
      const Index j = duplicate_of[i];
      const auto a = std::min<Index>(i, j);
      const auto b = std::max<Index>(i, j);
      throw degenerate_sites_error(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                   distance(problem.sites[a], problem.sites[b]));
    }
  }

  std::vector<std::size_t> ptr(static_cast<std::size_t>(n) + 1, 0);
  for (Index i = 0; i < n; ++i) ptr[i + 1] = ptr[i] + rows[i].cols.size();
  std::vector<std::int32_t> col(ptr.back());
  std::vector<double> val(ptr.back());
  for (Index i = 0; i < n; ++i) {
    std::copy(rows[i].cols.begin(), rows[i].cols.end(), col.begin() + ptr[i]);
    std::copy(rows[i].vals.begin(), rows[i].vals.end(), val.begin() + ptr[i]);
  }

  SaddleSystem system;
  system.phi = SparseMatrix(n, n, std::move(ptr), std::move(col), std::move(val));
  system.dim = problem.dim;
  system.poly = Matrix::Zero(n, l);
  for (Index i = 0; i < n; ++i) {
    system.poly(i, 0) = 1.0;
    for (int a = 0; a < problem.dim; ++a) system.poly(i, a + 1) = problem.sites[i][a];
  }
  system.rhs = Vector::Zero(n + l);
  system.rhs.head(n) = problem.values;
  return system;
}

Vector apply_saddle(const SaddleSystem& system, const Vector& x) {
  const Index n = system.n_sites();
  const Index l = system.n_poly();
  if (x.size() != n + l) throw std::invalid_argument("apply_saddle: dimension mismatch");
  Vector y(n + l);
  spmv_into(system.phi, x.data(), y.data());
  y.head(n).noalias() += system.poly * x.tail(l);
  y.tail(l).noalias() = system.poly.transpose() * x.head(n);
  return y;
}

Vector saddle_rhs(const SaddleSystem& system, const Vector& values) {
  if (values.size() != system.n_sites())
    throw std::invalid_argument("saddle_rhs: values size mismatch");
  Vector b = Vector::Zero(system.size());
  b.head(system.n_sites()) = values;
  return b;
}

LinearOperator saddle_operator(const SaddleSystem& system) {
  return [&system](const Vector& x) { return apply_saddle(system, x); };
}

}  // namespace csrbf
