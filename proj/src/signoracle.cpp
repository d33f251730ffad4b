#include "arrcount/signoracle.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>

namespace arrcount::signoracle {

std::optional<IntVector> interior_point(std::span<const IntVector> rows, std::size_t dim) {
  const std::size_t k = rows.size();
  if (k == 0) return IntVector(dim);

  // Is 0 in the convex hull of the rows?  sum lambda_i r_i = 0, sum lambda_i = 1.
  // Phase one with one artificial per equation; the hull misses the origin
  // exactly when the phase-one optimum is positive, and the optimal duals
  // then give the separating direction.
  const std::size_t m = dim + 1;
  const std::size_t cols = k + m;
  const std::size_t rhs = cols;
  const std::size_t obj = m;

  std::vector<std::vector<Integer>> t(m + 1, std::vector<Integer>(cols + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].dim() != dim) throw Error(ErrorCode::InvalidArgument, "row dimension mismatch");
    Integer colsum = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      t[j][i] = rows[i][j];
      colsum += rows[i][j];
    }
    t[dim][i] = 1;
    t[obj][i] = -colsum;
  }
  for (std::size_t j = 0; j < m; ++j) t[j][k + j] = 1;
  t[dim][rhs] = 1;
  t[obj][rhs] = -1;

  std::vector<std::size_t> basic(m);
  for (std::size_t j = 0; j < m; ++j) basic[j] = k + j;
  Integer det = 1;
  Integer a, b;

  for (;;) {
    std::size_t s = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(t[obj][c]) < 0) {
        s = c;
        break;
      }
    }
    if (s == cols) break;

    std::size_t r = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][s]) <= 0) continue;
      if (r == m) {
        r = i;
        continue;
      }
      a = t[i][rhs] * t[r][s];
      b = t[r][rhs] * t[i][s];
      if (a < b || (a == b && basic[i] < basic[r])) r = i;
    }
    if (r == m) throw std::logic_error("phase-one simplex reported unbounded");

    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      const Integer factor = t[i][s];
      for (std::size_t c = 0; c <= cols; ++c) {
        t[i][c] *= t[r][s];
        if (factor != 0) t[i][c] -= factor * t[r][c];
        mpz_divexact(t[i][c].get_mpz_t(), t[i][c].get_mpz_t(), det.get_mpz_t());
      }
    }
    det = t[r][s];
    basic[r] = s;
  }

  if (t[obj][rhs] == 0) return std::nullopt;

  IntVector y(dim);
  for (std::size_t j = 0; j < dim; ++j) y[j] = t[obj][k + j] - det;
  y = primitive_scale(y);
  for (const auto& row : rows) {
    if (sgn(dot(row, y)) <= 0) throw std::logic_error("simplex witness fails a constraint");
  }
  return y;
}

bool sign_vector_feasible(std::span<const IntVector> covectors, const SignVector& sigma) {
  if (covectors.size() != sigma.size()) throw Error(ErrorCode::InvalidArgument, "sign vector length mismatch");
  if (covectors.size() > kMaxOracleHyperplanes) {
    throw Error(ErrorCode::TooLarge, std::to_string(covectors.size()) + " hyperplanes exceed the oracle guard");
  }
  if (covectors.empty()) return true;
  std::vector<IntVector> rows;
  rows.reserve(covectors.size());
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    if (sigma[i] != 1 && sigma[i] != -1) throw Error(ErrorCode::InvalidArgument, "sign entries must be +1 or -1");
    rows.push_back(sigma[i] > 0 ? covectors[i] : -covectors[i]);
  }
  return interior_point(rows, covectors[0].dim()).has_value();
}

bool sign_vector_feasible(const projarr::ProjArrangement& arr, const SignVector& sigma) {
  return sign_vector_feasible(std::span<const IntVector>(arr.covectors()), sigma);
}

namespace {

struct Node {
  SignVector signs;
  IntVector witness;
};

class Enumerator {
 public:
  Enumerator(std::span<const IntVector> fixed, std::span<const IntVector> hyperplanes, std::size_t dim)
      : hyperplanes_(hyperplanes), dim_(dim) {
    base_rows_.assign(fixed.begin(), fixed.end());
  }

  std::optional<IntVector> root_witness() const { return interior_point(base_rows_, dim_); }

  // Feasible children of a node, + first.
  std::vector<Node> children(const Node& node) const {
    std::vector<Node> out;
    const std::size_t depth = node.signs.size();
    const IntVector& h = hyperplanes_[depth];
    const int s = sgn(dot(h, node.witness));
    std::vector<IntVector> rows = rows_for(node.signs);
    for (int sign : {1, -1}) {
      rows.push_back(sign > 0 ? h : -h);
      std::optional<IntVector> w;
      if (s == sign) {
        w = node.witness;
      } else {
        w = interior_point(rows, dim_);
      }
      rows.pop_back();
      if (w) {
        Node child{node.signs, std::move(*w)};
        child.signs.push_back(static_cast<std::int8_t>(sign));
        out.push_back(std::move(child));
      }
    }
    return out;
  }

  void dfs(Node& node, std::vector<IntVector>& rows, std::vector<Cell>& out) const {
    const std::size_t depth = node.signs.size();
    if (depth == hyperplanes_.size()) {
      out.push_back(Cell{node.signs, node.witness});
      return;
    }
    const IntVector& h = hyperplanes_[depth];
    const int s = sgn(dot(h, node.witness));
    for (int sign : {1, -1}) {
      rows.push_back(sign > 0 ? h : -h);
      if (s == sign) {
        node.signs.push_back(static_cast<std::int8_t>(sign));
        dfs(node, rows, out);
        node.signs.pop_back();
      } else if (auto w = interior_point(rows, dim_)) {
        Node child{node.signs, std::move(*w)};
        child.signs.push_back(static_cast<std::int8_t>(sign));
        dfs(child, rows, out);
      }
      rows.pop_back();
    }
  }

  std::vector<IntVector> rows_for(const SignVector& signs) const {
    std::vector<IntVector> rows = base_rows_;
    for (std::size_t i = 0; i < signs.size(); ++i) rows.push_back(signs[i] > 0 ? hyperplanes_[i] : -hyperplanes_[i]);
    return rows;
  }

  std::size_t depth_limit() const { return hyperplanes_.size(); }

 private:
  std::vector<IntVector> base_rows_;
  std::span<const IntVector> hyperplanes_;
  std::size_t dim_;
};

}  // namespace

std::vector<Cell> enumerate_cells_serial(std::span<const IntVector> fixed, std::span<const IntVector> hyperplanes,
                                         std::size_t dim) {
  Enumerator e(fixed, hyperplanes, dim);
  std::vector<Cell> out;
  auto root = e.root_witness();
  if (!root) return out;
  Node node{{}, std::move(*root)};
  std::vector<IntVector> rows = e.rows_for({});
  e.dfs(node, rows, out);
  return out;
}

std::vector<Cell> enumerate_cells(std::span<const IntVector> fixed, std::span<const IntVector> hyperplanes,
                                  std::size_t dim) {
  const int threads = omp_get_max_threads();
  if (threads <= 1) return enumerate_cells_serial(fixed, hyperplanes, dim);

  Enumerator e(fixed, hyperplanes, dim);
  auto root = e.root_witness();
  if (!root) return {};
  std::vector<Node> frontier{Node{{}, std::move(*root)}};
  const std::size_t target = static_cast<std::size_t>(threads) * 8;
  std::size_t depth = 0;
  while (frontier.size() < target && depth < e.depth_limit()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (auto& c : e.children(node)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
    ++depth;
  }

  std::vector<std::vector<Cell>> parts(frontier.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    try {
      std::vector<IntVector> rows = e.rows_for(frontier[i].signs);
      e.dfs(frontier[i], rows, parts[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Cell> out;
  for (auto& p : parts) {
    for (auto& c : p) out.push_back(std::move(c));
  }
  return out;
}

namespace {

void check_guard(const projarr::ProjArrangement& arr) {
  if (arr.size() > kMaxOracleHyperplanes) {
    throw Error(ErrorCode::TooLarge, std::to_string(arr.size()) + " hyperplanes exceed the oracle guard of " +
                                         std::to_string(kMaxOracleHyperplanes));
  }
}

Integer halve(std::size_t feasible) {
  if (feasible % 2 != 0) throw std::logic_error("odd number of feasible sign vectors");
  return Integer(static_cast<unsigned long>(feasible / 2));
}

}  // namespace

Integer count_regions_oracle(const projarr::ProjArrangement& arr) {
  check_guard(arr);
  return halve(enumerate_cells({}, arr.covectors(), arr.ambient_dim()).size());
}

Integer count_regions_oracle_serial(const projarr::ProjArrangement& arr) {
  check_guard(arr);
  return halve(enumerate_cells_serial({}, arr.covectors(), arr.ambient_dim()).size());
}

std::vector<SignVector> feasible_sign_vectors(const projarr::ProjArrangement& arr) {
  check_guard(arr);
  std::vector<SignVector> out;
  for (auto& c : enumerate_cells({}, arr.covectors(), arr.ambient_dim())) out.push_back(std::move(c.signs));
  return out;
}

}  // namespace arrcount::signoracle
