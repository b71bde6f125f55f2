#include "rigidity/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "field.hpp"
#include "rigidity/error.hpp"
#include "rigidity/rank.hpp"

namespace rigidity {

const char* to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::kExactValue: return "ExactValue";
    case SearchKind::kUpperBoundOnly: return "UpperBoundOnly";
    case SearchKind::kBoundExceeded: return "BoundExceeded";
  }
  return "unknown";
}

const char* to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::kUnchanged: return "Unchanged";
    case SearchMethod::kSupportEnumeration: return "SupportEnumeration";
    case SearchMethod::kSignPatternScan: return "SignPatternScan";
    case SearchMethod::kAlternatingDescent: return "AlternatingDescent";
  }
  return "unknown";
}

using detail::Dense;
using detail::Field;

// ---------------------------------------------------------------------------
// Rank-one completion and exact r = 1 rigidity.

std::optional<Matrix> rank_one_completion(const Matrix& m, std::span<const Position> support) {
  if (m.domain().kind != ScalarKind::kInteger && m.domain().kind != ScalarKind::kRational) {
    throw Error(ErrorCode::kInvalidArgument, "rank-one completion needs integer or rational entries");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<bool> free(rows * cols, false);
  for (const auto& p : support) {
    if (p.row >= rows || p.col >= cols) throw Error(ErrorCode::kOutOfRange, "support position outside matrix");
    free[p.row * cols + p.col] = true;
  }
  std::vector<mpq_class> a;
  a.reserve(rows * cols);
  for (const auto& s : m.entries()) a.push_back(s.to_rational());

  // A row (column) is active when it has a nonzero constrained entry; its
  // factor must then be nonzero. Inactive factors are set to 0.
  std::vector<bool> active_row(rows, false);
  std::vector<bool> active_col(cols, false);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!free[i * cols + j] && sgn(a[i * cols + j]) != 0) {
        active_row[i] = true;
        active_col[j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!free[i * cols + j] && sgn(a[i * cols + j]) == 0 && active_row[i] && active_col[j]) {
        return std::nullopt;
      }
    }
  }

  // Propagate u_i v_j = a_ij over each connected component of the bipartite
  // graph of nonzero constrained entries.
  std::vector<std::optional<mpq_class>> u(rows);
  std::vector<std::optional<mpq_class>> v(cols);
  std::vector<std::size_t> stack;  // row i as i, column j as rows + j
  for (std::size_t root = 0; root < rows; ++root) {
    if (!active_row[root] || u[root]) continue;
    u[root] = mpq_class(1);
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      if (node < rows) {
        const std::size_t i = node;
        for (std::size_t j = 0; j < cols; ++j) {
          const mpq_class& x = a[i * cols + j];
          if (free[i * cols + j] || sgn(x) == 0) continue;
          const mpq_class want = x / *u[i];
          if (!v[j]) {
            v[j] = want;
            stack.push_back(rows + j);
          } else if (*v[j] != want) {
            return std::nullopt;
          }
        }
      } else {
        const std::size_t j = node - rows;
        for (std::size_t i = 0; i < rows; ++i) {
          const mpq_class& x = a[i * cols + j];
          if (free[i * cols + j] || sgn(x) == 0) continue;
          const mpq_class want = x / *v[j];
          if (!u[i]) {
            u[i] = want;
            stack.push_back(i);
          } else if (*u[i] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }

  std::vector<Scalar> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (u[i] && v[j]) {
        e.emplace_back(mpq_class(*u[i] * *v[j]));
      } else {
        e.emplace_back(mpq_class(0));
      }
    }
  }
  return Matrix(rows, cols, std::move(e), {ScalarKind::kRational, 0});
}

namespace {

// Positions where `x` differs from `m`, with x's values.
Perturbation difference(const Matrix& m, const Matrix& x) {
  std::vector<Change> changes;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(m.at(i, j) == x.at(i, j))) changes.push_back({i, j, x.at(i, j)});
    }
  }
  return Perturbation(std::move(changes));
}

void require_low_rank_witness(const Matrix& m, const Perturbation& w, std::size_t r) {
  const Matrix perturbed = apply_perturbation(m, w);
  const std::size_t rank = exact_rank(perturbed);
  if (rank > r || weight_diff(m, perturbed) != w.size()) {
    throw std::logic_error("search produced an invalid witness (rank " + std::to_string(rank) + ")");
  }
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SearchResult exact_rigidity_rank1(const Matrix& m, std::size_t max_weight) {
  constexpr std::size_t kMaxSide = 6;
  if (m.rows() > kMaxSide || m.cols() > kMaxSide) {
    throw Error(ErrorCode::kResourceLimit, "exact rigidity search is limited to 6x6 matrices");
  }
  const std::size_t cells = m.rows() * m.cols();
  if (max_weight > cells) {
    throw Error(ErrorCode::kInvalidArgument, "max weight exceeds the number of entries");
  }

  SearchResult result;
  result.target_rank = 1;
  result.method = SearchMethod::kSupportEnumeration;
  std::vector<Position> support;
  for (std::size_t w = 0; w <= max_weight; ++w) {
    result.supports_examined.push_back(0);
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      ++result.supports_examined[w];
      support.clear();
      for (auto k : idx) support.push_back({k / m.cols(), k % m.cols()});
      if (auto x = rank_one_completion(m, support)) {
        Perturbation witness = difference(m, *x);
        require_low_rank_witness(m, witness, 1);
        result.kind = SearchKind::kExactValue;
        result.weight = witness.size();
        result.witness = std::move(witness);
        if (result.weight != w) throw std::logic_error("completion left a support entry unchanged");
        return result;
      }
    } while (next_combination(idx, cells));
  }
  result.kind = SearchKind::kBoundExceeded;
  result.weight = max_weight + 1;
  return result;
}

// ---------------------------------------------------------------------------
// Heuristic upper bounds.

namespace {

template <typename F>
std::size_t count_disagreements(const Dense<F>& x, const Dense<F>& m, const Field<F>& field) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < m.a.size(); ++k) {
    if (!field.equal(x.a[k], m.a[k])) ++count;
  }
  return count;
}

template <typename F>
Dense<F> multiply(const Dense<F>& u, const Dense<F>& v, const Field<F>& field) {
  Dense<F> out{u.rows, v.cols, std::vector<F>(u.rows * v.cols, field.zero())};
  for (std::size_t i = 0; i < u.rows; ++i) {
    for (std::size_t k = 0; k < u.cols; ++k) {
      if (field.zero_test(u(i, k))) continue;
      for (std::size_t j = 0; j < v.cols; ++j) out(i, j) = out(i, j) + u(i, k) * v(k, j);
    }
  }
  return out;
}

template <typename F>
struct Factorization {
  Dense<F> u;  // rows x r
  Dense<F> v;  // r x cols
};

// U = M[:, J], V = M[I, J]^-1 M[I, :]; nullopt when M[I, J] is singular.
template <typename F>
std::optional<Factorization<F>> skeleton(const Dense<F>& m, const std::vector<std::size_t>& rows_idx,
                                         const std::vector<std::size_t>& cols_idx, const Field<F>& field) {
  const std::size_t r = rows_idx.size();
  Dense<F> aug{r, r + m.cols, {}};
  aug.a.reserve(r * (r + m.cols));
  for (auto i : rows_idx) {
    for (auto j : cols_idx) aug.a.push_back(m(i, j));
    for (std::size_t j = 0; j < m.cols; ++j) aug.a.push_back(m(i, j));
  }
  const auto pivots = detail::row_reduce(aug, field);
  if (pivots.size() < r || (r > 0 && pivots[r - 1] != r - 1)) return std::nullopt;
  Factorization<F> f{{m.rows, r, {}}, {r, m.cols, {}}};
  f.u.a.reserve(m.rows * r);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (auto j : cols_idx) f.u.a.push_back(m(i, j));
  }
  f.v.a.reserve(r * m.cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) f.v.a.push_back(aug(i, r + j));
  }
  return f;
}

std::vector<std::size_t> sample_distinct(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t pick = t + static_cast<std::size_t>(rng() % (n - t));
    std::swap(pool[t], pool[pick]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

template <typename F>
Dense<F> transpose(const Dense<F>& m) {
  Dense<F> t{m.cols, m.rows, {}};
  t.a.reserve(m.a.size());
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t i = 0; i < m.rows; ++i) t.a.push_back(m(i, j));
  }
  return t;
}

// Refits one row of U (or, on the transposed problem, one column of V) at a
// time: solve for the row that matches M exactly on r sampled columns and
// keep it if it agrees with M on more entries than before.
template <typename F>
bool refit_rows(const Dense<F>& m, Factorization<F>& f, std::size_t samples, std::mt19937_64& rng,
                const Field<F>& field) {
  const std::size_t r = f.v.rows;
  bool improved = false;
  for (std::size_t i = 0; i < m.rows; ++i) {
    auto agreement = [&](const std::vector<F>& row) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < m.cols; ++j) {
        F x = field.zero();
        for (std::size_t k = 0; k < r; ++k) x = x + row[k] * f.v(k, j);
        if (field.equal(x, m(i, j))) ++count;
      }
      return count;
    };
    std::vector<F> current(f.u.a.begin() + static_cast<std::ptrdiff_t>(i * r),
                           f.u.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * r));
    std::size_t best = agreement(current);
    for (std::size_t s = 0; s < samples && best < m.cols; ++s) {
      const auto cols_idx = sample_distinct(rng, m.cols, r);
      Dense<F> system{r, r, {}};
      system.a.reserve(r * r);
      std::vector<F> rhs;
      for (auto j : cols_idx) {
        for (std::size_t k = 0; k < r; ++k) system.a.push_back(f.v(k, j));
        rhs.push_back(m(i, j));
      }
      auto row = detail::solve_square(system, rhs, field);
      if (!row) continue;
      const std::size_t score = agreement(*row);
      if (score > best) {
        best = score;
        std::copy(row->begin(), row->end(), f.u.a.begin() + static_cast<std::ptrdiff_t>(i * r));
        improved = true;
      }
    }
  }
  return improved;
}

template <typename F>
void alternating_refine(const Dense<F>& m, Factorization<F>& f, std::size_t sweeps, std::size_t samples,
                        std::mt19937_64& rng, const Field<F>& field) {
  const Dense<F> mt = transpose(m);
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    bool improved = refit_rows(m, f, samples, rng, field);
    // Columns of V are rows of V^T in the factorization M^T ~ V^T U^T.
    Factorization<F> t{transpose(f.v), transpose(f.u)};
    improved = refit_rows(mt, t, samples, rng, field) || improved;
    f.u = transpose(t.v);
    f.v = transpose(t.u);
    if (!improved) break;
  }
}

// Reverts changed entries one at a time while the rank stays <= r. With
// rank(X) = r, X + d e_i e_j^T keeps rank <= r iff e_i is in the column space
// or e_j is in the row space of X, i.e. row i of the left null space or
// column j of the right null space vanishes.
template <typename F>
void prune(const Dense<F>& m, Dense<F>& x, std::size_t r, std::size_t budget, const Field<F>& field) {
  for (std::size_t step = 0; step < budget; ++step) {
    std::vector<bool> row_ok(m.rows, true);
    std::vector<bool> col_ok(m.cols, true);
    if (detail::rank_of(x, field) >= r) {
      for (const auto& z : detail::right_null_space(x, field)) {
        for (std::size_t j = 0; j < m.cols; ++j) {
          if (!field.zero_test(z[j])) col_ok[j] = false;
        }
      }
      for (const auto& y : detail::right_null_space(transpose(x), field)) {
        for (std::size_t i = 0; i < m.rows; ++i) {
          if (!field.zero_test(y[i])) row_ok[i] = false;
        }
      }
    }
    bool reverted = false;
    for (std::size_t i = 0; i < m.rows && !reverted; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (field.equal(x(i, j), m(i, j)) || !(row_ok[i] || col_ok[j])) continue;
        x(i, j) = m(i, j);
        reverted = true;
        break;
      }
    }
    if (!reverted) return;
  }
}

// Best rank-one sign pattern s t^T for a +1/-1 matrix: for each s with
// s_0 = +1, every t_j is chosen independently by majority.
std::optional<Dense<mpq_class>> sign_pattern_scan(const Dense<mpq_class>& m) {
  constexpr std::size_t kMaxRows = 16;
  if (m.rows > kMaxRows) return std::nullopt;
  std::vector<std::uint32_t> negative_mask(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m(i, j) == -1) {
        negative_mask[j] |= std::uint32_t{1} << i;
      } else if (m(i, j) != 1) {
        return std::nullopt;
      }
    }
  }
  const auto rows = static_cast<int>(m.rows);
  std::size_t best_score = 0;
  std::uint32_t best_s = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << (m.rows - 1)); ++s) {
    const std::uint32_t smask = s << 1;  // bit i set: s_i = -1; s_0 = +1
    std::size_t score = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const int agree_plus = rows - std::popcount(negative_mask[j] ^ smask);
      score += static_cast<std::size_t>(std::max(agree_plus, rows - agree_plus));
    }
    if (score > best_score) {
      best_score = score;
      best_s = smask;
    }
  }
  Dense<mpq_class> x{m.rows, m.cols, std::vector<mpq_class>(m.rows * m.cols)};
  for (std::size_t j = 0; j < m.cols; ++j) {
    const int agree_plus = rows - std::popcount(negative_mask[j] ^ best_s);
    const int t = 2 * agree_plus >= rows ? 1 : -1;
    for (std::size_t i = 0; i < m.rows; ++i) {
      const int s = (best_s >> i) & 1u ? -1 : 1;
      x(i, j) = s * t;
    }
  }
  return x;
}

template <typename F>
struct Best {
  Dense<F> x;
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  SearchMethod method = SearchMethod::kAlternatingDescent;
};

template <typename F>
Best<F> search_in_field(const Dense<F>& m, std::size_t r, const SearchOptions& options,
                        const Field<F>& field) {
  std::mt19937_64 rng(options.seed);
  Best<F> best;
  auto consider = [&](Dense<F> x, SearchMethod method) {
    const std::size_t w = count_disagreements(x, m, field);
    if (w < best.weight) best = {std::move(x), w, method};
  };

  if (r == 0) {
    consider(Dense<F>{m.rows, m.cols, std::vector<F>(m.a.size(), field.zero())},
             SearchMethod::kAlternatingDescent);
    return best;
  }

  if constexpr (std::is_same_v<F, mpq_class>) {
    if (r == 1) {
      if (auto x = sign_pattern_scan(m)) consider(std::move(*x), SearchMethod::kSignPatternScan);
    }
  }

  // Deterministic skeleton from the first independent columns and rows.
  std::optional<Factorization<F>> best_factors;
  std::size_t best_factor_weight = std::numeric_limits<std::size_t>::max();
  auto try_skeleton = [&](const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) {
    auto f = skeleton(m, ri, ci, field);
    if (!f) return;
    const std::size_t w = count_disagreements(multiply(f->u, f->v, field), m, field);
    if (w < best_factor_weight) {
      best_factor_weight = w;
      best_factors = std::move(f);
    }
  };
  {
    Dense<F> copy = m;
    auto cols_idx = detail::row_reduce(copy, field, /*reduced=*/false);
    cols_idx.resize(std::min(cols_idx.size(), r));
    Dense<F> sub{m.rows, cols_idx.size(), {}};
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (auto j : cols_idx) sub.a.push_back(m(i, j));
    }
    Dense<F> sub_t = transpose(sub);
    auto rows_idx = detail::row_reduce(sub_t, field, /*reduced=*/false);
    if (rows_idx.size() == cols_idx.size()) try_skeleton(rows_idx, cols_idx);
  }
  const std::size_t k = std::min({r, m.rows, m.cols});
  for (std::size_t draw = 0; draw < options.budget; ++draw) {
    const auto ri = sample_distinct(rng, m.rows, k);
    const auto ci = sample_distinct(rng, m.cols, k);
    try_skeleton(ri, ci);
  }

  if (best_factors) {
    // Exact refits cost O(r^3) per sample; keep them to small problems.
    constexpr std::size_t kMaxRefitRank = 8;
    constexpr std::size_t kMaxRefitCells = 1024;
    if (r <= kMaxRefitRank && m.rows * m.cols <= kMaxRefitCells) {
      const std::size_t sweeps = std::min<std::size_t>(4, options.budget);
      alternating_refine(m, *best_factors, sweeps, /*samples=*/4, rng, field);
    }
    consider(multiply(best_factors->u, best_factors->v, field), SearchMethod::kAlternatingDescent);
  }

  if constexpr (!std::is_same_v<F, std::complex<double>>) {
    if (best.weight != std::numeric_limits<std::size_t>::max()) {
      prune(m, best.x, r, options.budget, field);
      best.weight = count_disagreements(best.x, m, field);
    }
  }
  return best;
}

template <typename F>
Perturbation witness_from(const Dense<F>& m, const Dense<F>& x, const Field<F>& field) {
  std::vector<Change> changes;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (!field.equal(x(i, j), m(i, j))) changes.push_back({i, j, Field<F>::to_scalar(x(i, j))});
    }
  }
  return Perturbation(std::move(changes));
}

template <typename F>
SearchResult run_search(const Matrix& matrix, std::size_t r, const SearchOptions& options, const Field<F>& field) {
  const Dense<F> m = detail::to_dense(matrix, field);
  SearchResult result;
  result.target_rank = r;
  result.kind = SearchKind::kUpperBoundOnly;
  if (detail::rank_of(m, field) <= r) {
    result.method = SearchMethod::kUnchanged;
    result.weight = 0;
    result.witness = Perturbation();
    result.numerically_verified = !matrix.exact();
    return result;
  }
  Best<F> best = search_in_field(m, r, options, field);
  if (best.weight == std::numeric_limits<std::size_t>::max()) {
    // No skeleton was invertible; replace everything by zero.
    best.x = Dense<F>{m.rows, m.cols, std::vector<F>(m.a.size(), field.zero())};
    best.weight = count_disagreements(best.x, m, field);
  }
  Perturbation witness = witness_from(m, best.x, field);
  result.method = best.method;
  if constexpr (std::is_same_v<F, std::complex<double>>) {
    result.numerically_verified = true;
    if (numerical_rank(apply_perturbation(matrix, witness), field.tolerance) > r) {
      // Entries within tolerance were left unchanged; take X verbatim.
      std::vector<Change> all;
      for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
          if (best.x(i, j) != m(i, j)) all.push_back({i, j, Scalar(best.x(i, j))});
        }
      }
      witness = Perturbation(std::move(all));
      if (numerical_rank(apply_perturbation(matrix, witness), field.tolerance) > r) {
        throw std::logic_error("approximate search witness failed numerical rank check");
      }
    }
  } else {
    require_low_rank_witness(matrix, witness, r);
  }
  result.weight = witness.size();
  result.witness = std::move(witness);
  return result;
}

}  // namespace

SearchResult upper_bound_search(const Matrix& m, std::size_t r, const SearchOptions& options) {
  switch (m.domain().kind) {
    case ScalarKind::kInteger:
    case ScalarKind::kRational:
      return run_search(m, r, options, Field<mpq_class>{});
    case ScalarKind::kCyclotomic:
      return run_search(m, r, options, Field<Cyclotomic>{m.domain().order});
    case ScalarKind::kApprox:
      return run_search(m, r, options, Field<std::complex<double>>{options.tolerance});
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Interval assembly.

RigidityInterval cross_validate(const Matrix& m, std::size_t r, const CrossValidateOptions& options) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "rigidity intervals need a square matrix");
  const std::size_t n = m.rows();
  if (r > n) throw Error(ErrorCode::kInvalidArgument, "target rank exceeds matrix size");
  if (options.exact) {
    if (r != 1) throw Error(ErrorCode::kInvalidArgument, "exact search supports r = 1 only");
    if (n > 6) throw Error(ErrorCode::kResourceLimit, "exact search is limited to n <= 6");
    if (m.domain().kind != ScalarKind::kInteger && m.domain().kind != ScalarKind::kRational) {
      throw Error(ErrorCode::kInvalidArgument, "exact search needs integer or rational entries");
    }
  }

  RigidityInterval out;
  out.r = r;
  if (m.exact()) {
    try {
      out.certificates.push_back(trivial_lower_bound(m, r));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCertificateInapplicable) throw;
    }
    if (r >= 1 && n % (2 * r) == 0) {
      std::vector<ColumnPermutation> perms{ColumnPermutation::kIdentity};
      if (is_power_of_two(n)) perms.push_back(ColumnPermutation::kBitReversal);
      for (auto perm : perms) {
        try {
          out.certificates.push_back(full_rank_partition_certificate(m, r, perm));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kCertificateFailed) throw;
        }
      }
    }
  }
  out.searches.push_back(upper_bound_search(m, r, options.search));
  if (options.exact) {
    out.searches.push_back(exact_rigidity_rank1(m, std::min(options.exact_max_weight, n * n)));
  }

  std::uint64_t lower = 0;
  std::uint64_t upper = n * n;
  for (const auto& c : out.certificates) lower = std::max(lower, c.bound);
  for (const auto& s : out.searches) {
    if (s.kind == SearchKind::kExactValue) lower = std::max<std::uint64_t>(lower, s.weight);
    if (s.kind == SearchKind::kBoundExceeded) lower = std::max<std::uint64_t>(lower, s.weight);
    if (s.witness) upper = std::min<std::uint64_t>(upper, s.weight);
  }

  auto violation = [&](const std::string& what) {
    throw Error(ErrorCode::kInconsistentInterval, "rigidity interval inverted: " + what);
  };
  for (const auto& s : out.searches) {
    if (!s.witness) continue;
    for (const auto& c : out.certificates) {
      ++out.pairs_checked;
      if (c.bound > s.weight) {
        violation(std::string(to_string(c.kind)) + " bound " + std::to_string(c.bound) + " > " +
                  to_string(s.method) + " weight " + std::to_string(s.weight));
      }
    }
    for (const auto& e : out.searches) {
      if (e.kind == SearchKind::kUpperBoundOnly) continue;
      ++out.pairs_checked;
      if (e.weight > s.weight) {
        violation("exact search value " + std::to_string(e.weight) + " > witness weight " +
                  std::to_string(s.weight));
      }
    }
  }
  if (lower > upper) violation(std::to_string(lower) + " > " + std::to_string(upper));
  out.lower = lower;
  out.upper = upper;
  out.exact = lower == upper;
  return out;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

nlohmann::ordered_json search_json(const SearchResult& result) {
  nlohmann::ordered_json j;
  j["targetRank"] = result.target_rank;
  j["kind"] = to_string(result.kind);
  j["weight"] = result.weight;
  j["method"] = to_string(result.method);
  j["numericallyVerified"] = result.numerically_verified;
  if (!result.supports_examined.empty()) j["supportsExamined"] = result.supports_examined;
  if (result.witness) {
    auto& arr = j["witness"] = nlohmann::ordered_json::array();
    for (const auto& c : result.witness->changes()) {
      arr.push_back({{"row", c.row}, {"col", c.col}, {"value", c.value.to_string()}});
    }
  }
  return j;
}

}  // namespace

std::string search_result_to_json(const SearchResult& result) { return search_json(result).dump(2) + "\n"; }

std::string interval_to_json(const RigidityInterval& interval) {
  nlohmann::ordered_json j;
  j["r"] = interval.r;
  j["lower"] = interval.lower;
  j["upper"] = interval.upper;
  j["exact"] = interval.exact;
  j["pairsChecked"] = interval.pairs_checked;
  auto& certs = j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : interval.certificates) {
    certs.push_back(nlohmann::ordered_json::parse(certificate_to_json(c)));
  }
  auto& searches = j["searches"] = nlohmann::ordered_json::array();
  for (const auto& s : interval.searches) searches.push_back(search_json(s));
  return j.dump(2) + "\n";
}

}  // namespace rigidity
