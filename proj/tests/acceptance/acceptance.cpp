// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rigidity/certificate.hpp"
#include "rigidity/error.hpp"
#include "rigidity/io.hpp"
#include "rigidity/rank.hpp"
#include "rigidity/search.hpp"
#include "rigidity_cli/cli.hpp"

using namespace rigidity;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string cli_stdout(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::vector<std::size_t> ranks_up_to_half(std::size_t n) {
  std::vector<std::size_t> rs;
  for (std::size_t r = 1; 2 * r <= n; r *= 2) rs.push_back(r);
  return rs;
}

// --- 1 ----------------------------------------------------------------------
Outcome golden_constructions() {
  Outcome o;
  if (cli_stdout({"gen", "sylvester", "1"}) != "2 2 sign\n++\n+-\n") o.fail("S(2) text differs");
  if (cli_stdout({"gen", "sylvester", "2"}) != "4 4 sign\n++++\n+-+-\n++--\n+--+\n") o.fail("S(4) text differs");
  const Matrix f = parse_matrix(cli_stdout({"gen", "dft", "4"}));
  if (f.domain().kind != ScalarKind::kCyclotomic || f.domain().order != 4) o.fail("dft 4 is not cyclo4");
  for (std::size_t j = 1; j <= 4; ++j)
    for (std::size_t k = 1; k <= 4; ++k)
      if (!(f(j - 1, k - 1) == Scalar(oracle::dft_entry(4, j, k)))) o.fail("dft 4 entry mismatch");
  return o;
}

// --- 2 ----------------------------------------------------------------------
Outcome hadamard_identity() {
  Outcome o;
  for (unsigned k = 1; k <= 6; ++k) {
    const Matrix s = sylvester_matrix(k);
    const std::size_t n = s.rows();
    if (!is_hadamard(s)) o.fail("is_hadamard false at k=" + std::to_string(k));
    if (!(s * s.transpose() == Matrix::identity(n).scaled(Scalar(static_cast<long>(n)))))
      o.fail("S S^T != nI at k=" + std::to_string(k));
  }
  return o;
}

// --- 3 ----------------------------------------------------------------------
Outcome partition_certificates() {
  Outcome o;
  int certs = 0;
  for (unsigned k = 2; k <= 6; ++k) {
    const Matrix s = sylvester_matrix(k);
    const std::size_t n = s.rows();
    for (std::size_t r : ranks_up_to_half(n)) {
      const auto cert = full_rank_partition_certificate(s, r, ColumnPermutation::kIdentity);
      ++certs;
      if (cert.bound != n * n / (4 * r)) o.fail("bound mismatch at n=" + std::to_string(n));
      if (!verify_certificate(s, cert)) o.fail("certificate does not verify");
      const Matrix small = sylvester_matrix(static_cast<unsigned>(std::countr_zero(2 * r)));
      const Matrix neg = -small;
      for (std::size_t i = 0; i < cert.grid_side; ++i)
        for (std::size_t j = 0; j < cert.grid_side; ++j) {
          const Matrix b = block(s, i, j, 2 * r);
          if (!(b == small) && !(b == neg)) o.fail("block is not +-S(2r)");
        }
    }
  }
  o.detail = o.ok ? std::to_string(certs) + " certificates" : o.detail;
  return o;
}

// --- 4 ----------------------------------------------------------------------
Outcome refutation_fuzzing() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7), kind(0, 2);
  long trials = 0;
  for (unsigned k : {2u, 3u, 4u}) {
    const Matrix s = sylvester_matrix(k);
    const std::size_t n = s.rows();
    std::vector<std::size_t> cells(n * n);
    for (std::size_t r : ranks_up_to_half(n)) {
      const auto cert = full_rank_partition_certificate(s, r, ColumnPermutation::kIdentity);
      const std::size_t weight = n * n / (4 * r) - 1;
      for (int t = 0; t < 500; ++t, ++trials) {
        std::iota(cells.begin(), cells.end(), 0);
        std::shuffle(cells.begin(), cells.end(), rng);
        std::vector<Change> ch;
        for (std::size_t c = 0; c < weight; ++c) {
          const std::size_t i = cells[c] / n, j = cells[c] % n;
          Scalar v;
          switch (kind(rng)) {
            case 0: v = Scalar(0); break;
            case 1: v = -s(i, j); break;
            default:
              do v = Scalar::rational(num(rng), den(rng));
              while (v == s(i, j));
          }
          ch.push_back({i, j, v});
        }
        const Perturbation p(ch);
        if (effective_weight(s, p) != weight) o.fail("generated weight drifted");
        const auto w = refute_perturbation(s, p, r, cert);
        if (w.changes_in_block >= r) o.fail("witness cell has c >= r");
        if (exact_rank(apply_perturbation(s, p)) <= r) o.fail("perturbed rank <= r");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(trials) + " trials";
  return o;
}

// --- 5 ----------------------------------------------------------------------
Outcome exact_rigidity_meets_bound() {
  Outcome o;
  const Matrix s = sylvester_matrix(2);
  const auto res = exact_rigidity_rank1(s, 8);
  if (res.kind != SearchKind::kExactValue || res.weight != 4) o.fail("R_S(4)(1) != 4");
  if (res.weight != sylvester_bound_value(4, 1)) o.fail("value differs from n^2/4r");
  if (!res.witness || effective_weight(s, *res.witness) != 4 ||
      exact_rank(apply_perturbation(s, *res.witness)) > 1)
    o.fail("witness does not verify");
  if (res.supports_examined.size() < 4 || res.supports_examined[3] != 560) o.fail("size-3 supports != 560");
  // Independent infeasibility: each size-3 support leaves a nonsingular 2x2
  // minor of S(4) untouched.
  std::size_t proven = 0, total = 0;
  std::vector<int> pick(16, 0);
  std::fill(pick.end() - 3, pick.end(), 1);
  do {
    ++total;
    bool found = false;
    for (std::size_t a = 0; a < 4 && !found; ++a)
      for (std::size_t b = a + 1; b < 4 && !found; ++b)
        for (std::size_t c = 0; c < 4 && !found; ++c)
          for (std::size_t d = c + 1; d < 4 && !found; ++d) {
            if (pick[a * 4 + c] || pick[a * 4 + d] || pick[b * 4 + c] || pick[b * 4 + d]) continue;
            found = oracle::sylvester_entry(a, c) * oracle::sylvester_entry(b, d) !=
                    oracle::sylvester_entry(a, d) * oracle::sylvester_entry(b, c);
          }
    proven += found;
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (total != 560 || proven != 560) o.fail("minor oracle covers " + std::to_string(proven) + "/560");
  return o;
}

// --- 6 ----------------------------------------------------------------------
Outcome dft_transfer() {
  Outcome o;
  for (std::size_t n : {4u, 8u, 16u}) {
    if (!verify_dft_decomposition(n).holds) o.fail("decomposition fails at n=" + std::to_string(n));
    const Matrix f = dft(n);
    for (std::size_t r : {1u, 2u, 4u}) {
      if (2 * r > n) continue;
      const auto cert = full_rank_partition_certificate(f, r, ColumnPermutation::kBitReversal);
      if (cert.bound != n * n / (4 * r) || !verify_certificate(f, cert)) o.fail("dft certificate wrong");
    }
  }
  return o;
}

// --- 7 ----------------------------------------------------------------------
Outcome interval_consistency() {
  Outcome o;
  std::vector<std::pair<Matrix, std::size_t>> cases;
  for (unsigned k = 2; k <= 6; ++k)
    for (std::size_t r : ranks_up_to_half(std::size_t{1} << k)) cases.emplace_back(sylvester_matrix(k), r);
  for (std::size_t n : {4u, 8u, 16u})
    for (std::size_t r : {1u, 2u, 4u})
      if (2 * r <= n) cases.emplace_back(dft(n), r);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = dim(rng);
    cases.emplace_back(oracle::random_full_rank(rng, n), 1 + t % (n - 1));
  }
  std::size_t violations = 0, pairs = 0;
  for (const auto& [m, r] : cases) {
    try {
      CrossValidateOptions opts;
      opts.search.budget = 8;
      const auto iv = cross_validate(m, r, opts);
      pairs += iv.pairs_checked;
      if (iv.lower > iv.upper) ++violations;
      // Every instance here has full rank, so the trivial floor applies.
      if (iv.lower < m.rows() - r) ++violations;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInconsistentInterval) throw;
      ++violations;
    }
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  else o.detail = std::to_string(cases.size()) + " instances, " + std::to_string(pairs) + " pairs";
  return o;
}

// --- 8 ----------------------------------------------------------------------
Outcome rank_oracle_properties() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<long> val(-4, 4);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const Matrix m = t % 2 ? oracle::random_low_rank(rng, rows, cols, dim(rng) / 2 + 1)
                           : oracle::random_rational(rng, rows, cols);
    const std::size_t rm = exact_rank(m);
    switch (t % 3) {
      case 0: {  // subadditivity
        std::uniform_int_distribution<std::size_t> cell(0, rows * cols - 1);
        std::vector<Change> ch;
        std::vector<bool> used(rows * cols, false);
        for (std::size_t c = 0, w = cell(rng) % 5; c < w; ++c) {
          const std::size_t x = cell(rng);
          if (used[x]) continue;
          used[x] = true;
          ch.push_back({x / cols, x % cols, Scalar::rational(val(rng), 1 + dim(rng))});
        }
        const Perturbation p(ch);
        const long rp = static_cast<long>(exact_rank(apply_perturbation(m, p)));
        if (std::abs(rp - static_cast<long>(rm)) > static_cast<long>(effective_weight(m, p)))
          o.fail("rank moved more than the weight");
        break;
      }
      case 1: {  // submatrix monotonicity
        std::uniform_int_distribution<std::size_t> r0(0, rows - 1), c0(0, cols - 1);
        const std::size_t i = r0(rng), j = c0(rng);
        std::uniform_int_distribution<std::size_t> h(1, rows - i), w(1, cols - j);
        if (exact_rank(submatrix(m, i, j, h(rng), w(rng))) > rm) o.fail("submatrix rank exceeds rank");
        break;
      }
      default: {  // permutation invariance, rows and columns
        ColumnOrder pc(cols), pr(rows);
        std::iota(pc.begin(), pc.end(), 0);
        std::iota(pr.begin(), pr.end(), 0);
        std::shuffle(pc.begin(), pc.end(), rng);
        std::shuffle(pr.begin(), pr.end(), rng);
        const Matrix q = permute_columns(permute_columns(m, pc).transpose(), pr);
        if (exact_rank(q) != rm) o.fail("permutation changed the rank");
      }
    }
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = dim(rng);
    Matrix m = oracle::random_low_rank(rng, n, n, dim(rng) % n + 1);
    m = m.scaled(Scalar::rational(1, 1 + static_cast<long>(dim(rng))));
    if (t % 2) m = oracle::random_rational(rng, n, n);
    if (exact_rank(m) != numerical_rank(m, 1e-9)) o.fail("exact and numerical rank disagree");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden constructions", 1, golden_constructions},
      {2, "hadamard identity", 5, hadamard_identity},
      {3, "partition certificates", 30, partition_certificates},
      {4, "refutation fuzzing", 120, refutation_fuzzing},
      {5, "exact rigidity meets bound", 60, exact_rigidity_meets_bound},
      {6, "dft transfer", 120, dft_transfer},
      {7, "interval consistency", 0, interval_consistency},
      {8, "rank oracle properties", 60, rank_oracle_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.fail("over time limit");
    failed += !o.ok;
    std::printf("%s criterion %d (%s): %.3fs", o.ok ? "PASS" : "FAIL", c.id, c.name, secs);
    if (c.limit_seconds > 0) std::printf(" / limit %.0fs", c.limit_seconds);
    if (!o.detail.empty()) std::printf(" [%s]", o.detail.c_str());
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
