#include "rigidity/certificate.hpp"

#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "rigidity/error.hpp"
#include "rigidity/io.hpp"
#include "rigidity/rank.hpp"

namespace rigidity {

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kTrivial: return "Trivial";
    case CertificateKind::kFullRankPartition: return "FullRankPartition";
  }
  return "unknown";
}

const char* to_string(ColumnPermutation perm) {
  switch (perm) {
    case ColumnPermutation::kIdentity: return "identity";
    case ColumnPermutation::kBitReversal: return "bit-reversal";
  }
  return "unknown";
}

ColumnOrder column_order(ColumnPermutation perm, std::size_t cols) {
  if (perm == ColumnPermutation::kBitReversal) return bit_reversal_order(cols);
  ColumnOrder order(cols);
  for (std::size_t t = 0; t < cols; ++t) order[t] = t;
  return order;
}

namespace {

void require_square_exact(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "rigidity bounds need a square matrix");
  if (!m.exact()) {
    throw Error(ErrorCode::kApproximateInput, "certificates need exact entries");
  }
}

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

LowerBoundCertificate trivial_lower_bound(const Matrix& m, std::size_t r) {
  require_square_exact(m);
  const std::size_t n = m.rows();
  if (r > n) throw Error(ErrorCode::kInvalidArgument, "target rank exceeds matrix size");
  const std::size_t rank = exact_rank(m);
  if (rank != n) {
    throw Error(ErrorCode::kCertificateInapplicable,
                "matrix has rank " + std::to_string(rank) + " < " + std::to_string(n) +
                    "; the n - r bound needs full rank");
  }
  LowerBoundCertificate cert;
  cert.matrix_digest = matrix_digest(m);
  cert.n = n;
  cert.r = r;
  cert.bound = n - r;
  cert.kind = CertificateKind::kTrivial;
  return cert;
}

std::uint64_t sylvester_bound_value(std::uint64_t n, std::uint64_t r) {
  if (!is_power_of_two(n)) {
    throw Error(ErrorCode::kInvalidArgument, "n = " + std::to_string(n) + " is not a power of two");
  }
  if (!is_power_of_two(r)) {
    throw Error(ErrorCode::kInvalidArgument, "r = " + std::to_string(r) + " is not a power of two");
  }
  if (2 * r > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "r = " + std::to_string(r) + " exceeds n/2 = " + std::to_string(n / 2));
  }
  return n * n / (4 * r);
}

LowerBoundCertificate full_rank_partition_certificate(const Matrix& m, std::size_t r,
                                                      ColumnPermutation perm) {
  require_square_exact(m);
  const std::size_t n = m.rows();
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "partition certificate needs r >= 1");
  if (n % (2 * r) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "2r = " + std::to_string(2 * r) + " does not divide n = " + std::to_string(n));
  }
  const auto partition = BlockPartition::make(n, 2 * r);
  const Matrix permuted = permute_columns(m, column_order(perm, n));

  LowerBoundCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.kind = CertificateKind::kFullRankPartition;
  cert.permutation = perm;
  cert.block_size = partition.block_size;
  cert.grid_side = partition.grid_side;
  cert.blocks.reserve(partition.cell_count());
  for (std::size_t i = 0; i < partition.grid_side; ++i) {
    for (std::size_t j = 0; j < partition.grid_side; ++j) {
      const std::size_t rank = exact_rank(block(permuted, i, j, partition.block_size));
      if (rank < partition.block_size) {
        throw Error(ErrorCode::kCertificateFailed,
                    "block " + cell(i, j) + " has rank " + std::to_string(rank) + " < " +
                        std::to_string(partition.block_size));
      }
      cert.blocks.push_back({i, j, rank});
    }
  }
  cert.bound = static_cast<std::uint64_t>(partition.grid_side) * partition.grid_side * r;
  cert.matrix_digest = matrix_digest(m);
  return cert;
}

bool verify_certificate(const Matrix& m, const LowerBoundCertificate& cert) {
  if (!m.square() || !m.exact() || cert.n != m.rows()) return false;
  if (cert.matrix_digest != matrix_digest(m)) return false;
  if (cert.kind == CertificateKind::kTrivial) {
    return cert.r <= cert.n && cert.bound == cert.n - cert.r && exact_rank(m) == cert.n;
  }
  if (cert.r == 0 || cert.block_size != 2 * cert.r || cert.n % cert.block_size != 0 ||
      cert.grid_side * cert.block_size != cert.n) {
    return false;
  }
  if (cert.bound != static_cast<std::uint64_t>(cert.grid_side) * cert.grid_side * cert.r) return false;
  if (cert.blocks.size() != cert.grid_side * cert.grid_side) return false;
  const Matrix permuted = permute_columns(m, column_order(cert.permutation, cert.n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < cert.grid_side; ++i) {
    for (std::size_t j = 0; j < cert.grid_side; ++j, ++k) {
      const BlockRank& b = cert.blocks[k];
      if (b.i != i || b.j != j || b.rank != cert.block_size) return false;
      if (exact_rank(block(permuted, i, j, cert.block_size)) != cert.block_size) return false;
    }
  }
  return true;
}

RefutationWitness refute_perturbation(const Matrix& m, const Perturbation& p, std::size_t r,
                                      const LowerBoundCertificate& cert) {
  require_square_exact(m);
  if (cert.kind != CertificateKind::kFullRankPartition || cert.n != m.rows() || cert.r != r ||
      cert.block_size != 2 * r || cert.grid_side * cert.block_size != cert.n) {
    throw Error(ErrorCode::kCertificateMismatch,
                "certificate is not a partition certificate for this matrix and r = " + std::to_string(r));
  }
  if (cert.matrix_digest != matrix_digest(m)) {
    throw Error(ErrorCode::kCertificateMismatch, "certificate digest does not match the matrix");
  }
  const std::size_t weight = effective_weight(m, p);
  if (weight >= cert.bound) {
    throw Error(ErrorCode::kRefutationNotGuaranteed,
                "perturbation weight " + std::to_string(weight) + " reaches the bound " +
                    std::to_string(cert.bound));
  }

  const ColumnOrder position = invert(column_order(cert.permutation, cert.n));
  const std::size_t side = cert.grid_side;
  std::vector<std::size_t> counts(side * side, 0);
  for (const auto& c : p.changes()) {
    if (c.value == m.at(c.row, c.col)) continue;
    ++counts[(c.row / cert.block_size) * side + position[c.col] / cert.block_size];
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < counts.size(); ++k) {
    if (counts[k] < counts[best]) best = k;
  }

  RefutationWitness w;
  w.block_row = best / side;
  w.block_col = best % side;
  w.changes_in_block = counts[best];
  w.perturbation_weight = weight;
  if (w.changes_in_block >= r) {
    throw std::logic_error("pigeonhole failed: every block has at least r changes");
  }
  w.claimed_rank_floor = rank_lower_bound_after_changes(static_cast<long>(cert.block_size),
                                                        static_cast<long>(w.changes_in_block));
  w.perturbed_rank = exact_rank(apply_perturbation(m, p));
  if (w.perturbed_rank <= r) {
    throw std::logic_error("perturbed matrix reached rank " + std::to_string(w.perturbed_rank) +
                           " despite the certificate");
  }
  return w;
}

DftDecompositionCheck verify_dft_decomposition(std::size_t n, TwiddleConvention convention) {
  if (n < 4 || !is_power_of_two(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "DFT decomposition needs n a power of two >= 4, got " + std::to_string(n));
  }
  const auto order = static_cast<unsigned>(n);
  const std::size_t h = n / 2;
  const std::int64_t offset = convention == TwiddleConvention::kOneBasedRow ? 1 : 0;
  const Matrix reordered = evens_first(dft(n));
  const Matrix half = dft(h).promoted_to({ScalarKind::kCyclotomic, order});

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t base = j % h;
    Scalar twiddle(Cyclotomic::root_power(order, static_cast<std::int64_t>(base) + offset));
    if (j >= h) twiddle = -twiddle;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar expected = k < h ? half.at(base, k) : twiddle * half.at(base, k - h);
      if (!(reordered.at(j, k) == expected)) return {false, j, k};
    }
  }
  return {true, 0, 0};
}

LowerBoundCertificate best_lower_bound(const Matrix& m, std::size_t r) {
  require_square_exact(m);
  const std::size_t n = m.rows();
  if (r > n) throw Error(ErrorCode::kInvalidArgument, "target rank exceeds matrix size");

  std::optional<LowerBoundCertificate> best;
  auto consider = [&](LowerBoundCertificate cert) {
    if (!best || cert.bound > best->bound) best = std::move(cert);
  };
  try {
    consider(trivial_lower_bound(m, r));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCertificateInapplicable) throw;
  }
  if (r >= 1 && n % (2 * r) == 0) {
    std::vector<ColumnPermutation> perms{ColumnPermutation::kIdentity};
    if (is_power_of_two(n)) perms.push_back(ColumnPermutation::kBitReversal);
    for (auto perm : perms) {
      try {
        consider(full_rank_partition_certificate(m, r, perm));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kCertificateFailed) throw;
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::kNoCertificate,
                "no lower-bound certificate applies for r = " + std::to_string(r));
  }
  return *best;
}

std::string certificate_to_json(const LowerBoundCertificate& cert,
                                const std::optional<RefutationWitness>& witness) {
  nlohmann::ordered_json j;
  j["matrixDigest"] = cert.matrix_digest;
  j["n"] = cert.n;
  j["r"] = cert.r;
  j["kind"] = to_string(cert.kind);
  j["bound"] = cert.bound;
  j["permutation"] = to_string(cert.permutation);
  j["blockSize"] = cert.block_size;
  j["gridSide"] = cert.grid_side;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : cert.blocks) {
    j["blocks"].push_back({{"i", b.i}, {"j", b.j}, {"rank", b.rank}});
  }
  if (witness) {
    nlohmann::ordered_json w;
    w["blockRow"] = witness->block_row;
    w["blockCol"] = witness->block_col;
    w["changesInBlock"] = witness->changes_in_block;
    w["claimedRankFloor"] = witness->claimed_rank_floor;
    w["perturbationWeight"] = witness->perturbation_weight;
    w["perturbedRank"] = witness->perturbed_rank;
    j["witness"] = std::move(w);
  }
  return j.dump(2) + "\n";
}

LowerBoundCertificate certificate_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    LowerBoundCertificate cert;
    cert.matrix_digest = j.at("matrixDigest").get<std::string>();
    cert.n = j.at("n").get<std::size_t>();
    cert.r = j.at("r").get<std::size_t>();
    cert.bound = j.at("bound").get<std::uint64_t>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Trivial") {
      cert.kind = CertificateKind::kTrivial;
    } else if (kind == "FullRankPartition") {
      cert.kind = CertificateKind::kFullRankPartition;
    } else {
      throw Error(ErrorCode::kParse, "unknown certificate kind '" + kind + "'");
    }
    const auto perm = j.at("permutation").get<std::string>();
    if (perm == "identity") {
      cert.permutation = ColumnPermutation::kIdentity;
    } else if (perm == "bit-reversal") {
      cert.permutation = ColumnPermutation::kBitReversal;
    } else {
      throw Error(ErrorCode::kParse, "unknown permutation '" + perm + "'");
    }
    cert.block_size = j.value("blockSize", std::size_t{0});
    cert.grid_side = j.value("gridSide", std::size_t{0});
    for (const auto& b : j.at("blocks")) {
      cert.blocks.push_back({b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(),
                             b.at("rank").get<std::size_t>()});
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace rigidity
