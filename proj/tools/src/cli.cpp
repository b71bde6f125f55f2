#include "rigidity_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigidity/certificate.hpp"
#include "rigidity/cyclotomic.hpp"
#include "rigidity/error.hpp"
#include "rigidity/io.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rank.hpp"
#include "rigidity/search.hpp"

namespace rigidity::cli {
namespace {

enum class Format { kText, kJson };

struct Globals {
  double tolerance = kDefaultTolerance;
  Format format = Format::kText;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoCertificate:
    case ErrorCode::kCertificateInapplicable:
    case ErrorCode::kCertificateFailed:
      return kNoCertificate;
    case ErrorCode::kRefutationNotGuaranteed:
      return kRefutationNotGuaranteed;
    case ErrorCode::kInconsistentInterval:
      return kInternal;  // lower > upper can only be a bug
    default:
      return kUsage;
  }
}

// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

Matrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

std::size_t checked_rank(const Matrix& m, long r) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "matrix must be square");
  if (r < 0 || static_cast<std::size_t>(r) > m.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "r must lie in [0, n]");
  }
  return static_cast<std::size_t>(r);
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family;
  long param = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.family == "sylvester") {
    if (a.param < 0) throw Error(ErrorCode::kInvalidArgument, "sylvester takes k >= 0");
    emit(a.out, format_sign_matrix(sylvester(static_cast<unsigned>(a.param))), out);
  } else {
    if (a.param < 1 || !is_power_of_two(static_cast<std::uint64_t>(a.param))) {
      throw Error(ErrorCode::kInvalidArgument, "dft takes n, a power of two");
    }
    if (a.param > 1024) throw Error(ErrorCode::kResourceLimit, "dft order is limited to 1024");
    emit(a.out, format_matrix(dft(static_cast<std::size_t>(a.param))), out);
  }
  return kOk;
}

// --- rank -------------------------------------------------------------------

int cmd_rank(const std::string& path, const Globals& g, std::ostream& out) {
  const Matrix m = load_matrix(path);
  const bool approx = m.domain().kind == ScalarKind::kApprox;
  const std::size_t rank = approx ? numerical_rank(m, g.tolerance) : exact_rank(m);
  if (g.format == Format::kJson) {
    out << "{\"rank\": " << rank << ", \"exact\": " << (approx ? "false" : "true") << "}\n";
  } else {
    out << "RANK " << rank << (approx ? " (numerical)" : "") << "\n";
  }
  return kOk;
}

// --- bound ------------------------------------------------------------------

struct BoundArgs {
  std::string matrix;
  long r = 0;
  std::string out;
};

int cmd_bound(const BoundArgs& a, const Globals& g, std::ostream& out) {
  const Matrix m = load_matrix(a.matrix);
  const std::size_t r = checked_rank(m, a.r);
  LowerBoundCertificate cert;
  try {
    cert = best_lower_bound(m, r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoCertificate) throw;
    out << "NO_CERTIFICATE\n";
    return kNoCertificate;
  }
  const std::string json = certificate_to_json(cert);
  if (!a.out.empty()) write_file(a.out, json);
  if (g.format == Format::kJson) {
    out << json;
  } else {
    out << "LOWER_BOUND " << cert.bound << " via " << to_string(cert.kind) << "\n";
  }
  return kOk;
}

// --- refute -----------------------------------------------------------------

struct RefuteArgs {
  std::string matrix;
  std::string perturbation;
  long r = 0;
  std::string out;
};

// The first partition certificate that verifies, identity columns first.
std::optional<LowerBoundCertificate> partition_certificate(const Matrix& m, std::size_t r) {
  for (auto perm : {ColumnPermutation::kIdentity, ColumnPermutation::kBitReversal}) {
    try {
      return full_rank_partition_certificate(m, r, perm);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCertificateFailed && e.code() != ErrorCode::kInvalidArgument &&
          e.code() != ErrorCode::kCertificateInapplicable) {
        throw;
      }
    }
  }
  return std::nullopt;
}

int cmd_refute(const RefuteArgs& a, const Globals& g, std::ostream& out) {
  const Matrix m = load_matrix(a.matrix);
  const Perturbation p = parse_perturbation(read_file(a.perturbation));
  const std::size_t r = checked_rank(m, a.r);
  const auto cert = partition_certificate(m, r);
  if (!cert) {
    out << "NO_CERTIFICATE\n";
    return kNoCertificate;
  }
  RefutationWitness w;
  try {
    w = refute_perturbation(m, p, r, *cert);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRefutationNotGuaranteed) throw;
    out << "REFUTATION_NOT_GUARANTEED weight=" << effective_weight(m, p) << " bound=" << cert->bound
        << "\n";
    return kRefutationNotGuaranteed;
  }
  const std::string json = certificate_to_json(*cert, w);
  if (!a.out.empty()) write_file(a.out, json);
  if (g.format == Format::kJson) {
    out << json;
  } else {
    out << "WITNESS_BLOCK (" << w.block_row << ", " << w.block_col << ") changes=" << w.changes_in_block
        << "\n"
        << "RANK_FLOOR " << w.claimed_rank_floor << "\n"
        << "EXACT_RANK " << w.perturbed_rank << "\n";
  }
  return kOk;
}

// --- rigidity ---------------------------------------------------------------

struct RigidityArgs {
  std::string matrix;
  long r = 0;
  bool exact = false;
  std::size_t budget = 32;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_rigidity(const RigidityArgs& a, const Globals& g, std::ostream& out) {
  const Matrix m = load_matrix(a.matrix);
  const std::size_t r = checked_rank(m, a.r);
  CrossValidateOptions opts;
  opts.exact = a.exact;
  opts.search.budget = a.budget;
  opts.search.seed = a.seed;
  opts.search.tolerance = g.tolerance;
  // With no applicable certificate the lower end is simply 0.
  const RigidityInterval interval = cross_validate(m, r, opts);
  const std::string json = interval_to_json(interval);
  if (!a.out.empty()) write_file(a.out, json);
  if (g.format == Format::kJson) {
    out << json;
  } else {
    out << "RIGIDITY_INTERVAL [" << interval.lower << ", " << interval.upper
        << "] exact=" << (interval.exact ? "true" : "false") << "\n";
  }
  return kOk;
}

// --- verify-dft -------------------------------------------------------------

int cmd_verify_dft(long n, const std::string& convention, const Globals& g, std::ostream& out) {
  if (n < 4 || !is_power_of_two(static_cast<std::uint64_t>(n))) {
    throw Error(ErrorCode::kInvalidArgument, "verify-dft takes n >= 4, a power of two");
  }
  const auto conv =
      convention == "one-based" ? TwiddleConvention::kOneBasedRow : TwiddleConvention::kZeroBasedRow;
  const auto check = verify_dft_decomposition(static_cast<std::size_t>(n), conv);
  if (g.format == Format::kJson) {
    out << "{\"n\": " << n << ", \"convention\": \"" << convention
        << "\", \"holds\": " << (check.holds ? "true" : "false");
    if (!check.holds) out << ", \"row\": " << check.row << ", \"col\": " << check.col;
    out << "}\n";
  } else {
    out << "DFT_DECOMPOSITION n=" << n << " convention=" << convention
        << " holds=" << (check.holds ? "true" : "false");
    if (!check.holds) out << " first_mismatch=(" << check.row << ", " << check.col << ")";
    out << "\n";
  }
  return check.holds ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix rigidity workbench", "rigidity"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tolerance", g.tolerance, "Zero threshold for approximate (floating-point) input")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText}, {"json", Format::kJson}}));

  std::function<int()> action;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a Sylvester (k) or DFT (n) matrix");
  gen_cmd->add_option("family", gen.family)->required()->check(CLI::IsMember({"sylvester", "dft"}));
  gen_cmd->add_option("param", gen.param, "k for sylvester, n for dft")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->callback([&] { action = [&] { return cmd_gen(gen, out); }; });

  std::string rank_path;
  auto* rank_cmd = app.add_subcommand("rank", "Exact (or numerical, for approx input) rank");
  rank_cmd->add_option("matrix", rank_path)->required();
  rank_cmd->callback([&] { action = [&] { return cmd_rank(rank_path, g, out); }; });

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Best verified lower bound on R_M(r)");
  bound_cmd->add_option("matrix", bound.matrix)->required();
  bound_cmd->add_option("r", bound.r)->required();
  bound_cmd->add_option("--out", bound.out, "Certificate JSON file");
  bound_cmd->callback([&] { action = [&] { return cmd_bound(bound, g, out); }; });

  RefuteArgs refute;
  auto* refute_cmd = app.add_subcommand("refute", "Show why a perturbation cannot reach rank r");
  refute_cmd->add_option("matrix", refute.matrix)->required();
  refute_cmd->add_option("perturbation", refute.perturbation)->required();
  refute_cmd->add_option("r", refute.r)->required();
  refute_cmd->add_option("--out", refute.out, "Certificate-with-witness JSON file");
  refute_cmd->callback([&] { action = [&] { return cmd_refute(refute, g, out); }; });

  RigidityArgs rig;
  auto* rig_cmd = app.add_subcommand("rigidity", "Interval [lower, upper] for R_M(r)");
  rig_cmd->add_option("matrix", rig.matrix)->required();
  rig_cmd->add_option("r", rig.r)->required();
  rig_cmd->add_flag("--exact", rig.exact, "Exhaustive search (r = 1, n <= 6)");
  rig_cmd->add_option("--budget", rig.budget, "Random restarts of the heuristic search");
  rig_cmd->add_option("--seed", rig.seed, "Search seed");
  rig_cmd->add_option("--out", rig.out, "Interval JSON file");
  rig_cmd->callback([&] { action = [&] { return cmd_rigidity(rig, g, out); }; });

  long dft_n = 0;
  std::string convention = "zero-based";
  auto* dft_cmd = app.add_subcommand("verify-dft", "Check the even/odd block form of dft(n)");
  dft_cmd->add_option("n", dft_n)->required();
  dft_cmd->add_option("--convention", convention, "Twiddle exponent convention")
      ->check(CLI::IsMember({"zero-based", "one-based"}));
  dft_cmd->callback([&] { action = [&] { return cmd_verify_dft(dft_n, convention, g, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace rigidity::cli
