#include "rigidity/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

[[noreturn]] void parse_error(const std::string& why) {
  throw Error(ErrorCode::kParse, "matrix file: " + why);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) tokens.push_back(line.substr(start, k - start));
  }
  return tokens;
}

std::size_t parse_size(std::string_view s, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    parse_error(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

Domain parse_kind(std::string_view kind, bool& sign) {
  sign = false;
  if (kind == "int") return {ScalarKind::kInteger, 0};
  if (kind == "rat") return {ScalarKind::kRational, 0};
  if (kind == "approx") return {ScalarKind::kApprox, 0};
  if (kind == "sign") {
    sign = true;
    return {ScalarKind::kInteger, 0};
  }
  if (kind.substr(0, 5) == "cyclo") {
    const std::size_t order = parse_size(kind.substr(5), "cyclotomic order");
    if (order < 2 || !is_power_of_two(order)) parse_error("cyclotomic order must be a power of two >= 2");
    return {ScalarKind::kCyclotomic, static_cast<unsigned>(order)};
  }
  parse_error("unknown kind '" + std::string(kind) + "'");
}

std::string format_entry(const Scalar& s) {
  if (s.kind() == ScalarKind::kCyclotomic && s.as_cyclotomic().is_rational()) {
    return s.as_cyclotomic().coefficients()[0].get_str();
  }
  return s.to_string();
}

}  // namespace

std::string kind_keyword(const Domain& domain) {
  switch (domain.kind) {
    case ScalarKind::kInteger: return "int";
    case ScalarKind::kRational: return "rat";
    case ScalarKind::kCyclotomic: return "cyclo" + std::to_string(domain.order);
    case ScalarKind::kApprox: return "approx";
  }
  return {};
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                    kind_keyword(m.domain()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ' ';
      out += format_entry(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_sign_matrix(const SignMatrix& s) {
  const std::size_t n = s.size();
  std::string out = std::to_string(n) + " " + std::to_string(n) + " sign\n";
  out.reserve(out.size() + n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out += s.negative(i, j) ? '-' : '+';
    out += '\n';
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) parse_error("empty input");
  const auto header = split_ws(lines[0]);
  if (header.size() != 3) parse_error("header must be '<rows> <cols> <kind>'");
  const std::size_t rows = parse_size(header[0], "row count");
  const std::size_t cols = parse_size(header[1], "column count");
  bool sign = false;
  const Domain domain = parse_kind(header[2], sign);
  if (lines.size() != rows + 1) {
    parse_error("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string_view line = lines[i + 1];
    if (sign) {
      const auto tokens = split_ws(line);
      if (tokens.size() != 1 || tokens[0].size() != cols) {
        parse_error("sign row " + std::to_string(i) + " must be " + std::to_string(cols) + " '+'/'-' characters");
      }
      for (char c : tokens[0]) {
        if (c == '+') {
          entries.emplace_back(1);
        } else if (c == '-') {
          entries.emplace_back(-1);
        } else {
          parse_error(std::string("unexpected character '") + c + "' in sign row");
        }
      }
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != cols) {
      parse_error("row " + std::to_string(i) + " has " + std::to_string(tokens.size()) +
                  " entries, expected " + std::to_string(cols));
    }
    for (auto tok : tokens) {
      Scalar s = Scalar::parse(tok);
      if (join(s.domain(), domain) != domain) {
        parse_error("entry '" + std::string(tok) + "' does not fit kind " + std::string(header[2]));
      }
      entries.push_back(s.promoted_to(domain));
    }
  }
  if (sign && rows != cols) parse_error("sign matrices must be square");
  return Matrix(rows, cols, std::move(entries), domain);
}

std::string format_perturbation(const Perturbation& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.changes()) {
    nlohmann::ordered_json item;
    item["row"] = c.row;
    item["col"] = c.col;
    item["value"] = c.value.to_string();
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

Perturbation parse_perturbation(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("perturbation JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::kParse, "perturbation JSON must be an array");
  std::vector<Change> changes;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("row") || !item.contains("col") || !item.contains("value")) {
      throw Error(ErrorCode::kParse, "perturbation entries need row, col and value");
    }
    if (!item["row"].is_number_unsigned() || !item["col"].is_number_unsigned()) {
      throw Error(ErrorCode::kParse, "row and col must be non-negative integers");
    }
    const auto& v = item["value"];
    Scalar value;
    if (v.is_string()) {
      value = Scalar::parse(v.get<std::string>());
    } else if (v.is_number_integer()) {
      value = Scalar(mpz_class(v.dump()));
    } else {
      throw Error(ErrorCode::kParse, "value must be a scalar token string or an integer");
    }
    changes.push_back({item["row"].get<std::size_t>(), item["col"].get<std::size_t>(), std::move(value)});
  }
  return Perturbation(std::move(changes));
}

std::string matrix_digest(const Matrix& m) {
  const std::string text = format_matrix(m);
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(hash[k]);
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
}

}  // namespace rigidity
