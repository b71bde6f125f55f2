#pragma once

#include <string>
#include <string_view>

#include "rigidity/matrix.hpp"

namespace rigidity {

// Matrix text format:
//
//   <rows> <cols> <kind>
//   <rows lines of whitespace-separated scalar tokens>
//
// kind is one of int, rat, cyclo<order>, approx, sign. Sign rows are
// contiguous strings of '+' and '-'. In cyclo matrices, entries with no w
// terms are written as plain rationals. Every line ends with '\n'.
std::string format_matrix(const Matrix& m);
std::string format_sign_matrix(const SignMatrix& s);

// Parses any kind; sign files yield an integer matrix of +1/-1.
Matrix parse_matrix(std::string_view text);

// The kind keyword of a matrix file ("int", "cyclo8", ...).
std::string kind_keyword(const Domain& domain);

// Perturbation file: JSON array of {"row": r, "col": c, "value": "<scalar>"}
// with 0-based indices. Numeric JSON values are accepted for integers.
std::string format_perturbation(const Perturbation& p);
Perturbation parse_perturbation(std::string_view json_text);

// Hex SHA-256 of format_matrix(m).
std::string matrix_digest(const Matrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rigidity
