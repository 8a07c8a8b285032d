#pragma once

#include <string>
#include <vector>

#include "magws/algebra.hpp"

namespace magws {

// 17 significant digits, round-trip exact.
std::string format_json_number(double v);
// 12 significant digits for tables.
std::string format_csv_number(double v);

// {"cutoff": K, "ell_B": l, "coeffs": [[n, m, re, im], ...]}, nonzero entries only
std::string kernel_to_json(const KernelCoeffs& f);
KernelCoeffs kernel_from_json(const std::string& text);

// {"cutoff": K, "ell_B": l, "entries": [[k, j, re, im], ...]} for a(k,j) Ups_{j->k}
std::string algebra_to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const std::string& text);

// RFC 4180 table with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace magws
