#include "magws/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace magws {

namespace {

std::string fmt(const char* f, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite number in output");
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

using json = nlohmann::ordered_json;

MagneticParams params_from(const json& j) {
  MagneticParams p;
  p.ell_B = j.at("ell_B").get<double>();
  p.validate();
  return p;
}

int cutoff_from(const json& j) {
  const int k = j.at("cutoff").get<int>();
  if (k < 0) throw std::invalid_argument("negative cutoff");
  return k;
}

std::string matrix_json(int cutoff, double ell, const Eigen::MatrixXcd& c, const char* key) {
  std::string s = "{\"cutoff\": " + std::to_string(cutoff) + ", \"ell_B\": " + format_json_number(ell) + ", \"" +
                  key + "\": [";
  bool first = true;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index k = 0; k < c.cols(); ++k) {
      if (c(i, k) == cplx(0.0)) continue;
      if (!first) s += ", ";
      first = false;
      s += "[" + std::to_string(i) + ", " + std::to_string(k) + ", " + format_json_number(c(i, k).real()) + ", " +
           format_json_number(c(i, k).imag()) + "]";
    }
  return s + "]}";
}

void fill_matrix(const json& entries, int cutoff, Eigen::MatrixXcd& c) {
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("entry must be [i, j, re, im]");
    const int i = e[0].get<int>(), k = e[1].get<int>();
    if (i < 0 || k < 0 || i > cutoff || k > cutoff) throw std::invalid_argument("entry index outside cutoff");
    c(i, k) = cplx(e[2].get<double>(), e[3].get<double>());
  }
}

}  // namespace

std::string format_json_number(double v) { return fmt("%.17g", v); }
std::string format_csv_number(double v) { return fmt("%.12g", v); }

std::string kernel_to_json(const KernelCoeffs& f) { return matrix_json(f.cutoff, f.params.ell_B, f.c, "coeffs"); }

KernelCoeffs kernel_from_json(const std::string& text) {
  const json j = json::parse(text);
  KernelCoeffs f(cutoff_from(j), params_from(j));
  fill_matrix(j.at("coeffs"), f.cutoff, f.c);
  return f;
}

std::string algebra_to_json(const AlgebraElement& x) { return matrix_json(x.cutoff, x.params.ell_B, x.a, "entries"); }

AlgebraElement algebra_from_json(const std::string& text) {
  const json j = json::parse(text);
  AlgebraElement x(cutoff_from(j), params_from(j));
  fill_matrix(j.at("entries"), x.cutoff, x.a);
  return x;
}

std::string CsvTable::str() const {
  auto field = [](const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char ch : f) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + field(r[i]);
    return s + "\r\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::invalid_argument("csv row width differs from header");
    out += line(r);
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
    if (!os.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace magws
