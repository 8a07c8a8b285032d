#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "magws/serialize.hpp"

using namespace magws;

TEST_CASE("numbers round-trip at 17 digits") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::strtod(format_json_number(v).c_str(), nullptr) == v);
  CHECK(format_csv_number(1.0 / 3.0) == "0.333333333333");
  CHECK_THROWS(format_json_number(std::numeric_limits<double>::quiet_NaN()));
  CHECK_THROWS(format_csv_number(std::numeric_limits<double>::infinity()));
}

TEST_CASE("kernel and algebra JSON round trips") {
  const MagneticParams p{0.75, 1.0};
  KernelCoeffs f(3, p);
  f.c(0, 2) = {1.0 / 3.0, -0.1};
  f.c(3, 1) = {-7.25, 0.0};
  const KernelCoeffs g = kernel_from_json(kernel_to_json(f));
  CHECK(g.cutoff == 3);
  CHECK(g.params.ell_B == 0.75);
  CHECK((g.c - f.c).cwiseAbs().maxCoeff() == 0.0);

  AlgebraElement x(2, p);
  x.a(1, 0) = {0.0, std::sqrt(2.0)};
  const AlgebraElement y = algebra_from_json(algebra_to_json(x));
  CHECK((y.a - x.a).cwiseAbs().maxCoeff() == 0.0);
  CHECK(algebra_to_json(AlgebraElement(1, p)) == "{\"cutoff\": 1, \"ell_B\": 0.75, \"entries\": []}");

  CHECK_THROWS(algebra_from_json("{\"cutoff\": 1, \"ell_B\": 1, \"entries\": [[2, 0, 1, 0]]}"));
  CHECK_THROWS(algebra_from_json("{\"cutoff\": 1, \"ell_B\": 1, \"entries\": [[0, 0, 1]]}"));
  CHECK_THROWS(algebra_from_json("{\"cutoff\": -1, \"ell_B\": 1, \"entries\": []}"));
  CHECK_THROWS(kernel_from_json("{\"cutoff\": 1, \"ell_B\": 0, \"coeffs\": []}"));
  CHECK_THROWS(kernel_from_json("not json"));
}

TEST_CASE("CSV quoting follows RFC 4180") {
  CsvTable t;
  t.header = {"name", "value"};
  t.rows = {{"plain", "1"}, {"a,b", "say \"hi\""}};
  CHECK(t.str() == "name,value\r\nplain,1\r\n\"a,b\",\"say \"\"hi\"\"\"\r\n");
  t.rows.push_back({"short"});
  CHECK_THROWS(t.str());
}

TEST_CASE("atomic writes create parent directories") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "magws_serialize_test";
  fs::remove_all(dir);
  const std::string path = (dir / "a" / "b.txt").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str() == "second");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  fs::remove_all(dir);
}
