#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ggf/io.hpp"
#include "ggf/rng.hpp"
#include "ggf/spreading.hpp"

using namespace ggf;

TEST_CASE("signal and operator text formats round-trip exactly") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int L = 2 + static_cast<int>(rng.integer() % 15);
    Vec psi = rng.signal(L);
    std::stringstream buf;
    write_signal(buf, psi);
    CHECK((read_signal(buf) - psi).norm() == 0.0);

    Mat s = rng.op(L, std::min(L, 3));
    std::stringstream buf2;
    write_op(buf2, s);
    CHECK((read_op(buf2) - s).norm() == 0.0);
  }
}

TEST_CASE("spreading tables round-trip exactly") {
  Rng rng(5);
  SpreadingCoeffs c{6, Mat(6, 6)};
  for (int k = 0; k < 6; ++k)
    for (int l = 0; l < 6; ++l) c.table(k, l) = rng.complex_gaussian();
  std::stringstream buf;
  write_spreading(buf, c);
  SpreadingCoeffs back = read_spreading(buf);
  CHECK(back.L == 6);
  CHECK((back.table - c.table).norm() == 0.0);
}

TEST_CASE("headers are validated") {
  std::stringstream wrong("ggf-op 4\n1,0 0,0 0,0 1,0\n");
  CHECK_THROWS_AS(read_signal(wrong), ParseError);
  std::stringstream tiny("ggf-signal 1\n1,0\n");
  CHECK_THROWS_AS(read_signal(tiny), ParseError);
  std::stringstream empty("");
  CHECK_THROWS_AS(read_signal(empty), ParseError);
}

TEST_CASE("token counts are validated") {
  std::stringstream missing("ggf-signal 3\n1,0 2,0\n");
  CHECK_THROWS_AS(read_signal(missing), ParseError);
  std::stringstream extra("ggf-signal 2\n1,0 2,0 3,0\n");
  CHECK_THROWS_AS(read_signal(extra), ParseError);
  std::stringstream garbled("ggf-signal 2\n1,0 nope\n");
  CHECK_THROWS_AS(read_signal(garbled), ParseError);
}

TEST_CASE("format_double spells special values and round-trips") {
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  double v = 0.1234567890123456789;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("complex CSV literals carry an explicit sign and j suffix") {
  CHECK(format_complex_j({1.5, -0.25}) == "1.5-0.25j");
  CHECK(format_complex_j({0.0, 2.0}) == "0+2j");
}

TEST_CASE("real grids parse and reject ragged rows") {
  const char* path = "test_grid.csv";
  {
    std::ofstream out(path);
    out << "1,2,3\n4,5,6\n";
  }
  RealMat grid = load_real_grid(path);
  CHECK(grid.rows() == 2);
  CHECK(grid(1, 2) == 6.0);
  {
    std::ofstream out(path);
    out << "1,2\n3\n";
  }
  CHECK_THROWS_AS(load_real_grid(path), ParseError);
  std::remove(path);
}
