#include "ggf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ggf {

namespace {

void write_token(std::ostream& out, cplx v) {
  out << format_double(v.real()) << ',' << format_double(v.imag());
}

cplx parse_token(const std::string& token) {
  auto comma = token.find(',');
  if (comma == std::string::npos) throw ParseError("expected complex token \"re,im\", got \"" + token + "\"");
  std::size_t pos_re = 0, pos_im = 0;
  double re, im;
  try {
    re = std::stod(token.substr(0, comma), &pos_re);
    im = std::stod(token.substr(comma + 1), &pos_im);
  } catch (const std::exception&) {
    throw ParseError("malformed complex token \"" + token + "\"");
  }
  if (pos_re != comma || pos_im != token.size() - comma - 1) {
    throw ParseError("malformed complex token \"" + token + "\"");
  }
  return {re, im};
}

int read_header(std::istream& in, const std::string& expected) {
  std::string tag;
  int L = 0;
  if (!(in >> tag >> L)) throw ParseError("missing \"" + expected + " L\" header");
  if (tag != expected) throw ParseError("expected header \"" + expected + "\", got \"" + tag + "\"");
  if (L < 2) throw ParseError(expected + ": dimension must be at least 2");
  return L;
}

std::vector<cplx> read_entries(std::istream& in, std::size_t count, const std::string& what) {
  std::vector<cplx> entries;
  entries.reserve(count);
  std::string token;
  while (entries.size() < count && (in >> token)) {
    entries.push_back(parse_token(token));
  }
  if (entries.size() < count) {
    throw ParseError(what + ": expected " + std::to_string(count) + " entries, found " +
                     std::to_string(entries.size()));
  }
  if (in >> token) throw ParseError(what + ": trailing content \"" + token + "\"");
  return entries;
}

template <typename Fn>
void save_to(const std::string& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
  fn(out);
  if (!out) throw ParseError("failed writing \"" + path + "\"");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  return in;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex_j(cplx v) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", v.real(), v.imag());
  return buf;
}

void write_signal(std::ostream& out, const Vec& psi) {
  out << "ggf-signal " << psi.size() << '\n';
  for (Eigen::Index t = 0; t < psi.size(); ++t) {
    write_token(out, psi(t));
    out << '\n';
  }
}

void write_op(std::ostream& out, const Mat& s) {
  out << "ggf-op " << s.rows() << '\n';
  for (Eigen::Index x = 0; x < s.rows(); ++x) {
    for (Eigen::Index y = 0; y < s.cols(); ++y) {
      if (y) out << ' ';
      write_token(out, s(x, y));
    }
    out << '\n';
  }
}

void write_spreading(std::ostream& out, const SpreadingCoeffs& c) {
  out << "ggf-spread " << c.L << '\n';
  for (int k = 0; k < c.L; ++k) {
    for (int l = 0; l < c.L; ++l) {
      if (l) out << ' ';
      write_token(out, c.table(k, l));
    }
    out << '\n';
  }
}

Vec read_signal(std::istream& in) {
  int L = read_header(in, "ggf-signal");
  auto entries = read_entries(in, L, "ggf-signal");
  Vec psi(L);
  for (int t = 0; t < L; ++t) psi(t) = entries[t];
  return psi;
}

Mat read_op(std::istream& in) {
  int L = read_header(in, "ggf-op");
  auto entries = read_entries(in, static_cast<std::size_t>(L) * L, "ggf-op");
  Mat s(L, L);
  for (int x = 0; x < L; ++x) {
    for (int y = 0; y < L; ++y) s(x, y) = entries[static_cast<std::size_t>(x) * L + y];
  }
  return s;
}

SpreadingCoeffs read_spreading(std::istream& in) {
  int L = read_header(in, "ggf-spread");
  auto entries = read_entries(in, static_cast<std::size_t>(L) * L, "ggf-spread");
  SpreadingCoeffs c{L, Mat(L, L)};
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) c.table(k, l) = entries[static_cast<std::size_t>(k) * L + l];
  }
  return c;
}

void save_signal(const std::string& path, const Vec& psi) {
  save_to(path, [&](std::ostream& out) { write_signal(out, psi); });
}

void save_op(const std::string& path, const Mat& s) {
  save_to(path, [&](std::ostream& out) { write_op(out, s); });
}

void save_spreading(const std::string& path, const SpreadingCoeffs& c) {
  save_to(path, [&](std::ostream& out) { write_spreading(out, c); });
}

Vec load_signal(const std::string& path) {
  auto in = open_input(path);
  return read_signal(in);
}

Mat load_op(const std::string& path) {
  auto in = open_input(path);
  return read_op(in);
}

SpreadingCoeffs load_spreading(const std::string& path) {
  auto in = open_input(path);
  return read_spreading(in);
}

RealMat load_real_grid(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("grid \"" + path + "\": malformed cell \"" + cell + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("grid \"" + path + "\": empty");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("grid \"" + path + "\": ragged rows");
  }
  RealMat grid(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) grid(i, j) = rows[i][j];
  }
  return grid;
}

}  // namespace ggf
