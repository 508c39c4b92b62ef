#pragma once

#include <iosfwd>
#include <string>

#include "ggf/spreading.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// Plain-text round-trip formats. Each file starts with a one-line header
/// ("ggf-signal L", "ggf-op L" or "ggf-spread L") followed by one complex
/// entry per whitespace-separated token, written as "re,im"; matrices are
/// row-major. Doubles are printed with 17 significant digits so round trips
/// are exact.

void write_signal(std::ostream& out, const Vec& psi);
void write_op(std::ostream& out, const Mat& s);
void write_spreading(std::ostream& out, const SpreadingCoeffs& c);

Vec read_signal(std::istream& in);
Mat read_op(std::istream& in);
SpreadingCoeffs read_spreading(std::istream& in);

void save_signal(const std::string& path, const Vec& psi);
void save_op(const std::string& path, const Mat& s);
void save_spreading(const std::string& path, const SpreadingCoeffs& c);

Vec load_signal(const std::string& path);
Mat load_op(const std::string& path);
SpreadingCoeffs load_spreading(const std::string& path);

/// Shortest exact decimal form; "inf"/"nan" spelled out.
std::string format_double(double v);

/// CSV complex literal "re+imj" (e.g. "1.5-0.25j").
std::string format_complex_j(cplx v);

/// Comma-separated real L x L grid, one row per line.
RealMat load_real_grid(const std::string& path);

}  // namespace ggf
