#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ggf/lattice.hpp"
#include "ggf/seqspace.hpp"
#include "ggf/types.hpp"

namespace ggf::cli {

/// Flat key=value experiment config. Lines may be blank or start with '#'.
/// Command-line flags override file values.
class KvConfig {
 public:
  static KvConfig load(const std::string& path);

  void set(const std::string& key, std::string value) { kv_[key] = std::move(value); }
  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;

  std::string require(const std::string& key) const;
  int require_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

 private:
  std::map<std::string, std::string> kv_;
};

/// "sep:a,b" or "gen:(k1,l1);(k2,l2)".
Lattice parse_lattice(const std::string& spec, int L);

/// Generator specs:
///   gaussian | box:w | file:path | random:rank[:seed]
///   multiwindow:sub+sub+...        (subs: gaussian | box:w | file:path, signals)
///   locop:mask.csv:windowspec
///   underspread:k,l,re,im;k,l,re,im;...   (needs a lattice for its precondition)
Mat parse_generator(const std::string& spec, int L, std::uint64_t seed,
                    const Lattice* lat = nullptr);

/// "const" | "const:c" | "poly:s" | "table:path.csv". Returns the weight and
/// the value reported in the CSV "s" column (polynomial exponent, 0 for
/// constant, nan for tables).
std::pair<Weight, double> parse_weight(const std::string& spec, int L);

/// Window specs: gaussian | box:w | file:path (a ggf-signal file).
Vec parse_window_spec(const std::string& spec, int L);

/// A number >= 1 or "inf".
double parse_exponent(const std::string& spec);

}  // namespace ggf::cli
