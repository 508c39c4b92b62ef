#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "ggf/generators.hpp"
#include "ggf/io.hpp"

namespace ggf::cli {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  auto end = s.find_last_not_of(" \t\r");
  return begin == std::string::npos ? "" : s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

int parse_int_strict(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("field " + field + ": expected an integer, got \"" + s + "\"");
  }
}

double parse_double_strict(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("field " + field + ": expected a number, got \"" + s + "\"");
  }
}

PhasePoint parse_point(const std::string& token) {
  // "(k,l)"
  std::string t = trim(token);
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
    throw ParseError("lattice: expected \"(k,l)\", got \"" + token + "\"");
  }
  auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2) throw ParseError("lattice: expected \"(k,l)\", got \"" + token + "\"");
  return {parse_int_strict(trim(parts[0]), "lattice"), parse_int_strict(trim(parts[1]), "lattice")};
}

Vec parse_window(const std::string& spec, int L) {
  if (spec == "gaussian") return window_gaussian(L);
  if (spec.rfind("box:", 0) == 0) {
    return window_box(L, parse_int_strict(spec.substr(4), "gen"));
  }
  if (spec.rfind("file:", 0) == 0) return load_signal(spec.substr(5));
  throw ParseError("field gen: unknown window spec \"" + spec + "\"");
}

}  // namespace

KvConfig KvConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config \"" + path + "\"");
  KvConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config \"" + path + "\" line " + std::to_string(lineno) +
                       ": expected key=value");
    }
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

std::optional<std::string> KvConfig::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  return it->second;
}

std::string KvConfig::require(const std::string& key) const {
  auto v = get(key);
  if (!v) throw ParseError("missing required field " + key);
  return *v;
}

int KvConfig::require_int(const std::string& key) const {
  return parse_int_strict(require(key), key);
}

int KvConfig::get_int(const std::string& key, int fallback) const {
  auto v = get(key);
  return v ? parse_int_strict(*v, key) : fallback;
}

std::uint64_t KvConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    std::size_t pos = 0;
    std::uint64_t value = std::stoull(*v, &pos);
    if (pos != v->size()) throw ParseError("");
    return value;
  } catch (const std::exception&) {
    throw ParseError("field " + key + ": expected an unsigned integer, got \"" + *v + "\"");
  }
}

double KvConfig::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  return v ? parse_double_strict(*v, key) : fallback;
}

std::string KvConfig::get_string(const std::string& key, const std::string& fallback) const {
  auto v = get(key);
  return v ? *v : fallback;
}

bool KvConfig::get_bool(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1") return true;
  if (*v == "false" || *v == "0") return false;
  throw ParseError("field " + key + ": expected true/false, got \"" + *v + "\"");
}

Lattice parse_lattice(const std::string& spec, int L) {
  if (spec.rfind("sep:", 0) == 0) {
    auto parts = split(spec.substr(4), ',');
    if (parts.size() != 2) throw ParseError("field lattice: expected \"sep:a,b\", got \"" + spec + "\"");
    return Lattice::separable(L, parse_int_strict(trim(parts[0]), "lattice"),
                              parse_int_strict(trim(parts[1]), "lattice"));
  }
  if (spec.rfind("gen:", 0) == 0) {
    auto parts = split(spec.substr(4), ';');
    if (parts.size() != 2) {
      throw ParseError("field lattice: expected \"gen:(k1,l1);(k2,l2)\", got \"" + spec + "\"");
    }
    return Lattice::from_generators(L, parse_point(parts[0]), parse_point(parts[1]));
  }
  throw ParseError("field lattice: unknown spec \"" + spec + "\"");
}

Mat parse_generator(const std::string& spec, int L, std::uint64_t seed, const Lattice* lat) {
  if (spec == "gaussian" || spec.rfind("box:", 0) == 0) {
    Vec w = parse_window(spec, L);
    return rank_one(w, w);
  }
  if (spec.rfind("file:", 0) == 0) {
    Mat s = load_op(spec.substr(5));
    if (s.rows() != L) {
      throw ParseError("field gen: operator file has dimension " + std::to_string(s.rows()) +
                       ", expected " + std::to_string(L));
    }
    return s;
  }
  if (spec.rfind("random:", 0) == 0) {
    auto parts = split(spec.substr(7), ':');
    if (parts.size() < 1 || parts.size() > 2) {
      throw ParseError("field gen: expected \"random:rank[:seed]\", got \"" + spec + "\"");
    }
    int rank = parse_int_strict(parts[0], "gen");
    std::uint64_t s = parts.size() == 2 ? std::stoull(parts[1]) : seed;
    return random_op(L, rank, s);
  }
  if (spec.rfind("multiwindow:", 0) == 0) {
    WindowSet ws;
    for (const auto& sub : split(spec.substr(12), '+')) ws.windows.push_back(parse_window(sub, L));
    return multiwindow_op(ws);
  }
  if (spec.rfind("locop:", 0) == 0) {
    std::string rest = spec.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParseError("field gen: expected \"locop:mask.csv:window\", got \"" + spec + "\"");
    }
    RealMat mask = load_real_grid(rest.substr(0, colon));
    if (mask.rows() != L || mask.cols() != L) {
      throw ParseError("field gen: mask grid must be " + std::to_string(L) + "x" + std::to_string(L));
    }
    Vec w = parse_window(rest.substr(colon + 1), L);
    return localization_op(mask.cast<cplx>(), w);
  }
  if (spec.rfind("underspread:", 0) == 0) {
    std::vector<PhasePoint> support;
    std::vector<cplx> coeffs;
    for (const auto& entry : split(spec.substr(12), ';')) {
      auto parts = split(entry, ',');
      if (parts.size() != 4) {
        throw ParseError("field gen: expected \"underspread:k,l,re,im;...\", got \"" + spec + "\"");
      }
      support.push_back({parse_int_strict(trim(parts[0]), "gen"), parse_int_strict(trim(parts[1]), "gen")});
      coeffs.emplace_back(parse_double_strict(trim(parts[2]), "gen"),
                          parse_double_strict(trim(parts[3]), "gen"));
    }
    if (support.empty()) throw ParseError("field gen: underspread support is empty");
    if (!lat) throw ParseError("field gen: underspread generators need a lattice");
    return underspread_op(support, coeffs, *lat);
  }
  throw ParseError("field gen: unknown generator spec \"" + spec + "\"");
}

std::pair<Weight, double> parse_weight(const std::string& spec, int L) {
  if (spec == "const") return {Weight::constant(), 0.0};
  if (spec.rfind("const:", 0) == 0) {
    return {Weight::constant(parse_double_strict(spec.substr(6), "weight")), 0.0};
  }
  if (spec.rfind("poly:", 0) == 0) {
    double s = parse_double_strict(spec.substr(5), "weight");
    return {Weight::polynomial(L, s), s};
  }
  if (spec.rfind("table:", 0) == 0) {
    RealMat grid = load_real_grid(spec.substr(6));
    if (grid.rows() != L || grid.cols() != L) {
      throw ParseError("field weight: table must be " + std::to_string(L) + "x" + std::to_string(L));
    }
    return {Weight::table(grid), std::numeric_limits<double>::quiet_NaN()};
  }
  throw ParseError("field weight: unknown spec \"" + spec + "\"");
}

Vec parse_window_spec(const std::string& spec, int L) {
  Vec w = parse_window(spec, L);
  if (w.size() != L) {
    throw ParseError("field ref_window: window has length " + std::to_string(w.size()) +
                     ", expected " + std::to_string(L));
  }
  return w;
}

double parse_exponent(const std::string& spec) {
  if (spec == "inf") return kInf;
  double p = parse_double_strict(spec, "p");
  if (!(p >= 1.0)) throw ParseError("field p: exponent must be at least 1 or \"inf\"");
  return p;
}

}  // namespace ggf::cli
