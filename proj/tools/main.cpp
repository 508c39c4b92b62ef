// ggf: config-driven experiment runner for Gabor g-frames on C^L.
//
// Exit codes: 0 success, 2 precondition/config/file failure, 3 numerical
// tolerance failure (an identity that the library guarantees did not hold).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "config.hpp"
#include "ggf/generators.hpp"
#include "ggf/gframe.hpp"
#include "ggf/io.hpp"
#include "ggf/rng.hpp"
#include "ggf/seqspace.hpp"
#include "ggf/spreading.hpp"
#include "ggf/tfcore.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ggf;
using cli::KvConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

struct CommonArgs {
  std::string config_path;
  std::string L;
  std::string lattice;
  std::string gen;
  std::string gen2;
  std::string p;
  std::string weight;
  std::string probes;
  std::string seed;
  std::string out;
  std::string out_op;
  std::string signal;
  std::string ref_window;
  bool json_output = false;

  // Flags override config-file values; only explicitly passed flags count.
  KvConfig merge(const std::string& command) const {
    KvConfig cfg;
    if (!config_path.empty()) cfg = KvConfig::load(config_path);
    cfg.set("command", command);
    auto maybe = [&cfg](const char* key, const std::string& v) {
      if (!v.empty()) cfg.set(key, v);
    };
    maybe("L", L);
    maybe("lattice", lattice);
    maybe("gen", gen);
    maybe("gen2", gen2);
    maybe("p", p);
    maybe("weight", weight);
    maybe("probes", probes);
    maybe("seed", seed);
    maybe("out", out);
    maybe("out_op", out_op);
    maybe("signal", signal);
    maybe("ref_window", ref_window);
    if (json_output) cfg.set("json", "true");
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "flat key=value config file; flags override");
  cmd->add_option("--L", args.L, "ambient dimension L (signals in C^L)");
  cmd->add_option("--lattice", args.lattice, "lattice spec: sep:a,b or gen:(k1,l1);(k2,l2)");
  cmd->add_option("--gen", args.gen,
                  "generator spec: gaussian | box:w | file:path | random:rank[:seed] | "
                  "multiwindow:sub+sub | locop:mask.csv:window | underspread:k,l,re,im;...");
  cmd->add_option("--p", args.p, "sequence-space exponent in [1,inf] (literal \"inf\" allowed)");
  cmd->add_option("--weight", args.weight, "weight spec: const | const:c | poly:s | table:path.csv");
  cmd->add_option("--probes", args.probes, "number of random probe signals");
  cmd->add_option("--seed", args.seed, "seed for all randomness; recorded in reports");
  cmd->add_option("--out", args.out, "report file path (CSV, or JSON with --json)");
  cmd->add_flag("--json", args.json_output, "write the report as JSON instead of CSV");
}

void write_report(const KvConfig& cfg, const std::string& csv, const json& j,
                  const std::string& kv_summary) {
  std::cout << kv_summary;
  std::string out = cfg.get_string("out", "");
  bool as_json = cfg.get_bool("json", false);
  if (out.empty()) {
    if (as_json) std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw ParseError("cannot open \"" + out + "\" for writing");
  if (as_json) {
    file << j.dump(2) << '\n';
  } else {
    file << csv;
  }
}

json report_to_json(const GFrameReport& report) {
  return json{{"L", report.L},
              {"lattice", report.lattice},
              {"A", report.lower},
              {"B", report.upper},
              {"tightness", format_double(report.tightness)},
              {"janssen_residual", report.janssen_residual},
              {"dual_residual", format_double(report.dual_residual)},
              {"is_frame", report.is_frame},
              {"seed", report.seed}};
}

struct Experiment {
  int L;
  Lattice lat;
  Mat s;
  std::uint64_t seed;

  static Experiment from(const KvConfig& cfg) {
    int L = cfg.require_int("L");
    Lattice lat = cli::parse_lattice(cfg.require("lattice"), L);
    std::uint64_t seed = cfg.get_u64("seed", 0);
    Mat s = cli::parse_generator(cfg.require("gen"), L, seed, &lat);
    return {L, lat, s, seed};
  }
};

Vec resolve_signal(const KvConfig& cfg, int L, std::uint64_t seed) {
  std::string spec = cfg.get_string("signal", "random");
  if (spec == "random") {
    Rng rng(seed);
    return rng.signal(L);
  }
  Vec psi = load_signal(spec);
  if (psi.size() != L) {
    throw ParseError("field signal: file has length " + std::to_string(psi.size()) +
                     ", expected " + std::to_string(L));
  }
  return psi;
}

int cmd_frame_bounds(const KvConfig& cfg) {
  Experiment ex = Experiment::from(cfg);
  GFrameReport report = frame_bounds(ex.s, ex.lat);
  report.seed = ex.seed;
  std::string csv = GFrameReport::csv_header() + "\n" + report.to_csv_row() + "\n";
  write_report(cfg, csv, report_to_json(report), report.to_kv());
  return kExitOk;
}

int cmd_janssen(const KvConfig& cfg) {
  Experiment ex = Experiment::from(cfg);
  Mat direct = periodize(ex.s, ex.lat);
  Mat series = janssen_rep(ex.s, ex.lat);
  double denom = std::max(direct.norm(), series.norm());
  double residual = denom > 0 ? (direct - series).norm() / denom : 0.0;
  std::ostringstream kv;
  kv << "L=" << ex.L << "\nlattice=" << ex.lat.to_string()
     << "\njanssen_residual=" << format_double(residual) << "\nseed=" << ex.seed << '\n';
  std::string csv = "L,lattice,janssen_residual,seed\n" + std::to_string(ex.L) + ",\"" +
                    ex.lat.to_string() + "\"," + format_double(residual) + "," +
                    std::to_string(ex.seed) + "\n";
  json j{{"L", ex.L},
         {"lattice", ex.lat.to_string()},
         {"janssen_residual", residual},
         {"seed", ex.seed}};
  write_report(cfg, csv, j, kv.str());
  if (residual > 1e-10) {
    std::cerr << "tolerance failure: janssen_residual " << format_double(residual) << " > 1e-10\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_wexler_raz(const KvConfig& cfg) {
  int L = cfg.require_int("L");
  Lattice lat = cli::parse_lattice(cfg.require("lattice"), L);
  std::uint64_t seed = cfg.get_u64("seed", 0);
  Mat s = cli::parse_generator(cfg.require("gen"), L, seed, &lat);
  std::string t_spec = cfg.require("gen2");
  Mat t = (t_spec == "dual") ? canonical_dual(s, lat) : cli::parse_generator(t_spec, L, seed, &lat);
  WexlerRazResult result = wexler_raz_check(s, t, lat);
  std::ostringstream kv;
  kv << "L=" << L << "\nlattice=" << lat.to_string()
     << "\nbiorth_ok=" << (result.biorth_ok ? "true" : "false")
     << "\nrecon_ok=" << (result.recon_ok ? "true" : "false")
     << "\nbiorth_deviation=" << format_double(result.biorth_deviation)
     << "\nrecon_residual=" << format_double(result.recon_residual) << "\nseed=" << seed << '\n';
  std::string csv = "L,lattice,biorth_ok,recon_ok,biorth_deviation,recon_residual,seed\n" +
                    std::to_string(L) + ",\"" + lat.to_string() + "\"," +
                    (result.biorth_ok ? "true" : "false") + "," +
                    (result.recon_ok ? "true" : "false") + "," +
                    format_double(result.biorth_deviation) + "," +
                    format_double(result.recon_residual) + "," + std::to_string(seed) + "\n";
  json j{{"L", L},
         {"lattice", lat.to_string()},
         {"biorth_ok", result.biorth_ok},
         {"recon_ok", result.recon_ok},
         {"biorth_deviation", result.biorth_deviation},
         {"recon_residual", result.recon_residual},
         {"seed", seed}};
  write_report(cfg, csv, j, kv.str());
  if (result.biorth_ok != result.recon_ok) {
    std::cerr << "tolerance failure: Wexler-Raz faces disagree\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_dual(const KvConfig& cfg) {
  Experiment ex = Experiment::from(cfg);
  Mat dual = canonical_dual(ex.s, ex.lat);  // throws NotAFrame -> exit 2
  std::string op_path = cfg.get_string("out_op", "dual.op");
  save_op(op_path, dual);
  GFrameReport report = frame_bounds(ex.s, ex.lat);
  report.seed = ex.seed;
  std::ostringstream kv;
  kv << "L=" << ex.L << "\nlattice=" << ex.lat.to_string()
     << "\nA=" << format_double(report.lower) << "\nB=" << format_double(report.upper)
     << "\ndual_residual=" << format_double(report.dual_residual) << "\nop_file=" << op_path
     << "\nseed=" << ex.seed << '\n';
  std::string csv = "L,lattice,A,B,dual_residual,op_file,seed\n" + std::to_string(ex.L) + ",\"" +
                    ex.lat.to_string() + "\"," + format_double(report.lower) + "," +
                    format_double(report.upper) + "," + format_double(report.dual_residual) + "," +
                    op_path + "," + std::to_string(ex.seed) + "\n";
  json j{{"L", ex.L},          {"lattice", ex.lat.to_string()},
         {"A", report.lower},  {"B", report.upper},
         {"dual_residual", report.dual_residual}, {"op_file", op_path},
         {"seed", ex.seed}};
  write_report(cfg, csv, j, kv.str());
  return kExitOk;
}

int cmd_reconstruct(const KvConfig& cfg) {
  Experiment ex = Experiment::from(cfg);
  Vec psi = resolve_signal(cfg, ex.L, ex.seed);
  Mat dual = canonical_dual(ex.s, ex.lat);
  Vec via_dual_analysis = synthesis(ex.s, ex.lat, analysis(dual, ex.lat, psi));
  Vec via_dual_synthesis = synthesis(dual, ex.lat, analysis(ex.s, ex.lat, psi));
  double scale = psi.norm();
  double err1 = (via_dual_analysis - psi).norm() / scale;
  double err2 = (via_dual_synthesis - psi).norm() / scale;
  std::ostringstream kv;
  kv << "L=" << ex.L << "\nlattice=" << ex.lat.to_string()
     << "\nerror_ds_cr=" << format_double(err1) << "\nerror_dr_cs=" << format_double(err2)
     << "\nseed=" << ex.seed << '\n';
  std::string csv = "L,lattice,error_ds_cr,error_dr_cs,seed\n" + std::to_string(ex.L) + ",\"" +
                    ex.lat.to_string() + "\"," + format_double(err1) + "," + format_double(err2) +
                    "," + std::to_string(ex.seed) + "\n";
  json j{{"L", ex.L},
         {"lattice", ex.lat.to_string()},
         {"error_ds_cr", err1},
         {"error_dr_cs", err2},
         {"seed", ex.seed}};
  write_report(cfg, csv, j, kv.str());
  if (err1 > 1e-9 || err2 > 1e-9) {
    std::cerr << "tolerance failure: reconstruction error above 1e-9\n";
    return kExitTolerance;
  }
  return kExitOk;
}

int cmd_cohen(const KvConfig& cfg) {
  int L = cfg.require_int("L");
  std::uint64_t seed = cfg.get_u64("seed", 0);
  Mat s = cli::parse_generator(cfg.require("gen"), L, seed, nullptr);
  Vec psi = resolve_signal(cfg, L, seed);
  RealMat q = cohen_map(s, psi);
  std::ostringstream grid;
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      if (l) grid << ',';
      grid << format_double(q(k, l));
    }
    grid << '\n';
  }
  double total = q.sum();
  double expected = L * s.squaredNorm() * psi.squaredNorm();
  std::ostringstream kv;
  kv << "L=" << L << "\ncohen_sum=" << format_double(total)
     << "\ncohen_sum_expected=" << format_double(expected) << "\nseed=" << seed << '\n';
  json j{{"L", L}, {"cohen_sum", total}, {"cohen_sum_expected", expected}, {"seed", seed}};
  std::vector<std::vector<double>> rows(L, std::vector<double>(L));
  for (int k = 0; k < L; ++k)
    for (int l = 0; l < L; ++l) rows[k][l] = q(k, l);
  j["table"] = rows;
  write_report(cfg, grid.str(), j, kv.str());
  return kExitOk;
}

int cmd_norm_equiv(const KvConfig& cfg) {
  Experiment ex = Experiment::from(cfg);
  double p = cli::parse_exponent(cfg.get_string("p", "2"));
  auto [weight, s_value] = cli::parse_weight(cfg.get_string("weight", "const"), ex.L);
  int probes = cfg.get_int("probes", 32);
  // The reference modulation norm defaults to the periodized Gaussian; any
  // unit-norm window can be substituted through ref_window.
  Vec ref = cfg.has("ref_window") ? cli::parse_window_spec(cfg.require("ref_window"), ex.L)
                                  : window_gaussian(ex.L);
  NormEquivResult result =
      norm_equivalence_experiment(ex.s, ex.lat, p, weight, probes, ex.seed, &ref);
  std::ostringstream csv;
  csv << "seed,probe_index,ratio,C_emp,D_emp,p,s,lattice,L\n";
  for (std::size_t i = 0; i < result.ratios.size(); ++i) {
    csv << ex.seed << ',' << i << ',' << format_double(result.ratios[i]) << ",,,"
        << format_double(p) << ',' << format_double(s_value) << ",\"" << ex.lat.to_string()
        << "\"," << ex.L << '\n';
  }
  csv << ex.seed << ",summary," << ',' << format_double(result.c_emp) << ','
      << format_double(result.d_emp) << ',' << format_double(p) << ',' << format_double(s_value)
      << ",\"" << ex.lat.to_string() << "\"," << ex.L << '\n';
  std::ostringstream kv;
  kv << "L=" << ex.L << "\nlattice=" << ex.lat.to_string() << "\np=" << format_double(p)
     << "\ns=" << format_double(s_value) << "\nprobes=" << result.ratios.size()
     << "\nC_emp=" << format_double(result.c_emp) << "\nD_emp=" << format_double(result.d_emp)
     << "\nseed=" << ex.seed << '\n';
  json j{{"L", ex.L},
         {"lattice", ex.lat.to_string()},
         {"p", format_double(p)},
         {"s", s_value},
         {"ratios", result.ratios},
         {"C_emp", result.c_emp},
         {"D_emp", format_double(result.d_emp)},
         {"seed", ex.seed}};
  write_report(cfg, csv.str(), j, kv.str());
  return kExitOk;
}

int cmd_svd_windows(const KvConfig& cfg) {
  int L = cfg.require_int("L");
  std::uint64_t seed = cfg.get_u64("seed", 0);
  Mat s = cli::parse_generator(cfg.require("gen"), L, seed, nullptr);
  WindowSet ws = svd_to_multiwindow(s);
  std::string out = cfg.get_string("out", "");
  std::string base = out.empty() ? "svd_windows" : out;
  std::ostringstream csv;
  csv << "index,weight,window_file\n";
  std::ostringstream kv;
  kv << "L=" << L << "\nwindows=" << ws.windows.size() << "\nseed=" << seed << '\n';
  for (std::size_t n = 0; n < ws.windows.size(); ++n) {
    std::string path = base + ".w" + std::to_string(n) + ".sig";
    save_signal(path, ws.windows[n]);
    csv << n << ',' << format_double(ws.weights[n]) << ',' << path << '\n';
    kv << "weight_" << n << '=' << format_double(ws.weights[n]) << '\n';
  }
  json j{{"L", L}, {"weights", ws.weights}, {"windows", ws.windows.size()}, {"seed", seed}};
  write_report(cfg, csv.str(), j, kv.str());
  return kExitOk;
}

int cmd_adjoint_lattice(const KvConfig& cfg) {
  int L = cfg.require_int("L");
  Lattice lat = cli::parse_lattice(cfg.require("lattice"), L);
  Lattice adj = lat.adjoint();
  std::ostringstream kv;
  kv << "L=" << L << "\nlattice=" << lat.to_string() << "\nadjoint=" << adj.to_string()
     << "\ncard=" << lat.card() << "\nadjoint_card=" << adj.card() << '\n';
  std::string csv = "L,lattice,adjoint,card,adjoint_card\n" + std::to_string(L) + ",\"" +
                    lat.to_string() + "\",\"" + adj.to_string() + "\"," +
                    std::to_string(lat.card()) + "," + std::to_string(adj.card()) + "\n";
  json j{{"L", L},
         {"lattice", lat.to_string()},
         {"adjoint", adj.to_string()},
         {"card", lat.card()},
         {"adjoint_card", adj.card()}};
  write_report(cfg, csv, j, kv.str());
  return kExitOk;
}

int cmd_periodic_fourier(const KvConfig& cfg) {
  int L = cfg.require_int("L");
  Lattice lat = cli::parse_lattice(cfg.require("lattice"), L);
  Mat t = load_op(cfg.require("op"));
  if (t.rows() != L) {
    throw ParseError("field op: operator file has dimension " + std::to_string(t.rows()) +
                     ", expected " + std::to_string(L));
  }
  FourierSeries series = fourier_series_of_periodic(t, lat);
  std::ostringstream csv;
  csv << "k,l,coeff\n";
  for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
    PhasePoint p = series.adjoint.points()[i];
    csv << p.k << ',' << p.l << ',' << format_complex_j(series.coeffs[i]) << '\n';
  }
  std::ostringstream kv;
  kv << "L=" << L << "\nlattice=" << lat.to_string() << "\nadjoint=" << series.adjoint.to_string()
     << "\ncoefficients=" << series.coeffs.size()
     << "\noff_lattice_residual=" << format_double(series.off_lattice_residual) << '\n';
  json j{{"L", L},
         {"lattice", lat.to_string()},
         {"adjoint", series.adjoint.to_string()},
         {"off_lattice_residual", series.off_lattice_residual}};
  json coeffs = json::array();
  for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
    PhasePoint p = series.adjoint.points()[i];
    coeffs.push_back({{"k", p.k}, {"l", p.l}, {"coeff", format_complex_j(series.coeffs[i])}});
  }
  j["coefficients"] = coeffs;
  write_report(cfg, csv.str(), j, kv.str());
  return kExitOk;
}

int dispatch(const KvConfig& cfg) {
  std::string command = cfg.require("command");
  if (command == "frame-bounds") return cmd_frame_bounds(cfg);
  if (command == "janssen") return cmd_janssen(cfg);
  if (command == "wexler-raz") return cmd_wexler_raz(cfg);
  if (command == "dual") return cmd_dual(cfg);
  if (command == "reconstruct") return cmd_reconstruct(cfg);
  if (command == "cohen") return cmd_cohen(cfg);
  if (command == "norm-equiv") return cmd_norm_equiv(cfg);
  if (command == "svd-windows") return cmd_svd_windows(cfg);
  if (command == "adjoint-lattice") return cmd_adjoint_lattice(cfg);
  if (command == "periodic-fourier") return cmd_periodic_fourier(cfg);
  throw ParseError("field command: unknown command \"" + command + "\"");
}

int run_batch(const std::string& dir) {
  std::vector<fs::path> configs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".cfg") configs.push_back(entry.path());
  }
  std::sort(configs.begin(), configs.end());
  if (configs.empty()) throw ParseError("batch: no .cfg files in \"" + dir + "\"");
  // Independent experiments run concurrently; each writes its own report.
  std::vector<std::future<int>> results;
  for (const auto& path : configs) {
    results.push_back(std::async(std::launch::async, [path]() -> int {
      try {
        KvConfig cfg = KvConfig::load(path.string());
        if (!cfg.has("out")) {
          fs::path out = path;
          out.replace_extension(cfg.get_bool("json", false) ? ".json" : ".csv");
          cfg.set("out", out.string());
        }
        return dispatch(cfg);
      } catch (const Error& e) {
        std::cerr << path.string() << ": error: " << e.what() << '\n';
        return kExitUsage;
      }
    }));
  }
  int worst = kExitOk;
  for (auto& r : results) worst = std::max(worst, r.get());
  return worst;
}

const char* kReportDocs = R"(Report fields (CSV columns / JSON keys):
  frame-bounds : L, lattice, A (lower bound), B (upper bound), tightness (B/A),
                 janssen_residual (periodization vs Janssen series of S*S, relative
                 Frobenius), dual_residual (||D_S C_R - I||_F / sqrt(L) for the
                 canonical dual R; nan when not a frame), is_frame, seed
  janssen      : L, lattice, janssen_residual (for the generator itself), seed
  wexler-raz   : L, lattice, biorth_ok, recon_ok, biorth_deviation
                 (max |c_{S*T} - delta_0/card| on the adjoint lattice),
                 recon_residual (||periodize(S*T) - I||_F / sqrt(L)), seed
  dual         : L, lattice, A, B, dual_residual, op_file (path of the dual
                 generator written in ggf-op format), seed
  reconstruct  : L, lattice, error_ds_cr (||D_S C_R psi - psi||/||psi||),
                 error_dr_cs (||D_R C_S psi - psi||/||psi||), seed
  cohen        : CSV is the raw L x L grid of Q(k,l) = ||alpha_(k,l)(S) psi||^2,
                 one row per time shift k, comma-separated; JSON adds cohen_sum
                 and cohen_sum_expected (= L ||S||_HS^2 ||psi||^2)
  norm-equiv   : seed, probe_index (0 is the smallest-singular-vector probe;
                 "summary" on the last row), ratio (analysis norm / reference
                 modulation norm), C_emp and D_emp (filled on the summary row),
                 p, s (polynomial weight exponent; 0 for const, nan for table),
                 lattice, L
  svd-windows  : index, weight (singular value), window_file (ggf-signal file)
  adjoint-lattice : L, lattice, adjoint, card, adjoint_card
  periodic-fourier: k, l, coeff (complex "re+imj") per adjoint-lattice point

Exit codes: 0 success; 2 malformed config/input or precondition failure
(distinct message per cause); 3 numerical tolerance failure.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor g-frames on C^L: frame bounds, duals, Janssen/Wexler-Raz checks,\n"
               "spreading transforms and norm-equivalence experiments."};
  app.footer(kReportDocs);
  app.require_subcommand(0, 1);

  std::string batch_dir;
  app.add_option("--batch", batch_dir, "run every *.cfg in a directory concurrently");

  struct Sub {
    CLI::App* cmd;
    CommonArgs args;
    std::string name;
  };
  std::vector<std::unique_ptr<Sub>> subs;
  auto add = [&](const std::string& name, const std::string& desc) -> Sub& {
    auto sub = std::make_unique<Sub>();
    sub->cmd = app.add_subcommand(name, desc);
    sub->name = name;
    add_common(sub->cmd, sub->args);
    subs.push_back(std::move(sub));
    return *subs.back();
  };

  add("frame-bounds", "extreme eigenvalues of the g-frame operator plus identity residuals");
  Sub& janssen = add("janssen", "compare lattice periodization with the Janssen series");
  (void)janssen;
  Sub& wr = add("wexler-raz", "biorthogonality and reconstruction faces of the duality theorem");
  std::string wr_s, wr_t;
  wr.cmd->add_option("S", wr_s, "generator spec for S");
  wr.cmd->add_option("T", wr_t, "generator spec for T, or \"dual\" for the canonical dual of S");
  Sub& dual = add("dual", "write the canonical dual generator and its residuals");
  dual.cmd->add_option("--out-op", dual.args.out_op, "path for the dual generator (ggf-op format)");
  Sub& rec = add("reconstruct", "round-trip a signal through analysis and dual synthesis");
  std::string rec_signal;
  rec.cmd->add_option("signal", rec_signal, "signal file (ggf-signal) or \"random\"");
  Sub& cohen = add("cohen", "Cohen's class map Q(z) = ||alpha_z(S) psi||^2 over phase space");
  std::string cohen_signal;
  cohen.cmd->add_option("signal", cohen_signal, "signal file (ggf-signal) or \"random\"");
  Sub& ne = add("norm-equiv", "empirical norm-equivalence constants over seeded probes");
  ne.cmd->add_option("--ref-window", ne.args.ref_window,
                     "reference window for the modulation norm (gaussian | box:w | file:path); "
                     "defaults to the periodized Gaussian");
  add("svd-windows", "singular windows and weights of the generator");
  add("adjoint-lattice", "adjoint lattice, with cardinalities");
  Sub& pf = add("periodic-fourier", "Fourier coefficients of a lattice-periodic operator");
  std::string pf_op;
  pf.cmd->add_option("op", pf_op, "operator file (ggf-op format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!batch_dir.empty()) return run_batch(batch_dir);
    for (auto& sub : subs) {
      if (!sub->cmd->parsed()) continue;
      if (sub->name == "wexler-raz") {
        if (!wr_s.empty()) sub->args.gen = wr_s;
        if (!wr_t.empty()) sub->args.gen2 = wr_t;
      }
      if (sub->name == "reconstruct" && !rec_signal.empty()) sub->args.signal = rec_signal;
      if (sub->name == "cohen" && !cohen_signal.empty()) sub->args.signal = cohen_signal;
      KvConfig cfg = sub->args.merge(sub->name);
      if (sub->name == "periodic-fourier" && !pf_op.empty()) cfg.set("op", pf_op);
      return dispatch(cfg);
    }
    std::cerr << "error: no subcommand given (see --help)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
