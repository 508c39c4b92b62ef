// End-to-end checks of the ggf command-line tool: exit codes, report files,
// config handling and byte-level determinism. argv[1] is the ggf binary.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ggf/generators.hpp"
#include "ggf/gframe.hpp"
#include "ggf/io.hpp"
#include "ggf/lattice.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << '\n';
  } else {
    std::cout << "[FAIL] " << what << '\n';
    ++failures;
  }
}

std::string g_binary;
fs::path g_dir;

int run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " >" + (g_dir / "stdout.txt").string() + " 2>" +
                    (g_dir / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string out_of(const std::string& args) {
  run(args);
  return slurp(g_dir / "stdout.txt");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-ggf>\n";
    return 2;
  }
  g_binary = argv[1];
  g_dir = fs::temp_directory_path() / "ggf_cli_test";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);
  const std::string dir = g_dir.string();

  check(run("frame-bounds --L 12 --lattice sep:2,3 --gen gaussian --out " + dir + "/fb.csv") == 0,
        "frame-bounds on a Gaussian window exits 0");
  {
    std::string csv = slurp(g_dir / "fb.csv");
    check(csv.find("is_frame") != std::string::npos && csv.find("true") != std::string::npos,
          "frame-bounds report marks the Gaussian generator as a frame");
  }

  std::string adjoint = out_of("adjoint-lattice --L 12 --lattice sep:2,3");
  check(adjoint.find("adjoint=sep:4,6") != std::string::npos, "adjoint of sep:2,3 prints sep:4,6");
  check(adjoint.find("card=24") != std::string::npos &&
            adjoint.find("adjoint_card=6") != std::string::npos,
        "cardinalities 24 and 6 multiply to 144");

  check(run("janssen --L 8 --lattice sep:2,2 --gen random:3:42") == 0,
        "janssen residual below threshold exits 0");

  check(run("wexler-raz random:3:7 dual --L 12 --lattice sep:2,3") == 0,
        "wexler-raz with the canonical dual exits 0");

  check(run("reconstruct random --L 12 --lattice sep:2,3 --gen gaussian --seed 5") == 0,
        "reconstruct round trip exits 0");

  // Exit code 2: malformed configs, with the failing field named.
  run("frame-bounds --L 12 --lattice sep:5,3 --gen gaussian");
  check(slurp(g_dir / "stderr.txt").find("divisors") != std::string::npos,
        "non-divisor lattice parameters name the problem");
  check(run("frame-bounds --L 12 --lattice sep:5,3 --gen gaussian") == 2,
        "non-divisor lattice parameters exit 2");
  run("frame-bounds --L 12 --gen gaussian");
  check(slurp(g_dir / "stderr.txt").find("lattice") != std::string::npos,
        "missing lattice field is named");
  check(run("frame-bounds --L 12 --gen gaussian") == 2, "missing required field exits 2");
  check(run("reconstruct " + dir + "/nosuch.sig --L 12 --lattice sep:2,3 --gen gaussian") == 2,
        "unreadable signal file exits 2");
  check(run("dual --L 8 --lattice sep:8,8 --gen gaussian") == 2,
        "dual of a non-frame fails the precondition with exit 2");
  check(run("frame-bounds --L 12 --lattice sep:2,3 --gen 'underspread:0,0,1,0;4,0,1,0'") == 2,
        "underspread precondition violation exits 2");

  // Config file with flag overrides.
  {
    std::ofstream cfg(g_dir / "exp.cfg");
    cfg << "command=frame-bounds\nL=12\nlattice=sep:2,3\ngen=gaussian\nseed=4\n";
  }
  check(run("frame-bounds --config " + dir + "/exp.cfg --out " + dir + "/cfg.csv") == 0,
        "config-file driven run exits 0");
  check(slurp(g_dir / "cfg.csv").find(",4") != std::string::npos,
        "seed from the config file lands in the report");
  std::string overridden = out_of("frame-bounds --config " + dir + "/exp.cfg --L 8 --lattice sep:2,2");
  check(overridden.find("L=8") != std::string::npos, "command-line flags override config values");

  // periodic-fourier: a periodization is periodic, its dual generator is not.
  {
    ggf::Lattice lat = ggf::Lattice::separable(8, 2, 2);
    ggf::Mat p = ggf::periodize(ggf::random_op(8, 3, 9), lat);
    ggf::save_op(dir + "/periodic.op", p);
    ggf::save_op(dir + "/plain.op", ggf::random_op(8, 3, 9));
  }
  check(run("periodic-fourier " + dir + "/periodic.op --L 8 --lattice sep:2,2 --out " + dir +
            "/pf.csv") == 0,
        "periodic-fourier accepts a lattice periodization");
  {
    std::string csv = slurp(g_dir / "pf.csv");
    check(csv.rfind("k,l,coeff", 0) == 0, "periodic-fourier CSV has the documented header");
  }
  check(run("periodic-fourier " + dir + "/plain.op --L 8 --lattice sep:2,2") == 2,
        "periodic-fourier rejects non-periodic operators with exit 2");
  check(slurp(g_dir / "stderr.txt").find("not-periodic") != std::string::npos,
        "not-periodic error message names the failure");

  // cohen: grid output parses as an LxL real grid.
  check(run("cohen random --L 8 --gen gaussian --seed 3 --out " + dir + "/q.csv") == 0,
        "cohen map exits 0");
  {
    ggf::RealMat q = ggf::load_real_grid(dir + "/q.csv");
    check(q.rows() == 8 && q.cols() == 8 && q.minCoeff() >= 0.0,
          "cohen grid is 8x8 and nonnegative");
  }

  // svd-windows writes signal files that load back.
  check(run("svd-windows --L 8 --gen random:3:11 --out " + dir + "/svd.csv") == 0,
        "svd-windows exits 0");
  check(ggf::load_signal(dir + "/svd.csv.w0.sig").size() == 8,
        "svd window files are valid ggf-signal files");

  // norm-equiv CSV columns and determinism.
  std::string ne = "norm-equiv --L 12 --lattice sep:2,3 --gen gaussian --p 2 --weight const "
                   "--probes 8 --seed 3 --out ";
  check(run(ne + dir + "/ne1.csv") == 0, "norm-equiv exits 0");
  run(ne + dir + "/ne2.csv");
  check(slurp(g_dir / "ne1.csv") == slurp(g_dir / "ne2.csv"),
        "identical configs produce byte-identical norm-equiv reports");
  check(slurp(g_dir / "ne1.csv").rfind("seed,probe_index,ratio,C_emp,D_emp,p,s,lattice,L", 0) == 0,
        "norm-equiv CSV uses the documented columns");

  run("frame-bounds --L 12 --lattice sep:2,3 --gen random:3:6 --json --out " + dir + "/fb1.json");
  run("frame-bounds --L 12 --lattice sep:2,3 --gen random:3:6 --json --out " + dir + "/fb2.json");
  check(slurp(g_dir / "fb1.json") == slurp(g_dir / "fb2.json"),
        "identical configs produce byte-identical JSON reports");

  // Batch mode: two configs, run concurrently, each writes its own report.
  {
    fs::create_directories(g_dir / "batch");
    std::ofstream a(g_dir / "batch" / "a.cfg");
    a << "command=frame-bounds\nL=12\nlattice=sep:2,3\ngen=gaussian\nseed=1\n";
    std::ofstream b(g_dir / "batch" / "b.cfg");
    b << "command=adjoint-lattice\nL=12\nlattice=sep:2,3\n";
  }
  check(run("--batch " + dir + "/batch") == 0, "batch mode exits 0");
  check(fs::exists(g_dir / "batch" / "a.csv") && fs::exists(g_dir / "batch" / "b.csv"),
        "batch mode writes one report per config");

  check(run("--help") == 0, "--help exits 0");
  {
    run("--help");
    std::string help = slurp(g_dir / "stdout.txt");
    for (const char* field : {"janssen_residual", "dual_residual", "biorth_deviation",
                              "recon_residual", "probe_index", "C_emp", "D_emp", "window_file",
                              "adjoint_card", "error_ds_cr", "error_dr_cs", "cohen_sum"}) {
      check(help.find(field) != std::string::npos,
            std::string("--help documents the report field ") + field);
    }
  }

  std::cout << (failures == 0 ? "ALL CLI CHECKS PASSED\n" : "CLI CHECKS FAILED\n");
  return failures == 0 ? 0 : 1;
}
