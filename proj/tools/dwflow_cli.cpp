// dwflow: run benchmarks, six-order families, and diagnostics from the shell.
//
//   dwflow run --problem config2 --flux vfv --order 1 --n 64 --out out/c2
//   dwflow family --problem kh --flux ldcu --n 128 --tfinal 0.5 --out out/kh
//   dwflow diag out/kh/*_final.dwf --out out/kh-diag
//   dwflow info out/c2/config2_vfv_r1_n64_final.dwf

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwflow/errors.hpp"
#include "dwflow/field_io.hpp"
#include "dwflow/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitIo = 4;

struct Overrides {
  std::string config_file;
  std::string problem, flux, order, n, cfl, tfinal, out, snapshots, samples;
  std::vector<std::string> subdomains;
};

void add_run_options(CLI::App* app, Overrides& o, bool with_order) {
  app->add_option("--config", o.config_file, "key=value config file (flags override it)");
  app->add_option("--problem", o.problem, "config2 | config3 | config4 | kh");
  app->add_option("--flux", o.flux, "lcdcu | ldcu | vfv");
  if (with_order) app->add_option("--order", o.order, "1, 2, 3, 5, 7 or 9");
  app->add_option("--n", o.n, "cells per direction");
  app->add_option("--cfl", o.cfl, "CFL number (default 0.45, VFV 0.1)");
  app->add_option("--tfinal", o.tfinal, "final time (default: the problem's)");
  app->add_option("--out", o.out, "output directory");
  app->add_option("--snapshots", o.snapshots, "comma-separated snapshot times");
  app->add_option("--subdomain", o.subdomains, "PDF rectangle x0,x1,y0,y1 (repeatable)");
  app->add_option("--samples", o.samples, "functional sample times for families");
}

dwflow::RunConfig build_config(const Overrides& o) {
  dwflow::RunConfig cfg;
  if (!o.config_file.empty()) cfg = dwflow::load_config_file(o.config_file, cfg);
  const std::pair<const char*, const std::string*> flags[] = {
      {"problem", &o.problem}, {"flux", &o.flux},     {"order", &o.order},         {"n", &o.n},
      {"cfl", &o.cfl},         {"tfinal", &o.tfinal}, {"out", &o.out},             {"snapshots", &o.snapshots},
      {"samples", &o.samples}};
  for (const auto& [key, value] : flags)
    if (!value->empty()) dwflow::apply_setting(cfg, key, *value);
  if (!o.subdomains.empty()) {
    cfg.subdomains.clear();
    for (const std::string& s : o.subdomains) dwflow::apply_setting(cfg, "subdomain", s);
  }
  dwflow::validate(cfg);
  return cfg;
}

void print_failure(const dwflow::FailureRecord& f) {
  std::cerr << "blow-up: " << f.message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressible Euler schemes and dissipative-weak-solution diagnostics"};
  app.require_subcommand(1);

  Overrides run_o, fam_o;
  auto* run_cmd = app.add_subcommand("run", "integrate one scheme");
  add_run_options(run_cmd, run_o, true);
  auto* fam_cmd = app.add_subcommand("family", "integrate all six orders of one flux family");
  add_run_options(fam_cmd, fam_o, false);

  std::vector<std::string> diag_files;
  std::string diag_out = "diag";
  std::vector<std::string> diag_rects;
  auto* diag_cmd = app.add_subcommand("diag", "recompute family diagnostics from saved fields (family order)");
  diag_cmd->add_option("fields", diag_files, "field files")->required();
  diag_cmd->add_option("--out", diag_out, "output directory");
  diag_cmd->add_option("--subdomain", diag_rects, "PDF rectangle x0,x1,y0,y1 (repeatable)");

  std::vector<std::string> info_files;
  auto* info_cmd = app.add_subcommand("info", "print field file headers");
  info_cmd->add_option("fields", info_files, "field files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    dwflow::configure_threads();
    if (*run_cmd) {
      const dwflow::RunConfig cfg = build_config(run_o);
      const dwflow::RunResult r = dwflow::run(cfg);
      std::cout << "t=" << r.t << " steps=" << r.steps << " files=" << r.files.size() << " out=" << cfg.out_dir.string()
                << '\n';
      if (!r.ok) {
        print_failure(*r.failure);
        return kExitBlowUp;
      }
    } else if (*fam_cmd) {
      const dwflow::RunConfig cfg = build_config(fam_o);
      const dwflow::FamilyResult f = dwflow::run_family(cfg);
      for (std::size_t l = 0; l < f.members.size(); ++l) {
        const auto& m = f.members[l];
        std::cout << "order " << dwflow::kOrders[l] << ": " << (m.ok ? "ok" : "failed") << " t=" << m.t
                  << " steps=" << m.steps << '\n';
      }
      if (f.final_aggregate) {
        for (std::size_t n = 0; n < f.final_aggregate->errors.size(); ++n)
          std::cout << "L1(rho~_" << n + 1 << " - rho~_" << f.usable << ") = " << f.final_aggregate->errors[n] << '\n';
        if (f.final_aggregate->fit)
          std::cout << "fit: " << f.final_aggregate->fit->C << " n^" << f.final_aggregate->fit->alpha << '\n';
      }
      if (!f.complete) {
        for (const auto& m : f.members)
          if (m.failure) print_failure(*m.failure);
        return kExitBlowUp;
      }
    } else if (*diag_cmd) {
      std::vector<std::filesystem::path> paths(diag_files.begin(), diag_files.end());
      std::vector<dwflow::Rect> rects;
      for (const std::string& s : diag_rects) rects.push_back(dwflow::parse_rect(s));
      const dwflow::FamilyAggregate agg = dwflow::diag(paths, diag_out, rects);
      for (std::size_t n = 0; n < agg.functionals.size(); ++n) {
        const auto& s = agg.functionals[n];
        std::cout << "n=" << n + 1 << " S=" << s.S << " E1=" << s.E1 << " E2=" << s.E2 << " DE=" << s.DE << '\n';
      }
    } else if (*info_cmd) {
      for (const std::string& p : info_files) std::cout << p << ": " << dwflow::format_header(dwflow::read_header(p)) << '\n';
    }
  } catch (const dwflow::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dwflow::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dwflow::BlowUp& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const dwflow::InvalidState& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kExitBlowUp;
  }
  return kExitOk;
}
