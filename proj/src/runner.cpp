#include "dwflow/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "dwflow/field_io.hpp"
#include "dwflow/problems.hpp"
#include "dwflow/rhs.hpp"
#include "dwflow/timestep.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dwflow {

namespace fs = std::filesystem;

namespace {

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", t);
  return buf;
}

FieldHeader header_for(const RunConfig& cfg, double t) {
  FieldHeader h;
  h.problem = std::string(to_string(cfg.problem));
  h.family = std::string(to_string(cfg.family));
  h.order = cfg.order;
  h.gamma = GasModel{}.gamma;
  h.time = t;
  return h;
}

MonitorSample monitor_sample(const Field& f, double t, const GasModel& gas) {
  MonitorSample m;
  m.t = t;
  const Grid& g = f.grid();
  for (int c = 0; c < 4; ++c) m.totals[c] = integrate(f.interior_component(c), g);
  m.min_entropy = min_specific_entropy(f, gas);
  const Field copy = interior_copy(f);
  m.functional = functionals(std::span<const Field>(&copy, 1), 1, gas);
  m.functional.t = t;
  return m;
}

void write_monitor_csv(const fs::path& path, std::span<const MonitorSample> monitor) {
  std::ofstream out(path);
  if (!out) throw IoError(IoError::Kind::open_failed, "cannot write " + path.string());
  out.precision(17);
  out << "t,mass,mx,my,energy,min_specific_entropy\n";
  for (const MonitorSample& m : monitor) {
    out << m.t << ',' << m.totals[0] << ',' << m.totals[1] << ',' << m.totals[2] << ',' << m.totals[3] << ','
        << m.min_entropy << '\n';
  }
  out.flush();
  if (!out) throw IoError(IoError::Kind::write_failed, "write failed for " + path.string());
}

nlohmann::json rect_json(const Rect& r) { return nlohmann::json::array({r.x0, r.x1, r.y0, r.y1}); }

double trapezoid_average(std::span<const double> t, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) sum += 0.5 * (t[i] - t[i - 1]) * (v[i] + v[i - 1]);
  const double span = t.back() - t.front();
  return span > 0.0 ? sum / span : v.front();
}

}  // namespace

std::string run_stem(const RunConfig& cfg) {
  std::ostringstream os;
  os << to_string(cfg.problem) << '_' << to_string(cfg.family) << "_r" << cfg.order << "_n" << cfg.n;
  return os.str();
}

std::vector<double> uniform_times(double T, int m) {
  if (m < 2) throw ConfigError("need at least two sample times");
  std::vector<double> t(m);
  for (int i = 0; i < m; ++i) t[i] = T * i / (m - 1);
  t.back() = T;
  return t;
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
  validate(cfg);
  const GasModel gas{};
  const double T = cfg.resolved_t_final();
  const SchemeSpec scheme{cfg.family, cfg.order, gas, kDefaultTheta};
  validate(scheme);

  const Grid grid = Grid::unit_square(cfg.n, cfg.n, halo_width(cfg.order));
  Field U = init_problem(cfg.problem, grid, gas);

  if (opts.write_files) fs::create_directories(cfg.out_dir);
  const std::string stem = run_stem(cfg);
  RunResult res;
  res.sample_times = opts.sample_times;

  std::vector<double> stops = cfg.snapshots;
  stops.insert(stops.end(), opts.sample_times.begin(), opts.sample_times.end());
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
  auto write = [&](const Field& f, const std::string& name, double t) {
    const fs::path p = cfg.out_dir / name;
    write_field(p, f, header_for(cfg, t));
    res.files.push_back(p);
  };
  auto capture = [&](const Field& f, double t) {
    for (double s : opts.sample_times)
      if (near(s, t)) res.samples.push_back(interior_copy(f));
    if (opts.write_files)
      for (double s : cfg.snapshots)
        if (near(s, t)) write(f, stem + "_t" + time_tag(s) + ".dwf", t);
  };

  TimeAverage tavg(grid);
  res.monitor.push_back(monitor_sample(U, 0.0, gas));
  capture(U, 0.0);

  Field last = interior_copy(U);
  double last_t = 0.0;
  try {
    integrate(U, kernel_operator(scheme), gas, cfg.resolved_cfl(), 0.0, T, stops,
              [&](const StepInfo& s, const Field& f) {
                tavg.accumulate(f, s.dt);
                res.monitor.push_back(monitor_sample(f, s.t, gas));
                capture(f, s.t);
                last = interior_copy(f);
                last_t = s.t;
                res.steps = s.step;
              },
              cfg.family == FluxFamily::vfv ? vfv_viscous_dt : std::function<double(const Field&)>{});
    res.time_average = tavg.finalize(T);
  } catch (const BlowUp& e) {
    res.ok = false;
    res.failure = FailureRecord{e.what(), e.time(), e.stage(), e.worst_cell()};
  } catch (const InvalidState& e) {
    res.ok = false;
    res.failure = FailureRecord{e.what(), last_t, 0, e.cell().value_or(CellIndex{})};
  }
  res.t = last_t;
  res.final_field = std::move(last);

  if (opts.write_files) {
    write(res.final_field, stem + (res.ok ? "_final.dwf" : "_last.dwf"), res.t);
    if (res.ok) {
      write(res.time_average, stem + "_timeavg.dwf", T);
      const std::vector<Rect> rects = cfg.resolved_subdomains();
      for (std::size_t i = 0; i < rects.size(); ++i) {
        const fs::path p = cfg.out_dir / (stem + "_pdf" + std::to_string(i + 1) + ".csv");
        write_pdf_csv(p, young_pdf(res.final_field, rects[i]));
        res.files.push_back(p);
      }
    }
    const fs::path mon = cfg.out_dir / (stem + "_monitor.csv");
    write_monitor_csv(mon, res.monitor);
    res.files.push_back(mon);
    std::vector<FunctionalSample> series;
    for (const MonitorSample& m : res.monitor) series.push_back(m.functional);
    const fs::path fun = cfg.out_dir / (stem + "_functionals.csv");
    write_functional_csv(fun, series);
    res.files.push_back(fun);
    if (opts.write_manifest) write_manifest(cfg.out_dir, "run", cfg, res.files, res.failure);
  }
  return res;
}

FamilyAggregate aggregate(std::span<const Field> members, std::span<const Rect> subdomains, const GasModel& gas) {
  if (members.empty()) throw ConfigError("empty family");
  FamilyAggregate agg;
  const int m = static_cast<int>(members.size());
  for (int n = 1; n <= m; ++n) {
    agg.averages.push_back(cesaro_average(members, n, gas));
    agg.functionals.push_back(functionals(agg.averages.back(), gas));
  }
  const OrderAverage& ref = agg.averages.back();
  for (int n = 1; n < m; ++n) agg.errors.push_back(l1_distance(agg.averages[n - 1].rho, ref.rho, ref.grid));
  if (agg.errors.size() >= 2 && std::all_of(agg.errors.begin(), agg.errors.end(), [](double e) { return e > 0.0; })) {
    agg.fit = powerlaw_fit(agg.errors);
  }

  for (const Rect& r : subdomains) {
    SubdomainPdfs s;
    s.rect = r;
    std::vector<std::vector<double>> values;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Field& f : members) {
      values.push_back(subdomain_densities(f, r));
      if (values.back().empty()) throw ConfigError("no cell center lies in the subdomain");
      const auto [a, b] = std::minmax_element(values.back().begin(), values.back().end());
      lo = std::min(lo, *a);
      hi = std::max(hi, *b);
    }
    for (const auto& v : values) s.members.push_back(young_pdf(v, lo, hi));
    for (int n = 1; n <= m; ++n) s.averages.push_back(pdf_average(s.members, n));
    agg.pdfs.push_back(std::move(s));
  }
  return agg;
}

namespace {

void write_aggregate(const FamilyAggregate& agg, const fs::path& dir, const std::string& prefix,
                     const FieldHeader& base, std::vector<fs::path>& files) {
  if (agg.fit) {
    const fs::path p = dir / (prefix + "_errors.csv");
    write_error_csv(p, agg.errors, *agg.fit);
    files.push_back(p);
  }
  const fs::path fp = dir / (prefix + "_functionals_final.csv");
  write_functional_csv(fp, agg.functionals);
  files.push_back(fp);

  for (std::size_t n = 0; n < agg.averages.size(); ++n) {
    const OrderAverage& a = agg.averages[n];
    Field f(a.grid, Boundary::free);
    std::size_t i = 0;
    for (int k = 0; k < a.grid.ny; ++k)
      for (int j = 0; j < a.grid.nx; ++j, ++i) f(j, k).q = {a.rho[i], a.mx[i], a.my[i], a.E[i]};
    FieldHeader h = base;
    h.order = 0;
    const fs::path p = dir / (prefix + "_avg" + std::to_string(n + 1) + ".dwf");
    write_field(p, f, h);
    files.push_back(p);
  }
  for (std::size_t s = 0; s < agg.pdfs.size(); ++s) {
    const SubdomainPdfs& pdfs = agg.pdfs[s];
    for (std::size_t l = 0; l < pdfs.members.size(); ++l) {
      const fs::path p = dir / (prefix + "_pdf" + std::to_string(s + 1) + "_l" + std::to_string(l + 1) + ".csv");
      write_pdf_csv(p, pdfs.members[l]);
      files.push_back(p);
    }
    for (std::size_t n = 0; n < pdfs.averages.size(); ++n) {
      const fs::path p = dir / (prefix + "_pdf" + std::to_string(s + 1) + "_avg" + std::to_string(n + 1) + ".csv");
      write_pdf_csv(p, pdfs.averages[n]);
      files.push_back(p);
    }
  }
}

}  // namespace

FamilyResult run_family(const RunConfig& cfg, const FamilyOptions& opts) {
  RunConfig base = cfg;
  base.order = 1;
  validate(base);
  {
    std::array<int, 6> sorted = opts.execution_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 6; ++i)
      if (sorted[i] != i) throw ConfigError("execution order must permute 0..5");
  }
  const GasModel gas{};
  const double T = base.resolved_t_final();

  FamilyResult fam;
  fam.sample_times = uniform_times(T, base.samples);
  RunOptions ropts;
  ropts.write_files = opts.write_files;
  ropts.write_manifest = false;
  ropts.sample_times = fam.sample_times;

  for (int idx : opts.execution_order) {
    RunConfig member = base;
    member.order = kOrders[idx];
    fam.members[idx] = run(member, ropts);
  }
  for (const RunResult& r : fam.members) fam.files.insert(fam.files.end(), r.files.begin(), r.files.end());

  fam.complete = std::all_of(fam.members.begin(), fam.members.end(), [&](const RunResult& r) {
    return r.ok && r.samples.size() == fam.sample_times.size();
  });

  std::optional<FailureRecord> failure;
  for (std::size_t l = 0; l < 6; ++l)
    if (!fam.members[l].ok && !failure) {
      failure = *fam.members[l].failure;
      failure->message = "order " + std::to_string(kOrders[l]) + ": " + failure->message;
    }

  // Leading members that reached T. A blow-up at high order (Config 3 at
  // r = 9) still leaves the lower-order prefix to aggregate.
  int usable = 0;
  while (usable < 6 && fam.members[usable].ok && fam.members[usable].samples.size() == fam.sample_times.size())
    ++usable;
  fam.usable = usable;

  if (usable >= 2) {
    for (std::size_t s = 0; s < fam.sample_times.size(); ++s) {
      std::vector<Field> snap;
      for (int l = 0; l < usable; ++l) snap.push_back(fam.members[l].samples[s]);
      for (int n = 1; n <= usable; ++n) {
        FunctionalSample f = functionals(snap, n, gas);
        f.t = fam.sample_times[s];
        fam.series[n - 1].push_back(f);
      }
    }
    for (int n = 0; n < usable; ++n) {
      std::vector<double> de;
      for (const FunctionalSample& f : fam.series[n]) de.push_back(f.DE);
      fam.time_averaged_DE[n] = trapezoid_average(fam.sample_times, de);
    }
    std::vector<Field> finals;
    for (int l = 0; l < usable; ++l) finals.push_back(fam.members[l].final_field);
    const std::vector<Rect> rects = base.resolved_subdomains();
    fam.final_aggregate = aggregate(finals, rects, gas);

    if (opts.write_files) {
      std::ostringstream prefix;
      prefix << to_string(base.problem) << '_' << to_string(base.family) << "_n" << base.n;
      FieldHeader h;
      h.problem = std::string(to_string(base.problem));
      h.family = std::string(to_string(base.family));
      h.time = T;
      write_aggregate(*fam.final_aggregate, base.out_dir, prefix.str(), h, fam.files);
      for (int n = 0; n < usable; ++n) {
        const fs::path p = base.out_dir / (prefix.str() + "_functionals_n" + std::to_string(n + 1) + ".csv");
        write_functional_csv(p, fam.series[n]);
        fam.files.push_back(p);
      }
    }
  }
  if (opts.write_files) write_manifest(base.out_dir, "family", base, fam.files, failure);
  return fam;
}

FamilyAggregate diag(std::span<const fs::path> fields, const fs::path& out_dir, std::span<const Rect> subdomains) {
  if (fields.empty()) throw ConfigError("diag needs at least one field file");
  std::vector<Field> members;
  FieldHeader first;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    FieldFile file = read_field(fields[i]);
    if (i == 0) first = file.header;
    if (file.header.nx != first.nx || file.header.ny != first.ny) {
      throw ConfigError("field files do not share one grid");
    }
    members.push_back(std::move(file.field));
  }
  const GasModel gas = GasModel::with_gamma(first.gamma);
  std::vector<Rect> rects(subdomains.begin(), subdomains.end());
  if (rects.empty()) {
    try {
      rects = default_subdomains(parse_problem(first.problem));
    } catch (const ConfigError&) {
    }
  }
  FamilyAggregate agg = aggregate(members, rects, gas);

  fs::create_directories(out_dir);
  std::vector<fs::path> files;
  write_aggregate(agg, out_dir, "diag", first, files);
  RunConfig cfg;
  try {
    cfg.problem = parse_problem(first.problem);
    cfg.family = parse_flux_family(first.family);
  } catch (const ConfigError&) {
  }
  cfg.n = first.nx;
  cfg.out_dir = out_dir;
  cfg.subdomains = rects;
  write_manifest(out_dir, "diag", cfg, files, std::nullopt);
  return agg;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::open_failed, "cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError(IoError::Kind::open_failed, "SHA-256 unavailable");
  }
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

void write_manifest(const fs::path& dir, const std::string& kind, const RunConfig& cfg, std::span<const fs::path> files,
                    const std::optional<FailureRecord>& failure) {
  nlohmann::json j;
  j["format"] = 1;
  j["kind"] = kind;
  nlohmann::json c;
  c["problem"] = std::string(to_string(cfg.problem));
  c["flux"] = std::string(to_string(cfg.family));
  c["order"] = cfg.order;
  c["n"] = cfg.n;
  c["cfl"] = cfg.resolved_cfl();
  c["tfinal"] = cfg.resolved_t_final();
  c["snapshots"] = cfg.snapshots;
  c["samples"] = cfg.samples;
  c["subdomains"] = nlohmann::json::array();
  for (const Rect& r : cfg.resolved_subdomains()) c["subdomains"].push_back(rect_json(r));
  j["config"] = c;
  j["status"] = failure ? "blow-up" : "ok";
  if (failure) {
    j["failure"] = {{"message", failure->message},
                    {"time", failure->time},
                    {"stage", failure->stage},
                    {"cell", {failure->cell.j, failure->cell.k}}};
  }
  j["files"] = nlohmann::json::array();
  for (const fs::path& p : files) {
    j["files"].push_back({{"path", fs::relative(p, dir).generic_string()},
                          {"bytes", fs::file_size(p)},
                          {"sha256", sha256_file(p)}});
  }
  const fs::path out = dir / "manifest.json";
  std::ofstream os(out);
  if (!os) throw IoError(IoError::Kind::open_failed, "cannot write " + out.string());
  os << j.dump(2) << '\n';
  os.flush();
  if (!os) throw IoError(IoError::Kind::write_failed, "write failed for " + out.string());
}

int configure_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("DW_THREADS")) {
    const int n = std::atoi(env);
    if (n < 1) throw ConfigError("DW_THREADS must be a positive integer");
    omp_set_num_threads(n);
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dwflow
