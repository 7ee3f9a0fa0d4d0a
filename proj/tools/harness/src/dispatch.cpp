#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wavebc/coupled_bc.hpp"
#include "wavebc/error.hpp"
#include "wavebc/experiments.hpp"
#include "wavebc/format.hpp"
#include "wavebc/harness.hpp"
#include "wavebc/report.hpp"
#include "wavebc/scalar_bc.hpp"
#include "wavebc/snapshot_io.hpp"

namespace wavebc::cli {
namespace {

namespace fs = std::filesystem;

std::ofstream open_for_write(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  return f;
}

void finish(std::ofstream& f, const fs::path& path) {
  f.flush();
  if (!f) throw IoError("write failed for '" + path.string() + "'");
}

// Writes `body` to `path` in one go.
void write_file(const fs::path& path, const std::string& body) {
  std::ofstream f = open_for_write(path);
  f << body;
  finish(f, path);
}

void append_manifest(const RunConfig& cfg, const DispatchResult& r) {
  const fs::path path = fs::path(cfg.out) / "manifest.txt";
  std::ofstream f = open_for_write(path, std::ios::app);
  f << "[run " << artifact_stem(cfg) << "]\n" << serialize(cfg);
  f << "artifact=" << r.artifact.filename().string() << '\n';
  f << "exit_code=" << r.exit_code << '\n';
  for (const auto& m : r.messages) f << "note=" << m << '\n';
  f << '\n';
  finish(f, path);
}

ReportRecord analyze_record(const RunConfig& cfg) {
  ReportRecord rec;
  rec.bc = cfg.bc;
  if (cfg.bc == "coupled") {
    rec.coefficients = {{"b1", cfg.b1}, {"b2", cfg.b2}};
    rec.report = classify_coupled(CoupledBC{cfg.b1, cfg.b2});
    return rec;
  }
  const double b = parse_coefficient(cfg.b.front()).value();
  if (cfg.bc == "type1") {
    rec.coefficients = {{"a", cfg.a}, {"b", b}};
    rec.report = classify_scalar(cfg.a > 0.0 ? ScalarBC::type1(cfg.a, b)
                                             : ScalarBC::type1_wrong_sign(cfg.a, b));
  } else if (cfg.bc == "type2") {
    rec.coefficients = {{"b", b}};
    rec.report = classify_scalar(ScalarBC::type2(b));
  } else if (cfg.bc == "type3") {
    rec.report = classify_scalar(ScalarBC::type3());
  } else {
    rec.coefficients = {{"b", b}};
    rec.report = classify_scalar(ScalarBC::type4(b));
  }
  return rec;
}

DispatchResult do_analyze(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  const ReportRecord rec = analyze_record(cfg);
  r.artifact = stem.string() + ".txt";
  write_file(r.artifact, format_report({rec}));
  r.messages.push_back("classification=" + std::string(to_string(rec.report.classification)));
  return r;
}

DispatchResult do_solve(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  const Grid2D grid = Grid2D::from_h(cfg.h.front(), cfg.courant);
  const BoundaryCoefficient bc = parse_coefficient(cfg.b.front());
  const ManufacturedSolution exact =
      cfg.problem == SolveProblem::Pulse     ? ManufacturedSolution::gaussian_pulse(cfg.width)
      : cfg.problem == SolveProblem::Traveling ? ManufacturedSolution::traveling_wave()
                                               : ManufacturedSolution::surface_wave(bc.value(), cfg.omega0);
  Simulation sim(grid, bc, exact.problem(bc, grid));
  std::vector<MonitorSample> samples;
  MonitorOptions mon;
  mon.every = cfg.every;
  if (cfg.monitor == MonitorKind::Error) {
    mon.error = [&exact](const Simulation& s) {
      return max_norm_error(s.fields(), s.grid(), exact, s.time());
    };
  }
  mon.on_sample = [&samples](const Simulation&, const MonitorSample& s) { samples.push_back(s); };
  try {
    run(sim, cfg.t_end, mon);
  } catch (const Diverged& d) {
    r.exit_code = kExitDiverged;
    r.messages.push_back("diverged at step " + std::to_string(d.step()) + ", t=" + format_number(d.time()) +
                         ", max norm " + format_number(d.max_norm()));
  }
  std::ostringstream csv;
  write_monitor_csv(csv, samples, cfg.monitor == MonitorKind::Error);
  write_file(r.artifact, csv.str());
  if (cfg.snapshot != SnapshotFormat::None) {
    const fs::path snap = stem.string() + "-final.txt";
    std::ostringstream body;
    for (int c = 0; c < sim.fields().components; ++c) {
      if (c > 0) body << '\n';
      const auto& level = sim.fields().current[static_cast<std::size_t>(c)];
      if (cfg.snapshot == SnapshotFormat::Matrix) {
        write_matrix(body, level, grid);
      } else {
        write_columnar(body, level, grid);
      }
    }
    write_file(snap, body.str());
    r.messages.push_back("snapshot=" + snap.filename().string() + " (t=" + format_number(sim.time()) + ")");
  }
  return r;
}

DispatchResult do_table1(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  std::vector<ConvergenceRow> rows;
  for (const auto& b : cfg.b) {
    const auto part = traveling_wave_suite(parse_coefficient(b), cfg.h, cfg.courant);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::ostringstream csv;
  write_convergence_csv(csv, rows);
  write_file(r.artifact, csv.str());
  return r;
}

DispatchResult do_table2(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  std::vector<ConvergenceRow> rows;
  for (double beta : cfg.beta) {
    const auto part = surface_wave_suite(beta, cfg.omega0, cfg.h, cfg.courant);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  for (const auto& row : rows) {
    if (row.phase_wrapped) {
      r.messages.push_back("phase-wrapped: " + row.label + " h=" + format_number(row.h) +
                           " err_t10=" + format_number(row.err_t10) + " exceeds the solution amplitude");
    }
  }
  std::ostringstream csv;
  write_convergence_csv(csv, rows);
  write_file(r.artifact, csv.str());
  return r;
}

DispatchResult do_growth(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  const double b = parse_coefficient(cfg.b.front()).value();
  const auto series = growth_study(b, cfg.h, cfg.t_end, cfg.courant, cfg.every);
  for (const auto& ts : series) {
    if (ts.diverged) {
      r.exit_code = kExitDiverged;
      r.messages.push_back("diverged: h=" + format_number(ts.h) + " step " +
                           std::to_string(ts.diverged->step) + ", t=" + format_number(ts.diverged->time));
    }
  }
  std::ostringstream csv;
  write_growth_csv(csv, series);
  write_file(r.artifact, csv.str());
  return r;
}

DispatchResult do_forcing(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  const Grid2D grid = Grid2D::from_h(cfg.h.front(), cfg.courant);
  std::vector<TimeSeries> series;
  for (double beta : cfg.beta) {
    // The family is rebuilt per beta so t0 is honored.
    const BoundaryForcingFamily family(beta, cfg.omega0, cfg.t0);
    const BoundaryCoefficient bc = BoundaryCoefficient::imaginary(beta);
    ProblemData data;
    const ForcingVariant v = cfg.variant;
    data.g0 = [family, v](double y, double t) { return family(v, y, t); };
    Simulation sim(grid, bc, std::move(data));
    TimeSeries ts;
    ts.h = grid.h;
    ts.beta = beta;
    MonitorOptions mon;
    mon.every = cfg.every;
    mon.on_sample = [&ts](const Simulation&, const MonitorSample& s) { ts.samples.push_back(s); };
    try {
      run(sim, cfg.t_end, mon);
    } catch (const Diverged& d) {
      r.exit_code = kExitDiverged;
      r.messages.push_back("diverged: beta=" + format_number(beta) + " step " + std::to_string(d.step()));
    }
    r.messages.push_back("peak: beta=" + format_number(beta) + " maxnorm=" + format_number(ts.peak()));
    series.push_back(std::move(ts));
  }
  std::ostringstream csv;
  write_forcing_csv(csv, series, cfg.variant);
  write_file(r.artifact, csv.str());
  return r;
}

DispatchResult do_roots(const RunConfig& cfg, const fs::path& stem) {
  DispatchResult r;
  r.artifact = stem.string() + ".csv";
  const auto roots = reflection_roots(cfg.reflection, cfg.n);
  std::ostringstream csv;
  csv << "n,re,im,residual\n";
  for (const auto& root : roots) {
    csv << root.n << ',' << format_number(root.lambda.real()) << ',' << format_number(root.lambda.imag()) << ','
        << format_number(root.residual) << '\n';
  }
  write_file(r.artifact, csv.str());
  return r;
}

}  // namespace

DispatchResult dispatch(const RunConfig& cfg) {
  const fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  const fs::path stem = dir / artifact_stem(cfg);

  DispatchResult r;
  switch (cfg.command) {
    case Command::Analyze: r = do_analyze(cfg, stem); break;
    case Command::Solve: r = do_solve(cfg, stem); break;
    case Command::Table1: r = do_table1(cfg, stem); break;
    case Command::Table2: r = do_table2(cfg, stem); break;
    case Command::Growth: r = do_growth(cfg, stem); break;
    case Command::Forcing: r = do_forcing(cfg, stem); break;
    case Command::Roots: r = do_roots(cfg, stem); break;
  }
  append_manifest(cfg, r);
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.front() == "--help" || args.front() == "-h" || args.front() == "help") {
    out << "usage: wavebc <analyze|solve|table1|table2|growth|forcing|roots> [--key value ...]\n"
           "       [--config file]  (flat key=value lines; flags override the file)\n"
           "keys: bc a b b1 b2 h courant t_end every beta omega0 width t0 variant problem\n"
           "      monitor snapshot case n out\n";
    return args.empty() ? kExitUsage : kExitOk;
  }
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UnknownFlag& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidValue& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const DispatchResult r = dispatch(cfg);
    out << r.artifact.string() << '\n';
    for (const auto& m : r.messages) out << m << '\n';
    return r.exit_code;
  } catch (const Diverged& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const IoError& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidArgument& e) {
    err << "wavebc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wavebc: analysis failed: " << e.what() << '\n';
    return kExitAnalysisFailure;
  }
}

}  // namespace wavebc::cli
