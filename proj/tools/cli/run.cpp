#include "cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "splineframes/dual.hpp"
#include "splineframes/errors.hpp"
#include "splineframes/gram.hpp"
#include "splineframes/io.hpp"
#include "splineframes/regions.hpp"
#include "splineframes/verify.hpp"
#include "splineframes/windows.hpp"

namespace splineframes::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WindowSpec {
  int bspline = 0;
  std::string csv;
  std::string support;

  void attach(CLI::App* app) {
    app->add_option("--bspline", bspline, "B-spline window g_N of order N")
        ->check(CLI::Range(1, 64));
    app->add_option("--csv", csv, "tabulated window: two columns x,value on [-N/2, 0]");
    app->add_option("--support", support, "support length N (with --csv)");
  }

  double support_length() const {
    if (bspline > 0) {
      if (!csv.empty() || !support.empty())
        throw UsageError("--bspline cannot be combined with --csv or --support");
      return bspline;
    }
    if (support.empty()) throw UsageError("need --bspline N or --support N");
    return parse_real(support);
  }

  Window window() const {
    const double N = support_length();
    if (bspline > 0) return Window::bspline(bspline);
    if (csv.empty()) throw UsageError("need --bspline N or --csv PATH --support N");
    return load_tabulated_window(csv, N);
  }
};

struct Lattice {
  std::string a;
  std::string b;

  void attach(CLI::App* app, bool with_b = true) {
    app->add_option("-a", a, "time shift a (decimal or p/q)")->required();
    if (with_b) app->add_option("-b", b, "frequency shift b (decimal or p/q)")->required();
  }
};

std::string interval_text(const BInterval& iv) {
  return "(" + format_double(iv.lo) + ", " + format_double(iv.hi) + (iv.hi_inclusive ? "]" : ")");
}

// Writes to `path` when set, otherwise to `out`.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  writer(file);
  if (!file) throw DomainError("failed writing " + path);
}

int resolve_m(const LatticeParams& p, int requested, std::ostream& err) {
  const auto m = m_index(p);
  if (!m) {
    err << "(a, b) is classified " << classify(p).to_string()
        << "; no compactly supported dual from this construction\n";
    return 0;
  }
  if (requested > 0 && requested != *m) {
    err << "(a, b) lies in T(" << *m << "), not T(" << requested << ")\n";
    return 0;
  }
  return *m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabor frame regions and compactly supported dual windows for B-spline type windows",
               "splineframes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "splineframes 0.1.0");

  WindowSpec win;
  Lattice lat;
  std::string output;
  std::function<int()> action;

  auto* classify_cmd = app.add_subcommand("classify", "label (a, b) and print the T(m) b-interval");
  {
    auto* c = classify_cmd;
    win.attach(c);
    lat.attach(c);
    c->callback([&] {
      action = [&] {
        const auto p = LatticeParams::make(win.support_length(), parse_real(lat.a),
                                           parse_real(lat.b));
        const RegionLabel label = classify(p);
        out << label.to_string() << '\n';
        if (label.tag == RegionTag::T) {
          out << "m=" << label.m << '\n';
          if (auto iv = tm_bounds(p.N, p.a, label.m)) out << "b_interval=" << interval_text(*iv) << '\n';
        }
        return kExitOk;
      };
    });
  }

  std::string a_max, b_max, format = "csv";
  int res = 200;
  {
    auto* c = app.add_subcommand("region-map", "label a res x res grid of (a, b) cells");
    win.attach(c);
    c->add_option("--a-max", a_max, "largest a (default N)");
    c->add_option("--b-max", b_max, "largest b (default 4/N)");
    c->add_option("--res", res, "cells per axis")->capture_default_str()->check(CLI::Range(1, 10000));
    c->add_option("--format", format, "csv or svg")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "svg"}));
    c->add_option("-o,--output", output, "output file (default stdout)");
    c->callback([&] {
      action = [&] {
        const double N = win.support_length();
        const double am = a_max.empty() ? N : parse_real(a_max);
        const double bm = b_max.empty() ? 4.0 / N : parse_real(b_max);
        const RegionMap map = region_map(N, am, bm, res);
        emit(output, out, [&](std::ostream& os) {
          if (format == "svg")
            write_region_svg(os, map);
          else
            write_region_csv(os, map);
        });
        return kExitOk;
      };
    });
  }

  int m_opt = 0;
  int samples = 512;
  {
    auto* c = app.add_subcommand("dual", "sample the compactly supported dual window to CSV");
    win.attach(c);
    lat.attach(c);
    c->add_option("-m", m_opt, "expected T(m) index (checked)")->check(CLI::Range(1, kMaxGramIndex));
    c->add_option("--samples", samples, "samples per half cell")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    c->add_option("-o,--output", output, "output file (default stdout)");
    c->callback([&] {
      action = [&] {
        const Window w = win.window();
        const auto p = LatticeParams::make(w.support_length(), parse_real(lat.a),
                                           parse_real(lat.b));
        const int m = resolve_m(p, m_opt, err);
        if (m == 0) return kExitCheckFailed;
        const DualWindow d = build_dual(w, p, m, samples);
        emit(output, out, [&](std::ostream& os) { write_dual_csv(os, d); });
        return kExitOk;
      };
    });
  }

  int grid = 4096;
  int sweep_grid = 4096;
  std::string tol = "1e-10";
  std::string crosscheck_tol = "1e-12";
  std::string dual_csv;
  bool bounds = false;
  {
    auto* c = app.add_subcommand(
        "verify", "duality residual, determinant positivity and closed-form cross-check");
    win.attach(c);
    lat.attach(c);
    c->add_option("-m", m_opt, "expected T(m) index (checked)")->check(CLI::Range(1, kMaxGramIndex));
    c->add_option("--samples", samples, "samples per half cell when a dual is built")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    c->add_option("--grid", grid,
                  "residual grid size (default 4096, or 2*samples_per_cell with --dual-csv)")
        ->check(CLI::PositiveNumber);
    c->add_option("--sweep-grid", sweep_grid, "grid size of the positivity and cross-check sweeps")
        ->capture_default_str()
        ->check(CLI::Range(2, 1 << 24));
    c->add_option("--tol", tol, "duality residual tolerance")->capture_default_str();
    c->add_option("--crosscheck-tol", crosscheck_tol, "relative tolerance of the cross-check")
        ->capture_default_str();
    c->add_option("--dual-csv", dual_csv, "check a saved dual CSV with sample lookup");
    c->add_flag("--bounds", bounds, "also print Walnut frame bound estimates");
    c->callback([&, c] {
      action = [&, c] {
        const Window w = win.window();
        const auto p = LatticeParams::make(w.support_length(), parse_real(lat.a),
                                           parse_real(lat.b));
        const int m = resolve_m(p, m_opt, err);
        if (m == 0) return kExitCheckFailed;

        DualityOptions opts;
        opts.tol = parse_real(tol);
        std::optional<DualWindow> dual;
        if (!dual_csv.empty()) {
          std::ifstream in(dual_csv, std::ios::binary);
          if (!in) throw DomainError("cannot read " + dual_csv);
          dual = read_dual_csv(in);
          if (!(dual->params() == p) || dual->m() != m)
            throw DomainError(dual_csv + " was written for other parameters");
          opts.lookup = DualLookup::Sample;
          opts.grid_size = 2 * dual->samples_per_cell();
        } else {
          dual = build_dual(w, p, m, samples);
        }
        if (c->count("--grid") > 0) opts.grid_size = grid;

        const DualityReport duality = duality_residual(w, *dual, p, m, opts);
        out << "label=" << classify(p).to_string() << '\n' << "m=" << m << '\n';
        out << duality.to_key_value();

        bool ok = duality.pass;
        try {
          out << positivity_sweep(w, p, m, sweep_grid).to_key_value();
        } catch (const InvariantViolation& e) {
          out << "positivity.failed=" << e.what() << '\n';
          ok = false;
        }
        const CrosscheckReport cc =
            oracle_crosscheck(w, p, m, sweep_grid, parse_real(crosscheck_tol));
        out << cc.to_key_value();
        ok = ok && cc.pass;

        if (bounds) {
          const double bg = bessel_bound_walnut(w, p, 1024);
          const double bh = bessel_bound_walnut(dual_as_window(*dual), p, 1024);
          const BoundEstimate est = lower_bound_via_dual(bg, bh);
          out << "bounds.upper_B=" << format_double(est.upper_B) << '\n'
              << "bounds.lower_A=" << format_double(est.lower_A) << '\n'
              << "bounds.dual_bessel=" << format_double(bh) << '\n'
              << "bounds.consistent=" << (est.consistent() ? "true" : "false") << '\n';
        }
        out << "verify.pass=" << (ok ? "true" : "false") << '\n';
        return ok ? kExitOk : kExitCheckFailed;
      };
    });
  }

  {
    auto* c = app.add_subcommand("check-window", "sampled membership test for V_{N,a}");
    win.attach(c);
    lat.attach(c, false);
    c->add_option("--grid", grid, "sample points")->capture_default_str()->check(CLI::Range(2, 1 << 24));
    c->add_option("--tol", tol, "tolerance")->default_str("1e-12");
    c->callback([&, c] {
      action = [&, c] {
        const Window w = win.window();
        const double a = parse_real(lat.a);
        const double t = c->count("--tol") > 0 ? parse_real(tol) : 1e-12;
        const MembershipReport r = check_membership(w, a, grid, t);
        out << "membership.a1=" << (r.a1_pass ? "pass" : "fail") << '\n'
            << "membership.a2=" << (r.a2_pass ? "pass" : "fail") << '\n'
            << "membership.a3=" << (r.a3_pass ? "pass" : "fail") << '\n'
            << "membership.worst_violation=" << format_double(r.worst_violation) << '\n';
        if (!r.witness_points.empty()) {
          const std::size_t shown = std::min<std::size_t>(r.witness_points.size(), 8);
          out << "membership.witness_count=" << r.witness_points.size() << '\n'
              << "membership.witnesses=";
          for (std::size_t i = 0; i < shown; ++i)
            out << (i ? "," : "") << format_double(r.witness_points[i]);
          out << '\n';
        }
        out << "membership.pass=" << (r.pass() ? "true" : "false") << '\n';
        return r.pass() ? kExitOk : kExitCheckFailed;
      };
    });
  }

  std::string x_text = "0";
  {
    auto* c = app.add_subcommand("gram", "dump G_m(x) as CSV, rows ell = 1-m .. m-1");
    win.attach(c);
    lat.attach(c);
    c->add_option("-m", m_opt, "matrix index m")->required()->check(CLI::Range(1, kMaxGramIndex));
    c->add_option("-x", x_text, "point in [-a/2, a/2]")->capture_default_str();
    c->add_option("-o,--output", output, "output file (default stdout)");
    c->callback([&] {
      action = [&] {
        const Window w = win.window();
        const auto p = LatticeParams::make(w.support_length(), parse_real(lat.a),
                                           parse_real(lat.b));
        const GramMatrix g = build_gram(w, p, m_opt, parse_real(x_text));
        emit(output, out, [&](std::ostream& os) { write_gram_csv(os, g); });
        return kExitOk;
      };
    });
  }

  std::vector<std::string> argv_store{"splineframes"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace splineframes::cli
