// Command-line front end: single kernel evaluations, grid sweeps for
// plotting, and the named verification suites. Talks to the library
// exclusively through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heatkernel.h"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// HK_EDOMAIN is a precondition violation, reported as a usage error;
// everything else that can go wrong mid-computation is a numeric failure.
int exit_code_for(hk_status s) {
  return s == HK_EDOMAIN || s == HK_EINVAL ? kExitUsage : kExitNumeric;
}

int report_error(hk_status s) {
  std::cerr << "error: " << hk_status_name(s) << ": " << hk_last_error()
            << "\n";
  return exit_code_for(s);
}

struct ConfigHandle {
  hk_config* cfg = hk_config_new();
  ~ConfigHandle() { hk_config_free(cfg); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
  ConfigHandle() = default;
};

bool parse_point(const std::string& s, double& x, double& y) {
  char trail;
  return std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &trail) == 2;
}

// "a:b:n" range. Log spacing interpolates in log t, linear in r.
struct Range {
  double a = 0.0, b = 0.0;
  int n = 0;
};

bool parse_range(const std::string& s, Range& out) {
  char trail;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &out.a, &out.b, &out.n, &trail) !=
      3)
    return false;
  return out.n >= 1;
}

std::vector<double> expand(const Range& r, bool log_spaced) {
  std::vector<double> v;
  if (r.n == 1) {
    v.push_back(r.a);
    return v;
  }
  for (int i = 0; i < r.n; ++i) {
    const double f = static_cast<double>(i) / (r.n - 1);
    v.push_back(log_spaced ? r.a * std::pow(r.b / r.a, f)
                           : r.a + (r.b - r.a) * f);
  }
  return v;
}

std::string record_csv(double t, double r, double k,
                       const hk_eval_report& rep) {
  return num(t) + "," + num(r) + "," + num(k) + "," + num(rep.value) + "," +
         num(rep.error_estimate) + "," + num(rep.tail_bound) + "," +
         std::to_string(rep.evaluations);
}

std::string record_json(double t, double r, double k,
                        const hk_eval_report& rep) {
  std::ostringstream os;
  os << "{\"t\": " << num(t) << ", \"r\": " << num(r) << ", \"k\": " << num(k)
     << ", \"value\": " << num(rep.value)
     << ", \"error_estimate\": " << num(rep.error_estimate)
     << ", \"tail_bound\": " << num(rep.tail_bound)
     << ", \"evaluations\": " << rep.evaluations << "}";
  return os.str();
}

constexpr const char* kCsvHeader =
    "t,r,k,value,error_estimate,tail_bound,evaluations";

int cmd_eval(double t, double k, bool has_r, double r, const std::string& z,
             const std::string& w, const std::string& format, double rel_tol) {
  ConfigHandle h;
  if (hk_status s = hk_config_set_rel_tol(h.cfg, rel_tol); s != HK_OK)
    return report_error(s);
  hk_eval_report rep;
  hk_status s;
  double r_used = r;
  if (has_r) {
    s = hk_eval_kernel(h.cfg, t, r, k, &rep);
  } else {
    double zx, zy, wx, wy;
    if (!parse_point(z, zx, zy) || !parse_point(w, wx, wy)) {
      std::cerr << "error: --z/--w must be \"x,y\" pairs\n";
      return kExitUsage;
    }
    if (hk_status d = hk_hyperbolic_distance(zx, zy, wx, wy, &r_used);
        d != HK_OK)
      return report_error(d);
    s = hk_eval_kernel_points(h.cfg, t, zx, zy, wx, wy, k, &rep);
  }
  if (s != HK_OK) return report_error(s);
  if (format == "csv")
    std::cout << kCsvHeader << "\n" << record_csv(t, r_used, k, rep) << "\n";
  else
    std::cout << record_json(t, r_used, k, rep) << "\n";
  return 0;
}

int cmd_grid(const std::string& t_range, const std::string& r_range,
             const std::string& k_list, const std::string& format,
             const std::string& out_path, double rel_tol) {
  Range tr, rr;
  if (!parse_range(t_range, tr) || !parse_range(r_range, rr)) {
    std::cerr << "error: ranges must be a:b:n with n >= 1\n";
    return kExitUsage;
  }
  std::vector<double> ks;
  {
    std::istringstream is(k_list);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        size_t pos = 0;
        ks.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        std::cerr << "error: bad value in --k list: '" << item << "'\n";
        return kExitUsage;
      }
    }
  }
  if (ks.empty()) {
    std::cerr << "error: --k list is empty\n";
    return kExitUsage;
  }
  const std::vector<double> ts = expand(tr, /*log_spaced=*/true);
  const std::vector<double> rs = expand(rr, /*log_spaced=*/false);

  ConfigHandle h;
  if (hk_status s = hk_config_set_rel_tol(h.cfg, rel_tol); s != HK_OK)
    return report_error(s);

  // Everything is buffered and emitted only on full success, so a failing
  // cell truncates the output instead of leaving a partial file.
  std::ostringstream buf;
  const bool csv = format != "json";
  if (csv) buf << kCsvHeader << "\n";
  for (double k : ks)
    for (double t : ts)
      for (double r : rs) {
        hk_eval_report rep;
        if (hk_status s = hk_eval_kernel(h.cfg, t, r, k, &rep); s != HK_OK)
          return report_error(s);
        buf << (csv ? record_csv(t, r, k, rep) : record_json(t, r, k, rep))
            << "\n";
      }
  if (out_path == "-" || out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitNumeric;
    }
    f << buf.str();
  }
  return 0;
}

int cmd_check(const std::string& suite, double rel_tol) {
  ConfigHandle h;
  if (hk_status s = hk_config_set_rel_tol(h.cfg, rel_tol); s != HK_OK)
    return report_error(s);
  hk_check_report reports[16];
  int n = 0;
  if (hk_status s = hk_run_checks(h.cfg, suite.c_str(), reports, 16, &n);
      s != HK_OK)
    return report_error(s);
  bool all = true;
  for (int i = 0; i < n; ++i) {
    const hk_check_report& r = reports[i];
    std::cout << "SUITE " << r.suite << " " << (r.passed ? "PASS" : "FAIL")
              << " worst=" << num(r.worst_residual) << " at=" << r.worst_case
              << "\n";
    if (!r.passed) all = false;
  }
  return all ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat kernel of the weighted Maass-Laplacian on the "
               "hyperbolic plane"};
  app.require_subcommand(1);

  double t = 0.0, r = 0.0, k = 0.0, rel_tol = 1e-8;
  std::string z, w, format, out_path = "-", t_range, r_range, k_list, suite;

  CLI::App* ev = app.add_subcommand("eval", "Evaluate K_H(t, r) once");
  ev->add_option("--t", t, "diffusion time, > 0")->required();
  ev->add_option("--k", k, "weight")->required();
  CLI::Option* opt_r = ev->add_option("--r", r, "hyperbolic distance, >= 0");
  CLI::Option* opt_z = ev->add_option("--z", z, "point \"x,y\", y > 0");
  CLI::Option* opt_w = ev->add_option("--w", w, "point \"x,y\", y > 0");
  opt_r->excludes(opt_z)->excludes(opt_w);
  opt_z->needs(opt_w);
  opt_w->needs(opt_z);
  ev->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  ev->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* gr = app.add_subcommand("grid", "Sweep a (t, r, k) grid");
  gr->add_option("--t-range", t_range, "a:b:n, log-spaced")->required();
  gr->add_option("--r-range", r_range, "a:b:n, linear")->required();
  gr->add_option("--k", k_list, "weight or comma list")->required();
  gr->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  gr->add_option("--out", out_path, "output path, - for stdout");
  gr->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");

  CLI::App* ck = app.add_subcommand("check", "Run verification suites");
  ck->add_option("--suite", suite,
                 "all|tcheb|bracket|kernel|monotone|asymptotics|tails")
      ->required();
  ck->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (ev->parsed()) {
    const bool has_r = opt_r->count() > 0;
    if (!has_r && opt_z->count() == 0) {
      std::cerr << "error: eval needs --r or --z/--w\n";
      return kExitUsage;
    }
    return cmd_eval(t, k, has_r, r, z, w, format.empty() ? "json" : format,
                    rel_tol);
  }
  if (gr->parsed())
    return cmd_grid(t_range, r_range, k_list, format.empty() ? "csv" : format,
                    out_path, rel_tol);
  return cmd_check(suite, rel_tol);
}
