// frl: command-line front end for the decay / regularity toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or invalid input,
// 3 numerical convergence failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frl/catalog.hpp"
#include "frl/error.hpp"
#include "frl/estimators.hpp"
#include "frl/kernels.hpp"
#include "frl/mellin.hpp"
#include "frl/report.hpp"
#include "frl/spectral.hpp"
#include "frl/theory.hpp"
#include "frl/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace frl;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kConvergence = 3 };

struct FnArgs {
  std::string kind;
  std::string descriptor_file;
  std::optional<double> alpha, beta, mu, a;
  int b = 3;
  int depth = 40;
  double L = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fn", kind, "function kind (see `frl list`)");
    cmd->add_option("--descriptor", descriptor_file, "JSON descriptor file {kind, params, L}");
    cmd->add_option("--alpha", alpha, "chirp alpha");
    cmd->add_option("--beta", beta, "chirp beta");
    cmd->add_option("--mu", mu, "Hoelder exponent parameter");
    cmd->add_option("--a", a, "expabs rate");
    cmd->add_option("--b", b, "weierstrass base");
    cmd->add_option("--depth", depth, "cantor ternary depth");
    cmd->add_option("--L", L, "half width of the domain");
  }

  catalog::FunctionDescriptor build() const {
    if (!descriptor_file.empty()) {
      std::ifstream in(descriptor_file);
      if (!in) throw DomainError("cannot read descriptor file '" + descriptor_file + "'");
      return json::parse(in).get<catalog::FunctionDescriptor>();
    }
    if (kind.empty()) throw DomainError("one of --fn or --descriptor is required");
    auto need = [](const std::optional<double>& v, const char* name) {
      if (!v) throw DomainError(std::string("missing --") + name);
      return *v;
    };
    switch (catalog::kind_from_name(kind)) {
      case catalog::Kind::Chirp: return catalog::chirp(need(alpha, "alpha"), need(beta, "beta"), L);
      case catalog::Kind::PowerAbs: return catalog::power_abs(need(mu, "mu"), L);
      case catalog::Kind::Weierstrass: return catalog::weierstrass(need(mu, "mu"), b, L);
      case catalog::Kind::CantorLebesgue: return catalog::cantor_lebesgue(depth, L);
      case catalog::Kind::ExpAbs: return catalog::exp_abs(need(a, "a"), L);
      case catalog::Kind::GaussPower: return catalog::gauss_power(need(mu, "mu"), L);
    }
    throw DomainError("unreachable");
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"type", kind}, {"message", message}}}};
}

// ---- list ------------------------------------------------------------------

struct KindRow {
  const char* name;
  const char* params;
  const char* holder;
  catalog::FunctionDescriptor example;
};

std::vector<KindRow> kind_rows() {
  return {
      {"chirp", "alpha>0, beta>0", "alpha/(1+beta)", catalog::chirp(0.7, 0.5)},
      {"powerabs", "0<mu<1", "mu", catalog::power_abs(0.7)},
      {"weierstrass", "0<mu<1, integer b>=2", "mu", catalog::weierstrass(0.5)},
      {"cantor", "integer depth>=1", "ln2/ln3", catalog::cantor_lebesgue()},
      {"expabs", "a>0", "1 (Lipschitz)", catalog::exp_abs(1.0)},
      {"gausspower", "0<mu<1", "mu", catalog::gauss_power(0.5)},
  };
}

int cmd_list(bool as_json) {
  const auto rows = kind_rows();
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"kind", r.name},
                     {"params", r.params},
                     {"holder", r.holder},
                     {"example", r.example},
                     {"example_metadata", catalog::metadata(r.example)}});
    }
    std::cout << arr.dump(2) << '\n';
    return kOk;
  }
  std::cout << std::left << std::setw(13) << "kind" << std::setw(24) << "parameters" << std::setw(18)
            << "Hoelder" << "example metadata\n";
  for (const auto& r : rows) {
    const auto m = catalog::metadata(r.example);
    std::ostringstream meta;
    meta << catalog::describe(r.example) << ": AC=" << (m.is_ac ? "yes" : "no")
         << " BV=" << (m.is_bv ? "yes" : "no") << " decay=";
    if (m.decay_exponent_predicted) meta << *m.decay_exponent_predicted;
    else meta << "n/a";
    if (!m.decay_note.empty()) meta << " (" << m.decay_note << ")";
    std::cout << std::left << std::setw(13) << r.name << std::setw(24) << r.params << std::setw(18)
              << r.holder << meta.str() << '\n';
  }
  return kOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  FnArgs fn;
  std::size_t N = 200000;
  long k1 = 9, k2 = 9999;
  long kmin = 16, kmax = 0;
  int bins = est::kDefaultBinsPerDecade;
  std::string out = "frl_out";
  std::string formats = "csv,json,svg";
  std::string estimators = "decay,holder,oscillation,tv";
  std::uint64_t seed = 0;
};

template <class F>
json attempt(F&& f) {
  try {
    return f();
  } catch (const ConvergenceError&) {
    throw;
  } catch (const Error& e) {
    return error_json("skipped", e.what());
  }
}

int cmd_analyze(const AnalyzeArgs& args) {
  const auto d = args.fn.build();
  if (args.N < 16) throw DomainError("analyze: N must be >= 16");
  const auto formats = split(args.formats, ',');
  const auto which = split(args.estimators, ',');
  const fs::path out(args.out);

  const auto signal = spectral::sample(d, args.N);
  const auto spec = spectral::dft(signal);

  json est_json{{"descriptor", d}, {"N", args.N}, {"metadata", catalog::metadata(d)}, {"seed", args.seed}};
  std::optional<est::DecayEstimate> env;
  if (has(which, "decay")) {
    est_json["two_point"] = attempt([&] { return json(est::decay_slope_two_point(spec, args.k1, args.k2)); });
    est_json["envelope"] = attempt([&] {
      const long kmax = args.kmax > 0 ? args.kmax : static_cast<long>(args.N) / 4;
      env = est::decay_slope_envelope(spec, args.kmin, kmax, args.bins);
      return json(*env);
    });
  }
  if (has(which, "holder")) {
    est_json["holder"] = attempt([&] {
      return json(est::holder_estimate(d, est::default_h_grid(), est::kDefaultHolderSamples, args.seed));
    });
  }
  if (has(which, "oscillation")) {
    est_json["oscillation"] = attempt([&] { return json(est::oscillation_profile(d, est::default_h_grid())); });
  }
  if (has(which, "tv")) {
    est_json["total_variation"] = attempt([&] { return json(est::total_variation(d, est::default_tv_grids())); });
  }
  est_json["prediction"] = attempt([&] { return json(theory::predict_catalog(d)); });

  if (has(formats, "csv")) {
    std::ostringstream s1, s2;
    spectral::write_signal_csv(s1, signal);
    spectral::write_spectrum_csv(s2, spec);
    report::write_text(out / "signal.csv", s1.str());
    report::write_text(out / "spectrum.csv", s2.str());
  }
  if (has(formats, "json")) report::write_json(out / "estimates.json", est_json);
  if (has(formats, "svg")) {
    report::Series pts{{}, {}, "|c_k|", false};
    for (std::size_t k = 1; 2 * k < spec.size(); ++k) {
      pts.x.push_back(double(k));
      pts.y.push_back(std::abs(spec.coeffs[k]));
    }
    std::vector<report::Series> series{pts};
    if (env) {
      report::Series line{{}, {}, "envelope slope " + std::to_string(env->slope), true};
      for (double k : {double(env->k_min), double(env->k_max)}) {
        line.x.push_back(k);
        line.y.push_back(std::exp(env->intercept + env->slope * std::log(k)));
      }
      series.push_back(line);
    }
    std::ostringstream svg;
    report::write_loglog_svg(svg, series, "DFT magnitude, " + catalog::describe(d), "k", "|c_k|");
    report::write_text(out / "plot.svg", svg.str());
  }

  std::cout << catalog::describe(d) << ", N = " << args.N << '\n';
  auto line = [&](const char* key, const char* field, const char* label) {
    if (est_json.contains(key) && est_json[key].contains(field)) {
      std::cout << "  " << label << ": " << est_json[key][field] << '\n';
    } else if (est_json.contains(key)) {
      std::cout << "  " << label << ": " << est_json[key]["error"]["message"].get<std::string>() << '\n';
    }
  };
  line("two_point", "slope", "two-point slope");
  line("envelope", "slope", "envelope slope");
  line("holder", "mu_hat", "Hoelder estimate");
  line("oscillation", "uniformly_bounded_verdict", "bounded oscillations");
  line("total_variation", "diverging_verdict", "TV diverging");
  line("prediction", "decay_exponent", "predicted decay exponent");
  std::cout << "  outputs in " << out.string() << '\n';
  return kOk;
}

// ---- predict ---------------------------------------------------------------

int cmd_predict(const FnArgs& fn, const std::string& mode, std::optional<double> rho, const std::string& out) {
  json j;
  int code = kOk;
  try {
    if (rho) {
      j = theory::infer_holder_from_decay(*rho);
    } else {
      const auto d = fn.build();
      if (d.kind() == catalog::Kind::Chirp && mode == "transform") {
        const auto& c = std::get<catalog::Chirp>(d.params);
        j = theory::predict_chirp_decay(c.alpha, c.beta, theory::DecayMode::Transform);
      } else {
        j = theory::predict_catalog(d);
      }
      j["descriptor"] = d;
    }
  } catch (const theory::PoleCoincidenceError& e) {
    j = error_json("pole_coincidence", e.what());
    code = kUsage;
  } catch (const PreconditionError& e) {
    j = error_json("precondition", e.what());
    code = kUsage;
  } catch (const DomainError& e) {
    j = error_json("domain", e.what());
    code = kUsage;
  }
  std::cout << j.dump(2) << '\n';
  if (!out.empty()) report::write_json(fs::path(out) / "prediction.json", j);
  return code;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& out, bool quiet) {
  const auto s = verify::suite_from_name(suite);
  const auto r = verify::run(s, quiet ? nullptr : &std::cerr);
  verify::print_table(std::cout, r);
  if (!out.empty()) report::write_json(fs::path(out) / "verify_report.json", r);
  if (const auto* f = r.first_failure()) {
    std::cout << "first failure: " << f->claim << " (predicted " << f->predicted << ", measured " << f->measured
              << ", tolerance " << f->tolerance << ")\n";
    return kVerifyFailed;
  }
  return kOk;
}

// ---- mellin ----------------------------------------------------------------

struct MellinArgs {
  std::optional<double> alpha, beta;
  std::string which = "I1";
  std::vector<double> k;
  std::vector<double> nu;
  std::string method = "mb";
  bool compare = false;
  bool asymptotic = false;
  bool show_spec = false;
  std::string out;
};

int cmd_mellin(const MellinArgs& m) {
  if (!m.alpha || !m.beta) throw DomainError("mellin: --alpha and --beta are required");
  const double alpha = *m.alpha, beta = *m.beta;
  json result{{"alpha", alpha}, {"beta", beta}, {"which", m.which}};
  try {
    if (m.which == "ft") {
      if (m.nu.empty()) throw DomainError("mellin: --nu is required for --which ft");
      json rows = json::array();
      for (double nu : m.nu) {
        json row{{"nu", nu}};
        if (m.compare) {
          const double a = mellin::chirp_ft(alpha, beta, nu, mellin::Method::MB);
          const double b = mellin::chirp_ft(alpha, beta, nu, mellin::Method::Direct);
          row["MB"] = a;
          row["Direct"] = b;
          row["rel_discrepancy"] = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        } else {
          row[m.method] = mellin::chirp_ft(alpha, beta, nu, mellin::method_from_name(m.method));
        }
        rows.push_back(row);
      }
      result["rows"] = rows;
    } else {
      const auto which = m.which == "I1"   ? mellin::ChirpIntegral::I1
                         : m.which == "I2" ? mellin::ChirpIntegral::I2
                                           : throw DomainError("mellin: --which must be I1, I2 or ft");
      const mellin::ChirpIntegralSpec c{alpha, beta, which};
      const auto spec = mellin::build_chirp_spec(c);
      if (m.show_spec) result["hfun_spec"] = spec;
      if (m.asymptotic) result["rho"] = mellin::h_asymptotic_exponent(spec);
      json rows = json::array();
      for (double k : m.k) {
        json row{{"k", k}};
        if (m.compare) {
          const double a = mellin::chirp_integral(c, k, mellin::Method::MB);
          const double b = mellin::chirp_integral(c, k, mellin::Method::Direct);
          row["MB"] = a;
          row["Direct"] = b;
          row["rel_discrepancy"] = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        } else {
          row[m.method] = mellin::chirp_integral(c, k, mellin::method_from_name(m.method));
        }
        rows.push_back(row);
      }
      result["rows"] = rows;
    }
  } catch (const ConvergenceError&) {
    throw;
  } catch (const Error& e) {
    std::cout << error_json("precondition", e.what()).dump(2) << '\n';
    return kUsage;
  }
  std::cout << result.dump(2) << '\n';
  if (!m.out.empty()) {
    report::write_json(fs::path(m.out) / "mellin.json", result);
    std::ostringstream csv;
    csv << std::setprecision(17);
    const bool ft = m.which == "ft";
    csv << (ft ? "nu" : "k") << (m.compare ? ",MB,Direct,rel_discrepancy\n" : ",value\n");
    for (const auto& row : result["rows"]) {
      csv << row[ft ? "nu" : "k"].get<double>();
      if (m.compare) {
        csv << ',' << row["MB"].get<double>() << ',' << row["Direct"].get<double>() << ','
            << row["rel_discrepancy"].get<double>();
      } else {
        csv << ',' << row[m.method].get<double>();
      }
      csv << '\n';
    }
    report::write_text(fs::path(m.out) / "mellin.csv", csv.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  kernels::apply_thread_cap();
  CLI::App app{"frl: Fourier decay versus regularity toolkit"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list catalog function kinds");
  bool list_json = false;
  list->add_flag("--json", list_json, "emit JSON");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "sample, transform and measure a catalog function");
  an.fn.attach(analyze);
  analyze->add_option("--N", an.N, "number of samples");
  analyze->add_option("--k1", an.k1, "two-point slope: first index");
  analyze->add_option("--k2", an.k2, "two-point slope: second index");
  analyze->add_option("--kmin", an.kmin, "envelope fit: lowest k");
  analyze->add_option("--kmax", an.kmax, "envelope fit: highest k (default N/4)");
  analyze->add_option("--bins", an.bins, "envelope fit: bins per decade");
  analyze->add_option("--out", an.out, "output directory");
  analyze->add_option("--formats", an.formats, "comma list of csv,json,svg");
  analyze->add_option("--estimators", an.estimators, "comma list of decay,holder,oscillation,tv");
  analyze->add_option("--seed", an.seed, "nonzero: jitter the Hoelder t-grid");

  FnArgs pr;
  std::string mode = "series";
  std::optional<double> rho;
  std::string pred_out;
  auto* predict = app.add_subcommand("predict", "closed-form decay / Hoelder predictions");
  pr.attach(predict);
  predict->add_option("--mode", mode, "chirp: series or transform")->check(CLI::IsMember({"series", "transform"}));
  predict->add_option("--rho", rho, "infer (m, mu) from a decay exponent instead");
  predict->add_option("--out", pred_out, "directory for prediction.json");

  std::string suite = "quick", ver_out;
  bool quiet = false;
  auto* ver = app.add_subcommand("verify", "run a reproduction suite");
  ver->add_option("--suite", suite, "quick, paper or full")->check(CLI::IsMember({"quick", "paper", "full"}));
  ver->add_option("--out", ver_out, "directory for verify_report.json");
  ver->add_flag("--quiet", quiet, "no progress on stderr");

  MellinArgs mm;
  auto* mel = app.add_subcommand("mellin", "chirp integrals I1/I2 and the chirp transform");
  mel->add_option("--alpha", mm.alpha, "chirp alpha");
  mel->add_option("--beta", mm.beta, "chirp beta");
  mel->add_option("--which", mm.which, "I1, I2 or ft")->check(CLI::IsMember({"I1", "I2", "ft"}));
  mel->add_option("--k", mm.k, "k values (I1/I2)");
  mel->add_option("--nu", mm.nu, "nu values (ft)");
  mel->add_option("--method", mm.method, "mb or direct")->check(CLI::IsMember({"mb", "direct"}));
  mel->add_flag("--compare", mm.compare, "evaluate both methods and report the discrepancy");
  mel->add_flag("--asymptotic", mm.asymptotic, "report the H-function asymptotic exponent");
  mel->add_flag("--spec", mm.show_spec, "emit the H-function parameter lists");
  mel->add_option("--out", mm.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*list) return cmd_list(list_json);
    if (*analyze) return cmd_analyze(an);
    if (*predict) return cmd_predict(pr, mode, rho, pred_out);
    if (*ver) return cmd_verify(suite, ver_out, quiet);
    if (*mel) return cmd_mellin(mm);
  } catch (const ConvergenceError& e) {
    std::cerr << "frl: convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const Error& e) {
    std::cerr << "frl: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "frl: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
