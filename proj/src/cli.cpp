#include "ramsey/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <variant>

#include <CLI11.hpp>

#include "ramsey/book.hpp"
#include "ramsey/certifier.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/es.hpp"
#include "ramsey/search.hpp"
#include "ramsey/symmetric.hpp"
#include "ramsey/trace_io.hpp"

namespace ramsey {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string coloring;  // file path; empty = generate
  std::size_t n = 64;
  std::string gen = "random";
  double p = 0.5;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--coloring", coloring, "Coloring file (text or binary)");
    app->add_option("--n", n, "Vertices when generating");
    app->add_option("--gen", gen, "Generator: random, all-red, all-blue, paley")
        ->check(CLI::IsMember({"random", "all-red", "all-blue", "paley"}));
    app->add_option("--p", p, "Red probability for random");
    app->add_option("--seed", seed, "Seed for random");
  }

  EdgeColoring load() const {
    if (!coloring.empty()) return load_coloring(coloring);
    if (gen == "random") return generate(n, RandomKind{p, seed});
    if (gen == "all-red") return generate(n, AllRedKind{});
    if (gen == "all-blue") return generate(n, AllBlueKind{});
    return generate(n, PaleyKind{static_cast<std::int64_t>(n)});
  }

  Json header() const {
    if (!coloring.empty()) return {{"coloring", coloring}};
    return {{"generator", gen}, {"p", p}, {"seed", seed}};
  }
};

double env_double(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const double d = std::strtod(v, &end);
  if (*end != '\0' || !(d > 0)) throw UsageError(std::string(name) + " must be a positive number");
  return d;
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long d = std::strtoull(v, &end, 10);
  if (*end != '\0' || d == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(d);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return Json::parse(f);
}

struct RunArgs {
  std::string algorithm;
  Source source;
  int k = 0, l = 0, t = 0, m = 0;
  std::string mu = "1/2";
  std::optional<double> eps;
  double guard = 0.0;
  std::string eta = "1/8000", kappa_cutoff = "400";
  double kappa_step = 0.25;
  std::string trace, witness, report, save_coloring_path;
};

struct RunOutput {
  Json header;
  std::vector<Json> records;
  std::optional<Witness> witness;
  Json report;
  std::string summary;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

RunOutput run_algorithm(const RunArgs& a, const EdgeColoring& g) {
  RunOutput o;
  o.header = a.source.header();
  o.header["algorithm"] = a.algorithm;
  o.header["n"] = g.size();
  const auto& alg = a.algorithm;
  if (alg == "es" || alg == "es-offdiag") {
    need(a.k >= 2, "--k >= 2 required");
    const bool off = alg == "es-offdiag";
    if (off) need(a.l >= 2 && a.l <= a.k, "--l with 2 <= l <= k required");
    const auto r = off ? run_es_offdiag(g, a.k, a.l) : run_es(g, a.k);
    o.header["k"] = a.k;
    if (off) o.header["l"] = a.l;
    for (const auto& s : r.steps) o.records.push_back(es_step_json(s));
    if (r.witness) o.witness = *r.witness;
    const auto check = check_es_trace(g, r);
    o.report = {{"steps", r.steps.size()}, {"A", r.A.count()}, {"B", r.B.count()},
                {"X", r.X.count()}, {"trace_check", check.empty() ? "ok" : check}};
    o.summary = r.witness ? std::string(to_string(r.witness->color)) + " clique of size " +
                                std::to_string(r.witness->vertices.count())
                          : "exhausted";
  } else if (alg == "book-v1" || alg == "book-mu" || alg == "book-offdiag") {
    need(a.k >= 2, "--k >= 2 required");
    BookVariant v = BookVariant::v1(a.k);
    if (alg == "book-mu") {
      const auto mu = Rational::parse(a.mu);
      need(mu > Rational(0) && mu < Rational(1), "--mu must lie in (0,1)");
      v = BookVariant::cutoff(a.k, mu);
    } else if (alg == "book-offdiag") {
      need(a.l >= 1 && a.l <= a.k, "--l with 1 <= l <= k required");
      v = BookVariant::offdiag(a.k, a.l);
    }
    BookOptions opt;
    opt.eps = a.eps;
    opt.guard = a.guard;
    const auto r = run_book(g, v, opt);
    o.header["k"] = v.k;
    o.header["l"] = v.l;
    o.header["mu"] = v.mu.to_string();
    o.header["eps"] = r.state.eps;
    o.header["guard"] = a.guard;
    o.header["swapped"] = r.state.swapped;
    for (const auto& s : r.records) o.records.push_back(book_step_json(s));
    if (r.clique) o.witness = *r.clique;
    else if (r.book) o.witness = *r.book;
    o.report = report_json(trace_report(r.records, report_params(r)));
    const auto check = check_book_run(g, r);
    o.report["contract_check"] = check.empty() ? "ok" : check;
    o.report["outcome"] = std::string(to_string(r.outcome));
    o.summary = std::string(to_string(r.outcome)) + " after " + std::to_string(r.records.size()) + " steps";
  } else if (alg == "symmetric") {
    need(a.k >= 1, "--k >= 1 required");
    SymmetricParams p;
    p.k = a.k;
    p.eta = Rational::parse(a.eta);
    p.kappa_cutoff = Rational::parse(a.kappa_cutoff);
    p.eps = a.eps;
    need(a.kappa_step > 0, "--kappa-step must be positive");
    p.search.step = a.kappa_step;
    const auto r = run_symmetric(g, p);
    o.header["k"] = a.k;
    o.header["eta"] = p.eta.to_string();
    o.header["kappa_cutoff"] = p.kappa_cutoff.to_string();
    o.header["eps"] = r.state.eps;
    o.header["kappa_step"] = a.kappa_step;
    o.header["t"] = r.state.t_target;
    for (const auto& s : r.steps) o.records.push_back(sym_step_json(s));
    if (r.book) o.witness = *r.book;
    o.report = report_json(symmetric_trace_report(r.steps, p, r.state.t_target));
    const auto check = check_symmetric_run(g, r);
    o.report["run_check"] = check.empty() ? "ok" : check;
    o.report["outcome"] = std::string(to_string(r.outcome));
    if (r.failure)
      o.report["refinement_failure"] = {{"best_vertex", r.failure->best_vertex},
                                        {"best_kappa", r.failure->best_kappa},
                                        {"best_ratio", r.failure->best_ratio},
                                        {"final_step", r.failure->final_step}};
    o.summary = std::string(to_string(r.outcome)) + " after " + std::to_string(r.steps.size()) + " steps";
  } else if (alg == "ramsey-induction") {
    need(a.t >= 1 && a.m >= 1, "--t >= 1 and --m >= 1 required");
    const auto r = ramsey_book_induction(g, a.t, a.m);
    o.header["t"] = a.t;
    o.header["m"] = a.m;
    o.witness = r.witness;
    o.report = {{"depth", r.depth}, {"valid", is_valid(g, r.witness)}};
    o.summary = std::string(to_string(r.witness.color)) + " book B_{" + std::to_string(a.t) + "," +
                std::to_string(a.m) + "} at depth " + std::to_string(r.depth);
  } else {
    throw UsageError("unknown algorithm '" + alg + "'");
  }
  return o;
}

int cmd_run(const RunArgs& a, std::ostream& out) {
  const auto g = a.source.load();
  if (!a.save_coloring_path.empty()) save_coloring(g, a.save_coloring_path, false);
  const auto o = run_algorithm(a, g);
  if (!a.trace.empty()) {
    std::ostringstream ss;
    write_jsonl(ss, o.header, o.records);
    write_file(a.trace, ss.str());
  }
  if (!a.witness.empty() && o.witness) write_file(a.witness, witness_json(*o.witness).dump(2) + "\n");
  if (!a.report.empty()) write_file(a.report, o.report.dump(2) + "\n");
  out << a.algorithm << ": " << o.summary << "\n";
  // A run whose own replay check fails is a falsified contract.
  for (const char* key : {"trace_check", "contract_check", "run_check"})
    if (o.report.contains(key) && o.report[key] != "ok") {
      out << key << ": " << o.report[key].get<std::string>() << "\n";
      return 1;
    }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey exploration algorithms, witnesses and certified bounds", "ramsey"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a coloring file");
  Source gen_src;
  gen_src.add(gen);
  std::string gen_out;
  bool gen_binary = false;
  gen->add_option("--out", gen_out, "Output path")->required();
  gen->add_flag("--binary", gen_binary, "Binary format");

  // run
  auto* run = app.add_subcommand("run", "Run an algorithm; emits trace, witness and report");
  RunArgs ra;
  run->add_option("algorithm", ra.algorithm,
                  "es | es-offdiag | book-v1 | book-mu | book-offdiag | symmetric | ramsey-induction")
      ->required()
      ->check(CLI::IsMember({"es", "es-offdiag", "book-v1", "book-mu", "book-offdiag", "symmetric",
                             "ramsey-induction"}));
  ra.source.add(run);
  run->add_option("--k", ra.k, "Clique size (red)");
  run->add_option("--l", ra.l, "Clique size (blue), off-diagonal");
  run->add_option("--t", ra.t, "Book spine size");
  run->add_option("--m", ra.m, "Book page count");
  run->add_option("--mu", ra.mu, "Blue cutoff for book-mu (rational or decimal)");
  run->add_option("--eps", ra.eps, "Override epsilon");
  run->add_option("--guard", ra.guard, "Prosperity guard band");
  run->add_option("--eta", ra.eta, "Symmetric: eta");
  run->add_option("--kappa-cutoff", ra.kappa_cutoff, "Symmetric: kappa cutoff");
  run->add_option("--kappa-step", ra.kappa_step, "Symmetric: kappa grid step");
  run->add_option("--trace", ra.trace, "Trace output (JSON lines)");
  run->add_option("--witness", ra.witness, "Witness output (JSON)");
  run->add_option("--report", ra.report, "Report output (JSON)");
  run->add_option("--save-coloring", ra.save_coloring_path, "Also write the coloring used");

  // certify
  auto* cert = app.add_subcommand("certify", "Certify numeric claims or a field maximum");
  std::string claim = "all", cert_field, cert_out, cert_dir;
  std::optional<double> tol;
  std::optional<std::size_t> budget;
  cert->add_option("claim", claim, "Claim name or 'all'");
  cert->add_option("--field", cert_field, "Certify the maximum of this field instead");
  cert->add_option("--tol", tol, "Tolerance (default 1e-4, env RAMSEY_TOL)");
  cert->add_option("--budget", budget, "Cell budget (env RAMSEY_CELL_BUDGET)");
  cert->add_option("--cert", cert_out, "Certificate output for --field");
  cert->add_option("--cert-dir", cert_dir, "Directory for claim certificates");

  // contour
  auto* cont = app.add_subcommand("contour", "Field values on a grid as CSV");
  std::string cont_field, cont_out;
  int resolution = 101;
  std::optional<double> threshold;
  cont->add_option("--field", cont_field, "Field name, e.g. min(F,G_mu(2/5))")->required();
  cont->add_option("--resolution", resolution, "Points per axis");
  cont->add_option("--threshold", threshold, "Emit 1{value > threshold}");
  cont->add_option("--out", cont_out, "Output path (default stdout)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exhaustive small Ramsey numbers");
  std::string orc_kind;
  int orc_a = 0, orc_b = 0;
  std::size_t orc_max = 20;
  orc->add_option("kind", orc_kind, "r | rb")->required()->check(CLI::IsMember({"r", "rb"}));
  orc->add_option("a", orc_a, "k (r) or t (rb)")->required();
  orc->add_option("b", orc_b, "l (r) or m (rb)")->required();
  orc->add_option("--max-n", orc_max, "Search limit");

  // check
  auto* chk = app.add_subcommand("check", "Revalidate a witness or a certificate");
  std::string chk_coloring, chk_witness, chk_cert;
  chk->add_option("--coloring", chk_coloring, "Coloring file");
  chk->add_option("--witness", chk_witness, "Witness file");
  chk->add_option("--certificate", chk_cert, "Certificate file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const auto g = gen_src.load();
      save_coloring(g, gen_out, gen_binary);
      out << "wrote " << g.size() << "-vertex coloring to " << gen_out << "\n";
      return 0;
    }
    if (run->parsed()) return cmd_run(ra, out);
    if (cert->parsed()) {
      CertifyOptions opt;
      opt.tol = tol ? *tol : env_double("RAMSEY_TOL", kDefaultTol);
      opt.cell_budget = budget ? *budget : env_size("RAMSEY_CELL_BUDGET", kDefaultCellBudget);
      need(opt.tol > 0, "--tol must be positive");
      if (!cert_field.empty()) {
        const auto b = certify_max(parse_field(cert_field), opt);
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s: max in [%.9f, %.9f] (%zu cells%s)\n", b.field.c_str(), b.lower,
                      b.upper, b.leaves.size(), b.converged ? "" : ", budget exceeded");
        out << buf;
        if (!cert_out.empty()) write_file(cert_out, certificate_json(b).dump() + "\n");
        return b.converged ? 0 : 1;
      }
      std::vector<std::string> names;
      if (claim == "all") names = claim_names();
      else names = {claim};
      bool all = true;
      for (const auto& name : names) {
        const auto known = claim_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw UsageError("unknown claim '" + name + "'");
        const auto r = check_claim(name, opt);
        all = all && r.holds;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
        out << (r.holds ? "PASS " : "FAIL ") << r.name << ": " << r.statement << " | " << r.detail << " ["
            << secs << " s]\n";
        if (!cert_dir.empty() && r.bound)
          write_file(cert_dir + "/" + r.name + ".json", certificate_json(*r.bound).dump() + "\n");
      }
      return all ? 0 : 1;
    }
    if (cont->parsed()) {
      const auto rows = contour(parse_field(cont_field), resolution, threshold);
      if (cont_out.empty()) {
        write_contour_csv(out, rows);
      } else {
        std::ostringstream ss;
        write_contour_csv(ss, rows);
        write_file(cont_out, ss.str());
      }
      return 0;
    }
    if (orc->parsed()) {
      const auto v = orc_kind == "r" ? ramsey_number(orc_a, orc_b, orc_max)
                                     : book_ramsey_number(orc_a, orc_b, orc_max);
      out << v << "\n";
      return 0;
    }
    if (chk->parsed()) {
      if (!chk_cert.empty()) {
        const auto problem = check_certificate(read_json_file(chk_cert));
        out << (problem.empty() ? "certificate valid" : "certificate invalid: " + problem) << "\n";
        return problem.empty() ? 0 : 1;
      }
      need(!chk_coloring.empty() && !chk_witness.empty(),
           "check needs --coloring and --witness, or --certificate");
      const auto g = load_coloring(chk_coloring);
      const auto w = witness_from_json(read_json_file(chk_witness), g.size());
      const auto problem = std::visit(
          [&](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CliqueWitness>) return clique_violation(g, x);
            else return book_violation(g, x);
          },
          w);
      out << (problem.empty() ? "witness valid" : "witness invalid: " + problem) << "\n";
      return problem.empty() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ramsey
