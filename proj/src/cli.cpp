#include "hkd/cli.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hkd/ade_catalog.hpp"
#include "hkd/errors.hpp"
#include "hkd/json_io.hpp"

namespace hkd::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct Options {
  std::string in;
  std::string out;
  std::string spec;
  std::string ring;
  std::string reference;
  std::string a;
  std::string b;
  std::string e0;
  std::string family;
  std::string levels = "1,2,3";
  std::string twists;
  int level = 1;
  int n = 0;
  long p = 0;
  long l0 = 1;
  long rank = 1;
  long max_degree = 0;
  int k = 100;
  int threads = 0;
};

std::size_t point_cap() {
  const char* env = std::getenv("HKDL_MAX_POINTS");
  if (env == nullptr || *env == '\0') return kDefaultPointCap;
  std::size_t v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw ParseError("HKDL_MAX_POINTS must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError(std::string("bad ") + what + " list '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line + "\n";
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

std::string density_betti(const Options& o) {
  const Json in = io::read_file(o.in);
  const BettiTable t = io::betti_from_json(in);
  Rational e0 = 1;
  if (!o.e0.empty()) e0 = Rational::parse(o.e0);
  if (!o.ring.empty()) {
    const auto spec = io::ring_from_json(io::read_file(o.ring), dir_of(o.ring));
    if (spec.dimension() != t.length()) throw ValidationError("ring dimension differs from the resolution length");
    e0 = hilbert_density_coefficient(spec);
  }
  DensityPair pair;
  pair.d = t.length();
  pair.f = closed_form_density(t, e0, pair.d);
  pair.F = PiecewisePoly::unbounded(Polynomial::monomial(e0, static_cast<unsigned>(pair.d - 1)));
  Json j = io::to_json(pair);
  j["e0"] = e0.str();
  j["ehk"] = ehk_closed_form(t, e0, pair.d).str();
  return io::dump(j);
}

LatticeProblem load_problem(const Options& o) {
  auto spec = io::lattice_spec_from_json(io::read_file(o.spec));
  if (o.p != 0) spec.semigroup.p = o.p;
  return LatticeProblem(spec.semigroup, spec.ideal, point_cap());
}

void require_level(const LatticeProblem& problem, int level, long max_degree) {
  if (level < 1) throw DomainError("levels start at 1");
  const int feasible = max_feasible_level(problem, level);
  const bool degree_ok = max_degree <= 0 || problem.degree_for_level(level) <= max_degree;
  if (feasible < level || !degree_ok) {
    int best = feasible;
    while (best > 0 && max_degree > 0 && problem.degree_for_level(best) > max_degree) --best;
    throw ResourceError("level " + std::to_string(level) + " exceeds the enumeration cap; max feasible level is " +
                        std::to_string(best));
  }
}

std::string density_empirical(const Options& o) {
  const auto problem = load_problem(o);
  require_level(problem, o.level, o.max_degree);
  const auto approx = build_approximant(problem, o.level);
  Json j;
  j["level"] = approx.level;
  j["q"] = approx.q;
  j["p"] = problem.spec().p;
  j["d"] = problem.dimension();
  j["n0"] = problem.n0();
  j["m_tilde"] = problem.bound().m_tilde.str();
  j["integral"] = pw_integrate(approx.f_n).str();
  j["f_n"] = io::to_json(approx.f_n);
  j["g_n"] = io::to_json(approx.g_n);
  return io::dump(j);
}

std::string compare(const Options& o) {
  const auto problem = load_problem(o);
  std::vector<int> levels;
  for (long l : parse_list(o.levels, "level")) levels.push_back(static_cast<int>(l));
  if (levels.empty()) throw ParseError("no levels given");
  std::optional<PiecewisePoly> reference;
  if (!o.reference.empty()) reference = io::density_from_json(io::read_file(o.reference));
  int top = 0;
  for (int l : levels) top = std::max(top, l);
  require_level(problem, reference ? top : top + 1, o.max_degree);

  const auto rows = convergence_report(problem, levels, reference ? &*reference : nullptr);
  std::string csv = csv_row({"level", "q", "sup_distance", "sup_distance_exact", "certified_exact", "integral",
                             "integral_exact"});
  for (const auto& r : rows) {
    csv += csv_row({std::to_string(r.level), std::to_string(r.q), r.distance.value.decimal(), r.distance.value.str(),
                    r.distance.exact ? "true" : "false", r.integral.decimal(), r.integral.str()});
  }
  return csv;
}

std::string segre_cmd(const Options& o) {
  const auto a = io::pair_from_json(io::read_file(o.a));
  const auto b = io::pair_from_json(io::read_file(o.b));
  validate_pair(a);
  validate_pair(b);
  const auto s = segre(a, b);
  Json j = io::to_json(s);
  j["ehk"] = pw_integrate(s.f).str();
  j["expansion"] = segre_ehk_expansion(a, b).str();
  return io::dump(j);
}

std::string rescale_cmd(const Options& o) {
  const auto f = io::density_from_json(io::read_file(o.in));
  return io::dump(io::to_json(rescale_density(f, o.l0, o.rank)));
}

long default_prime(const AdeEntry& entry) {
  for (long p = 5;; ++p) {
    if (!is_prime(p)) continue;
    try {
      check_characteristic(entry, p);
      return p;
    } catch (const DomainError&) {
    }
  }
}

std::string catalog_cmd(const Options& o) {
  const AdeFamily family = parse_family(o.family);
  std::optional<int> n;
  if (o.n != 0) n = o.n;
  const AdeEntry entry = ade_entry(family, n);
  const long p = o.p != 0 ? o.p : default_prime(entry);
  check_characteristic(entry, p);
  validate_betti(entry.betti);
  const auto result = catalog_density(entry);

  std::string minors = "absent";
  std::string minor_detail;
  if (entry.hb_matrix) {
    const auto check = catalog_minor_check(entry);
    switch (check.match) {
      case MinorMatch::proportional: minors = "proportional"; break;
      case MinorMatch::same_ideal: minors = "same_ideal"; break;
      case MinorMatch::mismatch: minors = "mismatch"; break;
    }
    minor_detail = check.detail;
  }
  const bool agree = result.verdict.agrees() && minors != "mismatch";

  Json j;
  j["family"] = to_string(family);
  j["n"] = n ? Json(*n) : Json(nullptr);
  j["p"] = p;
  j["d"] = result.pair.d;
  j["F"] = io::to_json(result.pair.F);
  j["f"] = io::to_json(result.pair.f);
  j["ehk"] = result.verdict.ehk.str();
  j["verdict"] = agree ? "agree" : "discrepancy";
  Json checks = io::to_json(result.verdict);
  checks["minors"] = minors;
  if (!minor_detail.empty()) checks["minor_detail"] = minor_detail;
  checks["printed_table"] = entry.printed_table ? io::to_json(*entry.printed_table) : Json(nullptr);
  j["checks"] = std::move(checks);
  j["betti"] = io::to_json(entry.betti);
  return io::dump(j);
}

std::string hn2_cmd(const Options& o) {
  const Json in = io::read_file(o.in);
  const HNData data = io::hn_from_json(in);
  std::optional<std::vector<long>> twists = io::twists_from_json(in);
  if (!o.twists.empty()) twists = parse_list(o.twists, "twist");
  if (!twists) return io::dump(io::to_json(hn_density(data)));
  return io::dump(io::to_json(dim2_pair_density(data, *twists, data.d)));
}

std::string integrate_cmd(const Options& o) {
  const auto f = io::density_from_json(io::read_file(o.in));
  const Rational v = pw_integrate(f);
  return io::dump(Json{{"integral", v.str()}, {"decimal", v.decimal()}});
}

std::string sample_cmd(const Options& o) {
  if (o.k < 2) throw DomainError("sample needs k >= 2");
  const auto f = io::density_from_json(io::read_file(o.in));
  Rational end = f.support_end();
  if (f.tail() && end.is_zero()) end = 1;
  const Rational span = end * Rational(11, 10);
  std::string csv = csv_row({"x", "x_exact", "value", "value_exact"});
  for (int i = 0; i <= o.k; ++i) {
    const Rational x = span * Rational(i, o.k);
    const Rational v = pw_eval(f, x);
    csv += csv_row({x.decimal(), x.str(), v.decimal(), v.str()});
  }
  return csv;
}

void report(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Kunz density functions with exact arithmetic", "hkdl"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "OpenMP threads for colength counting (0 = runtime default)");

  auto* db = app.add_subcommand("density-betti", "closed-form density from a graded Betti table");
  db->add_option("--in", o.in, "Betti table JSON")->required();
  db->add_option("--ring", o.ring, "ring fragment JSON supplying the Hilbert density coefficient");
  db->add_option("--e0", o.e0, "Hilbert density coefficient (default 1)");
  db->add_option("--out", o.out);

  auto* de = app.add_subcommand("density-empirical", "lattice approximants f_n, g_n at one level");
  de->add_option("--spec", o.spec, "semigroup + ideal JSON")->required();
  de->add_option("--level", o.level)->check(CLI::PositiveNumber);
  de->add_option("--p", o.p, "override the characteristic");
  de->add_option("--max-degree", o.max_degree, "refuse levels needing higher degrees");
  de->add_option("--out", o.out);

  auto* cmp = app.add_subcommand("compare", "convergence table of lattice approximants (CSV)");
  cmp->add_option("--spec", o.spec)->required();
  cmp->add_option("--levels", o.levels, "comma-separated levels");
  cmp->add_option("--reference", o.reference, "density JSON to measure against (default: next level)");
  cmp->add_option("--p", o.p);
  cmp->add_option("--max-degree", o.max_degree);
  cmp->add_option("--out", o.out);

  auto* sg = app.add_subcommand("segre", "density of a Segre product");
  sg->add_option("--a", o.a, "density pair JSON")->required();
  sg->add_option("--b", o.b, "density pair JSON")->required();
  sg->add_option("--out", o.out);

  auto* rs = app.add_subcommand("rescale", "x -> (l0/rank) f(l0 x)");
  rs->add_option("--in", o.in)->required();
  rs->add_option("--l0", o.l0)->check(CLI::PositiveNumber);
  rs->add_option("--rank", o.rank)->check(CLI::PositiveNumber);
  rs->add_option("--out", o.out);

  auto* cat = app.add_subcommand("catalog", "ADE invariant rings: density and verdict");
  cat->add_option("--family", o.family, "A, D, E6, E7 or E8")->required();
  cat->add_option("--n", o.n, "parameter for A and D");
  cat->add_option("--p", o.p, "characteristic (default: least admissible prime >= 5)");
  cat->add_option("--out", o.out);

  auto* hn = app.add_subcommand("hn2", "dimension-2 density from strong HN data");
  hn->add_option("--in", o.in)->required();
  hn->add_option("--twists", o.twists, "generator degrees d_i; gives f_V - f_{sum O(1-d_i)}");
  hn->add_option("--out", o.out);

  auto* ig = app.add_subcommand("integrate", "exact integral of a density");
  ig->add_option("--in", o.in)->required();
  ig->add_option("--out", o.out);

  auto* sm = app.add_subcommand("sample", "k+1 evenly spaced samples on [0, 1.1 * support] (CSV)");
  sm->add_option("--in", o.in)->required();
  sm->add_option("--k", o.k, "number of intervals");
  sm->add_option("--out", o.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report(err, "parse", e.what());
    return 1;
  }

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    std::string text;
    if (name == "density-betti") text = density_betti(o);
    else if (name == "density-empirical") text = density_empirical(o);
    else if (name == "compare") text = compare(o);
    else if (name == "segre") text = segre_cmd(o);
    else if (name == "rescale") text = rescale_cmd(o);
    else if (name == "catalog") text = catalog_cmd(o);
    else if (name == "hn2") text = hn2_cmd(o);
    else if (name == "integrate") text = integrate_cmd(o);
    else text = sample_cmd(o);
    emit(text, o, out);
    return 0;
  } catch (const ParseError& e) {
    report(err, "parse", e.what());
    return 1;
  } catch (const DomainError& e) {
    report(err, "domain", e.what());
    return 2;
  } catch (const ValidationError& e) {
    report(err, "validation", e.what());
    return 2;
  } catch (const ResourceError& e) {
    report(err, "resource", e.what());
    return 3;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return 4;
  }
}

}  // namespace hkd::cli
