#include "jvoa_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "jvoa/errors.hpp"
#include "jvoa/suites.hpp"

namespace jvoa::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"jordan-check", "frame multiplication table and Jordan axioms"},
    {"griess", "x(1)y on V_2 against the Jordan product"},
    {"locality", "locality order of all generating pairs"},
    {"borcherds-check", "commutator formula on seeded random samples"},
    {"lemma1-check", "Lemma 1 identity, binomial determinants, mode inversion"},
    {"binom-det", "binomial determinant table"},
    {"central-charge", "central charge of omega and of the frame elements"},
    {"span-check", "rank of the mode-word span in each degree"},
    {"graded-dim", "graded dimensions of the induced module"},
    {"gram", "contravariant form: determinant, integer roots, ranks"},
    {"fermion-compare", "induced module at r = 1 against symplectic fermions"},
    {"verma", "Jantzen-type verdict for the parabolic Verma module"},
    {"all", "the full acceptance suite"},
};

/// Report under construction: checks plus a free-form result and an optional
/// CSV table.
struct Report {
  std::vector<Check> checks;
  json result = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

json config_json(const RunConfig& c) {
  auto maybe = [](int v) { return v < 0 ? json(nullptr) : json(v); };
  return json{{"family", c.family},         {"dim", c.dim},
              {"r", c.r},                   {"degree", maybe(c.degree)},
              {"max_degree", maybe(c.max_degree)}, {"N", maybe(c.N)},
              {"at", c.at},                 {"samples", maybe(c.samples)},
              {"seed", c.seed},             {"format", c.format},
              {"allow_dim_2", c.allow_dim_2}, {"tmin", c.tmin},
              {"tmax", c.tmax}};
}

json check_json(const Check& c) {
  return json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"witnesses", c.witnesses}};
}

json facts_json(const Facts& facts) {
  json out = json::object();
  for (const auto& [k, v] : facts) out[k] = v;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << "\r\n";
}

std::string pair_name(const SpaceSpec& space, std::pair<int, int> p) {
  return "L[" + space.label(p.first) + "," + space.label(p.second) + "]";
}

std::optional<Rational> config_r(const RunConfig& c) {
  if (c.r == "symbolic") return std::nullopt;
  return parse_rational(c.r);
}

std::vector<std::string> poly_coefficients(const RPoly& p) { return p.to_fraction_strings(); }

struct Session {
  SpaceSpec space;
  InducedModule module;
  VertexEngine engine;
  explicit Session(SpaceSpec s) : space(s), module(LoopAlgebra(s)), engine(module) {}
};

SpaceSpec space_of(const RunConfig& c) {
  return SpaceSpec::make(parse_family(c.family), c.dim, c.allow_dim_2);
}

int degree_or(const RunConfig& c, int fallback) {
  if (c.degree >= 0) return c.degree;
  if (c.max_degree >= 0) return c.max_degree;
  return fallback;
}

int max_degree_or(const RunConfig& c, int fallback) {
  if (c.max_degree >= 0) return c.max_degree;
  if (c.degree >= 0) return c.degree;
  return fallback;
}

int samples_or(const RunConfig& c, int fallback) { return c.samples >= 0 ? c.samples : fallback; }

Report jordan_check(const RunConfig& c) {
  const auto space = space_of(c);
  Sampler sampler(c.seed);
  const auto suite = jordan_frame_suite(space, samples_or(c, 100), sampler);
  Report r;
  r.checks = suite.checks;
  json frame = json::array();
  for (const auto& e : jordan_frame(space)) frame.push_back(e.to_string());
  r.result["frame"] = frame;
  r.result["table"] = suite.table;
  r.result["identity"] = jordan_identity(space).to_string();
  r.csv_header = {"i", "j", "product"};
  for (std::size_t i = 0; i < suite.table.size(); ++i)
    for (std::size_t j = 0; j < suite.table[i].size(); ++j)
      r.csv_rows.push_back({std::to_string(i + 1), std::to_string(j + 1), suite.table[i][j]});
  return r;
}

Report griess(const RunConfig& c) {
  const Session s(space_of(c));
  const auto report = griess_suite(s.engine);
  Report r;
  const std::pair<const char*, bool> parts[] = {{"printed_formula", report.formula_holds},
                                                {"jordan_isomorphism", report.jordan_isomorphism},
                                                {"symmetric", report.symmetric},
                                                {"jordan_identity", report.jordan_identity}};
  for (const auto& [name, ok] : parts) {
    Check check{name};
    check.absorb(ok, report.pairs, report.witnesses);
    r.checks.push_back(check);
  }
  const auto pairs = label_pairs(s.space);
  const Rational factor = griess_jordan_factor(s.space);
  json products = json::array();
  r.csv_header = {"x", "y", "x(1)y", "jordan"};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const auto x = s.engine.generating_state(pairs[i].first, pairs[i].second);
      const auto y = s.engine.generating_state(pairs[j].first, pairs[j].second);
      const auto p = griess_product(s.engine, x, y);
      const auto jordan = s.engine.to_jordan(factor * p);
      products.push_back({{"x", pair_name(s.space, pairs[i])},
                          {"y", pair_name(s.space, pairs[j])},
                          {"product", s.module.to_string(p)},
                          {"jordan", jordan.is_zero() ? "0" : jordan.to_string()}});
      r.csv_rows.push_back({pair_name(s.space, pairs[i]), pair_name(s.space, pairs[j]), s.module.to_string(p),
                            jordan.is_zero() ? "0" : jordan.to_string()});
    }
  r.result["pairs"] = report.pairs;
  r.result["jordan_factor"] = to_fraction_string(factor);
  r.result["products"] = products;
  return r;
}

Report locality(const RunConfig& c) {
  const Session s(space_of(c));
  const auto suite = locality_suite(s.engine, 6);
  Report r;
  r.checks.push_back(suite.check);
  Check attained{"order_4_attained"};
  attained.record(suite.max_order == 4, [&] { return "max order " + std::to_string(suite.max_order); });
  r.checks.push_back(attained);
  json rows = json::array();
  r.csv_header = {"x", "y", "order"};
  for (const auto& row : suite.rows) {
    rows.push_back({{"x", pair_name(s.space, row.x)}, {"y", pair_name(s.space, row.y)}, {"order", row.order}});
    r.csv_rows.push_back({pair_name(s.space, row.x), pair_name(s.space, row.y), std::to_string(row.order)});
  }
  r.result["pairs"] = suite.rows.size();
  r.result["max_order"] = suite.max_order;
  r.result["orders"] = rows;
  return r;
}

Report borcherds(const RunConfig& c) {
  const Session s(space_of(c));
  Sampler sampler(c.seed);
  Report r;
  r.checks.push_back(borcherds_suite(s.engine, samples_or(c, 200), sampler, 2, max_degree_or(c, 3)));
  r.result["samples"] = r.checks.back().cases;
  return r;
}

Report lemma1(const RunConfig& c) {
  const Session s(space_of(c));
  const int D = max_degree_or(c, 2);
  Report r;
  r.checks = lemma1_suite(s.engine, 4, 3, D);
  r.checks.push_back(binomial_suite(8, c.tmin, c.tmax));
  Sampler sampler(c.seed);
  r.checks.push_back(roundtrip_suite(s.engine, samples_or(c, 50), sampler));

  Check first{"vircom_first_slot_frame"}, second{"vircom_second_slot_frame"};
  std::size_t literal = 0;
  for (const auto& [a, b] : label_pairs(s.space)) {
    if (s.engine.is_frame_pair(a, b)) continue;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int l = -2; l <= 3; ++l)
          for (int d = 0; d <= std::min(D, 2); ++d)
            for (const auto& mono : s.module.basis(d)) {
              const auto v = ModuleVector::basis_vector(mono);
              const auto res = vircom_check(s.engine, a, b, i, j, l, v);
              auto where = [&] {
                return pair_name(s.space, {a, b}) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                       " l=" + std::to_string(l) + " on " + s.module.to_string(mono);
              };
              first.record(res.first_frame, where);
              second.record(res.second_frame, where);
              literal += res.first_literal;
            }
  }
  r.checks.push_back(first);
  r.checks.push_back(second);
  r.result["max_degree"] = D;
  r.result["vircom_cases"] = first.cases;
  r.result["vircom_literal_commutator_holds"] = literal;
  return r;
}

Report binom_det(const RunConfig& c) {
  const int N = c.N >= 0 ? c.N : 8;
  if (c.tmin > c.tmax) throw ConfigError("--tmin exceeds --tmax");
  Report r;
  r.checks.push_back(binomial_suite(N, c.tmin, c.tmax));
  json rows = json::array();
  r.csv_header = {"N", "t", "det", "expected"};
  for (int n = 0; n <= N; ++n)
    for (int t = c.tmin; t <= c.tmax; ++t) {
      const Rational det = binomial_matrix_det(t, n);
      const int expected = (n * (n + 1) / 2) % 2 == 0 ? 1 : -1;
      rows.push_back({{"N", n}, {"t", t}, {"det", to_fraction_string(det)}, {"expected", expected}});
      r.csv_rows.push_back({std::to_string(n), std::to_string(t), to_string(det), std::to_string(expected)});
    }
  r.result["rows"] = rows;
  return r;
}

Report central(const RunConfig& c) {
  const Session s(space_of(c));
  const auto cc = central_charge(s.engine);
  Report r;
  Check omega{"omega"}, frames{"frames"};
  const RPoly expected = expected_central_charge(s.space);
  omega.record(cc.omega_c == expected, [&] { return "c = " + cc.omega_c.to_string(); });
  for (const auto& f : cc.frame_c)
    frames.record(f == expected_frame_charge(s.space), [&] { return "frame c = " + f.to_string(); });
  r.checks = {omega, frames};
  r.result["c"] = cc.omega_c.to_string();
  r.result["c_coefficients"] = poly_coefficients(cc.omega_c);
  r.result["expected"] = expected.to_string();
  json fc = json::array();
  for (const auto& f : cc.frame_c) fc.push_back(f.to_string());
  r.result["frame_c"] = fc;
  if (const auto r0 = config_r(c)) r.result["c_at_r"] = to_fraction_string(cc.omega_c.evaluate_at(*r0));
  return r;
}

Report span(const RunConfig& c) {
  const Session s(space_of(c));
  const Rational r0 = config_r(c).value_or(make_rational(1, 2));
  const auto report = span_check(s.engine, max_degree_or(c, 4), r0);
  Report r;
  Check check{"rank_equals_graded_dim"};
  json rows = json::array();
  r.csv_header = {"degree", "rank", "graded_dim"};
  for (const auto& d : report.degrees) {
    check.record(d.rank == d.graded_dim, [&] {
      return "degree " + std::to_string(d.degree) + ": " + std::to_string(d.rank) + " of " +
             std::to_string(d.graded_dim);
    });
    rows.push_back({{"degree", d.degree}, {"rank", d.rank}, {"graded_dim", d.graded_dim}});
    r.csv_rows.push_back({std::to_string(d.degree), std::to_string(d.rank), std::to_string(d.graded_dim)});
  }
  r.checks.push_back(check);
  r.result["r0"] = to_fraction_string(r0);
  r.result["degrees"] = rows;
  return r;
}

Report graded_dim(const RunConfig& c) {
  const auto space = space_of(c);
  const InducedModule module{LoopAlgebra(space)};
  Report r;
  Check check{"pbw_basis_matches_generating_function"};
  json rows = json::array();
  r.csv_header = {"degree", "count"};
  for (int d = 0; d <= max_degree_or(c, 4); ++d) {
    const std::size_t count = module.graded_dimension(d);
    const std::size_t closed = graded_dimension(space, d);
    check.record(count == closed, [&] {
      return "degree " + std::to_string(d) + ": " + std::to_string(count) + " vs " + std::to_string(closed);
    });
    rows.push_back({{"degree", d}, {"count", count}});
    r.csv_rows.push_back({std::to_string(d), std::to_string(count)});
  }
  r.checks.push_back(check);
  r.result["degrees"] = rows;
  return r;
}

Report gram(const RunConfig& c) {
  const auto space = space_of(c);
  const InducedModule module{LoopAlgebra(space)};
  const int d = degree_or(c, 2);
  std::vector<Rational> points;
  for (const auto& p : c.at) points.push_back(parse_rational(p));
  if (const auto r0 = config_r(c)) points.push_back(*r0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const auto g = gram_matrix(module, d);
  Report r;
  Check sym{"symmetric"}, nonzero{"determinant_nonzero"};
  sym.record(g.is_symmetric(), [] { return std::string("Gram matrix is not symmetric"); });
  r.result["degree"] = d;
  r.result["dimension"] = g.basis.size();
  try {
    const auto a = gram_analysis(g, points);
    nonzero.record(true, {});
    r.result["det"] = a.det.to_string();
    r.result["det_coefficients"] = poly_coefficients(a.det);
    json roots = json::array();
    for (const auto& x : a.integer_roots) roots.push_back(x.get_str());
    r.result["integer_roots"] = roots;
    json ranks = json::array();
    for (const auto& [p, rk] : a.rank_at)
      ranks.push_back({{"r", to_fraction_string(p)}, {"rank", rk}, {"radical", a.dimension - rk}});
    r.result["ranks"] = ranks;
  } catch (const ZeroPolynomial&) {
    nonzero.record(false, [&] { return "determinant vanishes identically at degree " + std::to_string(d); });
  }
  r.checks = {sym, nonzero};

  r.csv_header = {"basis"};
  for (const auto& m : g.basis) r.csv_header.push_back(module.to_string(m));
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    std::vector<std::string> row{module.to_string(g.basis[i])};
    for (const auto& e : g.entries[i]) row.push_back(e.to_string());
    r.csv_rows.push_back(std::move(row));
  }
  return r;
}

Report fermion_compare(const RunConfig& c) {
  const auto space = space_of(c);
  const FermionFock fock(space);
  const InducedModule module{LoopAlgebra(space)};
  Report r;
  Check bound{"image_within_even_part"};
  json rows = json::array();
  r.csv_header = {"degree", "pbw_dim", "even_dim", "image_dim", "kernel_dim"};
  for (int d = 0; d <= max_degree_or(c, 4); ++d) {
    const auto kr = kernel_rank(module, fock, d);
    const std::size_t even = fock.even_graded_dimension(d);
    bound.record(kr.image_dim <= even, [&] { return "degree " + std::to_string(d); });
    rows.push_back({{"degree", d},
                    {"pbw_dim", kr.pbw_dim},
                    {"even_dim", even},
                    {"image_dim", kr.image_dim},
                    {"kernel_dim", kr.kernel_dim}});
    r.csv_rows.push_back({std::to_string(d), std::to_string(kr.pbw_dim), std::to_string(even),
                          std::to_string(kr.image_dim), std::to_string(kr.kernel_dim)});
  }
  const auto oracle = bracket_oracle_check(module.algebra(), fock, 3);
  Check bracket{"bracket_oracle"};
  bracket.absorb(oracle.passed, oracle.pairs, oracle.witnesses);
  r.checks = {bound, bracket};
  r.result["degrees"] = rows;
  r.result["oracle_pairs"] = oracle.pairs;
  return r;
}

Report verma(const RunConfig& c) {
  const auto r0 = config_r(c);
  if (!r0) throw ConfigError("verma needs a rational --r");
  const int N = c.N >= 0 ? c.N : 3;
  const auto report = jantzen_verdict(N, *r0);
  Report r;
  r.result["N"] = N;
  r.result["r"] = to_fraction_string(*r0);
  r.result["verdict"] = std::string(verdict_name(report.verdict));
  if (report.witness)
    r.result["witness"] = "eps" + std::to_string(report.witness->first) + "+eps" + std::to_string(report.witness->second);
  else
    r.result["witness"] = nullptr;
  json witnesses = json::array();
  for (const auto& [k, l] : report.positive_integer)
    witnesses.push_back("eps" + std::to_string(k) + "+eps" + std::to_string(l));
  r.result["witnesses"] = witnesses;
  r.result["regular_simple_roots"] = report.regular_simple;
  r.result["regular_all_roots"] = report.regular_all;
  json pairings = json::array();
  r.csv_header = {"k", "l", "pairing"};
  for (const auto& row : report.pairings) {
    pairings.push_back({{"k", row.k}, {"l", row.l}, {"value", to_fraction_string(row.value)}});
    r.csv_rows.push_back({std::to_string(row.k), std::to_string(row.l), to_string(row.value)});
  }
  r.result["pairings"] = pairings;
  r.result["note"] = report.note;
  return r;
}

Report all(const RunConfig& c) {
  const auto space = space_of(c);
  if (space.family() != Family::C || space.dim() != 4)
    throw ConfigError("the acceptance suite runs on --family C --dim 4");
  const SuiteConfig config{.seed = c.seed, .max_degree = max_degree_or(c, 4)};
  Report r;
  json criteria = json::array();
  r.csv_header = {"criterion", "title", "passed"};
  for (const auto runner : acceptance_criteria()) {
    const Criterion crit = runner(config);
    json checks = json::array();
    for (const auto& check : crit.checks) {
      Check named = check;
      named.name = std::to_string(crit.id) + "." + check.name;
      r.checks.push_back(named);
      checks.push_back(check_json(check));
    }
    criteria.push_back(
        {{"id", crit.id}, {"title", crit.title}, {"passed", crit.passed()}, {"checks", checks}, {"facts", facts_json(crit.facts)}});
    r.csv_rows.push_back({std::to_string(crit.id), crit.title, crit.passed() ? "true" : "false"});
  }
  r.result["criteria"] = criteria;
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& handlers() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table{
      {"jordan-check", jordan_check}, {"griess", griess},
      {"locality", locality},         {"borcherds-check", borcherds},
      {"lemma1-check", lemma1},       {"binom-det", binom_det},
      {"central-charge", central},    {"span-check", span},
      {"graded-dim", graded_dim},     {"gram", gram},
      {"fermion-compare", fermion_compare}, {"verma", verma},
      {"all", all}};
  return table;
}

void emit(const RunConfig& c, const Report& report, std::ostream& out) {
  if (c.format == "csv") {
    if (report.csv_header.empty()) {
      write_csv_row(out, {"check", "passed", "cases"});
      for (const auto& ch : report.checks)
        write_csv_row(out, {ch.name, ch.passed ? "true" : "false", std::to_string(ch.cases)});
      return;
    }
    write_csv_row(out, report.csv_header);
    for (const auto& row : report.csv_rows) write_csv_row(out, row);
    return;
  }
  json checks = json::array();
  for (const auto& ch : report.checks) checks.push_back(check_json(ch));
  const json doc{{"tool", "jvoa"},
                 {"version", JVOA_VERSION},
                 {"command", c.command},
                 {"config", config_json(c)},
                 {"passed", report.passed()},
                 {"checks", checks},
                 {"result", report.result}};
  out << doc.dump(2) << "\n";
}

void add_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "B or C")->check(CLI::IsMember({"B", "C"}));
  sub->add_option("--dim", c.dim, "dimension of W");
  sub->add_option("--r", c.r, "rational value of K, or 'symbolic'");
  sub->add_option("--degree", c.degree, "degree");
  sub->add_option("--max-degree", c.max_degree, "largest degree");
  sub->add_option("--N", c.N, "rank or matrix size");
  sub->add_option("--at", c.at, "specialization point (repeatable)");
  sub->add_option("--samples", c.samples, "number of random samples");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--allow-dim-2", c.allow_dim_2, "accept dim W = 2");
  sub->add_option("--tmin", c.tmin, "smallest t");
  sub->add_option("--tmax", c.tmax, "largest t");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact computations for the vertex algebras attached to symplectic and orthogonal spaces", "jvoa"};
  app.set_version_flag("--version", std::string(JVOA_VERSION));
  app.require_subcommand(1);
  for (const auto& [name, help] : kCommands) add_options(app.add_subcommand(name, help), config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInvalid;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    const Report report = handlers().at(config.command)(config);
    emit(config, report, out);
    return report.passed() ? kPass : kViolation;
  } catch (const InvalidSpace& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const DimensionTooSmall& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const IndexOutOfRange& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const UnsupportedFamily& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const FamilyMismatch& e) {
    err << "invalid configuration: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
  }
  return kInvalid;
}

}  // namespace jvoa::cli
