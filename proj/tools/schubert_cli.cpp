#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "schubert/census.hpp"
#include "schubert/certify.hpp"
#include "schubert/checks.hpp"
#include "schubert/formulations.hpp"
#include "schubert/io.hpp"
#include "schubert/problem_spec.hpp"
#include "schubert/soft_certify.hpp"
#include "schubert/solve.hpp"

using namespace schubert;

namespace {

enum Exit { kOk = 0, kCheckFailure = 1, kUsage = 2, kGenericity = 3 };

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string format = "text";
};

int default_jobs() {
  if (const char* env = std::getenv("SCHUBERT_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string condition;
  std::string type;
  std::string flag = "random";
  std::string output;
};

int cmd_sample(const Globals& g, const SampleArgs& a) {
  std::optional<DescentType> type;
  auto c = parse_condition(a.condition);
  if (!a.type.empty()) {
    type = DescentType(c.n(), parse_int_list(a.type));
    c = parse_condition(a.condition, type);
  }
  FlagMatrix flag = a.flag == "standard"   ? FlagMatrix::standard(static_cast<std::size_t>(c.n()))
                    : a.flag == "opposite" ? FlagMatrix::opposite(static_cast<std::size_t>(c.n()))
                    : a.flag == "random"   ? random_flag(c.n(), g.seed)
                                           : flag_from_json(read_json_file(a.flag));
  const auto e = sample_cell_point(c, flag, g.seed);
  const auto pos = position(e, flag, c.type());
  if (g.format == "text") {
    std::ostringstream os;
    os << "condition " << c.to_string() << " on " << c.type().to_string() << "\n";
    os << "position " << pos.to_string() << "\n";
    for (std::size_t i = 0; i < e.rows(); ++i) {
      for (std::size_t j = 0; j < e.cols(); ++j) os << (j ? " " : "") << to_string(e(i, j));
      os << "\n";
    }
    emit(os.str(), a.output);
  } else if (g.format == "csv") {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.rows(); ++i) {
      for (std::size_t j = 0; j < e.cols(); ++j) os << (j ? "," : "") << to_string(e(i, j));
      os << "\n";
    }
    emit(os.str(), a.output);
  } else {
    emit(dump(Json{{"condition", c.to_string()},
                   {"type", c.type().to_string()},
                   {"position", pos.to_string()},
                   {"flag", flag_to_json(flag)},
                   {"point", matrix_to_json(e)}}),
         a.output);
  }
  return pos == c ? kOk : kCheckFailure;
}

// ---- formulate ------------------------------------------------------------

struct FormulateArgs {
  std::string spec;
  std::string condition;
  std::string system_out;
  std::string report_out;
};

int formulate_condition(const Globals& g, const FormulateArgs& a) {
  const auto c = parse_condition(a.condition);
  const auto t = c.type();
  const auto a_set = alpha_set(c);
  const auto b_set = beta_set(c);
  const auto pd = primal_dual_counts(c, false);
  const auto rpd = primal_dual_counts(c, true);
  Json rows = Json::array();
  auto row = [&](const std::string& kind, std::size_t vars, const std::string& eqs) {
    rows.push_back(Json{{"formulation", kind}, {"new_variables", vars}, {"equations", eqs}});
  };
  if (t.is_grassmannian()) {
    row("determinantal", 0, std::to_string(grassmannian_determinantal_count(c)) + " independent minor combinations");
  } else {
    row("determinantal", 0, std::to_string(essential_pairs(c).size()) + " essential rank conditions");
  }
  row("primal-dual", pd.new_variables,
      pd.bilinear_equations ? std::to_string(*pd.bilinear_equations) + " bilinear" : std::string("equation count off Grassmannians not modeled"));
  row("reduced-primal-dual", rpd.new_variables, "");
  row("lifted", a_set.size(), std::to_string(lifted_equation_count(c, a_set)) + " bilinear");
  row("reduced-lifted", b_set.size(), std::to_string(lifted_equation_count(c, b_set)) + " bilinear");
  std::ostringstream os;
  if (g.format == "json-like") {
    os << dump(Json{{"condition", c.to_string()},
                    {"type", t.to_string()},
                    {"length", length(c)},
                    {"codim", codim(c)},
                    {"formulations", rows}});
  } else if (g.format == "csv") {
    os << "formulation,new_variables,equations\n";
    for (const auto& r : rows)
      os << r["formulation"].get<std::string>() << "," << r["new_variables"] << ",\"" << r["equations"].get<std::string>()
         << "\"\n";
  } else {
    os << c.to_string() << " on " << t.to_string() << ": length " << length(c) << ", codim " << codim(c) << "\n";
    for (const auto& r : rows)
      os << "  " << r["formulation"].get<std::string>() << ": " << r["new_variables"] << " new variables"
         << (r["equations"].get<std::string>().empty() ? "" : ", " + r["equations"].get<std::string>()) << "\n";
  }
  emit(os.str(), a.report_out);
  return kOk;
}

int cmd_formulate(const Globals& g, const FormulateArgs& a) {
  if (!a.condition.empty()) return formulate_condition(g, a);
  if (a.spec.empty()) throw InputError("formulate needs a problem spec file or --condition");
  const auto spec = read_problem_spec(a.spec);
  const auto problem = build_problem(spec, g.seed - 1);
  const auto strategy = resolve_strategy(spec, problem);
  const auto assembled = assemble_problem(problem, strategy);
  if (!a.system_out.empty()) write_text_file(a.system_out, dump(system_to_json(assembled.system)));

  std::ostringstream os;
  const auto& sys = assembled.system;
  if (g.format == "json-like") {
    Json conds = Json::array();
    for (std::size_t i = 0; i < problem.conditions.size(); ++i)
      conds.push_back(Json{{"condition", problem.conditions[i].to_string()},
                           {"strategy", to_string(assembled.contributions[i].strategy)},
                           {"new_variables", assembled.contributions[i].new_variables},
                           {"equations", assembled.contributions[i].equations}});
    std::vector<int> degrees;
    for (const auto& eq : sys.equations) degrees.push_back(eq.total_degree());
    os << dump(Json{{"type", problem.conditions.front().type().to_string()},
                    {"variables", sys.variable_count()},
                    {"equations", sys.equation_count()},
                    {"square", sys.is_square()},
                    {"degrees", degrees},
                    {"conditions", conds}});
  } else if (g.format == "csv") {
    os << "index,condition,strategy,new_variables,equations\n";
    for (std::size_t i = 0; i < problem.conditions.size(); ++i)
      os << i + 1 << "," << problem.conditions[i].to_string() << "," << to_string(assembled.contributions[i].strategy)
         << "," << assembled.contributions[i].new_variables << "," << assembled.contributions[i].equations << "\n";
    os << "total,,," << sys.variable_count() << "," << sys.equation_count() << "\n";
  } else {
    os << "Schubert problem on " << problem.conditions.front().type().to_string() << " with "
       << problem.conditions.size() << " conditions\n";
    for (std::size_t i = 0; i < problem.conditions.size(); ++i)
      os << "  w" << i + 1 << " = " << problem.conditions[i].to_string() << "  "
         << to_string(assembled.contributions[i].strategy) << ": +" << assembled.contributions[i].new_variables
         << " variables, +" << assembled.contributions[i].equations << " equations\n";
    os << "total: " << sys.variable_count() << " variables, " << sys.equation_count() << " equations"
       << (sys.is_square() ? " (square)" : "") << "\n";
  }
  emit(os.str(), a.report_out);
  return kOk;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
  int n = 9;
  std::string mode = "all";
  bool reduced_pd = true;
  std::string csv_out;
};

int cmd_census(const Globals& g, const CensusArgs& a) {
  const auto r = run_census(a.n, parse_census_mode(a.mode), a.reduced_pd, g.jobs);
  if (g.format == "csv") {
    std::cout << census_csv(r);
  } else if (g.format == "json-like") {
    Json rows = Json::array();
    for (const auto& m : r.manifolds)
      rows.push_back(Json{{"manifold", m.type.to_string()},
                          {"relevant", m.relevant},
                          {"pd_wins", m.pd_wins},
                          {"lifted_wins", m.lifted_wins},
                          {"ties", m.ties}});
    std::cout << dump(Json{{"n", r.n},
                           {"mode", to_string(r.mode)},
                           {"reduced_pd", r.reduced_pd},
                           {"total_varieties", r.total_varieties},
                           {"wins_primal_dual", r.wins_primal_dual},
                           {"wins_lifted", r.wins_lifted},
                           {"ties", r.ties},
                           {"manifolds", rows}});
  } else {
    std::cout << census_text(r);
  }
  if (!a.csv_out.empty()) write_text_file(a.csv_out, census_csv(r));
  return kOk;
}

// ---- solve / certify ------------------------------------------------------

PolySystem<Rational> load_system(const std::string& path, std::uint64_t seed) {
  const auto j = read_json_file(path);
  if (j.contains("format")) return system_from_json(j);
  const auto dir = std::filesystem::path(path).parent_path();
  const auto spec = problem_spec_from_json(j, dir.empty() ? "." : dir.string());
  const auto problem = build_problem(spec, seed - 1);
  return assemble_problem(problem, resolve_strategy(spec, problem)).system;
}

struct SolveArgs {
  std::string input;
  std::string output;
  bool all_paths = false;
};

int cmd_solve(const Globals& g, const SolveArgs& a) {
  const auto sys = load_system(a.input, g.seed);
  const auto result = solve_total_degree(to_complex(sys), {g.seed, g.jobs});
  const auto& listed = a.all_paths ? result.paths : result.solutions;
  if (g.format == "json-like" || !a.output.empty()) emit(dump(solutions_to_json(listed)), a.output);
  if (g.format == "text") {
    std::cout << "Bezout number " << static_cast<long long>(result.bezout) << ", " << result.solutions.size()
              << " distinct solutions, " << result.diverged << " diverged, " << result.failed << " failed paths\n";
    for (std::size_t i = 0; a.output.empty() && i < listed.size(); ++i) {
      std::cout << "  [" << i << "] " << to_string(listed[i].status) << " residual "
                << exact_decimal(listed[i].residual_norm) << "\n";
      for (const auto& z : listed[i].point)
        std::cout << "      " << exact_decimal(z.real()) << " " << exact_decimal(z.imag()) << "i\n";
    }
  } else if (g.format == "csv") {
    std::cout << "solution,variable,re,im\n";
    for (std::size_t i = 0; i < listed.size(); ++i)
      for (std::size_t v = 0; v < listed[i].point.size(); ++v)
        std::cout << i << "," << sys.variables[v].name << "," << exact_decimal(listed[i].point[v].real()) << ","
                  << exact_decimal(listed[i].point[v].imag()) << "\n";
  }
  return kOk;
}

struct CertifyArgs {
  std::string system;
  std::string solutions;
  std::string output;
  bool soft = false;
  int refine = 0;
};

int cmd_certify(const Globals& g, const CertifyArgs& a) {
  const auto sys = load_system(a.system, g.seed);
  const auto csys = to_complex(sys);
  auto sols = solutions_from_json(read_json_file(a.solutions));
  for (auto& s : sols)
    if (a.refine > 0) s.point = newton(csys, s.point, a.refine, 0).point;

  bool all_ok = true;
  if (a.soft) {
    Json arr = Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < sols.size(); ++i) {
      const auto c = soft_alpha_test(csys, sols[i].point);
      all_ok = all_ok && c.certified;
      arr.push_back(Json{{"alpha", exact_decimal(c.alpha)},
                         {"beta", exact_decimal(c.beta)},
                         {"gamma", exact_decimal(c.gamma)},
                         {"certified", c.certified},
                         {"precision_warning", c.precision_warning}});
      os << "[" << i << "] " << (c.certified ? "soft-certified" : "not certified") << " alpha "
         << exact_decimal(c.alpha) << (c.precision_warning ? " (at working precision)" : "") << "\n";
    }
    if (g.format == "text") std::cout << os.str();
    if (g.format == "json-like" || !a.output.empty())
      emit(dump(Json{{"format", "schubert-soft-certificates-1"}, {"certificates", arr}}), a.output);
    return all_ok ? kOk : kCheckFailure;
  }

  std::vector<std::vector<ComplexRational>> points;
  for (const auto& s : sols) points.push_back(rationalize(s.point));
  const auto certs = certify_all(sys, points);
  std::size_t certified = 0, real = 0, distinct = 0;
  for (const auto& c : certs) {
    certified += c.certified;
    real += c.real_certified;
  }
  for (const auto& c : certs) distinct += c.certified && c.distinct_from.size() + 1 == certified;
  all_ok = certified == certs.size() && distinct == certified;
  if (g.format == "json-like" || !a.output.empty()) emit(dump(certificates_to_json(certs)), a.output);
  if (g.format == "text") {
    for (std::size_t i = 0; i < certs.size(); ++i)
      std::cout << "[" << i << "] " << (certs[i].singular ? "singular Jacobian" : certs[i].certified ? "certified" : "not certified")
                << (certs[i].real_certified ? ", real" : "") << "  alpha <= " << certs[i].alpha.get_d() << "\n";
    std::cout << certified << " of " << certs.size() << " certified, " << distinct << " provably distinct, " << real
              << " provably real\n";
  } else if (g.format == "csv") {
    std::cout << "index,certified,real,alpha,beta,gamma\n";
    for (std::size_t i = 0; i < certs.size(); ++i)
      std::cout << i << "," << certs[i].certified << "," << certs[i].real_certified << "," << to_string(certs[i].alpha)
                << "," << to_string(certs[i].beta) << "," << to_string(certs[i].gamma) << "\n";
  }
  return all_ok ? kOk : kCheckFailure;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& level) {
  const auto results = run_checks(parse_check_level(level), g.jobs, g.seed);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (g.format == "text") std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (g.format == "csv") std::cout << (r.passed ? "pass" : "fail") << ",\"" << r.name << "\",\"" << r.detail << "\"\n";
  }
  if (g.format == "json-like") std::cout << dump(Json{{"level", level}, {"passed", ok}, {"checks", arr}});
  return ok ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert problems as square bilinear systems: formulate, census, solve, certify"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.jobs = default_jobs();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (default: SCHUBERT_JOBS or all cores)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json-like", "csv"}))
      ->capture_default_str();

  SampleArgs sample;
  auto* sub_sample = app.add_subcommand("sample", "Sample a point of a Schubert cell and recover its position");
  sub_sample->add_option("condition", sample.condition, "Permutation, e.g. 358|12467")->required();
  sub_sample->add_option("--type", sample.type, "Descent type a_1,...,a_s when the condition has no bars");
  sub_sample->add_option("--flag", sample.flag, "random, standard, opposite or a flag file")->capture_default_str();
  sub_sample->add_option("-o,--output", sample.output, "Output file");

  FormulateArgs formulate;
  auto* sub_formulate = app.add_subcommand("formulate", "Assemble a Schubert problem or compare formulations");
  sub_formulate->add_option("spec", formulate.spec, "Problem spec (JSON)");
  sub_formulate->add_option("--condition", formulate.condition, "Report formulation sizes for one condition");
  sub_formulate->add_option("--system", formulate.system_out, "Write the polynomial system here");
  sub_formulate->add_option("--report", formulate.report_out, "Write the report here instead of stdout");

  CensusArgs census;
  auto* sub_census = app.add_subcommand("census", "Compare variable counts over all flag manifolds of C^n");
  sub_census->add_option("--n", census.n, "Ambient dimension")->capture_default_str();
  sub_census->add_option("--mode", census.mode, "all or favorable")
      ->check(CLI::IsMember({"all", "favorable"}))
      ->capture_default_str();
  sub_census->add_flag("--reduced-pd,!--plain-pd", census.reduced_pd, "Primal-dual variant (default reduced)");
  sub_census->add_option("--csv", census.csv_out, "Also write per-manifold rows as CSV");

  SolveArgs solve;
  auto* sub_solve = app.add_subcommand("solve", "Total-degree homotopy for a system or problem spec");
  sub_solve->add_option("input", solve.input, "System file or problem spec")->required();
  sub_solve->add_option("-o,--output", solve.output, "Solutions file");
  sub_solve->add_flag("--all-paths", solve.all_paths, "List every path endpoint");

  CertifyArgs certify;
  auto* sub_certify = app.add_subcommand("certify", "Alpha-theory certificates for approximate solutions");
  sub_certify->add_option("system", certify.system, "System file or problem spec")->required();
  sub_certify->add_option("solutions", certify.solutions, "Solutions file")->required();
  sub_certify->add_option("-o,--output", certify.output, "Certificates file");
  sub_certify->add_flag("--soft", certify.soft, "Floating point screening instead of exact certificates");
  sub_certify->add_option("--refine", certify.refine, "Newton steps before certifying")->capture_default_str();

  std::string level = "fast";
  auto* sub_check = app.add_subcommand("check", "Run invariant batteries");
  sub_check->add_option("--level", level, "fast, exhaustive-7 or exhaustive-9-census")
      ->check(CLI::IsMember({"fast", "exhaustive-7", "exhaustive-9-census"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sub_sample) return cmd_sample(g, sample);
    if (*sub_formulate) return cmd_formulate(g, formulate);
    if (*sub_census) return cmd_census(g, census);
    if (*sub_solve) return cmd_solve(g, solve);
    if (*sub_certify) return cmd_certify(g, certify);
    if (*sub_check) return cmd_check(g, level);
  } catch (const GenericityError& e) {
    std::cerr << "error: " << e.what() << "\nhint: the flags are not in general position; resample with another --seed\n";
    return kGenericity;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsage;
}
