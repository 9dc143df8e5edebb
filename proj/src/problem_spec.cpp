#include "schubert/problem_spec.hpp"

#include <filesystem>

namespace schubert {

ProblemSpec problem_spec_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw InputError("problem spec must be a JSON object");
  ProblemSpec s;
  s.base_dir = base_dir;
  try {
    s.n = j.at("n").get<int>();
    s.a = j.at("a").get<std::vector<int>>();
    s.conditions = j.at("conditions").get<std::vector<std::string>>();
    if (j.contains("flags")) {
      for (const auto& f : j.at("flags")) s.flags.push_back(f);
    }
    if (j.contains("strategy")) {
      const auto& st = j.at("strategy");
      s.strategy = st.is_string() ? std::vector<std::string>{st.get<std::string>()} : st.get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed problem spec: ") + e.what());
  }
  if (s.conditions.empty()) throw InputError("problem spec lists no conditions");
  if (s.flags.empty())
    for (std::size_t i = 0; i < s.conditions.size(); ++i) s.flags.push_back("random:" + std::to_string(i + 1));
  if (s.flags.size() != s.conditions.size()) throw InputError("problem spec needs one flag per condition");
  if (s.strategy.empty()) s.strategy = {"auto"};
  if (s.strategy.size() != 1 && s.strategy.size() != s.conditions.size())
    throw InputError("strategy must be \"auto\" or list one entry per condition");
  return s;
}

Json problem_spec_to_json(const ProblemSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["a"] = spec.a;
  j["conditions"] = spec.conditions;
  j["flags"] = spec.flags;
  j["strategy"] = spec.strategy;
  return j;
}

ProblemSpec read_problem_spec(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return problem_spec_from_json(read_json_file(path), dir.empty() ? "." : dir.string());
}

namespace {

FlagMatrix resolve_flag(const Json& entry, int n, std::uint64_t seed, const std::string& base_dir) {
  if (entry.is_object()) return flag_from_json(entry);
  if (!entry.is_string()) throw InputError("flag entries must be strings or objects");
  const auto text = entry.get<std::string>();
  const std::size_t dim = static_cast<std::size_t>(n);
  if (text == "standard") return FlagMatrix::standard(dim);
  if (text == "opposite") return FlagMatrix::opposite(dim);
  if (text.rfind("random:", 0) == 0) {
    try {
      return random_flag(n, std::stoull(text.substr(7)) + seed);
    } catch (const std::logic_error&) {
      throw InputError("bad random flag seed in '" + text + "'");
    }
  }
  auto path = std::filesystem::path(text);
  if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
  auto flag = flag_from_json(read_json_file(path.string()));
  if (flag.n() != dim) throw InputError("flag file " + text + " has the wrong dimension");
  return flag;
}

}  // namespace

SchubertProblem build_problem(const ProblemSpec& spec, std::uint64_t seed) {
  const DescentType type(spec.n, spec.a);
  SchubertProblem p;
  for (const auto& c : spec.conditions) p.conditions.push_back(parse_condition(c, type));
  for (const auto& f : spec.flags) p.flags.flags.push_back(resolve_flag(f, spec.n, seed, spec.base_dir));
  p.validate();
  return p;
}

std::vector<ConditionStrategy> resolve_strategy(const ProblemSpec& spec, const SchubertProblem& p) {
  if (spec.strategy.size() == 1 && spec.strategy.front() == "auto") return auto_strategy(p);
  const auto automatic = auto_strategy(p);
  std::vector<ConditionStrategy> out;
  for (std::size_t i = 0; i < spec.strategy.size(); ++i)
    out.push_back(spec.strategy[i] == "auto" ? automatic[i] : parse_strategy(spec.strategy[i]));
  return out;
}

}  // namespace schubert
