#include "schubert/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace schubert {

namespace {
constexpr const char* kSystemFormat = "schubert-polysystem-1";
constexpr const char* kSolutionsFormat = "schubert-solutions-1";
constexpr const char* kCertificatesFormat = "schubert-certificates-1";
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].size();
  RationalMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = j[i][c];
      m(i, c) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    }
  }
  return m;
}

Json flag_to_json(const FlagMatrix& f) {
  Json j;
  j["n"] = f.n();
  j["basis"] = matrix_to_json(f.basis);
  return j;
}

FlagMatrix flag_from_json(const Json& j) {
  if (!j.contains("basis")) throw InputError("flag file needs a basis");
  RationalMatrix b = matrix_from_json(j.at("basis"));
  if (b.rows() != b.cols()) throw InputError("flag basis must be square");
  if (j.contains("n") && j.at("n").get<std::size_t>() != b.rows()) throw InputError("flag n disagrees with basis");
  return FlagMatrix::from_basis(std::move(b));
}

Json system_to_json(const PolySystem<Rational>& s) {
  Json j;
  j["format"] = kSystemFormat;
  j["kind"] = s.kind;
  Json vars = Json::array();
  for (const auto& v : s.variables) vars.push_back(Json{{"name", v.name}, {"group", v.group}});
  j["variables"] = std::move(vars);
  Json eqs = Json::array();
  for (const auto& eq : s.equations) {
    Json terms = Json::array();
    for (const auto& [e, c] : eq.terms()) {
      Json exps = Json::array();
      for (auto x : e) exps.push_back(static_cast<int>(x));
      terms.push_back(Json::array({to_string(c), std::move(exps)}));
    }
    eqs.push_back(std::move(terms));
  }
  j["equations"] = std::move(eqs);
  return j;
}

PolySystem<Rational> system_from_json(const Json& j) {
  if (j.value("format", "") != kSystemFormat) throw InputError("not a polynomial system file");
  PolySystem<Rational> s;
  s.kind = j.value("kind", "");
  for (const auto& v : j.at("variables")) s.variables.push_back({v.at("name"), v.at("group")});
  const std::size_t nv = s.variables.size();
  for (const auto& terms : j.at("equations")) {
    Polynomial<Rational> p(nv);
    for (const auto& t : terms) {
      const auto& exps = t.at(1);
      if (exps.size() != nv) throw InputError("term exponent vector has the wrong length");
      Exponents e(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        const int x = exps[v].get<int>();
        if (x < 0 || x > 255) throw InputError("exponent out of range");
        e[v] = static_cast<std::uint8_t>(x);
      }
      p.add_term(e, parse_rational(t.at(0).get<std::string>()));
    }
    s.equations.push_back(std::move(p));
  }
  return s;
}

std::string exact_decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json solutions_to_json(const std::vector<TrackedSolution>& sols) {
  Json arr = Json::array();
  for (const auto& s : sols) {
    Json point = Json::array();
    for (const auto& z : s.point) point.push_back(Json::array({exact_decimal(z.real()), exact_decimal(z.imag())}));
    arr.push_back(Json{{"path", s.path_id},
                       {"status", to_string(s.status)},
                       {"residual", exact_decimal(s.residual_norm)},
                       {"iterations", s.newton_iterations},
                       {"point", std::move(point)}});
  }
  return Json{{"format", kSolutionsFormat}, {"solutions", std::move(arr)}};
}

std::vector<TrackedSolution> solutions_from_json(const Json& j) {
  if (j.value("format", "") != kSolutionsFormat) throw InputError("not a solutions file");
  std::vector<TrackedSolution> out;
  try {
    for (const auto& e : j.at("solutions")) {
      TrackedSolution s;
      s.path_id = e.value("path", std::size_t{0});
      const auto status = e.value("status", std::string("converged"));
      s.status = status == "converged" ? PathStatus::Converged
                 : status == "diverged" ? PathStatus::Diverged
                                        : PathStatus::PathFailure;
      s.residual_norm = std::stod(e.value("residual", std::string("0")));
      s.newton_iterations = e.value("iterations", 0);
      for (const auto& z : e.at("point"))
        s.point.emplace_back(std::stod(z.at(0).get<std::string>()), std::stod(z.at(1).get<std::string>()));
      out.push_back(std::move(s));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed solutions file: ") + e.what());
  }
  return out;
}

Json certificates_to_json(const std::vector<Certificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) {
    Json point = Json::array();
    for (const auto& z : c.point) point.push_back(Json::array({to_string(z.re), to_string(z.im)}));
    arr.push_back(Json{{"point", std::move(point)},
                       {"alpha", to_string(c.alpha)},
                       {"beta", to_string(c.beta)},
                       {"gamma", to_string(c.gamma)},
                       {"certified", c.certified},
                       {"real", c.real_certified},
                       {"singular", c.singular},
                       {"distinct_from", c.distinct_from}});
  }
  return Json{{"format", kCertificatesFormat}, {"certificates", std::move(arr)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace schubert
