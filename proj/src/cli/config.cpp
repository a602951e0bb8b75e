#include <fstream>
#include <sstream>

#include <json.hpp>

#include "default_config.hpp"
#include "sumsq/cli.hpp"

namespace sumsq::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ConfigError("config: " + msg); }

Complex complex_of(const json& v, const char* what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  bad(std::string(what) + " must be a number or [re, im]");
}

// A scalar is accepted where a list is expected.
template <class F>
void each(const json& v, F&& f) {
  if (v.is_array()) {
    for (const auto& x : v) f(x);
  } else {
    f(v);
  }
}

std::vector<Complex> complex_list(const json& v, const char* what) {
  // a bare [re, im] would read as two reals, so complex values go in a list
  std::vector<Complex> out;
  if (!v.is_array()) return {complex_of(v, what)};
  for (const auto& x : v) out.push_back(complex_of(x, what));
  return out;
}

PointSpec point_spec(const json& j) {
  if (!j.is_object()) bad("each point must be an object");
  PointSpec p;
  for (const auto& [key, v] : j.items()) {
    if (key == "k") {
      p.k.clear();
      each(v, [&](const json& x) {
        if (!x.is_number_integer()) bad("k must be an integer");
        p.k.push_back(x.get<int>());
      });
    } else if (key == "nu") {
      p.nu.clear();
      each(v, [&](const json& x) {
        if (!x.is_number()) bad("nu must be a number");
        p.nu.push_back(x.get<double>());
      });
    } else if (key == "alpha") {
      p.alpha = complex_list(v, "alpha");
    } else if (key == "beta") {
      p.beta = complex_list(v, "beta");
    } else if (key == "alpha_beta") {
      if (!v.is_array()) bad("alpha_beta must be a list of [alpha, beta] pairs");
      for (const auto& pr : v) {
        if (!pr.is_array() || pr.size() != 2) bad("alpha_beta entries must be [alpha, beta]");
        p.alpha_beta.emplace_back(complex_of(pr[0], "alpha"), complex_of(pr[1], "beta"));
      }
    } else {
      bad("unknown point field '" + key + "'");
    }
  }
  if (p.k.empty() || p.nu.empty() || p.alpha.empty() || p.beta.empty()) bad("empty parameter list");
  return p;
}

Suite suite_of(const json& j) {
  Suite s;
  if (!j.contains("identities") || !j["identities"].is_array()) bad("suite needs an 'identities' list");
  for (const auto& x : j["identities"]) {
    if (!x.is_string()) bad("identity ids are strings");
    auto id = identity_from_name(x.get<std::string>());
    if (!id) bad("unknown identity '" + x.get<std::string>() + "'");
    s.identities.push_back(*id);
  }
  if (s.identities.empty()) bad("empty identity list");
  if (j.contains("points")) {
    if (!j["points"].is_array()) bad("'points' must be a list");
    for (const auto& p : j["points"]) s.points.push_back(point_spec(p));
  }
  if (s.points.empty()) s.points.push_back(PointSpec{});
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0)) bad("tol must be a positive number");
    s.tol = j["tol"].get<double>();
  }
  for (const auto& [key, v] : j.items())
    if (key != "identities" && key != "points" && key != "tol") bad("unknown suite field '" + key + "'");
  return s;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "tol") {
      if (!v.is_number() || !(v.get<double>() > 0)) bad("tol must be a positive number");
      c.tol = v.get<double>();
    } else if (key == "max_terms") {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 1) bad("max_terms must be a positive integer");
      c.max_terms = v.get<std::int64_t>();
    } else if (key == "output_path") {
      if (!v.is_string()) bad("output_path must be a string");
      c.output_path = v.get<std::string>();
    } else if (key == "format") {
      std::string f = v.is_string() ? v.get<std::string>() : "";
      if (f == "json") c.format = Format::json;
      else if (f == "csv") c.format = Format::csv;
      else bad("format must be json or csv");
    } else if (key == "threads") {
      if (v.is_string() && v.get<std::string>() == "auto") c.threads = 0;
      else if (v.is_number_integer() && v.get<int>() >= 1) c.threads = v.get<int>();
      else bad("threads must be a positive integer or \"auto\"");
    } else if (key == "suites") {
      if (!v.is_array()) bad("'suites' must be a list");
      for (const auto& s : v) c.suites.push_back(suite_of(s));
    } else if (key != "identities" && key != "points") {
      bad("unknown field '" + key + "'");
    }
  }
  // shorthand: a single suite at top level
  if (j.contains("identities")) {
    json s = json::object();
    s["identities"] = j["identities"];
    if (j.contains("points")) s["points"] = j["points"];
    c.suites.push_back(suite_of(s));
  }
  if (c.suites.empty()) bad("no identities to run");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

const std::string& default_config_text() {
  static const std::string s = kDefaultConfig;
  return s;
}

std::vector<Task> expand(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (const Suite& s : cfg.suites) {
    double tol = s.tol.value_or(cfg.tol);
    for (IdentityId id : s.identities) {
      std::size_t first = tasks.size();
      for (const PointSpec& ps : s.points) {
        std::vector<std::pair<Complex, Complex>> ab = ps.alpha_beta;
        if (ab.empty())
          for (Complex a : ps.alpha)
            for (Complex b : ps.beta) ab.emplace_back(a, b);
        bool single = ps.k.size() == 1 && ps.nu.size() == 1 && ab.size() == 1;
        for (int k : ps.k)
          for (double nu : ps.nu)
            for (auto [a, b] : ab) {
              ParamPoint p = normalize(id, ParamPoint{k, nu, a, b});
              bool dup = false;
              for (std::size_t i = first; i < tasks.size() && !dup; ++i) dup = tasks[i].point == p;
              if (dup) continue;
              Task t{id, p, tol, single, std::nullopt};
              try {
                check_point(id, p);
              } catch (const RejectedError& e) {
                t.rejected = e;
              }
              tasks.push_back(std::move(t));
            }
      }
    }
  }
  return tasks;
}

}  // namespace sumsq::cli
