#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "sumsq/cli.hpp"

namespace sumsq::cli {

using nlohmann::ordered_json;

namespace {

ordered_json cjson(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json point_json(const ParamPoint& p) {
  return {{"k", p.k}, {"nu", p.nu}, {"alpha", cjson(p.alpha)}, {"beta", cjson(p.beta)}};
}

ordered_json trunc_json(const Truncation& t) {
  return {{"tol", t.tol},
          {"terms_used", t.terms_used},
          {"terms_required", t.terms_required},
          {"tail_estimate", t.tail_estimate}};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::rejected: return "rejected";
  }
  return "?";
}

std::string g15(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string g6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string c6(Complex z) {
  if (z.imag() == 0) return g6(z.real());
  return g6(z.real()) + (z.imag() < 0 ? "" : "+") + g6(z.imag()) + "i";
}

}  // namespace

std::string point_label(const ParamPoint& p) {
  return "k=" + std::to_string(p.k) + " nu=" + g6(p.nu) + " alpha=" + c6(p.alpha) + " beta=" + c6(p.beta);
}

void write_verify(std::ostream& os, const std::vector<Outcome>& out, Format f, bool timing) {
  if (f == Format::csv) {
    os << "identity,k,nu,alpha_re,alpha_im,beta_re,beta_im,rel_residual,lhs_terms,rhs_terms,seconds\n";
    for (const Outcome& o : out) {
      const ParamPoint& p = o.task.point;
      bool ok = o.status == Status::pass || o.status == Status::fail;
      os << identity_name(o.task.id) << ',' << p.k << ',' << g15(p.nu) << ',' << g15(p.alpha.real()) << ','
         << g15(p.alpha.imag()) << ',' << g15(p.beta.real()) << ',' << g15(p.beta.imag()) << ','
         << (ok ? g15(o.report.rel_residual) : "nan") << ','
         << (ok ? std::to_string(o.report.lhs_trunc.terms_used) : "nan") << ','
         << (ok ? std::to_string(o.report.rhs_trunc.terms_used) : "nan") << ','
         << g15(timing ? o.report.elapsed : 0.0) << '\n';
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const Outcome& o : out) {
    ordered_json e;
    e["identity"] = identity_name(o.task.id);
    e["point"] = point_json(o.task.point);
    e["status"] = status_name(o.status);
    e["tol"] = o.task.tol;
    if (o.status == Status::pass || o.status == Status::fail) {
      const IdentityReport& r = o.report;
      e["lhs"] = cjson(r.lhs);
      e["rhs"] = cjson(r.rhs);
      e["abs_residual"] = r.abs_residual;
      e["rel_residual"] = r.rel_residual;
      e["lhs_trunc"] = trunc_json(r.lhs_trunc);
      e["rhs_trunc"] = trunc_json(r.rhs_trunc);
      e["elapsed"] = timing ? r.elapsed : 0.0;
    } else if (o.status == Status::rejected) {
      e["reason"] = {{"code", o.task.rejected->code}, {"message", o.task.rejected->what()}};
    } else {
      e["error"] = {{"side", o.error_side}, {"message", o.error_message}};
    }
    arr.push_back(std::move(e));
  }
  os << arr.dump(2) << '\n';
}

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, Format f) {
  if (f == Format::csv) {
    os << "identity,point,side,terms,seconds\n";
    for (const BenchRow& r : rows)
      os << r.identity << ',' << r.point << ',' << r.side << ','
         << (r.error.empty() ? std::to_string(r.terms) : "nan") << ',' << g15(r.seconds) << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const BenchRow& r : rows) {
    ordered_json e{{"identity", r.identity}, {"point", r.point}, {"side", r.side}};
    if (r.error.empty()) {
      e["terms"] = r.terms;
      e["terms_summed"] = r.terms_summed;
      e["tail_estimate"] = r.tail_estimate;
      e["value"] = cjson(r.value);
    } else {
      e["error"] = r.error;
    }
    e["seconds"] = r.seconds;
    arr.push_back(std::move(e));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace sumsq::cli
