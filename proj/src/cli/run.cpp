#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "sumsq/cli.hpp"
#include "sumsq/lfunc.hpp"

namespace sumsq::cli {

namespace {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

Truncation truncation(const RunConfig& cfg, double tol) {
  Truncation t;
  t.tol = tol;
  t.max_terms = cfg.max_terms;
  return t;
}

// Writes to the configured path or standard output; false if unwritable.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return bool(f);
}

Outcome run_one(const RunConfig& cfg, const Task& task, Exec exec) {
  Outcome o;
  o.task = task;
  if (task.rejected) {
    o.status = Status::rejected;
    return o;
  }
  try {
    o.report = verify(task.id, task.point, truncation(cfg, task.tol), exec);
    o.status = o.report.rel_residual <= task.tol ? Status::pass : Status::fail;
  } catch (const SideError& e) {
    o.status = Status::error;
    o.error_side = side_name(e.side);
    o.error_message = e.what();
  } catch (const std::exception& e) {
    o.status = Status::error;
    o.error_message = e.what();
  }
  return o;
}

std::string key_of(const char* base, double s) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s_%g", base, s);
  std::string k = buf;
  for (char& c : k)
    if (c == '.') c = '_';
  return k;
}

}  // namespace

std::vector<Outcome> verify_all(const RunConfig& cfg, const std::vector<Task>& tasks) {
  set_threads(cfg.threads);
  std::vector<Outcome> out(tasks.size());
  const long n = static_cast<long>(tasks.size());
  if (n == 1) {
    out[0] = run_one(cfg, tasks[0], Exec::parallel);
    return out;
  }
  // parallel over points; each point is evaluated serially
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = run_one(cfg, tasks[i], Exec::serial);
  return out;
}

std::vector<BenchRow> bench_all(const RunConfig& cfg, const std::vector<Task>& tasks) {
  set_threads(cfg.threads);
  std::vector<BenchRow> rows;
  // timings are the point of a bench, so points run one at a time
  for (const Task& task : tasks) {
    if (task.rejected) continue;
    std::string name(identity_name(task.id)), label = point_label(task.point);
    Truncation t = truncation(cfg, task.tol);
    auto row = [&](const char* side, const SideResult& r, double sec) {
      BenchRow b;
      b.identity = name, b.point = label, b.side = side;
      b.terms = std::max(r.trunc.terms_used, r.trunc.terms_required);
      b.terms_summed = r.trunc.terms_used;
      b.tail_estimate = r.trunc.tail_estimate;
      b.seconds = sec;
      b.value = r.value;
      return b;
    };
    try {
      if (has_power_side(task.id)) {
        BenchSides s = bench_sides(task.id, task.point, t);
        rows.push_back(row("exponential", s.exponential, s.seconds[0]));
        rows.push_back(row("power_smoothed", s.power_smoothed, s.seconds[1]));
        rows.push_back(row("power_direct", s.power_direct, s.seconds[2]));
      } else {
        for (Side side : {Side::lhs, Side::rhs}) {
          auto t0 = std::chrono::steady_clock::now();
          SideResult r = evaluate_side(task.id, side, normalize(task.id, task.point), t);
          double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          rows.push_back(row(side == Side::lhs ? "lhs" : "rhs", r, sec));
        }
      }
    } catch (const std::exception& e) {
      BenchRow b;
      b.identity = name, b.point = label, b.side = "all";
      b.error = e.what();
      rows.push_back(std::move(b));
    }
  }
  return rows;
}

int run_verify(const RunConfig& cfg) {
  std::vector<Task> tasks = expand(cfg);
  std::size_t rejected = 0, explicit_rejected = 0;
  for (const Task& t : tasks) {
    if (!t.rejected) continue;
    ++rejected;
    if (t.explicit_point) ++explicit_rejected;
    std::cerr << "rejected " << identity_name(t.id) << " [" << point_label(t.point) << "]: " << t.rejected->what()
              << "\n";
  }
  std::vector<Outcome> out = verify_all(cfg, tasks);
  std::ostringstream ss;
  write_verify(ss, out, cfg.format, cfg.timing);
  if (!emit(cfg.output_path, ss.str())) return 2;

  std::size_t pass = 0, fail = 0, err = 0;
  for (const Outcome& o : out) {
    if (o.status == Status::pass) ++pass;
    if (o.status == Status::fail) ++fail;
    if (o.status == Status::error) {
      ++err;
      std::cerr << "error " << identity_name(o.task.id) << " [" << point_label(o.task.point)
                << "]: " << o.error_message << "\n";
    }
  }
  std::cerr << "verify: " << pass << " pass, " << fail << " fail, " << err << " error, " << rejected
            << " rejected\n";
  if (explicit_rejected > 0 || pass + fail + err == 0) return 2;
  return fail + err > 0 ? 1 : 0;
}

int run_bench(const RunConfig& cfg) {
  std::vector<Task> tasks = expand(cfg);
  std::size_t evaluable = 0;
  for (const Task& t : tasks) {
    if (t.rejected) {
      std::cerr << "rejected " << identity_name(t.id) << " [" << point_label(t.point) << "]: " << t.rejected->what()
                << "\n";
      if (t.explicit_point) return 2;
    } else {
      ++evaluable;
    }
  }
  if (evaluable == 0) return 2;
  std::vector<BenchRow> rows = bench_all(cfg, tasks);
  std::ostringstream ss;
  write_bench(ss, rows, cfg.format);
  if (!emit(cfg.output_path, ss.str())) return 2;
  for (const BenchRow& r : rows)
    if (!r.error.empty()) return 1;
  return 0;
}

int run_table(int k, std::int64_t nmax, Format f, const std::string& out_path) {
  std::string text;
  try {
    if (k < 1) throw DomainError("table: k must be positive");
    if (nmax < 0) throw DomainError("table: nmax must be non-negative");
    SquaresTable t = rk_table(k, nmax);
    if (f == Format::csv) {
      text = t.to_csv();
    } else {
      std::ostringstream ss;
      ss << "{\"k\": " << k << ", \"r_k\": [";
      for (std::int64_t n = 0; n <= nmax; ++n) ss << (n ? ", " : "") << t[n];
      ss << "]}\n";
      text = ss.str();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return emit(out_path, text) ? 0 : 2;
}

int run_constants(std::ostream& os) {
  const ConstantsBag& b = ConstantsBag::instance();
  std::vector<std::pair<std::string, double>> kv;
  kv.emplace_back("gamma_euler", b.gamma_euler);
  for (auto [s, v] : b.zeta_at) kv.emplace_back(key_of("zeta", s), v);
  for (auto [s, v] : b.zeta_prime_at) kv.emplace_back(key_of("zeta_prime", s), v);
  for (auto [s, v] : b.beta_at) kv.emplace_back(key_of("beta", s), v);
  for (auto [s, v] : b.beta_prime_at) kv.emplace_back(key_of("beta_prime", s), v);
  os << "{\n";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", kv[i].second);
    os << "  \"" << kv[i].first << "\": " << buf << (i + 1 < kv.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return 0;
}

}  // namespace sumsq::cli
