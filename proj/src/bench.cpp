#include "jisolve/bench.hpp"

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jisolve/dp.hpp"
#include "jisolve/error.hpp"

namespace jis {

namespace {

struct ChildReport {
  int ok = 0;
  int q = 0;
  Position ell = 0;
  double time_ms = 0;
  std::uint64_t peak = 0;
  Weight value = 0;
  char error[256] = {};
};

// Resets the resident high-water mark (Linux); harmless elsewhere.
void reset_peak_rss() {
  std::ofstream clear("/proc/self/clear_refs");
  if (clear) clear << "5";
}

std::uint64_t peak_rss_bytes() {
  std::ifstream status("/proc/self/status");
  for (std::string line; std::getline(status, line);) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream ss(line.substr(6));
      std::uint64_t kb = 0;
      ss >> kb;
      return kb * 1024;
    }
  }
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<std::uint64_t>(ru.ru_maxrss) * 1024;
}

ChildReport measure(const std::string& algo, const GenParams& p) {
  ChildReport rep;
  reset_peak_rss();
  const ColoredIntervalGraph g = gen_cisl(p);
  const GraphStats st = stats(g);
  rep.ell = st.ell;
  rep.q = st.q;
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == "dpq") {
    rep.value = solve_dp_q(g).value;
  } else if (algo == "dpgamma") {
    rep.value = solve_dp_gamma(g);
  } else {
    throw InputError("unknown bench algorithm '" + algo + "'");
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rep.peak = peak_rss_bytes();
  rep.ok = 1;
  return rep;
}

}  // namespace

BenchRow run_bench_point(const std::string& algo, const GenParams& p) {
  p.validate();
  int fds[2];
  if (pipe(fds) != 0) throw Error("pipe failed");
  const pid_t pid = fork();
  if (pid < 0) throw Error("fork failed");
  if (pid == 0) {
    close(fds[0]);
    ChildReport rep;
    try {
      rep = measure(algo, p);
    } catch (const std::exception& e) {
      std::strncpy(rep.error, e.what(), sizeof(rep.error) - 1);
    }
    const ssize_t wrote = write(fds[1], &rep, sizeof(rep));
    _exit(wrote == static_cast<ssize_t>(sizeof(rep)) ? 0 : 1);
  }
  close(fds[1]);
  ChildReport rep;
  std::size_t got = 0;
  while (got < sizeof(rep)) {
    const ssize_t r = read(fds[0], reinterpret_cast<char*>(&rep) + got, sizeof(rep) - got);
    if (r <= 0) break;
    got += static_cast<std::size_t>(r);
  }
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (got != sizeof(rep)) throw Error("benchmark child died without a report");
  if (!rep.ok) throw Error(std::string("benchmark run failed: ") + rep.error);

  BenchRow row;
  row.algo = algo;
  row.n = p.n;
  row.gamma = p.gamma;
  row.c = p.c;
  row.q = rep.q;
  row.ell = rep.ell;
  row.time_ms = rep.time_ms;
  row.peak_mem_bytes = rep.peak;
  row.value = rep.value;
  return row;
}

void write_bench_header(std::ostream& out) {
  out << "# jisolve-bench v1\n";
  out << "algo,n,gamma,c,Q,ell,time_ms,peak_mem_bytes,value\n";
}

void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << r.algo << ',' << r.n << ',' << r.gamma << ',' << r.c << ',' << r.q << ',' << r.ell << ','
      << r.time_ms << ',' << r.peak_mem_bytes << ',' << r.value << '\n';
}

}  // namespace jis
