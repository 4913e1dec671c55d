#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "jisolve/generator.hpp"

namespace jis {

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  int gamma = 0;
  int c = 0;
  int q = 0;
  Position ell = 0;
  double time_ms = 0;
  std::uint64_t peak_mem_bytes = 0;
  Weight value = 0;
};

// Generates gen_cisl(p) and solves it ("dpq" or "dpgamma", value mode) in a
// forked child, so timing and peak resident memory belong to that run alone.
// time_ms covers the solve only; peak memory covers generation and solve.
// Peak memory is the kernel's resident high-water mark and is approximate.
// Throws Error when the child fails.
BenchRow run_bench_point(const std::string& algo, const GenParams& p);

void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

}  // namespace jis
