#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hgq/construct.hpp"

namespace hgq {

/// m * log2(n) / log2(max(m,2)) — the information-theoretic reference for
/// unbounded weights.
double bound_unbounded(int n, int64_t m);

/// m * log2(n^d / m) / log2(max(m,2)) — the reference for poly-bounded
/// integer weights.
double bound_bounded(int n, int d, int64_t m);

struct BenchRecord {
    int n = 0;
    int d = 0;
    int64_t m = 0;
    FieldSpec field = FieldSpec::infinity();
    uint64_t plan_size = 0;
    double bound1 = 0.0;  // unbounded-weights reference
    double bound2 = 0.0;  // bounded-weights reference
    double ratio = 0.0;   // plan_size / bound1
    int attempts = 1;
    double seconds = 0.0;
};

/// Constructs one plan per (n, m) grid point at fixed d (verification
/// skipped) and records sizes against the reference bounds.
std::vector<BenchRecord> run_bench_grid(const std::vector<int>& ns, const std::vector<int64_t>& ms,
                                        int d, PlanKind kind, const ConstructionConfig& cfg);

/// Fixed columns: n,d,m,field,kind,k,bound1,bound2,ratio,attempts,seconds.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, PlanKind kind);

}  // namespace hgq
