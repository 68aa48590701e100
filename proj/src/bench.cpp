#include "hgq/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

namespace hgq {

double bound_unbounded(int n, int64_t m) {
    const double lg_m = std::log2(static_cast<double>(std::max<int64_t>(m, 2)));
    return static_cast<double>(m) * std::log2(static_cast<double>(n)) / lg_m;
}

double bound_bounded(int n, int d, int64_t m) {
    const double lg_m = std::log2(static_cast<double>(std::max<int64_t>(m, 2)));
    const double lg_ratio = d * std::log2(static_cast<double>(n)) - std::log2(static_cast<double>(m));
    return static_cast<double>(m) * lg_ratio / lg_m;
}

std::vector<BenchRecord> run_bench_grid(const std::vector<int>& ns, const std::vector<int64_t>& ms,
                                        int d, PlanKind kind, const ConstructionConfig& cfg) {
    std::vector<BenchRecord> records;
    for (int n : ns) {
        for (int64_t m : ms) {
            ConstructionConfig grid_cfg = cfg;
            grid_cfg.verify = false;  // construction-only timing; desk-scale
                                      // verification does not reach these sizes
            const auto start = std::chrono::steady_clock::now();
            ConstructionResult r =
                las_vegas_construct(kind, n, d, m, default_verify_field(kind, d, m), grid_cfg);
            BenchRecord rec;
            rec.n = n;
            rec.d = d;
            rec.m = m;
            rec.field = r.plan.field;
            rec.plan_size = r.plan.queries.size();
            rec.bound1 = bound_unbounded(n, m);
            rec.bound2 = bound_bounded(n, d, m);
            rec.ratio = static_cast<double>(rec.plan_size) / rec.bound1;
            rec.attempts = r.attempts;
            rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            records.push_back(rec);
        }
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, PlanKind kind) {
    out << "n,d,m,field,kind,k,bound1,bound2,ratio,attempts,seconds\n";
    char buf[64];
    for (const BenchRecord& r : records) {
        out << r.n << ',' << r.d << ',' << r.m << ',' << r.field.describe() << ','
            << to_string(kind) << ',' << r.plan_size << ',';
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f", r.bound1, r.bound2, r.ratio);
        out << buf << ',' << r.attempts << ',';
        std::snprintf(buf, sizeof(buf), "%.6f", r.seconds);
        out << buf << '\n';
    }
}

}  // namespace hgq
