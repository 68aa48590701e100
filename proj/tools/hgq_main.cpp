// hgq: construct, answer, verify and decode non-adaptive additive-query
// plans for hidden weighted hypergraphs, plus a query-count benchmark.
//
// Exit codes: 0 ok, 2 usage, 3 construction failure, 4 budget refusal,
// 5 verification failure, 6 decode not unique.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hgq/bench.hpp"
#include "hgq/construct.hpp"
#include "hgq/decode.hpp"
#include "hgq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConstructionFailure = 3;
constexpr int kExitBudgetRefusal = 4;
constexpr int kExitVerificationFail = 5;
constexpr int kExitDecodeNotUnique = 6;

hgq::FieldSpec parse_field(const std::string& text) {
    if (text == "inf") return hgq::FieldSpec::infinity();
    return hgq::FieldSpec::prime(std::stoll(text));
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    write_text(path, j.dump(2) + "\n");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

struct CommonConstructFlags {
    int n = 0;
    int d = 2;
    int64_t m = 0;
    std::string kind = "detecting";
    uint64_t seed = 1;
    double c1 = 12.0;
    double C2 = 8.0;
    int retries = 20;
    std::string verify = "exhaustive";
    std::string field;
    int64_t window = 2;
    uint64_t budget = 10'000'000;
    int workers = 1;

    hgq::ConstructionConfig config() const {
        hgq::ConstructionConfig cfg;
        cfg.c1 = c1;
        cfg.C2 = C2;
        cfg.retry_limit = retries;
        cfg.seed = seed;
        cfg.verify = verify == "exhaustive";
        cfg.window = window;
        cfg.budget = budget;
        cfg.workers = workers;
        return cfg;
    }
};

int cmd_construct(const CommonConstructFlags& flags, const std::string& out_path) {
    const hgq::PlanKind kind = hgq::plan_kind_from_string(flags.kind);
    const hgq::FieldSpec field = flags.field.empty()
                                     ? hgq::default_verify_field(kind, flags.d, flags.m)
                                     : parse_field(flags.field);
    hgq::ConstructionResult result =
        hgq::las_vegas_construct(kind, flags.n, flags.d, flags.m, field, flags.config());
    write_json(out_path, result.plan.to_json());
    std::cerr << "plan: " << result.plan.queries.size() << " queries, attempts "
              << result.attempts << "\n";
    return kExitOk;
}

int cmd_answer(const std::string& plan_path, const std::string& graph_path,
               const std::string& field_text, const std::string& out_path) {
    const hgq::QueryPlan plan = hgq::QueryPlan::from_json(load_json(plan_path));
    const hgq::Hypergraph graph = hgq::Hypergraph::from_json(load_json(graph_path));
    const hgq::FieldSpec field = field_text.empty() ? graph.field() : parse_field(field_text);
    const hgq::AnswerVector answers = hgq::answer_queries(plan, graph, field);
    write_json(out_path, answers.to_json());
    size_t empty = 0;
    for (const auto& q : plan.queries)
        if (q.none()) ++empty;
    std::cerr << "answered " << (plan.queries.size() - empty) << " oracle queries (" << empty
              << " empty answered locally)\n";
    return kExitOk;
}

int cmd_verify(const std::string& plan_path, int64_t m_override, const std::string& field_text,
               const std::string& route_text, int64_t window, uint64_t budget, int workers,
               const std::string& out_path) {
    const hgq::QueryPlan plan = hgq::QueryPlan::from_json(load_json(plan_path));
    const int64_t m = m_override > 0 ? m_override : plan.m;
    const hgq::FieldSpec field = field_text.empty() ? plan.field : parse_field(field_text);

    hgq::VerifyReport report;
    switch (plan.kind) {
        case hgq::PlanKind::ZeroTest:
            report = hgq::verify_zero_test(plan.stages.at(0).tuples, plan.n, plan.d, m,
                                           field.modulus(), budget);
            break;
        case hgq::PlanKind::Detecting:
            report = hgq::verify_detecting(plan, plan.n, plan.d, m, field, window, budget, workers);
            break;
        case hgq::PlanKind::Search: {
            hgq::SearchRoute route = hgq::SearchRoute::Both;
            if (route_text == "doubling") route = hgq::SearchRoute::Doubling;
            else if (route_text == "direct") route = hgq::SearchRoute::Direct;
            else if (route_text != "both") throw std::invalid_argument("unknown route");
            report = hgq::verify_search(plan, plan.n, plan.d, m, field, route, window, budget,
                                        workers);
            break;
        }
    }
    if (!out_path.empty()) write_json(out_path, report.to_json());
    std::cerr << "verify: " << hgq::to_string(report.verdict) << " (" << report.detail << ")\n";
    if (report.failed()) return kExitVerificationFail;
    if (report.refused()) return kExitBudgetRefusal;
    return kExitOk;
}

int cmd_decode(const std::string& plan_path, const std::string& answers_path, int64_t m_override,
               int64_t window, uint64_t budget, int workers, const std::string& out_path) {
    const hgq::QueryPlan plan = hgq::QueryPlan::from_json(load_json(plan_path));
    const hgq::AnswerVector answers = hgq::AnswerVector::from_json(load_json(answers_path));
    const int64_t m = m_override > 0 ? m_override : plan.m;
    const hgq::WeightDomain domain = hgq::WeightDomain::for_field(answers.field, window);
    const hgq::DecodeResult result =
        hgq::decode_exhaustive(plan, answers, plan.n, plan.d, m, domain, budget, workers);
    if (!out_path.empty()) write_json(out_path, result.to_json());
    std::cerr << "decode: " << hgq::to_string(result.outcome) << "\n";
    switch (result.outcome) {
        case hgq::DecodeOutcome::Unique: return kExitOk;
        case hgq::DecodeOutcome::Refused: return kExitBudgetRefusal;
        default: return kExitDecodeNotUnique;
    }
}

int cmd_bench(const std::string& n_list, const std::string& m_list, int d, const std::string& kind,
              uint64_t seed, double c1, double C2, const std::string& out_path) {
    hgq::ConstructionConfig cfg;
    cfg.c1 = c1;
    cfg.C2 = C2;
    cfg.seed = seed;
    cfg.verify = false;
    std::vector<int64_t> ms;
    for (int m : parse_int_list(m_list)) ms.push_back(m);
    const auto records =
        hgq::run_bench_grid(parse_int_list(n_list), ms, d, hgq::plan_kind_from_string(kind), cfg);
    std::ostringstream csv;
    hgq::write_bench_csv(csv, records, hgq::plan_kind_from_string(kind));
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_text(out_path, csv.str());
    double max_ratio = 0;
    for (const auto& r : records) max_ratio = std::max(max_ratio, r.ratio);
    std::cerr << "bench: " << records.size() << " rows, max ratio " << max_ratio << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-adaptive additive-query plans for hidden hypergraphs"};
    app.require_subcommand(1);

    CommonConstructFlags cons;
    std::string out_path = "plan.json";
    auto* construct = app.add_subcommand("construct", "build a verified query plan");
    construct->add_option("--n", cons.n, "vertex count")->required()->check(CLI::PositiveNumber);
    construct->add_option("--d", cons.d, "rank bound")->required()->check(CLI::PositiveNumber);
    construct->add_option("--m", cons.m, "edge budget")->required()->check(CLI::PositiveNumber);
    construct->add_option("--kind", cons.kind, "zero-test|detecting|search")
        ->check(CLI::IsMember({"zero-test", "detecting", "search"}));
    construct->add_option("--seed", cons.seed, "base seed");
    construct->add_option("--c1", cons.c1, "Case 1 constant");
    construct->add_option("--C2", cons.C2, "Case 2 constant");
    construct->add_option("--retries", cons.retries, "Las Vegas attempt limit")
        ->check(CLI::PositiveNumber);
    construct->add_option("--verify", cons.verify, "exhaustive|skip")
        ->check(CLI::IsMember({"exhaustive", "skip"}));
    construct->add_option("--field", cons.field, "verification field: prime or 'inf'");
    construct->add_option("--window", cons.window, "integer weight window for exact mode");
    construct->add_option("--budget", cons.budget, "verifier enumeration budget");
    construct->add_option("--workers", cons.workers, "verification worker threads");
    construct->add_option("--out", out_path, "output plan file");

    std::string plan_path, graph_path, answers_path, field_text, route_text = "both";
    std::string answer_out = "answers.json", report_out, decode_out;
    int64_t m_override = 0, window = 2;
    uint64_t budget = 10'000'000;
    int workers = 1;

    auto* answer = app.add_subcommand("answer", "run the oracle over a plan");
    answer->add_option("--plan", plan_path, "plan file")->required();
    answer->add_option("--graph", graph_path, "hidden hypergraph file")->required();
    answer->add_option("--field", field_text, "answer field (default: the graph's)");
    answer->add_option("--out", answer_out, "output answers file");

    auto* verify = app.add_subcommand("verify", "exhaustively verify a plan");
    verify->add_option("--plan", plan_path, "plan file")->required();
    verify->add_option("--m", m_override, "class size (default: plan metadata)");
    verify->add_option("--field", field_text, "field to verify against");
    verify->add_option("--route", route_text, "search route: doubling|direct|both");
    verify->add_option("--window", window, "integer weight window for exact mode");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--out", report_out, "output report file");

    auto* decode = app.add_subcommand("decode", "reconstruct the hidden hypergraph");
    decode->add_option("--plan", plan_path, "plan file")->required();
    decode->add_option("--answers", answers_path, "answers file")->required();
    decode->add_option("--m", m_override, "edge budget (default: plan metadata)");
    decode->add_option("--window", window, "integer weight window for exact mode");
    decode->add_option("--budget", budget, "candidate budget");
    decode->add_option("--workers", workers, "worker threads");
    decode->add_option("--out", decode_out, "output result file");

    std::string n_list, m_list, bench_kind = "detecting", bench_out;
    int bench_d = 2;
    uint64_t bench_seed = 1;
    double bench_c1 = 12.0, bench_C2 = 8.0;
    auto* bench = app.add_subcommand("bench", "query-count benchmark grid (CSV)");
    bench->add_option("--n-list", n_list, "comma-separated vertex counts")->required();
    bench->add_option("--m-list", m_list, "comma-separated edge budgets")->required();
    bench->add_option("--d", bench_d, "rank bound");
    bench->add_option("--kind", bench_kind, "plan kind")
        ->check(CLI::IsMember({"zero-test", "detecting", "search"}));
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("--c1", bench_c1, "Case 1 constant");
    bench->add_option("--C2", bench_C2, "Case 2 constant");
    bench->add_option("--out", bench_out, "output CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // --help is not an error
    }

    try {
        if (construct->parsed()) return cmd_construct(cons, out_path);
        if (answer->parsed()) return cmd_answer(plan_path, graph_path, field_text, answer_out);
        if (verify->parsed())
            return cmd_verify(plan_path, m_override, field_text, route_text, window, budget,
                              workers, report_out);
        if (decode->parsed())
            return cmd_decode(plan_path, answers_path, m_override, window, budget, workers,
                              decode_out);
        if (bench->parsed())
            return cmd_bench(n_list, m_list, bench_d, bench_kind, bench_seed, bench_c1, bench_C2,
                             bench_out);
    } catch (const hgq::ConstructionError& e) {
        std::cerr << "construction failure: " << e.what() << "\n"
                  << e.last_report().dump(2) << "\n";
        return kExitConstructionFailure;
    } catch (const hgq::BudgetRefusal& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudgetRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
