// Command line front end: decides vanishing of Schubert coefficients from a
// Lehmer code, counts them exactly, produces tableau witnesses, and renders
// diagrams and the branching tree. Exit codes: 0 = YES/success, 1 = NO,
// 2 = usage, malformed input, or budget exceeded.

#include <atomic>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schub/code.hpp"
#include "schub/diagram.hpp"
#include "schub/schubert.hpp"
#include "schub/schubitope.hpp"
#include "schub/tableau.hpp"
#include "schub/transition.hpp"

using json = nlohmann::ordered_json;
using namespace schub;

namespace {

constexpr const char* kSchemaVersion = "1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    if (text.empty() || text == "-") return values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed integer '" + item + "'");
        }
        if (used != item.size()) throw UsageError("malformed integer '" + item + "'");
        if (value < 0) throw UsageError("negative entry '" + item + "'");
        values.push_back(value);
    }
    return values;
}

DecideEngine parse_engine(const std::string& name) {
    if (name == "auto") return DecideEngine::Auto;
    if (name == "simplex") return DecideEngine::Simplex;
    if (name == "flow") return DecideEngine::Flow;
    throw UsageError("unknown engine '" + name + "'");
}

json query_json(const std::string& command, const std::vector<int>& code,
                const std::vector<int>& alpha, const json& options) {
    json q;
    q["command"] = command;
    q["code"] = json(code);
    q["alpha"] = json(alpha);
    if (!options.is_null()) q["options"] = options;
    return q;
}

void emit(const json& payload) { std::cout << payload.dump() << '\n'; }

struct BatchQuery {
    std::vector<int> code;
    std::vector<int> alpha;
};

BatchQuery parse_batch_line(const std::string& line) {
    std::istringstream ss(line);
    std::string code_text, alpha_text;
    if (!(ss >> code_text)) throw UsageError("empty batch line");
    if (!(ss >> alpha_text)) alpha_text = "-";
    std::string rest;
    if (ss >> rest) throw UsageError("trailing input in batch line '" + line + "'");
    return {parse_int_list(code_text), parse_int_list(alpha_text)};
}

// Runs fn over every line of standard input in parallel; output order
// matches input order regardless of completion order.
int run_batch(const std::function<std::string(const BatchQuery&)>& fn) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    std::vector<BatchQuery> queries;
    queries.reserve(lines.size());
    for (const std::string& text : lines) queries.push_back(parse_batch_line(text));

    std::vector<std::string> results(queries.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= queries.size()) return;
                try {
                    results[i] = fn(queries[i]);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    failed = true;
                    if (first_error.empty()) first_error = e.what();
                    results[i] = "ERROR";
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const std::string& r : results) std::cout << r << '\n';
    if (failed) {
        std::cerr << "error: " << first_error << '\n';
        return 2;
    }
    return 0;
}

json witness_json(const Tableau& t) {
    json boxes = json::array();
    for (std::size_t i = 0; i < t.shape().boxes().size(); ++i) {
        const Box& b = t.shape().boxes()[i];
        boxes.push_back({b.row, b.col, t.labels()[i]});
    }
    json out;
    out["ambient"] = t.shape().ambient();
    out["boxes"] = boxes;
    out["rendering"] = t.render();
    return out;
}

json tree_json(const TransitionTreeNode& node) {
    json out;
    out["code"] = json(node.code.entries());
    out["oneline"] = json(node.oneline);
    out["vexillary"] = node.vexillary;
    json children = json::array();
    for (const auto& [label, child] : node.children)
        children.push_back({{"edge", label}, {"node", tree_json(child)}});
    out["children"] = std::move(children);
    return out;
}

struct SelfcheckReport {
    long decide_pass = 0, decide_fail = 0;
    long count_pass = 0, count_fail = 0;
};

SelfcheckReport run_selfcheck(int n, int count_samples) {
    if (n < 1 || n > 6) throw UsageError("selfcheck supports 1 <= n <= 6");
    SelfcheckReport report;
    SchubertOracle oracle;
    CoefficientCounter counter;
    std::mt19937 rng(12345);
    OneLine w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        const Code code = oneline_to_code(w);
        const SparsePoly poly = oracle.polynomial(w);
        const int total = static_cast<int>(code.box_count());
        std::vector<ContentVec> contents;
        {
            ContentVec cur(n, 0);
            auto rec = [&](auto&& self, int pos, int left) -> void {
                if (pos == n - 1) {
                    cur[pos] = left;
                    contents.push_back(cur);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    cur[pos] = v;
                    self(self, pos + 1, left - v);
                }
            };
            rec(rec, 0, total);
        }
        std::shuffle(contents.begin(), contents.end(), rng);
        int counted = 0;
        for (const ContentVec& alpha : contents) {
            const mpz_class truth = poly.coefficient_padded(alpha);
            if (decide_nonvanishing(code, alpha) == (truth > 0))
                ++report.decide_pass;
            else
                ++report.decide_fail;
            if (counted < count_samples) {
                ++counted;
                if (counter.count(code, alpha) == truth)
                    ++report.count_pass;
                else
                    ++report.count_fail;
            }
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert coefficient vanishing, counting, and witnesses"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string code_text, alpha_text;
    bool trivial = false;
    bool from_stdin = false;
    std::string engine_name = "auto";

    auto* decide = app.add_subcommand("decide", "is the coefficient nonzero?");
    decide->add_option("--code", code_text, "comma-separated Lehmer code");
    decide->add_option("--alpha", alpha_text, "comma-separated exponent vector");
    decide->add_flag("--trivial-compression", trivial, "one class per column");
    decide->add_option("--engine", engine_name, "auto|simplex|flow");
    decide->add_flag("--stdin", from_stdin, "batch: one 'code alpha' pair per line");

    auto* count = app.add_subcommand("count", "exact coefficient value");
    count->add_option("--code", code_text, "comma-separated Lehmer code");
    count->add_option("--alpha", alpha_text, "comma-separated exponent vector");
    count->add_flag("--stdin", from_stdin, "batch: one 'code alpha' pair per line");

    auto* witness = app.add_subcommand("witness", "perfect tableau certificate");
    witness->add_option("--code", code_text, "comma-separated Lehmer code");
    witness->add_option("--alpha", alpha_text, "comma-separated exponent vector");
    witness->add_flag("--trivial-compression", trivial, "one class per column");

    auto* render = app.add_subcommand("render", "ASCII Rothe diagram");
    render->add_option("--code", code_text, "comma-separated Lehmer code");
    bool plain = false, rays = false;
    render->add_flag("--plain", plain, "boxes and dots only");
    render->add_flag("--rays", rays, "draw the hook rays");

    auto* tree = app.add_subcommand("tree", "branching tree of the recursion");
    tree->add_option("--code", code_text, "comma-separated Lehmer code");
    std::size_t max_nodes = 4096;
    tree->add_option("--max-nodes", max_nodes, "node budget");

    auto* selfcheck = app.add_subcommand("selfcheck", "oracle equivalence suites");
    int selfcheck_n = 5;
    int selfcheck_samples = 20;
    selfcheck->add_option("--n", selfcheck_n, "window size (<= 6)");
    selfcheck->add_option("--count-samples", selfcheck_samples,
                          "counting checks per permutation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decide->parsed()) {
            DecideOptions opts{trivial, parse_engine(engine_name)};
            auto answer = [&](const BatchQuery& q) -> std::string {
                const bool yes = decide_nonvanishing(Code(q.code), q.alpha, opts);
                if (!as_json) return yes ? "YES" : "NO";
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json(
                    "decide", q.code, q.alpha,
                    json{{"trivial_compression", trivial}, {"engine", engine_name}});
                payload["result"] = yes ? "YES" : "NO";
                return payload.dump();
            };
            if (from_stdin) return run_batch(answer);
            BatchQuery q{parse_int_list(code_text), parse_int_list(alpha_text)};
            const std::string out = answer(q);
            std::cout << out << '\n';
            const bool yes = out.find("\"result\":\"YES\"") != std::string::npos || out == "YES";
            return yes ? 0 : 1;
        }

        if (count->parsed()) {
            auto counter = std::make_shared<CoefficientCounter>();
            auto answer = [&, counter](const BatchQuery& q) -> std::string {
                Code code(q.code);
                if (code.length() > 12 || code.box_count() > 48)
                    throw UsageError("code beyond the counting budget (L <= 12, boxes <= 48)");
                const mpz_class value = counter->count(code, q.alpha);
                if (!as_json) return value.get_str();
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json("count", q.code, q.alpha, json());
                payload["result"] = value.get_str();
                return payload.dump();
            };
            if (from_stdin) return run_batch(answer);
            BatchQuery q{parse_int_list(code_text), parse_int_list(alpha_text)};
            std::cout << answer(q) << '\n';
            return 0;
        }

        if (witness->parsed()) {
            Code code(parse_int_list(code_text));
            if (code.ambient() > 24)
                throw UsageError("code beyond the witness budget (ambient grid <= 24)");
            std::vector<int> alpha = parse_int_list(alpha_text);
            DecideOptions opts{trivial, DecideEngine::Simplex};
            auto result = witness_perfect_tableau(code, alpha, opts);
            if (as_json) {
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json("witness", code.entries(), alpha,
                                              json{{"trivial_compression", trivial}});
                payload["result"] = result ? "YES" : "NONE";
                if (result) payload["witness"] = witness_json(*result);
                emit(payload);
            } else if (result) {
                std::cout << result->render();
            } else {
                std::cout << "NONE\n";
            }
            return result ? 0 : 1;
        }

        if (render->parsed()) {
            Code code(parse_int_list(code_text));
            if (code.ambient() > 200) throw UsageError("diagram too large to render");
            RenderOptions opts;
            opts.mark_essential = !plain;
            opts.rays = rays;
            const std::string text = render_diagram(code, opts);
            if (as_json) {
                Diagram d = rothe_diagram(code);
                json boxes = json::array();
                for (const Box& b : d.boxes()) boxes.push_back({b.row, b.col});
                json ess = json::array();
                for (const Box& b : essential_set(d)) ess.push_back({b.row, b.col});
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json("render", code.entries(), {}, json());
                payload["result"] =
                    json{{"rendering", text}, {"boxes", boxes}, {"essential", ess}};
                emit(payload);
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (tree->parsed()) {
            Code code(parse_int_list(code_text));
            TransitionTreeNode root = transition_tree(code, max_nodes);
            if (as_json) {
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json("tree", code.entries(), {}, json());
                payload["result"] = tree_json(root);
                emit(payload);
            } else {
                std::cout << render_tree_text(root);
            }
            return 0;
        }

        if (selfcheck->parsed()) {
            SelfcheckReport report = run_selfcheck(selfcheck_n, selfcheck_samples);
            const bool ok = report.decide_fail == 0 && report.count_fail == 0;
            if (as_json) {
                json payload;
                payload["schema"] = kSchemaVersion;
                payload["query"] = query_json("selfcheck", {}, {},
                                              json{{"n", selfcheck_n},
                                                   {"count_samples", selfcheck_samples}});
                payload["result"] = json{{"decide_pass", report.decide_pass},
                                         {"decide_fail", report.decide_fail},
                                         {"count_pass", report.count_pass},
                                         {"count_fail", report.count_fail},
                                         {"ok", ok}};
                emit(payload);
            } else {
                std::cout << "decide vs oracle: " << report.decide_pass << " passed, "
                          << report.decide_fail << " failed\n"
                          << "count vs oracle: " << report.count_pass << " passed, "
                          << report.count_fail << " failed\n"
                          << (ok ? "OK" : "FAILED") << '\n';
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
