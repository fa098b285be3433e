#include "rcx_cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rcx/constructions.hpp"
#include "rcx/critical.hpp"
#include "rcx/params.hpp"
#include "rcx_cli/spec_parse.hpp"
#include "rcx_cli/verify_rows.hpp"

namespace rcx::cli {

namespace {

void kv(const std::string& key, const std::string& value) {
    std::cout << key << ": " << value << "\n";
}

void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << s;
    return out.str();
}

void print_stats(const SearchStats& stats) {
    kv("nodes", std::to_string(stats.nodes));
    kv("prunes", std::to_string(stats.prunes));
    kv("seconds", fmt_seconds(stats.seconds));
}

// Maps the error taxonomy onto exit statuses so that a verdict is never
// conflated with a failure.
int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const TimeoutError& e) {
        kv("error", std::string("timeout: ") + e.what());
        return kExitTimeout;
    } catch (const CertificateParseError& e) {
        kv("error", e.what());
        return kExitUsage;
    } catch (const SpecParseError& e) {
        kv("error", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        kv("error", e.what());
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        kv("error", e.what());
        return kExitUsage;
    }
}

std::optional<ClassSpec> class_by_name(const std::string& name) {
    if (name == "star") return ClassSpec{DeletionClass::Star};
    if (name == "matching") return ClassSpec{DeletionClass::Matching};
    if (name == "path") return ClassSpec{DeletionClass::Path};
    if (name == "complete") return ClassSpec{DeletionClass::Complete};
    return std::nullopt;
}

void emit_summary(const std::string& path, const std::vector<std::pair<std::string, std::string>>& fields) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& [k, v] : fields) out << k << ": " << v << "\n";
}

}  // namespace

SearchOptions GlobalOptions::to_search_options() const {
    SearchOptions o;
    o.threads = threads;
    o.timeout_seconds = timeout_seconds;
    o.deterministic = deterministic;
    o.use_hints = !no_hints;
    o.orbit_symmetry = !no_orbit_symmetry;
    o.color_swap_symmetry = !no_color_swap;
    o.deferred_full_checks = !no_deferred_checks;
    o.edge_cap = edge_cap;
    return o;
}

int cmd_arrows(const GlobalOptions& g, const std::string& host, const std::string& red,
               const std::string& blue, const std::string& witness_path) {
    return guarded([&] {
        const auto parsed = parse_graph_spec(host);
        const Pattern f = parse_pattern_spec(red);
        const Pattern h = parse_pattern_spec(blue);
        SearchOptions opts = g.to_search_options();
        opts.shape = parsed.shape;
        const auto result = arrows(parsed.graph, f, h, opts);
        kv("host", parsed.canonical);
        kv("red-pattern", to_string(f));
        kv("blue-pattern", to_string(h));
        kv("result", result.verdict == Verdict::Arrows ? "arrows" : "not-arrows");
        print_stats(result.stats);
        if (result.verdict == Verdict::NotArrows) {
            kv("canonical-witness", result.canonical_witness ? "true" : "false");
            if (!witness_path.empty()) {
                write_certificate(*result.witness, Claim::free(f, h),
                                  "search witness for " + parsed.canonical, witness_path);
                kv("witness", witness_path);
            }
        }
        return kExitOk;
    });
}

int cmd_ramsey(const GlobalOptions& g, const std::string& red, const std::string& blue,
               int max_r, bool fast, const std::string& emit_dir) {
    return guarded([&] {
        const Pattern f = parse_pattern_spec(red);
        const Pattern h = parse_pattern_spec(blue);
        const SearchOptions opts = g.to_search_options();
        const int limit = max_r > 0 ? max_r : max_searchable_order(opts);
        const auto closed = closed_form_ramsey(f, h);
        kv("red-pattern", to_string(f));
        kv("blue-pattern", to_string(h));
        if (fast && closed) {
            kv("ramsey", *closed);
            kv("method", "closed-form");
            return kExitOk;
        }
        const int r = ramsey_number(f, h, limit, opts);
        kv("ramsey", r);
        kv("method", "search");
        if (closed) kv("closed-form-cross-check", *closed == r ? "agrees" : "DISAGREES");
        if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            const std::string stem = emit_dir + "/ramsey-" + to_string(f) + "-" + to_string(h);
            // Bracket from below with a Ramsey coloring of K_{r-1}.
            if (r >= 2) {
                SearchOptions probe = opts;
                probe.shape = HostShape{HostShape::Kind::Complete, r - 1, 0};
                if (const auto witness = find_free_coloring(complete(r - 1), f, h, probe)) {
                    const std::string cert_path = stem + "-free.cert";
                    write_certificate(*witness, Claim::free(f, h),
                                      "Ramsey coloring of K" + std::to_string(r - 1), cert_path);
                    kv("failing-witness", cert_path);
                }
            }
            SearchOptions confirm = opts;
            confirm.shape = HostShape{HostShape::Kind::Complete, r, 0};
            const auto res = arrows(complete(r), f, h, confirm);
            const std::string summary_path = stem + "-summary.txt";
            emit_summary(summary_path, {{"red-pattern", to_string(f)},
                                        {"blue-pattern", to_string(h)},
                                        {"ramsey", std::to_string(r)},
                                        {"confirmed-nodes", std::to_string(res.stats.nodes)},
                                        {"confirmed-prunes", std::to_string(res.stats.prunes)},
                                        {"confirmed-seconds", fmt_seconds(res.stats.seconds)}});
            kv("summary", summary_path);
        }
        return kExitOk;
    });
}

int cmd_critical(const GlobalOptions& g, const std::string& cls_name, const std::string& red,
                 const std::string& blue, const std::string& emit_dir) {
    return guarded([&] {
        const auto cls = class_by_name(cls_name);
        if (!cls) throw std::invalid_argument("unknown class '" + cls_name +
                                              "' (star|matching|path|complete)");
        const Pattern f = parse_pattern_spec(red);
        const Pattern h = parse_pattern_spec(blue);
        const SearchOptions opts = g.to_search_options();
        const auto result = critical_number(*cls, f, h, opts);
        kv("class", cls_name);
        kv("red-pattern", to_string(f));
        kv("blue-pattern", to_string(h));
        kv("ramsey", result.r);
        if (const auto closed = closed_form_ramsey(f, h))
            kv("closed-form-cross-check", *closed == result.r ? "agrees" : "DISAGREES");
        kv("critical", result.value);
        kv("class-exhausted", result.class_exhausted ? "true" : "false");
        if (result.value > 0) {
            kv("confirmed-nodes", std::to_string(result.confirmation.nodes));
            kv("confirmed-seconds", fmt_seconds(result.confirmation.seconds));
        }
        if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            const std::string stem =
                emit_dir + "/" + cls_name + "-" + to_string(f) + "-" + to_string(h);
            if (result.failing_witness) {
                const int failing_index = result.value == 0 ? cls->min_index() : result.value + 1;
                const std::string cert_path = stem + "-free.cert";
                write_certificate(*result.failing_witness, Claim::free(f, h),
                                  "free coloring of K" + std::to_string(result.r) + " minus " +
                                      cls_name + "[" + std::to_string(failing_index) + "]",
                                  cert_path);
                kv("failing-witness", cert_path);
            }
            const std::string summary_path = stem + "-summary.txt";
            emit_summary(summary_path,
                         {{"class", cls_name},
                          {"red-pattern", to_string(f)},
                          {"blue-pattern", to_string(h)},
                          {"ramsey", std::to_string(result.r)},
                          {"critical", std::to_string(result.value)},
                          {"class-exhausted", result.class_exhausted ? "true" : "false"},
                          {"confirmed-nodes", std::to_string(result.confirmation.nodes)},
                          {"confirmed-prunes", std::to_string(result.confirmation.prunes)},
                          {"confirmed-seconds", fmt_seconds(result.confirmation.seconds)}});
            kv("summary", summary_path);
        }
        return kExitOk;
    });
}

int cmd_star_critical(const GlobalOptions& g, const std::string& red, const std::string& blue,
                      const std::string& emit_dir) {
    return guarded([&] {
        const Pattern f = parse_pattern_spec(red);
        const Pattern h = parse_pattern_spec(blue);
        const SearchOptions opts = g.to_search_options();
        const int r = ramsey_number(f, h, max_searchable_order(opts), opts);
        const int hook = star_critical_hook(f, h, opts, r);
        const auto star = critical_number({DeletionClass::Star}, f, h, opts, r);
        kv("red-pattern", to_string(f));
        kv("blue-pattern", to_string(h));
        kv("ramsey", r);
        kv("star-critical", hook);
        kv("star-class-critical", star.value);
        kv("identity", star.value == r - 1 - hook ? "holds" : "FAILS");
        if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            const std::string stem = emit_dir + "/star-critical-" + to_string(f) + "-" + to_string(h);
            if (hook >= 1) {
                SearchOptions probe = opts;
                probe.shape = HostShape{HostShape::Kind::BookJoin, r - 1, hook - 1};
                const auto witness = find_free_coloring(book_join(r - 1, hook - 1), f, h, probe);
                if (witness) {
                    const std::string cert_path = stem + "-free.cert";
                    write_certificate(*witness, Claim::free(f, h),
                                      "free coloring of K" + std::to_string(r - 1) + "+S" +
                                          std::to_string(hook - 1),
                                      cert_path);
                    kv("failing-witness", cert_path);
                }
            }
            const std::string summary_path = stem + "-summary.txt";
            emit_summary(summary_path, {{"red-pattern", to_string(f)},
                                        {"blue-pattern", to_string(h)},
                                        {"ramsey", std::to_string(r)},
                                        {"star-critical", std::to_string(hook)},
                                        {"star-class-critical", std::to_string(star.value)}});
            kv("summary", summary_path);
        }
        return kExitOk;
    });
}

int cmd_params(const GlobalOptions& g, const std::string& graph_spec) {
    (void)g;
    return guarded([&] {
        // Accept either the host grammar (K5-M2, circ(8;1,2), ...) or a
        // bare pattern token (C4, P4, 2K3) taken as its concrete graph.
        const auto parsed = [&]() -> ParsedGraphSpec {
            try {
                return parse_graph_spec(graph_spec);
            } catch (const std::exception&) {
                if (auto p = parse_pattern(graph_spec))
                    return {pattern_graph(*p), std::nullopt, to_string(*p)};
                throw;
            }
        }();
        const Graph& gr = parsed.graph;
        if (gr.order() > kParamVertexLimit)
            throw std::invalid_argument("parameter computations are limited to " +
                                        std::to_string(kParamVertexLimit) + " vertices");
        kv("graph", parsed.canonical);
        kv("v", gr.order());
        kv("e", gr.size());
        kv("delta", gr.min_degree());
        kv("nu", max_matching(gr));
        kv("omega", max_clique(gr));
        kv("chi", chromatic_number(gr));
        kv("s", chromatic_surplus(gr));
        if (chromatic_number(gr) >= 2) {
            kv("tau", min_cross_class_degree(gr));
            kv("tau-interpretation", cross_class_degree_note());
        } else {
            kv("tau", "undefined (needs chi >= 2)");
        }
        return kExitOk;
    });
}

int cmd_construct(const GlobalOptions& g, const std::string& family, int m, int n,
                  const std::string& out_path) {
    (void)g;
    return guarded([&] {
        TwoColoring coloring = [&]() -> TwoColoring {
            if (family == "star-even") return star_even_coloring(m, n);
            if (family == "star-even-ext") return star_even_extension_coloring(m, n);
            if (family == "star-odd") return star_odd_coloring(m, n);
            if (family == "matching-join") return matching_join_coloring(m, n);
            throw std::invalid_argument(
                "unknown family '" + family +
                "' (star-even|star-even-ext|star-odd|matching-join)");
        }();
        const bool matching_targets = family == "matching-join";
        const Pattern f = matching_targets ? Pattern::matching(m) : Pattern::star(m);
        const Pattern h = matching_targets ? Pattern::matching(n) : Pattern::star(n);
        const auto check = verify_free(coloring, f, h);
        kv("family", family);
        kv("m", m);
        kv("n", n);
        kv("host-order", coloring.host.order());
        kv("host-size", coloring.host.size());
        kv("red-size", static_cast<int>(coloring.red.size()));
        kv("blue-size", static_cast<int>(coloring.blue.size()));
        kv("free-of", to_string(f) + "," + to_string(h));
        kv("verified", check.free ? "true" : "false");
        if (!check.free) return kExitMismatch;
        if (!out_path.empty()) {
            std::string note = family + " m=" + std::to_string(m) + " n=" + std::to_string(n);
            if (family == "star-even") {
                // Record which matching was folded into the red side: the
                // red edges whose circular difference exceeds (m-2)/2.
                const int order = coloring.host.order();
                note += " matching=";
                bool first = true;
                for (const auto& e : coloring.red) {
                    const int d = std::min((e.v - e.u) % order, (e.u - e.v + order) % order);
                    if (d > (m - 2) / 2) {
                        if (!first) note += ",";
                        note += std::to_string(e.u) + "-" + std::to_string(e.v);
                        first = false;
                    }
                }
            }
            if (family == "star-odd")
                note += " absent=diagonal difference " + std::to_string((m + n) / 2);
            write_certificate(coloring, Claim::free(f, h), note, out_path);
            kv("certificate", out_path);
        }
        return kExitOk;
    });
}

int cmd_check_cert(const GlobalOptions& g, const std::string& path) {
    (void)g;
    return guarded([&] {
        const auto check = check_certificate(path);
        kv("certificate", path);
        kv("verdict", check.ok ? "ok" : "mismatch");
        kv("detail", check.message);
        if (check.violation) {
            kv("violation-side", check.violation_in_red ? "red" : "blue");
            std::string vs;
            for (size_t i = 0; i < check.violation->vertices.size(); ++i) {
                if (i) vs += ",";
                vs += std::to_string(check.violation->vertices[i]);
            }
            kv("violation-vertices", vs);
        }
        return check.ok ? kExitOk : kExitMismatch;
    });
}

int cmd_verify_paper(const GlobalOptions& g, const std::string& tier) {
    return guarded([&] {
        if (tier != "fast" && tier != "full")
            throw std::invalid_argument("tier must be 'fast' or 'full'");
        VerifyConfig config;
        config.full_tier = tier == "full";
        config.opts = g.to_search_options();
        if (config.opts.timeout_seconds <= 0)
            config.opts.timeout_seconds = config.full_tier ? 900.0 : 10.0;
        const auto rows = run_verification_rows(config);
        int passed = 0;
        bool only_timeouts = true;
        for (const auto& row : rows) {
            for (const auto& check : row.checks)
                kv(row.id + "." + check.name, "expected=" + check.expected +
                                                  " computed=" + check.computed +
                                                  (check.pass ? " pass" : " FAIL"));
            kv(row.id, (row.pass ? "pass" : "FAIL") + std::string(" (") + row.label + ")");
            passed += row.pass ? 1 : 0;
            if (!row.pass && !row.timed_out) only_timeouts = false;
        }
        kv("tier", tier);
        kv("rows-passed", std::to_string(passed) + "/" + std::to_string(rows.size()));
        const bool all = passed == static_cast<int>(rows.size());
        kv("verify-paper", all ? "pass" : "FAIL");
        if (all) return kExitOk;
        return only_timeouts ? kExitTimeout : kExitMismatch;
    });
}

}  // namespace rcx::cli
