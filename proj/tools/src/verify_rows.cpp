#include "rcx_cli/verify_rows.hpp"

#include <functional>

#include "rcx/constructions.hpp"
#include "rcx/params.hpp"

namespace rcx::cli {

namespace {

constexpr int kMaxR = 8;  // K_8 is the largest host the table needs

void check_int(RowResult& row, const std::string& name, int expected, int computed) {
    RowCheck c{name, std::to_string(expected), std::to_string(computed), expected == computed};
    row.pass = row.pass && c.pass;
    row.checks.push_back(std::move(c));
}

void check_true(RowResult& row, const std::string& name, bool ok) {
    RowCheck c{name, "true", ok ? "true" : "false", ok};
    row.pass = row.pass && c.pass;
    row.checks.push_back(std::move(c));
}

RowResult run_row(const std::string& id, const std::string& label,
                  const std::function<void(RowResult&)>& body) {
    RowResult row;
    row.id = id;
    row.label = label;
    try {
        body(row);
    } catch (const TimeoutError&) {
        row.timed_out = true;
        row.pass = false;
        row.checks.push_back({"(row aborted)", "completion", "timeout", false});
    } catch (const std::exception& e) {
        // An errored row is a failed row, identified here; it must not
        // take the whole run down with it.
        row.pass = false;
        row.checks.push_back({"(row aborted)", "completion", std::string("error: ") + e.what(),
                              false});
    }
    return row;
}

std::string pair_name(const char* what, const Pattern& f, const Pattern& h) {
    return std::string(what) + "(" + to_string(f) + "," + to_string(h) + ")";
}

const ClassSpec kStar{DeletionClass::Star};
const ClassSpec kMatching{DeletionClass::Matching};
const ClassSpec kPath{DeletionClass::Path};
const ClassSpec kComplete{DeletionClass::Complete};

std::string class_letter(ClassSpec cls) {
    switch (cls.kind) {
        case DeletionClass::Star: return "S";
        case DeletionClass::Matching: return "M";
        case DeletionClass::Path: return "P";
        case DeletionClass::Complete: return "K";
    }
    return "?";
}

}  // namespace

std::vector<RowResult> run_verification_rows(const VerifyConfig& config) {
    const SearchOptions& opts = config.opts;
    const bool full = config.full_tier;
    std::vector<RowResult> rows;

    rows.push_back(run_row("c01", "ramsey numbers: star vs star grid", [&](RowResult& row) {
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const int expected = (m % 2 == 0 && n % 2 == 0) ? m + n - 1 : m + n;
                const auto f = Pattern::star(m), h = Pattern::star(n);
                check_int(row, pair_name("R", f, h), expected, ramsey_number(f, h, kMaxR, opts));
            }
    }));

    rows.push_back(run_row("c02", "ramsey numbers: matching vs matching grid", [&](RowResult& row) {
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= n; ++m) {
                const int expected = 2 * n + m - 1;
                if (expected > (full ? 8 : 7)) continue;
                const auto f = Pattern::matching(m), h = Pattern::matching(n);
                check_int(row, pair_name("R", f, h), expected, ramsey_number(f, h, kMaxR, opts));
            }
    }));

    rows.push_back(run_row("c03", "arrowing: K5-M2 -> (M2,M2)", [&](RowResult& row) {
        SearchOptions o = opts;
        o.shape = HostShape{HostShape::Kind::MinusMatching, 5, 2};
        const auto host = delete_class_member(complete(5), kMatching, 2);
        const auto result = arrows(host, Pattern::matching(2), Pattern::matching(2), o);
        check_true(row, "arrows(K5-M2,M2,M2)", result.verdict == Verdict::Arrows);
    }));

    struct StarGridEntry {
        int m, n;
        bool full_only;
    };
    const std::vector<StarGridEntry> star_grid = {
        {2, 2, false}, {2, 4, false}, {4, 2, false}, {4, 4, true},
        {1, 2, false}, {2, 3, false}, {1, 4, false}, {3, 3, false}, {3, 4, true},
    };

    auto star_grid_row = [&](const std::string& id, const std::string& label, ClassSpec cls,
                             std::function<int(int, int)> expected_value, bool all_fast) {
        return run_row(id, label, [&](RowResult& row) {
            for (const auto& entry : star_grid) {
                if (!all_fast && entry.full_only && !full) continue;
                const auto f = Pattern::star(entry.m), h = Pattern::star(entry.n);
                const int r = ramsey_number(f, h, kMaxR, opts);
                const auto result = critical_number(cls, f, h, opts, r);
                check_int(row, pair_name(("R_" + class_letter(cls)).c_str(), f, h),
                          expected_value(entry.m, entry.n), result.value);
            }
        });
    };

    rows.push_back(star_grid_row(
        "c04", "star-critical numbers: star vs star", kStar,
        [](int m, int n) { return (m % 2 == 0 && n % 2 == 0) ? 0 : m + n - 2; }, false));

    rows.push_back(star_grid_row(
        "c05", "matching-critical numbers: star vs star", kMatching,
        [](int m, int n) { return (m % 2 == 0 && n % 2 == 0) ? 0 : (m + n - 1) / 2; }, false));

    rows.push_back(run_row("c06", "matching-critical numbers: matching vs matching",
                           [&](RowResult& row) {
        const std::vector<std::pair<int, int>> pairs = {{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
        for (const auto& [m, n] : pairs) {
            if (m == 3 && n == 3 && !full) continue;
            const auto f = Pattern::matching(m), h = Pattern::matching(n);
            const int r = ramsey_number(f, h, kMaxR, opts);
            const auto result = critical_number(kMatching, f, h, opts, r);
            check_int(row, pair_name("R_M", f, h), (2 * n + m - 1) / 2, result.value);
            // The scan always ends by running out of embeddable members here.
            check_true(row, pair_name("exhausts-K_r", f, h),
                       result.class_exhausted && result.value == r / 2);
        }
    }));

    rows.push_back(run_row("c07", "complete-critical numbers: star vs star",
                           [&](RowResult& row) {
        for (const auto& entry : star_grid) {
            const auto f = Pattern::star(entry.m), h = Pattern::star(entry.n);
            const int r = ramsey_number(f, h, kMaxR, opts);
            const auto result = critical_number(kComplete, f, h, opts, r);
            const int expected =
                (entry.m % 2 == 0 && entry.n % 2 == 0) ? 0 : entry.m + entry.n - 1;
            check_int(row, pair_name("R_K", f, h), expected, result.value);
        }
        const auto s1s1 = critical_number(kComplete, Pattern::star(1), Pattern::star(1), opts);
        check_int(row, "R_K(S1,S1)", 0, s1s1.value);
    }));

    rows.push_back(run_row("c08", "complete-critical numbers: matching vs matching",
                           [&](RowResult& row) {
        const std::vector<std::pair<int, int>> pairs = {{1, 2}, {2, 2}, {1, 3}, {2, 3}};
        for (const auto& [m, n] : pairs) {
            const auto f = Pattern::matching(m), h = Pattern::matching(n);
            const int r = ramsey_number(f, h, kMaxR, opts);
            const auto result = critical_number(kComplete, f, h, opts, r);
            check_int(row, pair_name("R_K", f, h), n, result.value);
        }
    }));

    rows.push_back(run_row("c09", "hook star-critical spot checks and the identity",
                           [&](RowResult& row) {
        struct Spot {
            Pattern f, h;
            int expected_r, expected_hook, expected_star_value;
        };
        const std::vector<Spot> spots = {
            {Pattern::matching(2), Pattern::matching(2), 5, 2, 2},
            {Pattern::path(4), Pattern::clique(3), 7, 4, 2},
            {Pattern::path(5), Pattern::cycle(4), 6, 3, 2},
            {Pattern::path(4), Pattern::path(4), 5, 2, 2},
        };
        for (const auto& spot : spots) {
            const int r = ramsey_number(spot.f, spot.h, kMaxR, opts);
            check_int(row, pair_name("R", spot.f, spot.h), spot.expected_r, r);
            const int hook = star_critical_hook(spot.f, spot.h, opts, r);
            check_int(row, pair_name("r*", spot.f, spot.h), spot.expected_hook, hook);
            const auto star = critical_number(kStar, spot.f, spot.h, opts, r);
            check_int(row, pair_name("R_S", spot.f, spot.h), spot.expected_star_value, star.value);
            check_true(row, pair_name("identity", spot.f, spot.h),
                       star.value == r - 1 - hook);
        }
        // Same quantity through the clique-union spelling of a matching.
        const auto two_k2 = Pattern::union_cliques(2, 2);
        check_int(row, "r*(2K2,2K2)", 2, star_critical_hook(two_k2, two_k2, opts, 5));
    }));

    rows.push_back(run_row("c10", "ramsey-full pairs on all four classes", [&](RowResult& row) {
        struct FullPair {
            Pattern f, h;
            int expected_r;
            bool full_only;
        };
        std::vector<FullPair> pairs = {
            {Pattern::clique(3), Pattern::clique(3), 6, false},
            {Pattern::clique(3), Pattern::matching(2), 5, false},
            {Pattern::union_cliques(2, 3), Pattern::clique(3), 8, true},
        };
        for (const auto& p : pairs) {
            if (p.full_only && !full) continue;
            const int r = ramsey_number(p.f, p.h, kMaxR, opts);
            check_int(row, pair_name("R", p.f, p.h), p.expected_r, r);
            for (ClassSpec cls : {kStar, kMatching, kPath, kComplete}) {
                const auto result = critical_number(cls, p.f, p.h, opts, r);
                check_int(row, pair_name(("R_" + class_letter(cls)).c_str(), p.f, p.h), 0,
                          result.value);
            }
        }
    }));

    rows.push_back(run_row("c11", "extremal coloring constructions and profiles",
                           [&](RowResult& row) {
        // Star targets, both even: coloring of the complete graph one
        // below the Ramsey number, plus its one-missing-edge extension.
        for (int m = 2; m + 2 <= 10; m += 2)
            for (int n = 2; m + n <= 10; n += 2) {
                const auto f = Pattern::star(m), h = Pattern::star(n);
                const auto c = star_even_coloring(m, n);
                bool profile = c.host == complete(m + n - 2);
                const Graph red = c.red_graph(), blue = c.blue_graph();
                int low = 0, high = 0;
                for (int v = 0; v < c.host.order(); ++v) {
                    if (red.degree(v) == m - 2 && blue.degree(v) == n - 1) ++low;
                    if (red.degree(v) == m - 1 && blue.degree(v) == n - 2) ++high;
                }
                profile = profile && low == m - 2 && high == n;
                check_true(row, pair_name("even-free", f, h), verify_free(c, f, h).free);
                check_true(row, pair_name("even-profile", f, h), profile);

                const auto ext = star_even_extension_coloring(m, n);
                const bool host_shape = ext.host.order() == m + n - 1 &&
                                        ext.host.size() == (m + n - 1) * (m + n - 2) / 2 - 1;
                check_true(row, pair_name("ext-free", f, h), verify_free(ext, f, h).free);
                check_true(row, pair_name("ext-host", f, h), host_shape);
            }
        // Star targets, both odd: complete graph minus a perfect matching.
        for (int m = 1; m <= 9; m += 2)
            for (int n = 1; m + n <= 10; n += 2) {
                if (m + n < 4) continue;
                const auto f = Pattern::star(m), h = Pattern::star(n);
                const auto c = star_odd_coloring(m, n);
                const Graph red = c.red_graph(), blue = c.blue_graph();
                bool regular = true;
                for (int v = 0; v < c.host.order(); ++v)
                    regular = regular && red.degree(v) == m - 1 && blue.degree(v) == n - 1;
                check_true(row, pair_name("odd-free", f, h), verify_free(c, f, h).free);
                check_true(row, pair_name("odd-regular", f, h), regular);
            }
        // Matching targets: join coloring on the clique-punctured host.
        for (int n = 2; 2 * n <= 9; ++n)
            for (int m = 1; m <= n && 2 * n + m - 1 <= 9; ++m) {
                const auto f = Pattern::matching(m), h = Pattern::matching(n);
                const auto c = matching_join_coloring(m, n);
                check_true(row, pair_name("join-free", f, h), verify_free(c, f, h).free);
                check_true(row, pair_name("join-matchings", f, h),
                           max_matching(c.red_graph()) <= m - 1 &&
                               max_matching(c.blue_graph()) <= n - 1);
            }
    }));

    rows.push_back(run_row("c12", "star-critical upper bound inequality", [&](RowResult& row) {
        struct GoodPair {
            Pattern f, h;
            bool full_only;
        };
        const std::vector<GoodPair> pairs = {
            {Pattern::clique(3), Pattern::path(4), false},
            {Pattern::path(4), Pattern::path(4), false},
            {Pattern::cycle(4), Pattern::path(5), false},
            {Pattern::clique(3), Pattern::path(5), true},  // needs K_9 hosts
        };
        for (const auto& p : pairs) {
            if (p.full_only && !full) continue;
            SearchOptions local = opts;
            const Graph fg = pattern_graph(p.f), hg = pattern_graph(p.h);
            local.edge_cap = std::max(local.edge_cap, 36);
            const int r = ramsey_number(p.f, p.h, max_searchable_order(local), local);
            check_true(row, pair_name("good", p.f, p.h), is_ramsey_good(fg, hg, r));
            const auto star = critical_number(kStar, p.f, p.h, local, r);
            const int bound = star_critical_upper_bound(fg, hg);
            RowCheck c{pair_name("R_S<=bound", p.f, p.h),
                       "<=" + std::to_string(bound), std::to_string(star.value),
                       star.value <= bound};
            row.pass = row.pass && c.pass;
            row.checks.push_back(std::move(c));
        }
    }));

    return rows;
}

}  // namespace rcx::cli
