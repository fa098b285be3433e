#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rcx/constructions.hpp"
#include "rcx/critical.hpp"

using namespace rcx;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("rcx_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("even star coloring") {
    SUBCASE("(2,2) is the single red edge on K2") {
        const auto c = star_even_coloring(2, 2);
        CHECK(c.host.order() == 2);
        CHECK(c.red.size() == 1);
        CHECK(c.blue.empty());
        CHECK(verify_free(c, Pattern::star(2), Pattern::star(2)).free);
    }
    SUBCASE("(2,4): red perfect matching, blue the rest of K4") {
        const auto c = star_even_coloring(2, 4);
        CHECK(c.host.order() == 4);
        CHECK(c.red.size() == 2);
        CHECK(c.blue.size() == 4);
        const Graph blue = c.blue_graph();
        for (int v = 0; v < 4; ++v) CHECK(blue.degree(v) == 2);
        CHECK(verify_free(c, Pattern::star(2), Pattern::star(4)).free);
    }
    SUBCASE("(4,2): red degrees within profile") {
        const auto c = star_even_coloring(4, 2);
        const Graph red = c.red_graph(), blue = c.blue_graph();
        CHECK(red.max_degree() <= 3);
        CHECK(blue.max_degree() <= 1);
        CHECK(verify_free(c, Pattern::star(4), Pattern::star(2)).free);
    }
    SUBCASE("degree profile across the even grid") {
        for (int m = 2; m <= 8; m += 2)
            for (int n = 2; m + n <= 10; n += 2) {
                const auto c = star_even_coloring(m, n);
                const Graph red = c.red_graph(), blue = c.blue_graph();
                int low = 0, high = 0;
                for (int v = 0; v < c.host.order(); ++v) {
                    if (red.degree(v) == m - 2 && blue.degree(v) == n - 1) ++low;
                    if (red.degree(v) == m - 1 && blue.degree(v) == n - 2) ++high;
                }
                CHECK(low == m - 2);
                CHECK(high == n);
                CHECK(verify_free(c, Pattern::star(m), Pattern::star(n)).free);
            }
    }
    CHECK_THROWS_AS(star_even_coloring(3, 2), std::invalid_argument);
}

TEST_CASE("even star extension coloring") {
    SUBCASE("(2,2) gives the two-edge path") {
        const auto c = star_even_extension_coloring(2, 2);
        CHECK(c.host.order() == 3);
        CHECK(c.host.size() == 2);
        CHECK(c.red.size() == 1);
        CHECK(c.blue.size() == 1);
        CHECK(verify_free(c, Pattern::star(2), Pattern::star(2)).free);
    }
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {4, 2}, {4, 4}}) {
        const auto c = star_even_extension_coloring(m, n);
        CHECK(c.host.order() == m + n - 1);
        CHECK(c.host.size() == (m + n - 1) * (m + n - 2) / 2 - 1);
        CHECK(verify_free(c, Pattern::star(m), Pattern::star(n)).free);
    }
}

TEST_CASE("odd star coloring") {
    SUBCASE("(1,3): red empty, blue a 4-cycle") {
        const auto c = star_odd_coloring(1, 3);
        CHECK(c.host.order() == 4);
        CHECK(c.red.empty());
        CHECK(c.blue.size() == 4);
        CHECK(c.blue_graph().max_degree() == 2);
        CHECK(verify_free(c, Pattern::star(1), Pattern::star(3)).free);
    }
    SUBCASE("(3,1) mirrors it") {
        const auto c = star_odd_coloring(3, 1);
        CHECK(c.red.size() == 4);
        CHECK(c.blue.empty());
        CHECK(verify_free(c, Pattern::star(3), Pattern::star(1)).free);
    }
    SUBCASE("regularity across the odd grid") {
        for (int m = 1; m <= 9; m += 2)
            for (int n = 1; m + n <= 10; n += 2) {
                if (m + n < 4) continue;
                const auto c = star_odd_coloring(m, n);
                const Graph red = c.red_graph(), blue = c.blue_graph();
                for (int v = 0; v < c.host.order(); ++v) {
                    CHECK(red.degree(v) == m - 1);
                    CHECK(blue.degree(v) == n - 1);
                }
                // Host misses exactly the diagonal perfect matching.
                CHECK(c.host.size() == (m + n) * (m + n - 1) / 2 - (m + n) / 2);
                CHECK(verify_free(c, Pattern::star(m), Pattern::star(n)).free);
            }
    }
    CHECK_THROWS_AS(star_odd_coloring(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(star_odd_coloring(1, 1), std::invalid_argument);
}

TEST_CASE("matching join coloring") {
    SUBCASE("(2,2): complementary stars on K5 minus a triangle") {
        const auto c = matching_join_coloring(2, 2);
        CHECK(is_isomorphic(c.host, delete_class_member(complete(5), {DeletionClass::Complete}, 3)));
        CHECK(max_matching(c.red_graph()) == 1);
        CHECK(max_matching(c.blue_graph()) == 1);
        CHECK(verify_free(c, Pattern::matching(2), Pattern::matching(2)).free);
    }
    SUBCASE("(1,2): red side empty") {
        const auto c = matching_join_coloring(1, 2);
        CHECK(c.red.empty());
        CHECK(verify_free(c, Pattern::matching(1), Pattern::matching(2)).free);
    }
    SUBCASE("matching numbers across the grid") {
        for (int n = 2; n <= 4; ++n)
            for (int m = 1; m <= n && 2 * n + m - 1 <= 9; ++m) {
                const auto c = matching_join_coloring(m, n);
                CHECK(max_matching(c.red_graph()) <= m - 1);
                CHECK(max_matching(c.blue_graph()) <= n - 1);
                CHECK(verify_free(c, Pattern::matching(m), Pattern::matching(n)).free);
            }
    }
    CHECK_THROWS_AS(matching_join_coloring(3, 2), std::invalid_argument);
}

TEST_CASE("constructions agree with the engine") {
    // The search must also refute arrowing on each construction's host,
    // with its own (possibly different) verified witness.
    SearchOptions o;
    o.deterministic = false;
    struct Case {
        TwoColoring c;
        Pattern f, h;
    };
    const std::vector<Case> cases = {
        {star_even_coloring(2, 4), Pattern::star(2), Pattern::star(4)},
        {star_odd_coloring(3, 3), Pattern::star(3), Pattern::star(3)},
        {matching_join_coloring(2, 3), Pattern::matching(2), Pattern::matching(3)},
    };
    for (const auto& kase : cases) {
        const auto res = arrows(kase.c.host, kase.f, kase.h, o);
        CHECK(res.verdict == Verdict::NotArrows);
        REQUIRE(res.witness.has_value());
        CHECK(verify_free(*res.witness, kase.f, kase.h).free);
    }
}

TEST_CASE("certificate round trip") {
    const auto c = matching_join_coloring(2, 2);
    const auto claim = Claim::free(Pattern::matching(2), Pattern::matching(2));
    const std::string bytes = serialize_certificate(c, claim, "matching-join m=2 n=2");
    CHECK(bytes == serialize_certificate(c, claim, "matching-join m=2 n=2"));

    std::istringstream in(bytes);
    const Certificate cert = parse_certificate(in);
    CHECK(cert.coloring == c);
    CHECK(cert.claim == claim);
    CHECK(cert.note == "matching-join m=2 n=2");
    CHECK(serialize_certificate(cert.coloring, cert.claim, cert.note) == bytes);
}

TEST_CASE("check-certificate re-proves and catches tampering") {
    const auto c = matching_join_coloring(2, 2);
    const auto claim = Claim::free(Pattern::matching(2), Pattern::matching(2));
    TempFile file("cert_roundtrip.cert");
    write_certificate(c, claim, "matching-join m=2 n=2", file.path);
    const auto ok = check_certificate(file.path);
    CHECK(ok.ok);

    // Flip one blue edge to red: either a red matching of two appears or
    // the partition stays fine but the claim must now fail.
    std::ifstream in(file.path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto pos = text.find("blue");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "red");
    TempFile tampered("cert_tampered.cert");
    {
        std::ofstream out(tampered.path, std::ios::binary);
        out << text;
    }
    const auto bad = check_certificate(tampered.path);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.has_value());
    CHECK(bad.violation_in_red);
}

TEST_CASE("trivial one-vertex certificate") {
    const TwoColoring empty(complete(1), {}, {});
    const auto claim = Claim::free(Pattern::star(1), Pattern::star(1));
    TempFile file("cert_empty.cert");
    write_certificate(empty, claim, "", file.path);
    CHECK(check_certificate(file.path).ok);
}

TEST_CASE("parse errors carry line numbers") {
    auto parse_text = [](const std::string& text) {
        std::istringstream in(text);
        return parse_certificate(in);
    };
    CHECK_THROWS_WITH_AS(parse_text("bogus\n"), "line 1: expected header 'rcx-cert 1'",
                         CertificateParseError);
    try {
        parse_text("rcx-cert 1\nn 3\n0 1 red\n0 1 blue\n1 2 red\n");
        FAIL("expected a parse error");
    } catch (const CertificateParseError& e) {
        CHECK(e.line() == 4);
    }
    try {
        parse_text("rcx-cert 1\nn 2\n0 1 purple\n");
        FAIL("expected a parse error");
    } catch (const CertificateParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_text("rcx-cert 1\nn 2\n0 1 red\nclaim free S1\n"),
                    CertificateParseError);
}

#ifdef RCX_GOLDEN_DIR
TEST_CASE("golden certificates pin the normal form") {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string dir = RCX_GOLDEN_DIR;
    CHECK(serialize_certificate(matching_join_coloring(2, 2),
                                Claim::free(Pattern::matching(2), Pattern::matching(2)),
                                "matching-join m=2 n=2") ==
          slurp(dir + "/matching-join-2-2.cert"));
    CHECK(serialize_certificate(star_odd_coloring(3, 3),
                                Claim::free(Pattern::star(3), Pattern::star(3)),
                                "star-odd m=3 n=3 absent=diagonal difference 3") ==
          slurp(dir + "/star-odd-3-3.cert"));
    CHECK(check_certificate(dir + "/matching-join-2-2.cert").ok);
    CHECK(check_certificate(dir + "/star-odd-3-3.cert").ok);
}
#endif

TEST_CASE("write refuses an unverified claim") {
    const Graph k3 = complete(3);
    const TwoColoring all_red(k3, k3.edges(), {});
    TempFile file("cert_badclaim.cert");
    CHECK_THROWS_AS(write_certificate(all_red, Claim::free(Pattern::star(2), Pattern::star(2)),
                                      "", file.path),
                    std::invalid_argument);
}
