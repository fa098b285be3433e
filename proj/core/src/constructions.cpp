#include "rcx/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rcx {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

std::vector<int> circulant_diffs_up_to(int lo, int hi) {
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
}

}  // namespace

TwoColoring star_even_coloring(int m, int n) {
    require(m >= 2 && n >= 2, "even star coloring needs m, n >= 2");
    require(m % 2 == 0 && n % 2 == 0, "even star coloring needs even m and n");
    const int order = m + n - 2;
    const Graph host = complete(order);
    const Graph red_base = circulant(order, circulant_diffs_up_to(1, (m - 2) / 2));
    const Graph co = complement(red_base);  // (n-1)-regular

    // Matching of n/2 edges inside the complement, covering the vertices
    // that take red degree m-1. Preferred choice: pair i with i + n/2 on
    // the first n vertices, which lies in the complement exactly when
    // n/2 exceeds (m-2)/2. Otherwise any matching works for the degree
    // profile; the exhaustive finder keeps the choice deterministic.
    std::vector<EdgeId> matching;
    if (n / 2 > (m - 2) / 2) {
        for (int i = 0; i < n / 2; ++i) matching.push_back(make_edge(i, i + n / 2));
        for (const auto& e : matching) require(co.has_edge(e.u, e.v), "diagonal matching left the complement");
    } else {
        auto found = find_matching_in(co, co.vertex_mask(), n / 2);
        require(found.has_value(), "complement has no matching of the required size");
        matching = *found;
    }

    std::vector<EdgeId> red = red_base.edges();
    red.insert(red.end(), matching.begin(), matching.end());
    std::vector<EdgeId> blue;
    std::sort(matching.begin(), matching.end());
    for (const auto& e : co.edges())
        if (!std::binary_search(matching.begin(), matching.end(), e)) blue.push_back(e);
    return TwoColoring(host, std::move(red), std::move(blue));
}

TwoColoring star_even_extension_coloring(int m, int n) {
    const TwoColoring base = star_even_coloring(m, n);
    const int order = m + n - 1;
    const int v = order - 1;  // the added vertex
    const Graph base_red = base.red_graph();

    std::vector<int> low_red, high_red;  // red degree m-2 vs m-1 in the base
    for (int u = 0; u < base.host.order(); ++u)
        (base_red.degree(u) == m - 2 ? low_red : high_red).push_back(u);

    std::vector<EdgeId> red = base.red;
    std::vector<EdgeId> blue = base.blue;
    for (int u : low_red) red.push_back(make_edge(u, v));
    for (size_t i = 0; i + 1 < high_red.size(); ++i) blue.push_back(make_edge(high_red[i], v));
    // Host: complete minus the one edge from v to the largest high-red vertex.
    GraphBuilder hb(order);
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b) hb.add_edge(a, b);
    hb.remove_edge(high_red.back(), v);
    return TwoColoring(hb.build(), std::move(red), std::move(blue));
}

TwoColoring star_odd_coloring(int m, int n) {
    require(m >= 1 && n >= 1, "odd star coloring needs m, n >= 1");
    require(m % 2 == 1 && n % 2 == 1, "odd star coloring needs odd m and n");
    require(m + n >= 4, "odd star coloring needs m + n >= 4");
    const int order = m + n;
    // Differences 1..(m-1)/2 red, (m+1)/2..(m+n-2)/2 blue; the diagonal
    // difference order/2 is the one class in neither set, so the host is
    // the complete graph minus that perfect matching.
    const Graph red_g = circulant(order, circulant_diffs_up_to(1, (m - 1) / 2));
    const Graph blue_g = circulant(order, circulant_diffs_up_to((m + 1) / 2, (m + n - 2) / 2));
    GraphBuilder hb(order);
    for (const auto& e : red_g.edges()) hb.add_edge(e.u, e.v);
    for (const auto& e : blue_g.edges()) hb.add_edge(e.u, e.v);
    return TwoColoring(hb.build(), red_g.edges(), blue_g.edges());
}

TwoColoring matching_join_coloring(int m, int n) {
    require(n >= m && m >= 1 && n >= 2, "matching join coloring needs n >= m >= 1 and n >= 2");
    const int order = 2 * n + m - 1;
    const Graph host = delete_class_member(complete(order), {DeletionClass::Complete}, n + 1);
    // Complete part is n+1..order-1; its first m-1 vertices form the red
    // core, every host edge touching the core is red, the rest is blue.
    const int core_lo = n + 1;
    const int core_hi = n + m - 1;  // exclusive of blue part
    auto in_core = [&](int u) { return u >= core_lo && u <= core_hi; };
    std::vector<EdgeId> red, blue;
    for (const auto& e : host.edges()) {
        if (in_core(e.u) || in_core(e.v))
            red.push_back(e);
        else
            blue.push_back(e);
    }
    return TwoColoring(host, std::move(red), std::move(blue));
}

// -- certificates -------------------------------------------------------

Claim Claim::free(Pattern f, Pattern h) { return {Kind::Free, f, h}; }
Claim Claim::contains_red(Pattern f) { return {Kind::ContainsRed, f, std::nullopt}; }
Claim Claim::contains_blue(Pattern h) { return {Kind::ContainsBlue, std::nullopt, h}; }

CertificateParseError::CertificateParseError(const std::string& what, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string claim_text(const Claim& claim) {
    switch (claim.kind) {
        case Claim::Kind::Free:
            return "free " + to_string(*claim.red_pattern) + " " + to_string(*claim.blue_pattern);
        case Claim::Kind::ContainsRed: return "contains-red " + to_string(*claim.red_pattern);
        case Claim::Kind::ContainsBlue: return "contains-blue " + to_string(*claim.blue_pattern);
    }
    return "?";
}

bool claim_holds(const TwoColoring& c, const Claim& claim, CertificateCheck* report) {
    switch (claim.kind) {
        case Claim::Kind::Free: {
            const auto check = verify_free(c, *claim.red_pattern, *claim.blue_pattern);
            if (report && !check.free) {
                report->violation = check.violation;
                report->violation_in_red = check.violation_in_red;
            }
            return check.free;
        }
        case Claim::Kind::ContainsRed:
            return contains(c.red_graph(), *claim.red_pattern).has_value();
        case Claim::Kind::ContainsBlue:
            return contains(c.blue_graph(), *claim.blue_pattern).has_value();
    }
    return false;
}

}  // namespace

std::string serialize_certificate(const TwoColoring& c, const Claim& claim,
                                  const std::string& note) {
    const int n = c.host.order();
    std::ostringstream out;
    out << "rcx-cert 1\n";
    out << "n " << n << "\n";
    auto tag_of = [&](EdgeId e) -> const char* {
        if (std::binary_search(c.red.begin(), c.red.end(), e)) return "red";
        if (std::binary_search(c.blue.begin(), c.blue.end(), e)) return "blue";
        return "absent";
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out << u << " " << v << " " << tag_of({u, v}) << "\n";
    out << "claim " << claim_text(claim) << "\n";
    if (!note.empty()) out << "note " << note << "\n";
    return out.str();
}

void write_certificate(const TwoColoring& c, const Claim& claim, const std::string& note,
                       const std::string& path) {
    if (!claim_holds(c, claim, nullptr))
        throw std::invalid_argument("refusing to write certificate: claim does not hold");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_certificate(c, claim, note);
}

Certificate parse_certificate(std::istream& in) {
    int lineno = 0;
    std::string line;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++lineno;
        return true;
    };
    auto fail = [&](const std::string& what) -> void { throw CertificateParseError(what, lineno); };

    if (!next_line() || line != "rcx-cert 1") fail("expected header 'rcx-cert 1'");
    if (!next_line()) fail("expected 'n <count>'");
    int n = 0;
    {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key >> n) || key != "n" || n < 1 || n > kMaxVertices)
            fail("expected 'n <count>' with count in 1.." + std::to_string(kMaxVertices));
        std::string extra;
        if (ls >> extra) fail("trailing tokens after vertex count");
    }

    const int pair_count = n * (n - 1) / 2;
    std::vector<int> seen(static_cast<size_t>(n) * n, 0);
    std::vector<EdgeId> red, blue;
    for (int i = 0; i < pair_count; ++i) {
        if (!next_line()) fail("expected " + std::to_string(pair_count) + " edge lines");
        std::istringstream ls(line);
        int u = -1, v = -1;
        std::string tag, extra;
        if (!(ls >> u >> v >> tag) || (ls >> extra)) fail("expected '<u> <v> red|blue|absent'");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v) fail("edge endpoints must satisfy 0 <= u < v < n");
        if (seen[u * n + v]++) fail("duplicate vertex pair");
        if (tag == "red")
            red.push_back({u, v});
        else if (tag == "blue")
            blue.push_back({u, v});
        else if (tag != "absent")
            fail("unknown edge tag '" + tag + "'");
    }

    if (!next_line()) fail("expected claim line");
    Claim claim;
    {
        std::istringstream ls(line);
        std::string key, kind;
        if (!(ls >> key >> kind) || key != "claim") fail("expected 'claim <kind> ...'");
        auto read_pattern = [&]() -> Pattern {
            std::string token;
            if (!(ls >> token)) fail("claim is missing a pattern token");
            auto p = parse_pattern(token);
            if (!p) fail("bad pattern token '" + token + "'");
            return *p;
        };
        if (kind == "free") {
            const Pattern f = read_pattern();
            const Pattern h = read_pattern();
            claim = Claim::free(f, h);
        } else if (kind == "contains-red") {
            claim = Claim::contains_red(read_pattern());
        } else if (kind == "contains-blue") {
            claim = Claim::contains_blue(read_pattern());
        } else {
            fail("unknown claim kind '" + kind + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens after claim");
    }

    std::string note;
    if (next_line()) {
        if (line.rfind("note ", 0) != 0) fail("expected optional 'note <text>' line");
        note = line.substr(5);
        if (next_line()) fail("unexpected content after note");
    }

    GraphBuilder hb(n);
    for (const auto& e : red) hb.add_edge(e.u, e.v);
    for (const auto& e : blue) {
        if (hb.has_edge(e.u, e.v)) fail("edge tagged both red and blue");
        hb.add_edge(e.u, e.v);
    }
    return Certificate{TwoColoring(hb.build(), std::move(red), std::move(blue)), claim,
                       std::move(note)};
}

Certificate read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_certificate(in);
}

CertificateCheck check_certificate(const std::string& path) {
    const Certificate cert = read_certificate(path);
    CertificateCheck out;
    out.claim = cert.claim;
    out.ok = claim_holds(cert.coloring, cert.claim, &out);
    if (out.ok) {
        out.message = "claim '" + claim_text(cert.claim) + "' re-proved from scratch";
    } else if (cert.claim.kind == Claim::Kind::Free) {
        out.message = std::string("claim '") + claim_text(cert.claim) + "' fails: " +
                      (out.violation_in_red ? "red" : "blue") + " side contains " +
                      to_string(out.violation->pattern);
    } else {
        out.message = "claim '" + claim_text(cert.claim) + "' fails: pattern not found";
    }
    return out;
}

}  // namespace rcx
