#include "rcx_cli/spec_parse.hpp"

#include <cctype>

#include "rcx/constructions.hpp"

namespace rcx::cli {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    int column() const { return static_cast<int>(pos_) + 1; }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw SpecParseError(std::string("expected ") + what, column());
    }

    int read_int(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SpecParseError(std::string("expected ") + what, column());
        long value = 0;
        const int start = column();
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
            if (value > 1000000) throw SpecParseError("number too large", start);
        }
        return static_cast<int>(value);
    }

    std::string rest() {
        std::string out = text_.substr(pos_);
        pos_ = text_.size();
        return out;
    }

    bool starts_with(const char* prefix) const { return text_.rfind(prefix, 0) == 0; }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

int checked_order(int r, int column) {
    if (r < 1 || r > kMaxVertices)
        throw SpecParseError("vertex count must be in 1.." + std::to_string(kMaxVertices), column);
    return r;
}

}  // namespace

ParsedGraphSpec parse_graph_spec(const std::string& text) {
    Cursor c(text);
    if (c.starts_with("file:")) {
        for (int i = 0; i < 5; ++i) c.eat(text[i]);
        const std::string path = c.rest();
        if (path.empty()) throw SpecParseError("expected a path after 'file:'", c.column());
        Certificate cert = read_certificate(path);
        return {cert.coloring.host, std::nullopt, "file:" + path};
    }
    if (c.starts_with("circ(")) {
        for (int i = 0; i < 5; ++i) c.eat(text[i]);
        const int kcol = c.column();
        const int k = checked_order(c.read_int("vertex count"), kcol);
        c.expect(';', "';' after the vertex count");
        std::vector<int> diffs;
        std::string canonical = "circ(" + std::to_string(k) + ";";
        if (c.peek() != ')') {
            for (;;) {
                const int dcol = c.column();
                const int d = c.read_int("difference");
                if (d < 1 || d > k / 2)
                    throw SpecParseError("difference must be in 1.." + std::to_string(k / 2), dcol);
                if (!diffs.empty()) canonical += ",";
                canonical += std::to_string(d);
                diffs.push_back(d);
                if (!c.eat(',')) break;
            }
        }
        c.expect(')', "')'");
        if (!c.done()) throw SpecParseError("trailing characters", c.column());
        canonical += ")";
        return {circulant(k, diffs), std::nullopt, canonical};
    }

    c.expect('K', "'K', 'circ(' or 'file:'");
    const int rcol = c.column();
    const int r = checked_order(c.read_int("vertex count"), rcol);
    if (c.done()) return {complete(r), HostShape{HostShape::Kind::Complete, r, 0},
                          "K" + std::to_string(r)};

    if (c.eat('+')) {
        c.expect('S', "'S' after '+'");
        const int kcol = c.column();
        const int k = c.read_int("pendant degree");
        if (!c.done()) throw SpecParseError("trailing characters", c.column());
        if (k > r) throw SpecParseError("pendant degree exceeds the complete part", kcol);
        checked_order(r + 1, rcol);
        return {book_join(r, k), HostShape{HostShape::Kind::BookJoin, r, k},
                "K" + std::to_string(r) + "+S" + std::to_string(k)};
    }

    c.expect('-', "'-', '+' or end of spec");
    const char which = c.peek();
    DeletionClass cls;
    HostShape::Kind kind;
    switch (which) {
        case 'S': cls = DeletionClass::Star; kind = HostShape::Kind::MinusStar; break;
        case 'M': cls = DeletionClass::Matching; kind = HostShape::Kind::MinusMatching; break;
        case 'P': cls = DeletionClass::Path; kind = HostShape::Kind::MinusPath; break;
        case 'K': cls = DeletionClass::Complete; kind = HostShape::Kind::MinusClique; break;
        default: throw SpecParseError("expected one of S, M, P, K after '-'", c.column());
    }
    c.eat(which);
    const int icol = c.column();
    const int idx = c.read_int("class index");
    if (!c.done()) throw SpecParseError("trailing characters", c.column());
    const ClassSpec spec{cls};
    if (idx < spec.min_index())
        throw SpecParseError("class index below minimum " + std::to_string(spec.min_index()), icol);
    if (class_member_order(spec, idx) > r)
        throw SpecParseError("deleted member does not embed in K" + std::to_string(r), icol);
    return {delete_class_member(complete(r), spec, idx), HostShape{kind, r, idx},
            "K" + std::to_string(r) + "-" + which + std::to_string(idx)};
}

Pattern parse_pattern_spec(const std::string& text) {
    auto p = parse_pattern(text);
    if (!p) throw SpecParseError("bad pattern '" + text + "'", 1);
    return *p;
}

}  // namespace rcx::cli
