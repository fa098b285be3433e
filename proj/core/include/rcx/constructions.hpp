#pragma once

#include <iosfwd>
#include <string>

#include "rcx/arrow.hpp"

namespace rcx {

// Explicit extremal colorings. Each returns a verified-free coloring
// witnessing one of the critical values; tests additionally pin the
// degree, regularity and matching-number profiles.

/// (S_m,S_n)-free coloring of K_{m+n-2} for even m, n: red is the
/// circulant with differences 1..(m-2)/2 plus an (n/2)-edge matching
/// taken inside its complement, blue is the rest. Leaves m-2 vertices
/// at red degree m-2 and n vertices at red degree m-1.
TwoColoring star_even_coloring(int m, int n);

/// Extends star_even_coloring by a pendant-complete vertex: red edges
/// to every vertex of red degree m-2, blue edges to all but the
/// lexicographically largest vertex of red degree m-1. The host is
/// K_{m+n-1} missing exactly one edge.
TwoColoring star_even_extension_coloring(int m, int n);

/// (S_m,S_n)-free coloring of K_{m+n} minus the diagonal perfect
/// matching, for odd m, n: on Z_{m+n}, differences 1..(m-1)/2 are red
/// and (m+1)/2..(m+n-2)/2 are blue. Red is (m-1)-regular, blue
/// (n-1)-regular.
TwoColoring star_odd_coloring(int m, int n);

/// (M_m,M_n)-free coloring of K_{2n+m-1} minus a clique on n+1
/// vertices, for n >= m >= 1, n >= 2: red is everything incident to an
/// (m-1)-vertex core of the complete part, blue the rest. Red matching
/// number <= m-1, blue <= n-1.
TwoColoring matching_join_coloring(int m, int n);

// -- certificate format -------------------------------------------------
//
// Line-oriented ASCII, single spaces, LF terminators:
//   rcx-cert 1
//   n <count>
//   <u> <v> red|blue|absent      (every u < v pair exactly once)
//   claim free <F> <H> | contains-red <F> | contains-blue <H>
//   note <free text>             (optional)

struct Claim {
    enum class Kind { Free, ContainsRed, ContainsBlue };
    Kind kind = Kind::Free;
    std::optional<Pattern> red_pattern;   // Free and ContainsRed
    std::optional<Pattern> blue_pattern;  // Free and ContainsBlue

    static Claim free(Pattern f, Pattern h);
    static Claim contains_red(Pattern f);
    static Claim contains_blue(Pattern h);

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct Certificate {
    TwoColoring coloring;
    Claim claim;
    std::string note;
};

class CertificateParseError : public std::runtime_error {
public:
    CertificateParseError(const std::string& what, int line);
    int line() const { return line_; }

private:
    int line_;
};

/// Canonical byte form; writing the same certificate twice is
/// byte-identical.
std::string serialize_certificate(const TwoColoring& c, const Claim& claim,
                                  const std::string& note);

/// Re-proves the claim with the detectors, then writes. Throws if the
/// claim fails.
void write_certificate(const TwoColoring& c, const Claim& claim, const std::string& note,
                       const std::string& path);

Certificate parse_certificate(std::istream& in);
Certificate read_certificate(const std::string& path);

struct CertificateCheck {
    bool ok = false;
    std::string message;
    bool violation_in_red = false;
    std::optional<WitnessSubgraph> violation;
    Claim claim;
};

/// Full from-scratch recheck: parses, validates the edge partition and
/// re-runs the relevant detectors. Never trusts the stored claim.
CertificateCheck check_certificate(const std::string& path);

}  // namespace rcx
