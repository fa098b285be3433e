#pragma once

#include <optional>

#include "rcx/arrow.hpp"

namespace rcx {

/// Outcome of a deletion-class scan. value 0 means no class member
/// keeps the arrowing alive; otherwise arrowing holds at `value` and
/// fails at value+1 unless value+1 no longer embeds in K_r
/// (class_exhausted). Certificates for both sides of the bracket are
/// kept: the free coloring at the failing index and the statistics of
/// the confirming run at the last good index.
struct CriticalResult {
    ClassSpec cls;
    Pattern f;
    Pattern h;
    int r = 0;
    int value = 0;
    bool class_exhausted = false;
    std::optional<TwoColoring> failing_witness;
    SearchStats confirmation;
};

/// Largest complete-graph order whose edge count stays within the cap.
int max_searchable_order(const SearchOptions& opts);

/// Least r with K_r -> (f, h), by upward scan from max(2, v(f), v(h));
/// the scan is valid because arrowing is monotone in r. Throws
/// std::runtime_error when max_r is exhausted first.
int ramsey_number(const Pattern& f, const Pattern& h, int max_r, const SearchOptions& opts = {});

/// Known closed forms for star-star and matching-matching pairs, used
/// as cross-checks against the searched value (and as the value itself
/// only when a caller explicitly asks for the fast path).
std::optional<int> closed_form_ramsey(const Pattern& f, const Pattern& h);

/// Scans class indices upward while the member embeds into K_r and the
/// punctured host still arrows. Valid because members are nested, so
/// arrowing is monotone non-increasing in the index.
CriticalResult critical_number(ClassSpec cls, const Pattern& f, const Pattern& h,
                               const SearchOptions& opts = {},
                               std::optional<int> precomputed_r = std::nullopt);

/// Least k with K_{r-1} plus a degree-k pendant vertex arrowing (f, h).
/// Monotone non-decreasing in k, so the upward scan stops at the first
/// success (k = r-1 recovers K_r and always succeeds).
int star_critical_hook(const Pattern& f, const Pattern& h, const SearchOptions& opts = {},
                       std::optional<int> precomputed_r = std::nullopt);

/// Confirms star-class critical number == R - 1 - hook star-critical.
bool check_star_critical_identity(const Pattern& f, const Pattern& h,
                                  const SearchOptions& opts = {});

/// True iff even the smallest class member breaks the arrowing.
bool is_ramsey_full(ClassSpec cls, const Pattern& f, const Pattern& h,
                    const SearchOptions& opts = {});

/// C(r,2) - C(R_complete,2), with C(m,2) = 0 for m < 2: an upper bound
/// on the size Ramsey number.
int size_ramsey_upper_bound(const Pattern& f, const Pattern& h, const SearchOptions& opts = {});

}  // namespace rcx
