#include "rcx/critical.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcx {

namespace {

SearchOptions with_shape(const SearchOptions& opts, HostShape shape) {
    SearchOptions out = opts;
    out.shape = shape;
    return out;
}

HostShape::Kind to_shape_kind(DeletionClass cls) {
    switch (cls) {
        case DeletionClass::Star: return HostShape::Kind::MinusStar;
        case DeletionClass::Matching: return HostShape::Kind::MinusMatching;
        case DeletionClass::Path: return HostShape::Kind::MinusPath;
        case DeletionClass::Complete: return HostShape::Kind::MinusClique;
    }
    throw std::logic_error("unknown deletion class");
}

int choose2(int m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

int max_searchable_order(const SearchOptions& opts) {
    int r = 2;
    while (choose2(r + 1) <= opts.edge_cap && r + 1 <= kMaxVertices) ++r;
    return r;
}

int ramsey_number(const Pattern& f, const Pattern& h, int max_r, const SearchOptions& opts) {
    const int lower = std::max({2, f.order(), h.order()});
    for (int r = lower; r <= max_r; ++r) {
        const HostShape shape{HostShape::Kind::Complete, r, 0};
        const auto result = arrows(complete(r), f, h, with_shape(opts, shape));
        if (result.verdict == Verdict::Arrows) return r;
    }
    throw std::runtime_error("Ramsey number of (" + to_string(f) + "," + to_string(h) +
                             ") not found by K_" + std::to_string(max_r));
}

std::optional<int> closed_form_ramsey(const Pattern& f, const Pattern& h) {
    if (f.kind == PatternKind::Star && h.kind == PatternKind::Star) {
        const int m = f.m, n = h.m;
        return (m % 2 == 0 && n % 2 == 0) ? m + n - 1 : m + n;
    }
    if (f.kind == PatternKind::Matching && h.kind == PatternKind::Matching) {
        return 2 * std::max(f.m, h.m) + std::min(f.m, h.m) - 1;
    }
    return std::nullopt;
}

CriticalResult critical_number(ClassSpec cls, const Pattern& f, const Pattern& h,
                               const SearchOptions& opts, std::optional<int> precomputed_r) {
    CriticalResult out;
    out.cls = cls;
    out.f = f;
    out.h = h;
    out.r = precomputed_r ? *precomputed_r : ramsey_number(f, h, max_searchable_order(opts), opts);

    const auto host_base = complete(out.r);
    int idx = cls.min_index();
    out.class_exhausted = true;
    while (class_member_order(cls, idx) <= out.r) {
        const HostShape shape{to_shape_kind(cls.kind), out.r, idx};
        const Graph host = delete_class_member(host_base, cls, idx);
        const auto result = arrows(host, f, h, with_shape(opts, shape));
        if (result.verdict == Verdict::Arrows) {
            out.value = idx;
            out.confirmation = result.stats;
            ++idx;
        } else {
            out.class_exhausted = false;
            out.failing_witness = result.witness;
            break;
        }
    }
    return out;
}

int star_critical_hook(const Pattern& f, const Pattern& h, const SearchOptions& opts,
                       std::optional<int> precomputed_r) {
    const int r = precomputed_r ? *precomputed_r : ramsey_number(f, h, max_searchable_order(opts), opts);
    if (r - 1 < 1) throw std::invalid_argument("hook star-critical needs R(f,h) >= 2");
    for (int k = 0; k <= r - 1; ++k) {
        const HostShape shape{HostShape::Kind::BookJoin, r - 1, k};
        const auto result = arrows(book_join(r - 1, k), f, h, with_shape(opts, shape));
        if (result.verdict == Verdict::Arrows) return k;
    }
    throw std::logic_error("K_r itself failed to arrow; inconsistent Ramsey number");
}

bool check_star_critical_identity(const Pattern& f, const Pattern& h, const SearchOptions& opts) {
    const int r = ramsey_number(f, h, max_searchable_order(opts), opts);
    const auto star = critical_number({DeletionClass::Star}, f, h, opts, r);
    const int hook = star_critical_hook(f, h, opts, r);
    return star.value == r - 1 - hook;
}

bool is_ramsey_full(ClassSpec cls, const Pattern& f, const Pattern& h,
                    const SearchOptions& opts) {
    return critical_number(cls, f, h, opts).value == 0;
}

int size_ramsey_upper_bound(const Pattern& f, const Pattern& h, const SearchOptions& opts) {
    const int r = ramsey_number(f, h, max_searchable_order(opts), opts);
    const auto complete_class = critical_number({DeletionClass::Complete}, f, h, opts, r);
    return choose2(r) - choose2(complete_class.value);
}

}  // namespace rcx
