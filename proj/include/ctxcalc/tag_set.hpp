#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/tag.hpp"

namespace ctxcalc {

enum class TagSetKind {
    EnumeratedOrdered,    // {rat, bull, tiger, rabbit}, order as enumerated
    IntegerRange,         // {l to u [step p]} with finite or infinite bounds
    EnumeratedUnordered,  // {red, yellow, blue}
    TypePredicate,        // {int} / {string}, membership by tag kind only
};

struct TagSetProperties {
    bool ordered = false;
    bool finite = false;

    friend bool operator==(const TagSetProperties&, const TagSetProperties&) = default;
};

// The typed universe of valid tags for one dimension. Values are immutable
// after construction; every operation is a pure function.
class TagSet {
public:
    // ---- construction ------------------------------------------------------

    // Order is the enumeration order. All tags must be of one kind and
    // pairwise distinct.
    static TagSet enumerated_ordered(std::vector<TagValue> tags) {
        validate_enumeration(tags);
        return TagSet(Enumerated{std::move(tags), /*ordered=*/true});
    }

    static TagSet enumerated_unordered(std::vector<TagValue> tags) {
        validate_enumeration(tags);
        // Unordered sets have no declaration order to preserve; keep them in
        // canonical display order.
        std::sort(tags.begin(), tags.end());
        return TagSet(Enumerated{std::move(tags), /*ordered=*/false});
    }

    // {l to u [step p]}. A positive step walks from `lower` upward; a
    // negative step walks from `lower` downward toward `upper` (which must
    // then be the smaller bound). Both-infinite ranges exist only with
    // step 1. An empty range (bounds in the wrong order) is legal; the
    // declaration front end warns about it.
    static TagSet integer_range(Bound lower, Bound upper, std::int64_t step = 1) {
        if (step == 0) {
            throw Error(ErrorCode::StepZero, "tag-set step must be nonzero");
        }
        if (step < 0 && (lower.is_infinite() || upper.is_infinite())) {
            throw Error(ErrorCode::NegativeStepWithInfiniteBound,
                        "a negative step requires finite bounds");
        }
        if (lower.is_pos_inf() || upper.is_neg_inf()) {
            throw Error(ErrorCode::InvalidTagSet,
                        "range bounds must satisfy lower <= INF+ and upper >= INF-");
        }
        if (lower.is_neg_inf() && upper.is_pos_inf() && step != 1) {
            throw Error(ErrorCode::InvalidTagSet,
                        "{INF- to INF+} admits only step 1");
        }
        return TagSet(Range{lower, upper, step});
    }

    static TagSet type_predicate(TagKind kind) { return TagSet(Predicate{kind}); }

    // The default tag set: the natural numbers {0 to INF+}.
    static TagSet natural_numbers() {
        return integer_range(Bound::finite(0), Bound::pos_inf(), 1);
    }

    // ---- classification ----------------------------------------------------

    TagSetKind kind() const {
        if (auto* e = std::get_if<Enumerated>(&rep_)) {
            return e->ordered ? TagSetKind::EnumeratedOrdered : TagSetKind::EnumeratedUnordered;
        }
        if (std::holds_alternative<Range>(rep_)) return TagSetKind::IntegerRange;
        return TagSetKind::TypePredicate;
    }

    TagSetProperties properties() const {
        switch (kind()) {
            case TagSetKind::EnumeratedOrdered: return {true, true};
            case TagSetKind::IntegerRange: {
                const auto& r = std::get<Range>(rep_);
                return {true, r.lower.is_finite() && r.upper.is_finite()};
            }
            case TagSetKind::EnumeratedUnordered: return {false, true};
            case TagSetKind::TypePredicate: return {false, false};
        }
        return {};
    }

    // A range whose bounds are ordered against its step direction denotes
    // the empty set. Declarations warn on this.
    bool is_empty_range() const {
        const auto* r = std::get_if<Range>(&rep_);
        if (!r || r->lower.is_infinite() || r->upper.is_infinite()) return false;
        return r->step > 0 ? r->lower.value() > r->upper.value()
                           : r->lower.value() < r->upper.value();
    }

    // ---- membership (set inclusion) ----------------------------------------

    // True iff t is a member. A kind-mismatched tag is simply not a member;
    // membership never fails.
    bool contains(const TagValue& t) const {
        switch (kind()) {
            case TagSetKind::EnumeratedOrdered:
            case TagSetKind::EnumeratedUnordered: {
                const auto& tags = std::get<Enumerated>(rep_).tags;
                return std::find(tags.begin(), tags.end(), t) != tags.end();
            }
            case TagSetKind::IntegerRange: {
                if (!t.is_integer()) return false;
                return range_contains(std::get<Range>(rep_), t.as_integer());
            }
            case TagSetKind::TypePredicate:
                return t.kind() == std::get<Predicate>(rep_).kind;
        }
        return false;
    }

    // ---- navigation (ordered sets only) -------------------------------------

    TagValue next(const TagValue& t) const { return step_from(t, +1); }
    TagValue previous(const TagValue& t) const { return step_from(t, -1); }

    // ---- enumeration (finite sets only) --------------------------------------

    // Members in order: enumeration order for ordered enumerations, the
    // anchor walk for ranges, canonical display order for unordered ones.
    std::vector<TagValue> enumerate() const {
        if (!properties().finite) {
            throw Error(ErrorCode::NotFinite, "cannot enumerate an infinite tag set");
        }
        if (const auto* e = std::get_if<Enumerated>(&rep_)) return e->tags;

        const auto& r = std::get<Range>(rep_);
        std::vector<TagValue> out;
        std::int64_t v = r.lower.value();
        while (range_contains(r, v)) {
            out.push_back(TagValue::integer(v));
            if (__builtin_add_overflow(v, r.step, &v)) break;
        }
        return out;
    }

    // ---- display -------------------------------------------------------------

    // The declaration-style body, e.g. "{2 to 100 step 2}" or "{red,yellow,blue}".
    std::string describe() const {
        switch (kind()) {
            case TagSetKind::EnumeratedOrdered:
            case TagSetKind::EnumeratedUnordered: {
                std::string out = "{";
                const auto& tags = std::get<Enumerated>(rep_).tags;
                for (std::size_t i = 0; i < tags.size(); ++i) {
                    if (i) out += ',';
                    out += tags[i].to_string();
                }
                return out + "}";
            }
            case TagSetKind::IntegerRange: {
                const auto& r = std::get<Range>(rep_);
                std::string out = "{" + r.lower.to_string() + " to " + r.upper.to_string();
                if (r.step != 1) out += " step " + std::to_string(r.step);
                return out + "}";
            }
            case TagSetKind::TypePredicate:
                return std::string("{") + tag_kind_name(std::get<Predicate>(rep_).kind) + "}";
        }
        return {};
    }

    // ---- raw accessors ---------------------------------------------------------

    const std::vector<TagValue>& tags() const { return std::get<Enumerated>(rep_).tags; }
    const Bound& lower() const { return std::get<Range>(rep_).lower; }
    const Bound& upper() const { return std::get<Range>(rep_).upper; }
    std::int64_t step() const { return std::get<Range>(rep_).step; }
    TagKind predicate_kind() const { return std::get<Predicate>(rep_).kind; }

    friend bool operator==(const TagSet& a, const TagSet& b) = default;

private:
    struct Enumerated {
        std::vector<TagValue> tags;
        bool ordered;
        friend bool operator==(const Enumerated&, const Enumerated&) = default;
    };
    struct Range {
        Bound lower;
        Bound upper;
        std::int64_t step;
        friend bool operator==(const Range&, const Range&) = default;
    };
    struct Predicate {
        TagKind kind;
        friend bool operator==(const Predicate&, const Predicate&) = default;
    };

    explicit TagSet(Enumerated e) : rep_(std::move(e)) {}
    explicit TagSet(Range r) : rep_(r) {}
    explicit TagSet(Predicate p) : rep_(p) {}

    static void validate_enumeration(const std::vector<TagValue>& tags) {
        if (tags.empty()) {
            throw Error(ErrorCode::InvalidTagSet, "an enumerated tag set cannot be empty");
        }
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (tags[i].kind() != tags[0].kind()) {
                throw Error(ErrorCode::MixedTagKinds,
                            "a tag set holds one value kind; '" + tags[i].to_string() +
                                "' does not match '" + tags[0].to_string() + "'");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (tags[j] == tags[i]) {
                    throw Error(ErrorCode::DuplicateTag,
                                "duplicate tag '" + tags[i].to_string() + "' in tag set");
                }
            }
        }
    }

    // The congruence anchor: the finite bound the progression is generated
    // from. With both bounds infinite the step is 1 and any anchor works.
    static std::int64_t anchor_of(const Range& r) {
        if (r.lower.is_finite()) return r.lower.value();
        if (r.upper.is_finite()) return r.upper.value();
        return 0;
    }

    static bool range_contains(const Range& r, std::int64_t t) {
        const bool in_bounds = r.step > 0 ? r.lower.at_most(t) && r.upper.at_least(t)
                                          : r.upper.at_most(t) && r.lower.at_least(t);
        if (!in_bounds) return false;
        // Exact congruence with the anchor; widened so the subtraction can
        // never overflow, and |INT64_MIN| stays representable.
        __int128 diff = static_cast<__int128>(t) - anchor_of(r);
        __int128 step = r.step;
        if (step < 0) step = -step;
        return diff % step == 0;
    }

    // Successor (direction=+1) or predecessor (-1) in the set's order.
    TagValue step_from(const TagValue& t, int direction) const {
        if (!properties().ordered) {
            throw Error(ErrorCode::NotOrdered,
                        "tag navigation is defined only on ordered tag sets");
        }
        if (!contains(t)) {
            throw Error(ErrorCode::NotMember,
                        "tag " + t.to_string() + " is not in the tag set " + describe());
        }
        if (const auto* e = std::get_if<Enumerated>(&rep_)) {
            auto it = std::find(e->tags.begin(), e->tags.end(), t);
            std::size_t idx = static_cast<std::size_t>(it - e->tags.begin());
            if (direction > 0) {
                if (idx + 1 == e->tags.size()) throw out_of_range(t, direction);
                return e->tags[idx + 1];
            }
            if (idx == 0) throw out_of_range(t, direction);
            return e->tags[idx - 1];
        }
        const auto& r = std::get<Range>(rep_);
        std::int64_t result = 0;
        const std::int64_t delta = r.step;
        const bool overflow = direction > 0
                                  ? __builtin_add_overflow(t.as_integer(), delta, &result)
                                  : __builtin_sub_overflow(t.as_integer(), delta, &result);
        if (overflow || !range_contains(r, result)) throw out_of_range(t, direction);
        return TagValue::integer(result);
    }

    Error out_of_range(const TagValue& t, int direction) const {
        return Error(ErrorCode::OutOfRange,
                     std::string(direction > 0 ? "no successor of " : "no predecessor of ") +
                         t.to_string() + " in " + describe());
    }

    std::variant<Enumerated, Range, Predicate> rep_;
};

}  // namespace ctxcalc
