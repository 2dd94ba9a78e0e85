#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcds/vertex_set.hpp"

namespace mcds {

enum class Closure { Downward, Upward };

// Pull-based polynomial-delay enumeration of a subset-closed family given by
// a membership predicate. Elements are processed in ascending id order; on a
// successful test X + {e} the enumerator emits immediately and descends, so
// each family member is produced exactly once (when its largest element is
// added). Superset-closed families are enumerated through the complemented
// predicate.
//
// Delay: between two consecutive emissions at most 2|U|+2 predicate calls
// are made. After a member Y = X + {e} fails all further extensions and X
// fails its remaining scan, the grandparent is guaranteed a success no later
// than element e (its union with e is a subset of Y), which caps the gap.
class FamilyEnumerator {
public:
    using Predicate = std::function<bool(const VertexSet&)>;

    FamilyEnumerator(VertexSet universe, Predicate member, Closure direction)
        : universe_(std::move(universe)),
          member_(std::move(member)),
          direction_(direction),
          elements_(universe_.members()) {}

    // Next family member, or nullopt when exhausted.
    std::optional<VertexSet> next() {
        if (!started_) {
            started_ = true;
            VertexSet empty(universe_.universe());
            if (test(empty)) {
                stack_.push_back({empty, 0});
                return emit(empty);
            }
            return std::nullopt;  // downward-closed and no empty set: family is empty
        }
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            if (f.idx == elements_.size()) {
                stack_.pop_back();
                continue;
            }
            int e = elements_[f.idx++];
            VertexSet candidate = f.set;
            candidate.insert(e);
            if (test(candidate)) {
                std::size_t resume = f.idx;
                stack_.push_back({candidate, resume});
                return emit(candidate);
            }
        }
        return std::nullopt;
    }

    std::uint64_t predicate_calls() const { return calls_; }

private:
    struct Frame {
        VertexSet set;
        std::size_t idx;
    };

    bool test(const VertexSet& inner) {
        ++calls_;
        if (direction_ == Closure::Downward) return member_(inner);
        return member_(universe_ - inner);
    }
    VertexSet emit(const VertexSet& inner) const {
        if (direction_ == Closure::Downward) return inner;
        return universe_ - inner;
    }

    VertexSet universe_;
    Predicate member_;
    Closure direction_;
    std::vector<int> elements_;
    std::vector<Frame> stack_;
    bool started_ = false;
    std::uint64_t calls_ = 0;
};

}  // namespace mcds
