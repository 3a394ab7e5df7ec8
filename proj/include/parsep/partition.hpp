#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parsep/checked.hpp"

namespace parsep {

/**
 * A partition: a finite nonincreasing sequence of positive integers.
 *
 * Instances are always canonical. Zeros handed to the factory functions are
 * dropped and the remaining values sorted largest-first, so two partitions
 * compare equal exactly when they have the same multiset of parts.
 */
class Partition {
public:
    Partition() = default;

    // Canonicalizes `values`: drops zeros, sorts nonincreasing.
    // Throws NegativePart if a value is negative.
    static Partition from_values(std::span<const Integer> values);
    static Partition from_values(std::initializer_list<Integer> values) {
        return from_values(std::span<const Integer>(values.begin(), values.size()));
    }

    // Trusts the caller: `parts` must already be nonincreasing and positive.
    static Partition from_canonical(std::vector<Integer> parts);

    std::span<const Integer> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Integer weight() const noexcept { return weight_; }

    // Zero-padded positional access: part(i) == 0 for i >= length().
    Integer part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    explicit Partition(std::vector<Integer> parts, Integer weight)
        : parts_(std::move(parts)), weight_(weight) {}

    std::vector<Integer> parts_;
    Integer weight_ = 0;

    friend class PartitionGenerator;
};

inline Partition make_partition(std::span<const Integer> values) { return Partition::from_values(values); }
inline Partition make_partition(std::initializer_list<Integer> values) { return Partition::from_values(values); }

// Comma-separated literal, e.g. "53,49,29,17". Whitespace ignored, empty text
// is the empty partition. Throws ParseError on malformed text, NegativePart on
// negative values.
Partition parse_partition(std::string_view text);

// Canonical literal: parts joined by ',' with no spaces. Empty partition -> "".
std::string to_literal(const Partition& lam);

std::ostream& operator<<(std::ostream& os, const Partition& lam);

// λ + β: align largest-to-largest, pad the shorter with zeros, add positionwise.
Partition componentwise_sum(const Partition& a, const Partition& b);

// a − b positionwise. Requires len(b) <= len(a) and a[i] >= b[i]; throws
// NegativeEntry otherwise. Zeros are dropped and the result canonicalized.
Partition componentwise_diff(const Partition& a, const Partition& b);

// Positionwise a − b without reordering. Entries may be zero and the result
// need not be monotone; the caller decides what to do with it.
std::vector<Integer> raw_componentwise_diff(const Partition& a, const Partition& b);

// Multiset union: multiplicities add.
Partition multiset_union(const Partition& a, const Partition& b);

// Throws InvalidParameter unless p >= 2 and 1 <= r <= p-1.
void check_modulus_residue(Integer p, Integer r);

struct ResidueSplit {
    Integer p = 2;
    Integer r = 1;
    Partition r_part;     // parts ≡ r (mod p)
    Partition zero_part;  // parts ≡ 0 (mod p)
};

// Throws ForeignResidue if a part is neither ≡ 0 nor ≡ r (mod p).
ResidueSplit decompose_by_residue(const Partition& lam, Integer p, Integer r);

// (p(k-1)+r, ..., p+r, r): k parts with common difference p.
Partition staircase(Integer k, Integer p, Integer r);

/**
 * Generates every partition of n exactly once in descending-lexicographic
 * order: (n), (n-1,1), ..., (1,...,1).
 *
 * The generator owns a single Partition and rewrites it in place on each
 * step, so the reference returned by current() is invalidated by next().
 */
class PartitionGenerator {
public:
    explicit PartitionGenerator(Integer n);

    const Partition& current() const noexcept { return current_; }
    bool done() const noexcept { return done_; }
    // Advances to the next partition. Returns false (and sets done()) after the last.
    bool next();

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(PartitionGenerator* gen) : gen_(gen) {}

        const Partition& operator*() const { return gen_->current(); }
        const Partition* operator->() const { return &gen_->current(); }
        iterator& operator++() {
            gen_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return gen_ == nullptr || gen_->done(); }

    private:
        PartitionGenerator* gen_ = nullptr;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }

private:
    Partition current_;
    bool done_ = false;
};

// Range over the partitions of n; see PartitionGenerator.
inline PartitionGenerator partitions_of(Integer n) { return PartitionGenerator(n); }

// Calls f(lam) for each partition of n, in generator order.
template <class F>
void for_each_partition(Integer n, F&& f) {
    for (const Partition& lam : partitions_of(n)) f(lam);
}

} // namespace parsep
