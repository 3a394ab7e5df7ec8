#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parsep/partition.hpp"

namespace parsep {

enum class ClassKind {
    D,                       // r-parts distinct, all above the 0-parts
    O,                       // r-parts are exactly r, r+p, ..., each once
    A,                       // even staircase with repeats, odd parts >= largest even + r
    B,                       // distinct evens, or doubled odd staircase under large distinct evens
    ApClass,                 // non-multiples of p form an AP of difference p starting below p
    DistinctResidueClass,    // non-multiples distinct, one residue, above the multiples of p
    ResiduePartsMod4,        // every part ≡ r or 2 (mod 4)
};

/**
 * Identifies one partition class. Which of p and r are meaningful depends on
 * the kind:
 *
 *   D, O                  p >= 2, 1 <= r <= p-1
 *   ApClass, DistinctRes  p >= 2 (r ignored)
 *   A, ResiduePartsMod4   r in {1, 3} (p ignored; moduli are fixed at 2 and 4)
 *   B                     neither
 *
 * Use the named constructors; they validate.
 */
struct ClassSpec {
    ClassKind kind = ClassKind::D;
    Integer p = 0;
    Integer r = 0;

    static ClassSpec d(Integer p, Integer r);
    static ClassSpec o(Integer p, Integer r);
    static ClassSpec a(Integer r);
    static ClassSpec b();
    static ClassSpec ap(Integer p);
    static ClassSpec distinct_residue(Integer p);
    static ClassSpec mod4(Integer r);

    // Throws InvalidParameter if p or r is out of range for the kind.
    void validate() const;

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

// Short names used on the command line: D, O, A, B, AP, DR, MOD4.
std::string_view class_kind_name(ClassKind kind);
std::optional<ClassKind> parse_class_kind(std::string_view name);
std::string describe(const ClassSpec& spec);

bool is_in_D(const Partition& lam, Integer p, Integer r);
bool is_in_O(const Partition& lam, Integer p, Integer r);
bool is_in_A(const Partition& lam, Integer r);
bool is_in_AP_class(const Partition& lam, Integer p);
bool is_in_distinct_residue_class(const Partition& lam, Integer p);
bool is_in_residue_parts_mod4(const Partition& lam, Integer r);

enum class BBranch { A, B };

struct BClassification {
    BBranch branch = BBranch::A;
    Integer even_part_count = 0;
};

// Branch A: all parts even and distinct (the empty partition included).
// Branch B: odd parts are exactly 1, 3, ..., 2k-1 for some k >= 1, each at
// least twice; even parts distinct and each >= 2k+2.
// Anything else is not a member (nullopt).
std::optional<BClassification> classify_B(const Partition& lam);

inline bool is_in_B(const Partition& lam) { return classify_B(lam).has_value(); }

bool is_member(const Partition& lam, const ClassSpec& spec);

Integer count_class(Integer n, const ClassSpec& spec);

// Members among the partitions of n, in generator (descending-lexicographic) order.
std::vector<Partition> list_class(Integer n, const ClassSpec& spec);

struct SignedCount {
    Integer even_count = 0;
    Integer odd_count = 0;

    Integer difference() const noexcept { return even_count - odd_count; }
    friend bool operator==(const SignedCount&, const SignedCount&) = default;
};

// B-partitions of n split by the parity of their number of even parts.
SignedCount signed_count_B(Integer n);

} // namespace parsep
