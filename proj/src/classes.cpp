#include "parsep/classes.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace parsep {

namespace {

void check_r_mod4(Integer r) {
    if (r != 1 && r != 3) throw InvalidParameter("residue r must be 1 or 3, got " + std::to_string(r));
}

void check_modulus(Integer p) {
    if (p < 2) throw InvalidParameter("modulus p must be >= 2, got " + std::to_string(p));
}

// True iff the parts selected by `keep`, read smallest-first, are exactly
// start, start+step, start+2*step, ... with each value once. Parts arrive in
// nonincreasing order so we walk them from the back.
template <class Keep>
bool is_simple_progression(std::span<const Integer> parts, Integer start, Integer step, Keep keep) {
    Integer expected = start;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!keep(*it)) continue;
        if (*it != expected) return false;
        expected += step;
    }
    return true;
}

constexpr std::array<std::pair<ClassKind, std::string_view>, 7> kKindNames{{
    {ClassKind::D, "D"},
    {ClassKind::O, "O"},
    {ClassKind::A, "A"},
    {ClassKind::B, "B"},
    {ClassKind::ApClass, "AP"},
    {ClassKind::DistinctResidueClass, "DR"},
    {ClassKind::ResiduePartsMod4, "MOD4"},
}};

} // namespace

ClassSpec ClassSpec::d(Integer p, Integer r) {
    ClassSpec s{ClassKind::D, p, r};
    s.validate();
    return s;
}

ClassSpec ClassSpec::o(Integer p, Integer r) {
    ClassSpec s{ClassKind::O, p, r};
    s.validate();
    return s;
}

ClassSpec ClassSpec::a(Integer r) {
    ClassSpec s{ClassKind::A, 0, r};
    s.validate();
    return s;
}

ClassSpec ClassSpec::b() { return ClassSpec{ClassKind::B, 0, 0}; }

ClassSpec ClassSpec::ap(Integer p) {
    ClassSpec s{ClassKind::ApClass, p, 0};
    s.validate();
    return s;
}

ClassSpec ClassSpec::distinct_residue(Integer p) {
    ClassSpec s{ClassKind::DistinctResidueClass, p, 0};
    s.validate();
    return s;
}

ClassSpec ClassSpec::mod4(Integer r) {
    ClassSpec s{ClassKind::ResiduePartsMod4, 0, r};
    s.validate();
    return s;
}

void ClassSpec::validate() const {
    switch (kind) {
    case ClassKind::D:
    case ClassKind::O:
        check_modulus_residue(p, r);
        break;
    case ClassKind::A:
    case ClassKind::ResiduePartsMod4:
        check_r_mod4(r);
        break;
    case ClassKind::ApClass:
    case ClassKind::DistinctResidueClass:
        check_modulus(p);
        break;
    case ClassKind::B:
        break;
    }
}

std::string_view class_kind_name(ClassKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string describe(const ClassSpec& spec) {
    std::string out(class_kind_name(spec.kind));
    switch (spec.kind) {
    case ClassKind::D:
    case ClassKind::O:
        out += "(p=" + std::to_string(spec.p) + ",r=" + std::to_string(spec.r) + ")";
        break;
    case ClassKind::A:
    case ClassKind::ResiduePartsMod4:
        out += "(r=" + std::to_string(spec.r) + ")";
        break;
    case ClassKind::ApClass:
    case ClassKind::DistinctResidueClass:
        out += "(p=" + std::to_string(spec.p) + ")";
        break;
    case ClassKind::B:
        break;
    }
    return out;
}

bool is_in_D(const Partition& lam, Integer p, Integer r) {
    check_modulus_residue(p, r);
    // Largest-first, every r-part must come before every 0-part and differ
    // from the r-part before it.
    bool seen_zero_part = false;
    Integer last_r_part = 0;
    for (Integer part : lam.parts()) {
        const Integer residue = part % p;
        if (residue == 0) {
            seen_zero_part = true;
        } else if (residue == r) {
            if (seen_zero_part) return false;
            if (last_r_part == part) return false;
            last_r_part = part;
        } else {
            return false;
        }
    }
    return true;
}

bool is_in_O(const Partition& lam, Integer p, Integer r) {
    check_modulus_residue(p, r);
    for (Integer part : lam.parts()) {
        const Integer residue = part % p;
        if (residue != 0 && residue != r) return false;
    }
    return is_simple_progression(lam.parts(), r, p, [&](Integer part) { return part % p == r; });
}

bool is_in_A(const Partition& lam, Integer r) {
    check_r_mod4(r);
    Integer largest_even = 0;
    Integer smallest_odd = 0;
    for (Integer part : lam.parts()) {
        if (part % 2 == 0)
            largest_even = std::max(largest_even, part);
        else
            smallest_odd = part;  // nonincreasing, so the last odd seen is the smallest
    }
    if (smallest_odd != 0 && smallest_odd < largest_even + r) return false;

    // Each of 2, 4, ..., largest_even must appear; repeats allowed.
    Integer need = largest_even;
    for (Integer part : lam.parts()) {
        if (part % 2 != 0) continue;
        if (part == need)
            need -= 2;
        else if (part < need)
            return false;
    }
    return need == 0;
}

bool is_in_AP_class(const Partition& lam, Integer p) {
    check_modulus(p);
    Integer smallest = 0;
    for (Integer part : lam.parts())
        if (part % p != 0) smallest = part;
    if (smallest == 0) return true;
    if (smallest >= p) return false;
    return is_simple_progression(lam.parts(), smallest, p, [&](Integer part) { return part % p != 0; });
}

bool is_in_distinct_residue_class(const Partition& lam, Integer p) {
    check_modulus(p);
    bool seen_multiple = false;
    Integer residue = 0;
    Integer last = 0;
    for (Integer part : lam.parts()) {
        const Integer res = part % p;
        if (res == 0) {
            seen_multiple = true;
            continue;
        }
        if (seen_multiple || part == last) return false;
        if (residue == 0)
            residue = res;
        else if (res != residue)
            return false;
        last = part;
    }
    return true;
}

bool is_in_residue_parts_mod4(const Partition& lam, Integer r) {
    check_r_mod4(r);
    return std::all_of(lam.parts().begin(), lam.parts().end(), [&](Integer part) {
        const Integer res = part % 4;
        return res == r || res == 2;
    });
}

std::optional<BClassification> classify_B(const Partition& lam) {
    Integer even_count = 0;
    Integer last_even = 0;
    Integer largest_odd = 0;
    for (Integer part : lam.parts()) {
        if (part % 2 == 0) {
            if (part == last_even) return std::nullopt;
            last_even = part;
            ++even_count;
        } else {
            largest_odd = std::max(largest_odd, part);
        }
    }
    if (largest_odd == 0) return BClassification{BBranch::A, even_count};

    // Odd parts: exactly 1, 3, ..., largest_odd, each with multiplicity >= 2.
    Integer expect = largest_odd;
    Integer run = 0;
    for (Integer part : lam.parts()) {
        if (part % 2 == 0) {
            if (part < largest_odd + 3) return std::nullopt;
            continue;
        }
        if (part == expect) {
            ++run;
        } else if (part == expect - 2 && run >= 2) {
            expect = part;
            run = 1;
        } else {
            return std::nullopt;
        }
    }
    if (expect != 1 || run < 2) return std::nullopt;
    return BClassification{BBranch::B, even_count};
}

bool is_member(const Partition& lam, const ClassSpec& spec) {
    switch (spec.kind) {
    case ClassKind::D:
        return is_in_D(lam, spec.p, spec.r);
    case ClassKind::O:
        return is_in_O(lam, spec.p, spec.r);
    case ClassKind::A:
        return is_in_A(lam, spec.r);
    case ClassKind::B:
        return is_in_B(lam);
    case ClassKind::ApClass:
        return is_in_AP_class(lam, spec.p);
    case ClassKind::DistinctResidueClass:
        return is_in_distinct_residue_class(lam, spec.p);
    case ClassKind::ResiduePartsMod4:
        return is_in_residue_parts_mod4(lam, spec.r);
    }
    return false;
}

Integer count_class(Integer n, const ClassSpec& spec) {
    spec.validate();
    Integer count = 0;
    for_each_partition(n, [&](const Partition& lam) {
        if (is_member(lam, spec)) ++count;
    });
    return count;
}

std::vector<Partition> list_class(Integer n, const ClassSpec& spec) {
    spec.validate();
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& lam) {
        if (is_member(lam, spec)) out.push_back(lam);
    });
    return out;
}

SignedCount signed_count_B(Integer n) {
    SignedCount out;
    for_each_partition(n, [&](const Partition& lam) {
        if (auto c = classify_B(lam)) {
            if (c->even_part_count % 2 == 0)
                ++out.even_count;
            else
                ++out.odd_count;
        }
    });
    return out;
}

} // namespace parsep
