#include "parsep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

namespace parsep {

namespace {

Integer sum_checked(std::span<const Integer> values) {
    Integer total = 0;
    for (Integer v : values) total = checked_add(total, v);
    return total;
}

} // namespace

Partition Partition::from_values(std::span<const Integer> values) {
    std::vector<Integer> parts;
    parts.reserve(values.size());
    for (Integer v : values) {
        if (v < 0) throw NegativePart("partition part must be nonnegative, got " + std::to_string(v));
        if (v > 0) parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    Integer weight = sum_checked(parts);
    return Partition(std::move(parts), weight);
}

Partition Partition::from_canonical(std::vector<Integer> parts) {
    Integer weight = sum_checked(parts);
    return Partition(std::move(parts), weight);
}

Partition parse_partition(std::string_view text) {
    std::vector<Integer> values;
    std::string token;
    bool saw_any = false;

    auto flush = [&](bool at_end) {
        if (token.empty()) {
            // "", "  " are the empty partition; "3,,4" or a trailing comma is not.
            if (at_end && !saw_any) return;
            throw ParseError("empty entry in partition literal");
        }
        Integer v = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) throw ParseError("part out of range: " + token);
        if (ec != std::errc() || ptr != last) throw ParseError("not an integer: '" + token + "'");
        values.push_back(v);
        token.clear();
    };

    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == ',') {
            flush(false);
            saw_any = true;
            continue;
        }
        token.push_back(c);
    }
    flush(true);
    return Partition::from_values(values);
}

std::string to_literal(const Partition& lam) {
    std::string out;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(lam.parts()[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& lam) { return os << '(' << to_literal(lam) << ')'; }

Partition componentwise_sum(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<Integer> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = checked_add(a.part(i), b.part(i));
    // Sum of two aligned nonincreasing sequences is nonincreasing.
    return Partition::from_canonical(std::move(out));
}

std::vector<Integer> raw_componentwise_diff(const Partition& a, const Partition& b) {
    if (b.length() > a.length())
        throw NegativeEntry("subtrahend has more parts (" + std::to_string(b.length()) + ") than minuend (" +
                            std::to_string(a.length()) + ")");
    std::vector<Integer> out(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.part(i) < b.part(i))
            throw NegativeEntry("negative entry at position " + std::to_string(i + 1) + ": " +
                                std::to_string(a.part(i)) + " - " + std::to_string(b.part(i)));
        out[i] = a.part(i) - b.part(i);
    }
    return out;
}

Partition componentwise_diff(const Partition& a, const Partition& b) {
    return Partition::from_values(raw_componentwise_diff(a, b));
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<Integer> out(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), out.begin(),
               std::greater<>());
    return Partition::from_canonical(std::move(out));
}

void check_modulus_residue(Integer p, Integer r) {
    if (p < 2) throw InvalidParameter("modulus p must be >= 2, got " + std::to_string(p));
    if (r < 1 || r > p - 1)
        throw InvalidParameter("residue r must lie in [1, " + std::to_string(p - 1) + "], got " +
                               std::to_string(r));
}

ResidueSplit decompose_by_residue(const Partition& lam, Integer p, Integer r) {
    check_modulus_residue(p, r);
    std::vector<Integer> r_parts;
    std::vector<Integer> zero_parts;
    for (Integer part : lam.parts()) {
        const Integer residue = part % p;
        if (residue == r)
            r_parts.push_back(part);
        else if (residue == 0)
            zero_parts.push_back(part);
        else
            throw ForeignResidue("part " + std::to_string(part) + " is " + std::to_string(residue) + " mod " +
                                 std::to_string(p) + ", expected 0 or " + std::to_string(r));
    }
    return ResidueSplit{p, r, Partition::from_canonical(std::move(r_parts)),
                        Partition::from_canonical(std::move(zero_parts))};
}

Partition staircase(Integer k, Integer p, Integer r) {
    check_modulus_residue(p, r);
    if (k < 0) throw InvalidParameter("staircase length must be >= 0, got " + std::to_string(k));
    std::vector<Integer> parts(static_cast<std::size_t>(k));
    for (Integer i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = checked_add(checked_mul(p, k - 1 - i), r);
    return Partition::from_canonical(std::move(parts));
}

PartitionGenerator::PartitionGenerator(Integer n) {
    if (n < 0) throw InvalidParameter("cannot enumerate partitions of a negative integer");
    if (n > 0) current_ = Partition({n}, n);
}

bool PartitionGenerator::next() {
    if (done_) return false;
    auto& parts = current_.parts_;

    // Absorb the trailing 1s, then lower the rightmost part that exceeds 1.
    Integer spill = 0;
    while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++spill;
    }
    if (parts.empty()) {
        done_ = true;
        return false;
    }
    const Integer cap = --parts.back();
    ++spill;
    // Refill greedily with parts no larger than cap.
    while (spill > 0) {
        const Integer v = std::min(cap, spill);
        parts.push_back(v);
        spill -= v;
    }
    return true;
}

} // namespace parsep
