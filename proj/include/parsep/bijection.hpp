#pragma once

#include <optional>
#include <string>

#include "parsep/partition.hpp"

namespace parsep {

/**
 * The map between the O-class and the D-class of partitions of n.
 *
 * Forward: split λ into its r-parts λ1 and its 0-parts λ2 (mod p) and return
 * the componentwise sum λ1 + λ2. The r-parts of an O-member are the staircase
 * r, r+p, ..., so the sum has distinct r-parts sitting on top of the leftover
 * 0-parts.
 *
 * Inverse: split μ into μ1 (r-parts) and μ2 (0-parts), take the staircase μ3
 * with ℓ(μ1) parts, and return μ2 ∪ μ3 ∪ (μ1 − μ3). Distinct r-parts differ by
 * at least p, so μ1 − μ3 is nonincreasing with every entry ≡ 0 (mod p).
 */

// Throws NotInClass unless is_in_O(lam, p, r).
Partition phi(const Partition& lam, Integer p, Integer r);
// Throws NotInClass unless is_in_D(mu, p, r).
Partition psi(const Partition& mu, Integer p, Integer r);

// Same maps without the membership check, for sweeps whose enumerator already
// guarantees membership. Behaviour on non-members is unspecified.
Partition phi_unchecked(const Partition& lam, Integer p, Integer r);
Partition psi_unchecked(const Partition& mu, Integer p, Integer r);

// The inverse map together with the staircase it subtracted.
struct InverseTrace {
    Partition image;
    Partition staircase;
};
InverseTrace psi_traced(const Partition& mu, Integer p, Integer r);

struct BijectionFailure {
    Partition partition;
    std::string reason;
};

struct BijectionReport {
    Integer n = 0;
    Integer p = 2;
    Integer r = 1;
    Integer class_size = 0;    // |O-class of n|
    Integer d_class_size = 0;  // |D-class of n|
    bool roundtrip_ok = true;
    bool image_equals_D_class = true;
    bool weight_preserved = true;
    std::optional<BijectionFailure> first_failure;

    bool ok() const noexcept { return roundtrip_ok && image_equals_D_class && weight_preserved; }
};

// Whole-class certification for one (n, p, r): ψ∘φ = id on the O-class,
// φ∘ψ = id on the D-class, weights preserved, φ(O-class) = D-class as sets.
BijectionReport verify_bijection(Integer n, Integer p, Integer r);

// The same checks restricted to a single partition, which may belong to
// either class. Useful for weights too large to enumerate.
BijectionReport spot_check(const Partition& lam, Integer p, Integer r);

} // namespace parsep
