#include "parsep/bijection.hpp"

#include <algorithm>
#include <vector>

#include "parsep/classes.hpp"

namespace parsep {

namespace {

void record(BijectionReport& report, bool BijectionReport::*flag, const Partition& lam, std::string reason) {
    report.*flag = false;
    if (!report.first_failure) report.first_failure = BijectionFailure{lam, std::move(reason)};
}

// Forward and backward roundtrips for one O-member; appends its image.
void check_forward(BijectionReport& report, const Partition& lam, std::vector<Partition>* images) {
    const Integer p = report.p;
    const Integer r = report.r;
    try {
        Partition image = phi_unchecked(lam, p, r);
        if (image.weight() != lam.weight())
            record(report, &BijectionReport::weight_preserved, lam, "forward image changes the weight");
        if (!is_in_D(image, p, r))
            record(report, &BijectionReport::image_equals_D_class, lam, "forward image is not a D-member");
        if (psi_unchecked(image, p, r) != lam)
            record(report, &BijectionReport::roundtrip_ok, lam, "inverse(forward(x)) != x");
        if (images) images->push_back(std::move(image));
    } catch (const Error& e) {
        record(report, &BijectionReport::roundtrip_ok, lam, std::string("forward roundtrip raised: ") + e.what());
    }
}

void check_backward(BijectionReport& report, const Partition& mu) {
    const Integer p = report.p;
    const Integer r = report.r;
    try {
        Partition pre = psi_unchecked(mu, p, r);
        if (pre.weight() != mu.weight())
            record(report, &BijectionReport::weight_preserved, mu, "inverse image changes the weight");
        if (!is_in_O(pre, p, r))
            record(report, &BijectionReport::image_equals_D_class, mu, "inverse image is not an O-member");
        if (phi_unchecked(pre, p, r) != mu)
            record(report, &BijectionReport::roundtrip_ok, mu, "forward(inverse(x)) != x");
    } catch (const Error& e) {
        record(report, &BijectionReport::roundtrip_ok, mu, std::string("inverse roundtrip raised: ") + e.what());
    }
}

} // namespace

Partition phi_unchecked(const Partition& lam, Integer p, Integer r) {
    const ResidueSplit split = decompose_by_residue(lam, p, r);
    return componentwise_sum(split.r_part, split.zero_part);
}

InverseTrace psi_traced(const Partition& mu, Integer p, Integer r) {
    const ResidueSplit split = decompose_by_residue(mu, p, r);
    Partition stairs = staircase(static_cast<Integer>(split.r_part.length()), p, r);

    // No sort here: distinct r-parts are at least p apart, so the difference
    // is already nonincreasing and every entry is a multiple of p.
    std::vector<Integer> excess = raw_componentwise_diff(split.r_part, stairs);
    for (std::size_t i = 0; i < excess.size(); ++i) {
        if (excess[i] % p != 0)
            throw InternalConsistencyError("staircase excess " + std::to_string(excess[i]) + " is not a multiple of " +
                                           std::to_string(p));
        if (i > 0 && excess[i] > excess[i - 1])
            throw InternalConsistencyError("staircase excess is not nonincreasing for " + to_literal(mu));
    }
    while (!excess.empty() && excess.back() == 0) excess.pop_back();

    Partition image =
        multiset_union(multiset_union(split.zero_part, stairs), Partition::from_canonical(std::move(excess)));
    return InverseTrace{std::move(image), std::move(stairs)};
}

Partition psi_unchecked(const Partition& mu, Integer p, Integer r) { return psi_traced(mu, p, r).image; }

Partition phi(const Partition& lam, Integer p, Integer r) {
    if (!is_in_O(lam, p, r))
        throw NotInClass("(" + to_literal(lam) + ") is not in the O-class for p=" + std::to_string(p) +
                         ", r=" + std::to_string(r));
    return phi_unchecked(lam, p, r);
}

Partition psi(const Partition& mu, Integer p, Integer r) {
    if (!is_in_D(mu, p, r))
        throw NotInClass("(" + to_literal(mu) + ") is not in the D-class for p=" + std::to_string(p) +
                         ", r=" + std::to_string(r));
    return psi_unchecked(mu, p, r);
}

BijectionReport verify_bijection(Integer n, Integer p, Integer r) {
    check_modulus_residue(p, r);
    BijectionReport report;
    report.n = n;
    report.p = p;
    report.r = r;

    std::vector<Partition> o_class;
    std::vector<Partition> d_class;
    for_each_partition(n, [&](const Partition& lam) {
        if (is_in_O(lam, p, r)) o_class.push_back(lam);
        if (is_in_D(lam, p, r)) d_class.push_back(lam);
    });
    report.class_size = static_cast<Integer>(o_class.size());
    report.d_class_size = static_cast<Integer>(d_class.size());

    std::vector<Partition> images;
    images.reserve(o_class.size());
    for (const Partition& lam : o_class) check_forward(report, lam, &images);
    for (const Partition& mu : d_class) check_backward(report, mu);

    std::sort(images.begin(), images.end());
    std::sort(d_class.begin(), d_class.end());
    auto dup = std::adjacent_find(images.begin(), images.end());
    if (dup != images.end()) {
        record(report, &BijectionReport::image_equals_D_class, *dup, "two O-members share this forward image");
    } else if (images != d_class) {
        std::vector<Partition> missed;
        std::set_difference(d_class.begin(), d_class.end(), images.begin(), images.end(), std::back_inserter(missed));
        record(report, &BijectionReport::image_equals_D_class, missed.empty() ? Partition{} : missed.front(),
               "forward image of the O-class differs from the D-class");
    }
    return report;
}

BijectionReport spot_check(const Partition& lam, Integer p, Integer r) {
    check_modulus_residue(p, r);
    BijectionReport report;
    report.n = lam.weight();
    report.p = p;
    report.r = r;

    const bool in_o = is_in_O(lam, p, r);
    const bool in_d = is_in_D(lam, p, r);
    report.class_size = in_o ? 1 : 0;
    report.d_class_size = in_d ? 1 : 0;
    if (!in_o && !in_d) {
        record(report, &BijectionReport::roundtrip_ok, lam, "partition is in neither the O-class nor the D-class");
        return report;
    }
    if (in_o) check_forward(report, lam, nullptr);
    if (in_d) check_backward(report, lam);
    return report;
}

} // namespace parsep
