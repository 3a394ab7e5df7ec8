#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parsep/checked.hpp"
#include "parsep/classes.hpp"

namespace parsep {

// c·q^e. A zero coefficient is the zero monomial whatever the exponent.
struct Monomial {
    Integer coefficient = 0;
    Integer exponent = 0;

    static Monomial q_power(Integer e, Integer c = 1) { return Monomial{c, e}; }

    Monomial negated() const { return Monomial{checked_sub(0, coefficient), exponent}; }
    Monomial times_q(Integer k) const { return Monomial{coefficient, checked_add(exponent, k)}; }
    bool is_zero() const noexcept { return coefficient == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Accepts "0", "1", "-1", "q", "-q", "q^2", "-q^3", "2q^5", "-2*q^3".
Monomial parse_monomial(std::string_view text);
std::string to_string(const Monomial& m);

/**
 * A formal power series in q with exact integer coefficients, truncated at
 * order T: only the coefficients of q^0 .. q^T are kept.
 *
 * Every operation checks for 64-bit overflow and throws IntegerOverflow rather
 * than wrapping. Binary operations on operands of different order produce a
 * result at the smaller order.
 */
class QSeries {
public:
    QSeries() : coeffs_(1, 0) {}
    // The zero series at order T.
    explicit QSeries(Integer order);

    static QSeries zero(Integer order) { return QSeries(order); }
    static QSeries one(Integer order);
    static QSeries monomial(const Monomial& m, Integer order);
    // Coefficients past `order` are dropped; missing ones are zero.
    static QSeries from_coefficients(std::span<const Integer> coeffs, Integer order);

    Integer order() const noexcept { return static_cast<Integer>(coeffs_.size()) - 1; }
    Integer coefficient(Integer e) const noexcept {
        return e >= 0 && e <= order() ? coeffs_[static_cast<std::size_t>(e)] : 0;
    }
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    // Same coefficients, truncated to a lower order.
    QSeries truncated(Integer order) const;

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    // Multiplies in place by q^k (k >= 0).
    QSeries& shift(Integer k);
    // Multiplies in place by (1 - c·q^e), without a full convolution.
    QSeries& mul_one_minus(const Monomial& m);

    friend QSeries operator+(QSeries a, const QSeries& b);
    friend QSeries operator-(QSeries a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Multiplicative inverse; requires constant term ±1 (NonUnitConstantTerm).
    QSeries inverse() const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

inline QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries qs_sub(const QSeries& a, const QSeries& b) { return a - b; }
inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qs_inv(const QSeries& a) { return a.inverse(); }

struct Mismatch {
    Integer exponent = 0;
    Integer lhs = 0;
    Integer rhs = 0;
};

// First exponent (up to the smaller order) where the two series differ.
std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs);

// (a; q^step)_n = ∏_{j=0}^{n-1} (1 - a·q^{step·j}).
QSeries poch(const Monomial& a, Integer step, Integer n, Integer order);

// (a; q^step)_∞, keeping only factors that touch order T. Requires a.exponent
// >= 1 for a nonzero a (DivergentProduct otherwise).
QSeries poch_inf(const Monomial& a, Integer step, Integer order);

// 1/(q;q)_∞, whose q^n coefficient is the number of partitions of n.
QSeries partition_function_series(Integer order);

// Σ_n (a;q)_n / (q;q)_n · q^{n(n+1)/2}
QSeries lebesgue_lhs(const Monomial& a, Integer order);
// ∏_{n>=1} (1 - a·q^{2n-1})(1 + q^n)
QSeries lebesgue_rhs(const Monomial& a, Integer order);

// Σ_n q^{n²} / (q;q)_{2n}
QSeries slater_printed_lhs(Integer order);
// Σ_n q^{2n²} / (q;q)_{2n}
QSeries slater_corrected_sum(Integer order);
// (q²;q²)_∞ · Σ_n q^{2n²} / (q;q)_{2n}
QSeries slater_corrected_lhs(Integer order);
// ∏_{n>=1} (1 + q^{8n-3})(1 + q^{8n-5})(1 - q^{8n})
QSeries slater_rhs(Integer order);

struct SlaterReport {
    Integer order = 0;
    std::optional<Mismatch> printed_first_mismatch;
    std::optional<Mismatch> corrected_first_mismatch;

    bool corrected_ok() const noexcept { return !corrected_first_mismatch; }
};

SlaterReport slater_check(Integer order);

// Σ_n q^{n(n+1)} / (q²;q²)_n · 1/(q^{2n+r}; q²)_∞, r in {1, 3}.
QSeries gen_A(Integer r, Integer order);
// 1 / ∏_{j>=0} (1 - q^{4j+r})(1 - q^{4j+2}), r in {1, 3}.
QSeries gen_A_product(Integer r, Integer order);

// Σ_n q^{2n²} / (q;q²)_n · (q^{2n+2}; q²)_∞
QSeries gen_B_signed(Integer order);
// Σ_{m ∈ Z} q^{4m² + m}
QSeries theta_4nn(Integer order);

// True iff n = m(4m+1) or n = m(4m-1) for some m >= 0.
bool is_pentagonal4(Integer n);

// q^n coefficient = count_class(n, spec), n = 0..T, by enumeration.
QSeries class_gf_from_enumeration(const ClassSpec& spec, Integer order);
// q^n coefficient = signed_count_B(n).difference(), n = 0..T, by enumeration.
QSeries signed_B_gf_from_enumeration(Integer order);

} // namespace parsep
