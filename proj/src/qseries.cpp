#include "parsep/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace parsep {

namespace {

void check_order(Integer order) {
    if (order < 0) throw InvalidParameter("truncation order must be >= 0, got " + std::to_string(order));
}

void check_step(Integer step) {
    if (step < 1) throw InvalidParameter("Pochhammer step must be >= 1, got " + std::to_string(step));
}

Integer parse_integer(std::string_view text, std::string_view what) {
    Integer v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

// acc += term·q^shift
void accumulate_shifted(QSeries& acc, const QSeries& term, Integer shift) {
    QSeries shifted = term;
    shifted.shift(shift);
    acc += shifted;
}

} // namespace

Monomial parse_monomial(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty monomial");

    std::string_view rest = s;
    Integer sign = 1;
    if (rest.front() == '+' || rest.front() == '-') {
        if (rest.front() == '-') sign = -1;
        rest.remove_prefix(1);
    }

    const auto q_pos = rest.find('q');
    if (q_pos == std::string_view::npos) return Monomial{sign * parse_integer(rest, "monomial coefficient"), 0};

    std::string_view coeff_text = rest.substr(0, q_pos);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.remove_suffix(1);
    const Integer coeff = coeff_text.empty() ? 1 : parse_integer(coeff_text, "monomial coefficient");

    std::string_view exp_text = rest.substr(q_pos + 1);
    Integer exponent = 1;
    if (!exp_text.empty()) {
        if (exp_text.front() != '^') throw ParseError("expected '^' after q in '" + s + "'");
        exponent = parse_integer(exp_text.substr(1), "monomial exponent");
        if (exponent < 0) throw ParseError("monomial exponent must be >= 0 in '" + s + "'");
    }
    return Monomial{sign * coeff, exponent};
}

std::string to_string(const Monomial& m) {
    if (m.coefficient == 0) return "0";
    if (m.exponent == 0) return std::to_string(m.coefficient);
    std::string out;
    if (m.coefficient == -1)
        out = "-";
    else if (m.coefficient != 1)
        out = std::to_string(m.coefficient);
    out += "q";
    if (m.exponent != 1) out += "^" + std::to_string(m.exponent);
    return out;
}

QSeries::QSeries(Integer order) {
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

QSeries QSeries::one(Integer order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Monomial& m, Integer order) {
    if (m.exponent < 0) throw InvalidParameter("monomial exponent must be >= 0");
    QSeries s(order);
    if (m.exponent <= order) s.coeffs_[static_cast<std::size_t>(m.exponent)] = m.coefficient;
    return s;
}

QSeries QSeries::from_coefficients(std::span<const Integer> coeffs, Integer order) {
    QSeries s(order);
    const std::size_t n = std::min(coeffs.size(), s.coeffs_.size());
    std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
    return s;
}

QSeries QSeries::truncated(Integer order) const {
    check_order(order);
    if (order >= this->order()) return *this;
    return from_coefficients(coeffs_, order);
}

QSeries& QSeries::operator+=(const QSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
    if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
    return *this;
}

QSeries& QSeries::shift(Integer k) {
    if (k < 0) throw InvalidParameter("cannot shift a power series by a negative exponent");
    const auto n = static_cast<Integer>(coeffs_.size());
    if (k >= n) {
        std::fill(coeffs_.begin(), coeffs_.end(), 0);
        return *this;
    }
    std::move_backward(coeffs_.begin(), coeffs_.end() - k, coeffs_.end());
    std::fill(coeffs_.begin(), coeffs_.begin() + k, 0);
    return *this;
}

QSeries& QSeries::mul_one_minus(const Monomial& m) {
    if (m.exponent < 0) throw InvalidParameter("monomial exponent must be >= 0");
    if (m.coefficient == 0 || m.exponent > order()) return *this;
    if (m.exponent == 0) {
        const Integer factor = checked_sub(1, m.coefficient);
        for (Integer& c : coeffs_) c = checked_mul(c, factor);
        return *this;
    }
    const auto e = static_cast<std::size_t>(m.exponent);
    for (std::size_t i = coeffs_.size() - 1; i >= e; --i)
        coeffs_[i] = checked_sub(coeffs_[i], checked_mul(m.coefficient, coeffs_[i - e]));
    return *this;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
    const Integer order = std::min(a.order(), b.order());
    QSeries out(order);
    for (Integer i = 0; i <= order; ++i) {
        const Integer ai = a.coefficient(i);
        if (ai == 0) continue;
        for (Integer j = 0; i + j <= order; ++j) {
            const Integer bj = b.coefficient(j);
            if (bj == 0) continue;
            auto& slot = out.coeffs_[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(ai, bj));
        }
    }
    return out;
}

QSeries QSeries::inverse() const {
    const Integer c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw NonUnitConstantTerm("constant term " + std::to_string(c0) + " is not invertible over the integers");
    QSeries out(order());
    auto& b = out.coeffs_;
    b[0] = c0;
    // a·b = 1  =>  b_n = -c0 · Σ_{k=1..n} a_k b_{n-k}
    for (std::size_t n = 1; n < b.size(); ++n) {
        Integer acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (coeffs_[k] == 0 || b[n - k] == 0) continue;
            acc = checked_add(acc, checked_mul(coeffs_[k], b[n - k]));
        }
        b[n] = checked_mul(checked_sub(0, c0), acc);
    }
    return out;
}

std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs) {
    const Integer order = std::min(lhs.order(), rhs.order());
    for (Integer e = 0; e <= order; ++e)
        if (lhs.coefficient(e) != rhs.coefficient(e)) return Mismatch{e, lhs.coefficient(e), rhs.coefficient(e)};
    return std::nullopt;
}

QSeries poch(const Monomial& a, Integer step, Integer n, Integer order) {
    check_step(step);
    if (n < 0) throw InvalidParameter("Pochhammer length must be >= 0");
    if (a.exponent < 0) throw InvalidParameter("monomial exponent must be >= 0");
    QSeries out = QSeries::one(order);
    for (Integer j = 0; j < n; ++j) {
        const Integer e = checked_add(a.exponent, checked_mul(step, j));
        if (e > order) break;  // this and every later factor is 1 up to order T
        out.mul_one_minus(Monomial{a.coefficient, e});
    }
    return out;
}

QSeries poch_inf(const Monomial& a, Integer step, Integer order) {
    check_step(step);
    check_order(order);
    if (a.is_zero()) return QSeries::one(order);
    if (a.exponent < 1)
        throw DivergentProduct("infinite product (" + to_string(a) + "; q^" + std::to_string(step) +
                               ")_inf has a constant-order factor");
    QSeries out = QSeries::one(order);
    for (Integer e = a.exponent; e <= order; e += step) out.mul_one_minus(Monomial{a.coefficient, e});
    return out;
}

QSeries partition_function_series(Integer order) { return poch_inf(Monomial::q_power(1), 1, order).inverse(); }

QSeries lebesgue_lhs(const Monomial& a, Integer order) {
    check_order(order);
    QSeries acc(order);
    for (Integer n = 0; n * (n + 1) / 2 <= order; ++n) {
        const Integer shift = n * (n + 1) / 2;
        const Integer t = order - shift;
        QSeries term = poch(a, 1, n, t) * poch(Monomial::q_power(1), 1, n, t).inverse();
        accumulate_shifted(acc, QSeries::from_coefficients(term.coefficients(), order), shift);
    }
    return acc;
}

QSeries lebesgue_rhs(const Monomial& a, Integer order) {
    // ∏_{n>=1} (1 - a q^{2n-1}) = (a·q; q²)_∞, and ∏ (1 + q^n) = (-q; q)_∞.
    return poch_inf(a.times_q(1), 2, order) * poch_inf(Monomial::q_power(1, -1), 1, order);
}

namespace {

// Σ_n q^{exponent(n)} / (q;q)_{2n} for an increasing exponent sequence.
template <class Exponent>
QSeries sum_over_q_q_2n(Integer order, Exponent exponent) {
    check_order(order);
    QSeries acc(order);
    for (Integer n = 0; exponent(n) <= order; ++n) {
        const Integer shift = exponent(n);
        QSeries term = poch(Monomial::q_power(1), 1, 2 * n, order - shift).inverse();
        accumulate_shifted(acc, QSeries::from_coefficients(term.coefficients(), order), shift);
    }
    return acc;
}

} // namespace

QSeries slater_printed_lhs(Integer order) {
    return sum_over_q_q_2n(order, [](Integer n) { return n * n; });
}

QSeries slater_corrected_sum(Integer order) {
    return sum_over_q_q_2n(order, [](Integer n) { return 2 * n * n; });
}

QSeries slater_corrected_lhs(Integer order) {
    return poch_inf(Monomial::q_power(2), 2, order) * slater_corrected_sum(order);
}

QSeries slater_rhs(Integer order) {
    return poch_inf(Monomial::q_power(5, -1), 8, order) * poch_inf(Monomial::q_power(3, -1), 8, order) *
           poch_inf(Monomial::q_power(8), 8, order);
}

SlaterReport slater_check(Integer order) {
    if (order < 2) throw InvalidParameter("Slater check needs truncation order >= 2");
    const QSeries rhs = slater_rhs(order);
    SlaterReport report;
    report.order = order;
    report.printed_first_mismatch = first_mismatch(slater_printed_lhs(order), rhs);
    report.corrected_first_mismatch = first_mismatch(slater_corrected_lhs(order), rhs);
    return report;
}

QSeries gen_A(Integer r, Integer order) {
    if (r != 1 && r != 3) throw InvalidParameter("r must be 1 or 3");
    check_order(order);
    QSeries acc(order);
    for (Integer n = 0; n * (n + 1) <= order; ++n) {
        const Integer shift = n * (n + 1);
        const Integer t = order - shift;
        QSeries term = poch(Monomial::q_power(2), 2, n, t).inverse() *
                       poch_inf(Monomial::q_power(2 * n + r), 2, t).inverse();
        accumulate_shifted(acc, QSeries::from_coefficients(term.coefficients(), order), shift);
    }
    return acc;
}

QSeries gen_A_product(Integer r, Integer order) {
    if (r != 1 && r != 3) throw InvalidParameter("r must be 1 or 3");
    return (poch_inf(Monomial::q_power(r), 4, order) * poch_inf(Monomial::q_power(2), 4, order)).inverse();
}

QSeries gen_B_signed(Integer order) {
    check_order(order);
    QSeries acc(order);
    for (Integer n = 0; 2 * n * n <= order; ++n) {
        const Integer shift = 2 * n * n;
        const Integer t = order - shift;
        QSeries term = poch(Monomial::q_power(1), 2, n, t).inverse() * poch_inf(Monomial::q_power(2 * n + 2), 2, t);
        accumulate_shifted(acc, QSeries::from_coefficients(term.coefficients(), order), shift);
    }
    return acc;
}

QSeries theta_4nn(Integer order) {
    QSeries out(order);
    // m >= 0 gives m(4m+1); m < 0 gives |m|(4|m|-1).
    for (Integer m = 0; m * (4 * m + 1) <= order; ++m) out += QSeries::monomial(Monomial::q_power(m * (4 * m + 1)), order);
    for (Integer m = 1; m * (4 * m - 1) <= order; ++m) out += QSeries::monomial(Monomial::q_power(m * (4 * m - 1)), order);
    return out;
}

bool is_pentagonal4(Integer n) {
    if (n < 0) throw InvalidParameter("is_pentagonal4 expects n >= 0");
    for (Integer m = 0; m * (4 * m - 1) <= n; ++m)
        if (m * (4 * m + 1) == n || m * (4 * m - 1) == n) return true;
    return false;
}

QSeries class_gf_from_enumeration(const ClassSpec& spec, Integer order) {
    check_order(order);
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (Integer n = 0; n <= order; ++n) coeffs.push_back(count_class(n, spec));
    return QSeries::from_coefficients(coeffs, order);
}

QSeries signed_B_gf_from_enumeration(Integer order) {
    check_order(order);
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (Integer n = 0; n <= order; ++n) coeffs.push_back(signed_count_B(n).difference());
    return QSeries::from_coefficients(coeffs, order);
}

} // namespace parsep
