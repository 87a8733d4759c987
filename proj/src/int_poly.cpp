#include "kalu/int_poly.hpp"

#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace kalu {

IntPoly IntPoly::constant(const Integer& c) { return term(0, c); }

IntPoly IntPoly::term(int exponent, const Integer& c) {
    IntPoly p;
    p.add_term(exponent, c);
    return p;
}

int IntPoly::min_exponent() const {
    if (is_zero()) throw internal_error("min_exponent of the zero polynomial");
    return terms_.begin()->first;
}

int IntPoly::degree() const {
    if (is_zero()) throw internal_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

Integer IntPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

void IntPoly::add_term(int exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    IntPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

Integer IntPoly::eval_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool IntPoly::has_negative_exponent() const {
    return !is_zero() && terms_.begin()->first < 0;
}

bool IntPoly::all_exponents_even() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

bool IntPoly::all_coeffs_non_negative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool IntPoly::palindromic_about(int center) const {
    for (const auto& [e, c] : terms_)
        if (coeff(2 * center - e) != c) return false;
    return true;
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw internal_error("division by the zero polynomial");
    if (num.is_zero()) return IntPoly();
    if (num.has_negative_exponent() || den.has_negative_exponent())
        throw internal_error("divide_exact expects non-negative exponents");
    IntPoly quotient;
    IntPoly rem = num;
    const int dden = den.degree();
    const Integer lead = den.coeff(dden);
    while (!rem.is_zero() && rem.degree() >= dden) {
        const int e = rem.degree() - dden;
        const Integer top = rem.coeff(rem.degree());
        if (top % lead != 0)
            throw internal_error("inexact polynomial division: " + num.to_text() + " by " + den.to_text());
        const Integer q = top / lead;
        quotient.add_term(e, q);
        rem -= den * IntPoly::term(e, q);
    }
    if (!rem.is_zero())
        throw internal_error("inexact polynomial division: " + num.to_text() + " by " + den.to_text());
    return quotient;
}

IntPoly h_poly(int beta) {
    IntPoly p;
    for (int a = 0; a <= beta; ++a) p.add_term(2 * a, 1);
    return p;
}

IntPoly big_p(int alpha) {
    if (alpha < 0) return IntPoly();
    static std::mutex mu;
    static std::vector<IntPoly> cache{IntPoly::constant(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= alpha)
        cache.push_back(cache.back() * h_poly(static_cast<int>(cache.size()) - 1));
    return cache[alpha];
}

IntPoly gauss_poincare(int k, int l) {
    if (k < 0 || l < 0 || k > l)
        throw validation_error("gauss_poincare requires 0 <= k <= l");
    static std::mutex mu;
    static std::map<std::pair<int, int>, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, l});
    if (it != cache.end()) return it->second;
    IntPoly value = divide_exact(big_p(l), big_p(k) * big_p(l - k));
    cache.emplace(std::make_pair(k, l), value);
    return value;
}

IntPoly truncate_below(const IntPoly& p, int beta) {
    IntPoly out;
    for (const auto& [e, c] : p.terms())
        if (e >= beta) out.add_term(e, c);
    return out;
}

IntPoly symmetrize_about_zero(const IntPoly& p) {
    if (p.has_negative_exponent())
        throw internal_error("symmetrize_about_zero expects non-negative exponents");
    IntPoly out = p;
    for (const auto& [e, c] : p.terms())
        if (e > 0) out.add_term(-e, c);
    return out;
}

IntPoly shift_exponents(const IntPoly& p, int beta) {
    IntPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e + beta, c);
    return out;
}

IntPoly u_tilde(const IntPoly& r, int m) {
    if (r.has_negative_exponent())
        throw internal_error("u_tilde expects non-negative exponents");
    IntPoly kept = shift_exponents(truncate_below(r, m), -m);
    IntPoly out = shift_exponents(symmetrize_about_zero(kept), m);
    if (out.has_negative_exponent())
        throw internal_error("u_tilde produced a negative exponent: degree of " + r.to_text() +
                             " exceeds twice the center " + std::to_string(m));
    return out;
}

}  // namespace kalu
