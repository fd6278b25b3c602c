#ifndef ODELIM_COEFFICIENT_HPP
#define ODELIM_COEFFICIENT_HPP

#include <map>
#include <string>
#include <utility>

#include "odelim/errors.hpp"
#include "odelim/multipoly.hpp"
#include "odelim/rational.hpp"

namespace odelim {

// Element of the coefficient field: a quotient of integer polynomials in the
// declared transcendental circuit constants. The representation is canonical:
// numerator and denominator are coprime, the denominator's leading integer
// coefficient is positive, and zero is always 0/1. Equality of field elements
// is therefore structural equality.
class Coefficient {
public:
    Coefficient() : num_(MultiPoly::zero()), den_(MultiPoly::one()) {}

    static Coefficient from_int(Int v) { return Coefficient(MultiPoly(std::move(v)), MultiPoly::one()); }
    static Coefficient from_rat(const Rat& v) {
        return Coefficient(MultiPoly(boost::multiprecision::numerator(v)),
                           MultiPoly(boost::multiprecision::denominator(v)));
    }
    static Coefficient symbol(const std::string& name) {
        return Coefficient(MultiPoly::atom(name), MultiPoly::one());
    }
    static Coefficient zero() { return Coefficient(); }
    static Coefficient one() { return from_int(1); }

    // Reduce num/den to the unique canonical representative.
    Coefficient(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) throw DivisionByZero("zero denominator in coefficient");
        if (num.is_zero()) {
            num_ = MultiPoly::zero();
            den_ = MultiPoly::one();
            return;
        }
        MultiPoly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = *divide_exact(num, g);
            den = *divide_exact(den, g);
        }
        if (den.leading_term().second < 0) {
            num = -num;
            den = -den;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return num_.is_constant() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    Coefficient operator-() const { return Coefficient(unsafe{}, -num_, den_); }

    Coefficient operator+(const Coefficient& o) const {
        return Coefficient(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Coefficient operator-(const Coefficient& o) const {
        return Coefficient(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Coefficient operator*(const Coefficient& o) const {
        return Coefficient(num_ * o.num_, den_ * o.den_);
    }
    Coefficient operator/(const Coefficient& o) const {
        if (o.is_zero()) throw DivisionByZero("division by zero coefficient");
        return Coefficient(num_ * o.den_, den_ * o.num_);
    }

    Coefficient inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
        return Coefficient(den_, num_);
    }

    bool operator==(const Coefficient& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    static int cmp(const Coefficient& a, const Coefficient& b) {
        int c = MultiPoly::cmp(a.num_, b.num_);
        if (c != 0) return c;
        return MultiPoly::cmp(a.den_, b.den_);
    }

    Rat evaluate(const std::map<std::string, Rat>& assignment) const {
        Rat d = den_.evaluate(assignment);
        if (d == 0) throw EvaluationSingular();
        return num_.evaluate(assignment) / d;
    }

    // `(num)/(den)`; integer-only denominators are printed inline.
    std::string render() const {
        std::string n = num_.term_count() > 1 ? "(" + num_.render() + ")" : num_.render();
        if (den_.is_one()) return n;
        if (den_.is_constant()) return n + "/" + den_.render();
        return "(" + num_.render() + ")/(" + den_.render() + ")";
    }

private:
    struct unsafe {};
    Coefficient(unsafe, MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_;
    MultiPoly den_;
};

inline Coefficient canonicalize(const MultiPoly& num, const MultiPoly& den) {
    return Coefficient(num, den);
}

}  // namespace odelim

#endif  // ODELIM_COEFFICIENT_HPP
