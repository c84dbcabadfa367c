#ifndef TVPM_RATIONAL_HPP
#define TVPM_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tvpm {

/*
 * Rat: exact rational number in lowest terms with a positive denominator.
 *
 * Every constructor canonicalizes, and GMP keeps results of arithmetic on
 * canonical operands canonical, so structural equality is value equality.
 *
 * I/O literal syntax is "p" or "p/q" with decimal integers and q > 0.
 */
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& v) : q_(v) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rat parse(std::string_view s) {
        auto is_int = [](std::string_view t, bool allow_sign) {
            if (t.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (t[0] == '-' || t[0] == '+')) ++i;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        const auto slash = s.find('/');
        std::string_view num = s.substr(0, slash);
        if (!is_int(num, true))
            throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
        std::string num_str(num);
        if (num_str[0] == '+') num_str.erase(0, 1);
        if (slash == std::string_view::npos) return Rat(mpz_class(num_str));
        std::string_view den = s.substr(slash + 1);
        if (!is_int(den, false))
            throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
        mpz_class d{std::string(den)};
        if (d <= 0)
            throw std::invalid_argument("rational literal needs a positive denominator: '" +
                                        std::string(s) + "'");
        return Rat(mpz_class(num_str), d);
    }

    std::string str() const { return q_.get_str(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_canonical() const {
        if (q_.get_den() <= 0) return false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return g == 1;
    }

    Rat operator-() const { return Rat(mpq_class(-q_), raw_tag{}); }
    Rat abs() const { return Rat(mpq_class(::abs(q_)), raw_tag{}); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct raw_tag {};
    Rat(mpq_class q, raw_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace tvpm

#endif  // TVPM_RATIONAL_HPP
