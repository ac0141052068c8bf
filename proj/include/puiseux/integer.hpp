#ifndef PUISEUX_INTEGER_HPP
#define PUISEUX_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "puiseux/errors.hpp"

namespace puiseux {

// Records the largest coefficient seen (in bits) while a scope is active.
// Rational arithmetic and F_q reductions report into it; the bench harness
// uses it to contrast modular and characteristic-0 coefficient growth.
class BitWatermark {
  public:
    class Scope {
      public:
        Scope() {
            prev_ = active_;
            active_ = this;
        }
        ~Scope() { active_ = prev_; }
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;
        [[nodiscard]] std::size_t peak_bits() const { return peak_; }

      private:
        friend class BitWatermark;
        Scope* prev_ = nullptr;
        std::size_t peak_ = 0;
    };

    static void note(std::size_t bits) {
        for (Scope* s = active_; s != nullptr; s = s->prev_)
            if (bits > s->peak_) s->peak_ = bits;
    }

  private:
    static thread_local Scope* active_;
};

class Integer {
  public:
    Integer() : v_(0) {}
    Integer(long n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Integer(unsigned long n) : v_(n) {}        // NOLINT(google-explicit-constructor)
    Integer(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(const std::string& decimal) : v_(decimal, 10) {}
    explicit Integer(mpz_class z) : v_(std::move(z)) {}

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }
    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    std::size_t bits() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    std::string str() const { return v_.get_str(); }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
    Integer& operator+=(const Integer& b) { v_ += b.v_; return *this; }
    Integer& operator-=(const Integer& b) { v_ -= b.v_; return *this; }
    Integer& operator*=(const Integer& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
    friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

    // Truncated quotient, exact when callers guarantee divisibility.
    friend Integer operator/(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ / b.v_)); }

    // Canonical nonnegative residue in [0, |m|).
    Integer mod(const Integer& m) const {
        Integer r;
        mpz_mod(r.v_.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
        return r;
    }

    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return r;
    }

    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return r;
    }

    static Integer pow_ui(const Integer& base, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), e);
        return r;
    }

    // base^e mod m, m > 0.
    static Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
        Integer r;
        mpz_powm(r.v_.get_mpz_t(), base.v_.get_mpz_t(), e.v_.get_mpz_t(), m.v_.get_mpz_t());
        return r;
    }

    // Inverse mod m; throws ZeroInversion when gcd(a, m) != 1.
    static Integer invmod(const Integer& a, const Integer& m) {
        Integer r;
        if (mpz_invert(r.v_.get_mpz_t(), a.v_.get_mpz_t(), m.v_.get_mpz_t()) == 0)
            throw ZeroInversion();
        return r;
    }

    static Integer two_pow(unsigned long e) {
        Integer r;
        mpz_ui_pow_ui(r.v_.get_mpz_t(), 2, e);
        return r;
    }

  private:
    mpz_class v_;
};

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n.raw()) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {
        if (den.is_zero()) throw InputError("rational with zero denominator");
        v_.canonicalize();
        note();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) {
        v_.canonicalize();
        note();
    }

    const mpq_class& raw() const { return v_; }
    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }
    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return mpq_cmp_ui(v_.get_mpq_t(), 1, 1) == 0; }
    bool is_integral() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    std::size_t bits() const {
        std::size_t nb = num().bits(), db = den().bits();
        return nb > db ? nb : db;
    }

    Rational inv() const {
        if (is_zero()) throw ZeroInversion();
        return Rational(mpq_class(1 / v_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    std::string str() const {
        if (is_integral()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    void note() const { BitWatermark::note(bits()); }
    mpq_class v_;
};

// Deterministic explicit-stream random source. All randomized algorithms take
// one of these by reference; no global entropy is consulted anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t u64() { return eng_(); }

    // Uniform in [0, n), n > 0.
    Integer below(const Integer& n) {
        if (n.sign() <= 0) throw InternalError("Rng::below on nonpositive bound");
        const std::size_t nbits = n.bits();
        while (true) {
            Integer candidate = bit_string(nbits);
            if (candidate < n) return candidate;
        }
    }

    // Uniform nbits-bit string (value in [0, 2^nbits)).
    Integer bit_string(std::size_t nbits) {
        mpz_class acc = 0;
        std::size_t got = 0;
        while (got < nbits) {
            std::uint64_t w = u64();
            std::size_t take = nbits - got < 64 ? nbits - got : 64;
            if (take < 64) w &= (take == 0 ? 0 : ((~std::uint64_t{0}) >> (64 - take)));
            mpz_class word = mpz_class(static_cast<unsigned long>(w >> 32)) << 32 |
                             mpz_class(static_cast<unsigned long>(w & 0xffffffffULL));
            acc |= word << got;
            got += take;
        }
        return Integer(acc);
    }

    std::uint64_t below_u64(std::uint64_t n) {
        std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t w;
        do { w = u64(); } while (w >= lim);
        return w % n;
    }

    // Independent child stream; index-stable so parallel users stay reproducible.
    Rng fork(std::uint64_t index) const {
        std::uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return Rng(x);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

// Primality: deterministic Miller-Rabin witness set below 2^64, 40 independent
// random-base rounds above.
bool is_prime(const Integer& n);
bool is_prime(const Integer& n, Rng& rng);

// Uniform prime with exactly `bits` bits (2^(bits-1) <= p < 2^bits).
Integer random_prime(unsigned bits, Rng& rng);

// Smallest prime strictly greater than n.
Integer next_prime_above(const Integer& n);

}  // namespace puiseux

#endif
