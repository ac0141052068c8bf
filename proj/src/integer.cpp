#include "puiseux/integer.hpp"

#include <array>

namespace puiseux {

thread_local BitWatermark::Scope* BitWatermark::active_ = nullptr;

namespace {

// One Miller-Rabin round for odd n > 2 with base a, 1 < a < n-1.
// Returns false when a witnesses compositeness.
bool mr_round(const Integer& n, const Integer& a, const Integer& d, unsigned long r) {
    Integer x = Integer::powmod(a, d, n);
    Integer n1 = n - Integer(1);
    if (x.is_one() || x == n1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x).mod(n);
        if (x == n1) return true;
    }
    return false;
}

bool miller_rabin(const Integer& n, const Integer* bases, std::size_t count, Rng* rng,
                  std::size_t random_rounds) {
    // n odd, n >= 3 here.
    Integer d = n - Integer(1);
    unsigned long r = 0;
    while (!d.is_odd()) {
        d = d / Integer(2);
        ++r;
    }
    Integer n3 = n - Integer(3);
    for (std::size_t i = 0; i < count; ++i) {
        Integer a = bases[i].mod(n);
        if (a < Integer(2)) continue;
        if (a > n - Integer(2)) continue;
        if (!mr_round(n, a, d, r)) return false;
    }
    for (std::size_t i = 0; i < random_rounds; ++i) {
        Integer a = rng->below(n3) + Integer(2);  // uniform in [2, n-2]
        if (!mr_round(n, a, d, r)) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n, Rng& rng) {
    if (n < Integer(2)) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == Integer(p)) return true;
        if (n.mod(Integer(p)).is_zero()) return false;
    }
    if (n.bits() <= 64) {
        // Sinclair's deterministic witness set for n < 2^64.
        static const std::array<Integer, 7> kBases = {
            Integer(2),          Integer(325),        Integer(9375),
            Integer(28178),      Integer(450775),     Integer(9780504),
            Integer(1795265022),
        };
        return miller_rabin(n, kBases.data(), kBases.size(), nullptr, 0);
    }
    static const Integer kTwo(2);
    return miller_rabin(n, &kTwo, 1, &rng, 40);
}

bool is_prime(const Integer& n) {
    Rng rng(0x7075697365757830ULL);  // fixed stream: answers stay deterministic
    return is_prime(n, rng);
}

Integer random_prime(unsigned bits, Rng& rng) {
    if (bits < 3) throw InputError("random_prime needs bits >= 3");
    const unsigned long budget = 100UL * bits;
    Integer lo = Integer::two_pow(bits - 1);
    for (unsigned long attempt = 0; attempt < budget; ++attempt) {
        Integer candidate = lo + rng.bit_string(bits - 1);
        if (!candidate.is_odd()) candidate += Integer(1);
        if (candidate.bits() != bits) continue;
        if (is_prime(candidate, rng)) return candidate;
    }
    throw RetryBudgetExhausted("random_prime: no prime after " + std::to_string(budget) +
                               " candidates; defective rng?");
}

Integer next_prime_above(const Integer& n) {
    Integer c = n + Integer(1);
    if (c <= Integer(2)) return Integer(2);
    if (!c.is_odd()) c += Integer(1);
    while (!is_prime(c)) c += Integer(2);
    return c;
}

}  // namespace puiseux
