#ifndef PUISEUX_BENCH_HPP
#define PUISEUX_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "puiseux/reduction.hpp"

namespace puiseux {

enum class BenchFamily { Cusp, Tower, Dense };

// Built-in curve generators. cusp(k): y^k - x^{k+1}. tower(k): nested
// ramification P_1 = y^2 - x, P_{i+1} = P_i^2 - x^{2^{i+1}-1} y. dense(k):
// random dense degree-k curve from the instance seed.
BiPoly<QQ> bench_curve(BenchFamily family, long k, Rng& rng);
std::string family_name(BenchFamily f);
std::optional<BenchFamily> family_from_name(const std::string& s);

struct BenchRecord {
    std::string curve;        // family(k)
    long d = 0;               // deg_y
    Integer p;                // chosen prime
    long delta = 0;           // output size of the singular parts
    double wall_ms = 0;       // median over repetitions of the modular pipeline
    std::size_t peak_bits_modular = 0;
    std::size_t peak_bits_char0 = 0;  // polygon tree over Q on the same input
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::optional<double> slope;  // least-squares log(time) vs log(delta)
};

struct BenchConfig {
    BenchFamily family = BenchFamily::Cusp;
    std::vector<long> sizes;
    PrimeStrategy strategy = PrimeStrategy::MonteCarlo;
    unsigned lambda = 62;
    std::uint64_t seed = 1;
    int samples = 5;               // timing samples (median recorded)
    bool char0_growth = true;      // also run the char-0 polygon tree
    std::optional<long> x_trunc_eta;  // truncated arithmetic in the transforms
};

BenchResult bench_run(const BenchConfig& cfg);

}  // namespace puiseux

#endif
