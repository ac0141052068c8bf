#include "puiseux/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "puiseux/parse.hpp"
#include "puiseux/puiseux.hpp"

namespace puiseux {

namespace {

BiPoly<QQ> cusp_curve(long k) {
    QQ q0;
    std::vector<UniPoly<QQ>> cy(static_cast<std::size_t>(k) + 1, UniPoly<QQ>::zero(q0));
    std::vector<Rational> a0(static_cast<std::size_t>(k) + 2, Rational(0));
    a0.back() = Rational(-1);
    cy[0] = UniPoly<QQ>(q0, std::move(a0));
    cy[static_cast<std::size_t>(k)] = UniPoly<QQ>::one(q0);
    return BiPoly<QQ>(q0, std::move(cy));
}

BiPoly<QQ> tower_curve(long k) {
    BiPoly<QQ> p = parse_bipoly("y^2 - x");
    for (long i = 1; i < k; ++i) {
        long ex = (2L << i) - 1;  // 3, 7, 15, ...
        BiPoly<QQ> tail = parse_bipoly("x^" + std::to_string(ex) + "*y");
        p = p * p - tail;
    }
    return p;
}

BiPoly<QQ> dense_curve(long k, Rng& rng) {
    QQ q0;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<UniPoly<QQ>> cy;
        for (long j = 0; j <= k; ++j) {
            std::vector<Rational> col;
            for (long i = 0; i <= k; ++i)
                col.emplace_back(static_cast<long>(rng.below_u64(19)) - 9);
            cy.emplace_back(q0, std::move(col));
        }
        BiPoly<QQ> f(q0, std::move(cy));
        if (f.degY() != k) continue;
        if (discriminant_y(f).is_zero()) continue;
        return f;
    }
    throw InternalError("dense_curve: could not find a squarefree sample");
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

BiPoly<QQ> bench_curve(BenchFamily family, long k, Rng& rng) {
    switch (family) {
        case BenchFamily::Cusp: return cusp_curve(k);
        case BenchFamily::Tower: return tower_curve(k);
        case BenchFamily::Dense: return dense_curve(k, rng);
    }
    throw InternalError("bench_curve: bad family");
}

std::string family_name(BenchFamily f) {
    switch (f) {
        case BenchFamily::Cusp: return "cusp";
        case BenchFamily::Tower: return "tower";
        case BenchFamily::Dense: return "dense";
    }
    return "?";
}

std::optional<BenchFamily> family_from_name(const std::string& s) {
    if (s == "cusp") return BenchFamily::Cusp;
    if (s == "tower") return BenchFamily::Tower;
    if (s == "dense") return BenchFamily::Dense;
    return std::nullopt;
}

BenchResult bench_run(const BenchConfig& cfg) {
    BenchResult result;
    for (std::size_t idx = 0; idx < cfg.sizes.size(); ++idx) {
        long k = cfg.sizes[idx];
        Rng rng = Rng(cfg.seed).fork(static_cast<std::uint64_t>(idx) + 1);
        BiPoly<QQ> f = bench_curve(cfg.family, k, rng);

        BenchRecord rec;
        rec.curve = family_name(cfg.family) + "(" + std::to_string(k) + ")";
        rec.d = f.degY();

        auto chosen = choose_prime(f, cfg.strategy, cfg.lambda, rng);
        rec.p = chosen.verdict.p;
        auto ctx = fp_context(rec.p);

        RnpOptions opts;
        opts.x_trunc_eta = cfg.x_trunc_eta;

        // Timed modular pipeline: reduction plus the symbolic stage (singular
        // parts of all expansions above 0). Repetitions lift tiny runs above
        // the clock resolution; the watermark records residue growth.
        auto once = [&](Rng& r) {
            auto fp = reduce_mod_p(f, ctx);
            return singular_parts(fp, r, opts);
        };
        {
            BitWatermark::Scope scope;
            Rng r0 = rng.fork(0);
            PlaceSet ps = once(r0);
            rec.delta = ps.delta;
            rec.peak_bits_modular = scope.peak_bits();
        }
        std::vector<double> samples;
        for (int s = 0; s < std::max(1, cfg.samples); ++s) {
            long reps = 1;
            while (true) {
                Rng r = rng.fork(static_cast<std::uint64_t>(s) * 1000 + 7);
                auto t0 = std::chrono::steady_clock::now();
                for (long i = 0; i < reps; ++i) {
                    Rng ri = r.fork(static_cast<std::uint64_t>(i));
                    once(ri);
                }
                auto t1 = std::chrono::steady_clock::now();
                double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                if (ms >= 2.0 || reps >= 4096) {
                    samples.push_back(ms / static_cast<double>(reps));
                    break;
                }
                reps *= 4;
            }
        }
        rec.wall_ms = median(samples);

        if (cfg.char0_growth) {
            BitWatermark::Scope scope;
            polygon_tree_q(f);
            rec.peak_bits_char0 = scope.peak_bits();
        }
        result.records.push_back(std::move(rec));
    }

    // least-squares slope of log(time) against log(delta)
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : result.records)
        if (r.delta > 0 && r.wall_ms > 0) pts.emplace_back(std::log(static_cast<double>(r.delta)),
                                                           std::log(r.wall_ms));
    double distinct = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].first != pts[0].first) distinct = 1;
    if (pts.size() >= 2 && distinct > 0) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double n = static_cast<double>(pts.size());
        result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return result;
}

}  // namespace puiseux
