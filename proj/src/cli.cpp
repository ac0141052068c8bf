#include "puiseux/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "puiseux/bench.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/serialize.hpp"

namespace puiseux {

namespace {

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("PUISEUX_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

FqCtxPtr parse_field_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = spec.find(',', start);
        parts.push_back(spec.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    PrimeField base{Integer(parts[0])};
    if (parts.size() == 1) return fp_context(base);
    long k = std::stol(parts[1]);
    if (k < 1) throw InputError("--field: extension degree must be >= 1");
    if (parts.size() >= 3) {
        std::vector<Integer> modulus;
        std::string mtext = parts[2];
        std::size_t pos = 0;
        while (true) {
            std::size_t colon = mtext.find(':', pos);
            modulus.emplace_back(mtext.substr(pos, colon == std::string::npos ? colon : colon - pos));
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
        if (static_cast<long>(modulus.size()) != k + 1)
            throw InputError("--field: modulus must list k+1 coefficients, constant first");
        return fq_make(base, std::move(modulus));
    }
    // deterministic modulus from the field parameters, independent of --seed
    Rng rng(0xf1e1du ^ (static_cast<std::uint64_t>(k) << 32));
    auto fp = fp_context(base);
    auto m = random_irreducible(fp, static_cast<int>(k), rng);
    std::vector<Integer> modulus;
    for (const auto& c : m.c) modulus.push_back(c.scalar());
    return fq_context_unchecked(base.p(), std::move(modulus));
}

PrimeStrategy parse_strategy(const std::string& s) {
    if (s == "mc") return PrimeStrategy::MonteCarlo;
    if (s == "lv") return PrimeStrategy::LasVegas;
    if (s == "det") return PrimeStrategy::Deterministic;
    throw InputError("--strategy must be one of mc, lv, det");
}

std::vector<long> parse_sizes(const std::string& s) {
    std::vector<long> out;
    auto range = s.find("..");
    if (range != std::string::npos) {
        long lo = std::stol(s.substr(0, range));
        long hi = std::stol(s.substr(range + 2));
        for (long k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        out.push_back(std::stol(s.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw InputError("--sizes: empty list");
    return out;
}

struct CommonFlags {
    std::string expr;
    std::string field;
    std::string format = "text";
    std::uint64_t seed = 1;
    CLI::Option* seed_opt = nullptr;
};

void emit(std::ostream& out, const std::string& format, const Json& j,
          const std::string& text) {
    if (format == "json") out << j.dump(2) << "\n";
    else out << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Newton-Puiseux expansions over finite fields, polygon trees, "
                 "good-prime selection, and plane-curve genus"};
    app.require_subcommand(1);

    // polygon
    auto* cmd_polygon = app.add_subcommand("polygon", "Newton polygon of F(x, y)");
    CommonFlags fpoly;
    std::string svg_path;
    cmd_polygon->add_option("expr", fpoly.expr, "polynomial, e.g. \"y^2 - x^3\"")->required();
    cmd_polygon->add_option("--field", fpoly.field, "p[,k[,c0:c1:...:ck]] coefficient field");
    cmd_polygon->add_option("--format", fpoly.format)->check(CLI::IsMember({"text", "json"}));
    cmd_polygon->add_option("--svg", svg_path, "write an SVG figure to this path");
    fpoly.seed_opt = cmd_polygon->add_option("--seed", fpoly.seed);

    // tree
    auto* cmd_tree = app.add_subcommand("tree", "polygon tree over Q or over F_q");
    CommonFlags ftree;
    cmd_tree->add_option("expr", ftree.expr)->required();
    cmd_tree->add_option("--field", ftree.field);
    cmd_tree->add_option("--format", ftree.format)->check(CLI::IsMember({"text", "json"}));
    ftree.seed_opt = cmd_tree->add_option("--seed", ftree.seed);

    // puiseux
    auto* cmd_puiseux = app.add_subcommand("puiseux", "rational Puiseux expansions above a center");
    CommonFlags fpux;
    long trunc = 12;
    std::string center = "0";
    cmd_puiseux->add_option("expr", fpux.expr)->required();
    cmd_puiseux->add_option("--field", fpux.field)->required();
    cmd_puiseux->add_option("--trunc", trunc, "exclusive bound on known T-exponents");
    cmd_puiseux->add_option("--center", center, "expansion center: an integer or 'inf'");
    cmd_puiseux->add_option("--format", fpux.format)->check(CLI::IsMember({"text", "json"}));
    fpux.seed_opt = cmd_puiseux->add_option("--seed", fpux.seed);

    // goodprime
    auto* cmd_prime = app.add_subcommand("goodprime", "good-reduction prime selection");
    CommonFlags fprime;
    std::string strategy = "mc";
    unsigned lambda = 62;
    cmd_prime->add_option("expr", fprime.expr)->required();
    cmd_prime->add_option("--strategy", strategy)->check(CLI::IsMember({"mc", "lv", "det"}));
    cmd_prime->add_option("--lambda", lambda, "prime bit size");
    cmd_prime->add_option("--format", fprime.format)->check(CLI::IsMember({"text", "json"}));
    fprime.seed_opt = cmd_prime->add_option("--seed", fprime.seed);

    // genus
    auto* cmd_genus = app.add_subcommand("genus", "genus of the plane curve F = 0");
    CommonFlags fgen;
    std::string gstrategy = "lv";
    unsigned glambda = 62;
    cmd_genus->add_option("expr", fgen.expr)->required();
    cmd_genus->add_option("--field", fgen.field, "compute directly over F_p");
    cmd_genus->add_option("--strategy", gstrategy)->check(CLI::IsMember({"mc", "lv", "det"}));
    cmd_genus->add_option("--lambda", glambda);
    cmd_genus->add_option("--format", fgen.format)->check(CLI::IsMember({"text", "json"}));
    fgen.seed_opt = cmd_genus->add_option("--seed", fgen.seed);

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "empirical scaling harness");
    std::string family = "cusp", sizes = "2..6", bstrategy = "mc", bformat = "text", out_path;
    unsigned blambda = 62;
    std::uint64_t bseed = 1;
    long eta = -1;
    CLI::Option* bseed_opt;
    cmd_bench->add_option("--family", family)->check(CLI::IsMember({"cusp", "tower", "dense"}));
    cmd_bench->add_option("--sizes", sizes, "e.g. 2..9 or 2,4,8");
    cmd_bench->add_option("--strategy", bstrategy)->check(CLI::IsMember({"mc", "lv", "det"}));
    cmd_bench->add_option("--lambda", blambda);
    cmd_bench->add_option("--eta", eta, "x-degree truncation for the transforms (-1: exact)");
    cmd_bench->add_option("--out", out_path, "write the JSON records to this path");
    cmd_bench->add_option("--format", bformat)->check(CLI::IsMember({"text", "json"}));
    bseed_opt = cmd_bench->add_option("--seed", bseed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*cmd_polygon) {
            NewtonPolygon np;
            std::vector<std::optional<long>> support;
            if (fpoly.field.empty()) {
                auto f = parse_bipoly(fpoly.expr);
                np = newton_polygon(f);
                support = support_valuations(f);
            } else {
                auto f = parse_bipoly_fq(fpoly.expr, parse_field_spec(fpoly.field));
                np = newton_polygon(f);
                support = support_valuations(f);
            }
            if (!svg_path.empty()) {
                std::ofstream os(svg_path);
                if (!os) throw InputError("cannot write SVG to " + svg_path);
                os << polygon_svg(np, support);
            }
            std::ostringstream text;
            for (const auto& e : np.edges)
                text << "edge (q=" << e.q << ", m=" << e.m << ", l=" << e.l << ") from (" << e.j0
                     << "," << (e.l - e.m * e.j0) / e.q << ") to (" << e.j1 << ","
                     << (e.l - e.m * e.j1) / e.q << ")\n";
            emit(out, fpoly.format, json_of_polygon(np), text.str());
        } else if (*cmd_tree) {
            std::uint64_t seed = resolve_seed(ftree.seed_opt, ftree.seed);
            PolygonTree t;
            if (ftree.field.empty()) {
                t = polygon_tree_q(parse_bipoly(ftree.expr));
            } else {
                Rng rng(seed);
                t = polygon_tree_fq(parse_bipoly_fq(ftree.expr, parse_field_spec(ftree.field)),
                                    rng);
            }
            emit(out, ftree.format, json_of_tree(t), tree_str(t));
        } else if (*cmd_puiseux) {
            std::uint64_t seed = resolve_seed(fpux.seed_opt, fpux.seed);
            auto ctx = parse_field_spec(fpux.field);
            auto f = parse_bipoly_fq(fpux.expr, ctx);
            Center c = center == "inf" ? Center::inf()
                                       : Center::at(fq_from_integer(ctx, Integer(center)));
            Rng rng(seed);
            PlaceSet ps = places_above(f, c, trunc, rng);
            std::ostringstream text;
            for (const auto& ex : ps.expansions) text << expansion_str(ps.center, ex) << "\n";
            text << "conservation: sum e*f = " << ps.conservation << ", delta = " << ps.delta
                 << "\n";
            emit(out, fpux.format, json_of_placeset(ps), text.str());
        } else if (*cmd_prime) {
            std::uint64_t seed = resolve_seed(fprime.seed_opt, fprime.seed);
            Rng rng(seed);
            auto res = choose_prime(parse_bipoly(fprime.expr), parse_strategy(strategy), lambda,
                                    rng);
            Json j;
            j["verdict"] = json_of_verdict(res.verdict);
            Json rej = Json::array();
            for (const auto& r : res.rejected) rej.push_back(json_of_verdict(r));
            j["rejected"] = rej;
            std::ostringstream text;
            text << "p = " << res.verdict.p.str() << " [" << status_str(res.verdict.status)
                 << "]\n";
            for (const auto& r : res.rejected)
                text << "rejected " << r.p.str() << ": " << reason_str(r.reason) << "\n";
            emit(out, fprime.format, j, text.str());
        } else if (*cmd_genus) {
            std::uint64_t seed = resolve_seed(fgen.seed_opt, fgen.seed);
            Rng rng(seed);
            GenusReport rep;
            if (fgen.field.empty()) {
                rep = genus_over_q(parse_bipoly(fgen.expr), parse_strategy(gstrategy), glambda,
                                   rng);
            } else {
                rep = genus_mod_p(parse_bipoly_fq(fgen.expr, parse_field_spec(fgen.field)),
                                  rng);
            }
            std::ostringstream text;
            text << "genus = " << rep.genus;
            if (rep.prime)
                text << "  (p = " << rep.prime->p.str() << ", " << status_str(rep.prime->status)
                     << ")";
            text << "\n";
            for (const auto& c : rep.contributions)
                text << "  " << c.center << ": multiplier " << c.multiplier
                     << ", sum f(e-1) = " << c.contribution << ", sum e*f = " << c.conservation
                     << "\n";
            emit(out, fgen.format, json_of_genus(rep), text.str());
        } else if (*cmd_bench) {
            BenchConfig cfg;
            auto fam = family_from_name(family);
            cfg.family = *fam;
            cfg.sizes = parse_sizes(sizes);
            cfg.strategy = parse_strategy(bstrategy);
            cfg.lambda = blambda;
            cfg.seed = resolve_seed(bseed_opt, bseed);
            if (eta >= 0) cfg.x_trunc_eta = eta;
            BenchResult res = bench_run(cfg);
            Json j;
            Json recs = Json::array();
            for (const auto& r : res.records) {
                Json e;
                e["curve"] = r.curve;
                e["d"] = r.d;
                e["p"] = r.p.str();
                e["delta"] = r.delta;
                e["wall_ms"] = r.wall_ms;
                e["peak_bits_modular"] = r.peak_bits_modular;
                e["peak_bits_char0"] = r.peak_bits_char0;
                recs.push_back(e);
            }
            j["records"] = recs;
            if (res.slope) j["slope"] = *res.slope;
            else j["slope"] = nullptr;
            if (!out_path.empty()) {
                std::ofstream os(out_path);
                if (!os) throw InputError("cannot write bench output to " + out_path);
                os << j.dump(2) << "\n";
            }
            std::ostringstream text;
            text << std::left << std::setw(12) << "curve" << std::setw(5) << "d" << std::setw(8)
                 << "delta" << std::setw(12) << "wall_ms" << std::setw(10) << "bits_mod"
                 << std::setw(10) << "bits_q" << "\n";
            for (const auto& r : res.records)
                text << std::left << std::setw(12) << r.curve << std::setw(5) << r.d
                     << std::setw(8) << r.delta << std::setw(12) << r.wall_ms << std::setw(10)
                     << r.peak_bits_modular << std::setw(10) << r.peak_bits_char0 << "\n";
            if (res.slope) text << "log-log slope (time vs delta): " << *res.slope << "\n";
            else text << "log-log slope: undefined (need >= 2 distinct sizes)\n";
            emit(out, bformat, j, text.str());
        }
        return 0;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace puiseux
