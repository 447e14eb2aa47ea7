// Command-line front end: compute Betti tables, compare them against the
// closed-form predictions, and cache results between runs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gfsuper/cache.hpp"
#include "gfsuper/cdga.hpp"
#include "gfsuper/cochain_complex.hpp"
#include "gfsuper/partitions.hpp"
#include "gfsuper/report.hpp"
#include "gfsuper/super_module.hpp"

namespace {

using gfsuper::BettiTable;
using gfsuper::CochainComplex;
using gfsuper::FileCache;
using gfsuper::Partition;
using gfsuper::Verdict;
using gfsuper::VerificationReport;

struct Args {
    int m = 0;
    int n = 0;
    int max_degree = 0;
    int dmax = -1;
    std::string lambda;
    std::string claim;
    std::string format = "table";
    std::string cache_dir;
    bool no_cache = false;
    std::uint64_t max_block = 200000;
    bool m_given = false;
    bool n_given = false;
};

// Cache directory resolution: GFSUPER_CACHE_DIR wins over --cache-dir; no
// directory means no cache.
std::optional<FileCache> open_cache(const Args& a) {
    if (a.no_cache) return std::nullopt;
    std::string dir = a.cache_dir;
    if (const char* env = std::getenv("GFSUPER_CACHE_DIR"); env && *env) dir = env;
    if (dir.empty()) return std::nullopt;
    return FileCache(dir);
}

BettiTable table_from_dims_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<long> dims = j.at("betti").get<std::vector<long>>();
    return BettiTable::of_dims(std::move(dims));
}

BettiTable cached_table(std::optional<FileCache>& cache, const std::string& key,
                        const std::function<BettiTable()>& compute) {
    if (cache) {
        if (auto hit = cache->get(key)) return table_from_dims_json(*hit);
    }
    BettiTable t = compute();
    if (cache) {
        nlohmann::json j;
        j["betti"] = t.dims;
        cache->put(key, j.dump());
    }
    return t;
}

std::string vfield_key(int m, int n, int P, int dmax) {
    std::ostringstream os;
    os << gfsuper::kCacheVersion << "|vfield|m=" << m << "|n=" << n << "|P=" << P
       << "|dmax=" << (dmax < 0 ? P : dmax);
    return os.str();
}

std::string gl_key(int n, const Partition& lambda, int P) {
    std::ostringstream os;
    os << gfsuper::kCacheVersion << "|gl|n=" << n << "|lambda=" << gfsuper::to_string(lambda)
       << "|P=" << P;
    return os.str();
}

std::string invariants_key(int m, int n, int p) {
    std::ostringstream os;
    os << gfsuper::kCacheVersion << "|invariants|m=" << m << "|n=" << n << "|p=" << p;
    return os.str();
}

BettiTable compute_vfield(const Args& a, int m, int n, std::optional<FileCache>& cache,
                          const CochainComplex::Options& base) {
    return cached_table(cache, vfield_key(m, n, a.max_degree, a.dmax), [&] {
        return gfsuper::vfield_cohomology(m, n, a.max_degree, a.dmax, base);
    });
}

BettiTable compute_gl(const Args& a, int n, const Partition& lambda,
                      std::optional<FileCache>& cache, const CochainComplex::Options& base) {
    return cached_table(cache, gl_key(n, lambda, a.max_degree), [&] {
        return gfsuper::gl_coefficient_cohomology(n, lambda, a.max_degree, base);
    });
}

// Predicted table for H(gl(n,1), Delta^lambda): an exterior algebra on
// generators of degree 1, 3, ..., 2n-1, with one extra degree-1 generator
// exactly when the diagram has at least n rows.
BettiTable gl_expected(int n, const Partition& lambda) {
    std::vector<int> degrees;
    for (int i = 1; i <= n; ++i) degrees.push_back(2 * i - 1);
    if (lambda.height() >= n) degrees.push_back(1);
    return BettiTable::of_dims(gfsuper::exterior_poincare(degrees));
}

long compute_invariants_dim(int m, int n, int p, std::optional<FileCache>& cache) {
    const std::string key = invariants_key(m, n, p);
    if (cache) {
        if (auto hit = cache->get(key)) {
            return nlohmann::json::parse(*hit).at("value").get<long>();
        }
    }
    auto g = gfsuper::gl(m, n);
    auto V = gfsuper::standard_module(g);
    auto S = gfsuper::tensor_module(
        gfsuper::symmetric_power_module(gfsuper::dual_module(V), 2), V);
    auto M = gfsuper::tensor_module(gfsuper::exterior_power_module(V, p),
                                    gfsuper::exterior_power_module(S, p));
    long dim = gfsuper::invariants_dim(M);
    if (cache) {
        nlohmann::json j;
        j["value"] = dim;
        cache->put(key, j.dump());
    }
    return dim;
}

void emit_csv_rows(std::ostream& out, const BettiTable& computed, const BettiTable* expected) {
    int top = computed.range;
    if (expected && expected->range > top) top = expected->range;
    for (int p = 0; p <= top; ++p) {
        out << p << ',';
        if (p <= computed.range) out << computed.at(p);
        if (expected) {
            out << ',' << expected->at(p);
        }
        out << '\n';
    }
}

void emit_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
    } else if (format == "csv") {
        std::cout << "degree,computed,expected\n";
        emit_csv_rows(std::cout, rep.betti, &rep.expected);
        std::cout << "verdict," << gfsuper::to_string(rep.verdict) << ",\n";
    } else {
        std::cout << "claim       " << rep.claim << "\n";
        for (const auto& [k, v] : rep.params) {
            std::string pad(k.size() < 11 ? 12 - k.size() : 1, ' ');
            std::cout << k << pad << v << "\n";
        }
        std::cout << "computed    " << rep.betti.str() << "\n";
        std::cout << "expected    " << rep.expected.str() << "\n";
        std::cout << "verdict     " << gfsuper::to_string(rep.verdict) << "\n";
        std::cout << "time_ms     " << rep.wall_time_ms << "\n";
    }
}

int verdict_exit(Verdict v) { return v == Verdict::Mismatch ? 1 : 0; }

int run_vfield(const Args& a, std::optional<FileCache>& cache,
               const CochainComplex::Options& base) {
    if (a.m < 0 || a.n < 0 || a.m + a.n < 1)
        throw std::invalid_argument("need m >= 0, n >= 0 and m + n >= 1");
    if (a.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
    BettiTable t = compute_vfield(a, a.m, a.n, cache, base);
    if (a.format == "json") {
        nlohmann::json j;
        j["betti"] = t.dims;
        std::cout << j.dump() << "\n";
    } else if (a.format == "csv") {
        std::cout << "degree,dim\n";
        emit_csv_rows(std::cout, t, nullptr);
    } else {
        std::cout << t.str() << "\n";
    }
    return 0;
}

int run_gl(const Args& a, std::optional<FileCache>& cache, const CochainComplex::Options& base) {
    if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (a.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
    Partition lambda = gfsuper::parse_partition(a.lambda);
    VerificationReport rep;
    rep.claim = a.n == 1 ? "LEMMA-GL11" : "PROP-GLN1";
    rep.params["n"] = std::to_string(a.n);
    rep.params["lambda"] = gfsuper::to_string(lambda);
    rep.params["max_degree"] = std::to_string(a.max_degree);
    auto t0 = std::chrono::steady_clock::now();
    rep.betti = compute_gl(a, a.n, lambda, cache, base);
    rep.expected = gl_expected(a.n, lambda);
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    rep.verdict = gfsuper::compare_tables(rep.betti, rep.expected);
    rep.degrees_checked = a.max_degree;
    emit_report(rep, a.format);
    return verdict_exit(rep.verdict);
}

int run_invariants(const Args& a, std::optional<FileCache>& cache) {
    if (a.m < 0 || a.n < 0 || a.m + a.n < 1)
        throw std::invalid_argument("need m >= 0, n >= 0 and m + n >= 1");
    if (a.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
    int p = a.max_degree;
    VerificationReport rep;
    rep.claim = "LEMMA-INV";
    rep.params["m"] = std::to_string(a.m);
    rep.params["n"] = std::to_string(a.n);
    rep.params["p"] = std::to_string(p);
    auto t0 = std::chrono::steady_clock::now();
    long direct = compute_invariants_dim(a.m, a.n, p, cache);
    long diagrams = gfsuper::invariant_diagram_count(a.m, a.n, p);
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    rep.betti = BettiTable::of_dims({direct});
    rep.expected = BettiTable::of_dims({diagrams});
    rep.verdict = gfsuper::compare_tables(rep.betti, rep.expected);
    rep.degrees_checked = 0;
    emit_report(rep, a.format);
    return verdict_exit(rep.verdict);
}

int run_verify(const Args& a, std::optional<FileCache>& cache,
               const CochainComplex::Options& base) {
    if (a.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
    VerificationReport rep;
    rep.claim = a.claim;
    rep.degrees_checked = a.max_degree;
    rep.params["max_degree"] = std::to_string(a.max_degree);
    auto t0 = std::chrono::steady_clock::now();

    auto vfield_claim = [&](int m, int n, const BettiTable& expected) {
        rep.params["m"] = std::to_string(m);
        rep.params["n"] = std::to_string(n);
        rep.expected = expected;
        rep.betti = compute_vfield(a, m, n, cache, base);
    };

    if (a.claim == "A") {
        if (!a.m_given || a.m < 1) throw std::invalid_argument("claim A needs --m >= 1");
        if (a.n_given && a.n != 0) throw std::invalid_argument("claim A is the n = 0 case");
        vfield_claim(a.m, 0, gfsuper::predicted_betti(a.m, 0));
    } else if (a.claim == "B") {
        if (a.n < 1 || a.m < 0 || a.m >= a.n)
            throw std::invalid_argument("claim B needs 0 <= m < n");
        vfield_claim(a.m, a.n, gfsuper::predicted_betti(a.m, a.n));
    } else if (a.claim == "C") {
        int v = a.n_given ? a.n : a.m;
        if (!a.m_given && !a.n_given) throw std::invalid_argument("claim C needs --n");
        if (a.m_given && a.n_given && a.m != a.n)
            throw std::invalid_argument("claim C is the m = n case");
        if (v < 1) throw std::invalid_argument("claim C needs m = n >= 1");
        vfield_claim(v, v, gfsuper::predicted_betti(v, v));
    } else if (a.claim == "D") {
        if (!a.m_given || a.m < 1) throw std::invalid_argument("claim D needs --m >= 1");
        if (a.n_given && a.n != 1) throw std::invalid_argument("claim D is the n = 1 case");
        vfield_claim(a.m, 1, gfsuper::predicted_betti(a.m, 1));
    } else if (a.claim == "CONJ") {
        if (!a.m_given || !a.n_given || a.n < 1 || a.m <= a.n)
            throw std::invalid_argument("claim CONJ needs --m > --n >= 1");
        vfield_claim(a.m, a.n, gfsuper::predicted_betti(a.m, a.n));
    } else if (a.claim == "V1N") {
        if (!a.n_given || a.n < 2) throw std::invalid_argument("claim V1N needs --n >= 2");
        if (a.m_given && a.m != 1) throw std::invalid_argument("claim V1N is the m = 1 case");
        vfield_claim(1, a.n, BettiTable::of_dims(gfsuper::exterior_poincare({2 * a.n - 1})));
    } else if (a.claim == "LEMMA-GL11" || a.claim == "PROP-GLN1") {
        int n = 1;
        if (a.claim == "LEMMA-GL11") {
            if (a.n_given && a.n != 1)
                throw std::invalid_argument("claim LEMMA-GL11 is the n = 1 case");
        } else {
            if (!a.n_given || a.n < 1) throw std::invalid_argument("claim PROP-GLN1 needs --n >= 1");
            n = a.n;
        }
        Partition lambda = gfsuper::parse_partition(a.lambda);
        rep.params["n"] = std::to_string(n);
        rep.params["lambda"] = gfsuper::to_string(lambda);
        rep.expected = gl_expected(n, lambda);
        rep.betti = compute_gl(a, n, lambda, cache, base);
    } else if (a.claim == "LEMMA-INV") {
        if (a.m < 0 || a.n < 0 || a.m + a.n < 1)
            throw std::invalid_argument("claim LEMMA-INV needs m >= 0, n >= 0, m + n >= 1");
        rep.params["m"] = std::to_string(a.m);
        rep.params["n"] = std::to_string(a.n);
        rep.params["p"] = std::to_string(a.max_degree);
        rep.betti = BettiTable::of_dims({compute_invariants_dim(a.m, a.n, a.max_degree, cache)});
        rep.expected =
            BettiTable::of_dims({gfsuper::invariant_diagram_count(a.m, a.n, a.max_degree)});
        rep.degrees_checked = 0;
    } else {
        throw std::invalid_argument("unknown claim: " + a.claim);
    }

    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    rep.verdict = gfsuper::compare_tables(rep.betti, rep.expected);
    emit_report(rep, a.format);
    return verdict_exit(rep.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational cohomology of truncated vector-field and gl-type Lie superalgebras"};
    app.require_subcommand(1);

    Args a;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--cache-dir", a.cache_dir,
                        "result cache directory (GFSUPER_CACHE_DIR overrides)");
        sub->add_flag("--no-cache", a.no_cache, "disable the result cache");
        sub->add_option("--max-block", a.max_block,
                        "fail with exit 3 if a differential block is estimated to exceed "
                        "this many entries; 0 removes the limit")
            ->capture_default_str();
    };

    auto* sc_vf = app.add_subcommand(
        "compute-vfield", "Betti numbers of the truncated vector-field algebra on m|n coordinates");
    sc_vf->add_option("--m", a.m, "even coordinates")->required();
    sc_vf->add_option("--n", a.n, "odd coordinates")->required();
    sc_vf->add_option("--max-degree", a.max_degree, "top cohomological degree")->required();
    sc_vf->add_option("--dmax", a.dmax, "bracket truncation depth (default: max-degree)");
    add_common(sc_vf);

    auto* sc_gl = app.add_subcommand(
        "compute-gl", "cohomology of gl(n,1) with coefficients labelled by a partition");
    sc_gl->add_option("--n", a.n, "size of the even block")->required();
    sc_gl->add_option("--lambda", a.lambda, "partition, comma separated; empty for the trivial one");
    sc_gl->add_option("--max-degree", a.max_degree, "top cohomological degree")->required();
    add_common(sc_gl);

    auto* sc_inv = app.add_subcommand(
        "invariants", "dimension of the gl(m,n)-invariants against the diagram count");
    sc_inv->add_option("--m", a.m, "even dimension")->required();
    sc_inv->add_option("--n", a.n, "odd dimension")->required();
    sc_inv->add_option("--max-degree", a.max_degree, "exterior power p")->required();
    add_common(sc_inv);

    auto* sc_ver =
        app.add_subcommand("verify", "compare a computed table against its predicted value");
    sc_ver->add_option("--claim", a.claim,
                       "one of A, B, C, D, CONJ, LEMMA-GL11, PROP-GLN1, LEMMA-INV, V1N")
        ->required();
    auto* opt_m = sc_ver->add_option("--m", a.m, "even parameter");
    auto* opt_n = sc_ver->add_option("--n", a.n, "odd parameter");
    sc_ver->add_option("--lambda", a.lambda, "partition for the gl claims");
    sc_ver->add_option("--max-degree", a.max_degree, "top degree to compute")->required();
    sc_ver->add_option("--dmax", a.dmax, "bracket truncation depth (default: max-degree)");
    add_common(sc_ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    a.m_given = opt_m->count() > 0;
    a.n_given = opt_n->count() > 0;

    try {
        auto cache = open_cache(a);
        CochainComplex::Options base;
        base.max_entries = a.max_block;
        if (sc_vf->parsed()) return run_vfield(a, cache, base);
        if (sc_gl->parsed()) return run_gl(a, cache, base);
        if (sc_inv->parsed()) return run_invariants(a, cache);
        return run_verify(a, cache, base);
    } catch (const gfsuper::ResourceCapError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
