#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gfsuper/cache.hpp"
#include "gfsuper/report.hpp"

using namespace gfsuper;

TEST_CASE("table comparison verdicts") {
    BettiTable sphere = BettiTable::of_dims({1, 0, 0, 1});

    CHECK(compare_tables(BettiTable::of_dims({1, 0, 0, 1}), sphere) == Verdict::Match);
    // Computed past the prediction's support: still a match.
    CHECK(compare_tables(BettiTable::of_dims({1, 0, 0, 1, 0}), sphere) == Verdict::Match);
    // Agreeing prefix that stops early: partial.
    CHECK(compare_tables(BettiTable::of_dims({1, 0}), sphere) == Verdict::Partial);
    CHECK(compare_tables(BettiTable::of_dims({1, 0, 0}), sphere) == Verdict::Partial);
    // Any disagreement in range: mismatch.
    CHECK(compare_tables(BettiTable::of_dims({1, 1}), sphere) == Verdict::Mismatch);
    CHECK(compare_tables(BettiTable::of_dims({1, 0, 0, 2}), sphere) == Verdict::Mismatch);
    // All-zero prediction matches an all-zero computation of any range.
    CHECK(compare_tables(BettiTable::of_dims({0, 0}), BettiTable::of_dims({0})) == Verdict::Match);

    CHECK(to_string(Verdict::Match) == "MATCH");
    CHECK(to_string(Verdict::Mismatch) == "MISMATCH");
    CHECK(to_string(Verdict::Partial) == "PARTIAL");
}

TEST_CASE("report json round trip") {
    VerificationReport r;
    r.claim = "A";
    r.params = {{"m", "1"}, {"n", "1"}, {"max-degree", "4"}};
    r.betti = BettiTable::of_dims({1, 0, 0, 1, 0});
    r.expected = BettiTable::of_dims({1, 0, 0, 1});
    r.verdict = compare_tables(r.betti, r.expected);
    r.degrees_checked = 4;
    r.wall_time_ms = 17;

    CHECK(r.verdict == Verdict::Match);
    std::string text = r.to_json();
    VerificationReport back = VerificationReport::from_json(text);
    CHECK(back.claim == r.claim);
    CHECK(back.params == r.params);
    CHECK(back.betti.dims == r.betti.dims);
    CHECK(back.expected.dims == r.expected.dims);
    CHECK(back.verdict == r.verdict);
    CHECK(back.degrees_checked == 4);
    CHECK(back.wall_time_ms == 17);

    CHECK_THROWS(VerificationReport::from_json("{\"claim\":\"A\"}"));
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("file cache round trip and integrity") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / ("gfsuper-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    {
        FileCache cache(dir);
        CHECK(std::filesystem::is_directory(dir));
        CHECK(!cache.get("k1").has_value());

        cache.put("k1", "{\"betti\":[1,1]}");
        auto v = cache.get("k1");
        REQUIRE(v.has_value());
        CHECK(*v == "{\"betti\":[1,1]}");

        cache.put("k1", "updated");
        CHECK(*cache.get("k1") == "updated");

        // A file whose recorded key disagrees is treated as a miss.
        cache.put("k2", "x");
        auto files = std::filesystem::directory_iterator(dir);
        for (const auto& f : files) {
            if (f.path().extension() != ".json") continue;
            std::ifstream in(f.path());
            std::string body((std::istreambuf_iterator<char>(in)), {});
            if (body.find("\"k2\"") == std::string::npos) continue;
            std::ofstream out(f.path());
            out << "{\"key\":\"other\",\"value\":\"x\"}\n";
        }
        CHECK(!cache.get("k2").has_value());

        // Corrupt files are misses, not errors.
        cache.put("k3", "y");
        {
            std::ofstream out(dir / "garbage.json");
            out << "not json";
        }
        CHECK(*cache.get("k3") == "y");
    }
    std::filesystem::remove_all(dir);
}
