#include "kumarp/records.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace kumarp;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "kumarp-tests";
    fs::create_directories(dir);
    const auto p = dir / name;
    fs::remove(p);
    return p;
}

std::vector<ScanRecord> records_for(const char* tag, int max_len, const std::vector<std::uint64_t>& primes) {
    const WeylGroup g(gcm_from_tag(tag));
    std::vector<ScanRecord> out;
    for (const auto& w : g.enumerate_ball(max_len)) {
        const SchubertLocus locus(g, MultiplicityTable(g, w));
        auto recs = scan_records(g, tag, locus.report(primes));
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

}  // namespace

TEST(Records, RoundTrip) {
    for (const auto& r : records_for("B3", 5, {2, 3, 5})) EXPECT_EQ(parse_record(render_record(r)), r);
    for (const auto& r : records_for("affine-A1", 6, {2})) EXPECT_EQ(parse_record(render_record(r)), r);
}

TEST(Records, RandomRecordsRoundTrip) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> bit(0, 1), len(0, 12);
    for (int k = 0; k < 200; ++k) {
        ScanRecord r;
        r.type = k % 2 ? "G2" : "0123456789abcdef";
        r.w = "1,2,1";
        r.y = k % 3 ? "" : "2";
        r.length_w = len(rng);
        r.length_y = len(rng);
        r.value = k % 5 == 0 ? "nonconstant" : (k % 7 == 0 ? "nonintegral" : std::to_string(k * 7919));
        r.smooth = bit(rng);
        r.rationally_smooth = bit(rng);
        r.z_smooth = bit(rng);
        r.p_smooth = {{2, bit(rng) != 0}, {3, bit(rng) != 0}, {101, bit(rng) != 0}};
        EXPECT_EQ(parse_record(render_record(r)), r);
    }
}

TEST(Records, Fields) {
    const auto recs = records_for("B2", 3, {2, 3});
    bool saw_two = false;
    for (const auto& r : recs) {
        if (r.w == "2,1,2" && r.y.empty()) {
            EXPECT_EQ(r.value, "2");
            EXPECT_FALSE(r.smooth);
            EXPECT_TRUE(r.rationally_smooth);
            EXPECT_FALSE(r.p_smooth.at(2));
            EXPECT_TRUE(r.p_smooth.at(3));
            saw_two = true;
        }
    }
    EXPECT_TRUE(saw_two);
}

TEST(Records, Csv) {
    EXPECT_EQ(csv_header({2, 3}), "type,w,y,length_w,length_y,abs_f,smooth,rationally_smooth,z_smooth,p2_smooth,p3_smooth");
    ScanRecord r{"A2", "1,2", "1", 2, 1, "1", true, true, true, {{2, true}, {3, false}}};
    EXPECT_EQ(render_csv(r), "A2,\"1,2\",\"1\",2,1,1,1,1,1,1,0");
}

TEST(Cache, StoreAndReload) {
    const auto path = temp_file("cache-store.jsonl");
    const WeylGroup g(gcm_from_tag("G2"));
    std::map<std::string, std::vector<PointStatus>> expected;
    {
        TableCache cache(path.string());
        for (const auto& w : g.enumerate_ball(4)) {
            const MultiplicityTable t(g, w);
            std::vector<PointStatus> pts;
            for (const auto& r : t.reports()) pts.push_back(status_of(r));
            EXPECT_FALSE(cache.lookup(g, w));
            cache.store(g, w, pts);
            expected[format_word(w.word)] = pts;
        }
    }
    std::ostringstream warn;
    TableCache again(path.string(), warn);
    EXPECT_TRUE(warn.str().empty());
    EXPECT_EQ(again.size(), expected.size());
    for (const auto& w : g.enumerate_ball(4)) {
        const auto hit = again.lookup(g, w);
        ASSERT_TRUE(hit);
        EXPECT_EQ(*hit, expected[format_word(w.word)]);
    }
    // a different type with the same words does not hit
    const WeylGroup b2(gcm_from_tag("B2"));
    EXPECT_FALSE(again.lookup(b2, b2.element_from_word({0, 1})));
}

TEST(Cache, CorruptLinesAreSkipped) {
    const auto path = temp_file("cache-corrupt.jsonl");
    const WeylGroup g(gcm_from_tag("A2"));
    const auto w = g.element_from_word({0, 1});
    {
        TableCache cache(path.string());
        const MultiplicityTable t(g, w);
        std::vector<PointStatus> pts;
        for (const auto& r : t.reports()) pts.push_back(status_of(r));
        cache.store(g, w, pts);
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "{not json\n";
        out << R"({"gcm": "x", "w": "1", "points": [{"y": "", "kind": "weird"}]})" << "\n";
        out << R"({"gcm": "x"})" << "\n";
    }
    std::ostringstream warn;
    TableCache cache(path.string(), warn);
    EXPECT_EQ(cache.skipped_lines(), 3u);
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_NE(warn.str().find("line 2"), std::string::npos);
    EXPECT_TRUE(cache.lookup(g, w));
}

TEST(Cache, DisabledCacheIsMemoryOnly) {
    TableCache cache;
    EXPECT_FALSE(cache.enabled());
    const WeylGroup g(gcm_from_tag("A2"));
    cache.store(g, g.identity(), {PointStatus{g.identity(), NumeratorKind::Integer, 1}});
    EXPECT_TRUE(cache.lookup(g, g.identity()));
}

TEST(Cache, UnwritablePath) {
    TableCache cache("/nonexistent-dir/kumarp/cache.jsonl");
    const WeylGroup g(gcm_from_tag("A2"));
    EXPECT_THROW(cache.store(g, g.identity(), {PointStatus{g.identity(), NumeratorKind::Integer, 1}}),
                 std::invalid_argument);
}
