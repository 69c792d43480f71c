#pragma once

// Scan records, their line-oriented serialization, and the append-only cache
// of numerator tables keyed by (GCM digest, canonical reduced word of w).

#include "kumarp/cartan.hpp"
#include "kumarp/criteria.hpp"
#include "kumarp/weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kumarp {

struct ScanRecord {
    std::string type;  // builtin label, or GCM digest
    std::string w;     // word syntax "1,2,1"
    std::string y;
    int length_w = 0;
    int length_y = 0;
    std::string value;  // |f| as decimal, or "nonconstant" / "nonintegral"
    bool smooth = false;
    bool rationally_smooth = false;
    bool z_smooth = false;
    std::map<std::uint64_t, bool> p_smooth;

    bool operator==(const ScanRecord&) const = default;
};

inline std::string kind_label(const PointStatus& s) {
    switch (s.kind) {
        case NumeratorKind::Integer:
            return s.abs_f.str();
        case NumeratorKind::NonIntegral:
            return "nonintegral";
        case NumeratorKind::NonConstant:
            return "nonconstant";
    }
    return "nonconstant";
}

inline std::vector<ScanRecord> scan_records(const WeylGroup& group, const std::string& type,
                                            const LocusReport& report) {
    std::vector<ScanRecord> out;
    const std::string w = format_word(group.canonical_reduced_word(report.w));
    for (const auto& pt : report.points) {
        ScanRecord r;
        r.type = type;
        r.w = w;
        r.y = format_word(group.canonical_reduced_word(pt.status.y));
        r.length_w = report.w.length();
        r.length_y = pt.status.y.length();
        r.value = kind_label(pt.status);
        r.smooth = pt.smooth;
        r.rationally_smooth = pt.rationally_smooth;
        r.z_smooth = pt.z_smooth;
        r.p_smooth = pt.p_smooth;
        out.push_back(std::move(r));
    }
    return out;
}

inline nlohmann::json to_json(const ScanRecord& r) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [prime, ok] : r.p_smooth) p[std::to_string(prime)] = ok;
    return {{"type", r.type},
            {"w", r.w},
            {"y", r.y},
            {"length_w", r.length_w},
            {"length_y", r.length_y},
            {"abs_f", r.value},
            {"smooth", r.smooth},
            {"rationally_smooth", r.rationally_smooth},
            {"z_smooth", r.z_smooth},
            {"p_smooth", p}};
}

inline std::string render_record(const ScanRecord& r) { return to_json(r).dump(); }

inline ScanRecord parse_record(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    ScanRecord r;
    r.type = j.at("type").get<std::string>();
    r.w = j.at("w").get<std::string>();
    r.y = j.at("y").get<std::string>();
    r.length_w = j.at("length_w").get<int>();
    r.length_y = j.at("length_y").get<int>();
    r.value = j.at("abs_f").get<std::string>();
    r.smooth = j.at("smooth").get<bool>();
    r.rationally_smooth = j.at("rationally_smooth").get<bool>();
    r.z_smooth = j.at("z_smooth").get<bool>();
    for (const auto& [k, v] : j.at("p_smooth").items()) r.p_smooth[std::stoull(k)] = v.get<bool>();
    return r;
}

inline std::string csv_header(const std::vector<std::uint64_t>& primes) {
    std::string h = "type,w,y,length_w,length_y,abs_f,smooth,rationally_smooth,z_smooth";
    for (auto p : primes) h += ",p" + std::to_string(p) + "_smooth";
    return h;
}

inline std::string render_csv(const ScanRecord& r) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream os;
    os << r.type << ',' << quote(r.w) << ',' << quote(r.y) << ',' << r.length_w << ',' << r.length_y << ','
       << r.value << ',' << r.smooth << ',' << r.rationally_smooth << ',' << r.z_smooth;
    for (const auto& [p, ok] : r.p_smooth) os << ',' << ok;
    return os.str();
}

/// Append-only cache of numerator tables, one JSON object per line.
class TableCache {
  public:
    TableCache() = default;

    /// Loads existing entries; unreadable lines are skipped with a warning.
    explicit TableCache(std::string path, std::ostream& warn = std::cerr) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                auto j = nlohmann::json::parse(line);
                Key key{j.at("gcm").get<std::string>(), j.at("w").get<std::string>()};
                std::vector<RawPoint> pts;
                for (const auto& p : j.at("points")) {
                    RawPoint rp{p.at("y").get<std::string>(), p.at("kind").get<std::string>(),
                                p.value("abs_f", std::string("0"))};
                    if (rp.kind != "integer" && rp.kind != "nonintegral" && rp.kind != "nonconstant")
                        throw std::invalid_argument("bad kind");
                    pts.push_back(std::move(rp));
                }
                entries_[key] = std::move(pts);
            } catch (const std::exception& e) {
                warn << "warning: skipping corrupt cache line " << lineno << " in " << path_ << ": " << e.what()
                     << "\n";
                ++skipped_;
            }
        }
    }

    bool enabled() const { return !path_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::size_t skipped_lines() const { return skipped_; }

    std::optional<std::vector<PointStatus>> lookup(const WeylGroup& group, const WeylElement& w) const {
        auto it = entries_.find(key_of(group, w));
        if (it == entries_.end()) return std::nullopt;
        try {
            std::vector<PointStatus> out;
            for (const auto& p : it->second) {
                PointStatus s;
                s.y = group.element_from_word(parse_word(p.y));
                s.kind = p.kind == "integer"       ? NumeratorKind::Integer
                         : p.kind == "nonintegral" ? NumeratorKind::NonIntegral
                                                   : NumeratorKind::NonConstant;
                s.abs_f = BigInt(p.abs_f);
                out.push_back(std::move(s));
            }
            return out;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /// Records a table in memory and appends it to the file.
    void store(const WeylGroup& group, const WeylElement& w, const std::vector<PointStatus>& points) {
        const Key key = key_of(group, w);
        if (entries_.count(key)) return;
        nlohmann::json pts = nlohmann::json::array();
        std::vector<RawPoint> raw;
        for (const auto& s : points) {
            RawPoint rp{format_word(group.canonical_reduced_word(s.y)),
                        s.kind == NumeratorKind::Integer       ? "integer"
                        : s.kind == NumeratorKind::NonIntegral ? "nonintegral"
                                                               : "nonconstant",
                        s.abs_f.str()};
            pts.push_back({{"y", rp.y}, {"kind", rp.kind}, {"abs_f", rp.abs_f}});
            raw.push_back(std::move(rp));
        }
        entries_[key] = std::move(raw);
        if (!enabled()) return;
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::invalid_argument("cannot write cache file " + path_);
        out << nlohmann::json{{"gcm", key.first}, {"w", key.second}, {"points", pts}}.dump() << '\n';
    }

  private:
    using Key = std::pair<std::string, std::string>;
    struct RawPoint {
        std::string y;
        std::string kind;
        std::string abs_f;
    };

    static Key key_of(const WeylGroup& group, const WeylElement& w) {
        return {gcm_digest(group.gcm()), format_word(group.canonical_reduced_word(w))};
    }

    std::string path_;
    std::map<Key, std::vector<RawPoint>> entries_;
    std::size_t skipped_ = 0;
};

}  // namespace kumarp
