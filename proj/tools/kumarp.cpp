// kumarp: equivariant multiplicities and p-smooth loci of Schubert varieties.
//
//   kumarp mult   --type A2 --w 1,2,1 --y ""
//   kumarp locus  --type G2 --w 1,2,1,2 --primes 2,3,5
//   kumarp scan   --type B3 --max-length 6 --out scan.jsonl
//   kumarp zoo    minimal-orbit --type C --n 3
//
// Exit codes: 0 success, 2 usage or parse error, 3 resource cap,
// 4 internal invariant violation.

#include "kumarp/kumarp.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kumarp;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

class InvariantViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GroupOptions {
    std::string type;
    std::string gcm_file;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
    auto* t = cmd->add_option("--type", opts.type, "builtin Cartan type, e.g. A3, B2, G2, affine-A1");
    auto* f = cmd->add_option("--gcm-file", opts.gcm_file, "JSON file with rank and row-major matrix");
    t->excludes(f);
}

WeylGroup load_group(const GroupOptions& opts) {
    if (!opts.gcm_file.empty()) {
        std::ifstream in(opts.gcm_file);
        if (!in) throw CartanError("cannot read GCM file " + opts.gcm_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return WeylGroup(gcm_from_text(ss.str()));
    }
    if (opts.type.empty()) throw CartanError("one of --type or --gcm-file is required");
    return WeylGroup(gcm_from_tag(opts.type));
}

std::string type_label(const WeylGroup& g) { return g.gcm().label.empty() ? gcm_digest(g.gcm()) : g.gcm().label; }

VariableNames root_names(const WeylGroup& g) { return default_names(static_cast<std::size_t>(g.rank()), "a"); }

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (int i : parse_word(text)) {
        const auto p = static_cast<std::uint64_t>(i + 1);
        if (!is_prime(p)) throw CartanError(std::to_string(p) + " is not prime");
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WeylElement element_for_w(const WeylGroup& g, const std::string& text) {
    const Word word = parse_word(text);
    if (static_cast<int>(word.size()) > kMaxSchubertLength)
        throw ResourceCapError("word length exceeds the cap of " + std::to_string(kMaxSchubertLength));
    auto w = g.element_from_word(word);
    if (w.length() != static_cast<int>(word.size()))
        std::cerr << "warning: word " << text << " is not reduced; using " << format_word(w.word) << "\n";
    return w;
}

std::string set_text(const std::set<std::uint64_t>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
}

// ---------------------------------------------------------------- mult

struct MultOptions {
    GroupOptions group;
    std::string w;
    std::string y;
    std::string format = "text";
};

int run_mult(const MultOptions& o) {
    const auto g = load_group(o.group);
    const auto w = element_for_w(g, o.w);
    const auto y = g.element_from_word(parse_word(o.y));
    const auto r = numerator(g, w.word, y);
    const auto names = root_names(g);
    if (r.is_zero != !g.bruhat_leq(y, w)) throw InvariantViolation("vanishing disagrees with the Bruhat order");
    if (!r.is_zero && static_cast<int>(r.den_factors.size()) - r.f.degree() != w.length())
        throw InvariantViolation("multiplicity is not homogeneous of degree -l(w)");
    if (o.format == "json") {
        json den = json::array();
        for (const auto& f : r.den_factors) den.push_back(f.coeffs());
        json j{{"type", type_label(g)},
               {"w", format_word(w.word)},
               {"y", format_word(g.canonical_reduced_word(y))},
               {"length_w", w.length()},
               {"length_y", y.length()},
               {"multiplicity", render(r.value, names)},
               {"value", to_json(r.value)},
               {"numerator", render_poly(r.f, names)},
               {"f_scalar", to_string(r.f_scalar)},
               {"den_factors", den},
               {"is_zero", r.is_zero},
               {"is_constant", r.is_constant},
               {"is_integral", r.is_integral},
               {"abs_f", r.abs_f ? json(r.abs_f->str()) : json(nullptr)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "type        " << type_label(g) << "\n"
              << "w           " << format_word(w.word) << "  (length " << w.length() << ")\n"
              << "y           " << format_word(g.canonical_reduced_word(y)) << "  (length " << y.length() << ")\n"
              << "e_y X_w     " << render(r.value, names) << "\n"
              << "numerator   " << render_poly(r.f * numerator_of(r.f_scalar), names);
    if (denominator_of(r.f_scalar) != 1) std::cout << " / " << denominator_of(r.f_scalar);
    std::cout << "\n"
              << "is_zero     " << std::boolalpha << r.is_zero << "\n"
              << "is_constant " << r.is_constant << "\n"
              << "is_integral " << r.is_integral << "\n"
              << "abs_f       " << (r.abs_f ? r.abs_f->str() : std::string("-")) << "\n";
    return 0;
}

// ---------------------------------------------------------------- locus

struct LocusOptions {
    GroupOptions group;
    std::string w;
    std::string primes = "2,3,5";
    std::string format = "text";
};

LocusReport checked_report(const SchubertLocus& locus, const std::vector<std::uint64_t>& primes) {
    auto report = locus.report(primes);
    auto bad = chain_violations(report);
    if (!bad.empty()) throw InvariantViolation(bad.front());
    return report;
}

void print_records(std::ostream& os, const std::vector<ScanRecord>& records, const std::string& format,
                   const std::vector<std::uint64_t>& primes, bool header) {
    if (format == "csv") {
        if (header) os << csv_header(primes) << "\n";
        for (const auto& r : records) os << render_csv(r) << "\n";
    } else {
        for (const auto& r : records) os << render_record(r) << "\n";
    }
}

int run_locus(const LocusOptions& o) {
    const auto g = load_group(o.group);
    const auto primes = parse_primes(o.primes);
    const auto w = element_for_w(g, o.w);
    const SchubertLocus locus(g, MultiplicityTable(g, w));
    const auto report = checked_report(locus, primes);
    if (o.format == "json" || o.format == "jsonl" || o.format == "csv") {
        print_records(std::cout, scan_records(g, type_label(g), report), o.format == "csv" ? "csv" : "jsonl", primes,
                      true);
        return 0;
    }
    std::cout << "Schubert variety X_w, type " << type_label(g) << ", w = " << format_word(w.word) << " (length "
              << w.length() << ")\n";
    std::cout << "y\t|f|\tsmooth\trat.smooth\tZ-smooth";
    for (auto p : primes) std::cout << "\t" << p << "-smooth";
    std::cout << "\ttorsion primes\n";
    for (const auto& pt : report.points) {
        std::cout << (pt.status.y.length() ? format_word(g.canonical_reduced_word(pt.status.y)) : "e") << "\t"
                  << kind_label(pt.status) << "\t" << (pt.smooth ? "yes" : "no") << "\t"
                  << (pt.rationally_smooth ? "yes" : "no") << "\t" << (pt.z_smooth ? "yes" : "no");
        for (const auto& [p, ok] : pt.p_smooth) std::cout << "\t" << (ok ? "yes" : "no");
        std::cout << "\t" << (pt.torsion_primes ? set_text(*pt.torsion_primes) : "-") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
    GroupOptions group;
    int max_length = 0;
    std::string primes = "2,3,5";
    std::string out;
    std::string cache;
    std::string format = "jsonl";
};

int run_scan(const ScanOptions& o) {
    const auto g = load_group(o.group);
    if (o.max_length > kMaxSchubertLength)
        throw ResourceCapError("max length exceeds the cap of " + std::to_string(kMaxSchubertLength));
    const auto primes = parse_primes(o.primes);
    std::string cache_path = o.cache;
    if (cache_path.empty())
        if (const char* dir = std::getenv("KUMARP_CACHE_DIR"); dir && *dir)
            cache_path = std::string(dir) + "/scan-cache.jsonl";
    TableCache cache(cache_path);

    std::unique_ptr<std::ofstream> file;
    if (!o.out.empty()) {
        file = std::make_unique<std::ofstream>(o.out, std::ios::trunc);
        if (!*file) throw std::invalid_argument("cannot write output file " + o.out);
    }
    std::ostream& os = file ? *file : std::cout;
    const std::string label = type_label(g);

    std::set<BigInt> constants;
    std::size_t n_points = 0, n_hits = 0;
    bool header = true;
    const auto ball = g.enumerate_ball(o.max_length);
    for (const auto& w : ball) {
        std::vector<PointStatus> points;
        if (auto hit = cache.lookup(g, w)) {
            points = std::move(*hit);
            ++n_hits;
        } else {
            const SchubertLocus fresh(g, MultiplicityTable(g, w));
            points = fresh.points();
            cache.store(g, w, points);
        }
        const SchubertLocus locus(g, w, std::move(points));
        const auto report = checked_report(locus, primes);
        for (const auto& pt : report.points)
            if (pt.status.kind == NumeratorKind::Integer) constants.insert(pt.status.abs_f);
        const auto records = scan_records(g, label, report);
        n_points += records.size();
        print_records(os, records, o.format, primes, header);
        header = false;
    }
    std::cerr << "scanned " << ball.size() << " elements (" << n_hits << " from cache), " << n_points
              << " points; constant numerators {";
    for (auto it = constants.begin(); it != constants.end(); ++it)
        std::cerr << (it == constants.begin() ? "" : ",") << *it;
    std::cerr << "}\n";
    if (!os) throw std::runtime_error("error writing output");
    return 0;
}

// ---------------------------------------------------------------- zoo

struct ZooOptions {
    int n = 0;
    std::string type;
    int kleinian_n = 5;
    int c_n = 3;
    int d_n = 5;
    std::string format = "text";
};

json zoo_json(const ZooResult& z) {
    auto opt = [](const std::optional<BigInt>& v) { return v ? json(v->str()) : json(nullptr); };
    return {{"name", z.name},
            {"dim", z.dim},
            {"multiplicity", render(z.mult, z.names)},
            {"value", to_json(z.mult)},
            {"constant_numerator", z.mult.has_constant_numerator()},
            {"abs_numerator", opt(z.abs_numerator)},
            {"paper_expected", opt(z.paper_expected)},
            {"torsion_order", opt(z.torsion_order_fixture)}};
}

int print_zoo(const ZooResult& z, const std::string& format) {
    if (format == "json") {
        std::cout << zoo_json(z).dump(2) << "\n";
    } else {
        std::string num = "non-constant";
        if (z.abs_numerator)
            num = z.abs_numerator->str();
        else if (z.mult.has_constant_numerator())
            num = to_string(z.mult.scalar() * z.mult.numerator().constant_term()) + " (not an integer)";
        std::cout << z.name << "\n"
                  << "  dim        " << z.dim << "\n"
                  << "  e_x X      " << render(z.mult, z.names) << "\n"
                  << "  numerator  " << num << "\n";
        if (z.paper_expected) std::cout << "  expected   " << *z.paper_expected << "\n";
    }
    if (z.abs_numerator && z.paper_expected && *z.abs_numerator != *z.paper_expected)
        throw InvariantViolation(z.name + ": numerator differs from the tabulated value");
    return 0;
}

// "C" with --n, or a builtin tag such as "C3"; nullopt for anything else.
std::optional<std::pair<char, int>> family_and_rank(const std::string& type, int n) {
    if (type.empty()) throw CartanError("--type is required");
    if (type.size() == 1) return std::pair{static_cast<char>(std::toupper(type[0])), n};
    if (!std::all_of(type.begin() + 1, type.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
    return std::pair{static_cast<char>(std::toupper(type[0])), gcm_from_tag(type).rank};
}

int run_zoo_kleinian(const ZooOptions& o) { return print_zoo(kleinian_a(o.n > 0 ? o.n : 5), o.format); }

int run_zoo_minimal(const ZooOptions& o) {
    const auto fr = family_and_rank(o.type, o.n);
    if (!fr) return print_zoo(minimal_orbit_multiplicity(gcm_from_tag(o.type)), o.format);
    auto [family, n] = *fr;
    if (family == 'C') return print_zoo(minimal_orbit_c(n), o.format);
    if (family == 'G' && n == 2) return print_zoo(minimal_orbit_g2(), o.format);
    return print_zoo(minimal_orbit_multiplicity(builtin_gcm(std::string(1, family), n)), o.format);
}

int run_zoo_weighted(const ZooOptions& o) {
    const auto fr = family_and_rank(o.type, o.n);
    if (!fr) throw CartanError("weighted: expected a D or E type, got " + o.type);
    auto [family, n] = *fr;
    try {
        return print_zoo(weighted_kleinian(family, n), o.format);
    } catch (const std::invalid_argument& e) {
        throw CartanError(e.what());
    }
}

int run_zoo_consistency(const ZooOptions& o) {
    const auto rows = consistency_table(o.kleinian_n, o.c_n);
    bool all = true;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"example", r.example},
                           {"abs_numerator", r.abs_numerator.str()},
                           {"torsion_order", r.torsion_order.str()},
                           {"computed", r.computed},
                           {"match", r.match}});
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "example\tnumerator\ttorsion order\tsource\tmatch\n";
        for (const auto& r : rows)
            std::cout << r.example << "\t" << r.abs_numerator << "\t" << r.torsion_order << "\t"
                      << (r.computed ? "computed" : "fixture") << "\t" << (r.match ? "yes" : "NO") << "\n";
    }
    for (const auto& r : rows) all = all && r.match;
    if (!all) throw InvariantViolation("consistency table has a mismatching row");
    return 0;
}

int run_zoo_mismatch(const ZooOptions& o) {
    std::vector<MismatchRow> rows;
    try {
        rows = hypothesis_failure_demo(o.d_n);
    } catch (const std::invalid_argument& e) {
        throw CartanError(e.what());
    }
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"example", r.example},
                           {"d", r.degree_constant},
                           {"primes_dividing_d", r.primes_dividing_constant},
                           {"non_p_smooth_primes", r.non_p_smooth_primes},
                           {"mismatch", r.mismatch}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "example\te_x X\tprimes | d\tnot p-smooth at\tmismatch\n";
    for (const auto& r : rows)
        std::cout << r.example << "\t1/(" << r.degree_constant << "*chi^2)\t" << set_text(r.primes_dividing_constant)
                  << "\t" << set_text(r.non_p_smooth_primes) << "\t" << (r.mismatch ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant multiplicities and p-smooth loci of Schubert varieties"};
    app.require_subcommand(1);

    MultOptions mult;
    auto* mult_cmd = app.add_subcommand("mult", "equivariant multiplicity e_y X_w and its numerator");
    add_group_options(mult_cmd, mult.group);
    mult_cmd->add_option("--w", mult.w, "reduced word of w, e.g. 1,2,1")->required();
    mult_cmd->add_option("--y", mult.y, "word of the fixed point y (empty for the identity)")->required();
    mult_cmd->add_option("--format", mult.format)->check(CLI::IsMember({"text", "json"}));

    LocusOptions locus;
    auto* locus_cmd = app.add_subcommand("locus", "smooth / p-smooth classification of every point of X_w");
    add_group_options(locus_cmd, locus.group);
    locus_cmd->add_option("--w", locus.w, "reduced word of w")->required();
    locus_cmd->add_option("--primes", locus.primes, "comma-separated primes");
    locus_cmd->add_option("--format", locus.format)->check(CLI::IsMember({"text", "json", "jsonl", "csv"}));

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "classify every (y, w) with l(w) <= max length");
    add_group_options(scan_cmd, scan.group);
    scan_cmd->add_option("--max-length", scan.max_length)->required()->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--primes", scan.primes, "comma-separated primes");
    scan_cmd->add_option("--out", scan.out, "output file (default stdout)");
    scan_cmd->add_option("--cache", scan.cache, "table cache file (default $KUMARP_CACHE_DIR/scan-cache.jsonl)");
    scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"jsonl", "csv"}));

    ZooOptions zoo;
    auto* zoo_cmd = app.add_subcommand("zoo", "example singularities");
    zoo_cmd->require_subcommand(1);
    zoo_cmd->add_option("--format", zoo.format)->check(CLI::IsMember({"text", "json"}));
    auto* z_kl = zoo_cmd->add_subcommand("kleinian-a", "Kleinian singularity of type A_n");
    z_kl->add_option("--n", zoo.n)->check(CLI::PositiveNumber);
    auto* z_min = zoo_cmd->add_subcommand("minimal-orbit", "minimal nilpotent orbit closure");
    z_min->add_option("--type", zoo.type, "family letter (with --n) or tag such as G2")->required();
    z_min->add_option("--n", zoo.n);
    auto* z_w = zoo_cmd->add_subcommand("weighted", "Kleinian singularity of type D_n / E_n via its C^* action");
    z_w->add_option("--type", zoo.type)->required();
    z_w->add_option("--n", zoo.n);
    auto* z_c = zoo_cmd->add_subcommand("consistency", "numerators against torsion orders");
    z_c->add_option("--kleinian-n", zoo.kleinian_n)->check(CLI::PositiveNumber);
    z_c->add_option("--c-n", zoo.c_n)->check(CLI::Range(1, 5));
    auto* z_m = zoo_cmd->add_subcommand("mismatch", "Kleinian D/E: numerator vs p-smoothness");
    z_m->add_option("--d-n", zoo.d_n);
    for (auto* sub : {z_kl, z_min, z_w, z_c, z_m})
        sub->add_option("--format", zoo.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*mult_cmd) return run_mult(mult);
        if (*locus_cmd) return run_locus(locus);
        if (*scan_cmd) return run_scan(scan);
        if (*z_kl) return run_zoo_kleinian(zoo);
        if (*z_min) return run_zoo_minimal(zoo);
        if (*z_w) return run_zoo_weighted(zoo);
        if (*z_c) return run_zoo_consistency(zoo);
        if (*z_m) return run_zoo_mismatch(zoo);
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonFiniteTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
