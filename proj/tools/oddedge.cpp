#include "oddedge/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace oddedge;

unsigned default_workers() {
    const char* env = std::getenv("ODDEDGE_WORKERS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end || v < 1 || v > 1024)
        throw std::invalid_argument("ODDEDGE_WORKERS must be a count between 1 and 1024");
    return unsigned(v);
}

void parse_shard(const std::string& spec, SearchConfig& cfg) {
    unsigned i = 0, k = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%u/%u%c", &i, &k, &extra) != 2 || k == 0 || i >= k)
        throw std::invalid_argument("--shard expects i/k with 0 <= i < k, got: " + spec);
    cfg.shard_index = i;
    cfg.shard_count = k;
}

std::vector<u64> parse_u64_list(const std::string& text, size_t expected, const char* what) {
    std::vector<u64> vals;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        u64 v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size())
            throw std::invalid_argument(std::string(what) + ": not an integer: " + item);
        vals.push_back(v);
    }
    if (vals.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " comma-separated integers");
    return vals;
}

void add_output_opts(CLI::App* sub, SearchConfig& cfg, std::string& shard_spec) {
    sub->add_option("--shard", shard_spec, "take the i-th of k interleaved shards, written i/k");
    sub->add_option("--out", cfg.out_path, "record file (JSONL); stdout when omitted");
    sub->add_option("--summary", cfg.summary_path, "summary CSV file");
    sub->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint JSON file");
    sub->add_option("--checkpoint-stride", cfg.checkpoint_stride,
                    "values completed between checkpoint writes")
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads (default from ODDEDGE_WORKERS)")
        ->capture_default_str();
    sub->add_flag("--overwrite", cfg.overwrite, "replace an existing record file");
    sub->add_flag("--resume", cfg.resume, "continue a checkpointed run");
    sub->add_option("--interrupt-after", cfg.interrupt_after,
                    "stop after completing this value (testing)")
        ->group("");
}

int run_configured_search(SearchConfig cfg, const std::string& shard_spec) {
    if (!shard_spec.empty()) parse_shard(shard_spec, cfg);
    SearchSummary s = run_search(cfg);
    std::ostringstream line;
    line << cfg.task << ": scanned " << s.values_scanned << " values, " << s.records
         << " records (" << s.primitive_records << " primitive)";
    if (s.interrupted) line << ", interrupted";
    line << ", " << s.wall_ms << " ms";
    std::cerr << line.str() << "\n";
    if (s.anomalies) std::cerr << "ANOMALY records emitted: " << s.anomalies << "\n";
    return s.exit_code();
}

int run_classify(const std::string& in_path, const std::string& out_path, bool overwrite) {
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (in_path != "-") {
        file_in.open(in_path);
        if (!file_in) throw std::invalid_argument("cannot read " + in_path);
        in = &file_in;
    }
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        if (std::filesystem::exists(out_path) && !overwrite)
            throw std::invalid_argument("output exists: " + out_path +
                                        " (pass --overwrite to replace it)");
        file_out.open(out_path, std::ios::trunc);
        if (!file_out) throw std::invalid_argument("cannot write " + out_path);
        out = &file_out;
    }

    SearchConfig fake;
    fake.task = "classify";
    const std::string fp = config_fingerprint(fake);
    u64 anomalies = 0, lineno = 0;
    std::string line;
    while (std::getline(*in, line)) {
        lineno++;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        u64 x, y, z;
        if (!(ss >> x)) continue; // blank line
        if (!(ss >> y >> z))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected three edge lengths");
        std::string rest;
        if (ss >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing input");
        ordered_json rec = classify_record(x, y, z, classify_brick(x, y, z), fp);
        if (rec.at("anomaly").get<bool>()) anomalies++;
        *out << rec.dump() << '\n';
    }
    out->flush();
    if (anomalies) std::cerr << "ANOMALY records emitted: " << anomalies << "\n";
    return anomalies ? 3 : 0;
}

int run_triples(u64 n, bool count_only) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("--n must be an odd integer of at least 3");
    if (count_only) {
        std::cout << count_triples_odd_edge(factorize(n)) << "\n";
        return 0;
    }
    for (const auto& t : triples_with_odd_edge(n))
        std::cout << t.x << " " << t.y << " " << t.z << "\n";
    return 0;
}

int run_verify(const std::string& brick_spec, const std::string& cuboid_spec) {
    if (brick_spec.empty() == cuboid_spec.empty())
        throw std::invalid_argument("verify needs exactly one of --brick or --cuboid");
    if (!brick_spec.empty()) {
        auto v = parse_u64_list(brick_spec, 6, "--brick");
        auto verdict = verify_brick_tuple(v[0], v[1], v[2], v[3], v[4], v[5]);
        bool ok = verdict.failed == BrickFail::none;
        std::cout << (ok ? "PASS" : "FAIL") << ": " << verdict.describe() << "\n";
        return ok ? 0 : 2;
    }
    auto v = parse_u64_list(cuboid_spec, 7, "--cuboid");
    auto verdict = verify_cuboid_tuple(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
    std::cout << (verdict.ok() ? "PASS" : "FAIL") << ": " << verdict.describe() << "\n";
    return verdict.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"census and conjecture searches over Pythagorean odd-edge representations"};
    app.require_subcommand(1);
    int rc = 0;

    try {
        SearchConfig bricks_cfg;
        bricks_cfg.task = "bricks";
        bricks_cfg.workers = default_workers();
        std::string bricks_shard;
        auto* sb = app.add_subcommand("search-bricks",
                                      "scan odd n for Euler-brick witness pairs");
        sb->add_option("--min", bricks_cfg.n_min, "lowest odd edge")->required();
        sb->add_option("--max", bricks_cfg.n_max, "highest odd edge")->required();
        sb->add_flag("--strict", bricks_cfg.strict, "require f > 1 in every representation");
        add_output_opts(sb, bricks_cfg, bricks_shard);
        sb->callback([&] { rc = run_configured_search(bricks_cfg, bricks_shard); });

        SearchConfig cub_cfg;
        cub_cfg.task = "cuboids";
        cub_cfg.workers = default_workers();
        std::string cub_shard;
        std::vector<int> conj_list;
        auto* sc = app.add_subcommand("search-cuboids",
                                      "scan odd n for perfect-cuboid certificates");
        sc->add_option("--min", cub_cfg.n_min, "lowest odd edge")->required();
        sc->add_option("--max", cub_cfg.n_max, "highest odd edge")->required();
        sc->add_option("--conjectures", conj_list, "families to scan, e.g. 1,2,3 (default all)")
            ->delimiter(',');
        sc->add_flag("--strict", cub_cfg.strict, "require f > 1 in every representation");
        sc->add_option("--selftest-inject-forged-witness", cub_cfg.inject_forged_at,
                       "push a fabricated witness at this n (testing)")
            ->group("");
        add_output_opts(sc, cub_cfg, cub_shard);
        sc->callback([&] {
            if (!conj_list.empty()) {
                unsigned mask = 0;
                for (int c : conj_list) {
                    if (c < 1 || c > 6)
                        throw std::invalid_argument("--conjectures entries must be in 1..6");
                    mask |= 1u << c;
                }
                cub_cfg.conjectures = mask;
            }
            rc = run_configured_search(cub_cfg, cub_shard);
        });

        SearchConfig bi_cfg;
        bi_cfg.task = "biquad";
        bi_cfg.workers = default_workers();
        std::string bi_shard;
        auto* sq = app.add_subcommand("search-biquad",
                                      "scan odd quadruples for biquadratic square sums");
        sq->add_option("--conjecture", bi_cfg.family, "family: 1, 2, or 3")->required();
        sq->add_option("--bound", bi_cfg.bound, "largest allowed P,Q,R,S")->required();
        sq->add_option("--scale-bound", bi_cfg.scale_bound, "largest allowed scale a, b")
            ->capture_default_str();
        sq->add_flag("--relax-notes", bi_cfg.relax_notes,
                     "admit U or V = 1 in the two-square annotations");
        add_output_opts(sq, bi_cfg, bi_shard);
        sq->callback([&] { rc = run_configured_search(bi_cfg, bi_shard); });

        std::string cls_in, cls_out;
        bool cls_overwrite = false;
        auto* cl = app.add_subcommand("classify", "classify edge triples as Euler bricks");
        cl->add_option("--in", cls_in, "file of 'x y z' lines, or - for stdin")->required();
        cl->add_option("--out", cls_out, "record file (JSONL); stdout when omitted");
        cl->add_flag("--overwrite", cls_overwrite, "replace an existing record file");
        cl->callback([&] { rc = run_classify(cls_in, cls_out, cls_overwrite); });

        u64 tri_n = 0;
        bool count_only = false;
        auto* tr = app.add_subcommand("triples", "Pythagorean triples with a given odd edge");
        tr->add_option("--n", tri_n, "the odd edge")->required();
        tr->add_flag("--count-only", count_only, "print only the divisor-formula count");
        tr->callback([&] { rc = run_triples(tri_n, count_only); });

        auto* rp = app.add_subcommand("report-paper",
                                      "re-derive the published odd-edge census and compare");
        rp->callback([&] { rc = report_census(std::cout); });

        std::string brick_spec, cuboid_spec;
        auto* vf = app.add_subcommand("verify", "check a brick or cuboid tuple exactly");
        vf->add_option("--brick", brick_spec, "a,b,c,d1,d2,d3");
        vf->add_option("--cuboid", cuboid_spec, "a,b,c,d1,d2,d3,g");
        vf->callback([&] { rc = run_verify(brick_spec, cuboid_spec); });

        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const oddedge::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
