// ----- acceptance harness -----
// Drives the CLI binary end to end and rechecks the library against
// brute-force oracles, printing exactly one [PASS]/[FAIL] line per
// criterion (details indented underneath on failure).
//
//   usage: acceptance <path-to-cli>
//
// Exit code 0 when every criterion passes, 1 otherwise.

#include "oddedge/search.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

using namespace oddedge;
namespace fs = std::filesystem;

// ----- plumbing -----

static int g_failures = 0;

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (notes.size() < 8) notes.push_back(what);
    }
};

static void report(int idx, const std::string& label, const Criterion& c) {
    std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", idx, label.c_str());
    for (const auto& note : c.notes) std::printf("       - %s\n", note.c_str());
    std::fflush(stdout);
    if (!c.ok) g_failures++;
}

static int run_cmd(const std::string& cmd) {
    int st = std::system(cmd.c_str());
    if (st == -1) return -1;
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

static std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) return "<unreadable: " + path + ">";
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

static std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

static u64 elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return u64(std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count());
}

struct Ctx {
    std::string cli;
    fs::path dir;
    std::string log;                     // accumulated CLI stderr
    std::string census;                  // criterion-1 record file
    std::vector<ordered_json> primitive; // its primitive records, in order
    std::string in(const char* name) const { return (dir / name).string(); }
};

// ----- criterion 1: the primitive census -----

static void criterion_census(Ctx& ctx) {
    Criterion c;
    ctx.census = ctx.in("census.jsonl");
    auto t0 = std::chrono::steady_clock::now();
    int rc = run_cmd("\"" + ctx.cli + "\" search-bricks --min 3 --max 999 --workers 1 --out " +
                     ctx.census + " --summary " + ctx.in("census.csv") + " 2>>" + ctx.log);
    u64 ms = elapsed_ms(t0);
    c.expect(rc == 0, "search-bricks exited with " + std::to_string(rc));

    std::map<int, std::set<u64>> primitive_by_type;
    for (const auto& line : lines_of(slurp(ctx.census))) {
        ordered_json rec = ordered_json::parse(line, nullptr, false);
        if (rec.is_discarded()) {
            c.expect(false, "unparseable record line");
            continue;
        }
        if (rec.at("primitive").get<bool>()) {
            ctx.primitive.push_back(rec);
            primitive_by_type[rec.at("witness").at("type").get<int>()].insert(
                rec.at("n").get<u64>());
        }
    }
    c.expect(ctx.primitive.size() == 11,
             "expected 11 primitive records, got " + std::to_string(ctx.primitive.size()));
    c.expect(primitive_by_type.count(1) == 0, "a type 1 brick appeared");
    c.expect(primitive_by_type[2] == std::set<u64>{85, 117, 195, 231, 275, 495, 855, 935},
             "type 2 odd edges are wrong");
    c.expect(primitive_by_type[3] == std::set<u64>{187, 429, 693}, "type 3 odd edges are wrong");
    c.expect(ms < 10000, "took " + std::to_string(ms) + " ms, limit is 10000");
    report(1,
           "census scan [3,999] emits exactly the 11 primitive bricks, single worker (" +
               std::to_string(ms) + " ms)",
           c);
}

// ----- criterion 2: witness fidelity against the published table -----

static void criterion_report(Ctx& ctx) {
    Criterion c;
    std::string out = ctx.in("report.txt");
    int rc = run_cmd("\"" + ctx.cli + "\" report-paper >" + out + " 2>>" + ctx.log);
    c.expect(rc == 0, "report-paper exited with " + std::to_string(rc));
    std::string text = slurp(out);
    c.expect(text.find("census reproduced: PASS") != std::string::npos,
             "missing the final PASS verdict");
    c.expect(text.find("[FAIL]") == std::string::npos, "a row failed");
    size_t passes = 0, pos = 0;
    while ((pos = text.find("[PASS]", pos)) != std::string::npos) {
        passes++;
        pos += 6;
    }
    c.expect(passes == 11, "expected 11 row checks, saw " + std::to_string(passes));
    report(2, "report-paper reproduces all published d-values and 6-tuples, exit 0", c);
}

// ----- criterion 3: classifier agreement -----

static void criterion_classify(Ctx& ctx) {
    Criterion c;
    c.expect(ctx.primitive.size() == 11, "census records unavailable");

    std::string in_path = ctx.in("classify_in.txt");
    {
        std::ofstream os(in_path);
        for (const auto& rec : ctx.primitive) {
            const auto& s = rec.at("solid");
            os << s.at("a").get<u64>() << " " << s.at("b").get<u64>() << " "
               << s.at("c").get<u64>() << "\n";
        }
        os << "44,117,240\n"; // the historical brick, comma form
    }
    std::string out_path = ctx.in("classify_out.jsonl");
    int rc = run_cmd("\"" + ctx.cli + "\" classify --in " + in_path + " --out " + out_path +
                     " 2>>" + ctx.log);
    c.expect(rc == 0, "classify exited with " + std::to_string(rc));

    auto lines = lines_of(slurp(out_path));
    c.expect(lines.size() == ctx.primitive.size() + 1,
             "expected " + std::to_string(ctx.primitive.size() + 1) + " records, got " +
                 std::to_string(lines.size()));
    for (size_t i = 0; i < lines.size() && i < ctx.primitive.size(); i++) {
        ordered_json got = ordered_json::parse(lines[i]);
        const ordered_json& want = ctx.primitive[i];
        u64 n = want.at("n").get<u64>();
        c.expect(got.at("status").get<std::string>() == "ok",
                 "n=" + std::to_string(n) + ": status " + got.at("status").get<std::string>());
        c.expect(got.at("scale").get<u64>() == 1, "n=" + std::to_string(n) + ": scale not 1");
        c.expect(got.at("witness") == want.at("witness"),
                 "n=" + std::to_string(n) + ": witness differs from the search");
        c.expect(got.at("solid") == want.at("solid"),
                 "n=" + std::to_string(n) + ": solid differs from the search");
    }
    if (lines.size() == ctx.primitive.size() + 1) {
        ordered_json hist = ordered_json::parse(lines.back());
        c.expect(hist.at("status").get<std::string>() == "ok", "(44,117,240): not ok");
        c.expect(hist.at("witness").at("type").get<int>() == 2, "(44,117,240): not type 2");
        c.expect(hist.at("witness").at("d").get<u64>() == 122, "(44,117,240): wrong d");
    }

    std::string verdict = ctx.in("verify_out.txt");
    int vrc = run_cmd("\"" + ctx.cli + "\" verify --brick 44,117,240,125,267,244 >" + verdict +
                      " 2>>" + ctx.log);
    c.expect(vrc == 0, "verify --brick exited with " + std::to_string(vrc));
    c.expect(slurp(verdict).rfind("PASS", 0) == 0, "verify did not print PASS");
    report(3, "classify agrees with the census on all 11 bricks and the historical (44,117,240)",
           c);
}

// ----- criterion 4: the divisor-sum count formula -----

static void criterion_count_formula(Ctx&) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    u64 mismatches = 0;
    for (u64 n = 3; n <= 2001; n += 2) {
        u64 nn = n * n;
        u64 brute = 0;
        for (u64 y = 2; y <= (nn - 1) / 2; y += 2)
            if (oracle::slow_is_square(nn + y * y)) brute++;
        if (count_triples_odd_edge(factorize(n)) != brute) {
            if (!mismatches) c.expect(false, "first mismatch at n=" + std::to_string(n));
            mismatches++;
        }
    }
    u64 ms = elapsed_ms(t0);
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    c.expect(ms < 60000, "took " + std::to_string(ms) + " ms, limit is 60000");
    report(4,
           "count formula equals the even-leg scan for every odd n <= 2001 (" +
               std::to_string(ms) + " ms)",
           c);
}

// ----- criterion 5: representation completeness -----

static void criterion_representations(Ctx&) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    u64 mismatches = 0;
    for (u64 n = 3; n <= 9999; n += 2) {
        if (diff_square_reps(n) != oracle::slow_reps(n)) {
            if (!mismatches) c.expect(false, "first mismatch at n=" + std::to_string(n));
            mismatches++;
        }
    }
    u64 ms = elapsed_ms(t0);
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    report(5,
           "representation lists match the brute-force oracle for every odd n <= 9999 (" +
               std::to_string(ms) + " ms)",
           c);
}

// ----- criterion 6: the cuboid scan stays silent, forgeries are rejected -----

static void criterion_cuboids(Ctx& ctx) {
    Criterion c;
    std::string out = ctx.in("cuboids.jsonl");
    std::string sum = ctx.in("cuboids.csv");
    auto t0 = std::chrono::steady_clock::now();
    int rc = run_cmd("\"" + ctx.cli + "\" search-cuboids --min 3 --max 99999 --workers 4 --out " +
                     out + " --summary " + sum + " 2>>" + ctx.log);
    u64 ms = elapsed_ms(t0);
    c.expect(rc == 0, "search-cuboids exited with " + std::to_string(rc));
    c.expect(slurp(out).empty(), "a record appeared below 100000");
    std::string csv = slurp(sum);
    c.expect(csv.find("records,0\n") != std::string::npos, "summary does not report 0 records");
    c.expect(csv.find("values_scanned,49999\n") != std::string::npos,
             "summary scanned-value count is wrong");

    std::string forged_out = ctx.in("forged.jsonl");
    std::string forged_err = ctx.in("forged.err");
    int frc = run_cmd("\"" + ctx.cli +
                      "\" search-cuboids --min 3 --max 199 --selftest-inject-forged-witness 105" +
                      " --out " + forged_out + " 2>" + forged_err);
    c.expect(frc == 2, "forged witness run exited with " + std::to_string(frc) + ", want 2");
    c.expect(slurp(forged_err).find("refusing to emit") != std::string::npos,
             "missing the refusal message");
    c.expect(slurp(forged_out).empty(), "the forged witness reached the record file");
    report(6,
           "no certificate triple exists for odd n < 100000; a forged witness is rejected (" +
               std::to_string(ms) + " ms)",
           c);
}

// ----- criterion 7: biquadratic oracle equivalence -----

static void criterion_biquad(Ctx& ctx) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    struct Run {
        int conj;
        u64 bound, scale;
    } runs[] = {{1, 60, 1}, {2, 40, 9}, {3, 40, 9}};
    for (const auto& r : runs) {
        std::string out = ctx.in(("biquad" + std::to_string(r.conj) + ".jsonl").c_str());
        std::string cmd = "\"" + ctx.cli + "\" search-biquad --conjecture " +
                          std::to_string(r.conj) + " --bound " + std::to_string(r.bound);
        if (r.conj > 1) cmd += " --scale-bound " + std::to_string(r.scale);
        cmd += " --out " + out + " 2>>" + ctx.log;
        int rc = run_cmd(cmd);
        c.expect(rc == 0,
                 "family " + std::to_string(r.conj) + " exited with " + std::to_string(rc));

        std::vector<oracle::BiquadTuple> got;
        for (const auto& line : lines_of(slurp(out))) {
            const auto w = ordered_json::parse(line).at("witness");
            got.push_back({w.at("a").get<u64>(), w.at("b").get<u64>(), w.at("P").get<u64>(),
                           w.at("Q").get<u64>(), w.at("R").get<u64>(), w.at("S").get<u64>(),
                           w.at("T").get<u64>()});
        }
        std::sort(got.begin(), got.end());
        c.expect(std::adjacent_find(got.begin(), got.end()) == got.end(),
                 "family " + std::to_string(r.conj) + " emitted a duplicate");
        auto want = oracle::slow_biquad(r.conj, r.bound, r.scale);
        c.expect(got == want, "family " + std::to_string(r.conj) + " differs from the oracle (" +
                                  std::to_string(got.size()) + " vs " +
                                  std::to_string(want.size()) + " hits)");
    }
    u64 ms = elapsed_ms(t0);
    c.expect(ms < 120000, "took " + std::to_string(ms) + " ms, limit is 120000");
    report(7,
           "biquadratic searches are set-equal to the sextuple-loop oracle (" +
               std::to_string(ms) + " ms)",
           c);
}

// ----- criterion 8: determinism, sharding, interrupt and resume -----

static void criterion_determinism(Ctx& ctx) {
    Criterion c;
    std::string base = slurp(ctx.census);
    c.expect(!base.empty(), "census output unavailable");
    const std::string range = " search-bricks --min 3 --max 999 ";

    std::string par = ctx.in("parallel.jsonl");
    int rc = run_cmd("\"" + ctx.cli + "\"" + range + "--workers 3 --out " + par + " 2>>" + ctx.log);
    c.expect(rc == 0, "3-worker rerun exited with " + std::to_string(rc));
    c.expect(slurp(par) == base, "3-worker rerun changed the bytes");

    std::vector<std::string> merged;
    for (int i = 0; i < 4; i++) {
        std::string out = ctx.in(("shard" + std::to_string(i) + ".jsonl").c_str());
        int src = run_cmd("\"" + ctx.cli + "\"" + range + "--workers 1 --shard " +
                          std::to_string(i) + "/4 --out " + out + " 2>>" + ctx.log);
        c.expect(src == 0, "shard " + std::to_string(i) + " exited with " + std::to_string(src));
        for (const auto& line : lines_of(slurp(out))) merged.push_back(line);
    }
    std::stable_sort(merged.begin(), merged.end(),
                     [](const std::string& x, const std::string& y) {
                         return ordered_json::parse(x).at("n").get<u64>() <
                                ordered_json::parse(y).at("n").get<u64>();
                     });
    std::string merged_text;
    for (const auto& line : merged) merged_text += line + "\n";
    c.expect(merged_text == base, "sorted 4-shard union differs from the unsharded run");

    std::string resumed = ctx.in("resumed.jsonl");
    std::string ck = ctx.in("resumed.ck");
    std::string common = range + "--workers 1 --out " + resumed + " --checkpoint " + ck +
                         " --checkpoint-stride 8 ";
    int irc = run_cmd("\"" + ctx.cli + "\"" + common + "--interrupt-after 499 2>>" + ctx.log);
    c.expect(irc == 0, "interrupted run exited with " + std::to_string(irc));
    c.expect(lines_of(slurp(resumed)).size() == 11, "interrupted run record count is wrong");
    int rrc = run_cmd("\"" + ctx.cli + "\"" + common + "--resume 2>>" + ctx.log);
    c.expect(rrc == 0, "resume exited with " + std::to_string(rrc));
    c.expect(slurp(resumed) == base, "interrupt plus resume changed the bytes");
    report(8, "reruns, 4-way shard unions, and interrupt/resume all reproduce the census bytes",
           c);
}

// ----- driver -----

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
        return 1;
    }
    Ctx ctx;
    ctx.cli = argv[1];
    ctx.dir = fs::temp_directory_path() / "oddedge_acceptance";
    std::error_code ec;
    fs::remove_all(ctx.dir, ec);
    fs::create_directories(ctx.dir);
    ctx.log = ctx.in("cli_stderr.log");

    criterion_census(ctx);
    criterion_report(ctx);
    criterion_classify(ctx);
    criterion_count_formula(ctx);
    criterion_representations(ctx);
    criterion_cuboids(ctx);
    criterion_biquad(ctx);
    criterion_determinism(ctx);

    if (g_failures) {
        std::printf("acceptance: %d of 8 criteria FAILED (CLI stderr kept at %s)\n", g_failures,
                    ctx.log.c_str());
        return 1;
    }
    std::printf("acceptance: all 8 criteria passed\n");
    fs::remove_all(ctx.dir, ec);
    return 0;
}
