#include "oddedge/records.hpp"

#include <numeric>

namespace oddedge {

// ----- serialization -----

static ordered_json rep_json(const DiffSquareRep& r) {
    return ordered_json{{"t", r.t}, {"e", r.e}, {"f", r.f}};
}

static ordered_json brick_json(const EulerBrick& b) {
    return ordered_json{{"a", b.a},       {"b", b.b},       {"c", b.c},
                        {"d_ab", b.d_ab}, {"d_ac", b.d_ac}, {"d_bc", b.d_bc}};
}

static ordered_json head(const char* task, u64 n) {
    ordered_json j;
    j["schema_version"] = SCHEMA_VERSION;
    j["task"] = task;
    j["n"] = n;
    return j;
}

ordered_json brick_record(const BrickWitness& w, const std::string& fingerprint) {
    EulerBrick b = build_brick(w);
    ordered_json j = head("bricks", w.n);
    j["witness"] = ordered_json{
        {"rep1", rep_json(w.rep1)}, {"rep2", rep_json(w.rep2)}, {"d", w.d}, {"type", w.type}};
    j["solid"] = brick_json(b);
    j["primitive"] = b.primitive;
    j["anomaly"] = false;
    j["fingerprint"] = fingerprint;
    return j;
}

ordered_json cuboid_record(const CuboidWitness& w, const std::string& fingerprint) {
    PerfectCuboid c = build_perfect_cuboid(w);
    ordered_json j = head("cuboids", w.n);
    j["witness"] = ordered_json{{"repE", rep_json(w.repE)},
                                {"repG", rep_json(w.repG)},
                                {"repK", rep_json(w.repK)},
                                {"conjecture", w.conjecture}};
    ordered_json solid = brick_json({c.a, c.b, c.c, c.d_ab, c.d_ac, c.d_bc});
    solid["g"] = c.g;
    j["solid"] = solid;
    j["primitive"] = gcd3(c.a, c.b, c.c) == 1;
    j["anomaly"] = true; // a perfect-cuboid witness is an anomaly by protocol
    j["fingerprint"] = fingerprint;
    return j;
}

// A product_ok annotation escalates the hit; the record then also carries a
// bounded cross-search of cuboid witnesses at the odd edge the annotation
// implies, so the escalation ships with an explicit cross-check instead of an
// unverified claim.  For (d,U,V) the implied edge is d*|U^2-V^2|; both U and
// V are odd in any annotation that validates, so the implied value is even
// and the cross-search can only report zero, but the protocol still runs it.
static constexpr u64 CROSS_SEARCH_MAX = 1'000'000;

static std::pair<u64, u64> cross_search(const TwoSquareNote& note) {
    u64 lo = std::min(note.U, note.V), hi = std::max(note.U, note.V);
    u128 diff = u128(hi) * hi - u128(lo) * lo;
    u128 implied = u128(note.d) * diff;
    if (diff == 0 || (implied & 1) == 0 || implied > CROSS_SEARCH_MAX) return {0, 0};
    u64 n = u64(implied);
    return {n, search_cuboid_witnesses(n, ALL_CONJECTURES, false).size()};
}

ordered_json biquad_record(const BiquadHit& h, const std::string& fingerprint) {
    ordered_json j = head("biquad", h.P);
    ordered_json notes = ordered_json::array();
    for (const auto& note : h.notes) {
        ordered_json nj{{"d", note.d}, {"U", note.U}, {"V", note.V}, {"product_ok", note.product_ok}};
        if (note.product_ok) {
            auto [cn, hits] = cross_search(note);
            nj["cross_n"] = cn;
            nj["cross_hits"] = hits;
        }
        notes.push_back(std::move(nj));
    }
    j["witness"] = ordered_json{{"conjecture", h.conjecture},
                                {"a", h.a},
                                {"b", h.b},
                                {"P", h.P},
                                {"Q", h.Q},
                                {"R", h.R},
                                {"S", h.S},
                                {"T", h.T},
                                {"notes", std::move(notes)}};
    j["solid"] = nullptr; // no cuboid construction is known for these hits
    j["primitive"] = h.a == 1 && h.b == 1;
    j["anomaly"] = hit_anomalous(h);
    j["fingerprint"] = fingerprint;
    return j;
}

ordered_json classify_record(u64 x, u64 y, u64 z, const ClassifyResult& r,
                             const std::string& fingerprint) {
    ordered_json j;
    j["schema_version"] = SCHEMA_VERSION;
    j["task"] = "classify";
    j["input"] = ordered_json{{"x", x}, {"y", y}, {"z", z}};
    j["status"] = classify_status_name(r.status);
    j["scale"] = r.scale;
    if (r.status == ClassifyStatus::ok) {
        const auto& w = r.witness;
        j["witness"] = ordered_json{
            {"rep1", rep_json(w.rep1)}, {"rep2", rep_json(w.rep2)}, {"d", w.d}, {"type", w.type}};
        j["solid"] = brick_json(build_brick(w));
        j["primitive"] = r.scale == 1;
    } else {
        j["witness"] = nullptr;
        j["solid"] = nullptr;
        j["primitive"] = false;
    }
    // no_representation would mean an Euler brick whose diagonals admit no
    // difference-of-squares recovery; that contradicts the construction, so
    // it is flagged for review rather than silently reported
    j["anomaly"] = r.status == ClassifyStatus::no_representation;
    j["fingerprint"] = fingerprint;
    return j;
}

// ----- verification -----

static DiffSquareRep rep_from(const ordered_json& j) {
    return {j.at("t").get<u64>(), j.at("e").get<u64>(), j.at("f").get<u64>()};
}

static bool rep_valid(const DiffSquareRep& r, u64 n) {
    if (r.e <= r.f || r.f < 1 || std::gcd(r.e, r.f) != 1) return false;
    return u128(r.t) * (u128(r.e) * r.e - u128(r.f) * r.f) == n;
}

static u128 term(const DiffSquareRep& r) {
    u128 p = u128(r.t) * r.e * r.f;
    return p * p;
}

static int type_of(u64 t1, u64 t2) {
    int scaled = int(t1 > 1) + int(t2 > 1);
    return scaled == 0 ? 1 : (scaled == 1 ? 2 : 3);
}

static bool solid_matches(const ordered_json& j, const EulerBrick& b) {
    return j.at("a").get<u64>() == b.a && j.at("b").get<u64>() == b.b &&
           j.at("c").get<u64>() == b.c && j.at("d_ab").get<u64>() == b.d_ab &&
           j.at("d_ac").get<u64>() == b.d_ac && j.at("d_bc").get<u64>() == b.d_bc;
}

static bool verify_brick_witness_json(const ordered_json& rec, const ordered_json& wj, u64 n,
                                      bool expect_primitive_key) {
    BrickWitness w{n, rep_from(wj.at("rep1")), rep_from(wj.at("rep2")),
                   wj.at("d").get<u64>(), wj.at("type").get<int>()};
    if (!(n & 1) || !rep_valid(w.rep1, n) || !rep_valid(w.rep2, n)) return false;
    if (w.rep2 < w.rep1) return false;
    if (term(w.rep1) + term(w.rep2) != u128(w.d) * w.d) return false;
    if (w.type != type_of(w.rep1.t, w.rep2.t)) return false;
    EulerBrick b = build_brick(w);
    if (!solid_matches(rec.at("solid"), b)) return false;
    if (verify_brick(b).failed != BrickFail::none) return false;
    if (expect_primitive_key && rec.at("primitive").get<bool>() != b.primitive) return false;
    return true;
}

static bool verify_bricks_record(const ordered_json& rec) {
    u64 n = rec.at("n").get<u64>();
    if (!verify_brick_witness_json(rec, rec.at("witness"), n, true)) return false;
    return rec.at("anomaly").get<bool>() == false;
}

static bool verify_cuboids_record(const ordered_json& rec) {
    u64 n = rec.at("n").get<u64>();
    const auto& wj = rec.at("witness");
    CuboidWitness w{n, rep_from(wj.at("repE")), rep_from(wj.at("repG")), rep_from(wj.at("repK")),
                    wj.at("conjecture").get<int>()};
    // the independent arbitrary-precision check covers rep validity, the
    // certificate, the conjecture index, and all solid identities
    if (!revalidate_witness_exact(w)) return false;
    PerfectCuboid c = build_perfect_cuboid(w);
    const auto& sj = rec.at("solid");
    if (!solid_matches(sj, {c.a, c.b, c.c, c.d_ab, c.d_ac, c.d_bc})) return false;
    if (sj.at("g").get<u64>() != c.g) return false;
    if (rec.at("primitive").get<bool>() != (gcd3(c.a, c.b, c.c) == 1)) return false;
    return rec.at("anomaly").get<bool>() == true;
}

static bool verify_biquad_record(const ordered_json& rec) {
    const auto& wj = rec.at("witness");
    BiquadHit h;
    h.conjecture = wj.at("conjecture").get<int>();
    h.a = wj.at("a").get<u64>();
    h.b = wj.at("b").get<u64>();
    h.P = wj.at("P").get<u64>();
    h.Q = wj.at("Q").get<u64>();
    h.R = wj.at("R").get<u64>();
    h.S = wj.at("S").get<u64>();
    h.T = wj.at("T").get<u64>();
    if (rec.at("n").get<u64>() != h.P) return false;
    for (const auto& nj : wj.at("notes")) {
        TwoSquareNote note;
        note.d = nj.at("d").get<u64>();
        note.scaled = note.d > 1;
        note.U = nj.at("U").get<u64>();
        note.V = nj.at("V").get<u64>();
        note.product_ok = nj.at("product_ok").get<bool>();
        if (nj.contains("cross_n") != note.product_ok) return false;
        h.notes.push_back(note);
    }
    // GMP re-check: equation, canonical order, scale constraints, and every
    // annotation's decomposition and product chain
    if (!revalidate_hit_exact(h)) return false;
    if (!rec.at("solid").is_null()) return false;
    if (rec.at("primitive").get<bool>() != (h.a == 1 && h.b == 1)) return false;
    return rec.at("anomaly").get<bool>() == hit_anomalous(h);
}

static bool verify_classify_record(const ordered_json& rec) {
    const auto& in = rec.at("input");
    u64 x = in.at("x").get<u64>(), y = in.at("y").get<u64>(), z = in.at("z").get<u64>();
    ClassifyResult r = classify_brick(x, y, z);
    if (rec.at("status").get<std::string>() != classify_status_name(r.status)) return false;
    if (rec.at("scale").get<u64>() != r.scale) return false;
    if (r.status == ClassifyStatus::ok) {
        const auto& wj = rec.at("witness");
        if (rep_from(wj.at("rep1")) != r.witness.rep1) return false;
        if (rep_from(wj.at("rep2")) != r.witness.rep2) return false;
        if (wj.at("d").get<u64>() != r.witness.d) return false;
        if (wj.at("type").get<int>() != r.witness.type) return false;
        if (!verify_brick_witness_json(rec, wj, r.witness.n, false)) return false;
        if (rec.at("primitive").get<bool>() != (r.scale == 1)) return false;
    } else {
        if (!rec.at("witness").is_null() || !rec.at("solid").is_null()) return false;
        if (rec.at("primitive").get<bool>()) return false;
    }
    return rec.at("anomaly").get<bool>() == (r.status == ClassifyStatus::no_representation);
}

bool verify_record(const ordered_json& rec) {
    try {
        if (rec.at("schema_version").get<int>() != SCHEMA_VERSION) return false;
        if (!rec.at("fingerprint").is_string()) return false;
        std::string task = rec.at("task").get<std::string>();
        if (task == "bricks") return verify_bricks_record(rec);
        if (task == "cuboids") return verify_cuboids_record(rec);
        if (task == "biquad") return verify_biquad_record(rec);
        if (task == "classify") return verify_classify_record(rec);
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace oddedge
