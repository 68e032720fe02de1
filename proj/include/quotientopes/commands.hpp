#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quotientopes/congruence.hpp"
#include "quotientopes/errors.hpp"
#include "quotientopes/quotientope.hpp"
#include "quotientopes/serialization.hpp"
#include "quotientopes/shards.hpp"
#include "quotientopes/weights.hpp"

namespace qtp {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_verification = 3,
    exit_scale = 4,
};

struct RunConfig {
    int n = 0;
    std::string preset;       // full | sylvester | anti-sylvester | cube
    std::string ideal_path;   // ideal JSON file
    std::string generators;   // shard list "1-3:[2];2-4:[]"
    std::string weights_path; // empty: default weights
    std::string heights_path; // verify only: override computed heights
    std::string format = "json";  // json | off | csv2d
    std::string out;
    std::string verify_mode = "all";  // all | fast | off
    bool essential_only = false;
    std::optional<uint64_t> seed;
    int sample_count = 5;
};

namespace detail {

inline std::vector<Shard> parse_generator_list(const std::string& text) {
    std::vector<Shard> out;
    std::string tok;
    auto flush = [&]() {
        if (!tok.empty()) {
            out.push_back(parse_shard(tok));
            tok.clear();
        }
    };
    for (char c : text) {
        if (c == ';' || c == ' ' || c == '\t' || c == '\n') flush();
        else tok += c;
    }
    flush();
    if (out.empty()) throw validation_error("no shards in generator list \"" + text + "\"");
    return out;
}

// Exactly one of preset / ideal file / generator list picks the congruence.
// strict_closure refuses ideal files that are not already upward closed.
inline Congruence resolve_congruence(const RunConfig& cfg, bool strict_closure) {
    int sources = !cfg.preset.empty() + !cfg.ideal_path.empty() + !cfg.generators.empty();
    if (sources != 1)
        throw validation_error("exactly one of --preset, --ideal, --generators is required");
    if (cfg.n == 0) throw validation_error("--n is required");
    check_ground_set(cfg.n);
    if (!cfg.preset.empty()) {
        if (cfg.preset == "full") return full_congruence(cfg.n);
        if (cfg.preset == "sylvester") return sylvester_congruence(cfg.n);
        if (cfg.preset == "anti-sylvester") return anti_sylvester_congruence(cfg.n);
        if (cfg.preset == "cube") return cube_congruence(cfg.n);
        throw validation_error("unknown preset \"" + cfg.preset + "\"");
    }
    if (!cfg.ideal_path.empty()) {
        LoadedIdeal loaded = load_ideal(cfg.ideal_path);
        if (loaded.ideal.n() != cfg.n)
            throw validation_error("ideal file is for n=" + std::to_string(loaded.ideal.n()) +
                                   ", --n says " + std::to_string(cfg.n));
        if (!loaded.was_closed) {
            std::ostringstream msg;
            msg << "ideal file is not upward closed";
            if (loaded.closure_witness)
                msg << ": " << format_shard(loaded.closure_witness->first) << " forces "
                    << format_shard(loaded.closure_witness->second) << " but is missing";
            if (strict_closure) throw validation_error(msg.str());
            std::cerr << "note: " << msg.str() << "; proceeding with the closure ("
                      << loaded.ideal.size() << " shards)\n";
        }
        return {loaded.ideal};
    }
    return {upward_closure(parse_generator_list(cfg.generators), cfg.n)};
}

struct ResolvedWeights {
    WeightFunction f;
    std::string source;  // "default" or "file"
};

// Default weights come pre-certified. A weights file must earn a certificate:
// global dominance first, then the weaker per-ideal form with a note.
inline ResolvedWeights resolve_weights(const RunConfig& cfg, const Congruence& c) {
    if (cfg.weights_path.empty()) return {default_weights(cfg.n), "default"};
    WeightFunction f = load_weights(cfg.weights_path);
    if (f.n != cfg.n)
        throw validation_error("weights file is for n=" + std::to_string(f.n) + ", --n says " +
                               std::to_string(cfg.n));
    bool global_complete = true;
    for (const Shard& s : all_shards(cfg.n))
        if (!f.values.count(s)) { global_complete = false; break; }
    if (global_complete) {
        DominanceResult r = certify_weights(f, cfg.n);
        if (r.ok) return {std::move(f), "file"};
        std::cerr << "note: weights are not globally forcing-dominant (" << format_shard(*r.violator)
                  << ": " << format_rational(r.weight) << " <= " << format_rational(r.forced_sum)
                  << "); trying the per-ideal form\n";
    }
    DominanceResult r = certify_weights(f, cfg.n, c.ideal);
    if (!r.ok)
        throw validation_error("weights are not forcing-dominant on the ideal: weight of " +
                               format_shard(*r.violator) + " is " + format_rational(r.weight) +
                               ", forced sum is " + format_rational(r.forced_sum));
    std::cerr << "note: weights certified per-ideal only; heights are valid for this congruence alone\n";
    return {std::move(f), "file"};
}

inline std::string json_out_path(const std::string& out) {
    if (out.size() >= 5 && out.substr(out.size() - 5) == ".json") return out;
    return out + ".json";
}

inline std::string sibling_path(const std::string& json_path, const std::string& ext) {
    return json_path.substr(0, json_path.size() - 5) + ext;
}

}  // namespace detail

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string detail;
};

namespace detail {

// The check suite shared by verify and by build --verify. Checks 1-5 are the
// fast set; the rest run in all mode. A heights override exercises 3-7
// against the supplied values instead of the computed ones.
inline std::vector<CheckRecord> run_checks(const Congruence& c, const WeightFunction& f,
                                           const std::string& weights_source,
                                           const HeightFunction& h, bool all_mode) {
    const int n = c.n();
    std::vector<CheckRecord> records;
    std::vector<Permutation> perms = all_permutations(n);

    {  // 1: the ray vectors across every wall satisfy the one-coefficient dependence
        CheckRecord r{"linear-dependence", "pass", ""};
        for (const Permutation& p : perms)
            for (int pos = 1; pos < n && r.status == "pass"; ++pos)
                if (p.value_at(pos) < p.value_at(pos + 1) &&
                    !check_linear_dependence(p, p.adjacent_swap(pos))) {
                    r.status = "fail";
                    r.detail = "wall " + p.to_string() + "|" + p.adjacent_swap(pos).to_string();
                }
        if (r.status == "pass") r.detail = "all walls";
        records.push_back(r);
    }
    {  // 2: shared rays of the two chambers of a wall lie in the wall's shard
        CheckRecord r{"wall-shard-rays", "pass", ""};
        for (const Permutation& p : perms)
            for (int pos = 1; pos < n && r.status == "pass"; ++pos) {
                if (p.value_at(pos) >= p.value_at(pos + 1)) continue;
                Wall w = separating_wall(p, p.adjacent_swap(pos));
                for (int k = 1; k < n; ++k) {
                    if (k == pos) continue;
                    if (!ray_in_shard(p.prefix_set(k), w.shard)) {
                        r.status = "fail";
                        r.detail = "wall " + p.to_string() + "|" + w.upper.to_string() +
                                   ", ray " + p.prefix_set(k).to_string();
                        break;
                    }
                }
            }
        if (r.status == "pass") r.detail = "all walls";
        records.push_back(r);
    }
    {  // 3: dominance certificate present
        CheckRecord r{"dominance", "pass", ""};
        switch (f.certificate) {
            case DominanceCertificate::global: r.detail = "global (" + weights_source + " weights)"; break;
            case DominanceCertificate::per_ideal: r.detail = "per-ideal (" + weights_source + " weights)"; break;
            case DominanceCertificate::none:
                r.status = "fail";
                r.detail = "no certificate";
                break;
        }
        records.push_back(r);
    }
    {  // 4: wall inequalities strict inside the ideal, equalities outside
        CheckRecord r{"wall-inequalities", "pass", ""};
        for (const Permutation& p : perms)
            for (int pos = 1; pos < n && r.status == "pass"; ++pos) {
                if (p.value_at(pos) >= p.value_at(pos + 1)) continue;
                Permutation q = p.adjacent_swap(pos);
                Wall w = separating_wall(p, q);
                WallRelation rel = check_wall_inequality(h, p, q);
                WallRelation want = c.ideal.contains(w.shard) ? WallRelation::strict : WallRelation::equal;
                if (rel != want) {
                    r.status = "fail";
                    const char* names[] = {"strict", "equal", "violated"};
                    r.detail = "wall " + p.to_string() + "|" + q.to_string() + " with shard " +
                               format_shard(w.shard) + ": expected " + names[int(want)] +
                               ", got " + names[int(rel)];
                }
            }
        if (r.status == "pass") r.detail = "all walls classified";
        records.push_back(r);
    }

    ClassPartition part = classes_from_ideal(c);
    std::vector<RationalVector> vertices;
    for (int X = 0; X < part.class_count(); ++X) vertices.push_back(class_vertex(part, h, X));

    {  // 5: every class vertex satisfies every inequality
        CheckRecord r{"vertex-feasibility", "pass", ""};
        for (int X = 0; X < part.class_count() && r.status == "pass"; ++X)
            for (uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
                Subset R(n, bits);
                if (dot_ray(ray_vector(R), vertices[X]) > h.at(R)) {
                    r.status = "fail";
                    r.detail = "class " + part.representatives[X].to_string() + ", R=" + R.to_string();
                    break;
                }
            }
        if (r.status == "pass")
            r.detail = std::to_string(part.class_count()) + " vertices";
        records.push_back(r);
    }

    if (!all_mode) return records;

    {  // 6: the vertex is independent of the member used to compute it
        CheckRecord r{"vertex-member-independence", "pass", ""};
        for (int X = 0; X < part.class_count() && r.status == "pass"; ++X)
            for (const Permutation& p : part.classes.at(X))
                if (chamber_vertex(p, h) != vertices[X]) {
                    r.status = "fail";
                    r.detail = "class " + part.representatives[X].to_string() + ", member " + p.to_string();
                    break;
                }
        if (r.status == "pass") r.detail = "all members agree";
        records.push_back(r);
    }
    {  // 7: normal-fan certificate and orientation, via a full build
        CheckRecord fan{"normal-fan", "pass", ""};
        CheckRecord ori{"orientation", "pass", ""};
        try {
            Quotientope q = build_quotientope(c, f);
            q.height = h;  // judge the certificate against the heights under test
            for (int X = 0; X < q.classes.class_count(); ++X) q.vertices[X] = vertices[X];
            NormalFanReport rep = verify_normal_fan(q);
            if (!rep.ok) {
                fan.status = "fail";
                fan.detail = rep.failures.front() + " (+" +
                             std::to_string(rep.failures.size() - 1) + " more)";
            } else {
                fan.detail = std::to_string(rep.checked) + " pairs checked";
            }
            if (!c.ideal.is_essential()) {
                OrientedGraph g = oriented_graph(q);
                ori.status = "skipped";
                ori.detail = std::string("non-essential congruence; observed ") +
                             (g.matches_covers ? "match" : "mismatch") + " anyway";
            } else {
                OrientedGraph g = oriented_graph(q);
                bool ok = g.matches_covers && g.sources.size() == 1 && g.sinks.size() == 1 &&
                          g.sources.front() == q.poset.bottom_class &&
                          g.sinks.front() == q.poset.top_class;
                if (!ok) {
                    ori.status = "fail";
                    ori.detail = g.matches_covers ? "source or sink not unique"
                                                  : "digraph differs from quotient covers";
                } else {
                    ori.detail = std::string("sign ") + g.sign + ", unique source and sink";
                }
            }
        } catch (const verification_error& e) {
            fan.status = "fail";
            fan.detail = e.what();
            ori.status = "skipped";
            ori.detail = "build failed";
        }
        records.push_back(fan);
        records.push_back(ori);
    }
    {  // 8: direct lattice-congruence oracle
        CheckRecord r{"congruence-oracle", "pass", ""};
        if (n <= 4) {
            if (!is_lattice_congruence_oracle(part)) {
                r.status = "fail";
                r.detail = "meet or join leaves the classes";
            } else {
                r.detail = "meets and joins respect the classes";
            }
        } else {
            r.status = "skipped";
            r.detail = "oracle supports n <= 4";
        }
        records.push_back(r);
    }
    {  // 9: classes are weak-order intervals
        CheckRecord r{"class-intervals", "pass", ""};
        for (int X = 0; X < part.class_count() && r.status == "pass"; ++X) {
            const std::vector<Permutation>& cls = part.classes[X];
            const Permutation& lo = part.representatives[X];
            int max_inv = -1, max_count = 0;
            const Permutation* hi = nullptr;
            for (const Permutation& p : cls) {
                int inv = inversion_set(p).size();
                if (inv > max_inv) { max_inv = inv; max_count = 1; hi = &p; }
                else if (inv == max_inv) ++max_count;
            }
            if (max_count != 1) {
                r.status = "fail";
                r.detail = "class " + lo.to_string() + " has no unique maximum";
                break;
            }
            for (const Permutation& p : perms) {
                bool inside = part.class_index(p) == X;
                bool between = weak_leq(lo, p) && weak_leq(p, *hi);
                if (inside != between) {
                    r.status = "fail";
                    r.detail = "class " + lo.to_string() + " vs " + p.to_string();
                    break;
                }
            }
        }
        if (r.status == "pass") r.detail = "all classes are intervals";
        records.push_back(r);
    }
    {  // 10: arc diagrams are valid and match the minimum's descent walls
        CheckRecord r{"arc-noncrossing", "pass", ""};
        for (int X = 0; X < part.class_count() && r.status == "pass"; ++X) {
            std::vector<Shard> arcs = arc_diagram_of_class(part, X);
            if (!is_noncrossing_diagram(arcs)) {
                r.status = "fail";
                r.detail = "class " + part.representatives[X].to_string() + " has a crossing diagram";
                break;
            }
            std::set<Shard> from_min;
            const Permutation& m = part.representatives[X];
            for (int pos = 1; pos < n; ++pos)
                if (m.value_at(pos) > m.value_at(pos + 1)) {
                    Wall w = separating_wall(m, m.adjacent_swap(pos));
                    if (c.ideal.contains(w.shard)) from_min.insert(w.shard);
                }
            if (std::set<Shard>(arcs.begin(), arcs.end()) != from_min) {
                r.status = "fail";
                r.detail = "class " + part.representatives[X].to_string() +
                           ": diagram differs from the minimum's descent walls";
            }
        }
        if (r.status == "pass") r.detail = "all diagrams noncrossing";
        records.push_back(r);
    }
    return records;
}

inline json records_to_json(const std::vector<CheckRecord>& records) {
    json checks = json::array();
    bool ok = true;
    for (const CheckRecord& r : records) {
        checks.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        if (r.status == "fail") ok = false;
    }
    return json{{"ok", ok}, {"checks", checks}};
}

}  // namespace detail

// build: construct the quotientope, optionally verify, write the document.
inline int run_build(const RunConfig& cfg) {
    Congruence c = detail::resolve_congruence(cfg, /*strict_closure=*/false);
    detail::ResolvedWeights w = detail::resolve_weights(cfg, c);
    Quotientope q = build_quotientope(c, w.f);

    if (cfg.verify_mode != "off") {
        std::vector<CheckRecord> records =
            detail::run_checks(c, w.f, w.source, q.height, cfg.verify_mode == "all");
        for (const CheckRecord& r : records)
            if (r.status == "fail")
                throw verification_error("check " + r.name + " failed: " + r.detail);
    }

    std::string json_path = detail::json_out_path(cfg.out.empty() ? "quotientope.json" : cfg.out);
    QuotientopeDocument doc = document_from_quotientope(q, w.source);
    write_text_file(json_path, quotientope_to_json(doc).dump(2) + "\n");
    std::string extra;
    if (cfg.format == "off") {
        extra = detail::sibling_path(json_path, ".off");
        write_text_file(extra, export_off(q));
    } else if (cfg.format == "csv2d") {
        extra = detail::sibling_path(json_path, ".csv");
        write_text_file(extra, export_csv2d(q));
    } else if (cfg.format != "json") {
        throw validation_error("unknown format \"" + cfg.format + "\"");
    }
    std::cout << "built quotientope: n=" << q.n() << " classes=" << q.classes.class_count()
              << " facets=" << q.facet_normals.size() << " edges=" << q.edges.size()
              << " dimension=" << q.dimension << " orientation=" << q.orientation_sign << "\n";
    std::cout << "wrote " << json_path;
    if (!extra.empty()) std::cout << " and " << extra;
    std::cout << "\n";
    return exit_ok;
}

// enumerate: all upper ideals at this n, with quotient statistics per ideal.
inline int run_enumerate(const RunConfig& cfg) {
    if (cfg.n == 0) throw validation_error("--n is required");
    check_ground_set(cfg.n);
    std::vector<ShardIdeal> ideals = enumerate_upper_ideals(cfg.n, cfg.essential_only);
    WeightFunction f = default_weights(cfg.n);
    json list = json::array();
    for (const ShardIdeal& ideal : ideals) {
        Congruence c{ideal};
        Quotientope q = build_quotientope(c, f);
        json entry = ideal_to_json(ideal);
        entry["essential"] = ideal.is_essential();
        entry["class_count"] = q.classes.class_count();
        entry["vertex_count"] = q.classes.class_count();
        entry["facet_count"] = q.facet_normals.size();
        entry["edge_count"] = q.edges.size();
        entry["dimension"] = q.dimension;
        entry.erase("n");
        list.push_back(entry);
    }
    json doc{{"n", cfg.n},
             {"essential_only", cfg.essential_only},
             {"count", ideals.size()},
             {"congruences", list}};
    std::string path = detail::json_out_path(cfg.out.empty() ? "congruences.json" : cfg.out);
    write_text_file(path, doc.dump(2) + "\n");
    std::cerr << "enumerated " << ideals.size() << (cfg.essential_only ? " essential" : "")
              << " congruences for n=" << cfg.n << "; " << symmetry_orbit_count(ideals)
              << " orbits under mirror and side complement\n";
    std::cout << "wrote " << path << "\n";
    return exit_ok;
}

// verify: run the check suite against one congruence (or a seeded sample of
// ideals when none is named), write the report, exit 3 on any failure.
inline int run_verify(const RunConfig& cfg) {
    int sources = !cfg.preset.empty() + !cfg.ideal_path.empty() + !cfg.generators.empty();
    json report;
    bool ok = true;

    if (sources == 0) {
        if (!cfg.seed)
            throw validation_error("verify needs a congruence source, or --seed for a sampled sweep");
        if (cfg.n == 0) throw validation_error("--n is required");
        check_ground_set(cfg.n);
        std::vector<ShardIdeal> ideals =
            sample_upper_ideals(cfg.n, cfg.sample_count, *cfg.seed, cfg.essential_only);
        WeightFunction f = default_weights(cfg.n);
        json sweeps = json::array();
        for (const ShardIdeal& ideal : ideals) {
            Congruence c{ideal};
            HeightFunction h = heights(c, f);
            std::vector<CheckRecord> records =
                detail::run_checks(c, f, "default", h, cfg.verify_mode == "all");
            json one = detail::records_to_json(records);
            one["ideal"] = ideal_to_json(ideal);
            if (!one["ok"].get<bool>()) ok = false;
            sweeps.push_back(std::move(one));
        }
        report = json{{"n", cfg.n}, {"mode", cfg.verify_mode}, {"sampled", ideals.size()},
                      {"seed", *cfg.seed}, {"ok", ok}, {"sweeps", sweeps}};
        std::cout << "verified " << ideals.size() << " sampled congruences: "
                  << (ok ? "ok" : "FAILED") << "\n";
    } else {
        Congruence c = detail::resolve_congruence(cfg, /*strict_closure=*/true);
        detail::ResolvedWeights w = detail::resolve_weights(cfg, c);
        HeightFunction h;
        std::string heights_source = "computed";
        if (!cfg.heights_path.empty()) {
            h = load_heights(cfg.heights_path);
            if (h.n != cfg.n)
                throw validation_error("heights file is for n=" + std::to_string(h.n) +
                                       ", --n says " + std::to_string(cfg.n));
            heights_source = "file";
        } else {
            h = heights(c, w.f);
        }
        std::vector<CheckRecord> records =
            detail::run_checks(c, w.f, w.source, h, cfg.verify_mode == "all");
        report = detail::records_to_json(records);
        report["n"] = cfg.n;
        report["mode"] = cfg.verify_mode;
        report["heights"] = heights_source;
        ok = report["ok"].get<bool>();
        for (const CheckRecord& r : records)
            std::cout << "check " << r.name << ": " << r.status
                      << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        std::cout << (ok ? "ok" : "FAILED") << "\n";
    }

    std::string path = detail::json_out_path(cfg.out.empty() ? "verify_report.json" : cfg.out);
    write_text_file(path, report.dump(2) + "\n");
    return ok ? exit_ok : exit_verification;
}

}  // namespace qtp
