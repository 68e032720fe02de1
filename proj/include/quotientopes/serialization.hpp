#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quotientopes/congruence.hpp"
#include "quotientopes/errors.hpp"
#include "quotientopes/quotientope.hpp"
#include "quotientopes/weights.hpp"

namespace qtp {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw validation_error("bad JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << text;
}

// ---- ideal files: {"n": int, "shards": [{"i": int, "j": int, "above": [..]}]} ----

inline json ideal_to_json(const ShardIdeal& ideal) {
    json shards = json::array();
    for (const Shard& s : ideal.members()) {
        json above = json::array();
        for (int k = s.i + 1; k < s.j; ++k)
            if ((s.s_bits >> (k - 1)) & 1u) above.push_back(k);
        shards.push_back({{"i", s.i}, {"j", s.j}, {"above", above}});
    }
    return json{{"n", ideal.n()}, {"shards", shards}};
}

struct LoadedIdeal {
    ShardIdeal ideal;
    bool was_closed;
    // When the input was not closed: a missing forcer and the input member it forces.
    std::optional<std::pair<Shard, Shard>> closure_witness;
};

inline LoadedIdeal ideal_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("shards") ||
        !doc["shards"].is_array())
        throw validation_error("ideal document needs fields n and shards");
    int n = 0;
    try {
        n = doc["n"].get<int>();
    } catch (const std::exception&) {
        throw validation_error("ideal field n must be an integer");
    }
    check_ground_set(n);
    std::vector<Shard> input;
    for (const json& e : doc["shards"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("above") ||
            !e["above"].is_array())
            throw validation_error("each shard needs fields i, j, above");
        int i, j;
        uint32_t bits = 0;
        try {
            i = e["i"].get<int>();
            j = e["j"].get<int>();
            for (const json& v : e["above"]) {
                int k = v.get<int>();
                if (k <= i || k >= j) throw validation_error("");
                bits |= (1u << (k - 1));
            }
        } catch (const std::exception&) {
            throw validation_error("bad shard entry " + e.dump());
        }
        if (i < 1 || j > n || i >= j) throw validation_error("bad shard interval " + e.dump());
        input.emplace_back(i, j, bits);
    }
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    ShardIdeal closed = upward_closure(input, n);
    if (closed.size() == input.size()) return {closed, true, std::nullopt};
    std::optional<std::pair<Shard, Shard>> witness;
    for (const Shard& a : closed.members()) {
        if (std::binary_search(input.begin(), input.end(), a)) continue;
        for (const Shard& g : input)
            if (forces(a, g)) { witness = std::make_pair(a, g); break; }
        if (witness) break;
    }
    return {closed, false, witness};
}

inline LoadedIdeal load_ideal(const std::string& path) { return ideal_from_json(read_json_file(path)); }

// ---- partition files: {"n": int, "classes": [["123","132"], ...]} ----

inline json partition_to_json(const ClassPartition& part) {
    json classes = json::array();
    for (const std::vector<Permutation>& cls : part.classes) {
        json members = json::array();
        for (const Permutation& p : cls) members.push_back(p.to_string());
        classes.push_back(members);
    }
    return json{{"n", part.n}, {"classes", classes}};
}

// ---- weights files: {"n": int, "weights": {"1-3:[2]": "1/81", ...}} ----

inline WeightFunction weights_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("weights") ||
        !doc["weights"].is_object())
        throw validation_error("weights document needs fields n and weights");
    WeightFunction f;
    try {
        f.n = doc["n"].get<int>();
    } catch (const std::exception&) {
        throw validation_error("weights field n must be an integer");
    }
    check_ground_set(f.n);
    for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it) {
        Shard s = parse_shard(it.key());
        if (s.j > f.n) throw validation_error("weight shard " + it.key() + " exceeds n");
        if (!it.value().is_string()) throw validation_error("weight of " + it.key() + " must be a string rational");
        f.values.emplace(s, parse_rational(it.value().get<std::string>()));
    }
    return f;
}

inline json weights_to_json(const WeightFunction& f) {
    json w = json::object();
    for (const auto& [s, v] : f.values) w[format_shard(s)] = format_rational(v);
    return json{{"n", f.n}, {"weights", w}};
}

inline WeightFunction load_weights(const std::string& path) {
    return weights_from_json(read_json_file(path));
}

// ---- heights files: {"n": int, "heights": {"{1}": "1/3", ...}} ----

inline HeightFunction heights_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("heights") ||
        !doc["heights"].is_object())
        throw validation_error("heights document needs fields n and heights");
    HeightFunction h;
    try {
        h.n = doc["n"].get<int>();
    } catch (const std::exception&) {
        throw validation_error("heights field n must be an integer");
    }
    check_ground_set(h.n);
    h.by_bits.assign(size_t{1} << h.n, Rational(0));
    std::vector<bool> given(size_t{1} << h.n, false);
    for (auto it = doc["heights"].begin(); it != doc["heights"].end(); ++it) {
        Subset R = parse_subset(it.key(), h.n);
        if (!R.is_proper_nonempty())
            throw validation_error("heights are given on proper nonempty subsets only");
        if (!it.value().is_string()) throw validation_error("height of " + it.key() + " must be a string rational");
        h.by_bits[R.bits()] = parse_rational(it.value().get<std::string>());
        given[R.bits()] = true;
    }
    for (uint32_t bits = 1; bits + 1 < (1u << h.n); ++bits)
        if (!given[bits])
            throw validation_error("height missing for " + Subset(h.n, bits).to_string());
    return h;
}

inline json heights_to_json(const HeightFunction& h) {
    json m = json::object();
    for (uint32_t bits = 1; bits + 1 < (1u << h.n); ++bits)
        m[Subset(h.n, bits).to_string()] = format_rational(h.by_bits[bits]);
    return json{{"n", h.n}, {"heights", m}};
}

inline HeightFunction load_heights(const std::string& path) {
    return heights_from_json(read_json_file(path));
}

// ---- quotientope documents ----

struct QuotientopeDocument {
    int n = 0;
    int dimension = 0;
    std::map<std::string, std::vector<std::string>> vertices;  // representative -> coordinates
    std::vector<std::string> facets;
    std::vector<std::pair<std::string, std::string>> edges;  // (lower rep, upper rep)
    std::string orientation_sign;
    std::string weights;  // "default" or "file"

    friend bool operator==(const QuotientopeDocument&, const QuotientopeDocument&) = default;
};

inline QuotientopeDocument document_from_quotientope(const Quotientope& q,
                                                     const std::string& weights_source) {
    QuotientopeDocument doc;
    doc.n = q.n();
    doc.dimension = q.dimension;
    for (int X = 0; X < q.classes.class_count(); ++X) {
        std::vector<std::string> coords;
        for (const Rational& c : q.vertices[X]) coords.push_back(format_rational(c));
        doc.vertices.emplace(q.classes.representatives[X].to_string(), std::move(coords));
    }
    for (const Subset& R : q.facet_normals) doc.facets.push_back(R.to_string());
    for (const auto& [X, Y] : q.edges)
        doc.edges.emplace_back(q.classes.representatives[X].to_string(),
                               q.classes.representatives[Y].to_string());
    doc.orientation_sign = std::string(1, q.orientation_sign);
    doc.weights = weights_source;
    return doc;
}

inline json quotientope_to_json(const QuotientopeDocument& doc) {
    json vertices = json::object();
    for (const auto& [rep, coords] : doc.vertices) vertices[rep] = coords;
    json edges = json::array();
    for (const auto& [a, b] : doc.edges) edges.push_back(json::array({a, b}));
    return json{{"n", doc.n},
                {"dimension", doc.dimension},
                {"vertices", vertices},
                {"facets", doc.facets},
                {"edges", edges},
                {"orientation_sign", doc.orientation_sign},
                {"weights", doc.weights}};
}

inline QuotientopeDocument quotientope_from_json(const json& j) {
    QuotientopeDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        doc.dimension = j.at("dimension").get<int>();
        for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it)
            doc.vertices.emplace(it.key(), it.value().get<std::vector<std::string>>());
        doc.facets = j.at("facets").get<std::vector<std::string>>();
        for (const json& e : j.at("edges"))
            doc.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        doc.orientation_sign = j.at("orientation_sign").get<std::string>();
        doc.weights = j.at("weights").get<std::string>();
    } catch (const std::exception& e) {
        throw validation_error(std::string("bad quotientope document: ") + e.what());
    }
    return doc;
}

// ---- geometric exports ----

namespace detail {

using Vec3 = std::array<Rational, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rational dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Coordinates of v against the sum-zero basis rows (1,-1,0,0), (1,1,-2,0),
// (1,1,1,-3), truncated to the first n entries for n = 3.
inline Vec3 project_exact(const RationalVector& v) {
    static const int rows[3][4] = {{1, -1, 0, 0}, {1, 1, -2, 0}, {1, 1, 1, -3}};
    Vec3 y{Rational(0), Rational(0), Rational(0)};
    for (int r = 0; r < 3; ++r)
        for (size_t c = 0; c < v.size() && c < 4; ++c) y[r] += Rational(rows[r][c]) * v[c];
    return y;
}

inline std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
}

}  // namespace detail

// Cyclic vertex order of every facet, counterclockwise around the outward
// normal. All comparisons are exact: points and normals are projected with
// integer basis rows, the angular sort uses the half-plane/cross-product
// comparator, and the cycle is flipped when the triple product against the
// outward normal comes out negative.
inline std::vector<std::vector<int>> off_face_cycles(const Quotientope& q) {
    if (q.n() != 4 || q.dimension != 3)
        throw validation_error("OFF export needs n = 4 and a 3-dimensional polytope");
    std::vector<detail::Vec3> pts;
    for (const RationalVector& v : q.vertices) pts.push_back(detail::project_exact(v));

    std::vector<std::vector<int>> cycles;
    for (const Subset& R : q.facet_normals) {
        std::vector<int> ids;
        for (int X = 0; X < q.classes.class_count(); ++X)
            if (std::binary_search(q.tight_sets[X].begin(), q.tight_sets[X].end(), R))
                ids.push_back(X);
        RayVector r = ray_vector(R);
        detail::Vec3 normal = detail::project_exact(to_rational(r));

        detail::Vec3 centroid{Rational(0), Rational(0), Rational(0)};
        for (int id : ids)
            for (int c = 0; c < 3; ++c) centroid[c] += pts[id][c];
        for (int c = 0; c < 3; ++c) centroid[c] /= int(ids.size());

        // In-plane axes: u from the centroid to the first vertex, w its
        // rotation inside the plane (normal x u is transverse-free since the
        // Euclidean plane normal and the outward normal agree in sign).
        detail::Vec3 u, w;
        for (int c = 0; c < 3; ++c) u[c] = pts[ids[0]][c] - centroid[c];
        // Euclidean normal of the face plane from two independent in-plane vectors.
        detail::Vec3 plane_normal{Rational(0), Rational(0), Rational(0)};
        for (size_t k = 1; k < ids.size(); ++k) {
            detail::Vec3 d;
            for (int c = 0; c < 3; ++c) d[c] = pts[ids[k]][c] - centroid[c];
            plane_normal = detail::cross(u, d);
            if (plane_normal != detail::Vec3{Rational(0), Rational(0), Rational(0)}) break;
        }
        w = detail::cross(plane_normal, u);

        struct Ang {
            int id;
            Rational a, b;
        };
        std::vector<Ang> ang;
        for (int id : ids) {
            detail::Vec3 d;
            for (int c = 0; c < 3; ++c) d[c] = pts[id][c] - centroid[c];
            ang.push_back({id, detail::dot3(d, u), detail::dot3(d, w)});
        }
        std::sort(ang.begin(), ang.end(), [](const Ang& p, const Ang& q) {
            auto half = [](const Ang& x) { return (x.b < 0 || (x.b == 0 && x.a < 0)) ? 1 : 0; };
            if (half(p) != half(q)) return half(p) < half(q);
            return p.a * q.b - p.b * q.a > 0;
        });
        std::vector<int> cycle;
        for (const Ang& x : ang) cycle.push_back(x.id);

        // Orient counterclockwise around the outward normal.
        detail::Vec3 e1, e2;
        for (int c = 0; c < 3; ++c) {
            e1[c] = pts[cycle[1]][c] - pts[cycle[0]][c];
            e2[c] = pts[cycle[2]][c] - pts[cycle[0]][c];
        }
        if (detail::dot3(normal, detail::cross(e1, e2)) < 0)
            std::reverse(cycle.begin() + 1, cycle.end());
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// OFF text for n = 4 builds: orthonormal projection of the sum-zero
// hyperplane, 12 significant digits, faces in exact cyclic order.
inline std::string export_off(const Quotientope& q) {
    std::vector<std::vector<int>> cycles = off_face_cycles(q);
    std::ostringstream out;
    out << "OFF\n";
    out << q.classes.class_count() << " " << cycles.size() << " " << q.edges.size() << "\n";
    const double scale[3] = {1.4142135623730951, 2.449489742783178, 3.4641016151377544};
    for (const RationalVector& v : q.vertices) {
        detail::Vec3 y = detail::project_exact(v);
        for (int c = 0; c < 3; ++c) {
            if (c) out << " ";
            out << detail::decimal12(y[c].convert_to<double>() / scale[c]);
        }
        out << "\n";
    }
    for (const std::vector<int>& cycle : cycles) {
        out << cycle.size();
        for (int id : cycle) out << " " << id;
        out << "\n";
    }
    return out.str();
}

// Planar coordinates for n = 3 builds: rows (1,-1,0)/sqrt(2), (1,1,-2)/sqrt(6).
inline std::string export_csv2d(const Quotientope& q) {
    if (q.n() != 3) throw validation_error("csv2d export needs n = 3");
    std::ostringstream out;
    out << "class,x,y\n";
    for (int X = 0; X < q.classes.class_count(); ++X) {
        detail::Vec3 y = detail::project_exact(q.vertices[X]);
        out << q.classes.representatives[X].to_string() << ","
            << detail::decimal12(y[0].convert_to<double>() / 1.4142135623730951) << ","
            << detail::decimal12(y[1].convert_to<double>() / 2.449489742783178) << "\n";
    }
    return out.str();
}

}  // namespace qtp
