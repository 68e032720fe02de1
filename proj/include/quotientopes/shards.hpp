#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quotientopes/errors.hpp"
#include "quotientopes/subset.hpp"

namespace qtp {

// Shard with interval endpoints 1 <= i < j and side selector S, a subset of
// the open interval ]i,j[. S lists the values strictly between i and j that
// sit on the same side as j; the ambient n is carried by context.
struct Shard {
    int i;
    int j;
    uint32_t s_bits;

    Shard(int i, int j, uint32_t s_bits) : i(i), j(j), s_bits(s_bits) {
        if (!(1 <= i && i < j && j <= kMaxN))
            throw validation_error("shard interval (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") invalid");
        if (s_bits & ~interval_interior_bits(i, j))
            throw validation_error("shard side set leaves the open interval");
    }

    int span() const { return j - i; }
    bool is_basic() const { return j == i + 1; }
    uint32_t interior_bits() const { return interval_interior_bits(i, j); }

    friend bool operator==(const Shard&, const Shard&) = default;
    // Canonical order: by (i, j, S as integer).
    friend auto operator<=>(const Shard& a, const Shard& b) {
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.s_bits <=> b.s_bits;
    }
};

// Text form "i-j:[s1,s2,...]", e.g. "1-3:[2]", "2-4:[]".
inline std::string format_shard(const Shard& s) {
    std::string out = std::to_string(s.i) + "-" + std::to_string(s.j) + ":[";
    bool first = true;
    for (int k = s.i + 1; k < s.j; ++k) {
        if ((s.s_bits >> (k - 1)) & 1u) {
            if (!first) out += ',';
            out += std::to_string(k);
            first = false;
        }
    }
    return out + "]";
}

inline Shard parse_shard(const std::string& text) {
    size_t dash = text.find('-');
    size_t colon = text.find(':', dash == std::string::npos ? 0 : dash);
    if (dash == std::string::npos || colon == std::string::npos || colon + 1 >= text.size() ||
        text[colon + 1] != '[' || text.back() != ']')
        throw validation_error("shard text must look like \"1-3:[2]\": " + text);
    auto parse_int = [&](const std::string& tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw validation_error("bad number in shard text \"" + text + "\"");
        }
        if (used != tok.size()) throw validation_error("bad number in shard text \"" + text + "\"");
        return v;
    };
    int i = parse_int(text.substr(0, dash));
    int j = parse_int(text.substr(dash + 1, colon - dash - 1));
    std::string body = text.substr(colon + 2, text.size() - colon - 3);
    uint32_t bits = 0;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        int v = parse_int(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (v <= i || v >= j) throw validation_error("shard side element outside open interval: " + text);
        bits |= (1u << (v - 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (i < 1 || j > kMaxN || i >= j) throw validation_error("shard interval out of range: " + text);
    return Shard(i, j, bits);
}

// Every shard over [n], in canonical order. Count is sum over i<j of 2^(j-i-1).
inline std::vector<Shard> all_shards(int n) {
    check_ground_set(n);
    std::vector<Shard> out;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            uint32_t interior = interval_interior_bits(i, j);
            // Iterate the subsets of `interior` in increasing integer order.
            uint32_t s = 0;
            while (true) {
                out.emplace_back(i, j, s);
                if (s == interior) break;
                s = (s - interior) & interior;
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// a forces b when a's interval nests in b's and b's side set restricted to
// a's open interval is exactly a's side set. Reflexive by design.
inline bool forces(const Shard& a, const Shard& b) {
    return b.i <= a.i && a.j <= b.j && a.s_bits == (b.s_bits & a.interior_bits());
}

struct UpperIdealCheck {
    bool ok;
    // On failure: (missing forcer, the member it forces).
    std::optional<std::pair<Shard, Shard>> witness;
};

inline UpperIdealCheck check_upper_ideal(const std::vector<Shard>& members, int n) {
    std::set<Shard> have(members.begin(), members.end());
    for (const Shard& b : members) {
        if (b.j > n) throw validation_error("shard " + format_shard(b) + " exceeds n=" + std::to_string(n));
        for (const Shard& a : all_shards(n))
            if (forces(a, b) && !have.count(a)) return {false, std::make_pair(a, b)};
    }
    return {true, std::nullopt};
}

inline bool is_upper_ideal(const std::vector<Shard>& members, int n) {
    return check_upper_ideal(members, n).ok;
}

// Upper ideal of the forcing order: closed under passing to forcers.
// Construction validates closure; build from generators via upward_closure.
class ShardIdeal {
public:
    ShardIdeal(int n, std::vector<Shard> members) : n_(n), members_(std::move(members)) {
        check_ground_set(n);
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        UpperIdealCheck chk = check_upper_ideal(members_, n_);
        if (!chk.ok)
            throw validation_error("not an upper ideal: " + format_shard(chk.witness->first) +
                                   " forces member " + format_shard(chk.witness->second) +
                                   " but is missing");
    }

    int n() const { return n_; }
    const std::vector<Shard>& members() const { return members_; }
    size_t size() const { return members_.size(); }

    bool contains(const Shard& s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    // Essential: every basic shard is a member.
    bool is_essential() const {
        for (int i = 1; i < n_; ++i)
            if (!contains(Shard(i, i + 1, 0))) return false;
        return true;
    }

    friend bool operator==(const ShardIdeal&, const ShardIdeal&) = default;
    friend auto operator<=>(const ShardIdeal& a, const ShardIdeal& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.members_ <=> b.members_;
    }

private:
    int n_;
    std::vector<Shard> members_;
};

// Smallest upper ideal containing the generators. Forcing is transitive, so
// one pass collecting every forcer of a generator suffices.
inline ShardIdeal upward_closure(const std::vector<Shard>& generators, int n) {
    std::set<Shard> out(generators.begin(), generators.end());
    for (const Shard& g : generators) {
        if (g.j > n) throw validation_error("generator " + format_shard(g) + " exceeds n=" + std::to_string(n));
        for (const Shard& a : all_shards(n))
            if (forces(a, g)) out.insert(a);
    }
    return ShardIdeal(n, std::vector<Shard>(out.begin(), out.end()));
}

// All upper ideals of the forcing order, by inclusion/exclusion over shards
// sorted with forcers first: a shard may be taken IN only if all shards that
// force it are IN, which prunes inconsistent branches immediately.
// essential_only pins every basic shard IN. Output is sorted by
// (cardinality, canonical member list). n <= 4.
inline std::vector<ShardIdeal> enumerate_upper_ideals(int n, bool essential_only) {
    check_ground_set(n);
    if (n > 4) throw scale_guard_error("upper ideal enumeration supports n <= 4");
    std::vector<Shard> shards = all_shards(n);
    std::stable_sort(shards.begin(), shards.end(),
                     [](const Shard& a, const Shard& b) { return a.span() < b.span(); });
    const int m = static_cast<int>(shards.size());
    std::vector<std::vector<int>> forcers(m);
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < b; ++a)
            if (forces(shards[a], shards[b])) forcers[b].push_back(a);

    std::vector<ShardIdeal> out;
    std::vector<char> in(m, 0);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == m) {
            std::vector<Shard> members;
            for (int k = 0; k < m; ++k)
                if (in[k]) members.push_back(shards[k]);
            out.emplace_back(n, std::move(members));
            return;
        }
        bool can_take = true;
        for (int f : forcers[p])
            if (!in[f]) { can_take = false; break; }
        if (can_take) {
            in[p] = 1;
            self(self, p + 1);
            in[p] = 0;
        }
        if (!(essential_only && shards[p].is_basic())) self(self, p + 1);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const ShardIdeal& a, const ShardIdeal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

// Seeded sample of distinct upper ideals: random generator sets, closed
// upward. Used where full enumeration is refused (n = 5).
inline std::vector<ShardIdeal> sample_upper_ideals(int n, int count, uint64_t seed,
                                                   bool essential_only) {
    check_ground_set(n);
    if (n > 5) throw scale_guard_error("upper ideal sampling supports n <= 5");
    if (count < 1) throw validation_error("sample count must be positive");
    std::vector<Shard> shards = all_shards(n);
    std::vector<Shard> basics;
    for (int i = 1; i < n; ++i) basics.emplace_back(i, i + 1, 0);
    std::mt19937_64 rng(seed);
    std::set<ShardIdeal> seen;
    int tries = 0, max_tries = 400 * count;
    while (static_cast<int>(seen.size()) < count && tries++ < max_tries) {
        std::vector<Shard> gens = essential_only ? basics : std::vector<Shard>{};
        for (const Shard& s : shards)
            if (rng() & 1u) gens.push_back(s);
        seen.insert(upward_closure(gens, n));
    }
    return std::vector<ShardIdeal>(seen.begin(), seen.end());
}

// Mirror symmetry k -> n+1-k: reverses the interval and mirrors the side set.
inline Shard mirror_shard(const Shard& s, int n) {
    if (s.j > n) throw validation_error("shard exceeds n");
    uint32_t bits = 0;
    for (int k = s.i + 1; k < s.j; ++k)
        if ((s.s_bits >> (k - 1)) & 1u) bits |= (1u << (n - k));
    return Shard(n + 1 - s.j, n + 1 - s.i, bits);
}

// Side complement: exchanges the roles of the two sides of the shard.
inline Shard side_complement_shard(const Shard& s) {
    return Shard(s.i, s.j, s.interior_bits() & ~s.s_bits);
}

inline ShardIdeal map_ideal(const ShardIdeal& ideal, auto&& f) {
    std::vector<Shard> out;
    out.reserve(ideal.size());
    for (const Shard& s : ideal.members()) out.push_back(f(s));
    return ShardIdeal(ideal.n(), std::move(out));
}

// Orbits under the Klein four-group generated by mirror and side complement,
// both of which are automorphisms of the forcing order.
inline int symmetry_orbit_count(const std::vector<ShardIdeal>& ideals) {
    std::set<ShardIdeal> canon;
    for (const ShardIdeal& I : ideals) {
        int n = I.n();
        ShardIdeal h = map_ideal(I, [n](const Shard& s) { return mirror_shard(s, n); });
        ShardIdeal v = map_ideal(I, side_complement_shard);
        ShardIdeal hv = map_ideal(h, side_complement_shard);
        canon.insert(std::min({I, h, v, hv}));
    }
    return static_cast<int>(canon.size());
}

}  // namespace qtp
