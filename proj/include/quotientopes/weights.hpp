#pragma once

#include <map>
#include <optional>
#include <string>

#include "quotientopes/errors.hpp"
#include "quotientopes/rational.hpp"
#include "quotientopes/shards.hpp"

namespace qtp {

enum class DominanceCertificate { none, global, per_ideal };

// Positive weight per shard. Heights built from a weight function are only
// meaningful when it is forcing-dominant, so the certificate earned by
// check_forcing_dominant travels with the values.
struct WeightFunction {
    int n = 0;
    std::map<Shard, Rational> values;
    DominanceCertificate certificate = DominanceCertificate::none;
    // Members of the ideal a per_ideal certificate was earned against.
    std::optional<std::vector<Shard>> certified_ideal;

    const Rational& at(const Shard& s) const {
        auto it = values.find(s);
        if (it == values.end())
            throw validation_error("no weight for shard " + format_shard(s));
        return it->second;
    }
};

struct DominanceResult {
    bool ok;
    // On failure: the shard whose weight does not dominate, its weight, and
    // the sum over the shards it strictly forces (within the ideal, if given).
    std::optional<Shard> violator;
    Rational weight;
    Rational forced_sum;
};

// Forcing-dominance: each shard's weight strictly exceeds the total weight of
// the shards it strictly forces. With `ideal` given, both the quantified shard
// and the sum range only over ideal members (the weaker per-congruence form).
// Nonpositive or missing weights are validation errors.
inline DominanceResult check_forcing_dominant(const WeightFunction& f, int n,
                                              const std::optional<ShardIdeal>& ideal = std::nullopt) {
    check_ground_set(n);
    std::vector<Shard> domain = ideal ? ideal->members() : all_shards(n);
    for (const Shard& s : domain)
        if (f.at(s) <= 0)
            throw validation_error("weight of " + format_shard(s) + " is not positive");
    for (const Shard& s : domain) {
        Rational sum = 0;
        for (const Shard& t : domain)
            if (t != s && forces(s, t)) sum += f.at(t);
        if (f.at(s) <= sum) return {false, s, f.at(s), sum};
    }
    return {true, std::nullopt, 0, 0};
}

// Runs the dominance check and stamps the certificate on success.
inline DominanceResult certify_weights(WeightFunction& f, int n,
                                       const std::optional<ShardIdeal>& ideal = std::nullopt) {
    DominanceResult r = check_forcing_dominant(f, n, ideal);
    if (r.ok) {
        f.certificate = ideal ? DominanceCertificate::per_ideal : DominanceCertificate::global;
        f.certified_ideal = ideal ? std::optional(ideal->members()) : std::nullopt;
    }
    return r;
}

// Default weights f(Sigma(i,j,S)) = n^-(j-i)^2. The decay beats the doubling
// of side sets per extra span step, so global dominance holds well past the
// sizes this library builds (asserted here for n <= 8, checked on demand).
inline WeightFunction default_weights(int n) {
    check_ground_set(n);
    WeightFunction f;
    f.n = n;
    for (const Shard& s : all_shards(n)) {
        int d = s.span();
        f.values.emplace(s, Rational(1, boost::multiprecision::pow(BigInt(n), unsigned(d * d))));
    }
    if (n <= 8) {
        DominanceResult r = certify_weights(f, n);
        if (!r.ok)
            throw verification_error("default weights lost dominance at " +
                                     format_shard(*r.violator));
    } else {
        certify_weights(f, n);
    }
    return f;
}

inline WeightFunction constant_weights(int n, const Rational& c) {
    check_ground_set(n);
    WeightFunction f;
    f.n = n;
    for (const Shard& s : all_shards(n)) f.values.emplace(s, c);
    return f;
}

}  // namespace qtp
