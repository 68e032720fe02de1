#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "quotientopes/errors.hpp"
#include "quotientopes/subset.hpp"

namespace qtp {

// Permutation of [n] as a one-line word; positions and values are 1-indexed
// in every public signature.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        check_ground_set(static_cast<int>(word_.size()));
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
                throw validation_error("not a permutation word");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    // The longest element n, n-1, ..., 1.
    static Permutation longest(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    int n() const { return static_cast<int>(word_.size()); }
    int value_at(int pos) const { return word_[pos - 1]; }
    const std::vector<int>& word() const { return word_; }

    // New permutation with positions pos, pos+1 exchanged.
    Permutation adjacent_swap(int pos) const {
        if (pos < 1 || pos >= n()) throw validation_error("swap position out of range");
        std::vector<int> w = word_;
        std::swap(w[pos - 1], w[pos]);
        return Permutation(std::move(w));
    }

    // Values in the first k positions; k = 0 gives the empty set.
    Subset prefix_set(int k) const {
        if (k < 0 || k > n()) throw validation_error("prefix length out of range");
        uint32_t bits = 0;
        for (int p = 0; p < k; ++p) bits |= (1u << (word_[p] - 1));
        return Subset(n(), bits);
    }

    // "4132" for n <= 9, comma-separated "10,1,..." for n = 10.
    std::string to_string() const {
        std::string s;
        for (int p = 0; p < n(); ++p) {
            if (n() > 9 && p > 0) s += ',';
            s += std::to_string(word_[p]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

inline Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw validation_error("empty permutation text");
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw validation_error("bad permutation entry \"" + tok + "\"");
            }
            if (used != tok.size()) throw validation_error("bad permutation entry \"" + tok + "\"");
            w.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw validation_error("bad permutation digit in \"" + text + "\"");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

// Inversions as value pairs (b,a) with b > a and b appearing before a.
// Pair (b,a) sits at bit (b-1)(b-2)/2 + (a-1); n <= 10 needs 45 bits.
class InversionSet {
public:
    explicit InversionSet(int n, uint64_t bits = 0) : n_(n), bits_(bits) { check_ground_set(n); }

    static int pair_index(int b, int a) { return (b - 1) * (b - 2) / 2 + (a - 1); }

    int n() const { return n_; }
    uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }

    bool contains(int b, int a) const {
        require_pair(b, a);
        return (bits_ >> pair_index(b, a)) & 1u;
    }

    void insert(int b, int a) {
        require_pair(b, a);
        bits_ |= (uint64_t{1} << pair_index(b, a));
    }

    bool is_subset_of(const InversionSet& o) const {
        if (n_ != o.n_) throw validation_error("inversion sets over different n");
        return (bits_ & ~o.bits_) == 0;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int b = 2; b <= n_; ++b)
            for (int a = 1; a < b; ++a)
                if ((bits_ >> pair_index(b, a)) & 1u) out.emplace_back(b, a);
        return out;
    }

    friend bool operator==(const InversionSet&, const InversionSet&) = default;

private:
    void require_pair(int b, int a) const {
        if (!(1 <= a && a < b && b <= n_)) throw validation_error("inversion pair out of range");
    }
    int n_;
    uint64_t bits_;
};

inline InversionSet inversion_set(const Permutation& p) {
    InversionSet inv(p.n());
    for (int i = 1; i < p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p.value_at(i) > p.value_at(j)) inv.insert(p.value_at(i), p.value_at(j));
    return inv;
}

// Weak order: containment of inversion sets.
inline bool weak_leq(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw validation_error("permutations over different n");
    return inversion_set(a).is_subset_of(inversion_set(b));
}

// Upper covers: one adjacent swap at each ascent.
inline std::vector<Permutation> covers(const Permutation& p) {
    std::vector<Permutation> out;
    for (int pos = 1; pos < p.n(); ++pos)
        if (p.value_at(pos) < p.value_at(pos + 1)) out.push_back(p.adjacent_swap(pos));
    return out;
}

inline int64_t factorial(int n) {
    int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// All of S_n in lexicographic order of the one-line word.
inline std::vector<Permutation> all_permutations(int n) {
    check_ground_set(n);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(factorial(n)));
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Lexicographic rank in [0, n!), via the Lehmer code.
inline int64_t perm_rank(const Permutation& p) {
    int n = p.n();
    int64_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j <= n; ++j)
            if (p.value_at(j) < p.value_at(i)) ++smaller_later;
        rank += smaller_later * factorial(n - i);
    }
    return rank;
}

struct MeetJoin {
    Permutation meet;
    Permutation join;
};

// Meet and join in the weak order lattice by direct search over S_n (n <= 6):
// the meet is the unique inversion-maximal lower bound, the join the unique
// inversion-minimal upper bound; dominance over every other bound is asserted.
inline MeetJoin lattice_meet_join_oracle(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw validation_error("permutations over different n");
    int n = a.n();
    if (n > 6) throw scale_guard_error("meet/join oracle supports n <= 6");

    const InversionSet ia = inversion_set(a), ib = inversion_set(b);
    std::vector<Permutation> lower, upper;
    for (const Permutation& q : all_permutations(n)) {
        InversionSet iq = inversion_set(q);
        if (iq.is_subset_of(ia) && iq.is_subset_of(ib)) lower.push_back(q);
        if (ia.is_subset_of(iq) && ib.is_subset_of(iq)) upper.push_back(q);
    }
    auto by_inv_count = [](const Permutation& x, const Permutation& y) {
        return inversion_set(x).size() < inversion_set(y).size();
    };
    const Permutation meet = *std::max_element(lower.begin(), lower.end(), by_inv_count);
    const Permutation join = *std::min_element(upper.begin(), upper.end(), by_inv_count);
    for (const Permutation& q : lower)
        if (!weak_leq(q, meet)) throw verification_error("meet not dominant over lower bound " + q.to_string());
    for (const Permutation& q : upper)
        if (!weak_leq(join, q)) throw verification_error("join not below upper bound " + q.to_string());
    return {meet, join};
}

}  // namespace qtp
