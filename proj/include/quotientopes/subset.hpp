#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "quotientopes/errors.hpp"

namespace qtp {

inline constexpr int kMinN = 2;
inline constexpr int kMaxN = 10;

inline void check_ground_set(int n) {
    if (n < kMinN || n > kMaxN)
        throw validation_error("ground set size " + std::to_string(n) +
                               " outside supported range [" + std::to_string(kMinN) + "," +
                               std::to_string(kMaxN) + "]");
}

// Subset of [n] = {1,...,n}, element k stored at bit k-1.
class Subset {
public:
    Subset() : n_(kMinN), bits_(0) {}

    Subset(int n, uint32_t bits) : n_(n), bits_(bits) {
        check_ground_set(n);
        if (bits >> n)
            throw validation_error("subset has elements above n=" + std::to_string(n));
    }

    static Subset of(int n, std::initializer_list<int> elems) {
        uint32_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > n) throw validation_error("subset element out of range");
            b |= (1u << (e - 1));
        }
        return Subset(n, b);
    }

    static Subset empty(int n) { return Subset(n, 0); }
    static Subset full(int n) { return Subset(n, (1u << n) - 1); }

    int n() const { return n_; }
    uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == (1u << n_) - 1; }
    bool is_proper_nonempty() const { return !is_empty() && !is_full(); }
    bool contains(int k) const { return k >= 1 && k <= n_ && (bits_ >> (k - 1)) & 1u; }

    Subset complement() const { return Subset(n_, ~bits_ & ((1u << n_) - 1)); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int k = 1; k <= n_; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    // Text form "{1,3}"; the empty set prints "{}".
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int k : elements()) {
            if (!first) s += ',';
            s += std::to_string(k);
            first = false;
        }
        return s + "}";
    }

    friend Subset operator&(Subset a, Subset b) {
        require_same_n(a, b);
        return Subset(a.n_, a.bits_ & b.bits_);
    }
    friend Subset operator|(Subset a, Subset b) {
        require_same_n(a, b);
        return Subset(a.n_, a.bits_ | b.bits_);
    }
    bool is_subset_of(const Subset& o) const {
        require_same_n(*this, o);
        return (bits_ & ~o.bits_) == 0;
    }

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset& a, const Subset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    static void require_same_n(const Subset& a, const Subset& b) {
        if (a.n_ != b.n_) throw validation_error("subset ground sets differ");
    }
    int n_;
    uint32_t bits_;
};

// Bitmask of the open interval ]i,j[ = {i+1,...,j-1}.
inline uint32_t interval_interior_bits(int i, int j) {
    if (j - i <= 1) return 0;
    uint32_t lo = (1u << (j - 1)) - 1;   // {1..j-1}
    uint32_t hi = (1u << i) - 1;         // {1..i}
    return lo & ~hi;
}

inline Subset parse_subset(const std::string& text, int n) {
    check_ground_set(n);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw validation_error("subset text must look like \"{1,3}\": " + text);
    uint32_t bits = 0;
    std::string body = text.substr(1, text.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw validation_error("bad subset element \"" + tok + "\"");
        }
        if (used != tok.size() || v < 1 || v > n)
            throw validation_error("bad subset element \"" + tok + "\" for n=" + std::to_string(n));
        bits |= (1u << (v - 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == body.size()) throw validation_error("trailing comma in subset text");
    }
    return Subset(n, bits);
}

}  // namespace qtp
