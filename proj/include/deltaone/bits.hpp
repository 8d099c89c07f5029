// bits.hpp: subsets of a fixed ground set {0,...,n-1} as packed 64-bit words.
// All ideals, antichains and order rows in this project are Bits values; the
// width is fixed at construction and two-operand functions require equal widths.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltaone {

class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bits: negative width");
    }

    static Bits full(int nbits) {
        Bits b(nbits);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    int width() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

    Bits operator~() const {
        Bits r(*this);
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    // First set index >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t k = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(k << 6) + std::countr_zero(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    // Numeric order: element i carries weight 2^i.
    static bool value_less(const Bits& a, const Bits& b) {
        for (std::size_t k = a.w_.size(); k-- > 0;)
            if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
        return false;
    }
    // Canonical ideal order: cardinality first, then numeric value.
    static bool canonical_less(const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return value_less(a, b);
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(nbits_) * 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        for (int i = next(0); i >= 0; i = next(i + 1)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(i);
        }
        return s + "}";
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace deltaone
