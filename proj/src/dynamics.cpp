#include "deltaone/dynamics.hpp"

#include <algorithm>
#include <unordered_set>

namespace deltaone {

std::vector<int> Orbit::cardinality_cycle() const {
    std::vector<int> out;
    out.reserve(ideals.size());
    for (const Bits& b : ideals) out.push_back(b.count());
    return out;
}

std::vector<int> Orbit::cardinalities() const {
    std::vector<int> out = cardinality_cycle();
    std::sort(out.begin(), out.end());
    return out;
}

Orbit orbit_of(const FinitePoset& p, const Bits& ideal, long long cap) {
    Orbit o;
    o.poset = &p;
    o.ideals.push_back(ideal);
    Bits cur = reverse_operator(p, ideal);
    while (!(cur == o.ideals.front())) {
        if (static_cast<long long>(o.ideals.size()) >= cap)
            throw CapExceeded("orbit iteration exceeded cap of " + std::to_string(cap) +
                              " without closing; reverse operator is not behaving as a bijection");
        o.ideals.push_back(cur);
        cur = reverse_operator(p, cur);
    }
    auto rep = std::min_element(o.ideals.begin(), o.ideals.end(), Bits::value_less);
    std::rotate(o.ideals.begin(), rep, o.ideals.end());
    return o;
}

std::vector<Orbit> orbit_decomposition(const FinitePoset& p, long long cap) {
    std::vector<Bits> ideals = enumerate_lower_ideals(p, cap);
    std::unordered_set<Bits, BitsHash> seen;
    std::vector<Orbit> orbits;
    long long total = 0;
    for (const Bits& ideal : ideals) {
        if (seen.count(ideal)) continue;
        Orbit o = orbit_of(p, ideal, static_cast<long long>(ideals.size()) + 1);
        for (const Bits& member : o.ideals)
            if (!seen.insert(member).second)
                throw std::logic_error("orbit decomposition revisited an ideal");
        total += o.size();
        orbits.push_back(std::move(o));
    }
    if (total != static_cast<long long>(ideals.size()))
        throw std::logic_error("orbit sizes do not partition J(P)");
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        return Bits::value_less(a.representative(), b.representative());
    });
    return orbits;
}

int lagrangian_count(const Orbit& o, int target) {
    int c = 0;
    for (const Bits& b : o.ideals)
        if (b.count() == target) ++c;
    return c;
}

namespace {

bool same_poset(const FinitePoset& a, const FinitePoset& b) {
    return &a == &b || (a.labels() == b.labels() && a.covers() == b.covers());
}

// Rank-level ideals of a graded poset, indexed by level; cardinalities are
// strictly increasing, so a slice can be matched by its size.
std::vector<Bits> level_ideals(const FinitePoset& base) {
    if (!base.graded())
        throw std::invalid_argument("base poset of the product is not graded");
    std::vector<Bits> out;
    out.reserve(static_cast<std::size_t>(base.levels()) + 1);
    for (int i = 0; i <= base.levels(); ++i) out.push_back(base.rank_level_ideal(i));
    return out;
}

std::optional<int> match_level(const std::vector<Bits>& levels, const Bits& slice) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].count() == slice.count())
            return levels[i] == slice ? std::optional<int>(static_cast<int>(i)) : std::nullopt;
        if (levels[i].count() > slice.count()) break;
    }
    return std::nullopt;
}

}  // namespace

OrbitType classify_orbit(const ChainProduct& cp, const Orbit& o) {
    if (o.poset == nullptr || !same_poset(*o.poset, cp.poset))
        throw std::invalid_argument("classify_orbit: orbit poset does not match the product");
    const std::vector<Bits> levels = level_ideals(cp.base);
    int full = 0;
    for (const Bits& ideal : o.ideals) {
        bool ok = true;
        for (int i = 1; i <= cp.m && ok; ++i)
            if (!match_level(levels, cp.slice(ideal, i))) ok = false;
        if (ok) ++full;
    }
    if (full != 0 && full != o.size())
        throw std::logic_error("classify_orbit: orbit mixes full-rank and non-full-rank ideals");
    return full == o.size() ? OrbitType::type_one : OrbitType::type_two;
}

int RankSignature::total() const {
    int t = 0;
    for (const SigBlock& b : blocks) t += b.count;
    return t;
}

std::string RankSignature::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ", ";
        const SigBlock& b = blocks[i];
        if (b.kind == SigBlock::Kind::level)
            s += "L" + std::to_string(b.level);
        else
            s += std::string("I") + (b.primed ? "'" : "");
        if (b.count != 1) s += "^" + std::to_string(b.count);
    }
    return s + ")";
}

namespace {

void require_valid_product_signature(const RankSignature& sig, int d, int m) {
    if (m < 1) throw std::invalid_argument("signature: m must be >= 1");
    if (d < 0) throw std::invalid_argument("signature: d must be >= 0");
    if (sig.total() != m)
        throw std::invalid_argument("signature: exponents sum to " + std::to_string(sig.total()) +
                                    ", expected m = " + std::to_string(m));
    int prev = d + 1;
    for (const SigBlock& b : sig.blocks) {
        if (b.kind != SigBlock::Kind::level)
            throw std::invalid_argument("signature: I-blocks are not valid on [m] x P");
        if (b.count < 1) throw std::invalid_argument("signature: exponents must be positive");
        if (b.level < 0 || b.level > d)
            throw std::invalid_argument("signature: level " + std::to_string(b.level) +
                                        " outside [0," + std::to_string(d) + "]");
        if (b.level >= prev)
            throw std::invalid_argument("signature: levels must be strictly decreasing");
        prev = b.level;
    }
}

struct KParts {
    int head = 0;                                 // n0, multiplicity of L_{2n-1}
    std::vector<std::pair<int, int>> upper;       // (i_k, n_k), n <= i <= 2n-2
    bool primed = false;                          // the I-block flavor
    int mid = 0;                                  // m0 >= 1
    std::vector<std::pair<int, int>> lower;       // (j_k, m_k), 0 <= j <= n-1
};

KParts parse_k_signature(const RankSignature& sig, int n, int m) {
    if (n < 2) throw std::invalid_argument("signature: K-poset requires n >= 2");
    if (m < 1) throw std::invalid_argument("signature: m must be >= 1");
    if (sig.total() != m)
        throw std::invalid_argument("signature: exponents sum to " + std::to_string(sig.total()) +
                                    ", expected m = " + std::to_string(m));
    KParts parts;
    int prev_level = 2 * n;
    bool seen_mid = false;
    for (const SigBlock& b : sig.blocks) {
        if (b.count < 1) throw std::invalid_argument("signature: exponents must be positive");
        if (b.kind == SigBlock::Kind::mid) {
            if (seen_mid) throw std::invalid_argument("signature: more than one I-block");
            seen_mid = true;
            parts.primed = b.primed;
            parts.mid = b.count;
            continue;
        }
        if (b.level < 0 || b.level > 2 * n - 1)
            throw std::invalid_argument("signature: level " + std::to_string(b.level) +
                                        " outside [0," + std::to_string(2 * n - 1) + "]");
        if (b.level >= prev_level)
            throw std::invalid_argument("signature: levels must be strictly decreasing");
        prev_level = b.level;
        if (!seen_mid) {
            if (b.level < n)
                throw std::invalid_argument("signature: level blocks before the I-block must be >= n");
            if (b.level == 2 * n - 1)
                parts.head = b.count;
            else
                parts.upper.emplace_back(b.level, b.count);
        } else {
            if (b.level >= n)
                throw std::invalid_argument("signature: level blocks after the I-block must be < n");
            parts.lower.emplace_back(b.level, b.count);
        }
    }
    if (!seen_mid)
        throw std::invalid_argument("signature: an I_n / I_{n'} block is required on [m] x K_{n-1}");
    return parts;
}

}  // namespace

RankSignature rowmotion_product_closed_form(const RankSignature& sig, int d, int m) {
    require_valid_product_signature(sig, d, m);

    std::size_t idx = 0;
    int head = 0;
    if (!sig.blocks.empty() && sig.blocks[0].level == d) {
        head = sig.blocks[0].count;
        idx = 1;
    }
    RankSignature out;
    if (idx == sig.blocks.size()) {  // all slices full: X(full) = empty
        out.blocks.push_back(SigBlock::L(0, m));
        return out;
    }
    out.blocks.push_back(SigBlock::L(sig.blocks[idx].level + 1, head + 1));
    for (std::size_t k = idx + 1; k < sig.blocks.size(); ++k)
        out.blocks.push_back(SigBlock::L(sig.blocks[k].level + 1, sig.blocks[k - 1].count));
    int tail = sig.blocks.back().count - 1;
    if (tail > 0) out.blocks.push_back(SigBlock::L(0, tail));

    require_valid_product_signature(out, d, m);
    return out;
}

RankSignature rowmotion_kposet_closed_form(const RankSignature& sig, int n, int m) {
    const KParts in = parse_k_signature(sig, n, m);
    const bool first_branch = in.lower.empty() || in.lower.front().first < n - 1;

    RankSignature out;
    // Upper part: the head/upper counts shift one block toward the middle.
    int into_mid;  // count arriving at the block adjacent to the I-block
    if (in.upper.empty()) {
        into_mid = in.head + 1;
    } else {
        out.blocks.push_back(SigBlock::L(in.upper[0].first + 1, in.head + 1));
        for (std::size_t k = 1; k < in.upper.size(); ++k)
            out.blocks.push_back(SigBlock::L(in.upper[k].first + 1, in.upper[k - 1].second));
        into_mid = in.upper.back().second;
    }

    if (first_branch) {
        // The I-block flips flavor and the lower counts shift through it.
        out.blocks.push_back(SigBlock::I(!in.primed, into_mid));
        if (in.lower.empty()) {
            if (in.mid - 1 > 0) out.blocks.push_back(SigBlock::L(0, in.mid - 1));
        } else {
            out.blocks.push_back(SigBlock::L(in.lower[0].first + 1, in.mid));
            for (std::size_t k = 1; k < in.lower.size(); ++k)
                out.blocks.push_back(SigBlock::L(in.lower[k].first + 1, in.lower[k - 1].second));
            if (in.lower.back().second - 1 > 0)
                out.blocks.push_back(SigBlock::L(0, in.lower.back().second - 1));
        }
    } else {
        // j1 = n-1: an L_n block forms in front of an unchanged I-block.
        out.blocks.push_back(SigBlock::L(n, into_mid));
        out.blocks.push_back(SigBlock::I(in.primed, in.mid));
        for (std::size_t k = 1; k < in.lower.size(); ++k)
            out.blocks.push_back(SigBlock::L(in.lower[k].first + 1, in.lower[k - 1].second));
        if (in.lower.back().second - 1 > 0)
            out.blocks.push_back(SigBlock::L(0, in.lower.back().second - 1));
    }

    parse_k_signature(out, n, m);  // self-check: the image is well-formed
    return out;
}

KChainProduct k_chain_product(int m, int n) {
    KChainProduct kp;
    kp.k = kposet(n);
    kp.prod = chain_product(m, kp.k.poset);
    return kp;
}

namespace {

std::vector<Bits> expand_blocks(const RankSignature& sig, const std::vector<Bits>& levels,
                                const Bits* mid_plain, const Bits* mid_primed) {
    std::vector<Bits> slices;
    for (const SigBlock& b : sig.blocks) {
        const Bits* v;
        if (b.kind == SigBlock::Kind::level) {
            if (b.level < 0 || b.level >= static_cast<int>(levels.size()))
                throw std::invalid_argument("signature: level out of range for the base poset");
            v = &levels[static_cast<std::size_t>(b.level)];
        } else {
            if (!mid_plain)
                throw std::invalid_argument("signature: I-blocks are not valid on this product");
            v = b.primed ? mid_primed : mid_plain;
        }
        for (int c = 0; c < b.count; ++c) slices.push_back(*v);
    }
    return slices;
}

RankSignature merge_slices(const std::vector<SigBlock>& per_slice) {
    RankSignature sig;
    for (const SigBlock& s : per_slice) {
        if (!sig.blocks.empty() && sig.blocks.back().kind == s.kind &&
            sig.blocks.back().level == s.level && sig.blocks.back().primed == s.primed)
            sig.blocks.back().count += 1;
        else
            sig.blocks.push_back(s);
    }
    return sig;
}

}  // namespace

Bits assemble_signature(const ChainProduct& cp, const RankSignature& sig) {
    require_valid_product_signature(sig, cp.base.levels(), cp.m);
    return cp.assemble(expand_blocks(sig, level_ideals(cp.base), nullptr, nullptr));
}

Bits assemble_signature(const KChainProduct& kp, const RankSignature& sig) {
    parse_k_signature(sig, kp.k.n, kp.prod.m);
    return kp.prod.assemble(
        expand_blocks(sig, level_ideals(kp.prod.base), &kp.k.ideal_n, &kp.k.ideal_np));
}

std::optional<RankSignature> signature_of_ideal(const ChainProduct& cp, const Bits& ideal) {
    const std::vector<Bits> levels = level_ideals(cp.base);
    std::vector<SigBlock> per_slice;
    for (const Bits& slice : cp.profile(ideal)) {
        auto lvl = match_level(levels, slice);
        if (!lvl) return std::nullopt;
        per_slice.push_back(SigBlock::L(*lvl));
    }
    return merge_slices(per_slice);
}

std::optional<RankSignature> signature_of_ideal(const KChainProduct& kp, const Bits& ideal) {
    const std::vector<Bits> levels = level_ideals(kp.prod.base);
    std::vector<SigBlock> per_slice;
    for (const Bits& slice : kp.prod.profile(ideal)) {
        if (auto lvl = match_level(levels, slice)) {
            per_slice.push_back(SigBlock::L(*lvl));
        } else if (slice == kp.k.ideal_n) {
            per_slice.push_back(SigBlock::I(false));
        } else if (slice == kp.k.ideal_np) {
            per_slice.push_back(SigBlock::I(true));
        } else {
            return std::nullopt;
        }
    }
    return merge_slices(per_slice);
}

}  // namespace deltaone
