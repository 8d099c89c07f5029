#include "deltaone/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace deltaone {

namespace {

void check_width(const FinitePoset& p, const Bits& s, const char* what) {
    if (s.width() != p.size())
        throw std::invalid_argument(std::string(what) + ": subset width " +
                                    std::to_string(s.width()) + " does not match poset size " +
                                    std::to_string(p.size()));
}

}  // namespace

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     std::vector<std::pair<int, int>> covers) {
    FinitePoset p;
    p.n_ = static_cast<int>(labels.size());
    p.labels_ = std::move(labels);
    p.covers_ = std::move(covers);

    std::set<std::string> seen(p.labels_.begin(), p.labels_.end());
    if (static_cast<int>(seen.size()) != p.n_)
        throw std::invalid_argument("poset labels must be unique");
    std::set<std::pair<int, int>> cset;
    for (auto [l, u] : p.covers_) {
        if (l < 0 || l >= p.n_ || u < 0 || u >= p.n_ || l == u)
            throw std::invalid_argument("cover pair out of range");
        if (!cset.insert({l, u}).second)
            throw std::invalid_argument("duplicate cover pair");
    }
    p.finish();
    return p;
}

void FinitePoset::finish() {
    std::sort(covers_.begin(), covers_.end());

    lower_covers_.assign(n_, Bits(n_));
    upper_covers_.assign(n_, Bits(n_));
    for (auto [l, u] : covers_) {
        lower_covers_[u].set(l);
        upper_covers_[l].set(u);
    }

    // Linear extension, smallest available index first; also detects cycles.
    topo_.clear();
    topo_.reserve(n_);
    Bits placed(n_);
    for (int step = 0; step < n_; ++step) {
        int pick = -1;
        for (int x = 0; x < n_ && pick < 0; ++x)
            if (!placed.test(x) && lower_covers_[x].subset_of(placed)) pick = x;
        if (pick < 0) throw std::invalid_argument("cover relation contains a cycle");
        placed.set(pick);
        topo_.push_back(pick);
    }

    below_.assign(n_, Bits(n_));
    for (int x : topo_) {
        below_[x].set(x);
        for (int l = lower_covers_[x].next(0); l >= 0; l = lower_covers_[x].next(l + 1))
            below_[x] |= below_[l];
    }
    above_.assign(n_, Bits(n_));
    for (int y = 0; y < n_; ++y)
        for (int x = below_[y].next(0); x >= 0; x = below_[y].next(x + 1)) above_[x].set(y);

    // A listed cover must not be implied by the rest of the order.
    for (auto [l, u] : covers_) {
        Bits between = above_[l] & below_[u];
        if (between.count() != 2)
            throw std::invalid_argument("cover pair (" + labels_[l] + "," + labels_[u] +
                                        ") is transitively implied");
    }

    // Rank function: longest chain from a minimal element, kept only when it
    // increases by exactly 1 along every cover.
    rank_.assign(n_, 1);
    for (int x : topo_)
        for (int l = lower_covers_[x].next(0); l >= 0; l = lower_covers_[x].next(l + 1))
            rank_[x] = std::max(rank_[x], rank_[l] + 1);
    bool graded_ok = true;
    for (auto [l, u] : covers_)
        if (rank_[u] != rank_[l] + 1) graded_ok = false;
    if (graded_ok && n_ > 0) {
        levels_ = *std::max_element(rank_.begin(), rank_.end());
    } else {
        rank_.clear();
        levels_ = 0;
    }
}

FinitePoset FinitePoset::from_order(std::vector<std::string> labels,
                                    const std::vector<Bits>& below) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(below.size()) != n)
        throw std::invalid_argument("from_order: one below-set per element required");
    for (int y = 0; y < n; ++y) {
        if (below[y].width() != n) throw std::invalid_argument("from_order: bad row width");
        if (!below[y].test(y)) throw std::invalid_argument("order relation is not reflexive");
    }
    for (int y = 0; y < n; ++y)
        for (int x = below[y].next(0); x >= 0; x = below[y].next(x + 1)) {
            if (x != y && below[x].test(y))
                throw std::invalid_argument("order relation is not antisymmetric");
            if (!below[x].subset_of(below[y]))
                throw std::invalid_argument("order relation is not transitive");
        }

    std::vector<std::pair<int, int>> covers;
    for (int y = 0; y < n; ++y) {
        Bits strict = below[y];
        strict.reset(y);
        for (int x = strict.next(0); x >= 0; x = strict.next(x + 1)) {
            bool covered = true;
            for (int z = strict.next(0); z >= 0 && covered; z = strict.next(z + 1))
                if (z != x && below[z].test(x)) covered = false;
            if (covered) covers.emplace_back(x, y);
        }
    }
    FinitePoset p = from_covers(std::move(labels), std::move(covers));
    for (int y = 0; y < n; ++y)
        if (!(p.below_[y] == below[y]))
            throw std::logic_error("from_order: cover reduction does not reproduce the order");
    return p;
}

Bits FinitePoset::rank_level_ideal(int i) const {
    if (!graded()) throw std::invalid_argument("rank_level_ideal: poset is not graded");
    if (i < 0 || i > levels_)
        throw std::invalid_argument("rank_level_ideal: level " + std::to_string(i) +
                                    " outside [0," + std::to_string(levels_) + "]");
    Bits out(n_);
    for (int x = 0; x < n_; ++x)
        if (rank_[x] <= i) out.set(x);
    return out;
}

bool FinitePoset::is_ideal(const Bits& s) const {
    check_width(*this, s, "is_ideal");
    for (auto [l, u] : covers_)
        if (s.test(u) && !s.test(l)) return false;
    return true;
}

bool FinitePoset::is_antichain(const Bits& s) const {
    check_width(*this, s, "is_antichain");
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) {
        Bits t = below_[x] & s;
        t.reset(x);
        if (t.any()) return false;
    }
    return true;
}

Bits FinitePoset::minimal_of(const Bits& s) const {
    check_width(*this, s, "minimal_of");
    Bits out(n_);
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) {
        Bits t = below_[x] & s;
        t.reset(x);
        if (t.none()) out.set(x);
    }
    return out;
}

Bits FinitePoset::maximal_of(const Bits& s) const {
    check_width(*this, s, "maximal_of");
    Bits out(n_);
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) {
        Bits t = above_[x] & s;
        t.reset(x);
        if (t.none()) out.set(x);
    }
    return out;
}

Bits FinitePoset::down_closure(const Bits& s) const {
    check_width(*this, s, "down_closure");
    Bits out(n_);
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) out |= below_[x];
    return out;
}

Bits FinitePoset::up_closure(const Bits& s) const {
    check_width(*this, s, "up_closure");
    Bits out(n_);
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) out |= above_[x];
    return out;
}

FinitePoset chain(int m) {
    if (m < 0) throw std::invalid_argument("chain: length must be >= 0");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < m; ++i) {
        labels.push_back(std::to_string(i + 1));
        if (i > 0) covers.emplace_back(i - 1, i);
    }
    return FinitePoset::from_covers(std::move(labels), std::move(covers));
}

namespace {

std::vector<std::string> prefixed(const std::string& pre, const std::vector<std::string>& ls) {
    std::vector<std::string> out;
    out.reserve(ls.size());
    for (const auto& l : ls) out.push_back(pre + l);
    return out;
}

}  // namespace

FinitePoset disjoint_union(const FinitePoset& p, const FinitePoset& q) {
    std::vector<std::string> labels = prefixed("a.", p.labels());
    for (auto& l : prefixed("b.", q.labels())) labels.push_back(l);
    std::vector<std::pair<int, int>> covers = p.covers();
    for (auto [l, u] : q.covers()) covers.emplace_back(l + p.size(), u + p.size());
    return FinitePoset::from_covers(std::move(labels), std::move(covers));
}

FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q) {
    std::vector<std::string> labels = prefixed("a.", p.labels());
    for (auto& l : prefixed("b.", q.labels())) labels.push_back(l);
    std::vector<std::pair<int, int>> covers = p.covers();
    for (auto [l, u] : q.covers()) covers.emplace_back(l + p.size(), u + p.size());
    Bits ptop = p.maximal_of(p.all());
    Bits qbot = q.minimal_of(q.all());
    for (int x = ptop.next(0); x >= 0; x = ptop.next(x + 1))
        for (int y = qbot.next(0); y >= 0; y = qbot.next(y + 1))
            covers.emplace_back(x, y + p.size());
    return FinitePoset::from_covers(std::move(labels), std::move(covers));
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
    const int np = p.size(), nq = q.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(np) * nq);
    for (int u = 0; u < np; ++u)
        for (int v = 0; v < nq; ++v) labels.push_back("(" + p.label(u) + "," + q.label(v) + ")");
    std::vector<std::pair<int, int>> covers;
    for (int u = 0; u < np; ++u)
        for (auto [v, vv] : q.covers()) covers.emplace_back(u * nq + v, u * nq + vv);
    for (auto [u, uu] : p.covers())
        for (int v = 0; v < nq; ++v) covers.emplace_back(u * nq + v, uu * nq + v);
    return FinitePoset::from_covers(std::move(labels), std::move(covers));
}

KPoset kposet(int n) {
    if (n < 2) throw std::invalid_argument("kposet: n must be >= 2 (got " + std::to_string(n) + ")");
    std::vector<std::string> labels;
    for (int i = 1; i <= n - 1; ++i) labels.push_back(std::to_string(i));
    labels.push_back(std::to_string(n));
    labels.push_back(std::to_string(n) + "'");
    for (int i = n + 1; i <= 2 * n - 1; ++i) labels.push_back(std::to_string(i));

    std::vector<std::pair<int, int>> covers;
    for (int k = 1; k <= n - 2; ++k) covers.emplace_back(k - 1, k);
    covers.emplace_back(n - 2, n - 1);  // n-1 -> n
    covers.emplace_back(n - 2, n);      // n-1 -> n'
    covers.emplace_back(n - 1, n + 1);  // n  -> n+1
    covers.emplace_back(n, n + 1);      // n' -> n+1
    for (int k = n + 1; k <= 2 * n - 2; ++k) covers.emplace_back(k, k + 1);

    KPoset kp;
    kp.n = n;
    kp.poset = FinitePoset::from_covers(std::move(labels), std::move(covers));
    kp.ideal_n = Bits(2 * n);
    kp.ideal_np = Bits(2 * n);
    for (int i = 0; i < n - 1; ++i) {
        kp.ideal_n.set(i);
        kp.ideal_np.set(i);
    }
    kp.ideal_n.set(n - 1);
    kp.ideal_np.set(n);
    return kp;
}

Bits ideal_of_antichain(const FinitePoset& p, const Bits& antichain) {
    if (!p.is_antichain(antichain))
        throw std::invalid_argument("ideal_of_antichain: elements are not pairwise incomparable");
    return p.down_closure(antichain);
}

Bits antichain_of_ideal(const FinitePoset& p, const Bits& ideal) {
    if (!p.is_ideal(ideal))
        throw std::invalid_argument("antichain_of_ideal: subset is not a lower ideal");
    return p.maximal_of(ideal);
}

Bits reverse_operator(const FinitePoset& p, const Bits& ideal) {
    if (!p.is_ideal(ideal))
        throw std::invalid_argument("reverse_operator: subset is not a lower ideal");
    return p.down_closure(p.minimal_of(~ideal));
}

Bits reverse_operator_prime(const FinitePoset& p, const Bits& ideal) {
    if (!p.is_ideal(ideal))
        throw std::invalid_argument("reverse_operator_prime: subset is not a lower ideal");
    Bits upper = p.up_closure(p.maximal_of(ideal));
    return p.down_closure(p.maximal_of(~upper));
}

std::vector<Bits> enumerate_lower_ideals(const FinitePoset& p, long long cap) {
    const int n = p.size();
    const auto& ext = p.linear_extension();
    std::vector<Bits> out;
    Bits cur(n);

    // Take/skip each element along a linear extension; an element may be taken
    // only once all of its lower covers are in.
    std::function<void(int)> walk = [&](int k) {
        if (k == n) {
            if (static_cast<long long>(out.size()) >= cap)
                throw CapExceeded("lower-ideal enumeration exceeded cap of " + std::to_string(cap));
            out.push_back(cur);
            return;
        }
        int e = ext[k];
        walk(k + 1);
        if (p.lower_cover_set(e).subset_of(cur)) {
            cur.set(e);
            walk(k + 1);
            cur.reset(e);
        }
    };
    walk(0);
    std::sort(out.begin(), out.end(), Bits::canonical_less);
    return out;
}

Bits ChainProduct::slice(const Bits& ideal, int i) const {
    if (ideal.width() != poset.size())
        throw std::invalid_argument("slice: width does not match product poset");
    if (i < 1 || i > m) throw std::invalid_argument("slice: index outside [1,m]");
    const int nb = base.size();
    Bits s(nb);
    for (int a = 0; a < nb; ++a)
        if (ideal.test((i - 1) * nb + a)) s.set(a);
    return s;
}

std::vector<Bits> ChainProduct::profile(const Bits& ideal) const {
    if (!poset.is_ideal(ideal))
        throw std::invalid_argument("profile: subset is not a lower ideal of the product");
    std::vector<Bits> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) out.push_back(slice(ideal, i));
    return out;
}

Bits ChainProduct::assemble(const std::vector<Bits>& prof) const {
    if (static_cast<int>(prof.size()) != m)
        throw std::invalid_argument("assemble: profile must have m entries");
    const int nb = base.size();
    for (int i = 0; i < m; ++i) {
        if (!base.is_ideal(prof[i]))
            throw std::invalid_argument("assemble: slice " + std::to_string(i + 1) +
                                        " is not a lower ideal of the base");
        if (i + 1 < m && !prof[i + 1].subset_of(prof[i]))
            throw std::invalid_argument("assemble: slices are not nested");
    }
    Bits out(poset.size());
    for (int i = 0; i < m; ++i)
        for (int a = prof[i].next(0); a >= 0; a = prof[i].next(a + 1)) out.set(i * nb + a);
    return out;
}

ChainProduct chain_product(int m, const FinitePoset& base) {
    if (m < 0) throw std::invalid_argument("chain_product: m must be >= 0");
    ChainProduct cp;
    cp.m = m;
    cp.base = base;
    cp.poset = product(chain(m), base);
    return cp;
}

namespace {

// Joint color refinement over the cover digraphs of both posets, so class ids
// are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const FinitePoset& p,
                                                            const FinitePoset& q) {
    const int n = p.size();
    auto initial = [&](const FinitePoset& P, std::vector<std::array<int, 4>>& keys) {
        for (int x = 0; x < P.size(); ++x)
            keys.push_back({P.down_set(x).count(), P.up_set(x).count(),
                            P.lower_cover_set(x).count(), P.upper_cover_set(x).count()});
    };
    std::vector<std::array<int, 4>> keys;
    initial(p, keys);
    initial(q, keys);
    std::map<std::array<int, 4>, int> id0;
    for (const auto& k : keys) id0.emplace(k, 0);
    int next_id = 0;
    for (auto& [k, v] : id0) v = next_id++;
    std::vector<int> col(2 * n);
    for (int i = 0; i < 2 * n; ++i) col[i] = id0[keys[i]];

    auto neighbors = [](const FinitePoset& P) {
        std::vector<std::vector<int>> down(P.size()), up(P.size());
        for (auto [l, u] : P.covers()) {
            down[u].push_back(l);
            up[l].push_back(u);
        }
        return std::make_pair(down, up);
    };
    auto [pdown, pup] = neighbors(p);
    auto [qdown, qup] = neighbors(q);

    int classes = next_id;
    for (int round = 0; round < 2 * n; ++round) {
        std::vector<std::vector<int>> sigs(2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            bool inp = i < n;
            int x = inp ? i : i - n;
            const auto& down = inp ? pdown[x] : qdown[x];
            const auto& up = inp ? pup[x] : qup[x];
            std::vector<int> sig{col[i]};
            std::vector<int> d, u;
            for (int y : down) d.push_back(col[(inp ? 0 : n) + y]);
            for (int y : up) u.push_back(col[(inp ? 0 : n) + y]);
            std::sort(d.begin(), d.end());
            std::sort(u.begin(), u.end());
            sig.push_back(-1);
            sig.insert(sig.end(), d.begin(), d.end());
            sig.push_back(-2);
            sig.insert(sig.end(), u.begin(), u.end());
            sigs[i] = std::move(sig);
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sigs) ids.emplace(s, 0);
        int c = 0;
        for (auto& [k, v] : ids) v = c++;
        for (int i = 0; i < 2 * n; ++i) col[i] = ids[sigs[i]];
        if (c == classes) break;
        classes = c;
    }
    return {std::vector<int>(col.begin(), col.begin() + n),
            std::vector<int>(col.begin() + n, col.end())};
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    const int n = p.size();
    if (n != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto [pc, qc] = refine_colors(p, q);
    {
        std::vector<int> a = pc, b = qc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<int> class_size(*std::max_element(pc.begin(), pc.end()) + 1, 0);
    for (int c : pc) ++class_size[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (class_size[pc[a]] != class_size[pc[b]]) return class_size[pc[a]] < class_size[pc[b]];
        if (pc[a] != pc[b]) return pc[a] < pc[b];
        return a < b;
    });

    std::vector<int> map_pq(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == n) return true;
        int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y] || qc[y] != pc[x]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int u = order[j];
                if (p.leq(u, x) != q.leq(map_pq[u], y) || p.leq(x, u) != q.leq(y, map_pq[u]))
                    ok = false;
            }
            if (!ok) continue;
            map_pq[x] = y;
            used[y] = 1;
            if (dfs(k + 1)) return true;
            map_pq[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(x, y) != q.leq(map_pq[x], map_pq[y]))
                throw std::logic_error("is_isomorphic: produced map is not order-preserving");
    return map_pq;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, std::string_view graph_name) {
    std::string out = "digraph \"" + dot_escape(std::string(graph_name)) + "\" {\n";
    out += "  rankdir=BT;\n";
    for (int x = 0; x < p.size(); ++x) out += "  \"" + dot_escape(p.label(x)) + "\";\n";
    for (auto [l, u] : p.covers())
        out += "  \"" + dot_escape(p.label(l)) + "\" -> \"" + dot_escape(p.label(u)) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace deltaone
