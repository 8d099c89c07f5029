#include "deltaone/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace deltaone {

std::string SimpleType::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleType make_simple_type(Family family, int rank) {
    auto reject = [&](const std::string& range) {
        throw std::invalid_argument("inadmissible rank " + std::to_string(rank) + " for type " +
                                    std::string(1, static_cast<char>(family)) + "; admissible: " +
                                    range);
    };
    switch (family) {
        case Family::A:
            if (rank < 1) reject("A_n with n >= 1");
            break;
        case Family::B:
            if (rank < 2) reject("B_n with n >= 2");
            break;
        case Family::C:
            if (rank < 2) reject("C_n with n >= 2");
            break;
        case Family::D:
            if (rank < 4) reject("D_n with n >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) reject("E_6, E_7, E_8");
            break;
        case Family::F:
            if (rank != 4) reject("F_4");
            break;
        case Family::G:
            if (rank != 2) reject("G_2");
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    return SimpleType{family, rank};
}

std::string Root::label() const {
    bool small = true;
    for (int c : coeffs)
        if (c > 9) small = false;
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!small && i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s;
}

namespace {

// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
    const int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_n is short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            a[n - 1][n - 2] = -2;  // alpha_n is long
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Family::F:
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            a[1][2] = -2;  // alpha_3, alpha_4 are short
            break;
        case Family::G:
            a[0][1] = -1;  // alpha_1 short, alpha_2 long
            a[1][0] = -3;
            break;
    }
    return a;
}

// 6 * (alpha_i, alpha_i) / 2 under the long-root-squared-length-2 normalization.
std::vector<long long> d6_vector(SimpleType t) {
    const int n = t.rank;
    std::vector<long long> d(n, 6);
    switch (t.family) {
        case Family::B:
            d[n - 1] = 3;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) d[i] = 3;
            break;
        case Family::F:
            d[2] = d[3] = 3;
            break;
        case Family::G:
            d[0] = 2;
            break;
        default:
            break;
    }
    return d;
}

int expected_positive_count(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            return n * (n + 1) / 2;
        case Family::B:
        case Family::C:
            return n * n;
        case Family::D:
            return n * (n - 1);
        case Family::E:
            return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
        case Family::F:
            return 24;
        case Family::G:
            return 6;
    }
    return -1;
}

}  // namespace

RootSystem RootSystem::build(SimpleType type) {
    make_simple_type(type.family, type.rank);  // revalidate
    RootSystem rs;
    rs.type_ = type;
    const int n = type.rank;
    const auto a = cartan_matrix(type);
    const auto d6 = d6_vector(type);

    rs.gram6_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram6_[i][j] = d6[j] * a[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.gram6_[i][j] != rs.gram6_[j][i])
                throw std::logic_error("inconsistent Cartan data for " + type.to_string());

    // Closure from the simple roots: alpha + alpha_i is a root iff
    // p - <alpha, alpha_i^vee> > 0, where p is the depth of the alpha_i-string
    // below alpha. Processing in insertion order visits heights nondecreasing.
    std::vector<std::vector<int>> coeff_list;
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        index_of.emplace(e, static_cast<int>(coeff_list.size()));
        coeff_list.push_back(std::move(e));
    }
    for (std::size_t k = 0; k < coeff_list.size(); ++k) {
        const std::vector<int> cur = coeff_list[k];
        for (int i = 0; i < n; ++i) {
            long long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += static_cast<long long>(cur[j]) * a[j][i];
            int p = 0;
            std::vector<int> down = cur;
            for (int step = 1; step <= cur[i]; ++step) {
                down[i] -= 1;
                if (!index_of.count(down)) break;
                p = step;
            }
            if (p - pairing > 0) {
                std::vector<int> up = cur;
                up[i] += 1;
                if (index_of.emplace(up, static_cast<int>(coeff_list.size())).second)
                    coeff_list.push_back(std::move(up));
            }
        }
    }

    if (static_cast<int>(coeff_list.size()) != expected_positive_count(type))
        throw std::logic_error("closure produced " + std::to_string(coeff_list.size()) +
                               " positive roots for " + type.to_string() + ", expected " +
                               std::to_string(expected_positive_count(type)));

    auto norm6 = [&](const std::vector<int>& c) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += static_cast<long long>(c[i]) * c[j] * rs.gram6_[i][j];
        return s;
    };

    std::sort(coeff_list.begin(), coeff_list.end(), [](const auto& x, const auto& y) {
        int hx = 0, hy = 0;
        for (int c : x) hx += c;
        for (int c : y) hy += c;
        if (hx != hy) return hx < hy;
        return x < y;
    });
    for (auto& c : coeff_list) {
        Root r;
        r.height = 0;
        for (int v : c) r.height += v;
        r.long_root = norm6(c) == 12;
        r.coeffs = std::move(c);
        rs.positives_.push_back(std::move(r));
    }
    rs.simples_.assign(rs.positives_.begin(), rs.positives_.begin() + n);

    rs.theta_index_ = static_cast<int>(rs.positives_.size()) - 1;
    const Root& theta = rs.positives_[rs.theta_index_];
    if (rs.positives_.size() > 1 &&
        rs.positives_[rs.positives_.size() - 2].height == theta.height)
        throw std::logic_error("highest root is not unique for " + type.to_string());
    if (!theta.long_root) throw std::logic_error("highest root is not long for " + type.to_string());

    rs.h_ = theta.height + 1;

    // theta^vee = theta under the normalization; its coroot coordinates are
    // theta_i * d_i, which must be integers.
    long long dual_height6 = 0;
    for (int i = 0; i < n; ++i) dual_height6 += theta.coeffs[i] * d6[i];
    if (dual_height6 % 6 != 0)
        throw std::logic_error("non-integral coroot coordinates for " + type.to_string());
    rs.hstar_ = 1 + static_cast<int>(dual_height6 / 6);

    rs.long_simple_count_ = 0;
    for (int i = 0; i < n; ++i)
        if (rs.gram6_[i][i] == 12) ++rs.long_simple_count_;

    rs.theta_pair6_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.theta_pair6_[i] += static_cast<long long>(theta.coeffs[j]) * rs.gram6_[i][j];

    int delta1 = 0;
    for (std::size_t k = 0; k < rs.positives_.size(); ++k) {
        int g = rs.grade(rs.positives_[k].coeffs);
        if (g < 0 || g > 2 || (g == 2) != (static_cast<int>(k) == rs.theta_index_))
            throw std::logic_error("grading by theta^vee is not extra-special for " +
                                   type.to_string());
        if (g == 1) ++delta1;
    }
    if (delta1 != 2 * rs.hstar_ - 4)
        throw std::logic_error("|Delta(1)| != 2*hstar - 4 for " + type.to_string());

    return rs;
}

int RootSystem::grade(const std::vector<int>& coeffs) const {
    long long g6 = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) g6 += coeffs[i] * theta_pair6_[i];
    if (g6 % 6 != 0) throw std::logic_error("non-integral pairing with theta^vee");
    return static_cast<int>(g6 / 6);
}

Delta1 RootSystem::delta_one() const {
    Delta1 d1;
    for (const Root& r : positives_)
        if (grade(r.coeffs) == 1) d1.roots.push_back(r);

    const int m = static_cast<int>(d1.roots.size());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (const Root& r : d1.roots) labels.push_back(r.label());

    std::vector<Bits> below(m, Bits(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            bool le = true;
            for (int k = 0; k < rank() && le; ++k)
                if (d1.roots[i].coeffs[k] > d1.roots[j].coeffs[k]) le = false;
            if (le) below[j].set(i);
        }
    d1.poset = FinitePoset::from_order(std::move(labels), below);
    return d1;
}

}  // namespace deltaone
