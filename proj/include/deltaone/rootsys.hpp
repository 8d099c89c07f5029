// rootsys.hpp: finite irreducible root systems built by closure from Cartan
// data, with the invariants of the extra-special Z-grading and the weight
// poset Delta(1).
//
// Conventions:
//   * simple roots follow the Bourbaki numbering of each family;
//   * inner products are normalized so long roots have squared length 2; they
//     are stored as integers scaled by 6 (gram6), which is exact for every
//     family (denominators are 1, 2 or 3);
//   * theta is the highest root, h = ht(theta) + 1, and the dual Coxeter
//     number is hstar = 1 + ht(theta^vee) with theta^vee expanded in simple
//     coroots;
//   * Delta(1) = {alpha in Delta+ : (alpha, theta^vee) = 1}, ordered by
//     componentwise comparison of coefficient vectors, elements sorted by
//     (height, lexicographic coefficients) and labeled by their coefficient
//     digit strings.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltaone/poset.hpp"

namespace deltaone {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    std::string to_string() const;
    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

// Validates the admissible ranks (A n>=1, B n>=2, C n>=2, D n>=4, E 6..8,
// F 4, G 2); throws std::invalid_argument naming the admissible range.
SimpleType make_simple_type(Family family, int rank);

struct Root {
    std::vector<int> coeffs;  // over simple roots, all >= 0 for positive roots
    int height = 0;           // sum of coeffs
    bool long_root = false;   // squared length equals 2 under the normalization

    std::string label() const;  // coefficient digit string, e.g. "122"
};

struct Delta1 {
    std::vector<Root> roots;  // aligned with poset element indices
    FinitePoset poset;
};

class RootSystem {
public:
    static RootSystem build(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<Root>& simples() const { return simples_; }
    const std::vector<Root>& positives() const { return positives_; }
    const Root& theta() const { return positives_[theta_index_]; }

    // 6 * (alpha_i, alpha_j) for simple roots; symmetric, exact.
    const std::vector<std::vector<long long>>& gram6() const { return gram6_; }

    int h() const { return h_; }          // Coxeter number
    int hstar() const { return hstar_; }  // dual Coxeter number
    int long_simple_count() const { return long_simple_count_; }

    // (alpha, theta^vee) for a coefficient vector; 0, 1 or 2 on Delta+.
    int grade(const std::vector<int>& coeffs) const;

    Delta1 delta_one() const;

private:
    RootSystem() = default;

    SimpleType type_{Family::A, 1};
    std::vector<Root> simples_, positives_;
    std::vector<std::vector<long long>> gram6_;
    std::vector<long long> theta_pair6_;  // 6 * (alpha_i, theta)
    int theta_index_ = -1;
    int h_ = 0, hstar_ = 0, long_simple_count_ = 0;
};

inline std::pair<int, int> coxeter_numbers(const RootSystem& rs) {
    return {rs.h(), rs.hstar()};
}

inline int long_simple_count(const RootSystem& rs) { return rs.long_simple_count(); }

}  // namespace deltaone
