#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverweyl/quiver.hpp"

namespace qw {

enum class RootClass { Real, IsotropicImaginary, NonIsotropicImaginary, NotRoot };

const char* to_string(RootClass k);

struct RootVector {
    IntVec vec;
    RootClass klass = RootClass::NotRoot;
};

// Classifies positive vectors by reflection descent, with a memo table that
// lives for the lifetime of the classifier (never shared across threads).
class RootClassifier {
public:
    explicit RootClassifier(const Quiver& q) : q_(q) {}
    RootClass classify(const IntVec& a);

private:
    const Quiver& q_;
    std::map<IntVec, RootClass> memo_;
};

RootClass classify_root(const Quiver& q, const IntVec& a);

// All positive roots <= bound componentwise, graded-lexicographic order.
std::vector<RootVector> enumerate_positive_roots(const Quiver& q, const IntVec& bound);

struct FormClass {
    enum Kind { PositiveDefinite, Affine, Indefinite } kind = Indefinite;
    IntVec delta;  // primitive radical vector on the support, Affine only
};

// Classifies the Tits form restricted to a connected support (vertex indices).
// The returned delta (Affine case) is indexed by `support`'s order.
FormClass form_class(const Quiver& q, const std::vector<int>& support);

struct CartanMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<i64>> entries;  // c[i][j], diagonal 2, off-diagonal <= 0
};

struct CoxeterFactor {
    char family = 'A';
    int rank = 1;
    bool operator==(const CoxeterFactor& o) const { return family == o.family && rank == o.rank; }
    bool operator<(const CoxeterFactor& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
};

struct CoxeterType {
    std::vector<CoxeterFactor> factors;       // sorted; empty means the trivial group
    std::optional<u64> weyl_order;            // nullopt when some factor is not finite type

    std::string str() const;
    bool is_finite() const { return weyl_order.has_value(); }
};

u64 weyl_order_of(char family, int rank);

// Recognizes the finite Coxeter type of a generalized Cartan matrix, component
// by component. Non-finite components produce weyl_order = nullopt and a
// sentinel factor is omitted; factor list then covers finite components only.
CoxeterType classify_cartan(const CartanMatrix& c);

CoxeterType coxeter_product(const CoxeterType& a, const CoxeterType& b);

}  // namespace qw
