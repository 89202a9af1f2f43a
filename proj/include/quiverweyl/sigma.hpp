#pragma once

#include <optional>
#include <vector>

#include "quiverweyl/roots.hpp"

namespace qw {

// Bottom-up table over all vectors u <= bound: best value of sum(p(part)) over
// decompositions of u into positive roots r with lam . r = 0, parts drawn in
// graded-lex order so multisets are counted once. Built once, queried many
// times; confined to one invocation (never shared).
class DecompositionTable {
public:
    DecompositionTable(const Quiver& q, IntVec bound, std::vector<Rational> lam);

    // Maximum of sum p over decompositions with at least min_parts parts;
    // nullopt when no such decomposition exists.
    std::optional<i64> best_value(const IntVec& u, int min_parts) const;
    // One optimal witness, lexicographically smallest part sequence.
    std::vector<IntVec> witness(const IntVec& u, int min_parts) const;

    bool sigma_member(const IntVec& a);

    const Quiver& quiver() const { return q_; }
    const IntVec& bound() const { return bound_; }
    const std::vector<IntVec>& parts() const { return parts_; }
    RootClassifier& classifier() { return classifier_; }

private:
    size_t index_of(const IntVec& u) const;
    bool in_range(const IntVec& u) const;

    const Quiver& q_;
    IntVec bound_;
    std::vector<Rational> lam_;
    RootClassifier classifier_;
    std::vector<IntVec> parts_;   // admissible roots <= bound, graded-lex ascending
    std::vector<i64> part_p_;
    std::vector<std::vector<i64>> dp_;  // dp_[k][idx]: parts from suffix k
    std::vector<size_t> radix_;
};

struct Decomposition {
    std::optional<i64> value;
    std::vector<IntVec> parts;
};

Decomposition best_decomposition(const Quiver& q, const IntVec& target,
                                 const std::vector<Rational>& lam, int min_parts);

bool sigma_membership(const Quiver& q, const IntVec& a, const std::vector<Rational>& lam);

// Extends a base-quiver lambda to the framed quiver: lambda_inf = -v . lambda.
std::vector<Rational> extend_lambda(const FramedProblem& fp, const std::vector<Rational>& lam);

enum class FactorKind { Sigma0Imaginary, AffineMultiple, Point };

const char* to_string(FactorKind k);

struct Factor {
    FactorKind kind = FactorKind::Point;
    IntVec vec;                // over the framed quiver
    std::vector<int> support;  // sorted framed vertex indices
    IntVec delta;              // AffineMultiple only, full-size
    i64 multiple = 0;          // AffineMultiple only, >= 2
    int frame_vertex = -1;     // designated framing vertex (extended vertex for affine factors)
};

struct Connector {
    std::vector<int> vertices;  // sorted framed vertex indices, all with coefficient 1
};

struct StringDecomposition {
    std::vector<Factor> factors;
    std::vector<Connector> connectors;
    std::vector<std::string> notes;  // non-fatal irregularities found while decomposing
};

// The coarsest decomposition of vtilde into Sigma_0 members, realized by the
// splitting-edge recursion; factors come back sorted by smallest support
// vertex. Requires vtilde in the fundamental region.
StringDecomposition canonical_string_decomposition(const FramedProblem& fp, DecompositionTable& table);

// Whether vtilde is reachable as a nonempty sum of Sigma_{lambda} members.
bool sigma0_feasible(const FramedProblem& fp, const std::vector<Rational>& lam_base);

}  // namespace qw
