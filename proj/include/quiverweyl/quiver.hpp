#pragma once

#include <string>
#include <vector>

#include "quiverweyl/basics.hpp"

namespace qw {

// Undirected multigraph without edge loops. Orientation is irrelevant to every
// formula in this library, so only the multiplicities n(i,j) are stored.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> names, std::vector<std::vector<i64>> mult);

    static Quiver from_edges(const std::vector<std::string>& names,
                             const std::vector<std::tuple<std::string, std::string, i64>>& edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    int index(const std::string& name) const;  // -1 if absent

    i64 n(int i, int j) const { return mult_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    // Cartan entry c_ij: 2 on the diagonal, -n(i,j) off it.
    i64 cartan(int i, int j) const { return i == j ? 2 : -n(i, j); }

    std::vector<std::pair<int, int>> edges() const;  // i<j with n(i,j) > 0, lex order

    Quiver induced(const std::vector<int>& vertices) const;

    bool operator==(const Quiver& o) const { return names_ == o.names_ && mult_ == o.mult_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<i64>> mult_;
};

// Dimension vectors and characters are dense vectors aligned with a quiver's
// vertex order; IntVec is the shared representation.

i64 tits_pairing(const Quiver& q, const IntVec& a, const IntVec& b);
// Pairing (a, alpha_i) with the simple root at vertex i.
i64 simple_pairing(const Quiver& q, const IntVec& a, int i);
i64 p_value(const Quiver& q, const IntVec& a);

bool connected_support(const Quiver& q, const IntVec& a);
std::vector<std::vector<int>> support_components(const Quiver& q, const IntVec& a);

struct FramedProblem {
    Quiver base;
    IntVec v;
    IntVec w;
    Quiver framed;  // base vertices in order, then the framing vertex last
    IntVec vtilde;  // v extended by 1 at the framing vertex
    int inf;        // index of the framing vertex in `framed`
};

// Name reserved for the framing vertex in the framed quiver.
inline const char* kInfName = "inf";

FramedProblem build_framed(const Quiver& q, const IntVec& v, const IntVec& w);

bool is_in_fundamental_region(const FramedProblem& fp);

}  // namespace qw
