#include "quiverweyl/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qw {

Quiver::Quiver(std::vector<std::string> names, std::vector<std::vector<i64>> mult)
    : names_(std::move(names)), mult_(std::move(mult)) {
    size_t n = names_.size();
    if (mult_.size() != n) throw std::invalid_argument("multiplicity table size mismatch");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!seen.insert(name).second) throw std::invalid_argument("duplicate vertex '" + name + "'");
    }
    for (size_t i = 0; i < n; ++i) {
        if (mult_[i].size() != n) throw std::invalid_argument("multiplicity table size mismatch");
        if (mult_[i][i] != 0) throw std::invalid_argument("edge loop at vertex '" + names_[i] + "'");
        for (size_t j = 0; j < n; ++j) {
            if (mult_[i][j] < 0) throw std::invalid_argument("negative multiplicity");
            if (mult_[i][j] != mult_[j][i]) throw std::invalid_argument("multiplicity table not symmetric");
        }
    }
}

Quiver Quiver::from_edges(const std::vector<std::string>& names,
                          const std::vector<std::tuple<std::string, std::string, i64>>& edges) {
    std::vector<std::vector<i64>> mult(names.size(), std::vector<i64>(names.size(), 0));
    Quiver shell(names, mult);  // validates names
    for (const auto& [a, b, m] : edges) {
        int i = shell.index(a), j = shell.index(b);
        if (i < 0) throw std::invalid_argument("edge references unknown vertex '" + a + "'");
        if (j < 0) throw std::invalid_argument("edge references unknown vertex '" + b + "'");
        if (i == j) throw std::invalid_argument("self-edge forbidden at vertex '" + a + "'");
        if (m < 1) throw std::invalid_argument("edge multiplicity must be at least 1");
        mult[static_cast<size_t>(i)][static_cast<size_t>(j)] += m;
        mult[static_cast<size_t>(j)][static_cast<size_t>(i)] += m;
    }
    return Quiver(names, mult);
}

int Quiver::index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> Quiver::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (n(i, j) > 0) out.emplace_back(i, j);
    return out;
}

Quiver Quiver::induced(const std::vector<int>& vertices) const {
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (int i : vertices) names.push_back(name(i));
    std::vector<std::vector<i64>> mult(vertices.size(), std::vector<i64>(vertices.size(), 0));
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = 0; b < vertices.size(); ++b)
            mult[a][b] = n(vertices[a], vertices[b]);
    return Quiver(names, mult);
}

static void check_indexed(const Quiver& q, const IntVec& a, const char* what) {
    if (a.size() != static_cast<size_t>(q.size()))
        throw std::invalid_argument(std::string(what) + ": vector not indexed by the quiver's vertices");
}

i64 tits_pairing(const Quiver& q, const IntVec& a, const IntVec& b) {
    check_indexed(q, a, "tits_pairing");
    check_indexed(q, b, "tits_pairing");
    i64 acc = 0;
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            acc = checked_add(acc, checked_mul(q.cartan(i, j), checked_mul(a[i], b[j])));
    return acc;
}

i64 simple_pairing(const Quiver& q, const IntVec& a, int i) {
    check_indexed(q, a, "simple_pairing");
    i64 acc = checked_mul(2, a[i]);
    for (int j = 0; j < q.size(); ++j)
        if (j != i) acc = checked_add(acc, checked_mul(-q.n(i, j), a[j]));
    return acc;
}

i64 p_value(const Quiver& q, const IntVec& a) {
    return 1 - tits_pairing(q, a, a) / 2;
}

std::vector<std::vector<int>> support_components(const Quiver& q, const IntVec& a) {
    check_indexed(q, a, "support_components");
    std::vector<int> state(a.size(), 0);  // 0 unseen, 1 visited
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < q.size(); ++s) {
        if (a[s] <= 0 || state[s]) continue;
        std::vector<int> comp, stack{s};
        state[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y = 0; y < q.size(); ++y)
                if (a[y] > 0 && !state[y] && q.n(x, y) > 0) {
                    state[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool connected_support(const Quiver& q, const IntVec& a) {
    return support_components(q, a).size() == 1;
}

FramedProblem build_framed(const Quiver& q, const IntVec& v, const IntVec& w) {
    if (v.size() != static_cast<size_t>(q.size()) || w.size() != static_cast<size_t>(q.size()))
        throw std::invalid_argument("build_framed: v and w must be indexed by the quiver's vertices");
    for (i64 x : v)
        if (x < 0) throw std::invalid_argument("build_framed: negative dimension");
    bool any = false;
    for (i64 x : w) {
        if (x < 0) throw std::invalid_argument("build_framed: negative framing");
        any = any || x > 0;
    }
    if (!any) throw std::invalid_argument("framing must be nonzero");
    if (q.index(kInfName) >= 0)
        throw std::invalid_argument(std::string("vertex name '") + kInfName + "' is reserved");

    int n = q.size();
    std::vector<std::string> names = q.names();
    names.push_back(kInfName);
    std::vector<std::vector<i64>> mult(names.size(), std::vector<i64>(names.size(), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mult[i][j] = q.n(i, j);
        mult[i][n] = mult[n][i] = w[i];
    }
    FramedProblem fp;
    fp.base = q;
    fp.v = v;
    fp.w = w;
    fp.framed = Quiver(names, mult);
    fp.vtilde = v;
    fp.vtilde.push_back(1);
    fp.inf = n;
    return fp;
}

bool is_in_fundamental_region(const FramedProblem& fp) {
    for (int i = 0; i < fp.framed.size(); ++i)
        if (simple_pairing(fp.framed, fp.vtilde, i) > 0) return false;
    return true;
}

}  // namespace qw
