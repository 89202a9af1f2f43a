#include "quiverweyl/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qw {

const char* to_string(RootClass k) {
    switch (k) {
        case RootClass::Real: return "real";
        case RootClass::IsotropicImaginary: return "isotropic_imaginary";
        case RootClass::NonIsotropicImaginary: return "non_isotropic_imaginary";
        case RootClass::NotRoot: return "not_root";
    }
    return "?";
}

RootClass RootClassifier::classify(const IntVec& a) {
    if (a.size() != static_cast<size_t>(q_.size()))
        throw std::invalid_argument("classify_root: vector not indexed by the quiver's vertices");
    bool nonzero = false;
    for (i64 x : a) {
        if (x < 0) throw std::invalid_argument("classify_root: only positive vectors are in scope");
        nonzero = nonzero || x > 0;
    }
    if (!nonzero) throw std::invalid_argument("classify_root: zero vector");

    std::vector<IntVec> trail;
    IntVec cur = a;
    RootClass result = RootClass::NotRoot;
    for (;;) {
        auto hit = memo_.find(cur);
        if (hit != memo_.end()) {
            result = hit->second;
            break;
        }
        trail.push_back(cur);

        if (!connected_support(q_, cur)) {
            result = RootClass::NotRoot;
            break;
        }
        int supp_vertex = -1;
        i64 supp_count = 0;
        for (int i = 0; i < q_.size(); ++i)
            if (cur[i] > 0) { supp_vertex = i; ++supp_count; }
        if (supp_count == 1 && cur[supp_vertex] == 1) {
            result = RootClass::Real;
            break;
        }

        int descent = -1;
        i64 pairing = 0;
        for (int i = 0; i < q_.size(); ++i) {
            i64 p = simple_pairing(q_, cur, i);
            if (p > 0) { descent = i; pairing = p; break; }
        }
        if (descent < 0) {
            // Fundamental region with connected support: imaginary root.
            i64 norm = tits_pairing(q_, cur, cur);
            result = norm == 0 ? RootClass::IsotropicImaginary : RootClass::NonIsotropicImaginary;
            break;
        }
        cur[descent] -= pairing;
        if (cur[descent] < 0) {
            result = RootClass::NotRoot;
            break;
        }
    }
    for (const auto& seen : trail) memo_.emplace(seen, result);
    return result;
}

RootClass classify_root(const Quiver& q, const IntVec& a) {
    RootClassifier c(q);
    return c.classify(a);
}

std::vector<RootVector> enumerate_positive_roots(const Quiver& q, const IntVec& bound) {
    if (bound.size() != static_cast<size_t>(q.size()))
        throw std::invalid_argument("enumerate_positive_roots: bound not indexed by the quiver's vertices");
    for (i64 x : bound)
        if (x < 0) throw std::invalid_argument("enumerate_positive_roots: negative bound");

    RootClassifier cls(q);
    std::vector<RootVector> out;
    IntVec a(bound.size(), 0);
    for (;;) {
        // odometer step
        size_t k = 0;
        while (k < a.size() && a[k] == bound[k]) a[k++] = 0;
        if (k == a.size()) break;
        ++a[k];
        RootClass klass = cls.classify(a);
        if (klass != RootClass::NotRoot) out.push_back({a, klass});
    }
    std::sort(out.begin(), out.end(),
              [](const RootVector& x, const RootVector& y) { return graded_lex_less(x.vec, y.vec); });
    return out;
}

namespace {

using i128 = __int128;

// Bareiss determinant of the leading k x k minor.
i128 leading_minor(const std::vector<std::vector<i64>>& m, int k) {
    std::vector<std::vector<i128>> a(static_cast<size_t>(k), std::vector<i128>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    i128 prev = 1;
    int sign = 1;
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != c) { std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(c)]); sign = -sign; }
        for (int r = c + 1; r < k; ++r) {
            for (int j = c + 1; j < k; ++j)
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(r)][static_cast<size_t>(j)] * a[static_cast<size_t>(c)][static_cast<size_t>(c)] -
                     a[static_cast<size_t>(r)][static_cast<size_t>(c)] * a[static_cast<size_t>(c)][static_cast<size_t>(j)]) /
                    prev;
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
        prev = a[static_cast<size_t>(c)][static_cast<size_t>(c)];
    }
    return sign * a[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
}

// Rational nullspace basis of a square integer matrix.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<i64>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t pr = row;
        while (pr < n && a[pr][col].is_zero()) ++pr;
        if (pr == n) continue;
        std::swap(a[pr], a[row]);
        Rational inv(a[row][col].den(), a[row][col].num());
        for (size_t j = 0; j < n; ++j) a[row][j] = a[row][j] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) a[r][j] = a[r][j] + a[row][j] * Rational(-f.num(), f.den());
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> vec(n, Rational(0));
        vec[free] = Rational(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            Rational coeff = a[r][free];
            vec[static_cast<size_t>(pivot_col[r])] = Rational(-coeff.num(), coeff.den());
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace

FormClass form_class(const Quiver& q, const std::vector<int>& support) {
    if (support.empty()) throw std::invalid_argument("form_class: empty support");
    IntVec indicator(static_cast<size_t>(q.size()), 0);
    for (int i : support) indicator[static_cast<size_t>(i)] = 1;
    if (!connected_support(q, indicator)) throw std::invalid_argument("form_class: support not connected");

    int n = static_cast<int>(support.size());
    std::vector<std::vector<i64>> c(static_cast<size_t>(n), std::vector<i64>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                q.cartan(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);

    bool pd = true;
    for (int k = 1; k <= n && pd; ++k) pd = leading_minor(c, k) > 0;
    if (pd) return {FormClass::PositiveDefinite, {}};

    // Connected symmetric Cartan matrices are finite, affine, or indefinite;
    // affine means a one-dimensional radical spanned by a positive vector.
    auto kernel = nullspace(c);
    if (kernel.size() == 1) {
        i64 scale = 1;
        for (const auto& x : kernel[0]) scale = std::lcm(scale, x.den());
        IntVec delta(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& x = kernel[0][static_cast<size_t>(i)];
            delta[static_cast<size_t>(i)] = x.num() * (scale / x.den());
        }
        i64 g = 0;
        for (i64 x : delta) g = std::gcd(g, x < 0 ? -x : x);
        bool pos = true, neg = true;
        for (auto& x : delta) {
            x /= g;
            pos = pos && x > 0;
            neg = neg && x < 0;
        }
        if (neg)
            for (auto& x : delta) x = -x;
        if (pos || neg) return {FormClass::Affine, delta};
    }
    return {FormClass::Indefinite, {}};
}

u64 weyl_order_of(char family, int rank) {
    auto factorial = [](int n) {
        u64 r = 1;
        for (int i = 2; i <= n; ++i) r = checked_mul_u64(r, static_cast<u64>(i));
        return r;
    };
    auto pow2 = [](int n) {
        u64 r = 1;
        for (int i = 0; i < n; ++i) r = checked_mul_u64(r, 2);
        return r;
    };
    switch (family) {
        case 'A': return factorial(rank + 1);
        case 'B':
        case 'C': return checked_mul_u64(pow2(rank), factorial(rank));
        case 'D': return checked_mul_u64(pow2(rank - 1), factorial(rank));
        case 'E':
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            if (rank == 8) return 696729600;
            break;
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw std::invalid_argument("unknown Coxeter factor");
}

std::string CoxeterType::str() const {
    if (factors.empty() && weyl_order.has_value()) return "1";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " x ";
        out += f.family;
        out += std::to_string(f.rank);
    }
    if (!weyl_order.has_value()) {
        if (!out.empty()) out += " x ";
        out += "(infinite)";
    }
    return out;
}

namespace {

// Recognizes one connected generalized Cartan component as a finite type.
std::optional<CoxeterFactor> recognize_component(const CartanMatrix& c, const std::vector<int>& comp) {
    int n = static_cast<int>(comp.size());
    if (n == 1) return CoxeterFactor{'A', 1};

    auto entry = [&](int a, int b) { return c.entries[static_cast<size_t>(comp[static_cast<size_t>(a)])][static_cast<size_t>(comp[static_cast<size_t>(b)])]; };

    std::vector<std::pair<int, int>> edges;   // local indices
    std::vector<i64> bond;                    // c_ij * c_ji per edge
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (entry(i, j) == 0) continue;
            i64 m = checked_mul(entry(i, j), entry(j, i));
            edges.emplace_back(i, j);
            bond.push_back(m);
            ++degree[static_cast<size_t>(i)];
            ++degree[static_cast<size_t>(j)];
        }
    if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;  // cycle: affine or worse

    int doubles = 0, triples = 0;
    for (i64 m : bond) {
        if (m == 2) ++doubles;
        else if (m == 3) ++triples;
        else if (m != 1) return std::nullopt;
    }

    if (triples > 0) {
        if (n == 2 && triples == 1 && doubles == 0) return CoxeterFactor{'G', 2};
        return std::nullopt;
    }
    if (doubles > 1) return std::nullopt;

    int max_degree = *std::max_element(degree.begin(), degree.end());

    if (doubles == 1) {
        if (max_degree > 2) return std::nullopt;
        // path: order it from one end
        int end = -1;
        for (int i = 0; i < n; ++i)
            if (degree[static_cast<size_t>(i)] <= 1) { end = i; break; }
        std::vector<int> path{end};
        std::vector<bool> used(static_cast<size_t>(n), false);
        used[static_cast<size_t>(end)] = true;
        while (static_cast<int>(path.size()) < n) {
            int cur = path.back();
            for (int j = 0; j < n; ++j)
                if (!used[static_cast<size_t>(j)] && entry(cur, j) != 0) {
                    path.push_back(j);
                    used[static_cast<size_t>(j)] = true;
                    break;
                }
        }
        auto bond_at = [&](int k) { return checked_mul(entry(path[static_cast<size_t>(k)], path[static_cast<size_t>(k + 1)]), entry(path[static_cast<size_t>(k + 1)], path[static_cast<size_t>(k)])); };
        int pos = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (bond_at(k) == 2) pos = k;
        if (pos == 0 || pos == n - 2) {
            if (n == 2) return CoxeterFactor{'B', 2};
            // orient so the double bond is at the path's start
            if (pos == n - 2) std::reverse(path.begin(), path.end());
            // short root at the extreme vertex gives family B, else C
            char family = entry(path[1], path[0]) == -2 ? 'B' : 'C';
            return CoxeterFactor{family, n};
        }
        if (n == 4 && pos == 1) return CoxeterFactor{'F', 4};
        return std::nullopt;
    }

    // simply laced tree
    if (max_degree <= 2) return CoxeterFactor{'A', n};
    if (max_degree > 3) return std::nullopt;
    int branches = 0, center = -1;
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<size_t>(i)] == 3) { ++branches; center = i; }
    if (branches != 1) return std::nullopt;
    std::vector<int> legs;
    for (int j = 0; j < n; ++j) {
        if (entry(center, j) == 0 || j == center) continue;
        int len = 1, prev = center, cur = j;
        for (;;) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != prev && k != cur && entry(cur, k) != 0) { next = k; break; }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return CoxeterFactor{'D', n};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return CoxeterFactor{'E', n};
    return std::nullopt;
}

}  // namespace

CoxeterType classify_cartan(const CartanMatrix& c) {
    size_t n = c.entries.size();
    if (c.labels.size() != n) throw std::invalid_argument("classify_cartan: label count mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (c.entries[i].size() != n) throw std::invalid_argument("classify_cartan: matrix not square");
        if (c.entries[i][i] != 2) throw std::invalid_argument("classify_cartan: diagonal entry must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c.entries[i][j] > 0) throw std::invalid_argument("classify_cartan: positive off-diagonal entry");
            if ((c.entries[i][j] == 0) != (c.entries[j][i] == 0))
                throw std::invalid_argument("classify_cartan: zero pattern not symmetric");
        }
    }

    // connected components
    std::vector<int> comp_id(n, -1);
    std::vector<std::vector<int>> comps;
    for (size_t s = 0; s < n; ++s) {
        if (comp_id[s] >= 0) continue;
        std::vector<int> comp, stack{static_cast<int>(s)};
        comp_id[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (size_t y = 0; y < n; ++y)
                if (comp_id[y] < 0 && c.entries[static_cast<size_t>(x)][y] != 0) {
                    comp_id[y] = static_cast<int>(comps.size());
                    stack.push_back(static_cast<int>(y));
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    CoxeterType out;
    out.weyl_order = 1;
    for (const auto& comp : comps) {
        auto f = recognize_component(c, comp);
        if (!f) {
            out.weyl_order = std::nullopt;
            continue;
        }
        out.factors.push_back(*f);
        if (out.weyl_order)
            out.weyl_order = checked_mul_u64(*out.weyl_order, weyl_order_of(f->family, f->rank));
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

CoxeterType coxeter_product(const CoxeterType& a, const CoxeterType& b) {
    CoxeterType out;
    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    std::sort(out.factors.begin(), out.factors.end());
    if (a.weyl_order && b.weyl_order)
        out.weyl_order = checked_mul_u64(*a.weyl_order, *b.weyl_order);
    return out;
}

}  // namespace qw
