#include "gkm/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm {

namespace {

ConstraintBuilder default_builder() {
    return [](int rank, int degree, const QVector& alpha) {
        return divisibility_constraints(rank, degree, alpha);
    };
}

const ConstraintBuilder& pick(const ConstraintBuilder& builder, const ConstraintBuilder& fallback) {
    return builder ? builder : fallback;
}

/// Appends rows of C applied to (block at site a) - (block at site b).
void append_difference_rows(QMatrix& out, const QMatrix& c, std::size_t block,
                            std::size_t sites, std::size_t a, std::size_t b) {
    for (const auto& crow : c) {
        QVector row(sites * block, Rational(0));
        for (std::size_t j = 0; j < block; ++j) {
            if (crow[j] == 0) continue;
            row[a * block + j] += crow[j];
            row[b * block + j] -= crow[j];
        }
        out.push_back(std::move(row));
    }
}

QMatrix even_constraint_matrix(const EvenGkmGraph& g, int d, const ConstraintBuilder& builder) {
    const std::size_t block = static_cast<std::size_t>(dim_homogeneous(g.torus_rank, d));
    const std::size_t sites = g.vertices.size();
    QMatrix rows;
    for (const auto& e : g.edges) {
        const QMatrix c = builder(g.torus_rank, d, e.weight);
        append_difference_rows(rows, c, block, sites, static_cast<std::size_t>(e.from),
                               static_cast<std::size_t>(e.to));
    }
    return rows;
}

QMatrix odd_even_part_matrix(const OddGkmGraph& g, int d, const ConstraintBuilder& builder) {
    const std::size_t block = static_cast<std::size_t>(dim_homogeneous(g.torus_rank, d));
    const std::size_t sites = g.circles.size();
    QMatrix rows;
    for (const auto& s : g.squares) {
        if (s.incidences.size() < 2) continue;
        const QMatrix c = builder(g.torus_rank, d, s.weight.rational());
        for (std::size_t i = 0; i + 1 < s.incidences.size(); ++i) {
            const int c1 = s.incidences[i].circle;
            const int c2 = s.incidences[i + 1].circle;
            if (c1 == c2) continue;
            append_difference_rows(rows, c, block, sites, static_cast<std::size_t>(c1),
                                   static_cast<std::size_t>(c2));
        }
    }
    return rows;
}

QMatrix odd_odd_part_matrix(const OddGkmGraph& g, int d, const ConstraintBuilder& builder) {
    const std::size_t block = static_cast<std::size_t>(dim_homogeneous(g.torus_rank, d));
    const std::size_t sites = g.circles.size();
    QMatrix rows;
    for (const auto& s : g.squares) {
        const QMatrix c = builder(g.torus_rank, d, s.weight.rational());
        for (const auto& crow : c) {
            QVector row(sites * block, Rational(0));
            for (const auto& inc : s.incidences)
                for (std::size_t j = 0; j < block; ++j)
                    if (crow[j] != 0)
                        row[static_cast<std::size_t>(inc.circle) * block + j] +=
                            Rational(inc.sign) * crow[j];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

struct DegreeShape {
    bool trivial = false;   // wrong parity: the group vanishes
    int d = 0;              // polynomial degree of a site block
    std::size_t sites = 0;
    std::size_t block = 0;
};

DegreeShape shape_even(const EvenGkmGraph& g, int m) {
    DegreeShape s;
    s.sites = g.vertices.size();
    if (m < 0 || m % 2 != 0) { s.trivial = true; return s; }
    s.d = m / 2;
    s.block = static_cast<std::size_t>(dim_homogeneous(g.torus_rank, s.d));
    return s;
}

DegreeShape shape_odd(const OddGkmGraph& g, int m) {
    DegreeShape s;
    s.sites = g.circles.size();
    if (m < 0) { s.trivial = true; return s; }
    s.d = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
    s.block = static_cast<std::size_t>(dim_homogeneous(g.torus_rank, s.d));
    return s;
}

/// Index maps for multiplication by x_i from degree d-1 blocks to degree d.
std::vector<std::vector<std::size_t>> variable_shift_maps(int rank, int d) {
    const auto& from = MonomialBasis::get(rank, d - 1);
    const auto& to = MonomialBasis::get(rank, d);
    std::vector<std::vector<std::size_t>> maps(rank, std::vector<std::size_t>(from.size()));
    std::vector<int> mono(rank);
    for (int v = 0; v < rank; ++v) {
        for (std::size_t i = 0; i < from.size(); ++i) {
            mono = from.monomials[i];
            ++mono[v];
            maps[v][i] = to.index.at(mono);
        }
    }
    return maps;
}

/// All products x_i · b over a basis of the degree-(m-2) group, as vectors in
/// the degree-m ambient space.
std::vector<QVector> variable_products(int rank, int d, std::size_t sites,
                                       const std::vector<QVector>& lower) {
    std::vector<QVector> out;
    if (d < 1 || lower.empty()) return out;
    const auto maps = variable_shift_maps(rank, d);
    const std::size_t from_block = static_cast<std::size_t>(dim_homogeneous(rank, d - 1));
    const std::size_t to_block = static_cast<std::size_t>(dim_homogeneous(rank, d));
    for (const QVector& v : lower) {
        for (int var = 0; var < rank; ++var) {
            QVector w(sites * to_block, Rational(0));
            for (std::size_t site = 0; site < sites; ++site)
                for (std::size_t i = 0; i < from_block; ++i) {
                    const Rational& x = v[site * from_block + i];
                    if (x != 0) w[site * to_block + maps[var][i]] = x;
                }
            out.push_back(std::move(w));
        }
    }
    return out;
}

long long dim_from_constraints(const QMatrix& rows, std::size_t vars) {
    return static_cast<long long>(vars) - static_cast<long long>(matrix_rank(rows, vars));
}

std::vector<HomogeneousPoly> unflatten(int rank, int d, std::size_t sites, const QVector& v) {
    const std::size_t block = static_cast<std::size_t>(dim_homogeneous(rank, d));
    std::vector<HomogeneousPoly> parts;
    parts.reserve(sites);
    for (std::size_t s = 0; s < sites; ++s) {
        HomogeneousPoly p = HomogeneousPoly::zero(rank, d);
        for (std::size_t j = 0; j < block; ++j) p.coeffs[j] = v[s * block + j];
        parts.push_back(std::move(p));
    }
    return parts;
}

QVector flatten(const std::vector<HomogeneousPoly>& parts) {
    QVector v;
    for (const auto& p : parts) v.insert(v.end(), p.coeffs.begin(), p.coeffs.end());
    return v;
}

bool satisfies(const QMatrix& rows, const QVector& v) {
    for (const auto& row : rows)
        if (dot(row, v) != 0) return false;
    return true;
}

template <typename Graph, typename MatrixFn>
BettiVector betti_impl(const Graph& g, int max_degree, const ConstraintBuilder& builder,
                       const MatrixFn& basis_of) {
    BettiVector out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    // Bases two degrees back, kept per parity.
    std::vector<QVector> lower[2];
    for (int m = 0; m <= max_degree; ++m) {
        const GradedBasis basis = basis_of(g, m, builder);
        long long b = basis.dim();
        if (m >= 2 && !lower[m % 2].empty()) {
            const int rank_t = static_cast<int>(g.torus_rank);
            const int deg = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
            const auto products =
                variable_products(rank_t, deg, basis.sites, lower[m % 2]);
            b -= static_cast<long long>(
                span_rank(products, basis.sites * basis.block));
        }
        lower[m % 2] = basis.vectors;
        out.push_back(b);
    }
    return out;
}

QMatrix identity_matrix(int n) {
    QMatrix m(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

QMatrix matrix_product(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    QMatrix out(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_identity(const QMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

/// Matrix of p -> p(Lx) on the degree-d monomial basis; column j is the image
/// of the j-th monomial.
QMatrix substitution_matrix(int rank, int d, const std::vector<QVector>& linear) {
    const auto& basis = MonomialBasis::get(rank, d);
    QMatrix m(basis.size(), QVector(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        HomogeneousPoly mono = HomogeneousPoly::zero(rank, d);
        mono.coeffs[j] = 1;
        const HomogeneousPoly image = substitute_linear(mono, linear, rank);
        for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = image.coeffs[i];
    }
    return m;
}

/// One application of the automorphism action in degree m to a flat vector.
QVector apply_action(const GraphAutomorphism& aut, bool odd_degree, std::size_t sites,
                     std::size_t block, const QMatrix* subst, const QVector& v) {
    QVector out(v.size(), Rational(0));
    for (std::size_t c = 0; c < sites; ++c) {
        // inverse permutation lookup: source circle with sigma(src) == c
        std::size_t src = 0;
        for (std::size_t i = 0; i < sites; ++i)
            if (static_cast<std::size_t>(aut.circle_perm[i]) == c) { src = i; break; }
        const Rational factor = odd_degree ? Rational(aut.theta_sign[c]) : Rational(1);
        if (!subst) {
            for (std::size_t j = 0; j < block; ++j)
                out[c * block + j] = factor * v[src * block + j];
        } else {
            for (std::size_t i = 0; i < block; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < block; ++j) {
                    if ((*subst)[i][j] == 0 || v[src * block + j] == 0) continue;
                    acc += (*subst)[i][j] * v[src * block + j];
                }
                out[c * block + i] = factor * acc;
            }
        }
    }
    return out;
}

int automorphism_order(const OddGkmGraph& g, const GraphAutomorphism& aut) {
    const std::size_t n = g.circles.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> theta(n, 1);
    QMatrix lin = aut.linear.empty() ? identity_matrix(g.torus_rank) : aut.linear;
    QMatrix acc = identity_matrix(g.torus_rank);
    for (int order = 1; order <= 256; ++order) {
        std::vector<int> next_perm(n), next_theta(n);
        for (std::size_t c = 0; c < n; ++c)
            next_perm[c] = aut.circle_perm[static_cast<std::size_t>(perm[c])];
        // theta'(c) = theta_A(c) * theta(sigma^{-1}(c))
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t src = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (static_cast<std::size_t>(aut.circle_perm[i]) == c) { src = i; break; }
            next_theta[c] = aut.theta_sign[c] * theta[src];
        }
        acc = matrix_product(lin, acc);
        perm = next_perm;
        theta = next_theta;
        bool id = is_identity(acc);
        for (std::size_t c = 0; c < n && id; ++c)
            if (perm[c] != static_cast<int>(c) || theta[c] != 1) id = false;
        if (id) return order;
    }
    throw std::runtime_error("automorphism order exceeds 256");
}

}  // namespace

int top_degree(const EvenGkmGraph& g) { return 2 * g.valence(); }

int top_degree(const OddGkmGraph& g) {
    if (g.circles.empty()) return 0;
    return 2 * static_cast<int>(g.squares_at(0).size()) + 1;
}

GradedBasis equivariant_basis(const EvenGkmGraph& g, int m, const ConstraintBuilder& builder) {
    const ConstraintBuilder fb = default_builder();
    const DegreeShape s = shape_even(g, m);
    GradedBasis out;
    out.m = m;
    out.sites = s.sites;
    out.block = s.trivial ? 0 : s.block;
    if (s.trivial) return out;
    const QMatrix rows = even_constraint_matrix(g, s.d, pick(builder, fb));
    out.vectors = rank_and_nullspace(rows.empty() ? QMatrix{QVector(s.sites * s.block, Rational(0))}
                                                  : rows,
                                     s.sites * s.block)
                      .nullspace;
    return out;
}

GradedBasis equivariant_basis(const OddGkmGraph& g, int m, const ConstraintBuilder& builder) {
    const ConstraintBuilder fb = default_builder();
    const DegreeShape s = shape_odd(g, m);
    GradedBasis out;
    out.m = m;
    out.sites = s.sites;
    out.block = s.trivial ? 0 : s.block;
    if (s.trivial) return out;
    const QMatrix rows = (m % 2 == 0) ? odd_even_part_matrix(g, s.d, pick(builder, fb))
                                      : odd_odd_part_matrix(g, s.d, pick(builder, fb));
    out.vectors = rank_and_nullspace(rows.empty() ? QMatrix{QVector(s.sites * s.block, Rational(0))}
                                                  : rows,
                                     s.sites * s.block)
                      .nullspace;
    return out;
}

long long equivariant_dim(const EvenGkmGraph& g, int m, const ConstraintBuilder& builder) {
    const ConstraintBuilder fb = default_builder();
    const DegreeShape s = shape_even(g, m);
    if (s.trivial) return 0;
    return dim_from_constraints(even_constraint_matrix(g, s.d, pick(builder, fb)),
                                s.sites * s.block);
}

long long equivariant_dim(const OddGkmGraph& g, int m, const ConstraintBuilder& builder) {
    const ConstraintBuilder fb = default_builder();
    const DegreeShape s = shape_odd(g, m);
    if (s.trivial) return 0;
    const QMatrix rows = (m % 2 == 0) ? odd_even_part_matrix(g, s.d, pick(builder, fb))
                                      : odd_odd_part_matrix(g, s.d, pick(builder, fb));
    return dim_from_constraints(rows, s.sites * s.block);
}

GradedClass GradedClass::make(const EvenGkmGraph& g, int m, std::vector<HomogeneousPoly> parts) {
    const DegreeShape s = shape_even(g, m);
    if (s.trivial) throw std::invalid_argument("GradedClass: even graphs vanish in odd degrees");
    if (parts.size() != s.sites) throw std::invalid_argument("GradedClass: one part per vertex");
    for (const auto& p : parts)
        if (p.rank != g.torus_rank || p.degree != s.d)
            throw std::invalid_argument("GradedClass: part shape mismatch");
    const QMatrix rows = even_constraint_matrix(g, s.d, default_builder());
    if (!satisfies(rows, flatten(parts)))
        throw std::invalid_argument("GradedClass: divisibility relations violated");
    GradedClass out;
    out.m = m;
    out.parts = std::move(parts);
    return out;
}

GradedClass GradedClass::make(const OddGkmGraph& g, int m, std::vector<HomogeneousPoly> parts) {
    const DegreeShape s = shape_odd(g, m);
    if (s.trivial) throw std::invalid_argument("GradedClass: negative degree");
    if (parts.size() != s.sites) throw std::invalid_argument("GradedClass: one part per circle");
    for (const auto& p : parts)
        if (p.rank != g.torus_rank || p.degree != s.d)
            throw std::invalid_argument("GradedClass: part shape mismatch");
    const QMatrix rows = (m % 2 == 0) ? odd_even_part_matrix(g, s.d, default_builder())
                                      : odd_odd_part_matrix(g, s.d, default_builder());
    if (!satisfies(rows, flatten(parts)))
        throw std::invalid_argument("GradedClass: divisibility relations violated");
    GradedClass out;
    out.m = m;
    out.parts = std::move(parts);
    return out;
}

BettiVector betti_range(const EvenGkmGraph& g, int max_degree, const ConstraintBuilder& builder) {
    return betti_impl(g, max_degree, builder,
                      [](const EvenGkmGraph& gg, int m, const ConstraintBuilder& b) {
                          return equivariant_basis(gg, m, b);
                      });
}

BettiVector betti_range(const OddGkmGraph& g, int max_degree, const ConstraintBuilder& builder) {
    return betti_impl(g, max_degree, builder,
                      [](const OddGkmGraph& gg, int m, const ConstraintBuilder& b) {
                          return equivariant_basis(gg, m, b);
                      });
}

BettiVector ordinary_betti(const EvenGkmGraph& g, const ConstraintBuilder& builder) {
    return betti_range(g, top_degree(g), builder);
}

BettiVector ordinary_betti(const OddGkmGraph& g, const ConstraintBuilder& builder) {
    return betti_range(g, top_degree(g), builder);
}

namespace {

template <typename Graph>
FormalityReport formality_impl(const Graph& g, long long expected) {
    FormalityReport report;
    report.expected = expected;
    const int top = top_degree(g);
    const BettiVector b = ordinary_betti(g);
    report.total = std::accumulate(b.begin(), b.end(), 0LL);
    report.formal = (report.total == expected);

    for (int m = 0; m <= 2 * top; ++m) {
        long long predicted = 0;
        for (int j = 0; j <= std::min<int>(m, top); ++j) {
            if ((m - j) % 2 != 0) continue;
            predicted += b[static_cast<std::size_t>(j)] *
                         dim_homogeneous(g.torus_rank, (m - j) / 2);
        }
        if (equivariant_dim(g, m) != predicted) {
            report.free_module = false;
            break;
        }
    }
    return report;
}

}  // namespace

FormalityReport formality_check(const EvenGkmGraph& g) {
    return formality_impl(g, static_cast<long long>(g.vertices.size()));
}

FormalityReport formality_check(const OddGkmGraph& g) {
    return formality_impl(g, 2LL * static_cast<long long>(g.circles.size()));
}

bool orientability_check(const EvenGkmGraph& g) {
    const BettiVector b = ordinary_betti(g);
    return !b.empty() && b.back() >= 1;
}

SplitDivision polynomial_split_check(const BettiVector& b, int k) {
    if (k < 0) throw std::invalid_argument("polynomial_split_check: k must be >= 0");
    const int s = 2 * k + 1;
    const int len = static_cast<int>(b.size());
    SplitDivision out;
    if (len <= s) return out;

    BettiVector q(static_cast<std::size_t>(len), 0);
    for (int m = 0; m < len; ++m)
        q[static_cast<std::size_t>(m)] =
            b[static_cast<std::size_t>(m)] - (m >= s ? q[static_cast<std::size_t>(m - s)] : 0);

    for (int m = len - s; m < len; ++m)
        if (q[static_cast<std::size_t>(m)] != 0) return out;
    for (int m = 0; m < len - s; ++m) {
        const long long c = q[static_cast<std::size_t>(m)];
        if (c < 0 || (m % 2 == 1 && c != 0)) return out;
    }
    out.divisible = true;
    out.quotient.assign(q.begin(), q.begin() + (len - s));
    return out;
}

GraphAutomorphism automorphism_from_circle_perm(const OddGkmGraph& g,
                                                std::vector<int> circle_perm,
                                                std::vector<int> theta_sign,
                                                std::vector<QVector> linear) {
    const std::size_t n = g.circles.size();
    if (circle_perm.size() != n || theta_sign.size() != n)
        throw std::invalid_argument("automorphism: per-circle data size mismatch");
    {
        std::vector<bool> hit(n, false);
        for (int c : circle_perm) {
            if (c < 0 || c >= static_cast<int>(n) || hit[static_cast<std::size_t>(c)])
                throw std::invalid_argument("automorphism: circle map is not a permutation");
            hit[static_cast<std::size_t>(c)] = true;
        }
        for (int e : theta_sign)
            if (e != 1 && e != -1)
                throw std::invalid_argument("automorphism: theta signs must be ±1");
    }
    if (!linear.empty()) {
        if (linear.size() != static_cast<std::size_t>(g.torus_rank))
            throw std::invalid_argument("automorphism: linear part shape mismatch");
        for (const auto& row : linear)
            if (row.size() != static_cast<std::size_t>(g.torus_rank))
                throw std::invalid_argument("automorphism: linear part shape mismatch");
        if (span_rank(linear, static_cast<std::size_t>(g.torus_rank)) !=
            static_cast<std::size_t>(g.torus_rank))
            throw std::invalid_argument("automorphism: linear part is singular");
    }

    GraphAutomorphism aut;
    aut.circle_perm = std::move(circle_perm);
    aut.theta_sign = std::move(theta_sign);
    aut.linear = std::move(linear);
    aut.square_perm.assign(g.squares.size(), -1);

    for (std::size_t s = 0; s < g.squares.size(); ++s) {
        // expected image weight class: L^T applied to the representative
        QVector w = g.squares[s].weight.rational();
        if (!aut.linear.empty()) {
            QVector image(w.size(), Rational(0));
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = 0; j < w.size(); ++j)
                    image[j] += aut.linear[i][j] * w[i];
            w = std::move(image);
        }
        const ProjectiveWeight target = ProjectiveWeight::from(w);
        std::vector<int> expected_circles;
        for (const auto& inc : g.squares[s].incidences)
            expected_circles.push_back(aut.circle_perm[static_cast<std::size_t>(inc.circle)]);
        std::sort(expected_circles.begin(), expected_circles.end());

        int found = -1;
        for (std::size_t t = 0; t < g.squares.size(); ++t) {
            if (!(g.squares[t].weight == target)) continue;
            std::vector<int> circles;
            for (const auto& inc : g.squares[t].incidences) circles.push_back(inc.circle);
            std::sort(circles.begin(), circles.end());
            if (circles != expected_circles) continue;
            if (found >= 0)
                throw std::invalid_argument("automorphism: ambiguous image for square '" +
                                            g.squares[s].id + "'");
            found = static_cast<int>(t);
        }
        if (found < 0)
            throw std::invalid_argument("automorphism: no image for square '" +
                                        g.squares[s].id + "' (incompatible with the graph)");
        aut.square_perm[s] = found;
    }

    std::vector<bool> hit(g.squares.size(), false);
    for (int s : aut.square_perm) {
        if (hit[static_cast<std::size_t>(s)])
            throw std::invalid_argument("automorphism: square map is not a permutation");
        hit[static_cast<std::size_t>(s)] = true;
    }
    return aut;
}

BettiVector automorphism_invariant_betti(const OddGkmGraph& g, const GraphAutomorphism& aut) {
    automorphism_from_circle_perm(g, aut.circle_perm, aut.theta_sign, aut.linear);
    const int order = automorphism_order(g, aut);
    const int top = top_degree(g);
    const int rank_t = g.torus_rank;
    const std::size_t sites = g.circles.size();

    // pi(v) = (1/order) sum_t A^t v
    auto project = [&](const std::vector<QVector>& vectors, int d, bool odd_degree) {
        std::vector<QVector> out;
        if (vectors.empty()) return out;
        QMatrix subst;
        const QMatrix* subst_ptr = nullptr;
        if (!aut.linear.empty() && d > 0) {
            subst = substitution_matrix(rank_t, d, aut.linear);
            subst_ptr = &subst;
        }
        const std::size_t block = static_cast<std::size_t>(dim_homogeneous(rank_t, d));
        for (const QVector& v : vectors) {
            QVector sum = v;
            QVector cur = v;
            for (int t = 1; t < order; ++t) {
                cur = apply_action(aut, odd_degree, sites, block, subst_ptr, cur);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cur[i];
            }
            const Rational inv = Rational(1, order);
            for (auto& x : sum) x *= inv;
            out.push_back(std::move(sum));
        }
        return out;
    };

    BettiVector out;
    std::vector<QVector> lower[2];  // full bases two degrees back, per parity
    for (int m = 0; m <= top; ++m) {
        const GradedBasis basis = equivariant_basis(g, m);
        const int d = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
        const bool odd_degree = (m % 2 == 1);

        const auto projected = project(basis.vectors, d, odd_degree);
        long long b = static_cast<long long>(
            span_rank(projected, basis.sites * basis.block));

        if (m >= 2 && !lower[m % 2].empty()) {
            const auto products = variable_products(rank_t, d, sites, lower[m % 2]);
            const auto projected_products = project(products, d, odd_degree);
            b -= static_cast<long long>(
                span_rank(projected_products, basis.sites * basis.block));
        }
        lower[m % 2] = basis.vectors;
        out.push_back(b);
    }
    return out;
}

CohomologyReport cohomology_report(const EvenGkmGraph& g, int max_degree) {
    CohomologyReport report;
    const int top = (max_degree < 0) ? top_degree(g) : max_degree;
    for (int m = 0; m <= top; ++m) report.equivariant_dims[m] = equivariant_dim(g, m);
    report.betti = betti_range(g, top);
    report.formal = formality_check(g).formal;
    report.orientable = orientability_check(g);
    return report;
}

CohomologyReport cohomology_report(const OddGkmGraph& g, int max_degree) {
    CohomologyReport report;
    const int top = (max_degree < 0) ? top_degree(g) : max_degree;
    for (int m = 0; m <= top; ++m) report.equivariant_dims[m] = equivariant_dim(g, m);
    report.betti = betti_range(g, top);
    report.formal = formality_check(g).formal;
    return report;
}

}  // namespace gkm
