#include "gkm/reduction.hpp"

#include <numeric>
#include <stdexcept>

namespace gkm {

namespace {

/// Product of the floating-square weights at each circle (degree k each).
std::vector<HomogeneousPoly> floating_products(const OddGkmGraph& g, int k) {
    std::vector<HomogeneousPoly> out;
    out.reserve(g.circles.size());
    for (std::size_t c = 0; c < g.circles.size(); ++c) {
        HomogeneousPoly f = HomogeneousPoly::constant(g.torus_rank, Rational(1));
        for (int s : g.squares_at(static_cast<int>(c)))
            if (g.is_floating(s))
                f = poly_multiply(f, HomogeneousPoly::linear_form(g.squares[s].weight.rational()));
        if (f.degree != k) throw std::logic_error("floating product degree mismatch");
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

ReductionResult reduce_odd_to_even(const OddGkmGraph& g) {
    const ValidationReport pre = validate_odd(g, 3);
    if (!pre.valid())
        throw std::invalid_argument("reduce_odd_to_even: graph is not GKM_3-valid: " +
                                    pre.violations.front());
    for (std::size_t s = 0; s < g.squares.size(); ++s)
        if (g.square_valence(static_cast<int>(s)) > 2)
            throw std::invalid_argument("reduce_odd_to_even: square '" + g.squares[s].id +
                                        "' has valence > 2");
    const FloatingProfile profile = floating_profile(g);
    if (!profile.constant)
        throw std::invalid_argument("reduce_odd_to_even: floating number is not constant");

    ReductionResult result;
    result.floating_number = profile.common;
    result.graph.torus_rank = g.torus_rank;
    result.graph.signed_weights = false;
    result.graph.vertices = g.circles;
    result.circle_to_vertex.resize(g.circles.size());
    std::iota(result.circle_to_vertex.begin(), result.circle_to_vertex.end(), 0);

    for (const auto& s : g.squares) {
        if (s.incidences.size() != 2) continue;
        EvenEdge e;
        e.id = s.id;
        e.from = s.incidences[0].circle;
        e.to = s.incidences[1].circle;
        e.weight = s.weight.rational();
        result.square_to_edge[s.id] = e.id;
        result.graph.edges.push_back(std::move(e));
    }
    result.graph = infer_connection_gkm3(result.graph);
    return result;
}

std::variant<OmegaClass, OmegaObstruction> find_omega(const OddGkmGraph& g) {
    const FloatingProfile profile = floating_profile(g);
    if (!profile.constant) {
        OmegaObstruction obs;
        obs.reason = "floating number is not constant across circles";
        return obs;
    }
    const int k = profile.common;
    const std::vector<HomogeneousPoly> f = floating_products(g, k);
    const std::size_t n = g.circles.size();
    const std::size_t block = f.empty() ? 0 : f.front().coeffs.size();

    // Linear system over the coefficients a_c: every grounded square demands
    // that sum_i eps_i a_{c_i} F_{c_i} be divisible by the square weight.
    QMatrix rows;
    for (const auto& s : g.squares) {
        if (s.incidences.size() < 2) continue;
        const QMatrix c = divisibility_constraints(g.torus_rank, k, s.weight.rational());
        for (const auto& crow : c) {
            QVector row(n, Rational(0));
            for (const auto& inc : s.incidences) {
                Rational acc = 0;
                for (std::size_t j = 0; j < block; ++j)
                    if (crow[j] != 0) acc += crow[j] * f[static_cast<std::size_t>(inc.circle)].coeffs[j];
                row[static_cast<std::size_t>(inc.circle)] += Rational(inc.sign) * acc;
            }
            rows.push_back(std::move(row));
        }
    }

    const RankNullspace sol =
        rank_and_nullspace(rows.empty() ? QMatrix{QVector(n, Rational(0))} : rows, n);
    if (sol.nullspace.size() != 1) {
        OmegaObstruction obs;
        obs.solution_dim = static_cast<long long>(sol.nullspace.size());
        obs.reason = "solution space has dimension " + std::to_string(sol.nullspace.size()) +
                     ", expected 1";
        return obs;
    }
    const QVector& a = sol.nullspace.front();
    OmegaObstruction obs;
    for (std::size_t c = 0; c < n; ++c)
        if (a[c] == 0) obs.zero_circles.push_back(g.circles[c]);
    if (!obs.zero_circles.empty()) {
        obs.solution_dim = 1;
        obs.reason = "the generator vanishes on " + std::to_string(obs.zero_circles.size()) +
                     " circle(s)";
        return obs;
    }

    OmegaClass omega;
    omega.k = k;
    omega.a = a;
    omega.omega.reserve(n);
    for (std::size_t c = 0; c < n; ++c) omega.omega.push_back(poly_scale(f[c], a[c]));
    return omega;
}

SplittingReport splitting_check(const OddGkmGraph& g, int cutoff) {
    SplittingReport report;
    const ReductionResult red = reduce_odd_to_even(g);
    report.k = red.floating_number;
    const int s = 2 * report.k + 1;
    const int top = top_degree(g);
    report.cutoff = (cutoff < 0) ? 2 * top : cutoff;

    auto omega = find_omega(g);
    report.omega_found = std::holds_alternative<OmegaClass>(omega);
    if (!report.omega_found) report.obstruction = std::get<OmegaObstruction>(omega);

    report.gamma_orientable = orientability_check(red.graph);
    report.dim_h_2k1 = equivariant_dim(g, s);

    for (int m = 0; m <= report.cutoff; ++m) {
        SplitDegreeRow row;
        row.m = m;
        if (m % 2 == 0) {
            row.check = "even part matches the reduced graph";
            row.lhs = equivariant_dim(g, m);
            row.rhs = equivariant_dim(red.graph, m);
        } else if (m < s) {
            row.check = "odd part vanishes below degree " + std::to_string(s);
            row.lhs = equivariant_dim(g, m);
            row.rhs = 0;
        } else {
            row.check = "odd part is the even part shifted by " + std::to_string(s);
            row.lhs = equivariant_dim(g, m);
            row.rhs = equivariant_dim(red.graph, m - s);
        }
        row.ok = (row.lhs == row.rhs);
        report.rows.push_back(row);
    }

    if (report.omega_found) {
        const OmegaClass& w = std::get<OmegaClass>(omega);
        for (int m = 0; m + s <= report.cutoff; m += 2) {
            const GradedBasis basis = equivariant_basis(g, m);
            if (basis.dim() == 0) continue;
            std::vector<QVector> images;
            images.reserve(basis.vectors.size());
            std::size_t out_len = 0;
            for (const QVector& v : basis.vectors) {
                QVector image;
                for (std::size_t c = 0; c < g.circles.size(); ++c) {
                    HomogeneousPoly p = HomogeneousPoly::zero(g.torus_rank, m / 2);
                    for (std::size_t j = 0; j < basis.block; ++j)
                        p.coeffs[j] = v[c * basis.block + j];
                    const HomogeneousPoly prod = poly_multiply(p, w.omega[c]);
                    image.insert(image.end(), prod.coeffs.begin(), prod.coeffs.end());
                }
                out_len = image.size();
                images.push_back(std::move(image));
            }
            SplitDegreeRow row;
            row.m = m;
            row.check = "multiplication by omega is injective";
            row.lhs = basis.dim();
            row.rhs = static_cast<long long>(span_rank(images, out_len));
            row.ok = (row.lhs == row.rhs);
            report.rows.push_back(row);
        }
    }

    report.betti_odd = ordinary_betti(g);
    report.betti_gamma = ordinary_betti(red.graph);
    report.corollary = polynomial_split_check(report.betti_odd, report.k);

    bool rows_ok = true;
    for (const auto& row : report.rows) rows_ok = rows_ok && row.ok;
    report.verdict = report.omega_found && report.dim_h_2k1 == 1 && rows_ok &&
                     report.corollary.divisible &&
                     report.corollary.quotient == report.betti_gamma;
    return report;
}

}  // namespace gkm
