#include "gkm/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace gkm {

namespace {

void enumerate_monomials(int rank, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(current.size());
    if (pos == rank - 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current.push_back(e);
        enumerate_monomials(rank, degree - e, current, out);
        current.pop_back();
    }
}

}  // namespace

const MonomialBasis& MonomialBasis::get(int rank, int degree) {
    if (rank < 1) throw std::invalid_argument("MonomialBasis: rank must be >= 1");
    if (degree < 0) throw std::invalid_argument("MonomialBasis: degree must be >= 0");

    static std::mutex mutex;
    static std::map<std::pair<int, int>, MonomialBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);

    auto key = std::make_pair(rank, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MonomialBasis basis;
    basis.rank = rank;
    basis.degree = degree;
    std::vector<int> current;
    enumerate_monomials(rank, degree, current, basis.monomials);
    for (std::size_t i = 0; i < basis.monomials.size(); ++i)
        basis.index.emplace(basis.monomials[i], i);
    return cache.emplace(key, std::move(basis)).first->second;
}

long long dim_homogeneous(int rank, int degree) {
    if (rank < 1 || degree < 0) throw std::invalid_argument("dim_homogeneous: bad arguments");
    // C(degree + rank - 1, rank - 1)
    long long result = 1;
    for (int i = 1; i <= rank - 1; ++i)
        result = result * (degree + i) / i;
    return result;
}

HomogeneousPoly HomogeneousPoly::zero(int rank, int degree) {
    HomogeneousPoly p;
    p.rank = rank;
    p.degree = degree;
    p.coeffs.assign(MonomialBasis::get(rank, degree).size(), Rational(0));
    return p;
}

HomogeneousPoly HomogeneousPoly::constant(int rank, const Rational& c) {
    HomogeneousPoly p = zero(rank, 0);
    p.coeffs[0] = c;
    return p;
}

HomogeneousPoly HomogeneousPoly::linear_form(const QVector& alpha) {
    if (alpha.empty()) throw std::invalid_argument("linear_form: empty vector");
    const int rank = static_cast<int>(alpha.size());
    HomogeneousPoly p = zero(rank, 1);
    const auto& basis = MonomialBasis::get(rank, 1);
    // Degree-1 monomials appear in variable order x_1, ..., x_r.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& mono = basis.monomials[i];
        for (int v = 0; v < rank; ++v)
            if (mono[v] == 1) p.coeffs[i] = alpha[v];
    }
    return p;
}

bool HomogeneousPoly::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

HomogeneousPoly poly_multiply(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.rank != b.rank) throw std::invalid_argument("poly_multiply: rank mismatch");
    HomogeneousPoly out = HomogeneousPoly::zero(a.rank, a.degree + b.degree);
    const auto& ba = MonomialBasis::get(a.rank, a.degree);
    const auto& bb = MonomialBasis::get(b.rank, b.degree);
    const auto& bo = MonomialBasis::get(out.rank, out.degree);
    std::vector<int> sum(a.rank);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            for (int v = 0; v < a.rank; ++v)
                sum[v] = ba.monomials[i][v] + bb.monomials[j][v];
            out.coeffs[bo.index.at(sum)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

HomogeneousPoly poly_add(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.rank != b.rank || a.degree != b.degree)
        throw std::invalid_argument("poly_add: shape mismatch");
    HomogeneousPoly out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

HomogeneousPoly poly_scale(const HomogeneousPoly& a, const Rational& c) {
    HomogeneousPoly out = a;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

HomogeneousPoly substitute_linear(const HomogeneousPoly& p,
                                  const std::vector<QVector>& variable_images,
                                  int out_rank) {
    if (static_cast<int>(variable_images.size()) != p.rank)
        throw std::invalid_argument("substitute_linear: one image per variable required");
    if (out_rank < 1) throw std::invalid_argument("substitute_linear: out_rank must be >= 1");
    for (const auto& img : variable_images)
        if (static_cast<int>(img.size()) != out_rank)
            throw std::invalid_argument("substitute_linear: image length mismatch");

    HomogeneousPoly out = HomogeneousPoly::zero(out_rank, p.degree);
    const auto& basis = MonomialBasis::get(p.rank, p.degree);
    std::vector<HomogeneousPoly> forms;
    forms.reserve(p.rank);
    for (const auto& img : variable_images) forms.push_back(HomogeneousPoly::linear_form(img));

    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (p.coeffs[i] == 0) continue;
        HomogeneousPoly term = HomogeneousPoly::constant(out_rank, p.coeffs[i]);
        for (int v = 0; v < p.rank; ++v)
            for (int e = 0; e < basis.monomials[i][v]; ++e)
                term = poly_multiply(term, forms[v]);
        out = poly_add(out, term);
    }
    return out;
}

QMatrix divisibility_constraints(int rank, int degree, const QVector& alpha) {
    if (static_cast<int>(alpha.size()) != rank)
        throw std::invalid_argument("divisibility_constraints: alpha length mismatch");
    if (is_zero(alpha)) throw std::invalid_argument("zero weight");

    const std::size_t cols = MonomialBasis::get(rank, degree).size();

    // Constants are divisible by a linear form only when they vanish.
    if (degree == 0) return QMatrix{QVector{Rational(1)}};

    // rank 1: ker alpha = {0}, every positive-degree monomial is divisible.
    if (rank == 1) return QMatrix{};

    // Parametrize ker alpha with integer vectors v_j = alpha_p e_j - alpha_j e_p
    // for j != p, pivoting on the first nonzero entry of alpha.
    int pivot = 0;
    while (alpha[pivot] == 0) ++pivot;

    const int params = rank - 1;
    std::vector<QVector> variable_images(rank, QVector(params, Rational(0)));
    int t = 0;
    for (int j = 0; j < rank; ++j) {
        if (j == pivot) continue;
        variable_images[j][t] = alpha[pivot];
        variable_images[pivot][t] -= alpha[j];
        ++t;
    }

    const std::size_t rows = MonomialBasis::get(params, degree).size();
    QMatrix constraints(rows, QVector(cols, Rational(0)));
    for (std::size_t col = 0; col < cols; ++col) {
        HomogeneousPoly mono = HomogeneousPoly::zero(rank, degree);
        mono.coeffs[col] = 1;
        HomogeneousPoly restricted = substitute_linear(mono, variable_images, params);
        for (std::size_t row = 0; row < rows; ++row)
            constraints[row][col] = restricted.coeffs[row];
    }
    return constraints;
}

}  // namespace gkm
