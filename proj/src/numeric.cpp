#include "polyhull/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace polyhull {

Cplx horner(const std::vector<Cplx>& c, Cplx x) {
    Cplx acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Cplx> trim_leading(std::vector<Cplx> c, double rel_tol) {
    double top = 0.0;
    for (const Cplx& v : c) top = std::max(top, std::abs(v));
    if (top == 0.0) return {};
    while (!c.empty() && std::abs(c.back()) <= rel_tol * top) c.pop_back();
    return c;
}

std::vector<Cplx> all_roots(const std::vector<Cplx>& coeffs, std::mt19937_64& rng,
                            int max_iter) {
    std::vector<Cplx> c = trim_leading(coeffs);
    if (c.size() <= 1) return {};
    // strip roots at the origin first
    size_t zeros = 0;
    while (zeros + 1 < c.size() && std::abs(c[zeros]) == 0.0) ++zeros;
    std::vector<Cplx> roots(zeros, Cplx{0.0, 0.0});
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
    int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    std::vector<Cplx> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);

    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c[n]));
    radius = 1.0 + radius;

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Cplx> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + unit(rng)) /
                       static_cast<double>(n);
        z[static_cast<size_t>(k)] = radius * Cplx{std::cos(angle), std::sin(angle)};
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double moved = 0.0;
        for (int k = 0; k < n; ++k) {
            Cplx zk = z[static_cast<size_t>(k)];
            Cplx p = horner(c, zk);
            Cplx dp = horner(d, zk);
            Cplx ratio = dp == Cplx{0.0, 0.0} ? Cplx{0.0, 0.0} : p / dp;
            Cplx rep{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Cplx diff = zk - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Cplx{1e-12, 0.0};
                rep += 1.0 / diff;
            }
            Cplx denom = 1.0 - ratio * rep;
            Cplx step = std::abs(denom) < 1e-300 ? ratio : ratio / denom;
            z[static_cast<size_t>(k)] = zk - step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * std::max(1.0, radius)) break;
    }

    // Newton polish each root individually.
    for (int k = 0; k < n; ++k) {
        Cplx zk = z[static_cast<size_t>(k)];
        for (int it = 0; it < 12; ++it) {
            Cplx p = horner(c, zk);
            Cplx dp = horner(d, zk);
            if (std::abs(dp) < 1e-30) break;
            Cplx step = p / dp;
            zk -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(zk))) break;
        }
        // keep the polish only if it did not drift toward another root's basin
        if (std::abs(horner(c, zk)) <= std::abs(horner(c, z[static_cast<size_t>(k)])))
            z[static_cast<size_t>(k)] = zk;
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<Cplx> slice_coefficients(const BiPoly& f, int var, Cplx fixed_other) {
    int d = f.degree(var);
    std::vector<Cplx> out(static_cast<size_t>(std::max(d, -1) + 1), Cplx{0.0, 0.0});
    int other_deg = f.degree(var == 1 ? 2 : 1);
    std::vector<Cplx> powers(static_cast<size_t>(std::max(other_deg, 0) + 1), Cplx{1.0, 0.0});
    for (size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * fixed_other;
    for (const auto& [e, c] : f.terms()) {
        int k = var == 1 ? e.e1 : e.e2;
        int oe = var == 1 ? e.e2 : e.e1;
        out[static_cast<size_t>(k)] += c.to_complex() * powers[static_cast<size_t>(oe)];
    }
    return out;
}

namespace {

// det of a complex matrix by partial-pivot LU (matrix is small).
Cplx determinant(std::vector<std::vector<Cplx>> m) {
    size_t n = m.size();
    Cplx det{1.0, 0.0};
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t r = k + 1; r < n; ++r)
            if (std::abs(m[r][k]) > std::abs(m[piv][k])) piv = r;
        if (std::abs(m[piv][k]) == 0.0) return {0.0, 0.0};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t r = k + 1; r < n; ++r) {
            Cplx f = m[r][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[r][j] -= f * m[k][j];
        }
    }
    return det;
}

Cplx sylvester_det(const BiPoly& a, const BiPoly& b, int var, Cplx other_value) {
    int da = a.degree(var), db = b.degree(var);
    std::vector<Cplx> ac = slice_coefficients(a, var, other_value);
    std::vector<Cplx> bc = slice_coefficients(b, var, other_value);
    ac.resize(static_cast<size_t>(da + 1), Cplx{0.0, 0.0});
    bc.resize(static_cast<size_t>(db + 1), Cplx{0.0, 0.0});
    int n = da + db;
    std::vector<std::vector<Cplx>> m(static_cast<size_t>(n),
                                     std::vector<Cplx>(static_cast<size_t>(n), Cplx{0.0, 0.0}));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[r][r + k] = ac[static_cast<size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[db + r][r + k] = bc[static_cast<size_t>(db - k)];
    return determinant(std::move(m));
}

}  // namespace

std::vector<Cplx> numeric_resultant(const BiPoly& a, const BiPoly& b, int var) {
    if (a.is_zero() || b.is_zero()) return {};
    int da = a.degree(var), db = b.degree(var);
    if (da + db == 0) return {Cplx{1.0, 0.0}};
    int other = var == 1 ? 2 : 1;
    // Degree bound for the resultant in the surviving variable.
    int bound = a.degree(other) * db + b.degree(other) * da;
    int nodes = bound + 1;
    if (nodes < 1) nodes = 1;
    // Evaluation at scaled roots of unity, then inverse DFT. The determinant
    // of the full Sylvester matrix agrees with the resultant polynomial at
    // every node, including nodes where a leading coefficient vanishes.
    double scale = 1.0 + 1.0 / 64.0;
    std::vector<Cplx> values(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                       static_cast<double>(nodes);
        Cplx node = scale * Cplx{std::cos(angle), std::sin(angle)};
        values[static_cast<size_t>(j)] = sylvester_det(a, b, var, node);
    }
    std::vector<Cplx> coeffs(static_cast<size_t>(nodes), Cplx{0.0, 0.0});
    for (int k = 0; k < nodes; ++k) {
        Cplx acc{0.0, 0.0};
        for (int j = 0; j < nodes; ++j) {
            double angle = -2.0 * std::numbers::pi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(nodes);
            acc += values[static_cast<size_t>(j)] * Cplx{std::cos(angle), std::sin(angle)};
        }
        coeffs[static_cast<size_t>(k)] =
            acc / (static_cast<double>(nodes) * std::pow(scale, k));
    }
    return coeffs;
}

bool newton2(const BiPoly& f1, const BiPoly& f2, PointPair& z, double tol, int max_iter) {
    BiPoly j11 = f1.derivative(1), j12 = f1.derivative(2);
    BiPoly j21 = f2.derivative(1), j22 = f2.derivative(2);
    for (int it = 0; it < max_iter; ++it) {
        Cplx v1 = f1.evaluate(z[0], z[1]);
        Cplx v2 = f2.evaluate(z[0], z[1]);
        if (std::abs(v1) + std::abs(v2) < tol) return true;
        Cplx a = j11.evaluate(z[0], z[1]), b = j12.evaluate(z[0], z[1]);
        Cplx c = j21.evaluate(z[0], z[1]), d = j22.evaluate(z[0], z[1]);
        Cplx det = a * d - b * c;
        if (std::abs(det) < 1e-300) return false;
        Cplx s1 = (d * v1 - b * v2) / det;
        Cplx s2 = (a * v2 - c * v1) / det;
        z[0] -= s1;
        z[1] -= s2;
        if (std::abs(s1) + std::abs(s2) > 1e12) return false;
    }
    return std::abs(f1.evaluate(z[0], z[1])) + std::abs(f2.evaluate(z[0], z[1])) < tol;
}

bool levenberg_marquardt(const LMProblem& prob, std::vector<double>& x,
                         double residual_tol, int max_iter) {
    if (static_cast<int>(x.size()) != prob.n) throw std::invalid_argument("LM size mismatch");
    using Eigen::MatrixXd;
    using Eigen::VectorXd;
    std::vector<double> r(static_cast<size_t>(prob.m));
    std::vector<double> jac(static_cast<size_t>(prob.m * prob.n));
    double lambda = 1e-3;

    auto norm2 = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double t : v) s += t * t;
        return s;
    };

    prob.eval(x, r, jac);
    double cost = norm2(r);
    for (int it = 0; it < max_iter; ++it) {
        if (std::sqrt(cost) < residual_tol) return true;
        MatrixXd J(prob.m, prob.n);
        VectorXd R(prob.m);
        for (int i = 0; i < prob.m; ++i) {
            R(i) = r[static_cast<size_t>(i)];
            for (int j = 0; j < prob.n; ++j)
                J(i, j) = jac[static_cast<size_t>(i * prob.n + j)];
        }
        MatrixXd H = J.transpose() * J;
        VectorXd g = J.transpose() * R;
        bool improved = false;
        for (int attempt = 0; attempt < 16; ++attempt) {
            MatrixXd Hl = H + lambda * MatrixXd::Identity(prob.n, prob.n);
            VectorXd step = Hl.ldlt().solve(g);
            std::vector<double> trial(x);
            for (int j = 0; j < prob.n; ++j) trial[static_cast<size_t>(j)] -= step(j);
            std::vector<double> rt(static_cast<size_t>(prob.m));
            std::vector<double> jt(static_cast<size_t>(prob.m * prob.n));
            prob.eval(trial, rt, jt);
            double ct = norm2(rt);
            if (ct < cost) {
                x = std::move(trial);
                r = std::move(rt);
                jac = std::move(jt);
                cost = ct;
                lambda = std::max(lambda * 0.3, 1e-12);
                improved = true;
                break;
            }
            lambda *= 8.0;
            if (lambda > 1e12) break;
        }
        if (!improved) break;
    }
    return std::sqrt(cost) < residual_tol;
}

Cplx random_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = radius * std::sqrt(unit(rng));
    double a = 2.0 * std::numbers::pi * unit(rng);
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace polyhull
