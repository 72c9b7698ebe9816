#include "polyhull/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyhull {

ResidualStats verify_boundary_relation(const ProblemSpec& spec,
                                       const std::vector<PointPair>& gamma_samples) {
    if (gamma_samples.empty()) throw EmptySampleSet();
    ResidualStats stats;
    stats.count = static_cast<int>(gamma_samples.size());
    double sum = 0;
    for (const PointPair& z : gamma_samples) {
        double r = std::abs(boundary_data(spec, z) - h_psi(spec, z));
        stats.max = std::max(stats.max, r);
        sum += r;
    }
    stats.mean = sum / stats.count;
    return stats;
}

TotallyRealScan totally_real_scan(const ProblemSpec& spec,
                                  const std::vector<PointPair>& x_samples,
                                  const std::vector<BiPoly>& factors, double tol) {
    TotallyRealScan scan;
    for (const PointPair& z : x_samples) {
        TotallyRealScan::Entry entry;
        entry.point = z;
        entry.abs_delta = std::abs(delta_direct(spec, z));
        entry.flagged = entry.abs_delta <= tol;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (std::abs(factors[k].evaluate(z[0], z[1])) <= 1e-6)
                entry.vanishing_factors.push_back(static_cast<int>(k));
        }
        if (entry.flagged) ++scan.flagged_count;
        scan.entries.push_back(std::move(entry));
    }
    return scan;
}

namespace {

std::vector<std::array<int, 3>> monomial_basis(int degree) {
    std::vector<std::array<int, 3>> basis;
    for (int d = 0; d <= degree; ++d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) basis.push_back({a, b, d - a - b});
    return basis;
}

Cplx eval_monomial(const std::array<int, 3>& e, const Point3& p) {
    Cplx v{1, 0};
    for (int k = 0; k < e[0]; ++k) v *= p[0];
    for (int k = 0; k < e[1]; ++k) v *= p[1];
    for (int k = 0; k < e[2]; ++k) v *= p[2];
    return v;
}

}  // namespace

SeparationCertificate separation_search(const std::vector<Point3>& cloud,
                                        const Point3& point, int degree) {
    if (cloud.empty()) throw EmptySampleSet();
    if (degree < 1) throw std::invalid_argument("separation degree must be >= 1");

    // rescale to unit RMS radius to keep the Vandermonde conditioned
    double rms = 0;
    for (const Point3& p : cloud)
        rms += std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]);
    rms = std::sqrt(rms / cloud.size());
    if (!(rms > 1e-12)) rms = 1.0;
    auto scale_point = [&](const Point3& p) {
        return Point3{p[0] / rms, p[1] / rms, p[2] / rms};
    };

    std::vector<std::array<int, 3>> basis = monomial_basis(degree);
    const int B = static_cast<int>(basis.size());
    const int N = static_cast<int>(cloud.size());

    Eigen::MatrixXcd A(N, B);
    for (int r = 0; r < N; ++r) {
        Point3 p = scale_point(cloud[static_cast<size_t>(r)]);
        for (int c = 0; c < B; ++c) A(r, c) = eval_monomial(basis[static_cast<size_t>(c)], p);
    }
    Eigen::VectorXcd phi(B);
    Point3 sp = scale_point(point);
    for (int c = 0; c < B; ++c) phi(c) = eval_monomial(basis[static_cast<size_t>(c)], sp);

    // minimize |A c|^2 + lambda |c|^2 subject to phi^T c = 1 (KKT system)
    double lambda = 1e-10 * N;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(B + 1, B + 1);
    M.topLeftCorner(B, B) = A.adjoint() * A;
    M.topLeftCorner(B, B).diagonal().array() += lambda;
    M.topRightCorner(B, 1) = phi.conjugate();
    M.bottomLeftCorner(1, B) = phi.transpose();
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(B + 1);
    rhs(B) = 1.0;
    Eigen::VectorXcd sol = M.fullPivLu().solve(rhs);
    Eigen::VectorXcd coeffs = sol.head(B);

    SeparationCertificate cert;
    cert.degree = degree;
    Cplx at_point = (phi.transpose() * coeffs)(0);
    if (!std::isfinite(at_point.real()) || !std::isfinite(at_point.imag()) ||
        std::abs(at_point - Cplx{1, 0}) > 1e-2)
        throw IllConditioned();
    cert.value_at_point = at_point;
    Eigen::VectorXcd fitted = A * coeffs;
    for (int r = 0; r < N; ++r) cert.sup_on_cloud = std::max(cert.sup_on_cloud, std::abs(fitted(r)));
    cert.separated = std::abs(cert.value_at_point) > cert.sup_on_cloud * 1.05;

    // report coefficients against the unscaled monomials
    cert.coefficients.resize(static_cast<size_t>(B));
    for (int c = 0; c < B; ++c) {
        const auto& e = basis[static_cast<size_t>(c)];
        cert.coefficients[static_cast<size_t>(c)] =
            coeffs(c) / std::pow(rms, e[0] + e[1] + e[2]);
    }
    return cert;
}

std::vector<PointPair> find_x_samples(const ProblemSpec& spec, int count,
                                      std::uint64_t seed) {
    std::vector<PointPair> out;
    std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);

    BiPoly F = spec.P.compose(spec.p1, spec.p2);
    BiPoly F1 = F.derivative(1), F2 = F.derivative(2);
    BiPoly K = spec.P.conjugate_reflect();
    BiPoly R1 = BiPoly::variable(1) * K.derivative(1) - K.scaled(GaussianRational(spec.m));
    BiPoly R2 = BiPoly::variable(2) * K.derivative(2) - K.scaled(GaussianRational(spec.n));
    BiPoly p11 = spec.p1.derivative(1), p12 = spec.p1.derivative(2);
    BiPoly p21 = spec.p2.derivative(1), p22 = spec.p2.derivative(2);
    LaurentFraction h = build_h(spec);

    auto h_grad = [&](Cplx w1, Cplx w2) {
        Cplx d1 = R1.evaluate(w1, w2) / (std::pow(w1, spec.m + 1) * std::pow(w2, spec.n));
        Cplx d2 = R2.evaluate(w1, w2) / (std::pow(w1, spec.m) * std::pow(w2, spec.n + 1));
        return std::pair<Cplx, Cplx>{d1, d2};
    };

    LMProblem prob;
    prob.n = 4;
    prob.m = 2;
    prob.eval = [&](const std::vector<double>& x, std::vector<double>& r,
                    std::vector<double>& J) {
        Cplx z1{x[0], x[1]}, z2{x[2], x[3]};
        Cplx w1 = spec.p1.evaluate(z1, z2), w2 = spec.p2.evaluate(z1, z2);
        Cplx g = std::conj(F.evaluate(z1, z2)) - h.evaluate(w1, w2);
        r[0] = g.real();
        r[1] = g.imag();
        Cplx f1 = F1.evaluate(z1, z2), f2 = F2.evaluate(z1, z2);
        auto [hw1, hw2] = h_grad(w1, w2);
        Cplx H1 = hw1 * p11.evaluate(z1, z2) + hw2 * p21.evaluate(z1, z2);
        Cplx H2 = hw1 * p12.evaluate(z1, z2) + hw2 * p22.evaluate(z1, z2);
        J[0] = f1.real() - H1.real();
        J[1] = -f1.imag() + H1.imag();
        J[2] = f2.real() - H2.real();
        J[3] = -f2.imag() + H2.imag();
        J[4] = -f1.imag() - H1.imag();
        J[5] = -f1.real() - H1.real();
        J[6] = -f2.imag() - H2.imag();
        J[7] = -f2.real() - H2.real();
    };

    int attempts = std::max(count, 1) * 40;
    for (int a = 0; a < attempts && static_cast<int>(out.size()) < count; ++a) {
        PointPair z{random_disc(rng, 1.8), random_disc(rng, 1.8)};
        Cplx w1 = spec.p1.evaluate(z[0], z[1]), w2 = spec.p2.evaluate(z[0], z[1]);
        if (std::abs(w1 * w2) < 0.1) continue;
        std::vector<double> x{z[0].real(), z[0].imag(), z[1].real(), z[1].imag()};
        levenberg_marquardt(prob, x, 1e-12);
        PointPair zf{Cplx{x[0], x[1]}, Cplx{x[2], x[3]}};
        w1 = spec.p1.evaluate(zf[0], zf[1]);
        w2 = spec.p2.evaluate(zf[0], zf[1]);
        if (std::abs(boundary_data(spec, zf) - h_psi(spec, zf)) > 1e-10) continue;
        if (std::abs(w1 * w2) < 0.05) continue;
        double torus_dist = std::max(std::abs(std::abs(w1) - 1.0),
                                     std::abs(std::abs(w2) - 1.0));
        if (torus_dist < 0.05) continue;
        out.push_back(zf);
    }
    return out;
}

}  // namespace polyhull
