#include "klab/projective.hpp"

#include <cmath>

#include <json.hpp>

#include "klab/errors.hpp"

namespace klab {

ProjectiveMap ProjectiveMap::identity() {
    ProjectiveMap f;
    f.m[0][0] = f.m[1][1] = f.m[2][2] = 1.0;
    return f;
}

ProjectiveMap ProjectiveMap::translation(const Point4& p) {
    ProjectiveMap f = identity();
    f.m[0][2] = p.z1();
    f.m[1][2] = p.z2();
    return f;
}

namespace {

std::array<Complex, 3> lift_apply(const ProjectiveMap& f, const Point4& x) {
    const std::array<Complex, 3> v = {x.z1(), x.z2(), Complex(1.0, 0.0)};
    std::array<Complex, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r] += f.m[r][c] * v[c];
    return out;
}

double frobenius(const ProjectiveMap& f) {
    double s = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) s += std::norm(f.m[r][c]);
    return std::sqrt(s);
}

} // namespace

Point4 ProjectiveMap::apply(const Point4& x) const {
    const auto w = lift_apply(*this, x);
    const std::array<Complex, 3> v = {x.z1(), x.z2(), Complex(1.0, 0.0)};
    const double lift_norm =
        std::sqrt(std::norm(v[0]) + std::norm(v[1]) + 1.0) * frobenius(*this);
    if (std::abs(w[2]) < 1e-12 * lift_norm)
        throw SingularLocusError("projective map: point on the singular hyperplane");
    return Point4::from_complex(w[0] / w[2], w[1] / w[2]);
}

double ProjectiveMap::singular_margin(const Point4& x) const {
    const auto w = lift_apply(*this, x);
    const std::array<Complex, 3> v = {x.z1(), x.z2(), Complex(1.0, 0.0)};
    const double lift_norm =
        std::sqrt(std::norm(v[0]) + std::norm(v[1]) + 1.0) * frobenius(*this);
    return std::abs(w[2]) / lift_norm;
}

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& other) const {
    ProjectiveMap out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[r][k] * other.m[k][c];
            out.m[r][c] = s;
        }
    return out;
}

ProjectiveMap ProjectiveMap::inverse() const {
    // adjugate / det for the 3x3 complex matrix
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    const Complex det =
        m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
    const double fro = frobenius(*this);
    if (std::abs(det) < 1e-12 * fro * fro * fro)
        throw DegeneracyError("projective map: matrix is singular");
    ProjectiveMap out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            // adjugate by cyclic indices, signs folded in
            const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            out.m[r][c] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
        }
    return out;
}

ProjectiveMap ProjectiveMap::canonical() const {
    const double fro = frobenius(*this);
    if (fro < 1e-300) throw DegeneracyError("projective map: zero matrix");
    Complex lead = 0.0;
    for (int r = 0; r < 3 && lead == 0.0; ++r)
        for (int c = 0; c < 3; ++c)
            if (std::abs(m[r][c]) > 1e-12 * fro) {
                lead = m[r][c];
                break;
            }
    const Complex scale = (std::abs(lead) / lead) / fro;
    ProjectiveMap out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.m[r][c] = m[r][c] * scale;
    return out;
}

double ProjectiveMap::max_entry_distance(const ProjectiveMap& other) const {
    const ProjectiveMap a = canonical();
    const ProjectiveMap b = other.canonical();
    double d = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d = std::max(d, std::abs(a.m[r][c] - b.m[r][c]));
    return d;
}

ProjectiveMap rectifier(const Point4& p, const ComplexFunctional& L, Side side) {
    (void)side; // the two conventions act identically on (z1, z2)
    // [x, 1] -> [x, 1 - L(x)/2], then translate by p.
    ProjectiveMap f = ProjectiveMap::identity();
    f.m[2][0] = -0.5 * L.c1;
    f.m[2][1] = -0.5 * L.c2;
    return ProjectiveMap::translation(p).compose(f);
}

Point4 Jet2::quadratic(const Point4& x) const {
    Point4 out;
    for (int k = 0; k < 4; ++k) out[k] = quad[k].form(x, x);
    return out;
}

namespace {

// One Richardson level over the plain central stencils: truncation drops
// from O(h^2) to O(h^4).
template <typename G>
double richardson(const G& stencil, double h) {
    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

} // namespace

Jet2 jet2_of_map(const std::function<Point4(const Point4&)>& F, const Point4& base,
                 double step) {
    if (!(step > 0.0)) throw PreconditionError("jet2_of_map: step must be positive");
    Jet2 jet{};
    const Point4 f0 = F(base);
    auto shifted = [&](int i, double hi, int j, double hj) {
        Point4 x = base;
        x[i] += hi;
        x[j] += hj;
        return F(x);
    };
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < 4; ++i) {
            const double d1 = richardson(
                [&](double h) { return (shifted(i, h, i, 0.0)[k] - shifted(i, -h, i, 0.0)[k]) / (2.0 * h); },
                step);
            jet.linear(k, i) = d1;
            const double d2 = richardson(
                [&](double h) {
                    return (shifted(i, h, i, 0.0)[k] - 2.0 * f0[k] + shifted(i, -h, i, 0.0)[k]) /
                           (h * h);
                },
                step);
            jet.quad[k](i, i) = d2;
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const double d2 = richardson(
                    [&](double h) {
                        return (shifted(i, h, j, h)[k] - shifted(i, h, j, -h)[k] -
                                shifted(i, -h, j, h)[k] + shifted(i, -h, j, -h)[k]) /
                               (4.0 * h * h);
                    },
                    step);
                jet.quad[k](i, j) = d2;
                jet.quad[k](j, i) = d2;
            }
    }
    return jet;
}

CircleFit image_of_line(const ProjectiveMap& F, const Point4& q, const Point4& dir, double T,
                        int n) {
    if (n < 8) throw PreconditionError("image_of_line: need at least 8 samples");
    std::vector<Point4> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = -T + 2.0 * T * i / (n - 1);
        const Point4 x = q + dir * t;
        if (F.singular_margin(x) < 1e-6)
            throw SingularLocusError("image_of_line: sample within 1e-6 of the singular hyperplane");
        images.push_back(F.apply(x));
    }
    return fit_circle(images);
}

std::string to_json(const ProjectiveMap& map) {
    const ProjectiveMap c = map.canonical();
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col)
            j.push_back({c.m[r][col].real(), c.m[r][col].imag()});
    return j.dump();
}

} // namespace klab
