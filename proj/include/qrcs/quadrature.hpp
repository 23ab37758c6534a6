// SPDX-License-Identifier: Apache-2.0
//
// quadrature.hpp - Gauss-Legendre x uniform-azimuth rules over the unit
// sphere, realizing the sin(theta') dtheta' dphi' measure.

#pragma once

#include "qrcs/scene.hpp"

#include <vector>

namespace qrcs {

enum class SphereDomain { full_sphere, hemisphere };

struct QuadratureNode {
    Direction dir;
    Vec3 unit;      // cached dir.unit()
    double weight;  // steradians
};

/// Product rule: Gauss-Legendre nodes in cos(theta') crossed with uniform
/// azimuth nodes of weight 2*pi/n_azimuth. Weights sum to the domain
/// measure (4*pi for the sphere, 2*pi for the upper hemisphere).
class SphereQuadrature {
public:
    SphereQuadrature(int n_polar, int n_azimuth, SphereDomain domain);

    const std::vector<QuadratureNode>& nodes() const { return nodes_; }
    int n_polar() const { return n_polar_; }
    int n_azimuth() const { return n_azimuth_; }
    SphereDomain domain() const { return domain_; }
    double weight_sum() const;

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (const auto& node : nodes_) acc += node.weight * f(node.dir);
        return acc;
    }

private:
    std::vector<QuadratureNode> nodes_;
    int n_polar_;
    int n_azimuth_;
    SphereDomain domain_;
};

/// Full-sphere rule: cos(theta') over [-1, 1]; weights sum to 4*pi.
SphereQuadrature sphere_quadrature(int n_polar, int n_azimuth);

/// Upper-hemisphere rule (theta' in [0, pi/2]): cos(theta') over [0, 1];
/// weights sum to 2*pi.
SphereQuadrature hemisphere_quadrature(int n_polar, int n_azimuth);

namespace detail {
/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);
} // namespace detail

} // namespace qrcs
