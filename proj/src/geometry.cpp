// SPDX-License-Identifier: Apache-2.0
//
// risnf - near-field RIS placement and capacity simulator
// Copyright (C) 2026 The risnf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risnf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risnf
{

CartesianPoint operator+(const CartesianPoint &a, const CartesianPoint &b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

CartesianPoint operator-(const CartesianPoint &a, const CartesianPoint &b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double norm(const CartesianPoint &p)
{
    return std::hypot(p.x, p.y, p.z);
}

double distance(const CartesianPoint &a, const CartesianPoint &b)
{
    return norm(a - b);
}

void validate(const SphericalPoint &p)
{
    if (!(p.distance >= 0.0) || !std::isfinite(p.distance))
        throw std::invalid_argument("SphericalPoint: distance must be finite and >= 0");
    if (!(p.theta >= 0.0 && p.theta <= pi))
        throw std::invalid_argument("SphericalPoint: polar angle must lie in [0, pi]");
    if (!(p.phi >= 0.0 && p.phi < 2.0 * pi))
        throw std::invalid_argument("SphericalPoint: azimuth must lie in [0, 2 pi)");
}

CartesianPoint spherical_to_cartesian(const SphericalPoint &p)
{
    const double st = std::sin(p.theta);
    return {p.distance * std::cos(p.phi) * st,
            p.distance * std::sin(p.phi) * st,
            p.distance * std::cos(p.theta)};
}

void validate(const PlanarArray &arr)
{
    if (arr.rows == 0 || arr.cols == 0)
        throw std::invalid_argument("PlanarArray: rows and cols must be positive");
    if (!(arr.spacing > 0.0) || !std::isfinite(arr.spacing))
        throw std::invalid_argument("PlanarArray: element spacing must be positive");
    if (!std::isfinite(arr.center.x) || !std::isfinite(arr.center.y) || !std::isfinite(arr.center.z))
        throw std::invalid_argument("PlanarArray: center must be finite");
}

std::vector<CartesianPoint> array_element_positions(const PlanarArray &arr)
{
    validate(arr);
    std::vector<CartesianPoint> out;
    out.reserve(arr.size());
    const double x0 = 0.5 * double(arr.rows - 1);
    const double y0 = 0.5 * double(arr.cols - 1);
    for (std::size_t r = 0; r < arr.rows; ++r)
        for (std::size_t c = 0; c < arr.cols; ++c)
            out.push_back({arr.center.x + (double(r) - x0) * arr.spacing,
                           arr.center.y + (double(c) - y0) * arr.spacing,
                           arr.center.z});
    return out;
}

CartesianPoint RisPanel::centroid() const
{
    return {0.5 * double(elements_x - 1) * pitch_x(),
            0.5 * double(elements_y - 1) * pitch_y(),
            z};
}

double RisPanel::max_dimension() const
{
    const double ex = double(elements_x) * element_width + double(elements_x - 1) * gap_x;
    const double ey = double(elements_y) * element_length + double(elements_y - 1) * gap_y;
    return std::max(ex, ey);
}

void validate(const RisPanel &panel)
{
    if (panel.elements_x == 0 || panel.elements_y == 0)
        throw std::invalid_argument("RisPanel: element counts must be positive");
    if (!(panel.element_width > 0.0) || !(panel.element_length > 0.0))
        throw std::invalid_argument("RisPanel: element dimensions must be positive");
    if (!(panel.gap_x >= 0.0) || !(panel.gap_y >= 0.0))
        throw std::invalid_argument("RisPanel: element gaps must be >= 0");
    if (!std::isfinite(panel.z))
        throw std::invalid_argument("RisPanel: z must be finite");
}

std::vector<CartesianPoint> ris_element_positions(const RisPanel &panel)
{
    validate(panel);
    std::vector<CartesianPoint> out;
    out.reserve(panel.size());
    for (std::size_t a = 0; a < panel.elements_x; ++a)
        for (std::size_t b = 0; b < panel.elements_y; ++b)
            out.push_back({double(a) * panel.pitch_x(), double(b) * panel.pitch_y(), panel.z});
    return out;
}

FresnelBounds fresnel_bounds(const RisPanel &panel, double wavelength)
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("fresnel_bounds: wavelength must be positive");
    const double L = panel.max_dimension();
    return {0.62 * std::sqrt(L * L * L / wavelength), 2.0 * L * L / wavelength};
}

bool in_fresnel_zone(const RisPanel &panel, const CartesianPoint &point, double wavelength)
{
    return fresnel_bounds(panel, wavelength).contains(distance(panel.centroid(), point));
}

} // namespace risnf
