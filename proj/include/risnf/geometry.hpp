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

#pragma once

#include <cstddef>
#include <vector>

namespace risnf
{

inline constexpr double speed_of_light = 299792458.0; // m/s
inline constexpr double pi = 3.141592653589793238462643383279502884;

struct CartesianPoint
{
    double x = 0.0, y = 0.0, z = 0.0;

    friend bool operator==(const CartesianPoint &, const CartesianPoint &) = default;
};

CartesianPoint operator+(const CartesianPoint &a, const CartesianPoint &b);
CartesianPoint operator-(const CartesianPoint &a, const CartesianPoint &b);
double norm(const CartesianPoint &p);
double distance(const CartesianPoint &a, const CartesianPoint &b);

/// Point given by its distance from the origin, polar angle theta in [0, pi]
/// measured from +z, and azimuth phi in [0, 2 pi) measured from +x.
struct SphericalPoint
{
    double distance = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Throws std::invalid_argument when the point violates its range invariants.
void validate(const SphericalPoint &p);

CartesianPoint spherical_to_cartesian(const SphericalPoint &p);

/// Uniform planar array lying in a plane of constant z (normal along the z-axis).
struct PlanarArray
{
    std::size_t rows = 1;
    std::size_t cols = 1;
    double spacing = 0.0; // element pitch in x and y [m]
    CartesianPoint center;

    std::size_t size() const { return rows * cols; }

    friend bool operator==(const PlanarArray &, const PlanarArray &) = default;
};

void validate(const PlanarArray &arr);

/// Element positions in row-major order: index = row * cols + col, where the row
/// advances along x and the column along y. The centroid equals arr.center.
std::vector<CartesianPoint> array_element_positions(const PlanarArray &arr);

/// Rectangular grid of transmissive RIS elements in a plane of constant z.
///
/// Element (a, b) is centred at (a * (Lx + dx), b * (Ly + dy), z), so element (0, 0)
/// sits on the z-axis. Elements are flattened a-major: w = a * Wy + b. This order is
/// shared by the phase profile, the columns of R and the rows of T.
struct RisPanel
{
    std::size_t elements_x = 1; // Wx
    std::size_t elements_y = 1; // Wy
    double element_width = 0.0;  // Lx [m]
    double element_length = 0.0; // Ly [m]
    double gap_x = 0.0;          // dx [m]
    double gap_y = 0.0;          // dy [m]
    double z = 0.0;              // z of element (0, 0) [m]

    std::size_t size() const { return elements_x * elements_y; }
    std::size_t index(std::size_t a, std::size_t b) const { return a * elements_y + b; }
    double pitch_x() const { return element_width + gap_x; }
    double pitch_y() const { return element_length + gap_y; }
    double element_area() const { return element_width * element_length; }

    /// Mean of all element centres.
    CartesianPoint centroid() const;

    /// Largest physical extent, max(Wx Lx + (Wx - 1) dx, Wy Ly + (Wy - 1) dy).
    double max_dimension() const;

    friend bool operator==(const RisPanel &, const RisPanel &) = default;
};

void validate(const RisPanel &panel);

std::vector<CartesianPoint> ris_element_positions(const RisPanel &panel);

struct FresnelBounds
{
    double lower = 0.0; // 0.62 sqrt(L^3 / lambda)
    double upper = 0.0; // 2 L^2 / lambda

    bool contains(double d) const { return lower < d && d <= upper; }
};

FresnelBounds fresnel_bounds(const RisPanel &panel, double wavelength);

/// Distance is taken from the panel centroid. Open below, closed above.
bool in_fresnel_zone(const RisPanel &panel, const CartesianPoint &point, double wavelength);

} // namespace risnf
