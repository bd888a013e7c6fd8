/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <vector>

#include "normalgeom/field.hpp"

namespace ng {

using Vec3 = std::array<Scalar, 3>;
using Mat3 = std::array<Vec3, 3>;
using Matrix = std::vector<std::vector<Scalar>>;

Vec3 make_vec3(FieldSpec f, long a, long b, long c);
Vec3 cross(const Vec3& a, const Vec3& b);
Scalar dot(const Vec3& a, const Vec3& b);
bool is_zero_vec(const Vec3& a);
/// All 2x2 minors vanish.
bool proportional(const Vec3& a, const Vec3& b);
Vec3 mat_vec(const Mat3& m, const Vec3& v);
Mat3 transpose(const Mat3& m);
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Scalar det3(const Mat3& m);
/// Throws Errc::degenerate on a singular matrix.
Mat3 inverse3(const Mat3& m);
/// Columns given as vectors.
Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);
/// Basis of the right null space of an r x ncols matrix.
std::vector<std::vector<Scalar>> kernel(Matrix m, std::size_t ncols, FieldSpec f);

}  // namespace ng
