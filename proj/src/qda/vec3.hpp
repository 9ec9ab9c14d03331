#pragma once

#include <cmath>
#include <stdexcept>

namespace qda {

// Lengths are meters, fields tesla, magnetization A/m. Conversions to the
// reporting units (nm, mT, kA/m) live at the I/O layer only.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return *this / n;
    }
    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline void require_finite(const Vec3& v, const char* what) {
    if (!v.finite()) throw std::invalid_argument(std::string(what) + ": non-finite component");
}

namespace units {
inline constexpr double nm = 1e-9;        // meters
inline constexpr double um = 1e-6;        // meters
inline constexpr double mT = 1e-3;        // tesla
inline constexpr double kA_per_m = 1e3;   // A/m
inline constexpr double mu0 = 4.0e-7 * 3.14159265358979323846;  // T*m/A
}  // namespace units

}  // namespace qda
