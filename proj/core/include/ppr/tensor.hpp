#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ppr/errors.hpp"

namespace ppr {

/// Dense C x H x W float grid in row-major (channel, row, column) order.
/// Pixel images live in [0,255]; gradients and intermediate activations
/// reuse the same container.
struct Tensor3 {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<float> values;

    Tensor3() = default;
    Tensor3(int c, int h, int w, float fill = 0.0f)
        : channels(c), height(h), width(w),
          values(static_cast<size_t>(c) * h * w, fill) {}

    size_t size() const { return values.size(); }

    size_t index(int c, int y, int x) const {
        return (static_cast<size_t>(c) * height + y) * width + x;
    }
    float at(int c, int y, int x) const { return values[index(c, y, x)]; }
    float& at(int c, int y, int x) { return values[index(c, y, x)]; }

    bool same_shape(const Tensor3& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    std::string shape_str() const {
        return std::to_string(channels) + "x" + std::to_string(height) + "x" +
               std::to_string(width);
    }

    bool all_finite() const {
        for (float v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline void require_same_shape(const Tensor3& a, const Tensor3& b, const char* where) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(where) + ": shape mismatch, expected " +
                         a.shape_str() + " got " + b.shape_str());
}

/// Gradient of a scalar loss with respect to an image; same layout as Tensor3.
using Gradient = Tensor3;

} // namespace ppr
