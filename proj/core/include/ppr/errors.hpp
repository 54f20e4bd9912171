#pragma once

#include <stdexcept>
#include <string>

namespace ppr {

/// Shape disagreement between tensors, models, or embeddings.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration or argument values (bad ranges, degenerate inputs).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File I/O and serialization failures. `kind()` distinguishes the cause.
class IoError : public std::runtime_error {
public:
    enum class Kind {
        open_failed,
        bad_magic,
        version_mismatch,
        truncated,
        trailing_data,
        bad_descriptor,
        unsupported_format,
        decode_failed,
        inconsistent_shapes,
        empty_dataset,
    };

    IoError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Non-finite value produced by a numeric kernel.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ppr
