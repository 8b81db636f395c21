#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gmcusp {

/// Cell location attached to errors raised inside the grid update.
struct CellIndex {
    int i = 0;
    int j = 0;
};

/// Raised when a state with non-positive density or pressure (or a
/// non-finite component) is produced. Instability experiments treat this as
/// a blow-up result rather than a crash.
class PositivityError : public std::runtime_error {
public:
    explicit PositivityError(const std::string& what, std::optional<CellIndex> cell = std::nullopt)
        : std::runtime_error(what), cell_(cell) {}

    const std::optional<CellIndex>& cell() const noexcept { return cell_; }

private:
    std::optional<CellIndex> cell_;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShockNotFound : public std::runtime_error {
public:
    explicit ShockNotFound(int row)
        : std::runtime_error("no shock crossing found in row " + std::to_string(row)), row_(row) {}

    int row() const noexcept { return row_; }

private:
    int row_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gmcusp
