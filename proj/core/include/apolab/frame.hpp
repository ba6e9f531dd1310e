#pragma once

// Named variable frames. Polynomials carry their frame, and frames in
// different coordinates never mix without an explicit change of frame.
//
// Storage order of exponents is the frame's significance order:
//   X:   x1 > x2 > ... > xn
//   Y:   y1 > y2 > ... > yn
//   UVZ: z > u > v   (the lexicographic order used for Groebner work)
// Printing of UVZ monomials uses the display order u, z, v.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apolab {

enum class FrameKind { X, Y, UVZ };

class VariableFrame {
public:
    static VariableFrame x(int n) { return VariableFrame(FrameKind::X, n); }
    static VariableFrame y(int n) { return VariableFrame(FrameKind::Y, n); }
    static VariableFrame uvz() { return VariableFrame(FrameKind::UVZ, 3); }

    FrameKind kind() const { return kind_; }
    std::size_t var_count() const { return static_cast<std::size_t>(n_); }

    /// Variable name at the given storage (significance) index.
    std::string var_name(std::size_t storage_index) const;

    /// Storage indices in display order, used when printing monomials.
    std::vector<std::size_t> print_order() const;

    /// Storage index of a named variable, or nullopt if the frame has none.
    std::optional<std::size_t> find_var(std::string_view name) const;

    std::string to_string() const;

    friend bool operator==(const VariableFrame& a, const VariableFrame& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }
    friend bool operator!=(const VariableFrame& a, const VariableFrame& b) { return !(a == b); }

private:
    VariableFrame(FrameKind kind, int n) : kind_(kind), n_(n) {
        if (n < 1) throw std::invalid_argument("frame needs at least one variable");
        if (kind == FrameKind::UVZ && n != 3)
            throw std::invalid_argument("uvz frame requires exactly three variables");
    }

    FrameKind kind_;
    int n_;
};

}  // namespace apolab
