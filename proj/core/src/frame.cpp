#include "apolab/frame.hpp"

namespace apolab {

namespace {
constexpr const char* kUvzNames[3] = {"z", "u", "v"};  // storage order z > u > v
}

std::string VariableFrame::var_name(std::size_t storage_index) const {
    if (storage_index >= var_count()) throw std::out_of_range("variable index out of range");
    switch (kind_) {
        case FrameKind::X: return "x" + std::to_string(storage_index + 1);
        case FrameKind::Y: return "y" + std::to_string(storage_index + 1);
        case FrameKind::UVZ: return kUvzNames[storage_index];
    }
    throw std::logic_error("unreachable");
}

std::vector<std::size_t> VariableFrame::print_order() const {
    if (kind_ == FrameKind::UVZ) return {1, 0, 2};  // u, z, v
    std::vector<std::size_t> order(var_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
}

std::optional<std::size_t> VariableFrame::find_var(std::string_view name) const {
    if (kind_ == FrameKind::UVZ) {
        for (std::size_t i = 0; i < 3; ++i)
            if (name == kUvzNames[i]) return i;
        return std::nullopt;
    }
    const char prefix = (kind_ == FrameKind::X) ? 'x' : 'y';
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    std::size_t idx = 0;
    for (char c : name.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        idx = idx * 10 + static_cast<std::size_t>(c - '0');
    }
    if (name[1] == '0') return std::nullopt;  // no leading zeros: x01 is not a variable
    if (idx < 1 || idx > var_count()) return std::nullopt;
    return idx - 1;
}

std::string VariableFrame::to_string() const {
    switch (kind_) {
        case FrameKind::X: return "x(" + std::to_string(n_) + ")";
        case FrameKind::Y: return "y(" + std::to_string(n_) + ")";
        case FrameKind::UVZ: return "uvz";
    }
    throw std::logic_error("unreachable");
}

}  // namespace apolab
