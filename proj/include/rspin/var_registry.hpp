#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rspin {

/// x is the integration variable; everything else is a deformation parameter
/// of one flavor or another.
enum class VarRole { FormalX, FlatT, VersalY, FormalB };

struct Var {
    std::string name;   // "x", "t0", "y3", "b1", ...
    VarRole role;
    int index;          // subscript; -1 for x
};

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Immutable, ordered list of named variables.  Polynomials store exponent
/// vectors positionally against one of these; ops mixing two polynomials
/// require equal registries (compared by content, not pointer).
class VarRegistry {
public:
    explicit VarRegistry(std::vector<Var> vars);

    /// [x, t0, ..., t_{r-2}]
    static RegistryPtr x_t(int r);
    /// [x, y0, ..., y_{r-2}]
    static RegistryPtr x_y(int r);
    /// [t0, ..., t_{r-2}]
    static RegistryPtr t_only(int r);
    /// [y0, ..., y_{r-2}]
    static RegistryPtr y_only(int r);
    /// [b1, ..., bl]  (1-based subscripts, matching marked-point labels)
    static RegistryPtr b_vars(int l);

    size_t size() const { return vars_.size(); }
    const Var& var(size_t i) const { return vars_.at(i); }

    std::optional<size_t> find(std::string_view name) const;
    /// Index of the FormalX variable, if the registry has one.
    std::optional<size_t> x_index() const { return x_index_; }

    /// Name rendered for LaTeX output: "x", "t_{2}", ...
    std::string latex_name(size_t i) const;

    friend bool operator==(const VarRegistry& a, const VarRegistry& b);
    friend bool operator!=(const VarRegistry& a, const VarRegistry& b) { return !(a == b); }

private:
    std::vector<Var> vars_;
    std::optional<size_t> x_index_;
};

}  // namespace rspin
