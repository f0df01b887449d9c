#include "rspin/var_registry.hpp"

#include <stdexcept>

namespace rspin {

VarRegistry::VarRegistry(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].role == VarRole::FormalX) {
            if (x_index_) throw std::invalid_argument("VarRegistry: two x variables");
            x_index_ = i;
        }
        for (size_t j = 0; j < i; ++j)
            if (vars_[j].name == vars_[i].name)
                throw std::invalid_argument("VarRegistry: duplicate name " + vars_[i].name);
    }
}

static RegistryPtr make_indexed(int r, bool with_x, VarRole role, char letter) {
    if (r < 2) throw std::invalid_argument("VarRegistry: need r >= 2");
    std::vector<Var> vars;
    if (with_x) vars.push_back({"x", VarRole::FormalX, -1});
    for (int d = 0; d <= r - 2; ++d)
        vars.push_back({letter + std::to_string(d), role, d});
    return std::make_shared<VarRegistry>(std::move(vars));
}

RegistryPtr VarRegistry::x_t(int r) { return make_indexed(r, true, VarRole::FlatT, 't'); }
RegistryPtr VarRegistry::x_y(int r) { return make_indexed(r, true, VarRole::VersalY, 'y'); }
RegistryPtr VarRegistry::t_only(int r) { return make_indexed(r, false, VarRole::FlatT, 't'); }
RegistryPtr VarRegistry::y_only(int r) { return make_indexed(r, false, VarRole::VersalY, 'y'); }

RegistryPtr VarRegistry::b_vars(int l) {
    if (l < 1) throw std::invalid_argument("VarRegistry: need l >= 1");
    std::vector<Var> vars;
    for (int i = 1; i <= l; ++i)
        vars.push_back({"b" + std::to_string(i), VarRole::FormalB, i});
    return std::make_shared<VarRegistry>(std::move(vars));
}

std::optional<size_t> VarRegistry::find(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::string VarRegistry::latex_name(size_t i) const {
    const Var& v = var(i);
    if (v.role == VarRole::FormalX) return v.name;
    std::string letter(1, v.name[0]);
    return letter + "_{" + std::to_string(v.index) + "}";
}

bool operator==(const VarRegistry& a, const VarRegistry& b) {
    if (&a == &b) return true;
    if (a.vars_.size() != b.vars_.size()) return false;
    for (size_t i = 0; i < a.vars_.size(); ++i)
        if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].role != b.vars_[i].role ||
            a.vars_[i].index != b.vars_[i].index)
            return false;
    return true;
}

}  // namespace rspin
