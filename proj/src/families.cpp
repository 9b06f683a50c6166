#include "hankelmonde/families.hpp"

#include "hankelmonde/errors.hpp"
#include "hankelmonde/kernels.hpp"
#include "hankelmonde/rightinv.hpp"

#include <functional>
#include <map>

namespace hankelmonde {

namespace {

using Builder = std::function<PolyMatrix(const FamilyArgs&)>;

unsigned need(const std::optional<unsigned>& v, const char* flag, const char* family) {
    if (!v) {
        throw InvalidArgument(std::string("family ") + family + " needs --" + flag);
    }
    return *v;
}

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> table = {
        {"u", [](const FamilyArgs& a) { return make_u(a.params.q); }},
        {"w", [](const FamilyArgs& a) { return make_w(a.params.r); }},
        {"M", [](const FamilyArgs& a) { return make_M(a.params.q, a.params.r); }},
        {"calM", [](const FamilyArgs& a) { return make_calM(a.params); }},
        {"calN", [](const FamilyArgs& a) { return make_calN(a.params); }},
        {"U", [](const FamilyArgs& a) { return make_U(a.params.q); }},
        {"W", [](const FamilyArgs& a) { return make_W(a.params.r); }},
        {"Utilde", [](const FamilyArgs& a) { return make_U_tilde(a.params.q); }},
        {"Wtilde", [](const FamilyArgs& a) { return make_W_tilde(a.params.r); }},
        {"Ak", [](const FamilyArgs& a) { return make_Ak(a.params.q, a.params.r, need(a.k, "k", "Ak")); }},
        {"calA", [](const FamilyArgs& a) { return make_calA(a.params); }},
        {"calAbar", [](const FamilyArgs& a) { return make_calAbar(a.params); }},
        {"calAhat", [](const FamilyArgs& a) { return make_calAhat(a.params); }},
        {"calAtilde", [](const FamilyArgs& a) { return make_calAtilde(a.params); }},
        {"L", [](const FamilyArgs& a) { return make_L(a.m.value_or(a.params.mu), a.k.value_or(a.params.q)); }},
        {"F", [](const FamilyArgs& a) { return a.k ? make_Fk(a.params.r, *a.k) : make_F(a.params.r); }},
        {"K", [](const FamilyArgs& a) { return make_K(a.params.nu, a.params.r); }},
        {"G", [](const FamilyArgs& a) { return make_G(a.params.r); }},
        {"Kbar", [](const FamilyArgs& a) { return make_Kbar(a.params.q, a.params.r, a.params.nu); }},
        {"Kbar_j",
         [](const FamilyArgs& a) {
             return make_Kbar_j(a.params.q, a.params.r, a.params.nu, need(a.j, "j", "Kbar_j"));
         }},
        {"kernelN0", [](const FamilyArgs& a) { return kernel_basis_N0(a.params.q, a.params.r, a.params.nu).basis; }},
        {"kernelN", [](const FamilyArgs& a) { return kernel_basis_N(a.params).basis; }},
        {"B0", [](const FamilyArgs& a) { return make_B0(a.params.q, a.params.r, a.params.nu); }},
        {"C", [](const FamilyArgs& a) { return make_C_constant(a.params.q, a.params.r, a.params.nu).inverse; }},
        {"Hk", [](const FamilyArgs& a) { return make_Hk(a.params.q, a.params.r, need(a.k, "k", "Hk")); }},
        {"Minv", [](const FamilyArgs& a) { return make_M_right_inverse(a.params).inverse; }},
        {"constKernel",
         [](const FamilyArgs& a) { return constant_kernel_basis(a.params.q, a.params.r, a.params.nu); }},
    };
    return table;
}

} // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "u",     "w",      "M",        "calM",    "calN", "U",  "W",  "Utilde", "Wtilde",
        "Ak",    "calA",   "calAbar",  "calAhat", "calAtilde", "L", "F", "K",    "G",
        "Kbar",  "Kbar_j", "kernelN0", "kernelN", "B0",   "C",  "Hk", "Minv",   "constKernel",
    };
    return names;
}

PolyMatrix generate_family(const std::string& family, const FamilyArgs& args) {
    const auto& table = registry();
    const auto it = table.find(family);
    if (it == table.end()) {
        throw UnknownFamily("unknown family '" + family + "'");
    }
    args.params.validate();
    return it->second(args);
}

} // namespace hankelmonde
