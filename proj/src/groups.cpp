#include "clifford/groups.hpp"

namespace clifford {

namespace {

struct Named {
    const char* name;
    GroupKind kind;
};

const Named kNamed[] = {
    {"Pin", GroupKind::Pin},           {"Spin", GroupKind::Spin},
    {"Pin+", GroupKind::PinPlus},      {"Pin-", GroupKind::PinMinus},
    {"Spin+", GroupKind::SpinPlus},    {"Lipschitz", GroupKind::Lipschitz},
    {"Clifford-group", GroupKind::CliffordGroup}, {"UCl", GroupKind::Unitary},
};

}  // namespace

GroupId parse_group_id(const std::string& s) {
    for (const auto& g : kNamed)
        if (s == g.name) return {g.kind, 0, s};
    for (const auto& row : lie_group_rows())
        if (s == row.name) return {GroupKind::LieRow, row.id, s};
    if (s.rfind("row:", 0) == 0) {
        try {
            std::size_t used = 0;
            int k = std::stoi(s.substr(4), &used);
            if (used == s.size() - 4 && k >= 1 && k <= 16) return {GroupKind::LieRow, k, lie_group_rows()[k - 1].name};
        } catch (const std::exception&) {
        }
    }
    std::string known;
    for (const auto& n : group_id_names()) known += (known.empty() ? "" : ", ") + n;
    domain_fail("unknown group id '" + s + "' (known: " + known + ")");
}

std::vector<std::string> group_id_names() {
    std::vector<std::string> out;
    for (const auto& g : kNamed) out.push_back(g.name);
    for (const auto& row : lie_group_rows()) out.push_back(row.name);
    return out;
}

std::string component_name(Component c) {
    switch (c) {
        case Component::SOPlus: return "SO+";
        case Component::OPlusPrime: return "O+'";
        case Component::OMinusPrime: return "O-'";
        case Component::SOPrime: return "SO'";
    }
    return "?";
}

std::string spin_component_name(Component c) {
    switch (c) {
        case Component::SOPlus: return "Spin+";
        case Component::OPlusPrime: return "Pin+'";
        case Component::OMinusPrime: return "Pin-'";
        case Component::SOPrime: return "Spin'";
    }
    return "?";
}

std::string liegroup_class_lookup(const Signature& sig, const std::string& group) {
    if (group == "Spin+") return spin_class_lookup(sig);
    if (group == "G2" || group == "row:16") return g2_class_lookup(sig).evaluated;
    domain_fail("no isomorphism table for group '" + group + "'");
}

}  // namespace clifford
