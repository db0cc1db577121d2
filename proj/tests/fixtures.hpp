#pragma once

#include "rootstab/io.hpp"

#include <string>

namespace rootstab::testing {

inline RootStackConfig load_config(const std::string& name) {
    return parse_config_file(std::string(ROOTSTAB_CONFIG_DIR) + "/" + name + ".json");
}

inline RootStackConfig p2_conic_n2() { return load_config("p2_conic_n2"); }
inline RootStackConfig p2_n1() { return load_config("p2_n1"); }
inline RootStackConfig quadric_n3() { return load_config("quadric_n3"); }

} // namespace rootstab::testing
