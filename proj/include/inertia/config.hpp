#pragma once

// JSON stack descriptions and the command-level API shared by the CLI and the
// golden-output tests.  Every command returns both a text rendering and a
// JSON payload built from the same data.

#include <nlohmann/json.hpp>
#include <map>
#include <string>

#include "inertia/localization.hpp"
#include "inertia/products.hpp"
#include "inertia/stack.hpp"

namespace inertia {

using Json = nlohmann::json;

struct StackConfig {
  ActionSpec action;
  std::map<std::string, VirtualBundle> bundles;
};

StackConfig parse_config_text(const std::string& json_text);
StackConfig load_config(const std::string& path);

// built-ins "T" (tangent) and "T*" (cotangent), then bundles from the config
VirtualBundle resolve_bundle(const Stack& s, const StackConfig& cfg, const std::string& name);

struct ProductSpec {
  bool localized = false;
  InertialPair pair;  // meaningful when !localized
  std::string name;
};

// accepts "orbifold", "virtual", "vplus:NAME", "vminus:NAME", "localized"
ProductSpec resolve_product(const Stack& s, const StackConfig& cfg, const std::string& name);

struct CommandOutput {
  std::string text;
  Json data;
};

CommandOutput cmd_sectors(const Stack& s);
CommandOutput cmd_table(const Stack& s, const StackConfig& cfg, const std::string& product,
                        const std::string& theory);
CommandOutput cmd_check(const Stack& s, const StackConfig& cfg, const std::string& product);
CommandOutput cmd_chern(const Stack& s, const StackConfig& cfg, const std::string& product);
CommandOutput cmd_localize(const Stack& s, const StackConfig& cfg);

}  // namespace inertia
